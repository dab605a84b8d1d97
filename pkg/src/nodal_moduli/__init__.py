"""Classification of (semi)stable sheaves on a rational curve with one node.

Indecomposable torsion-free sheaves on the curve are described by integer
chains (non-locally-free sheaves) and aperiodic cycles (vector bundles),
and their (semi)stability is decided by slope inequalities on subchains.
"""

from .core import Chain, Cycle, Slope, TypeRD, canonicalize_cycle, slope
from .stability import StabilityVerdict, check, check_chain, check_chain_extreme, check_cycle
from .reduction import reduce_chain, reduce_cycle, lift_chain, lift_cycle, shift, trace
from .classify import base_chains, base_cycles, classify, classify_stable, count
from .oracle import oracle_chains, oracle_cycles
from .sheaf import factorize, moduli_summary, sheaf_of_chain, sheaf_of_cycle
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "Chain",
    "Cycle",
    "Slope",
    "StabilityVerdict",
    "TypeRD",
    "base_chains",
    "base_cycles",
    "canonicalize_cycle",
    "check",
    "check_chain",
    "check_chain_extreme",
    "check_cycle",
    "classify",
    "classify_stable",
    "count",
    "factorize",
    "lift_chain",
    "lift_cycle",
    "moduli_summary",
    "oracle_chains",
    "oracle_cycles",
    "reduce_chain",
    "reduce_cycle",
    "sheaf_of_chain",
    "sheaf_of_cycle",
    "shift",
    "slope",
    "trace",
]
