"""(Semi)stability of chains and cycles.

A chain or cycle is semistable when no subchain has larger slope, and
stable when every proper subchain has strictly smaller slope. Subchain
slopes are always chain slopes ``(sum - 1) / length``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .core import Chain, ChainOrCycle, Cycle, Slope, cycle_span


class NotSemistableError(ValueError):
    """Raised when an operation needs a semistable input and did not get one."""

    def __init__(self, obj: ChainOrCycle, witness: "Witness"):
        self.obj = obj
        self.witness = witness
        super().__init__(
            f"{obj!r} is not semistable: subchain {witness.chain.entries} "
            f"at position {witness.start} has slope {witness.slope} > {obj.slope}"
        )


@dataclass(frozen=True)
class Witness:
    """A subchain located at ``start`` (0-based, wrapping for cycles)."""

    start: int
    chain: Chain
    slope: Slope


@dataclass(frozen=True)
class StabilityVerdict:
    semistable: bool
    stable: bool
    witness: Optional[Witness] = None


def _chain_witness(c: Chain, span) -> Witness:
    i, length = span
    sub = Chain(c.entries[i:i + length])
    return Witness(i, sub, sub.slope)


def _cycle_witness(c: Cycle, span) -> Witness:
    i, length = span
    sub = cycle_span(c, i, length)
    return Witness(i, sub, sub.slope)


def _chain_verdict(c: Chain, extreme_only: bool) -> StabilityVerdict:
    span = kernels.chain_violation(c.entries, False, extreme_only)
    if span is not None:
        return StabilityVerdict(False, False, _chain_witness(c, span))
    span = kernels.chain_violation(c.entries, True, extreme_only)
    if span is not None:
        return StabilityVerdict(True, False, _chain_witness(c, span))
    return StabilityVerdict(True, True)


def check_chain(c: Chain) -> StabilityVerdict:
    """Verdict from every subchain; the witness is the first offender by (start, length).

    >>> check_chain(Chain((1, 0, 0, 1)))
    StabilityVerdict(semistable=True, stable=True, witness=None)
    """
    return _chain_verdict(c, extreme_only=False)


def check_chain_extreme(c: Chain) -> StabilityVerdict:
    """Same verdict as :func:`check_chain`, scanning only prefixes and suffixes."""
    return _chain_verdict(c, extreme_only=True)


def check_cycle(c: Cycle) -> StabilityVerdict:
    """Verdict over all wrapped subchains of the canonical form."""
    span = kernels.cycle_violation(c.canonical, False)
    if span is not None:
        return StabilityVerdict(False, False, _cycle_witness(c, span))
    span = kernels.cycle_violation(c.canonical, True)
    if span is not None:
        return StabilityVerdict(True, False, _cycle_witness(c, span))
    return StabilityVerdict(True, True)


def check(c: ChainOrCycle) -> StabilityVerdict:
    if isinstance(c, Cycle):
        return check_cycle(c)
    return check_chain(c)


def is_semistable(c: ChainOrCycle) -> bool:
    return check(c).semistable


def is_stable(c: ChainOrCycle) -> bool:
    return check(c).stable


def require_semistable(c: ChainOrCycle) -> StabilityVerdict:
    verdict = check(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    return verdict


def find_destabilizers(c: ChainOrCycle) -> list[Witness]:
    """Every proper subchain with slope at least the slope of ``c``."""
    mu = c.slope
    r = c.rank
    out = []
    if isinstance(c, Cycle):
        for i in range(r):
            for length in range(1, r + 1):
                sub = cycle_span(c, i, length)
                if sub.slope >= mu:
                    out.append(Witness(i, sub, sub.slope))
    else:
        for i in range(r):
            for length in range(1, r - i + 1):
                if length == r:
                    continue
                sub = Chain(c.entries[i:i + length])
                if sub.slope >= mu:
                    out.append(Witness(i, sub, sub.slope))
    return out


def verify_entry_bounds(c: ChainOrCycle) -> bool:
    """Necessary entry inequalities for a semistable ``c``.

    Every entry lies within one of the slope; for chains, both end entries
    are also at least the slope.
    """
    mu = c.slope
    entries = c.entries
    for a in entries:
        if not (Slope(a - 1, 1) <= mu <= Slope(a + 1, 1)):
            return False
    if isinstance(c, Chain):
        if not (mu <= Slope(entries[0], 1) and mu <= Slope(entries[-1], 1)):
            return False
    return True


def verify_coker_bounds(c: Chain) -> bool:
    """``mu <= (sum b + 1)/len b`` for all subchains, ``mu <= sum b/len b`` for extreme ones."""
    mu = c.slope
    r = c.rank
    for i in range(r):
        for length in range(1, r - i + 1):
            s = sum(c.entries[i:i + length])
            if not mu <= Slope(s + 1, length):
                return False
            if (i == 0 or i + length == r) and not mu <= Slope(s, length):
                return False
    return True
