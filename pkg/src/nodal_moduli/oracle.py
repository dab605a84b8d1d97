"""Brute-force classification used as an independent referee.

Only the core types and the stability predicates are used here, never the
reduction machinery. Every entry of a semistable object of slope ``mu``
lies in ``[mu - 1, mu + 1]``, so enumerating that integer window is
exhaustive.
"""

from __future__ import annotations

import os
from itertools import product
from typing import Optional

from .core import Chain, Cycle, TypeRD
from .stability import check_chain, check_cycle

DEFAULT_RANK_CAP = 12
CAP_ENV = "NODAL_MODULI_CAP"


class OracleCapError(ValueError):
    """Rank beyond the oracle's enumeration cap."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    return int(raw) if raw else DEFAULT_RANK_CAP


def entry_window(t: TypeRD) -> range:
    """Integers in ``[ceil(d/r) - 1, floor(d/r) + 1]``."""
    lo = -((-t.d) // t.r) - 1
    hi = t.d // t.r + 1
    return range(lo, hi + 1)


def _candidates(t: TypeRD, total: int, cap: Optional[int]):
    cap = default_cap() if cap is None else cap
    if t.r > cap:
        raise OracleCapError(f"rank {t.r} exceeds oracle cap {cap}")
    for seq in product(entry_window(t), repeat=t.r):
        if sum(seq) == total:
            yield seq


def oracle_chains(t: TypeRD, cap: Optional[int] = None) -> list[Chain]:
    out = []
    for seq in _candidates(t, t.d + 1, cap):
        c = Chain(seq)
        if check_chain(c).semistable:
            out.append(c)
    return sorted(out)


def oracle_cycles(t: TypeRD, cap: Optional[int] = None) -> list[Cycle]:
    found = set()
    for seq in _candidates(t, t.d, cap):
        c = Cycle(seq)
        if c in found or not c.aperiodic:
            continue
        if check_cycle(c).semistable:
            found.add(c)
    return sorted(found)


def oracle(t: TypeRD, kind: str = "chain", cap: Optional[int] = None) -> list:
    if kind == "chain":
        return oracle_chains(t, cap)
    if kind == "cycle":
        return oracle_cycles(t, cap)
    raise ValueError(f"kind must be 'chain' or 'cycle', got {kind!r}")
