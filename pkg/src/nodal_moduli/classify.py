"""Classification of semistable chains and aperiodic cycles of a given type.

Everything is carried back from the degree-zero normal forms at
``(gcd(r, d), 0)`` through the inverse reduction steps.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Union

from .core import Chain, Cycle, TypeRD
from .reduction import Kind, lift_through, trace
from .stability import check_chain, check_cycle


class CapExceededError(ValueError):
    """The requested enumeration is larger than the configured cap."""


def _alternating(r: int, positions, first: int) -> tuple[int, ...]:
    seq = [0] * r
    sign = first
    for p in positions:
        seq[p] = sign
        sign = -sign
    return tuple(seq)


def base_chains(r: int) -> list[Chain]:
    """Semistable chains of type ``(r, 0)``.

    An odd number of nonzero entries alternating ``1, -1, ..., 1`` with
    arbitrary zero runs; there are ``2**(r-1)`` of them.
    """
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    out = []
    for mask in range(1 << r):
        if bin(mask).count("1") % 2 == 0:
            continue
        positions = [i for i in range(r) if mask >> i & 1]
        out.append(Chain(_alternating(r, positions, 1)))
    return sorted(out)


def base_cycles(r: int) -> list[Cycle]:
    """Aperiodic semistable cycles of type ``(r, 0)``."""
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if r == 1:
        return [Cycle((0,))]
    found = set()
    for k in range(1, r // 2 + 1):
        for positions in combinations(range(r), 2 * k):
            for first in (1, -1):
                c = Cycle(_alternating(r, positions, first))
                if c.aperiodic:
                    found.add(c)
    for c in found:
        # the normal form already guarantees this; cheap guard against slips
        assert check_cycle(c).semistable, c
    return sorted(found)


def classify(t: TypeRD, kind: Kind = "chain", max_gcd: Optional[int] = None
             ) -> list[Union[Chain, Cycle]]:
    """All semistable chains (or aperiodic cycles) of type ``t``, sorted.

    >>> classify(TypeRD(7, 4))
    [Chain(1, 1, 0, 1, 0, 1, 1)]
    >>> classify(TypeRD(7, 4), "cycle")
    [Cycle(0, 1, 0, 1, 0, 1, 1)]
    """
    tr = trace(t, kind)
    h = tr.terminal.r
    if max_gcd is not None and h > max_gcd:
        raise CapExceededError(f"gcd {h} of type {t} exceeds cap {max_gcd}")
    base = base_chains(h) if kind == "chain" else base_cycles(h)
    return sorted(lift_through(x, tr) for x in base)


def classify_stable(t: TypeRD, kind: Kind = "chain", max_gcd: Optional[int] = None
                    ) -> list[Union[Chain, Cycle]]:
    check = check_chain if kind == "chain" else check_cycle
    return [x for x in classify(t, kind, max_gcd) if check(x).stable]


def count(t: TypeRD, kind: Kind = "chain", max_gcd: Optional[int] = None) -> int:
    return len(classify(t, kind, max_gcd))
