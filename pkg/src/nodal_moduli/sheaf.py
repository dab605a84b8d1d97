"""Sheaf-level descriptors for chains and cycles on the nodal rational curve.

An aperiodic cycle ``a`` with multiplicity ``m`` and a parameter in ``k*``
gives an indecomposable vector bundle ``B(a, m, lambda)`` of rank ``m*r``
and degree ``m*sum(a)``; a chain ``a`` gives a non-locally-free sheaf
``S(a)`` of rank ``r`` and degree ``sum(a) + 1``. ``B(a, m, lambda)`` is
(semi)stable exactly when the cycle is, stability also needing ``m = 1``;
``S(a)`` is (semi)stable exactly when the end-shifted chain
``(a_1 + 1, a_2, ..., a_{r-1}, a_r + 1)`` is.

Nothing here builds actual sheaves; descriptors carry rank, degree and
verdicts, and the exact sequences are checked through their bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .classify import classify
from .core import Chain, ChainOrCycle, Cycle, Slope, TypeRD
from .stability import (
    NotSemistableError,
    check_chain,
    check_chain_extreme,
    check_cycle,
    find_destabilizers,
)

LOCALLY_FREE = "locally_free"
NON_LOCALLY_FREE = "non_locally_free"

HOMOGENEOUS_NOTE = (
    "Every indecomposable semistable sheaf on the nodal rational curve is "
    "homogeneous: all stable factors of its Jordan-Holder filtration are isomorphic."
)


class PeriodicCycleError(ValueError):
    """Locally free indecomposables need an aperiodic cycle."""


@dataclass(frozen=True)
class SheafDescriptor:
    kind: str
    rank: int
    degree: int
    semistable: bool
    stable: bool
    cycle: Optional[Cycle] = None
    chain: Optional[Chain] = None
    multiplicity: int = 1
    parameter_tag: Optional[str] = None

    @property
    def slope(self) -> Slope:
        return Slope(self.degree, self.rank)

    @property
    def label(self) -> str:
        if self.kind == LOCALLY_FREE:
            return f"B({list(self.cycle.canonical)}, {self.multiplicity}, {self.parameter_tag})"
        return f"S({list(self.chain.entries)})"


@dataclass(frozen=True)
class SplitResult:
    sub: SheafDescriptor
    quotient: SheafDescriptor
    parent: SheafDescriptor


@dataclass(frozen=True)
class FactorizationNode:
    object: ChainOrCycle
    slope: Slope
    children: tuple["FactorizationNode", ...] = ()

    def leaves(self) -> list["FactorizationNode"]:
        if not self.children:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]


@dataclass(frozen=True)
class ModuliSummary:
    type: TypeRD
    gcd: int
    stable_exist: bool
    n_nonlocallyfree_ss: int
    n_locallyfree_families: int
    homogeneous_note: str = field(default=HOMOGENEOUS_NOTE)


def end_shifted(c: Chain) -> Chain:
    """``(a_1 + 1, a_2, ..., a_{r-1}, a_r + 1)``; a rank-1 chain gains 2."""
    e = list(c.entries)
    e[0] += 1
    e[-1] += 1
    return Chain(tuple(e))


def end_lowered(c: Chain) -> Chain:
    """Inverse of :func:`end_shifted`."""
    e = list(c.entries)
    e[0] -= 1
    e[-1] -= 1
    return Chain(tuple(e))


def sheaf_of_cycle(c: Cycle, m: int = 1, parameter_tag: str = "lambda") -> SheafDescriptor:
    if m < 1:
        raise ValueError(f"multiplicity must be positive, got {m}")
    if not c.aperiodic:
        raise PeriodicCycleError(f"{c!r} is periodic")
    verdict = check_cycle(c)
    return SheafDescriptor(
        kind=LOCALLY_FREE,
        rank=m * c.rank,
        degree=m * c.degree,
        semistable=verdict.semistable,
        stable=verdict.stable and m == 1,
        cycle=c,
        multiplicity=m,
        parameter_tag=parameter_tag,
    )


def sheaf_of_chain(c: Chain) -> SheafDescriptor:
    verdict = check_chain(end_shifted(c))
    return SheafDescriptor(
        kind=NON_LOCALLY_FREE,
        rank=c.rank,
        degree=sum(c.entries) + 1,
        semistable=verdict.semistable,
        stable=verdict.stable,
        chain=c,
    )


def _lowered_ends(b: tuple[int, ...]) -> Chain:
    # (b_1 - 1, b_2, ..., b_{k-1}, b_k - 1), which is (b_1 - 2) when k = 1
    return end_lowered(Chain(b))


def split_cycle(c: Cycle, start: int, length: int) -> SplitResult:
    """``0 -> S(b with lowered ends) -> B(c) -> S(complement) -> 0``.

    ``start`` indexes the canonical form; the complement is read cyclically
    from just after the subchain.
    """
    r = c.rank
    if not 1 <= length <= r - 1:
        raise ValueError(f"subchain length must be in 1..{r - 1}, got {length}")
    seq = c.rotated(start)
    return SplitResult(
        sub=sheaf_of_chain(_lowered_ends(seq[:length])),
        quotient=sheaf_of_chain(Chain(seq[length:])),
        parent=sheaf_of_cycle(c, 1),
    )


def split_chain_extreme(c: Chain, k: int, suffix: bool = False) -> SplitResult:
    """Split ``S(c)`` along its extreme subchain of length ``k``.

    For the prefix: ``0 -> S((a_1, ..., a_k - 1)) -> S(c) -> S((a_{k+1}, ..., a_r)) -> 0``;
    the suffix version is the mirror image.
    """
    r = c.rank
    if not 1 <= k <= r - 1:
        raise ValueError(f"k must be in 1..{r - 1}, got {k}")
    e = list(c.entries)
    if suffix:
        sub = e[r - k:]
        sub[0] -= 1
        rest = e[:r - k]
    else:
        sub = e[:k]
        sub[-1] -= 1
        rest = e[k:]
    return SplitResult(
        sub=sheaf_of_chain(Chain(tuple(sub))),
        quotient=sheaf_of_chain(Chain(tuple(rest))),
        parent=sheaf_of_chain(c),
    )


def interior_embedding(c: Chain, start: int, length: int) -> SheafDescriptor:
    """Subsheaf ``S(b with lowered ends)`` for a subchain avoiding both ends of ``c``."""
    r = c.rank
    if length < 1 or start < 1 or start + length > r - 1:
        raise ValueError(
            f"subchain at {start} of length {length} touches an end of a rank-{r} chain"
        )
    return sheaf_of_chain(_lowered_ends(c.entries[start:start + length]))


def cycle_subsheaf_bounds(c: Cycle) -> bool:
    """Every split of ``B(c)`` has subsheaf slope at most (below, if stable) the slope of ``B(c)``.

    Also checks rank and degree additivity of each split.
    """
    parent = sheaf_of_cycle(c, 1)
    for start in range(c.rank):
        for length in range(1, c.rank):
            s = split_cycle(c, start, length)
            if s.sub.rank + s.quotient.rank != parent.rank:
                return False
            if s.sub.degree + s.quotient.degree != parent.degree:
                return False
            if parent.stable and not s.sub.slope < parent.slope:
                return False
            if not s.sub.slope <= parent.slope:
                return False
    return True


def chain_subsheaf_bounds(c: Chain) -> bool:
    """The analogous check for ``S(c)``, over proper subchains of the end-shifted chain.

    Interior subchains go through :func:`interior_embedding`, extreme ones
    through :func:`split_chain_extreme`.
    """
    parent = sheaf_of_chain(c)
    r = c.rank
    shifted = end_shifted(c)
    for i in range(r):
        for length in range(1, r - i + 1):
            if length == r:
                continue
            if i == 0:
                sub = split_chain_extreme(c, length).sub
            elif i + length == r:
                sub = split_chain_extreme(c, length, suffix=True).sub
            else:
                sub = interior_embedding(c, i, length)
            b = shifted.entries[i:i + length]
            if Slope(sum(b) - 1, length) != sub.slope:
                return False
            if parent.stable and not sub.slope < parent.slope:
                return False
            if not sub.slope <= parent.slope:
                return False
    return True


def _factor_chain(c: Chain) -> FactorizationNode:
    verdict = check_chain_extreme(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    if verdict.stable:
        return FactorizationNode(c, c.slope)
    w = verdict.witness
    e = list(c.entries)
    k = w.chain.rank
    if w.start == 0:
        rest = e[k:]
        rest[0] += 1
        parts = [Chain(tuple(e[:k])), Chain(tuple(rest))]
    else:
        rest = e[:w.start]
        rest[-1] += 1
        parts = [Chain(tuple(rest)), Chain(tuple(e[w.start:]))]
    return FactorizationNode(c, c.slope, tuple(_factor_chain(p) for p in parts))


def _factor_cycle(c: Cycle) -> FactorizationNode:
    verdict = check_cycle(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    if verdict.stable:
        return FactorizationNode(c, c.slope)
    w = find_destabilizers(c)[0]
    seq = c.rotated(w.start)
    k = w.chain.rank
    rest = end_shifted(Chain(seq[k:]))
    parts = [Chain(seq[:k]), rest]
    return FactorizationNode(c, c.slope, tuple(_factor_chain(p) for p in parts))


def factorize(c: ChainOrCycle) -> FactorizationNode:
    """Split a semistable object into stable pieces of the same slope.

    A destabilizing subchain ``b`` of equal slope is cut off and the
    remainder has its cut ends raised by one; both pieces are again
    semistable of the same slope, and the recursion stops at stable leaves.
    """
    if isinstance(c, Cycle):
        return _factor_cycle(c)
    return _factor_chain(c)


def moduli_summary(t: TypeRD, max_gcd: Optional[int] = None) -> ModuliSummary:
    h = t.gcd
    return ModuliSummary(
        type=t,
        gcd=h,
        stable_exist=h == 1,
        n_nonlocallyfree_ss=len(classify(t, "chain", max_gcd)),
        n_locallyfree_families=len(classify(t, "cycle", max_gcd)),
    )


def nonlocallyfree_semistable(t: TypeRD, max_gcd: Optional[int] = None) -> list[SheafDescriptor]:
    """Semistable ``S(a)`` of type ``t``, from the semistable chains of that type."""
    return [sheaf_of_chain(end_lowered(a)) for a in classify(t, "chain", max_gcd)]


def locallyfree_families(t: TypeRD, max_gcd: Optional[int] = None) -> list[SheafDescriptor]:
    """One ``B(a, 1, lambda)`` family per aperiodic semistable cycle of type ``t``."""
    return [sheaf_of_cycle(a, 1) for a in classify(t, "cycle", max_gcd)]


def describe(x: Union[Chain, Cycle], m: int = 1) -> SheafDescriptor:
    return sheaf_of_cycle(x, m) if isinstance(x, Cycle) else sheaf_of_chain(x)
