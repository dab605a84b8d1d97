"""Shift and Euclidean reduction bijections on semistable chains and cycles.

For ``0 < d < r`` a semistable object of type ``(r, d)`` is a 0/1 sequence;
it corresponds to the object of type ``(d, d - r)`` whose entries are the
negated lengths of the zero runs between consecutive ones. Alternating
these reductions with shifts into ``0 <= d < r`` runs the Euclidean
algorithm on ``(r, d)`` and ends at ``(gcd(r, d), 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Union

from .core import Chain, ChainOrCycle, Cycle, TypeRD, shifted
from .stability import check_chain, check_cycle, NotSemistableError

Kind = Literal["chain", "cycle"]


class ReductionError(ValueError):
    """A reduce/lift precondition does not hold."""


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # "shift", "chain_reduce", "chain_lift", "cycle_reduce", "cycle_lift"
    type_before: TypeRD
    type_after: TypeRD
    t: Optional[int] = None  # shift amount, only for kind == "shift"

    def __str__(self) -> str:
        label = f"shift({self.t})" if self.kind == "shift" else self.kind
        return f"{label}: {self.type_before} -> {self.type_after}"


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]
    terminal: TypeRD


def shift(c: ChainOrCycle, t: int) -> ChainOrCycle:
    """Add ``t`` to every entry; the degree moves by ``t * rank``."""
    if t == 0:
        return c
    return type(c)(shifted(c.entries, t))


def normalizing_shift(t: TypeRD) -> int:
    """The ``t`` moving degree ``d`` into ``[0, r)``."""
    return -(t.d // t.r)


def _check_reducible(c: ChainOrCycle) -> None:
    r, d = c.rank, c.degree
    if not 0 < d < r:
        raise ReductionError(f"reduction needs 0 < d < r, got type ({r},{d})")
    bad = [x for x in c.entries if x not in (0, 1)]
    if bad:
        raise ReductionError(f"entries must be 0 or 1, found {bad[0]}")


def _zero_runs(seq: tuple[int, ...]) -> list[int]:
    """Lengths of the zero runs following each 1 in ``seq`` (which starts with 1)."""
    runs = []
    for x in seq:
        if x == 1:
            runs.append(0)
        else:
            runs[-1] += 1
    return runs


def reduce_chain(c: Chain) -> Chain:
    """``(r, d) -> (d, d - r)``: negated zero-run lengths between consecutive ones.

    >>> reduce_chain(Chain((1, 1, 0, 1, 0, 1, 1)))
    Chain(0, -1, -1, 0)
    """
    _check_reducible(c)
    if c.entries[0] != 1 or c.entries[-1] != 1:
        raise ReductionError(f"chain must start and end with 1, got {c.entries}")
    verdict = check_chain(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    runs = _zero_runs(c.entries)[:-1]
    return Chain(tuple(-b for b in runs))


def lift_chain(c: Chain, target: TypeRD) -> Chain:
    """Inverse of :func:`reduce_chain` onto type ``target``."""
    r, d = target.r, target.d
    if not 0 < d < r:
        raise ReductionError(f"lift target needs 0 < d < r, got {target}")
    if c.type != TypeRD(d, d - r):
        raise ReductionError(f"chain of type {c.type} does not lift to {target}")
    if any(x > 0 for x in c.entries):
        raise ReductionError(f"entries must be <= 0, got {c.entries}")
    verdict = check_chain(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    out = [1]
    for x in c.entries:
        out.extend([0] * -x)
        out.append(1)
    return Chain(tuple(out))


def reduce_cycle(c: Cycle) -> Cycle:
    """``(r, d) -> (d, d - r)`` on cycles, reading zero runs cyclically."""
    _check_reducible(c)
    verdict = check_cycle(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    seq = c.rotated(c.canonical.index(1))
    return Cycle(tuple(-b for b in _zero_runs(seq)))


def lift_cycle(c: Cycle, target: TypeRD) -> Cycle:
    r, d = target.r, target.d
    if not 0 < d < r:
        raise ReductionError(f"lift target needs 0 < d < r, got {target}")
    if c.type != TypeRD(d, d - r):
        raise ReductionError(f"cycle of type {c.type} does not lift to {target}")
    if any(x > 0 for x in c.entries):
        raise ReductionError(f"entries must be <= 0, got {c.entries}")
    verdict = check_cycle(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    out = []
    for x in c.entries:
        out.append(1)
        out.extend([0] * -x)
    return Cycle(tuple(out))


def trace(t: TypeRD, kind: Kind = "chain") -> ReductionTrace:
    """Type-level reduction steps from ``t`` down to ``(gcd, 0)``.

    >>> [str(s) for s in trace(TypeRD(7, 4)).steps]
    ['chain_reduce: (7,4) -> (4,-3)', 'shift(1): (4,-3) -> (4,1)', 'chain_reduce: (4,1) -> (1,-3)', 'shift(3): (1,-3) -> (1,0)']
    """
    if kind not in ("chain", "cycle"):
        raise ValueError(f"kind must be 'chain' or 'cycle', got {kind!r}")
    steps = []
    cur = t
    while cur.d != 0:
        s = normalizing_shift(cur)
        if s:
            nxt = TypeRD(cur.r, cur.d + s * cur.r)
            steps.append(ReductionStep("shift", cur, nxt, s))
            cur = nxt
            if cur.d == 0:
                break
        nxt = TypeRD(cur.d, cur.d - cur.r)
        steps.append(ReductionStep(f"{kind}_reduce", cur, nxt))
        cur = nxt
    return ReductionTrace(tuple(steps), cur)


def reduce_fully(c: ChainOrCycle) -> list[tuple[ReductionStep, ChainOrCycle]]:
    """Apply :func:`trace` to a semistable object, recording every intermediate."""
    kind: Kind = "cycle" if isinstance(c, Cycle) else "chain"
    verdict = check_cycle(c) if kind == "cycle" else check_chain(c)
    if not verdict.semistable:
        raise NotSemistableError(c, verdict.witness)
    out = []
    cur: Union[Chain, Cycle] = c
    for step in trace(c.type, kind).steps:
        if step.kind == "shift":
            cur = shift(cur, step.t)
        elif kind == "chain":
            cur = reduce_chain(cur)
        else:
            cur = reduce_cycle(cur)
        out.append((step, cur))
    return out


def lift_through(x: ChainOrCycle, tr: ReductionTrace) -> ChainOrCycle:
    """Carry an object at ``tr.terminal`` back to the starting type of ``tr``."""
    cur = x
    for step in reversed(tr.steps):
        if step.kind == "shift":
            cur = shift(cur, -step.t)
        elif isinstance(cur, Cycle):
            cur = lift_cycle(cur, step.type_before)
        else:
            cur = lift_chain(cur, step.type_before)
    return cur
