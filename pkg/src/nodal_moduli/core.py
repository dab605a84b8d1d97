"""Chains, cycles, exact slopes and subchain iteration."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering
from math import gcd
from typing import Iterable, Iterator, Union

from . import kernels

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class EntryOverflowError(OverflowError):
    """An entry left the signed 64-bit range."""


def _entries(values: Iterable[int]) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"entries must be integers, got {v!r}")
        if not INT64_MIN <= v <= INT64_MAX:
            raise EntryOverflowError(f"entry {v} does not fit in a signed 64-bit integer")
        out.append(v)
    if not out:
        raise ValueError("a chain or cycle needs at least one entry")
    return tuple(out)


@total_ordering
@dataclass(frozen=True, eq=False)
class Slope:
    """The rational ``num/den``, kept unreduced and compared exactly."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den <= 0:
            raise ValueError(f"slope denominator must be positive, got {self.den}")

    def _cmp_key(self, other: "Slope") -> tuple[int, int]:
        return self.num * other.den, other.num * self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        lhs, rhs = self._cmp_key(other)
        return lhs == rhs

    def __lt__(self, other: "Slope") -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        lhs, rhs = self._cmp_key(other)
        return lhs < rhs

    def __hash__(self) -> int:
        g = gcd(self.num, self.den)
        return hash((self.num // g, self.den // g))

    def __str__(self) -> str:
        g = gcd(self.num, self.den)
        return f"{self.num // g}/{self.den // g}"


@dataclass(frozen=True, order=True)
class TypeRD:
    """Rank and degree ``(r, d)`` of a chain, cycle or sheaf."""

    r: int
    d: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"rank must be positive, got {self.r}")

    @property
    def gcd(self) -> int:
        return gcd(self.r, self.d)

    def __str__(self) -> str:
        return f"({self.r},{self.d})"


@dataclass(frozen=True, order=True)
class Chain:
    """A finite integer sequence ``(a_1, ..., a_r)``; degree is ``sum - 1``."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _entries(self.entries))

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return sum(self.entries) - 1

    @property
    def slope(self) -> Slope:
        return Slope(self.degree, self.rank)

    @property
    def type(self) -> TypeRD:
        return TypeRD(self.rank, self.degree)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self) -> str:
        return f"Chain{self.entries}"


@dataclass(frozen=True, order=True)
class Cycle:
    """A sequence up to rotation, stored as its least rotation.

    >>> Cycle((1, 1, 0, 1, 0, 1, 0)).canonical
    (0, 1, 0, 1, 0, 1, 1)
    >>> Cycle((1, 1, 0, 1, 0, 1, 0)) == Cycle((1, 0, 1, 0, 1, 0, 1))
    True
    """

    canonical: tuple[int, ...]
    aperiodic: bool = field(init=False, compare=False)

    def __post_init__(self) -> None:
        seq = _entries(self.canonical)
        k = kernels.min_rotation(seq)
        seq = seq[k:] + seq[:k]
        object.__setattr__(self, "canonical", seq)
        object.__setattr__(self, "aperiodic", kernels.smallest_period(seq) == len(seq))

    @property
    def entries(self) -> tuple[int, ...]:
        return self.canonical

    @property
    def rank(self) -> int:
        return len(self.canonical)

    @property
    def degree(self) -> int:
        return sum(self.canonical)

    @property
    def slope(self) -> Slope:
        return Slope(self.degree, self.rank)

    @property
    def type(self) -> TypeRD:
        return TypeRD(self.rank, self.degree)

    def rotated(self, start: int) -> tuple[int, ...]:
        """The representative sequence beginning at position ``start``."""
        start %= self.rank
        return self.canonical[start:] + self.canonical[:start]

    def __len__(self) -> int:
        return len(self.canonical)

    def __iter__(self) -> Iterator[int]:
        return iter(self.canonical)

    def __repr__(self) -> str:
        return f"Cycle{self.canonical}"


ChainOrCycle = Union[Chain, Cycle]


def canonicalize_cycle(entries: Iterable[int]) -> Cycle:
    return Cycle(tuple(entries))


def chain_degree(c: Chain) -> int:
    return c.degree


def cycle_degree(c: Cycle) -> int:
    return c.degree


def slope(c: ChainOrCycle) -> Slope:
    return c.slope


def cycle_span(c: Cycle, start: int, length: int) -> Chain:
    """The wrapped subchain of ``c`` of given length starting at ``start``."""
    seq = c.canonical
    r = len(seq)
    return Chain(tuple(seq[(start + i) % r] for i in range(length)))


def subchains_of_chain(c: Chain, proper_only: bool = False) -> Iterator[Chain]:
    """All contiguous subchains, by start index then length."""
    r = c.rank
    for i in range(r):
        for length in range(1, r - i + 1):
            if proper_only and length == r:
                continue
            yield Chain(c.entries[i:i + length])


def subchains_of_cycle(c: Cycle, max_len_full: bool = True) -> Iterator[Chain]:
    """All wrapped subchains, ``r`` per start position (``r - 1`` without full length)."""
    r = c.rank
    top = r if max_len_full else r - 1
    for i in range(r):
        for length in range(1, top + 1):
            yield cycle_span(c, i, length)


def shifted(entries: Iterable[int], t: int) -> tuple[int, ...]:
    return tuple(x + t for x in entries)
