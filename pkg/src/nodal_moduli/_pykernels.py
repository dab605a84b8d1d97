"""Pure-Python implementations of the scanning kernels.

Every function here has a twin of the same name and signature in
``_ckernels.pyx``. Subchains are addressed by ``(start, length)`` with a
0-based start; the scan order is start ascending, then length ascending.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

Span = Optional[Tuple[int, int]]


def chain_violation(a: Sequence[int], strict: bool, extreme_only: bool) -> Span:
    """First subchain of the chain ``a`` breaking (semi)stability.

    With ``strict=False`` looks for a subchain whose slope exceeds the slope
    of ``a``; with ``strict=True`` for a *proper* subchain whose slope is at
    least the slope of ``a``.
    """
    r = len(a)
    prefix = [0] * (r + 1)
    for i, x in enumerate(a):
        prefix[i + 1] = prefix[i] + x
    deg = prefix[r] - 1
    for i in range(r):
        for length in range(1, r - i + 1):
            if extreme_only and i != 0 and i + length != r:
                continue
            if strict and length == r:
                continue
            lhs = (prefix[i + length] - prefix[i] - 1) * r
            rhs = deg * length
            if lhs > rhs or (strict and lhs == rhs):
                return (i, length)
    return None


def cycle_violation(a: Sequence[int], strict: bool) -> Span:
    """Same as :func:`chain_violation` over the wrapped subchains of a cycle."""
    r = len(a)
    prefix = [0] * (2 * r + 1)
    for i in range(2 * r):
        prefix[i + 1] = prefix[i] + a[i % r]
    deg = prefix[r]
    for i in range(r):
        for length in range(1, r + 1):
            lhs = (prefix[i + length] - prefix[i] - 1) * r
            rhs = deg * length
            if lhs > rhs or (strict and lhs == rhs):
                return (i, length)
    return None


def min_rotation(a: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    n = len(a)
    if n == 0:
        return 0
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        x = a[j % n]
        i = fail[j - k - 1]
        while i != -1 and x != a[(k + i + 1) % n]:
            if x < a[(k + i + 1) % n]:
                k = j - i - 1
            i = fail[i]
        if x != a[(k + i + 1) % n]:
            # here i == -1
            if x < a[k % n]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % n


def smallest_period(a: Sequence[int]) -> int:
    """Smallest divisor ``p`` of ``len(a)`` with ``a`` made of copies of ``a[:p]``."""
    n = len(a)
    for p in range(1, n + 1):
        if n % p:
            continue
        if all(a[i] == a[i - p] for i in range(p, n)):
            return p
    return n
