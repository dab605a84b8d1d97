"""Literal definitions used as test oracles; independent of the package."""

from fractions import Fraction
from itertools import product


def chain_slope(b):
    return Fraction(sum(b) - 1, len(b))


def chain_subs(a):
    r = len(a)
    return [(i, tuple(a[i:j])) for i in range(r) for j in range(i + 1, r + 1)]


def cycle_subs(a):
    r = len(a)
    return [(i, tuple(a[(i + k) % r] for k in range(n))) for i in range(r) for n in range(1, r + 1)]


def literal_verdict(a, cycle=False):
    """(semistable, stable) straight from the subchain definition."""
    a = tuple(a)
    mu = Fraction(sum(a), len(a)) if cycle else chain_slope(a)
    subs = cycle_subs(a) if cycle else chain_subs(a)
    semistable = all(chain_slope(b) <= mu for _, b in subs)
    proper = [b for _, b in subs if cycle or len(b) < len(a)]
    stable = semistable and all(chain_slope(b) < mu for b in proper)
    return semistable, stable


def least_rotation(a):
    a = tuple(a)
    return min(a[i:] + a[:i] for i in range(len(a)))


def is_aperiodic(a):
    a = tuple(a)
    return all(a[p:] + a[:p] != a for p in range(1, len(a)))


def brute_classify(r, d, cycle=False, lo=-3, hi=3):
    """Semistable objects of type (r, d) among all sequences with entries in [lo, hi]."""
    out = set()
    for s in product(range(lo, hi + 1), repeat=r):
        if sum(s) != (d if cycle else d + 1):
            continue
        if cycle and not is_aperiodic(s):
            continue
        if literal_verdict(s, cycle)[0]:
            out.add(least_rotation(s) if cycle else s)
    return sorted(out)
