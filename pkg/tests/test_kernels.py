from itertools import product

from hypothesis import given, settings, strategies as st

from nodal_moduli import _pykernels, kernels
from reference import chain_slope, chain_subs, cycle_subs, least_rotation, literal_verdict

try:
    from nodal_moduli import _ckernels
except ImportError:
    _ckernels = None

seqs = st.lists(st.integers(-4, 4), min_size=1, max_size=10)


def first_violation(a, cycle, strict, extreme_only=False):
    from fractions import Fraction

    a = tuple(a)
    mu = Fraction(sum(a), len(a)) if cycle else chain_slope(a)
    subs = cycle_subs(a) if cycle else chain_subs(a)
    for i, b in subs:
        if extreme_only and i != 0 and i + len(b) != len(a):
            continue
        if strict and not cycle and len(b) == len(a):
            continue
        s = chain_slope(b)
        if s > mu or (strict and s == mu):
            return (i, len(b))
    return None


@given(seqs)
def test_chain_violation_matches_definition(backend, a):
    for strict in (False, True):
        for extreme in (False, True):
            assert kernels.chain_violation(a, strict, extreme) == first_violation(a, False, strict, extreme)


@given(seqs)
def test_cycle_violation_matches_definition(backend, a):
    for strict in (False, True):
        assert kernels.cycle_violation(a, strict) == first_violation(a, True, strict)


@given(seqs)
def test_min_rotation(backend, a):
    k = kernels.min_rotation(a)
    assert tuple(a[k:] + a[:k]) == least_rotation(a)


def test_min_rotation_exhaustive_small(backend):
    for r in range(1, 8):
        for a in product((0, 1, 2), repeat=r):
            k = kernels.min_rotation(a)
            assert a[k:] + a[:k] == least_rotation(a)


def test_large_entries_use_exact_path():
    big = [1 << 40, -(1 << 40), 3]
    assert not kernels._fits(big)
    assert kernels.chain_violation(big, False) == first_violation(big, False, False)
    assert (kernels.cycle_violation(big, True) is None) == literal_verdict(big, True)[1]


@settings(max_examples=300)
@given(seqs)
def test_backends_agree(a):
    if _ckernels is None:
        return
    for strict in (False, True):
        for extreme in (False, True):
            assert _ckernels.chain_violation(a, strict, extreme) == _pykernels.chain_violation(a, strict, extreme)
        assert _ckernels.cycle_violation(a, strict) == _pykernels.cycle_violation(a, strict)
    assert _ckernels.min_rotation(a) == _pykernels.min_rotation(a)
    assert _ckernels.smallest_period(a) == _pykernels.smallest_period(a)
