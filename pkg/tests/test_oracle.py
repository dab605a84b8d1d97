from itertools import product

import pytest

from nodal_moduli.core import Chain, Cycle, TypeRD
from nodal_moduli.oracle import OracleCapError, entry_window, oracle, oracle_chains, oracle_cycles
from nodal_moduli.stability import check_chain, check_cycle


def test_examples():
    assert oracle_chains(TypeRD(7, 4)) == [Chain((1, 1, 0, 1, 0, 1, 1))]
    assert oracle_chains(TypeRD(1, 0)) == [Chain((1,))]
    assert oracle_chains(TypeRD(3, 0)) == [Chain((0, 0, 1)), Chain((0, 1, 0)), Chain((1, -1, 1)), Chain((1, 0, 0))]
    assert oracle_cycles(TypeRD(7, 4)) == [Cycle((1, 0, 1, 0, 1, 0, 1))]
    assert oracle_cycles(TypeRD(1, 0)) == [Cycle((0,))]


def test_recorded_4_2_cycles():
    # recorded from an oracle run: (1,1,0,0) survives, (1,0,1,0) is periodic
    assert oracle_cycles(TypeRD(4, 2)) == [Cycle((0, 0, 1, 1))]


def test_window():
    assert list(entry_window(TypeRD(7, 4))) == [0, 1]
    assert list(entry_window(TypeRD(3, 0))) == [-1, 0, 1]
    assert list(entry_window(TypeRD(3, -4))) == [-2, -1]
    assert list(entry_window(TypeRD(2, 4))) == [1, 2, 3]


@pytest.mark.parametrize("r", range(1, 7))
def test_window_is_sound(r):
    # unwindowed search over [mu - 2, mu + 2] finds nothing outside the window
    for d in range(-r, 2 * r + 1):
        window = set(entry_window(TypeRD(r, d)))
        base = d // r
        for seq in product(range(base - 2, base + 4), repeat=r):
            if sum(seq) == d + 1 and not set(seq) <= window:
                assert not check_chain(Chain(seq)).semistable
            if sum(seq) == d and not set(seq) <= window:
                assert not check_cycle(Cycle(seq)).semistable


def test_cycles_rotation_closed():
    for c in oracle_cycles(TypeRD(6, 0)):
        assert Cycle(c.canonical) == c and c.aperiodic


def test_cap(monkeypatch):
    with pytest.raises(OracleCapError):
        oracle_chains(TypeRD(13, 0))
    with pytest.raises(OracleCapError):
        oracle(TypeRD(5, 0), "cycle", cap=4)
    monkeypatch.setenv("NODAL_MODULI_CAP", "3")
    with pytest.raises(OracleCapError):
        oracle_chains(TypeRD(4, 1))


def test_oracle_is_independent():
    import ast

    import nodal_moduli.oracle as mod

    tree = ast.parse(open(mod.__file__).read())
    imported = {n.module for n in ast.walk(tree) if isinstance(n, ast.ImportFrom)}
    assert imported <= {"__future__", "itertools", "typing", "core", "stability"}
