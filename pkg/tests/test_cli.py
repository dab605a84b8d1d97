import json
import subprocess
import sys

import pytest

from nodal_moduli.cli import main, run


def js(*argv):
    code, out, _ = run(list(argv))
    return code, json.loads(out) if out else None


def test_check():
    code, out = js("check", "chain", "1,0,0,1")
    assert code == 0 and out["stable"] is True and out["slope"] == "1/4"
    code, out = js("check", "cycle", "1,0,0,1")
    assert out["stable"] is False and out["witness"]["entries"] == [1, 1]
    assert out["witness"]["slope"] == "1/2"
    code, out = js("check", "chain", "5")
    assert out["stable"] is True and out["witness"] is None
    assert set(out) >= {"kind", "rank", "degree", "slope", "semistable", "stable", "witness"}


def test_entry_formats():
    a = js("check", "cycle", "1", "0", "0", "1")[1]
    b = js("check", "cycle", "[1, 0, 0, 1]")[1]
    c = js("check", "cycle", "--", "1,0,0,1")[1]
    assert a == b == c
    assert js("check", "chain", "--", "-2,1")[1]["entries"] == [-2, 1]


def test_parse_error():
    assert run(["check", "chain", "1,x"])[0] == 2
    assert run(["check", "chain"])[0] == 2


def test_overflow_exit():
    assert run(["check", "chain", str(1 << 64)])[0] == 3
    assert run(["sheaf", "chain", str((1 << 63) - 1)])[0] == 3


def test_classify():
    assert js("classify", "chain", "7", "4")[1]["items"] == [[1, 1, 0, 1, 0, 1, 1]]
    assert js("classify", "cycle", "7", "4")[1]["items"] == [[0, 1, 0, 1, 0, 1, 1]]
    out = js("classify", "chain", "4", "0", "--count-only")[1]
    assert out["count"] == 8 and "items" not in out
    assert js("classify", "chain", "4", "0", "--stable-only")[1]["items"] == []
    assert js("classify", "chain", "3", "-1")[1]["count"] == 1


def test_classify_cap(monkeypatch):
    assert run(["classify", "chain", "6", "0", "--cap", "5"])[0] == 4
    monkeypatch.setenv("NODAL_MODULI_CAP", "4")
    assert run(["classify", "chain", "6", "0"])[0] == 4
    assert run(["classify", "chain", "6", "2"])[0] == 0


def test_reduce():
    code, out = js("reduce", "chain", "1,1,0,1,0,1,1")
    assert code == 0
    assert [s["entries"] for s in out["trace"]] == [[0, -1, -1, 0], [1, 0, 0, 1], [-2], [1]]
    assert [s["after"] for s in out["trace"]] == [[4, -3], [4, 1], [1, -3], [1, 0]]
    assert out["terminal"] == {"rank": 1, "degree": 0, "entries": [1]}
    code, out = js("reduce", "cycle", "1,1,0,1,0,1,0")
    assert [s["entries"] for s in out["trace"]] == [[-1, -1, -1, 0], [0, 0, 0, 1], [-3], [0]]
    assert out["terminal"]["entries"] == [0]
    assert js("reduce", "chain", "1")[1]["trace"] == []


def test_reduce_not_semistable():
    code, out = js("reduce", "chain", "2,0")
    assert code == 5 and out["witness"]["entries"] == [2]


def test_factor_sheaf_moduli_oracle():
    code, out = js("factor", "chain", "1,0")
    assert code == 0 and out["slope"] == "0/1" and out["leaves"] == [[1], [1]]
    assert run(["factor", "chain", "2,0"])[0] == 6

    out = js("sheaf", "cycle", "1,0,1,0,1,0,1", "-m", "2")[1]
    assert (out["rank"], out["degree"], out["semistable"], out["stable"]) == (14, 8, True, False)
    assert run(["sheaf", "cycle", "1,0,1,0"])[0] == 2

    out = js("moduli", "7", "4")[1]["summary"]
    assert out["stable_exist"] and out["n_nonlocallyfree_ss"] == 1 and out["n_locallyfree_families"] == 1

    out = js("oracle", "chain", "7", "4")[1]
    assert out["agreement"] is True
    assert run(["oracle", "cycle", "13", "0"])[0] == 7


def test_round_trip_and_determinism():
    code, out = js("classify", "cycle", "6", "0")
    for item in out["items"]:
        back = js("check", "cycle", json.dumps(item))[1]
        assert back["entries"] == item and back["semistable"]
    assert run(["classify", "cycle", "6", "0"]) == run(["classify", "cycle", "6", "0"])


def test_table_format():
    code, out, _ = run(["reduce", "chain", "1,1,0,1,0,1,1", "--format", "table"])
    assert code == 0 and "shift(3): (1,-3) -> (1,0)" in out


def test_main_and_module(capsys):
    assert main(["check", "chain", "1,0"]) == 0
    assert json.loads(capsys.readouterr().out)["stable"] is False
    proc = subprocess.run(
        [sys.executable, "-m", "nodal_moduli", "moduli", "2", "2"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["n_nonlocallyfree_ss"] == 2
