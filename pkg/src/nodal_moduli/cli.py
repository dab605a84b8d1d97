"""Command-line front end: ``nodal-moduli <command> ...``.

Exit codes: 0 success, 2 bad input, 3 entry overflow, 4 classification cap
exceeded, 5 ``reduce`` input not semistable, 6 other input not semistable,
7 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any, Optional, Sequence

from .classify import CapExceededError, classify, classify_stable
from .core import Chain, Cycle, EntryOverflowError, TypeRD
from .oracle import CAP_ENV, OracleCapError, oracle
from .reduction import ReductionError, reduce_fully
from .sheaf import FactorizationNode, PeriodicCycleError, describe, factorize, moduli_summary
from .stability import NotSemistableError, check

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_OVERFLOW = 3
EXIT_CAP = 4
EXIT_REDUCE_UNSTABLE = 5
EXIT_UNSTABLE = 6
EXIT_ORACLE_CAP = 7

DEFAULT_GCD_CAP = 20


class CliError(Exception):
    def __init__(self, message: str, code: int, payload: Optional[dict] = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def parse_entries(tokens: Sequence[str]) -> tuple[int, ...]:
    """Accept ``1,0,0,1``, ``1 0 0 1`` or ``[1, 0, 0, 1]``."""
    text = " ".join(tokens).strip().strip("[]()")
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    if not parts:
        raise CliError("no entries given", EXIT_PARSE)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise CliError(f"cannot parse entries {' '.join(tokens)!r}", EXIT_PARSE) from None


def _make(kind: str, entries: tuple[int, ...]):
    return Cycle(entries) if kind == "cycle" else Chain(entries)


def _seq(x) -> list[int]:
    return list(x.entries)


def _witness(w) -> Optional[dict]:
    if w is None:
        return None
    return {"start": w.start, "entries": _seq(w.chain), "slope": str(w.slope)}


def _tree(node: FactorizationNode) -> dict:
    return {
        "entries": _seq(node.object),
        "kind": "cycle" if isinstance(node.object, Cycle) else "chain",
        "rank": node.object.rank,
        "slope": str(node.slope),
        "children": [_tree(c) for c in node.children],
    }


def _descriptor(s) -> dict:
    out = {
        "kind": s.kind,
        "label": s.label,
        "rank": s.rank,
        "degree": s.degree,
        "slope": str(s.slope),
        "semistable": s.semistable,
        "stable": s.stable,
    }
    if s.cycle is not None:
        out["cycle"] = list(s.cycle.canonical)
        out["multiplicity"] = s.multiplicity
        out["parameter_tag"] = s.parameter_tag
    else:
        out["chain"] = list(s.chain.entries)
    return out


def _caps(args) -> tuple[int, Optional[int]]:
    if args.cap is not None:
        return args.cap, args.cap
    raw = os.environ.get(CAP_ENV)
    if raw:
        return int(raw), int(raw)
    return DEFAULT_GCD_CAP, None


def cmd_check(args) -> dict:
    x = _make(args.kind, parse_entries(args.entries))
    v = check(x)
    return {
        "kind": args.kind,
        "entries": _seq(x),
        "rank": x.rank,
        "degree": x.degree,
        "slope": str(x.slope),
        "semistable": v.semistable,
        "stable": v.stable,
        "witness": _witness(v.witness),
    }


def cmd_classify(args) -> dict:
    t = TypeRD(args.r, args.d)
    gcd_cap, _ = _caps(args)
    fn = classify_stable if args.stable_only else classify
    items = fn(t, args.kind, max_gcd=gcd_cap)
    out: dict[str, Any] = {"kind": args.kind, "rank": t.r, "degree": t.d, "count": len(items)}
    if not args.count_only:
        out["items"] = [_seq(x) for x in items]
    return out


def cmd_reduce(args) -> dict:
    x = _make(args.kind, parse_entries(args.entries))
    try:
        steps = reduce_fully(x)
    except NotSemistableError as exc:
        raise CliError(str(exc), EXIT_REDUCE_UNSTABLE, {"witness": _witness(exc.witness)})
    trace = [
        {
            "step": s.kind,
            "t": s.t,
            "before": [s.type_before.r, s.type_before.d],
            "after": [s.type_after.r, s.type_after.d],
            "entries": _seq(y),
        }
        for s, y in steps
    ]
    last = steps[-1][1] if steps else x
    return {
        "kind": args.kind,
        "entries": _seq(x),
        "rank": x.rank,
        "degree": x.degree,
        "trace": trace,
        "terminal": {"rank": last.rank, "degree": last.degree, "entries": _seq(last)},
    }


def cmd_factor(args) -> dict:
    x = _make(args.kind, parse_entries(args.entries))
    tree = factorize(x)
    return {
        "kind": args.kind,
        "slope": str(tree.slope),
        "tree": _tree(tree),
        "leaves": [_seq(n.object) for n in tree.leaves()],
    }


def cmd_sheaf(args) -> dict:
    x = _make(args.kind, parse_entries(args.entries))
    return _descriptor(describe(x, args.multiplicity))


def cmd_moduli(args) -> dict:
    gcd_cap, _ = _caps(args)
    s = moduli_summary(TypeRD(args.r, args.d), max_gcd=gcd_cap)
    return {
        "rank": s.type.r,
        "degree": s.type.d,
        "summary": {
            "gcd": s.gcd,
            "stable_exist": s.stable_exist,
            "n_nonlocallyfree_ss": s.n_nonlocallyfree_ss,
            "n_locallyfree_families": s.n_locallyfree_families,
            "homogeneous_note": s.homogeneous_note,
        },
    }


def cmd_oracle(args) -> dict:
    t = TypeRD(args.r, args.d)
    gcd_cap, rank_cap = _caps(args)
    found = oracle(t, args.kind, cap=rank_cap)
    try:
        reference = classify(t, args.kind, max_gcd=gcd_cap)
    except CapExceededError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    return {
        "kind": args.kind,
        "rank": t.r,
        "degree": t.d,
        "count": len(found),
        "items": [_seq(x) for x in found],
        "agreement": found == reference,
    }


def _table(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if key == "items":
            lines.append(f"{key}:")
            lines.extend(f"  {v}" for v in value)
        elif key == "trace":
            lines.append("trace:")
            for s in value:
                label = f"shift({s['t']})" if s["step"] == "shift" else s["step"]
                lines.append(
                    f"  {label}: ({s['before'][0]},{s['before'][1]}) -> "
                    f"({s['after'][0]},{s['after'][1]})  {s['entries']}"
                )
        elif key == "tree":
            lines.append("tree:")

            def walk(node, depth):
                lines.append(f"{'  ' * (depth + 1)}{node['entries']}  slope {node['slope']}")
                for c in node["children"]:
                    walk(c, depth + 1)

            walk(value, 0)
        elif isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {v}" for k, v in value.items())
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _entries_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("kind", choices=["chain", "cycle"])
    p.add_argument("entries", nargs="+", help="integers, e.g. 1,0,0,1 (use -- before a leading negative)")


def _type_args(p: argparse.ArgumentParser, with_kind: bool = True) -> None:
    if with_kind:
        p.add_argument("kind", choices=["chain", "cycle"])
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--cap", type=int, default=None,
                        help=f"rank/gcd cap (default from ${CAP_ENV}, else built-in)")

    parser = argparse.ArgumentParser(
        prog="nodal-moduli",
        description="Semistable chains, cycles and sheaves on a rational curve with one node.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="(semi)stability of a chain or cycle")
    _entries_arg(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="all semistable objects of a type")
    _type_args(p)
    p.add_argument("--stable-only", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", parents=[common], help="reduction trace down to (gcd, 0)")
    _entries_arg(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("factor", parents=[common], help="equal-slope factorization")
    _entries_arg(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("sheaf", parents=[common], help="sheaf descriptor of a chain or cycle")
    _entries_arg(p)
    p.add_argument("--multiplicity", "-m", type=int, default=1)
    p.set_defaults(func=cmd_sheaf)

    p = sub.add_parser("moduli", parents=[common], help="summary of semistable sheaves of a type")
    _type_args(p, with_kind=False)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("oracle", parents=[common], help="brute-force classification and agreement")
    _type_args(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Execute a command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        payload = args.func(args)
    except CliError as exc:
        body = {"error": str(exc), **(exc.payload or {})}
        return exc.code, json.dumps(body) if args.format == "json" else "", str(exc)
    except EntryOverflowError as exc:
        return EXIT_OVERFLOW, "", str(exc)
    except OracleCapError as exc:
        return EXIT_ORACLE_CAP, "", str(exc)
    except CapExceededError as exc:
        return EXIT_CAP, "", str(exc)
    except NotSemistableError as exc:
        body = {"error": str(exc), "witness": _witness(exc.witness)}
        return EXIT_UNSTABLE, json.dumps(body) if args.format == "json" else "", str(exc)
    except (PeriodicCycleError, ReductionError, ValueError, TypeError) as exc:
        return EXIT_PARSE, "", str(exc)
    text = json.dumps(payload) if args.format == "json" else _table(payload)
    return EXIT_OK, text, ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(f"error: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
