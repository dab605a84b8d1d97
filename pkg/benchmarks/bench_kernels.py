"""Compare the compiled and pure-Python kernels on stability scans.

    python benchmarks/bench_kernels.py [--rank 10] [--repeat 3]

Workload: every windowed candidate of the degree-0 types at the given rank,
checked as a chain and as a cycle (the oracle's inner loop).
"""

from __future__ import annotations

import argparse
import time
from itertools import product

from nodal_moduli import _pykernels

try:
    from nodal_moduli import _ckernels
except ImportError:
    _ckernels = None


def workload(r: int) -> list[tuple[int, ...]]:
    return [seq for seq in product((-1, 0, 1), repeat=r) if sum(seq) in (0, 1)]


def run(mod, seqs) -> tuple[int, float]:
    t0 = time.perf_counter()
    hits = 0
    for s in seqs:
        if mod.chain_violation(s, False, False) is None:
            hits += 1
        if mod.cycle_violation(s, False) is None:
            hits += 1
        mod.min_rotation(s)
    return hits, time.perf_counter() - t0


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--rank", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    seqs = workload(args.rank)
    print(f"{len(seqs)} sequences of rank {args.rank}")
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; only the Python backend is timed")
    results = {}
    for name, mod in backends:
        best = min(run(mod, seqs)[1] for _ in range(args.repeat))
        hits = run(mod, seqs)[0]
        results[name] = (hits, best)
        print(f"{name:>7}: {best:.3f} s (semistable hits {hits})")
    if len(results) == 2:
        assert results["python"][0] == results["cython"][0], "backends disagree"
        print(f"speedup: {results['python'][1] / results['cython'][1]:.1f}x")


if __name__ == "__main__":
    main()
