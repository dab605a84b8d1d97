"""Backend selection for the scanning kernels.

The compiled extension is used when it was built and the input is small
enough for 64-bit arithmetic; otherwise the exact pure-Python twin runs.
Set ``NODAL_MODULI_PURE=1`` to force the Python backend.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

try:
    if os.environ.get("NODAL_MODULI_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_SAFE_BOUND = 1 << 30


def _fits(a: Sequence[int]) -> bool:
    if _ckernels is None:
        return False
    r = len(a)
    # |sums| * r stays below 2**62 under this bound
    return r <= _SAFE_BOUND and all(abs(x) * r <= _SAFE_BOUND for x in a)


def _pick(a: Sequence[int]):
    return _ckernels if _fits(a) else _pykernels


def chain_violation(a: Sequence[int], strict: bool, extreme_only: bool = False):
    return _pick(a).chain_violation(a, strict, extreme_only)


def cycle_violation(a: Sequence[int], strict: bool):
    return _pick(a).cycle_violation(a, strict)


def min_rotation(a: Sequence[int]) -> int:
    return _pick(a).min_rotation(a)


def smallest_period(a: Sequence[int]) -> int:
    return _pick(a).smallest_period(a)
