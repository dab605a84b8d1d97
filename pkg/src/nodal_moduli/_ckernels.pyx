# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scanning kernels; twins of ``_pykernels``.

Callers guarantee ``max|a_i| * len(a) <= SAFE_BOUND`` so every product below
fits in a signed 64-bit integer.
"""

from libc.stdlib cimport malloc, free

SAFE_BOUND = 1 << 30


cdef long long* _prefix(object a, Py_ssize_t r, Py_ssize_t reps) except NULL:
    cdef long long* p = <long long*> malloc((reps * r + 1) * sizeof(long long))
    if p == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    vals = [int(x) for x in a]
    p[0] = 0
    for i in range(reps * r):
        p[i + 1] = p[i] + <long long> vals[i % r]
    return p


def chain_violation(a, bint strict, bint extreme_only):
    cdef Py_ssize_t r = len(a)
    cdef long long* p = _prefix(a, r, 1)
    cdef Py_ssize_t i, length
    cdef long long deg = p[r] - 1
    cdef long long lhs, rhs
    try:
        for i in range(r):
            for length in range(1, r - i + 1):
                if extreme_only and i != 0 and i + length != r:
                    continue
                if strict and length == r:
                    continue
                lhs = (p[i + length] - p[i] - 1) * r
                rhs = deg * length
                if lhs > rhs or (strict and lhs == rhs):
                    return (i, length)
        return None
    finally:
        free(p)


def cycle_violation(a, bint strict):
    cdef Py_ssize_t r = len(a)
    cdef long long* p = _prefix(a, r, 2)
    cdef Py_ssize_t i, length
    cdef long long deg = p[r]
    cdef long long lhs, rhs
    try:
        for i in range(r):
            for length in range(1, r + 1):
                lhs = (p[i + length] - p[i] - 1) * r
                rhs = deg * length
                if lhs > rhs or (strict and lhs == rhs):
                    return (i, length)
        return None
    finally:
        free(p)


def min_rotation(a):
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return 0
    cdef long long* s = <long long*> malloc(n * sizeof(long long))
    cdef Py_ssize_t* fail = <Py_ssize_t*> malloc(2 * n * sizeof(Py_ssize_t))
    if s == NULL or fail == NULL:
        free(s)
        free(fail)
        raise MemoryError()
    cdef Py_ssize_t j, k = 0, i
    cdef long long x
    try:
        for j in range(n):
            s[j] = <long long> a[j]
        for j in range(2 * n):
            fail[j] = -1
        for j in range(1, 2 * n):
            x = s[j % n]
            i = fail[j - k - 1]
            while i != -1 and x != s[(k + i + 1) % n]:
                if x < s[(k + i + 1) % n]:
                    k = j - i - 1
                i = fail[i]
            if x != s[(k + i + 1) % n]:
                if x < s[k % n]:
                    k = j
                fail[j - k] = -1
            else:
                fail[j - k] = i + 1
        return k % n
    finally:
        free(s)
        free(fail)


def smallest_period(a):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t p, i
    cdef bint ok
    vals = list(a)
    for p in range(1, n + 1):
        if n % p:
            continue
        ok = True
        for i in range(p, n):
            if vals[i] != vals[i - p]:
                ok = False
                break
        if ok:
            return p
    return n
