# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Walks all n! inversion sequences with an incremental depth-first sweep and
tallies joint statistic counts into flat C arrays.  Must stay interface- and
result-identical to ``invbargraph._kernel_py``.
"""

from libc.stdlib cimport calloc, free


cdef void _walk_area_sper(int i, int n, int prev, int area, int boundary,
                          long long* counts, int adim, int sdim) noexcept nogil:
    cdef int v, d, nxt = i + 1
    if nxt == n:
        for v in range(1, n + 1):
            d = v - prev if v >= prev else prev - v
            counts[(v * adim + area + v) * sdim + n + (boundary + d + v) // 2] += 1
    else:
        for v in range(1, nxt + 1):
            d = v - prev if v >= prev else prev - v
            _walk_area_sper(nxt, n, v, area + v, boundary + d, counts, adim, sdim)


cdef void _walk_lda(int i, int n, int prev, int lev, int des,
                    long long* counts, int ldim, int ddim) noexcept nogil:
    # ascents are implied: asc = (position count so far) - lev - des
    cdef int v, nxt = i + 1
    if nxt == n:
        for v in range(1, n + 1):
            if v == prev:
                counts[(v * ldim + lev + 1) * ddim + des] += 1
            elif v < prev:
                counts[(v * ldim + lev) * ddim + des + 1] += 1
            else:
                counts[(v * ldim + lev) * ddim + des] += 1
    else:
        for v in range(1, nxt + 1):
            if v == prev:
                _walk_lda(nxt, n, v, lev + 1, des, counts, ldim, ddim)
            elif v < prev:
                _walk_lda(nxt, n, v, lev, des + 1, counts, ldim, ddim)
            else:
                _walk_lda(nxt, n, v, lev, des, counts, ldim, ddim)


def area_sper_counts(int n):
    """{(last, area, sper): multiplicity} over all inversion sequences of length n."""
    if n < 1 or n > 12:
        raise ValueError(f"n must be in 1..12, got {n}")
    if n == 1:
        return {(1, 1, 2): 1}
    cdef int adim = n * (n + 1) // 2 + 1
    cdef int sdim = n + (1 + n * (n - 1) // 2 + n) // 2 + 2
    cdef long long* counts = <long long*> calloc((n + 1) * adim * sdim, sizeof(long long))
    cdef int v, a, s
    cdef long long c
    if counts == NULL:
        raise MemoryError()
    try:
        with nogil:
            _walk_area_sper(1, n, 1, 1, 1, counts, adim, sdim)
        out = {}
        for v in range(1, n + 1):
            for a in range(adim):
                for s in range(sdim):
                    c = counts[(v * adim + a) * sdim + s]
                    if c:
                        out[(v, a, s)] = c
        return out
    finally:
        free(counts)


def lda_counts(int n):
    """{(last, levels, descents, ascents): multiplicity} over length-n inversion sequences."""
    if n < 1 or n > 12:
        raise ValueError(f"n must be in 1..12, got {n}")
    if n == 1:
        return {(1, 0, 0, 0): 1}
    cdef int ldim = n
    cdef int ddim = n
    cdef long long* counts = <long long*> calloc((n + 1) * ldim * ddim, sizeof(long long))
    cdef int v, lev, des
    cdef long long c
    if counts == NULL:
        raise MemoryError()
    try:
        with nogil:
            _walk_lda(1, n, 1, 0, 0, counts, ldim, ddim)
        out = {}
        for v in range(1, n + 1):
            for lev in range(ldim):
                for des in range(ddim):
                    c = counts[(v * ldim + lev) * ddim + des]
                    if c:
                        out[(v, lev, des, n - 1 - lev - des)] = c
        return out
    finally:
        free(counts)
