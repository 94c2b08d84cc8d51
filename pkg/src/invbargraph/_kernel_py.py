"""Pure-Python enumeration kernels.

These walk all n! inversion sequences of length n and accumulate joint
statistic counts.  They are the reference implementation of the compiled
kernels in ``_speedups``; the interface of both must stay identical.

Conventions (shared with the compiled kernel):

* ``area_sper_counts(n)`` -> {(last, area, sper): multiplicity}
* ``lda_counts(n)``       -> {(last, levels, descents, ascents): multiplicity}

where area = sum of entries, sper = n + (rho_1 + sum |steps| + rho_n)/2,
and levels/descents/ascents count adjacent equal/falling/rising pairs.
"""

from __future__ import annotations

MAX_N = 12


def _guard(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def area_sper_counts(n: int) -> dict[tuple[int, int, int], int]:
    _guard(n)
    if n == 1:
        return {(1, 1, 2): 1}
    counts: dict[tuple[int, int, int], int] = {}

    def walk(i: int, prev: int, area: int, boundary: int) -> None:
        # boundary = rho_1 + sum_{2<=j<=i} |rho_j - rho_{j-1}|
        nxt = i + 1
        if nxt == n:
            for v in range(1, n + 1):
                key = (v, area + v, n + (boundary + abs(v - prev) + v) // 2)
                counts[key] = counts.get(key, 0) + 1
        else:
            for v in range(1, nxt + 1):
                walk(nxt, v, area + v, boundary + abs(v - prev))

    walk(1, 1, 1, 1)
    return counts


def lda_counts(n: int) -> dict[tuple[int, int, int, int], int]:
    _guard(n)
    if n == 1:
        return {(1, 0, 0, 0): 1}
    counts: dict[tuple[int, int, int, int], int] = {}

    def walk(i: int, prev: int, lev: int, des: int, asc: int) -> None:
        nxt = i + 1
        if nxt == n:
            for v in range(1, n + 1):
                if v == prev:
                    key = (v, lev + 1, des, asc)
                elif v < prev:
                    key = (v, lev, des + 1, asc)
                else:
                    key = (v, lev, des, asc + 1)
                counts[key] = counts.get(key, 0) + 1
        else:
            for v in range(1, nxt + 1):
                if v == prev:
                    walk(nxt, v, lev + 1, des, asc)
                elif v < prev:
                    walk(nxt, v, lev, des + 1, asc)
                else:
                    walk(nxt, v, lev, des, asc + 1)

    walk(1, 1, 0, 0, 0)
    return counts
