"""Recurrence engines for the joint distribution tables, plus exact totals.

Two independent recurrences fill each triangular table: a full-sum recurrence
obtained by peeling the last bargraph column, and a three-term recurrence in
the last letter.  Both must agree cell-for-cell with brute-force enumeration.

Notation used throughout: cell (n, i) of the area/sper table is the
polynomial a(n,i) in p (area) and q (sper) summed over length-n sequences
ending in i; row polynomials attach y^i to cell (n, i).  The lda table b(n,i)
uses p (levels), q (descents), r (ascents).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from invbargraph.mpoly import MPoly, P, Q, R, T, Y
from invbargraph.reporting import CheckResult, violation


class NonDivisibleError(ArithmeticError):
    """Exact division left a remainder (signals an implementation bug)."""


class DistTable:
    """Triangular array of distribution polynomials, cells (m, i), 1 <= i <= m <= n."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[MPoly]]):
        rows = tuple(tuple(row) for row in rows)
        for m, row in enumerate(rows, start=1):
            if len(row) != m:
                raise ValueError(f"row {m} must have {m} cells, got {len(row)}")
        object.__setattr__(self, "_rows", rows)

    @property
    def n(self) -> int:
        return len(self._rows)

    def __getitem__(self, key: tuple[int, int]) -> MPoly:
        m, i = key
        if not 1 <= i <= m <= self.n:
            raise KeyError(f"no cell ({m}, {i}) in a table of size {self.n}")
        return self._rows[m - 1][i - 1]

    def row(self, m: int) -> tuple[MPoly, ...]:
        return self._rows[m - 1]

    def row_sum(self, m: int) -> MPoly:
        """Sum of the cells of row m (the row polynomial at y = 1)."""
        total = MPoly.zero()
        for cell in self._rows[m - 1]:
            total = total + cell
        return total

    def cells(self) -> Iterator[tuple[int, int, MPoly]]:
        for m, row in enumerate(self._rows, start=1):
            for i, cell in enumerate(row, start=1):
                yield m, i, cell

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DistTable) and self._rows == other._rows

    def __repr__(self) -> str:
        return f"<DistTable n={self.n}>"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DistTable is immutable")

    def with_cell(self, m: int, i: int, poly: MPoly) -> "DistTable":
        """A copy with cell (m, i) replaced (tables are immutable)."""
        rows = [list(row) for row in self._rows]
        rows[m - 1][i - 1] = poly
        return DistTable(rows)

    # -- serialization -------------------------------------------------------

    def to_csv(self) -> str:
        lines = [f"{m},{i},{cell.to_text()}" for m, i, cell in self.cells()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "DistTable":
        cells: dict[tuple[int, int], MPoly] = {}
        for line in text.strip().splitlines():
            m_str, i_str, poly_str = line.split(",", 2)
            cells[(int(m_str), int(i_str))] = MPoly.from_text(poly_str)
        n = max(m for m, _ in cells)
        return cls(
            tuple(tuple(cells[(m, i)] for i in range(1, m + 1)) for m in range(1, n + 1))
        )

    def to_json(self) -> str:
        obj = [
            {"n": m, "i": i, "poly": cell.to_json_obj()}
            for m, i, cell in self.cells()
        ]
        return json.dumps(obj)

    @classmethod
    def from_json(cls, text: str) -> "DistTable":
        cells = {
            (entry["n"], entry["i"]): MPoly.from_json_obj(entry["poly"])
            for entry in json.loads(text)
        }
        n = max(m for m, _ in cells)
        return cls(
            tuple(tuple(cells[(m, i)] for i in range(1, m + 1)) for m in range(1, n + 1))
        )


def row_poly(table: DistTable, m: int) -> MPoly:
    """Row polynomial of row m: sum_i cell(m, i) * y^i."""
    total = MPoly.zero()
    for i, cell in enumerate(table.row(m), start=1):
        total = total + cell * MPoly.monomial(1, y=i)
    return total


# -- area / semi-perimeter tables ---------------------------------------------


def a_table_lemma(n: int) -> DistTable:
    """Area/sper table via the peel-last-column recurrence.

    a(n,i) = p^i q [ sum_{j>=i} a(n-1,j) + sum_{j<i} q^(i-j) a(n-1,j) ],
    from a(1,1) = p q^2.  Appending a column of height i adds i cells and one
    half-perimeter unit, plus i-j more when the previous column is lower.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = [(MPoly.monomial(1, p=1, q=2),)]
    for m in range(2, n + 1):
        prev = rows[-1]
        # suffix[k] = sum of prev[k:], so cell i sees sum_{j >= i} a(m-1,j)
        suffix = [MPoly.zero()] * m
        for k in range(m - 2, -1, -1):
            suffix[k] = suffix[k + 1] + prev[k]
        row = []
        weighted = MPoly.zero()  # sum_{j<i} q^(i-j) a(m-1,j), grown with i
        for i in range(1, m + 1):
            row.append(MPoly.monomial(1, p=i, q=1) * (suffix[i - 1] + weighted))
            if i <= m - 1:
                weighted = (weighted + prev[i - 1]) * Q
        rows.append(tuple(row))
    return DistTable(rows)


def a_table_threeterm(n: int) -> DistTable:
    """Area/sper table via the three-term recurrence in the last letter.

    a(n,i) = p(q+1) a(n,i-1) - p^2 q a(n,i-2) + p^i q(q-1) a(n-1,i-1)
    for 3 <= i <= n, with a(n,1) = pq * rowsum(n-1) and
    a(n,2) = p a(n,1) + p^2 q(q-1) a(n-1,1).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    pq = P * Q
    rows = [(MPoly.monomial(1, p=1, q=2),)]
    for m in range(2, n + 1):
        prev = rows[-1]
        prev_sum = MPoly.zero()
        for cell in prev:
            prev_sum = prev_sum + cell
        row = [pq * prev_sum]
        row.append(P * row[0] + MPoly.monomial(1, p=2, q=1) * (Q - 1) * prev[0])
        for i in range(3, m + 1):
            cell = (
                P * (Q + 1) * row[i - 2]
                - MPoly.monomial(1, p=2, q=1) * row[i - 3]
                + MPoly.monomial(1, p=i, q=1) * (Q - 1) * prev[i - 2]
            )
            row.append(cell)
        rows.append(tuple(row))
    return DistTable(rows)


def check_an_functional(nmax: int, table: DistTable | None = None) -> CheckResult:
    """Denominator-cleared row-polynomial identity for the area/sper table.

    For each n, with A_n(y) the row polynomial:
      (1-yp)(1-ypq) A_n(y) = ypq (1-ypq) (A_{n-1}(1) - A_{n-1}(yp))
                           + ypq^2 (1-yp) (A_{n-1}(yp) - (ypq)^n A_{n-1}(1/q))
    checked as exact Laurent-polynomial equality.
    """
    if nmax < 2:
        raise ValueError("nmax must be at least 2")
    if table is None:
        table = a_table_lemma(nmax)
    ypq = Y * P * Q
    yp = Y * P
    a_prev = row_poly(table, 1)
    for n in range(2, nmax + 1):
        a_n = row_poly(table, n)
        at_one = a_prev.substitute("y", 1)
        at_yp = a_prev.substitute("y", yp)
        at_qinv = a_prev.substitute("y", MPoly.monomial(1, q=-1))
        lhs = (1 - yp) * (1 - ypq) * a_n
        rhs = ypq * (1 - ypq) * (at_one - at_yp) + Y * P * Q * Q * (1 - yp) * (
            at_yp - ypq ** n * at_qinv
        )
        if lhs != rhs:
            raise violation(
                "area-sper-row-functional", f"n={n}", "",
                f"difference {(lhs - rhs).to_text()}",
            )
        a_prev = a_n
    return CheckResult("area-sper-row-functional", f"2<=n<={nmax}")


# -- levels / descents / ascents tables ----------------------------------------


def b_table_lemma(n: int) -> DistTable:
    """Lda table via the penultimate-letter recurrence.

    b(n,i) = p b(n-1,i) + q sum_{j>i} b(n-1,j) + r sum_{j<i} b(n-1,j) for
    i < n, and b(n,n) = r * rowsum(n-1), from b(1,1) = 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = [(MPoly.one(),)]
    for m in range(2, n + 1):
        prev = rows[-1]
        # above[k] = sum of prev[k+1:], so cell i sees sum_{j > i} b(m-1,j)
        above = [MPoly.zero()] * m
        for k in range(m - 3, -1, -1):
            above[k] = above[k + 1] + prev[k + 1]
        row = []
        below = MPoly.zero()  # sum_{j < i} b(m-1,j), grown with i
        for i in range(1, m):
            row.append(P * prev[i - 1] + Q * above[i - 1] + R * below)
            below = below + prev[i - 1]
        row.append(R * below)
        rows.append(tuple(row))
    return DistTable(rows)


def b_table_threeterm(n: int) -> DistTable:
    """Lda table via the three-term recurrence in the last letter.

    b(n,i) = b(n,i-1) + (p-q) b(n-1,i) + (r-p) b(n-1,i-1) for 2 <= i <= n-1,
    with b(n,1) = (p-q) b(n-1,1) + q * rowsum(n-1) and b(n,n) = r * rowsum(n-1).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rows = [(MPoly.one(),)]
    for m in range(2, n + 1):
        prev = rows[-1]
        prev_sum = MPoly.zero()
        for cell in prev:
            prev_sum = prev_sum + cell
        row = [(P - Q) * prev[0] + Q * prev_sum]
        for i in range(2, m):
            row.append(row[i - 2] + (P - Q) * prev[i - 1] + (R - P) * prev[i - 2])
        row.append(R * prev_sum)
        rows.append(tuple(row))
    return DistTable(rows)


def divide_exact_one_minus_y(num: MPoly) -> MPoly:
    """Exact quotient num / (1 - y) by synthetic division in y.

    Requires nonnegative y-exponents and num(y=1) = 0; raises
    NonDivisibleError otherwise.
    """
    if num.min_degree("y") < 0:
        raise NonDivisibleError("negative powers of y in the dividend")
    by_deg: dict[int, dict] = {}
    for exp, c in num.items():
        rest = (0,) + exp[1:]
        by_deg.setdefault(exp[0], {})[rest] = c
    if not by_deg:
        return MPoly.zero()
    top = max(by_deg)
    quotient = MPoly.zero()
    partial = MPoly.zero()
    for k in range(top + 1):
        partial = partial + MPoly(by_deg.get(k, {}))
        if k < top:
            quotient = quotient + partial * MPoly.monomial(1, y=k)
    if partial:  # partial now equals num(y=1); it must vanish for exactness
        raise NonDivisibleError(f"remainder {partial.to_text()}")
    return quotient


def bn_poly_recurrence(nmax: int) -> list[MPoly]:
    """Row polynomials B_n(y) of the lda table, computed directly.

    B_n(y) = [ (p(1-y) + yr - q) B_{n-1}(y) + y(q - y^n r) B_{n-1}(1) ] / (1-y),
    the division being exact; returns [B_1(y), ..., B_nmax(y)].
    """
    if nmax < 1:
        raise ValueError(f"nmax must be positive, got {nmax}")
    out = [Y]
    for n in range(2, nmax + 1):
        prev = out[-1]
        prev_at_one = prev.substitute("y", 1)
        numerator = (P * (1 - Y) + Y * R - Q) * prev + Y * (
            Q - MPoly.monomial(1, y=n) * R
        ) * prev_at_one
        out.append(divide_exact_one_minus_y(numerator))
    return out


# -- closed-form totals --------------------------------------------------------


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


@dataclass(frozen=True)
class HarmonicInteger:
    """The exact integer n! * H_n = sum_{i=1}^n n!/i."""

    n: int
    value: int

    @classmethod
    def of(cls, n: int) -> "HarmonicInteger":
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        fact = _factorial(n)
        return cls(n, sum(fact // i for i in range(1, n + 1)))


def total_area(n: int) -> int:
    """Sum of areas over all length-n sequences: (n!/2) (C(n+2,2) - 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    binom = (n + 2) * (n + 1) // 2
    num = _factorial(n) * (binom - 1)
    q, rem = divmod(num, 2)
    assert rem == 0
    return q


def total_sper(n: int) -> int:
    """Sum of semi-perimeters over all length-n sequences: (n^2+15n+8) n!/12."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q, rem = divmod((n * n + 15 * n + 8) * _factorial(n), 12)
    assert rem == 0
    return q


def total_levels(n: int) -> int:
    """Total number of levels over all length-n sequences: n!(H_n - 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return HarmonicInteger.of(n).value - _factorial(n)


def total_descents(n: int) -> int:
    """Total number of descents: (n+1)!/2 - n! H_n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q, rem = divmod(_factorial(n + 1), 2)
    assert rem == 0
    return q - HarmonicInteger.of(n).value


def total_ascents(n: int) -> int:
    """Total number of ascents: (n-1) n!/2."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    q, rem = divmod((n - 1) * _factorial(n), 2)
    assert rem == 0
    return q


def table_stat_total(table: DistTable, n: int, marker: str) -> int:
    """Total of the statistic tracked by `marker` over row n of a table.

    Derivative-free extraction: sum over terms of coeff * marker-exponent.
    """
    return sum(cell.weighted_exponent_sum(marker) for cell in table.row(n))


def table_stat_total_by_last(table: DistTable, n: int, marker: str) -> dict[int, int]:
    """Per-last-letter totals of a marked statistic on row n."""
    return {
        i: cell.weighted_exponent_sum(marker)
        for i, cell in enumerate(table.row(n), start=1)
    }


# -- independent count oracles ---------------------------------------------------


def stirling_first(n: int, k: int) -> int:
    """Signless Stirling number of the first kind: permutations of [n] with k cycles."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    row = [1]  # row for n=1: c(1,1)
    for m in range(2, n + 1):
        prev = row
        row = [0] * m
        for j in range(m):
            # c(m, j+1) = c(m-1, j) + (m-1) c(m-1, j+1)
            row[j] = (prev[j - 1] if j >= 1 else 0) + (m - 1) * (
                prev[j] if j < m - 1 else 0
            )
    return row[k - 1]


def eulerian(n: int, k: int) -> int:
    """Eulerian number: permutations of [n] with k ascents."""
    if not (n >= 1 and 0 <= k <= n - 1):
        raise ValueError(f"need 0 <= k <= n-1, got n={n} k={k}")
    row = [1]  # row for n=1: e(1,0)
    for m in range(2, n + 1):
        prev = row
        row = [0] * m
        for j in range(m):
            left = (j + 1) * (prev[j] if j < m - 1 else 0)
            right = (m - j) * (prev[j - 1] if j >= 1 else 0)
            row[j] = left + right
    return row[k]


def check_stirling_eulerian(nmax: int, table: DistTable | None = None) -> list[CheckResult]:
    """Row sums of the lda table specialize to Stirling and Eulerian rows.

    With B_n = rowsum(n): B_n(p=t,q=1,r=1) = sum_k c(n,k+1) t^k, and
    B_n(p=1,q=1,r=t) = B_n(p=t,q=t,r=1) = sum_k e(n,k) t^k.
    """
    if nmax < 1:
        raise ValueError(f"nmax must be positive, got {nmax}")
    if table is None:
        table = b_table_lemma(nmax)
    results = []
    for n in range(1, nmax + 1):
        row_sum = table.row_sum(n)
        levels_dist = row_sum.substitute("p", T).substitute("q", 1).substitute("r", 1)
        stirling_poly = MPoly.zero()
        for k in range(n):
            stirling_poly = stirling_poly + MPoly.monomial(stirling_first(n, k + 1), t=k)
        if levels_dist != stirling_poly:
            raise violation("levels-vs-stirling", f"n={n}", "",
                            f"{levels_dist.to_text()} != {stirling_poly.to_text()}")
        ascents_dist = row_sum.substitute("p", 1).substitute("q", 1).substitute("r", T)
        pq_dist = row_sum.substitute("p", T).substitute("q", T).substitute("r", 1)
        eulerian_poly = MPoly.zero()
        for k in range(n):
            eulerian_poly = eulerian_poly + MPoly.monomial(eulerian(n, k), t=k)
        if ascents_dist != eulerian_poly:
            raise violation("ascents-vs-eulerian", f"n={n}", "",
                            f"{ascents_dist.to_text()} != {eulerian_poly.to_text()}")
        if pq_dist != eulerian_poly:
            raise violation("levels+descents-vs-eulerian", f"n={n}", "",
                            f"{pq_dist.to_text()} != {eulerian_poly.to_text()}")
    results.append(CheckResult("levels-vs-stirling", f"1<=n<={nmax}"))
    results.append(CheckResult("ascents-vs-eulerian", f"1<=n<={nmax}"))
    results.append(CheckResult("levels+descents-vs-eulerian", f"1<=n<={nmax}"))
    return results


def check_sign_balance(
    nmax: int,
    a_table: DistTable | None = None,
    b_table: DistTable | None = None,
) -> list[CheckResult]:
    """Sign-balance evaluations of both tables against their closed forms.

    For n >= 3: A_n(y; p=-1, q=1) = 0 and A_n(y; p=1, q=-1) = 2^(n-2) y^(n-1) (y-1).
    For n >= 2: B_n(y; p=-t, q=t, r=t) = (-1)^n 2^(n-2) t^(n-1) (y-1) y.
    """
    if nmax < 3:
        raise ValueError("nmax must be at least 3")
    if a_table is None:
        a_table = a_table_lemma(nmax)
    if b_table is None:
        b_table = b_table_lemma(nmax)
    for n in range(3, nmax + 1):
        a_n = row_poly(a_table, n)
        at_p = a_n.substitute("p", -1).substitute("q", 1)
        if at_p != MPoly.zero():
            raise violation("area-sign-balance", f"n={n}", "p=-1,q=1",
                            f"nonzero {at_p.to_text()}")
        at_q = a_n.substitute("p", 1).substitute("q", -1)
        expected = MPoly.monomial(2 ** (n - 2), y=n) - MPoly.monomial(2 ** (n - 2), y=n - 1)
        if at_q != expected:
            raise violation("sper-sign-balance", f"n={n}", "p=1,q=-1",
                            f"{at_q.to_text()} != {expected.to_text()}")
    minus_t = MPoly.monomial(-1, t=1)
    for n in range(2, nmax + 1):
        b_n = row_poly(b_table, n)
        at = b_n.substitute("p", minus_t).substitute("q", T).substitute("r", T)
        sign = (-1) ** n
        expected = MPoly.monomial(sign * 2 ** (n - 2), y=2, t=n - 1) - MPoly.monomial(
            sign * 2 ** (n - 2), y=1, t=n - 1
        )
        if at != expected:
            raise violation("levels-sign-balance", f"n={n}", "p=-t,q=t,r=t",
                            f"{at.to_text()} != {expected.to_text()}")
    return [
        CheckResult("area-sign-balance", f"3<=n<={nmax}", "p=-1,q=1"),
        CheckResult("sper-sign-balance", f"3<=n<={nmax}", "p=1,q=-1"),
        CheckResult("levels-sign-balance", f"2<=n<={nmax}", "p=-t,q=t,r=t"),
    ]
