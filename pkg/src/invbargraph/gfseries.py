"""Truncated power series with exact rational coefficients.

A RationalSeries holds the coefficients of x^0..x^N for a fixed truncation
order N; all arithmetic is exact modulo x^(N+1).  On top of the ring
operations (plus inverse, logarithm and composition) this module builds the
closed-form generating functions for the bargraph statistics and checks them
coefficient-by-coefficient against the recurrence tables, always at fixed
rational parameter points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from invbargraph import recur
from invbargraph.mpoly import MPoly
from invbargraph.recur import DistTable, row_poly
from invbargraph.reporting import CheckResult, violation

Rat = Fraction | int


class NonUnitConstantTermError(ValueError):
    """Inverse needs a nonzero constant term; log needs constant term 1."""


class NonzeroConstantInnerError(ValueError):
    """Composition requires the inner series to vanish at 0."""


class SingularParameterError(ValueError):
    """A closed form is singular at the requested parameter point."""


class RationalSeries:
    """Coefficients of x^0..x^order, exact modulo x^(order+1)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rat], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "RationalSeries":
        return cls([0, 1], order)

    @classmethod
    def from_poly(cls, coeffs: Sequence[Rat], order: int) -> "RationalSeries":
        return cls(coeffs, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k]

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self._coeffs, order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalSeries) and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"RationalSeries({list(map(str, self._coeffs))})"

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RationalSeries is immutable")

    # -- ring operations (results truncated to the smaller order) --------------

    def _common(self, other: "RationalSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = self._common(other)
        return RationalSeries(
            [a + b for a, b in zip(self._coeffs, other._coeffs)], n
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        n = self._common(other)
        return RationalSeries(
            [a - b for a, b in zip(self._coeffs, other._coeffs)], n
        )

    def __neg__(self) -> "RationalSeries":
        return RationalSeries([-a for a in self._coeffs], self.order)

    def __mul__(self, other: "RationalSeries | Rat") -> "RationalSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n = self._common(other)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self._coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RationalSeries(out, n)

    __rmul__ = __mul__

    def scale(self, c: Rat) -> "RationalSeries":
        c = Fraction(c)
        return RationalSeries([a * c for a in self._coeffs], self.order)

    def inv(self) -> "RationalSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self._coeffs[0]
        if not a0:
            raise NonUnitConstantTermError("cannot invert a series with constant term 0")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / a0
        for m in range(1, n + 1):
            s = Fraction(0)
            for k in range(1, m + 1):
                if self._coeffs[k]:
                    s += self._coeffs[k] * out[m - k]
            out[m] = -s / a0
        return RationalSeries(out, n)

    def log(self) -> "RationalSeries":
        """Logarithm; requires constant term 1.  log(a) = integral of a'/a."""
        if self._coeffs[0] != 1:
            raise NonUnitConstantTermError("log needs constant term 1")
        n = self.order
        deriv = RationalSeries(
            [(k + 1) * self._coeffs[k + 1] for k in range(n)] + [0], n
        )
        ratio = deriv * self.inv()
        out = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            out[k] = ratio.coeff(k - 1) / k
        return RationalSeries(out, n)

    def compose(self, inner: "RationalSeries") -> "RationalSeries":
        """self(inner(x)); requires inner(0) = 0.  Horner evaluation."""
        if inner._coeffs[0]:
            raise NonzeroConstantInnerError("inner series must vanish at 0")
        n = self._common(inner)
        inner = inner.truncate(n)
        result = RationalSeries([self._coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            result = result * inner
            result = result + RationalSeries([self._coeffs[k]], n)
        return result


def geometric(c: Rat, order: int) -> RationalSeries:
    """1/(1 - c x) expanded directly."""
    c = Fraction(c)
    out, acc = [], Fraction(1)
    for _ in range(order + 1):
        out.append(acc)
        acc *= c
    return RationalSeries(out, order)


def log_one_minus(c: Rat, order: int) -> RationalSeries:
    """ln(1 - c x) expanded directly."""
    c = Fraction(c)
    out, acc = [Fraction(0)], Fraction(1)
    for k in range(1, order + 1):
        acc *= c
        out.append(-acc / k)
    return RationalSeries(out, order)


def log_ratio(y: Rat, order: int) -> RationalSeries:
    """ln((1 - xy)/(1 - x)) = sum_k (1 - y^k) x^k / k."""
    return log_one_minus(y, order) - log_one_minus(1, order)


# -- series taken from recurrence data -----------------------------------------


def series_from_table(
    table: DistTable, order: int, assignment: dict[str, Rat]
) -> RationalSeries:
    """sum_n rowpoly_n(assignment) x^n for n = 1..order (row sums if no y given)."""
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        poly = row_poly(table, n) if "y" in assignment else table.row_sum(n)
        coeffs.append(poly.eval_rational(assignment))
    return RationalSeries(coeffs, order)


# -- closed-form expansions: area / semi-perimeter ------------------------------


def _area_sum_series(p: Fraction, order: int, y: Fraction | None = None) -> RationalSeries:
    """sum_j (-1)^j x^j C_j p-powers / prod_i (1 - p - x block) as used below.

    With y omitted: term j = (-1)^j x^j p^(j + C(j+2,2)) / prod_{i=0..j} (1-p-x p^(i+1)).
    With y given:  term j = (-1)^j (xy)^j p^(2j + C(j+2,2)) / prod_{i=0..j} (1-p-xy p^(i+2)).
    """
    total = RationalSeries.zero(order)
    for j in range(order + 1):
        binom = (j + 2) * (j + 1) // 2
        if y is None:
            sign_coeff = (-1) ** j * p ** (j + binom)
            lead = RationalSeries([0] * j + [sign_coeff], order)
        else:
            sign_coeff = (-1) ** j * y ** j * p ** (2 * j + binom)
            lead = RationalSeries([0] * j + [sign_coeff], order)
        term = lead
        for i in range(j + 1):
            if y is None:
                den = RationalSeries([1 - p, -(p ** (i + 1))], order)
            else:
                den = RationalSeries([1 - p, -y * p ** (i + 2)], order)
            term = term * den.inv()
        total = total + term
    return total


def expand_area_ogf(p: Rat, order: int) -> RationalSeries:
    """A(x) = sum_n (area distribution at last-letter-blind point) x^n.

    Closed form: A(x) = x (1-p) sum_{j>=0} (-1)^j x^j p^(j+C(j+2,2))
    / prod_{i=0}^{j} (1 - p - x p^(i+1)); coefficient of x^n is the area
    generating polynomial of all length-n sequences evaluated at p.
    """
    p = Fraction(p)
    if p == 1:
        raise SingularParameterError("p = 1 is singular for the area OGF")
    if order < 1:
        raise ValueError("order must be at least 1")
    shifted = RationalSeries([0, 1 - p], order)
    return shifted * _area_sum_series(p, order)


def expand_area_last_ogf(p: Rat, y: Rat, order: int) -> RationalSeries:
    """Joint OGF of area (p) and last letter (y): coefficient of x^n is A_n(y; p, 1).

    Closed form: xyp + x^2 y p (1-p)/(1-yp) * (S1 - y^2 p^2 S2) with S1, S2 the
    two iterated sums of expand_area_ogf shape.
    """
    p, y = Fraction(p), Fraction(y)
    if p == 1:
        raise SingularParameterError("p = 1 is singular for the area OGF")
    if y * p == 1:
        raise SingularParameterError("y p = 1 is singular for the area/last OGF")
    if order < 1:
        raise ValueError("order must be at least 1")
    s1 = _area_sum_series(p, order)
    s2 = _area_sum_series(p, order, y=y)
    bracket = s1 - s2.scale(y * y * p * p)
    prefactor = RationalSeries([0, 0, y * p * (1 - p) / (1 - y * p)], order)
    return RationalSeries([0, y * p], order) + prefactor * bracket


def check_area_ogf_recursion(
    p: Rat, order: int, table: DistTable | None = None
) -> CheckResult:
    """Self-substitution identity for the area OGF built from recurrence data.

    A(x) = x p (1-p)/(1-p-xp) - x p^2/(1-p-xp) * A(xp), checked mod x^(order+1).
    """
    p = Fraction(p)
    if p == 1:
        raise SingularParameterError("p = 1 is singular for the area OGF")
    if table is None:
        table = recur.a_table_lemma(order)
    data = series_from_table(table, order, {"p": p, "q": 1})
    scaled = RationalSeries(
        [c * p ** n for n, c in enumerate(data.coeffs)], order
    )
    den_inv = RationalSeries([1 - p, -p], order).inv()
    rhs = RationalSeries([0, p * (1 - p)], order) * den_inv - (
        RationalSeries([0, p * p], order) * den_inv * scaled
    )
    if rhs != data:
        k = next(i for i, (a, b) in enumerate(zip(rhs.coeffs, data.coeffs)) if a != b)
        raise violation("area-ogf-recursion", f"order={order}", f"p={p}",
                        f"x^{k}: {rhs.coeff(k)} != {data.coeff(k)}")
    return CheckResult("area-ogf-recursion", f"order={order}", f"p={p}")


def check_area_ogf_closed(
    p: Rat, y: Rat | None, order: int, table: DistTable | None = None
) -> CheckResult:
    """Closed-form area OGF (optionally joint with last letter) vs recurrence data."""
    p = Fraction(p)
    if table is None:
        table = recur.a_table_lemma(order)
    if y is None:
        series = expand_area_ogf(p, order)
        data = series_from_table(table, order, {"p": p, "q": 1})
        params = f"p={p}"
    else:
        y = Fraction(y)
        series = expand_area_last_ogf(p, y, order)
        data = series_from_table(table, order, {"y": y, "p": p, "q": 1})
        params = f"p={p},y={y}"
    if series != data:
        k = next(
            i for i, (a, b) in enumerate(zip(series.coeffs, data.coeffs)) if a != b
        )
        raise violation("area-ogf-closed", f"order={order}", params,
                        f"x^{k}: {series.coeff(k)} != {data.coeff(k)}")
    return CheckResult("area-ogf-closed", f"order={order}", params)


# -- kernel-method identity for the lda distribution ----------------------------


def _linear_at(c: Fraction, arg: RationalSeries, order: int) -> RationalSeries:
    """1 - c * arg(x) for a series argument with arg(0) = 0."""
    return RationalSeries.one(order) - arg.scale(c)


def _rho_at(
    p: Fraction, q: Fraction, r: Fraction, arg: RationalSeries, order: int
) -> RationalSeries:
    """rho(arg) where rho(u) = (1 - (p-q)u)/(1 - (p-r)u)."""
    return _linear_at(p - q, arg, order) * _linear_at(p - r, arg, order).inv()


def check_lda_kernel(
    p: Rat, q: Rat, r: Rat, order: int, table: DistTable | None = None
) -> list[CheckResult]:
    """Kernel-method identities for B(x) = sum_n rowsum_n(p,q,r) x^n.

    Checks, mod x^(order+1):
      1. B(x) = (rho(x)-1)/q + (r/q) rho(x) B(x rho(x))
      2. the iteration unrolled J = order times with its exact remainder:
         B(x) = sum_{j<=J} r^j (v_j - 1)/q^(j+1) * v_0..v_{j-1}
              + (r/q)^(J+1) v_0..v_J B(x_{J+1}),
    where x_0 = x, v_j = rho(x_j) and x_{j+1} = x_j v_j.
    """
    p, q, r = Fraction(p), Fraction(q), Fraction(r)
    if q == 0:
        raise SingularParameterError("q = 0 is singular for the kernel identity")
    if table is None:
        table = recur.b_table_lemma(order)
    data = series_from_table(table, order, {"p": p, "q": q, "r": r})
    params = f"p={p},q={q},r={r}"

    rho = _rho_at(p, q, r, RationalSeries.x(order), order)
    inner = RationalSeries.x(order) * rho
    rhs = (rho - RationalSeries.one(order)).scale(1 / q) + rho.scale(r / q) * data.compose(inner)
    if rhs != data:
        k = next(i for i, (a, b) in enumerate(zip(rhs.coeffs, data.coeffs)) if a != b)
        raise violation("lda-kernel-substitution", f"order={order}", params,
                        f"x^{k}: {rhs.coeff(k)} != {data.coeff(k)}")

    total = RationalSeries.zero(order)
    v_product = RationalSeries.one(order)
    xj = RationalSeries.x(order)
    ratio_power = Fraction(1)
    for j in range(order + 1):
        vj = _rho_at(p, q, r, xj, order)
        term = (v_product * (vj - RationalSeries.one(order))).scale(ratio_power / q)
        total = total + term
        v_product = v_product * vj
        xj = xj * vj
        ratio_power *= r / q
    remainder = v_product.scale(ratio_power) * data.compose(xj)
    unrolled = total + remainder
    if unrolled != data:
        k = next(
            i for i, (a, b) in enumerate(zip(unrolled.coeffs, data.coeffs)) if a != b
        )
        raise violation("lda-kernel-unrolled", f"order={order}", params,
                        f"x^{k}: {unrolled.coeff(k)} != {data.coeff(k)}")
    return [
        CheckResult("lda-kernel-substitution", f"order={order}", params),
        CheckResult("lda-kernel-unrolled", f"order={order}", params),
    ]


# -- total generating functions --------------------------------------------------


def total_area_gf(y: Rat, order: int) -> RationalSeries:
    """Exponential GF of per-last-letter area totals, at a fixed rational y.

    n! times the x^n coefficient equals sum_j (total area over length-n
    sequences ending in j) y^j.
    """
    y = Fraction(y)
    if y == 1:
        raise SingularParameterError("y = 1 is singular in this evaluation")
    if order < 1:
        raise ValueError("order must be at least 1")
    part1 = log_ratio(y, order).scale(y * (1 + y) / (2 * (1 - y) ** 2))
    num = RationalSeries(
        [0, y * (2 - 6 * y), y * (5 * y ** 2 + 8 * y - 1),
         y * (-8 * y ** 2 - 4 * y), y * (4 * y ** 2)],
        order,
    )
    geo_y = RationalSeries([1, -y], order)
    geo_1 = RationalSeries([1, -1], order)
    den = (geo_y * geo_y * geo_1 * geo_1).scale(4 * (1 - y))
    return part1 + num * den.inv()


def total_levels_gf(y: Rat, order: int) -> RationalSeries:
    """Exponential GF of per-last-letter level totals at fixed y."""
    y = Fraction(y)
    if y == 1:
        raise SingularParameterError("y = 1 is singular in this evaluation")
    if order < 1:
        raise ValueError("order must be at least 1")
    ln_y = log_one_minus(y, order)
    ln_1 = log_one_minus(1, order)
    bracket = (
        RationalSeries([-y - 1, y], order) * ln_y.scale(2)
        + (RationalSeries([-2, 1], order) * ln_1).scale(-2 * y)
        + (ln_y * ln_y - ln_1 * ln_1).scale(-y)
    )
    return RationalSeries([0, y], order) + bracket.scale(Fraction(1, 2) / (1 - y))


def total_descents_gf(y: Rat, order: int) -> RationalSeries:
    """Exponential GF of per-last-letter descent totals at fixed y."""
    y = Fraction(y)
    if y == 1:
        raise SingularParameterError("y = 1 is singular in this evaluation")
    if order < 1:
        raise ValueError("order must be at least 1")
    ln_y = log_one_minus(y, order)
    ln_1 = log_one_minus(1, order)
    part_a = (
        RationalSeries([0, y], order)
        * (
            RationalSeries([-2, 3], order) * geometric(1, order)
            - (RationalSeries([0, 1], order) * geometric(y, order)).scale(y * y)
        )
    ).scale(Fraction(1, 2) / (1 - y))
    part_b = (
        RationalSeries([1, -y], order) * ln_y
        - (RationalSeries([2 - y, -1], order) * ln_1).scale(y)
    ).scale(Fraction(1) / (1 - y) ** 2)
    part_c = (ln_y * ln_y - ln_1 * ln_1).scale(y / (2 * (1 - y)))
    return part_a + part_b + part_c


def total_ascents_gf(y: Rat, order: int) -> RationalSeries:
    """Exponential GF of per-last-letter ascent totals at fixed y."""
    y = Fraction(y)
    if y == 1:
        raise SingularParameterError("y = 1 is singular in this evaluation")
    if order < 1:
        raise ValueError("order must be at least 1")
    part_a = (
        RationalSeries([0, y], order)
        * (
            RationalSeries([2, -1], order) * geometric(1, order)
            - (RationalSeries([0, 1], order) * geometric(y, order)).scale(y * y)
        )
    ).scale(Fraction(1, 2) / (1 - y))
    part_b = (
        RationalSeries([1, -y], order) * log_ratio(y, order).scale(-1)
    ).scale(y / (1 - y) ** 2)
    return part_a + part_b


_TOTAL_GF_BUILDERS = {
    "area": (total_area_gf, "a", "p"),
    "levels": (total_levels_gf, "b", "p"),
    "descents": (total_descents_gf, "b", "q"),
    "ascents": (total_ascents_gf, "b", "r"),
}


def check_total_gfs(
    y: Rat,
    order: int,
    a_table: DistTable | None = None,
    b_table: DistTable | None = None,
) -> list[CheckResult]:
    """All four total-GF closed forms vs per-last-letter totals from the tables."""
    y = Fraction(y)
    if a_table is None:
        a_table = recur.a_table_lemma(order)
    if b_table is None:
        b_table = recur.b_table_lemma(order)
    tables = {"a": a_table, "b": b_table}
    results = []
    factorial = 1
    per_stat_series = {
        stat: builder(y, order) for stat, (builder, _, _) in _TOTAL_GF_BUILDERS.items()
    }
    for n in range(1, order + 1):
        factorial *= n
        for stat, (_, which, marker) in _TOTAL_GF_BUILDERS.items():
            by_last = recur.table_stat_total_by_last(tables[which], n, marker)
            expected = sum(
                (Fraction(total) * y ** j for j, total in by_last.items()),
                Fraction(0),
            )
            got = per_stat_series[stat].coeff(n) * factorial
            if got != expected:
                raise violation(f"total-{stat}-gf", f"n={n}", f"y={y}",
                                f"{got} != {expected}")
    for stat in _TOTAL_GF_BUILDERS:
        results.append(CheckResult(f"total-{stat}-gf", f"1<=n<={order}", f"y={y}"))
    return results


def check_last_letter_uniformity(nmax: int, table: DistTable | None = None) -> CheckResult:
    """With both markers at 1, row n is (n-1)! (y + y^2 + ... + y^n), exactly."""
    if nmax < 1:
        raise ValueError(f"nmax must be positive, got {nmax}")
    if table is None:
        table = recur.a_table_lemma(nmax)
    factorial = 1
    for n in range(1, nmax + 1):
        if n >= 2:
            factorial *= n - 1
        flat = row_poly(table, n).substitute("p", 1).substitute("q", 1)
        expected = MPoly.zero()
        for i in range(1, n + 1):
            expected = expected + MPoly.monomial(factorial, y=i)
        if flat != expected:
            raise violation("uniform-last-letter-rows", f"n={n}", "p=1,q=1",
                            f"{flat.to_text()} != {expected.to_text()}")
    return CheckResult("uniform-last-letter-rows", f"1<=n<={nmax}", "p=1,q=1")
