from itertools import permutations
from math import factorial

import pytest

from invbargraph import invseq
from invbargraph.mpoly import MPoly, P, Q, R, T, Y
from invbargraph.recur import (
    DistTable,
    HarmonicInteger,
    NonDivisibleError,
    a_table_lemma,
    a_table_threeterm,
    b_table_lemma,
    b_table_threeterm,
    bn_poly_recurrence,
    check_an_functional,
    check_sign_balance,
    check_stirling_eulerian,
    divide_exact_one_minus_y,
    eulerian,
    row_poly,
    stirling_first,
    table_stat_total,
    table_stat_total_by_last,
    total_area,
    total_ascents,
    total_descents,
    total_levels,
    total_sper,
)
from invbargraph.reporting import IdentityViolationError


def mono(c=1, **kw):
    return MPoly.monomial(c, **kw)


# -- area / sper tables -----------------------------------------------------------


def test_a_lemma_small_cells():
    table = a_table_lemma(3)
    assert table[1, 1] == mono(p=1, q=2)
    assert table[2, 2] == mono(p=3, q=4)
    assert table[3, 1] == mono(p=3, q=4) * (MPoly.one() + P * Q)


def test_a_threeterm_small_cells():
    table = a_table_threeterm(3)
    assert table[2, 1] == mono(p=2, q=3)
    assert table[3, 3] == mono(p=5, q=6) * (MPoly.one() + P)


def test_a_row_polys_match_printed_rows():
    table = a_table_lemma(3)
    assert row_poly(table, 1) == mono(y=1, p=1, q=2)
    assert row_poly(table, 2) == mono(y=1, p=2, q=3) + mono(y=2, p=3, q=4)
    expected3 = (
        mono(y=1, p=3, q=4) * (MPoly.one() + P * Q)
        + mono(y=2, p=4, q=5) * (MPoly.one() + P)
        + mono(y=3, p=5, q=6) * (MPoly.one() + P)
    )
    assert row_poly(table, 3) == expected3


def test_a_engines_agree(a_lemma_8, a_three_8, a_brute_8):
    assert a_lemma_8 == a_three_8
    assert a_lemma_8 == a_brute_8


def test_an_functional_identity(a_lemma_8):
    assert check_an_functional(8, a_lemma_8).status == "pass"


def test_an_functional_detects_corruption(a_lemma_8):
    bad = a_lemma_8.with_cell(4, 2, a_lemma_8[4, 2] + MPoly.one())
    with pytest.raises(IdentityViolationError):
        check_an_functional(8, bad)


# -- lda tables --------------------------------------------------------------------


def test_b_lemma_small_cells():
    table = b_table_lemma(3)
    assert table[2, 2] == R
    assert table[3, 1] == mono(p=2) + mono(q=1, r=1)


def test_b_threeterm_small_cells():
    table = b_table_threeterm(3)
    assert table[3, 2] == mono(2, p=1, r=1)
    assert table[3, 3] == R * (P + R)


def test_b_engines_agree(b_lemma_9, b_three_9, b_brute_9):
    assert b_lemma_9 == b_three_9
    assert b_lemma_9 == b_brute_9


def test_bn_poly_recurrence_matches_rows(b_lemma_9):
    rows = bn_poly_recurrence(9)
    assert rows[0] == Y
    assert rows[1] == mono(y=1, p=1) + mono(y=2, r=1)
    expected3 = (
        Y * (Q * R + P * P) + mono(2, y=2, p=1, r=1) + mono(1, y=3) * R * (P + R)
    )
    assert rows[2] == expected3
    for n in range(1, 10):
        assert rows[n - 1] == row_poly(b_lemma_9, n)


def test_divide_exact():
    num = P * (MPoly.one() - Y)
    assert divide_exact_one_minus_y(num) == P
    with pytest.raises(NonDivisibleError):
        divide_exact_one_minus_y(P)
    with pytest.raises(NonDivisibleError):
        divide_exact_one_minus_y(mono(y=-1) - mono(y=-1, p=1))


# -- totals ------------------------------------------------------------------------


FROZEN_TOTALS = {
    # n: (area, sper, levels, descents, ascents), from direct enumeration
    1: (1, 2, 0, 0, 0),
    2: (5, 7, 1, 0, 1),
    3: (27, 31, 5, 1, 6),
    4: (168, 168, 26, 10, 36),
}


@pytest.mark.parametrize("n,expected", FROZEN_TOTALS.items())
def test_total_closed_forms_frozen(n, expected):
    got = (total_area(n), total_sper(n), total_levels(n), total_descents(n), total_ascents(n))
    assert got == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_totals_match_brute(n):
    brute = invseq.brute_stat_totals(n)
    assert brute["area"] == total_area(n)
    assert brute["sper"] == total_sper(n)
    assert brute["levels"] == total_levels(n)
    assert brute["descents"] == total_descents(n)
    assert brute["ascents"] == total_ascents(n)


def test_totals_consistency():
    for n in range(1, 9):
        assert total_levels(n) + total_descents(n) + total_ascents(n) == (n - 1) * factorial(n)


def test_weighted_extraction_equals_closed_forms(a_lemma_8, b_lemma_9):
    for n in range(1, 9):
        assert table_stat_total(a_lemma_8, n, "p") == total_area(n)
        assert table_stat_total(a_lemma_8, n, "q") == total_sper(n)
    for n in range(1, 10):
        assert table_stat_total(b_lemma_9, n, "p") == total_levels(n)
        assert table_stat_total(b_lemma_9, n, "q") == total_descents(n)
        assert table_stat_total(b_lemma_9, n, "r") == total_ascents(n)


def test_row_sums_are_factorials(a_brute_8, b_brute_9):
    for n in range(1, 9):
        assert a_brute_8.row_sum(n).eval_rational({"p": 1, "q": 1}) == factorial(n)
    for n in range(1, 10):
        assert b_brute_9.row_sum(n).eval_rational({"p": 1, "q": 1, "r": 1}) == factorial(n)


def test_per_last_letter_totals_sum(a_lemma_8):
    by_last = table_stat_total_by_last(a_lemma_8, 5, "p")
    assert sum(by_last.values()) == total_area(5)
    assert set(by_last) == set(range(1, 6))


def test_harmonic_integer():
    assert HarmonicInteger.of(1).value == 1
    assert HarmonicInteger.of(3).value == 11  # 6 + 3 + 2
    for n in range(1, 10):
        assert HarmonicInteger.of(n).value == sum(factorial(n) // i for i in range(1, n + 1))


# -- Stirling / Eulerian oracles ------------------------------------------------------


def _count_cycles(word):
    seen, cycles = set(), 0
    for start in word:
        if start in seen:
            continue
        cycles += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = word[v - 1]
    return cycles


@pytest.mark.parametrize("n", range(1, 6))
def test_stirling_against_direct_count(n):
    from collections import Counter

    counts = Counter(_count_cycles(w) for w in permutations(range(1, n + 1)))
    for k in range(1, n + 1):
        assert stirling_first(n, k) == counts.get(k, 0)


@pytest.mark.parametrize("n", range(1, 6))
def test_eulerian_against_direct_count(n):
    from collections import Counter

    def ascents(word):
        return sum(1 for a, b in zip(word, word[1:]) if a < b)

    counts = Counter(ascents(w) for w in permutations(range(1, n + 1)))
    for k in range(n):
        assert eulerian(n, k) == counts.get(k, 0)


def test_stirling_eulerian_frozen_rows():
    assert [stirling_first(3, k) for k in (1, 2, 3)] == [2, 3, 1]
    assert [eulerian(3, k) for k in (0, 1, 2)] == [1, 4, 1]
    assert [stirling_first(4, k) for k in (1, 2, 3, 4)] == [6, 11, 6, 1]
    assert [eulerian(4, k) for k in (0, 1, 2, 3)] == [1, 11, 11, 1]
    assert all(stirling_first(n, n) == 1 for n in range(1, 9))


def test_index_guards():
    with pytest.raises(ValueError):
        stirling_first(3, 0)
    with pytest.raises(ValueError):
        stirling_first(3, 4)
    with pytest.raises(ValueError):
        eulerian(3, 3)
    with pytest.raises(ValueError):
        eulerian(3, -1)


def test_check_stirling_eulerian(b_lemma_9):
    results = check_stirling_eulerian(9, b_lemma_9)
    assert all(r.status == "pass" for r in results)


def test_check_stirling_eulerian_detects_corruption(b_lemma_9):
    bad = b_lemma_9.with_cell(5, 1, b_lemma_9[5, 1] + P)
    with pytest.raises(IdentityViolationError):
        check_stirling_eulerian(9, bad)


# -- sign balance --------------------------------------------------------------------


def test_check_sign_balance(a_lemma_8, b_lemma_9):
    results = check_sign_balance(8, a_lemma_8, b_lemma_9)
    assert all(r.status == "pass" for r in results)


def test_sign_balance_small_evaluations(a_lemma_8, b_lemma_9):
    a3 = row_poly(a_lemma_8, 3)
    assert a3.substitute("p", 1).substitute("q", -1) == mono(2, y=3) - mono(2, y=2)
    assert a3.substitute("p", -1).substitute("q", 1) == MPoly.zero()
    b2 = row_poly(b_lemma_9, 2)
    expected = mono(1, y=2, t=1) - mono(1, y=1, t=1)
    assert b2.substitute("p", mono(-1, t=1)).substitute("q", T).substitute("r", T) == expected


def test_sign_balance_range_starts_at_three(a_lemma_8):
    # at n = 2 the p-evaluation does NOT vanish (the closed forms start at n = 3),
    # while the q-evaluation happens to match the n >= 3 pattern
    a2 = row_poly(a_lemma_8, 2)
    assert a2.substitute("p", -1).substitute("q", 1) != MPoly.zero()
    assert a2.substitute("p", 1).substitute("q", -1) == mono(1, y=2) - mono(1, y=1)


# -- serialization ---------------------------------------------------------------------


def test_table_csv_round_trip(b_lemma_9):
    text = b_lemma_9.to_csv()
    assert DistTable.from_csv(text) == b_lemma_9
    first = text.splitlines()[0]
    assert first == "1,1,1"


def test_table_json_round_trip(a_lemma_8):
    assert DistTable.from_json(a_lemma_8.to_json()) == a_lemma_8
