"""Tests for splitting, greedy expansion, and table generation."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unitfrac import closed_form, egyptian
from unitfrac.egyptian import Expansion, PositiveRational, UnitFraction
from unitfrac.errors import ValidationError
from unitfrac.model import Case, SolveInstance


def test_split_examples():
    assert egyptian.split(1) == (UnitFraction(2), UnitFraction(2))
    assert egyptian.split(2) == (UnitFraction(3), UnitFraction(6))
    assert egyptian.split(5) == (UnitFraction(6), UnitFraction(30))


@given(st.integers(1, 10**9))
def test_split_is_exact(k):
    first, second = egyptian.split(k)
    assert Fraction(1, first.den) + Fraction(1, second.den) == Fraction(1, k)


def test_split_rejects_non_positive():
    with pytest.raises(ValidationError):
        egyptian.split(0)


def test_rational_reduces_at_construction():
    q = PositiveRational(2, 4)
    assert (q.num, q.den) == (1, 2)
    assert str(PositiveRational(10, 15)) == "2/3"
    with pytest.raises(ValidationError):
        PositiveRational(0, 3)
    with pytest.raises(ValidationError):
        PositiveRational(3, -1)


def test_expansion_validates_itself():
    q = PositiveRational(2, 7)
    with pytest.raises(ValidationError, match="strictly increase"):
        Expansion(q, (UnitFraction(4), UnitFraction(4)))
    with pytest.raises(ValidationError, match="sum"):
        Expansion(q, (UnitFraction(4), UnitFraction(29)))


def test_greedy_examples():
    assert [t.den for t in egyptian.greedy(PositiveRational(1, 5)).terms] == [5]
    assert [t.den for t in egyptian.greedy(PositiveRational(2, 7)).terms] == [4, 28]
    assert [t.den for t in egyptian.greedy(PositiveRational(7, 15)).terms] == [
        3, 8, 120]


def test_greedy_handles_values_between_one_and_two():
    assert [t.den for t in egyptian.greedy(PositiveRational(1, 1)).terms] == [1]
    assert [t.den for t in egyptian.greedy(PositiveRational(3, 2)).terms] == [1, 2]


def test_greedy_rejects_two_and_above():
    with pytest.raises(ValidationError, match="below 2"):
        egyptian.greedy(PositiveRational(2, 1))
    with pytest.raises(ValidationError, match="below 2"):
        egyptian.greedy(PositiveRational(5, 2))


@given(st.integers(1, 300), st.integers(1, 200))
def test_greedy_is_exact_with_decreasing_numerators(num, den):
    if num >= 2 * den:
        return
    q = PositiveRational(num, den)
    expansion = egyptian.greedy(q)
    dens = [t.den for t in expansion.terms]
    assert all(a < b for a, b in zip(dens, dens[1:]))
    remainder = q.as_fraction()
    for d in dens:
        new_remainder = remainder - Fraction(1, d)
        assert new_remainder >= 0
        if new_remainder:
            assert new_remainder.numerator < remainder.numerator
        remainder = new_remainder
    assert remainder == 0


def test_splitting_second_term_of_pair_decompositions():
    # any two-term decomposition extends to three terms by splitting the
    # smaller fraction; Expansion construction re-checks exactness
    for n, p in ((2, 3), (2, 13), (3, 5), (3, 2)):
        inst = SolveInstance(n, p)
        for x, y in closed_form.solve(inst).pairs:
            if x > y:
                continue
            first, second = egyptian.split(y)
            Expansion(
                PositiveRational(n, p),
                (UnitFraction(x), first, second),
            )


def test_splitting_second_term_of_greedy_expansions():
    for num, den in ((2, 7), (2, 9), (3, 4)):
        q = PositiveRational(num, den)
        terms = egyptian.greedy(q).terms
        assert len(terms) == 2
        first, second = egyptian.split(terms[1].den)
        Expansion(q, (terms[0], first, second))


def test_table_for_n2():
    tbl = egyptian.table(2, 3, 7)
    assert [inst.p for inst, _ in tbl.rows] == [3, 5, 7]
    assert [list(sol.pairs) for _, sol in tbl.rows] == [
        [(2, 6), (3, 3), (6, 2)],
        [(3, 15), (5, 5), (15, 3)],
        [(4, 28), (7, 7), (28, 4)],
    ]
    assert tbl.skipped_primes == ()


def test_table_single_rows():
    two_solutions = egyptian.table(3, 5, 5)
    assert len(two_solutions.rows) == 1
    assert list(two_solutions.rows[0][1].pairs) == [(2, 10), (10, 2)]
    empty = egyptian.table(3, 7, 7)
    assert len(empty.rows) == 1
    assert empty.rows[0][1].case is Case.NO_SOLUTION
    assert empty.rows[0][1].pairs == ()


def test_table_skips_primes_dividing_n():
    tbl = egyptian.table(6, 2, 7)
    assert tbl.skipped_primes == (2, 3)
    assert [inst.p for inst, _ in tbl.rows] == [5, 7]


def test_table_matches_direct_solve_calls():
    tbl = egyptian.table(4, 1, 40)
    for inst, sol in tbl.rows:
        assert sol == closed_form.solve(inst)


def test_table_empty_range():
    assert egyptian.table(2, 11, 7).rows == ()
    with pytest.raises(ValidationError):
        egyptian.table(1, 2, 10)
