"""Tests for the closed-form solver, verification, and derivation traces."""

import pytest

from unitfrac import closed_form, general
from unitfrac.closed_form import Branch, CanonicalDecomposition
from unitfrac.errors import ValidationError
from unitfrac.model import Case, GeneralInstance, SolveInstance

PRIMES_TO_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def test_classify_cases():
    assert closed_form.classify(SolveInstance(2, 5)) is Case.N_EQUALS_2
    assert closed_form.classify(SolveInstance(3, 5)) is Case.N_DIVIDES_P_PLUS_1
    assert closed_form.classify(SolveInstance(3, 7)) is Case.NO_SOLUTION


def test_classify_n_equals_2_wins_over_divisibility():
    # 2 divides p + 1 for every odd prime, but the three-solution case
    # still applies; the two-solution case needs n >= 3
    assert closed_form.classify(SolveInstance(2, 7)) is Case.N_EQUALS_2


def test_classify_smallest_prime():
    assert closed_form.classify(SolveInstance(3, 2)) is Case.N_DIVIDES_P_PLUS_1
    assert list(general.brute_force(GeneralInstance(3, 2)).pairs) == [(1, 2), (2, 1)]


def test_instance_validation_diagnostics_are_distinct():
    with pytest.raises(ValidationError, match="at least 2"):
        SolveInstance(1, 5)
    with pytest.raises(ValidationError, match="prime"):
        SolveInstance(2, 9)
    with pytest.raises(ValidationError, match="coprime"):
        SolveInstance(10, 5)
    with pytest.raises(ValidationError, match="positive"):
        SolveInstance(2, -7)


def test_solve_three_solution_case():
    solution = closed_form.solve(SolveInstance(2, 3))
    assert solution.case is Case.N_EQUALS_2
    assert list(solution.pairs) == [(2, 6), (3, 3), (6, 2)]


def test_solve_two_solution_case():
    solution = closed_form.solve(SolveInstance(3, 5))
    assert solution.case is Case.N_DIVIDES_P_PLUS_1
    assert list(solution.pairs) == [(2, 10), (10, 2)]


def test_solve_no_solution_case():
    solution = closed_form.solve(SolveInstance(4, 5))
    assert solution.case is Case.NO_SOLUTION
    assert solution.pairs == ()


def test_solve_p13_matches_enumeration():
    closed = closed_form.solve(SolveInstance(2, 13))
    assert list(closed.pairs) == [(7, 91), (13, 13), (91, 7)]
    enumerated = general.brute_force(GeneralInstance(2, 13))
    assert closed.pairs == enumerated.pairs


def test_particular_solutions_for_small_coefficients():
    # the classic particular solutions x = (p+1)/2, y = p*(p+1)/2 for
    # doubled products, and x = (p+1)/3, y = p*(p+1)/3 for tripled ones,
    # reappear inside the complete solution sets
    for p in (3, 5, 7, 11, 13, 97):
        pairs = closed_form.solve(SolveInstance(2, p)).pairs
        assert ((p + 1) // 2, p * (p + 1) // 2) in pairs
    for p in (2, 5, 11, 17, 23, 89):  # primes with 3 | p + 1
        pairs = closed_form.solve(SolveInstance(3, p)).pairs
        assert ((p + 1) // 3, p * (p + 1) // 3) in pairs


def test_verify_identities():
    assert closed_form.verify(SolveInstance(2, 3), (3, 3))
    assert 2 * 3 * 3 == 3 * (3 + 3) == 2 * 3**2
    assert closed_form.verify(SolveInstance(3, 5), (2, 10))
    assert 3 * 2 * 10 == 5 * (2 + 10) == 60
    assert not closed_form.verify(SolveInstance(2, 3), (4, 4))


def test_verify_rejects_non_positive_pairs():
    with pytest.raises(ValidationError):
        closed_form.verify(SolveInstance(2, 3), (0, 3))


def test_canonical_decomposition_examples():
    assert closed_form.canonical_decomposition((10, 2)) == (2, 5, 1)
    assert closed_form.canonical_decomposition((3, 3)) == (3, 1, 1)
    assert closed_form.canonical_decomposition((1, 1)) == (1, 1, 1)


def test_decomposition_turns_equation_into_product_form():
    # for a solution of n*x*y = p*(x+y), the parts satisfy
    # p*(u1 + u2) = n*d*u1*u2
    n, p = 3, 5
    for pair in closed_form.solve(SolveInstance(n, p)).pairs:
        d, u1, u2 = closed_form.canonical_decomposition(pair)
        assert p * (u1 + u2) == n * d * u1 * u2


def test_trace_branch_p_divides_u1():
    trace = closed_form.derive_trace(SolveInstance(2, 3), (6, 2))
    assert trace.decomposition == CanonicalDecomposition(2, 3, 1)
    assert trace.branch is Branch.P_DIVIDES_U1
    assert trace.v1 == 1
    assert trace.delta is None
    assert trace.eq8_check and not trace.eq12_check
    assert 1 * (2 * 2 - 1) == 3  # p = u2*(n*d - 1)


def test_trace_branch_p_divides_u2():
    trace = closed_form.derive_trace(SolveInstance(3, 5), (2, 10))
    assert trace.decomposition == CanonicalDecomposition(2, 1, 5)
    assert trace.branch is Branch.P_DIVIDES_U2
    assert trace.v1 == 1
    assert trace.eq8_check
    assert 1 * (3 * 2 - 1) == 5  # p = u1*(n*d - 1), indices swapped


def test_trace_branch_p_divides_d():
    trace = closed_form.derive_trace(SolveInstance(2, 3), (3, 3))
    assert trace.decomposition == CanonicalDecomposition(3, 1, 1)
    assert trace.branch is Branch.P_DIVIDES_D
    assert trace.v1 is None
    assert trace.delta == 1
    assert trace.eq12_check and not trace.eq8_check
    assert 2 * 1 == 2  # 2 = n*delta


def test_trace_rejects_non_solutions():
    with pytest.raises(ValidationError, match="does not solve"):
        closed_form.derive_trace(SolveInstance(2, 3), (4, 4))


def _closed_form_grid(p_limit=100, n_limit=30):
    for p in PRIMES_TO_100:
        if p > p_limit:
            break
        for n in range(2, n_limit + 1):
            if n % p != 0:
                yield SolveInstance(n, p)


def test_solution_sets_match_enumeration_on_grid():
    for inst in _closed_form_grid():
        closed = closed_form.solve(inst)
        enumerated = general.brute_force(GeneralInstance(inst.n, inst.p))
        assert closed.pairs == enumerated.pairs, inst
        assert closed.case is enumerated.case


def test_count_law_on_grid():
    for inst in _closed_form_grid():
        solution = closed_form.solve(inst)
        assert len(solution.pairs) == solution.case.solution_count, inst


def test_solution_set_invariants_on_grid():
    for inst in _closed_form_grid():
        pairs = closed_form.solve(inst).pairs
        assert list(pairs) == sorted(set(pairs))
        for x, y in pairs:
            assert inst.n * x * y - inst.p * (x + y) == 0
            assert (y, x) in pairs


def test_trace_totality_on_grid():
    for inst in _closed_form_grid():
        for pair in closed_form.solve(inst).pairs:
            trace = closed_form.derive_trace(inst, pair)
            assert trace.eq8_check or trace.eq12_check
            if trace.branch is Branch.P_DIVIDES_D:
                assert pair == (inst.p, inst.p)
                assert trace.delta == 1
            else:
                assert trace.v1 == 1
