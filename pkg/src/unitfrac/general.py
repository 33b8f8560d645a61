"""Independent solvers for n*x*y = m*(x+y) with arbitrary m >= 1.

Two methods that share no code path: direct enumeration over the finite
window that must contain min(x, y), and a factorization of the equation
as (n*x - m)*(n*y - m) = m^2 solved over divisor pairs of m^2. Each acts
as an oracle for the other and for the closed-form solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import arith, closed_form
from .model import Case, GeneralInstance, Pair, SolutionSet, SolveInstance


def _case_tag(inst: GeneralInstance) -> Case:
    # Reuse the closed-form classification when its hypotheses hold, so
    # the count it promises stays attached; anything else is GENERAL.
    n, m = inst.n, inst.m
    if n >= 2 and arith.coprime(n, m) and arith.is_prime(m):
        return closed_form.classify(SolveInstance(n, m))
    return Case.GENERAL


def _with_swaps(representatives: list[Pair]) -> tuple[Pair, ...]:
    pairs = set(representatives)
    pairs.update((y, x) for x, y in representatives)
    return tuple(sorted(pairs))


def brute_force(inst: GeneralInstance) -> SolutionSet:
    """Enumerate all solutions directly.

    If (x, y) is a solution with x <= y then 1/x carries at least half of
    n/m, so m/n < x <= 2m/n. For each x in that window, y = m*x/(n*x - m)
    is a solution exactly when the division is exact (the window makes
    the denominator positive). Swapped pairs are added afterwards.
    """
    n, m = inst.n, inst.m
    representatives = []
    for x in range(m // n + 1, 2 * m // n + 1):
        numerator = m * x
        denominator = n * x - m
        if numerator % denominator == 0:
            representatives.append((x, numerator // denominator))
    return SolutionSet(inst, _case_tag(inst), _with_swaps(representatives))


def divisor_solve(inst: GeneralInstance) -> SolutionSet:
    """Solve via the factorization (n*x - m)*(n*y - m) = m^2.

    Every divisor pair (a, b) of m^2 with a <= b yields a candidate
    x = (a + m)/n, y = (b + m)/n, valid exactly when both divisions are
    exact. Divisors a <= m enumerate each unordered pair once; swaps are
    added afterwards, so the result matches brute_force pair for pair.
    """
    n, m = inst.n, inst.m
    square = m * m
    representatives = []
    for a in arith.divisors(square):
        if a > m:
            break
        b = square // a
        if (a + m) % n == 0 and (b + m) % n == 0:
            representatives.append(((a + m) // n, (b + m) // n))
    return SolutionSet(inst, _case_tag(inst), _with_swaps(representatives))


def count(inst: GeneralInstance) -> int:
    """Number of ordered solutions, by direct enumeration."""
    return len(brute_force(inst).pairs)


@dataclass(frozen=True)
class Disagreement:
    """One instance where the two solvers returned different pair lists."""

    n: int
    m: int
    brute_pairs: tuple[Pair, ...]
    divisor_pairs: tuple[Pair, ...]


def cross_check(n_max: int, m_max: int) -> list[Disagreement]:
    """Run both solvers over n in [1, n_max], m in [1, m_max].

    Returns the instances where the ordered pair lists differ; an empty
    list certifies agreement over the whole grid.
    """
    arith.require_positive("n_max", n_max)
    arith.require_positive("m_max", m_max)
    disagreements = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            inst = GeneralInstance(n, m)
            brute = brute_force(inst).pairs
            divisor = divisor_solve(inst).pairs
            if brute != divisor:
                disagreements.append(Disagreement(n, m, brute, divisor))
    return disagreements
