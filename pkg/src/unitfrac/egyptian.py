"""Unit-fraction utilities: splitting, greedy expansion, decomposition tables.

The splitting identity 1/k = 1/(k+1) + 1/(k*(k+1)) turns any unit
fraction into a sum of two; the greedy expansion turns any positive
rational below 2 into a sum of unit fractions with strictly increasing
denominators; and `table` tabulates the closed-form two-unit-fraction
decompositions of n/p across a range of primes p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import arith, closed_form
from .errors import ValidationError
from .model import SolutionSet, SolveInstance


class UnitFraction(NamedTuple):
    """The fraction 1/den."""

    den: int


@dataclass(frozen=True)
class PositiveRational:
    """A positive fraction, reduced to lowest terms at construction."""

    num: int
    den: int

    def __post_init__(self) -> None:
        arith.require_positive("num", self.num)
        arith.require_positive("den", self.den)
        g = math.gcd(self.num, self.den)
        if g > 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


@dataclass(frozen=True)
class Expansion:
    """A sum of distinct unit fractions equal to `source`.

    Construction checks both invariants: denominators strictly increase
    and the terms sum to the source exactly.
    """

    source: PositiveRational
    terms: tuple[UnitFraction, ...]

    def __post_init__(self) -> None:
        dens = [t.den for t in self.terms]
        if any(a >= b for a, b in zip(dens, dens[1:])):
            raise ValidationError(
                f"expansion denominators must strictly increase, got {dens}"
            )
        total = sum((Fraction(1, d) for d in dens), Fraction(0))
        if total != self.source.as_fraction():
            raise ValidationError(
                f"expansion terms sum to {total}, expected {self.source}"
            )


def split(k: int) -> tuple[UnitFraction, UnitFraction]:
    """Split 1/k into 1/(k+1) + 1/(k*(k+1)).

    The two parts are distinct except for k = 1, where both are 1/2.
    """
    if k < 1:
        raise ValidationError(f"k must be positive, got {k}")
    return UnitFraction(k + 1), UnitFraction(k * (k + 1))


def greedy(q: PositiveRational) -> Expansion:
    """Expand q < 2 into unit fractions, always taking the largest that fits.

    Each step subtracts 1/ceil(den/num) from the remainder. The remainder
    numerators strictly decrease, so the loop terminates, and each chosen
    denominator strictly exceeds the previous one. Values in [1, 2) start
    with the term 1/1; values of 2 or more are rejected, since they would
    need a repeated 1/1 term.
    """
    if q.num >= 2 * q.den:
        raise ValidationError(f"greedy expansion needs a value below 2, got {q}")
    denominators = []
    a, b = q.num, q.den
    while a:
        unit = -(-b // a)
        denominators.append(unit)
        a, b = a * unit - b, b * unit
        g = math.gcd(a, b)
        if g > 1:
            a //= g
            b //= g
    return Expansion(q, tuple(UnitFraction(d) for d in denominators))


@dataclass(frozen=True)
class DecompositionTable:
    """Closed-form solution sets for every prime modulus in a range.

    Primes dividing n fall outside the solver's hypotheses; they get no
    row and are listed in skipped_primes instead.
    """

    n: int
    p_min: int
    p_max: int
    rows: tuple[tuple[SolveInstance, SolutionSet], ...]
    skipped_primes: tuple[int, ...]


def table(n_fixed: int, p_min: int, p_max: int) -> DecompositionTable:
    """One row per prime p in [p_min, p_max] with p not dividing n_fixed.

    Rows are ordered by p and pair each instance with its solution set.
    An empty range yields an empty table.
    """
    arith.require_positive("n", n_fixed)
    arith.require_positive("p_min", p_min)
    arith.require_positive("p_max", p_max)
    if n_fixed < 2:
        raise ValidationError(f"n must be at least 2, got {n_fixed}")
    rows = []
    skipped = []
    for p in range(max(p_min, 2), p_max + 1):
        if not arith.is_prime(p):
            continue
        if n_fixed % p == 0:
            skipped.append(p)
            continue
        inst = SolveInstance(n_fixed, p)
        rows.append((inst, closed_form.solve(inst)))
    return DecompositionTable(n_fixed, p_min, p_max, tuple(rows), tuple(skipped))
