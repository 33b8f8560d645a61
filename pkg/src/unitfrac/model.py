"""Domain types shared by the closed-form solver and the general solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import arith
from .errors import ValidationError

# One ordered solution (x, y) of n*x*y = m*(x+y).
Pair = tuple[int, int]


class Case(enum.Enum):
    """Which branch of the closed form governs an instance.

    GENERAL marks solution sets produced outside the closed form's
    hypotheses (n = 1, composite modulus, or gcd(n, m) > 1); no count
    guarantee attaches to it.
    """

    N_EQUALS_2 = "CaseI_NEquals2"
    N_DIVIDES_P_PLUS_1 = "CaseII_NDividesPPlus1"
    NO_SOLUTION = "CaseIII_NoSolution"
    GENERAL = "General"

    @property
    def solution_count(self) -> int | None:
        """Exact number of ordered solutions promised, or None for GENERAL."""
        return {
            Case.N_EQUALS_2: 3,
            Case.N_DIVIDES_P_PLUS_1: 2,
            Case.NO_SOLUTION: 0,
            Case.GENERAL: None,
        }[self]


@dataclass(frozen=True)
class SolveInstance:
    """A validated closed-form instance: n >= 2, p prime, gcd(n, p) = 1."""

    n: int
    p: int

    def __post_init__(self) -> None:
        arith.require_positive("n", self.n)
        arith.require_positive("p", self.p)
        if self.n < 2:
            raise ValidationError(
                f"n must be at least 2, got {self.n}; the general solver "
                f"accepts n = 1"
            )
        if not arith.is_prime(self.p):
            raise ValidationError(
                f"p must be prime, got {self.p}; composite moduli are "
                f"handled by the general solver"
            )
        if self.n % self.p == 0:
            raise ValidationError(
                f"n and p must be coprime, got p = {self.p} dividing "
                f"n = {self.n}; use the general solver for this instance"
            )


@dataclass(frozen=True)
class GeneralInstance:
    """An instance of n*x*y = m*(x+y) with no constraints beyond positivity."""

    n: int
    m: int

    def __post_init__(self) -> None:
        arith.require_positive("n", self.n)
        arith.require_positive("m", self.m)


@dataclass(frozen=True)
class SolutionSet:
    """The complete set of ordered solutions for one instance.

    Pairs are lexicographically sorted, duplicate-free, and closed under
    the swap (x, y) -> (y, x).
    """

    instance: SolveInstance | GeneralInstance
    case: Case
    pairs: tuple[Pair, ...]
