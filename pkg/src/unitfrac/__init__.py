"""Exact decomposition of n/p into sums of two unit fractions.

The central object is the equation n*x*y = p*(x+y) over positive
integers, equivalently n/p = 1/x + 1/y. For prime p coprime to n >= 2
the complete solution set is available in closed form (`solve`), every
emitted solution can be re-derived step by step (`derive_trace`), and
two independent general solvers (`brute_force`, `divisor_solve`) cover
arbitrary moduli and act as oracles for the closed form.
"""

from .arith import PRIMALITY_LIMIT, coprime, divisors, gcd, is_prime
from .closed_form import (
    Branch,
    CanonicalDecomposition,
    DerivationTrace,
    canonical_decomposition,
    classify,
    derive_trace,
    solve,
    verify,
)
from .egyptian import (
    DecompositionTable,
    Expansion,
    PositiveRational,
    UnitFraction,
    greedy,
    split,
    table,
)
from .errors import InternalCheckError, ValidationError
from .general import (
    Disagreement,
    brute_force,
    count,
    cross_check,
    divisor_solve,
)
from .model import Case, GeneralInstance, Pair, SolutionSet, SolveInstance

__version__ = "0.1.0"

__all__ = [
    "PRIMALITY_LIMIT",
    "Branch",
    "CanonicalDecomposition",
    "Case",
    "DecompositionTable",
    "DerivationTrace",
    "Disagreement",
    "Expansion",
    "GeneralInstance",
    "InternalCheckError",
    "Pair",
    "PositiveRational",
    "SolutionSet",
    "SolveInstance",
    "UnitFraction",
    "ValidationError",
    "brute_force",
    "canonical_decomposition",
    "classify",
    "coprime",
    "count",
    "cross_check",
    "derive_trace",
    "divisor_solve",
    "divisors",
    "gcd",
    "greedy",
    "is_prime",
    "solve",
    "split",
    "table",
    "verify",
]
