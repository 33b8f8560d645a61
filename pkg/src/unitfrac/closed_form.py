"""Closed-form solver for n*x*y = p*(x+y) with p prime and gcd(n, p) = 1.

The equation is equivalent to n/p = 1/x + 1/y, so solving it decomposes
n/p into a sum of two unit fractions. Under the hypotheses n >= 2,
p prime, gcd(n, p) = 1 the complete solution set is known in closed form
and falls into exactly one of three cases:

* n = 2 (coprimality then forces p >= 3): three solutions, (p, p) plus
  the pair ((p+1)/2, p*(p+1)/2) in both orders.
* n >= 3 and n divides p + 1: two solutions, ((p+1)/n, p*(p+1)/n) in
  both orders.
* n does not divide p + 1: no solutions.

Besides emitting the solutions, this module can re-derive any given
solution from first principles (`derive_trace`), producing a checked
certificate that the pair really is forced into one of the shapes above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple
import enum

from . import arith
from .errors import InternalCheckError, ValidationError
from .model import Case, Pair, SolutionSet, SolveInstance


class CanonicalDecomposition(NamedTuple):
    """A pair (x, y) written as (d*u1, d*u2) with d = gcd(x, y)."""

    d: int
    u1: int
    u2: int


class Branch(enum.Enum):
    """Which divisibility branch a derivation trace followed."""

    P_DIVIDES_U1 = "Case1a_PDividesU1"
    P_DIVIDES_U2 = "Case1b_PDividesU2"
    P_DIVIDES_D = "Case2_PDividesD"


@dataclass(frozen=True)
class DerivationTrace:
    """Checked replay of the derivation forcing one solution's shape.

    Exactly one of v1 (cofactor u/p on the p | u1 or p | u2 branch) and
    delta (cofactor d/p on the p | d branch) is set. eq8_check records
    that p = u*(n*d - 1) held on a Case-1 branch; eq12_check records that
    2 = n*delta held on the Case-2 branch. The flag for the branch not
    taken stays False.
    """

    decomposition: CanonicalDecomposition
    branch: Branch
    v1: int | None
    delta: int | None
    eq8_check: bool
    eq12_check: bool


def _require_pair(pair: Pair) -> tuple[int, int]:
    x, y = pair
    arith.require_positive("x", x)
    arith.require_positive("y", y)
    return x, y


def classify(inst: SolveInstance) -> Case:
    """Return the closed-form case governing a valid instance.

    For n = 2 the modulus is always an odd prime (gcd rules out p = 2),
    so the three-solution case applies; the two-solution case requires
    n >= 3 even though 2 divides p + 1 as well.
    """
    if inst.n == 2:
        return Case.N_EQUALS_2
    if (inst.p + 1) % inst.n == 0:
        return Case.N_DIVIDES_P_PLUS_1
    return Case.NO_SOLUTION


def verify(inst: SolveInstance, pair: Pair) -> bool:
    """True iff n*x*y = p*(x+y) holds exactly."""
    x, y = _require_pair(pair)
    return inst.n * x * y == inst.p * (x + y)


def solve(inst: SolveInstance) -> SolutionSet:
    """Emit the complete solution set for the instance, sorted by (x, y).

    Every pair is re-verified against the defining equation before the
    set is returned; a failure would mean an arithmetic bug and raises
    InternalCheckError.
    """
    case = classify(inst)
    p = inst.p
    if case is Case.N_EQUALS_2:
        half = (p + 1) // 2
        pairs = sorted(((p, p), (half, p * half), (p * half, half)))
    elif case is Case.N_DIVIDES_P_PLUS_1:
        q = (p + 1) // inst.n
        pairs = sorted(((q, p * q), (p * q, q)))
    else:
        pairs = []
    for candidate in pairs:
        if not verify(inst, candidate):
            raise InternalCheckError(
                f"closed-form pair {candidate} fails n*x*y = p*(x+y) for "
                f"n = {inst.n}, p = {p}"
            )
    return SolutionSet(inst, case, tuple(pairs))


def canonical_decomposition(pair: Pair) -> CanonicalDecomposition:
    """Split (x, y) into (d*u1, d*u2) with d = gcd(x, y), gcd(u1, u2) = 1."""
    x, y = _require_pair(pair)
    d = arith.gcd(x, y)
    return CanonicalDecomposition(d, x // d, y // d)


def derive_trace(inst: SolveInstance, pair: Pair) -> DerivationTrace:
    """Re-derive a known solution step by step and return the certificate.

    Writing the pair as (d*u1, d*u2) with gcd(u1, u2) = 1 turns the
    defining equation into p*(u1 + u2) = n*d*u1*u2. Since gcd(n, p) = 1,
    p must divide d*u1*u2, and exactly one branch applies:

    * p | u1: the cofactor v1 = u1/p divides both u1 and u2, hence
      v1 = 1, and the equation collapses to p = u2*(n*d - 1).
    * p | u2: symmetric, collapsing to p = u1*(n*d - 1).
    * p | d: u1 and u2 must divide each other, hence u1 = u2 = 1, and
      with delta = d/p the equation collapses to 2 = n*delta. The pair
      itself is then (d, d) = (p, p), since delta = 1 follows.

    A pair that does not solve the equation raises ValidationError. Any
    failed branch condition raises InternalCheckError, because genuine
    solutions cannot escape these collapses.
    """
    x, y = _require_pair(pair)
    n, p = inst.n, inst.p
    if not verify(inst, pair):
        raise ValidationError(
            f"({x}, {y}) does not solve {n}*x*y = {p}*(x+y); nothing to derive"
        )
    dec = canonical_decomposition(pair)
    d, u1, u2 = dec
    hits = [u1 % p == 0, u2 % p == 0, d % p == 0]
    if sum(hits) != 1:
        raise InternalCheckError(
            f"expected exactly one of p | u1, p | u2, p | d for "
            f"(d, u1, u2) = {dec} with p = {p}, found {sum(hits)}"
        )

    if hits[2]:
        delta = d // p
        if u1 != 1 or u2 != 1:
            raise InternalCheckError(
                f"p | d forces u1 = u2 = 1, got (u1, u2) = ({u1}, {u2})"
            )
        if n * delta != 2:
            raise InternalCheckError(
                f"p | d forces 2 = n*delta, got n = {n}, delta = {delta}"
            )
        return DerivationTrace(dec, Branch.P_DIVIDES_D, None, delta, False, True)

    if hits[0]:
        branch, multiple, other = Branch.P_DIVIDES_U1, u1, u2
    else:
        branch, multiple, other = Branch.P_DIVIDES_U2, u2, u1
    v1 = multiple // p
    if v1 != 1:
        raise InternalCheckError(
            f"cofactor of the p-divisible part must be 1, got {v1} "
            f"for (d, u1, u2) = {dec} with p = {p}"
        )
    if other * (n * d - 1) != p:
        raise InternalCheckError(
            f"p = u*(n*d - 1) fails: {other} * ({n}*{d} - 1) != {p}"
        )
    return DerivationTrace(dec, branch, v1, None, True, False)
