"""Finiteness of the power set {A^0, A^1, A^2, ...} of a square matrix.

Over the Laurent ring (Z/mZ)[x, x^-1] the following are equivalent for a
square matrix A:

* the set of powers of A is finite;
* A is integral over the constants Z/mZ;
* every coefficient of det(tI - A) is integral over Z/mZ;
* t^(2k) - t^k is a multiple of det(tI - A) for some k >= 1.

The decision procedure used here is the third bullet: compute the
characteristic polynomial once and test each coefficient with the per-prime
constancy criterion.  The other two characterizations are kept around as
executable cross-checks: `detect_orbit` enumerates powers with Brent's cycle
detection, and `divisibility_witness` finds the exponent k of the last bullet
and verifies it by polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tpoly
from .laurent import LaurentPoly
from .modring import ResidueElement
from .polymat import RingMatrix, char_poly, identity

DEFAULT_BUDGET = 100_000


class BudgetExhausted(RuntimeError):
    """An enumeration did not finish within its step budget."""


@dataclass(frozen=True, slots=True)
class OrbitShape:
    """Eventual-cycle shape of the power sequence A^0, A^1, ...

    ``preperiod`` is the least q with A^(q+c) = A^q and ``period`` the least
    such c; the power set then has exactly q + c distinct elements.
    """

    preperiod: int
    period: int

    @property
    def size(self) -> int:
        return self.preperiod + self.period


@dataclass(frozen=True, slots=True)
class FinitenessVerdict:
    """Outcome of the finiteness decision for a matrix power set.

    When infinite, ``failing_index``/``failing_prime`` name the first
    characteristic-polynomial coefficient (lowest index) and smallest prime
    whose reduction is non-constant.  ``witness`` is an orbit shape when one
    was requested and found within budget.
    """

    finite: bool
    failing_index: int | None = None
    failing_prime: int | None = None
    witness: OrbitShape | None = None

    @property
    def reason(self) -> str:
        if self.finite:
            return "all characteristic-polynomial coefficients are integral over the constants"
        return (f"coefficient a_{self.failing_index} of the characteristic polynomial "
                f"is non-constant mod {self.failing_prime}")


def _coefficient_obstruction(coeff) -> tuple[int, None] | None:
    """Smallest prime p with coeff mod p non-constant, or None if integral."""
    if isinstance(coeff, ResidueElement):
        return None  # constants are trivially integral
    if isinstance(coeff, LaurentPoly):
        for p in coeff.modulus.primes:
            reduced = coeff.reduce_mod_prime(p)
            if not reduced.is_constant():
                return p
        return None
    raise TypeError(f"unsupported coefficient type {type(coeff).__name__}")


def decide_finite_powers(matrix: RingMatrix, orbit_budget: int | None = None) -> FinitenessVerdict:
    """Decide whether {A^0, A^1, ...} is finite, via coefficient integrality.

    The characteristic polynomial is computed division-free and each of the
    coefficients a_0 ... a_{n-1} is tested for integrality over Z/mZ (the
    leading coefficient is 1 and needs no test).  If ``orbit_budget`` is given
    and the verdict is finite, an explicit orbit shape is attached when Brent
    enumeration succeeds within that budget.
    """
    poly = char_poly(matrix)
    for index in range(poly.degree):
        prime = _coefficient_obstruction(poly.coeffs[index])
        if prime is not None:
            return FinitenessVerdict(False, failing_index=index, failing_prime=prime)
    witness = None
    if orbit_budget is not None:
        witness = detect_orbit(matrix, orbit_budget)
    return FinitenessVerdict(True, witness=witness)


def _brent_cycle(start, advance) -> OrbitShape | None:
    """Minimal (preperiod, period) of an eventually periodic sequence.

    ``advance`` maps a value to its successor and returns None once its step
    budget is spent; exhaustion propagates as a None result (indeterminate,
    never "infinite").
    """
    power = period = 1
    tortoise = start
    hare = advance(start)
    if hare is None:
        return None
    while tortoise != hare:
        if power == period:
            tortoise = hare
            power *= 2
            period = 0
        hare = advance(hare)
        if hare is None:
            return None
        period += 1
    front = start
    for _ in range(period):
        front = advance(front)
        if front is None:
            return None
    back = start
    preperiod = 0
    while back != front:
        back = advance(back)
        front = advance(front)
        if back is None or front is None:
            return None
        preperiod += 1
    return OrbitShape(preperiod, period)


def detect_orbit(matrix: RingMatrix, budget: int = DEFAULT_BUDGET) -> OrbitShape | None:
    """Brent cycle detection on A^0, A^1, A^2, ...

    Returns the minimal (preperiod, period), or None when the budget (counted
    in matrix multiplications) runs out.  A None is always "indeterminate":
    it never claims the power set is infinite.
    """
    mults = 0

    def step(value: RingMatrix) -> RingMatrix | None:
        nonlocal mults
        if mults >= budget:
            return None
        mults += 1
        return value * matrix

    return _brent_cycle(identity(matrix.ring, matrix.n), step)


def idempotent_power(matrix: RingMatrix, budget: int = DEFAULT_BUDGET) -> int:
    """Least k >= 1 with A^k = A^(2k), for matrices with finite power set.

    Derived from the orbit shape: the smallest multiple of the period that is
    >= max(preperiod, 1).  Raises BudgetExhausted when the orbit cannot be
    enumerated within budget.
    """
    orbit = detect_orbit(matrix, budget)
    if orbit is None:
        raise BudgetExhausted(f"no cycle found within {budget} multiplications")
    k = _idempotent_exponent(orbit)
    if matrix ** k != matrix ** (2 * k):
        raise AssertionError("orbit shape produced a non-idempotent exponent")
    return k


def _idempotent_exponent(orbit: OrbitShape) -> int:
    c = orbit.period
    lo = max(orbit.preperiod, 1)
    return c * ((lo + c - 1) // c)


def divisibility_witness(matrix: RingMatrix, budget: int = DEFAULT_BUDGET) -> int | None:
    """An exponent k >= 1 such that det(tI - A) divides t^(2k) - t^k.

    Runs Brent cycle detection on the residues t^j mod det(tI - A) in the
    quotient ring L[t]/(chi); since chi is monic the reduction needs no
    division.  The returned exponent is double-checked by explicitly reducing
    t^(2k) - t^k.  None means the budget ran out (residues of a non-integral
    matrix never cycle).
    """
    ring = matrix.ring
    chi = list(char_poly(matrix).coeffs)
    steps = 0

    def step(residue: tuple) -> tuple | None:
        nonlocal steps
        if steps >= budget:
            return None
        steps += 1
        shifted = [ring.zero(), *residue]
        return tuple(tpoly.mod_monic(shifted, chi, ring))

    orbit = _brent_cycle(tuple(tpoly.mod_monic([ring.one()], chi, ring)), step)
    if orbit is None:
        return None
    k = _idempotent_exponent(orbit)
    low = tpoly.pow_t_mod(chi, k, ring)
    high = tpoly.pow_t_mod(chi, 2 * k, ring)
    if not tpoly.is_zero(tpoly.sub(high, low, ring)):
        raise AssertionError("cycle detection produced a non-witness exponent")
    return k


def sampled_degree_growth(matrix: RingMatrix, doublings: int = 5) -> list[int]:
    """Max prime-aware degree of the entries of A, A^2, A^4, ..., A^(2^doublings).

    For matrices with infinite power set the mod-p degrees of the entries are
    unbounded, which shows up as growth along this doubling ladder; for finite
    power sets the profile stays flat.  Entries must be Laurent polynomials.
    """
    profile = []
    power = matrix
    for _ in range(doublings + 1):
        best = 0
        for row in power.rows:
            for entry in row:
                for p in entry.modulus.primes:
                    best = max(best, entry.pos_degree(p), -entry.neg_degree(p))
        profile.append(best)
        power = power * power
    return profile
