"""Finiteness of matrix power sets: decision, orbits, divisibility witnesses."""

from __future__ import annotations

import random

import pytest

from addca import tpoly
from addca.laurent import LaurentPoly, laurent_ring
from addca.modring import zmod
from addca.polymat import RingMatrix, char_poly, frobenius_companion, identity, matrix_from_ints
from addca.power_semigroup import (
    BudgetExhausted,
    OrbitShape,
    decide_finite_powers,
    detect_orbit,
    divisibility_witness,
    idempotent_power,
    sampled_degree_growth,
)

MODULI = [2, 3, 4, 6, 8, 9, 12]


def random_laurent_matrix(rng: random.Random, m: int, n: int) -> RingMatrix:
    ring = laurent_ring(m)
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            coeffs = {e: rng.randrange(m) for e in (-1, 0, 1) if rng.random() < 0.6}
            row.append(LaurentPoly(ring.modulus, coeffs))
        rows.append(row)
    return RingMatrix(ring, rows)


def brute_force_power_set_size(matrix: RingMatrix, cap: int = 4096) -> int:
    """Oracle: enumerate powers into a set until the next one repeats."""
    seen = {identity(matrix.ring, matrix.n)}
    current = identity(matrix.ring, matrix.n)
    for _ in range(cap):
        current = current * matrix
        if current in seen:
            return len(seen)
        seen.add(current)
    raise AssertionError("power set did not close within the cap")


def upper_shear(m: int) -> RingMatrix:
    ring = laurent_ring(m)
    return RingMatrix(ring, [[ring.one(), ring.monomial(1)], [ring.zero(), ring.one()]])


def test_shear_power_set_has_four_elements():
    a = upper_shear(4)
    assert brute_force_power_set_size(a) == 4  # oracle
    orbit = detect_orbit(a)
    assert orbit == OrbitShape(0, 4)
    assert orbit.size == 4
    verdict = decide_finite_powers(a, orbit_budget=1000)
    assert verdict.finite and verdict.witness == orbit


def test_identity_power_set_is_singleton():
    ring = laurent_ring(4)
    ident = identity(ring, 2)
    assert detect_orbit(ident) == OrbitShape(0, 1)
    assert decide_finite_powers(ident).finite


def test_constant_shear_orbit_mod_4():
    ring = zmod(4)
    a = matrix_from_ints(ring, [[1, 1], [0, 1]])
    assert detect_orbit(a) == OrbitShape(0, 4)


def test_scalar_shift_matrix_is_infinite():
    for m in (4, 6):
        ring = laurent_ring(m)
        a = RingMatrix(ring, [[ring.monomial(1)]])
        verdict = decide_finite_powers(a)
        assert not verdict.finite
        assert verdict.failing_index == 0
        assert verdict.failing_prime == 2
        assert "a_0" in verdict.reason and "mod 2" in verdict.reason
        assert detect_orbit(a, budget=50) is None


def test_idempotent_exponent_examples():
    from addca.power_semigroup import _idempotent_exponent

    assert _idempotent_exponent(OrbitShape(3, 2)) == 4
    assert _idempotent_exponent(OrbitShape(0, 4)) == 4
    assert _idempotent_exponent(OrbitShape(0, 1)) == 1
    assert _idempotent_exponent(OrbitShape(5, 3)) == 6

    a = upper_shear(4)
    k = idempotent_power(a)
    assert k == 4
    assert a ** 4 == a ** 8


def test_idempotent_power_respects_budget():
    ring = laurent_ring(4)
    a = RingMatrix(ring, [[ring.monomial(1)]])
    with pytest.raises(BudgetExhausted):
        idempotent_power(a, budget=25)


def test_budget_exhaustion_is_indeterminate_not_infinite():
    a = upper_shear(4)
    # budget too small to close the 4-cycle: must answer None, not "infinite"
    assert detect_orbit(a, budget=3) is None
    verdict = decide_finite_powers(a, orbit_budget=3)
    assert verdict.finite and verdict.witness is None


def test_divisibility_witness_for_shear():
    a = upper_shear(4)
    k = divisibility_witness(a)
    assert k == 4
    # re-divide explicitly: t^(2k) - t^k must reduce to zero mod chi
    ring = a.ring
    chi = list(char_poly(a).coeffs)
    diff = tpoly.sub(tpoly.pow_t_mod(chi, 2 * k, ring), tpoly.pow_t_mod(chi, k, ring), ring)
    assert tpoly.is_zero(diff)


def test_divisibility_witness_budget_exhaustion():
    ring = laurent_ring(4)
    a = RingMatrix(ring, [[ring.monomial(1)]])
    assert divisibility_witness(a, budget=40) is None


def test_three_way_agreement_on_random_corpus():
    rng = random.Random(424242)
    finite_seen = infinite_seen = 0
    for _ in range(60):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 4)
        a = random_laurent_matrix(rng, m, n)
        verdict = decide_finite_powers(a)
        if verdict.finite:
            finite_seen += 1
            orbit = detect_orbit(a, budget=100_000)
            assert orbit is not None, f"finite verdict but no orbit: {a!r}"
            assert divisibility_witness(a, budget=100_000) is not None
            size = brute_force_power_set_size(a)
            assert size == orbit.size
        else:
            infinite_seen += 1
            assert detect_orbit(a, budget=24) is None
    assert finite_seen >= 8 and infinite_seen >= 8


def test_equal_char_poly_implies_equal_verdict():
    rng = random.Random(1701)
    for _ in range(25):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 4)
        a = random_laurent_matrix(rng, m, n)
        b = frobenius_companion(char_poly(a))
        assert char_poly(b) == char_poly(a)
        assert decide_finite_powers(a).finite == decide_finite_powers(b).finite


def test_degree_growth_profiles():
    ring = laurent_ring(4)
    shift = RingMatrix(ring, [[ring.monomial(1)]])
    profile = sampled_degree_growth(shift, doublings=5)
    assert profile == [1, 2, 4, 8, 16, 32]

    swap = RingMatrix(laurent_ring(2), [
        [laurent_ring(2).zero(), laurent_ring(2).one()],
        [laurent_ring(2).monomial(1), laurent_ring(2).zero()],
    ])
    profile = sampled_degree_growth(swap, doublings=5)
    assert profile == [1, 1, 2, 4, 8, 16]  # plateaus once, then doubles

    flat = sampled_degree_growth(upper_shear(4), doublings=3)
    assert max(flat) <= 1  # finite power set: no blow-up


def test_monic_remainder_helper():
    ring = laurent_ring(4)
    chi = [ring.one(), ring.from_int(-2), ring.one()]  # (t-1)^2
    assert tpoly.mod_monic([ring.zero(), ring.zero(), ring.one()], chi, ring) \
        == [ring.from_int(-1), ring.from_int(2)]  # t^2 = 2t - 1 mod (t-1)^2
    assert tpoly.pow_t_mod(chi, 0, ring) == [ring.one()]
    with pytest.raises(ValueError):
        tpoly.mod_monic([ring.one()], [ring.from_int(2), ring.from_int(2)], ring)
