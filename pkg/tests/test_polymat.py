"""Matrix invariants: Berkowitz vs minor sums, Cayley-Hamilton, companions."""

from __future__ import annotations

import random

import pytest

from addca.laurent import LaurentPoly, laurent_ring, parse_laurent
from addca.modring import zmod
from addca.polymat import (
    CharPoly,
    RingMatrix,
    cayley_hamilton_check,
    char_poly,
    char_poly_by_minor_sums,
    column_replace_det,
    determinant,
    frobenius_companion,
    identity,
    matrix_from_ints,
    principal_submatrix,
    zeros,
)

MODULI = [2, 3, 4, 6, 8]


def random_laurent_matrix(rng: random.Random, m: int, n: int, span: int = 1) -> RingMatrix:
    ring = laurent_ring(m)
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            coeffs = {e: rng.randrange(m) for e in range(-span, span + 1) if rng.random() < 0.6}
            row.append(LaurentPoly(ring.modulus, coeffs))
        rows.append(row)
    return RingMatrix(ring, rows)


def random_zmod_matrix(rng: random.Random, m: int, n: int) -> RingMatrix:
    ring = zmod(m)
    return matrix_from_ints(ring, [[rng.randrange(m) for _ in range(n)] for _ in range(n)])


def upper_shear_matrix(m: int) -> RingMatrix:
    # [[1, x], [0, 1]] over Z/m
    ring = laurent_ring(m)
    return RingMatrix(ring, [
        [ring.one(), ring.monomial(1)],
        [ring.zero(), ring.one()],
    ])


def test_shear_square_example():
    a = upper_shear_matrix(4)
    sq = a * a
    ring = laurent_ring(4)
    assert sq == RingMatrix(ring, [
        [ring.one(), ring.monomial(1, 2)],
        [ring.zero(), ring.one()],
    ])


def test_shear_char_poly_example():
    a = upper_shear_matrix(4)
    ring = laurent_ring(4)
    poly = char_poly(a)
    # (t - 1)^2 = t^2 - 2t + 1, canonically t^2 + 2t + 1 over Z/4
    assert poly.coeffs == (ring.one(), ring.from_int(2), ring.one())
    assert poly == char_poly(identity(ring, 2))


def test_antidiagonal_determinant_example():
    ring = laurent_ring(2)
    a = RingMatrix(ring, [
        [ring.zero(), ring.one()],
        [ring.monomial(1), ring.zero()],
    ])
    assert determinant(a) == ring.monomial(1)


def test_char_poly_trace_and_determinant_terms():
    rng = random.Random(7)
    for m in MODULI:
        for n in (1, 2, 3):
            a = random_zmod_matrix(rng, m, n)
            poly = char_poly(a)
            assert poly.degree == n
            assert poly.coeffs[n - 1] == -a.trace()
            det = determinant(a)
            sign_det = det if n % 2 == 0 else -det
            assert poly.coeffs[0] == sign_det


def test_berkowitz_equals_minor_sums_on_corpus():
    rng = random.Random(20260814)
    for _ in range(60):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 5)
        a = random_laurent_matrix(rng, m, n)
        assert char_poly(a) == char_poly_by_minor_sums(a)


def test_cayley_hamilton_on_corpus():
    rng = random.Random(5150)
    for _ in range(40):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 4)
        a = random_laurent_matrix(rng, m, n)
        assert cayley_hamilton_check(a)


def test_determinant_is_multiplicative():
    rng = random.Random(31337)
    for _ in range(40):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 4)
        a = random_laurent_matrix(rng, m, n)
        b = random_laurent_matrix(rng, m, n)
        assert determinant(a * b) == determinant(a) * determinant(b)


def test_submatrix_letter_layout():
    # 4x4 matrix with distinguishable entries 1..16; row set {2,4} and column
    # set {1,4} in 1-based labels pick out the corner entries of rows 2 and 4.
    ring = zmod(97)
    a = matrix_from_ints(ring, [
        [1, 2, 3, 4],
        [5, 6, 7, 8],
        [9, 10, 11, 12],
        [13, 14, 15, 16],
    ])
    sub = principal_submatrix(a, [1, 3], [0, 3])
    assert [[e.value for e in row] for row in sub.rows] == [[5, 8], [13, 16]]
    # index sets are sets: order of the labels must not matter
    assert principal_submatrix(a, [3, 1], [3, 0]) == sub
    with pytest.raises(ValueError):
        principal_submatrix(a, [0, 0], [1, 2])
    with pytest.raises(ValueError):
        principal_submatrix(a, [0, 4], [1, 2])


def test_empty_submatrix_has_unit_determinant():
    ring = zmod(6)
    a = matrix_from_ints(ring, [[1, 2], [3, 4]])
    assert determinant(principal_submatrix(a, [], [])) == ring.one()


def test_column_replacement_matches_principal_minor():
    rng = random.Random(77)
    for _ in range(25):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 5)
        a = random_laurent_matrix(rng, m, n)
        for mask in range(1 << n):
            subset = [i for i in range(n) if mask & (1 << i)]
            expected = determinant(principal_submatrix(a, subset, subset))
            assert column_replace_det(a, subset) == expected


def test_shifted_determinant_expansion():
    # det(A + x*I) = sum over principal subsets P of det(A_P) * x^(n - |P|)
    rng = random.Random(411)
    for _ in range(20):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 4)
        a = random_laurent_matrix(rng, m, n)
        ring = a.ring
        x = ring.monomial(1)
        shifted = a + identity(ring, n).scale(x)
        total = ring.zero()
        for mask in range(1 << n):
            subset = [i for i in range(n) if mask & (1 << i)]
            term = determinant(principal_submatrix(a, subset, subset))
            total = total + term * x ** (n - len(subset))
        assert determinant(shifted) == total


def test_companion_example():
    ring = laurent_ring(4)
    poly = CharPoly((ring.one(), ring.from_int(-2), ring.one()), ring)
    comp = frobenius_companion(poly)
    values = [[e.constant_value() for e in row] for row in comp.rows]
    assert values == [[0, 1], [3, 2]]
    assert char_poly(comp) == poly


def test_companion_round_trip_random():
    rng = random.Random(8888)
    for _ in range(30):
        m = rng.choice(MODULI)
        n = rng.randrange(1, 5)
        ring = laurent_ring(m)
        coeffs = []
        for _ in range(n):
            data = {e: rng.randrange(m) for e in range(-1, 2) if rng.random() < 0.5}
            coeffs.append(LaurentPoly(ring.modulus, data))
        coeffs.append(ring.one())
        poly = CharPoly(tuple(coeffs), ring)
        assert char_poly(frobenius_companion(poly)) == poly


def test_companion_requires_monic_nonconstant():
    ring = laurent_ring(4)
    with pytest.raises(ValueError):
        CharPoly((ring.from_int(2),), ring)  # not monic
    with pytest.raises(ValueError):
        frobenius_companion(CharPoly((ring.one(),), ring))  # degree 0


def test_minor_sum_guard():
    ring = zmod(2)
    big = zeros(ring, 13)
    with pytest.raises(ValueError):
        char_poly_by_minor_sums(big)


def test_triangular_determinant_is_diagonal_product():
    ring = laurent_ring(6)
    a = RingMatrix(ring, [
        [parse_laurent("2x + 1", ring.modulus), ring.monomial(-3), ring.from_int(5)],
        [ring.zero(), ring.monomial(2, 3), ring.one()],
        [ring.zero(), ring.zero(), ring.monomial(-1)],
    ])
    expected = parse_laurent("2x + 1", ring.modulus) * ring.monomial(2, 3) * ring.monomial(-1)
    assert determinant(a) == expected


def test_matrix_power_and_hash():
    ring = laurent_ring(4)
    a = upper_shear_matrix(4)
    assert a ** 4 == identity(ring, 2)
    assert a ** 0 == identity(ring, 2)
    assert hash(a * a) == hash(a ** 2)
