"""Square matrices over a commutative ring, with division-free invariants.

The application rings (Z/mZ and its Laurent extension) have zero divisors, so
none of the classical elimination schemes apply: there is no echelon form and
fraction-free tricks such as Bareiss still divide.  The characteristic
polynomial is therefore computed with the Berkowitz vector recurrence, which
uses ring operations only, and the determinant is read off its constant term.

As an independent cross-check, `char_poly_by_minor_sums` recomputes each
coefficient as a signed sum of principal minors; the minors themselves are
expanded by a subset-DP Laplace scheme that shares nothing with Berkowitz.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

MINOR_SUM_MAX_DIMENSION = 12


class RingMatrix:
    """Immutable dense square matrix over a ring handle.

    The ring handle only needs ``zero()`` and ``one()``; entries are expected
    to implement +, -, unary -, * and ==.  Dimension 0 is allowed so that
    empty principal submatrices make sense (their determinant is one).
    """

    __slots__ = ("ring", "n", "rows", "_hash")

    def __init__(self, ring, rows: Sequence[Sequence[Any]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.ring = ring
        self.n = n
        self.rows = rows
        self._hash: int | None = None

    def entry(self, i: int, j: int) -> Any:
        return self.rows[i][j]

    def _check(self, other: "RingMatrix") -> None:
        if self.n != other.n or self.ring != other.ring:
            raise ValueError("matrix dimensions or base rings do not match")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        return RingMatrix(self.ring, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        return RingMatrix(self.ring, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        ])

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.ring, [[-a for a in row] for row in self.rows])

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        self._check(other)
        n = self.n
        cols = tuple(zip(*other.rows)) if n else ()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return RingMatrix(self.ring, out)

    def scale(self, c: Any) -> "RingMatrix":
        return RingMatrix(self.ring, [[c * a for a in row] for row in self.rows])

    def __pow__(self, exponent: int) -> "RingMatrix":
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = identity(self.ring, self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def trace(self) -> Any:
        acc = self.ring.zero()
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.rows))
        return self._hash

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({self.n}x{self.n} over {self.ring})"


def identity(ring, n: int) -> RingMatrix:
    one, zero = ring.one(), ring.zero()
    return RingMatrix(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])


def zeros(ring, n: int) -> RingMatrix:
    zero = ring.zero()
    return RingMatrix(ring, [[zero] * n for _ in range(n)])


def matrix_from_ints(ring, rows: Sequence[Sequence[int]]) -> RingMatrix:
    return RingMatrix(ring, [[ring.from_int(v) for v in row] for row in rows])


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial; coeffs[k] is the coefficient of t^k."""

    coeffs: tuple
    ring: Any

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] != self.ring.one():
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate_at_matrix(self, matrix: RingMatrix) -> RingMatrix:
        """Horner evaluation of the polynomial at a square matrix."""
        acc = zeros(matrix.ring, matrix.n)
        ident = identity(matrix.ring, matrix.n)
        for coeff in reversed(self.coeffs):
            acc = acc * matrix + ident.scale(coeff)
        return acc

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == self.ring.zero():
                continue
            text = str(c)
            if k == 0:
                parts.append(f"({text})" if ("+" in text or " " in text) else text)
                continue
            t_part = "t" if k == 1 else f"t^{k}"
            if c == self.ring.one():
                parts.append(t_part)
            elif "+" in text or " " in text:
                parts.append(f"({text})*{t_part}")
            else:
                parts.append(f"{text}*{t_part}")
        return " + ".join(parts) if parts else "0"


def char_poly(matrix: RingMatrix) -> CharPoly:
    """Characteristic polynomial det(t*I - A) via the Berkowitz recurrence.

    Grows the leading principal submatrix one row at a time; at each stage the
    coefficient vector is multiplied by a Toeplitz matrix whose column is
    built from the new diagonal entry d, the border row R / column S and the
    Krylov products R M^k S.  Complexity O(n^4) ring operations, no division.
    """
    ring = matrix.ring
    one, zero = ring.one(), ring.zero()
    coeffs_desc = [one]  # char poly of the empty matrix
    for r in range(matrix.n):
        d = matrix.rows[r][r]
        row = matrix.rows[r][:r]
        col = [matrix.rows[i][r] for i in range(r)]
        toeplitz = [one, -d]
        vec = col
        for _ in range(r):
            acc = zero
            for a, b in zip(row, vec):
                acc = acc + a * b
            toeplitz.append(-acc)
            vec = [
                _dot(matrix.rows[i][:r], vec, zero) for i in range(r)
            ]
        new = [zero] * (r + 2)
        for i in range(r + 2):
            acc = zero
            for j in range(len(coeffs_desc)):
                k = i - j
                if 0 <= k < len(toeplitz):
                    acc = acc + toeplitz[k] * coeffs_desc[j]
            new[i] = acc
        coeffs_desc = new
    return CharPoly(tuple(reversed(coeffs_desc)), ring)


def _dot(a, b, zero):
    acc = zero
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def determinant(matrix: RingMatrix) -> Any:
    """det A = (-1)^n * a_0 where a_0 is the constant term of det(tI - A)."""
    a0 = char_poly(matrix).coeffs[0]
    return a0 if matrix.n % 2 == 0 else -a0


def principal_submatrix(matrix: RingMatrix, rows: Sequence[int], cols: Sequence[int]) -> RingMatrix:
    """Submatrix with the given (0-based) row and column index sets.

    Index sets are sorted first, matching the convention that a set of row
    and column labels, not their order, selects the submatrix.
    """
    rows = sorted(rows)
    cols = sorted(cols)
    if len(rows) != len(cols):
        raise ValueError("row and column index sets must have equal size")
    for idx in (*rows, *cols):
        if not 0 <= idx < matrix.n:
            raise ValueError(f"index {idx} out of range for dimension {matrix.n}")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("index sets must not contain repeats")
    return RingMatrix(matrix.ring, [[matrix.rows[i][j] for j in cols] for i in rows])


def _det_by_laplace_dp(matrix: RingMatrix) -> Any:
    """Determinant by Laplace expansion organized as a DP over column subsets.

    Exponential in principle but O(n * 2^n) in practice thanks to shared
    minors; independent of the Berkowitz path, which is the point.
    """
    n = matrix.n
    ring = matrix.ring
    if n == 0:
        return ring.one()
    level = {0: ring.one()}
    for r in range(n):
        row = matrix.rows[r]
        nxt: dict[int, Any] = {}
        for mask, val in level.items():
            for j in range(n):
                bit = 1 << j
                if mask & bit:
                    continue
                pos = bin(mask & (bit - 1)).count("1")
                term = row[j] * val
                if (r + pos) % 2:
                    term = -term
                new_mask = mask | bit
                if new_mask in nxt:
                    nxt[new_mask] = nxt[new_mask] + term
                else:
                    nxt[new_mask] = term
        level = nxt
    return level[(1 << n) - 1]


def char_poly_by_minor_sums(matrix: RingMatrix) -> CharPoly:
    """Oracle: coefficient of t^k is (-1)^(n-k) times the sum of the
    determinants of all principal (n-k) x (n-k) submatrices.

    Exists solely as an independent cross-check of `char_poly`; the minors go
    through the Laplace DP, never through Berkowitz.  Guarded to n <= 12.
    """
    n = matrix.n
    if n > MINOR_SUM_MAX_DIMENSION:
        raise ValueError(f"minor-sum expansion is limited to n <= {MINOR_SUM_MAX_DIMENSION}")
    ring = matrix.ring
    coeffs = [ring.zero()] * (n + 1)
    for mask in range(1 << n):
        subset = [i for i in range(n) if mask & (1 << i)]
        size = len(subset)
        det = _det_by_laplace_dp(principal_submatrix(matrix, subset, subset))
        k = n - size
        coeffs[k] = coeffs[k] + (det if size % 2 == 0 else -det)
    return CharPoly(tuple(coeffs), ring)


def column_replace_det(matrix: RingMatrix, cols: Sequence[int]) -> Any:
    """Determinant after replacing the columns *outside* ``cols`` by the
    matching identity columns.

    Expanding that determinant shows it equals the principal minor on
    ``cols``; the identity is exercised by the tests.
    """
    cols = set(cols)
    ring = matrix.ring
    one, zero = ring.one(), ring.zero()
    n = matrix.n
    build = [[matrix.rows[i][j] if j in cols else (one if i == j else zero)
              for j in range(n)] for i in range(n)]
    return determinant(RingMatrix(ring, build))


def cayley_hamilton_check(matrix: RingMatrix) -> bool:
    """True iff the matrix annihilates its own characteristic polynomial."""
    return char_poly(matrix).evaluate_at_matrix(matrix) == zeros(matrix.ring, matrix.n)


def frobenius_companion(poly: CharPoly) -> RingMatrix:
    """Companion matrix: ones on the superdiagonal, last row -a_0 ... -a_{n-1}.

    Its characteristic polynomial is the given monic polynomial, which makes
    it the canonical witness that every monic polynomial is a characteristic
    polynomial.
    """
    n = poly.degree
    if n < 1:
        raise ValueError("companion matrix needs degree >= 1")
    ring = poly.ring
    one, zero = ring.one(), ring.zero()
    rows = [[one if j == i + 1 else zero for j in range(n)] for i in range(n - 1)]
    rows.append([-poly.coeffs[j] for j in range(n)])
    return RingMatrix(ring, rows)
