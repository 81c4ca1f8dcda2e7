"""One-dimensional linear cellular automata over (Z/mZ)^n.

A rule of radius r is given by 2r+1 matrices A_{-r}, ..., A_r over Z/mZ; the
global map sends configuration c to F(c)_i = sum_z A_z c_{i+z}.  Encoding a
configuration as the formal power series P_c(X) = sum_i c_i X^i turns F into
multiplication by the associated Laurent matrix

    A(X) = sum_z A_z X^(-z),

and every dynamical question handled here reduces to algebra on A(X):

* sensitivity/equicontinuity: F is equicontinuous iff the powers of A(X)
  form a finite set, i.e. iff A(X) is integral over Z/mZ (the dichotomy --
  there is nothing between equicontinuity and sensitivity);
* surjectivity: det A(X) must be nonzero mod every prime p | m;
* injectivity: det A(X) must be a single monomial mod every prime p | m;
* transitivity: F must be surjective and, for every prime p | m, the
  characteristic polynomial of A(X) mod p must be coprime in F_p(x)[t] with
  t^(p^i - 1) - 1 for i = 1..n.  Coprimality with that finite family rules
  out every eigenvalue that is a root of unity, which is exactly the
  obstruction to some F^k - I failing surjectivity.

The gcds over the rational function field F_p(x) are computed fraction-free:
x-denominators are cleared (x is a unit in the Laurent ring), and the
Euclidean descent uses pseudo-remainders with content stripping in F_p[x].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from . import tpoly
from .laurent import LaurentPoly, LaurentRing, laurent_ring
from .modring import Modulus, factorize
from .polymat import RingMatrix, char_poly, determinant
from .power_semigroup import decide_finite_powers


# ---------------------------------------------------------------------------
# rules and configurations


@dataclass(frozen=True)
class LcaRule:
    """A radius-r linear CA rule on (Z/mZ)^n: one n x n matrix per offset.

    ``matrices[k]`` is the matrix A_z for z = k - radius, entries canonical
    residues in [0, m).
    """

    modulus: Modulus
    n: int
    radius: int
    matrices: tuple

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("alphabet rank n must be >= 1")
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        mats = tuple(self.matrices)
        if len(mats) != 2 * self.radius + 1:
            raise ValueError(
                f"expected {2 * self.radius + 1} matrices for radius {self.radius}, got {len(mats)}"
            )
        m = self.modulus.m
        normalized = []
        for mat in mats:
            rows = tuple(tuple(int(v) % m for v in row) for row in mat)
            if len(rows) != self.n or any(len(row) != self.n for row in rows):
                raise ValueError(f"each local matrix must be {self.n}x{self.n}")
            normalized.append(rows)
        object.__setattr__(self, "matrices", tuple(normalized))

    def matrix_at_offset(self, z: int) -> tuple:
        return self.matrices[z + self.radius]

    def offsets(self) -> range:
        return range(-self.radius, self.radius + 1)


def scalar_rule(m: int, coefficients: Sequence[int]) -> LcaRule:
    """Convenience for n = 1: a rule from the 2r+1 scalar coefficients."""
    if len(coefficients) % 2 == 0:
        raise ValueError("need an odd number of coefficients (centered window)")
    radius = len(coefficients) // 2
    return LcaRule(factorize(m), 1, radius, tuple(((c,),) for c in coefficients))


class FiniteConfiguration:
    """A finitely supported configuration; cell i holds a vector mod orders.

    ``orders`` gives the modulus of each vector component (all equal to m for
    plain LCA configurations; additive-CA configurations reuse this class
    with mixed component orders).  Zero cells are never stored.
    """

    __slots__ = ("orders", "cells")

    def __init__(self, orders: Sequence[int],
                 cells: Mapping[int, Sequence[int]] | Iterable[tuple[int, Sequence[int]]] = ()):
        orders = tuple(int(o) for o in orders)
        items = cells.items() if isinstance(cells, Mapping) else cells
        data: dict[int, tuple[int, ...]] = {}
        for pos, vec in items:
            vec = tuple(vec)
            if len(vec) != len(orders):
                raise ValueError(f"cell at {pos} has {len(vec)} components, expected {len(orders)}")
            vec = tuple(int(v) % o for v, o in zip(vec, orders))
            if any(vec):
                data[int(pos)] = vec
        self.orders = orders
        self.cells = data

    @classmethod
    def single(cls, orders: Sequence[int], position: int, vector: Sequence[int]) -> "FiniteConfiguration":
        return cls(orders, {position: vector})

    def get(self, position: int) -> tuple[int, ...]:
        return self.cells.get(position, (0,) * len(self.orders))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.cells))

    def is_zero(self) -> bool:
        return not self.cells

    def max_abs_position(self) -> int:
        return max((abs(p) for p in self.cells), default=0)

    def shift(self, offset: int) -> "FiniteConfiguration":
        return FiniteConfiguration(self.orders,
                                   {p + offset: v for p, v in self.cells.items()})

    def scale(self, value: int) -> "FiniteConfiguration":
        return FiniteConfiguration(self.orders,
                                   {p: tuple(value * x for x in v) for p, v in self.cells.items()})

    def __add__(self, other: "FiniteConfiguration") -> "FiniteConfiguration":
        if self.orders != other.orders:
            raise ValueError("configurations live over different alphabets")
        out = dict(self.cells)
        for p, v in other.cells.items():
            if p in out:
                out[p] = tuple(a + b for a, b in zip(out[p], v))
            else:
                out[p] = v
        return FiniteConfiguration(self.orders, out)

    def __neg__(self) -> "FiniteConfiguration":
        return self.scale(-1)

    def __sub__(self, other: "FiniteConfiguration") -> "FiniteConfiguration":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteConfiguration):
            return NotImplemented
        return self.orders == other.orders and self.cells == other.cells

    def __hash__(self) -> int:
        return hash((self.orders, frozenset(self.cells.items())))

    def __repr__(self) -> str:
        return f"FiniteConfiguration(orders={self.orders}, cells={dict(sorted(self.cells.items()))})"


# ---------------------------------------------------------------------------
# semantics


def associated_matrix(rule: LcaRule) -> RingMatrix:
    """The Laurent matrix A(X) = sum_z A_z X^(-z) acting on power series."""
    ring = LaurentRing(rule.modulus)
    entries = [[dict() for _ in range(rule.n)] for _ in range(rule.n)]
    for z in rule.offsets():
        mat = rule.matrix_at_offset(z)
        for i in range(rule.n):
            for j in range(rule.n):
                if mat[i][j]:
                    exp = -z
                    cell = entries[i][j]
                    cell[exp] = (cell.get(exp, 0) + mat[i][j]) % rule.modulus.m
    rows = [[LaurentPoly(rule.modulus, entries[i][j]) for j in range(rule.n)]
            for i in range(rule.n)]
    return RingMatrix(ring, rows)


def step(rule: LcaRule, config: FiniteConfiguration) -> FiniteConfiguration:
    """One synchronous update F(c)_i = sum_z A_z c_{i+z}."""
    expected = (rule.modulus.m,) * rule.n
    if config.orders != expected:
        raise ValueError(f"configuration alphabet {config.orders} does not match rule {expected}")
    m = rule.modulus.m
    n = rule.n
    acc: dict[int, list[int]] = {}
    for pos, vec in config.cells.items():
        for z in rule.offsets():
            mat = rule.matrix_at_offset(z)
            target = pos - z
            out = acc.get(target)
            if out is None:
                out = [0] * n
                acc[target] = out
            for i in range(n):
                row = mat[i]
                total = 0
                for j in range(n):
                    total += row[j] * vec[j]
                out[i] = (out[i] + total) % m
    return FiniteConfiguration(config.orders, acc)


def basis_config(rule: LcaRule, index: int) -> FiniteConfiguration:
    """The configuration holding the standard basis vector e_index at cell 0."""
    if not 0 <= index < rule.n:
        raise ValueError(f"basis index {index} out of range for n={rule.n}")
    vec = [0] * rule.n
    vec[index] = 1
    return FiniteConfiguration.single((rule.modulus.m,) * rule.n, 0, vec)


def simulate(rule: LcaRule, config: FiniteConfiguration, steps: int) -> list[FiniteConfiguration]:
    """Trajectory [c, F(c), ..., F^steps(c)]."""
    out = [config]
    current = config
    for _ in range(steps):
        current = step(rule, current)
        out.append(current)
    return out


def spreads(rule: LcaRule, index: int, horizon: int, budget: int = 200) -> bool | None:
    """Semi-decide whether the basis perturbation e_index escapes [-horizon, horizon].

    Iterates the rule on basis_config(index) for up to ``budget`` steps and
    reports True at the first support excursion beyond the horizon.  None is
    indeterminate: no excursion was observed within the budget (in particular
    a perturbation that provably never moves still reports None).
    """
    current = basis_config(rule, index)
    for _ in range(budget):
        current = step(rule, current)
        if current.is_zero():
            return None
        if current.max_abs_position() > horizon:
            return True
    return None


# ---------------------------------------------------------------------------
# decision procedures


def decide_sensitivity(rule: LcaRule) -> tuple[bool, bool]:
    """(sensitive, equicontinuous) -- a strict dichotomy for linear CA.

    F is equicontinuous iff the associated matrix has a finite power set;
    otherwise F is sensitive to initial conditions.  Nothing in between.
    """
    verdict = decide_finite_powers(associated_matrix(rule))
    return (not verdict.finite, verdict.finite)


def decide_surjective(rule: LcaRule) -> bool:
    """Surjectivity: det A(X) must not vanish modulo any prime dividing m."""
    det = determinant(associated_matrix(rule))
    return all(not det.reduce_mod_prime(p).is_zero() for p in rule.modulus.primes)


def decide_injective(rule: LcaRule) -> bool:
    """Injectivity: det A(X) must be a single monomial modulo every prime p | m."""
    det = determinant(associated_matrix(rule))
    return all(len(det.reduce_mod_prime(p).support()) == 1 for p in rule.modulus.primes)


def decide_transitive(rule: LcaRule) -> bool:
    """Topological transitivity via the root-of-unity coprimality certificate.

    F is transitive iff it is surjective and no power F^k agrees with the
    identity anywhere it shouldn't, i.e. F^k - I stays surjective for all
    k >= 1.  det(A^k - I) mod p vanishes for some k exactly when chi_{A mod p}
    has a root of unity among its roots, and any such root lies in F_{p^i}
    with i <= n; hence the finite certificate gcd(chi, t^(p^i - 1) - 1) = 1
    for i = 1..n, computed in F_p(x)[t].
    """
    if not decide_surjective(rule):
        return False
    big = associated_matrix(rule)
    for p in rule.modulus.primes:
        ring_p = laurent_ring(p)
        reduced = RingMatrix(ring_p, [[entry.reduce_mod_prime(p) for entry in row]
                                      for row in big.rows])
        chi = list(char_poly(reduced).coeffs)
        for i in range(1, rule.n + 1):
            if not _coprime_with_t_power_minus_one(chi, p**i - 1, ring_p):
                return False
    return True


@dataclass
class PropertyReport:
    """Decision summary for one CA, with human-readable witness notes."""

    sensitive: bool
    equicontinuous: bool
    injective: bool
    surjective: bool
    transitive: bool
    notes: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "sensitive": self.sensitive,
            "equicontinuous": self.equicontinuous,
            "injective": self.injective,
            "surjective": self.surjective,
            "transitive": self.transitive,
            "notes": dict(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PropertyReport":
        return cls(
            sensitive=bool(data["sensitive"]),
            equicontinuous=bool(data["equicontinuous"]),
            injective=bool(data["injective"]),
            surjective=bool(data["surjective"]),
            transitive=bool(data["transitive"]),
            notes=dict(data.get("notes", {})),
        )


def analyze_rule(rule: LcaRule) -> PropertyReport:
    """Run all deciders on one rule and collect witness notes."""
    matrix = associated_matrix(rule)
    verdict = decide_finite_powers(matrix)
    det = determinant(matrix)
    notes = {"sensitivity": verdict.reason}
    monomial_counts = {p: len(det.reduce_mod_prime(p).support()) for p in rule.modulus.primes}
    notes["determinant"] = f"det A(X) = {det}"
    notes["injectivity"] = ", ".join(
        f"{count} monomial(s) mod {p}" for p, count in monomial_counts.items())
    surjective = all(count > 0 for count in monomial_counts.values())
    injective = all(count == 1 for count in monomial_counts.values())
    transitive = decide_transitive(rule)
    if transitive:
        notes["transitivity"] = (
            "surjective and chi mod p is coprime with t^(p^i-1) - 1 for all p | m, i <= n")
    elif not surjective:
        notes["transitivity"] = "not surjective"
    else:
        notes["transitivity"] = "chi mod p shares a root of unity with some t^(p^i-1) - 1"
    return PropertyReport(
        sensitive=not verdict.finite,
        equicontinuous=verdict.finite,
        injective=injective,
        surjective=surjective,
        transitive=transitive,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# gcd machinery over F_p(x)[t]


def _coprime_with_t_power_minus_one(chi: list, h: int, ring: LaurentRing) -> bool:
    """Is gcd(chi, t^h - 1) trivial over the fraction field F_p(x)?

    chi is monic, so t^h is first reduced in the quotient ring L[t]/(chi)
    (no division needed); the remaining gcd of two degree-<= n polynomials
    uses a pseudo-remainder descent.
    """
    g = tpoly.sub(tpoly.pow_t_mod(chi, h, ring), [ring.one()], ring)
    if tpoly.is_zero(g):
        return False  # chi divides t^h - 1 outright
    f = list(chi)
    while tpoly.degree(g) >= 1:
        r = _pseudo_remainder(f, g, ring)
        if tpoly.is_zero(r):
            return False  # g is a common factor of positive degree
        f, g = g, _strip_fp_content(r, ring)
    return True


def _pseudo_remainder(f: list, g: list, ring: LaurentRing) -> list:
    """prem(f, g): remainder of lc(g)^k * f modulo g, fraction-free."""
    out = list(f)
    dg = tpoly.degree(g)
    lc = g[-1]
    while tpoly.degree(out) >= dg:
        top = out.pop()
        out = [lc * c for c in out]
        shift = len(out) - dg
        for i in range(dg):
            out[shift + i] = out[shift + i] - top * g[i]
        out = tpoly.normalize(out, ring)
    return out


def _strip_fp_content(coeffs: list, ring: LaurentRing) -> list:
    """Divide a t-polynomial over F_p[x, x^-1] by the F_p[x]-content of its
    coefficients (and by common x-powers), to keep pseudo-remainders small."""
    p = ring.modulus.m
    shifted = []
    for c in coeffs:
        if c.is_zero():
            shifted.append(None)
            continue
        support = c.support()
        offset = support[0]
        dense = [0] * (support[-1] - offset + 1)
        for e, v in c.items():
            dense[e - offset] = v
        shifted.append(dense)
    content: list[int] | None = None
    for dense in shifted:
        if dense is None:
            continue
        content = dense if content is None else _fp_gcd(content, dense, p)
        if len(content) == 1:
            return coeffs  # unit content: nothing to strip
    if content is None or len(content) == 1:
        return coeffs
    out = []
    for c, dense in zip(coeffs, shifted):
        if dense is None:
            out.append(ring.zero())
            continue
        quotient = _fp_divexact(dense, content, p)
        offset = c.support()[0]
        out.append(LaurentPoly(ring.modulus,
                               {offset + i: v for i, v in enumerate(quotient) if v}))
    return out


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = (a[-1] * inv) % p
        k = len(a) - len(b)
        q[k] = c
        for i in range(len(b)):
            a[k + i] = (a[k + i] - c * b[i]) % p
        _fp_trim(a)
    return q, a


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        _, r = _fp_divmod(a, b, p)
        a, b = b, r
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def _fp_divexact(a: list[int], b: list[int], p: int) -> list[int]:
    q, r = _fp_divmod(list(a), b, p)
    if r:
        raise ArithmeticError("exact division expected")
    return q


# ---------------------------------------------------------------------------
# space-time rendering


def render_trajectory(trajectory: Sequence[FiniteConfiguration], window: int) -> str:
    """Plain-text space-time diagram: one row per time step, cells in [-W, W].

    Cell vectors are comma-joined digit groups; when every visible cell fits
    in one character the grid is printed without separators.
    """
    texts: list[list[str]] = []
    width = 1
    for config in trajectory:
        row = [",".join(str(v) for v in config.get(pos)) for pos in range(-window, window + 1)]
        width = max(width, max((len(t) for t in row), default=1))
        texts.append(row)
    if width == 1:
        return "\n".join("".join(row) for row in texts)
    return "\n".join(" ".join(t.rjust(width) for t in row) for row in texts)
