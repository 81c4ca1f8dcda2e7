"""Additive cellular automata over finite abelian groups.

A finite abelian group G splits as a product of primary cyclic factors
Z/p^k.  An additive CA over G (local rule a sum of endomorphisms applied to
the neighborhood) decomposes accordingly into one additive CA per prime, and
each single-prime component embeds into a *linear* CA over (Z/p^k1)^n, where
k1 is the largest exponent of that prime:

* elements embed coordinatewise by xi(h)^i = h^i * p^(k1 - k_i);
* the local endomorphisms delta_z turn into matrices with entries
  a_{i,j} = p^(k_j - k_i) * delta_z(e_j)^i, where a negative exponent means
  exact integer division (guaranteed by the homomorphism condition).

The embedding Xi (cellwise xi) intertwines the two global maps,
L o Xi = Xi o F, and the dynamical properties of F are read off the linear
automaton L: sensitivity is the OR over prime components, while injectivity,
surjectivity and transitivity are the ANDs.  The tests validate the whole
construction through the commutation identity rather than fixed literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lca import FiniteConfiguration, LcaRule, PropertyReport, analyze_rule
from .modring import factorize


class MalformedEndomorphismError(ValueError):
    """An integer matrix does not define an endomorphism of the group."""


@dataclass(frozen=True)
class AbelianGroup:
    """A finite abelian group presented as a product of primary cyclic factors.

    ``factors[i]`` is a prime power q_i >= 2 and the group is the product of
    the Z/q_i in the given order; elements are integer vectors with component
    i taken mod q_i.
    """

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(q) for q in self.factors)
        if not factors:
            raise ValueError("group needs at least one cyclic factor")
        for q in factors:
            mod = factorize(q)  # raises InvalidModulusError for q < 2
            if len(mod.factorization) != 1:
                raise ValueError(f"factor {q} is not a prime power; split it first")
        object.__setattr__(self, "factors", factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def order(self) -> int:
        total = 1
        for q in self.factors:
            total *= q
        return total

    def primes(self) -> tuple[int, ...]:
        return tuple(sorted({factorize(q).primes[0] for q in self.factors}))

    def prime_exponent(self, index: int) -> tuple[int, int]:
        """(p, k) with factors[index] == p^k."""
        ((p, k),) = factorize(self.factors[index]).factorization
        return p, k

    def reduce(self, vector: Sequence[int]) -> tuple[int, ...]:
        vector = tuple(int(v) for v in vector)
        if len(vector) != self.rank:
            raise ValueError(f"element needs {self.rank} components, got {len(vector)}")
        return tuple(v % q for v, q in zip(vector, self.factors))

    def elements(self):
        from itertools import product

        return product(*(range(q) for q in self.factors))


@dataclass(frozen=True)
class GroupEndomorphism:
    """An endomorphism of an AbelianGroup given by an integer matrix.

    Column j is the image of the j-th canonical generator, written in
    generator coordinates; entry (i, j) is stored mod factors[i].  For the
    matrix to define a homomorphism, entry (i, j) must be divisible by
    p^(k_i - k_j) whenever factors i and j share the prime p with k_i > k_j,
    and must vanish when the factors involve different primes.
    """

    group: AbelianGroup
    matrix: tuple

    def __post_init__(self) -> None:
        rank = self.group.rank
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        if len(rows) != rank or any(len(row) != rank for row in rows):
            raise MalformedEndomorphismError(f"matrix must be {rank}x{rank}")
        reduced = tuple(tuple(v % self.group.factors[i] for v in row)
                        for i, row in enumerate(rows))
        for i in range(rank):
            p_i, k_i = self.group.prime_exponent(i)
            for j in range(rank):
                p_j, k_j = self.group.prime_exponent(j)
                entry = reduced[i][j]
                if entry == 0:
                    continue
                if p_i != p_j:
                    raise MalformedEndomorphismError(
                        f"entry ({i},{j}) = {entry} maps a {p_j}-part into a {p_i}-part; "
                        "it must be 0")
                if k_i > k_j and entry % p_i ** (k_i - k_j):
                    raise MalformedEndomorphismError(
                        f"entry ({i},{j}) = {entry} must be divisible by "
                        f"{p_i}^{k_i - k_j} to define a homomorphism")
        object.__setattr__(self, "matrix", reduced)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        vec = self.group.reduce(vector)
        out = []
        for i, row in enumerate(self.matrix):
            acc = 0
            for j in range(self.group.rank):
                acc += row[j] * vec[j]
            out.append(acc % self.group.factors[i])
        return tuple(out)


@dataclass(frozen=True)
class AdditiveCaRule:
    """A radius-r additive CA on G^Z: F(c)_i = sum_z delta_z(c_{i+z})."""

    group: AbelianGroup
    radius: int
    endomorphisms: tuple

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise ValueError("radius must be >= 0")
        endos = tuple(self.endomorphisms)
        if len(endos) != 2 * self.radius + 1:
            raise ValueError(
                f"expected {2 * self.radius + 1} endomorphisms, got {len(endos)}")
        normalized = []
        for endo in endos:
            if not isinstance(endo, GroupEndomorphism):
                endo = GroupEndomorphism(self.group, endo)
            elif endo.group != self.group:
                raise ValueError("endomorphism attached to a different group")
            normalized.append(endo)
        object.__setattr__(self, "endomorphisms", tuple(normalized))

    def endo_at_offset(self, z: int) -> GroupEndomorphism:
        return self.endomorphisms[z + self.radius]

    def offsets(self) -> range:
        return range(-self.radius, self.radius + 1)


def step_additive(rule: AdditiveCaRule, config: FiniteConfiguration) -> FiniteConfiguration:
    """One synchronous update of the additive CA on a finite configuration."""
    group = rule.group
    if config.orders != group.factors:
        raise ValueError(f"configuration alphabet {config.orders} does not match {group.factors}")
    acc: dict[int, list[int]] = {}
    rank = group.rank
    for pos, vec in config.cells.items():
        for z in rule.offsets():
            image = rule.endo_at_offset(z).apply(vec)
            target = pos - z
            out = acc.get(target)
            if out is None:
                acc[target] = list(image)
            else:
                for i in range(rank):
                    out[i] = (out[i] + image[i]) % group.factors[i]
    return FiniteConfiguration(group.factors, acc)


def simulate_additive(rule: AdditiveCaRule, config: FiniteConfiguration,
                      steps: int) -> list[FiniteConfiguration]:
    out = [config]
    current = config
    for _ in range(steps):
        current = step_additive(rule, current)
        out.append(current)
    return out


# ---------------------------------------------------------------------------
# primary decomposition


@dataclass(frozen=True)
class PrimeComponent:
    """One prime-primary component of an additive CA.

    ``rule`` lives over the factors of the original group that belong to
    ``prime``, sorted by decreasing exponent; ``source_indices[i]`` is the
    original factor index of component coordinate i.
    """

    prime: int
    rule: AdditiveCaRule
    source_indices: tuple[int, ...]


def prime_components(rule: AdditiveCaRule) -> list[PrimeComponent]:
    """Split an additive CA along the primes of its group.

    The cross-prime blocks of every endomorphism are zero (enforced at
    construction), so restricting all matrices to each prime's coordinates
    loses nothing: the original CA is the direct product of the components.
    """
    group = rule.group
    components = []
    for p in group.primes():
        indices = [i for i in range(group.rank) if group.prime_exponent(i)[0] == p]
        # sort by decreasing exponent, stable on the original order
        indices.sort(key=lambda i: -group.prime_exponent(i)[1])
        sub_group = AbelianGroup(tuple(group.factors[i] for i in indices))
        endos = []
        for endo in rule.endomorphisms:
            endos.append(tuple(tuple(endo.matrix[a][b] for b in indices) for a in indices))
        components.append(PrimeComponent(
            prime=p,
            rule=AdditiveCaRule(sub_group, rule.radius, tuple(endos)),
            source_indices=tuple(indices),
        ))
    return components


def project_config(config: FiniteConfiguration, component: PrimeComponent) -> FiniteConfiguration:
    """Restrict a configuration over G to the coordinates of one component."""
    idx = component.source_indices
    return FiniteConfiguration(
        component.rule.group.factors,
        {pos: tuple(vec[i] for i in idx) for pos, vec in config.cells.items()},
    )


# ---------------------------------------------------------------------------
# embedding into a linear CA


def _require_single_prime(group: AbelianGroup) -> tuple[int, int]:
    primes = group.primes()
    if len(primes) != 1:
        raise ValueError("group mixes primes; take prime_components first")
    p = primes[0]
    k1 = max(group.prime_exponent(i)[1] for i in range(group.rank))
    return p, k1


def embed(group: AbelianGroup, element: Sequence[int]) -> tuple[int, ...]:
    """Coordinatewise embedding of a p-group into (Z/p^k1)^n.

    Component i is scaled by p^(k1 - k_i); the map is injective and additive,
    and its image is exactly the set of vectors whose i-th component is
    divisible by p^(k1 - k_i).
    """
    p, k1 = _require_single_prime(group)
    vec = group.reduce(element)
    out = []
    for i, v in enumerate(vec):
        _, k_i = group.prime_exponent(i)
        out.append((v * p ** (k1 - k_i)) % p**k1)
    return tuple(out)


def embed_config(group: AbelianGroup, config: FiniteConfiguration) -> FiniteConfiguration:
    """Cellwise embedding Xi of a configuration over G into one over (Z/p^k1)^n."""
    p, k1 = _require_single_prime(group)
    if config.orders != group.factors:
        raise ValueError("configuration does not live over the given group")
    orders = (p**k1,) * group.rank
    return FiniteConfiguration(
        orders, {pos: embed(group, vec) for pos, vec in config.cells.items()})


def in_embedding_image(group: AbelianGroup, config: FiniteConfiguration) -> bool:
    """Is a configuration over (Z/p^k1)^n cellwise inside Xi(G^Z)?"""
    p, k1 = _require_single_prime(group)
    for vec in config.cells.values():
        for i, v in enumerate(vec):
            _, k_i = group.prime_exponent(i)
            if v % p ** (k1 - k_i):
                return False
    return True


def unembed(group: AbelianGroup, vector: Sequence[int]) -> tuple[int, ...]:
    """Invert the embedding on its image: xi(unembed(v)) == v.

    Raises ValueError when some component is not divisible by the required
    power of p, i.e. the vector is outside xi(G).
    """
    p, k1 = _require_single_prime(group)
    vector = tuple(int(v) % p**k1 for v in vector)
    if len(vector) != group.rank:
        raise ValueError(f"vector needs {group.rank} components, got {len(vector)}")
    out = []
    for i, v in enumerate(vector):
        _, k_i = group.prime_exponent(i)
        scale = p ** (k1 - k_i)
        if v % scale:
            raise ValueError(f"component {i} = {v} is not a multiple of {scale}")
        out.append(v // scale)
    return tuple(out)


def associated_lca(rule: AdditiveCaRule) -> LcaRule:
    """The linear CA over (Z/p^k1)^n that extends a single-prime additive CA.

    Matrix entry (i, j) at offset z is p^(k_j - k_i) * delta_z(e_j)^i with the
    canonical representative of delta_z(e_j)^i in [0, p^k_i); when k_i > k_j
    the scaling is an exact integer division, guaranteed by the homomorphism
    condition.  Correctness is asserted through L o Xi = Xi o F in the tests.
    """
    group = rule.group
    p, k1 = _require_single_prime(group)
    modulus = p**k1
    rank = group.rank
    matrices = []
    for endo in rule.endomorphisms:
        rows = []
        for i in range(rank):
            _, k_i = group.prime_exponent(i)
            row = []
            for j in range(rank):
                _, k_j = group.prime_exponent(j)
                entry = endo.matrix[i][j]  # canonical in [0, p^k_i)
                if k_j >= k_i:
                    value = (entry * p ** (k_j - k_i)) % modulus
                else:
                    value = (entry // p ** (k_i - k_j)) % modulus
                row.append(value)
            rows.append(tuple(row))
        matrices.append(tuple(rows))
    return LcaRule(factorize(modulus), rank, rule.radius, tuple(matrices))


# ---------------------------------------------------------------------------
# decisions


def decide_properties(rule: AdditiveCaRule) -> PropertyReport:
    """Dynamical properties of an additive CA via its prime components.

    Each single-prime component delegates to the linear deciders through the
    embedding; the verdicts combine as OR for sensitivity and AND for
    injectivity, surjectivity and transitivity (a finite product of additive
    CA is transitive iff every factor is, transitivity and mixing being
    equivalent here).
    """
    components = prime_components(rule)
    reports = [(c.prime, analyze_rule(associated_lca(c.rule))) for c in components]
    sensitive = any(rep.sensitive for _, rep in reports)
    injective = all(rep.injective for _, rep in reports)
    surjective = all(rep.surjective for _, rep in reports)
    transitive = all(rep.transitive for _, rep in reports)
    notes: dict[str, str] = {}
    for prime, rep in reports:
        for key, text in rep.notes.items():
            notes[f"p={prime}: {key}"] = text
    return PropertyReport(
        sensitive=sensitive,
        equicontinuous=not sensitive,
        injective=injective,
        surjective=surjective,
        transitive=transitive,
        notes=notes,
    )
