"""Decision procedures for linear and additive cellular automata over Z/mZ.

The package decides sensitivity, equicontinuity, injectivity, surjectivity,
and transitivity for linear CA on (Z/mZ)^n, reduces additive CA over a finite
abelian group to that linear case via primary decomposition and an embedding,
and exposes the underlying matrix machinery (Laurent-polynomial matrices,
division-free characteristic polynomials, power-orbit detection).
"""

from .additive_ca import (
    AbelianGroup,
    AdditiveCaRule,
    GroupEndomorphism,
    MalformedEndomorphismError,
    PrimeComponent,
    associated_lca,
    decide_properties,
    embed,
    embed_config,
    in_embedding_image,
    prime_components,
    project_config,
    simulate_additive,
    step_additive,
    unembed,
)
from .laurent import LaurentPoly, LaurentRing, laurent_ring, parse_laurent
from .lca import (
    FiniteConfiguration,
    LcaRule,
    PropertyReport,
    analyze_rule,
    associated_matrix,
    basis_config,
    decide_injective,
    decide_sensitivity,
    decide_surjective,
    decide_transitive,
    render_trajectory,
    scalar_rule,
    simulate,
    spreads,
    step,
)
from .modring import (
    InvalidModulusError,
    Modulus,
    ResidueElement,
    RingMismatchError,
    ZmodRing,
    crt_combine,
    factorize,
    zmod,
)
from .polymat import (
    CharPoly,
    RingMatrix,
    char_poly,
    determinant,
    frobenius_companion,
    identity,
    matrix_from_ints,
    zeros,
)
from .power_semigroup import (
    BudgetExhausted,
    FinitenessVerdict,
    OrbitShape,
    decide_finite_powers,
    detect_orbit,
    divisibility_witness,
    idempotent_power,
    sampled_degree_growth,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AdditiveCaRule",
    "BudgetExhausted",
    "CharPoly",
    "FiniteConfiguration",
    "FinitenessVerdict",
    "GroupEndomorphism",
    "InvalidModulusError",
    "LaurentPoly",
    "LaurentRing",
    "LcaRule",
    "MalformedEndomorphismError",
    "Modulus",
    "OrbitShape",
    "PrimeComponent",
    "PropertyReport",
    "ResidueElement",
    "RingMatrix",
    "RingMismatchError",
    "ZmodRing",
    "analyze_rule",
    "associated_lca",
    "associated_matrix",
    "basis_config",
    "char_poly",
    "crt_combine",
    "decide_finite_powers",
    "decide_injective",
    "decide_properties",
    "decide_sensitivity",
    "decide_surjective",
    "decide_transitive",
    "determinant",
    "detect_orbit",
    "divisibility_witness",
    "embed",
    "embed_config",
    "factorize",
    "frobenius_companion",
    "idempotent_power",
    "identity",
    "in_embedding_image",
    "laurent_ring",
    "matrix_from_ints",
    "parse_laurent",
    "prime_components",
    "project_config",
    "render_trajectory",
    "sampled_degree_growth",
    "scalar_rule",
    "simulate",
    "simulate_additive",
    "spreads",
    "step",
    "step_additive",
    "unembed",
    "zeros",
    "__version__",
]
