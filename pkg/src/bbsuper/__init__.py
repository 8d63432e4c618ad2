"""Exact characters of highest-weight modules over generalized
Kac-Moody superalgebras with higher-level imaginary generators."""

__version__ = "0.1.0"

from .charformula import (
    CharacterResult,
    OrthogonalSupport,
    casimir_shift,
    character_result_to_json,
    eligible_indices,
    enumerate_supports,
    euler_phi,
    irreducible_character,
    is_primitive_candidate,
    numerator_series,
    odd_iso_coeffs,
    s_lambda_series,
)
from .datum import (
    OddCartanDatum,
    RootVector,
    Weight,
    datum_from_json,
    datum_to_json,
    height,
    validate_datum,
    weight_from_json,
    weight_to_json,
)
from .errors import (
    BBSuperError,
    BadDiagonal,
    BadGeneratorIndex,
    HeightMismatch,
    ImaginaryIndexReflection,
    IncompleteRootTable,
    NegativeMultiplicity,
    NonUnitConstantTerm,
    NotDominant,
    NotSymmetrizable,
    OddReParity,
    PositiveOffDiagonal,
    Unreachable,
)
from .roots import RootEntry, RootTable, roots_to_json, solve_multiplicities
from .series import (
    CharSeries,
    denominator_R,
    series_from_json,
    series_to_json,
    verma_character,
)
from .verma_oracle import (
    FMonomial,
    GramCell,
    OracleCaps,
    caps_from_env,
    enumerate_f_monomials,
    generic_dim,
    gram_matrix,
    irreducible_dim,
    lower_with_e,
    weight_window,
)
from .weyl import OrbitElement, act_on_root, orbit_frontier

__all__ = [
    "BBSuperError",
    "BadDiagonal",
    "BadGeneratorIndex",
    "CharSeries",
    "CharacterResult",
    "FMonomial",
    "GramCell",
    "HeightMismatch",
    "ImaginaryIndexReflection",
    "IncompleteRootTable",
    "NegativeMultiplicity",
    "NonUnitConstantTerm",
    "NotDominant",
    "NotSymmetrizable",
    "OddCartanDatum",
    "OddReParity",
    "OracleCaps",
    "OrbitElement",
    "OrthogonalSupport",
    "PositiveOffDiagonal",
    "RootEntry",
    "RootTable",
    "RootVector",
    "Unreachable",
    "Weight",
    "act_on_root",
    "caps_from_env",
    "casimir_shift",
    "character_result_to_json",
    "datum_from_json",
    "datum_to_json",
    "denominator_R",
    "eligible_indices",
    "enumerate_f_monomials",
    "enumerate_supports",
    "euler_phi",
    "generic_dim",
    "gram_matrix",
    "height",
    "irreducible_character",
    "irreducible_dim",
    "is_primitive_candidate",
    "lower_with_e",
    "numerator_series",
    "odd_iso_coeffs",
    "orbit_frontier",
    "roots_to_json",
    "s_lambda_series",
    "series_from_json",
    "series_to_json",
    "solve_multiplicities",
    "validate_datum",
    "verma_character",
    "weight_from_json",
    "weight_to_json",
    "weight_window",
    "__version__",
]
