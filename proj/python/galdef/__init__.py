"""Finite tame-quotient deformation obstruction calculator."""

from ._core import (
    InvalidParameters,
    DataError,
    TooLarge,
    __version__,
    ars_congruence_primes,
    check_standing,
    cohomology_dim,
    explicit_b,
    group_invariants,
    levelraise_h0,
    principal_series_nonzero,
    recipe_compare,
    steinberg_h0,
    sturm_bound,
    supercuspidal_vanishes,
)

__all__ = [
    "InvalidParameters",
    "DataError",
    "TooLarge",
    "__version__",
    "ars_congruence_primes",
    "check_standing",
    "cohomology_dim",
    "explicit_b",
    "group_invariants",
    "levelraise_h0",
    "principal_series_nonzero",
    "recipe_compare",
    "steinberg_h0",
    "sturm_bound",
    "supercuspidal_vanishes",
]
