"""Exact-arithmetic toolkit for local spectral data of parabolic Higgs bundles."""

from ._core import (
    __version__,
    census,
    conjugate,
    expected_polygon,
    experiment_registry,
    factor_spectral,
    flag_dimension,
    genericity_check,
    invert_unit,
    is_eisenstein,
    jordan_type_mod_t,
    level_function,
    local_delta,
    min_pair_sum,
    newton_polygon,
    ramification_profile,
    random_char_poly,
    resultant_valuation,
    run_campaign,
    sample_spectral_generic,
    sort_to_partition,
    verify_valuation_bounds,
    weyl_coset_count,
)

__all__ = [
    "__version__",
    "census",
    "conjugate",
    "expected_polygon",
    "experiment_registry",
    "factor_spectral",
    "flag_dimension",
    "genericity_check",
    "invert_unit",
    "is_eisenstein",
    "jordan_type_mod_t",
    "level_function",
    "local_delta",
    "min_pair_sum",
    "newton_polygon",
    "ramification_profile",
    "random_char_poly",
    "resultant_valuation",
    "run_campaign",
    "sample_spectral_generic",
    "sort_to_partition",
    "verify_valuation_bounds",
    "weyl_coset_count",
]
