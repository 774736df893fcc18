"""Costas array constructions, Fibonacci primitive roots and prime censuses."""

from ._costas import (
    CostasError,
    artin_constant,
    build,
    census_g4,
    census_t4,
    enumerate_costas,
    exists_primitive_trinomial,
    find_collision,
    fpr_candidates,
    fpr_set,
    fpr_to_t4_root,
    g4_applicable,
    is_costas,
    methods,
    phong_check,
    predicted_constants,
    replay,
    t4_admissible,
    t4_applicable,
    trinomial_census,
    verify_zero_density_claims,
)

__all__ = [
    "CostasError",
    "artin_constant",
    "build",
    "census_g4",
    "census_t4",
    "enumerate_costas",
    "exists_primitive_trinomial",
    "find_collision",
    "fpr_candidates",
    "fpr_set",
    "fpr_to_t4_root",
    "g4_applicable",
    "is_costas",
    "methods",
    "phong_check",
    "predicted_constants",
    "replay",
    "t4_admissible",
    "t4_applicable",
    "trinomial_census",
    "verify_zero_density_claims",
]
