"""Partitions, the type C Weyl group, Kostant rows and Sp characters."""
from .characters import (
    NotACharacter,
    decompose,
    defining_character,
    dominant_character,
    exterior_multiplicity,
    exterior_power_character,
    invariant_dimension_tensor,
    multiply,
    sp_character,
    weyl_dim_sp,
)
from .partitions import Partition, partitions, pieri_shift, sp_shift
from .polyfit import InconsistentData, PolynomialFit, fit_polynomial
from .weyl import (
    KostantRow,
    SignedPermutation,
    Weight,
    coset_reps_WP,
    dot_action,
    kostant_cohomology,
    rho,
    symbolic_dot_action,
    trivial_summand_degrees,
)

__all__ = [
    "InconsistentData",
    "KostantRow",
    "NotACharacter",
    "Partition",
    "PolynomialFit",
    "SignedPermutation",
    "Weight",
    "coset_reps_WP",
    "decompose",
    "defining_character",
    "dominant_character",
    "dot_action",
    "exterior_multiplicity",
    "exterior_power_character",
    "fit_polynomial",
    "invariant_dimension_tensor",
    "kostant_cohomology",
    "multiply",
    "partitions",
    "pieri_shift",
    "rho",
    "sp_character",
    "sp_shift",
    "symbolic_dot_action",
    "trivial_summand_degrees",
    "weyl_dim_sp",
]
