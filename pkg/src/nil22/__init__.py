"""Exact enumeration of finite nilpotent groups of class <= 2 on <= 2 generators.

Three independent routes to the same counts, cross-checked against each
other: closed-form series expansion (series), normal-form label enumeration
(canonical), and brute-force orbit counting of ideal lattices under the
automorphism action (lattice, heisenberg, orbits).
"""

__version__ = "0.1.0"

from .canonical import (
    InvariantTuple,
    canonical_invariants,
    enumerate_tuples,
    tuple_text,
    tuple_to_matrix,
    weight,
)
from .errors import (
    BudgetExceeded,
    IncomparableLattices,
    InvalidAutomorphism,
    InvalidTuple,
    Nil22Error,
    NotAnIdeal,
    NotPPower,
    ReductionDiverged,
    SingularMatrix,
)
from .heisenberg import (
    AutElement,
    apply_aut,
    aut_generators,
    bracket,
    is_automorphism_shape,
    is_ideal_bracket,
)
from .lattice import (
    HnfMatrix,
    contains,
    enumerate_ideals,
    enumerate_sublattices,
    hnf,
    ideal_count,
    is_ideal_hnf,
    matrix_text,
    parse_matrix_text,
    row_hnf,
    sublattice_count,
    valuation,
)
from .orbits import OrbitPartition, count_isoclasses, orbit_partition, same_orbit
from .series import (
    GROWTH_CONSTANT,
    AsymptoticReport,
    GlobalCoefficients,
    LocalSeries,
    abelian_factor,
    global_coefficients,
    local_factor_closed_form,
    series_multiply,
    summatory,
)

__all__ = [
    "__version__",
    "AsymptoticReport",
    "AutElement",
    "BudgetExceeded",
    "GROWTH_CONSTANT",
    "GlobalCoefficients",
    "HnfMatrix",
    "IncomparableLattices",
    "InvalidAutomorphism",
    "InvalidTuple",
    "InvariantTuple",
    "LocalSeries",
    "Nil22Error",
    "NotAnIdeal",
    "NotPPower",
    "OrbitPartition",
    "ReductionDiverged",
    "SingularMatrix",
    "abelian_factor",
    "apply_aut",
    "aut_generators",
    "bracket",
    "canonical_invariants",
    "contains",
    "count_isoclasses",
    "enumerate_ideals",
    "enumerate_sublattices",
    "enumerate_tuples",
    "global_coefficients",
    "hnf",
    "ideal_count",
    "is_automorphism_shape",
    "is_ideal_bracket",
    "is_ideal_hnf",
    "local_factor_closed_form",
    "matrix_text",
    "orbit_partition",
    "parse_matrix_text",
    "row_hnf",
    "same_orbit",
    "series_multiply",
    "sublattice_count",
    "summatory",
    "tuple_text",
    "tuple_to_matrix",
    "valuation",
    "weight",
]
