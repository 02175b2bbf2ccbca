"""Scaled planar reflections: canonical forms, orbits, stable sets, trace pairing."""

from .core import (
    DEFAULT_TOL,
    ORIGIN,
    NotOrthogonalError,
    NotSymmetricError,
    NotTraceZeroError,
    Orthogonal2,
    OrthogonalVariant,
    Point2,
    Tolerance,
    TraceZeroSym2,
    classify_orthogonal,
    corollary_witness,
    decompose,
    matrix_from_params,
    mod_2pi,
)
from .dynamics import (
    ConvergenceVerdict,
    ConvergesTo,
    DivergesToInfinity,
    Finite,
    Infinite,
    NotConvergent,
    OrbitRecord,
    StableSet,
    Topology,
    cauchy_bound,
    classify_convergence,
    classify_orbit_cardinality,
    distance_after_n,
    distance_to_origin_after_n,
    is_forward_asymptotic,
    is_power_identity,
    orbit,
    power_T,
    stable_set,
)
from .frobenius import (
    SymMatN,
    frobenius_inner,
    is_in_psym,
    is_scalar_matrix,
    psym_dimension,
    sym0_basis,
)
from .geometry import (
    AxisLine,
    Direction,
    ReflectScale,
    apply_T,
    compose_rotation_reflection,
    mod_pi,
    point_on_line,
    point_on_perpendicular,
    reflect_point,
    rotation_matrix,
)

__all__ = [
    "AxisLine",
    "ConvergenceVerdict",
    "ConvergesTo",
    "DEFAULT_TOL",
    "Direction",
    "DivergesToInfinity",
    "Finite",
    "Infinite",
    "NotConvergent",
    "NotOrthogonalError",
    "NotSymmetricError",
    "NotTraceZeroError",
    "ORIGIN",
    "OrbitRecord",
    "Orthogonal2",
    "OrthogonalVariant",
    "Point2",
    "ReflectScale",
    "StableSet",
    "SymMatN",
    "Tolerance",
    "Topology",
    "TraceZeroSym2",
    "apply_T",
    "cauchy_bound",
    "classify_convergence",
    "classify_orbit_cardinality",
    "classify_orthogonal",
    "compose_rotation_reflection",
    "corollary_witness",
    "decompose",
    "distance_after_n",
    "distance_to_origin_after_n",
    "frobenius_inner",
    "is_forward_asymptotic",
    "is_in_psym",
    "is_power_identity",
    "is_scalar_matrix",
    "matrix_from_params",
    "mod_2pi",
    "mod_pi",
    "orbit",
    "point_on_line",
    "point_on_perpendicular",
    "power_T",
    "psym_dimension",
    "reflect_point",
    "rotation_matrix",
    "stable_set",
    "sym0_basis",
]
