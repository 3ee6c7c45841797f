"""Reducibility points of generic standard modules for graded Hecke algebras
with equal parameters, computed exactly from root-system data."""

from .grading import GoodParabolicDims, GradedDims, good_parabolic_dims, graded_dims, is_open, orbit_dim
from .levi import (
    ExplicitMarks,
    InvalidDatum,
    LeviSubset,
    MiddleElement,
    NilpotentDatum,
    Partition,
    Principal,
    centralizer_roots,
    classify_levi,
    maximal_levi,
    middle_element,
    parse_datum,
    partition_marks,
)
from .reducibility import (
    InductionSpec,
    NotAnSl2Module,
    ReducibilityError,
    ReducibilityReport,
    StringDecomposition,
    decompose_strings,
    full_report,
    is_irreducible_at,
    nilradical_weights,
    reducibility_points_rational,
    reducibility_points_scan,
    reducibility_points_strings,
    report_to_dict,
)
from .rootsys import (
    CartanElement,
    CartanType,
    RootSystem,
    build_root_system,
    coroot_as_element,
    coweight_coefficient,
    pairing,
)

__version__ = "0.1.0"
