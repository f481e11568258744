"""Exact coincidence site lattices, sublattice colorings, and color
coincidences, with quaternion parametrizations for the cubic and hypercubic
families. All arithmetic is exact (arbitrary-precision integers and
rationals); there is no floating point anywhere."""

from .exact import IntMatrix, RatMatrix, hnf, hnf_basis, left_kernel, snf, solve_integer, xgcd
from .lattice import (
    CosetLabel,
    Lattice,
    QuotientStructure,
    affine_intersect,
    commensurate,
    index,
    intersect,
    is_sublattice,
    lattice_sum,
    make_lattice,
    quotient,
    reduce_mod,
)
from .csl import Isometry, csl_lattice, denominator, is_coincidence, sigma
from .coloring import (
    ColorReport,
    Coloring,
    SigmaRelation,
    classify_special_case,
    closure_search,
    color_permutation,
    color_report,
    colors_meeting,
    is_color_coincidence,
    make_coloring,
    product_color_coincidence_check,
    sigma2_via_formula,
    sigma_relation,
    stuv,
)
from .quat import (
    AdmissiblePair,
    Quaternion,
    cayley_so3,
    enumerate_admissible_pairs,
    enumerate_primitive,
    example2_class,
    ideal_membership,
    inner,
    odd_part,
    prop64_condition,
    rotoreflection_from_pair,
    rotoreflection_so3,
    sigma_d4,
    sigma_so3,
    sigma_z4,
    so4_from_pair,
)
from . import catalog

__version__ = "0.1.0"
