"""Exact tools for supersolvable line arrangements in the complex projective plane."""

from .algebra import (
    MultiRestriction,
    defining_polynomial,
    is_balanced,
    mdr,
    multi_exponents,
    nodal_vanishing_dimension,
    supersolvable_exponents,
    syzygy_dimension,
    verify_mdr,
    ziegler_restriction,
)
from .campaigns import CAMPAIGNS, CampaignResult, run_campaign
from .classify import (
    ClassifyReport,
    check_identities,
    homogeneity,
    is_supersolvable,
    modular_points,
    tjurina_census,
)
from .families import (
    ConeSpec,
    a_of_w,
    adversarial_vertex,
    cone,
    full_monomial,
    generic_arrangement,
    generic_vertex,
    near_pencil,
    pencil,
)
from .field import (
    CycField,
    CycNumber,
    cyc_field,
    cyclotomic_polynomial,
    euler_phi,
    exponent_in_mu,
    root_order,
    zeta_pow,
)
from .projgeo import (
    Arrangement,
    Lattice,
    ProjLine,
    ProjPoint,
    apply_transform,
    build_lattice,
    census,
    lattice_isomorphic,
    line_intersect,
    line_through,
)
from .wclass import (
    Recovery,
    WClass,
    canonicalize,
    enumerate_classes,
    predicted_modular_count,
    recover_class,
)

__all__ = [
    "CAMPAIGNS",
    "Arrangement",
    "CampaignResult",
    "ClassifyReport",
    "ConeSpec",
    "CycField",
    "CycNumber",
    "Lattice",
    "MultiRestriction",
    "ProjLine",
    "ProjPoint",
    "Recovery",
    "WClass",
    "a_of_w",
    "adversarial_vertex",
    "apply_transform",
    "build_lattice",
    "canonicalize",
    "census",
    "check_identities",
    "cone",
    "cyc_field",
    "cyclotomic_polynomial",
    "defining_polynomial",
    "enumerate_classes",
    "euler_phi",
    "exponent_in_mu",
    "full_monomial",
    "generic_arrangement",
    "generic_vertex",
    "homogeneity",
    "is_balanced",
    "is_supersolvable",
    "lattice_isomorphic",
    "line_intersect",
    "line_through",
    "mdr",
    "modular_points",
    "multi_exponents",
    "near_pencil",
    "nodal_vanishing_dimension",
    "pencil",
    "predicted_modular_count",
    "recover_class",
    "root_order",
    "run_campaign",
    "supersolvable_exponents",
    "syzygy_dimension",
    "tjurina_census",
    "verify_mdr",
    "zeta_pow",
    "ziegler_restriction",
]

__version__ = "0.1.0"
