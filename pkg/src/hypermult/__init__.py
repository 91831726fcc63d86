"""Exact arithmetic over sign and tropical hyperfields.

Multivalued addition makes "f is divisible by l" a membership question
rather than an equation; this package computes linear-factor
multiplicities built on that notion, the matching tropical-geometry
counts, and sparse-resultant bounds for real solution counts of
polynomial systems.
"""

from hypermult.hyperfield import (
    FIELDS,
    Hyperfield,
    HyperValue,
    HyperSubset,
    hyper_mul,
    hyper_neg,
    hyper_sum,
    iterated_hypersum,
    subset_contains,
    apply_morphism,
    parse_value,
    format_value,
)
from hypermult.polyring import HPoly, IntPoly, RatPoly, parse_poly, parse_grid, product_membership
from hypermult.multiplicity import (
    MultiplicityResult,
    SignSetPoly,
    mult,
    bmult,
    divides_once,
    descartes_univariate,
    setmult_bound,
)
from hypermult.tropgeo import (
    NewtonSubdivision,
    TropicalCurve,
    newton_subdivision,
    tropical_curve,
    initial_form,
    gmult,
    pmult,
)
from hypermult.resultant import (
    SupportSystem,
    canny_emiris_matrix,
    symbolic_determinant,
    stripped_resultant,
    specialize_signs,
    resultant_sign_bound,
    sylvester_resultant,
    mixed_volume,
)
from hypermult.systems import (
    TransversePoint,
    SystemBoundReport,
    transverse_intersections,
    m_K,
    m_S,
    epsilon_N,
    transverse_case_N,
    system_bound,
)
from hypermult.realcert import (
    Constraint,
    LinearSystem,
    FMResult,
    fm_solve,
    verify_fm_certificate,
    real_linear_quotient_feasible,
    verify_certificate,
)
from hypermult.errors import HypermultError, ParseError, MathError

__all__ = [
    "FIELDS",
    "Hyperfield",
    "HyperValue",
    "HyperSubset",
    "hyper_mul",
    "hyper_neg",
    "hyper_sum",
    "iterated_hypersum",
    "subset_contains",
    "apply_morphism",
    "parse_value",
    "format_value",
    "HPoly",
    "IntPoly",
    "RatPoly",
    "parse_poly",
    "parse_grid",
    "product_membership",
    "MultiplicityResult",
    "SignSetPoly",
    "mult",
    "bmult",
    "divides_once",
    "descartes_univariate",
    "setmult_bound",
    "NewtonSubdivision",
    "TropicalCurve",
    "newton_subdivision",
    "tropical_curve",
    "initial_form",
    "gmult",
    "pmult",
    "SupportSystem",
    "canny_emiris_matrix",
    "symbolic_determinant",
    "stripped_resultant",
    "specialize_signs",
    "resultant_sign_bound",
    "sylvester_resultant",
    "mixed_volume",
    "TransversePoint",
    "SystemBoundReport",
    "transverse_intersections",
    "m_K",
    "m_S",
    "epsilon_N",
    "transverse_case_N",
    "system_bound",
    "Constraint",
    "LinearSystem",
    "FMResult",
    "fm_solve",
    "verify_fm_certificate",
    "real_linear_quotient_feasible",
    "verify_certificate",
    "HypermultError",
    "ParseError",
    "MathError",
]
