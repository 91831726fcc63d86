"""Registry of worked examples the library reproduces end to end.

Each record freezes the exact inputs of one worked computation and the
output it must reproduce bit-exactly.  The registry is the top-level
golden test: `hypermult examples run --all` replays every record and
compares against the frozen values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Callable

from .errors import MathError
from .hyperfield import unit
from .multiplicity import bmult, descartes_univariate, divides_once, mult
from .polyring import HPoly, format_grid, parse_grid_text, parse_poly, rat_poly
from .realcert import (LinearSystem, fm_solve, parse_constraint,
                       real_linear_quotient_feasible, verify_certificate)
from .resultant import (SupportSystem, resultant_sign_bound, specialize_signs,
                        stripped_resultant)
from .systems import (epsilon_N, m_K, m_S, system_bound, transverse_case_N,
                      transverse_intersections)
from .tropgeo import (enriched_curve, essential_monomials, ext_divides_once,
                      gmult, heights_for_subdivision, initial_form,
                      mult_tropext, newton_subdivision, pmult, tropical_curve)

__all__ = ["ExampleRecord", "REGISTRY", "get_example", "run_example"]


@dataclass(frozen=True)
class ExampleRecord:
    id: str
    title: str
    note: str
    run: Callable[[], dict]
    expected: dict


def _q(x) -> str:
    return str(Q(x))


def _pt(p) -> list:
    return [_q(p[0]), _q(p[1])]


# ---------------------------------------------------------------------------
# inputs shared between records

_L_XY = "1 + x + y"

# dense degree-3 sign grid with a unique sign quotient but no real one
_F_NO_REAL = """
+ . . .
- + . .
+ - - .
+ - + +
"""
_G_NO_REAL = """
+ . .
- - .
+ - +
"""

# dense degree-3 sign grid whose real quotient exists but whose
# strictly-convex lift search is the subject of the perturbation-gap record
_F_REAL = """
- . . .
- + . .
+ - - .
+ + + -
"""
_G_REAL = """
- . .
- + .
+ + -
"""

# degree-3 grid whose boundary multiplicity exceeds its multiplicity
_F_BOUNDARY = """
+ . . .
- + . .
+ + - .
+ + - +
"""

_LIWANG_F = "1 + x - y"
_LIWANG_G = "1 + x^3 - y^3 - x^3y^3"
_LIWANG_SUPPORTS = [
    {(0, 0): 1, (1, 0): "a", (0, 1): "-b"},
    {(0, 0): 1, (3, 0): "r", (0, 3): "-s", (3, 3): "-t"},
]
_FINAL_F = "1 + x + y"
_FINAL_G = "1 + x + x^2 - y^2"
_FINAL_SUPPORTS = [
    {(0, 0): 1, (1, 0): "a", (0, 1): "b"},
    {(0, 0): 1, (1, 0): "t", (2, 0): "r", (0, 2): "-s"},
]
_CIRCLE_LINE_SUPPORTS = [
    {(1, 0): 3, (0, 1): 4, (0, 0): -5},
    {(2, 0): 1, (0, 2): 1, (0, 0): -1},
]

# Newton-degree-5 signed support with a subdivision that is a union of lines
_D5_PLUS = ((0, 0), (0, 4), (0, 5), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1),
            (4, 0), (5, 0))
_D5_MINUS = ((0, 1), (0, 2), (0, 3), (1, 0), (1, 3), (1, 4), (2, 0), (2, 3),
             (3, 0), (3, 2), (4, 1))
_D5_CELLS = (
    ((0, 0), (1, 0), (1, 1), (0, 1)),
    ((0, 1), (1, 1), (0, 2)),
    ((0, 2), (1, 1), (1, 2), (0, 3)),
    ((0, 3), (1, 2), (1, 3), (0, 4)),
    ((0, 4), (1, 3), (1, 4), (0, 5)),
    ((1, 0), (2, 0), (2, 1), (1, 1)),
    ((1, 1), (2, 1), (1, 2)),
    ((1, 2), (2, 2), (2, 3), (1, 3)),
    ((1, 3), (2, 3), (1, 4)),
    ((2, 0), (3, 0), (3, 1), (2, 1)),
    ((2, 1), (3, 1), (2, 2), (1, 2)),
    ((2, 2), (3, 1), (3, 2), (2, 3)),
    ((3, 0), (4, 0), (4, 1), (3, 1)),
    ((3, 1), (4, 1), (3, 2)),
    ((4, 0), (5, 0), (4, 1)),
)


# ---------------------------------------------------------------------------
# record bodies


def _run_intro_descartes() -> dict:
    f = parse_poly("x^4 - x^3 + x^2 - x + 1", "S", ("x",))
    l = parse_poly("x - 1", "S", ("x",))
    return {
        "mult": mult(f, l).value,
        "descartes": descartes_univariate("+-+-+"),
    }


def _run_intro_certificate() -> dict:
    f = parse_poly("x^4 - x^3 + x^2 - x + 1", "S", ("x",))
    factors = [rat_poly("x - 1"), rat_poly("x - 2"), rat_poly("x^2 + 2")]
    return {"verified": verify_certificate(f, factors)}


def _run_krasner_degree() -> dict:
    f = parse_poly("1 + x + y + x^2 + xy + y^2", "K", ("x", "y"))
    l = parse_poly(_L_XY, "K", ("x", "y"))
    return {"mult": mult(f, l).value, "bmult": bmult(f, l).value}


def _run_boundary_three_variables() -> dict:
    f = parse_grid_text(_F_BOUNDARY, "S")
    l = parse_poly(_L_XY, "S", ("x", "y"))
    return {"mult": mult(f, l).value, "bmult": bmult(f, l).value}


def _run_three_variable_quadratic() -> dict:
    f = parse_poly("1 + x + y - z - xy - xz + yz - x^2 + y^2 - z^2",
                   "S", ("x", "y", "z"))
    l = parse_poly("1 + x + y + z", "S", ("x", "y", "z"))
    qs = divides_once(f, l)
    return {"mult": mult(f, l).value, "quotients": sorted(str(q) for q in qs)}


def _run_unique_sign_quotient() -> dict:
    f = parse_grid_text(_F_NO_REAL, "S")
    l = parse_poly(_L_XY, "S", ("x", "y"))
    qs = divides_once(f, l)
    return {
        "mult": mult(f, l).value,
        "bmult": bmult(f, l).value,
        "quotients": [format_grid(q) for q in qs],
    }


def _run_no_real_quotient() -> dict:
    f = parse_grid_text(_F_NO_REAL, "S")
    l = parse_poly(_L_XY, "S", ("x", "y"))
    res = real_linear_quotient_feasible(f, l)
    return {"status": res.status, "has_certificate": res.certificate is not None}


def _run_three_variable_no_real_quotient() -> dict:
    f = parse_poly("1 + x + y - z - xy - xz + yz - x^2 + y^2 - z^2",
                   "S", ("x", "y", "z"))
    l = parse_poly("1 + x + y + z", "S", ("x", "y", "z"))
    res = real_linear_quotient_feasible(f, l)
    return {"status": res.status, "has_certificate": res.certificate is not None}


def _run_real_quotient_sample() -> dict:
    f = parse_grid_text(_F_REAL, "S")
    l = parse_poly(_L_XY, "S", ("x", "y"))
    res = real_linear_quotient_feasible(f, l)
    out = {"status": res.status}
    if res.quotient is not None:
        out["quotient"] = str(res.quotient)
        out["verified"] = verify_certificate(f, [res.lift, res.quotient])
    return out


def _run_real_certificate() -> dict:
    f = parse_grid_text(_F_REAL, "S")
    factors = [rat_poly("1 + x + y"), rat_poly("1 + 1/2x - 3/10y"),
               rat_poly("1 - 33/100x + 1/100y")]
    l = parse_poly(_L_XY, "S", ("x", "y"))
    qs = divides_once(f, l)
    return {
        "verified": verify_certificate(f, factors),
        "mult": mult(f, l).value,
        "bmult": bmult(f, l).value,
        "quotients": [format_grid(q) for q in qs],
    }


def _run_contradiction_chains() -> dict:
    cyc = LinearSystem(tuple(parse_constraint(s) for s in
                             ("a + b > 0", "b + c < 0", "c + d > 0", "a + d < 0")))
    r1 = fm_solve(cyc)
    bounded = LinearSystem(tuple(parse_constraint(s) for s in
                                 ("1 < a", "b < 1", "a < c", "e < b",
                                  "c < d", "d < e")))
    r2 = fm_solve(bounded)
    return {
        "cyclic": {"status": r1.status, "chain": r1.certificate.chain},
        "bounded": {"status": r2.status, "chain": r2.certificate.chain},
    }


def _run_figure_subdivision() -> dict:
    f = parse_poly("1 + x + y + x^2 + xy + 1y^2", "T", ("x", "y"))
    sub = newton_subdivision(f)
    return {
        "cells": [[list(v) for v in cell] for cell in sub.cells],
        "strictly_convex": sub.strictly_convex,
        "essential": [list(m) for m in essential_monomials(f)],
    }


def _run_initial_form_gap() -> dict:
    f = parse_poly("0 + x + y + 2x^2 + 1xy + 2y^2", "T", ("x", "y"))
    l = parse_poly("0 + x + y", "T", ("x", "y"))
    sub = newton_subdivision(f)
    in_f = initial_form(f, (0, 0))
    in_l = initial_form(l, (0, 0))
    return {
        "cells": len(sub.cells),
        "essential": [list(m) for m in essential_monomials(f)],
        "initial": str(in_f),
        "mult": mult_tropext(f, l).value,
        "gmult": gmult(enriched_curve(f), [l]).value,
        "initial_mult": mult(in_f, in_l).value,
    }


def _run_standard_line() -> dict:
    curve = tropical_curve(parse_poly("0 + x + y", "T", ("x", "y")))
    rays = sorted(e.direction for e in curve.edges if e.is_ray)
    return {
        "vertices": [_pt(v) for v in curve.vertices],
        "rays": [list(d) for d in rays],
        "weights": sorted(e.weight for e in curve.edges),
        "balanced": curve.is_balanced(),
    }


def _run_two_lines() -> dict:
    f = parse_poly("0 + x + y + 1x^3 + 1x^2y + 2y^3", "T", ("x", "y"))
    l = parse_poly("0 + x + y", "T", ("x", "y"))
    curve = tropical_curve(f)
    return {
        "vertices": sorted(_pt(v) for v in curve.vertices),
        "gmult": gmult(enriched_curve(f), [l]).value,
        "quotients": len(ext_divides_once(f, l)),
        "mult": mult_tropext(f, l).value,
    }


def _run_line_sign_mismatch() -> dict:
    f = parse_poly("0 - x + y", "TR", ("x", "y"))
    l = parse_poly("0 + x + y", "TR", ("x", "y"))
    V = enriched_curve(f)
    return {
        "gmult_plain": gmult(V, [l], enriched=False).value,
        "gmult_enriched": gmult(V, [l], enriched=True).value,
    }


def _run_degree5_lines() -> dict:
    supp = sorted(_D5_PLUS + _D5_MINUS)
    heights = heights_for_subdivision(supp, _D5_CELLS)
    signs = {m: 1 for m in _D5_PLUS}
    signs.update({m: -1 for m in _D5_MINUS})
    lift = HPoly("TR", 2, {m: unit("TR", signs[m], heights[m]) for m in supp},
                 ("x", "y"))
    sub = newton_subdivision(lift)
    ok = {frozenset(c) for c in sub.cells} == {frozenset(c) for c in _D5_CELLS}
    l = parse_poly(_L_XY, "S", ("x", "y"))
    return {
        "subdivision_realized": ok,
        "cells": len(sub.cells),
        "gmult": gmult(enriched_curve(lift), [l], enriched=True).value,
    }


def _run_dense_quadratic_pmult() -> dict:
    f = parse_poly("1 + x + y + x^2 + xy + y^2", "S", ("x", "y"))
    l = parse_poly(_L_XY, "S", ("x", "y"))
    value, stats = pmult(f, l, details=True)
    return {
        "pmult": value,
        "bmult": bmult(f, l).value,
        "subdivisions": stats["realized"],
    }


def _run_perturbation_gap() -> dict:
    f = parse_grid_text(_F_REAL, "S")
    l = parse_poly(_L_XY, "S", ("x", "y"))
    value, stats = pmult(f, l, details=True)
    return {
        "pmult": value,
        "mult": mult(f, l).value,
        "realized_subdivisions": stats["realized"],
    }


def _run_only_subdivision() -> dict:
    f = parse_poly("1 - x^2 + xy - y^2", "S", ("x", "y"))
    l = parse_poly("1 + x - y", "S", ("x", "y"))
    return {"pmult": pmult(f, l, relaxed=True)}


def _liwang_sets():
    system = SupportSystem.build([dict(d) for d in _LIWANG_SUPPORTS])
    R, meta = stripped_resultant(system)
    signs = {n: 1 for n in system.names() if n not in system.aux_names}
    return specialize_signs(R, signs, system.aux_names), meta


def _run_liwang_resultant() -> dict:
    sets, meta = _liwang_sets()
    f = parse_poly(_LIWANG_F, "S", ("x", "y"))
    g = parse_poly(_LIWANG_G, "S", ("x", "y"))
    return {
        "grid": sets.grid(),
        "matrix_size": meta["size"],
        "bound": resultant_sign_bound([f, g], (1, 1)),
    }


def _run_final_resultant() -> dict:
    system = SupportSystem.build([dict(d) for d in _FINAL_SUPPORTS])
    R, _meta = stripped_resultant(system)
    signs = {n: 1 for n in system.names() if n not in system.aux_names}
    sets = specialize_signs(R, signs, system.aux_names)
    f = parse_poly(_FINAL_F, "S", ("x", "y"))
    g = parse_poly(_FINAL_G, "S", ("x", "y"))
    return {
        "all_undetermined": all(len(s) == 3 for s in sets.terms.values()),
        "bound": resultant_sign_bound([f, g], (1, 1)),
    }


def _run_circle_line_resultant() -> dict:
    system = SupportSystem.build([dict(d) for d in _CIRCLE_LINE_SUPPORTS])
    R, _meta = stripped_resultant(system)
    from .polyring import IntPoly

    lin = IntPoly(("u", "v"), {(1, 0): 3, (0, 1): 4, (0, 0): 5})
    square = lin * lin
    q = R.with_symbols(("u", "v"))
    f = parse_poly("-1 + x + y", "S", ("x", "y"))
    g = parse_poly("-1 + x^2 + y^2", "S", ("x", "y"))
    return {
        "resultant": str(q),
        "is_square_of_line": q == square or q == -square,
        "bound": resultant_sign_bound([f, g], (1, 1)),
    }


def _run_liwang_epsilon() -> dict:
    f = parse_poly(_LIWANG_F, "S", ("x", "y"))
    g = parse_poly(_LIWANG_G, "S", ("x", "y"))
    return {"epsilon_N": epsilon_N([f, g], (1, 1), height_bound=8)}


def _run_liwang_system_bound() -> dict:
    f = parse_poly(_LIWANG_F, "S", ("x", "y"))
    g = parse_poly(_LIWANG_G, "S", ("x", "y"))
    rep = system_bound([f, g], (1, 1))
    return {"lower": rep.lower, "upper": rep.upper,
            "exact": rep.exact if rep.exact is not None else "unknown"}


def _run_final_system_bound() -> dict:
    f = parse_poly(_FINAL_F, "S", ("x", "y"))
    g = parse_poly(_FINAL_G, "S", ("x", "y"))
    rep = system_bound([f, g], (1, 1))
    return {
        "lower": rep.lower,
        "upper": rep.upper,
        "exact": rep.exact if rep.exact is not None else "unknown",
        "sign_obstruction": any("uniform sign" in n for n in rep.notes),
    }


def _run_transverse_lines() -> dict:
    l1 = parse_poly("0 + 0x + 0y", "T", ("x", "y"))
    l2 = parse_poly("3 + 0x + 5y", "T", ("x", "y"))
    pts = transverse_intersections([l1, l2])
    return {
        "points": [_pt(p.location) for p in pts],
        "m_K": [m_K(p) for p in pts],
        "count_at_point": transverse_case_N([l1, l2], (3, 0)),
        "count_elsewhere": transverse_case_N([l1, l2], (7, 7)),
    }


def _run_transverse_binomials() -> dict:
    b1 = parse_poly("0x + 0y", "T", ("x", "y"))
    b2 = parse_poly("0 + 0xy", "T", ("x", "y"))
    pts = transverse_intersections([b1, b2])
    return {"points": [_pt(p.location) for p in pts],
            "m_K": [m_K(p) for p in pts]}


def _run_transverse_signed() -> dict:
    f = parse_poly("0 + 0x - 0y", "TR", ("x", "y"))
    g = parse_poly("3 - 0x + 5y", "TR", ("x", "y"))
    n = transverse_case_N([f, g], (unit("TR", 1, 3), unit("TR", 1, 0)))
    pts = transverse_intersections([f, g])
    return {"points": [_pt(p.location) for p in pts], "count": n}


# ---------------------------------------------------------------------------
# the registry

REGISTRY: tuple[ExampleRecord, ...] = (
    ExampleRecord(
        "intro-descartes",
        "Sign rule for x^4 - x^3 + x^2 - x + 1",
        "The multiplicity of x - 1 over the signs equals the number of "
        "coefficient sign changes.",
        _run_intro_descartes,
        {"mult": 4, "descartes": 4},
    ),
    ExampleRecord(
        "intro-certificate",
        "Rational factorization matching a sign pattern",
        "(x - 1)(x - 2)(x^2 + 2) realizes the alternating quartic sign "
        "pattern over the reals.",
        _run_intro_certificate,
        {"verified": True},
    ),
    ExampleRecord(
        "krasner-newton-degree",
        "Multiplicity over K is the Newton degree",
        "For a dense polynomial over the Krasner hyperfield the linear form "
        "divides as often as the Newton degree allows.",
        _run_krasner_degree,
        {"mult": 2, "bmult": 2},
    ),
    ExampleRecord(
        "boundary-three-variables",
        "Boundary multiplicity can exceed multiplicity",
        "A degree-3 sign grid with bmult 1 but mult 0: the unique boundary "
        "quotient forces an interior sign clash.",
        _run_boundary_three_variables,
        {"mult": 0, "bmult": 1},
    ),
    ExampleRecord(
        "three-variable-quadratic",
        "A quadric in three variables with sign multiplicity 1",
        "1+x+y-z-xy-xz+yz-x^2+y^2-z^2 factors once through 1+x+y+z.",
        _run_three_variable_quadratic,
        {"mult": 1, "quotients": ["1 - x + y - z"]},
    ),
    ExampleRecord(
        "unique-sign-quotient",
        "Unique sign quotient by 1 + x + y",
        "The displayed degree-2 grid is the only sign quotient, pinning "
        "mult = bmult = 1.",
        _run_unique_sign_quotient,
        {"mult": 1, "bmult": 1, "quotients": ["+ . .\n- - .\n+ - +"]},
    ),
    ExampleRecord(
        "no-real-quotient",
        "Sign-divisible but not really divisible",
        "The same grid admits no real quotient: the coefficient "
        "inequalities close into a strict cycle.",
        _run_no_real_quotient,
        {"status": "INFEASIBLE", "has_certificate": True},
    ),
    ExampleRecord(
        "three-variable-no-real-quotient",
        "The quadric has no real quotient either",
        "Eliminating the quotient coefficients yields the contradiction "
        "a > -b > c > -d > a.",
        _run_three_variable_no_real_quotient,
        {"status": "INFEASIBLE", "has_certificate": True},
    ),
    ExampleRecord(
        "real-quotient-sample",
        "A grid that does factor over the reals",
        "Fourier-Motzkin elimination produces an exact rational quotient "
        "whose product matches every coefficient sign.",
        _run_real_quotient_sample,
        {"status": "FEASIBLE",
         "quotient": "-1/8y^2 + 1/4xy - 1/2x^2 - 15/16y + 5/8x + 1",
         "verified": True},
    ),
    ExampleRecord(
        "real-certificate",
        "Explicit rational certificate for the factorable grid",
        "(1+x+y)(1+1/2x-3/10y)(1-33/100x+1/100y) matches the grid signs "
        "exactly; the sign quotient is unique.",
        _run_real_certificate,
        {"verified": True, "mult": 1, "bmult": 1,
         "quotients": ["- . .\n- + .\n+ + -"]},
    ),
    ExampleRecord(
        "contradiction-chains",
        "Fourier-Motzkin contradiction chains",
        "Two infeasible strict systems and their ordered inequality chains.",
        _run_contradiction_chains,
        {"cyclic": {"status": "INFEASIBLE", "chain": "a>-b>c>-d>a"},
         "bounded": {"status": "INFEASIBLE", "chain": "1<a<c<d<e<b<1"}},
    ),
    ExampleRecord(
        "three-cell-subdivision",
        "Newton subdivision with three cells",
        "1 + x + y + x^2 + xy + 1y^2 over T: two triangles and a quad; "
        "every support point is a vertex, so the lift is strictly convex.",
        _run_figure_subdivision,
        {"cells": [[[0, 0], [1, 0], [0, 1]],
                   [[0, 1], [1, 0], [2, 0], [1, 1]],
                   [[0, 1], [1, 1], [0, 2]]],
         "strictly_convex": True,
         "essential": [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]]},
    ),
    ExampleRecord(
        "initial-form-gap",
        "Initial forms overestimate multiplicity",
        "0+x+y+2x^2+1xy+2y^2: the initial form at the origin is 1+x+y with "
        "multiplicity 1, but no line divides the polynomial itself.",
        _run_initial_form_gap,
        {"cells": 4,
         "essential": [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]],
         "initial": "1 + x + y", "mult": 0, "gmult": 0, "initial_mult": 1},
    ),
    ExampleRecord(
        "standard-line",
        "The standard tropical line",
        "V(0 + x + y): one vertex at the origin and three weight-1 rays.",
        _run_standard_line,
        {"vertices": [["0", "0"]],
         "rays": [[-1, -1], [0, 1], [1, 0]],
         "weights": [1, 1, 1], "balanced": True},
    ),
    ExampleRecord(
        "two-superimposed-lines",
        "A cubic curve that is a union of two lines",
        "0+x+y+1x^3+1x^2y+2y^3: the curve is two line shapes with apexes "
        "(0,0) and (-1/2,-1), crossing at (-1/2,-1/2); one line fits "
        "geometrically, yet exact division finds no quotient.",
        _run_two_lines,
        {"vertices": [["-1/2", "-1"], ["-1/2", "-1/2"], ["0", "0"]],
         "gmult": 1, "quotients": 0, "mult": 0},
    ),
    ExampleRecord(
        "line-sign-mismatch",
        "Sign enrichment can kill a geometric factor",
        "0 - x + y contains the standard line as a set, but its signs are "
        "incompatible with 0 + x + y.",
        _run_line_sign_mismatch,
        {"gmult_plain": 1, "gmult_enriched": 0},
    ),
    ExampleRecord(
        "degree-5-signed-lines",
        "Signed degree-5 subdivision made of lines",
        "A 21-point signed support lifted to realize a fixed 15-cell "
        "subdivision; two sign-compatible lines split off.",
        _run_degree5_lines,
        {"subdivision_realized": True, "cells": 15, "gmult": 2},
    ),
    ExampleRecord(
        "dense-quadratic-pmult",
        "Perturbation multiplicity of the all-plus quadratic",
        "All seven strictly convex subdivisions are searched; the best "
        "enriched line count is 2, agreeing with bmult.",
        _run_dense_quadratic_pmult,
        {"pmult": 2, "bmult": 2, "subdivisions": 7},
    ),
    ExampleRecord(
        "perturbation-gap",
        "Perturbation search on the factorable degree-3 grid",
        "The enumeration realizes 307 strictly convex subdivisions and "
        "finds a sign-compatible line in one of them, so the computed "
        "value is 1.  A reference value of 0 was recorded for this grid "
        "elsewhere; an explicit certificate (lift, exact quotient, "
        "verified product membership) shows 1 is correct.  See the "
        "project ledger for the full analysis.",
        _run_perturbation_gap,
        {"pmult": 1, "mult": 1, "realized_subdivisions": 307},
    ),
    ExampleRecord(
        "only-subdivision-pmult",
        "A support with a single admissible subdivision",
        "1 - x^2 + xy - y^2: the one strictly convex subdivision holds no "
        "line compatible with 1 + x - y, so the perturbation value is 0 "
        "although mult is 1.",
        _run_only_subdivision,
        {"pmult": 0},
    ),
    ExampleRecord(
        "liwang-resultant",
        "Sign-specialized sparse resultant of a cubic system",
        "Supports {1, x, -y} and {1, x^3, -y^3, -x^3y^3} with all symbols "
        "positive: the 22x22 determinant collapses to a 7x7 triangular "
        "sign grid whose boundary bound is 3.",
        _run_liwang_resultant,
        {"grid": "* . . . . . .\n"
                 "+ * . . . . .\n"
                 "+ + * . . . .\n"
                 "* * * * . . .\n"
                 "+ * + * * . .\n"
                 "+ - * * - * .\n"
                 "+ - + * + - *",
         "matrix_size": 22,
         "bound": 3},
    ),
    ExampleRecord(
        "final-resultant",
        "A system whose resultant signs are all undetermined",
        "Supports {1, x, y} and {1, x, x^2, -y^2}: every specialized "
        "coefficient is *, yet the boundary bound is still 2.",
        _run_final_resultant,
        {"all_undetermined": True, "bound": 2},
    ),
    ExampleRecord(
        "circle-line-resultant",
        "Circle and line: resultant is a perfect square",
        "3x + 4y - 5 and x^2 + y^2 - 1 are tangent; the stripped resultant "
        "is (3u + 4v + 5)^2 and the sign bound is 2.",
        _run_circle_line_resultant,
        {"resultant": "16v^2 + 24uv + 9u^2 + 40v + 30u + 25",
         "is_square_of_line": True, "bound": 2},
    ),
    ExampleRecord(
        "liwang-epsilon",
        "Certified lower bound via lifted tropical curves",
        "Transverse lifts with integer heights up to 8 realize two "
        "positive intersections of the cubic system.",
        _run_liwang_epsilon,
        {"epsilon_N": 2},
    ),
    ExampleRecord(
        "liwang-system-bound",
        "Two-sided solution-count bound for the cubic system",
        "Lift search gives the lower bound 2; the resultant gives the "
        "upper bound 3.",
        _run_liwang_system_bound,
        {"lower": 2, "upper": 3, "exact": "unknown"},
    ),
    ExampleRecord(
        "final-system-bound",
        "Sign obstruction makes a bound non-tight",
        "1+x+y is positive on the positive orthant, so the system has no "
        "positive solutions although the resultant bound is 2.",
        _run_final_system_bound,
        {"lower": 0, "upper": 2, "exact": 0, "sign_obstruction": True},
    ),
    ExampleRecord(
        "transverse-lines",
        "Two tropical lines crossing once",
        "The standard line and the line with apex (3,0) cross once, with "
        "intersection multiplicity 1.",
        _run_transverse_lines,
        {"points": [["3", "0"]], "m_K": [1],
         "count_at_point": 1, "count_elsewhere": 0},
    ),
    ExampleRecord(
        "transverse-binomials",
        "Binomial curves with intersection multiplicity 2",
        "x + y against 1 + xy: one crossing whose exponent determinant "
        "has absolute value 2.",
        _run_transverse_binomials,
        {"points": [["0", "0"]], "m_K": [2]},
    ),
    ExampleRecord(
        "transverse-signed",
        "Signed count at a transverse crossing",
        "A signed pair of lines meeting once; the sign condition at "
        "(+3, +0) is satisfiable, giving count 1.",
        _run_transverse_signed,
        {"points": [["3", "0"]], "count": 1},
    ),
)

_BY_ID = {rec.id: rec for rec in REGISTRY}


def get_example(example_id: str) -> ExampleRecord:
    try:
        return _BY_ID[example_id]
    except KeyError:
        raise MathError(f"unknown example {example_id!r}", kind="bad-value") from None


def run_example(rec: ExampleRecord) -> tuple[bool, dict]:
    """Replay one record; (True, output) when it reproduces its expectation."""
    actual = rec.run()
    return actual == rec.expected, actual
