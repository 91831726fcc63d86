"""Command-line surface for the hypermult library.

Every subcommand computes one quantity exactly and reports it twice: a
JSON payload (``--json``, sorted keys, the canonical machine output) and
human-readable text derived from the same payload.  Exit codes: 0 on
success, 1 on mathematical errors (the message carries a machine-readable
kind), 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction as Q
from typing import Sequence

from .errors import HypermultError, MathError, ParseError
from .examples_registry import REGISTRY, get_example, run_example
from .multiplicity import (
    SignSetPoly,
    bmult,
    descartes_univariate,
    divides_once,
    mult,
    setmult_bound,
)
from .polyring import parse_grid_text, parse_poly, rat_poly
from .realcert import real_linear_quotient_feasible, verify_certificate
from .resultant import SupportSystem, specialize_signs, stripped_resultant
from .systems import (
    epsilon_N,
    m_K,
    m_S,
    system_bound,
    transverse_case_N,
    transverse_intersections,
)
from .tropgeo import (
    ext_divides_once,
    gmult,
    initial_form,
    mult_tropext,
    newton_subdivision,
    pmult,
    svg_curve,
    svg_subdivision,
    tropical_curve,
)

_SIGN_TOKENS = {"+": 1, "-": -1}


# ---------------------------------------------------------------------------
# small argument parsers


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Q):
        return str(x)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _var_tuple(args):
    if getattr(args, "vars", None):
        return tuple(n.strip() for n in args.vars.split(",") if n.strip())
    return None


def _grid_rows(text: str) -> list:
    """Rows of tokens from '/'-separated or multiline grid text, top-down.

    Short rows are right-padded with '.' so triangular grids can be typed
    without explicit zero entries.
    """
    rows = [ln.split() for ln in text.replace("/", "\n").splitlines()
            if ln.strip()]
    if not rows:
        raise ParseError("empty grid")
    width = max(len(r) for r in rows)
    return [r + ["."] * (width - len(r)) for r in rows]


def _poly_arg(args, field: str):
    """The main polynomial: -f TEXT, or --grid / --grid-file for 2-var grids."""
    grid = getattr(args, "grid", None)
    grid_file = getattr(args, "grid_file", None)
    if grid_file:
        try:
            with open(grid_file, "r", encoding="utf-8") as fh:
                grid = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read grid file: {exc}")
    if grid is not None:
        rows = _grid_rows(grid)
        text = "\n".join(" ".join(r) for r in rows)
        return parse_grid_text(text, field, _var_tuple(args))
    if getattr(args, "f", None) is None:
        raise ParseError("missing polynomial: give -f, --grid, or --grid-file")
    return parse_poly(args.f, field, _var_tuple(args))


def _line_arg(args, field: str, f):
    return parse_poly(args.l, field, f.vars)


def _point(text: str) -> tuple:
    try:
        coords = tuple(Q(t.strip()) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad point {text!r}; expected e.g. \"3,0\" or \"1/2,-1\"")
    return coords


def _sign_vec(text: str) -> tuple:
    toks = [t.strip() for t in text.split(",")] if "," in text else list(text.strip())
    out = []
    for t in toks:
        if t not in _SIGN_TOKENS:
            raise ParseError(f"bad sign token {t!r}; expected + or -")
        out.append(_SIGN_TOKENS[t])
    return tuple(out)


def _sign_map(text: str) -> dict:
    out = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ParseError(f"bad sign assignment {item!r}; expected name=+ or name=-")
        name, _, tok = item.partition("=")
        name, tok = name.strip(), tok.strip()
        if tok not in _SIGN_TOKENS:
            raise ParseError(f"bad sign token {tok!r} for {name!r}; expected + or -")
        out[name] = _SIGN_TOKENS[tok]
    if not out:
        raise ParseError("empty sign assignment")
    return out


def _render(payload: dict, skip=()) -> list:
    """Key-sorted human rendering; multiline string values become blocks."""
    lines = []
    for k in sorted(payload):
        if k in skip:
            continue
        v = payload[k]
        if isinstance(v, str) and "\n" in v:
            lines.append(f"{k}:")
            lines.extend(v.splitlines())
        elif isinstance(v, (dict, list)):
            lines.append(f"{k}: {json.dumps(_jsonable(v), sort_keys=True)}")
        else:
            lines.append(f"{k}: {v}")
    return lines


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (payload, human lines[, exit code])


def _cmd_mult(args):
    field = args.field or "S"
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    r = mult_tropext(f, l) if field in ("T", "TR") else mult(f, l)
    payload = {"command": "mult", "field": field, "f": str(f), "l": str(l)}
    payload.update(r.to_json())
    lines = [str(payload["value"])]
    for d, q in r.witness_chain:
        lines.append(f"quotient after dividing by {d}: {q}")
    if r.note:
        lines.append(r.note)
    return payload, lines


def _cmd_bmult(args):
    field = args.field or "S"
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    r = bmult(f, l)
    payload = {"command": "bmult", "field": field, "f": str(f), "l": str(l)}
    payload.update(r.to_json())
    comps = ", ".join(str(c) for c in payload["components"])
    return payload, [str(payload["value"]), f"boundary components: {comps}"]


def _cmd_gmult(args):
    field = args.field or "T"
    if field not in ("T", "TR"):
        raise MathError("geometric multiplicity runs over T or TR",
                        kind="field-mismatch")
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    r = gmult(f, [l], enriched=not args.unenriched)
    payload = {"command": "gmult", "field": field, "f": str(f), "l": str(l),
               "enriched": not args.unenriched}
    payload.update(r.to_json())
    lines = [str(payload["value"])]
    if r.note:
        lines.append(r.note)
    return payload, lines


def _cmd_pmult(args):
    field = args.field or "S"
    if field not in ("K", "S"):
        raise MathError("perturbation multiplicity runs over K or S",
                        kind="field-mismatch")
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    value, stats = pmult(f, l, height_bound=args.height_bound,
                         relaxed=args.relaxed, details=True)
    payload = {"command": "pmult", "field": field, "f": str(f), "l": str(l),
               "value": value, "stats": _jsonable(stats)}
    lines = [
        str(value),
        f"subdivisions visited: {stats['visited']}",
        f"subdivisions realized: {stats['realized']}",
        f"excluded by height bound: {stats['excluded_by_height_bound']}",
        f"height bound: {stats['height_bound']}",
    ]
    return payload, lines


def _cmd_descartes(args):
    signs = "".join(args.signs.replace(",", " ").split())
    value = descartes_univariate(signs, at=args.at)
    payload = {"command": "descartes", "signs": signs, "at": args.at,
               "value": value}
    return payload, [str(value)]


def _cmd_divides(args):
    field = args.field or "S"
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    if field in ("T", "TR"):
        quotients = ext_divides_once(f, l)
        method = "tropical-extension"
    else:
        quotients = divides_once(f, l)
        method = "one-step"
    payload = {"command": "divides", "field": field, "f": str(f), "l": str(l),
               "divides": bool(quotients), "method": method,
               "quotients": [str(q) for q in quotients]}
    lines = ["yes" if quotients else "no"]
    lines.extend(f"quotient: {q}" for q in payload["quotients"])
    return payload, lines


def _cmd_initial(args):
    field = args.field or "T"
    f = _poly_arg(args, field)
    w = _point(args.w)
    g = initial_form(f, w)
    payload = {"command": "initial", "field": field, "f": str(f),
               "w": [str(c) for c in w], "initial": str(g)}
    return payload, [str(g)]


def _cmd_subdivision(args):
    field = args.field or "T"
    f = _poly_arg(args, field)
    sub = newton_subdivision(f)
    payload = {"command": "subdivision", "field": field, "f": str(f)}
    payload.update(sub.to_json())
    lines = [
        f"cells: {len(sub.cells)}",
        f"dense: {sub.dense}",
        f"strictly convex: {sub.strictly_convex}",
    ]
    for cell in sub.cells:
        lines.append("cell: " + " ".join(f"({m[0]},{m[1]})" for m in cell))
    if args.svg:
        svg_subdivision(sub, args.svg)
        payload["svg"] = args.svg
        lines.append(f"svg written to {args.svg}")
    return payload, lines


def _cmd_curve(args):
    field = args.field or "T"
    f = _poly_arg(args, field)
    curve = tropical_curve(f)
    payload = {"command": "curve", "field": field, "f": str(f),
               "balanced": curve.is_balanced()}
    payload.update(curve.to_json())
    lines = [f"vertices: {len(curve.vertices)}", f"edges: {len(curve.edges)}",
             f"balanced: {curve.is_balanced()}"]
    for v in curve.vertices:
        lines.append(f"vertex: ({v[0]}, {v[1]})")
    for e in curve.edges:
        w = f"weight {e.weight}"
        if e.is_ray:
            lines.append(f"ray: from ({e.a[0]}, {e.a[1]}) direction "
                         f"({e.direction[0]},{e.direction[1]}) {w}")
        else:
            lines.append(f"segment: ({e.a[0]}, {e.a[1]}) to "
                         f"({e.b[0]}, {e.b[1]}) {w}")
    if args.svg:
        svg_curve(curve, args.svg)
        payload["svg"] = args.svg
        lines.append(f"svg written to {args.svg}")
    return payload, lines


def _cmd_setmult(args):
    grid = args.grid
    if args.grid_file:
        try:
            with open(args.grid_file, "r", encoding="utf-8") as fh:
                grid = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read grid file: {exc}")
    if grid is None:
        raise ParseError("missing sign grid: give --grid or --grid-file")
    rows = _grid_rows(grid)
    R = SignSetPoly.from_grid(list(reversed(rows)), _var_tuple(args))
    l = parse_poly(args.l, "S", R.vars)
    value = setmult_bound(R, l, mode=args.mode, cap=args.cap)
    payload = {"command": "setmult", "mode": args.mode, "l": str(l),
               "grid": R.grid(), "undetermined": len(R.undetermined()),
               "value": value}
    return payload, [str(value)]


def _cmd_resultant(args):
    try:
        with open(args.system, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read system file: {exc}")
    ss = SupportSystem.from_json(text)
    R, meta = stripped_resultant(ss)
    payload = {"command": "resultant", "matrix_size": meta["size"],
               "resultant": str(R), "meta": _jsonable(meta)}
    if args.out == "signgrid" and not args.signs:
        raise ParseError("--out signgrid needs --signs")
    if args.signs:
        smap = _sign_map(args.signs)
        grid = specialize_signs(R, smap, ss.aux_names).grid()
        payload["signs"] = {k: ("+" if s > 0 else "-") for k, s in smap.items()}
        payload["grid"] = grid
    if args.out == "signgrid":
        lines = payload["grid"].splitlines()
    else:
        lines = [str(R), f"matrix size: {meta['size']}"]
        if "grid" in payload:
            lines.append("sign grid:")
            lines.extend(payload["grid"].splitlines())
    return payload, lines


def _query_vector(args, field: str):
    if field == "S":
        if not args.signs:
            raise ParseError("sign systems need --signs, e.g. --signs +,+")
        return _sign_vec(args.signs)
    if field == "TR":
        if not (args.at and args.signs):
            raise ParseError("TR queries need both --at and --signs")
        return tuple(zip(_sign_vec(args.signs), _point(args.at)))
    if not args.at:
        raise ParseError("T queries need --at, e.g. --at 3,0")
    return _point(args.at)


def _cmd_system_bound(args):
    field = args.field or "S"
    f = _poly_arg(args, field)
    g = parse_poly(args.g, field, f.vars)
    h = _query_vector(args, field)
    report = system_bound([f, g], h, height_bound=args.height_bound or 8)
    payload = {"command": "system-bound", "field": field, "f": str(f),
               "g": str(g)}
    payload.update(report.to_json())
    exact = "unknown" if report.exact is None else report.exact
    lines = [f"lower: {report.lower}", f"upper: {report.upper}",
             f"exact: {exact}"]
    lines.extend(report.notes)
    return payload, lines


def _cmd_epsilon_n(args):
    field = args.field or "S"
    if field != "S":
        raise MathError("the lift search runs over S", kind="field-mismatch")
    f = _poly_arg(args, field)
    g = parse_poly(args.g, field, f.vars)
    h = _sign_vec(args.signs)
    hb = args.height_bound or 8
    value = epsilon_N([f, g], h, height_bound=hb, cap=args.cap)
    payload = {"command": "epsilon-n", "f": str(f), "g": str(g),
               "signs": args.signs, "height_bound": hb, "value": value}
    return payload, [str(value)]


def _cmd_transverse(args):
    field = args.field or "T"
    if field not in ("T", "TR"):
        raise MathError("transverse counting runs over T or TR",
                        kind="field-mismatch")
    f = _poly_arg(args, field)
    g = parse_poly(args.g, field, f.vars)
    payload = {"command": "transverse", "field": field, "f": str(f),
               "g": str(g)}
    if args.at:
        h = _query_vector(args, field)
        value = transverse_case_N([f, g], h)
        payload.update({"at": args.at, "value": value})
        if args.signs:
            payload["signs"] = args.signs
        return payload, [str(value)]
    points = transverse_intersections([f, g])
    recs = []
    lines = [f"transverse crossings: {len(points)}"]
    hs = _sign_vec(args.signs) if args.signs else None
    for p in points:
        rec = {"location": [str(c) for c in p.location], "m_K": m_K(p)}
        desc = (f"point ({p.location[0]}, {p.location[1]}): "
                f"m_K = {rec['m_K']}")
        if hs is not None:
            rec["m_S"] = m_S(p, hs)
            desc += f", m_S = {rec['m_S']}"
        recs.append(rec)
        lines.append(desc)
    payload["points"] = recs
    return payload, lines


def _cmd_real_quotient(args):
    field = args.field or "S"
    if field != "S":
        raise MathError("real quotient feasibility runs over S",
                        kind="field-mismatch")
    f = _poly_arg(args, field)
    l = _line_arg(args, field, f)
    res = real_linear_quotient_feasible(f, l)
    payload = {"command": "real-quotient", "f": str(f), "l": str(l)}
    payload.update(res.to_json())
    lines = [res.status]
    if res.quotient is not None:
        lines.append(f"quotient: {res.quotient}")
        lines.append(f"lift of l: {res.lift}")
    if res.certificate is not None:
        if res.certificate.chain:
            lines.append(f"contradiction chain: {res.certificate.chain}")
        combo = " + ".join(f"{m}*(row {i})"
                           for i, m in res.certificate.combination)
        lines.append(f"infeasible combination: {combo}")
    return payload, lines


def _cmd_verify_cert(args):
    field = args.field or "S"
    if field != "S":
        raise MathError("certificates are checked over S",
                        kind="field-mismatch")
    f = _poly_arg(args, field)
    factor_texts = [t.strip() for t in args.factors.split(";") if t.strip()]
    if not factor_texts:
        raise ParseError("empty factor list")
    factors = [rat_poly(t, f.vars) for t in factor_texts]
    ok = verify_certificate(f, factors)
    payload = {"command": "verify-cert", "f": str(f),
               "factors": [str(p) for p in factors], "verified": ok}
    if ok:
        return payload, ["verified"]
    payload["kind"] = "verify-failed"
    return payload, ["certificate does not reproduce the sign polynomial"], 1


def _cmd_examples(args):
    if args.action == "list":
        payload = {"command": "examples", "count": len(REGISTRY),
                   "examples": [{"id": r.id, "title": r.title}
                                for r in REGISTRY]}
        width = max(len(r.id) for r in REGISTRY)
        lines = [f"{r.id:<{width}}  {r.title}" for r in REGISTRY]
        lines.append(f"{len(REGISTRY)} examples")
        return payload, lines
    if args.all:
        results = []
        lines = []
        for rec in REGISTRY:
            ok, _ = run_example(rec)
            results.append({"id": rec.id, "ok": ok})
            lines.append(f"{'ok' if ok else 'FAIL'}  {rec.id}")
        npass = sum(1 for r in results if r["ok"])
        payload = {"command": "examples", "results": results,
                   "passed": npass, "total": len(results)}
        lines.append(f"{npass}/{len(results)} examples reproduced")
        if npass != len(results):
            payload["kind"] = "example-mismatch"
            return payload, lines, 1
        return payload, lines
    if not args.id:
        raise ParseError("give an example id or --all")
    rec = get_example(args.id)
    ok, actual = run_example(rec)
    payload = {"command": "examples", "id": rec.id, "title": rec.title,
               "ok": ok, "actual": actual}
    lines = [f"{rec.id}: {rec.title}"]
    lines.extend(_render(actual))
    if not ok:
        payload["expected"] = rec.expected
        payload["kind"] = "example-mismatch"
        lines.append("MISMATCH; expected:")
        lines.extend(_render(rec.expected))
        return payload, lines, 1
    return payload, lines


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--field", choices=("K", "S", "T", "TR"),
                        help="hyperfield (default: S for sign computations, "
                             "T for tropical ones)")
    shared.add_argument("--json", action="store_true",
                        help="print the canonical JSON payload")
    shared.add_argument("--svg", metavar="PATH",
                        help="write an SVG picture (subdivision and curve)")
    shared.add_argument("--height-bound", type=int, metavar="N",
                        help="height bound for lift and perturbation searches")
    shared.add_argument("--seedless", action="store_true",
                        help="assert determinism; no randomness is used anywhere")

    parser = argparse.ArgumentParser(
        prog="hypermult",
        description="Exact linear-factor multiplicities over hyperfields, "
                    "tropical curves, sparse resultants, and solution-count "
                    "bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text, svg_ok=False):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.set_defaults(handler=handler, svg_ok=svg_ok)
        return p

    def poly_opts(p, line=True, grid=True):
        p.add_argument("-f", metavar="POLY", help="polynomial, e.g. \"1 + x - y^2\"")
        if grid:
            p.add_argument("--grid", metavar="ROWS",
                           help="2-variable coefficient grid, rows top-down "
                                "separated by '/', e.g. \"- . / + +\"")
            p.add_argument("--grid-file", metavar="PATH",
                           help="file holding the coefficient grid")
        p.add_argument("--vars", metavar="NAMES",
                       help="comma-separated variable names (default: inferred)")
        if line:
            p.add_argument("-l", metavar="LINE", required=True,
                           help="linear factor, e.g. \"x - 1\" or \"1 + x + y\"")

    p = add("mult", _cmd_mult, "linear-factor multiplicity")
    poly_opts(p)

    p = add("bmult", _cmd_bmult, "boundary multiplicity (min over projections)")
    poly_opts(p)

    p = add("gmult", _cmd_gmult, "geometric multiplicity of a tropical line")
    poly_opts(p)
    p.add_argument("--unenriched", action="store_true",
                   help="ignore coefficient signs (pure shapes)")

    p = add("pmult", _cmd_pmult, "perturbation multiplicity over subdivisions")
    poly_opts(p)
    p.add_argument("--relaxed", action="store_true",
                   help="drop the strict-convexity requirement")

    p = add("descartes", _cmd_descartes,
            "Descartes sign-change count for a univariate sign sequence")
    p.add_argument("signs", help="sign sequence, e.g. \"+ - + - +\" or +-+-+")
    p.add_argument("--at", default="x-1", choices=("x-1", "x+1"),
                   help="which linear factor to count (default x-1)")

    p = add("divides", _cmd_divides, "one-step divisibility test")
    poly_opts(p)

    p = add("initial", _cmd_initial, "initial form at a weight vector")
    poly_opts(p, line=False)
    p.add_argument("-w", metavar="POINT", required=True,
                   help="weight vector, e.g. \"0,0\"")

    p = add("subdivision", _cmd_subdivision,
            "Newton subdivision dual to the tropical curve", svg_ok=True)
    poly_opts(p, line=False)

    p = add("curve", _cmd_curve, "plane tropical curve", svg_ok=True)
    poly_opts(p, line=False)

    p = add("setmult", _cmd_setmult,
            "max boundary multiplicity over a set of sign polynomials")
    p.add_argument("--grid", metavar="ROWS",
                   help="sign-set grid (+ - 0 * .), rows top-down "
                        "separated by '/'")
    p.add_argument("--grid-file", metavar="PATH",
                   help="file holding the sign-set grid")
    p.add_argument("--vars", metavar="NAMES",
                   help="comma-separated variable names (default x,y)")
    p.add_argument("-l", metavar="LINE", required=True,
                   help="linear factor, e.g. \"1 + u + v\"")
    p.add_argument("--mode", choices=("boundary", "full"), default="boundary",
                   help="boundary: per-line bound; full: enumerate members")
    p.add_argument("--cap", type=int, default=10,
                   help="max undetermined entries for full mode")

    p = add("resultant", _cmd_resultant, "sparse resultant of a support system")
    p.add_argument("--system", metavar="FILE", required=True,
                   help="JSON support system")
    p.add_argument("--signs", metavar="ASSIGN",
                   help="sign specialization, e.g. a=+,b=+")
    p.add_argument("--out", choices=("poly", "signgrid"), default="poly",
                   help="poly: the integer resultant; signgrid: the "
                        "specialized sign-set grid")

    p = add("system-bound", _cmd_system_bound,
            "solution-count bracket for a square system")
    poly_opts(p, line=False, grid=False)
    p.add_argument("-g", metavar="POLY", required=True, help="second polynomial")
    p.add_argument("--signs", metavar="SIGNS", help="query signs, e.g. +,+")
    p.add_argument("--at", metavar="POINT", help="query point over T or TR")

    p = add("epsilon-n", _cmd_epsilon_n,
            "certified lower bound from bounded-height lifts")
    poly_opts(p, line=False, grid=False)
    p.add_argument("-g", metavar="POLY", required=True, help="second polynomial")
    p.add_argument("--signs", metavar="SIGNS", required=True,
                   help="query signs, e.g. +,+")
    p.add_argument("--cap", type=int, help="stop once this value is reached")

    p = add("transverse", _cmd_transverse,
            "transverse crossings and exact counts over T or TR")
    poly_opts(p, line=False, grid=False)
    p.add_argument("-g", metavar="POLY", required=True, help="second polynomial")
    p.add_argument("--at", metavar="POINT", help="query point, e.g. 3,0")
    p.add_argument("--signs", metavar="SIGNS",
                   help="query signs for TR or for per-point m_S, e.g. +,-")

    p = add("real-quotient", _cmd_real_quotient,
            "real one-step quotient feasibility with certificate")
    poly_opts(p)

    p = add("verify-cert", _cmd_verify_cert,
            "check a real factorization certificate against a sign polynomial")
    poly_opts(p, line=False)
    p.add_argument("--factors", metavar="LIST", required=True,
                   help="semicolon-separated rational factors, e.g. "
                        "\"1 + x + y; 1 + 1/2x - 3/10y\"")

    p = add("examples", _cmd_examples, "list or replay the worked examples")
    p.add_argument("action", choices=("list", "run"))
    p.add_argument("id", nargs="?", help="example id (see: examples list)")
    p.add_argument("--all", action="store_true", help="run every example")

    return parser


# ---------------------------------------------------------------------------
# entry point


def _print_error(exc: HypermultError, json_out: bool) -> None:
    kind = exc.kind or "error"
    if json_out:
        print(json.dumps({"error": str(exc), "kind": kind}, sort_keys=True),
              file=sys.stderr)
    else:
        print(f"error[{kind}]: {exc}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    json_out = bool(getattr(args, "json", False))
    try:
        if getattr(args, "svg", None) and not getattr(args, "svg_ok", False):
            raise ParseError("--svg applies to the subdivision and curve "
                             "subcommands")
        result = args.handler(args)
    except ParseError as exc:
        _print_error(exc, json_out)
        return 2
    except MathError as exc:
        _print_error(exc, json_out)
        return 1
    except HypermultError as exc:
        _print_error(exc, json_out)
        return 1
    payload, lines = result[0], result[1]
    code = result[2] if len(result) > 2 else 0
    if getattr(args, "seedless", False):
        payload["seedless"] = True
    if json_out:
        print(json.dumps(_jsonable(payload), sort_keys=True))
    else:
        for ln in lines:
            print(ln)
    return code


if __name__ == "__main__":
    sys.exit(main())
