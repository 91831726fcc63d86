"""Tropical plane geometry over extensions of K and S.

Polynomial functions (min-plus), Newton subdivisions from exact lower hulls,
(enriched) tropical plane curves, initial forms, geometric multiplicity by
line subtraction, exact one-step division over extension fields, multiplicity
over extensions, and the perturbation multiplicity search.  Everything is
exact rational arithmetic; all geometry is restricted to n <= 2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from hypermult.errors import MathError
from hypermult.geometry import (
    affine_dim,
    convex_hull_2d,
    cross2,
    dot,
    hull_inequalities,
    is_dense_support,
    lattice_length,
    point_in_hull,
    primitive,
    vsub,
)
from hypermult.hyperfield import (
    FIELDS,
    HyperSubset,
    HyperValue,
    hyper_mul,
    iterated_hypersum,
    subset_contains,
    unit,
    zero,
)
from hypermult.multiplicity import INF, MultiplicityResult
from hypermult.polyring import HPoly, product_membership, quotient_support
from hypermult.realcert import Constraint, LinearSystem, fm_solve

Q = Fraction
Vec = tuple[Fraction, Fraction]

_EXT_OF_BASE = {"K": "T", "S": "TR"}

_LINE_DIRS = ((1, 0), (0, 1), (-1, -1))


def _primitive_q(d: Sequence[Fraction]) -> tuple[int, int]:
    """Primitive integer direction of a rational vector."""
    scale = math.lcm(*(Fraction(c).denominator for c in d))
    return primitive(tuple(int(c * scale) for c in d))


def _require_plane(f: HPoly):
    if f.nvars != 2:
        raise MathError("plane geometry needs exactly 2 variables",
                        kind="unsupported-dimension")


def _heights(f: HPoly) -> dict[tuple[int, ...], Fraction]:
    return {m: v.exp for m, v in f.terms.items()}


# ---------------------------------------------------------------------------
# polynomial functions


def pf_eval(f: HPoly, x: Sequence[Union[int, Fraction]]) -> Fraction:
    """min over the support of val(a_m) + <m, x>."""
    if f.is_zero:
        raise MathError("the zero polynomial has no polynomial function",
                        kind="bad-value")
    pt = tuple(Q(c) for c in x)
    if len(pt) != f.nvars:
        raise MathError("point dimension mismatch", kind="bad-value")
    return min(v.exp + dot(m, pt) for m, v in f.terms.items())


def pf_argmin(f: HPoly, x: Sequence[Union[int, Fraction]]) -> tuple[tuple[int, ...], ...]:
    """The monomials achieving the minimum at x."""
    pt = tuple(Q(c) for c in x)
    best = pf_eval(f, pt)
    return tuple(sorted(m for m, v in f.terms.items() if v.exp + dot(m, pt) == best))


def _region_system(f: HPoly, m: tuple[int, ...]) -> LinearSystem:
    """Strict system: m is the unique minimizer of the polynomial function."""
    names = tuple(f"w{i}" for i in range(f.nvars))
    cons = []
    vm = f.terms[m].exp
    for k, v in f.terms.items():
        if k == m:
            continue
        coeffs = {names[i]: Q(m[i] - k[i]) for i in range(f.nvars)}
        cons.append(Constraint.make(coeffs, "<", v.exp - vm))
    return LinearSystem(tuple(cons))


def essential_monomials(f: HPoly) -> tuple[tuple[int, ...], ...]:
    """Monomials that minimize uniquely somewhere (dual-subdivision vertices)."""
    if f.is_zero:
        return ()
    out = []
    for m in sorted(f.terms):
        if fm_solve(_region_system(f, m)).status == "FEASIBLE":
            out.append(m)
    return tuple(out)


def region_sample(f: HPoly, m: tuple[int, ...]) -> Vec | None:
    """A rational point where m is the unique minimizer, or None."""
    res = fm_solve(_region_system(f, m))
    if res.status != "FEASIBLE":
        return None
    s = res.sample or {}
    return tuple(s.get(f"w{i}", Q(0)) for i in range(f.nvars))


# ---------------------------------------------------------------------------
# Newton subdivisions


@dataclass(frozen=True)
class NewtonSubdivision:
    points: tuple[tuple[tuple[int, ...], Fraction], ...]  # (monomial, height)
    cells: tuple[tuple[tuple[int, ...], ...], ...]  # each cell: its vertices ccw
    cell_points: tuple[tuple[tuple[int, ...], ...], ...]  # all support pts per cell
    dense: bool
    strictly_convex: bool

    def vertex_set(self) -> frozenset:
        out = set()
        for c in self.cells:
            out.update(c)
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "points": [[list(m), str(h)] for m, h in self.points],
            "cells": [[list(v) for v in c] for c in self.cells],
            "dense": self.dense,
            "strictly_convex": self.strictly_convex,
        }


def _plane_through(p1, p2, p3, h):
    """(a, b, c) with a*x + b*y + c interpolating heights at 3 points."""
    (x1, y1), (x2, y2), (x3, y3) = p1, p2, p3
    det = Q(cross2(vsub(p2, p1), vsub(p3, p1)))
    if det == 0:
        return None
    h1, h2, h3 = h[p1], h[p2], h[p3]
    a = ((h2 - h1) * (y3 - y1) - (h3 - h1) * (y2 - y1)) / det
    b = ((h3 - h1) * (x2 - x1) - (h2 - h1) * (x3 - x1)) / det
    c = h1 - a * x1 - b * y1
    return (a, b, c)


def newton_subdivision(f: HPoly) -> NewtonSubdivision:
    """Projection of the lower hull of the lifted support (n <= 2)."""
    if f.nvars > 2:
        raise MathError("Newton subdivisions are computed for n <= 2 only",
                        kind="unsupported-dimension")
    if f.is_zero:
        raise MathError("the zero polynomial has no Newton subdivision",
                        kind="bad-value")
    h = _heights(f)
    supp = sorted(h)
    points = tuple((m, h[m]) for m in supp)
    dense = is_dense_support(supp)
    if f.nvars == 1:
        supp2 = [(m[0], 0) for m in supp]
        h2 = {(m[0], 0): h[m] for m in supp}
        cells2, cps2 = _envelope_cells({tuple(p): h2[tuple(p)] for p in supp2})
        cells = tuple(tuple((v[0],) for v in c) for c in cells2)
        cps = tuple(tuple((p[0],) for p in cp) for cp in cps2)
    else:
        cells, cps = _envelope_cells(h)
    vert = set()
    for c in cells:
        vert.update(c)
    if f.nvars == 1:
        sc = all((m[0],) in {v for c in cells for v in c} for m in supp)
    else:
        sc = all(m in vert for m in supp)
    return NewtonSubdivision(points, cells, cps, dense, sc)


def _envelope_cells(h: dict):
    """Maximal lower-hull contact sets for 2d exponent dicts."""
    supp = sorted(h)
    if len(supp) == 1:
        return ( (tuple(supp),), (tuple(supp),) )
    dim = affine_dim(supp)
    if dim == 0:
        return ((tuple(supp[:1]),), (tuple(supp),))
    if dim == 1:
        d = primitive(vsub(supp[-1], supp[0]))
        param = {m: dot(vsub(m, supp[0]), d) for m in supp}  # monotone along d
        pts = sorted(supp, key=lambda m: param[m])
        # 1d lower convex chain over (param, height)
        chain: list = []
        for m in pts:
            while len(chain) >= 2:
                a, b = chain[-2], chain[-1]
                lhs = (h[b] - h[a]) * (param[m] - param[b])
                rhs = (h[m] - h[b]) * (param[b] - param[a])
                if lhs >= rhs:
                    chain.pop()
                else:
                    break
            chain.append(m)
        cells = []
        cps = []
        for a, b in zip(chain, chain[1:]):
            on = tuple(m for m in pts if param[a] <= param[m] <= param[b]
                       and (h[m] - h[a]) * (param[b] - param[a])
                       == (h[b] - h[a]) * (param[m] - param[a]))
            cells.append((a, b))
            cps.append(on)
        return tuple(cells), tuple(cps)
    # full-dimensional: enumerate supporting planes through support triples
    seen: dict = {}
    for t in itertools.combinations(supp, 3):
        plane = _plane_through(t[0], t[1], t[2], h)
        if plane is None:
            continue
        a, b, c = plane
        ok = True
        contact = []
        for m in supp:
            val = a * m[0] + b * m[1] + c
            if val > h[m]:
                ok = False
                break
            if val == h[m]:
                contact.append(m)
        if not ok:
            continue
        key = frozenset(contact)
        if key not in seen:
            hull = convex_hull_2d(contact)
            if len(hull) >= 3:
                seen[key] = (tuple(hull), tuple(sorted(contact)))
    cells = sorted(seen.values())
    return tuple(c for c, _ in cells), tuple(p for _, p in cells)


# ---------------------------------------------------------------------------
# tropical curves


@dataclass(frozen=True)
class CurveEdge:
    a: Vec
    b: Vec | None  # None for rays
    direction: tuple[int, int] | None  # primitive, rays only
    weight: int
    dual: tuple[tuple[int, ...], tuple[int, ...]]  # adjacent-region monomials

    @property
    def is_ray(self) -> bool:
        return self.b is None

    def to_json(self) -> dict:
        out: dict = {"a": [str(c) for c in self.a], "weight": self.weight,
                     "dual": [list(self.dual[0]), list(self.dual[1])]}
        if self.b is None:
            out["direction"] = list(self.direction)
        else:
            out["b"] = [str(c) for c in self.b]
        return out


@dataclass(frozen=True)
class TropicalCurve:
    vertices: tuple[Vec, ...]
    edges: tuple[CurveEdge, ...]
    subdivision: NewtonSubdivision

    def is_balanced(self) -> bool:
        incidence: dict = {}
        for e in self.edges:
            if e.is_ray:
                incidence.setdefault(e.a, []).append((e.direction, e.weight))
            else:
                da = _primitive_q(vsub(e.b, e.a))
                incidence.setdefault(e.a, []).append((da, e.weight))
                incidence.setdefault(e.b, []).append(
                    ((-da[0], -da[1]), e.weight))
        for v in self.vertices:
            around = incidence.get(v, [])
            sx = sum(Q(d[0]) * w for d, w in around)
            sy = sum(Q(d[1]) * w for d, w in around)
            if sx != 0 or sy != 0:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "vertices": [[str(c) for c in v] for v in self.vertices],
            "edges": [e.to_json() for e in self.edges],
        }


def _cell_vertex(cell, h) -> Vec:
    """The curve vertex dual to a 2d cell: solve the tie equations."""
    m1 = cell[0]
    for m2, m3 in itertools.combinations(cell[1:], 2):
        det = cross2(vsub(m2, m1), vsub(m3, m1))
        if det == 0:
            continue
        r1 = h[m1] - h[m2]
        r2 = h[m1] - h[m3]
        a1, b1 = vsub(m2, m1)
        a2, b2 = vsub(m3, m1)
        w1 = Q(r1 * b2 - r2 * b1, det)
        w2 = Q(a1 * r2 - a2 * r1, det)
        return (w1, w2)
    raise MathError("degenerate cell", kind="internal")


def tropical_curve(f: HPoly) -> TropicalCurve:
    """The bend locus of the polynomial function, with dual data (n = 2)."""
    _require_plane(f)
    sub = newton_subdivision(f)
    h = _heights(f)
    supp = sorted(h)
    if len(supp) == 1:
        return TropicalCurve((), (), sub)
    if affine_dim(supp) == 1:
        # union of full lines, one per 1d cell, each stored as two rays
        edges = []
        for (m1, m2), cp in zip(sub.cells, sub.cell_points):
            dm = vsub(m2, m1)
            rhs = h[m1] - h[m2]
            if dm[0] != 0:
                anchor = (Q(rhs, dm[0]), Q(0))
            else:
                anchor = (Q(0), Q(rhs, dm[1]))
            d = primitive((-dm[1], dm[0]))
            w = lattice_length(m1, m2)
            edges.append(CurveEdge(anchor, None, d, w, (m1, m2)))
            edges.append(CurveEdge(anchor, None, (-d[0], -d[1]), w, (m1, m2)))
        return TropicalCurve((), tuple(edges), sub)
    vertex_of = {cell: _cell_vertex(cell, h) for cell in sub.cells}
    by_side: dict = {}
    for cell in sub.cells:
        k = len(cell)
        for i in range(k):
            u, v = cell[i], cell[(i + 1) % k]
            by_side.setdefault(frozenset((u, v)), []).append(cell)
    edges = []
    for side, cells in sorted(by_side.items(), key=lambda kv: sorted(kv[0])):
        u, v = sorted(side)
        w = lattice_length(u, v)
        if len(cells) == 2:
            a, b = vertex_of[cells[0]], vertex_of[cells[1]]
            if (b, a) < (a, b):
                a, b = b, a
            edges.append(CurveEdge(a, b, None, w, (u, v)))
        else:
            cell = cells[0]
            anchor = vertex_of[cell]
            dv = vsub(v, u)
            d = primitive((-dv[1], dv[0]))
            ref = next(k for k in cell if cross2(vsub(k, u), dv) != 0)
            if dot(vsub(ref, u), d) < 0:
                d = (-d[0], -d[1])
            edges.append(CurveEdge(anchor, None, d, w, (u, v)))
    verts = tuple(sorted(set(vertex_of.values())))
    return TropicalCurve(verts, tuple(edges), sub)


# ---------------------------------------------------------------------------
# enriched curves


@dataclass(frozen=True)
class EnrichedCurve:
    poly: HPoly
    curve: TropicalCurve
    labels: tuple[tuple[tuple[int, ...], int], ...]  # essential monomial -> angular

    def label_map(self) -> dict:
        return dict(self.labels)

    def to_json(self) -> dict:
        return {
            "curve": self.curve.to_json(),
            "labels": [[list(m), a] for m, a in self.labels],
        }


def enriched_curve(f: HPoly) -> EnrichedCurve:
    _require_plane(f)
    curve = tropical_curve(f)
    ess = essential_monomials(f)
    labels = tuple((m, f.terms[m].angular) for m in ess)
    return EnrichedCurve(f, curve, labels)


def _subset_member(sub: HyperSubset) -> HyperValue:
    """A deterministic representative of a hypersum subset."""
    if sub.finite is not None:
        nz = sorted((v for v in sub.finite if not v.is_zero),
                    key=lambda v: (v.exp, -v.angular))
        if nz:
            return nz[0]
        return zero(sub.field)
    ang = max(sub.angulars)
    return HyperValue(sub.field, ang, sub.level)


def canonical_product(f: HPoly, g: HPoly) -> HPoly:
    """A deterministic member of the product set f*g."""
    if f.field != g.field or f.nvars != g.nvars:
        raise MathError("field or variable mismatch", kind="field-mismatch")
    contrib: dict = {}
    for m1, v1 in f.terms.items():
        for m2, v2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            contrib.setdefault(m, []).append(hyper_mul(v1, v2))
    terms = {}
    for m, vals in contrib.items():
        rep = _subset_member(iterated_hypersum(f.field, vals))
        if not rep.is_zero:
            terms[m] = rep
    return HPoly(f.field, f.nvars, terms, vars=f.vars)


def curve_sum(A: EnrichedCurve, B: EnrichedCurve) -> EnrichedCurve:
    """Union of sets with added weights and multiplied labels."""
    return enriched_curve(canonical_product(A.poly, B.poly))


# ---------------------------------------------------------------------------
# initial forms


def initial_form(f: HPoly, w: Sequence[Union[int, Fraction]]) -> HPoly:
    """Angular parts of the terms minimizing val + <m, w>, over the base."""
    fld = FIELDS[f.field]
    base = fld.base
    if f.is_zero:
        return HPoly(base, f.nvars, {}, vars=f.vars)
    pt = tuple(Q(c) for c in w)
    best = pf_eval(f, pt)
    terms = {
        m: unit(base, v.angular)
        for m, v in f.terms.items()
        if v.exp + dot(m, pt) == best
    }
    return HPoly(base, f.nvars, terms, vars=f.vars)


# ---------------------------------------------------------------------------
# geometric multiplicity


@dataclass
class _REdge:
    a: Vec
    b: Vec | None
    d: tuple[int, int] | None  # primitive direction for rays
    weight: int
    sides: tuple[int, int]


class _Residual:
    """Mutable working copy of an enriched curve during line subtraction."""

    def __init__(self, edges, labels, samples):
        self.edges: list[_REdge] = edges
        self.labels: dict[int, int] = labels
        self.samples: dict[int, Vec] = samples

    @classmethod
    def from_enriched(cls, V: EnrichedCurve) -> "_Residual":
        ids = {m: i for i, (m, _) in enumerate(V.labels)}
        labels = {ids[m]: a for m, a in V.labels}
        samples = {}
        for m, _ in V.labels:
            s = region_sample(V.poly, m)
            if s is None:
                raise MathError("essential region without sample", kind="internal")
            samples[ids[m]] = s
        edges = []
        for e in V.curve.edges:
            r1, r2 = ids[e.dual[0]], ids[e.dual[1]]
            edges.append(_REdge(e.a, e.b, e.direction, e.weight, (r1, r2)))
        return cls(edges, labels, samples)

    def copy(self) -> "_Residual":
        return _Residual([ _REdge(e.a, e.b, e.d, e.weight, e.sides) for e in self.edges],
                         dict(self.labels), dict(self.samples))

    def vertex_points(self) -> list[Vec]:
        pts = set()
        for e in self.edges:
            pts.add(e.a)
            if e.b is not None:
                pts.add(e.b)
        return sorted(pts)


def _line_key(p: Vec, d: tuple[int, int]):
    dp = primitive(d)
    if dp[0] < 0 or (dp[0] == 0 and dp[1] < 0):
        dp = (-dp[0], -dp[1])
    return (dp, cross2(dp, p))


def _param(p: Vec, dp) -> Fraction:
    return dot(p, dp)


def _point_at(key, t: Fraction, ref: Vec) -> Vec:
    dp, _ = key
    t0 = _param(ref, dp)
    scale = Q(t - t0, dp[0] * dp[0] + dp[1] * dp[1])
    return (ref[0] + dp[0] * scale, ref[1] + dp[1] * scale)


def _edge_interval(e: _REdge, key):
    """(lo, hi) params on the supporting line, None meaning infinite."""
    dp, _ = key
    if e.b is None:
        t = _param(e.a, dp)
        return (t, None) if e.d == dp else (None, t)
    t1, t2 = _param(e.a, dp), _param(e.b, dp)
    return (min(t1, t2), max(t1, t2))


def _subtract_ray(work: _Residual, apex: Vec, d: tuple[int, int], merges: list) -> bool:
    """Reduce weight 1 along the full ray apex + t*d; False if not covered."""
    key = _line_key(apex, d)
    dp = key[0]
    forward = d == dp  # else the ray runs toward decreasing parameter
    t_apex = _param(apex, dp)
    on_line = [(i, _edge_interval(e, key)) for i, e in enumerate(work.edges)
               if e.weight > 0 and _line_key(e.a, e.d if e.b is None else
                                             _primitive_q(vsub(e.b, e.a))) == key]
    # sweep for coverage
    covered = []
    pos = t_apex
    guard = len(on_line) + 2
    while guard:
        guard -= 1
        nxt = None
        for i, (lo, hi) in on_line:
            if forward:
                if (lo is None or lo <= pos) and (hi is None or hi > pos):
                    nxt = (i, lo, hi)
                    break
            else:
                if (hi is None or hi >= pos) and (lo is None or lo < pos):
                    nxt = (i, lo, hi)
                    break
        if nxt is None:
            return False
        i, lo, hi = nxt
        if forward:
            covered.append((i, pos, hi))
            if hi is None:
                break
            pos = hi
        else:
            covered.append((i, lo, pos))
            if lo is None:
                break
            pos = lo
    else:
        return False
    # apply the subtraction edge by edge
    new_edges = []
    consumed = {i: (s, e) for i, s, e in covered}
    for i, e in enumerate(work.edges):
        if i not in consumed:
            new_edges.append(e)
            continue
        s, t = consumed[i]
        lo, hi = _edge_interval(e, key)
        ref = e.a
        pieces = []
        if lo is not None and s is not None and lo < s:
            pieces.append((lo, s, e.weight))
        elif lo is None and s is not None:
            pieces.append((None, s, e.weight))
        pieces.append((s, t, e.weight - 1))
        if hi is not None and t is not None and t < hi:
            pieces.append((t, hi, e.weight))
        elif hi is None and t is not None:
            pieces.append((t, None, e.weight))
        for plo, phi, wgt in pieces:
            if wgt == 0:
                merges.append(e.sides)
                continue
            if plo is None:
                anchor = _point_at(key, phi, ref)
                new_edges.append(_REdge(anchor, None, (-dp[0], -dp[1]), wgt, e.sides))
            elif phi is None:
                anchor = _point_at(key, plo, ref)
                new_edges.append(_REdge(anchor, None, dp, wgt, e.sides))
            else:
                if plo == phi:
                    continue
                pa = _point_at(key, plo, ref)
                pb = _point_at(key, phi, ref)
                new_edges.append(_REdge(pa, pb, None, wgt, e.sides))
    work.edges = new_edges
    return True


def _line_value_labels(l: HPoly, apex: Vec | None):
    """(valuations, angulars) of the three line coefficients."""
    c0 = l.coeff((0, 0))
    cx = l.coeff((1, 0))
    cy = l.coeff((0, 1))
    if c0.is_zero or cx.is_zero or cy.is_zero:
        raise MathError("a tropical line needs all three coefficients",
                        kind="bad-value")
    if apex is None:
        vals = (c0.exp, cx.exp, cy.exp)
    else:
        vals = (Q(0), -apex[0], -apex[1])
    return vals, (c0.angular, cx.angular, cy.angular)


def _line_region_label(q: Vec, vals, angs) -> int:
    values = (vals[0], vals[1] + q[0], vals[2] + q[1])
    best = min(values)
    idx = [i for i, v in enumerate(values) if v == best]
    if len(idx) != 1:
        raise MathError("sample point lies on the line", kind="internal")
    return angs[idx[0]]


def _try_subtract(work: _Residual, apex: Vec, vals, angs, enriched: bool):
    """Subtract the line at apex; None when impossible or label-inconsistent."""
    trial = work.copy()
    merges: list = []
    for d in _LINE_DIRS:
        if not _subtract_ray(trial, apex, d, merges):
            return None
    # union-find over regions merged through weight-0 pieces
    parent = {r: r for r in trial.labels}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for r1, r2 in merges:
        a, b = find(r1), find(r2)
        if a != b:
            parent[a] = b
    groups: dict = {}
    for r in trial.labels:
        groups.setdefault(find(r), []).append(r)
    new_labels = {}
    new_samples = {}
    for rep, members in groups.items():
        if enriched:
            us = {trial.labels[r] * _line_region_label(trial.samples[r], vals, angs)
                  for r in members}
            if len(us) > 1:
                return None
            new_labels[rep] = us.pop()
        else:
            new_labels[rep] = 1
        new_samples[rep] = trial.samples[members[0]]
    trial.labels = new_labels
    trial.samples = new_samples
    for e in trial.edges:
        e.sides = (find(e.sides[0]), find(e.sides[1]))
    return trial


def _on_residual(work: _Residual, p: Vec) -> bool:
    """Whether p lies on some positive-weight edge of the residual set."""
    for e in work.edges:
        if e.weight <= 0:
            continue
        if e.b is None:
            rel = vsub(p, e.a)
            if rel == (0, 0):
                return True
            if cross2(rel, e.d) == 0 and dot(rel, e.d) >= 0:
                return True
        else:
            d = vsub(e.b, e.a)
            rel = vsub(p, e.a)
            if cross2(rel, d) == 0 and 0 <= dot(rel, d) <= dot(d, d):
                return True
    return False


def _apex_candidates(work: _Residual) -> list[Vec]:
    verts = work.vertex_points()
    pts = set(verts)
    dirs = ((1, 0), (0, 1), (1, 1))
    lines = [(v, d) for v in verts for d in dirs]
    for (v1, d1), (v2, d2) in itertools.combinations(lines, 2):
        det = cross2(d1, d2)
        if det == 0:
            continue
        rhs = vsub(v2, v1)
        t = Q(cross2(rhs, d2), det)
        pts.add((v1[0] + d1[0] * t, v1[1] + d1[1] * t))
    return sorted(p for p in pts if _on_residual(work, p))


def _norm_line_list(L, field: str):
    """Each divisor: ('fixed', l) over the extension or ('free', l) over the base."""
    out = []
    fld = FIELDS[field]
    for l in L:
        if not isinstance(l, HPoly):
            raise MathError("divisors must be polynomials", kind="bad-value")
        if l.nvars != 2:
            raise MathError("plane geometry needs exactly 2 variables",
                            kind="unsupported-dimension")
        if len(l.terms) == 1:
            raise MathError("monomials have empty vanishing locus",
                            kind="monomial-divisor")
        if l.newton_degree() != 1:
            raise MathError("divisors must have Newton-degree 1", kind="bad-value")
        lf = FIELDS[l.field]
        if lf.extended:
            if l.field != field:
                raise MathError("field mismatch", kind="field-mismatch")
            out.append(("fixed", l))
        else:
            if lf.id != fld.base:
                raise MathError("free divisors live over the base field",
                                kind="field-mismatch")
            out.append(("free", l))
    return out


def gmult(V, L, enriched: bool = True) -> MultiplicityResult:
    """Geometric multiplicity: how many lines from L fit inside V.

    V: an EnrichedCurve or an HPoly over an extension field.  Divisors in L
    over the extension are fixed tropical lines; divisors over the base field
    stand for all of their lifts (any apex, prescribed signs).  In enriched
    mode quotient labels must stay consistent on merged complement regions.
    """
    if isinstance(V, HPoly):
        V = enriched_curve(V)
    if not isinstance(V, EnrichedCurve):
        raise MathError("expected an enriched curve or a polynomial", kind="bad-value")
    field = V.poly.field
    if not FIELDS[field].extended:
        raise MathError("geometric multiplicity lives over extension fields",
                        kind="unsupported-field")
    lines = _norm_line_list(L, field)
    work = _Residual.from_enriched(V)

    def rec(state: _Residual):
        best = 0
        best_apexes: list[Vec] = []
        for kind, l in lines:
            if kind == "fixed":
                vals, angs = _line_value_labels(l, None)
                candidates = [(vals[0] - vals[1], vals[0] - vals[2])]
            else:
                _, angs = _line_value_labels(l, (Q(0), Q(0)))
                candidates = _apex_candidates(state)
            for apex in candidates:
                if kind == "free":
                    vals = (Q(0), -apex[0], -apex[1])
                else:
                    vals, _ = _line_value_labels(l, None)
                nxt = _try_subtract(state, apex, vals, angs, enriched)
                if nxt is None:
                    continue
                sub_val, sub_apexes = rec(nxt)
                if 1 + sub_val > best:
                    best = 1 + sub_val
                    best_apexes = [apex] + sub_apexes
        return best, best_apexes

    value, apexes = rec(work)
    note = None
    if apexes:
        note = "line apexes: " + "; ".join(
            f"({a[0]}, {a[1]})" for a in apexes)
    return MultiplicityResult(value, note=note)


# ---------------------------------------------------------------------------
# exact one-step division over extension fields


def ext_divides_once(f: HPoly, l: HPoly, node_cap: int = 2_000_000) -> list[HPoly]:
    """All quotients g with f in g*l over T or TR, up to normal form.

    Candidate coefficient valuations live in the finite anchored domain
    closed under divisor-valuation offsets; a standard raising argument
    turns any quotient into one of this shape, so the empty answer is a
    proof that no quotient exists at all.
    """
    fld = FIELDS[f.field]
    if not fld.extended:
        raise MathError("use divides_once over base fields", kind="unsupported-field")
    if l.field != f.field or l.nvars != f.nvars:
        raise MathError("field or variable mismatch", kind="field-mismatch")
    if l.is_zero:
        raise MathError("division by the zero polynomial", kind="math")
    if f.is_zero:
        raise MathError("quotients of the zero polynomial are unconstrained",
                        kind="bad-value")
    unknowns = sorted(quotient_support(f, l),
                      key=lambda m: (sum(m), tuple(-e for e in m)))
    if not unknowns:
        return []
    fvals = sorted({v.exp for v in f.terms.values()})
    lvals = sorted({v.exp for v in l.terms.values()})
    anchors = sorted({fv - lv for fv in fvals for lv in lvals})
    offsets = sorted({a - b for a in lvals for b in lvals})
    domain = set(anchors)
    for _ in range(len(unknowns)):
        grown = domain | {d + o for d in domain for o in offsets}
        if grown == domain:
            break
        domain = grown
        if len(domain) > 10_000:
            raise MathError("division-candidate valuation domain too large",
                            kind="too-large")
    domain = sorted(domain)
    angulars = (1,) if fld.base == "K" else (1, -1)
    choices = [unit(f.field, a, v) for v in domain for a in angulars]
    choices.append(None)  # absent coefficient

    lsupp = sorted(l.terms)
    positions: dict = {}
    for ui, u in enumerate(unknowns):
        for p in lsupp:
            m = tuple(a + b for a, b in zip(u, p))
            positions.setdefault(m, []).append((ui, p))
    for m in f.terms:
        positions.setdefault(m, [])
    check_after: dict[int, list] = {i: [] for i in range(len(unknowns))}
    immediate = []
    for m, contribs in positions.items():
        if contribs:
            check_after[max(ui for ui, _ in contribs)].append(m)
        else:
            immediate.append(m)
    for m in immediate:
        if not f.coeff(m).is_zero:
            return []  # f has support unreachable from any quotient

    assigned: list = [None] * len(unknowns)
    results: dict = {}
    budget = [node_cap]

    def position_ok(m) -> bool:
        vals = []
        for ui, p in positions[m]:
            g = assigned[ui]
            if g is not None:
                vals.append(hyper_mul(g, l.terms[p]))
        return subset_contains(iterated_hypersum(f.field, vals), f.coeff(m))

    def rec(i: int):
        if budget[0] <= 0:
            raise MathError("division search exceeded the node budget",
                            kind="too-large")
        budget[0] -= 1
        if i == len(unknowns):
            terms = {unknowns[k]: assigned[k] for k in range(len(unknowns))
                     if assigned[k] is not None}
            g = HPoly(f.field, f.nvars, terms, vars=f.vars)
            results.setdefault(g.key(), g)
            return
        for c in choices:
            assigned[i] = c
            if all(position_ok(m) for m in check_after[i]):
                rec(i + 1)
        assigned[i] = None

    rec(0)
    out = [g for _, g in sorted(results.items())]
    for g in out:
        if not product_membership(f, g, l):
            raise MathError("division search produced a bad quotient",
                            kind="internal")
    return out


def mult_tropext(f: HPoly, l: HPoly) -> MultiplicityResult:
    """Multiplicity of l in f over T or TR (n = 2).

    Exact whenever no quotient exists and whenever f is dense and strictly
    convex (the quotient is then unique and inherits both properties).
    Otherwise the geometric multiplicity is reported as an upper bound.
    """
    _require_plane(f)
    fld = FIELDS[f.field]
    if not fld.extended:
        raise MathError("use mult over base fields", kind="unsupported-field")
    if f.is_zero:
        return MultiplicityResult(INF, note="the zero polynomial has every factor")
    _norm_line_list([l], f.field)  # validates l as a fixed line
    quotients = ext_divides_once(f, l)
    if not quotients:
        return MultiplicityResult(0)
    sub = newton_subdivision(f)
    if sub.dense and sub.strictly_convex:
        if len(quotients) != 1:
            raise MathError("strictly convex polynomials divide uniquely",
                            kind="internal")
        g = quotients[0]
        rest = mult_tropext(g, l)
        return MultiplicityResult(
            1 + rest.value, witness_chain=((l, g),) + rest.witness_chain)
    bound = gmult(enriched_curve(f), [l], enriched=True)
    note = "bound-only: mult <= gmult (input not dense and strictly convex)"
    return MultiplicityResult(bound.value, note=note)


# ---------------------------------------------------------------------------
# perturbation multiplicity


def _admissible_cells(supp: list, dense: bool) -> list[tuple]:
    """Convex support-empty polygons with vertices in the support, ccw."""
    sset = set(supp)
    cells = []
    max_size = 4 if dense else min(8, len(supp))
    for size in range(3, max_size + 1):
        for combo in itertools.combinations(supp, size):
            hull = convex_hull_2d(list(combo))
            if len(hull) != size:
                continue
            area2 = sum(cross2(hull[i], hull[(i + 1) % size]) for i in range(size))
            if area2 <= 0:
                continue
            if dense:
                if size == 3 and area2 != 1:
                    continue
                if size == 4 and area2 != 2:
                    continue
            ineqs = hull_inequalities(list(hull))
            bad = False
            for m in sset:
                if m in combo:
                    continue
                if point_in_hull(m, ineqs):
                    bad = True
                    break
            if bad:
                continue
            cells.append(tuple(hull))
    return sorted(cells)


def _hull_front(supp: list) -> list[tuple]:
    """Oriented ccw boundary of Newt split at support points."""
    hull = convex_hull_2d(supp)
    sset = set(supp)
    front = []
    for i in range(len(hull)):
        a, b = hull[i], hull[(i + 1) % len(hull)]
        d = primitive(vsub(b, a))
        steps = [a]
        length = lattice_length(a, b)
        for k in range(1, length):
            p = (a[0] + d[0] * k, a[1] + d[1] * k)
            if p in sset:
                steps.append(p)
        steps.append(b)
        for u, v in zip(steps, steps[1:]):
            front.append((u, v))
    return front


def _segments_cross(p1, p2, q1, q2) -> bool:
    """Proper interior crossing of two closed segments."""
    d1 = cross2(vsub(q2, q1), vsub(p1, q1))
    d2 = cross2(vsub(q2, q1), vsub(p2, q1))
    d3 = cross2(vsub(p2, p1), vsub(q1, p1))
    d4 = cross2(vsub(p2, p1), vsub(q2, p1))
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)) and \
        d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0


def _cells_disjoint(c1, c2) -> bool:
    i1 = hull_inequalities(list(c1))
    i2 = hull_inequalities(list(c2))
    for v in c1:
        if all(dot(n, v) < b for n, b in i2):
            return False
    for v in c2:
        if all(dot(n, v) < b for n, b in i1):
            return False
    for i in range(len(c1)):
        for j in range(len(c2)):
            if _segments_cross(c1[i], c1[(i + 1) % len(c1)],
                               c2[j], c2[(j + 1) % len(c2)]):
                return False
    return True


def enumerate_subdivisions(supp: list, dense: bool) -> list[frozenset]:
    """All face-to-face tilings by admissible cells (advancing front)."""
    cells = _admissible_cells(supp, dense)
    by_edge: dict = {}
    for cell in cells:
        k = len(cell)
        for i in range(k):
            by_edge.setdefault((cell[i], cell[(i + 1) % k]), []).append(cell)
    hull = convex_hull_2d(supp)
    total2 = sum(cross2(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull)))
    results: list[frozenset] = []

    def rec(front: frozenset, placed: tuple):
        if not front:
            area2 = sum(
                sum(cross2(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))
                for c in placed)
            if area2 == total2 and all(
                    _cells_disjoint(a, b)
                    for a, b in itertools.combinations(placed, 2)):
                results.append(frozenset(placed))
            return
        e = min(front)
        for cell in by_edge.get(e, []):
            k = len(cell)
            steps = {(cell[i], cell[(i + 1) % k]) for i in range(k)}
            nf = set(front)
            ok = True
            for s in steps:
                rev = (s[1], s[0])
                if s in nf:
                    nf.remove(s)
                elif rev in nf:
                    ok = False  # would re-expose an existing boundary
                    break
                else:
                    nf.add(rev)
            if not ok:
                continue
            rec(frozenset(nf), placed + (cell,))

    rec(frozenset(_hull_front(supp)), ())
    return results


def _interp_coeffs(tri, p):
    """Affine weights expressing p on the plane through the 3 points of tri."""
    a, b, c = tri
    det = Q(cross2(vsub(b, a), vsub(c, a)))
    la = Q(cross2(vsub(b, p), vsub(c, p)), det)
    lb = Q(cross2(vsub(c, p), vsub(a, p)), det)
    lc = Q(cross2(vsub(a, p), vsub(b, p)), det)
    return la, lb, lc


def _subdivision_system(supp: list, cells: Sequence[tuple]) -> LinearSystem:
    """Heights making exactly these cells the lower-hull projection."""
    name = {m: f"h{m[0]}_{m[1]}" for m in supp}
    cons = []
    tri_of: dict = {}
    for cell in cells:
        base3 = None
        for t in itertools.combinations(cell, 3):
            if cross2(vsub(t[1], t[0]), vsub(t[2], t[0])) != 0:
                base3 = t
                break
        tri_of[cell] = base3
        for v in cell:
            if v in base3:
                continue
            la, lb, lc = _interp_coeffs(base3, v)
            coeffs = {name[v]: Q(1)}
            for lam, q in zip((la, lb, lc), base3):
                coeffs[name[q]] = coeffs.get(name[q], Q(0)) - lam
            cons.append(Constraint.make(coeffs, "=", 0))
    by_side: dict = {}
    for cell in cells:
        k = len(cell)
        for i in range(k):
            side = frozenset((cell[i], cell[(i + 1) % k]))
            by_side.setdefault(side, []).append(cell)
    for side, adj in by_side.items():
        if len(adj) != 2:
            continue
        c1, c2 = adj
        u, v = sorted(side)
        p = next(q for q in c2 if cross2(vsub(v, u), vsub(q, u)) != 0)
        la, lb, lc = _interp_coeffs(tri_of[c1], p)
        coeffs = {name[p]: Q(1)}
        for lam, q in zip((la, lb, lc), tri_of[c1]):
            coeffs[name[q]] = coeffs.get(name[q], Q(0)) - lam
        cons.append(Constraint.make(coeffs, ">", 0))
    return LinearSystem(tuple(cons))


def heights_for_subdivision(supp: Sequence[tuple], cells: Sequence[tuple]):
    """Integer heights (min 0) realizing the cells, or None."""
    supp = sorted(tuple(m) for m in supp)
    cells = [tuple(tuple(v) for v in c) for c in cells]
    system = _subdivision_system(supp, cells)
    res = fm_solve(system)
    if res.status != "FEASIBLE":
        return None
    sample = res.sample or {}
    heights = {m: sample.get(f"h{m[0]}_{m[1]}", Q(0)) for m in supp}
    denom = math.lcm(*(q.denominator for q in heights.values()))
    lo = min(heights.values())
    return {m: int((q - lo) * denom) for m, q in heights.items()}


def pmult(f: HPoly, l: HPoly, height_bound: int | None = None,
          relaxed: bool = False, details: bool = False):
    """Perturbation multiplicity: best enriched gmult over strictly convex
    integer lifts with heights in {0..B}.  Exact for dense Newton-degree-2
    inputs; documented as a certified lower bound elsewhere."""
    _require_plane(f)
    if FIELDS[f.field].id != "S":
        raise MathError("perturbation multiplicity is computed over S",
                        kind="unsupported-field")
    if l.field != "S":
        raise MathError("the divisor lives over S", kind="field-mismatch")
    _norm_line_list([l], "TR")
    dense = f.is_dense()
    if not dense and not relaxed:
        raise MathError("perturbation multiplicity needs dense input "
                        "(relaxed mode is an upper-bound search)", kind="non-dense")
    d = f.degree()
    bound = height_bound if height_bound is not None else 4 * d * d
    supp = sorted(f.terms)
    ext = _EXT_OF_BASE["S"]
    tilings = enumerate_subdivisions(supp, dense)
    best = 0
    realized = 0
    excluded = 0
    for cells in sorted(tilings, key=lambda s: sorted(s)):
        heights = heights_for_subdivision(supp, sorted(cells))
        if heights is None:
            continue
        if max(heights.values()) > bound:
            excluded += 1
            continue
        realized += 1
        lift = HPoly(ext, 2, {m: unit(ext, f.terms[m].angular, heights[m])
                              for m in supp}, vars=f.vars)
        sub = newton_subdivision(lift)
        if frozenset(sub.cells) != frozenset(cells):
            raise MathError("height sample failed to realize its subdivision",
                            kind="internal")
        g = gmult(enriched_curve(lift), [l], enriched=True)
        best = max(best, g.value)
    stats = {
        "visited": len(tilings),
        "realized": realized,
        "excluded_by_height_bound": excluded,
        "height_bound": bound,
        "value": best,
    }
    return (best, stats) if details else best


# ---------------------------------------------------------------------------
# deterministic SVG rendering


def _svg_header(x0, y0, x1, y1, scale=40):
    w = float((x1 - x0) * scale)
    h = float((y1 - y0) * scale)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.1f} {h:.1f}" '
        f'width="{w:.1f}" height="{h:.1f}">',
        lambda p: (float((p[0] - x0) * scale), float((y1 - p[1]) * scale)),
    )


def svg_subdivision(sub: NewtonSubdivision, path: str | None = None) -> str:
    pts = [m for m, _ in sub.points]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    head, tr = _svg_header(min(xs) - 1, min(ys) - 1, max(xs) + 1, max(ys) + 1)
    out = [head]
    for cell in sub.cells:
        if len(cell) < 2:
            continue
        coords = " ".join(f"{tr(v)[0]:.1f},{tr(v)[1]:.1f}" for v in cell)
        if len(cell) == 2:
            a, b = tr(cell[0]), tr(cell[1])
            out.append(f'<line x1="{a[0]:.1f}" y1="{a[1]:.1f}" x2="{b[0]:.1f}" '
                       f'y2="{b[1]:.1f}" stroke="#444" stroke-width="2"/>')
        else:
            out.append(f'<polygon points="{coords}" fill="#dde6f7" '
                       'stroke="#444" stroke-width="2"/>')
    vert = sub.vertex_set()
    for m, _ in sub.points:
        x, y = tr(m)
        fill = "#000" if m in vert else "#999"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="{fill}"/>')
    out.append("</svg>")
    text = "\n".join(out)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def svg_curve(curve: TropicalCurve, path: str | None = None) -> str:
    pts = list(curve.vertices) or [(Q(0), Q(0))]
    for e in curve.edges:
        pts.append(e.a)
        if e.b is not None:
            pts.append(e.b)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, y0 = min(xs) - 2, min(ys) - 2
    x1, y1 = max(xs) + 2, max(ys) + 2
    head, tr = _svg_header(x0, y0, x1, y1)
    reach = (x1 - x0) + (y1 - y0)
    out = [head]
    for e in curve.edges:
        a = e.a
        b = e.b
        if b is None:
            b = (a[0] + e.direction[0] * reach, a[1] + e.direction[1] * reach)
        pa, pb = tr(a), tr(b)
        width = 2 + (e.weight - 1) * 2
        out.append(f'<line x1="{pa[0]:.1f}" y1="{pa[1]:.1f}" x2="{pb[0]:.1f}" '
                   f'y2="{pb[1]:.1f}" stroke="#1b4b9b" stroke-width="{width}"/>')
        if e.weight > 1:
            mx, my = (pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2
            out.append(f'<text x="{mx:.1f}" y="{my - 6:.1f}" font-size="12" '
                       f'fill="#1b4b9b">{e.weight}</text>')
    for v in curve.vertices:
        x, y = tr(v)
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="#1b4b9b"/>')
    out.append("</svg>")
    text = "\n".join(out)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
