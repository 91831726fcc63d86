"""Transverse intersections of plane tropical curves and root-count bounds.

The pipeline for a square system of two curves:

* ``transverse_intersections`` finds all pairwise facet crossings and
  verifies transversality (every crossing interior to an edge of each
  curve); degenerate configurations are rejected.
* ``m_K`` / ``m_S`` evaluate the intersection multiplicity of one
  transverse point from its binomial initial data.
* ``epsilon_N`` sweeps bounded-height lifts of a sign system to signed
  tropical polynomials and maximises the total signed multiplicity over
  lifts whose curves meet transversally; the result is a certified lower
  bound for the number of solutions with the requested signs.
* ``transverse_case_N`` returns the exact count when the input curves
  themselves meet transversally at the queried point.
* ``system_bound`` packages lower bound, resultant upper bound, and the
  exact count when available into one report.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import MathError
from .geometry import cross2, dot, vsub
from .hyperfield import HyperValue, unit
from .polyring import HPoly
from .resultant import SupportSystem, resultant_sign_bound, stripped_resultant
from .tropgeo import TropicalCurve, pf_argmin, tropical_curve

Q = Fraction

Point = tuple[Q, Q]
Monomial = tuple[int, ...]
# (monomial, coefficient sign or None) pairs, one entry per tied monomial
InitialData = tuple[tuple[Monomial, Optional[int]], ...]


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class TransversePoint:
    """One transverse crossing of two plane tropical curves.

    ``initials`` holds, per curve, the monomials of the initial form at
    the point together with their coefficient signs (None when the curve
    was supplied without a polynomial).  A transverse crossing of two
    edges has binomial data (two monomials per curve) unless more support
    points tie along the dual edge.
    """

    location: Point
    initials: tuple[InitialData, InitialData]
    transverse: bool = True

    def to_json(self) -> dict:
        return {
            "location": [str(c) for c in self.location],
            "initials": [
                [[list(m), s] for m, s in data] for data in self.initials
            ],
            "transverse": self.transverse,
        }


@dataclass(frozen=True)
class SystemBoundReport:
    """Solution-count bounds for a square system at one sign/point query."""

    lower: int
    upper: int
    exact: Optional[int]
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# input normalisation


def _as_sign(x) -> int:
    if isinstance(x, HyperValue):
        if x.is_zero:
            raise MathError("sign entries must be nonzero", kind="bad-value")
        return 1 if x.angular > 0 else -1
    if x == 1 or x == -1:
        return int(x)
    if x == "+":
        return 1
    if x == "-":
        return -1
    raise MathError(f"cannot read {x!r} as a sign", kind="bad-value")


def _sign_vector(h) -> tuple[int, int]:
    hs = tuple(_as_sign(c) for c in h)
    if len(hs) != 2:
        raise MathError("sign vectors here have exactly 2 entries",
                        kind="bad-value")
    return hs


def _as_height(x) -> Q:
    if isinstance(x, HyperValue):
        if x.is_zero:
            raise MathError("query points must have nonzero entries",
                            kind="bad-value")
        return x.exp
    return Q(x)


def _twist(sign: int, m: Monomial, hs: tuple[int, int]) -> int:
    """Sign of the monomial after substituting x_i -> hs[i] * x_i."""
    out = sign
    if m[0] % 2:
        out *= hs[0]
    if m[1] % 2:
        out *= hs[1]
    return out


# ---------------------------------------------------------------------------
# curve pieces: edges normalised to parametrised convex pieces


@dataclass(frozen=True)
class _Piece:
    anchor: Point
    d: tuple[int, int]  # primitive direction
    hi: Optional[Q]     # parameter of the far endpoint; None if unbounded
    line: bool          # unbounded in both directions (no endpoints at all)
    dual: tuple[Monomial, Monomial]

    def param_of(self, p: Point) -> Q:
        rel = vsub(p, self.anchor)
        return Q(dot(rel, self.d), dot(self.d, self.d))

    def contains(self, p: Point) -> bool:
        rel = vsub(p, self.anchor)
        if cross2(rel, self.d) != 0:
            return False
        t = self.param_of(p)
        if self.line:
            return True
        if t < 0:
            return False
        return self.hi is None or t <= self.hi


def _pieces(curve: TropicalCurve) -> tuple[_Piece, ...]:
    out: list[_Piece] = []
    ray_groups: dict = {}
    for e in curve.edges:
        if e.is_ray:
            key = (e.a, frozenset(e.dual))
            ray_groups.setdefault(key, []).append(e)
        else:
            diff = vsub(e.b, e.a)
            d = _primitive_direction(diff)
            hi = Q(dot(diff, d), dot(d, d))
            out.append(_Piece(e.a, d, hi, False, tuple(sorted(e.dual))))
    for (a, _), group in sorted(ray_groups.items(),
                                key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
        if len(group) == 2 and group[0].direction == tuple(
                -c for c in group[1].direction):
            # twin opposite rays encode a full line (segment-support curves)
            e = group[0]
            out.append(_Piece(a, e.direction, None, True,
                              tuple(sorted(e.dual))))
        else:
            for e in group:
                out.append(_Piece(a, e.direction, None, False,
                                  tuple(sorted(e.dual))))
    return tuple(out)


def _primitive_direction(diff) -> tuple[int, int]:
    """Primitive integer direction parallel to a rational vector."""
    dx, dy = Q(diff[0]), Q(diff[1])
    if dx == 0 and dy == 0:
        raise MathError("zero-length edge", kind="bad-value")
    den = math.lcm(dx.denominator, dy.denominator)
    nx = dx.numerator * (den // dx.denominator)
    ny = dy.numerator * (den // dy.denominator)
    g = math.gcd(nx, ny)
    return (nx // g, ny // g)


# ---------------------------------------------------------------------------
# the sweep


def _not_transverse(p: Point) -> MathError:
    loc = "(" + ", ".join(str(c) for c in p) + ")"
    return MathError(
        f"curves are not transverse: intersection at {loc} touches a vertex",
        kind="not-transverse")


def _param_interval(piece: _Piece):
    if piece.line:
        return (None, None)
    return (Q(0), piece.hi)


def _project_onto(base: _Piece, other: _Piece):
    """Parameter interval of `other` on `base`'s line (collinear case)."""
    dd = dot(base.d, base.d)
    t0 = Q(dot(vsub(other.anchor, base.anchor), base.d), dd)
    step = Q(dot(other.d, base.d), dd)
    lo, hi = _param_interval(other)
    ends = []
    for u in (lo, hi):
        ends.append(None if u is None else t0 + step * u)
    a, b = ends
    if step < 0:
        a, b = b, a
    return (a, b)


def _overlap(i1, i2):
    lo1, hi1 = i1
    lo2, hi2 = i2
    lo = lo1 if lo2 is None else (lo2 if lo1 is None else max(lo1, lo2))
    hi = hi1 if hi2 is None else (hi2 if hi1 is None else min(hi1, hi2))
    if lo is None or hi is None:
        return "segment", lo, hi
    if lo < hi:
        return "segment", lo, hi
    if lo == hi:
        return "point", lo, hi
    return "empty", lo, hi


def _cross_pieces(p1: _Piece, p2: _Piece, hits: dict):
    cr = cross2(p1.d, p2.d)
    rel = vsub(p2.anchor, p1.anchor)
    if cr == 0:
        if cross2(rel, p1.d) != 0:
            return
        kind, lo, _ = _overlap(_param_interval(p1), _project_onto(p1, p2))
        if kind == "empty":
            return
        if kind == "segment":
            raise MathError("curves share a one-dimensional piece",
                            kind="infinite-intersection")
        p = (p1.anchor[0] + lo * p1.d[0], p1.anchor[1] + lo * p1.d[1])
        raise _not_transverse(p)
    t1 = Q(cross2(rel, p2.d), cr)
    t2 = Q(cross2(rel, p1.d), cr)
    for piece, t in ((p1, t1), (p2, t2)):
        if piece.line:
            continue
        if t < 0:
            return
        if piece.hi is not None and t > piece.hi:
            return
    p = (p1.anchor[0] + t1 * p1.d[0], p1.anchor[1] + t1 * p1.d[1])
    for piece, t in ((p1, t1), (p2, t2)):
        if piece.line:
            continue
        if t == 0 or (piece.hi is not None and t == piece.hi):
            raise _not_transverse(p)
    hits.setdefault(p, []).append((p1, p2))


class _Prepared:
    __slots__ = ("poly", "curve", "pieces")

    def __init__(self, poly: Optional[HPoly], curve: TropicalCurve):
        self.poly = poly
        self.curve = curve
        self.pieces = _pieces(curve)


def _prepare(entry) -> _Prepared:
    if isinstance(entry, TropicalCurve):
        return _Prepared(None, entry)
    if isinstance(entry, HPoly):
        if entry.nvars != 2:
            raise MathError("plane curves need exactly 2 variables",
                            kind="unsupported-dimension")
        return _Prepared(entry, tropical_curve(entry))
    raise MathError("inputs must be polynomials or tropical curves",
                    kind="bad-value")


def _raw_hits(a: _Prepared, b: _Prepared) -> dict:
    # shared one-dimensional pieces first: "identical lines" should report
    # an infinite intersection, not the vertex touch that comes with it
    for p1 in a.pieces:
        for p2 in b.pieces:
            if cross2(p1.d, p2.d) != 0:
                continue
            if cross2(vsub(p2.anchor, p1.anchor), p1.d) != 0:
                continue
            kind, _, _ = _overlap(_param_interval(p1), _project_onto(p1, p2))
            if kind == "segment":
                raise MathError("curves share a one-dimensional piece",
                                kind="infinite-intersection")
    for v in a.curve.vertices:
        for piece in b.pieces:
            if piece.contains(v):
                raise _not_transverse(v)
    for v in b.curve.vertices:
        for piece in a.pieces:
            if piece.contains(v):
                raise _not_transverse(v)
    hits: dict = {}
    for p1 in a.pieces:
        for p2 in b.pieces:
            _cross_pieces(p1, p2, hits)
    for p, pairs in hits.items():
        if len(pairs) > 1:
            raise _not_transverse(p)
    return hits


def _initial_data(prep: _Prepared, piece: _Piece, loc: Point) -> InitialData:
    if prep.poly is not None:
        mons = pf_argmin(prep.poly, loc)
        return tuple((m, prep.poly.terms[m].angular) for m in mons)
    u, v = piece.dual
    return ((u, None), (v, None))


def transverse_intersections(curves: Sequence) -> tuple[TransversePoint, ...]:
    """All transverse crossings of two plane tropical curves.

    Entries may be polynomials over T or TR (preferred; their coefficient
    signs feed the binomial data) or precomputed ``TropicalCurve`` objects.
    Raises kind="infinite-intersection" when the curves share a segment or
    ray, and kind="not-transverse" when any crossing touches a vertex.
    """
    if len(curves) != 2:
        raise MathError("exactly two curves expected", kind="unsupported")
    a, b = (_prepare(c) for c in curves)
    hits = _raw_hits(a, b)
    points = []
    for loc in sorted(hits):
        p1, p2 = hits[loc][0]
        points.append(TransversePoint(
            loc, (_initial_data(a, p1, loc), _initial_data(b, p2, loc))))
    return tuple(points)


# ---------------------------------------------------------------------------
# multiplicities at one transverse point


def _binomial(data: InitialData) -> tuple[tuple[Monomial, Optional[int]],
                                          tuple[Monomial, Optional[int]]]:
    if len(data) != 2:
        raise MathError("initial form at the point is not binomial",
                        kind="non-binomial")
    return data[0], data[1]


def m_K(p: TransversePoint) -> int:
    """|det| of the exponent differences of the two initial binomials."""
    rows = []
    for data in p.initials:
        (s, _), (t, _) = _binomial(data)
        rows.append(vsub(s, t))
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if det == 0:
        raise MathError("parallel initial directions; the crossing is "
                        "degenerate", kind="not-transverse")
    return abs(det)


def m_S(p: TransversePoint, h) -> int:
    """1 iff every initial binomial alternates after the sign twist by h."""
    hs = _sign_vector(h)
    for data in p.initials:
        (s, su), (t, sv) = _binomial(data)
        if su is None or sv is None:
            raise MathError("signed multiplicity needs coefficient signs; "
                            "supply polynomials, not bare curves",
                            kind="missing-signs")
        if _twist(su, s, hs) == _twist(sv, t, hs):
            return 0
    return 1


# ---------------------------------------------------------------------------
# the epsilon-N search over bounded-height lifts
#
# The sweep over lift pairs is exact integer geometry: all curve data is
# rescaled to integer coordinates, a crossing of two pieces is decided by
# orientation signs, and the signed multiplicity at a crossing factors as
# alternation(piece 1) * alternation(piece 2), both static per piece.


def _as_scaled_int(q: Q, scale: int) -> int:
    scaled = q * scale
    if scaled.denominator != 1:
        raise MathError("internal: scale does not clear denominators",
                        kind="bad-value")
    return scaled.numerator


def _common_scale(prepared: Sequence[Sequence["_Prepared"]]) -> int:
    out = 1
    for side in prepared:
        for prep in side:
            for piece in prep.pieces:
                out = math.lcm(out, piece.anchor[0].denominator,
                               piece.anchor[1].denominator)
                if piece.hi is not None:
                    ex = piece.anchor[0] + piece.hi * piece.d[0]
                    ey = piece.anchor[1] + piece.hi * piece.d[1]
                    out = math.lcm(out, ex.denominator, ey.denominator)
    return out


def _has_interior_tie(f: HPoly, u: Monomial, v: Monomial) -> bool:
    """More than two support points tie along the dual edge [u, v]."""
    diff = vsub(v, u)
    g = math.gcd(abs(diff[0]), abs(diff[1]))
    if g <= 1:
        return False
    px, py = diff[0] // g, diff[1] // g
    qu, qv = f.terms[u].exp, f.terms[v].exp
    for k in range(1, g):
        m = (u[0] + k * px, u[1] + k * py)
        tv = f.terms.get(m)
        if tv is not None and tv.exp * g == qu * (g - k) + qv * k:
            return True
    return False


def _fast_pieces(prep: "_Prepared", hs: tuple[int, int], scale: int):
    """Pieces as integer tuples (ax, ay, bx, by, dx, dy, kind, alt, fat).

    kind 0 = segment (b is the far endpoint), 1 = ray, 2 = full line.
    ``alt`` records whether the dual binomial alternates after the h
    twist, ``fat`` whether extra support points tie along the dual edge.
    """
    f = prep.poly
    out = []
    for piece in prep.pieces:
        ax = _as_scaled_int(piece.anchor[0], scale)
        ay = _as_scaled_int(piece.anchor[1], scale)
        dx, dy = piece.d
        if piece.line:
            kind, bx, by = 2, 0, 0
        elif piece.hi is None:
            kind, bx, by = 1, 0, 0
        else:
            kind = 0
            bx = _as_scaled_int(piece.anchor[0] + piece.hi * piece.d[0],
                                scale)
            by = _as_scaled_int(piece.anchor[1] + piece.hi * piece.d[1],
                                scale)
        u, v = piece.dual
        alt = (_twist(f.terms[u].angular, u, hs)
               != _twist(f.terms[v].angular, v, hs))
        out.append((ax, ay, bx, by, dx, dy, kind, alt,
                    _has_interior_tie(f, u, v)))
    return tuple(out)


def _fast_total(ps1, ps2) -> Optional[int]:
    """Total signed multiplicity of one lift pair, None when degenerate.

    Degenerate means: shared one-dimensional piece, a crossing touching
    an endpoint of a piece, or a crossing on an edge whose initial form
    is not binomial.  All arithmetic is integer-exact.
    """
    total = 0
    for ax1, ay1, bx1, by1, dx1, dy1, k1, alt1, fat1 in ps1:
        for ax2, ay2, bx2, by2, dx2, dy2, k2, alt2, fat2 in ps2:
            cr = dx1 * dy2 - dy1 * dx2
            rx = ax2 - ax1
            ry = ay2 - ay1
            if cr == 0:
                if rx * dy1 != ry * dx1:
                    continue
                # same line: compare shadows s(P) = (P - A1) . d1
                if k1 == 0:
                    lo1, hi1 = 0, (bx1 - ax1) * dx1 + (by1 - ay1) * dy1
                elif k1 == 1:
                    lo1, hi1 = 0, None
                else:
                    lo1, hi1 = None, None
                s2a = rx * dx1 + ry * dy1
                forward = dx2 * dx1 + dy2 * dy1 > 0
                if k2 == 0:
                    s2b = (bx2 - ax1) * dx1 + (by2 - ay1) * dy1
                    lo2, hi2 = (s2a, s2b) if forward else (s2b, s2a)
                elif k2 == 1:
                    lo2, hi2 = (s2a, None) if forward else (None, s2a)
                else:
                    lo2, hi2 = None, None
                lo = lo1 if lo2 is None else (
                    lo2 if lo1 is None else max(lo1, lo2))
                hi = hi1 if hi2 is None else (
                    hi2 if hi1 is None else min(hi1, hi2))
                if lo is None or hi is None or lo <= hi:
                    return None
                continue
            # the two supporting lines cross exactly once
            o1a = ry * dx2 - rx * dy2
            if k1 == 2:
                c1 = 1
            elif k1 == 1:
                c1 = 0 if o1a == 0 else (1 if o1a * cr < 0 else -1)
            else:
                o1b = (bx1 - ax2) * dy2 - (by1 - ay2) * dx2
                if o1a == 0 or o1b == 0:
                    c1 = 0
                else:
                    c1 = 1 if (o1a > 0) != (o1b > 0) else -1
            if c1 < 0:
                continue
            o2a = rx * dy1 - ry * dx1
            if k2 == 2:
                c2 = 1
            elif k2 == 1:
                c2 = 0 if o2a == 0 else (1 if o2a * cr > 0 else -1)
            else:
                o2b = (bx2 - ax1) * dy1 - (by2 - ay1) * dx1
                if o2a == 0 or o2b == 0:
                    c2 = 0
                else:
                    c2 = 1 if (o2a > 0) != (o2b > 0) else -1
            if c2 < 0:
                continue
            if c1 == 0 or c2 == 0:
                return None
            if fat1 or fat2:
                return None
            if alt1 and alt2:
                total += 1
    return total


def _height_vectors(k: int, bound: int):
    """All vectors in {0..bound}^k with minimum entry 0.

    Tropical curves are invariant under adding one constant to every
    height, so these are canonical representatives: every lift with
    heights in {0..bound} has the same curve as exactly one of them.
    """
    for v in itertools.product(range(bound + 1), repeat=k):
        if min(v) == 0:
            yield v


def _lift(f: HPoly, support: Sequence[Monomial], heights) -> HPoly:
    terms = {}
    for m, q in zip(support, heights):
        terms[m] = unit("TR", f.terms[m].angular, Q(q))
    return HPoly("TR", f.nvars, terms, f.vars)


def epsilon_N(fs: Sequence[HPoly], h, height_bound: int = 8,
              cap: Optional[int] = None) -> int:
    """Max total signed multiplicity over bounded-height transverse lifts.

    ``fs`` are two sign polynomials in two variables; ``h`` is the queried
    sign vector.  Every pair of lifts with integer heights in
    {0..height_bound} whose tropical curves intersect transversally
    contributes the sum of m_S over its crossings; the maximum over lifts
    is returned.  The value is a certified lower bound for the count of
    solutions with signs h (lifts with degenerate intersections, or with
    non-binomial initial data at some crossing, are skipped, which can
    only lower the reported value).  ``cap`` allows an early exit once a
    known upper bound is reached.
    """
    if len(fs) != 2:
        raise MathError("the lift search runs on systems of exactly two "
                        "polynomials", kind="unsupported")
    for f in fs:
        if not isinstance(f, HPoly) or f.field != "S":
            raise MathError("the lift search expects sign polynomials",
                            kind="field-mismatch")
        if f.nvars != 2:
            raise MathError("the lift search runs in two variables only",
                            kind="unsupported")
    if height_bound < 0:
        raise MathError("height bound must be nonnegative", kind="bad-value")
    hs = _sign_vector(h)
    if cap is not None and cap <= 0:
        return 0

    prepared: list[list[_Prepared]] = []
    for f in fs:
        support = sorted(f.support())
        preps = []
        for heights in _height_vectors(len(support), height_bound):
            lifted = _lift(f, support, heights)
            preps.append(_Prepared(lifted, tropical_curve(lifted)))
        prepared.append(preps)
    scale = _common_scale(prepared)
    fast = [tuple(_fast_pieces(p, hs, scale) for p in side)
            for side in prepared]

    best = 0
    for ps1 in fast[0]:
        for ps2 in fast[1]:
            total = _fast_total(ps1, ps2)
            if total is not None and total > best:
                best = total
                if cap is not None and best >= cap:
                    return best
    return best


# ---------------------------------------------------------------------------
# exact count in the transverse case


def transverse_case_N(fs: Sequence[HPoly], h) -> int:
    """Exact solution count when the input curves are transverse at h.

    Over T the answer is m_K at the crossing whose location is h (0 when
    h is off the intersection); over TR it is m_S at the crossing whose
    location is the valuation of h, with h's signs.
    """
    if len(fs) != 2:
        raise MathError("exactly two polynomials expected",
                        kind="unsupported")
    fields = {f.field for f in fs}
    if len(fields) != 1 or fields & {"T", "TR"} != fields:
        raise MathError("transverse counting runs over T or TR",
                        kind="field-mismatch")
    field = fields.pop()
    points = transverse_intersections(fs)
    if field == "T":
        loc = tuple(_as_height(c) for c in h)
        if len(loc) != 2:
            raise MathError("query points here have exactly 2 coordinates",
                            kind="bad-value")
        for p in points:
            if p.location == loc:
                return m_K(p)
        return 0
    entries = tuple(h)
    if len(entries) != 2:
        raise MathError("query points here have exactly 2 coordinates",
                        kind="bad-value")
    signs = []
    loc = []
    for c in entries:
        if isinstance(c, HyperValue):
            signs.append(_as_sign(c))
            loc.append(c.exp)
        else:
            s, q = c
            signs.append(_as_sign(s))
            loc.append(Q(q))
    loct = tuple(loc)
    for p in points:
        if p.location == loct:
            return m_S(p, tuple(signs))
    return 0


# ---------------------------------------------------------------------------
# the combined report


def _uniform_after_twist(f: HPoly, hs: tuple[int, int]) -> bool:
    signs = {_twist(v.angular, m, hs) for m, v in f.terms.items()}
    return len(signs) == 1


def _k_member_bound(R, yvars: int = 2) -> int:
    """Largest boundary multiplicity over members of the K resultant set.

    Over K an integer coefficient built from one symbol monomial is the
    unit (never zero); a coefficient merging several monomials can be
    either zero or the unit.  The boundary multiplicity of a member of
    degree d is the minimum over the three boundary lines of the span
    between the lowest and highest nonzero positions, so the bound picks
    the member degree and corner pattern maximising that minimum.
    """
    counts: dict = {}
    for e in R.terms:
        key = (e[0], e[1])
        counts[key] = counts.get(key, 0) + 1
    if not counts:
        return 0
    deg = max(i + j for i, j in counts)
    forced = {k for k, c in counts.items() if c == 1}

    def kind(pos):
        if pos in forced:
            return "one"
        if pos in counts:
            return "flex"
        return "zero"

    best = 0
    for d in range(deg, 0, -1):
        if any(i + j > d for i, j in forced):
            continue
        corners = ((0, 0), (d, 0), (0, d))
        options = []
        for c in corners:
            k = kind(c)
            options.append((True,) if k == "one"
                           else ((True, False) if k == "flex" else (False,)))
        lines = (
            tuple((i, 0) for i in range(d + 1)),
            tuple((0, j) for j in range(d + 1)),
            tuple((i, d - i) for i in range(d + 1)),
        )
        for choice in itertools.product(*options):
            nonzero_corner = dict(zip(corners, choice))
            vals = []
            degenerate = False
            for line in lines:
                capable = []
                for idx, pos in enumerate(line):
                    if pos in nonzero_corner:
                        if nonzero_corner[pos]:
                            capable.append(idx)
                    elif kind(pos) != "zero":
                        capable.append(idx)
                if not capable:
                    degenerate = True
                    break
                vals.append(max(capable) - min(capable))
            if degenerate:
                continue
            cand = min(vals)
            if cand > best:
                best = cand
        if best == d:
            break
    return best


def _s_embedding(f: HPoly) -> HPoly:
    terms = {m: unit("S", 1) for m in f.terms}
    return HPoly("S", f.nvars, terms, f.vars)


def _k_upper_bound(fs: Sequence[HPoly]) -> int:
    system = SupportSystem.from_polys([_s_embedding(f) for f in fs])
    try:
        R, _ = stripped_resultant(system)
    except MathError as err:
        if err.kind == "constant-resultant":
            return 0
        raise
    return _k_member_bound(R)


def system_bound(fs: Sequence[HPoly], h,
                 height_bound: int = 8) -> SystemBoundReport:
    """Lower and upper bounds (and exact count when available) for a system.

    Over S: upper bound from the sign-specialised sparse resultant, lower
    bound from the bounded-height lift search.  Over K: upper bound from
    the resultant set with signs forgotten.  Over T or TR: the transverse
    count is exact and fills all three fields.
    """
    if not fs:
        raise MathError("empty system", kind="bad-value")
    fields = {f.field for f in fs}
    if len(fields) != 1:
        raise MathError("all polynomials must live over one hyperfield",
                        kind="field-mismatch")
    field = fields.pop()

    if field in ("T", "TR"):
        exact = transverse_case_N(fs, h)
        return SystemBoundReport(
            exact, exact, exact,
            ("transverse configuration; the count is exact",))

    if field == "K":
        if len(fs) != 2:
            raise MathError("the resultant bound runs on pairs",
                            kind="unsupported")
        upper = _k_upper_bound(fs)
        notes = ("upper bound from the resultant set over K (signs carry "
                 "no information there)",
                 "sign-refined lower bound unavailable over K",
                 "coefficient genericity of the resultant factorisation "
                 "is not certified; the bound is valid regardless")
        return SystemBoundReport(0, upper, None, notes)

    if field != "S":
        raise MathError("system bounds run over S, K, T, or TR",
                        kind="field-mismatch")

    hs = _sign_vector(h)
    upper = resultant_sign_bound(fs, hs)
    notes = ["upper bound from the sign-specialised sparse resultant",
             "coefficient genericity of the resultant factorisation is "
             "not certified; the bound is valid regardless"]
    uniform = [i for i, f in enumerate(fs) if _uniform_after_twist(f, hs)]
    if uniform:
        names = ", ".join(f"f{i + 1}" for i in uniform)
        notes.append(f"{names} has uniform sign after the sign "
                     "substitution; no solutions with these signs exist; "
                     "bound not tight")
        return SystemBoundReport(0, upper, 0, tuple(notes))
    if len(fs) == 2 and all(f.nvars == 2 for f in fs):
        lower = epsilon_N(fs, hs, height_bound, cap=upper)
        notes.append(f"lower bound from the lift search with heights in "
                     f"{{0..{height_bound}}}")
        if lower == upper:
            notes.append("bounds coincide")
    else:
        lower = 0
        notes.append("lift search implemented for two plane curves only")
    return SystemBoundReport(lower, upper, None, tuple(notes))
