"""Exact lattice-polytope helpers for supports in up to three variables.

Everything is integer/Fraction arithmetic; no floating point. Polytopes
here are tiny (supports of low-degree polynomials), so O(k^3) facet
enumeration is plenty.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence

Point = tuple[int, ...]


def vsub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def dot(a: Sequence, b: Sequence) -> object:
    return sum(x * y for x, y in zip(a, b))


def cross2(a: Sequence, b: Sequence):
    return a[0] * b[1] - a[1] * b[0]


def cross3(a: Sequence, b: Sequence) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def lattice_length(a: Point, b: Point) -> int:
    d = vsub(b, a)
    g = 0
    for c in d:
        g = gcd(g, abs(c))
    return g


def primitive(d: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for c in d:
        g = gcd(g, abs(c))
    if g == 0:
        raise ValueError("zero direction")
    return tuple(c // g for c in d)


def affine_dim(points: Sequence[Point]) -> int:
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    dirs: list[tuple] = []
    for p in pts[1:]:
        v = vsub(p, base)
        for d in dirs:
            # reduce v against d (exact Gaussian elimination over Q)
            piv = next((i for i, c in enumerate(d) if c != 0), None)
            if piv is not None and v[piv] != 0:
                coef = Fraction(v[piv], d[piv])
                v = tuple(a - coef * b for a, b in zip(v, d))
        if any(c != 0 for c in v):
            dirs.append(v)
    return len(dirs)


def convex_hull_2d(points: Iterable[Point]) -> list[Point]:
    """Hull vertices in counterclockwise order (Andrew's monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    def half(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross2(vsub(out[-1], out[-2]), vsub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def hull_inequalities(points: Sequence[Point]) -> list[tuple[tuple[int, ...], int]]:
    """Facet description {x : n.x <= c} of conv(points), dim(ambient) <= 3.

    Lower-dimensional hulls include the affine span's equalities as
    inequality pairs, so membership testing stays a pure <=-check.
    """
    pts = [tuple(p) for p in dict.fromkeys(map(tuple, points))]
    if not pts:
        raise ValueError("empty point set")
    n = len(pts[0])
    ineqs: list[tuple[tuple[int, ...], int]] = []
    if n == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        return [((1,), hi), ((-1,), -lo)]
    if n == 2:
        hull = convex_hull_2d(pts)
        if len(hull) == 1:
            p = hull[0]
            return [((1, 0), p[0]), ((-1, 0), -p[0]), ((0, 1), p[1]), ((0, -1), -p[1])]
        if len(hull) == 2:
            a, b = hull
            d = vsub(b, a)
            nrm = primitive((-d[1], d[0]))
            c = dot(nrm, a)
            lo = min(dot(d, p) for p in pts)
            hi = max(dot(d, p) for p in pts)
            return [
                (nrm, c),
                (tuple(-x for x in nrm), -c),
                (tuple(d), hi),
                (tuple(-x for x in d), -lo),
            ]
        for a, b in zip(hull, hull[1:] + hull[:1]):
            d = vsub(b, a)
            nrm = primitive((d[1], -d[0]))  # outward for ccw order
            ineqs.append((nrm, dot(nrm, a)))
        return ineqs
    if n != 3:
        raise ValueError("hull_inequalities supports dimension <= 3")
    dim = affine_dim(pts)
    if dim <= 1:
        # box the span: per-axis bounds plus pairwise difference bounds
        for nrm in _axis_normals(3) + _pair_normals():
            ineqs.append((nrm, max(dot(nrm, p) for p in pts)))
        return _tighten(pts, ineqs)
    if dim == 2:
        base = pts[0]
        d1 = next(vsub(p, base) for p in pts[1:] if any(vsub(p, base)))
        d2 = next(
            vsub(p, base)
            for p in pts[1:]
            if any(cross3(d1, vsub(p, base)))
        )
        nrm = primitive(cross3(d1, d2))
        c = dot(nrm, base)
        ineqs.append((nrm, c))
        ineqs.append((tuple(-x for x in nrm), -c))
        # edges of the 2-face: normals = nrm x edge, for hull edges in-plane
        for a, b in combinations(pts, 2):
            e = vsub(b, a)
            if not any(e):
                continue
            cand = cross3(nrm, e)
            if not any(cand):
                continue
            cand = primitive(cand)
            hi = max(dot(cand, p) for p in pts)
            if all(dot(cand, p) <= hi for p in pts) and dot(cand, a) == hi:
                ineqs.append((cand, hi))
        return _dedupe(ineqs)
    # full-dimensional: every facet contains 3 affinely independent points
    for a, b, c in combinations(pts, 3):
        nrm = cross3(vsub(b, a), vsub(c, a))
        if not any(nrm):
            continue
        nrm = primitive(nrm)
        for sgn in (1, -1):
            cand = tuple(sgn * x for x in nrm)
            off = dot(cand, a)
            if all(dot(cand, p) <= off for p in pts):
                ineqs.append((cand, off))
    return _dedupe(ineqs)


def _axis_normals(n: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        out.append(tuple(e))
        out.append(tuple(-x for x in e))
    return out


def _pair_normals() -> list[tuple[int, ...]]:
    out = []
    for i, j in combinations(range(3), 2):
        for si, sj in product((1, -1), repeat=2):
            e = [0, 0, 0]
            e[i], e[j] = si, sj
            out.append(tuple(e))
    return out


def _tighten(pts, ineqs):
    return [(nrm, max(dot(nrm, p) for p in pts)) for nrm, _ in ineqs]


def _dedupe(ineqs):
    seen = {}
    for nrm, c in ineqs:
        if nrm not in seen or c < seen[nrm]:
            seen[nrm] = c
    return [(n, c) for n, c in sorted(seen.items())]


def point_in_hull(p: Sequence, ineqs) -> bool:
    return all(dot(nrm, p) <= c for nrm, c in ineqs)


def lattice_points(points: Sequence[Point]) -> list[Point]:
    """All integer points of conv(points), ambient dimension <= 3."""
    pts = [tuple(p) for p in points]
    ineqs = hull_inequalities(pts)
    n = len(pts[0])
    los = [min(p[i] for p in pts) for i in range(n)]
    his = [max(p[i] for p in pts) for i in range(n)]
    out = []
    for q in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if point_in_hull(q, ineqs):
            out.append(q)
    return out


def minkowski_diff_lattice(big: Sequence[Point], small: Sequence[Point]) -> list[Point]:
    """Integer points p with p + conv(small) inside conv(big).

    Equivalent to p + v in conv(big) for every vertex v of conv(small).
    """
    big = [tuple(p) for p in big]
    small = [tuple(p) for p in small]
    ineqs = hull_inequalities(big)
    n = len(big[0])
    los = [min(p[i] for p in big) - max(q[i] for q in small) for i in range(n)]
    his = [max(p[i] for p in big) - min(q[i] for q in small) for i in range(n)]
    out = []
    for p in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if all(point_in_hull(vadd(p, v), ineqs) for v in small):
            out.append(p)
    return out


def is_dense_support(support: Sequence[Point]) -> bool:
    """Does the support hit every lattice point of its own hull?"""
    supp = set(map(tuple, support))
    return all(tuple(q) in supp for q in lattice_points(list(supp)))
