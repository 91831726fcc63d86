"""Exact sparse mixed resultants with symbolic coefficients.

Pipeline: a SupportSystem (two supports plus the auxiliary linear form
1 + u*x + v*y) is turned into a square matrix by a Canny-Emiris style
construction from a deterministic lifting, the determinant is computed
by fraction-free elimination over the integer polynomial ring, content
is stripped, and the result is specialized coefficient-by-coefficient
to sign sets.  The determinant is a nonzero integer-polynomial multiple
of the sparse resultant, so boundary-multiplicity bounds computed from
it remain valid upper bounds (multiplicity of a product dominates the
multiplicity of a factor); they are possibly non-tight when the
extraneous factor survives content stripping.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import MathError, ParseError
from .geometry import affine_dim, convex_hull_2d, dot, hull_inequalities, vsub
from .hyperfield import FIELDS, unit
from .multiplicity import SignSetPoly, mult, setmult_bound
from .polyring import HPoly, IntPoly

__all__ = [
    "SupportSystem",
    "ResultantMatrix",
    "mixed_volume",
    "sylvester_resultant",
    "canny_emiris_matrix",
    "symbolic_determinant",
    "strip_content",
    "stripped_resultant",
    "specialize_signs",
    "resultant_sign_bound",
]


def _gl_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


def _aux_degree(p: IntPoly, aux_names: Sequence[str]) -> int:
    """Total degree of p in the named symbols."""
    idx = tuple(p.symbols.index(n) for n in aux_names)
    return max((sum(e[i] for i in idx) for e in p.terms), default=-1)


# ---------------------------------------------------------------------------
# support systems


def _parse_coeff(spec) -> tuple:
    """Coefficient entry: int, or symbol name with optional sign prefix."""
    if isinstance(spec, int):
        return ("int", spec)
    if isinstance(spec, tuple) and spec and spec[0] in ("int", "sym"):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        sign = 1
        while s and s[0] in "+-":
            if s[0] == "-":
                sign = -sign
            s = s[1:].strip()
        if not s:
            raise ParseError(f"empty coefficient symbol in {spec!r}")
        try:
            return ("int", sign * int(s))
        except ValueError:
            pass
        if not s.replace("_", "").isalnum() or s[0].isdigit():
            raise ParseError(f"bad coefficient symbol {spec!r}")
        return ("sym", s, sign)
    raise ParseError(f"bad coefficient entry {spec!r}")


@dataclass(frozen=True)
class SupportSystem:
    """Supports A_0, ..., A_n with a coefficient entry per point.

    A_0 is the auxiliary linear form 1 + u*x1 + v*x2 (symbols named by
    ``aux_names``); entries of the other supports are integers or signed
    symbols.  ``supports`` excludes A_0: supports[i] describes A_{i+1}.
    """

    n: int
    supports: tuple[tuple[tuple[int, ...], ...], ...]
    coeffs: tuple[tuple[tuple, ...], ...]
    aux_names: tuple[str, ...] = ("u", "v")

    def __post_init__(self):
        if self.n != 2:
            raise MathError("support systems are two-variable", kind="bad-value")
        if len(self.supports) != self.n:
            raise MathError(
                f"need exactly {self.n} supports besides the auxiliary form",
                kind="bad-value",
            )
        if len(self.aux_names) != self.n:
            raise MathError("need one auxiliary symbol per variable", kind="bad-value")
        for pts, cfs in zip(self.supports, self.coeffs):
            if len(pts) != len(cfs) or not pts:
                raise MathError("support/coefficient mismatch", kind="bad-value")
            for p in pts:
                if len(p) != self.n or any(x < 0 for x in p):
                    raise MathError(f"bad support point {p}", kind="bad-value")
            if len(set(pts)) != len(pts):
                raise MathError("repeated support point", kind="bad-value")

    @classmethod
    def build(cls, entries: Sequence[Mapping[tuple, object]], aux_names=("u", "v")) -> "SupportSystem":
        """entries[i]: dict point -> coefficient (int or signed symbol)."""
        supports = []
        coeffs = []
        for block in entries:
            pts = tuple(sorted(tuple(p) for p in block))
            supports.append(pts)
            coeffs.append(tuple(_parse_coeff(block[p]) for p in pts))
        return cls(2, tuple(supports), tuple(coeffs), tuple(aux_names))

    @classmethod
    def from_polys(cls, fs: Sequence[HPoly], aux_names=("u", "v")) -> "SupportSystem":
        """Sign polynomials -> symbolic system, one fresh symbol per point.

        The lexicographically least point of each support keeps its sign
        as a plain integer; substituting one unit per block is exact for
        the sign-set semantics because the resultant is homogeneous in
        each block of coefficients.
        """
        entries = []
        for i, f in enumerate(fs):
            if FIELDS[f.field].base != "S" or FIELDS[f.field].extended:
                raise MathError("sign-bound systems live over the sign field", kind="bad-value")
            if f.is_zero:
                raise MathError("zero polynomial in system", kind="zero-polynomial")
            block = {}
            pts = sorted(f.terms)
            for j, p in enumerate(pts):
                s = f.terms[p].angular
                if j == 0:
                    block[p] = s
                else:
                    name = f"c{i + 1}_" + "_".join(map(str, p))
                    block[p] = ("sym", name, s)
            entries.append(block)
        return cls.build(entries, aux_names)

    @classmethod
    def from_json(cls, text: str) -> "SupportSystem":
        data = json.loads(text)
        aux = tuple(data.get("aux", {}).get("names", ("u", "v")))
        entries = []
        for block in data["supports"]:
            pts = [tuple(p) for p in block["points"]]
            cfs = block["coeffs"]
            if len(pts) != len(cfs):
                raise ParseError("points/coeffs length mismatch")
            entries.append(dict(zip(pts, cfs)))
        return cls.build(entries, aux)

    def to_json(self) -> str:
        blocks = []
        for pts, cfs in zip(self.supports, self.coeffs):
            out = []
            for c in cfs:
                if c[0] == "int":
                    out.append(c[1])
                else:
                    out.append(("-" if c[2] < 0 else "") + c[1])
            blocks.append({"points": [list(p) for p in pts], "coeffs": out})
        return json.dumps({"n": self.n, "supports": blocks, "aux": {"names": list(self.aux_names)}})

    def all_supports(self) -> list[tuple[tuple[int, ...], ...]]:
        """A_0 first, then the given supports."""
        a0 = ((0, 0), (1, 0), (0, 1))
        return [a0] + [tuple(s) for s in self.supports]

    def entry(self, block: int, point: tuple[int, ...]) -> tuple:
        """Coefficient expression for support point ``point`` of A_block."""
        if block == 0:
            if point == (0, 0):
                return ("int", 1)
            return ("sym", self.aux_names[point.index(1)], 1)
        pts = self.supports[block - 1]
        return self.coeffs[block - 1][pts.index(point)]

    def names(self) -> tuple[str, ...]:
        out = list(self.aux_names)
        for cfs in self.coeffs:
            for c in cfs:
                if c[0] == "sym" and c[1] not in out:
                    out.append(c[1])
        return tuple(out)


# ---------------------------------------------------------------------------
# polygon helpers


def _area2(points: Sequence[tuple]) -> Fraction:
    """Twice the area of the convex hull of the points."""
    hull = convex_hull_2d(points)
    if len(hull) < 3:
        return Fraction(0)
    s = 0
    for a, b in zip(hull, hull[1:] + hull[:1]):
        s += a[0] * b[1] - b[0] * a[1]
    return Fraction(abs(s))


def _minkowski_points(a: Sequence[tuple], b: Sequence[tuple]) -> list[tuple]:
    return [tuple(map(int.__add__, p, q)) for p in a for q in b]


def mixed_volume(a: Sequence[tuple], b: Sequence[tuple]) -> int:
    """Lattice mixed volume of two planar supports (the Bernstein count)."""
    two = _area2(_minkowski_points(list(map(tuple, a)), list(map(tuple, b))))
    two -= _area2(list(map(tuple, a))) + _area2(list(map(tuple, b)))
    if two % 2:
        raise MathError("odd mixed area", kind="bad-value")
    return int(two // 2)


# ---------------------------------------------------------------------------
# deterministic liftings and mixed subdivisions

_LIFT_SEEDS = (12373, 4021, 75913, 28657, 514229, 39916801, 1046527, 17971, 87178, 6700417)
_DELTAS = (
    (Fraction(1, 97), Fraction(1, 89)),
    (Fraction(1, 83), Fraction(1, 79)),
    (Fraction(3, 97), Fraction(1, 73)),
    (Fraction(1, 71), Fraction(2, 67)),
    (Fraction(1, 61), Fraction(1, 59)),
)


def _lift_values(supports: Sequence[Sequence[tuple]], seed: int) -> list[dict]:
    """Per-point integer lifts from a fixed linear congruential stream."""
    x = seed & 0x7FFFFFFF
    lifts = []
    for pts in supports:
        d = {}
        for p in sorted(pts):
            x = (1103515245 * x + 12345) & 0x7FFFFFFF
            d[p] = x % 9973
        lifts.append(d)
    return lifts


class _LiftingRejected(Exception):
    pass


def _mixed_cells(supports: Sequence[Sequence[tuple]], lifts: Sequence[dict]):
    """Cells of the mixed subdivision induced by the lifts.

    Returns a list of dicts with the cell hull, facet inequalities, and
    the per-support argmin decomposition.  Raises _LiftingRejected when
    the lifting is not generic (a cell decomposition with dimensions not
    summing to 2, or the cells fail to tile the Minkowski sum).
    """
    summed: dict[tuple, int] = {}
    for combo in itertools.product(*[sorted(pts) for pts in supports]):
        xy = (sum(p[0] for p in combo), sum(p[1] for p in combo))
        z = sum(l[p] for l, p in zip(lifts, combo))
        if xy not in summed or z < summed[xy]:
            summed[xy] = z
    pts3 = sorted((x, y, z) for (x, y), z in summed.items())
    seen_w = set()
    cells = []
    for a, b, c in itertools.combinations(pts3, 3):
        d1 = vsub(b, a)
        d2 = vsub(c, a)
        den = d1[0] * d2[1] - d1[1] * d2[0]
        if den == 0:
            continue
        w1 = Fraction(d1[2] * d2[1] - d2[2] * d1[1], den)
        w2 = Fraction(d1[0] * d2[2] - d2[0] * d1[2], den)
        off = a[2] - w1 * a[0] - w2 * a[1]
        if (w1, w2) in seen_w:
            continue
        contact = []
        valid = True
        for p in pts3:
            v = p[2] - w1 * p[0] - w2 * p[1]
            if v < off:
                valid = False
                break
            if v == off:
                contact.append((p[0], p[1]))
        if not valid or affine_dim(contact) != 2:
            continue
        seen_w.add((w1, w2))
        decomp = []
        for pts, l in zip(supports, lifts):
            best = min(l[p] - w1 * p[0] - w2 * p[1] for p in pts)
            decomp.append(tuple(sorted(
                p for p in pts if l[p] - w1 * p[0] - w2 * p[1] == best
            )))
        if sum(max(affine_dim(f), 0) for f in decomp) != 2:
            raise _LiftingRejected("cell dimensions do not sum to 2")
        hull = convex_hull_2d(contact)
        sums = _minkowski_points(decomp[0], decomp[1])
        for f in decomp[2:]:
            sums = _minkowski_points(sums, f)
        if convex_hull_2d(sums) != hull:
            raise _LiftingRejected("cell does not match its decomposition")
        cells.append({
            "hull": hull,
            "ineqs": hull_inequalities(hull),
            "decomp": tuple(decomp),
            "w": (w1, w2),
        })
    total = [p for pts in [list(map(tuple, s)) for s in supports] for p in pts]
    q_pts = [(0, 0)]
    for s in supports:
        q_pts = _minkowski_points(q_pts, [tuple(p) for p in s])
    if sum(_area2(c["hull"]) for c in cells) != _area2(q_pts):
        raise _LiftingRejected("cells do not tile the Minkowski sum")
    del total
    return cells, q_pts


def _lattice_slice(q_pts: Sequence[tuple], delta) -> list[tuple]:
    """Lattice points p with p - delta inside conv(q_pts)."""
    ineqs = hull_inequalities(convex_hull_2d(q_pts))
    xs = [p[0] for p in q_pts]
    ys = [p[1] for p in q_pts]
    out = []
    for x in range(min(xs), max(xs) + 2):
        for y in range(min(ys), max(ys) + 2):
            p = (x - delta[0], y - delta[1])
            if all(n[0] * p[0] + n[1] * p[1] <= c for n, c in ineqs):
                out.append((x, y))
    return out


def _assign_cells(points: Sequence[tuple], cells, delta) -> list[int]:
    """Index of the cell whose interior contains p - delta, per point."""
    out = []
    for p in points:
        x = (p[0] - delta[0], p[1] - delta[1])
        hit = None
        for ci, cell in enumerate(cells):
            vals = [c - (n[0] * x[0] + n[1] * x[1]) for n, c in cell["ineqs"]]
            if all(v >= 0 for v in vals):
                if any(v == 0 for v in vals) or hit is not None:
                    raise _LiftingRejected("shifted point on a cell boundary")
                hit = ci
        if hit is None:
            raise _LiftingRejected("shifted point outside every cell")
        out.append(hit)
    return out


# ---------------------------------------------------------------------------
# the matrix


@dataclass(frozen=True)
class ResultantMatrix:
    """Square matrix whose determinant is a multiple of the resultant."""

    system: SupportSystem
    points: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[tuple, ...], ...]
    row_content: tuple[tuple[int, tuple[int, ...]], ...]
    lifting_seed: int
    delta: tuple
    attempt: int
    cell_kinds: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def size(self) -> int:
        return len(self.points)

    def block_row_counts(self) -> list[int]:
        counts = [0] * (self.system.n + 1)
        for blk, _ in self.row_content:
            counts[blk] += 1
        return counts

    def to_int_rows(self, names: Sequence[str]) -> list[list[IntPoly]]:
        names = tuple(names)
        cache: dict[tuple, IntPoly] = {}

        def conv(expr) -> IntPoly:
            if expr not in cache:
                if expr[0] == "int":
                    cache[expr] = IntPoly.const(expr[1], names)
                else:
                    i = names.index(expr[1])
                    e = tuple(1 if j == i else 0 for j in range(len(names)))
                    cache[expr] = IntPoly(names, {e: expr[2]})
            return cache[expr]

        zero = IntPoly(names, {})
        out = []
        for row in self.rows:
            out.append([zero if e is None else conv(e) for e in row])
        return out


def canny_emiris_matrix(system: SupportSystem, attempt: int = 0) -> ResultantMatrix:
    """Build the lifted-subdivision matrix for the (attempt+1)-th valid
    combination of deterministic lifting seed and shift.

    Raises MathError(kind="constant-resultant") when the mixed volume of
    the two given supports vanishes (the resultant is the constant 1),
    and MathError(kind="lifting-failed") when no documented lifting
    within the fallback list is generic for these supports.
    """
    supports = system.all_supports()
    mv = mixed_volume(system.supports[0], system.supports[1])
    if mv == 0:
        raise MathError(
            "zero mixed volume: the resultant is the constant 1",
            kind="constant-resultant",
        )
    valid = 0
    for seed in _LIFT_SEEDS:
        lifts = _lift_values(supports, seed)
        try:
            cells, q_pts = _mixed_cells(supports, lifts)
        except _LiftingRejected:
            continue
        for delta in _DELTAS:
            points = _lattice_slice(q_pts, delta)
            try:
                assign = _assign_cells(points, cells, delta)
            except _LiftingRejected:
                continue
            if valid < attempt:
                valid += 1
                continue
            index = {p: i for i, p in enumerate(points)}
            rows = []
            content = []
            kinds = []
            for p, ci in zip(points, assign):
                decomp = cells[ci]["decomp"]
                blk = max(i for i, f in enumerate(decomp) if len(f) == 1)
                vertex = decomp[blk][0]
                row: list = [None] * len(points)
                for b in supports[blk]:
                    q = (p[0] - vertex[0] + b[0], p[1] - vertex[1] + b[1])
                    if q not in index:
                        raise MathError(
                            "row support escapes the lattice slice",
                            kind="lifting-failed",
                        )
                    row[index[q]] = system.entry(blk, tuple(b))
                rows.append(tuple(row))
                content.append((blk, vertex))
                kinds.append(tuple(len(f) for f in decomp))
            return ResultantMatrix(
                system=system,
                points=tuple(points),
                rows=tuple(rows),
                row_content=tuple(content),
                lifting_seed=seed,
                delta=tuple(delta),
                attempt=attempt,
                cell_kinds=tuple(kinds),
            )
    raise MathError(
        "no generic lifting in the documented fallback list",
        kind="lifting-failed",
    )


def symbolic_determinant(matrix: ResultantMatrix | Sequence[Sequence[IntPoly]],
                         names: Sequence[str] | None = None) -> IntPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Deterministic pivoting: at each step the first row (by index) with a
    nonzero entry in the pivot column is used.  A singular matrix gives
    the zero polynomial.
    """
    if isinstance(matrix, ResultantMatrix):
        names = matrix.system.names() if names is None else tuple(names)
        rows = matrix.to_int_rows(names)
    else:
        rows = [list(r) for r in matrix]
        if rows and names is None:
            names = rows[0][0].symbols
    n = len(rows)
    if n == 0:
        return IntPoly.const(1, names or ())
    if any(len(r) != n for r in rows):
        raise MathError("determinant needs a square matrix", kind="bad-value")
    zero = IntPoly(rows[0][0].symbols, {})
    sign = 1
    prev: IntPoly | None = None
    for k in range(n - 1):
        if rows[k][k].is_zero:
            for i in range(k + 1, n):
                if not rows[i][k].is_zero:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return zero
        pk = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            new_row = rows[i]
            for j in range(k + 1, n):
                num = pk * new_row[j] - rik * rows[k][j]
                new_row[j] = num if prev is None else num.exact_divide(prev)
            new_row[k] = zero
        prev = pk
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def strip_content(p: IntPoly) -> tuple[IntPoly, dict]:
    """Divide out integer and monomial content; normalize the sign.

    The sign is fixed so that the graded-lex least monomial has a
    positive coefficient.  Returns the stripped polynomial and metadata
    recording what was removed.
    """
    if p.is_zero:
        return p, {"int_content": 0, "monomial": (0,) * len(p.symbols),
                   "sign": 1}
    content, prim = p.content_strip()
    (mono, ic), = content.terms.items()
    terms = dict(prim.terms)
    least = min(terms, key=_gl_key)
    sign = 1 if terms[least] > 0 else -1
    if sign < 0:
        terms = {e: -c for e, c in terms.items()}
    return IntPoly(p.symbols, terms), {"int_content": ic, "monomial": mono,
                                       "sign": sign}


def stripped_resultant(system: SupportSystem, max_attempts: int = 24):
    """Content-stripped determinant with the documented degree checks.

    Tries the deterministic lifting list until the determinant is
    nonzero and its degree in the auxiliary symbols equals the mixed
    volume of the two supports (the degree of the true resultant there).
    Returns (polynomial, metadata).
    """
    mv = mixed_volume(system.supports[0], system.supports[1])
    last = None
    for attempt in range(max_attempts):
        try:
            m = canny_emiris_matrix(system, attempt)
        except MathError as exc:
            if exc.kind == "lifting-failed" and attempt > 0:
                break
            raise
        det = symbolic_determinant(m)
        if det.is_zero:
            last = "singular matrix"
            continue
        stripped, meta = strip_content(det)
        if _aux_degree(stripped, system.aux_names) != mv:
            last = "auxiliary degree mismatch"
            continue
        a0 = ((0, 0), (1, 0), (0, 1))
        expected = [
            mv,
            mixed_volume(a0, system.supports[1]),
            mixed_volume(a0, system.supports[0]),
        ]
        counts = m.block_row_counts()
        meta.update({
            "attempt": attempt,
            "size": m.size,
            "lifting_seed": m.lifting_seed,
            "delta": m.delta,
            "block_rows": counts,
            "expected_degrees": expected,
            "extraneous_degree": m.size - sum(expected),
        })
        return stripped, meta
    raise MathError(
        f"no lifting produced a usable determinant ({last})",
        kind="lifting-failed",
    )


# ---------------------------------------------------------------------------
# specialization and bounds

_STAR = frozenset((1, -1, 0))


def specialize_signs(R: IntPoly, signs: Mapping[str, int],
                     yvars: Sequence[str] = ("u", "v")) -> SignSetPoly:
    """Per y-monomial sign sets of R under a sign assignment to symbols.

    Every term acquires the definite sign sgn(coeff) * prod(signs^exp);
    the coefficient set of a y-monomial is the sign-hyperfield sum of
    its term signs: {+}, {-}, {0}, or all three.
    """
    yvars = tuple(yvars)
    for y in yvars:
        if y not in R.symbols:
            raise MathError(f"unknown variable {y!r}", kind="bad-value")
    for n in R.symbols:
        if n in yvars:
            continue
        if n not in signs:
            raise MathError(f"unassigned symbol {n!r}", kind="unassigned-symbol")
        if signs[n] not in (1, -1):
            raise MathError(f"sign for {n!r} must be +1 or -1", kind="bad-value")
    terms: dict[tuple, frozenset] = {}
    for sub, coeff in R.split_by(yvars).items():
        out = set()
        for e, c in coeff.terms.items():
            s = 1 if c > 0 else -1
            for n, p in zip(coeff.symbols, e):
                if signs[n] < 0 and p % 2:
                    s = -s
            out.add(s)
            if len(out) == 2:
                break
        terms[sub] = _STAR if len(out) == 2 else frozenset(out)
    return SignSetPoly(len(yvars), terms, yvars)


def resultant_sign_bound(fs: Sequence[HPoly], h: Sequence[int]) -> int:
    """Upper bound for solutions in the sign class h via the resultant.

    The bound is setmult_bound of the sign-specialized stripped
    determinant against 1 + sum h_i y_i (boundary mode).  The stripped
    determinant is an integer-polynomial multiple of the resultant, and
    multiplicity of a product dominates that of a factor, so the value
    is a valid upper bound even when an extraneous factor survives.
    """
    fs = list(fs)
    n = len(fs)
    if n not in (1, 2):
        raise MathError("resultant bounds cover one or two equations", kind="bad-value")
    if any(f.nvars != n for f in fs):
        raise MathError("equation/variable count mismatch", kind="bad-value")
    h = tuple(h)
    if len(h) != n or any(s not in (1, -1) for s in h):
        raise MathError("h must assign a nonzero sign per variable", kind="bad-value")
    if n == 1:
        f = fs[0]
        if FIELDS[f.field].base != "S" or FIELDS[f.field].extended:
            raise MathError("sign bounds take sign-field input", kind="bad-value")
        if f.is_zero:
            raise MathError("zero polynomial in system", kind="zero-polynomial")
        d = f.newton_degree()
        terms = {}
        for (i,), v in f.terms.items():
            s = v.angular * (-1 if i % 2 else 1)
            terms[(d - i,)] = unit("S", s)
        R = HPoly("S", 1, terms, ("u",))
        l = HPoly("S", 1, {(0,): unit("S", 1), (1,): unit("S", h[0])}, ("u",))
        return mult(R, l).value
    system = SupportSystem.from_polys(fs)
    try:
        R, _meta = stripped_resultant(system)
    except MathError as exc:
        if exc.kind == "constant-resultant":
            return 0
        raise
    signs = {name: 1 for name in system.names() if name not in system.aux_names}
    sets = specialize_signs(R, signs, system.aux_names)
    l = HPoly("S", 2, {
        (0, 0): unit("S", 1),
        (1, 0): unit("S", h[0]),
        (0, 1): unit("S", h[1]),
    }, system.aux_names)
    return setmult_bound(sets, l, mode="boundary")


# ---------------------------------------------------------------------------
# univariate baseline


def sylvester_resultant(f: Sequence, g: Sequence) -> Fraction:
    """Resultant of univariate rational polynomials (ascending coeffs)."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]
    if not f or not g or (len(f) == 1 and f[0] == 0) or (len(g) == 1 and g[0] == 0):
        raise MathError("zero polynomial has no resultant", kind="zero-polynomial")
    if f[-1] == 0 or g[-1] == 0:
        raise MathError("zero leading coefficient", kind="bad-value")
    m = len(f) - 1
    n = len(g) - 1
    if m == 0 and n == 0:
        return Fraction(1)
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fd = f[::-1]
    gd = g[::-1]
    for i in range(n):
        rows.append([Fraction(0)] * i + fd + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + gd + [Fraction(0)] * (size - i - n - 1))
    det = Fraction(1)
    sign = 1
    for k in range(size):
        piv = None
        for i in range(k, size):
            if rows[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        det *= rows[k][k]
        for i in range(k + 1, size):
            if rows[i][k] != 0:
                factor = rows[i][k] / rows[k][k]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return det * sign
