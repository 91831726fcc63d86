"""Linear-factor multiplicities over the sign and Krasner hyperfields.

The central recursion: mult_L(F) is infinite when L contains a unit,
otherwise 0 when no member of L divides any member of F, otherwise
1 + mult_L of the set of one-step quotients.  Quotient search is exact
backtracking over the finite support box Newt(f) minus Newt(l).

Extended (tropical) coefficients route through hypermult.tropgeo instead;
the searches here are for K and S where coefficient domains are finite.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence, Union

from hypermult.errors import MathError, ParseError
from hypermult.hyperfield import (
    FIELDS,
    HyperValue,
    get_field,
    hyper_mul,
    iterated_hypersum,
    subset_contains,
    unit,
    zero,
)
from hypermult.polyring import HPoly, product_membership, quotient_support

INF = float("inf")


# ---------------------------------------------------------------------------
# results


@dataclass(frozen=True)
class MultiplicityResult:
    value: Union[int, float]
    member: HPoly | None = None  # which member of the input set achieved it
    witness_chain: tuple[tuple[HPoly, HPoly], ...] = ()  # (divisor, quotient) steps
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "value": "inf" if self.value == INF else self.value,
            "witnesses": [
                {"divisor": d.to_json(), "quotient": q.to_json()}
                for d, q in self.witness_chain
            ],
            **({"note": self.note} if self.note else {}),
        }


@dataclass(frozen=True)
class BoundaryResult:
    value: Union[int, float]
    components: tuple[Union[int, float], ...]  # one per dropped variable

    def to_json(self) -> dict:
        enc = lambda v: "inf" if v == INF else v
        return {"value": enc(self.value), "components": [enc(v) for v in self.components]}


@dataclass(frozen=True)
class PolySet:
    """A finite explicit set of polynomials over one hyperfield."""

    members: tuple[HPoly, ...]

    def __post_init__(self):
        if not self.members:
            raise MathError("empty polynomial set", kind="bad-value")
        f0 = self.members[0]
        for f in self.members:
            if f.field != f0.field or f.nvars != f0.nvars:
                raise MathError("mixed polynomial set", kind="bad-value")

    @property
    def field(self):
        return self.members[0].field


def _as_members(x) -> tuple[HPoly, ...]:
    if isinstance(x, HPoly):
        return (x,)
    if isinstance(x, PolySet):
        return x.members
    if isinstance(x, SignSetPoly):
        return tuple(x.members())
    raise MathError(f"expected a polynomial or polynomial set, got {type(x).__name__}", kind="bad-value")


def _check_base_field(field: str):
    if FIELDS[field].extended:
        raise MathError(
            "exact search runs over K and S; use ext_divides_once / mult_tropext for T and TR",
            kind="unsupported-field",
        )


# ---------------------------------------------------------------------------
# one-step division


def divides_once_iter(f: HPoly, l: HPoly) -> Iterator[HPoly]:
    """Yield every g with f in g*l, in a deterministic order.

    Exact backtracking: unknown coefficients live on the lattice points of
    Newt(f) minus Newt(l); a coefficient constraint is checked as soon as
    its last contributing unknown is assigned.  Sound and complete because
    a membership constraint with an unassigned contributor is always still
    satisfiable (the free term can reach any needed partial sum).
    """
    _check_base_field(f.field)
    if f.field != l.field or f.nvars != l.nvars:
        raise MathError("field or variable mismatch", kind="field-mismatch")
    if f.is_zero or l.is_zero:
        raise MathError("division needs nonzero polynomials", kind="zero-polynomial")
    fld = FIELDS[f.field]
    box = quotient_support(f, l)
    if not box:
        return
    box.sort(key=lambda m: (sum(m), m))
    index = {m: i for i, m in enumerate(box)}
    lsupp = sorted(l.terms)

    # contributors per product exponent
    contrib: dict[tuple[int, ...], list[tuple[int, HyperValue]]] = {}
    for n in box:
        for p in lsupp:
            m = tuple(a + b for a, b in zip(n, p))
            contrib.setdefault(m, []).append((index[n], l.terms[p]))
    # a nonzero coefficient of f outside the reachable region kills everything
    for m in f.terms:
        if m not in contrib:
            return

    check_after: list[list[tuple[tuple[int, ...], list[tuple[int, HyperValue]]]]] = [
        [] for _ in box
    ]
    for m, lst in contrib.items():
        last = max(i for i, _ in lst)
        check_after[last].append((m, lst))

    values: list[HyperValue] = [1] * len(box)  # type: ignore[list-item]
    if fld.base == "S":
        choices = (unit(fld, 1), unit(fld, -1), zero(fld))
    else:
        choices = (unit(fld, 1), zero(fld))

    def ok(i: int) -> bool:
        for m, lst in check_after[i]:
            parts = []
            for j, lv in lst:
                gv = values[j]
                if not gv.is_zero:
                    parts.append(hyper_mul(gv, lv))
            sub = iterated_hypersum(fld.id, parts)
            if not subset_contains(sub, f.coeff(m)):
                return False
        return True

    n = len(box)

    def walk(i: int) -> Iterator[HPoly]:
        if i == n:
            yield HPoly(fld.id, f.nvars, {m: values[j] for m, j in index.items()
                                          if not values[j].is_zero}, f.vars)
            return
        for c in choices:
            values[i] = c
            if ok(i):
                yield from walk(i + 1)

    yield from walk(0)


def divides_once(f: HPoly, l: HPoly) -> list[HPoly]:
    """All g with f in g*l, sorted canonically."""
    return sorted(divides_once_iter(f, l), key=lambda g: g.key())


# ---------------------------------------------------------------------------
# the multiplicity recursion


def _is_unit(p: HPoly) -> bool:
    return len(p.terms) == 1 and all(
        all(e == 0 for e in m) for m in p.terms
    )


def _min_degree(polys: Sequence[HPoly]) -> int:
    return min(p.degree() for p in polys)


# multiplicity is a pure function of (g, L); sweeps over many related
# polynomials share most of their division trees, so the memo is global
# (bounded; entries are small tuples of small polynomials)
_MULT_CACHE: dict[tuple, tuple[Union[int, float], tuple]] = {}
_MULT_CACHE_MAX = 200_000


def mult(f, l) -> MultiplicityResult:
    """mult_L(F) over K or S with a replayable witness chain.

    f and l may be single polynomials, PolySets, or SignSetPolys (the last
    expands to its members).  Infinite when some member of L is a unit.
    """
    F = _as_members(f)
    L = _as_members(l)
    _check_base_field(F[0].field)
    if any(p.is_zero for p in F) or any(p.is_zero for p in L):
        raise MathError("multiplicity needs nonzero polynomials", kind="zero-polynomial")
    if F[0].field != L[0].field or F[0].nvars != L[0].nvars:
        raise MathError("field or variable mismatch", kind="field-mismatch")
    for p in L:
        if _is_unit(p):
            return MultiplicityResult(INF, note="the divisor set contains a unit")

    ldeg = _min_degree(L)
    if ldeg == 0:
        # nonzero constant = unit over K/S, caught above; degree-0 nonunits
        # do not exist in these fields
        raise MathError("degenerate divisor", kind="bad-value")

    lkey = tuple(sorted(p.key() for p in L))

    def rec(g: HPoly) -> tuple[Union[int, float], tuple]:
        key = (g.key(), lkey)
        hit = _MULT_CACHE.get(key)
        if hit is not None:
            return hit
        bound = g.degree() // ldeg  # each step drops the degree by deg(l)
        best: tuple[Union[int, float], tuple] = (0, ())
        if bound > 0:
            for li in L:
                for q in divides_once_iter(g, li):
                    v, ch = rec(q)
                    if v + 1 > best[0]:
                        best = (v + 1, ((li, q),) + ch)
                    if best[0] >= bound:
                        break
                if best[0] >= bound:
                    break
        if len(_MULT_CACHE) < _MULT_CACHE_MAX:
            _MULT_CACHE[key] = best
        return best

    value, chain = 0, ()
    member = None
    for g in F:
        v, ch = rec(g)
        if member is None or v > value:
            value, chain, member = v, ch, g
    return MultiplicityResult(value, member if len(F) > 1 else None, chain)


def verify_multiplicity(f, l, result: MultiplicityResult) -> bool:
    """Replay a finite witness chain and confirm maximality's basic shape."""
    if result.value == INF:
        return any(_is_unit(p) for p in _as_members(l))
    F = _as_members(f)
    g = result.member if result.member is not None else F[0]
    if g not in F:
        return False
    if len(result.witness_chain) != result.value:
        return False
    for divisor, quotient in result.witness_chain:
        if not product_membership(g, quotient, divisor):
            return False
        g = quotient
    return all(not divides_once(g, li) for li in _as_members(l))


# ---------------------------------------------------------------------------
# boundary multiplicity


def bmult(f: HPoly, l: HPoly) -> BoundaryResult:
    """min over i of mult of the i-th boundary restriction of the
    homogenizations (set x_i = 0 for each variable including the new one)."""
    _check_base_field(f.field)
    if f.is_zero or l.is_zero:
        raise MathError("boundary multiplicity needs nonzero polynomials", kind="zero-polynomial")
    if l.degree() != 1:
        raise MathError("boundary multiplicity divides by a linear form", kind="bad-value")
    fh = f.homogenize()
    lh = l.homogenize()
    comps: list[Union[int, float]] = []
    for i in range(fh.nvars):
        li = lh.substitute_zero(i)
        if li.is_zero:
            raise MathError(
                "a boundary restriction of the divisor vanishes", kind="bad-value"
            )
        fi = fh.substitute_zero(i)
        if fi.is_zero:
            comps.append(INF)
            continue
        comps.append(mult(fi, li).value)
    return BoundaryResult(min(comps), tuple(comps))


# ---------------------------------------------------------------------------
# univariate closed forms


_SIGN_CHARS = {"+": 1, "-": -1, "0": 0}


def _parse_signs(seq) -> list[int]:
    if isinstance(seq, str):
        try:
            return [_SIGN_CHARS[c] for c in seq.strip()]
        except KeyError as e:
            raise ParseError(f"bad sign character {e.args[0]!r}")
    out = []
    for s in seq:
        if s not in (-1, 0, 1):
            raise ParseError(f"bad sign {s!r}")
        out.append(int(s))
    return out


def sign_changes(signs) -> int:
    """Number of sign changes, zeros skipped."""
    seq = [s for s in _parse_signs(signs) if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def descartes_univariate(signs, at: str = "x-1") -> int:
    """Multiplicity of a linear factor of a univariate sign polynomial.

    signs lists coefficients by ascending degree.  at="x-1" counts plain
    sign changes; at="x+1" (equivalently "1+u") counts changes after the
    substitution u -> -u, i.e. with odd positions negated.
    """
    seq = _parse_signs(signs)
    if at in ("x-1", "1-u", "u-1"):
        return sign_changes(seq)
    if at in ("x+1", "1+u", "u+1"):
        return sign_changes([s if i % 2 == 0 else -s for i, s in enumerate(seq)])
    raise ParseError(f"unknown linear factor {at!r}")


# ---------------------------------------------------------------------------
# sign-set polynomials and the boundary bound


STAR = frozenset((-1, 0, 1))
_TOKEN_SETS = {
    "+": frozenset((1,)),
    "-": frozenset((-1,)),
    "0": frozenset((0,)),
    "*": STAR,
}


class SignSetPoly:
    """Per-monomial subsets of {+,-,0}; absent entries are definitely zero."""

    __slots__ = ("nvars", "vars", "terms")

    def __init__(self, nvars: int, terms, vars: Sequence[str] | None = None):
        self.nvars = nvars
        self.vars = tuple(vars) if vars is not None else ("x", "y", "z")[:nvars]
        clean = {}
        for m, s in terms.items():
            s = frozenset(s)
            if not s or not s <= STAR:
                raise MathError(f"bad sign set {s}", kind="bad-value")
            if s == frozenset((0,)):
                continue
            clean[tuple(m)] = s
        self.terms = clean

    @classmethod
    def from_grid(cls, rows: Sequence[Sequence[str | None]], vars=None) -> "SignSetPoly":
        terms = {}
        for j, row in enumerate(rows):
            for i, tok in enumerate(row):
                tok = (tok or "").strip()
                if tok in ("", "."):
                    continue
                if tok not in _TOKEN_SETS:
                    raise ParseError(f"bad sign-grid token {tok!r}")
                terms[(i, j)] = _TOKEN_SETS[tok]
        return cls(2, terms, vars)

    def sets(self, m) -> frozenset:
        return self.terms.get(tuple(m), frozenset((0,)))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def undetermined(self) -> list[tuple[int, ...]]:
        return sorted(m for m, s in self.terms.items() if len(s) > 1)

    def members(self) -> Iterator[HPoly]:
        """Every sign polynomial compatible with the sets (can be large)."""
        supp = self.support()
        sets = [sorted(self.terms[m]) for m in supp]
        for combo in iproduct(*sets):
            terms = {
                m: unit("S", c)
                for m, c in zip(supp, combo)
                if c != 0
            }
            yield HPoly("S", self.nvars, terms, self.vars)

    def grid(self) -> str:
        """Display orientation, first line = highest y-power."""
        if self.nvars != 2:
            raise MathError("grids are for two variables", kind="bad-value")
        if not self.terms:
            return "."
        maxi = max(m[0] for m in self.terms)
        maxj = max(m[1] for m in self.terms)
        rev = {v: k for k, v in _TOKEN_SETS.items()}
        lines = []
        for j in range(maxj, -1, -1):
            row = []
            for i in range(maxi + 1):
                s = self.terms.get((i, j))
                row.append("." if s is None else rev.get(s, "*"))
            lines.append(" ".join(row))
        return "\n".join(lines)

    def __repr__(self):
        return f"SignSetPoly({sorted(self.terms.items())})"


def _normalize_line(l: HPoly) -> tuple[int, ...]:
    """Signs (h0, h1, ..., hn) of a full-support linear form, h0 scaled +."""
    if FIELDS[l.field].base != "S":
        raise MathError("sign bounds divide by a sign-field linear form", kind="bad-value")
    n = l.nvars
    signs = [0] * (n + 1)
    for m, v in l.terms.items():
        if sum(m) == 0:
            signs[0] = v.angular
        elif sum(m) == 1:
            signs[1 + m.index(1)] = v.angular
        else:
            raise MathError("divisor must be linear", kind="bad-value")
    if any(s == 0 for s in signs):
        raise MathError("divisor must have full linear support", kind="bad-value")
    if signs[0] < 0:
        signs = [-s for s in signs]
    return tuple(signs)


def _max_changes_row(sets: Sequence[frozenset], alternate: bool) -> int:
    """Max sign changes over per-position choices; alternation first."""
    work = []
    for i, s in enumerate(sets):
        if alternate and i % 2 == 1:
            s = frozenset(-x for x in s)
        work.append(s)
    # dp[last_sign] = best changes so far (last_sign 0 = nothing nonzero yet)
    dp = {0: 0}
    for s in work:
        # skipping a position means choosing 0 there, so 0 must be allowed
        nxt = dict(dp) if 0 in s else {}
        for last, val in dp.items():
            for c in s:
                if c == 0:
                    continue
                gain = 1 if last != 0 and c != last else 0
                key = c
                cand = val + gain
                if nxt.get(key, -1) < cand:
                    nxt[key] = cand
        dp = nxt
    return max(dp.values())


def setmult_bound(R: SignSetPoly, l: HPoly, mode: str = "boundary", cap: int = 10):
    """Exact max over members of the boundary multiplicity w.r.t. l.

    boundary mode runs a sign-change DP per boundary line of the degree-d
    triangle with the three shared corners pinned (and handles members of
    smaller degree and members with an identically zero boundary line by
    direct enumeration of those cases).  full mode enumerates members when
    the number of undetermined entries is at most cap.
    """
    if R.nvars != 2:
        raise MathError("sign-set bounds need two variables", kind="bad-value")
    if not R.terms:
        raise MathError("zero sign-set polynomial", kind="zero-polynomial")
    if l.nvars != R.nvars:
        raise MathError("variable count mismatch", kind="bad-value")
    h = _normalize_line(l)
    if mode == "full":
        nundet = len(R.undetermined())
        if nundet > cap:
            raise MathError(
                f"{nundet} undetermined entries exceed the full-mode cap {cap}",
                kind="too-large",
            )
        lpoly = HPoly("S", 2, {(0, 0): unit("S", h[0]), (1, 0): unit("S", h[1]),
                               (0, 1): unit("S", h[2])}, R.vars)
        best = 0
        for member in R.members():
            if member.is_zero:
                continue
            best = max(best, bmult(member, lpoly).value)
        return best
    if mode != "boundary":
        raise MathError(f"unknown mode {mode!r}", kind="bad-value")

    dmax = R.degree()
    best = 0
    for d in range(dmax, 0, -1):
        # members of degree exactly <= d: entries above the d-line must allow 0
        if any(0 not in R.sets(m) for m in R.terms if sum(m) > d):
            continue
        rows = {
            "bottom": [R.sets((i, 0)) for i in range(d + 1)],
            "left": [R.sets((0, j)) for j in range(d + 1)],
            "hyp": [R.sets((i, d - i)) for i in range(d + 1)],
        }
        alt = {
            "bottom": h[1] > 0,  # factor 1 + h1*x: alternate when h1 = +
            "left": h[2] > 0,
            "hyp": h[1] * h[2] > 0,
        }
        corners = {
            (0, 0): [("bottom", 0), ("left", 0)],
            (d, 0): [("bottom", d), ("hyp", d)],
            (0, d): [("left", d), ("hyp", 0)],
        }
        corner_pts = list(corners)
        corner_sets = [sorted(R.sets(p)) for p in corner_pts]
        # rows that can be identically zero give an infinite component,
        # dropping them from the min
        zeroable = {
            name: all(0 in s for s in cells) for name, cells in rows.items()
        }
        for zset in iproduct(*[
            ((False, True) if zeroable[name] and name != "hyp" else (False,))
            for name in ("bottom", "left", "hyp")
        ]):
            forced_zero = {name for name, z in zip(("bottom", "left", "hyp"), zset) if z}
            for combo in iproduct(*corner_sets):
                pin = dict(zip(corner_pts, combo))
                if any(
                    pin[p] != 0
                    for p, uses in corners.items()
                    if any(name in forced_zero for name, _ in uses)
                ):
                    continue
                vals = []
                bad = False
                for name, cells in rows.items():
                    if name in forced_zero:
                        continue
                    pinned = list(cells)
                    for p, uses in corners.items():
                        for rname, pos in uses:
                            if rname == name:
                                if pin[p] not in pinned[pos]:
                                    bad = True
                                pinned[pos] = frozenset((pin[p],))
                    if bad:
                        break
                    vals.append(_max_changes_row(pinned, alt[name]))
                if not bad and vals:
                    best = max(best, min(vals))
    return best
