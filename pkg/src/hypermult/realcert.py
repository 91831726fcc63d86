"""Real feasibility certificates via exact Fourier-Motzkin elimination.

Decides strict/nonstrict rational linear systems, returns a rational sample
point when feasible and a Farkas certificate (a positive combination of the
input constraints adding up to an impossible constant inequality) when not.
When the certificate happens to be a cycle of two-term comparisons it is
also rendered as an inequality chain like "1<a<c<d<e<b<1".

The headline application: can a sign polynomial f be the coefficientwise
sign vector of (1 + sum s_i x_i) * g for a real polynomial g?  The unknown
coefficients of g satisfy one sign constraint per product coefficient, which
is exactly a linear feasibility problem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Mapping, Sequence, Union

from hypermult.errors import MathError, ParseError
from hypermult.hyperfield import FIELDS, unit
from hypermult.polyring import HPoly, IntPoly, quotient_support, rat_poly

Q = Fraction


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class Constraint:
    """sum coeffs[v] * v  REL  rhs with REL in {"<", "<=", "="}."""

    coeffs: tuple[tuple[str, Fraction], ...]
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in ("<", "<=", "="):
            raise MathError(f"bad relation {self.rel!r}", kind="bad-value")

    @classmethod
    def make(cls, coeffs: Mapping[str, Union[int, Fraction]], rel: str, rhs=0) -> "Constraint":
        norm = tuple(sorted((v, Q(c)) for v, c in coeffs.items() if c != 0))
        if rel in (">", ">="):
            norm = tuple((v, -c) for v, c in norm)
            rel = "<" if rel == ">" else "<="
            rhs = -Q(rhs)
        return cls(norm, rel, Q(rhs))

    def __str__(self) -> str:
        if not self.coeffs:
            lhs = "0"
        else:
            parts = []
            for v, c in self.coeffs:
                if c == 1:
                    s = v
                elif c == -1:
                    s = f"-{v}"
                else:
                    s = f"{c}{v}"
                parts.append(s if not parts else (f"+ {s}" if c > 0 else f"- {s.lstrip('-')}"))
            lhs = " ".join(parts)
        return f"{lhs} {self.rel} {self.rhs}"


def parse_constraint(text: str) -> Constraint:
    """Parse e.g. "a + b > 0", "1 < a", "c - d <= 3/2"."""
    for op in ("<=", ">=", "=", "<", ">"):
        if op in text:
            left, right = text.split(op, 1)
            break
    else:
        raise ParseError(f"no relation in {text!r}")
    lp, rp = rat_poly(left.strip()), rat_poly(right.strip())
    diff = lp - rp
    if diff.total_degree() > 1:
        raise ParseError("constraints must be linear")
    coeffs = {}
    rhs = Q(0)
    for m, c in diff.terms.items():
        if sum(m) == 0:
            rhs = -Q(c)
        else:
            coeffs[diff.symbols[list(m).index(1)]] = Q(c)
    return Constraint.make(coeffs, op, rhs)


@dataclass(frozen=True)
class LinearSystem:
    constraints: tuple[Constraint, ...]

    @classmethod
    def parse(cls, lines: Sequence[str]) -> "LinearSystem":
        return cls(tuple(parse_constraint(t) for t in lines))

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for c in self.constraints:
            for v, _ in c.coeffs:
                if v not in seen:
                    seen.append(v)
        return tuple(sorted(seen))


@dataclass(frozen=True)
class FarkasCertificate:
    """Positive multipliers on input constraints whose sum is contradictory."""

    combination: tuple[tuple[int, Fraction], ...]  # (constraint index, multiplier)
    chain: str | None = None

    def to_json(self) -> dict:
        return {
            "combination": [[i, str(m)] for i, m in self.combination],
            **({"chain": self.chain} if self.chain else {}),
        }


@dataclass(frozen=True)
class FMResult:
    status: str  # "FEASIBLE" | "INFEASIBLE"
    sample: dict[str, Fraction] | None = None
    certificate: FarkasCertificate | None = None

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.sample is not None:
            out["sample"] = {v: str(q) for v, q in sorted(self.sample.items())}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


# ---------------------------------------------------------------------------
# the elimination core

# internal row: (coeffs dict, rhs, strict, combo dict orig-index -> multiplier)

_LIMIT = 200_000


def _normalize_row(coeffs: dict, rhs: Fraction, strict: bool, combo: dict):
    coeffs = {v: c for v, c in coeffs.items() if c != 0}
    if coeffs:
        scale = Q(1) / max(abs(c) for c in coeffs.values())
        if scale != 1:
            coeffs = {v: c * scale for v, c in coeffs.items()}
            rhs = rhs * scale
            combo = {k: m * scale for k, m in combo.items()}
    return coeffs, rhs, strict, combo


def _rows_from(system: LinearSystem):
    rows = []
    for idx, c in enumerate(system.constraints):
        coeffs = dict(c.coeffs)
        if c.rel == "=":
            rows.append(_normalize_row(dict(coeffs), c.rhs, False, {(idx, 1): Q(1)}))
            rows.append(_normalize_row({v: -q for v, q in coeffs.items()}, -c.rhs,
                                       False, {(idx, -1): Q(1)}))
        else:
            rows.append(_normalize_row(coeffs, c.rhs, c.rel == "<", {(idx, 1): Q(1)}))
    return rows


def fm_solve(system: LinearSystem, order: Sequence[str] | None = None) -> FMResult:
    """Exact Fourier-Motzkin with certificate and sample extraction."""
    variables = list(order) if order is not None else list(system.variables())
    rows = _rows_from(system)
    levels = [rows]

    def contradiction(row):
        coeffs, rhs, strict, combo = row
        if coeffs:
            return False
        return rhs < 0 or (rhs == 0 and strict)

    for row in rows:
        if contradiction(row):
            return FMResult("INFEASIBLE", certificate=_certificate(system, row))

    remaining = list(variables)
    elim: list[str] = []
    while remaining:
        # eliminate the variable with the fewest lower*upper products
        rows = levels[-1]
        def cost(v):
            lo = sum(1 for c, *_ in rows if c.get(v, 0) < 0)
            hi = sum(1 for c, *_ in rows if c.get(v, 0) > 0)
            return lo * hi - lo - hi
        v = min(remaining, key=lambda x: (cost(x), remaining.index(x)))
        remaining.remove(v)
        elim.append(v)
        lows, highs, keeps = [], [], []
        for row in rows:
            cv = row[0].get(v, 0)
            (lows if cv < 0 else highs if cv > 0 else keeps).append(row)
        new_rows = {}
        for r in keeps:
            rkey = (tuple(sorted(r[0].items())), r[2])
            prev = new_rows.get(rkey)
            if prev is None or r[1] < prev[1]:
                new_rows[rkey] = r
        for lo in lows:
            for hi in highs:
                a, abound, astrict, acombo = lo
                b, bbound, bstrict, bcombo = hi
                la, lb = -a[v], b[v]
                coeffs = {}
                for name, c in a.items():
                    coeffs[name] = coeffs.get(name, Q(0)) + c * lb
                for name, c in b.items():
                    coeffs[name] = coeffs.get(name, Q(0)) + c * la
                combo = {}
                for k, m in acombo.items():
                    combo[k] = m * lb
                for k, m in bcombo.items():
                    combo[k] = combo.get(k, Q(0)) + m * la
                row = _normalize_row(coeffs, abound * lb + bbound * la,
                                     astrict or bstrict, combo)
                if contradiction(row):
                    return FMResult("INFEASIBLE", certificate=_certificate(system, row))
                if not row[0] and not row[2] and row[1] >= 0:
                    continue  # trivially true constant row
                key = (tuple(sorted(row[0].items())), row[2])
                old = new_rows.get(key)
                if old is None or row[1] < old[1]:
                    new_rows[key] = row
        if len(new_rows) > _LIMIT:
            raise MathError("Fourier-Motzkin blow-up", kind="too-large")
        levels.append(list(new_rows.values()))

    # feasible: back-substitute in reverse elimination order
    sample: dict[str, Fraction] = {}
    for depth in range(len(elim) - 1, -1, -1):
        v = elim[depth]
        rows = levels[depth]
        lo_val, lo_strict = None, False
        hi_val, hi_strict = None, False
        for coeffs, rhs, strict, _ in rows:
            cv = coeffs.get(v, 0)
            if cv == 0:
                continue
            rest = rhs - sum(c * sample[name] for name, c in coeffs.items() if name != v)
            bound = rest / cv
            if cv > 0:  # v <= bound
                if hi_val is None or bound < hi_val or (bound == hi_val and strict):
                    hi_val, hi_strict = bound, strict
            else:  # v >= bound
                if lo_val is None or bound > lo_val or (bound == lo_val and strict):
                    lo_val, lo_strict = bound, strict
        sample[v] = _pick(lo_val, lo_strict, hi_val, hi_strict)
    return FMResult("FEASIBLE", sample=sample)


def _pick(lo, lo_strict, hi, hi_strict) -> Fraction:
    """A rational in the interval, preferring small integers."""
    if lo is None and hi is None:
        return Q(0)
    if lo is None:
        return Q(floor(hi) - (1 if hi_strict and hi == floor(hi) else 0))
    if hi is None:
        return Q(ceil(lo) + (1 if lo_strict and lo == ceil(lo) else 0))
    if lo == hi:
        if lo_strict or hi_strict:
            raise MathError("empty interval during back-substitution", kind="internal")
        return lo
    # prefer an integer strictly inside when available
    first = floor(lo) + 1 if (lo_strict or lo != floor(lo)) else ceil(lo)
    if lo_strict and Q(first) <= lo:
        first += 1
    if Q(first) >= lo and Q(first) <= hi and not (hi_strict and Q(first) == hi) \
            and not (lo_strict and Q(first) == lo):
        return Q(first)
    return (lo + hi) / 2


def _certificate(system: LinearSystem, row) -> FarkasCertificate:
    # equality constraints were split into two directions; their net
    # multiplier is signed, inequality multipliers stay positive
    combo = row[3]
    merged: dict[int, Fraction] = {}
    for (idx, side), m in combo.items():
        merged[idx] = merged.get(idx, Q(0)) + side * m
    comb = tuple(sorted((i, m) for i, m in merged.items() if m != 0))
    return FarkasCertificate(comb, chain=_chain_string(system, [i for i, _ in comb]))


def verify_fm_certificate(system: LinearSystem, cert: FarkasCertificate) -> bool:
    """Recombine the cited constraints and confirm the contradiction.

    Multipliers on inequalities must be positive; equalities may carry any
    nonzero multiplier.  The combination must cancel every variable and leave
    an impossible constant inequality.
    """
    total: dict[str, Fraction] = {}
    rhs = Q(0)
    strict = False
    for idx, m in cert.combination:
        c = system.constraints[idx]
        if c.rel != "=" and m <= 0:
            return False
        if m == 0:
            return False
        for v, q in c.coeffs:
            total[v] = total.get(v, Q(0)) + m * q
        rhs += m * c.rhs
        strict = strict or (c.rel == "<")
    if any(q != 0 for q in total.values()):
        return False
    return rhs < 0 or (rhs == 0 and strict)


# ---------------------------------------------------------------------------
# inequality chains


def _signed_nodes(c: Constraint):
    """Encode a two-term comparison as an edge u < v between signed nodes.

    Nodes are ('c', q) constants or ('v', sign, name).  Returns None when the
    constraint is not a unit-coefficient comparison of at most two terms.
    """
    coeffs = [(v, q) for v, q in c.coeffs]
    mag = {abs(q) for _, q in coeffs}
    if len(coeffs) == 0 or len(coeffs) > 2 or len(mag) != 1:
        return None
    scale = mag.pop()
    rhs = c.rhs / scale
    coeffs = [(v, q / scale) for v, q in coeffs]
    strict = c.rel == "<"
    if c.rel == "=":
        return None
    if len(coeffs) == 1:
        (v, q), = coeffs
        if q > 0:  # v <= rhs
            return (("v", 1, v), ("c", rhs), strict)
        return (("c", -rhs), ("v", 1, v), strict)  # -v <= rhs i.e. -rhs <= v
    (v1, q1), (v2, q2) = coeffs
    if rhs != 0:
        return None
    # q1*v1 + q2*v2 <= 0  <=>  (q1 v1) <= (-q2 v2)
    return (("v", 1 if q1 > 0 else -1, v1), ("v", -1 if q2 > 0 else 1, v2), strict)


def _neg_node(n):
    if n[0] == "c":
        return ("c", -n[1])
    return ("v", -n[1], n[2])


def _node_str(n) -> str:
    if n[0] == "c":
        return str(n[1])
    return n[2] if n[1] > 0 else f"-{n[2]}"


def _chain_string(system: LinearSystem, indices: Sequence[int]) -> str | None:
    """Render a pure-cycle certificate as 1<a<c<...<1 or a>-b>...>a."""
    edges = []
    for i in indices:
        e = _signed_nodes(system.constraints[i])
        if e is None:
            return None
        edges.append(e)
    consts = sorted(u[1] for u, v, _ in edges if u[0] == "c") + \
        sorted(v[1] for u, v, _ in edges if v[0] == "c")
    if consts:
        start = ("c", consts[0])
    else:
        names = sorted({n[2] for u, v, _ in edges for n in (u, v)})
        start = ("v", 1, names[0])
    # walk ascending
    chain = [start]
    unused = list(range(len(edges)))
    cur = start
    for _ in range(len(edges)):
        nxt = None
        for k in list(unused):
            u, v, strict = edges[k]
            if u == cur:
                nxt = v
            elif _neg_node(v) == cur:
                nxt = _neg_node(u)
            else:
                continue
            unused.remove(k)
            break
        if nxt is None:
            return None
        chain.append(nxt)
        cur = nxt
    if unused or cur != start:
        return None
    if consts:
        return "<".join(_node_str(n) for n in chain)
    # no constants: print descending starting from the same node
    desc = list(reversed(chain))
    return ">".join(_node_str(n) for n in desc)


# ---------------------------------------------------------------------------
# real quotients of sign polynomials


@dataclass(frozen=True)
class QuotientFeasibility:
    status: str
    quotient: IntPoly | None = None  # rational sample quotient
    lift: IntPoly | None = None  # the divisor lift that was used
    certificate: FarkasCertificate | None = None

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.quotient is not None:
            out["quotient"] = str(self.quotient)
            out["lift"] = str(self.lift)
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def _var_name(m) -> str:
    return "g" + "_".join(str(e) for e in m)


def real_linear_quotient_feasible(f: HPoly, l: HPoly) -> QuotientFeasibility:
    """Is there a real g with sgn((1 + sum s_i x_i) * g) = f coefficientwise?

    The lift of l is normalized to unit coefficients (rescaling each variable
    by a positive real), and f is scaled so its constant term is +.  Both
    normalizations need nonzero constants; otherwise 'unnormalizable'.
    """
    if FIELDS[f.field].base != "S" or FIELDS[f.field].extended:
        raise MathError("real quotients are asked of sign polynomials", kind="unsupported-field")
    if f.field != l.field or f.nvars != l.nvars:
        raise MathError("field or variable mismatch", kind="field-mismatch")
    if l.degree() != 1:
        raise MathError("the divisor must be linear", kind="bad-value")
    const = tuple(0 for _ in range(f.nvars))
    if f.coeff(const).is_zero or l.coeff(const).is_zero:
        raise MathError("unnormalizable: zero constant term", kind="unnormalizable")
    if f.coeff(const).angular < 0:
        f = f.neg()
    lift_signs = {const: 1}
    for m, v in l.terms.items():
        if sum(m) == 1:
            lift_signs[m] = v.angular if l.coeff(const).angular > 0 else -v.angular
    box = quotient_support(f, l)
    # the quotient constant may be rescaled to 1: the product constant equals
    # it, f's constant is +, and positive scaling of g preserves every sign
    names = {m: _var_name(m) for m in box if m != const}
    constraints = []
    region = set()
    for n in box:
        for p in lift_signs:
            region.add(tuple(a + b for a, b in zip(n, p)))
    region |= set(f.terms)
    for m in sorted(region):
        coeffs: dict[str, Fraction] = {}
        shift = Q(0)
        for p, s in lift_signs.items():
            n = tuple(a - b for a, b in zip(m, p))
            if n == const and const in box:
                shift += s
            elif n in names:
                coeffs[names[n]] = coeffs.get(names[n], Q(0)) + s
        fm = f.coeff(m)
        if fm.is_zero:
            constraints.append(Constraint.make(coeffs, "=", -shift))
        elif fm.angular > 0:
            constraints.append(Constraint.make(coeffs, ">", -shift))
        else:
            constraints.append(Constraint.make(coeffs, "<", -shift))
    system = LinearSystem(tuple(constraints))
    res = fm_solve(system)
    if res.status == "INFEASIBLE":
        return QuotientFeasibility("INFEASIBLE", certificate=res.certificate)
    sample = res.sample or {}
    gterms = {const: Q(1)} if const in box else {}
    for m in box:
        if m == const:
            continue
        val = sample.get(names[m], Q(0))
        if val:
            gterms[m] = val
    g = IntPoly(tuple(f.vars),
                {m: (int(c) if c.denominator == 1 else c) for m, c in gterms.items()})
    lift = IntPoly(tuple(f.vars),
                   {m: s for m, s in lift_signs.items()})
    prod = lift * g
    if prod.signs_poly().key() != f.key():
        raise MathError("sample failed the exact sign check", kind="internal")
    return QuotientFeasibility("FEASIBLE", quotient=g, lift=lift)


def verify_certificate(f: HPoly, factors: Sequence[IntPoly]) -> bool:
    """Multiply real factors exactly and compare coefficient signs with f."""
    if not factors:
        return False
    prod = factors[0]
    for p in factors[1:]:
        prod = prod * p
    prod = prod.with_symbols(tuple(f.vars))
    return prod.signs_poly().key() == f.key()
