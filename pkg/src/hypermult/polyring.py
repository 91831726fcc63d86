"""Polynomials over hyperfields, plus exact symbolic polynomials over Z/Q.

Two polynomial kinds live here:

* HPoly  -- multivariate polynomial with HyperValue coefficients; products
  are multivalued, so instead of `f * g` there is product_membership(f, g, h)
  which tests f in g*h coefficientwise.
* IntPoly/RatPoly -- plain commutative polynomials in named symbols with
  exact integer (or Fraction) coefficients, used for resultant matrices and
  rational certificates.

Grid convention: parse_grid takes rows bottom-up, rows[j][i] is the
coefficient of x^i y^j.  The text form (parse_grid_text / format_grid) uses
the display orientation where the FIRST line is the highest y-power.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from hypermult.errors import MathError, ParseError
from hypermult.geometry import (
    hull_inequalities,
    is_dense_support,
    lattice_points,
    point_in_hull,
)
from hypermult.hyperfield import (
    FIELDS,
    HyperValue,
    Rat,
    apply_morphism,
    format_value,
    get_field,
    hyper_mul,
    hyper_neg,
    iterated_hypersum,
    parse_rational,
    subset_contains,
    unit,
    zero,
)

# canonical variable ordering used when names are inferred from text
VAR_ORDER = ("x0", "x", "y", "z", "u", "v", "w")


def default_vars(nvars: int) -> tuple[str, ...]:
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i}" for i in range(1, nvars + 1))


class HPoly:
    """Polynomial over a hyperfield: exponent tuple -> nonzero HyperValue."""

    __slots__ = ("field", "nvars", "vars", "terms")

    def __init__(
        self,
        field: str,
        nvars: int,
        terms: Mapping[tuple[int, ...], HyperValue],
        vars: Sequence[str] | None = None,
    ):
        fld = get_field(field)
        if nvars < 1:
            raise MathError("polynomials need at least one variable", kind="bad-value")
        clean: dict[tuple[int, ...], HyperValue] = {}
        for m, v in terms.items():
            m = tuple(int(e) for e in m)
            if len(m) != nvars or any(e < 0 for e in m):
                raise MathError(f"bad exponent vector {m}", kind="bad-value")
            if v.field != fld.id:
                raise MathError("coefficient field mismatch", kind="field-mismatch")
            if v.is_zero:
                continue
            clean[m] = v
        self.field = fld.id
        self.nvars = nvars
        self.vars = tuple(vars) if vars is not None else default_vars(nvars)
        if len(self.vars) != nvars:
            raise MathError("variable name count mismatch", kind="bad-value")
        self.terms = clean

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, m: Sequence[int]) -> HyperValue:
        return self.terms.get(tuple(m), zero(self.field))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def newton_degree(self) -> int | None:
        """d if Newt(f) = d * standard simplex, else None."""
        if not self.terms:
            return None
        d = self.degree()
        simplex = [tuple(0 for _ in range(self.nvars))]
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = d
            simplex.append(tuple(e))
        hull = hull_inequalities(list(self.terms))
        target = hull_inequalities(simplex)
        # equal polytopes: mutual containment of vertex sets
        return d if all(point_in_hull(p, target) for p in self.terms) and all(
            point_in_hull(p, hull) for p in simplex
        ) else None

    def is_dense(self) -> bool:
        """Support contains every lattice point of its Newton polytope."""
        if not self.terms:
            return True
        return is_dense_support(list(self.terms))

    # -- rebuilders ---------------------------------------------------------

    def _with_terms(self, terms, nvars=None, vars=None) -> "HPoly":
        return HPoly(
            self.field,
            self.nvars if nvars is None else nvars,
            terms,
            self.vars if nvars is None and vars is None else vars,
        )

    def scale(self, c: HyperValue) -> "HPoly":
        if c.is_zero:
            raise MathError("scaling by zero", kind="bad-value")
        return self._with_terms({m: hyper_mul(v, c) for m, v in self.terms.items()})

    def shift(self, m: Sequence[int]) -> "HPoly":
        """Multiply by the monomial x^m."""
        m = tuple(m)
        return self._with_terms({tuple(a + b for a, b in zip(k, m)): v for k, v in self.terms.items()})

    def neg(self) -> "HPoly":
        return self._with_terms({m: hyper_neg(v) for m, v in self.terms.items()})

    def diagonal_transform(self, a: Sequence[HyperValue], k: Sequence[int] | None = None) -> "HPoly":
        """Substitute x_i -> a_i * x_i^{k_i} (k defaults to all ones)."""
        if k is None:
            k = [1] * self.nvars
        if len(a) != self.nvars or len(k) != self.nvars:
            raise MathError("diagonal transform needs one entry per variable", kind="bad-value")
        if any(v.is_zero for v in a) or any(e < 1 for e in k):
            raise MathError("diagonal transform needs nonzero scales and positive powers", kind="bad-value")
        out: dict[tuple[int, ...], HyperValue] = {}
        for m, v in self.terms.items():
            c = v
            for ai, mi in zip(a, m):
                for _ in range(mi):
                    c = hyper_mul(c, ai)
            out[tuple(mi * ki for mi, ki in zip(m, k))] = c
        return self._with_terms(out)

    def substitute_zero(self, i: int) -> "HPoly":
        """Set x_i = 0 and drop the variable (the boundary map)."""
        if not 0 <= i < self.nvars:
            raise MathError(f"variable index {i} out of range", kind="bad-value")
        if self.nvars == 1:
            raise MathError("cannot drop the last variable", kind="bad-value")
        out = {}
        for m, v in self.terms.items():
            if m[i] == 0:
                out[m[:i] + m[i + 1:]] = v
        return HPoly(self.field, self.nvars - 1, out, self.vars[:i] + self.vars[i + 1:])

    def homogenize(self, var: str = "x0") -> "HPoly":
        """Pad every term with a new first variable up to the total degree."""
        if self.is_zero:
            raise MathError("cannot homogenize the zero polynomial", kind="bad-value")
        d = self.degree()
        out = {(d - sum(m),) + m: v for m, v in self.terms.items()}
        return HPoly(self.field, self.nvars + 1, out, (var,) + self.vars)

    def apply(self, morphism: str) -> "HPoly":
        """Apply a coefficient-wise hyperfield morphism (nu, ac, embed, nu0)."""
        out = {m: apply_morphism(morphism, v) for m, v in self.terms.items()}
        fld = next(iter(out.values())).field if out else _morphism_target(morphism, self.field)
        return HPoly(fld, self.nvars, out, self.vars)

    # -- identity -----------------------------------------------------------

    def key(self) -> tuple:
        return (self.field, self.nvars, tuple(sorted(self.terms.items())))

    def __eq__(self, other) -> bool:
        return isinstance(other, HPoly) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"HPoly({self.field}, {self})"

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fld = FIELDS[self.field]
        parts: list[str] = []
        for m in sorted(self.terms, key=lambda m: (sum(m), tuple(-e for e in m))):
            v = self.terms[m]
            mono = format_monomial(m, self.vars)
            if fld.base == "S":
                sign = "-" if v.angular < 0 else "+"
            else:
                sign = "+"
            if fld.extended:
                if v.exp == 0 and mono:
                    body = mono
                else:
                    e = v.exp
                    coeff = str(e) if e.denominator == 1 and e >= 0 else f"t^({e})"
                    body = coeff + mono
            else:
                body = mono if mono else "1"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    # -- JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "nvars": self.nvars,
            "vars": list(self.vars),
            "terms": [
                {"exp": list(m), "value": format_value(v)}
                for m, v in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HPoly":
        from hypermult.hyperfield import parse_value

        field = data["field"]
        terms = {
            tuple(t["exp"]): parse_value(t["value"], field) for t in data["terms"]
        }
        return cls(field, data["nvars"], terms, data.get("vars"))


def _morphism_target(name: str, field: str) -> str:
    targets = {"nu": "T", "nu0": "K"}
    if name in targets:
        return targets[name]
    if name == "ac":
        return FIELDS[field].base
    if name == "embed":
        return {"K": "T", "S": "TR"}[field]
    raise MathError(f"unknown morphism {name!r}", kind="bad-morphism")


def format_monomial(m: Sequence[int], vars: Sequence[str]) -> str:
    parts = []
    for e, name in zip(m, vars):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# parsing


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split at top-level +/- into (sign, body) pairs."""
    out: list[tuple[int, str]] = []
    sign, buf, depth = 1, [], 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        if ch in "+-" and depth == 0 and not (buf and buf[-1] == "^"):
            body = "".join(buf).strip()
            if body:
                out.append((sign, body))
                sign = 1 if ch == "+" else -1
            else:
                # leading or doubled sign
                sign = sign * (1 if ch == "+" else -1)
            buf = []
        else:
            buf.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses")
    body = "".join(buf).strip()
    if body:
        out.append((sign, body))
    elif out or sign == 1:
        if not out:
            raise ParseError("empty polynomial")
        raise ParseError("trailing sign")
    else:
        raise ParseError("empty polynomial")
    return out


_RAT_CHARS = set("0123456789./")


def _parse_term(body: str) -> tuple[str | None, dict[str, int]]:
    """Split a term into (coefficient literal or None, variable powers)."""
    body = body.replace(" ", "")
    i = 0
    lit: str | None = None
    if body.startswith("t^"):
        if body[2:3] == "(":
            j = body.index(")", 2)
            lit, i = body[: j + 1], j + 1
        else:
            j = 2
            while j < len(body) and body[j] in _RAT_CHARS or (j == 2 and body[j:j+1] == "-"):
                j += 1
            lit, i = body[:j], j
    else:
        j = 0
        while j < len(body) and body[j] in _RAT_CHARS:
            j += 1
        if j:
            lit, i = body[:j], j
    powers: dict[str, int] = {}
    while i < len(body):
        ch = body[i]
        if not ch.isalpha():
            raise ParseError(f"bad character {ch!r} in term {body!r}")
        j = i + 1
        while j < len(body) and body[j].isdigit():
            j += 1
        name = body[i:j]
        i = j
        exp = 1
        if i < len(body) and body[i] == "^":
            i += 1
            j = i
            while j < len(body) and body[j].isdigit():
                j += 1
            if j == i:
                raise ParseError(f"missing exponent in {body!r}")
            exp = int(body[i:j])
            i = j
        if name in powers:
            raise ParseError(f"repeated variable {name!r} in term {body!r}")
        powers[name] = exp
    if lit is None and not powers:
        raise ParseError(f"empty term in {body!r}")
    return lit, powers


def _term_value(field: str, sign: int, lit: str | None) -> HyperValue:
    """Coefficient literal semantics, per field.

    Over K and S a rational literal contributes its sign; over T and TR a
    bare rational r is shorthand for the unit t^r (the zero coefficient is
    never written inside a polynomial, absent terms are zero).
    """
    fld = get_field(field)
    if not fld.extended:
        if lit is None:
            a = sign
        else:
            if lit.startswith("t^"):
                raise ParseError(f"{fld.id} coefficients have no exponents")
            q = parse_rational(lit)
            if q == 0:
                return zero(fld)
            a = sign * (1 if q > 0 else -1)
        if a < 0 and fld.base == "K":
            raise ParseError("K has no negative coefficients")
        return unit(fld, a if fld.base == "S" else 1, 0)
    if fld.base == "K" and sign < 0:
        raise ParseError(f"{fld.id} has no negative coefficients")
    if lit is None:
        e = Fraction(0)
    elif lit.startswith("t^"):
        body = lit[2:]
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        e = parse_rational(body)
    else:
        e = parse_rational(lit)
    return unit(fld, sign if fld.base == "S" else 1, e)


def parse_poly(text: str, field: str, vars: Sequence[str] | None = None) -> HPoly:
    """Parse a polynomial like "x^4 - x^3 + x^2 - x + 1" or "0+x+y+2x^2"."""
    fld = get_field(field)
    terms = _split_terms(text.strip())
    parsed = []
    seen_names: list[str] = []
    for sign, body in terms:
        lit, powers = _parse_term(body)
        for name in powers:
            if name not in seen_names:
                seen_names.append(name)
        parsed.append((sign, lit, powers))
    if vars is None:
        ordered = [n for n in VAR_ORDER if n in seen_names]
        ordered += [n for n in seen_names if n not in VAR_ORDER]
        names = tuple(ordered) if ordered else ("x",)
    else:
        names = tuple(vars)
        for n in seen_names:
            if n not in names:
                raise ParseError(f"unknown variable {n!r}")
    index = {n: i for i, n in enumerate(names)}
    out: dict[tuple[int, ...], HyperValue] = {}
    for sign, lit, powers in parsed:
        m = [0] * len(names)
        for n, e in powers.items():
            m[index[n]] = e
        m = tuple(m)
        if m in out:
            raise ParseError(f"repeated monomial in input (at {m})")
        v = _term_value(fld.id, sign, lit)
        if not v.is_zero:
            out[m] = v
    return HPoly(fld.id, len(names), out, names)


ZERO_TOKENS = {"", ".", None}


def parse_grid(rows: Sequence[Sequence[str | None]], field: str,
               vars: Sequence[str] | None = None) -> HPoly:
    """Grid of coefficient tokens, rows bottom-up: rows[j][i] -> x^i y^j."""
    fld = get_field(field)
    out: dict[tuple[int, ...], HyperValue] = {}
    for j, row in enumerate(rows):
        for i, tok in enumerate(row):
            if tok in ZERO_TOKENS or (tok or "").strip() in ("", "."):
                continue
            tok = tok.strip()
            if tok == "0" and not fld.extended:
                continue
            sign = 1
            if tok[0] in "+-":
                sign = 1 if tok[0] == "+" else -1
                tok = tok[1:]
            v = _term_value(fld.id, sign, tok or None)
            if not v.is_zero:
                out[(i, j)] = v
    return HPoly(fld.id, 2, out, vars or ("x", "y"))


def parse_grid_text(text: str, field: str, vars: Sequence[str] | None = None) -> HPoly:
    """Display-oriented grid: first line is the highest y-power row."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty grid")
    rows = [ln.split() for ln in lines]
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ParseError("non-rectangular grid (pad zero entries with '.')")
    return parse_grid(list(reversed(rows)), field, vars)


def format_grid(f: HPoly) -> str:
    """Display orientation: first line = highest y-power."""
    if f.nvars != 2:
        raise MathError("grids are for two-variable polynomials", kind="bad-value")
    if f.is_zero:
        return "."
    fld = FIELDS[f.field]
    maxi = max(m[0] for m in f.terms)
    maxj = max(m[1] for m in f.terms)
    lines = []
    for j in range(maxj, -1, -1):
        row = []
        for i in range(maxi + 1):
            v = f.terms.get((i, j))
            if v is None:
                row.append(".")
            elif not fld.extended:
                row.append("+" if v.angular > 0 else "-")
            else:
                row.append(format_value(v))
        lines.append(" ".join(row))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# the multivalued product


def product_membership(f: HPoly, g: HPoly, h: HPoly, report: bool = False):
    """Is f in g*h?  Checks f_m in hypersum{g_n h_p : n+p=m} for every m.

    With report=True returns (ok, failures) where failures lists the
    offending exponents with the sum they had to hit.
    """
    if not (f.field == g.field == h.field):
        raise MathError("field mismatch", kind="field-mismatch")
    if not (f.nvars == g.nvars == h.nvars):
        raise MathError("variable count mismatch", kind="bad-value")
    sums: dict[tuple[int, ...], list[HyperValue]] = {}
    for n, gv in g.terms.items():
        for p, hv in h.terms.items():
            m = tuple(a + b for a, b in zip(n, p))
            sums.setdefault(m, []).append(hyper_mul(gv, hv))
    failures = []
    for m in set(sums) | set(f.terms):
        sub = iterated_hypersum(f.field, sums.get(m, ()))
        if not subset_contains(sub, f.coeff(m)):
            failures.append((m, sub))
            if not report:
                return False
    failures.sort(key=lambda t: t[0])
    if report:
        return (not failures, failures)
    return not failures


def quotient_support(f: HPoly, l: HPoly) -> list[tuple[int, ...]]:
    """Lattice points of Newt(f) minus Newt(l) (Minkowski difference).

    Any g with f in g*l has supp(g) inside this set: the product's Newton
    polytope is exactly Newt(g) + Newt(l) because coefficients at vertices
    of the sum come from single term pairs and units never multiply to zero.
    """
    from hypermult.geometry import minkowski_diff_lattice

    if f.is_zero or l.is_zero:
        return []
    pts = minkowski_diff_lattice(list(f.terms), list(l.terms))
    return [p for p in pts if all(c >= 0 for c in p)]


# ---------------------------------------------------------------------------
# exact symbolic polynomials (big integers / rationals)


class IntPoly:
    """Polynomial in named symbols with exact int or Fraction coefficients."""

    __slots__ = ("symbols", "terms")

    def __init__(self, symbols: Sequence[str], terms: Mapping[tuple[int, ...], Union[int, Fraction]]):
        self.symbols = tuple(symbols)
        clean = {}
        for m, c in terms.items():
            if c == 0:
                continue
            m = tuple(m)
            if len(m) != len(self.symbols):
                raise MathError("exponent length mismatch", kind="bad-value")
            clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c, symbols: Sequence[str] = ()) -> "IntPoly":
        return cls(symbols, {tuple(0 for _ in symbols): c})

    @classmethod
    def sym(cls, name: str) -> "IntPoly":
        return cls((name,), {(1,): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_constant(self):
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if all(e == 0 for e in m):
                return c
        raise MathError("not a constant", kind="bad-value")

    def is_monomial(self) -> bool:
        return len(self.terms) <= 1

    # -- symbol alignment ---------------------------------------------------

    def with_symbols(self, symbols: Sequence[str]) -> "IntPoly":
        symbols = tuple(symbols)
        if symbols == self.symbols:
            return self
        pos = {s: i for i, s in enumerate(symbols)}
        for s in self.symbols:
            if s not in pos:
                raise MathError(f"cannot drop symbol {s}", kind="bad-value")
        out: dict[tuple[int, ...], Union[int, Fraction]] = {}
        for m, c in self.terms.items():
            key = [0] * len(symbols)
            for s, e in zip(self.symbols, m):
                key[pos[s]] = e
            out[tuple(key)] = c
        return IntPoly(symbols, out)

    def _aligned(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        if self.symbols == other.symbols:
            return self, other
        merged = tuple(dict.fromkeys(self.symbols + other.symbols))
        return self.with_symbols(merged), other.with_symbols(merged)

    @staticmethod
    def _coerce(x) -> "IntPoly":
        if isinstance(x, IntPoly):
            return x
        return IntPoly.const(x)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "IntPoly":
        a, b = self._aligned(self._coerce(other))
        out = dict(a.terms)
        for m, c in b.terms.items():
            out[m] = out.get(m, 0) + c
        return IntPoly(a.symbols, out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.symbols, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "IntPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        a, b = self._aligned(self._coerce(other))
        out: dict[tuple[int, ...], Union[int, Fraction]] = {}
        for m, c in a.terms.items():
            for n, d in b.terms.items():
                k = tuple(i + j for i, j in zip(m, n))
                out[k] = out.get(k, 0) + c * d
        return IntPoly(a.symbols, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise MathError("negative power", kind="bad-value")
        out = IntPoly.const(1, self.symbols)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            try:
                return self.as_constant() == other
            except MathError:
                return False
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        return hash((self.symbols, tuple(sorted(self.terms.items()))))

    # -- structure ----------------------------------------------------------

    def degree_in(self, name: str) -> int:
        if name not in self.symbols or not self.terms:
            return 0
        i = self.symbols.index(name)
        return max(m[i] for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def substitute(self, values: Mapping[str, Union[int, Fraction, "IntPoly"]]) -> "IntPoly":
        """Replace symbols by constants or polynomials; others untouched."""
        out = IntPoly.const(0)
        for m, c in self.terms.items():
            term = IntPoly.const(c)
            for s, e in zip(self.symbols, m):
                if e == 0:
                    continue
                val = values.get(s)
                if val is None:
                    val = IntPoly.sym(s)
                term = term * (self._coerce(val) ** e)
            out = out + term
        return out

    def split_by(self, names: Sequence[str]) -> dict[tuple[int, ...], "IntPoly"]:
        """Group terms by their exponents in `names`; values are coefficient
        polynomials in the remaining symbols."""
        names = tuple(names)
        idx = [self.symbols.index(n) for n in names]
        rest = [i for i in range(len(self.symbols)) if i not in idx]
        rest_syms = tuple(self.symbols[i] for i in rest)
        groups: dict[tuple[int, ...], dict] = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idx)
            sub = tuple(m[i] for i in rest)
            groups.setdefault(key, {})[sub] = c
        return {k: IntPoly(rest_syms, t) for k, t in groups.items()}

    # -- exact division and content ----------------------------------------

    def _lead(self) -> tuple[tuple[int, ...], Union[int, Fraction]]:
        m = max(self.terms, key=lambda m: (sum(m), m))
        return m, self.terms[m]

    def exact_divide(self, q: "IntPoly") -> "IntPoly":
        """p / q when q divides p exactly; MathError('non-exact') otherwise."""
        a, b = self._aligned(self._coerce(q))
        if b.is_zero:
            raise MathError("division by zero polynomial", kind="non-exact")
        rem = a
        quo: dict[tuple[int, ...], Union[int, Fraction]] = {}
        lm, lc = b._lead()
        while not rem.is_zero:
            rm, rc = rem._lead()
            diff = tuple(i - j for i, j in zip(rm, lm))
            if any(d < 0 for d in diff):
                raise MathError("non-exact division", kind="non-exact")
            if isinstance(rc, int) and isinstance(lc, int):
                if rc % lc:
                    raise MathError("non-exact division", kind="non-exact")
                coeff = rc // lc
            else:
                coeff = Fraction(rc) / Fraction(lc)
            quo[diff] = coeff
            rem = rem - IntPoly(a.symbols, {diff: coeff}) * b
        return IntPoly(a.symbols, quo)

    def content_strip(self) -> tuple["IntPoly", "IntPoly"]:
        """(integer-times-monomial content, primitive part)."""
        if self.is_zero:
            return IntPoly.const(0, self.symbols), self
        g = 0
        for c in self.terms.values():
            if not isinstance(c, int):
                raise MathError("content_strip needs integer coefficients", kind="bad-value")
            g = gcd(g, abs(c))
        mono = tuple(min(m[i] for m in self.terms) for i in range(len(self.symbols)))
        content = IntPoly(self.symbols, {mono: g})
        prim = IntPoly(
            self.symbols,
            {tuple(i - j for i, j in zip(m, mono)): c // g for m, c in self.terms.items()},
        )
        return content, prim

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            val = Fraction(c)
            for s, e in zip(self.symbols, m):
                if e:
                    val *= Fraction(point[s]) ** e
            total += val
        return total

    def signs_poly(self) -> HPoly:
        """Coefficient-wise sign image as an HPoly over S (symbols = vars)."""
        if not self.symbols:
            return HPoly("S", 1, {(0,): unit("S", 1 if self.as_constant() > 0 else -1, 0)}
                         if not self.is_zero else {})
        terms = {}
        for m, c in self.terms.items():
            terms[m] = unit("S", 1 if c > 0 else -1, 0)
        return HPoly("S", len(self.symbols), terms, self.symbols)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (-sum(m), m)):
            c = self.terms[m]
            mono = format_monomial(m, self.symbols)
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            if not body:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({self})"


# exact rationals use the same implementation; the name records intent
RatPoly = IntPoly


def rat_poly(text: str, vars: Sequence[str] | None = None) -> IntPoly:
    """Parse a rational-coefficient polynomial like "1 + 1/2x - 3/10y"."""
    terms = _split_terms(text.strip())
    parsed = []
    seen: list[str] = []
    for sign, body in terms:
        lit, powers = _parse_term(body)
        if lit is not None and lit.startswith("t^"):
            raise ParseError("rational polynomials have no t-coefficients")
        coeff = parse_rational(lit) if lit is not None else Fraction(1)
        for n in powers:
            if n not in seen:
                seen.append(n)
        parsed.append((sign * coeff, powers))
    if vars is None:
        ordered = [n for n in VAR_ORDER if n in seen]
        ordered += [n for n in seen if n not in VAR_ORDER]
        names = tuple(ordered) if ordered else ("x",)
    else:
        names = tuple(vars)
    index = {n: i for i, n in enumerate(names)}
    out: dict[tuple[int, ...], Union[int, Fraction]] = {}
    for coeff, powers in parsed:
        m = [0] * len(names)
        for n, e in powers.items():
            if n not in index:
                raise ParseError(f"unknown variable {n!r}")
            m[index[n]] = e
        key = tuple(m)
        out[key] = out.get(key, 0) + coeff
    norm = {}
    for m, c in out.items():
        if c == 0:
            continue
        norm[m] = int(c) if Fraction(c).denominator == 1 else Fraction(c)
    return IntPoly(names, norm)
