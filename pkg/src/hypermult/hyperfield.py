"""Hyperfields with multivalued addition: signs, Krasner, and tropical extensions.

Supported fields:

* ``K``  -- Krasner hyperfield {0, 1} with 1 + 1 = {0, 1}.
* ``S``  -- sign hyperfield {0, +1, -1} with 1 + (-1) = {0, +1, -1}.
* ``T``  -- tropical numbers: extension of K by rational exponents
  (min-plus; a value is t^gamma, smaller exponent dominates a sum).
* ``TR`` -- signed tropical numbers: extension of S by rational exponents
  (a value is +-t^gamma).

Nonzero elements of an extension are written h*t^gamma with h a nonzero
element of the base field ("angular part") and gamma in Q (the
"exponent"; its negative is sometimes thought of as a valuation, here we
compare exponents directly: smaller exponent = larger element).  The sum
of x = h1 t^g1 and y = h2 t^g2 is:

* {x}                                if g1 < g2,
* {y}                                if g2 < g1,
* (h1 + h2) t^g1                     if g1 = g2 and 0 not in h1 + h2,
* (h1 + h2 minus 0) t^g1, together with every value of exponent
  strictly greater than g1 and Zero    if g1 = g2 and 0 in h1 + h2.

The last case is an infinite set; HyperSubset represents it in the
normal form LevelTail(level, angulars): the listed angular parts at
exponent `level`, plus all values of strictly greater exponent, plus
Zero.  Every other subset arising from sums is finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from hypermult.errors import MathError, ParseError

Rat = Union[int, Fraction]


@dataclass(frozen=True)
class Hyperfield:
    id: str
    base: str  # "K" or "S": angular alphabet
    extended: bool  # carries rational exponents

    def angulars(self) -> tuple[int, ...]:
        """Nonzero angular parts of the base field."""
        return (1,) if self.base == "K" else (1, -1)

    def __repr__(self) -> str:
        return f"Hyperfield({self.id})"


FIELDS: dict[str, Hyperfield] = {
    "K": Hyperfield("K", "K", False),
    "S": Hyperfield("S", "S", False),
    "T": Hyperfield("T", "K", True),
    "TR": Hyperfield("TR", "S", True),
}

BASE_OF = {"T": "K", "TR": "S", "K": "K", "S": "S"}
EXTENSION_OF = {"K": "T", "S": "TR"}


def get_field(field: Union[str, Hyperfield]) -> Hyperfield:
    if isinstance(field, Hyperfield):
        return field
    try:
        return FIELDS[field]
    except KeyError:
        raise MathError(f"unknown hyperfield {field!r}", kind="bad-field")


@dataclass(frozen=True, order=True)
class HyperValue:
    """An element: Zero (angular == 0) or a unit h*t^exp.

    For base fields (K, S) exp is always Fraction(0) and simply ignored
    by printing; using 0 rather than None keeps ordering total.
    """

    field: str
    angular: int
    exp: Fraction

    @property
    def is_zero(self) -> bool:
        return self.angular == 0

    def __repr__(self) -> str:
        return f"<{format_value(self)}:{self.field}>"


def zero(field: Union[str, Hyperfield]) -> HyperValue:
    return HyperValue(get_field(field).id, 0, Fraction(0))


def one(field: Union[str, Hyperfield]) -> HyperValue:
    return HyperValue(get_field(field).id, 1, Fraction(0))


def unit(field: Union[str, Hyperfield], angular: int, exp: Rat = 0) -> HyperValue:
    fld = get_field(field)
    if angular not in fld.angulars():
        raise MathError(f"{angular} is not an angular part of {fld.id}", kind="bad-value")
    e = Fraction(exp)
    if e != 0 and not fld.extended:
        raise MathError(f"{fld.id} has no exponents", kind="bad-value")
    return HyperValue(fld.id, angular, e)


# ---------------------------------------------------------------------------
# base-field arithmetic on angular parts (ints: 0, 1, -1)


def base_mul(base: str, a: int, b: int) -> int:
    return a * b  # correct for both K ({0,1}) and S ({0,+-1})


def base_neg(base: str, a: int) -> int:
    return a if base == "K" else -a


def base_sum_pair(base: str, a: int, b: int) -> frozenset[int]:
    if a == 0:
        return frozenset((b,))
    if b == 0:
        return frozenset((a,))
    if base == "K":
        return frozenset((0, 1))  # 1 + 1
    # sign hyperfield
    if a == b:
        return frozenset((a,))
    return frozenset((0, 1, -1))


def base_sum_sets(base: str, xs: frozenset[int], ys: frozenset[int]) -> frozenset[int]:
    out: set[int] = set()
    for a in xs:
        for b in ys:
            out |= base_sum_pair(base, a, b)
    return frozenset(out)


def base_sum_iter(base: str, values: Iterable[int]) -> frozenset[int]:
    acc = frozenset((0,))
    for v in values:
        acc = base_sum_sets(base, acc, frozenset((v,)))
    return acc


# ---------------------------------------------------------------------------
# subsets


@dataclass(frozen=True)
class HyperSubset:
    """Normal form: either a finite set, or a level set with tail.

    finite is None  <=>  this is LevelTail(level, angulars):
    {a t^level : a in angulars} + {all values with exp > level} + {Zero}.
    """

    field: str
    finite: frozenset[HyperValue] | None
    level: Fraction | None = None
    angulars: frozenset[int] | None = None

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    def __repr__(self) -> str:
        return format_subset(self)


def finite_subset(field: Union[str, Hyperfield], values: Iterable[HyperValue]) -> HyperSubset:
    fld = get_field(field)
    vals = frozenset(values)
    if not vals:
        raise MathError("hyperfield sums are never empty", kind="bad-value")
    return HyperSubset(fld.id, vals)


def level_tail(field: Union[str, Hyperfield], level: Rat, angulars: Iterable[int]) -> HyperSubset:
    fld = get_field(field)
    if not fld.extended:
        raise MathError(f"{fld.id} has no level sets", kind="bad-value")
    angs = frozenset(angulars) - {0}
    if not angs:
        raise MathError("level set needs a nonzero angular part", kind="bad-value")
    return HyperSubset(fld.id, None, Fraction(level), angs)


def subset_contains(sub: HyperSubset, v: HyperValue) -> bool:
    if sub.field != v.field:
        raise MathError("field mismatch", kind="field-mismatch")
    if sub.finite is not None:
        return v in sub.finite
    if v.is_zero:
        return True
    if v.exp > sub.level:
        return True
    return v.exp == sub.level and v.angular in sub.angulars


def subset_equal(a: HyperSubset, b: HyperSubset) -> bool:
    return a == b


def _union(a: HyperSubset, b: HyperSubset) -> HyperSubset:
    """Union, defined on the shapes that sums actually produce."""
    if a.finite is not None and b.finite is not None:
        return HyperSubset(a.field, a.finite | b.finite)
    if a.finite is not None:
        a, b = b, a
    # a is a LevelTail
    if b.finite is not None:
        extra: set[int] = set()
        for v in b.finite:
            if subset_contains(a, v):
                continue
            if v.exp == a.level:
                extra.add(v.angular)
            else:
                # a finite element strictly below the tail level: sums
                # never produce this mixed shape (the minimum-exponent
                # analysis below shows why); guard loudly.
                raise MathError("union outside normal form", kind="internal")
        return HyperSubset(a.field, None, a.level, a.angulars | frozenset(extra))
    if a.level == b.level:
        return HyperSubset(a.field, None, a.level, a.angulars | b.angulars)
    lo, hi = (a, b) if a.level < b.level else (b, a)
    # everything in hi sits inside lo's tail except hi's level angulars
    # when they coincide with lo's level -- handled above; here levels differ
    return lo


# ---------------------------------------------------------------------------
# value arithmetic


def hyper_mul(x: HyperValue, y: HyperValue) -> HyperValue:
    if x.field != y.field:
        raise MathError("field mismatch", kind="field-mismatch")
    fld = FIELDS[x.field]
    if x.is_zero or y.is_zero:
        return zero(fld)
    return HyperValue(fld.id, base_mul(fld.base, x.angular, y.angular), x.exp + y.exp)


def hyper_neg(x: HyperValue) -> HyperValue:
    fld = FIELDS[x.field]
    return HyperValue(fld.id, base_neg(fld.base, x.angular), x.exp)


def hyper_inv(x: HyperValue) -> HyperValue:
    if x.is_zero:
        raise MathError("zero is not invertible", kind="bad-value")
    return HyperValue(x.field, x.angular, -x.exp)  # angulars are self-inverse


def hyper_sum(x: HyperValue, y: HyperValue) -> HyperSubset:
    """Binary hypersum of two values."""
    if x.field != y.field:
        raise MathError("field mismatch", kind="field-mismatch")
    return iterated_hypersum(x.field, (x, y))


def iterated_hypersum(field: Union[str, Hyperfield], values: Iterable[HyperValue]) -> HyperSubset:
    """Hypersum of a finite multiset of values, in closed form.

    Only the minimum-exponent terms matter: let gamma be the least
    exponent among nonzero inputs and A the base-field sum of the
    angular parts at that exponent.  If 0 not in A the result is the
    finite set A t^gamma; if 0 in A ties can be broken at any greater
    exponent, giving LevelTail(gamma, A - {0}).
    """
    fld = get_field(field)
    vals = [v for v in values]
    for v in vals:
        if v.field != fld.id:
            raise MathError("field mismatch", kind="field-mismatch")
    nonzero = [v for v in vals if not v.is_zero]
    if not nonzero:
        return finite_subset(fld, (zero(fld),))
    gamma = min(v.exp for v in nonzero)
    at_level = [v.angular for v in nonzero if v.exp == gamma]
    A = base_sum_iter(fld.base, at_level)
    if 0 not in A:
        return finite_subset(fld, (HyperValue(fld.id, a, gamma) for a in A))
    if not fld.extended:
        # base fields: the finite set A itself (possibly containing zero)
        return finite_subset(
            fld, (HyperValue(fld.id, a, Fraction(0)) for a in A)
        )
    return level_tail(fld, gamma, A - {0})


def hypersum_subset_value(sub: HyperSubset, v: HyperValue) -> HyperSubset:
    """Oracle route: sum a normal-form subset with one more value.

    Used by tests to check the closed form of iterated_hypersum against
    pairwise folding; the fold stays within normal form.
    """
    fld = FIELDS[sub.field]
    if v.is_zero:
        return sub
    if sub.finite is not None:
        acc: HyperSubset | None = None
        for el in sub.finite:
            piece = iterated_hypersum(fld, (el, v))
            acc = piece if acc is None else _union(acc, piece)
        assert acc is not None
        return acc
    # LevelTail(gamma, A) + unit of exponent delta
    gamma, A = sub.level, sub.angulars
    assert gamma is not None and A is not None
    if v.exp < gamma:
        return finite_subset(fld, (v,))
    if v.exp > gamma:
        return sub
    # tail elements and Zero all have exponent > gamma = exp(v), so each
    # contributes {v}; the level elements contribute their pair sums.
    out: HyperSubset = finite_subset(fld, (v,))
    for a in A:
        out = _union(out, iterated_hypersum(fld, (HyperValue(fld.id, a, gamma), v)))
    return out


def hypersum_fold(field: Union[str, Hyperfield], values: Iterable[HyperValue]) -> HyperSubset:
    """Left fold of binary sums over subsets (test oracle)."""
    fld = get_field(field)
    acc = finite_subset(fld, (zero(fld),))
    for v in values:
        acc = hypersum_subset_value(acc, v)
    return acc


# ---------------------------------------------------------------------------
# morphisms


def sign_of_rational(q: Rat) -> HyperValue:
    q = Fraction(q)
    return HyperValue("S", 0 if q == 0 else (1 if q > 0 else -1), Fraction(0))


MORPHISMS = {
    # name: (domain ids, describes)
    "sgn": (("Q",), "rationals -> S, the sign map"),
    "nu": (("TR", "T"), "forget angular parts: TR -> T (and T -> T)"),
    "ac": (("T", "TR"), "angular part at exponent-0 scale: T -> K, TR -> S"),
    "embed": (("K", "S"), "base field into its extension at exponent 0"),
    "nu0": (("K", "S"), "trivial valuation onto K"),
}


def apply_morphism(name: str, x: Union[HyperValue, Rat]) -> HyperValue:
    if name == "sgn":
        if isinstance(x, HyperValue):
            raise MathError("sgn applies to rationals", kind="bad-morphism")
        return sign_of_rational(x)
    if not isinstance(x, HyperValue):
        raise MathError(f"{name} applies to hyperfield values", kind="bad-morphism")
    fld = FIELDS[x.field]
    if name == "nu":
        if not fld.extended:
            raise MathError("nu applies to extension fields", kind="bad-morphism")
        return HyperValue("T", 0 if x.is_zero else 1, x.exp)
    if name == "ac":
        if not fld.extended:
            raise MathError("ac applies to extension fields", kind="bad-morphism")
        return HyperValue(fld.base, x.angular, Fraction(0))
    if name == "embed":
        if fld.extended:
            raise MathError("embed applies to base fields", kind="bad-morphism")
        return HyperValue(EXTENSION_OF[fld.id], x.angular, Fraction(0))
    if name == "nu0":
        if fld.extended:
            raise MathError("nu0 applies to base fields", kind="bad-morphism")
        return HyperValue("K", 0 if x.is_zero else 1, Fraction(0))
    raise MathError(f"unknown morphism {name!r}", kind="bad-morphism")


def morphism_image(name: str, sub: HyperSubset) -> HyperSubset:
    """Elementwise image of a subset under a morphism."""
    if sub.finite is not None:
        return finite_subset(
            apply_morphism(name, next(iter(sub.finite))).field,
            (apply_morphism(name, v) for v in sub.finite),
        )
    fld = FIELDS[sub.field]
    assert sub.level is not None and sub.angulars is not None
    if name == "nu":
        return level_tail("T", sub.level, (1,))
    if name == "ac":
        # level angulars, every angular from the tail, and Zero
        base = FIELDS[fld.base]
        vals = [zero(base)] + [HyperValue(base.id, a, Fraction(0)) for a in base.angulars()]
        return finite_subset(base, vals)
    raise MathError(f"morphism {name!r} undefined on level sets", kind="bad-morphism")


# ---------------------------------------------------------------------------
# text syntax


def _format_exp(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return f"t^{e}"
    return f"t^({e})"


def format_value(v: HyperValue) -> str:
    fld = FIELDS[v.field]
    if v.is_zero:
        return "0"
    if not fld.extended:
        if fld.base == "K":
            return "1"
        return "+" if v.angular > 0 else "-"
    body = _format_exp(v.exp)
    if fld.base == "K":
        return body
    return ("+" if v.angular > 0 else "-") + body


def format_subset(sub: HyperSubset) -> str:
    if sub.finite is not None:
        parts = sorted(format_value(v) for v in sub.finite)
        return "{" + ", ".join(parts) + "}"
    angs = sorted(sub.angulars or (), reverse=True)
    fld = FIELDS[sub.field]
    if fld.base == "K":
        at = [_format_exp(sub.level)]
    else:
        at = [("+" if a > 0 else "-") + _format_exp(sub.level) for a in angs]
    return "{" + ", ".join(at) + f", exp>{sub.level}, 0}}"


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {s!r}")


def parse_value(s: str, field: Union[str, Hyperfield]) -> HyperValue:
    """Parse one value: 0 | + | - | 1 | -1 | [+|-]t^e | [+|-]t^(p/q)."""
    fld = get_field(field)
    txt = s.strip()
    if txt == "0" and not fld.extended:
        return zero(fld)
    sign = 1
    if txt.startswith(("+", "-")):
        if txt[0] == "-":
            sign = -1
        txt = txt[1:].strip()
    if not fld.extended:
        if txt in ("", "1"):
            if sign == -1 and fld.base == "K":
                raise ParseError(f"{fld.id} has no negatives: {s!r}")
            return HyperValue(fld.id, sign if fld.base == "S" else 1, Fraction(0))
        raise ParseError(f"bad {fld.id} value {s!r}")
    if txt == "0" and sign == 1 and s.strip() == "0":
        return zero(fld)
    if txt.startswith("t^"):
        body = txt[2:]
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        e = parse_rational(body)
    else:
        # bare rational shorthand: the exponent itself ("+0", "-1/2", "2")
        e = parse_rational(txt) if txt else Fraction(0)
    if fld.base == "K" and sign == -1:
        raise ParseError(f"{fld.id} has no negatives: {s!r}")
    return HyperValue(fld.id, sign if fld.base == "S" else 1, e)
