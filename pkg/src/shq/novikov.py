"""Exact arithmetic in a one-variable Novikov field.

Quantum and symplectic cohomology of a line bundle over projective
space only ever involve finitely many powers of the quantum variable t,
so the coefficient ring is modelled exactly: scalars live in the field
of fractions of Laurent polynomials in t over a ground field (the
rationals, or the field with two elements).

Every scalar is kept in a unique canonical form.  The numerator is a
Laurent polynomial; the denominator is an ordinary polynomial with
nonzero constant term (t is a unit, so all its powers can be pushed
into the numerator), coprime to the polynomial part of the numerator,
and monic.  Zero is represented as 0/1.  Equality of values is then
literal equality of representations.

Grading: t carries cohomological degree 2N, where N is the minimal
Chern number of the total space.  A GradingContext records N so that
monomials can report their degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union


class GF2Element:
    """An element of the field with two elements."""

    __slots__ = ("v",)

    def __init__(self, v: int):
        self.v = int(v) & 1

    def _coerce(self, other) -> "GF2Element":
        if isinstance(other, GF2Element):
            return other
        if isinstance(other, int):
            return GF2Element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GF2Element(self.v ^ other.v)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GF2Element(self.v & other.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.v:
            raise ZeroDivisionError("division by zero in GF(2)")
        return GF2Element(self.v)

    def __neg__(self):
        return self

    def __pow__(self, k: int):
        if k < 0 and not self.v:
            raise ZeroDivisionError("division by zero in GF(2)")
        return GF2Element(self.v if k != 0 else 1)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, GF2Element):
            return self.v == other.v
        if isinstance(other, int):
            return self.v == other & 1
        return NotImplemented

    def __hash__(self):
        return hash(("GF2", self.v))

    def __repr__(self):
        return str(self.v)


class CoefficientField:
    """Ground field of the Novikov field: exact rationals or GF(2)."""

    def __init__(self, kind: str):
        if kind not in ("Q", "GF2"):
            raise ValueError(f"unknown coefficient field {kind!r}")
        self.kind = kind

    def of(self, x) -> Union[Fraction, GF2Element]:
        """Coerce an int, Fraction, or field element into this field."""
        if self.kind == "Q":
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
        else:
            if isinstance(x, GF2Element):
                return x
            if isinstance(x, int):
                return GF2Element(x)
            if isinstance(x, Fraction):
                if x.denominator % 2 == 0:
                    raise ZeroDivisionError("denominator not invertible in GF(2)")
                return GF2Element(x.numerator)
        raise TypeError(f"cannot coerce {x!r} into {self}")

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else GF2Element(0)

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else GF2Element(1)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else 2

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"CoefficientField({self.kind!r})"


QQ = CoefficientField("Q")
F2 = CoefficientField("GF2")

FIELDS = {"q": QQ, "gf2": F2}


@dataclass(frozen=True)
class GradingContext:
    """Degree bookkeeping: the quantum variable t has degree 2N."""

    N: int
    convention: str = "cohomological"


# Polynomials and Laurent polynomials are dicts {exponent: coefficient}
# with no zero values stored.  Plain polynomials have exponents >= 0.


def _trim(d: dict) -> dict:
    return {e: c for e, c in d.items() if c}


def _shift(d: dict, k: int) -> dict:
    if k == 0:
        return dict(d)
    return {e + k: c for e, c in d.items()}


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        s = c if s is None else s + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            s = ca * cb if s is None else s + ca * cb
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _pscale(a: dict, c) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _pdivmod(a: dict, b: dict) -> tuple[dict, dict]:
    """Polynomial division with remainder; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = max(b)
    lb = b[db]
    q: dict = {}
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        f = r[dr] / lb
        q[dr - db] = f
        r = _padd(r, _pneg(_pscale(_shift(b, dr - db), f)))
    return q, r


def _pdiv_exact(a: dict, b: dict) -> dict:
    q, r = _pdivmod(a, b)
    assert not r, "inexact polynomial division"
    return q


def _monic(a: dict) -> dict:
    if not a:
        return a
    lead = a[max(a)]
    if lead == 1:
        return a
    return {e: c / lead for e, c in a.items()}


def _pgcd(a: dict, b: dict) -> dict:
    """Monic gcd of two polynomials (Euclid); gcd(0, 0) is 0."""
    a, b = dict(a), dict(b)
    while b:
        a, b = b, _monic(_pdivmod(a, b)[1])
    return _monic(a)


def _canonical(field: CoefficientField, num: dict, den: dict) -> tuple[dict, dict]:
    """Reduce num/den to the unique canonical representation."""
    num = _trim(num)
    den = _trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator in Novikov scalar")
    one = field.one
    if not num:
        return {}, {0: one}
    dv = min(den)
    if dv:
        # t is a unit: move its powers out of the denominator
        den = _shift(den, -dv)
    v = min(num) - dv
    poly = _shift(num, -min(num))
    if len(den) == 1:
        # denominator is a unit: absorb it entirely
        c = den[0]
        if c != 1:
            poly = {e: x / c for e, x in poly.items()}
        return _shift(poly, v), {0: one}
    g = _pgcd(poly, den)
    if max(g) > 0:
        poly = _pdiv_exact(poly, g)
        den = _pdiv_exact(den, g)
    lead = den[max(den)]
    if lead != 1:
        den = {e: c / lead for e, c in den.items()}
        poly = {e: c / lead for e, c in poly.items()}
    return _shift(poly, v), den


class Novikov:
    """A scalar in the Novikov field, always in canonical form.

    num is a Laurent polynomial, den a monic polynomial with nonzero
    constant term, coprime to the polynomial part of num.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CoefficientField, num: dict, den: Optional[dict] = None):
        if den is None:
            den = {0: field.one}
        num, den = _canonical(field, num, den)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Novikov scalars are immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: CoefficientField) -> "Novikov":
        return cls(field, {})

    @classmethod
    def one(cls, field: CoefficientField) -> "Novikov":
        return cls(field, {0: field.one})

    @classmethod
    def constant(cls, field: CoefficientField, value) -> "Novikov":
        return cls(field, {0: field.of(value)})

    @classmethod
    def monomial(cls, field: CoefficientField, coeff, power: int) -> "Novikov":
        return cls(field, {int(power): field.of(coeff)})

    @classmethod
    def t(cls, field: CoefficientField, power: int = 1) -> "Novikov":
        return cls.monomial(field, 1, power)

    # -- structure ------------------------------------------------------

    @property
    def is_laurent(self) -> bool:
        """True when the denominator is trivial."""
        return len(self.den) == 1 and 0 in self.den

    def monomial_parts(self) -> Optional[tuple]:
        """(coefficient, t-power) when the value is c*t^d, else None."""
        if len(self.num) != 1 or not self.is_laurent:
            return None
        ((e, c),) = self.num.items()
        return c, e

    def monomial_degree(self, ctx: GradingContext) -> Optional[int]:
        """Cohomological degree 2*N*d of a monomial c*t^d; None otherwise."""
        parts = self.monomial_parts()
        if parts is None:
            return None
        return 2 * ctx.N * parts[1]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> Optional["Novikov"]:
        if isinstance(other, Novikov):
            if other.field != self.field:
                raise ValueError("coefficient field mismatch")
            return other
        if isinstance(other, (int, Fraction, GF2Element)):
            return Novikov(self.field, {0: self.field.of(other)})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_laurent and other.is_laurent:
            return Novikov(self.field, _padd(self.num, other.num))
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return Novikov(self.field, num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(Novikov)
        object.__setattr__(out, "field", self.field)
        object.__setattr__(out, "num", _pneg(self.num))
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_laurent and other.is_laurent:
            return Novikov(self.field, _pmul(self.num, other.num))
        return Novikov(
            self.field, _pmul(self.num, other.num), _pmul(self.den, other.den)
        )

    __rmul__ = __mul__

    def inverse(self) -> "Novikov":
        if not self.num:
            raise ZeroDivisionError("inverting zero Novikov scalar")
        v = min(self.num)
        return Novikov(self.field, _shift(self.den, -v), _shift(self.num, -v))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        out = Novikov.one(self.field)
        for _ in range(abs(k)):
            out = out * base
        return out

    # -- comparisons ----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GF2Element)):
            try:
                other = Novikov(self.field, {0: self.field.of(other)})
            except (TypeError, ZeroDivisionError):
                return NotImplemented
        if not isinstance(other, Novikov):
            return NotImplemented
        return (
            self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash(
            (
                self.field.kind,
                frozenset(self.num.items()),
                frozenset(self.den.items()),
            )
        )

    # -- rendering ------------------------------------------------------

    def __str__(self):
        num = _laurent_str(self.num)
        if self.is_laurent:
            return num
        return f"({num})/({_laurent_str(self.den)})"

    def __repr__(self):
        return f"Novikov[{self.field.kind}]({self})"


def _coeff_str(c) -> str:
    return str(c)


def _term_str(c, e: int) -> str:
    if e == 0:
        return _coeff_str(c)
    t = "t" if e == 1 else f"t^{e}"
    if c == 1:
        return t
    if isinstance(c, Fraction) and c == -1:
        return f"-{t}"
    return f"{_coeff_str(c)}*{t}"


def _laurent_str(d: dict) -> str:
    """Render with exponents ascending, e.g. '-1 + 2*t + t^3'."""
    if not d:
        return "0"
    parts = []
    for e in sorted(d):
        c = d[e]
        if parts and isinstance(c, Fraction) and c < 0:
            parts.append(f" - {_term_str(-c, e)}")
        elif parts:
            parts.append(f" + {_term_str(c, e)}")
        else:
            parts.append(_term_str(c, e))
    return "".join(parts)
