"""Exact scalar rings: rationals, a formal quadratic extension, and polynomials.

Rationals are :class:`fractions.Fraction`.  The other two rings are small
immutable classes that interoperate with ``int`` and ``Fraction`` through the
usual operator protocol, so generic code (matrices, evaluators) can be written
once with ``+``, ``-``, ``*`` and the helpers at the bottom of this module.
Generic code never uses ``/``; division goes through :func:`invert`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import IncompatibleExtensionError, NotInvertibleError, ZeroDenominatorError

Scalar = Union[int, Fraction]


def normalize_rational(num: int, den: int) -> Fraction:
    """Reduced fraction with a positive denominator."""
    if den == 0:
        raise ZeroDenominatorError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not ring elements")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; no floats, no whitespace inside the number."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    return normalize_rational(n, d)


def format_rational(value: Scalar) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_digits(n: int) -> int:
    """Number of decimal digits of ``|n|`` without building its string."""
    n = abs(n)
    if n < 10:
        return 1
    d = int((n.bit_length() - 1) * math.log10(2))
    # d is within one of the answer; fix it up with exact comparisons
    while 10 ** d > n:
        d -= 1
    while 10 ** (d + 1) <= n:
        d += 1
    return d + 1


class QuadExt:
    """The element ``a + b*t`` of Q[t]/(t^2 - delta).

    The ring is formal: no square root is ever taken, so it is exact for
    negative and perfect-square ``delta`` alike.  Only ``delta != 0`` is
    required, which makes ``t`` a unit with inverse ``t/delta``.
    """

    __slots__ = ("a", "b", "delta")

    def __init__(self, a: Scalar, b: Scalar, delta: Scalar):
        delta = as_rational(delta)
        if delta == 0:
            raise ValueError("quadratic extension needs a nonzero delta")
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))
        object.__setattr__(self, "delta", delta)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @classmethod
    def gen(cls, delta: Scalar) -> "QuadExt":
        """The adjoined element ``t`` itself."""
        return cls(0, 1, delta)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.delta != self.delta:
                raise IncompatibleExtensionError(
                    f"cannot combine elements with delta {self.delta} and {other.delta}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt(other, 0, self.delta)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a + other.a, self.b + other.b, self.delta)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.delta)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadExt(self.a - other.a, self.b - other.b, self.delta)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return QuadExt(a1 * a2 + b1 * b2 * self.delta, a1 * b2 + a2 * b1, self.delta)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.delta == other.delta and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.delta))

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.delta)

    def norm(self) -> Fraction:
        """``a^2 - b^2*delta``, the product with the conjugate."""
        return self.a * self.a - self.b * self.b * self.delta

    def is_unit(self) -> bool:
        return self.norm() != 0

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise NotInvertibleError(self.ring_name(), value=self)
        c = self.conjugate()
        return QuadExt(c.a / n, c.b / n, self.delta)

    def ring_name(self) -> str:
        return f"QuadExt(delta={format_rational(self.delta)})"

    def __repr__(self):
        return f"QuadExt({format_rational(self.a)}, {format_rational(self.b)}, delta={format_rational(self.delta)})"

    def __str__(self):
        return f"{format_rational(self.a)} + {format_rational(self.b)}*t"


class Poly:
    """Dense univariate polynomial over Q, coefficients lowest degree first.

    Trailing zeros are stripped on construction, so the zero polynomial has an
    empty coefficient tuple and equality is tuple equality.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, q = self.coeffs, other.coeffs
        if len(p) < len(q):
            p, q = q, p
        return Poly([c + (q[i] if i < len(q) else 0) for i, c in enumerate(p)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate at ``x`` by Horner's rule."""
        acc = zero_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1

    def inverse(self) -> "Poly":
        if not self.is_unit():
            raise NotInvertibleError("polynomial", value=self)
        return Poly((1 / self.coeffs[0],))

    def ring_name(self) -> str:
        return "polynomial"

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# -- generic helpers over int / Fraction / QuadExt / Poly -------------------

def ring_name(x) -> str:
    if isinstance(x, (QuadExt, Poly)):
        return x.ring_name()
    return "rational"


def zero_like(x):
    if isinstance(x, QuadExt):
        return QuadExt(0, 0, x.delta)
    if isinstance(x, Poly):
        return Poly()
    return Fraction(0)


def one_like(x):
    if isinstance(x, QuadExt):
        return QuadExt(1, 0, x.delta)
    if isinstance(x, Poly):
        return Poly((1,))
    return Fraction(1)


def is_zero(x) -> bool:
    return x == 0


def is_unit(x) -> bool:
    if isinstance(x, (QuadExt, Poly)):
        return x.is_unit()
    return x != 0


def invert(x, what: str = "element"):
    """Multiplicative inverse; :class:`NotInvertibleError` for non-units."""
    if isinstance(x, (QuadExt, Poly)):
        if not x.is_unit():
            raise NotInvertibleError(x.ring_name(), what, x)
        return x.inverse()
    x = as_rational(x)
    if x == 0:
        raise NotInvertibleError("rational", what, format_rational(x))
    return 1 / x


def _quadext_power(x: QuadExt, n: int) -> QuadExt:
    """``x**n`` for ``n >= 0`` over the integers, dividing once at the end.

    With ``delta = p/q`` put ``s = q*t`` so that ``s^2 = p*q`` is an integer,
    and write ``x = (A + B*s) / D``.
    """
    p, q = x.delta.numerator, x.delta.denominator
    b_s = x.b / q
    d = math.lcm(x.a.denominator, b_s.denominator)
    a = x.a.numerator * (d // x.a.denominator)
    b = b_s.numerator * (d // b_s.denominator)
    s2 = p * q
    ra, rb = 1, 0
    k = n
    while k:
        if k & 1:
            ra, rb = ra * a + rb * b * s2, ra * b + rb * a
        k >>= 1
        if k:
            a, b = a * a + b * b * s2, 2 * a * b
    dn = d ** n
    return QuadExt(Fraction(ra, dn), Fraction(rb * q, dn), x.delta)


def ring_power(x, n: int):
    """``x**n`` by binary exponentiation; negative ``n`` inverts first."""
    if n < 0:
        x = invert(x)
        n = -n
    if isinstance(x, Fraction):
        return x ** n
    if isinstance(x, QuadExt):
        return _quadext_power(x, n)
    result = one_like(x)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


# -- serialization ----------------------------------------------------------

def to_json(x):
    """Rational -> "p/q", Poly -> list of those, QuadExt -> {"a", "b", "delta"}."""
    if isinstance(x, QuadExt):
        return {"a": format_rational(x.a), "b": format_rational(x.b),
                "delta": format_rational(x.delta)}
    if isinstance(x, Poly):
        return [format_rational(c) for c in x.coeffs]
    return format_rational(x)


def from_json(obj):
    if isinstance(obj, dict):
        return QuadExt(parse_rational(obj["a"]), parse_rational(obj["b"]),
                       parse_rational(obj["delta"]))
    if isinstance(obj, (list, tuple)):
        return Poly(parse_rational(str(c)) for c in obj)
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    return parse_rational(obj)

