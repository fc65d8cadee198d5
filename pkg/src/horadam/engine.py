"""Recurrence specs, 2x2 matrices over a ring, and the two baseline evaluators.

The sequence is ``R[n+1] = f*R[n] + g*R[n-1]`` with ``R[0] = h`` and
``R[1] = k``, extended to negative ``n`` by running the recurrence backwards
(which needs ``g`` to be a unit).

:func:`r_iter` walks the recurrence one step at a time and serves as the
ground-truth oracle.  :func:`r_fast` uses ``[R[n], R[n+1]] = [h, k] * B**n``
with binary exponentiation of the companion matrix ``B``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import DegenerateSpecError, NotInvertibleError
from .ring import (Poly, QuadExt, as_rational, format_rational, invert, is_unit,
                   one_like, ring_name, to_json, zero_like, from_json)


def _coerce_params(values):
    if any(isinstance(v, QuadExt) for v in values):
        raise TypeError("recurrence parameters must be rationals or polynomials")
    if any(isinstance(v, Poly) for v in values):
        return [v if isinstance(v, Poly) else Poly((as_rational(v),)) for v in values]
    return [as_rational(v) for v in values]


@dataclass(frozen=True)
class RecurrenceSpec:
    """Parameters ``(f, g, h, k)`` over a common ring (rational or polynomial)."""

    f: object
    g: object
    h: object
    k: object

    def __post_init__(self):
        f, g, h, k = _coerce_params([self.f, self.g, self.h, self.k])
        if f == 0:
            raise DegenerateSpecError("f must be nonzero")
        if g == 0:
            raise DegenerateSpecError("g must be nonzero")
        for name, v in zip("fghk", (f, g, h, k)):
            object.__setattr__(self, name, v)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.f, Poly) and not all(
            v.is_constant() for v in (self.f, self.g, self.h, self.k))

    @property
    def params(self):
        return self.f, self.g, self.h, self.k

    @property
    def delta(self):
        """Discriminant ``f^2 + 4g`` of ``t^2 - f*t - g``."""
        return self.f * self.f + 4 * self.g

    @property
    def q(self):
        """``g*h^2 - k^2 + f*h*k``; zero exactly when the sequence is geometric."""
        f, g, h, k = self.params
        return g * h * h - k * k + f * h * k

    def at(self, x) -> "RecurrenceSpec":
        """Evaluate polynomial parameters at the rational point ``x``."""
        if not isinstance(self.f, Poly):
            return self
        x = as_rational(x)
        return RecurrenceSpec(*(v(x) for v in self.params))

    def ring(self) -> str:
        return ring_name(self.f)

    def to_json(self) -> dict:
        return {name: to_json(v) for name, v in zip("fghk", self.params)}

    @classmethod
    def from_json(cls, obj: dict) -> "RecurrenceSpec":
        return cls(*(from_json(obj[name]) for name in "fghk"))

    def __str__(self):
        def show(v):
            return str(v) if isinstance(v, Poly) else format_rational(v)
        return "(" + ", ".join(show(v) for v in self.params) + ")"


@dataclass
class OpStats:
    """Counters filled in by evaluators when passed a ``stats`` argument."""

    ring_mults: int = 0
    matrix_mults: int = 0
    inversions: int = 0


@dataclass(frozen=True)
class Mat2:
    a11: object
    a12: object
    a21: object
    a22: object

    @classmethod
    def identity(cls, like=Fraction(1)) -> "Mat2":
        one, zero = one_like(like), zero_like(like)
        return cls(one, zero, zero, one)

    @classmethod
    def zero(cls, like=Fraction(0)) -> "Mat2":
        z = zero_like(like)
        return cls(z, z, z, z)

    @classmethod
    def diag(cls, d1, d2) -> "Mat2":
        return cls(d1, zero_like(d1), zero_like(d1), d2)

    def entries(self):
        return self.a11, self.a12, self.a21, self.a22

    def map(self, fn) -> "Mat2":
        return Mat2(*(fn(e) for e in self.entries()))

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(*(a + b for a, b in zip(self.entries(), other.entries())))

    def __sub__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(*(a - b for a, b in zip(self.entries(), other.entries())))

    def __neg__(self):
        return self.map(lambda e: -e)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.entries()
            e, f, g, h = other.entries()
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return self.map(lambda e: e * other)

    def __rmul__(self, scalar):
        return self.map(lambda e: scalar * e)

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def adjugate(self) -> "Mat2":
        return Mat2(self.a22, -self.a12, -self.a21, self.a11)

    def inverse(self) -> "Mat2":
        """Adjugate over determinant; the determinant must be a unit."""
        d = self.det()
        if not is_unit(d):
            raise NotInvertibleError(ring_name(d), "matrix determinant", d)
        return self.adjugate() * invert(d)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries())

    def __str__(self):
        def show(v):
            return str(v) if isinstance(v, (Poly, QuadExt)) else format_rational(v)
        return f"[[{show(self.a11)}, {show(self.a12)}], [{show(self.a21)}, {show(self.a22)}]]"


class ABCD(NamedTuple):
    A: Mat2
    B: Mat2
    C: Mat2
    D: Mat2


def companion(spec: RecurrenceSpec) -> Mat2:
    """``B = [[0, g], [1, f]]``; right-multiplying ``[R[n-1], R[n]]`` by it advances one step."""
    return Mat2(zero_like(spec.g), spec.g, one_like(spec.g), spec.f)


def build_abcd(spec: RecurrenceSpec) -> ABCD:
    f, g, h, k = spec.params
    A = Mat2(2 * g * h + f * f * h - f * k, 2 * k * g - f * h * g,
             2 * k - f * h, 2 * g * h + f * k)
    C = Mat2(2 * g, f * g, f, f * f + 2 * g)
    D = Mat2(-f, 2 * g, 2 * one_like(f), f)
    return ABCD(A, companion(spec), C, D)


def _square_multiply(base: Mat2, n: int, stats: Optional[OpStats]) -> Mat2:
    """``base**n`` for ``n >= 1``; the first factor is taken as-is, not multiplied into I."""
    result = None
    while True:
        if n & 1:
            if result is None:
                result = base
            else:
                result = result * base
                if stats is not None:
                    stats.matrix_mults += 1
                    stats.ring_mults += 8
        n >>= 1
        if not n:
            return result
        base = base * base
        if stats is not None:
            stats.matrix_mults += 1
            stats.ring_mults += 8


def mat_pow(m: Mat2, n: int, stats: Optional[OpStats] = None) -> Mat2:
    """``m**n`` by square-and-multiply; negative ``n`` inverts ``m`` once.

    Rational matrices are scaled to integer ones first, so the products skip
    Fraction normalization and only the final entries are reduced.
    """
    if n == 0:
        return Mat2.identity(m.a11)
    if n < 0 and stats is not None:
        stats.inversions += 1
    if not all(isinstance(e, Fraction) for e in m.entries()):
        if n < 0:
            m, n = m.inverse(), -n
        return _square_multiply(m, n, stats)
    d = math.lcm(*(e.denominator for e in m.entries()))
    lifted = m.map(lambda e: e.numerator * (d // e.denominator))
    scale = Fraction(1, d)
    if n < 0:
        # m^-1 = d * adj(lifted) / det(lifted)
        det = lifted.det()
        if det == 0:
            raise NotInvertibleError("rational", "matrix determinant", 0)
        lifted, scale, n = lifted.adjugate(), Fraction(d, det), -n
    power = _square_multiply(lifted, n, stats)
    factor = scale ** n
    return power.map(lambda e: e * factor)


def _backward_factor(spec: RecurrenceSpec):
    if not is_unit(spec.g):
        raise NotInvertibleError(spec.ring(), "g (needed for negative indices)", spec.g)
    return invert(spec.g)


def _rational_walk(f: Fraction, g: Fraction, h: Fraction, k: Fraction, m: int):
    """``(X[m], X[m+1])`` for ``X[0] = h, X[1] = k``, ``m >= 0``, over plain ints.

    With ``d`` the common denominator of f and g, ``S[n] = d^n X[n]`` obeys
    ``S[n+1] = (f d) S[n] + (g d^2) S[n-1]``, an integer recurrence once the
    seeds are scaled by ``e``.  Only the final pair is reduced.
    """
    d = math.lcm(f.denominator, g.denominator)
    F, G = int(f * d), int(g * d * d)
    s0, s1 = h, k * d
    e = math.lcm(s0.denominator, s1.denominator)
    cur, nxt = int(s0 * e), int(s1 * e)
    for _ in range(m):
        cur, nxt = nxt, F * nxt + G * cur
    scale = e * d ** m
    return Fraction(cur, scale), Fraction(nxt, scale * d)


def iter_pair(spec: RecurrenceSpec, n: int, stats: Optional[OpStats] = None):
    """``(R[n], R[n+1])`` by stepping the recurrence from ``(h, k)``."""
    f, g, h, k = spec.params
    if stats is not None:
        stats.ring_mults += 2 * abs(n)
    if n < 0:
        ginv = _backward_factor(spec)
        if stats is not None:
            stats.inversions += 1
    if isinstance(f, Fraction):
        if n >= 0:
            return _rational_walk(f, g, h, k, n)
        # walking down is the recurrence with (-f/g, 1/g) started from (R[0], R[-1])
        below, at = _rational_walk(-f * ginv, ginv, h, (k - f * h) * ginv, -n - 1)
        return at, below
    cur, nxt = h, k
    if n >= 0:
        for _ in range(n):
            cur, nxt = nxt, f * nxt + g * cur
        return cur, nxt
    for _ in range(-n):
        cur, nxt = (nxt - f * cur) * ginv, cur
    return cur, nxt


def r_iter(spec: RecurrenceSpec, n: int, stats: Optional[OpStats] = None):
    """``R[n]`` by direct iteration, O(|n|) ring multiplications."""
    return iter_pair(spec, n, stats)[0]


def fast_pair(spec: RecurrenceSpec, n: int, stats: Optional[OpStats] = None):
    """``(R[n], R[n+1])`` from the row vector ``[h, k] * B**n``."""
    if n < 0:
        _backward_factor(spec)
    p = mat_pow(companion(spec), n, stats)
    h, k = spec.h, spec.k
    if stats is not None:
        stats.ring_mults += 4
    return h * p.a11 + k * p.a21, h * p.a12 + k * p.a22


def r_fast(spec: RecurrenceSpec, n: int, stats: Optional[OpStats] = None):
    """``R[n]`` in O(log |n|) ring multiplications."""
    if n < 0:
        _backward_factor(spec)
    p = mat_pow(companion(spec), n, stats)
    if stats is not None:
        stats.ring_mults += 2
    return spec.h * p.a11 + spec.k * p.a21


def lemma21_residual(spec: RecurrenceSpec, n: int) -> Mat2:
    """``A*B**n - (C*R[n] + D*g*R[n-1])``; the zero matrix when the identity holds."""
    A, B, C, D = build_abcd(spec)
    prev, cur = iter_pair(spec, n - 1)
    lhs = A * mat_pow(B, n)
    rhs = C * cur + D * (spec.g * prev)
    return lhs - rhs


def terms_table(spec: RecurrenceSpec, lo: int, hi: int) -> dict:
    """``{n: R[n]}`` for ``lo <= n <= hi`` from one forward and one backward walk."""
    f, g, h, k = spec.params
    table = {}
    cur, nxt = h, k
    for n in range(0, hi + 1):
        if n >= lo:
            table[n] = cur
        cur, nxt = nxt, f * nxt + g * cur
    if lo < 0:
        ginv = _backward_factor(spec)
        cur, nxt = h, k
        for n in range(-1, lo - 1, -1):
            cur, nxt = (nxt - f * cur) * ginv, cur
            if n <= hi:
                table[n] = cur
    return table
