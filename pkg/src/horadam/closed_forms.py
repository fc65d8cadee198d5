"""Closed-form solutions, split by the four cases of the discriminant and q.

With ``delta = f^2 + 4g`` and ``q = g*h^2 - k^2 + f*h*k``:

* ``delta != 0, q != 0``: ``R[n]^2`` is a determinant expression
  (:func:`r_squared_det`) and ``R[n]`` itself follows from the Binet formula
  (:func:`r_binet`), valid for every integer ``n``.
* ``delta == 0``: ``R[n] = (n(2k - fh) + fh) f^(n-1) / 2^n`` (:func:`r_degenerate`).
* ``delta != 0, q == 0``: the sequence is geometric, ``R[n] = k^n / h^(n-1)``.
"""
from __future__ import annotations

import enum
import functools
from fractions import Fraction
from typing import NamedTuple

from .engine import Mat2, RecurrenceSpec, build_abcd, companion, mat_pow, r_fast
from .errors import (DegenerateDiscriminantError, IdentityViolation, NotInvertibleError,
                     WrongCaseError)
from .ring import Poly, QuadExt, invert, is_unit, ring_power, zero_like


class CaseTag(str, enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    DEGENERATE_DISCRIMINANT = "DegenerateDiscriminant"
    DOUBLY_DEGENERATE = "DoublyDegenerate"
    GEOMETRIC = "Geometric"

    def __str__(self):
        return self.value


def classify(spec: RecurrenceSpec) -> CaseTag:
    delta_zero = spec.delta == 0
    q_zero = spec.q == 0
    if delta_zero:
        return CaseTag.DOUBLY_DEGENERATE if q_zero else CaseTag.DEGENERATE_DISCRIMINANT
    return CaseTag.GEOMETRIC if q_zero else CaseTag.NON_DEGENERATE


def _require_rational(spec: RecurrenceSpec, what: str):
    if isinstance(spec.f, Poly):
        raise TypeError(f"{what} needs a rational spec; evaluate the polynomial spec at a point first")


@functools.lru_cache(maxsize=512)
def _binet_setup(spec: RecurrenceSpec):
    """``(alpha, c1, c2)`` with ``R[n] = c1 alpha^n + c2 beta^n``; depends on the spec only."""
    f, g, h, k = spec.params
    t = QuadExt.gen(spec.delta)
    half = Fraction(1, 2)
    alpha = (t + f) * half
    tail = invert(t) * ((2 * k - f * h) * half)
    return alpha, tail + h * half, h * half - tail


def binet_components(spec: RecurrenceSpec, n: int) -> QuadExt:
    """Binet's formula evaluated in Q[t]/(t^2 - delta), before projecting to Q."""
    _require_rational(spec, "Binet's formula")
    if spec.delta == 0:
        raise DegenerateDiscriminantError(
            "f^2 + 4g = 0: the roots coincide, use r_degenerate instead")
    alpha, c1, c2 = _binet_setup(spec)
    alpha_n = ring_power(alpha, n)
    # beta is the conjugate of alpha, and conjugation is a ring map
    return c1 * alpha_n + c2 * alpha_n.conjugate()


def r_binet(spec: RecurrenceSpec, n: int) -> Fraction:
    """``R[n]`` from the Binet formula; exact for negative ``n`` and square delta too."""
    value = binet_components(spec, n)
    if value.b != 0:
        raise IdentityViolation(f"Binet t-component is {value.b}, expected 0 ({spec}, n={n})")
    return value.a


def r_degenerate(spec: RecurrenceSpec, n: int):
    f, g, h, k = spec.params
    if spec.delta != 0:
        raise WrongCaseError("r_degenerate needs f^2 + 4g = 0")
    if n <= 0 and not is_unit(f):
        raise NotInvertibleError(spec.ring(), "f (needed for n <= 0)", f)
    two_pow = Fraction(1, 2 ** n) if n >= 0 else Fraction(2 ** -n)
    if spec.q == 0:
        return h * ring_power(f, n) * two_pow
    return (n * (2 * k - f * h) + f * h) * ring_power(f, n - 1) * two_pow


def r_geometric(spec: RecurrenceSpec, n: int):
    f, g, h, k = spec.params
    if spec.delta == 0 or spec.q != 0:
        raise WrongCaseError("r_geometric needs f^2 + 4g != 0 and g*h^2 - k^2 + f*h*k = 0")
    if h == 0:
        # q = -k^2 here, so k = 0 as well
        return zero_like(h)
    if not is_unit(h):
        raise NotInvertibleError(spec.ring(), "h", h)
    return ring_power(k, n) * ring_power(h, 1 - n)


def m_matrix(spec: RecurrenceSpec) -> Mat2:
    """The matrix M of the determinant formula; commutes with the companion matrix."""
    f, g, h, k = spec.params
    qinv = invert(spec.q, "g*h^2 - k^2 + f*h*k")
    w = 2 * k - f * h
    return Mat2(g * h * h + f * f * h * h + k * k - 2 * f * h * k, g * h * w,
                h * w, g * h * h + k * k) * qinv


def step_matrix(spec: RecurrenceSpec) -> Mat2:
    """``(-g) * B^-2``, the matrix raised to the n-th power in the determinant formula."""
    return mat_pow(companion(spec), -2) * (-spec.g)


def squared_det_parts(spec: RecurrenceSpec, n: int):
    """``(prefactor, matrix)`` with ``R[n]^2 = prefactor * det(matrix)``."""
    if spec.delta == 0:
        raise WrongCaseError("the determinant formula needs f^2 + 4g != 0")
    f, g, h, k = spec.params
    delta_inv = invert(spec.delta, "f^2 + 4g")
    if not is_unit(g):
        raise NotInvertibleError(spec.ring(), "g", g)
    M = m_matrix(spec)
    prefactor = ring_power(-g, n) * spec.q * delta_inv
    # det(step_matrix) = 1, so negative n never fails here
    return prefactor, M + mat_pow(step_matrix(spec), n)


def r_squared_det(spec: RecurrenceSpec, n: int):
    """``R[n]^2`` by the determinant formula.  The sign of ``R[n]`` is not recovered."""
    prefactor, matrix = squared_det_parts(spec, n)
    return prefactor * matrix.det()


class DiagResiduals(NamedTuple):
    A: Mat2
    B: Mat2
    C: Mat2
    D: Mat2

    def all_zero(self) -> bool:
        return all(m.is_zero() for m in self)


def diagonalizer(spec: RecurrenceSpec):
    """``(P, P^-1)`` over Q[t]/(t^2 - delta), using the closed-form inverse."""
    _require_rational(spec, "diagonalization")
    delta = spec.delta
    if delta == 0:
        raise DegenerateDiscriminantError("P is singular when f^2 + 4g = 0")
    f, g = spec.f, spec.g
    t = QuadExt.gen(delta)
    one = QuadExt(1, 0, delta)
    inv2g = invert(2 * g, "2g")
    tinv = t.inverse()
    P = Mat2(one, one, (t + f) * inv2g, (f - t) * inv2g)
    P_inv = Mat2((t - f) * tinv * Fraction(1, 2), tinv * g,
                 (t + f) * tinv * Fraction(1, 2), -(tinv * g))
    return P, P_inv


def diagonal_forms(spec: RecurrenceSpec) -> DiagResiduals:
    """Expected diagonal forms of A, B, C, D in the eigenbasis of B.

    C equals ``f*B + 2g*I``, so its eigenvalues are ``(delta +- f*t)/2``.  The
    form without the factor f (see :func:`c_form_without_f`) only agrees when f = 1.
    """
    f, g, h, k = spec.params
    delta = spec.delta
    t = QuadExt.gen(delta)
    half = Fraction(1, 2)
    w = 2 * k - f * h
    return DiagResiduals(
        A=Mat2.diag((t * w + h * delta) * half, (h * delta - t * w) * half),
        B=Mat2.diag((t + f) * half, (f - t) * half),
        C=Mat2.diag((t * f + delta) * half, (delta - t * f) * half),
        D=Mat2.diag(t, -t),
    )


def c_form_without_f(spec: RecurrenceSpec) -> Mat2:
    """``diag((delta + t)/2, (delta - t)/2)``, the variant missing the factor f."""
    t = QuadExt.gen(spec.delta)
    half = Fraction(1, 2)
    return Mat2.diag((t + spec.delta) * half, (spec.delta - t) * half)


def diag_check(spec: RecurrenceSpec) -> DiagResiduals:
    """``P^-1 X P - diag(X)`` for X in A, B, C, D; all zero when P diagonalizes them."""
    P, P_inv = diagonalizer(spec)
    expected = diagonal_forms(spec)
    mats = build_abcd(spec)
    return DiagResiduals(*((P_inv * X) * P - E for X, E in zip(mats, expected)))


def closed_form(spec: RecurrenceSpec, n: int):
    """``(case, value)`` from the closed form matching the spec's case."""
    case = classify(spec)
    if case is CaseTag.NON_DEGENERATE:
        return case, r_binet(spec, n)
    if case is CaseTag.GEOMETRIC:
        return case, r_geometric(spec, n)
    return case, r_degenerate(spec, n)


def r_auto(spec: RecurrenceSpec, n: int):
    """``(case, value)``: value from :func:`r_fast`, cross-checked by the case's closed form."""
    value = r_fast(spec, n)
    case, check = closed_form(spec, n)
    if check != value:
        raise IdentityViolation(f"{case} closed form gave {check}, matrix power gave {value}")
    return case, value
