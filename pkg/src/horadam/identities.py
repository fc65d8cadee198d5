"""Cassini-type, summation and addition identities as exact residuals.

Every ``*_residual`` function returns ``lhs - rhs``; a zero result certifies
the identity and a nonzero one is a witness of the defect.  Sequence values
come from the step-by-step oracle so the checks never lean on the matrix path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import RecurrenceSpec, iter_pair, r_iter
from .errors import NotInvertibleError
from .ring import invert, is_unit, one_like, ring_power, zero_like


def _window(spec, n, terms):
    """``(R[n-1], R[n])`` from a precomputed table or a fresh walk."""
    if terms is not None:
        return terms[n - 1], terms[n]
    return iter_pair(spec, n - 1)


def cassini_residual(spec: RecurrenceSpec, n: int, terms=None):
    """``R[n]^2 - g R[n-1]^2 - f R[n] R[n-1] - (k^2 - g h^2 - f h k)(-g)^(n-1)``.

    ``terms`` may map indices to precomputed values (see ``terms_table``).
    """
    f, g, h, k = spec.params
    prev, cur = _window(spec, n, terms)
    lhs = cur * cur - g * prev * prev - f * cur * prev
    rhs = (k * k - g * h * h - f * h * k) * ring_power(-g, n - 1)
    return lhs - rhs


def cassini_constant(spec: RecurrenceSpec):
    """``k^2 - g h^2 - f h k``, which equals ``-q``."""
    f, g, h, k = spec.params
    return k * k - g * h * h - f * h * k


def s_term(spec: RecurrenceSpec, n: int):
    """``sum_{i=1..n} (k^2 - g h^2 - f h k)(-g)^(i-1)`` in closed form."""
    if n < 1:
        raise ValueError("the summation identities are stated for n >= 1")
    g = spec.g
    c = cassini_constant(spec)
    if g == -1:
        return n * c
    one = one_like(g)
    if is_unit(one + g):
        return c * (one - ring_power(-g, n)) * invert(one + g)
    # polynomial g: 1 + g is not a unit, but the quotient is the geometric sum
    total, term = zero_like(g), one
    for _ in range(n):
        total = total + term
        term = term * (-g)
    return c * total


def sum_coefficient(spec: RecurrenceSpec):
    """``f^2 - g^2 + 2g - 1``, the coefficient in front of both sums."""
    f, g = spec.f, spec.g
    return f * f - g * g + 2 * g - 1


def _closed_rhs(spec: RecurrenceSpec, n: int, r_n, r_next, s):
    f, g, h, k = spec.params
    dk = r_next * r_next - k * k
    dh = r_n * r_n - h * h
    rhs_squares = dk - g * g * dh + 2 * s * g
    rhs_products = (1 - g) * dk + g * (g - 1 + f * f) * dh + s * (1 - f * f - g * g)
    return rhs_squares, rhs_products


@dataclass(frozen=True)
class SumReport:
    n: int
    sum_of_squares: object
    sum_of_products: object
    s_value: object
    residual_squares: object
    residual_products: object

    def ok(self) -> bool:
        return self.residual_squares == 0 and self.residual_products == 0


def direct_sums(spec: RecurrenceSpec, n: int):
    """``(sum R[i]^2, sum R[i] R[i-1])`` over ``i = 1..n`` plus ``R[n]``, ``R[n+1]``."""
    f, g = spec.f, spec.g
    prev, cur = spec.h, spec.k
    squares = products = zero_like(f)
    for _ in range(n):
        squares = squares + cur * cur
        products = products + cur * prev
        prev, cur = cur, f * cur + g * prev
    return squares, products, prev, cur


def sum_report(spec: RecurrenceSpec, n: int) -> SumReport:
    if n < 1:
        raise ValueError("the summation identities are stated for n >= 1")
    squares, products, r_n, r_next = direct_sums(spec, n)
    s = s_term(spec, n)
    coef = sum_coefficient(spec)
    rhs1, rhs2 = _closed_rhs(spec, n, r_n, r_next, s)
    return SumReport(n, squares, products, s,
                     coef * squares - rhs1,
                     spec.f * coef * products - rhs2)


def sum_identities_residual(spec: RecurrenceSpec, n: int):
    report = sum_report(spec, n)
    return report.residual_squares, report.residual_products


def solve_sums(spec: RecurrenceSpec, n: int):
    """Both sums from ``R[n]``, ``R[n+1]`` and the S term, without summing."""
    if n < 1:
        raise ValueError("the summation identities are stated for n >= 1")
    coef = sum_coefficient(spec)
    if not is_unit(coef):
        raise NotInvertibleError(spec.ring(), "coefficient f^2 - g^2 + 2g - 1", coef)
    coef_inv = invert(coef)
    r_n, r_next = iter_pair(spec, n)
    rhs1, rhs2 = _closed_rhs(spec, n, r_n, r_next, s_term(spec, n))
    return rhs1 * coef_inv, rhs2 * coef_inv * invert(spec.f, "f")


def addition_lead(spec: RecurrenceSpec):
    """``k^2 - f k h - g h^2``, the coefficient of ``R[i+n]``."""
    f, g, h, k = spec.params
    return k * k - f * k * h - g * h * h


def _addition_rest(spec: RecurrenceSpec, ri, ri1, rn, rn1):
    f, g, h, k = spec.params
    return ((f * f * h - f * k + g * h) * ri * rn
            + h * g * g * ri1 * rn1
            + (f * h - k) * g * (rn * ri1 + ri * rn1))


def addition_residual(spec: RecurrenceSpec, i: int, n: int, terms=None):
    ri1, ri = _window(spec, i, terms)
    rn1, rn = _window(spec, n, terms)
    r_sum = terms[i + n] if terms is not None else r_iter(spec, i + n)
    return addition_lead(spec) * r_sum + _addition_rest(spec, ri, ri1, rn, rn1)


def compose_terms(spec: RecurrenceSpec, ri, ri1, rn, rn1):
    """``R[i+n]`` from ``R[i], R[i-1], R[n], R[n-1]`` via the addition identity."""
    lead = addition_lead(spec)
    if not is_unit(lead):
        raise NotInvertibleError(spec.ring(), "coefficient k^2 - f k h - g h^2", lead)
    return -_addition_rest(spec, ri, ri1, rn, rn1) * invert(lead)


def r_add_compose(spec: RecurrenceSpec, i: int, n: int):
    if not is_unit(addition_lead(spec)):
        raise NotInvertibleError(spec.ring(), "coefficient k^2 - f k h - g h^2",
                                 addition_lead(spec))
    ri1, ri = iter_pair(spec, i - 1)
    rn1, rn = iter_pair(spec, n - 1)
    return compose_terms(spec, ri, ri1, rn, rn1)


def r_doubling(spec: RecurrenceSpec, n: int, stats=None):
    """``R[n]`` for ``n >= 0`` by repeated doubling with the addition identity.

    Keeps ``(R[m-1], R[m])`` and reads the bits of ``n`` from the top.  Odd
    steps are free; even steps need ``R[2m-1]`` and therefore a division by g.
    """
    if n < 0:
        raise ValueError("r_doubling handles n >= 0 only")
    f, g, h, k = spec.params
    lead = addition_lead(spec)
    if not is_unit(lead):
        raise NotInvertibleError(spec.ring(), "coefficient k^2 - f k h - g h^2", lead)
    if not is_unit(g):
        raise NotInvertibleError(spec.ring(), "g", g)
    if n == 0:
        return h
    lead_inv, g_inv = invert(lead), invert(g)
    prev, cur = h, k  # m = 1
    for bit in bin(n)[3:]:
        nxt = f * cur + g * prev
        even = -_addition_rest(spec, cur, prev, cur, prev) * lead_inv        # R[2m]
        odd = -_addition_rest(spec, nxt, cur, cur, prev) * lead_inv          # R[2m+1]
        if stats is not None:
            stats.ring_mults += 28
        if bit == "0":
            prev, cur = (odd - f * even) * g_inv, even
        else:
            prev, cur = even, odd
    return cur
