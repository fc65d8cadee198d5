"""The eleven classical sequences with their determinant closed forms.

Each entry carries its closed form as data: a scalar prefactor and a
pair of matrices ``(M, N)`` such that

    R[n]^2 = prefactor(n) * det(M + N**n)

Symbolic entries (polynomials in ``x``) store the formula as a function
of a rational sample point, because several of the matrices contain ``1/(2x)``
and there is no rational-function ring here.

Parameters follow the closed forms exactly.  In particular the Jacobsthal
polynomials are seeded with ``h = 1, k = 1``, which differs from the more
common ``J_0(x) = 0, J_1(x) = 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .closed_forms import m_matrix, step_matrix
from .engine import Mat2, RecurrenceSpec, mat_pow, r_iter
from .errors import UnknownSequenceError
from .ring import Poly, as_rational, format_rational, ring_power

X = Poly.x()
_I = Mat2(1, 0, 0, 1)
_NEG_I = Mat2(-1, 0, 0, -1)


def _sign(n: int) -> Fraction:
    return Fraction(-1 if n % 2 else 1)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    spec: RecurrenceSpec
    prefactor: Callable[[int, Optional[Fraction]], Fraction]
    fixed_matrix: Callable[[Optional[Fraction]], Mat2]
    step_matrix: Callable[[Optional[Fraction]], Mat2]
    symbolic: bool = False
    note: str = ""

    def spec_at(self, x=None) -> RecurrenceSpec:
        if self.symbolic:
            if x is None:
                raise ValueError(f"{self.name} is a polynomial sequence; a sample point is required")
            return self.spec.at(x)
        return self.spec

    def radicand(self, n: int, x=None) -> Fraction:
        """Value under the square root of the closed form."""
        if self.symbolic:
            if x is None:
                raise ValueError(f"{self.name} is a polynomial sequence; a sample point is required")
            x = as_rational(x)
        matrix = self.fixed_matrix(x) + mat_pow(self.step_matrix(x), n)
        return self.prefactor(n, x) * matrix.det()


_ENTRIES = [
    CatalogEntry(
        "fibonacci_poly", "Fibonacci polynomials",
        RecurrenceSpec(X, 1, 0, 1),
        lambda n, x: _sign(n + 1) / (4 + x * x),
        lambda x: _NEG_I,
        lambda x: Mat2(-(1 + x * x), x, x, -1),
        symbolic=True),
    CatalogEntry(
        "fibonacci", "Fibonacci numbers",
        RecurrenceSpec(1, 1, 0, 1),
        lambda n, x: _sign(n + 1) / 5,
        lambda x: _NEG_I,
        lambda x: Mat2(-2, 1, 1, -1)),
    CatalogEntry(
        "lucas_poly", "Lucas polynomials",
        RecurrenceSpec(X, 1, 2, X),
        lambda n, x: _sign(n),
        lambda x: _I,
        lambda x: Mat2(-(1 + x * x), x, x, -1),
        symbolic=True),
    CatalogEntry(
        "lucas", "Lucas numbers",
        RecurrenceSpec(1, 1, 2, 1),
        lambda n, x: _sign(n),
        lambda x: _I,
        lambda x: Mat2(-2, 1, 1, -1)),
    CatalogEntry(
        "jacobsthal_poly", "Jacobsthal polynomials",
        RecurrenceSpec(1, 2 * X, 1, 1),
        lambda n, x: _sign(n) * ring_power(2 * x, n + 1) / (1 + 8 * x),
        lambda x: Mat2(1, 1, 1 / (2 * x), 1 + 1 / (2 * x)),
        lambda x: Mat2(-1 / (2 * x) - 1, 1, 1 / (2 * x), -1),
        symbolic=True,
        note="seeded h = 1, k = 1 to match the closed form; the usual convention is J_0 = 0, J_1 = 1"),
    CatalogEntry(
        "jacobsthal", "Jacobsthal numbers",
        RecurrenceSpec(1, 2, 0, 1),
        lambda n, x: ring_power(Fraction(-2), n) / -9,
        lambda x: _NEG_I,
        lambda x: Mat2(Fraction(-3, 2), 1, Fraction(1, 2), -1)),
    CatalogEntry(
        "jacobsthal_lucas_poly", "Jacobsthal-Lucas polynomials",
        RecurrenceSpec(1, 2 * X, 2, 1),
        lambda n, x: ring_power(-2 * x, n),
        lambda x: _I,
        lambda x: Mat2(-1 / (2 * x) - 1, 1, 1 / (2 * x), -1),
        symbolic=True),
    CatalogEntry(
        "jacobsthal_lucas", "Jacobsthal-Lucas numbers",
        RecurrenceSpec(1, 2, 2, 1),
        lambda n, x: ring_power(Fraction(-2), n),
        lambda x: _I,
        lambda x: Mat2(Fraction(-3, 2), 1, Fraction(1, 2), -1)),
    CatalogEntry(
        "pell_lucas", "Pell-Lucas numbers",
        RecurrenceSpec(2, 1, 2, 2),
        lambda n, x: _sign(n),
        lambda x: _I,
        lambda x: Mat2(-5, 2, 2, -1)),
    CatalogEntry(
        "pell", "Pell numbers",
        RecurrenceSpec(2, 1, 0, 1),
        lambda n, x: _sign(n + 1) / 8,
        lambda x: _NEG_I,
        lambda x: Mat2(-5, 2, 2, -1)),
    CatalogEntry(
        "tchebychev_t", "Tchebychev polynomials of the first kind",
        RecurrenceSpec(2 * X, -1, 1, X),
        lambda n, x: Fraction(1, 4),
        lambda x: _I,
        lambda x: Mat2(4 * x * x - 1, 2 * x, -2 * x, -1),
        symbolic=True),
]

CATALOG = {e.name: e for e in _ENTRIES}
NAMES = tuple(CATALOG)


def get_sequence(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownSequenceError(name, NAMES) from None


def corollary_check(name: str, n: int, sample_point=None):
    """``(radicand, R[n]^2)``; equal components confirm the closed form at ``n``."""
    entry = get_sequence(name)
    spec = entry.spec_at(sample_point)
    term = r_iter(spec, n)
    return entry.radicand(n, sample_point), term * term


def stored_matrices_match(name: str, sample_point=None) -> bool:
    """Whether the stored ``(M, N)`` equal ``M`` and ``(-g) B^-2`` built from the spec."""
    entry = get_sequence(name)
    spec = entry.spec_at(sample_point)
    x = as_rational(sample_point) if entry.symbolic else None
    return (entry.fixed_matrix(x) == m_matrix(spec)
            and entry.step_matrix(x) == step_matrix(spec))


def listing():
    """Rows of name, parameters (as strings) and symbolic flag."""
    def show(v):
        return str(v) if isinstance(v, Poly) else format_rational(v)
    return [{"name": e.name, **{p: show(v) for p, v in zip("fghk", e.spec.params)},
             "symbolic": e.symbolic} for e in _ENTRIES]
