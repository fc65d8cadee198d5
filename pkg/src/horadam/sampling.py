"""Seeded random recurrence specs for fuzzing the identities.

Numerators and denominators are drawn uniformly from [-9, 9] (denominators
nonzero); f and g are redrawn until nonzero.  The forced families below build
specs that a uniform draw essentially never hits: vanishing discriminant,
geometric sequences, g = -1, and a vanishing summation coefficient.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Optional

from .closed_forms import CaseTag, classify
from .engine import RecurrenceSpec

_DENOMS = [d for d in range(-9, 10) if d != 0]


def random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        num = rng.randint(-9, 9)
        if nonzero and num == 0:
            continue
        return Fraction(num, rng.choice(_DENOMS))


def random_spec(rng: random.Random,
                accept: Optional[Callable[[RecurrenceSpec], bool]] = None) -> RecurrenceSpec:
    """Uniform draw, post-filtered by ``accept``."""
    while True:
        spec = RecurrenceSpec(random_rational(rng, True), random_rational(rng, True),
                              random_rational(rng), random_rational(rng))
        if accept is None or accept(spec):
            return spec


def non_degenerate(spec: RecurrenceSpec) -> bool:
    return classify(spec) is CaseTag.NON_DEGENERATE


def nonzero_delta(spec: RecurrenceSpec) -> bool:
    return spec.delta != 0


def degenerate_spec(rng: random.Random, doubly: bool = False) -> RecurrenceSpec:
    """``g = -f^2/4``; with ``doubly`` also ``k = f h / 2`` so that q vanishes."""
    f = random_rational(rng, True)
    h = random_rational(rng)
    k = f * h / 2 if doubly else random_rational(rng)
    return RecurrenceSpec(f, -f * f / 4, h, k)


def _distinct_roots(rng: random.Random):
    while True:
        r1, r2 = random_rational(rng, True), random_rational(rng, True)
        if r1 != r2 and r1 + r2 != 0:
            return r1, r2


def perfect_square_spec(rng: random.Random) -> RecurrenceSpec:
    """Rational characteristic roots, so the discriminant is a nonzero square."""
    r1, r2 = _distinct_roots(rng)
    return RecurrenceSpec(r1 + r2, -r1 * r2, random_rational(rng), random_rational(rng))


def geometric_spec(rng: random.Random) -> RecurrenceSpec:
    """``k = h * root`` for a rational characteristic root, which forces q = 0."""
    r1, r2 = _distinct_roots(rng)
    h = random_rational(rng, True)
    return RecurrenceSpec(r1 + r2, -r1 * r2, h, h * r1)


def g_minus_one_spec(rng: random.Random) -> RecurrenceSpec:
    return RecurrenceSpec(random_rational(rng, True), -1, random_rational(rng), random_rational(rng))


def vanishing_sum_coefficient_spec(rng: random.Random) -> RecurrenceSpec:
    """``f = +-(g - 1)``, so ``f^2 - g^2 + 2g - 1 = 0``; Jacobsthal is one such spec."""
    while True:
        g = random_rational(rng, True)
        if g != 1:
            break
    f = (g - 1) * rng.choice((1, -1))
    return RecurrenceSpec(f, g, random_rational(rng), random_rational(rng))
