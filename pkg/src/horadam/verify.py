"""Seeded verification suites, one per identity family.

Every suite draws its specs from ``random.Random(f"{seed}/{suite}")`` so a
suite's report depends only on (seed, trials, nmax) and not on which other
suites run alongside it.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from . import sampling
from .catalog import NAMES as CATALOG_NAMES
from .catalog import corollary_check, get_sequence
from .closed_forms import (CaseTag, binet_components, classify, closed_form, diag_check,
                           r_squared_det)
from .engine import RecurrenceSpec, lemma21_residual, r_fast, terms_table
from .errors import RecurrenceError
from .identities import addition_residual, cassini_residual, sum_identities_residual
from .ring import Poly

SAMPLE_POINTS = (Fraction(1, 2), Fraction(2), Fraction(-3), Fraction(7, 5))


@dataclass
class Failure:
    spec: str
    index: str
    residual: str


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    passed: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checks == self.passed

    def record(self, spec, index, residual, is_zero: bool):
        self.checks += 1
        if is_zero:
            self.passed += 1
        else:
            self.failures.append(Failure(str(spec), str(index), str(residual)))

    def attempt(self, spec, index, fn: Callable[[], tuple]):
        """Run ``fn`` -> (residual, is_zero); errors count as failures."""
        try:
            residual, zero = fn()
        except RecurrenceError as exc:
            residual, zero = f"{type(exc).__name__}: {exc}", False
        self.record(spec, index, residual, zero)

    def to_json(self) -> dict:
        return {"suite": self.name, "checks": self.checks, "passed": self.passed,
                "ok": self.ok,
                "failures": [vars(f) for f in self.failures]}


def _lemma21(res, rng, trials, nmax):
    specs = [sampling.random_spec(rng) for _ in range(trials)]
    x = Poly.x()
    specs.append(RecurrenceSpec(2 * x, -1, 1, x))
    for spec in specs:
        for n in range(-nmax, nmax + 1):
            res.attempt(spec, n, lambda: _mat_residual(lemma21_residual(spec, n)))


def _mat_residual(m):
    return m, m.is_zero()


def _cassini(res, rng, trials, nmax):
    for _ in range(trials):
        spec = sampling.random_spec(rng, sampling.non_degenerate)
        terms = terms_table(spec, -nmax - 1, nmax)
        for n in range(-nmax, nmax + 1):
            res.attempt(spec, n, lambda: _scalar(cassini_residual(spec, n, terms)))


def _scalar(v):
    return v, v == 0


def _forced_case_spec(rng, i):
    """Mostly uniform draws, with every fifth spec degenerate and every fifth geometric."""
    slot = i % 10
    if slot == 3:
        return sampling.degenerate_spec(rng)
    if slot == 6:
        return sampling.degenerate_spec(rng, doubly=True)
    if slot in (4, 8):
        return sampling.geometric_spec(rng)
    return sampling.random_spec(rng)


def _closed_forms(res, rng, trials, nmax):
    for i in range(trials):
        spec = _forced_case_spec(rng, i)
        terms = terms_table(spec, -nmax, nmax)
        case = classify(spec)
        for n in range(-nmax, nmax + 1):
            def check():
                _, value = closed_form(spec, n)
                ok = value == terms[n] == r_fast(spec, n)
                if ok and case is CaseTag.NON_DEGENERATE:
                    sq = r_squared_det(spec, n)
                    return sq - terms[n] ** 2, sq == terms[n] ** 2
                return value - terms[n], ok
            res.attempt(spec, f"{n} [{case}]", check)


def _binet(res, rng, trials, nmax):
    for i in range(trials):
        if i % 5 == 4:
            spec = sampling.perfect_square_spec(rng)
        else:
            spec = sampling.random_spec(rng, sampling.nonzero_delta)
        terms = terms_table(spec, -nmax, nmax)
        for n in range(-nmax, nmax + 1):
            def check():
                v = binet_components(spec, n)
                return v - terms[n], v.b == 0 and v.a == terms[n]
            res.attempt(spec, n, check)


def _corollary(res, rng, trials, nmax):
    for name in CATALOG_NAMES:
        entry = get_sequence(name)
        points = SAMPLE_POINTS if entry.symbolic else (None,)
        for x in points:
            label = name if x is None else f"{name} at x={x}"
            for n in range(-nmax, nmax + 1):
                def check():
                    radicand, square = corollary_check(name, n, x)
                    return radicand - square, radicand == square
                res.attempt(label, n, check)


def _diag(res, rng, trials, nmax):
    for _ in range(trials):
        spec = sampling.random_spec(rng, sampling.nonzero_delta)
        residuals = diag_check(spec)
        for label, m in zip("ABCD", residuals):
            res.record(spec, label, m, m.is_zero())


def _sums(res, rng, trials, nmax):
    for i in range(trials):
        slot = i % 4
        if slot == 1:
            spec = sampling.g_minus_one_spec(rng)
        elif slot == 2:
            spec = sampling.vanishing_sum_coefficient_spec(rng)
        else:
            spec = sampling.random_spec(rng)
        for n in range(1, nmax + 1):
            def check():
                r1, r2 = sum_identities_residual(spec, n)
                return (r1, r2), r1 == 0 and r2 == 0
            res.attempt(spec, n, check)


def _addition(res, rng, trials, nmax):
    for _ in range(trials):
        spec = sampling.random_spec(rng, sampling.non_degenerate)
        terms = terms_table(spec, -2 * nmax - 1, 2 * nmax)
        for i in range(-nmax, nmax + 1):
            for n in range(-nmax, nmax + 1):
                res.attempt(spec, (i, n), lambda: _scalar(addition_residual(spec, i, n, terms)))


SUITES: Dict[str, Callable] = {
    "lemma21": _lemma21,
    "cassini": _cassini,
    "closed_forms": _closed_forms,
    "binet": _binet,
    "corollary": _corollary,
    "diag": _diag,
    "sums": _sums,
    "addition": _addition,
}


def run_suite(name: str, trials: int = 100, seed: int = 0, nmax: int = 10) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    if trials < 1 or nmax < 1:
        raise ValueError("trials and nmax must be positive")
    res = SuiteResult(name)
    SUITES[name](res, random.Random(f"{seed}/{name}"), trials, nmax)
    return res


def run(suite: str = "all", trials: int = 100, seed: int = 0, nmax: int = 10) -> List[SuiteResult]:
    names = list(SUITES) if suite == "all" else [suite]
    return [run_suite(name, trials, seed, nmax) for name in names]
