import random
from fractions import Fraction

import pytest

from horadam.engine import (Mat2, OpStats, RecurrenceSpec, build_abcd, companion,
                            lemma21_residual, mat_pow, r_fast, r_iter, terms_table)
from horadam.errors import DegenerateSpecError, NotInvertibleError
from horadam.ring import Poly, ring_power
from horadam.sampling import random_spec

from oracles import matpow_naive, poly_sequence, sequence, term

FIB = RecurrenceSpec(1, 1, 0, 1)
PELL = RecurrenceSpec(2, 1, 0, 1)
JACOBSTHAL = RecurrenceSpec(1, 2, 0, 1)
X = Poly.x()
TCHEBYCHEV = RecurrenceSpec(2 * X, -1, 1, X)


def as_lists(m):
    return [[m.a11, m.a12], [m.a21, m.a22]]


def test_build_abcd_fibonacci():
    A, B, C, D = build_abcd(FIB)
    assert as_lists(A) == [[-1, 2], [2, 1]]
    assert as_lists(B) == [[0, 1], [1, 1]]
    assert as_lists(C) == [[2, 1], [1, 3]]
    assert as_lists(D) == [[-1, 2], [2, 1]]


def test_build_abcd_pell():
    _, B, _, D = build_abcd(PELL)
    assert as_lists(B) == [[0, 1], [1, 2]]
    assert as_lists(D) == [[-2, 2], [2, 2]]


def test_abcd_pairwise_commute():
    rng = random.Random(5)
    for _ in range(50):
        mats = build_abcd(random_spec(rng))
        for X1 in mats:
            for X2 in mats:
                assert X1 * X2 == X2 * X1


def test_mat_pow_examples():
    B = companion(FIB)
    assert as_lists(mat_pow(B, 5)) == matpow_naive([[0, 1], [1, 1]], 5) == [[3, 5], [5, 8]]
    assert mat_pow(B, 0) == Mat2.identity()
    assert as_lists(mat_pow(Mat2(Fraction(2, 3), 5, -1, 7), 0)) == [[1, 0], [0, 1]]
    # inverse of [[0, g], [1, f]] is [[-f/g, 1], [1/g, 0]]
    assert as_lists(mat_pow(B, -1)) == [[-1, 1], [1, 0]]


def test_mat_pow_non_unit_determinant():
    with pytest.raises(NotInvertibleError):
        mat_pow(Mat2(1, 2, 2, 4), -1)
    with pytest.raises(NotInvertibleError):
        mat_pow(companion(RecurrenceSpec(1, 2 * X, 1, 1)), -1)


def test_mat_pow_matches_naive_power():
    m = Mat2(Fraction(1, 2), -3, 2, Fraction(5, 7))
    for n in range(12):
        naive = matpow_naive(as_lists(m), n)
        assert as_lists(mat_pow(m, n)) == naive


def test_r_iter_examples():
    assert r_iter(FIB, 10) == term(1, 1, 0, 1, 10) == 55
    assert r_iter(FIB, 0) == 0
    assert r_iter(FIB, -5) == term(1, 1, 0, 1, -5) == 5


def test_r_fast_examples():
    assert r_fast(FIB, 10) == r_iter(FIB, 10) == 55
    assert r_fast(JACOBSTHAL, 6) == term(1, 2, 0, 1, 6) == 21
    assert r_fast(FIB, -2) == term(1, 1, 0, 1, -2) == -1


def test_negative_index_needs_unit_g():
    spec = RecurrenceSpec(1, 2 * X, 1, 1)
    assert r_iter(spec, 0) == 1
    with pytest.raises(NotInvertibleError):
        r_iter(spec, -1)
    with pytest.raises(NotInvertibleError):
        r_fast(spec, -1)


def test_zero_f_or_g_rejected():
    with pytest.raises(DegenerateSpecError):
        RecurrenceSpec(0, 1, 0, 1)
    with pytest.raises(DegenerateSpecError):
        RecurrenceSpec(1, 0, 0, 1)
    with pytest.raises(DegenerateSpecError):
        RecurrenceSpec(X - X, 1, 0, 1)


def test_lemma21_examples():
    assert lemma21_residual(FIB, 7).is_zero()
    assert lemma21_residual(FIB, -1).is_zero()
    residual = lemma21_residual(TCHEBYCHEV, 4)
    assert residual.is_zero() and isinstance(residual.a11, Poly)


def test_tchebychev_terms_match_polynomial_oracle():
    terms = poly_sequence([0, 2], [-1], [1], [0, 1], 6)
    for n, coeffs in enumerate(terms):
        assert r_iter(TCHEBYCHEV, n) == Poly(coeffs) == r_fast(TCHEBYCHEV, n)
    assert terms[4] == [1, 0, -8, 0, 8]


def test_r_fast_equals_r_iter_seeded():
    rng = random.Random(11)
    for _ in range(100):
        spec = random_spec(rng)
        ref = sequence(*spec.params, -25, 25)
        for n in range(-25, 26):
            assert r_fast(spec, n) == r_iter(spec, n) == ref[n]


def test_lemma21_seeded():
    rng = random.Random(12)
    for _ in range(100):
        spec = random_spec(rng)
        for n in range(-25, 26, 5):
            assert lemma21_residual(spec, n).is_zero()


def test_det_of_power_and_power_additivity():
    rng = random.Random(13)
    for _ in range(20):
        spec = random_spec(rng)
        B = companion(spec)
        for n in range(-10, 11):
            assert mat_pow(B, n).det() == ring_power(-spec.g, n)
        for m in range(-8, 9, 3):
            for n in range(-8, 9, 2):
                assert mat_pow(B, m + n) == mat_pow(B, m) * mat_pow(B, n)


def test_det_a_formula():
    rng = random.Random(14)
    for _ in range(100):
        spec = random_spec(rng)
        f, g, h, k = spec.params
        A = build_abcd(spec).A
        assert A.det() == (f * f + 4 * g) * (g * h * h - k * k + f * h * k)


def test_terms_table_matches_oracle():
    spec = RecurrenceSpec(Fraction(3, 2), Fraction(-2, 5), 1, Fraction(1, 3))
    assert terms_table(spec, -7, 9) == sequence(*spec.params, -7, 9)


def test_op_stats_logarithmic():
    stats = OpStats()
    r_fast(FIB, 1_000_000, stats)
    assert stats.matrix_mults <= 2 * 20 + 2


def test_spec_serialization_roundtrip():
    for spec in (FIB, TCHEBYCHEV, RecurrenceSpec(Fraction(-1, 2), 3, Fraction(7, 9), 0)):
        assert RecurrenceSpec.from_json(spec.to_json()) == spec


def test_spec_at_sample_point():
    assert TCHEBYCHEV.at(Fraction(1, 2)) == RecurrenceSpec(1, -1, 1, Fraction(1, 2))
    assert TCHEBYCHEV.symbolic and not FIB.symbolic


def test_mat_pow_rational_entries():
    m = Mat2(Fraction(1, 2), Fraction(-3, 4), Fraction(2, 9), Fraction(5, 7))
    for n in range(1, 8):
        assert mat_pow(m, n) * mat_pow(m, -n) == Mat2.identity()
        assert as_lists(mat_pow(m, n)) == matpow_naive(as_lists(m), n)
    with pytest.raises(NotInvertibleError):
        mat_pow(Mat2(Fraction(1, 2), 1, Fraction(1, 4), Fraction(1, 2)), -3)


def test_r_iter_rational_walk_both_directions():
    spec = RecurrenceSpec(Fraction(-7, 3), Fraction(5, 6), Fraction(2, 9), Fraction(-1, 4))
    ref = sequence(*spec.params, -40, 40)
    for n in range(-40, 40):
        assert r_iter(spec, n) == ref[n]
