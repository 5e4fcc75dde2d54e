"""Ring axioms, inverse pairs and evaluation for the truncated q-series."""

import random
from fractions import Fraction

import pytest

from genus_forge.errors import (
    DivergentEvaluation,
    NonNilpotentExp,
    NonUnitDivisor,
    NonUnitLog,
    TruncMismatch,
)
from genus_forge.qseries import QSeries

TRUNC = 12


def rand_series(rng, trunc=TRUNC, unit=False, nilpotent=False):
    coeffs = {}
    for n in range(trunc):
        if rng.random() < 0.6:
            coeffs[n] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
    if unit:
        coeffs[0] = Fraction(1)
    if nilpotent:
        coeffs.pop(0, None)
    return QSeries(coeffs, trunc)


def test_constructors():
    z = QSeries.zero(5)
    assert not z and z == 0
    one = QSeries.one(5)
    assert one.constant_term() == 1 and one.is_constant()
    c = QSeries.constant(Fraction(3, 2), 5)
    assert c == Fraction(3, 2)
    q = QSeries.q_power(3, 8)
    assert q.coeff(3) == 1 and q.coeff(2) == 0
    assert q.valuation() == 3


def test_zero_coefficients_not_stored():
    s = QSeries({0: Fraction(1), 2: Fraction(0)}, 4)
    assert 2 not in s.coeffs
    assert s == QSeries({0: Fraction(1)}, 4)


def test_coeff_access_contract():
    s = QSeries({1: Fraction(5)}, 4)
    assert s.coeff(1) == 5 and s.qcoeff(Fraction(1, 2)) == 5
    assert s.qcoeff(1) == 0
    with pytest.raises(ValueError):
        s.coeff(4)
    with pytest.raises(ValueError):
        s.qcoeff(Fraction(1, 3))


def test_ring_axioms_random():
    rng = random.Random(20240814)
    for _ in range(25):
        a, b, c = (rand_series(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + QSeries.zero(TRUNC) == a
        assert a * QSeries.one(TRUNC) == a
        assert a - a == QSeries.zero(TRUNC)
        assert -(-a) == a


def test_scalar_coercion():
    a = QSeries({1: Fraction(2)}, 6)
    assert 1 + a == QSeries({0: Fraction(1), 1: Fraction(2)}, 6)
    assert a - 1 == QSeries({0: Fraction(-1), 1: Fraction(2)}, 6)
    assert 2 * a == a + a
    assert a / 2 == QSeries({1: Fraction(1)}, 6)
    assert (1 - a) == 1 - a


def test_truncation_mismatch_rejected():
    a = QSeries.one(4)
    b = QSeries.one(5)
    with pytest.raises(TruncMismatch):
        a + b
    with pytest.raises(TruncMismatch):
        a * b


def test_division_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        a = rand_series(rng)
        b = rand_series(rng, unit=True)
        assert (a * b) / b == a
    geom = QSeries.one(8) / (1 - QSeries.q_power(2, 8))
    assert all(geom.coeff(2 * n) == 1 for n in range(4))


def test_division_by_non_unit():
    with pytest.raises(NonUnitDivisor):
        QSeries.one(4) / QSeries.q_power(1, 4)


def test_powers():
    rng = random.Random(11)
    a = rand_series(rng, unit=True)
    assert a**0 == QSeries.one(TRUNC)
    assert a**3 == a * a * a
    assert a**-2 == QSeries.one(TRUNC) / (a * a)
    nil = QSeries.q_power(2, 6)
    with pytest.raises(NonUnitDivisor):
        nil**-1


def test_log_exp_inverses():
    rng = random.Random(13)
    for _ in range(15):
        u = rand_series(rng, unit=True)
        assert u.log().exp() == u
        n = rand_series(rng, nilpotent=True)
        assert n.exp().log() == n
    with pytest.raises(NonUnitLog):
        QSeries.constant(2, 4).log()
    with pytest.raises(NonNilpotentExp):
        QSeries.one(4).exp()


def test_log_of_product_is_sum():
    rng = random.Random(17)
    u = rand_series(rng, unit=True)
    v = rand_series(rng, unit=True)
    assert (u * v).log() == u.log() + v.log()


def test_truncate_and_shift():
    s = QSeries({0: Fraction(1), 3: Fraction(2), 5: Fraction(7)}, 6)
    t = s.truncate(4)
    assert t.trunc == 4 and t.coeff(3) == 2
    with pytest.raises(TruncMismatch):
        t.truncate(6)
    shifted = s.shift(2)
    assert shifted.coeff(2) == 1 and shifted.coeff(5) == 2
    assert shifted.shift(-2).coeff(0) == 1
    with pytest.raises(ValueError):
        s.shift(-1)


def test_integer_grid_detection():
    assert QSeries({0: Fraction(1), 4: Fraction(2)}, 6).integer_powers_only()
    assert not QSeries({1: Fraction(1)}, 4).integer_powers_only()


def test_structural_equality():
    a = QSeries({0: Fraction(1)}, 4)
    b = QSeries({0: Fraction(1)}, 5)
    assert a != b  # same coefficients, different truncation
    assert a == 1 and b == 1  # scalar comparison ignores truncation


def test_eval_at():
    geom = QSeries.one(40) / (1 - QSeries.q_power(2, 40))
    val = geom.eval_at(0.1)
    assert abs(val - 1 / 0.9) < 1e-15
    half = QSeries.q_power(1, 4)
    assert abs(half.eval_at(0.25) - 0.5) < 1e-15
    with pytest.raises(DivergentEvaluation):
        geom.eval_at(1.0)
    with pytest.raises(DivergentEvaluation):
        geom.eval_at(-2.0)


def test_str_rendering():
    s = QSeries({0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(3)}, 6)
    text = str(s)
    assert text.startswith("1")
    assert "q^(1/2)" in text and "3*q" in text
    assert str(QSeries.zero(3)) == "0"
