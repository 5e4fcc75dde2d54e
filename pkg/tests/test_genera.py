"""Multiplicative classes against an explicit-root expansion oracle, class
polynomial goldens, and rational genus values."""

import itertools
from fractions import Fraction

import pytest

from genus_forge.errors import DimensionError, InsufficientData, NonUnitLog, ParityError
from genus_forge.genera import (
    ahat_factor,
    genus_class,
    genus_source,
    genus_value,
    hypersurface_todd,
    lhat_factor,
    multiplicative_class,
    paired_value,
    signature_factor,
    todd_factor,
)
from genus_forge.manifolds import GenusKind, ManifoldData, cp, hp2, k3
from genus_forge.qseries import QSeries

# -- explicit-root oracle -------------------------------------------------------
#
# Multivariate polynomials over Fraction as {exponent tuple: coefficient},
# truncated by total degree.  Completely independent of the package's
# log/exp/Newton machinery.


def _pmul(a, b, cap):
    out = {}
    for ea, ca in a.items():
        da = sum(ea)
        for eb, cb in b.items():
            if da + sum(eb) > cap:
                continue
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def _factor_in_var(coeffs, var, r, cap):
    out = {}
    for n, c in coeffs.items():
        if n > cap:
            continue
        exps = [0] * r
        exps[var] = n
        out[tuple(exps)] = Fraction(c)
    return out


def _elementary(i, r, squares, cap):
    out = {}
    step = 2 if squares else 1
    if i * step > cap:
        return out
    for combo in itertools.combinations(range(r), i):
        exps = [0] * r
        for j in combo:
            exps[j] = step
        out[tuple(exps)] = Fraction(1)
    return out


def _substitute(poly, r, squares, cap):
    total = {}
    for mono, coeff in poly.items():
        term = {(0,) * r: Fraction(1)}
        for index, power in enumerate(mono, start=1):
            e_i = _elementary(index, r, squares, cap)
            for _ in range(power):
                term = _pmul(term, e_i, cap)
        for key, value in term.items():
            acc = total.get(key, Fraction(0)) + Fraction(coeff) * value
            if acc:
                total[key] = acc
            else:
                total.pop(key, None)
    return total


def _root_product(coeffs, r, cap):
    prod = {(0,) * r: Fraction(1)}
    for var in range(r):
        prod = _pmul(prod, _factor_in_var(coeffs, var, r, cap), cap)
    return prod


def test_chern_class_matches_root_expansion():
    cap, r = 4, 4
    factor = QSeries(
        {0: Fraction(1), 1: Fraction(1, 2), 2: Fraction(-1, 3),
         3: Fraction(1, 5), 4: Fraction(-1, 7)},
        cap + 1,
    )
    poly = multiplicative_class(factor, "chern", cap, n_roots=r)
    direct = _root_product(dict(factor.coeffs), r, cap)
    via_class = _substitute(poly, r, squares=False, cap=cap)
    assert direct == via_class


def test_pontryagin_class_matches_root_expansion():
    cap, r = 3, 3
    y_cap = 2 * cap
    factor = QSeries(
        {0: Fraction(1), 2: Fraction(3, 4), 4: Fraction(-2, 9), 6: Fraction(5, 11)},
        y_cap + 1,
    )
    poly = multiplicative_class(factor, "pontryagin", cap, n_roots=r)
    direct = _root_product(dict(factor.coeffs), r, y_cap)
    via_class = _substitute(poly, r, squares=True, cap=y_cap)
    assert direct == via_class


def test_ahat_factor_matches_root_expansion():
    cap, r = 2, 4
    factor = ahat_factor(2 * cap)
    poly = multiplicative_class(factor, "pontryagin", cap, n_roots=r)
    direct = _root_product(dict(factor.coeffs), r, 2 * cap)
    via_class = _substitute(poly, r, squares=True, cap=2 * cap)
    assert direct == via_class


def test_root_count_stability():
    cap = 3
    factor = signature_factor(2 * cap)
    base = multiplicative_class(factor, "pontryagin", cap)
    more = multiplicative_class(factor, "pontryagin", cap, n_roots=2 * cap + 3)
    assert base == more


def test_factor_validation():
    with pytest.raises(NonUnitLog):
        multiplicative_class(QSeries.constant(2, 5), "chern", 2)
    odd = QSeries({0: Fraction(1), 1: Fraction(1)}, 5)
    with pytest.raises(ParityError):
        multiplicative_class(odd, "pontryagin", 2)
    with pytest.raises(ValueError):
        multiplicative_class(QSeries.one(5), "unknown-kind", 2)


# -- class polynomial goldens ----------------------------------------------------


def test_ahat_class_weight_two():
    poly, const = genus_class(GenusKind.AHAT, 2)
    assert const == 1
    assert poly.coeff(()) == 1
    assert poly.coeff((1,)) == Fraction(-1, 24)
    assert poly.coeff((2, 0)) == Fraction(7, 5760)
    assert poly.coeff((0, 1)) == Fraction(-4, 5760)


def test_signature_class_weight_two():
    poly, const = genus_class(GenusKind.SIGNATURE, 2)
    assert const == 1
    assert poly.coeff((1,)) == Fraction(1, 3)
    assert poly.coeff((0, 1)) == Fraction(7, 45)
    assert poly.coeff((2, 0)) == Fraction(-1, 45)


def test_todd_class_weights():
    poly, const = genus_class(GenusKind.TODD, 3)
    assert const == 1
    assert poly.coeff((1, 0, 0)) == Fraction(1, 2)
    assert poly.coeff((2, 0, 0)) == Fraction(1, 12)
    assert poly.coeff((0, 1, 0)) == Fraction(1, 12)
    assert poly.coeff((1, 1, 0)) == Fraction(1, 24)
    assert poly.coeff((3, 0, 0)) == 0


def test_lhat_factor_constant_two():
    factor = lhat_factor(6)
    assert factor.coeff(0) == 2
    _, const = genus_class(GenusKind.LHAT, 2)
    assert const == 2


def test_todd_factor_leading_terms():
    factor = todd_factor(4)
    assert factor.coeff(0) == 1
    assert factor.coeff(1) == Fraction(1, 2)
    assert factor.coeff(2) == Fraction(1, 12)
    assert factor.coeff(3) == 0


# -- genus values ------------------------------------------------------------------


def test_todd_of_projective_spaces():
    for n in range(1, 7):
        assert genus_value(cp(n), GenusKind.TODD) == 1


def test_k3_values():
    entry = k3()
    assert genus_value(entry, GenusKind.AHAT) == 2
    assert genus_value(entry, GenusKind.SIGNATURE) == -16
    assert genus_value(entry, GenusKind.LHAT) == -16
    assert genus_value(entry, GenusKind.TODD) == 2


def test_lhat_equals_signature():
    for entry in (k3(), hp2()):
        assert genus_value(entry, GenusKind.LHAT) == genus_value(entry, GenusKind.SIGNATURE)
    assert genus_value(hp2(), GenusKind.SIGNATURE) == 1
    assert genus_value(hp2(), GenusKind.AHAT) == 0


def test_paired_value_spot_check():
    poly, _ = genus_class(GenusKind.AHAT, 1)
    value = paired_value(poly, {(1,): -48}, 1, Fraction(0))
    assert value == 2


def test_genus_source_and_asserted_fallback():
    asserted = ManifoldData(
        name="X", real_dim=8, spin=True, asserted_genera={"ahat": Fraction(1)}
    )
    assert genus_value(asserted, GenusKind.AHAT) == 1
    assert genus_source(asserted, GenusKind.AHAT) == "asserted"
    assert genus_source(k3(), GenusKind.AHAT) == "computed"
    with pytest.raises(InsufficientData):
        genus_value(asserted, GenusKind.SIGNATURE)


def test_dimension_contracts():
    s6 = ManifoldData(name="Y6", real_dim=6, pontryagin_numbers={}, spin=True)
    with pytest.raises(DimensionError):
        genus_value(s6, GenusKind.AHAT)
    with pytest.raises(InsufficientData):
        genus_value(k3().__class__(  # pontryagin-only entry cannot do Todd
            name="P", real_dim=4, pontryagin_numbers={(1,): -48}, spin=True
        ), GenusKind.TODD)


def test_hypersurface_todd_closed_form():
    import math

    for n in range(1, 9):
        for degree in (-100, -7, -1, 0, 1, 2, 3, 50, 100):
            expected = Fraction((-1) ** n * degree, math.factorial(n + 1))
            assert hypersurface_todd(n, degree) == expected
