"""Eisenstein expansions, exact Witten-genus fits, and the numeric check
of the S-transformation between the two level-2 genera."""

from fractions import Fraction

import pytest

from genus_forge.errors import ConvergenceRisk, FitError
from genus_forge.manifolds import ManifoldData, k3, hp2, product, torus
from genus_forge.modular import (
    eisenstein,
    modular_relation_check,
    witten_fit,
)


def test_eisenstein_goldens():
    e4 = eisenstein("E4", 9)
    # 1 + 240 sum sigma_3(n) q^n
    assert dict(e4.terms()) == {
        0: Fraction(1), 2: Fraction(240), 4: Fraction(2160),
        6: Fraction(6720), 8: Fraction(17520),
    }
    e6 = eisenstein("E6", 9)
    assert dict(e6.terms()) == {
        0: Fraction(1), 2: Fraction(-504), 4: Fraction(-16632),
        6: Fraction(-122976), 8: Fraction(-532728),
    }
    assert e4.integer_powers_only() and e6.integer_powers_only()


def test_eisenstein_validation():
    with pytest.raises(ValueError):
        eisenstein("E8", 9)
    with pytest.raises(ValueError):
        eisenstein("e4", 9)


def test_eisenstein_product():
    # weight-10 form E4 E6 opens with -264 q
    e10 = eisenstein("E4", 9) * eisenstein("E6", 9)
    assert e10.coeff(0) == 1 and e10.coeff(2) == -264


def test_fit_detects_non_string_manifold():
    fit = witten_fit(product(k3(), k3()), 17)
    assert fit.weight == 4
    assert fit.coefficients == {(1, 0): Fraction(4)}
    assert not fit.residual_ok
    assert fit.first_mismatch == (2, Fraction(-1152))
    assert fit.checked_order == 17


def test_fit_exact_for_modular_input():
    # p2 pairing -1440 makes the Witten expansion exactly E4
    x8 = ManifoldData(name="X8", real_dim=8, spin=True, string=True,
                      pontryagin_numbers={(2,): -1440})
    fit = witten_fit(x8, 17)
    assert fit.coefficients == {(1, 0): Fraction(1)}
    assert fit.residual_ok and fit.first_mismatch is None


def test_fit_zero_series():
    fit = witten_fit(torus(8), 17)
    assert fit.coefficients == {(1, 0): Fraction(0)}
    assert fit.residual_ok


def test_fit_rejects_empty_monomial_basis():
    # weight 2 has no E4^i E6^j representation
    with pytest.raises(FitError):
        witten_fit(k3(), 17)


def test_modular_relation_passes():
    for entry, tau_im in ((k3(), 1.5), (k3(), 2.0), (hp2(), 1.5)):
        chk = modular_relation_check(entry, tau_im=tau_im)
        assert chk.passed and chk.abs_error < 1e-10
        assert chk.manifold == entry.name and chk.tau_im == tau_im


def test_modular_relation_relative_sides():
    chk = modular_relation_check(hp2(), tau_im=2.0)
    # both sides are genuinely nonzero; the agreement is not 0 == 0
    assert abs(chk.lhs) > 1e-6
    assert chk.abs_error < 1e-10 * abs(chk.lhs) + 1e-12


def test_modular_relation_refuses_small_tau():
    with pytest.raises(ConvergenceRisk):
        modular_relation_check(k3(), tau_im=1.0)
    with pytest.raises(ConvergenceRisk):
        modular_relation_check(k3(), tau_im=0.5)
