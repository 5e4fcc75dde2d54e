"""Multiplicative sequences and the classical genera they evaluate.

Given a factor series Q with Q(0) = 1, the multiplicative class of a
bundle with formal roots y_1, ..., y_N is prod_j Q(y_j) rewritten in the
elementary symmetric functions of the roots: Pontryagin classes are the
elementary symmetric functions of the y_j^2, Chern classes those of the
roots themselves.  The rewrite goes through log Q, power sums and the
Newton identities, then a graded exponential; with at least weight_cap
roots the answer does not depend on the root count.

All root variables are normalized so that the Ahat factor is
(y/2)/sinh(y/2); the signature factor is then y/tanh(y) and the big-L
factor y/tanh(y/2).  The big-L factor has constant term 2, which the
genus evaluation compensates with a factor 2 per root; the resulting
value equals the signature, and that equality is kept under test rather
than normalized away.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .charpoly import CharClassPoly, partition_to_monomial
from .errors import (
    DimensionError,
    InsufficientData,
    NonUnitLog,
    ParityError,
)
from .manifolds import GenusKind, ManifoldData, partitions_of
from .qseries import QSeries

_LABELS = {"pontryagin": "p", "chern": "c"}


def _series_coeffs(factor) -> Mapping[int, object]:
    coeffs = getattr(factor, "coeffs", factor)
    if not isinstance(coeffs, Mapping):
        raise TypeError("factor must be a series object or a power->coeff mapping")
    return coeffs


def _graded_log(coeffs: Mapping[int, object], cap: int) -> dict[int, object]:
    """log of 1 + sum a_n u^n through u^cap, over any exact coefficient ring.

    l_n = a_n - (1/n) sum_{k<n} k l_k a_{n-k}; only scalar rational
    multiplications are needed, so QSeries coefficients work unchanged.
    """
    out: dict[int, object] = {}
    for n in range(1, cap + 1):
        acc = coeffs.get(n)
        corr = None
        for k, lk in out.items():
            ank = coeffs.get(n - k)
            if ank is None or not ank:
                continue
            term = (lk * ank) * k
            corr = term if corr is None else corr + term
        if corr is not None:
            corr = corr * Fraction(1, n)
            acc = -corr if acc is None else acc - corr
        if acc is not None and acc:
            out[n] = acc
    return out


def _power_sums(label: str, cap: int, n_roots: int, one) -> list[CharClassPoly]:
    """Power sums P_1..P_cap in the generators via the Newton identities.

    e_i vanishes for i > n_roots; with n_roots >= cap every e_i through
    the cap survives and the result is root-count independent.
    """
    e = [None] * (cap + 1)
    for i in range(1, cap + 1):
        if i <= n_roots:
            e[i] = CharClassPoly.generator(label, cap, i, one)
    zero = CharClassPoly.zero(label, cap)
    p: list[CharClassPoly] = [zero]
    for k in range(1, cap + 1):
        acc = e[k].scale(Fraction((-1) ** (k - 1) * k)) if e[k] is not None else zero
        for i in range(1, k):
            if e[i] is None:
                continue
            term = e[i] * p[k - i]
            acc = acc + term.scale(Fraction((-1) ** (i - 1)))
        p.append(acc)
    return p


def multiplicative_class(
    factor,
    kind: str,
    weight_cap: int,
    n_roots: int | None = None,
) -> CharClassPoly:
    """prod over roots of Q(root), expanded in Pontryagin or Chern classes.

    `factor` is a one-variable series with constant term 1: a QSeries on
    the integer power grid, a CharSeries, or a plain power->coefficient
    mapping.  For the Pontryagin kind the factor must be even in its
    variable, and powers are halved so u = y^2 carries weight 1.
    """
    if kind not in _LABELS:
        raise ValueError(f"kind must be one of {sorted(_LABELS)}, got {kind!r}")
    coeffs = _series_coeffs(factor)
    c0 = coeffs.get(0)
    if c0 is None or c0 != 1:
        raise NonUnitLog("factor series must have constant term 1")
    if kind == "pontryagin":
        if any(n % 2 for n, c in coeffs.items() if c):
            raise ParityError("Pontryagin-type factor must be even in its variable")
        u_coeffs = {n // 2: c for n, c in coeffs.items() if n > 0 and c}
    else:
        u_coeffs = {n: c for n, c in coeffs.items() if n > 0 and c}

    if n_roots is None:
        n_roots = 2 * weight_cap
    if n_roots < 1:
        raise ValueError("n_roots must be positive")

    label = _LABELS[kind]
    if weight_cap == 0:
        return CharClassPoly.constant(label, 0, c0)

    logs = _graded_log(u_coeffs, weight_cap)
    psums = _power_sums(label, weight_cap, n_roots, c0)

    total = CharClassPoly.zero(label, weight_cap)
    for k, lk in logs.items():
        total = total + psums[k].scale(lk)

    result = CharClassPoly.constant(label, weight_cap, c0)
    term = result
    for j in range(1, weight_cap + 1):
        term = term * total
        if not term:
            break
        result = result + term.scale(Fraction(1, factorial(j)))
    return result


def paired_value(poly: CharClassPoly, numbers: Mapping, weight: int, zero):
    """Pair the weight-`weight` part of a class with characteristic numbers."""
    total = zero
    for lam in partitions_of(weight):
        coeff = poly.coeff(partition_to_monomial(lam, poly.weight_cap))
        if not coeff:
            continue
        num = numbers.get(lam, 0)
        if num:
            total = total + coeff * num
    return total


# -- factor series of the classical genera ------------------------------------
#
# Builders return QSeries on the *integer* power grid (key = power of the
# root variable); the q^(1/2) reading of QSeries keys plays no role here,
# only the exact ring structure does.


def _cosh_series(y_cap: int, half: bool) -> QSeries:
    trunc = y_cap + 1
    scale = 4 if half else 1
    return QSeries(
        {2 * t: Fraction(1, scale**t * factorial(2 * t)) for t in range(0, trunc // 2 + 1) if 2 * t < trunc},
        trunc,
    )


def _sinh_over_arg(y_cap: int, half: bool) -> QSeries:
    # sinh(y)/y, or sinh(y/2)/(y/2) when half is set
    trunc = y_cap + 1
    scale = 4 if half else 1
    return QSeries(
        {2 * t: Fraction(1, scale**t * factorial(2 * t + 1)) for t in range(0, trunc // 2 + 1) if 2 * t < trunc},
        trunc,
    )


def ahat_factor(y_cap: int) -> QSeries:
    """(y/2)/sinh(y/2)."""
    return 1 / _sinh_over_arg(y_cap, half=True)


def signature_factor(y_cap: int) -> QSeries:
    """y/tanh(y)."""
    return _cosh_series(y_cap, half=False) / _sinh_over_arg(y_cap, half=False)


def lhat_factor(y_cap: int) -> QSeries:
    """y/tanh(y/2); note the constant term 2."""
    return 2 * _cosh_series(y_cap, half=True) / _sinh_over_arg(y_cap, half=True)


def todd_factor(z_cap: int) -> QSeries:
    """z/(1 - exp(-z))."""
    trunc = z_cap + 2
    em = QSeries({1: -1}, trunc).exp()
    return (1 / ((1 - em).shift(-1))).truncate(z_cap + 1)


def genus_class(kind: GenusKind, weight_cap: int) -> tuple[CharClassPoly, Fraction]:
    """The multiplicative class of a genus and its per-root constant.

    The genus of a 4m-manifold is const^(2m) times the pairing of the
    class with the Pontryagin numbers (const is 1 except for the big-L
    factor, whose constant term 2 is divided out before expanding).
    """
    if kind == GenusKind.TODD:
        return multiplicative_class(todd_factor(weight_cap), "chern", weight_cap), Fraction(1)
    builders = {
        GenusKind.AHAT: ahat_factor,
        GenusKind.LHAT: lhat_factor,
        GenusKind.SIGNATURE: signature_factor,
    }
    factor = builders[kind](2 * weight_cap)
    const = factor.constant_term()
    if const != 1:
        factor = factor / const
    return multiplicative_class(factor, "pontryagin", weight_cap), const


def genus_value(m: ManifoldData, kind: GenusKind) -> Fraction:
    """Evaluate a classical genus on a manifold, exactly.

    Falls back to an asserted value when no characteristic numbers are
    stored; `genus_source` reports which route was taken.
    """
    kind = GenusKind(kind)
    if kind == GenusKind.TODD:
        if m.chern_numbers is not None:
            n = m.complex_dim
            poly, _ = genus_class(kind, n)
            return paired_value(poly, m.chern_numbers, n, Fraction(0))
        return _asserted(m, kind)

    if m.real_dim % 4:
        raise DimensionError(
            f"{m.name}: {kind.value} genus needs dimension divisible by 4, "
            f"got {m.real_dim}"
        )
    try:
        numbers = m.pontryagin_or_converted()
    except InsufficientData:
        return _asserted(m, kind)
    mm = m.real_dim // 4
    poly, const = genus_class(kind, mm)
    value = paired_value(poly, numbers, mm, Fraction(0))
    return value * const ** (2 * mm)


def genus_source(m: ManifoldData, kind: GenusKind) -> str:
    """'computed' when full data drives the genus, 'asserted' otherwise."""
    kind = GenusKind(kind)
    if kind == GenusKind.TODD:
        return "computed" if m.chern_numbers is not None else "asserted"
    return "computed" if (m.has_pontryagin() or m.has_chern()) else "asserted"


def _asserted(m: ManifoldData, kind: GenusKind) -> Fraction:
    if m.asserted_genera and kind.value in m.asserted_genera:
        return m.asserted_genera[kind.value]
    raise InsufficientData(
        f"{m.name}: no data to evaluate the {kind.value} genus"
    )


def hypersurface_todd(n: int, degree: int) -> Fraction:
    """Todd genus of a degree-D hypersurface pattern in dimension n.

    Expands (1 - exp(-d))/d with d nilpotent of order n+1 and pairs the
    top coefficient with D; the closed form (-1)^n D/(n+1)! is kept as a
    test oracle, not used here.
    """
    if n < 1:
        raise DimensionError(f"hypersurface dimension {n} must be >= 1")
    trunc = n + 2
    em = QSeries({1: -1}, trunc).exp()
    series = (1 - em).shift(-1)
    return series.coeff(n) * degree
