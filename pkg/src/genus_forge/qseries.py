"""Truncated q-series with exact rational coefficients.

A QSeries stores finitely many terms c_n * q^(n/2) with c_n exact
rationals.  Exponents are kept on a half-integer grid: the stored key n
means q^(n/2), so integer q-powers sit at even keys and the half powers
that theta products produce sit at odd keys.  `trunc` is the hard
cutoff: only keys 0 <= n < trunc are representable, and no operation
ever fabricates a coefficient at or beyond it.

Coefficients equal to zero are never stored, so equality of the
coefficient dict is canonical equality of the series.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterator, Mapping, Union

from .errors import (
    DivergentEvaluation,
    NonNilpotentExp,
    NonUnitDivisor,
    NonUnitLog,
    TruncMismatch,
)

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


class QSeries:
    """Truncated series in q^(1/2) over the exact rationals."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs: Mapping[int, Scalar], trunc: int):
        if not isinstance(trunc, int) or trunc <= 0:
            raise ValueError("trunc must be a positive integer")
        clean: dict[int, Fraction] = {}
        for n, c in coeffs.items():
            if not isinstance(n, int) or n < 0:
                raise ValueError(f"exponent key {n!r} not a nonnegative integer")
            if n >= trunc:
                raise ValueError(f"exponent {n} not below truncation {trunc}")
            c = _as_fraction(c)
            if c:
                clean[n] = c
        self.coeffs = clean
        self.trunc = trunc

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls({}, trunc)

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls({0: 1}, trunc)

    @classmethod
    def constant(cls, c: Scalar, trunc: int) -> "QSeries":
        return cls({0: c}, trunc)

    @classmethod
    def q_power(cls, half_exponent: int, trunc: int, coeff: Scalar = 1) -> "QSeries":
        """The monomial coeff * q^(half_exponent/2)."""
        return cls({half_exponent: coeff}, trunc)

    # -- inspection --------------------------------------------------------

    def coeff(self, half_exponent: int) -> Fraction:
        """Coefficient of q^(half_exponent/2); raises past the truncation."""
        if half_exponent >= self.trunc:
            raise ValueError(
                f"coefficient at half-exponent {half_exponent} is not stored "
                f"(truncation {self.trunc})"
            )
        return self.coeffs.get(half_exponent, _ZERO)

    def qcoeff(self, power: Fraction | int) -> Fraction:
        """Coefficient of q^power for an integer or half-integer power."""
        n = Fraction(power) * 2
        if n.denominator != 1:
            raise ValueError(f"power {power} is not on the half-integer grid")
        return self.coeff(int(n))

    def terms(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def integer_powers_only(self) -> bool:
        return all(n % 2 == 0 for n in self.coeffs)

    def valuation(self) -> int | None:
        """Smallest stored half-exponent, or None for the zero series."""
        return min(self.coeffs) if self.coeffs else None

    def is_constant(self) -> bool:
        return not any(n for n in self.coeffs)

    def constant_term(self) -> Fraction:
        return self.coeffs.get(0, _ZERO)

    # -- canonical form / comparison ----------------------------------------

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QSeries):
            return self.trunc == other.trunc and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            if not other:
                return not self.coeffs
            return self.coeffs == {0: other}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QSeries({self!s}; trunc={self.trunc})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in self.terms():
            mag = -c if c < 0 else c
            if n == 0:
                body = str(mag)
            else:
                if n % 2 == 0:
                    power = "q" if n == 2 else f"q^{n // 2}"
                else:
                    power = f"q^({Fraction(n, 2)})"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    # -- helpers --------------------------------------------------------------

    def _check_same_trunc(self, other: "QSeries") -> None:
        if self.trunc != other.trunc:
            raise TruncMismatch(
                f"truncation orders differ: {self.trunc} vs {other.trunc}"
            )

    def truncate(self, trunc: int) -> "QSeries":
        """Restrict to a lower truncation order."""
        if trunc > self.trunc:
            raise TruncMismatch(
                f"cannot extend truncation {self.trunc} to {trunc}"
            )
        return QSeries({n: c for n, c in self.coeffs.items() if n < trunc}, trunc)

    def shift(self, half_exponents: int) -> "QSeries":
        """Multiply by q^(half_exponents/2); negative shifts must not
        create negative exponents."""
        out: dict[int, Fraction] = {}
        for n, c in self.coeffs.items():
            m = n + half_exponents
            if m < 0:
                raise ValueError(f"shift by {half_exponents} makes exponent {m} negative")
            if m < self.trunc:
                out[m] = c
        return QSeries(out, self.trunc)

    # -- ring operations ---------------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries({n: -c for n, c in self.coeffs.items()}, self.trunc)

    def __add__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_same_trunc(other)
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            s = out.get(n, _ZERO) + c
            if s:
                out[n] = s
            else:
                out.pop(n, None)
        return QSeries(out, self.trunc)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return QSeries.zero(self.trunc)
            return QSeries({n: a * c for n, a in self.coeffs.items()}, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_same_trunc(other)
        out: dict[int, Fraction] = {}
        bounds = sorted(other.coeffs.items())
        for n, a in sorted(self.coeffs.items()):
            limit = self.trunc - n
            for m, b in bounds:
                if m >= limit:
                    break
                k = n + m
                s = out.get(k, _ZERO) + a * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return QSeries(out, self.trunc)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                raise ZeroDivisionError("division of series by zero scalar")
            return QSeries({n: a / c for n, a in self.coeffs.items()}, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_same_trunc(other)
        b0 = other.constant_term()
        if not b0:
            raise NonUnitDivisor("divisor has zero constant term")
        # back substitution: c_n = (a_n - sum_{k>=1} b_k c_{n-k}) / b_0
        out: dict[int, Fraction] = {}
        bterms = sorted((n, c) for n, c in other.coeffs.items() if n > 0)
        for n in range(self.trunc):
            acc = self.coeffs.get(n, _ZERO)
            for m, b in bterms:
                if m > n:
                    break
                ck = out.get(n - m)
                if ck:
                    acc -= b * ck
            if acc:
                out[n] = acc / b0
        return QSeries(out, self.trunc)

    def __rtruediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries.constant(other, self.trunc) / self
        return NotImplemented

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (QSeries.one(self.trunc) / self) ** (-k)
        result = QSeries.one(self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base_needed = k >> 1
            if base_needed:
                base = base * base
            k = base_needed
        return result

    # -- transcendental operations --------------------------------------------

    def log(self) -> "QSeries":
        """Series logarithm; requires constant term exactly 1."""
        if self.constant_term() != 1:
            raise NonUnitLog("log needs constant term 1")
        T = self.trunc
        a = self.coeffs
        out: dict[int, Fraction] = {}
        # l_n = a_n - (1/n) sum_{k=1}^{n-1} k l_k a_{n-k}
        for n in range(1, T):
            acc = a.get(n, _ZERO)
            corr = _ZERO
            for k, lk in out.items():
                ank = a.get(n - k)
                if ank:
                    corr += k * lk * ank
            if corr:
                acc -= Fraction(corr, n)
            if acc:
                out[n] = acc
        return QSeries(out, T)

    def exp(self) -> "QSeries":
        """Series exponential; requires constant term 0."""
        if self.constant_term():
            raise NonNilpotentExp("exp needs zero constant term")
        T = self.trunc
        a = sorted(self.coeffs.items())
        out: dict[int, Fraction] = {0: Fraction(1)}
        # e_n = (1/n) sum_{k=1}^{n} k a_k e_{n-k}
        for n in range(1, T):
            acc = _ZERO
            for k, ak in a:
                if k > n:
                    break
                enk = out.get(n - k)
                if enk:
                    acc += k * ak * enk
            if acc:
                out[n] = Fraction(acc, n)
        return QSeries(out, T)

    # -- numeric evaluation ------------------------------------------------------

    def eval_at(self, q: complex) -> complex:
        """Evaluate the truncated series at a numeric q with |q| < 1.

        Half powers use the principal branch of the square root.
        """
        q = complex(q)
        if abs(q) >= 1.0:
            raise DivergentEvaluation(f"|q| = {abs(q)} is not below 1")
        s = cmath.sqrt(q)
        total = 0j
        for n, c in sorted(self.coeffs.items(), reverse=True):
            total += float(c) * s**n
        return total
