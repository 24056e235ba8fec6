"""Truncated power series over exact rationals and Lloyd's generating function.

The series counts C_p actions on surfaces with rho branch points of order p,
for an odd prime p. Its x^3 coefficient is the number of quasiplatonic
actions QC(p).
"""

from __future__ import annotations

import logging
from fractions import Fraction

from .numtheory import divisors, euler_phi, is_prime

log = logging.getLogger(__name__)


class PowerSeries:
    """Coefficients c_0..c_order; everything above ``order`` is unknown, not zero."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        if not coeffs:
            raise ValueError("a power series needs at least one coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def monomial(cls, coeff, degree: int, order: int) -> PowerSeries:
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c)

    def __getitem__(self, k: int) -> Fraction:
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1])])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            k = Fraction(other)
            return PowerSeries([k * c for c in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def reciprocal(self) -> PowerSeries:
        """1/f for f with nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / a[0]
        for k in range(1, self.order + 1):
            s = sum((a[i] * out[k - i] for i in range(1, k + 1)), Fraction(0))
            out[k] = -s / a[0]
        return PowerSeries(out)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __pow__(self, e: int) -> PowerSeries:
        if e < 0:
            return self.reciprocal() ** (-e)
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute_power(self, ell: int) -> PowerSeries:
        """f(x^ell), kept at the same truncation order."""
        if ell < 1:
            raise ValueError("substitution exponent must be >= 1")
        out = [Fraction(0)] * (self.order + 1)
        for k, c in enumerate(self.coeffs):
            if k * ell > self.order:
                break
            out[k * ell] = c
        return PowerSeries(out)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def _one_minus_x_power(ell: int, order: int) -> PowerSeries:
    """1 - x^ell."""
    return PowerSeries.one(order) - PowerSeries.monomial(1, ell, order)


def lloyd_series(p: int, order: int) -> PowerSeries:
    """Lloyd's generating function for C_p, truncated after x^order."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"lloyd_series needs an odd prime, got {p}")
    if order < 3:
        raise ValueError(f"order must be >= 3, got {order}")
    one_minus_x = _one_minus_x_power(1, order)
    inner = one_minus_x ** (-(p - 1)) + (p - 1) * one_minus_x / _one_minus_x_power(p, order)
    total = Fraction(1, p) * inner
    for ell in divisors(p - 1):
        if ell == 1:
            continue
        ell_dual = (p - 1) // ell
        term = (one_minus_x ** (-ell_dual)).substitute_power(ell)
        total = total + euler_phi(ell) * term
    series = Fraction(1, p - 1) * total
    low = [series[k] for k in range(3)]
    if any(low):
        log.info("p=%d: coefficients below x^3 are %s", p, [str(c) for c in low])
    return series


def lloyd_coefficient(p: int, rho: int) -> Fraction:
    if rho < 3:
        raise ValueError(f"rho must be >= 3, got {rho}")
    return lloyd_series(p, rho)[rho]
