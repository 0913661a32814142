"""Truncated power-series arithmetic: the generating-function oracle.

A Series stores ordinary coefficients c_0..c_N of a power series in t; the
exponential-generating-function coefficient a_n = n! * c_n is produced only by
``egf_coeffs``.  Coefficients live in one of two exact domains: Fraction
scalars, or Poly values in x (forced by factors such as (1+t)^x).  Binary
operations require both operands to share one truncation order and one domain;
nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinat import binom_general
from .polynomials import Poly

DEFAULT_ORDER = 64

RATIONAL = "rational"
POLY_IN_X = "poly-in-x"


def _coerce(value, domain):
    if domain == POLY_IN_X:
        return value if isinstance(value, Poly) else Poly.const(value)
    if isinstance(value, Poly):
        raise ValueError("polynomial coefficient in a rational-domain series")
    return Fraction(value)


def _invert_constant(c):
    """Inverse of a series constant term; fails unless the term is a nonzero scalar."""
    if isinstance(c, Poly):
        if not c.is_constant() or c.is_zero():
            raise ZeroDivisionError("series constant term is not invertible")
        return Poly.const(Fraction(1) / c.constant())
    if c == 0:
        raise ZeroDivisionError("series constant term is zero")
    return Fraction(1) / c


@dataclass(frozen=True)
class Series:
    """Power series truncated at t^order with exact coefficients c_0..c_order."""

    order: int
    coeffs: tuple
    domain: str = RATIONAL

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("a series carries exactly order+1 coefficients")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def from_coeffs(cls, coeffs, domain: str = RATIONAL) -> "Series":
        coeffs = tuple(_coerce(c, domain) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        return cls(len(coeffs) - 1, coeffs, domain)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER, domain: str = RATIONAL) -> "Series":
        return cls(order, (_coerce(0, domain),) * (order + 1), domain)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER, domain: str = RATIONAL) -> "Series":
        coeffs = (_coerce(1, domain),) + (_coerce(0, domain),) * order
        return cls(order, coeffs, domain)

    @classmethod
    def log1p_over_t(cls, order: int = DEFAULT_ORDER) -> "Series":
        """log(1+t)/t, with ordinary coefficients (-1)^n/(n+1)."""
        return cls(order, tuple(Fraction((-1) ** n, n + 1) for n in range(order + 1)))

    @classmethod
    def pow1p(cls, exponent, order: int = DEFAULT_ORDER) -> "Series":
        """(1+t)^exponent: c_i = binom_general(exponent, i).

        A Poly exponent (typically x) yields a poly-domain series.
        """
        domain = POLY_IN_X if isinstance(exponent, Poly) else RATIONAL
        coeffs = tuple(binom_general(exponent, i) for i in range(order + 1))
        return cls(order, coeffs, domain)

    @classmethod
    def exp_t(cls, multiplier=1, order: int = DEFAULT_ORDER) -> "Series":
        """e^{multiplier*t}: c_k = multiplier^k / k!."""
        domain = POLY_IN_X if isinstance(multiplier, Poly) else RATIONAL
        if domain == RATIONAL:
            multiplier = Fraction(multiplier)
        coeffs = tuple(multiplier ** k / factorial(k) for k in range(order + 1))
        return cls(order, coeffs, domain)

    # ------------------------------------------------------------------
    # ring operations

    def _require_same(self, other: "Series"):
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")
        if self.domain != other.domain:
            raise ValueError(f"series domain mismatch: {self.domain} vs {other.domain}")

    def _zero_value(self):
        return Poly.zero() if self.domain == POLY_IN_X else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same(other)
        coeffs = tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        return Series(self.order, coeffs, self.domain)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._require_same(other)
        coeffs = tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        return Series(self.order, coeffs, self.domain)

    def __neg__(self):
        return Series(self.order, tuple(-c for c in self.coeffs), self.domain)

    def __mul__(self, other):
        if isinstance(other, Series):
            self._require_same(other)
            out = []
            for k in range(self.order + 1):
                acc = self._zero_value()
                for i in range(k + 1):
                    acc = acc + self.coeffs[i] * other.coeffs[k - i]
                out.append(acc)
            return Series(self.order, tuple(out), self.domain)
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            return Series(self.order, tuple(c * scalar for c in self.coeffs), self.domain)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            self._require_same(other)
            inv0 = _invert_constant(other.coeffs[0])
            q = []
            for k in range(self.order + 1):
                acc = self.coeffs[k]
                for i in range(1, k + 1):
                    acc = acc - other.coeffs[i] * q[k - i]
                q.append(acc * inv0)
            return Series(self.order, tuple(q), self.domain)
        if isinstance(other, (int, Fraction)):
            scalar = Fraction(other)
            if scalar == 0:
                raise ZeroDivisionError("division of series by zero scalar")
            return Series(self.order, tuple(c / scalar for c in self.coeffs), self.domain)
        return NotImplemented

    # ------------------------------------------------------------------
    # structural operations

    def scale_t(self, xi) -> "Series":
        """Substitute t -> xi*t, i.e. c_k <- xi^k c_k."""
        xi = Fraction(xi)
        out = []
        power = Fraction(1)
        for c in self.coeffs:
            out.append(c * power)
            power *= xi
        return Series(self.order, tuple(out), self.domain)

    def shift_up(self) -> "Series":
        """Multiply by t; the order grows by one and nothing is lost."""
        return Series(self.order + 1, (self._zero_value(),) + self.coeffs, self.domain)

    def shift_down(self) -> "Series":
        """Divide by t; requires a vanishing constant term, order drops by one."""
        if self.order < 1:
            raise ValueError("cannot shift a constant series down")
        c0 = self.coeffs[0]
        if not (c0.is_zero() if isinstance(c0, Poly) else c0 == 0):
            raise ValueError("shift_down needs a zero constant term")
        return Series(self.order - 1, self.coeffs[1:], self.domain)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot truncate to a higher order")
        return Series(order, self.coeffs[: order + 1], self.domain)

    def lift_to_poly(self) -> "Series":
        """View a rational-domain series inside the poly domain."""
        if self.domain == POLY_IN_X:
            return self
        return Series(self.order, tuple(Poly.const(c) for c in self.coeffs), POLY_IN_X)

    def egf_coeffs(self) -> tuple:
        """Exponential-generating-function coefficients a_n = n! * c_n."""
        return tuple(c * factorial(n) for n, c in enumerate(self.coeffs))
