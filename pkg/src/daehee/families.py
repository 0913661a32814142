"""Number and polynomial families and their generators.

Each family here can be produced two independent ways: a closed form or
recurrence on one side, and extraction from its generating function through the
series engine on the other.  Tests and the identity catalog lean on that
redundancy, so the routes are deliberately kept separate:

* first-kind Daehee:   log(1+t)/t * (1+t)^x          closed form (-1)^n n!/(n+1)
* second-kind Daehee:  (1+t)log(1+t)/t * (1+t)^(-x)  closed form (-1)^(n-1) n!/(n(n+1))
* Bernoulli, order a:  (t/(e^t-1))^a * e^{xt}
* Norlund second kind: (1-e^{-t})/t                  closed form (-1)^n/(n+1)
* lambda deformation:  lam*log(1+t)/((1+t)^lam - 1) * (1+t)^x   (kind 2 carries an
  extra (1+t)^lam factor, equivalent to the Stirling-1 transform of
  lam^l B_l(1 + x/lam))
* twist by xi:         substitute t -> xi*t in the matching plain family
* twisted Bernoulli:   t*e^{xt}/(xi*e^t - 1)

All values are exact rationals or polynomials over rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinat import binom_general, falling_factorial
from .polynomials import Poly
from .reports import IdentityReport
from .series import POLY_IN_X, RATIONAL, Series


@dataclass(frozen=True)
class SequenceTable:
    """Exact values of one number family, index n = 0..N."""

    family: str
    params: dict
    values: tuple

    @property
    def order(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class PolynomialTable:
    """Exact polynomial values of one family, index n = 0..N."""

    family: str
    params: dict
    values: tuple

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def eval_at(self, x0) -> SequenceTable:
        """Specialize every entry at a rational point."""
        x0 = Fraction(x0)
        params = dict(self.params)
        params["x"] = x0
        return SequenceTable(self.family, params, tuple(p(x0) for p in self.values))


@dataclass(frozen=True)
class StirlingTriangles:
    """Signed first-kind and second-kind triangles with rows/columns 0..order."""

    order: int
    s1: tuple
    s2: tuple


def _check_kind(kind: int):
    if kind not in (1, 2):
        raise ValueError(f"kind must be 1 or 2, got {kind!r}")


def _check_xi(xi) -> Fraction:
    xi = Fraction(xi)
    if xi == 0:
        raise ValueError("xi must be nonzero")
    return xi


def _int_pow(series: Series, exponent: int) -> Series:
    result = Series.one(series.order, series.domain)
    base = series
    e = exponent
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


# ---------------------------------------------------------------------------
# Bernoulli family

@lru_cache(maxsize=None)
def _bernoulli_series(order: int) -> Series:
    """t/(e^t - 1) as a rational-domain series."""
    expm1_over_t = (Series.exp_t(1, order + 1) - Series.one(order + 1)).shift_down()
    return Series.one(order) / expm1_over_t


@lru_cache(maxsize=None)
def bernoulli_numbers(order: int) -> tuple:
    """B_0..B_order via exact series division."""
    return _bernoulli_series(order).egf_coeffs()


@lru_cache(maxsize=None)
def bernoulli_polys(order: int) -> tuple:
    """B_n(x) for n = 0..order as Poly values."""
    series = _bernoulli_series(order).lift_to_poly() * Series.exp_t(Poly.x(), order)
    return series.egf_coeffs()


@lru_cache(maxsize=None)
def bernoulli_at(order: int, x0) -> tuple:
    """B_n(x0) for rational x0, computed in the rational domain (fast path)."""
    x0 = Fraction(x0)
    series = _bernoulli_series(order) * Series.exp_t(x0, order)
    return series.egf_coeffs()


def gen_bernoulli(order: int, alpha: int = 1, symbolic_x: bool = False):
    """Bernoulli family of integer order alpha: EGF (t/(e^t-1))^alpha e^{xt}.

    Negative alpha uses ((e^t-1)/t)^(-alpha).  Returns a SequenceTable of
    numbers (x=0) unless symbolic_x is set, then a PolynomialTable.
    """
    if alpha >= 0:
        base = _int_pow(_bernoulli_series(order), alpha)
    else:
        expm1_over_t = (Series.exp_t(1, order + 1) - Series.one(order + 1)).shift_down()
        base = _int_pow(expm1_over_t, -alpha)
    if symbolic_x:
        series = base.lift_to_poly() * Series.exp_t(Poly.x(), order)
        return PolynomialTable("bernoulli", {"alpha": alpha}, series.egf_coeffs())
    return SequenceTable("bernoulli", {"alpha": alpha}, base.egf_coeffs())


# ---------------------------------------------------------------------------
# Daehee family, both kinds

def daehee1_series(order: int) -> Series:
    return Series.log1p_over_t(order)


@lru_cache(maxsize=None)
def daehee2_series(order: int) -> Series:
    """(1+t) log(1+t)/t."""
    return Series.pow1p(Fraction(1), order) * Series.log1p_over_t(order)


@lru_cache(maxsize=None)
def gen_daehee1(order: int) -> SequenceTable:
    """First-kind Daehee numbers by the closed form (-1)^n n!/(n+1)."""
    values = tuple(Fraction((-1) ** n * factorial(n), n + 1) for n in range(order + 1))
    return SequenceTable("daehee1", {}, values)


@lru_cache(maxsize=None)
def gen_daehee2(order: int) -> SequenceTable:
    """Second-kind Daehee numbers: 1 at n=0, then (-1)^(n-1) n!/(n(n+1))."""
    values = [Fraction(1)]
    for n in range(1, order + 1):
        values.append(Fraction((-1) ** (n - 1) * factorial(n), n * (n + 1)))
    return SequenceTable("daehee2", {}, tuple(values))


def gen_norlund2(order: int) -> SequenceTable:
    """Norlund second-kind numbers (-1)^n/(n+1); n! times them gives gen_daehee1."""
    values = tuple(Fraction((-1) ** n, n + 1) for n in range(order + 1))
    return SequenceTable("norlund", {}, values)


def norlund2_series(order: int) -> Series:
    """(1 - e^{-t})/t, the EGF of the Norlund second-kind numbers."""
    return (Series.one(order + 1) - Series.exp_t(-1, order + 1)).shift_down()


@lru_cache(maxsize=None)
def _daehee_poly_series(order: int, kind: int) -> Series:
    _check_kind(kind)
    base = daehee1_series(order) if kind == 1 else daehee2_series(order)
    exponent = Poly.x() if kind == 1 else -Poly.x()
    return base.lift_to_poly() * Series.pow1p(exponent, order)


@lru_cache(maxsize=None)
def gen_daehee_poly(order: int, kind: int = 1) -> PolynomialTable:
    """Daehee polynomials of the requested kind via the generating function."""
    values = _daehee_poly_series(order, kind).egf_coeffs()
    return PolynomialTable("daehee1" if kind == 1 else "daehee2", {}, values)


def daehee_at_int(n: int, k: int) -> Fraction:
    """D_n(k) for integers 0 <= k <= n via the binomial/Stirling-1 double sum in
    powers of n; tests pin it against direct polynomial evaluation."""
    if not 0 <= k <= n:
        raise ValueError(f"daehee_at_int needs 0 <= k <= n, got n={n}, k={k}")
    dvals = gen_daehee1(n).values
    s1 = gen_stirling(k).s1
    total = Fraction(0)
    for l in range(k + 1):
        inner = sum(comb(k, i) * s1[i][l] * dvals[n - i] for i in range(l, k + 1))
        total += inner * Fraction(n) ** l
    return total


def shift_identity_check(order: int) -> IdentityReport:
    """Exact polynomial check of D_n(x+1) = D_n(x) + n D_{n-1}(x) for n = 1..order,
    together with its mirrored variant at x -> -x."""
    if order < 1:
        raise ValueError("shift_identity_check needs order >= 1")
    polys = gen_daehee_poly(order, 1).values
    x = Poly.x()
    lhs, rhs = [], []
    for n in range(1, order + 1):
        lhs.append(polys[n](x + 1))
        rhs.append(polys[n] + n * polys[n - 1])
    for n in range(1, order + 1):
        lhs.append(polys[n](1 - x))
        rhs.append(polys[n](-x) + n * polys[n - 1](-x))
    return IdentityReport.build("daehee-shift", {"N": order}, lhs, rhs)


# ---------------------------------------------------------------------------
# Stirling triangles

@lru_cache(maxsize=None)
def gen_stirling(order: int) -> StirlingTriangles:
    """Signed first-kind rows from falling factorials; second kind by recurrence."""
    size = order + 1
    s1 = []
    for n in range(size):
        row_poly = falling_factorial(n)
        s1.append(tuple(int(row_poly.coefficient(l)) for l in range(size)))
    s2 = [[0] * size for _ in range(size)]
    s2[0][0] = 1
    for n in range(1, size):
        for k in range(1, n + 1):
            s2[n][k] = k * s2[n - 1][k] + s2[n - 1][k - 1]
    return StirlingTriangles(order, tuple(s1), tuple(tuple(row) for row in s2))


def stirling2_column_series(m: int, order: int) -> Series:
    """(e^t - 1)^m / m!, whose EGF coefficients form column m of the second kind."""
    base = Series.exp_t(1, order) - Series.one(order)
    return _int_pow(base, m) / factorial(m)


# ---------------------------------------------------------------------------
# lambda deformation

@lru_cache(maxsize=None)
def _lambda_daehee_base(order: int, lam: Fraction, kind: int) -> Series:
    """Number-level generating series of the lambda deformation (rational domain)."""
    _check_kind(kind)
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    den = (Series.pow1p(lam, order + 1) - Series.one(order + 1)).shift_down()
    base = (Series.log1p_over_t(order) * lam) / den
    if kind == 2:
        base = base * Series.pow1p(lam, order)
    return base


@lru_cache(maxsize=None)
def gen_lambda_daehee(order: int, lam, kind: int = 1) -> PolynomialTable:
    """Lambda-Daehee polynomials via the generating-function route (any rational
    lambda != 0); kind 1 reduces to gen_daehee_poly at lambda = 1."""
    lam = Fraction(lam)
    base = _lambda_daehee_base(order, lam, kind)
    series = base.lift_to_poly() * Series.pow1p(Poly.x(), order)
    family = "lambda-daehee1" if kind == 1 else "lambda-daehee2"
    return PolynomialTable(family, {"lambda": lam}, series.egf_coeffs())


def lambda_daehee_numbers(order: int, lam, kind: int = 1) -> SequenceTable:
    lam = Fraction(lam)
    base = _lambda_daehee_base(order, lam, kind)
    family = "lambda-daehee1" if kind == 1 else "lambda-daehee2"
    return SequenceTable(family, {"lambda": lam}, base.egf_coeffs())


def _compositions(total: int, parts: int, cap: int):
    """Ordered tuples of `parts` integers in [1, cap] summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, min(total - parts + 1, cap) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def lambda_composition(m: int, lam, x=None):
    """D_{m,lam}(lam*x) by brute-force enumeration of compositions of m.

    Sums D_n(x)/n! times a product of binomials binom(lam, i_j) over all ordered
    tuples (i_1..i_n) of positive integers with i_1+..+i_n = m, then scales by m!.
    Requires a positive integer lam (parts above lam carry a zero binomial and
    are skipped).  x may be a Fraction (default 0) or a Poly for a symbolic
    result.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    lam = Fraction(lam)
    if lam.denominator != 1 or lam < 1:
        raise ValueError("lambda must be a positive integer for the composition sum")
    cap = int(lam)
    if x is None:
        x = Fraction(0)
    dvals = [p(x) for p in gen_daehee_poly(m, 1).values]
    total = dvals[0] * 0
    for n in range(m + 1):
        for comp in _compositions(m, n, cap):
            weight = Fraction(1)
            for part in comp:
                weight *= binom_general(lam, part)
            total = total + dvals[n] * weight / factorial(n)
    return total * factorial(m)


# ---------------------------------------------------------------------------
# twisted families

@lru_cache(maxsize=None)
def gen_twisted_daehee(order: int, xi, kind: int = 1) -> PolynomialTable:
    """Twisted Daehee polynomials via the rescaled generating function t -> xi*t."""
    _check_kind(kind)
    xi = _check_xi(xi)
    series = _daehee_poly_series(order, kind).scale_t(xi)
    family = "twisted-daehee1" if kind == 1 else "twisted-daehee2"
    return PolynomialTable(family, {"xi": xi}, series.egf_coeffs())


def twisted_daehee_numbers(order: int, xi, kind: int = 1) -> SequenceTable:
    _check_kind(kind)
    xi = _check_xi(xi)
    base = daehee1_series(order) if kind == 1 else daehee2_series(order)
    family = "twisted-daehee1" if kind == 1 else "twisted-daehee2"
    return SequenceTable(family, {"xi": xi}, base.scale_t(xi).egf_coeffs())


@lru_cache(maxsize=None)
def _twisted_bernoulli_series(order: int, xi: Fraction, x_value) -> Series:
    """t e^{xt}/(xi e^t - 1) with x bound to x_value (a Fraction or the Poly x).

    At xi = 1 the quotient normalizes through (e^t-1)/t; away from 1 the
    denominator has the invertible constant term xi - 1 and divides directly.
    """
    if xi == 1:
        base = _bernoulli_series(order)
        if isinstance(x_value, Poly):
            return base.lift_to_poly() * Series.exp_t(x_value, order)
        if x_value == 0:
            return base
        return base * Series.exp_t(x_value, order)
    domain = POLY_IN_X if isinstance(x_value, Poly) else RATIONAL
    if order == 0:
        num = Series.zero(0, domain)
    else:
        num = Series.exp_t(x_value, order - 1).shift_up()
    den = Series.exp_t(1, order) * xi - Series.one(order)
    if domain == POLY_IN_X:
        den = den.lift_to_poly()
    return num / den


@lru_cache(maxsize=None)
def gen_twisted_bernoulli(order: int, xi) -> PolynomialTable:
    """Twisted Bernoulli polynomials: EGF t e^{xt}/(xi e^t - 1).

    At xi = 1 these are the Bernoulli polynomials; otherwise entry 0 is the zero
    polynomial and the n=1 number equals 1/(xi-1).
    """
    xi = _check_xi(xi)
    series = _twisted_bernoulli_series(order, xi, Poly.x())
    return PolynomialTable("twisted-bernoulli", {"xi": xi}, series.egf_coeffs())


def twisted_bernoulli_numbers(order: int, xi) -> SequenceTable:
    xi = _check_xi(xi)
    series = _twisted_bernoulli_series(order, xi, Fraction(0))
    return SequenceTable("twisted-bernoulli", {"xi": xi}, series.egf_coeffs())


@lru_cache(maxsize=None)
def twisted_bernoulli_at(order: int, xi, x0) -> tuple:
    """B_{n,xi}(x0) for rational x0, computed in the rational domain."""
    xi = _check_xi(xi)
    series = _twisted_bernoulli_series(order, xi, Fraction(x0))
    return series.egf_coeffs()
