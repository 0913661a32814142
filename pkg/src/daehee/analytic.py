"""High-precision check of the log-series connection between twisted Bernoulli
and plain Bernoulli polynomial values.

For xi > 0 with |ln xi| < 2*pi the truncated comparison is

    lhs         = xi^x * (B_{n,xi}(x) + ln(xi) * B_{n+1,xi}(x)/(n+1))
    rhs_partial = sum_{j=n}^{J} B_j(x) * ln(xi)^{j-n} / (j-n)!

All series terms are exact rationals from the sequence generators and are
converted to arbitrary-precision floats only at the final summation, so
rounding is confined to one accumulation.  The difference is reported, never
asserted: the tail converges factorially, and the magnitude of the last kept
term is included as the (heuristic) tail gauge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .families import bernoulli_at, twisted_bernoulli_at

MIN_PRECISION = 128


@dataclass(frozen=True)
class TruncationReport:
    n: int
    x: Fraction
    xi: Fraction
    J: int
    precision: int
    lhs: mpmath.mpf
    rhs_partial: mpmath.mpf
    abs_diff: mpmath.mpf
    last_term_magnitude: mpmath.mpf


def _to_mpf(value: Fraction) -> mpmath.mpf:
    value = Fraction(value)
    return mpmath.mpf(value.numerator) / mpmath.mpf(value.denominator)


def check_log_series(n: int, x, xi, J: int, precision: int = 256) -> TruncationReport:
    """Compare both sides at the given binary precision, truncating the sum at J."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    xi = Fraction(xi)
    if xi <= 0:
        raise ValueError("xi must be a positive rational")
    if J < n:
        raise ValueError(f"truncation index J must be at least n, got J={J}, n={n}")
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits")
    twisted = twisted_bernoulli_at(n + 1, xi, x)
    bern = bernoulli_at(J, x)
    with mpmath.workprec(precision):
        log_xi = mpmath.log(_to_mpf(xi))
        if abs(log_xi) >= 2 * mpmath.pi:
            raise ValueError("xi is outside the convergence bound |ln xi| < 2*pi")
        xi_pow_x = mpmath.exp(_to_mpf(x) * log_xi)
        lhs = xi_pow_x * (_to_mpf(twisted[n]) + log_xi * _to_mpf(twisted[n + 1]) / (n + 1))
        terms = [
            _to_mpf(bern[j]) * log_xi ** (j - n) / mpmath.factorial(j - n)
            for j in range(n, J + 1)
        ]
        rhs_partial = mpmath.fsum(terms)
        report = TruncationReport(
            n=n,
            x=x,
            xi=xi,
            J=J,
            precision=precision,
            lhs=lhs,
            rhs_partial=rhs_partial,
            abs_diff=abs(lhs - rhs_partial),
            last_term_magnitude=abs(terms[-1]),
        )
    return report
