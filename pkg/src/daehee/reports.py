"""Report containers for exact identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly


def entry_is_zero(value) -> bool:
    return value.is_zero() if isinstance(value, Poly) else value == 0


@dataclass(frozen=True)
class IdentityReport:
    """Two independently computed sides of one identity plus their difference."""

    identity: str
    params: dict
    lhs: tuple
    rhs: tuple
    residual: tuple

    @classmethod
    def build(cls, identity: str, params: dict, lhs, rhs) -> "IdentityReport":
        lhs, rhs = tuple(lhs), tuple(rhs)
        if len(lhs) != len(rhs):
            raise ValueError("both sides of an identity report must have equal length")
        residual = tuple(a - b for a, b in zip(lhs, rhs))
        return cls(identity, dict(params), lhs, rhs, residual)

    @property
    def verdict(self) -> bool:
        """True exactly when every residual entry is zero."""
        return all(entry_is_zero(r) for r in self.residual)
