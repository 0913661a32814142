"""Exact lower-triangular/diagonal matrix algebra and the named matrix builders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .families import gen_stirling


@dataclass(frozen=True)
class TriMatrix:
    """Lower-triangular square matrix; rows[i] holds the i+1 entries up to the diagonal."""

    rows: tuple

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j] if j <= i else Fraction(0)


@dataclass(frozen=True)
class DiagMatrix:
    diag: tuple

    @property
    def size(self) -> int:
        return len(self.diag)

    def entry(self, i: int, j: int):
        return self.diag[i] if i == j else Fraction(0)


@dataclass(frozen=True)
class ColumnVec:
    entries: tuple

    @property
    def size(self) -> int:
        return len(self.entries)


def identity_matrix(size: int) -> TriMatrix:
    return TriMatrix(tuple(tuple(1 if i == j else 0 for j in range(i + 1)) for i in range(size)))


def build_pascal(size: int) -> TriMatrix:
    """Lower-triangular Pascal matrix with entries C(i, j)."""
    if size < 1:
        raise ValueError("matrix size must be at least 1")
    return TriMatrix(tuple(tuple(comb(i, j) for j in range(i + 1)) for i in range(size)))


def build_stirling_matrix(kind: int, size: int) -> TriMatrix:
    """Triangular Stirling matrix: signed first kind, or second kind."""
    if kind not in (1, 2):
        raise ValueError(f"kind must be 1 or 2, got {kind!r}")
    if size < 1:
        raise ValueError("matrix size must be at least 1")
    tri = gen_stirling(size - 1)
    table = tri.s1 if kind == 1 else tri.s2
    return TriMatrix(tuple(tuple(table[i][j] for j in range(i + 1)) for i in range(size)))


def build_diag(kind: str, param, size: int) -> DiagMatrix:
    """Diagonal matrix of parameter powers, inverse powers, or alternating signs."""
    if size < 1:
        raise ValueError("matrix size must be at least 1")
    if kind == "alt":
        return DiagMatrix(tuple(Fraction((-1) ** i) for i in range(size)))
    if kind in ("lambda", "xi"):
        param = Fraction(param)
        return DiagMatrix(tuple(param ** i for i in range(size)))
    if kind == "xi-inverse":
        param = Fraction(param)
        if param == 0:
            raise ValueError("inverse powers need a nonzero parameter")
        inv = Fraction(1) / param
        return DiagMatrix(tuple(inv ** i for i in range(size)))
    raise ValueError(f"unknown diagonal kind {kind!r}")


def matmul(a, b) -> TriMatrix:
    """Exact product of two lower-triangular/diagonal matrices."""
    if not isinstance(a, (TriMatrix, DiagMatrix)) or not isinstance(b, (TriMatrix, DiagMatrix)):
        raise TypeError("matmul expects TriMatrix or DiagMatrix operands")
    if a.size != b.size:
        raise ValueError(f"matrix size mismatch: {a.size} vs {b.size}")
    rows = []
    for i in range(a.size):
        row = []
        for j in range(i + 1):
            acc = Fraction(0)
            for k in range(j, i + 1):
                acc = acc + a.entry(i, k) * b.entry(k, j)
            row.append(acc)
        rows.append(tuple(row))
    return TriMatrix(tuple(rows))


def matvec(a, v: ColumnVec) -> ColumnVec:
    """Exact matrix-vector product."""
    if not isinstance(a, (TriMatrix, DiagMatrix)):
        raise TypeError("matvec expects a TriMatrix or DiagMatrix")
    if not isinstance(v, ColumnVec):
        raise TypeError("matvec expects a ColumnVec")
    if a.size != v.size:
        raise ValueError(f"size mismatch: matrix {a.size} vs vector {v.size}")
    out = []
    for i in range(a.size):
        acc = Fraction(0)
        for j in range(i + 1):
            acc = acc + a.entry(i, j) * v.entries[j]
        out.append(acc)
    return ColumnVec(tuple(out))
