"""Exact dense linear algebra over Q(zeta_m): rank and subspace intersection."""

from __future__ import annotations

import numpy as np

from .cyclo import CycloContext, CycloScalar
from .errors import DimensionMismatch


class CycloMatrix:
    """Dense matrix over Q(zeta_m); rows span a subspace of Q(zeta_m)^cols."""

    def __init__(self, ctx: CycloContext, entries, cols: int | None = None):
        self.ctx = ctx
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            if any(len(r) != self.cols for r in self.entries):
                raise DimensionMismatch("ragged rows")
        else:
            if cols is None:
                raise DimensionMismatch("empty matrix needs an explicit column count")
            self.cols = cols

    @classmethod
    def from_rows(cls, ctx: CycloContext, rows, cols: int | None = None) -> "CycloMatrix":
        return cls(ctx, rows, cols)

    def transpose(self) -> "CycloMatrix":
        if not self.rows:
            return CycloMatrix(self.ctx, [[] for _ in range(self.cols)], cols=0)
        return CycloMatrix(self.ctx, [list(col) for col in zip(*self.entries)])

    def stacked(self, other: "CycloMatrix") -> "CycloMatrix":
        if self.cols != other.cols:
            raise DimensionMismatch(f"cannot stack {self.cols} and {other.cols} columns")
        return CycloMatrix(self.ctx, self.entries + other.entries, cols=self.cols)

    def rank(self) -> int:
        """Exact rank by fraction-free (Bareiss) elimination.

        Pivot is the first nonzero entry in the current column; the division
        by the previous pivot is exact, which keeps coefficient growth under
        control on integral inputs.
        """
        m = [row[:] for row in self.entries]
        nrows, ncols = self.rows, self.cols
        ctx = self.ctx
        zero = ctx.zero
        prev_inv = ctx.one
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, nrows) if m[i][c]), None)
            if piv is None:
                continue
            if piv != r:
                m[piv], m[r] = m[r], m[piv]
            pivot_row = m[r]
            pivot = pivot_row[c]
            for i in range(r + 1, nrows):
                row = m[i]
                fic = row[c]
                if fic:
                    for j in range(c + 1, ncols):
                        num = pivot * row[j] - fic * pivot_row[j]
                        row[j] = num * prev_inv if num else num
                    row[c] = zero
                else:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = pivot * row[j] * prev_inv
            prev_inv = pivot.inverse()
            r += 1
            if r == nrows:
                break
        return r

    def row_space(self) -> "RowSpace":
        rs = RowSpace(self.ctx, self.cols)
        for row in self.entries:
            rs.add(row)
        return rs

    def to_complex_array(self) -> np.ndarray:
        return np.array(
            [[complex(x) for x in row] for row in self.entries], dtype=complex
        ).reshape(self.rows, self.cols)

    def __repr__(self):
        return f"CycloMatrix({self.rows}x{self.cols}, m={self.ctx.m})"


class RowSpace:
    """Incrementally maintained reduced row echelon basis (monic pivots)."""

    def __init__(self, ctx: CycloContext, ncols: int):
        self.ctx = ctx
        self.ncols = ncols
        self._rows: dict[int, list[CycloScalar]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def basis_rows(self) -> list[list[CycloScalar]]:
        return [self._rows[p][:] for p in sorted(self._rows)]

    def reduce(self, vec) -> list[CycloScalar]:
        v = list(vec)
        rows = self._rows
        for j in range(self.ncols):
            if v[j] and j in rows:
                coef = v[j]
                row = rows[j]
                for k in range(j, self.ncols):
                    if row[k]:
                        v[k] = v[k] - coef * row[k]
        return v

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; returns True when it enlarges the span."""
        v = self.reduce(vec)
        piv = next((j for j in range(self.ncols) if v[j]), None)
        if piv is None:
            return False
        inv = v[piv].inverse()
        v = [x * inv if x else x for x in v]
        for row in self._rows.values():
            if row[piv]:
                coef = row[piv]
                for k in range(piv, self.ncols):
                    if v[k]:
                        row[k] = row[k] - coef * v[k]
        self._rows[piv] = v
        return True

    def to_matrix(self) -> CycloMatrix:
        return CycloMatrix(self.ctx, self.basis_rows(), cols=self.ncols)


def intersect(a: CycloMatrix, b: CycloMatrix) -> CycloMatrix:
    """Matrix whose rows span rowspace(a) & rowspace(b) (Zassenhaus trick)."""
    if a.cols != b.cols:
        raise DimensionMismatch(f"ambient dimensions differ: {a.cols} vs {b.cols}")
    n = a.cols
    ctx = a.ctx
    zero = ctx.zero
    rs = RowSpace(ctx, 2 * n)
    for row in a.entries:
        rs.add(row + row)
    for row in b.entries:
        rs.add(row + [zero] * n)
    out = [row[n:] for piv, row in sorted(rs._rows.items()) if piv >= n]
    return CycloMatrix(ctx, out, cols=n)


def row_spaces_equal(a: CycloMatrix, b: CycloMatrix) -> bool:
    if a.cols != b.cols:
        raise DimensionMismatch(f"ambient dimensions differ: {a.cols} vs {b.cols}")
    ra = a.rank()
    rb = b.rank()
    return ra == rb == a.stacked(b).rank()
