"""Exact dense linear algebra over the rationals.

Matrices are immutable, row-major grids of exact scalars (``int`` or
``Fraction``).  Products, Kronecker products and matrix-vector application
skip zero entries via cached nonzero-index lists, which keeps the very
sparse operator matrices of weight modules cheap without introducing a
sparse data structure.

The elimination engine is fraction-free (Bareiss): every row is first
scaled to coprime integers, then eliminated with the two-term determinant
update divided exactly by the previous pivot, so intermediate entries stay
minor-sized instead of growing the way naive fractional elimination lets
them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rationals import Scalar


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rows x cols grid of exact rational entries."""

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"expected {self.cols} entries per row, got {len(row)}")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[Scalar]]) -> "ExactMatrix":
        grid = tuple(tuple(row) for row in rows)
        if not grid:
            return ExactMatrix(0, 0, ())
        return ExactMatrix(len(grid), len(grid[0]), grid)

    @cached_property
    def nonzero_rows(self) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
        """Per row, the (column, value) pairs of nonzero entries."""
        return tuple(
            tuple((j, v) for j, v in enumerate(row) if v) for row in self.entries
        )

    @cached_property
    def nonzero_cols(self) -> tuple[tuple[tuple[int, Scalar], ...], ...]:
        """Per column, the (row, value) pairs of nonzero entries."""
        cols: list[list[tuple[int, Scalar]]] = [[] for _ in range(self.cols)]
        for i, row in enumerate(self.nonzero_rows):
            for j, v in row:
                cols[j].append((i, v))
        return tuple(tuple(c) for c in cols)

    @cached_property
    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols,
            self.rows,
            tuple(tuple(row[j] for row in self.entries) for j in range(self.cols)),
        )

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._require_same_shape(other)
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_nz = other.nonzero_rows
        out = []
        for arow in self.nonzero_rows:
            acc: list[Scalar] = [0] * other.cols
            for k, a in arow:
                for j, b in other_nz[k]:
                    acc[j] += a * b
            out.append(tuple(acc))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def scaled(self, c: Scalar) -> "ExactMatrix":
        return ExactMatrix(
            self.rows,
            self.cols,
            tuple(tuple(c * v for v in row) for row in self.entries),
        )

    def _require_same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def identity(n: int) -> ExactMatrix:
    return ExactMatrix(
        n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def zeros(rows: int, cols: int) -> ExactMatrix:
    return ExactMatrix(rows, cols, tuple(tuple([0] * cols) for _ in range(rows)))


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product, left factor outermost (row-major block layout)."""
    grid = [[0] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    b_nz = b.nonzero_rows
    for i, arow in enumerate(a.nonzero_rows):
        for j, av in arow:
            for k in range(b.rows):
                tgt = grid[i * b.rows + k]
                base = j * b.cols
                for l, bv in b_nz[k]:
                    tgt[base + l] = av * bv
    return ExactMatrix(
        a.rows * b.rows, a.cols * b.cols, tuple(tuple(r) for r in grid)
    )


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b - b @ a


def mat_vec(a: ExactMatrix, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """Exact product A*v."""
    if len(v) != a.cols:
        raise ValueError(f"vector of length {len(v)} does not match {a.cols} columns")
    out: list[Scalar] = [0] * a.rows
    cols = a.nonzero_cols
    for j, x in enumerate(v):
        if x:
            for i, entry in cols[j]:
                out[i] += entry * x
    return tuple(out)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    if len(u) != len(v):
        raise ValueError("length mismatch in dot product")
    acc: Scalar = 0
    for a, b in zip(u, v):
        if a and b:
            acc += a * b
    return acc


def apply_power(a: ExactMatrix, v: Sequence[Scalar], s: int) -> tuple[Scalar, ...]:
    """A applied s >= 0 times to v; s = 0 returns v unchanged."""
    if a.rows != a.cols:
        raise ValueError("apply_power needs a square matrix")
    if s < 0:
        raise ValueError(f"power must be nonnegative (got {s})")
    out = tuple(v)
    if len(out) != a.cols:
        raise ValueError(f"vector of length {len(out)} does not match {a.cols} columns")
    for _ in range(s):
        out = mat_vec(a, out)
    return out


def _as_coprime_integer_row(row: Sequence[Scalar]) -> list[int]:
    """Scale a row of rationals to integers with gcd 1 (same row span)."""
    den = 1
    for x in row:
        d = x.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    ints = [int((x * den).numerator) if den != 1 else int(x.numerator) for x in row]
    g = 0
    for x in ints:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return ints
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _bareiss_echelon(a: ExactMatrix) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the working integer grid and the pivot column list.  Rows whose
    pivot-column entry is zero still get the Bareiss rescale (pivot/prev),
    except when pivot == prev, where the update is the identity and is
    skipped; this keeps near-permutation inputs quadratic.
    """
    m = [_as_coprime_integer_row(row) for row in a.entries]
    nrows, ncols = a.rows, a.cols
    pivot_cols: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        p = -1
        for i in range(r, nrows):
            if m[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv_row = m[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            if f:
                for j in range(c, ncols):
                    row[j] = (piv * row[j] - f * piv_row[j]) // prev
            elif piv != prev:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = piv * row[j] // prev
        pivot_cols.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return m, pivot_cols


def rank(a: ExactMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    return len(_bareiss_echelon(a)[1])


def null_space(a: ExactMatrix) -> list[tuple[Fraction, ...]]:
    """A basis of ker(A), one vector per free column in increasing order.

    Each vector is normalized so its first nonzero coordinate is 1, which
    makes the output deterministic and directly comparable to closed forms
    normalized the same way.
    """
    echelon, pivot_cols = _bareiss_echelon(a)
    pivots = set(pivot_cols)
    basis: list[tuple[Fraction, ...]] = []
    for free in range(a.cols):
        if free in pivots:
            continue
        x: list[Fraction] = [Fraction(0)] * a.cols
        x[free] = Fraction(1)
        for i in reversed(range(len(pivot_cols))):
            c = pivot_cols[i]
            row = echelon[i]
            s = Fraction(0)
            for j in range(c + 1, a.cols):
                if x[j] and row[j]:
                    s += row[j] * x[j]
            x[c] = -s / row[c]
        lead = next(v for v in x if v)
        if lead != 1:
            x = [v / lead for v in x]
        basis.append(tuple(x))
    return basis
