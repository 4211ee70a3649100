"""Dense exact-rational matrices.

All entries are :class:`fractions.Fraction`. Multiplication skips zero
entries of the left operand, which keeps boundary-matrix products cheap
since those have at most ``k + 1`` nonzeros per column.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("float entries are not allowed in a RationalMatrix")
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self._rows: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(_frac(x) for x in r) for r in rows
        )
        if self._rows:
            widths = {len(r) for r in self._rows}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            w = widths.pop()
            if ncols is not None and ncols != w:
                raise ValueError(f"expected {ncols} columns, got {w}")
        else:
            w = ncols or 0
        self._shape = (len(self._rows), w)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zeros(cls, m: int, n: int) -> "RationalMatrix":
        z = Fraction(0)
        return cls(([z] * n for _ in range(m)), ncols=n)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), ncols=n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "RationalMatrix":
        if not cols:
            return cls.zeros(nrows, 0)
        return cls(zip(*cols), ncols=len(cols)) if nrows else cls.zeros(0, len(cols))

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls(([values[i] if i == j else 0 for j in range(n)] for i in range(n)), ncols=n)

    # -- basic protocol ---------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self._shape[1])]

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self):
        return hash((self._shape, self._rows))

    def __repr__(self) -> str:
        m, n = self._shape
        if m * n <= 64:
            body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
            return f"RationalMatrix({m}x{n}: [{body}])"
        return f"RationalMatrix({m}x{n})"

    # -- arithmetic -------------------------------------------------------

    @property
    def T(self) -> "RationalMatrix":
        m, n = self._shape
        if m == 0:
            return RationalMatrix.zeros(n, 0)
        return RationalMatrix(zip(*self._rows), ncols=m)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        m, k = self._shape
        k2, n = other._shape
        if k != k2:
            raise ValueError(f"shape mismatch {self._shape} @ {other._shape}")
        zero = Fraction(0)
        out = []
        brows = other._rows
        for r in self._rows:
            acc = [zero] * n
            for j, a in enumerate(r):
                if a:
                    b = brows[j]
                    for c in range(n):
                        bc = b[c]
                        if bc:
                            acc[c] += a * bc
            out.append(acc)
        return RationalMatrix(out, ncols=n)

    def _elementwise(self, other: "RationalMatrix", op) -> "RationalMatrix":
        if self._shape != other._shape:
            raise ValueError(f"shape mismatch {self._shape} vs {other._shape}")
        return RationalMatrix(
            ([op(a, b) for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
            ncols=self._shape[1],
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._elementwise(other, lambda a, b: a + b)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._elementwise(other, lambda a, b: a - b)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(([-x for x in r] for r in self._rows), ncols=self._shape[1])

    def scale(self, s) -> "RationalMatrix":
        s = _frac(s)
        return RationalMatrix(([s * x for x in r] for r in self._rows), ncols=self._shape[1])

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self._shape[1]:
            raise ValueError("vector length mismatch")
        vv = [_frac(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, vv) if a and b), Fraction(0)) for r in self._rows)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self._shape[0] != other._shape[0]:
            raise ValueError("row count mismatch")
        return RationalMatrix(
            (r + s for r, s in zip(self._rows, other._rows)),
            ncols=self._shape[1] + other._shape[1],
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(([self._rows[i][j] for j in cols] for i in rows), ncols=len(cols))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(x for r in self._rows for x in r)

    def is_symmetric(self) -> bool:
        return self._shape[0] == self._shape[1] and self == self.T

    def max_abs(self) -> Fraction:
        return max((abs(x) for r in self._rows for x in r), default=Fraction(0))

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple["RationalMatrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns (Gauss-Jordan)."""
        a = [list(r) for r in self._rows]
        m, n = self._shape
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            p = next((i for i in range(r, m) if a[i][c]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            pr = a[r]
            for i in range(m):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], pr)]
            pivots.append(c)
            r += 1
        return RationalMatrix(a, ncols=n), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[Vector]:
        """Basis of the right nullspace, one vector per free column."""
        m, n = self._shape
        red, pivots = self.rref()
        pivset = set(pivots)
        basis = []
        for f in range(n):
            if f in pivset:
                continue
            v = [Fraction(0)] * n
            v[f] = Fraction(1)
            for i, c in enumerate(pivots):
                v[c] = -red[i, f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "RationalMatrix":
        m, n = self._shape
        if m != n:
            raise ValueError("inverse of a non-square matrix")
        red, pivots = self.hstack(RationalMatrix.identity(n)).rref()
        if pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def solve(self, rhs: "RationalMatrix") -> "RationalMatrix":
        """Solve ``self @ X = rhs`` for square nonsingular ``self``."""
        n = self._shape[0]
        red, pivots = self.hstack(rhs).rref()
        if pivots[:n] != tuple(range(n)) or self._shape[1] != n:
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, n + rhs.shape[1]))

    # -- conversion -------------------------------------------------------

    def to_numpy(self, dtype=float) -> np.ndarray:
        m, n = self._shape
        out = np.zeros((m, n), dtype=dtype)
        for i, r in enumerate(self._rows):
            for j, x in enumerate(r):
                if x:
                    out[i, j] = float(x) if dtype is float else x
        return out

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale ``v`` to coprime integers with a positive leading nonzero entry."""
    from math import gcd, lcm

    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def span_contains(basis: Sequence[Sequence], vectors: Sequence[Sequence]) -> bool:
    """True when every vector lies in the span of ``basis`` (exact)."""
    if not vectors:
        return True
    if not basis:
        return all(not any(v) for v in vectors)
    n = len(vectors[0])
    b = RationalMatrix.from_columns(list(basis), n)
    both = b.hstack(RationalMatrix.from_columns(list(vectors), n))
    return b.rank() == both.rank()
