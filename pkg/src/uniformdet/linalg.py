"""Dense exact matrices and the reference determinant.

Public indices are 1-based, like the row/column labels in the formulas the
rest of the package implements.  Matrices are immutable; every operation
returns a new one.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    GaussianRational,
    Scalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    scalar_from_json,
    scalar_to_json,
)


class Matrix:
    """Immutable ``rows x cols`` grid of exact scalars.

    >>> m = Matrix([[1, 2], [3, 4]])
    >>> m[1, 2]
    Fraction(2, 1)
    >>> det_oracle(m)
    Fraction(-2, 1)
    """

    __slots__ = ("_entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(as_scalar(v) for v in row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("ragged rows")
        self._entries = grid
        self.rows = len(grid)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def entries(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._entries

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        self._check_row(i)
        self._check_col(j)
        return self._entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[Scalar, ...]:
        self._check_row(i)
        return self._entries[i - 1]

    def column(self, j: int) -> tuple[Scalar, ...]:
        self._check_col(j)
        return tuple(row[j - 1] for row in self._entries)

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.column(j) for j in range(1, self.cols + 1)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        for i in rows:
            self._check_row(i)
        for j in cols:
            self._check_col(j)
        return Matrix([[self._entries[i - 1][j - 1] for j in cols] for i in rows])

    def transpose(self) -> Matrix:
        return Matrix(zip(*self._entries))

    def _check_row(self, i: int) -> None:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row index {i} outside 1..{self.rows}")

    def _check_col(self, j: int) -> None:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column index {j} outside 1..{self.cols}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_scalar(v) for v in row) + "]" for row in self._entries)
        return f"Matrix([{body}])"

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[scalar_to_json(v) for v in row] for row in self._entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> Matrix:
        m = cls([[scalar_from_json(v) for v in row] for row in obj["entries"]])
        if (m.rows, m.cols) != (obj.get("rows", m.rows), obj.get("cols", m.cols)):
            raise ValueError("declared shape does not match entries")
        return m

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in self._entries:
            writer.writerow(format_scalar(v) for v in row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> Matrix:
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        return cls([[parse_scalar(v) for v in row] for row in rows])

    def to_table(self) -> str:
        cells = [[format_scalar(v) for v in row] for row in self._entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def _as_matrix(m) -> Matrix:
    return m if isinstance(m, Matrix) else Matrix(m)


# ---------------------------------------------------------------------------
# determinants


def _clear_denominators(row: Sequence[Scalar]) -> tuple[list, int]:
    """Scale a row to integer (or Gaussian-integer) entries.

    Returns the scaled row and the positive integer factor used.
    """
    dens = []
    for v in row:
        if isinstance(v, GaussianRational):
            dens.extend((v.re.denominator, v.im.denominator))
        else:
            dens.append(v.denominator)
    scale = math.lcm(*dens)
    out = []
    for v in row:
        if isinstance(v, GaussianRational):
            out.append(v * scale)
        else:
            out.append(int(v * scale))
    return out, scale


def _exact_quotient(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, rem = divmod(a, b)
        assert rem == 0, "Bareiss division must be exact"
        return q
    return a / b


def _bareiss(a: list[list]) -> object:
    """Fraction-free elimination on a square list-of-lists (modified in place)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_quotient(row_i[j] * pivot - lead * row_k[j], prev)
            row_i[k] = 0
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det_oracle(m) -> Scalar:
    """Exact determinant by Bareiss fraction-free elimination.

    Rows are first scaled to integer (or Gaussian integer) entries, so every
    intermediate value stays in the integral ring and each Bareiss division
    is exact.  The scaling factors are divided out at the end.
    """
    m = _as_matrix(m)
    if not m.is_square:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    scaled = []
    total_scale = 1
    for row in m.entries:
        r, s = _clear_denominators(row)
        scaled.append(r)
        total_scale *= s
    return as_scalar(Fraction(1, total_scale) * _bareiss(scaled))


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def det_leibniz(m) -> Scalar:
    """Determinant as the signed sum over all permutations.

    Independent of :func:`det_oracle` and only meant for tiny matrices
    (the cost is ``n!``).
    """
    m = _as_matrix(m)
    if not m.is_square:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n > 6:
        raise ValueError("det_leibniz is limited to n <= 6")
    e = m.entries
    total: Scalar = Fraction(0)
    for perm in itertools.permutations(range(n)):
        term: Scalar = Fraction(_permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * e[i][j]
        total = total + term
    return as_scalar(total)


# ---------------------------------------------------------------------------
# column operations


def replace_column(m, j: int, v: Sequence) -> Matrix:
    m = _as_matrix(m)
    m._check_col(j)
    if len(v) != m.rows:
        raise ValueError(f"column has length {len(v)}, matrix has {m.rows} rows")
    return Matrix(
        [[v[i] if c == j - 1 else x for c, x in enumerate(row)] for i, row in enumerate(m.entries)]
    )


def column_combination(m, j: int, coeffs: Sequence[tuple[int, object]]) -> Matrix:
    """Replace column ``j`` by ``sum(c * C_idx for idx, c in coeffs)``.

    The target column must occur in ``coeffs`` exactly once with coefficient
    +1 or -1, which makes the operation change the determinant at most by
    that sign.
    """
    m = _as_matrix(m)
    m._check_col(j)
    own = [as_scalar(c) for idx, c in coeffs if idx == j]
    if len(own) != 1:
        raise ValueError(f"target column {j} must appear exactly once in the combination")
    if own[0] not in (1, -1):
        raise ValueError(f"target column coefficient must be +1 or -1, got {format_scalar(own[0])}")
    new = [Fraction(0)] * m.rows
    for idx, c in coeffs:
        col = m.column(idx)
        c = as_scalar(c)
        if not c:
            continue
        new = [a + c * b for a, b in zip(new, col)]
    return replace_column(m, j, new)
