"""Index tuples, partitions and semistandard Young tableaux."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class IndexTuple:
    """Strictly increasing exponents ``0 <= a_1 < ... < a_k <= ceiling``."""

    values: tuple[int, ...]
    ceiling: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        v = self.values
        if not v:
            raise ValueError("index tuple must be non-empty")
        if v[0] < 0 or v[-1] > self.ceiling:
            raise ValueError(f"index tuple {v} not inside 0..{self.ceiling}")
        if any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError(f"index tuple {v} is not strictly increasing")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


@dataclass(frozen=True)
class Partition:
    """Non-increasing parts of fixed length k; trailing zeros are kept."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        p = self.parts
        if not p:
            raise ValueError("partition must have length >= 1")
        if p[-1] < 0:
            raise ValueError(f"partition {p} has negative parts")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"partition {p} is not non-increasing")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)


@dataclass(frozen=True)
class Tableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def content(self, k: int) -> tuple[int, ...]:
        c = Counter(v for row in self.rows for v in row)
        return tuple(c.get(i, 0) for i in range(1, k + 1))

    def is_semistandard(self) -> bool:
        rows = self.rows
        for row in rows:
            if any(a > b for a, b in zip(row, row[1:])):
                return False
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def as_index_tuple(alpha, ceiling: int | None = None) -> IndexTuple:
    if isinstance(alpha, IndexTuple):
        if ceiling is not None and alpha.ceiling != ceiling:
            return IndexTuple(alpha.values, ceiling)
        return alpha
    values = tuple(alpha)
    return IndexTuple(values, values[-1] if ceiling is None and values else ceiling)


# ---------------------------------------------------------------------------
# index tuples


def enumerate_index_tuples(k: int, ell: int) -> list[IndexTuple]:
    """All strictly increasing k-tuples in ``0..ell``, lexicographically."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k > ell + 1:
        raise ValueError(f"no strictly increasing {k}-tuple fits in 0..{ell}")
    return [IndexTuple(c, ell) for c in itertools.combinations(range(ell + 1), k)]


def tuple_to_partition(alpha) -> Partition:
    """``lambda_i = alpha_{k-i+1} - k + i`` (1-based)."""
    a = as_index_tuple(alpha).values
    k = len(a)
    return Partition(tuple(a[k - i] - k + i for i in range(1, k + 1)))


def partition_to_tuple(lam, ceiling: int | None = None) -> IndexTuple:
    """Inverse of :func:`tuple_to_partition`: ``alpha_j = lambda_{k-j+1} + j - 1``."""
    p = as_partition(lam).parts
    k = len(p)
    values = tuple(p[k - j] + j - 1 for j in range(1, k + 1))
    return IndexTuple(values, values[-1] if ceiling is None else ceiling)


def complement(alpha, ell: int | None = None) -> IndexTuple:
    """``(ell - alpha_k, ..., ell - alpha_1)``."""
    a = as_index_tuple(alpha, ell)
    return IndexTuple(tuple(a.ceiling - v for v in reversed(a.values)), a.ceiling)


def partitions_in_box(rows: int, width: int) -> list[Partition]:
    """Partitions with ``rows`` parts (zeros kept), each at most ``width``.

    These are exactly the shapes ``tuple_to_partition(alpha)`` for
    ``alpha`` in ``enumerate_index_tuples(rows, rows - 1 + width)``.
    """
    return [tuple_to_partition(a) for a in enumerate_index_tuples(rows, rows - 1 + width)]


# ---------------------------------------------------------------------------
# tableaux


def _fill(shape: tuple[int, ...], k: int, content: list[int] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
    # row-major backtracking, smallest entry first
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    grid = [[0] * n for n in shape]

    def rec(pos: int):
        if pos == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[pos]
        low = 1
        if c > 0:
            low = max(low, grid[r][c - 1])
        if r > 0:
            low = max(low, grid[r - 1][c] + 1)
        # cells further down this column need strictly larger entries
        below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
        high = k - below
        for v in range(low, high + 1):
            if content is not None:
                if not content[v - 1]:
                    continue
                content[v - 1] -= 1
            grid[r][c] = v
            yield from rec(pos + 1)
            if content is not None:
                content[v - 1] += 1
        grid[r][c] = 0

    yield from rec(0)


def enumerate_ssyt(lam, k: int) -> list[Tableau]:
    """Every semistandard filling of shape ``lam`` with entries in ``1..k``.

    Shapes with more than ``k`` nonzero rows admit no filling; the result is
    then empty.
    """
    shape = as_partition(lam)
    if shape.length > k:
        return []
    rows = tuple(p for p in shape.parts if p)
    return [Tableau(shape, t + ((),) * (len(shape) - len(rows))) for t in _fill(rows, k, None)]


def gamma_coefficient(lam, mu: Sequence[int], k: int) -> int:
    """Number of SSYT of shape ``lam`` with ``mu[i]`` entries equal to ``i+1``."""
    shape = as_partition(lam)
    mu = [int(m) for m in mu]
    if len(mu) != k:
        raise ValueError(f"content vector has length {len(mu)}, expected {k}")
    if any(m < 0 for m in mu):
        raise ValueError("content vector entries must be non-negative")
    if sum(mu) != shape.size or shape.length > k:
        return 0
    rows = tuple(p for p in shape.parts if p)
    return sum(1 for _ in _fill(rows, k, mu))


def ssyt_content_counts(lam, k: int) -> Counter:
    """Map content vector -> number of SSYT with that content."""
    return Counter(t.content(k) for t in enumerate_ssyt(lam, k))
