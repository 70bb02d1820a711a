"""Matrices with uniform polynomial entries ``A_ij = (x_i + r_j * y_i) ** ell``.

Three determinant routes live here:

* ``det_oracle(build_matrix(spec))`` -- plain exact elimination;
* :func:`det_expansion` -- the multilinear expansion over strictly increasing
  exponent tuples ``alpha``, each term a generalized Vandermonde determinant
  in ``r`` times ``det(B_alpha)``;
* :func:`column_reduce` -- finite-difference column operations (only for
  ``r = (1, ..., k)``), after which columns ``ell+1 .. k`` coincide.

:func:`classify_regularity` decides invertibility, skipping the determinant
when the size bound or the positivity criterion settles the question.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .combinatorics import IndexTuple, as_index_tuple, complement, enumerate_index_tuples
from .exact import (
    Scalar,
    as_scalar,
    binomial,
    factorial,
    is_real,
    scalar_from_json,
    scalar_to_json,
)
from .linalg import Matrix, column_combination, det_oracle
from .schur import generalized_vandermonde


@dataclass(frozen=True)
class UniformMatrixSpec:
    """The data ``(k; x, y, r, ell)``.  Only the first ``k`` entries of each
    sequence are used; ``r`` must be injective on them."""

    k: int
    ell: int
    x: tuple[Scalar, ...]
    y: tuple[Scalar, ...]
    r: tuple[Scalar, ...]

    def __post_init__(self):
        for name in ("x", "y", "r"):
            object.__setattr__(self, name, tuple(as_scalar(v) for v in getattr(self, name)))
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.ell, int) or self.ell < 0:
            raise ValueError(f"ell must be a non-negative integer, got {self.ell!r}")
        for name in ("x", "y", "r"):
            n = len(getattr(self, name))
            if n < self.k:
                raise ValueError(f"sequence {name} has {n} entries, need at least k={self.k}")
        if len(set(self.r[: self.k])) != self.k:
            raise ValueError("r must be injective on its first k entries")

    @property
    def xs(self) -> tuple[Scalar, ...]:
        return self.x[: self.k]

    @property
    def ys(self) -> tuple[Scalar, ...]:
        return self.y[: self.k]

    @property
    def rs(self) -> tuple[Scalar, ...]:
        return self.r[: self.k]

    @property
    def is_real(self) -> bool:
        return all(is_real(v) for v in self.xs + self.ys + self.rs)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "ell": self.ell,
            "x": [scalar_to_json(v) for v in self.x],
            "y": [scalar_to_json(v) for v in self.y],
            "r": [scalar_to_json(v) for v in self.r],
        }

    @classmethod
    def from_json(cls, obj: dict) -> UniformMatrixSpec:
        missing = {"k", "ell", "x", "y", "r"} - set(obj)
        if missing:
            raise ValueError(f"spec is missing {sorted(missing)}")
        for key in ("k", "ell"):
            if not isinstance(obj[key], int) or isinstance(obj[key], bool):
                raise ValueError(f"spec field {key!r} must be an integer")
        return cls(
            k=obj["k"],
            ell=obj["ell"],
            x=tuple(scalar_from_json(v) for v in obj["x"]),
            y=tuple(scalar_from_json(v) for v in obj["y"]),
            r=tuple(scalar_from_json(v) for v in obj["r"]),
        )


def build_matrix(spec: UniformMatrixSpec) -> Matrix:
    ell = spec.ell
    return Matrix([[(x + r * y) ** ell for r in spec.rs] for x, y in zip(spec.xs, spec.ys)])


def constant_gap_spec(N: int, k: int, ell: int) -> UniformMatrixSpec:
    """Spec whose matrix lists ``N**ell, (N+1)**ell, ...`` row by row."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return UniformMatrixSpec(
        k=k,
        ell=ell,
        x=tuple(N + (i - 1) * k - 1 for i in range(1, k + 1)),
        y=(1,) * k,
        r=tuple(range(1, k + 1)),
    )


def b_matrix(spec: UniformMatrixSpec) -> Matrix:
    """``k x (ell+1)`` matrix of ``C(ell, j) x_i^(ell-j) y_i^j``, ``j = 0..ell``."""
    ell = spec.ell
    return Matrix(
        [[binomial(ell, j) * x ** (ell - j) * y**j for j in range(ell + 1)] for x, y in zip(spec.xs, spec.ys)]
    )


def b_alpha_matrix(spec: UniformMatrixSpec, alpha) -> Matrix:
    a = _alpha_for(spec, alpha)
    return b_matrix(spec).submatrix(range(1, spec.k + 1), [j + 1 for j in a.values])


def _alpha_for(spec: UniformMatrixSpec, alpha) -> IndexTuple:
    a = as_index_tuple(alpha, spec.ell)
    if len(a) != spec.k:
        raise ValueError(f"exponent tuple has length {len(a)}, expected k={spec.k}")
    return a


def _binomial_product(ell: int, values: Sequence[int]) -> int:
    out = 1
    for v in values:
        out *= binomial(ell, v)
    return out


def _power_product(values: Sequence[Scalar], e: int) -> Scalar:
    out: Scalar = Fraction(1)
    for v in values:
        out = out * v**e
    return out


def _det_b_alpha_rho(spec: UniformMatrixSpec, a: IndexTuple) -> Scalar:
    xs, ys = spec.xs, spec.ys
    if any(not x for x in xs):
        raise ValueError("ratio form needs every x_i nonzero")
    rho = [y / x for x, y in zip(xs, ys)]
    return _power_product(xs, spec.ell) * _binomial_product(spec.ell, a) * generalized_vandermonde(rho, a)


def _det_b_alpha_dual(spec: UniformMatrixSpec, a: IndexTuple) -> Scalar:
    xs, ys, k = spec.xs, spec.ys, spec.k
    if any(not y for y in ys):
        raise ValueError("dual ratio form needs every y_i nonzero")
    inv_rho = [x / y for x, y in zip(xs, ys)]
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    return (
        sign
        * _power_product(ys, spec.ell)
        * _binomial_product(spec.ell, a)
        * generalized_vandermonde(inv_rho, complement(a))
    )


def _det_b_alpha_reduced(spec: UniformMatrixSpec, a: IndexTuple) -> Scalar:
    """One vanishing x_i (or y_i): expand along that row, leaving a size k-1
    ratio form in the other rows."""
    xs, ys, k, ell = spec.xs, spec.ys, spec.k, spec.ell
    zero_x = [i for i, x in enumerate(xs) if not x]
    zero_y = [i for i, y in enumerate(ys) if not y]
    if len(zero_x) == 1 and not zero_y:
        i0 = zero_x[0]
        if a.values[-1] != ell:
            return Fraction(0)
        sign = 1 if (i0 + 1 + k) % 2 == 0 else -1
        lead = ys[i0] ** ell
        inner = a.values[:-1]
    elif not zero_x and len(zero_y) == 1:
        i0 = zero_y[0]
        if a.values[0] != 0:
            return Fraction(0)
        sign = 1 if (i0 + 1 + 1) % 2 == 0 else -1
        lead = xs[i0] ** ell
        inner = a.values[1:]
    else:
        raise ValueError("reduced form needs exactly one vanishing x_i or y_i (and no other zero x_j)")
    others = [i for i in range(k) if i != i0]
    rest_x = [xs[i] for i in others]
    value = sign * lead * _power_product(rest_x, ell) * _binomial_product(ell, inner)
    if not inner:
        return as_scalar(value)
    rho = [ys[i] / xs[i] for i in others]
    return as_scalar(value * generalized_vandermonde(rho, IndexTuple(inner, ell)))


_B_ALPHA_ROUTES = {
    "rho": _det_b_alpha_rho,
    "dual": _det_b_alpha_dual,
    "reduced": _det_b_alpha_reduced,
    "direct": lambda spec, a: det_oracle(b_alpha_matrix(spec, a)),
}


def det_b_alpha(spec: UniformMatrixSpec, alpha, route: str = "auto") -> Scalar:
    """Determinant of the column selection ``B_alpha`` of :func:`b_matrix`.

    ``route="auto"`` uses the ratio form ``y_i / x_i`` when no x_i vanishes,
    the dual ratio form ``x_i / y_i`` when no y_i vanishes, and elimination on
    ``B_alpha`` otherwise.  The other routes can be forced by name
    (``"rho"``, ``"dual"``, ``"reduced"``, ``"direct"``); a route whose
    preconditions fail raises ``ValueError``.
    """
    a = _alpha_for(spec, alpha)
    if route == "auto":
        if all(spec.xs):
            route = "rho"
        elif all(spec.ys):
            route = "dual"
        else:
            route = "direct"
    try:
        fn = _B_ALPHA_ROUTES[route]
    except KeyError:
        raise ValueError(f"unknown route {route!r}") from None
    return as_scalar(fn(spec, a))


def _expansion_term(spec: UniformMatrixSpec, a: IndexTuple) -> Scalar:
    return generalized_vandermonde(spec.rs, a) * det_b_alpha(spec, a)


def _expansion_terms_chunk(args: tuple[UniformMatrixSpec, list[IndexTuple]]) -> list[Scalar]:
    spec, chunk = args
    return [_expansion_term(spec, a) for a in chunk]


def det_expansion(spec: UniformMatrixSpec, jobs: int = 1) -> Scalar:
    """``det(A) = sum_alpha V_{k,alpha}(r) * det(B_alpha)``.

    For ``k >= ell + 2`` there is no strictly increasing tuple and the result
    is exactly zero.  With ``jobs > 1`` the terms are evaluated in worker
    processes; they are always summed in lexicographic order of ``alpha``,
    so the result does not depend on ``jobs``.
    """
    if spec.k >= spec.ell + 2:
        return Fraction(0)
    alphas = enumerate_index_tuples(spec.k, spec.ell)
    if jobs > 1 and len(alphas) > 1:
        n = min(jobs, len(alphas))
        size = -(-len(alphas) // n)
        chunks = [alphas[i : i + size] for i in range(0, len(alphas), size)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            terms = [t for part in pool.map(_expansion_terms_chunk, [(spec, c) for c in chunks]) for t in part]
    else:
        terms = [_expansion_term(spec, a) for a in alphas]
    total: Scalar = Fraction(0)
    for t in terms:
        total = total + t
    return as_scalar(total)


def closed_form_limit_det(ell: int) -> Fraction:
    """Determinant of the constant-gap matrix with ``k = ell + 1``, any N:

    ``(-1)^(ell(ell+1)/2) (ell+1)^(ell(ell+1)/2) prod_j (j!)^2 C(ell, j)``.
    """
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    t = ell * (ell + 1) // 2
    value = (-1) ** t * (ell + 1) ** t
    for j in range(ell + 1):
        value *= factorial(j) ** 2 * binomial(ell, j)
    return Fraction(value)


def finite_diff_sum(ell: int, coeffs: Sequence) -> Scalar:
    """``sum_{nu=0}^{ell} (-1)^nu C(ell, nu) q(nu)`` with ``q = sum a_i x^i``.

    For ``deg q <= ell`` this equals ``(-1)^ell * ell! * a_ell``; higher
    degree is rejected because the identity no longer holds.
    """
    if ell < 0:
        raise ValueError(f"ell must be >= 0, got {ell}")
    coeffs = [as_scalar(c) for c in coeffs]
    degree = max((i for i, c in enumerate(coeffs) if c), default=-1)
    if degree > ell:
        raise ValueError(f"polynomial degree {degree} exceeds ell={ell}")
    total: Scalar = Fraction(0)
    for nu in range(ell + 1):
        q = Fraction(0)
        for c in reversed(coeffs):
            q = q * nu + c
        total = total + (-1) ** nu * binomial(ell, nu) * q
    return as_scalar(total)


def finite_diff_leading(ell: int, coeffs: Sequence) -> Scalar:
    """``(-1)^ell * ell! * a_ell`` (``a_ell`` is zero when absent)."""
    a = as_scalar(coeffs[ell]) if ell < len(coeffs) else Fraction(0)
    return as_scalar((-1) ** ell * factorial(ell) * a)


def column_reduce(spec: UniformMatrixSpec) -> Matrix:
    """Apply ``C_j <- (-1)^ell sum_nu (-1)^nu C(ell, nu) C_{j-ell+nu}`` for
    ``j = k, k-1, ..., ell+1``.

    Requires ``r = (1, ..., k)`` and ``k >= ell + 1``.  Each step gives the
    target column coefficient +1, so the determinant is unchanged, and every
    rewritten column equals ``(ell! * y_i**ell)_i``.
    """
    k, ell = spec.k, spec.ell
    if spec.rs != tuple(Fraction(j) for j in range(1, k + 1)):
        raise ValueError("column reduction needs r = (1, 2, ..., k)")
    if k < ell + 1:
        raise ValueError(f"column reduction needs k >= ell + 1 (k={k}, ell={ell})")
    m = build_matrix(spec)
    sign = (-1) ** ell
    for j in range(k, ell, -1):
        coeffs = [(j - ell + nu, sign * (-1) ** nu * binomial(ell, nu)) for nu in range(ell + 1)]
        m = column_combination(m, j, coeffs)
    return m


# ---------------------------------------------------------------------------
# regularity


class RegularityStatus(str, enum.Enum):
    SINGULAR_BY_SIZE = "SingularBySize"
    REGULAR_BY_POSITIVITY = "RegularByPositivity"
    REGULAR_BY_DETERMINANT = "RegularByDeterminant"
    SINGULAR_BY_DETERMINANT = "SingularByDeterminant"


@dataclass(frozen=True)
class RegularityVerdict:
    status: RegularityStatus
    witness: Scalar | None = None
    method: str = field(default="")

    def __post_init__(self):
        by_det = self.status in (RegularityStatus.REGULAR_BY_DETERMINANT, RegularityStatus.SINGULAR_BY_DETERMINANT)
        if by_det != (self.witness is not None):
            raise ValueError("a witness is present exactly for determinant-based verdicts")
        if by_det and (self.witness == 0) != (self.status is RegularityStatus.SINGULAR_BY_DETERMINANT):
            raise ValueError("witness zero iff SingularByDeterminant")

    @property
    def regular(self) -> bool:
        return self.status in (RegularityStatus.REGULAR_BY_POSITIVITY, RegularityStatus.REGULAR_BY_DETERMINANT)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else scalar_to_json(self.witness),
            "method": self.method,
        }


def positivity_hypotheses_hold(spec: UniformMatrixSpec) -> bool:
    """Real data, ``r_i > 0``, pairwise ``x_i y_j != x_j y_i``, and every
    ratio ``y_i / x_i`` positive -- except that one single ``x_i`` or one
    single ``y_i`` may vanish."""
    if not spec.is_real:
        return False
    xs, ys = spec.xs, spec.ys
    if any(r <= 0 for r in spec.rs):
        return False
    zeros = sum(1 for x in xs if not x) + sum(1 for y in ys if not y)
    if zeros > 1:
        return False
    for x, y in zip(xs, ys):
        if x and y and (y / x) <= 0:
            return False
    k = spec.k
    for i in range(k):
        for j in range(i + 1, k):
            if xs[i] * ys[j] == xs[j] * ys[i]:
                return False
    return True


def classify_regularity(spec: UniformMatrixSpec) -> RegularityVerdict:
    if spec.k >= spec.ell + 2:
        return RegularityVerdict(
            RegularityStatus.SINGULAR_BY_SIZE,
            method=f"k={spec.k} >= ell+2={spec.ell + 2}: rows are values of polynomials of degree <= ell",
        )
    if positivity_hypotheses_hold(spec):
        return RegularityVerdict(
            RegularityStatus.REGULAR_BY_POSITIVITY,
            method="positive ratios, distinct cross products, positive injective r: Schur expansion is a sum of positive terms",
        )
    d = det_oracle(build_matrix(spec))
    status = RegularityStatus.REGULAR_BY_DETERMINANT if d else RegularityStatus.SINGULAR_BY_DETERMINANT
    return RegularityVerdict(status, witness=d, method="fraction-free elimination")
