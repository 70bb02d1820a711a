"""Vandermonde determinants, generalized Vandermonde determinants and Schur
polynomials.

A Schur polynomial can be obtained two ways here: as the quotient of two
alternants (only when the points are pairwise distinct) or as the generating
function of semistandard tableaux.  Both are exact, and the tests hold them
against each other.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .combinatorics import (
    as_index_tuple,
    as_partition,
    enumerate_ssyt,
    partition_to_tuple,
)
from .exact import Scalar, as_scalar, scalar_from_json, scalar_to_json
from .linalg import Matrix, _permutation_sign, det_oracle

Exponent = tuple[int, ...]


class SparsePolynomial:
    """Multivariate polynomial stored as ``{exponent vector: coefficient}``.

    Zero coefficients are never stored, so two polynomials are equal exactly
    when their term maps are equal.

    >>> u1 = SparsePolynomial.variable(0, 2)
    >>> u2 = SparsePolynomial.variable(1, 2)
    >>> (u1 + u2)(1, 3)
    Fraction(4, 1)
    """

    __slots__ = ("arity", "_terms")

    def __init__(self, arity: int, terms: Mapping[Sequence[int], object] | Iterable = ()):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        self.arity = arity
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Scalar] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for arity {arity}")
            acc[exp] = acc.get(exp, Fraction(0)) + as_scalar(coeff)
        self._terms = {e: as_scalar(c) for e, c in acc.items() if c}

    @classmethod
    def constant(cls, value, arity: int) -> SparsePolynomial:
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, index: int, arity: int) -> SparsePolynomial:
        exp = [0] * arity
        exp[index] = 1
        return cls(arity, {tuple(exp): 1})

    @property
    def terms(self) -> dict[Exponent, Scalar]:
        return dict(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Scalar]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def _check(self, other: SparsePolynomial) -> None:
        if not isinstance(other, SparsePolynomial):
            raise TypeError(f"expected SparsePolynomial, got {type(other).__name__}")
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._check(other)
        return SparsePolynomial(self.arity, itertools.chain(self._terms.items(), other._terms.items()))

    def __neg__(self):
        return SparsePolynomial(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            c = as_scalar(other)
            return SparsePolynomial(self.arity, {e: v * c for e, v in self._terms.items()})
        self._check(other)
        acc: dict[Exponent, Scalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return SparsePolynomial(self.arity, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def __call__(self, *points) -> Scalar:
        return poly_eval(self, points)

    def __repr__(self):
        if not self._terms:
            return f"SparsePolynomial({self.arity}, 0)"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(f"u{i + 1}^{e}" if e > 1 else f"u{i + 1}" for i, e in enumerate(exp) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"SparsePolynomial({self.arity}, {' + '.join(parts)})"

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "terms": [{"exp": list(e), "coeff": scalar_to_json(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> SparsePolynomial:
        return cls(obj["arity"], [(t["exp"], scalar_from_json(t["coeff"])) for t in obj["terms"]])


def poly_eval(p: SparsePolynomial, points: Sequence) -> Scalar:
    points = [as_scalar(v) for v in points]
    if len(points) != p.arity:
        raise ValueError(f"polynomial has arity {p.arity}, got {len(points)} points")
    total: Scalar = Fraction(0)
    for exp, c in p._terms.items():
        term = c
        for x, e in zip(points, exp):
            if e:
                term = term * x**e
        total = total + term
    return as_scalar(total)


def poly_mul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    return p * q


def poly_equal(p: SparsePolynomial, q: SparsePolynomial) -> bool:
    p._check(q)
    return p == q


# ---------------------------------------------------------------------------
# evaluated determinants


def vandermonde(points: Sequence) -> Scalar:
    """``prod_{i<j} (u_j - u_i)``."""
    points = [as_scalar(v) for v in points]
    if not points:
        raise ValueError("vandermonde needs at least one point")
    result: Scalar = Fraction(1)
    for i, j in itertools.combinations(range(len(points)), 2):
        result = result * (points[j] - points[i])
    return as_scalar(result)


def generalized_vandermonde_matrix(points: Sequence, alpha) -> Matrix:
    exps = as_index_tuple(alpha).values
    points = [as_scalar(v) for v in points]
    if len(points) != len(exps):
        raise ValueError(f"{len(points)} points but exponent tuple of length {len(exps)}")
    return Matrix([[u**a for a in exps] for u in points])


def generalized_vandermonde(points: Sequence, alpha) -> Scalar:
    """``det(u_i ** alpha_j)``, computed by exact elimination."""
    return det_oracle(generalized_vandermonde_matrix(points, alpha))


def _pairwise_distinct(points: Sequence[Scalar]) -> bool:
    return len(set(points)) == len(points)


def schur_eval(lam, points: Sequence) -> Scalar:
    """Value of the Schur polynomial ``s_lam`` at ``points``.

    With pairwise distinct points this is the bialternant quotient
    ``V_{k,alpha} / V_k``; otherwise the tableau expansion is evaluated.
    """
    shape = as_partition(lam)
    points = [as_scalar(v) for v in points]
    if len(points) != len(shape):
        raise ValueError(f"partition of length {len(shape)} but {len(points)} points")
    if _pairwise_distinct(points):
        alpha = partition_to_tuple(shape)
        return as_scalar(generalized_vandermonde(points, alpha) / vandermonde(points))
    return poly_eval(schur_expand(shape, len(points)), points)


def schur_eval_expansion(lam, points: Sequence) -> Scalar:
    points = list(points)
    return poly_eval(schur_expand(lam, len(points)), points)


# ---------------------------------------------------------------------------
# symbolic forms


def schur_expand(lam, k: int) -> SparsePolynomial:
    """Monomial expansion of ``s_lam(u_1..u_k)``: one term per tableau."""
    shape = as_partition(lam)
    if len(shape) != k:
        raise ValueError(f"partition has length {len(shape)}, expected {k}")
    acc: dict[Exponent, int] = {}
    for t in enumerate_ssyt(shape, k):
        c = t.content(k)
        acc[c] = acc.get(c, 0) + 1
    return SparsePolynomial(k, acc)


def _alternant_polynomial(exponents: Sequence[int]) -> SparsePolynomial:
    m = len(exponents)
    if m > 5:
        raise ValueError("symbolic alternants are limited to at most 5 variables")
    terms = {}
    for perm in itertools.permutations(range(m)):
        terms[tuple(exponents[p] for p in perm)] = _permutation_sign(perm)
    return SparsePolynomial(m, terms)


def vandermonde_polynomial(k: int) -> SparsePolynomial:
    """``V_k`` as a polynomial: signed sum over permutations of ``u_i^(sigma(i))``."""
    return _alternant_polynomial(range(k))


def generalized_vandermonde_polynomial(alpha) -> SparsePolynomial:
    return _alternant_polynomial(as_index_tuple(alpha).values)
