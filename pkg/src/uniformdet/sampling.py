"""Seeded random specs for property tests, acceptance runs and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import GaussianRational, Scalar
from .uniform import UniformMatrixSpec


def rng_for(seed, *labels) -> random.Random:
    """Independent deterministic stream per ``(seed, labels...)``."""
    return random.Random(":".join(str(v) for v in (seed, *labels)))


def random_rational(rng: random.Random, bound: int = 9, max_den: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if v or not nonzero:
            return v


def random_positive_rational(rng: random.Random, bound: int = 9, max_den: int = 5) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, max_den))


def random_gaussian(rng: random.Random, bound: int = 5, max_den: int = 3) -> Scalar:
    return GaussianRational(random_rational(rng, bound, max_den), random_rational(rng, bound, max_den))


def _distinct(rng: random.Random, n: int, draw) -> list[Scalar]:
    out: list[Scalar] = []
    while len(out) < n:
        v = draw(rng)
        if v not in out:
            out.append(v)
    return out


def random_spec(rng: random.Random, k: int, ell: int, field: str = "rational") -> UniformMatrixSpec:
    """Arbitrary data over Q or Q(i), with injective r."""
    if field == "rational":
        draw = random_rational
    elif field == "gaussian":
        draw = random_gaussian
    else:
        raise ValueError(f"unknown field {field!r}")
    return UniformMatrixSpec(
        k=k,
        ell=ell,
        x=tuple(draw(rng) for _ in range(k)),
        y=tuple(draw(rng) for _ in range(k)),
        r=tuple(_distinct(rng, k, draw)),
    )


def random_positive_spec(rng: random.Random, k: int, ell: int) -> UniformMatrixSpec:
    """Positive x, y with pairwise distinct ratios y/x and positive injective r."""
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    ratios: set[Fraction] = set()
    while len(xs) < k:
        x, y = random_positive_rational(rng), random_positive_rational(rng)
        if y / x in ratios:
            continue
        ratios.add(y / x)
        xs.append(x)
        ys.append(y)
    r = _distinct(rng, k, random_positive_rational)
    return UniformMatrixSpec(k=k, ell=ell, x=tuple(xs), y=tuple(ys), r=tuple(r))


def with_unit_steps(spec: UniformMatrixSpec) -> UniformMatrixSpec:
    """Same x, y, ell with ``r = (1, ..., k)``."""
    return UniformMatrixSpec(k=spec.k, ell=spec.ell, x=spec.x, y=spec.y, r=tuple(range(1, spec.k + 1)))


def three_route_corpus(seed: int = 0, count: int = 500, max_size: int = 6) -> list[UniformMatrixSpec]:
    """Specs with ``k <= ell + 1 <= max_size``; every second one uses ``r = (1..k)``."""
    rng = rng_for(seed, "three-route")
    pairs = [(k, ell) for ell in range(max_size) for k in range(1, ell + 2)]
    out = []
    for n in range(count):
        k, ell = pairs[n % len(pairs)]
        spec = random_spec(rng, k, ell)
        if n % 2:
            spec = with_unit_steps(spec)
        out.append(spec)
    return out
