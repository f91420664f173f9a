"""Seeded exact sampling of small rational parameters.

Every sample index gets its own generator derived from ``(seed, index)``, so a
sample does not depend on how many others were drawn before it or on which
worker drew it.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalar import Scalar

NUMERATORS = range(-3, 4)
DENOMINATORS = (1, 2)


def rng_for(seed: int, index: int = 0, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index, stream])))


def rand_rational(rng: np.random.Generator, nonzero: bool = False) -> Fraction:
    while True:
        num = int(rng.integers(NUMERATORS.start, NUMERATORS.stop))
        den = int(rng.choice(DENOMINATORS))
        if num or not nonzero:
            return Fraction(num, den)


def rand_scalar(rng: np.random.Generator, nonzero: bool = False) -> Scalar:
    while True:
        s = Scalar(rand_rational(rng), rand_rational(rng))
        if s or not nonzero:
            return s


def rand_invertible(rng: np.random.Generator, n: int) -> list:
    from .linalg import det

    while True:
        m = [[rand_scalar(rng) for _ in range(n)] for _ in range(n)]
        if det(m):
            return m
