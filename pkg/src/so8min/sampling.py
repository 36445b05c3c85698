"""Seeded exact samplers.

All randomness goes through numpy's PCG64 bit generator so that a seed gives
the same stream on every platform and numpy release that ships PCG64.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .linalg import Mat

DEFAULT_RANGE = 3


def make_rng(seed: int | None = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def rand_int(rng: np.random.Generator, lo: int = -DEFAULT_RANGE, hi: int = DEFAULT_RANGE) -> int:
    """Uniform integer in [lo, hi]."""
    return int(rng.integers(lo, hi + 1))


def rand_nonzero(rng, lo: int = -DEFAULT_RANGE, hi: int = DEFAULT_RANGE) -> int:
    while True:
        x = rand_int(rng, lo, hi)
        if x:
            return x


def rand_scalar(rng, bound: int = DEFAULT_RANGE, denominators=(1, 1, 1, 2, 3)) -> Fraction:
    den = denominators[int(rng.integers(0, len(denominators)))]
    return Fraction(rand_int(rng, -bound, bound), den)


def rand_vector(rng, n: int, bound: int = DEFAULT_RANGE) -> tuple:
    return tuple(Fraction(rand_int(rng, -bound, bound)) for _ in range(n))


def rand_matrix(rng, rows: int, cols: int, bound: int = DEFAULT_RANGE) -> Mat:
    return Mat(rows, cols, (Fraction(rand_int(rng, -bound, bound)) for _ in range(rows * cols)))


def rand_unitriangular(rng, n: int, bound: int = 2) -> Mat:
    return Mat(n, n, (Fraction(1) if i == j else Fraction(rand_int(rng, -bound, bound)) if j > i else Fraction(0)
                      for i in range(n) for j in range(n)))


def rand_sl(rng, n: int, bound: int = 2, factors: int = 3) -> Mat:
    """A random element of SL_n(Z): products of upper and lower unitriangular matrices."""
    g = Mat.identity(n)
    for _ in range(factors):
        u = rand_unitriangular(rng, n, bound)
        l = rand_unitriangular(rng, n, bound).T
        g = g @ u @ l
    return g


def rand_word(rng, length: int = 8, bound: int = 2) -> list[tuple[int, int, Fraction]]:
    """A word for :func:`so8min.orthogonal.sample_min_orbit`."""
    return [(int(rng.integers(0, 12)), 1 if rng.integers(0, 2) else -1, Fraction(rand_int(rng, -bound, bound)))
            for _ in range(length)]
