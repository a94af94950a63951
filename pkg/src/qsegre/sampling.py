"""Random states, factors, unitaries, and rational test data.

Used by the test suite and the experiment scripts; everything takes an
explicit numpy Generator so runs are reproducible.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .gaussrat import GaussRat
from .states import LocalState, PureState, make_local, make_state, segre_map


def default_rng(seed: int | None = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_local_state(rng: np.random.Generator, dim: int = 2) -> LocalState:
    """Unit-norm complex Gaussian local vector."""
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v = v / np.linalg.norm(v)
    return make_local([complex(x) for x in v])


def random_product_state(rng: np.random.Generator, dims) -> PureState:
    return segre_map([random_local_state(rng, d) for d in dims])


def random_haar_state(rng: np.random.Generator, dims) -> PureState:
    """Normalized complex Gaussian amplitude tensor (Haar on the sphere)."""
    n = int(np.prod(dims))
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    v = v / np.linalg.norm(v)
    return make_state(list(dims), [complex(x) for x in v])


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar unitary via QR of a Ginibre matrix with phase correction."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_fraction(rng: np.random.Generator, span: int = 9) -> Fraction:
    return Fraction(int(rng.integers(-span, span + 1)), int(rng.integers(1, span + 1)))


def random_gaussrat(rng: np.random.Generator, span: int = 9) -> GaussRat:
    return GaussRat(random_fraction(rng, span), random_fraction(rng, span))


def random_exact_local(rng: np.random.Generator, dim: int = 2) -> LocalState:
    while True:
        vec = [random_gaussrat(rng) for _ in range(dim)]
        if any(bool(x) for x in vec):
            return make_local(vec)


def random_exact_product_state(rng: np.random.Generator, dims) -> PureState:
    return segre_map([random_exact_local(rng, d) for d in dims])


def random_exact_matrix(rng: np.random.Generator, k: int, n: int, span: int = 9) -> list[list[GaussRat]]:
    return [[random_gaussrat(rng, span) for _ in range(n)] for _ in range(k)]
