"""Deterministic dense linear algebra and seeded sampling.

Singular value decompositions go through LAPACK; the principal triplet gets a
deterministic sign (largest-magnitude entry of u positive, ties broken by the
smallest index).  Random draws come from the counter-based Philox generator
keyed by (master, stream), with normals produced by the Box-Muller transform,
so every draw is reproducible from a Seed alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .core import DenseTensor

__all__ = [
    "SvdResult",
    "svd",
    "top_singular_triplet",
    "complete_basis",
    "Seed",
    "gaussian_array",
    "gaussian_tensor",
    "uniform_array",
    "random_unit_vector",
    "random_orthogonal",
]


@dataclass(frozen=True)
class SvdResult:
    """Thin SVD A = U diag(s) V^T with singular values descending."""

    u: np.ndarray
    singular_values: np.ndarray
    v: np.ndarray


def svd(a) -> SvdResult:
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    return SvdResult(u, s, vt.T)


def _principal_sign(u: np.ndarray) -> float:
    # argmax returns the first maximizer, which is the smallest-index tie rule
    k = int(np.argmax(np.abs(u)))
    return -1.0 if u[k] < 0 else 1.0


def top_singular_triplet(a) -> tuple[float, np.ndarray, np.ndarray]:
    """Leading (sigma, u, v) of a nonzero matrix with the deterministic sign."""
    a = np.atleast_2d(np.asarray(a, dtype=np.float64))
    if not a.any():
        raise ValueError("zero matrix has no principal singular triplet")
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    sign = _principal_sign(u[:, 0])
    return float(s[0]), sign * u[:, 0], sign * vt[0]


def complete_basis(u) -> np.ndarray:
    """Orthogonal matrix whose first column is the given unit vector.

    Deterministic Householder rule: reflect through u + e1 (or u - e1 when
    u[0] < 0) and fix column signs so that complete_basis(e1) is the identity.
    """
    u = np.asarray(u, dtype=np.float64)
    if u.ndim != 1 or u.size < 1:
        raise ValueError("expected a vector")
    nrm = np.linalg.norm(u)
    if abs(nrm - 1.0) > 1e-8:
        raise ValueError(f"expected a unit vector, norm is {nrm}")
    u = u / nrm
    n = u.size
    e1 = np.zeros(n)
    e1[0] = 1.0
    if u[0] >= 0:
        v = u + e1
        q = 2.0 * np.outer(v, v) / (v @ v) - np.eye(n)
        q[:, 1:] *= -1.0
    else:
        v = u - e1
        q = np.eye(n) - 2.0 * np.outer(v, v) / (v @ v)
    q[:, 0] = u
    return q


@dataclass(frozen=True)
class Seed:
    """Reproducible generator identity: a master seed plus a stream id."""

    master: int
    stream: int = 0

    def __post_init__(self):
        if not 0 <= int(self.master) < 2**64:
            raise ValueError("master seed must fit in uint64")
        if not 0 <= int(self.stream) < 2**64:
            raise ValueError("stream id must fit in uint64")

    def child(self, i: int) -> "Seed":
        """Derived stream; children of distinct streams never collide for i < 2^16."""
        return Seed(self.master, self.stream * 2**16 + int(i) + 1)


DEFAULT_SEED = Seed(42)


def _generator(seed: Seed) -> np.random.Generator:
    key = np.array([seed.master, seed.stream], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def uniform_array(shape, seed: Seed, low: float = 0.0, high: float = 1.0) -> np.ndarray:
    """Uniform draws on [low, high) from the counter-based stream."""
    gen = _generator(seed)
    return low + (high - low) * gen.random(shape)


def gaussian_array(shape, seed: Seed) -> np.ndarray:
    """Standard normals via Box-Muller on Philox uniforms."""
    shape = tuple(int(n) for n in shape)
    n = prod(shape) if shape else 1
    gen = _generator(seed)
    m = (n + 1) // 2
    u1 = gen.random(m)
    u2 = gen.random(m)
    # 1 - u1 lies in (0, 1], so the log is finite
    r = np.sqrt(-2.0 * np.log1p(-u1))
    z = np.concatenate([r * np.cos(2.0 * np.pi * u2), r * np.sin(2.0 * np.pi * u2)])
    return z[:n].reshape(shape)


def gaussian_tensor(shape, seed: Seed) -> DenseTensor:
    """Tensor with independent standard normal entries, filled in C order."""
    return DenseTensor(gaussian_array(tuple(shape), seed))


def random_unit_vector(n: int, seed: Seed) -> np.ndarray:
    v = gaussian_array((int(n),), seed)
    nrm = np.linalg.norm(v)
    if nrm == 0.0:
        v[0] = 1.0
        nrm = 1.0
    return v / nrm


def random_orthogonal(n: int, seed: Seed) -> np.ndarray:
    """Haar-ish orthogonal matrix: QR of a Gaussian with positive R diagonal."""
    g = gaussian_array((int(n), int(n)), seed)
    q, r = np.linalg.qr(g)
    return q * np.where(np.diag(r) < 0, -1.0, 1.0)
