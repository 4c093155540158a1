"""Orthogonal tensor constructions and the polarization-grid checker.

A tensor X with nondecreasing mode sizes n_1 <= ... <= n_d is orthogonal when
contracting the first d-1 modes with any unit vectors yields a unit vector:
||X(u^1, ..., u^{d-1}, .)|| = prod ||u^mu||.  Such tensors have spectral norm
one and attain the extreme Frobenius-to-spectral ratio, which is what makes
them worth constructing.  Sources here: composition algebra multiplication
tables, block-diagonal tall tensors, and an order-raising lift that replaces
one mode by an algebra-indexed pair of modes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core import DenseTensor, FactorTuple, frobenius_norm, permute_modes
from .linalg import (
    Seed,
    complete_basis,
    random_orthogonal,
    random_unit_vector,
    uniform_array,
)

__all__ = [
    "Algebra",
    "OrthogonalityReport",
    "mult_tensor",
    "tall_orthogonal",
    "lift_orthogonal",
    "subtensor",
    "check_orthogonal",
    "fooling_tensor",
    "known4_tensor",
]


class Algebra(enum.Enum):
    """The four real composition algebras, named by their dimension."""

    REALS = 1
    COMPLEXES = 2
    QUATERNIONS = 4
    OCTONIONS = 8

    @property
    def dim(self) -> int:
        return self.value

    @classmethod
    def from_dim(cls, n: int) -> "Algebra":
        try:
            return cls(int(n))
        except ValueError:
            raise ValueError(f"no composition algebra of dimension {n}; use 1, 2, 4 or 8")

    @classmethod
    def from_name(cls, name: str) -> "Algebra":
        try:
            return cls[name.strip().upper()]
        except KeyError:
            choices = ", ".join(a.name.lower() for a in cls)
            raise ValueError(f"unknown algebra {name!r}; choose one of {choices}")


# Multiplication tables: entry [i][j] = s*k means e_i * e_j = s * e_k (1-based).
_TABLES = {
    Algebra.REALS: [[1]],
    Algebra.COMPLEXES: [[1, 2], [2, -1]],
    Algebra.QUATERNIONS: [
        [1, 2, 3, 4],
        [2, -1, 4, -3],
        [3, -4, -1, 2],
        [4, 3, -2, -1],
    ],
    Algebra.OCTONIONS: [
        [1, 2, 3, 4, 5, 6, 7, 8],
        [2, -1, 4, -3, 6, -5, -8, 7],
        [3, -4, -1, 2, 7, 8, -5, -6],
        [4, 3, -2, -1, 8, -7, 6, -5],
        [5, -6, -7, -8, -1, 2, 3, 4],
        [6, 5, -8, 7, -2, -1, -4, 3],
        [7, 8, 5, -6, -3, 4, -1, -2],
        [8, -7, 6, 5, -4, -3, 2, -1],
    ],
}


def mult_table(algebra: Algebra) -> list[list[int]]:
    """Signed 1-based index table of the algebra's basis products."""
    return [row[:] for row in _TABLES[algebra]]


def mult_tensor(algebra: Algebra) -> DenseTensor:
    """The n x n x n multiplication tensor: fiber (i, j, .) holds e_i * e_j."""
    table = _TABLES[algebra]
    n = algebra.dim
    x = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            v = table[i][j]
            x[i, j, abs(v) - 1] = 1.0 if v > 0 else -1.0
    return DenseTensor(x)


def _validated_blocks(blocks, l: int, m: int) -> list[np.ndarray]:
    mats = [np.asarray(b, dtype=np.float64) for b in blocks]
    if len(mats) != l:
        raise ValueError(f"expected {l} blocks, got {len(mats)}")
    for b in mats:
        if b.shape != (m, m):
            raise ValueError(f"blocks must be {m}x{m}, got {b.shape}")
        if np.max(np.abs(b.T @ b - np.eye(m))) > 1e-12:
            raise ValueError("blocks must be orthogonal matrices")
    return mats


def tall_orthogonal(l: int, m: int, n: int, blocks=None, seed: Seed | None = None) -> DenseTensor:
    """Orthogonal l x m x n tensor from l orthogonal m x m blocks.

    Slice i of the result is the i-th block placed at column offset i*m and
    zero elsewhere, so distinct slices occupy disjoint columns.  Blocks
    default to identities, or to seeded random orthogonal matrices.
    """
    l, m, n = int(l), int(m), int(n)
    if not 1 <= l <= m <= n:
        raise ValueError(f"need 1 <= l <= m <= n, got ({l}, {m}, {n})")
    if l * m > n:
        raise ValueError(f"need l*m <= n, got {l}*{m} > {n}")
    if blocks is None:
        if seed is None:
            blocks = [np.eye(m)] * l
        else:
            blocks = [random_orthogonal(m, seed.child(i)) for i in range(l)]
    mats = _validated_blocks(blocks, l, m)
    x = np.zeros((l, m, n))
    for i, b in enumerate(mats):
        x[i, :, i * m : (i + 1) * m] = b
    return DenseTensor(x)


def lift_orthogonal(
    x: DenseTensor, mu: int, algebra: Algebra, slices=None, tol: float = 1e-10
) -> DenseTensor:
    """Raise the order of an orthogonal tensor by one.

    Mode mu (not the last mode) is replaced by an n x n pair of modes, n the
    algebra dimension: the slab of the result at pair index (i, j) is the
    signed mode-mu slice of x selected by the algebra table entry e_i * e_j.
    Requires n <= n_mu and n distinct slice indices (default: the first n).
    """
    d = x.order
    mu = int(mu)
    if not 0 <= mu <= d - 2:
        raise ValueError(f"mode {mu} must not be the last mode of an order-{d} tensor")
    dims = x.shape
    if list(dims) != sorted(dims):
        raise ValueError("mode sizes must be nondecreasing; permute first")
    n = algebra.dim
    if n > dims[mu]:
        raise ValueError(f"algebra dimension {n} exceeds mode size {dims[mu]}")
    if slices is None:
        slices = tuple(range(n))
    slices = tuple(int(k) for k in slices)
    if len(slices) != n or len(set(slices)) != n:
        raise ValueError(f"need {n} distinct slice indices, got {slices}")
    if any(not 0 <= k < dims[mu] for k in slices):
        raise ValueError(f"slice indices out of range for mode size {dims[mu]}")
    report = check_orthogonal(x, tol=tol)
    if not report.is_orthogonal:
        raise ValueError(
            f"input is not orthogonal (max violation {report.max_violation:.3e})"
        )
    table = _TABLES[algebra]
    out = np.empty(dims[:mu] + (n, n) + dims[mu + 1 :])
    slabs = [np.take(x.data, k, axis=mu) for k in slices]
    head = (slice(None),) * mu
    for i in range(n):
        for j in range(n):
            v = table[i][j]
            sign = 1.0 if v > 0 else -1.0
            out[head + (i, j)] = sign * slabs[abs(v) - 1]
    return DenseTensor(out)


def subtensor(x: DenseTensor, selections) -> DenseTensor:
    """Restrict modes 0..d-2 to index subsets, keeping the last mode whole.

    Orthogonality survives this restriction, which is how small catalog
    entries are carved out of the algebra tensors.
    """
    d = x.order
    sels = [tuple(int(i) for i in s) for s in selections]
    if len(sels) != d - 1:
        raise ValueError(f"expected {d - 1} index subsets, got {len(sels)}")
    for mu, s in enumerate(sels):
        if not s:
            raise ValueError(f"mode {mu} selection is empty")
        if len(set(s)) != len(s):
            raise ValueError(f"mode {mu} selection has repeats: {s}")
        if any(not 0 <= i < x.shape[mu] for i in s):
            raise ValueError(f"mode {mu} selection out of range: {s}")
    index = np.ix_(*[list(s) for s in sels], list(range(x.shape[d - 1])))
    return DenseTensor(x.data[index])


@dataclass(frozen=True)
class OrthogonalityReport:
    """Outcome of the polarization-grid check, in sorted-mode orientation."""

    is_orthogonal: bool
    max_violation: float
    witness: FactorTuple | None
    permutation: tuple[int, ...]
    grid_size: int


def _polarization_candidates(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All e_i and e_i + e_j (i < j) as rows, with their squared norms."""
    rows = [np.eye(n)]
    norms = [np.ones(n)]
    if n > 1:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        p = np.zeros((len(pairs), n))
        for r, (i, j) in enumerate(pairs):
            p[r, i] = 1.0
            p[r, j] = 1.0
        rows.append(p)
        norms.append(np.full(len(pairs), 2.0))
    return np.vstack(rows), np.concatenate(norms)


def check_orthogonal(x: DenseTensor, tol: float = 1e-10) -> OrthogonalityReport:
    """Decide orthogonality by exhausting a quadratic polarization grid.

    Modes are sorted nondecreasing first (the defining property reads the
    largest mode last).  The defect ||X(s^1, ..., s^{d-1}, .)||^2 - prod
    ||s^mu||^2 is a difference of quadratic forms in each argument, so its
    vanishing on all e_i and e_i + e_j per mode forces vanishing everywhere;
    the grid is therefore a complete certificate, not a sample.
    """
    d = x.order
    perm = tuple(int(p) for p in np.argsort(x.shape, kind="stable"))
    xs = permute_modes(x, perm) if perm != tuple(range(d)) else x
    scale = frobenius_norm(x) ** 2

    if d == 1:
        violation = abs(float(x.data @ x.data) - 1.0)
        return OrthogonalityReport(
            is_orthogonal=bool(violation <= tol * scale),
            max_violation=violation,
            witness=None,
            permutation=perm,
            grid_size=1,
        )

    cands = []
    norms2 = []
    for mu in range(d - 1):
        c, q = _polarization_candidates(xs.shape[mu])
        cands.append(c)
        norms2.append(q)

    b = xs.data
    for mu in range(d - 1):
        b = np.moveaxis(np.tensordot(b, cands[mu], axes=([mu], [1])), -1, mu)
    values = np.sum(b * b, axis=-1)
    expected = norms2[0]
    for q in norms2[1:]:
        expected = np.multiply.outer(expected, q)
    defect = np.abs(values - expected)

    flat = int(np.argmax(defect))
    where = np.unravel_index(flat, defect.shape)
    witness = FactorTuple(tuple(cands[mu][where[mu]] for mu in range(d - 1)))
    violation = float(defect[where])
    return OrthogonalityReport(
        is_orthogonal=bool(violation <= tol * scale),
        max_violation=violation,
        witness=witness,
        permutation=perm,
        grid_size=int(defect.size),
    )


def fooling_tensor(n: int) -> DenseTensor:
    """Cyclic-shift tensor: slice (., ., k) is the k-th power of the shift.

    Every matricization has orthogonal rows of equal norm sqrt(n), so rank
    truncations see a flat spectrum and initialize alternating methods at an
    elementary critical point with value 1, far below the norm sqrt(n).
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be positive")
    x = np.zeros((n, n, n))
    i = np.arange(n)
    for k in range(n):
        x[i, (i + k) % n, k] = 1.0
    return DenseTensor(x)


def known4_tensor(
    n: int, m: int, seed: Seed, eig_band: float = 0.9
) -> tuple[DenseTensor, np.ndarray, np.ndarray]:
    """Order-4 test tensor sum_i A_i (x) B_i with a planted maximizer.

    A_i and B_i are symmetric with top eigenpair (1, a) resp. (1, b) and the
    remaining eigenvalues uniform in [-eig_band, eig_band]; the band stays
    inside (-1, 1) so the spectral norm is exactly m, attained at a x a x b x b.
    Returns (X, a, b).
    """
    n, m = int(n), int(m)
    if n < 2:
        raise ValueError("n must be at least 2")
    if m < 1:
        raise ValueError("m must be at least 1")
    if not 0.0 <= eig_band < 1.0:
        raise ValueError("eig_band must lie in [0, 1)")
    a = random_unit_vector(n, seed.child(1))
    b = random_unit_vector(n, seed.child(2))
    qa = complete_basis(a)
    qb = complete_basis(b)
    mats_a = np.empty((m, n, n))
    mats_b = np.empty((m, n, n))
    for i in range(m):
        lam = np.concatenate(
            [[1.0], uniform_array(n - 1, seed.child(3 + 2 * i), -eig_band, eig_band)]
        )
        mu = np.concatenate(
            [[1.0], uniform_array(n - 1, seed.child(4 + 2 * i), -eig_band, eig_band)]
        )
        mats_a[i] = (qa * lam) @ qa.T
        mats_b[i] = (qb * mu) @ qb.T
    x = np.einsum("ipq,irs->pqrs", mats_a, mats_b)
    return DenseTensor(x), a, b
