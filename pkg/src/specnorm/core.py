"""Dense real tensors with C-order storage and the basic multilinear operations.

A tensor of order d holds float64 entries indexed by (i_1, ..., i_d); the flat
storage runs through the last index fastest.  Modes are 0-based throughout the
Python API (the command line speaks 1-based and translates).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from math import prod

import numpy as np

__all__ = [
    "DenseTensor",
    "FactorTuple",
    "make_tensor",
    "rank_one",
    "frobenius_inner",
    "frobenius_norm",
    "mode_contract",
    "multiform_apply",
    "matricize",
    "tensor_slice",
    "fiber",
    "permute_modes",
    "tensor_to_dict",
    "tensor_from_dict",
    "save_tensor",
    "load_tensor",
]


def _validated_dims(shape) -> tuple[int, ...]:
    dims = tuple(int(n) for n in shape)
    if len(dims) < 1:
        raise ValueError("tensor order must be at least 1")
    if any(n < 1 for n in dims):
        raise ValueError(f"all mode sizes must be positive, got {dims}")
    return dims


class DenseTensor:
    """Immutable dense real tensor of order >= 1."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.float64, order="C", copy=True)
        _validated_dims(arr.shape)
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("DenseTensor is immutable")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def order(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    def __getitem__(self, index):
        return self.data[index]

    def __repr__(self):
        dims = "x".join(str(n) for n in self.shape)
        return f"DenseTensor({dims})"


@dataclass(frozen=True)
class FactorTuple:
    """One vector per mode, flagged normalized when every vector is unit."""

    vectors: tuple[np.ndarray, ...]
    normalized: bool = field(init=False)

    def __post_init__(self):
        vecs = tuple(np.asarray(v, dtype=np.float64) for v in self.vectors)
        if any(v.ndim != 1 or v.size < 1 for v in vecs):
            raise ValueError("factors must be nonempty vectors")
        object.__setattr__(self, "vectors", vecs)
        unit = all(abs(np.linalg.norm(v) - 1.0) <= 1e-12 for v in vecs)
        object.__setattr__(self, "normalized", unit)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(v.size for v in self.vectors)


def make_tensor(shape, data) -> DenseTensor:
    """Build a tensor from a shape and flat entries listed in C order."""
    dims = _validated_dims(shape)
    flat = np.asarray(data, dtype=np.float64).ravel()
    if flat.size != prod(dims):
        raise ValueError(
            f"data length {flat.size} does not match shape {dims} (expected {prod(dims)})"
        )
    return DenseTensor(flat.reshape(dims))


def _factor_vectors(factors) -> list[np.ndarray]:
    vecs = list(factors.vectors if isinstance(factors, FactorTuple) else factors)
    if not vecs:
        raise ValueError("at least one factor vector is required")
    return [np.asarray(v, dtype=np.float64) for v in vecs]


def rank_one(factors) -> DenseTensor:
    """Outer product of one vector per mode."""
    vecs = _factor_vectors(factors)
    return DenseTensor(reduce(np.multiply.outer, vecs))


def frobenius_inner(x: DenseTensor, y: DenseTensor) -> float:
    """Entrywise inner product <X, Y>."""
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return float(np.dot(x.data.ravel(), y.data.ravel()))


def frobenius_norm(x: DenseTensor) -> float:
    return float(np.linalg.norm(x.data.ravel()))


def _check_mode(x: DenseTensor, mu: int) -> int:
    mu = int(mu)
    if not 0 <= mu < x.order:
        raise ValueError(f"mode {mu} out of range for order-{x.order} tensor")
    return mu


def mode_contract(x: DenseTensor, mu: int, u) -> DenseTensor:
    """Contract mode mu with the vector u, dropping that mode."""
    mu = _check_mode(x, mu)
    if x.order < 2:
        raise ValueError("mode_contract needs order >= 2; the result must keep a mode")
    u = np.asarray(u, dtype=np.float64)
    if u.shape != (x.shape[mu],):
        raise ValueError(f"vector length {u.size} does not match mode size {x.shape[mu]}")
    return DenseTensor(np.tensordot(x.data, u, axes=([mu], [0])))


def multiform_apply(x: DenseTensor, vectors) -> np.ndarray:
    """Contract modes 0..d-2 with the given vectors; returns the mode-(d-1) vector.

    With zero vectors required (order-1 input) the tensor itself is returned.
    """
    vecs = [np.asarray(v, dtype=np.float64) for v in vectors]
    if len(vecs) != x.order - 1:
        raise ValueError(f"expected {x.order - 1} vectors, got {len(vecs)}")
    a = x.data
    for mu in range(x.order - 2, -1, -1):
        a = np.tensordot(a, vecs[mu], axes=([mu], [0]))
    return np.ascontiguousarray(a)


def matricize(x: DenseTensor, row_modes) -> np.ndarray:
    """Unfold into a matrix whose rows are indexed by the given modes.

    Row and column multi-indices are linearized over their modes in ascending
    order with the last-listed index fastest, matching the flat storage rule.
    """
    rows = sorted({_check_mode(x, m) for m in row_modes})
    if not rows or len(rows) == x.order:
        raise ValueError("row modes must be a nonempty proper subset of the modes")
    cols = [m for m in range(x.order) if m not in rows]
    a = np.transpose(x.data, rows + cols)
    return np.ascontiguousarray(a.reshape(prod(x.shape[m] for m in rows), -1))


def tensor_slice(x: DenseTensor, mu: int, index: int) -> DenseTensor:
    """Fix one index of mode mu; returns the order-(d-1) slab."""
    mu = _check_mode(x, mu)
    if x.order < 2:
        raise ValueError("slicing needs order >= 2")
    index = int(index)
    if not 0 <= index < x.shape[mu]:
        raise ValueError(f"index {index} out of range for mode of size {x.shape[mu]}")
    return DenseTensor(np.take(x.data, index, axis=mu))


def fiber(x: DenseTensor, nu: int, fixed) -> np.ndarray:
    """The mode-nu fiber at the fixed indices of the remaining d-1 modes."""
    nu = _check_mode(x, nu)
    fixed = tuple(int(i) for i in fixed)
    others = [m for m in range(x.order) if m != nu]
    if len(fixed) != len(others):
        raise ValueError(f"expected {len(others)} fixed indices, got {len(fixed)}")
    idx: list = [slice(None)] * x.order
    for m, i in zip(others, fixed):
        if not 0 <= i < x.shape[m]:
            raise ValueError(f"index {i} out of range for mode of size {x.shape[m]}")
        idx[m] = i
    return np.ascontiguousarray(x.data[tuple(idx)])


def permute_modes(x: DenseTensor, perm) -> DenseTensor:
    """Reorder modes so that mode k of the result is mode perm[k] of the input."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(x.order)):
        raise ValueError(f"{perm} is not a permutation of 0..{x.order - 1}")
    return DenseTensor(np.transpose(x.data, perm))


def tensor_to_dict(x: DenseTensor) -> dict:
    return {"shape": list(x.shape), "data": x.data.ravel().tolist()}


def tensor_from_dict(obj) -> DenseTensor:
    if not isinstance(obj, dict) or "shape" not in obj or "data" not in obj:
        raise ValueError('tensor JSON must be an object with "shape" and "data"')
    return make_tensor(obj["shape"], obj["data"])


def save_tensor(x: DenseTensor, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(tensor_to_dict(x), fh)
        fh.write("\n")


def load_tensor(path) -> DenseTensor:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {exc}") from exc
    return tensor_from_dict(obj)
