"""Pure numpy contraction kernels (fallback when the compiled core is absent).

Each function contracts a C-ordered float64 array with one vector per mode,
skipping the kept modes.  Contracting from the highest mode downward keeps
the remaining axis numbering stable, so no transposes are needed.
"""

import numpy as np


def _contract(data, vectors, keep):
    a = data
    for m in range(data.ndim - 1, -1, -1):
        if m in keep:
            continue
        a = np.tensordot(a, vectors[m], axes=([m], [0]))
    return a


def contract_all(data, vectors) -> float:
    """Full overlap <X, u^1 x ... x u^d>."""
    return float(_contract(data, vectors, ()))


def contract_except_one(data, vectors, mu) -> np.ndarray:
    """Contract every mode but mu; returns a vector of length data.shape[mu]."""
    return np.ascontiguousarray(_contract(data, vectors, (mu,)))


def contract_except_two(data, vectors, mu, nu) -> np.ndarray:
    """Contract every mode but mu < nu; returns a shape (n_mu, n_nu) matrix."""
    return np.ascontiguousarray(_contract(data, vectors, (mu, nu)))
