# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mode-contraction kernels for the iteration hot path.

Axes are contracted one at a time from the highest mode downward; the
surviving axes keep their C-order layout, so a whole multilinear contraction
runs as a few tight strided loops with no transposes and no temporaries
beyond two ping-pong buffers.
"""

from libc.string cimport memset

import numpy as np


cdef void _axis_kernel(const double* src, double* dst,
                       Py_ssize_t outer, Py_ssize_t n, Py_ssize_t inner,
                       const double* u) noexcept nogil:
    # src has logical shape (outer, n, inner); dst gets (outer, inner).
    cdef Py_ssize_t o, j, k
    cdef double c
    cdef const double* s
    cdef double* d
    for o in range(outer):
        d = dst + o * inner
        memset(d, 0, <size_t> inner * sizeof(double))
        for j in range(n):
            c = u[j]
            if c == 0.0:
                continue
            s = src + (o * n + j) * inner
            for k in range(inner):
                d[k] += c * s[k]


def _contract(object data, list vectors, tuple keep):
    cdef Py_ssize_t d = data.ndim
    cdef Py_ssize_t m, outer, n, inner, i
    cdef const double[::1] cur
    cdef const double[::1] uvec
    cdef double[::1] nxt

    dims = list(data.shape)
    arr = np.ascontiguousarray(data, dtype=np.float64).reshape(-1)
    rem = dims[:]
    for m in range(d - 1, -1, -1):
        if m in keep:
            continue
        outer = 1
        for i in range(m):
            outer *= rem[i]
        n = rem[m]
        inner = 1
        for i in range(m + 1, len(rem)):
            inner *= rem[i]
        out = np.empty(outer * inner, dtype=np.float64)
        cur = arr
        nxt = out
        uvec = np.ascontiguousarray(vectors[m], dtype=np.float64)
        if uvec.shape[0] != n:
            raise ValueError("factor length does not match mode size")
        with nogil:
            _axis_kernel(&cur[0], &nxt[0], outer, n, inner, &uvec[0])
        arr = out
        del rem[m]
    return arr.reshape([dims[m] for m in keep])


def contract_all(data, vectors) -> float:
    """Full overlap <X, u^1 x ... x u^d>."""
    return float(_contract(data, list(vectors), ()))


def contract_except_one(data, vectors, mu):
    """Contract every mode but mu; returns a vector of length data.shape[mu]."""
    return _contract(data, list(vectors), (int(mu),))


def contract_except_two(data, vectors, mu, nu):
    """Contract every mode but mu < nu; returns a shape (n_mu, n_nu) matrix."""
    return _contract(data, list(vectors), (int(mu), int(nu)))
