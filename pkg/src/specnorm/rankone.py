"""Best rank-one approximation by alternating methods, with norm brackets.

The best rank-one approximation of X is sigma * u^1 x ... x u^d where the
unit factors maximize the overlap <X, u^1 x ... x u^d>; the maximum equals
the spectral norm, and the approximation error obeys
||X - Y||_F^2 = ||X||_F^2 - sigma^2.  Two local maximizers are provided:
HOPM updates one factor at a time, ASVD updates overlapping pairs through an
exact matrix SVD.  Both only certify lower bounds; upper bounds come from
matricization spectral norms and, when the input is a scalar multiple of an
orthogonal tensor, from that certificate, which is tight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import backend
from .core import DenseTensor, FactorTuple, frobenius_norm, matricize, rank_one
from .linalg import (
    DEFAULT_SEED,
    Seed,
    complete_basis,
    random_unit_vector,
    top_singular_triplet,
)
from .orthogonal import check_orthogonal

__all__ = [
    "OptimOptions",
    "RankOneResult",
    "NormBracket",
    "hosvd_init",
    "fiber_init",
    "ones_init",
    "random_init",
    "hopm",
    "asvd",
    "best_rank_one",
    "approximation_error",
    "spectral_norm_bounds",
    "nuclear_norm_bounds",
    "spectral_normal_form",
    "normal_form_residual",
    "fiber_decomposition",
]

INIT_CHOICES = ("multistart", "hosvd", "random", "fibers", "given")
METHOD_CHOICES = ("asvd", "hopm")


@dataclass(frozen=True)
class OptimOptions:
    """Knobs shared by the alternating methods.

    The stall test compares the overlap after consecutive sweeps:
    |sigma_k - sigma_{k-1}| <= tol * max(1, sigma_k).
    """

    method: str = "asvd"
    init: str = "multistart"
    restarts: int = 8
    tol: float = 1e-10
    max_sweeps: int = 500
    seed: Seed = field(default_factory=lambda: DEFAULT_SEED)

    def __post_init__(self):
        if self.method not in METHOD_CHOICES:
            raise ValueError(f"method must be one of {METHOD_CHOICES}")
        if self.init not in INIT_CHOICES:
            raise ValueError(f"init must be one of {INIT_CHOICES}")
        if self.restarts < 0:
            raise ValueError("restarts must be nonnegative")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")


@dataclass(frozen=True)
class RankOneResult:
    """A unit rank-one candidate: overlap sigma, factors, and the sweep trace."""

    sigma: float
    factors: FactorTuple
    sweeps: int
    converged: bool
    history: tuple[float, ...]


@dataclass(frozen=True)
class NormBracket:
    """Certified spectral norm bracket lower <= ||X||_2 <= upper.

    upper_split names the matricization row modes realizing the upper bound;
    it is None when the orthogonality certificate is the tighter one (or for
    vectors, where the bracket is already tight).  lower_witness and sweeps
    come from the best lower-bound run.
    """

    lower: float
    upper: float
    upper_split: tuple[int, ...] | None
    lower_witness: FactorTuple
    sweeps: int


def _nonzero(x: DenseTensor) -> float:
    nrm = frobenius_norm(x)
    if nrm == 0.0:
        raise ValueError("the zero tensor has no rank-one witness")
    return nrm


def hosvd_init(x: DenseTensor) -> FactorTuple:
    """Per mode, the top left singular vector of the single-mode matricization."""
    _nonzero(x)
    vecs = []
    for mu in range(x.order):
        _, u, _ = top_singular_triplet(matricize(x, (mu,)))
        vecs.append(u)
    return FactorTuple(tuple(vecs))


def fiber_init(x: DenseTensor) -> FactorTuple:
    """Elementary tuple on a largest-norm last-mode fiber, first index on ties."""
    _nonzero(x)
    norms = np.sqrt(np.sum(x.data**2, axis=-1))
    if x.order == 1:
        best = ()
    else:
        best = np.unravel_index(int(np.argmax(norms)), norms.shape)
    vecs = []
    for mu in range(x.order - 1):
        e = np.zeros(x.shape[mu])
        e[best[mu]] = 1.0
        vecs.append(e)
    f = np.ascontiguousarray(x.data[best])
    vecs.append(f / np.linalg.norm(f))
    return FactorTuple(tuple(vecs))


def ones_init(x: DenseTensor) -> FactorTuple:
    """Normalized all-ones factors; useful against adversarial flat spectra."""
    return FactorTuple(tuple(np.full(n, 1.0 / np.sqrt(n)) for n in x.shape))


def random_init(x: DenseTensor, seed: Seed) -> FactorTuple:
    """Independent uniform directions, one per mode."""
    return FactorTuple(
        tuple(random_unit_vector(n, seed.child(mu)) for mu, n in enumerate(x.shape))
    )


def _as_unit_vectors(x: DenseTensor, init) -> list[np.ndarray]:
    vecs = [np.asarray(v, dtype=np.float64) for v in init]
    if tuple(v.size for v in vecs) != x.shape:
        raise ValueError("initial factors do not match the tensor shape")
    out = []
    for v in vecs:
        nrm = np.linalg.norm(v)
        if nrm == 0.0:
            raise ValueError("initial factors must be nonzero")
        out.append(v / nrm)
    return out


def _finish(x, vecs, sweeps, converged, history) -> RankOneResult:
    sigma = backend.contract_all(x.data, vecs)
    return RankOneResult(
        sigma=float(sigma),
        factors=FactorTuple(tuple(vecs)),
        sweeps=sweeps,
        converged=converged,
        history=tuple(history),
    )


def hopm(x: DenseTensor, init, options: OptimOptions | None = None) -> RankOneResult:
    """Higher-order power method: cyclic single-factor updates.

    Each update replaces one factor by the normalized contraction against all
    others, which cannot decrease the overlap.  A zero contraction is a
    degenerate stall: factors are kept and the run reports converged=False.
    """
    opts = options or OptimOptions()
    _nonzero(x)
    vecs = _as_unit_vectors(x, init)
    d = x.order
    prev = backend.contract_all(x.data, vecs)
    history = []
    sweeps = 0
    converged = False
    for sweeps in range(1, opts.max_sweeps + 1):
        sigma = prev
        degenerate = False
        for mu in range(d):
            v = backend.contract_except_one(x.data, vecs, mu)
            nrm = float(np.linalg.norm(v))
            if nrm == 0.0:
                degenerate = True
                break
            vecs[mu] = v / nrm
            sigma = nrm
        history.append(sigma)
        if degenerate:
            break
        if abs(sigma - prev) <= opts.tol * max(1.0, abs(sigma)):
            converged = True
            break
        prev = sigma
    return _finish(x, vecs, sweeps, converged, history)


def asvd(x: DenseTensor, init, options: OptimOptions | None = None) -> RankOneResult:
    """Alternating SVD: exact best update of each overlapping factor pair.

    Sweeping pairs (0,1), (1,2), ..., (d-2,d-1), each pair is set to the top
    singular pair of the tensor contracted in the other modes.  The overlap
    trace is nondecreasing; a zero pair matrix is a degenerate stall.
    """
    opts = options or OptimOptions()
    _nonzero(x)
    if x.order < 2:
        raise ValueError("asvd needs order >= 2; use hopm or best_rank_one")
    vecs = _as_unit_vectors(x, init)
    d = x.order
    prev = backend.contract_all(x.data, vecs)
    history = []
    sweeps = 0
    converged = False
    for sweeps in range(1, opts.max_sweeps + 1):
        sigma = prev
        degenerate = False
        for mu in range(d - 1):
            m = backend.contract_except_two(x.data, vecs, mu, mu + 1)
            if not m.any():
                degenerate = True
                break
            sigma, u, v = top_singular_triplet(m)
            vecs[mu], vecs[mu + 1] = u, v
        history.append(sigma)
        if degenerate:
            break
        if abs(sigma - prev) <= opts.tol * max(1.0, abs(sigma)):
            converged = True
            break
        prev = sigma
    return _finish(x, vecs, sweeps, converged, history)


def _run_method(x, init, opts) -> RankOneResult:
    if opts.method == "hopm" or x.order < 2:
        return hopm(x, init, opts)
    return asvd(x, init, opts)


def best_rank_one(
    x: DenseTensor, options: OptimOptions | None = None, extra_starts=()
) -> RankOneResult:
    """Best overlap over a portfolio of starts chosen by options.init.

    "hosvd" and "fibers" run a single deterministic start, "random" sweeps
    options.restarts seeded starts, "multistart" combines all of them, and
    "given" runs only the extra_starts supplied by the caller.  Restart r
    draws from stream seed.child(r), so runs are reproducible and
    order-independent; ties keep the earliest start.
    """
    opts = options or OptimOptions()
    nrm = _nonzero(x)
    if x.order == 1:
        v = x.data / nrm
        return RankOneResult(nrm, FactorTuple((v,)), 0, True, (nrm,))
    starts: list = []
    if opts.init in ("multistart", "hosvd"):
        starts.append(hosvd_init(x))
    if opts.init in ("multistart", "fibers"):
        starts.append(fiber_init(x))
    if opts.init in ("multistart", "random"):
        starts.extend(random_init(x, opts.seed.child(r)) for r in range(opts.restarts))
    starts.extend(extra_starts)
    if not starts:
        raise ValueError('init "given" needs at least one entry in extra_starts')
    best = None
    for init in starts:
        res = _run_method(x, init, opts)
        if best is None or res.sigma > best.sigma:
            best = res
    return best


def approximation_error(x: DenseTensor, sigma: float, factors) -> float:
    """Frobenius distance ||X - sigma * u^1 x ... x u^d||_F."""
    y = rank_one(factors)
    return float(np.linalg.norm(x.data - float(sigma) * y.data))


def _mode_splits(d: int):
    # subsets containing mode 0 enumerate the splits once (complements agree)
    if d == 1:
        return
    if d <= 5:
        rest = range(1, d)
        for mask in range(2 ** (d - 1)):
            t = (0,) + tuple(m for m in rest if mask >> (m - 1) & 1)
            if len(t) < d:
                yield t
    else:
        for mu in range(d):
            yield (mu,)


def _orthogonal_scale(x: DenseTensor, tol: float = 1e-10) -> float | None:
    """Scale s with X = s * (orthogonal tensor), or None.

    When it applies, ||X||_2 = s exactly.  A cheap necessary filter (all
    last-mode fibers of the sorted tensor share the norm s) avoids running
    the full polarization grid on generic inputs.
    """
    dims = sorted(x.shape)
    s = frobenius_norm(x) / np.sqrt(prod(dims[:-1]))
    if s == 0.0:
        return None
    if x.order > 1:
        perm = np.argsort(x.shape, kind="stable")
        data = np.transpose(x.data, perm)
        fibers = np.sqrt(np.sum(data**2, axis=-1))
        if np.max(np.abs(fibers - s)) > 1e-6 * max(1.0, s):
            return None
    scaled = DenseTensor(x.data / s)
    if check_orthogonal(scaled, tol=tol).is_orthogonal:
        return float(s)
    return None


def _spectral_upper(x: DenseTensor) -> tuple[float, tuple[int, ...] | None]:
    upper = frobenius_norm(x)
    split: tuple[int, ...] | None = None
    for t in _mode_splits(x.order):
        s1 = float(np.linalg.svd(matricize(x, t), compute_uv=False)[0])
        if s1 < upper:
            upper, split = s1, t
    s = _orthogonal_scale(x)
    if s is not None and s < upper:
        upper, split = s, None
    return upper, split


def spectral_norm_bounds(
    x: DenseTensor, options: OptimOptions | None = None, extra_starts=()
) -> NormBracket:
    """Bracket the spectral norm: multistart witness below, certificates above.

    The upper bound is the smallest top singular value over the matricization
    splits (all splits through order 5, single modes beyond), improved to the
    exact value when X is recognized as a scalar multiple of an orthogonal
    tensor.
    """
    res = best_rank_one(x, options, extra_starts=extra_starts)
    upper, split = _spectral_upper(x)
    # the upper bound is a certificate; witness overlaps can only exceed it
    # by rounding, so order is restored on the lower side
    return NormBracket(
        lower=min(res.sigma, upper),
        upper=upper,
        upper_split=split,
        lower_witness=res.factors,
        sweeps=res.sweeps,
    )


def nuclear_norm_bounds(x: DenseTensor) -> tuple[float, float]:
    """Nuclear norm bracket from duality and the fiber decomposition.

    ||X||_F^2 <= ||X||_2 ||X||_* gives the lower bound via the certified
    spectral upper bound; splitting into single-fiber elementary terms gives
    at most sqrt(min_nu prod_{mu != nu} n_mu) * ||X||_F above.
    """
    nrm = _nonzero(x)
    upper_spectral, _ = _spectral_upper(x)
    lower = nrm**2 / upper_spectral
    counts = [prod(x.shape) // n for n in x.shape]
    upper = float(np.sqrt(min(counts))) * nrm
    return lower, upper


def spectral_normal_form(x: DenseTensor, factors) -> DenseTensor:
    """Rotate each mode so the given unit factors become the first basis vectors.

    Entry (0, ..., 0) of the result is the overlap at the factors; when they
    are a global maximizer, every other entry on the axis fibers through the
    origin vanishes.
    """
    vecs = _as_unit_vectors(x, factors)
    c = x.data
    for mu, u in enumerate(vecs):
        q = complete_basis(u)
        c = np.moveaxis(np.tensordot(c, q, axes=([mu], [0])), -1, mu)
    return DenseTensor(c)


def normal_form_residual(c: DenseTensor) -> float:
    """Largest magnitude on the origin axis fibers, excluding the origin entry."""
    worst = 0.0
    for mu in range(c.order):
        f = c.data[tuple(0 if m != mu else slice(None) for m in range(c.order))]
        if f.size > 1:
            worst = max(worst, float(np.max(np.abs(f[1:]))))
    return worst


def fiber_decomposition(x: DenseTensor, nu: int) -> list[DenseTensor]:
    """Split X into elementary terms, one per mode-nu fiber (zeros included).

    The terms sum to X exactly and witness the trivial nuclear norm bound;
    they are ordered by the C-order of the complementary multi-index.
    """
    nu = int(nu)
    if not 0 <= nu < x.order:
        raise ValueError(f"mode {nu} out of range for order-{x.order} tensor")
    moved = np.moveaxis(x.data, nu, -1)
    out = []
    for idx in np.ndindex(*moved.shape[:-1]):
        term = np.zeros_like(moved)
        term[idx] = moved[idx]
        out.append(DenseTensor(np.moveaxis(term, -1, nu)))
    return out
