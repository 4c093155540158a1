"""Seeded desk-scale studies with machine-readable records.

Each driver returns a list of ExperimentRecord rows; the CSV column order is
fixed so that runs with the same command line are byte-identical except for
the wall_ms column.  All tensors are normalized to unit Frobenius norm before
estimation, so every sigma lives in (0, 1] and reference values are the true
normalized spectral norms where those are known.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from math import sqrt

from .core import DenseTensor, frobenius_norm, make_tensor
from .linalg import DEFAULT_SEED, Seed, gaussian_tensor
from .orthogonal import Algebra, fooling_tensor, known4_tensor, mult_tensor
from .rankone import OptimOptions, best_rank_one, ones_init

__all__ = [
    "CSV_COLUMNS",
    "ExperimentRecord",
    "EXPERIMENT_NAMES",
    "run_orthogonal",
    "run_known4",
    "run_fooling",
    "run_random",
    "run_experiment",
    "records_to_csv",
    "records_to_dicts",
]

CSV_COLUMNS = (
    "experiment",
    "dims",
    "seed",
    "method",
    "init",
    "sigma",
    "reference",
    "sweeps",
    "wall_ms",
)

EXPERIMENT_NAMES = ("orthogonal", "known4", "fooling", "random")


@dataclass(frozen=True)
class ExperimentRecord:
    experiment: str
    dims: tuple[int, ...]
    seed: Seed
    method: str
    init: str
    sigma: float
    reference: float | None
    sweeps: int
    wall_ms: float

    def to_row(self) -> list[str]:
        return [
            self.experiment,
            "x".join(str(n) for n in self.dims),
            f"{self.seed.master}:{self.seed.stream}",
            self.method,
            self.init,
            f"{self.sigma:.12g}",
            "" if self.reference is None else f"{self.reference:.12g}",
            str(self.sweeps),
            f"{self.wall_ms:.3f}",
        ]


def _normalized(x: DenseTensor) -> tuple[DenseTensor, float]:
    nrm = frobenius_norm(x)
    return make_tensor(x.shape, x.data / nrm), nrm


def _timed_run(x, opts, extra_starts=()):
    t0 = time.perf_counter()
    res = best_rank_one(x, opts, extra_starts=extra_starts)
    return res, (time.perf_counter() - t0) * 1e3


def run_orthogonal(
    seed: Seed = DEFAULT_SEED,
    method: str = "asvd",
    init: str = "random",
    restarts: int = 8,
    tol: float = 1e-10,
) -> list[ExperimentRecord]:
    """Spectral norm of the unit-scaled multiplication tensors; truth is 1/n."""
    records = []
    for i, algebra in enumerate(
        (Algebra.COMPLEXES, Algebra.QUATERNIONS, Algebra.OCTONIONS)
    ):
        x, _ = _normalized(mult_tensor(algebra))
        run_seed = seed.child(i)
        opts = OptimOptions(
            method=method, init=init, restarts=restarts, tol=tol, seed=run_seed
        )
        res, ms = _timed_run(x, opts)
        records.append(
            ExperimentRecord(
                "orthogonal",
                x.shape,
                run_seed,
                method,
                init,
                res.sigma,
                1.0 / algebra.value,
                res.sweeps,
                ms,
            )
        )
    return records


def run_known4(
    seed: Seed = DEFAULT_SEED,
    n_values=(10, 15, 20, 25, 30),
    m: int = 10,
    method: str = "asvd",
    restarts: int = 8,
    tol: float = 1e-10,
) -> list[ExperimentRecord]:
    """Fourth-order tensors with a planted known optimum.

    The planted value m / ||X||_F is recovered exactly from the hosvd start;
    the seeded random sweep shows how often unguided starts fall short.
    """
    records = []
    for i, n in enumerate(n_values):
        tensor_seed = seed.child(2 * i)
        run_seed = seed.child(2 * i + 1)
        raw, _, _ = known4_tensor(int(n), m, tensor_seed)
        x, nrm = _normalized(raw)
        reference = m / nrm
        for init in ("hosvd", "random"):
            opts = OptimOptions(
                method=method, init=init, restarts=restarts, tol=tol, seed=run_seed
            )
            res, ms = _timed_run(x, opts)
            records.append(
                ExperimentRecord(
                    "known4",
                    x.shape,
                    tensor_seed,
                    method,
                    init,
                    res.sigma,
                    reference,
                    res.sweeps,
                    ms,
                )
            )
    return records


def run_fooling(
    seed: Seed = DEFAULT_SEED,
    n_max: int = 20,
    method: str = "asvd",
    restarts: int = 8,
    tol: float = 1e-10,
) -> list[ExperimentRecord]:
    """Circulant-support tensors where the hosvd start stalls at 1/n.

    The true normalized norm is 1/sqrt(n); the multistart row includes the
    constant vector tuple among its candidates, which reaches it in one sweep.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    records = []
    for n in range(2, int(n_max) + 1):
        x, _ = _normalized(fooling_tensor(n))
        run_seed = seed.child(n)
        reference = 1.0 / sqrt(n)
        for init, extra in (("hosvd", ()), ("multistart", (ones_init(x),))):
            opts = OptimOptions(
                method=method, init=init, restarts=restarts, tol=tol, seed=run_seed
            )
            res, ms = _timed_run(x, opts, extra_starts=extra)
            records.append(
                ExperimentRecord(
                    "fooling",
                    x.shape,
                    run_seed,
                    method,
                    init,
                    res.sigma,
                    reference,
                    res.sweeps,
                    ms,
                )
            )
    return records


def run_random(
    seed: Seed = DEFAULT_SEED,
    n_values=(5, 10, 15, 20, 25, 30),
    samples: int = 10,
    method: str = "asvd",
    restarts: int = 8,
    tol: float = 1e-8,
) -> list[ExperimentRecord]:
    """Gaussian cubic tensors: per-sample estimates plus a per-size mean row.

    No exact reference exists; the mean row carries 1/n in the reference
    column as the comparison curve.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    records = []
    counter = 0
    for n in n_values:
        n = int(n)
        sigmas = []
        total_ms = 0.0
        total_sweeps = 0
        for _ in range(samples):
            tensor_seed = seed.child(2 * counter)
            run_seed = seed.child(2 * counter + 1)
            counter += 1
            x, _ = _normalized(gaussian_tensor((n, n, n), tensor_seed))
            opts = OptimOptions(
                method=method,
                init="multistart",
                restarts=restarts,
                tol=tol,
                seed=run_seed,
            )
            res, ms = _timed_run(x, opts)
            sigmas.append(res.sigma)
            total_ms += ms
            total_sweeps += res.sweeps
            records.append(
                ExperimentRecord(
                    "random",
                    x.shape,
                    tensor_seed,
                    method,
                    "multistart",
                    res.sigma,
                    None,
                    res.sweeps,
                    ms,
                )
            )
        records.append(
            ExperimentRecord(
                "random",
                (n, n, n),
                seed,
                method,
                "mean",
                sum(sigmas) / len(sigmas),
                1.0 / n,
                total_sweeps,
                total_ms,
            )
        )
    return records


def run_experiment(name: str, seed: Seed = DEFAULT_SEED, **kwargs) -> list[ExperimentRecord]:
    if name == "orthogonal":
        return run_orthogonal(seed, **kwargs)
    if name == "known4":
        return run_known4(seed, **kwargs)
    if name == "fooling":
        return run_fooling(seed, **kwargs)
    if name == "random":
        return run_random(seed, **kwargs)
    raise ValueError(f"unknown experiment {name!r}; choose from {EXPERIMENT_NAMES}")


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(rec.to_row())
    return buf.getvalue()


def records_to_dicts(records) -> list[dict]:
    return [dict(zip(CSV_COLUMNS, rec.to_row())) for rec in records]
