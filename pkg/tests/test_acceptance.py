"""Release gate: one end-to-end test per advertised guarantee.

Each test covers one guarantee at its stated tolerance and prints a single
PASS/FAIL line (run with -s to see them inline; on failure the line shows up
in the captured output together with the offending items).
"""

import itertools
import time
from math import prod

import numpy as np

from specnorm import (
    ADMISSIBLE,
    NOT_ADMISSIBLE,
    Algebra,
    DenseTensor,
    OptimOptions,
    approximation_error,
    best_rank_one,
    check_orthogonal,
    fiber_decomposition,
    fooling_tensor,
    frobenius_inner,
    frobenius_norm,
    hosvd_init,
    hurwitz_radon,
    is_admissible,
    known4_tensor,
    l_star_m,
    lift_orthogonal,
    mult_tensor,
    naive_lower_bound,
    nuclear_norm_bounds,
    ones_init,
    permute_modes,
    run_random,
    spectral_norm_bounds,
    tall_orthogonal,
    yiu_upper,
)
from specnorm.linalg import DEFAULT_SEED, Seed, gaussian_tensor, random_orthogonal

from _frozen import L_STAR, RADON, YIU
from _instances import orthogonal_instance, sorted_shapes
from _oracles import random_tuple_violation, refined_angle_grid_max, w_tensor


def _verdict(label: str, failures: list) -> None:
    print(f"[acceptance] {label}: {'FAIL' if failures else 'PASS'}", flush=True)
    assert not failures, "\n".join(str(f) for f in failures[:10])


def test_criterion_1_algebra_table_sigmas():
    failures = []
    t0 = time.perf_counter()
    for alg in (Algebra.COMPLEXES, Algebra.QUATERNIONS, Algebra.OCTONIONS):
        n = alg.dim
        x = DenseTensor(mult_tensor(alg).data / n)
        opts = OptimOptions(
            method="asvd", init="random", restarts=8, seed=DEFAULT_SEED.child(n)
        )
        res = best_rank_one(x, opts)
        if abs(res.sigma - 1.0 / n) > 1e-6:
            failures.append(f"{alg.name}: sigma {res.sigma!r} != {1.0 / n}")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.3f}s >= 1s")
    _verdict("scaled multiplication tables reach sigma = 1/n", failures)


def test_criterion_2_orthogonal_family_certificates():
    failures = []
    family = [mult_tensor(alg) for alg in Algebra]
    family += [
        tall_orthogonal(1, 4, 4),
        tall_orthogonal(2, 3, 7),
        tall_orthogonal(3, 4, 12),
        lift_orthogonal(mult_tensor(Algebra.COMPLEXES), 0, Algebra.COMPLEXES),
        lift_orthogonal(tall_orthogonal(2, 3, 7), 1, Algebra.COMPLEXES),
        lift_orthogonal(mult_tensor(Algebra.QUATERNIONS), 0, Algebra.QUATERNIONS),
    ]
    for x in family:
        label = "x".join(map(str, x.shape))
        expected = float(prod(sorted(x.shape)[:-1]))
        if not check_orthogonal(x).is_orthogonal:
            failures.append(f"{label}: checker rejects the instance")
        if frobenius_inner(x, x) != expected:
            failures.append(f"{label}: |X|_F^2 = {frobenius_inner(x, x)!r} != {expected}")
        br = spectral_norm_bounds(x)
        if abs(br.lower - 1.0) > 1e-8 or abs(br.upper - 1.0) > 1e-8:
            failures.append(f"{label}: bracket [{br.lower!r}, {br.upper!r}] != [1, 1]")
        terms = fiber_decomposition(x, x.order - 1)
        worst = max(abs(frobenius_norm(t) - 1.0) for t in terms)
        if worst > 1e-12:
            failures.append(f"{label}: fiber term norm off unit by {worst:.2e}")
        nuc_lower, _ = nuclear_norm_bounds(x)
        if abs(nuc_lower - expected) > 1e-8:
            failures.append(f"{label}: nuclear lower {nuc_lower!r} != {expected}")
    _verdict("orthogonal family: check, norms, bracket [1,1], fibers", failures)


def test_criterion_3_admissibility_tables():
    failures = []
    t0 = time.perf_counter()
    for l, row in L_STAR.items():
        for m, want in zip(range(l, 17), row):
            got = l_star_m(l, m)
            if got != want:
                failures.append(f"l*({l}, {m}) = {got} != {want}")
    for l, row in YIU.items():
        for m, want in zip(range(l, 17), row):
            got = yiu_upper(l, m)
            if got != want:
                failures.append(f"yiu({l}, {m}) = {got} != {want}")
    for n in range(1, 17):
        if hurwitz_radon(n) != RADON[n]:
            failures.append(f"rho({n}) = {hurwitz_radon(n)} != {RADON[n]}")
        best = max(
            l for l in range(1, n + 1) if is_admissible(l, n, n).verdict == ADMISSIBLE
        )
        if best != hurwitz_radon(n):
            failures.append(f"max admissible l for ({n}, {n}) is {best}, want rho({n})")
    if is_admissible(3, 3, 3).verdict != NOT_ADMISSIBLE:
        failures.append("(3, 3, 3) not flagged as impossible")
    if is_admissible(10, 10, 16).verdict != ADMISSIBLE:
        failures.append("(10, 10, 16) not recognized as admissible")
    elapsed = time.perf_counter() - t0
    if elapsed >= 0.1:
        failures.append(f"runtime {elapsed * 1000:.1f}ms >= 100ms")
    _verdict("admissibility tables and square cross-check", failures)


def test_criterion_4_planted_fourth_order_recovery():
    failures = []
    m = 10
    for n in (10, 20, 30):
        x, a, b = known4_tensor(n, m, DEFAULT_SEED.child(n))
        init = hosvd_init(x)
        for mu, target in enumerate((a, a, b, b)):
            gap = min(
                np.linalg.norm(init[mu] - target), np.linalg.norm(init[mu] + target)
            )
            if gap > 1e-8:
                failures.append(f"n={n} mode {mu}: init misses planted axis by {gap:.2e}")
        nrm = frobenius_norm(x)
        y = DenseTensor(x.data / nrm)
        hos = best_rank_one(y, OptimOptions(init="hosvd"))
        if abs(hos.sigma - m / nrm) > 1e-8:
            failures.append(f"n={n}: hosvd-start sigma {hos.sigma!r} != {m / nrm!r}")
        rnd = best_rank_one(
            y, OptimOptions(init="random", restarts=8, seed=DEFAULT_SEED.child(100 + n))
        )
        if rnd.sigma > hos.sigma + 1e-9:
            failures.append(
                f"n={n}: random starts beat the planted value by {rnd.sigma - hos.sigma:.2e}"
            )
    _verdict("planted fourth-order recovery from hosvd init", failures)


def test_criterion_5_fooling_flat_start_vs_true_value():
    failures = []
    for n in range(2, 21):
        x = fooling_tensor(n)
        root = float(np.sqrt(n))
        for method in ("asvd", "hopm"):
            res = best_rank_one(x, OptimOptions(method=method, init="hosvd"))
            if abs(res.sigma - 1.0) > 1e-10:
                failures.append(f"n={n} {method}: hosvd start ends at {res.sigma!r}")
        br = spectral_norm_bounds(
            x, OptimOptions(restarts=8), extra_starts=(ones_init(x),)
        )
        if abs(br.lower - root) > 1e-6:
            failures.append(f"n={n}: lower {br.lower!r} misses sqrt(n)")
        if abs(br.upper - root) > 1e-10 or br.upper_split is None:
            failures.append(f"n={n}: upper {br.upper!r} via split {br.upper_split}")
    _verdict("fooling tensors: stationary start 1, true value sqrt(n)", failures)


def test_criterion_6_random_scaling_law():
    failures = []
    t0 = time.perf_counter()
    records = run_random(DEFAULT_SEED)
    elapsed = time.perf_counter() - t0
    samples = [r for r in records if r.init == "multistart"]
    means = {r.dims[0]: r.sigma for r in records if r.init == "mean"}
    for r in samples:
        scaled = r.dims[0] * r.sigma
        if not 1.0 <= scaled <= 4.0:
            failures.append(f"dims {r.dims}: n * sigma = {scaled:.3f} outside [1, 4]")
    ns = np.array(sorted(means), dtype=float)
    mu = np.array([means[int(n)] for n in ns])
    inv = 1.0 / ns
    slope = float(inv @ mu / (inv @ inv))
    r2 = 1.0 - float(np.sum((mu - slope * inv) ** 2)) / float(
        np.sum((mu - mu.mean()) ** 2)
    )
    if r2 < 0.95:
        failures.append(f"R^2 = {r2:.4f} < 0.95 against the a/n model")
    if not 0.11 <= means[20] <= 0.15:
        failures.append(f"n=20 mean {means[20]:.5f} outside [0.11, 0.15]")
    if elapsed >= 60.0:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    _verdict("gaussian cubes follow the a/n law", failures)


def test_criterion_7_invariant_sweeps():
    failures = []
    for i, shape in enumerate([(3, 3, 3), (2, 4, 3), (2, 2, 2, 2)]):
        x = gaussian_tensor(shape, Seed(90, i))
        for method in ("asvd", "hopm"):
            res = best_rank_one(x, OptimOptions(method=method, init="hosvd"))
            if any(b < a - 1e-12 for a, b in zip(res.history, res.history[1:])):
                failures.append(f"{shape} {method}: sweep history not monotone")

    shapes = itertools.cycle([(3, 3, 3), (2, 4, 3), (4, 4, 4), (2, 2, 2, 2), (5, 2, 3)])
    for i, shape in zip(range(50), shapes):
        raw = gaussian_tensor(shape, Seed(80, i))
        x = DenseTensor(raw.data / frobenius_norm(raw))
        res = best_rank_one(x)
        err = approximation_error(x, res.sigma, res.factors)
        if abs(err**2 - (1.0 - res.sigma**2)) > 1e-8:
            failures.append(f"{shape} draw {i}: error identity off")
    for i, shape in zip(range(50), shapes):
        x = gaussian_tensor(shape, Seed(81, i))
        br = spectral_norm_bounds(x)
        nrm = frobenius_norm(x)
        if not (
            br.lower <= br.upper + 1e-12
            and br.lower >= naive_lower_bound(x.shape) * nrm - 1e-8
            and br.upper <= nrm + 1e-12
        ):
            failures.append(f"{shape} draw {i}: sandwich violated")

    opts = OptimOptions(tol=1e-13)
    for i, shape in enumerate([(3, 4, 5), (2, 3, 4), (4, 4, 4), (2, 2, 3, 3)]):
        x = gaussian_tensor(shape, Seed(70, i))
        base = spectral_norm_bounds(x, opts)
        for perm in itertools.permutations(range(len(shape))):
            br = spectral_norm_bounds(permute_modes(x, perm), opts)
            if abs(br.lower - base.lower) > 1e-8 or abs(br.upper - base.upper) > 1e-8:
                failures.append(f"{shape} perm {perm}: bracket moved")
        for mu in range(len(shape)):
            q = random_orthogonal(shape[mu], Seed(71, 10 * i + mu))
            data = np.moveaxis(np.tensordot(x.data, q, axes=([mu], [0])), -1, mu)
            br = spectral_norm_bounds(DenseTensor(np.ascontiguousarray(data)), opts)
            if abs(br.lower - base.lower) > 1e-8 or abs(br.upper - base.upper) > 1e-8:
                failures.append(f"{shape} rotation on mode {mu}: bracket moved")

    rng = np.random.default_rng(1234)
    for shape in sorted_shapes(64):
        for x in (
            gaussian_tensor(shape, Seed(77, sum(shape))),
            orthogonal_instance(shape, Seed(99)),
        ):
            if x is None:
                continue
            grid = check_orthogonal(x).is_orthogonal
            sampled = random_tuple_violation(x.data, 1000, rng) <= 1e-8
            if grid != sampled:
                failures.append(f"{shape}: grid says {grid}, sampling says {sampled}")
    _verdict("histories, identities, invariances, checker agreement", failures)


def test_criterion_8_w_tensor_certified_value():
    failures = []
    w = w_tensor()
    # certify the target with the independent grid before running the optimizer
    grid_value, resolution = refined_angle_grid_max(w, start=181, tol=1e-6)
    if abs(grid_value - 2.0 / 3.0) > 1e-5:
        failures.append(f"grid value {grid_value!r} at res {resolution} misses 2/3")
    res = best_rank_one(DenseTensor(w))
    if abs(res.sigma - 2.0 / 3.0) > 1e-5:
        failures.append(f"optimizer sigma {res.sigma!r} misses 2/3")
    if abs(res.sigma - grid_value) > 2e-5:
        failures.append(f"optimizer {res.sigma!r} vs grid {grid_value!r} disagree")
    _verdict("w tensor: grid-certified value 2/3 matched", failures)
