"""Command line surface: norm brackets, constructions, checks, experiments.

Exit codes: 0 on success, 2 on usage or input errors, 3 on numerical
failures (a constructed tensor failing its own orthogonality check, or a
linear algebra breakdown).  Tensor files use the JSON format of save_tensor.
Mode indices on the command line are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

import numpy as np

from .core import DenseTensor, frobenius_norm, load_tensor, save_tensor, tensor_to_dict
from .experiments import EXPERIMENT_NAMES, records_to_csv, records_to_dicts, run_experiment
from .hurwitz import app_ratio, catalog_tables, hurwitz_radon, is_admissible
from .linalg import Seed, gaussian_tensor
from .orthogonal import (
    Algebra,
    check_orthogonal,
    fooling_tensor,
    known4_tensor,
    lift_orthogonal,
    mult_tensor,
    tall_orthogonal,
)
from .rankone import (
    INIT_CHOICES,
    METHOD_CHOICES,
    OptimOptions,
    spectral_norm_bounds,
)

__all__ = ["main"]

CONSTRUCT_KINDS = ("algebra", "tall", "lift", "fooling", "known4", "random")
CHECKED_KINDS = ("algebra", "tall", "lift")


def _add_optim_flags(p: argparse.ArgumentParser, default_init: str = "multistart"):
    p.add_argument("--method", choices=METHOD_CHOICES, default="asvd")
    p.add_argument("--init", choices=INIT_CHOICES, default=default_init)
    p.add_argument("--restarts", type=int, default=8, metavar="K")
    p.add_argument("--tol", type=float, default=1e-10, metavar="T")
    p.add_argument("--max-sweeps", type=int, default=500, metavar="S")


def _seed_flag(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=42, metavar="U64")


def _options(args, init=None) -> OptimOptions:
    return OptimOptions(
        method=args.method,
        init=init if init is not None else args.init,
        restarts=args.restarts,
        tol=args.tol,
        max_sweeps=args.max_sweeps,
        seed=Seed(args.seed),
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_norm(args) -> int:
    x = load_tensor(args.file)
    bracket = spectral_norm_bounds(x, _options(args))
    payload = {
        "lower": bracket.lower,
        "upper": bracket.upper,
        "factors": [v.tolist() for v in bracket.lower_witness],
        "sweeps": bracket.sweeps,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _algebra(token: str) -> Algebra:
    if token.isdigit():
        return Algebra.from_dim(int(token))
    return Algebra.from_name(token)


def _construct_tensor(args) -> DenseTensor:
    kind, params = args.kind, list(args.params)

    def take(count, what):
        if len(params) != count:
            raise ValueError(f"{kind} expects {what}")
        return params

    if kind == "algebra":
        (name,) = take(1, "an algebra name")
        return mult_tensor(_algebra(name))
    if kind == "tall":
        l, m, n = (int(v) for v in take(3, "three dimensions l m n"))
        seed = Seed(args.seed) if args.random_blocks else None
        return tall_orthogonal(l, m, n, seed=seed)
    if kind == "lift":
        base, name = take(2, "a base (file or algebra) and an algebra name")
        try:
            x = load_tensor(base)
        except OSError:
            x = mult_tensor(_algebra(base))
        return lift_orthogonal(x, args.mode - 1, _algebra(name))
    if kind == "fooling":
        (n,) = take(1, "a dimension n")
        return fooling_tensor(int(n))
    if kind == "known4":
        n, m = (int(v) for v in take(2, "two dimensions n m"))
        x, _, _ = known4_tensor(n, m, Seed(args.seed))
        return x
    if kind == "random":
        if not params:
            raise ValueError("random expects at least one dimension")
        dims = tuple(int(v) for v in params)
        return gaussian_tensor(dims, Seed(args.seed))
    raise ValueError(f"unknown construction kind {kind!r}")


def _cmd_construct(args) -> int:
    x = _construct_tensor(args)
    if args.kind in CHECKED_KINDS:
        report = check_orthogonal(x, tol=args.tol)
        if not report.is_orthogonal:
            print(
                f"construction failed its orthogonality check "
                f"(violation {report.max_violation:.3e})",
                file=sys.stderr,
            )
            return 3
    if args.normalize:
        x = DenseTensor(x.data / frobenius_norm(x))
    if args.out:
        save_tensor(x, args.out)
    else:
        _emit(json.dumps(tensor_to_dict(x)), None)
    return 0


def _cmd_check(args) -> int:
    x = load_tensor(args.file)
    report = check_orthogonal(x, tol=args.tol)
    payload = {
        "is_orthogonal": report.is_orthogonal,
        "max_violation": report.max_violation,
        "witness": None
        if report.witness is None
        else [v.tolist() for v in report.witness],
        "permutation": list(report.permutation),
        "grid_size": report.grid_size,
    }
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _cmd_experiment(args) -> int:
    kwargs = {"method": args.method, "restarts": args.restarts, "tol": args.tol}
    if args.name == "orthogonal":
        kwargs["init"] = args.init
    if args.name == "known4":
        kwargs["m"] = args.m
        kwargs["n_values"] = tuple(range(10, args.n_max + 1, 5))
    if args.name == "fooling":
        kwargs["n_max"] = args.n_max
    if args.name == "random":
        kwargs["n_values"] = tuple(range(5, args.n_max + 1, 5))
        kwargs["samples"] = args.samples
    records = run_experiment(args.name, Seed(args.seed), **kwargs)
    if args.format == "json":
        _emit(json.dumps(records_to_dicts(records), indent=2), args.out)
    else:
        _emit(records_to_csv(records), args.out)
    return 0


def _cmd_query(args) -> int:
    what, params = args.what, list(args.params)
    if what == "admissible":
        if len(params) != 3:
            raise ValueError("admissible expects three dimensions")
        payload = asdict(is_admissible(*(int(v) for v in params)))
    elif what == "appratio":
        if len(params) < 3:
            raise ValueError("appratio expects a field and at least two dimensions")
        payload = asdict(app_ratio(params[0], [int(v) for v in params[1:]]))
    elif what == "radon":
        if len(params) != 1:
            raise ValueError("radon expects one dimension")
        n = int(params[0])
        payload = {"n": n, "l_max": hurwitz_radon(n)}
    elif what == "table":
        if params:
            raise ValueError("table takes no parameters")
        payload = catalog_tables()
    else:
        raise ValueError(f"unknown query {what!r}")
    _emit(json.dumps(payload, indent=2), args.out)
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="specnorm",
        description="Spectral norm brackets and orthogonal tensor tooling.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="bracket the spectral norm of a tensor file")
    p.add_argument("file")
    _add_optim_flags(p)
    _seed_flag(p)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("construct", help="build a tensor and write it as JSON")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("params", nargs="*")
    p.add_argument("--mode", type=int, default=1, help="1-based lift mode")
    p.add_argument("--normalize", action="store_true", help="scale to unit Frobenius norm")
    p.add_argument("--random-blocks", action="store_true", help="seeded blocks for tall")
    p.add_argument("--tol", type=float, default=1e-10, metavar="T")
    _seed_flag(p)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", help="run the orthogonality checker on a tensor file")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-10, metavar="T")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("experiment", help="run a seeded study and emit records")
    p.add_argument("name", choices=EXPERIMENT_NAMES)
    _add_optim_flags(p, default_init="random")
    _seed_flag(p)
    p.add_argument("--n-max", type=int, default=None, metavar="N")
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--m", type=int, default=10)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("query", help="admissibility and ratio catalog lookups")
    p.add_argument("what", choices=("admissible", "appratio", "radon", "table"))
    p.add_argument("params", nargs="*")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_query)

    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if getattr(args, "n_max", None) is None and args.command == "experiment":
        args.n_max = {"known4": 30, "fooling": 20, "random": 30}.get(args.name, 30)
    try:
        return args.func(args)
    except np.linalg.LinAlgError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
