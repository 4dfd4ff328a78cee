"""Command-line entry point.

Exit status: 0 success, 1 usage error, 2 data or solver error, 3 verification failure.
"""
import argparse
import csv
import sys

import numpy as np

from . import bench, engine, oracle
from .bounds import resolve_ub
from .core import Dataset
from .data import SyntheticSpec, check_general_position, gen_gaussian, load_csv, write_csv
from .errors import DataError, Exact01Error
from .evaluation import cross_validate, predict
from .geometry import Hyperplane
from .modelfile import ModelFile

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ub_arg(text):
    t = text.strip().lower()
    if t in ("auto", "none", "disabled"):
        return t
    try:
        v = int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected auto, none or a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("ub must be nonnegative")
    return v


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser():
    p = _Parser(prog="exact01", description="Exact 0-1 loss linear classification.")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fit", help="solve for the optimal hyperplane")
    f.add_argument("--data", required=True)
    f.add_argument("--ub", type=_ub_arg, default="auto")
    f.add_argument("--eps", type=float)
    f.add_argument("--out")
    f.add_argument("--threads", type=int, default=1)

    pr = sub.add_parser("predict", help="apply a saved model")
    pr.add_argument("--model", required=True)
    pr.add_argument("--data", required=True)

    cv = sub.add_parser("crossval", help="k-fold cross-validation")
    cv.add_argument("--data", required=True)
    cv.add_argument("--folds", type=int, default=10)
    cv.add_argument("--seed", type=int, default=0)
    cv.add_argument("--ub", type=_ub_arg, default="auto")
    cv.add_argument("--out")
    cv.add_argument("--threads", type=int, default=1)

    g = sub.add_parser("gen", help="write a synthetic Gaussian dataset")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--bayes-error", type=float, default=0.1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="self-verification suites")
    v.add_argument("suite", choices=("oracle", "cover", "duality"))
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--nmax", type=int)
    v.add_argument("--dmax", type=int, default=3)

    b = sub.add_parser("bench", help="run-time scaling benchmark")
    b.add_argument("--dims", type=_int_list, required=True)
    b.add_argument("--sizes", required=True, help="one comma list per dimension, separated by ';'")
    b.add_argument("--ub", type=_ub_arg, default="none")
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--bayes-error", type=float, default=0.1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out", required=True)
    b.add_argument("--threads", type=int, default=1)
    return p


def cmd_fit(args, out):
    ds = load_csv(args.data)
    gp = check_general_position(ds)
    if not gp.clean:
        print(f"warning: {gp.summary()}; optimality assumes general position", file=sys.stderr)
    eps = ds.default_eps() if args.eps is None else args.eps
    ub, est = resolve_ub(ds, args.ub, eps=eps)
    rep = engine.solve(ds, ub=ub, eps=eps, threads=args.threads)
    model = ModelFile.from_report(rep, ds, bounder=est.provider if est else str(args.ub))
    path = args.out or f"{args.data}.model.json"
    model.save(path)
    print(f"loss: {rep.optimal_loss}", file=out)
    print(f"error rate: {100.0 * rep.optimal_loss / ds.n:.2f}% of {ds.n}", file=out)
    print(f"ub: {ub}  expanded: {rep.stats.configs_expanded}  pruned: {rep.stats.configs_pruned}  "
          f"time: {rep.stats.wall_time:.3f}s", file=out)
    print(f"model: {path}", file=out)
    return EXIT_OK


def _load_points(path, d):
    with open(path, newline="", encoding="utf-8") as fh:
        first = next((r for r in csv.reader(fh) if r), None)
    if first is not None and len(first) == d:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r]
        try:
            return np.array([[float(c) for c in r] for r in rows])
        except ValueError:
            return np.array([[float(c) for c in r] for r in rows[1:]])
    return load_csv(path).points


def cmd_predict(args, out):
    model = ModelFile.load(args.model)
    X = _load_points(args.data, model.d)
    if X.shape[1] != model.d:
        raise DataError(f"data has {X.shape[1]} features, model expects {model.d}")
    for z in predict(model.hyperplane, X, model.eps):
        print(f"{int(z):+d}", file=out)
    return EXIT_OK


def cmd_crossval(args, out):
    ds = load_csv(args.data)
    rep = cross_validate(ds, k=args.folds, seed=args.seed, ub=args.ub, threads=args.threads)
    print(rep.table(), file=out)
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(rep.CSV_COLUMNS)
            w.writerows(rep.rows())
    return EXIT_OK


def cmd_gen(args, out):
    ds = gen_gaussian(SyntheticSpec(args.n, args.d, args.bayes_error, args.seed))
    write_csv(ds, args.out)
    print(f"wrote {ds.n} x {ds.d} to {args.out}", file=out)
    return EXIT_OK


def _random_dataset(rng, n, d):
    return Dataset(rng.standard_normal((n, d)), rng.choice([-1, 1], n))


def cmd_verify(args, out):
    rng = np.random.default_rng(args.seed)
    ok = 0
    if args.suite == "oracle":
        nmax = args.nmax or 14
        for _ in range(args.trials):
            d = int(rng.integers(1, args.dmax + 1))
            n = int(rng.integers(max(5, d), max(5, d, nmax) + 1))
            ds = _random_dataset(rng, n, d)
            ok += engine.solve(ds).optimal_loss == oracle.brute_force_solve(ds).loss
        print(f"{ok}/{args.trials} match", file=out)
    elif args.suite == "cover":
        nmax = args.nmax or 10
        for _ in range(args.trials):
            d = int(rng.integers(1, args.dmax + 1))
            n = int(rng.integers(d, max(d, nmax) + 1))
            ok += oracle.verify_cover(_random_dataset(rng, n, d))
        print(f"{ok}/{args.trials} match", file=out)
    else:
        nmax = args.nmax or 12
        for _ in range(args.trials):
            d = int(rng.integers(1, args.dmax + 1))
            inc, order = oracle.duality_trial(rng, d)
            ds = _random_dataset(rng, int(rng.integers(d, max(d, nmax) + 1)), d)
            h = Hyperplane(rng.standard_normal(d), float(rng.standard_normal()))
            ok += inc and order and oracle.dichotomy_matches_dual_cell(ds, h)
        print(f"{ok}/{args.trials} match", file=out)
    return EXIT_OK if ok == args.trials else EXIT_VERIFY


def cmd_bench(args, out):
    grids = [_int_list(s) for s in args.sizes.split(";")]
    if len(grids) != len(args.dims):
        raise UsageError(f"--sizes has {len(grids)} grid(s) for {len(args.dims)} dimension(s)")

    def log(r):
        print(f"d={r.d} n={r.n} median={r.median_seconds:.4g}s expanded={r.configs_expanded} "
              f"pruned={r.configs_pruned}", file=out)

    try:
        records = bench.run_bench(args.dims, grids, args.ub, args.repeats, args.bayes_error, args.seed,
                                  args.threads, log=log)
    except ValueError as e:
        raise UsageError(str(e))
    bench.write_records(records, args.out)
    for d in args.dims:
        rs = [r for r in records if r.d == d]
        if len(rs) >= 4:
            print(f"d={d} log-log slope {bench.fit_loglog_slope(rs):.2f}", file=out)
    return EXIT_OK


COMMANDS = {
    "fit": cmd_fit,
    "predict": cmd_predict,
    "crossval": cmd_crossval,
    "gen": cmd_gen,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    except Exact01Error as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
