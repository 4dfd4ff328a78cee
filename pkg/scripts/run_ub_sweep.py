"""Configs expanded and run time as the upper bound moves from N down to the optimum."""
import argparse
import time

from exact01 import engine
from exact01.data import SyntheticSpec, gen_gaussian


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=300)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--bayes-error", type=float, default=0.1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--steps", type=int, default=12)
    args = ap.parse_args()
    ds = gen_gaussian(SyntheticSpec(args.n, args.d, args.bayes_error, args.seed))
    opt = engine.solve(ds).optimal_loss
    ubs = sorted({opt + round(k * (ds.n - opt) / (args.steps - 1)) for k in range(args.steps)}, reverse=True)
    print("ub,configs_expanded,configs_pruned,seconds")
    for ub in ubs:
        t0 = time.perf_counter()
        rep = engine.solve(ds, ub=ub)
        assert rep.optimal_loss == opt
        print(f"{ub},{rep.stats.configs_expanded},{rep.stats.configs_pruned},{time.perf_counter() - t0:.4f}")


if __name__ == "__main__":
    main()
