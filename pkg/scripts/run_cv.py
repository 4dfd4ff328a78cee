"""k-fold cross-validation of the exact classifier on a CSV or a synthetic dataset."""
import argparse

from exact01.data import SyntheticSpec, gen_gaussian, load_csv
from exact01.evaluation import cross_validate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--data", help="CSV path; omit for synthetic Gaussian data")
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--bayes-error", type=float, default=0.2)
    ap.add_argument("--folds", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    ds = load_csv(args.data) if args.data else gen_gaussian(SyntheticSpec(args.n, args.d, args.bayes_error, args.seed))
    print(cross_validate(ds, k=args.folds, seed=args.seed).table())


if __name__ == "__main__":
    main()
