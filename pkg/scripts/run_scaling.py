"""Wall-clock scaling of the exact solver with the bound disabled; prints log-log slopes."""
import argparse

from exact01 import bench

GRIDS = {
    1: [500, 1000, 1500, 2000, 3000, 4000],
    2: [200, 300, 400, 500, 600, 700, 800],
    3: [40, 60, 80, 100, 120],
    4: [20, 30, 40, 50, 60],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--out", default="scaling.csv")
    args = ap.parse_args()
    records = []
    for d in args.dims:
        rs = bench.run_bench([d], [GRIDS[d]], "none", args.repeats,
                             log=lambda r: print(f"d={r.d} n={r.n} {r.median_seconds:.4g}s"))
        print(f"d={d} slope {bench.fit_loglog_slope(rs):.2f}")
        records += rs
    bench.write_records(records, args.out)


if __name__ == "__main__":
    main()
