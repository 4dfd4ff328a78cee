"""Run-time scaling harness: wall-clock medians and search counters over dataset sizes."""
import csv
import statistics
import time
from dataclasses import astuple, dataclass, fields

import numpy as np

from . import engine
from .bounds import resolve_ub
from .core import Dataset
from .data import SyntheticSpec, gen_gaussian
from .errors import InsufficientPoints


@dataclass(frozen=True)
class BenchRecord:
    d: int
    n: int
    ub_mode: str
    repeats: int
    median_seconds: float
    configs_expanded: int
    configs_pruned: int


COLUMNS = tuple(f.name for f in fields(BenchRecord))


def warm_up():
    """Trigger (or load cached) compilation so it never lands in a timing."""
    engine.solve(Dataset([[0.5, 1.0], [1.5, -0.3], [2.0, 2.5]], [1, -1, 1]))


def run_bench(dims, sizes, ub_mode="none", repeats=3, bayes_error=0.1, seed=0, threads=1, log=None):
    """``sizes[i]`` is the ascending size grid for ``dims[i]``."""
    if repeats < 3:
        raise ValueError("repeats must be >= 3")
    if len(dims) != len(sizes):
        raise ValueError("need one size grid per dimension")
    warm_up()
    records = []
    for d, grid in zip(dims, sizes):
        if list(grid) != sorted(grid):
            raise ValueError(f"sizes for d={d} must be ascending")
        for n in grid:
            ds = gen_gaussian(SyntheticSpec(n, d, bayes_error, seed))
            ub, _ = resolve_ub(ds, ub_mode, seed=seed)
            times, counts = [], set()
            engine.solve(ds, ub=ub, threads=threads)  # untimed: first touch of fresh buffers
            for _ in range(repeats):
                t0 = time.perf_counter()
                rep = engine.solve(ds, ub=ub, threads=threads)
                times.append(time.perf_counter() - t0)
                counts.add((rep.stats.configs_expanded, rep.stats.configs_pruned))
            if len(counts) != 1:
                raise RuntimeError(f"nondeterministic search counters at d={d}, n={n}: {counts}")
            expanded, pruned = counts.pop()
            rec = BenchRecord(d, n, str(ub_mode), repeats, statistics.median(times), expanded, pruned)
            records.append(rec)
            if log:
                log(rec)
    return records


def fit_loglog_slope(records):
    """Least-squares slope of log(seconds) against log(n)."""
    n = np.array([r.n for r in records], dtype=float)
    t = np.array([r.median_seconds for r in records], dtype=float)
    if len(records) < 4 or len(np.unique(n)) != len(n):
        raise InsufficientPoints("need at least 4 records with distinct n")
    slope, _ = np.polyfit(np.log(n), np.log(t), 1)
    return float(slope)


def write_records(records, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(COLUMNS)
        for r in records:
            row = list(astuple(r))
            row[4] = "%.9g" % row[4]
            w.writerow(row)


def read_records(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return [
            BenchRecord(int(r["d"]), int(r["n"]), r["ub_mode"], int(r["repeats"]),
                        float(r["median_seconds"]), int(r["configs_expanded"]), int(r["configs_pruned"]))
            for r in csv.DictReader(fh)
        ]
