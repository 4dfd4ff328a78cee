import numpy as np
import pytest

from exact01.bench import BenchRecord, fit_loglog_slope, read_records, run_bench, write_records
from exact01.errors import InsufficientPoints


def series(ns, f):
    return [BenchRecord(2, n, "none", 3, f(n), 0, 0) for n in ns]


def test_slope_exact_cubic():
    assert fit_loglog_slope(series([10, 20, 40, 80, 160], lambda n: 1e-6 * n**3)) == pytest.approx(3.0, abs=1e-9)


def test_slope_noisy_quadratic():
    rng = np.random.default_rng(0)
    recs = series([100, 200, 400, 800, 1600, 3200], lambda n: 1e-7 * n**2 * (1 + 0.01 * rng.standard_normal()))
    assert fit_loglog_slope(recs) == pytest.approx(2.0, abs=0.1)


def test_slope_constant():
    assert fit_loglog_slope(series([5, 10, 20, 40], lambda n: 0.5)) == pytest.approx(0.0, abs=1e-12)


def test_slope_needs_four_distinct_sizes():
    with pytest.raises(InsufficientPoints):
        fit_loglog_slope(series([1, 2, 3], lambda n: n))
    with pytest.raises(InsufficientPoints):
        fit_loglog_slope(series([1, 2, 2, 3], lambda n: n))


def test_run_bench_counters_deterministic(tmp_path):
    a = run_bench([1, 2], [[20, 40], [15, 25]], repeats=3)
    b = run_bench([1, 2], [[20, 40], [15, 25]], repeats=3)
    assert [(r.d, r.n, r.configs_expanded, r.configs_pruned) for r in a] == \
           [(r.d, r.n, r.configs_expanded, r.configs_pruned) for r in b]
    assert all(r.median_seconds > 0 for r in a)
    write_records(a, tmp_path / "b.csv")
    back = read_records(tmp_path / "b.csv")
    assert [(r.d, r.n, r.configs_expanded) for r in back] == [(r.d, r.n, r.configs_expanded) for r in a]


def test_run_bench_auto_prunes():
    none, auto = run_bench([2], [[60]], "none"), run_bench([2], [[60]], "auto")
    assert none[0].configs_pruned == 0
    assert auto[0].configs_pruned > 0 and auto[0].configs_expanded < none[0].configs_expanded


@pytest.mark.parametrize("kwargs", [dict(repeats=2), dict(sizes=[[10, 5]]), dict(dims=[1, 2])])
def test_run_bench_rejects(kwargs):
    args = dict(dims=[1], sizes=[[5, 10]], repeats=3) | kwargs
    with pytest.raises(ValueError):
        run_bench(**args)
