import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_dataset
from exact01 import engine
from exact01.core import Dataset
from exact01.data import SyntheticSpec, gen_gaussian
from exact01.errors import BadFoldCount, NotSeparable
from exact01.evaluation import (
    CVReport,
    FoldResult,
    cross_validate,
    kfold_split,
    max_margin_representative,
    predict,
)
from exact01.geometry import Hyperplane, signed_values


def test_kfold_partition():
    folds = kfold_split(10, 3, seed=0)
    assert [len(f) for f in folds] == [4, 3, 3]
    assert sorted(np.concatenate(folds).tolist()) == list(range(10))
    assert all(np.all(np.diff(f) > 0) for f in folds)


def test_kfold_deterministic():
    a, b = kfold_split(25, 5, 3), kfold_split(25, 5, 3)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    assert not all(np.array_equal(x, y) for x, y in zip(a, kfold_split(25, 5, 4)))


@pytest.mark.parametrize("n, k", [(5, 1), (5, 6), (0, 2)])
def test_kfold_bad_counts(n, k):
    with pytest.raises(BadFoldCount):
        kfold_split(n, k)


@given(st.integers(2, 60), st.data())
def test_kfold_sizes_balanced(n, data):
    k = data.draw(st.integers(2, n))
    sizes = [len(f) for f in kfold_split(n, k)]
    assert sum(sizes) == n and max(sizes) - min(sizes) <= 1


def test_predict_boundary_goes_positive():
    h = Hyperplane(np.array([1.0]), -1.0)
    assert predict(h, np.array([[0.0], [1.0], [2.0]]), 1e-9).tolist() == [-1, 1, 1]


def _boundary_x(h):
    return -h.offset / h.normal[0]


def test_max_margin_1d():
    train = Dataset([[-3.0], [-1.0], [3.0], [5.0]], [-1, -1, 1, 1])
    h = max_margin_representative(train, train.labels)
    assert _boundary_x(h) == pytest.approx(1.0, rel=0.05)


def test_max_margin_2d():
    train = Dataset([[0.0, 0.0], [0.0, 1.0], [2.0, 0.0], [2.0, 1.0]], [-1, -1, 1, 1])
    h = max_margin_representative(train, train.labels)
    n = h.normal / np.linalg.norm(h.normal)
    assert abs(n[1]) < 0.05 and _boundary_x(h) == pytest.approx(1.0, rel=0.05)


def test_max_margin_ignores_misassigned():
    train = Dataset([[-3.0], [-1.0], [0.5], [3.0], [5.0]], [-1, -1, -1, 1, 1])
    assignment = np.array([-1, -1, 1, 1, 1])  # the point at 0.5 is a training error
    h = max_margin_representative(train, assignment)
    assert _boundary_x(h) == pytest.approx(1.0, rel=0.05)


def test_max_margin_single_class():
    train = Dataset([[0.0], [1.0]], [1, 1])
    h = max_margin_representative(train, train.labels)
    assert predict(h, train.points, 1e-9).tolist() == [1, 1]


def test_max_margin_not_separable():
    train = Dataset([[0.0], [1.0], [2.0]], [1, -1, 1])
    with pytest.raises(NotSeparable):
        max_margin_representative(train, train.labels)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_representative_realizes_exact_assignment(d, seed):
    rng = np.random.default_rng(seed)
    ds = random_dataset(rng, 20, d)
    sol = engine.solve(ds)
    h = max_margin_representative(ds, sol.assignment)
    keep = sol.assignment == ds.labels
    assert np.all(ds.labels[keep] * signed_values(h, ds.points[keep]) > 0)
    assert int(np.count_nonzero(predict(h, ds.points, ds.default_eps()) != ds.labels)) <= sol.optimal_loss


def test_cv_separable_zero_train_error():
    X = np.random.default_rng(0).standard_normal((40, 2))
    ds = Dataset(X, np.where(X[:, 0] - 0.5 * X[:, 1] > 0, 1, -1))
    rep = cross_validate(ds, k=5, seed=0)
    assert rep.train_mean == 0.0 and rep.train_std == 0.0
    assert len(rep.folds) == 5


def test_cv_deterministic():
    ds = gen_gaussian(SyntheticSpec(60, 2, 0.2, 1))
    a, b = cross_validate(ds, k=4, seed=2), cross_validate(ds, k=4, seed=2)
    assert list(a.rows()) == list(b.rows())


def test_cv_exact_never_worse_than_pocket():
    ds = gen_gaussian(SyntheticSpec(60, 2, 0.2, 3))
    rep = cross_validate(ds, k=10, seed=0)
    for f in rep.folds:
        assert f.train_errors <= f.pocket_train_errors
        assert f.train_errors <= f.ub
        assert f.train_n + f.test_n == ds.n


def test_cv_ub_modes_agree():
    ds = gen_gaussian(SyntheticSpec(40, 2, 0.2, 5))
    a = cross_validate(ds, k=4, ub="auto")
    b = cross_validate(ds, k=4, ub="none")
    assert [f.train_errors for f in a.folds] == [f.train_errors for f in b.folds]


def test_cv_report_statistics():
    rep = CVReport(folds=[FoldResult(0, 10, 1, 5, 0, 2, 5), FoldResult(1, 10, 3, 5, 1, 3, 5)])
    assert rep.train_mean == pytest.approx(0.2)
    assert rep.train_std == pytest.approx(np.std([0.1, 0.3], ddof=1))
    assert rep.test_mean == pytest.approx(0.1)
    assert "mean train" in rep.table()
    assert len(next(rep.rows())) == len(CVReport.CSV_COLUMNS)
