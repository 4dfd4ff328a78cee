import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exact01.core import Dataset, assign, encode_labels, loss_pair, loss_total
from exact01.errors import BadLabelAlphabet, LengthMismatch, SingularSystem
from exact01.geometry import Hyperplane, fit_hyperplane


def test_encode_01():
    assert encode_labels([0, 1, 1]).tolist() == [-1, 1, 1]


def test_encode_pm1_identity():
    assert encode_labels([-1, 1]).tolist() == [-1, 1]


def test_encode_float_labels():
    assert encode_labels([0.0, 1.0]).tolist() == [-1, 1]


@pytest.mark.parametrize("raw", [[2], [0, 1, -1], [0.5, 1]])
def test_encode_rejects(raw):
    with pytest.raises(BadLabelAlphabet):
        encode_labels(raw)


def test_dataset_validation():
    with pytest.raises(BadLabelAlphabet):
        Dataset([[1.0]], [0])
    with pytest.raises(LengthMismatch):
        Dataset([[1.0], [2.0]], [1])
    ds = Dataset([[1.0, 2.0], [3.0, 4.0]], [1, -1])
    assert (ds.n, ds.d) == (2, 2)
    assert ds[1].label == -1 and ds.items[0].point.tolist() == [1, 2]


def test_assign_examples():
    h = Hyperplane(np.array([1.0]), -1.0)  # h(x) = x - 1
    assert assign(h, [[3.0]], 1e-9).tolist() == [1]
    assert assign(h, [[1.0]], 1e-9).tolist() == [0]
    assert assign(h, [[1.0 + 1e-12]], 1e-9).tolist() == [0]
    assert assign(h, [[-4.0]], 1e-9).tolist() == [-1]


def test_loss_pair_table():
    assert loss_pair(1, 1) == 0
    assert loss_pair(-1, 1) == 1
    assert loss_pair(1, 0) == 0
    assert loss_pair(-1, 0) == 0
    assert loss_pair(1, -1) == 1


def test_loss_total_examples():
    assert loss_total([1, -1, 1], [1, -1, 1]) == 0
    assert loss_total([1, 1], [-1, -1]) == 2
    # term by term: (+1,0)->0, (-1,+1)->1, (+1,+1)->0
    assert loss_total([1, -1, 1], [0, 1, 1]) == 1


def test_loss_total_length_mismatch():
    with pytest.raises(LengthMismatch):
        loss_total([1, 1], [1])


labels = st.lists(st.sampled_from([-1, 1]), min_size=1, max_size=50)


@given(labels, st.data())
def test_loss_bounds(l, data):
    z = data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=len(l), max_size=len(l)))
    assert 0 <= loss_total(l, z) <= len(l)
    assert loss_total(l, l) == 0


@given(labels, st.data())
def test_zeroing_never_increases_loss(l, data):
    z = np.array(data.draw(st.lists(st.sampled_from([-1, 0, 1]), min_size=len(l), max_size=len(l))))
    i = data.draw(st.integers(0, len(l) - 1))
    z0 = z.copy()
    z0[i] = 0
    assert loss_total(l, z0) <= loss_total(l, z)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**32 - 1))
def test_orientation_complement(d, seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(d, 15))
    ds = Dataset(rng.standard_normal((n, d)), rng.choice([-1, 1], n))
    comb = rng.choice(n, d, replace=False)
    try:
        hp = fit_hyperplane(ds.points[comb], 1.0)
    except SingularSystem:
        return
    eps = ds.default_eps()
    vals = np.abs(hp(ds.points))
    off = np.delete(vals, comb)
    if off.size and off.min() <= eps:
        return  # not in general position at this tolerance
    lp = loss_total(ds.labels, assign(hp, ds.points, eps))
    lm = loss_total(ds.labels, assign(hp.flipped(), ds.points, eps))
    assert lp + lm == n - d
