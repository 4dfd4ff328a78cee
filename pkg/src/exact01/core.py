"""Datasets, labels, trinary assignments and the 0-1 loss."""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BadLabelAlphabet, EmptyDataset, LengthMismatch
from .geometry import signed_values


class Item(NamedTuple):
    point: np.ndarray
    label: int


@dataclass(frozen=True, eq=False)
class Dataset:
    points: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        X = np.array(self.points, dtype=float, ndmin=2)
        y = np.asarray(self.labels, dtype=np.int64).reshape(-1)
        if X.shape[0] == 0 or X.shape[1] == 0:
            raise EmptyDataset("dataset needs at least one point of dimension >= 1")
        if X.shape[0] != y.shape[0]:
            raise LengthMismatch(f"{X.shape[0]} points but {y.shape[0]} labels")
        if not np.all(np.isfinite(X)):
            raise ValueError("non-finite coordinate")
        if not np.all((y == 1) | (y == -1)):
            raise BadLabelAlphabet("labels must be -1 or +1")
        X.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "points", X)
        object.__setattr__(self, "labels", y)

    @classmethod
    def from_items(cls, items):
        items = list(items)
        if not items:
            raise EmptyDataset("no items")
        return cls(np.array([it[0] for it in items], dtype=float, ndmin=2), [it[1] for it in items])

    @property
    def n(self):
        return self.points.shape[0]

    @property
    def d(self):
        return self.points.shape[1]

    @property
    def items(self):
        return [Item(p, int(l)) for p, l in zip(self.points, self.labels)]

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return Item(self.points[i], int(self.labels[i]))

    def subset(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return Dataset(self.points[idx], self.labels[idx])

    def scale(self):
        return float(np.max(np.abs(self.points)))

    def default_eps(self):
        return 1e-8 * (1.0 + self.scale())


def encode_labels(raw):
    vals = [int(v) if float(v) == int(v) else v for v in raw]
    alphabet = set(vals)
    if alphabet <= {0, 1}:
        return np.array([1 if v == 1 else -1 for v in vals], dtype=np.int64)
    if alphabet <= {-1, 1}:
        return np.array(vals, dtype=np.int64)
    bad = sorted(alphabet - {-1, 0, 1}, key=str)
    if bad:
        raise BadLabelAlphabet(f"unsupported label value(s) {bad}; use 0/1 or -1/+1")
    raise BadLabelAlphabet("mixed label alphabets: both 0 and -1 present")


def assign(h, points, eps):
    """Trinary prediction: 0 when ``|h(x)| <= eps``, otherwise ``sign(h(x))``."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    v = signed_values(h, points)
    z = np.where(v > 0, 1, -1).astype(np.int64)
    z[np.abs(v) <= eps] = 0
    return z


def loss_pair(label, z):
    return 0 if z == 0 or z == label else 1


def loss_total(labels, preds):
    labels = np.asarray(labels)
    preds = np.asarray(preds)
    if labels.shape != preds.shape:
        raise LengthMismatch(f"{labels.shape[0]} labels but {preds.shape[0]} predictions")
    return int(np.count_nonzero((preds != 0) & (preds != labels)))


def resolve_boundary(labels, preds):
    """Replace on-boundary (zero) predictions by the training labels."""
    preds = np.asarray(preds)
    return np.where(preds == 0, labels, preds).astype(np.int64)
