"""CSV ingestion, synthetic Gaussian data and general-position diagnostics."""
import csv
import itertools
import math
from dataclasses import dataclass, field
from statistics import NormalDist

import numpy as np

from .core import Dataset, encode_labels
from .errors import EmptyDataset, ParseError, RaggedRows


@dataclass(frozen=True)
class SyntheticSpec:
    n: int
    d: int
    bayes_error: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if self.n < 2 or self.d < 1:
            raise ValueError("need n >= 2 and d >= 1")
        if not 0.0 < self.bayes_error < 0.5:
            raise ValueError("bayes_error must lie in (0, 0.5)")


def _parse_row(row, lineno):
    out = []
    for col, cell in enumerate(row, start=1):
        try:
            out.append(float(cell))
        except ValueError:
            raise ParseError(lineno, col, f"not a number: {cell!r}") from None
        if not math.isfinite(out[-1]):
            raise ParseError(lineno, col, f"non-finite value {cell!r}")
    return out


def load_csv(path, has_header=None):
    """Read ``x_1,...,x_D,label`` rows; labels 0/1 or -1/+1.

    ``has_header=None`` treats a first row that does not parse as numbers as a header.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [(i, r) for i, r in enumerate(csv.reader(fh), start=1) if r and any(c.strip() for c in r)]
    if rows and has_header is None:
        try:
            _parse_row(rows[0][1], rows[0][0])
            has_header = False
        except ParseError:
            has_header = True
    if has_header:
        rows = rows[1:]
    if not rows:
        raise EmptyDataset(f"{path}: no data rows")
    width = len(rows[0][1])
    if width < 2:
        raise RaggedRows(f"{path}: need at least one feature column and a label column")
    values = []
    for lineno, r in rows:
        if len(r) != width:
            raise RaggedRows(f"{path}: row {lineno} has {len(r)} columns, expected {width}")
        values.append(_parse_row(r, lineno))
    arr = np.array(values)
    return Dataset(arr[:, :-1], encode_labels(arr[:, -1]))


def write_csv(dataset, path, header=None):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        if header:
            w.writerow(header)
        for p, l in zip(dataset.points, dataset.labels):
            w.writerow(["%.17g" % v for v in p] + [int(l)])


def class_separation(bayes_error):
    """Mean offset mu such that N(+mu, 1) vs N(-mu, 1) has the given Bayes error."""
    return NormalDist().inv_cdf(1.0 - bayes_error)


def gen_gaussian(spec):
    """Two balanced isotropic unit Gaussians centred at +-mu along the first axis, shuffled."""
    rng = np.random.default_rng(spec.seed)
    n_pos = (spec.n + 1) // 2
    labels = np.array([1] * n_pos + [-1] * (spec.n - n_pos))
    labels = labels[rng.permutation(spec.n)]
    X = rng.standard_normal((spec.n, spec.d))
    X[:, 0] += class_separation(spec.bayes_error) * labels
    return Dataset(X, labels)


@dataclass
class GeneralPositionReport:
    duplicates: list = field(default_factory=list)
    degenerate: list = field(default_factory=list)
    exhaustive: bool = True
    checked: int = 0

    @property
    def clean(self):
        return not self.duplicates and not self.degenerate

    def summary(self):
        if self.clean:
            how = "all" if self.exhaustive else "sampled"
            return f"general position: clean ({how} {self.checked} subsets checked)"
        return (
            f"general position violated: {len(self.duplicates)} duplicate pair(s), "
            f"{len(self.degenerate)} degenerate subset(s)"
        )


def _default_tol(dataset):
    return 1e-12 * (1.0 + dataset.scale()) ** dataset.d


def check_general_position(dataset, tol=None, max_subsets=200_000, seed=0, limit=100):
    """Flag duplicate points and (D+1)-subsets with near-zero affine volume.

    Exhaustive when C(N, D+1) <= max_subsets, otherwise a seeded sample.
    At most ``limit`` findings of each kind are kept.
    """
    tol = _default_tol(dataset) if tol is None else tol
    if tol <= 0:
        raise ValueError("tol must be positive")
    X, n, d = dataset.points, dataset.n, dataset.d
    rep = GeneralPositionReport()
    _, inv, counts = np.unique(X, axis=0, return_inverse=True, return_counts=True)
    inv = inv.reshape(-1)
    for g in np.flatnonzero(counts > 1):
        idx = np.flatnonzero(inv == g)
        rep.duplicates.extend((int(a), int(b)) for a, b in itertools.combinations(idx, 2))
    rep.duplicates = rep.duplicates[:limit]

    k = d + 1
    if n < k:
        # fewer points than a simplex: they must be affinely independent
        if n > 1:
            s = np.linalg.svd(X[1:] - X[0], compute_uv=False)
            if s[-1] < tol ** (1.0 / d):
                rep.degenerate.append(tuple(range(n)))
        rep.checked = 1
        return rep
    total = math.comb(n, k)
    if total <= max_subsets:
        subsets = np.array(list(itertools.combinations(range(n), k)), dtype=np.int64)
    else:
        rng = np.random.default_rng(seed)
        subsets = np.array([np.sort(rng.choice(n, k, replace=False)) for _ in range(max_subsets)])
        rep.exhaustive = False
    rep.checked = len(subsets)
    for start in range(0, len(subsets), 50_000):
        S = subsets[start:start + 50_000]
        P = X[S]
        vol = np.linalg.det(P[:, 1:, :] - P[:, :1, :])
        for row in S[np.abs(vol) < tol]:
            if len(rep.degenerate) >= limit:
                break
            rep.degenerate.append(tuple(int(v) for v in row))
    return rep


def jitter(dataset, seed=0, magnitude=None):
    """Seeded uniform perturbation, by default 1e-9 times the data scale."""
    if magnitude is None:
        magnitude = 1e-9 * max(dataset.scale(), 1.0)
    rng = np.random.default_rng(seed)
    X = dataset.points + rng.uniform(-magnitude, magnitude, size=dataset.points.shape)
    return Dataset(X, dataset.labels)
