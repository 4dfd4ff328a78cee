"""Out-of-sample evaluation: k-fold splits, max-margin representatives, cross-validation."""
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from . import engine
from .bounds import pocket_perceptron, resolve_ub
from .errors import BadFoldCount, NotSeparable
from .geometry import Hyperplane, signed_values


def kfold_split(n, k, seed=0):
    if not 2 <= k <= n:
        raise BadFoldCount(f"need 2 <= k <= n, got k={k}, n={n}")
    perm = np.random.default_rng(seed).permutation(n)
    return [np.sort(f) for f in np.array_split(perm, k)]


def predict(h, points, eps):
    """Hard +-1 labels; points within eps of the boundary go to +1."""
    return np.where(signed_values(h, points) >= -eps, 1, -1)


@njit(cache=True)
def _mdm_step(X, wts, g, sign, w):
    """Move weight within one hull from its worst support point to its best point.

    ``g`` holds the gradient entries ``sign * X @ w``. Returns the change in ``w``.
    """
    lo = np.argmin(g)
    hi, best = -1, -np.inf
    for i in range(X.shape[0]):
        if wts[i] > 0.0 and g[i] > best:
            best, hi = g[i], i
    if hi == lo or hi < 0:
        return np.zeros_like(w)
    u = sign * (X[lo] - X[hi])
    uu = u @ u
    if uu == 0.0:
        return np.zeros_like(w)
    delta = min(wts[hi], -(u @ w) / uu)
    if delta <= 0.0:
        return np.zeros_like(w)
    wts[hi] -= delta
    wts[lo] += delta
    return delta * u


@njit(cache=True)
def _nearest_hull_points(P, N, tol, max_iter):
    """Closest pair between conv(P) and conv(N) by MDM-style weight transfer.

    Stops when the margin lower bound ``min(P @ w - max_sup, ...)`` is within
    ``tol`` (relative) of ``|w|``. Returns ``(wp, wn, converged)``.
    """
    a = np.zeros(P.shape[0])
    b = np.zeros(N.shape[0])
    a[0] = 1.0
    b[0] = 1.0
    wp = P[0].copy()
    wn = N[0].copy()
    for _ in range(max_iter):
        w = wp - wn
        norm = np.sqrt(w @ w)
        if norm == 0.0:
            return wp, wn, False
        gp = P @ w
        gn = -(N @ w)
        margin = min(gp.min() - wn @ w, gn.min() + wp @ w) / norm
        if norm - margin <= tol * norm:
            return wp, wn, True
        # gap of each hull: spread of its gradient over the support
        sp = -np.inf
        sn = -np.inf
        for i in range(P.shape[0]):
            if a[i] > 0.0 and gp[i] > sp:
                sp = gp[i]
        for i in range(N.shape[0]):
            if b[i] > 0.0 and gn[i] > sn:
                sn = gn[i]
        if sp - gp.min() >= sn - gn.min():
            wp = wp + _mdm_step(P, a, gp, 1.0, w)
        else:
            wn = wn - _mdm_step(N, b, gn, -1.0, w)
    return wp, wn, False


def max_margin_representative(train, assignment, tol=1e-4, max_epochs=2000):
    """Widest-margin boundary separating the points the assignment classifies correctly.

    Points whose assignment disagrees with their training label are set aside; the
    rest must be strictly separable. Returns a hyperplane positive on the +1 class.
    """
    assignment = np.asarray(assignment)
    keep = assignment == train.labels
    X, l = train.points[keep], train.labels[keep]
    P, N = X[l == 1], X[l == -1]
    d = train.d
    if len(P) == 0 or len(N) == 0:
        return Hyperplane(np.zeros(d), 1.0 if len(N) == 0 else -1.0)
    wp, wn, _ = _nearest_hull_points(
        np.ascontiguousarray(P, float), np.ascontiguousarray(N, float), tol, max_epochs * len(X)
    )
    w = wp - wn
    h = Hyperplane(w, float((wn @ wn - wp @ wp) / 2.0))
    if np.any(l * signed_values(h, X) <= 0):
        raise NotSeparable("assignment is not realizable by a hyperplane")
    return h


@dataclass
class FoldResult:
    fold: int
    train_n: int
    train_errors: int
    test_n: int
    test_errors: int
    pocket_train_errors: int
    ub: int

    @property
    def train_rate(self):
        return self.train_errors / self.train_n

    @property
    def test_rate(self):
        return self.test_errors / self.test_n if self.test_n else 0.0


@dataclass
class CVReport:
    folds: list = field(default_factory=list)
    assignments: list = field(default_factory=list)
    seed: int = 0

    def _stat(self, attr):
        v = np.array([getattr(f, attr) for f in self.folds])
        sd = float(np.std(v, ddof=1)) if len(v) > 1 else 0.0
        return float(np.mean(v)), sd

    @property
    def train_mean(self):
        return self._stat("train_rate")[0]

    @property
    def train_std(self):
        return self._stat("train_rate")[1]

    @property
    def test_mean(self):
        return self._stat("test_rate")[0]

    @property
    def test_std(self):
        return self._stat("test_rate")[1]

    CSV_COLUMNS = (
        "fold", "train_n", "train_errors", "train_rate",
        "test_n", "test_errors", "test_rate", "pocket_train_errors", "ub",
    )

    def rows(self):
        for f in self.folds:
            yield (f.fold, f.train_n, f.train_errors, f.train_rate,
                   f.test_n, f.test_errors, f.test_rate, f.pocket_train_errors, f.ub)

    def table(self):
        lines = ["fold  train_err  train%   test_err  test%"]
        for f in self.folds:
            lines.append(f"{f.fold:>4}  {f.train_errors:>9}  {100 * f.train_rate:6.2f}  "
                         f"{f.test_errors:>8}  {100 * f.test_rate:6.2f}")
        lines.append(f"mean train {100 * self.train_mean:.2f}% ({100 * self.train_std:.2f})  "
                     f"test {100 * self.test_mean:.2f}% ({100 * self.test_std:.2f})")
        return "\n".join(lines)


def cross_validate(dataset, k=10, seed=0, ub="auto", eps=None, threads=1):
    """Exact fit per training fold; test with the max-margin representative.

    Standard deviations are sample (ddof=1) over folds.
    """
    report = CVReport(seed=seed)
    for i, test_idx in enumerate(kfold_split(dataset.n, k, seed)):
        mask = np.ones(dataset.n, bool)
        mask[test_idx] = False
        train, test = dataset.subset(np.flatnonzero(mask)), dataset.subset(test_idx)
        eps_f = train.default_eps() if eps is None else eps
        bound, _ = resolve_ub(train, ub, eps=eps_f, seed=seed)
        sol = engine.solve(train, ub=bound, eps=eps_f, threads=threads)
        rep = max_margin_representative(train, sol.assignment)
        test_err = int(np.count_nonzero(predict(rep, test.points, eps_f) != test.labels))
        pocket = pocket_perceptron(train, seed=seed, eps=eps_f)
        report.folds.append(FoldResult(i, train.n, sol.optimal_loss, test.n, test_err, pocket.value, bound))
        report.assignments.append(test_idx)
    return report
