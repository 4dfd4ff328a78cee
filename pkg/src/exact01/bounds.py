"""Certified upper bounds on the optimal 0-1 loss, used for viability pruning.

Every bound except the trivial one is the realized 0-1 loss of a concrete
hyperplane, so it can never undercut the optimum. Points falling within eps of
a heuristic hyperplane are counted as errors to keep the bound conservative.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import Hyperplane

DEFAULT_PROVIDERS = ("trivial", "pocket")


@dataclass(frozen=True)
class BoundEstimate:
    value: int
    witness: Optional[Hyperplane]
    provider: str


def _strict_losses(W, Z, labels, eps):
    # rows of W are homogeneous weight vectors; on-boundary counts as an error
    V = W @ Z.T
    return np.count_nonzero((np.abs(V) <= eps) | (np.sign(V) != labels), axis=-1)


def _homogeneous(dataset):
    return np.hstack([dataset.points, np.ones((dataset.n, 1))])


def trivial_bound(dataset):
    return BoundEstimate(dataset.n // 2, None, "trivial")


def pocket_perceptron(dataset, epochs=50, seed=0, lr=1.0, eps=None):
    """Perceptron on homogeneous coordinates keeping the best weights seen so far."""
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    eps = dataset.default_eps() if eps is None else eps
    Z = _homogeneous(dataset)
    l = dataset.labels
    rng = np.random.default_rng(seed)
    w = np.zeros(Z.shape[1])
    best_w, best = None, dataset.n + 1
    for _ in range(epochs):
        changed = False
        for i in rng.permutation(dataset.n):
            if l[i] * (Z[i] @ w) > 0:
                continue
            w = w + lr * l[i] * Z[i]
            changed = True
            loss = int(_strict_losses(w, Z, l, eps))
            if loss < best:
                best, best_w = loss, w.copy()
                if best == 0:
                    break
        if best == 0 or not changed:
            break
    if best_w is None:
        return BoundEstimate(dataset.n, None, "pocket")
    return BoundEstimate(best, Hyperplane.from_homogeneous(best_w), "pocket")


def hinge_subgradient(dataset, iterations=500, step=0.1, eps=None):
    """Subgradient descent on the mean hinge loss; the bound is the best realized 0-1 loss."""
    eps = dataset.default_eps() if eps is None else eps
    Z = _homogeneous(dataset)
    l = dataset.labels
    w = np.zeros(Z.shape[1])
    best_w, best = None, dataset.n + 1
    for t in range(1, iterations + 1):
        active = l * (Z @ w) < 1
        if not active.any():
            break
        g = -(l[active, None] * Z[active]).sum(axis=0) / dataset.n
        w = w - step / np.sqrt(t) * g
        loss = int(_strict_losses(w, Z, l, eps))
        if loss < best:
            best, best_w = loss, w.copy()
    if best_w is None:
        return BoundEstimate(dataset.n, None, "hinge")
    return BoundEstimate(best, Hyperplane.from_homogeneous(best_w), "hinge")


def compute_upper_bound(dataset, providers=DEFAULT_PROVIDERS, epochs=50, seed=0, eps=None):
    """Tightest of the selected providers; ties keep the earlier provider."""
    makers = {
        "trivial": lambda: trivial_bound(dataset),
        "pocket": lambda: pocket_perceptron(dataset, epochs=epochs, seed=seed, eps=eps),
        "hinge": lambda: hinge_subgradient(dataset, eps=eps),
    }
    best = None
    for name in providers:
        if name not in makers:
            raise ValueError(f"unknown bound provider {name!r}")
        est = makers[name]()
        if best is None or est.value < best.value:
            best = est
    if best is None:
        raise ValueError("no bound providers selected")
    return best


def resolve_ub(dataset, mode, eps=None, seed=0):
    """Map a CLI-style ub mode ('auto', 'none'/'disabled', or an integer) to a bound.

    Returns ``(ub, estimate)``; estimate is None unless the bound was computed.
    """
    if isinstance(mode, (int, np.integer)):
        return int(mode), None
    mode = str(mode).strip().lower()
    if mode in ("none", "disabled"):
        return dataset.n, None
    if mode == "auto":
        est = compute_upper_bound(dataset, eps=eps, seed=seed)
        return est.value, est
    try:
        ub = int(mode)
    except ValueError:
        raise ValueError(f"ub must be 'auto', 'none' or a nonnegative integer, got {mode!r}") from None
    if ub < 0:
        raise ValueError("ub must be nonnegative")
    return ub, None
