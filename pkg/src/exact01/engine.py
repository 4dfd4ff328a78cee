"""Incremental cell enumeration: exact 0-1 loss linear classification.

Every boundary through D of the N points is enumerated, in both orientations,
by a recursion over the data that grows (combination, scanned prefix) pairs.
A config whose model already misclassifies more than ``ub`` points of the
prefix is dropped together with all its descendants, since the accumulated
loss can only grow.

``generate`` is the literal list-of-configs recursion; ``solve`` runs the same
recursion through the compiled frontier in ``_frontier``.
"""
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import _frontier
from .core import Dataset, assign, loss_pair, loss_total, resolve_boundary
from .errors import DimensionExceedsCount, EmptyDataset, NoViableModel, SingularSystem
from .geometry import Hyperplane, fit_hyperplane


@dataclass(frozen=True)
class Model:
    hyperplane: Hyperplane
    loss: int


@dataclass(frozen=True)
class Config:
    combination: tuple = ()
    scanned: int = 0
    model: Optional[Model] = None


@dataclass
class SearchStats:
    configs_expanded: int = 0
    configs_pruned: int = 0
    configs_singular: int = 0
    peak_frontier: int = 0
    wall_time: float = 0.0

    def merge(self, other):
        self.configs_expanded += other.configs_expanded
        self.configs_pruned += other.configs_pruned
        self.configs_singular += other.configs_singular
        self.peak_frontier = max(self.peak_frontier, other.peak_frontier)
        self.wall_time += other.wall_time


@dataclass
class SolveReport:
    hyperplane: Hyperplane
    optimal_loss: int
    combination: tuple
    assignment: np.ndarray
    ub: int
    eps: float
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def sense(self):
        return self.hyperplane.sense


def init_config():
    return Config()


def extend_sequence(c, item, eps):
    if c.model is None:
        return Config(c.combination, c.scanned + 1, None)
    h = c.model.hyperplane
    z = int(assign(h, np.atleast_2d(item.point), eps)[0])
    return Config(c.combination, c.scanned + 1, Model(h, c.model.loss + loss_pair(item.label, z)))


def extend_combination(c, dataset, sense, eps):
    """Add item ``c.scanned`` to the combination; fit the model once it has D points.

    Returns None for a singular combination.
    """
    i = c.scanned
    comb = c.combination + (i,)
    if len(comb) < dataset.d:
        return Config(comb, i + 1, None)
    try:
        h = fit_hyperplane(dataset.points[list(comb)], sense)
    except SingularSystem:
        return None
    prefix = slice(0, i + 1)
    loss = loss_total(dataset.labels[prefix], assign(h, dataset.points[prefix], eps))
    return Config(comb, i + 1, Model(h, loss))


def retain(c, ub, d):
    if len(c.combination) > d:
        return False
    return c.model is None or c.model.loss <= ub


def _check(dataset):
    if dataset.n < 1:
        raise EmptyDataset("empty dataset")
    if dataset.d > dataset.n:
        raise DimensionExceedsCount(f"dimension {dataset.d} exceeds point count {dataset.n}")


def generate(dataset, sense, ub, eps=None, stats=None):
    """Reference recursion over Config objects; returns the final frontier."""
    _check(dataset)
    eps = dataset.default_eps() if eps is None else eps
    d = dataset.d
    stats = SearchStats() if stats is None else stats
    frontier = [init_config()]
    for item in dataset.items:
        ignored = [extend_sequence(c, item, eps) for c in frontier]
        included = []
        for c in frontier:
            if len(c.combination) < d:
                child = extend_combination(c, dataset, sense, eps)
                if child is None:
                    stats.configs_singular += 1
                else:
                    included.append(child)
        children = ignored + included
        stats.configs_expanded += len(children)
        frontier = [c for c in children if retain(c, ub, d)]
        stats.configs_pruned += len(children) - len(frontier)
        stats.peak_frontier = max(stats.peak_frontier, len(frontier))
    return frontier


def select_best(configs):
    best = None
    for c in configs:
        if c.model is None:
            continue
        if best is None or c.model.loss < best.model.loss:
            best = c
    return best


def _run(dataset, sense, ub, eps, threads):
    t0 = time.perf_counter()
    comb, size, loss, coef, st = _frontier.sweep(dataset.points, dataset.labels, sense, ub, eps, threads)
    stats = SearchStats(
        int(st[_frontier.ST_EXPANDED]),
        int(st[_frontier.ST_PRUNED]),
        int(st[_frontier.ST_SINGULAR]),
        int(st[_frontier.ST_PEAK]),
        time.perf_counter() - t0,
    )
    has_model = np.flatnonzero(size == dataset.d)
    if has_model.size == 0:
        return None, stats
    tied = has_model[loss[has_model] == loss[has_model].min()]
    # lexicographically smallest combination; lexsort keys run last-to-first
    j = tied[np.lexsort(comb[tied].T[::-1])[0]]
    h = Hyperplane.from_homogeneous(coef[j], sense)
    return (int(loss[j]), tuple(int(v) for v in comb[j]), h), stats


def solve(dataset: Dataset, ub=None, eps=None, threads=1) -> SolveReport:
    """Globally optimal 0-1 loss hyperplane.

    ``ub`` must be at least the optimal loss; None disables pruning (ub = N).
    Ties go to the lexicographically smallest combination, then to the
    positive orientation. The order does not depend on thread count.
    """
    _check(dataset)
    eps = dataset.default_eps() if eps is None else float(eps)
    ub = dataset.n if ub is None else int(ub)
    if ub < 0:
        raise ValueError("ub must be nonnegative")
    stats = SearchStats()
    best = None
    for sense in (1.0, -1.0):
        found, st = _run(dataset, sense, ub, eps, threads)
        stats.merge(st)
        if found is not None and (best is None or found[:2] < best[:2]):
            best = found
    if best is None:
        raise NoViableModel(
            f"no boundary with at most {ub} errors; the bound is below the optimum "
            "or every combination is degenerate"
        )
    loss, comb, h = best
    z = resolve_boundary(dataset.labels, assign(h, dataset.points, eps))
    return SolveReport(h, loss, comb, z, ub, eps, stats)
