"""Independent checks for the solver.

``brute_force_solve`` loops over every D-combination directly, with no
recursion or pruning. ``enumerate_dichotomies`` lists every linearly separable
labeling reachable from boundaries through D points, and the arrangement counts
give the closed form that list must match.
"""
import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import assign, loss_total, resolve_boundary
from .data import check_general_position
from .errors import DegenerateData, NoViableModel, SingularSystem
from .geometry import Hyperplane, as_dual, dual_map, dual_sign_vector, dual_unmap, fit_hyperplane

MAX_DICHOTOMY_WORK = 10**6


class BruteForceResult(NamedTuple):
    loss: int
    hyperplane: Hyperplane
    combination: tuple


def brute_force_solve(dataset, eps=None):
    eps = dataset.default_eps() if eps is None else eps
    X, l = dataset.points, dataset.labels
    best = None
    for comb in itertools.combinations(range(dataset.n), dataset.d):
        for sense in (1.0, -1.0):
            try:
                h = fit_hyperplane(X[list(comb)], sense)
            except SingularSystem:
                break
            loss = loss_total(l, resolve_boundary(l, assign(h, X, eps)))
            if best is None or loss < best.loss:
                best = BruteForceResult(loss, h, comb)
    if best is None:
        raise NoViableModel("every combination is singular")
    return best


def _boundary_through(points):
    """Homogeneous normal of the affine hyperplane through D points (null space of [P | 1])."""
    A = np.hstack([points, np.ones((points.shape[0], 1))])
    _, _, vt = np.linalg.svd(A)
    return Hyperplane.from_homogeneous(vt[-1])


def enumerate_dichotomies(dataset, eps=None, check=True):
    """All sign vectors of boundaries through D points, with every completion of the D zeros."""
    n, d = dataset.n, dataset.d
    if math.comb(n, d) * 2**d > MAX_DICHOTOMY_WORK:
        raise ValueError(f"C({n},{d}) * 2^{d} exceeds {MAX_DICHOTOMY_WORK}; too large to enumerate")
    if check:
        report = check_general_position(dataset)
        if not report.clean:
            raise DegenerateData(report.summary())
    eps = dataset.default_eps() if eps is None else eps
    X = dataset.points
    out = set()
    for comb in itertools.combinations(range(n), d):
        h = _boundary_through(X[list(comb)])
        base = assign(h, X, eps)
        zeros = np.flatnonzero(base == 0)
        for sense in (1, -1):
            z = sense * base
            for fill in itertools.product((-1, 1), repeat=len(zeros)):
                z[zeros] = fill
                out.add(tuple(int(v) for v in z))
    return out


@dataclass(frozen=True)
class ArrangementCounts:
    cells: int
    bounded: int
    cover: int


def arrangement_counts(n, d):
    """Cells and bounded cells of a simple arrangement of n hyperplanes in R^d,
    and Cover's count of linearly separable labelings of n points in R^d."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    cells = sum(math.comb(n, k) for k in range(d + 1))
    bounded = math.comb(n - 1, d)
    cover = 2 * sum(math.comb(n - 1, k) for k in range(d + 1))
    return ArrangementCounts(cells, bounded, cover)


def verify_cover(dataset, eps=None):
    return len(enumerate_dichotomies(dataset, eps)) == arrangement_counts(dataset.n, dataset.d).cover


def best_dichotomy_loss(dataset, eps=None):
    return min(loss_total(dataset.labels, np.array(z)) for z in enumerate_dichotomies(dataset, eps))


# -- duality checks -------------------------------------------------------------


def duality_trial(rng, d, tol=1e-9):
    """One random primal/dual pair; returns (incidence_ok, order_ok)."""
    p = rng.uniform(-3, 3, d)
    h = dual_map(rng.uniform(-3, 3, d))  # a random non-vertical hyperplane
    q = dual_unmap(h)
    # incident pair: move p onto h along the last axis
    p_on = p.copy()
    p_on[-1] -= h.side(p_on)
    incidence = h.contains(p_on, tol) and dual_map(p_on).contains(q, tol)
    p_off = p.copy()
    p_off[-1] -= h.side(p_off) - rng.choice((-1.0, 1.0)) * rng.uniform(0.1, 2.0)
    order = np.sign(h.side(p_off)) == np.sign(dual_map(p_off).side(q)) != 0
    return bool(incidence), bool(order)


def dichotomy_matches_dual_cell(dataset, h, eps=None):
    """A boundary's labeling equals the sign vector of its dual point in the dual arrangement
    (up to the sign of the last normal component)."""
    eps = dataset.default_eps() if eps is None else eps
    z = assign(h, dataset.points, eps)
    s = dual_sign_vector(dual_unmap(as_dual(h)), dataset.points) * int(np.sign(h.normal[-1]))
    keep = z != 0
    return bool(np.array_equal(z[keep], s[keep]))
