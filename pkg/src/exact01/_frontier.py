"""Compiled frontier sweep behind ``engine.solve``.

The frontier is one set of column arrays. Per item: surviving configs are
updated and compacted in place (stable), then the combination-extension
children of model-less survivors are appended in parent order. This gives
the same order as the list-based reference in ``engine.generate``.
"""
import numba
import numpy as np
from numba import njit, prange

from .geometry import eliminate

ST_EXPANDED, ST_PRUNED, ST_SINGULAR, ST_PEAK = range(4)


@njit(cache=True)
def _grow(comb, size, loss, coef, need):
    cap = comb.shape[0]
    if need <= cap:
        return comb, size, loss, coef
    new_cap = max(need, 2 * cap)
    c2 = np.full((new_cap, comb.shape[1]), -1, np.int32)
    s2 = np.zeros(new_cap, np.int32)
    l2 = np.zeros(new_cap, np.int64)
    f2 = np.zeros((new_cap, coef.shape[1]), np.float64)
    c2[:cap] = comb
    s2[:cap] = size
    l2[:cap] = loss
    f2[:cap] = coef
    return c2, s2, l2, f2


@njit(cache=True)
def _pair_loss(v, label, eps):
    return np.int64((abs(v) > eps) & ((v > 0.0) != (label > 0)))


def _sweep_impl(X, y, sense, ub, eps, init_cap):
    n, d = X.shape
    comb = np.full((init_cap, d), -1, np.int32)
    size = np.zeros(init_cap, np.int32)
    loss = np.zeros(init_cap, np.int64)
    coef = np.zeros((init_cap, d + 1), np.float64)
    size[0] = 0
    loss[0] = 0
    count = 1
    stats = np.zeros(4, np.int64)
    stats[ST_PEAK] = 1
    newloss = np.empty(init_cap, np.int64)
    ok = np.empty(init_cap, np.bool_)

    for i in range(n):
        xi = X[i]
        li = y[i]
        if newloss.shape[0] < count:
            newloss = np.empty(comb.shape[0], np.int64)
        # sequence extension: every config consumes item i
        for j in prange(count):
            if size[j] == d:
                v = coef[j, d]
                for k in range(d):
                    v += coef[j, k] * xi[k]
                newloss[j] = loss[j] + _pair_loss(v, li, eps)
            else:
                newloss[j] = 0
        w = 0
        for j in range(count):
            stats[ST_EXPANDED] += 1
            if size[j] == d and newloss[j] > ub:
                stats[ST_PRUNED] += 1
                continue
            if w != j:
                for k in range(d):
                    comb[w, k] = comb[j, k]
                for k in range(d + 1):
                    coef[w, k] = coef[j, k]
                size[w] = size[j]
            loss[w] = newloss[j] if size[j] == d else 0
            w += 1
        # combination extension: model-less survivors take item i
        n_parents = 0
        for j in range(w):
            if size[j] < d:
                n_parents += 1
        comb, size, loss, coef = _grow(comb, size, loss, coef, w + n_parents)
        t = w
        for j in range(w):
            if size[j] < d:
                s = size[j]
                for k in range(s):
                    comb[t, k] = comb[j, k]
                comb[t, s] = i
                for k in range(s + 1, d):
                    comb[t, k] = -1
                for k in range(d + 1):
                    coef[t, k] = 0.0
                size[t] = s + 1
                loss[t] = 0
                t += 1
        if ok.shape[0] < t:
            ok = np.empty(comb.shape[0], np.bool_)
        for j in prange(w, t):
            ok[j] = True
            if size[j] < d:
                continue
            A = np.empty((d, d))
            b = np.ones(d)
            for r in range(d):
                for k in range(d):
                    A[r, k] = X[comb[j, r], k]
            if not eliminate(A, b):
                ok[j] = False
                loss[j] = -1
                continue
            for k in range(d):
                coef[j, k] = sense * b[k]
            coef[j, d] = -sense
            acc = 0
            for m in range(i + 1):
                v = coef[j, d]
                for k in range(d):
                    v += coef[j, k] * X[m, k]
                acc += _pair_loss(v, y[m], eps)
            loss[j] = acc
            ok[j] = acc <= ub
        u = w
        for j in range(w, t):
            if size[j] == d and loss[j] < 0:
                stats[ST_SINGULAR] += 1
                continue
            stats[ST_EXPANDED] += 1
            if not ok[j]:
                stats[ST_PRUNED] += 1
                continue
            if u != j:
                for k in range(d):
                    comb[u, k] = comb[j, k]
                for k in range(d + 1):
                    coef[u, k] = coef[j, k]
                size[u] = size[j]
                loss[u] = loss[j]
            u += 1
        count = u
        if count > stats[ST_PEAK]:
            stats[ST_PEAK] = count
    return comb[:count].copy(), size[:count].copy(), loss[:count].copy(), coef[:count].copy(), stats


_sweep_serial = njit(cache=True)(_sweep_impl)
_sweep_parallel = njit(cache=True, parallel=True)(_sweep_impl)


def sweep(X, y, sense, ub, eps, threads=1, parallel=None):
    """Run the frontier recursion for one orientation.

    Returns ``(comb, size, loss, coef, stats)``; rows with ``size == d`` carry a
    model. Unused combination slots hold -1 and model-less rows have zero coef. ``parallel`` forces the multithreaded build regardless of ``threads``.
    """
    X = np.ascontiguousarray(X, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.int64)
    ub = min(int(ub), X.shape[0])
    init_cap = 1 << 12
    if parallel is None:
        parallel = threads > 1
    if not parallel:
        return _sweep_serial(X, y, float(sense), ub, float(eps), init_cap)
    prev = numba.get_num_threads()
    numba.set_num_threads(max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS)))
    try:
        return _sweep_parallel(X, y, float(sense), ub, float(eps), init_cap)
    finally:
        numba.set_num_threads(prev)
