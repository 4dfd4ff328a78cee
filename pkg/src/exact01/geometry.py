"""Small dense linear algebra, oriented hyperplanes and the point/hyperplane dual map."""
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import SingularSystem

PIVOT_RTOL = 1e-12


@njit(cache=True)
def eliminate(a, b):
    """Solve ``a @ x = b`` in place by Gaussian elimination with partial pivoting.

    ``a`` is destroyed; on success ``b`` holds the solution. Returns False when a
    pivot is smaller than ``PIVOT_RTOL`` times the largest entry of the original
    row it came from.
    """
    n = b.shape[0]
    scale = np.empty(n)
    for i in range(n):
        s = 0.0
        for j in range(n):
            v = abs(a[i, j])
            if v > s:
                s = v
        if s == 0.0:
            return False
        scale[i] = s
    for k in range(n):
        p = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            v = abs(a[i, k])
            if v > best:
                best = v
                p = i
        if best < PIVOT_RTOL * scale[p]:
            return False
        if p != k:
            for j in range(n):
                t = a[k, j]
                a[k, j] = a[p, j]
                a[p, j] = t
            t = b[k]
            b[k] = b[p]
            b[p] = t
            t = scale[k]
            scale[k] = scale[p]
            scale[p] = t
        piv = a[k, k]
        for i in range(k + 1, n):
            f = a[i, k] / piv
            if f != 0.0:
                for j in range(k + 1, n):
                    a[i, j] -= f * a[k, j]
                b[i] -= f * b[k]
    for k in range(n - 1, -1, -1):
        s = b[k]
        for j in range(k + 1, n):
            s -= a[k, j] * b[j]
        b[k] = s / a[k, k]
    return True


def solve_linear(a, b):
    a = np.array(a, dtype=float, ndmin=2)
    b = np.array(b, dtype=float, ndmin=1)
    if a.shape[0] != a.shape[1] or a.shape[0] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    if not eliminate(a, b):
        raise SingularSystem("matrix is singular to working precision")
    return b


@dataclass(frozen=True, eq=False)
class Hyperplane:
    """Oriented affine boundary ``h(x) = normal @ x + offset``.

    Boundaries fitted through D points carry ``normal = sense * w`` and
    ``offset = -sense`` where ``w @ p = 1`` for every defining point ``p``.
    """

    normal: np.ndarray
    offset: float
    sense: float = 1.0

    @property
    def dim(self):
        return self.normal.shape[0]

    @property
    def homogeneous(self):
        return np.append(self.normal, self.offset)

    @classmethod
    def from_homogeneous(cls, coef, sense=1.0):
        coef = np.asarray(coef, dtype=float)
        return cls(coef[:-1].copy(), float(coef[-1]), float(sense))

    def flipped(self):
        return Hyperplane(-self.normal, -self.offset, -self.sense)

    def __call__(self, x):
        return signed_values(self, x)

    def __repr__(self):
        return f"Hyperplane(normal={self.normal.tolist()}, offset={self.offset!r}, sense={self.sense!r})"


def fit_hyperplane(points, sense=1.0):
    """Boundary through exactly D points, from the system ``X @ w = 1``."""
    X = np.array(points, dtype=float, ndmin=2)
    d = X.shape[1]
    if X.shape[0] != d:
        raise ValueError(f"need exactly {d} points in {d} dimensions, got {X.shape[0]}")
    if sense not in (1.0, -1.0):
        raise ValueError("sense must be +1.0 or -1.0")
    w = solve_linear(X, np.ones(d))
    return Hyperplane(sense * w, -float(sense), float(sense))


def signed_values(h, points):
    P = np.asarray(points, dtype=float)
    if P.ndim == 1:
        P = P.reshape(-1, h.dim)
    if P.shape[1] != h.dim:
        raise ValueError(f"points have dimension {P.shape[1]}, hyperplane has {h.dim}")
    return P @ h.normal + h.offset


# -- point/hyperplane duality ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class DualHyperplane:
    """Non-vertical hyperplane ``x_D = c_1 x_1 + ... + c_{D-1} x_{D-1} - c_D``."""

    coefficients: np.ndarray

    def side(self, q):
        """``q_D - (c_1 q_1 + ... - c_D)``: positive above, zero on, negative below."""
        q = np.asarray(q, dtype=float)
        c = self.coefficients
        return q[..., -1] - (q[..., :-1] @ c[:-1] - c[-1])

    def contains(self, q, tol=1e-9):
        return bool(abs(self.side(q)) <= tol)


def dual_map(p):
    return DualHyperplane(np.array(p, dtype=float, ndmin=1).copy())


def dual_unmap(h):
    return h.coefficients.copy()


def as_dual(h):
    """Rewrite a classifier boundary with nonzero last normal component in dual form.

    For any point ``p``: ``h(p) == h.normal[-1] * as_dual(h).side(p)``.
    """
    a, b = h.normal, h.offset
    if a[-1] == 0.0:
        raise SingularSystem("vertical boundary has no dual point")
    c = np.empty_like(a)
    c[:-1] = -a[:-1] / a[-1]
    c[-1] = b / a[-1]
    return DualHyperplane(c)


def dual_sign_vector(q, points):
    """Signs of point ``q`` against the arrangement of dual hyperplanes of ``points``."""
    P = np.asarray(points, dtype=float)
    q = np.asarray(q, dtype=float)
    vals = q[-1] - (P[:, :-1] @ q[:-1] - P[:, -1])
    return np.sign(vals).astype(np.int8)
