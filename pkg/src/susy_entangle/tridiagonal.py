"""Symmetric tridiagonal eigensolver (implicit-shift QL) and the
characteristic-polynomial recurrence.

The QL sweep follows the classic tql2/tqli formulation: a Wilkinson-style
shift from the leading 2x2 of the unreduced block, chased by Givens
rotations from the bottom of the block upward.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from scipy.linalg.blas import drot

from .errors import ConsistencyError

_EPS = np.finfo(float).eps
MAX_SWEEPS = 60


def tridiagonal_ql(diag: Sequence[float], offdiag: Sequence[float], vectors: bool = True):
    """Eigen-decompose the symmetric tridiagonal matrix (diag, offdiag).

    Returns ``(w, V)`` with ascending eigenvalues ``w`` and orthonormal
    eigenvectors in the columns of ``V`` (``V`` is None if ``vectors`` is
    False).  Each eigenvector has its first non-negligible entry positive.
    """
    n = len(diag)
    if n == 0:
        raise ValueError("empty matrix")
    if len(offdiag) != n - 1:
        raise ValueError(f"offdiag must have length {n - 1}, got {len(offdiag)}")
    d = [float(x) for x in diag]
    e = [float(x) for x in offdiag] + [0.0]
    # rows of zt are the eigenvector columns, kept contiguous for the rotations
    zt = np.eye(n) if vectors else None

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_SWEEPS:
                raise ConsistencyError(f"QL iteration did not converge at index {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                if zt is not None:
                    # in place: row i+1 <- c*row(i+1) + s*row(i), row i <- c*row(i) - s*row(i+1)
                    drot(zt[i + 1], zt[i], c, s, overwrite_x=True, overwrite_y=True)
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0

    order = sorted(range(n), key=d.__getitem__)
    w = np.array([d[k] for k in order])
    if zt is None:
        return w, None
    v = zt[order].T.copy()
    fix_signs(v)
    return w, v


def fix_signs(v: np.ndarray) -> None:
    """Flip columns in place so the first non-negligible entry is positive."""
    for k in range(v.shape[1]):
        col = v[:, k]
        tol = 1e-12 * np.max(np.abs(col))
        first = np.flatnonzero(np.abs(col) > tol)[0]
        if col[first] < 0:
            v[:, k] = -col


def char_poly_eval(offdiag: Sequence[float], lam: float, diag: Sequence[float] | None = None) -> float:
    """det(lam*I - T) via p_d = (lam - a_d) p_{d-1} - b_{d-1}^2 p_{d-2}."""
    n = len(offdiag) + 1
    a = [0.0] * n if diag is None else list(diag)
    prev, cur = 1.0, lam - a[0]
    for k in range(1, n):
        prev, cur = cur, (lam - a[k]) * cur - offdiag[k - 1] ** 2 * prev
    return cur


def char_poly_coefficients(offdiag: Sequence[float]) -> np.ndarray:
    """Coefficients (highest degree first) of det(lam*I - T) for zero diagonal."""
    prev = np.array([1.0])
    cur = np.array([1.0, 0.0])
    for b in offdiag:
        nxt = np.concatenate([cur, [0.0]])
        nxt[2:] -= b * b * prev
        prev, cur = cur, nxt
    return cur
