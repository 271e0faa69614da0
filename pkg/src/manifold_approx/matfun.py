"""Dense matrix kernels used by the geometries.

Factorizations are thin wrappers around LAPACK (via numpy/scipy) with
deterministic sign conventions so that downstream Tucker factors and
retractions are reproducible bit-for-bit across runs.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

__all__ = [
    "sym_funm",
    "expm",
    "logm_rotation",
    "thin_svd",
    "thin_qr",
]

_SYM_FUNCTIONS = {
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "invsqrt": lambda w: 1.0 / np.sqrt(w),
}


def sym_funm(a, fn):
    """Apply a scalar function to a symmetric matrix via eigendecomposition.

    ``fn`` is one of ``"exp"``, ``"log"``, ``"sqrt"``, ``"invsqrt"``.  The
    latter three require a positive spectrum.  The result is exactly
    symmetrized.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max(initial=0.0)))
    if np.abs(a - a.T).max(initial=0.0) > 1e-12 * scale:
        raise ValueError("matrix is not symmetric to 1e-12")
    if fn not in _SYM_FUNCTIONS:
        raise ValueError(f"unknown matrix function {fn!r}")
    w, q = np.linalg.eigh(0.5 * (a + a.T))
    if fn in ("log", "sqrt", "invsqrt") and w.min() <= 0.0:
        raise ValueError(f"{fn} requires a positive spectrum, min eigenvalue {w.min():.3e}")
    r = (q * _SYM_FUNCTIONS[fn](w)) @ q.T
    return 0.5 * (r + r.T)


def expm(a):
    """Matrix exponential (scaling-and-squaring with Pade approximation)."""
    return scipy.linalg.expm(np.asarray(a, dtype=float))


def logm_rotation(q, tol=1e-8):
    """Principal logarithm of a special orthogonal matrix, returned skew.

    Rotations with an eigenvalue at -1 (a rotation angle of pi) have no
    principal logarithm and are rejected.
    """
    q = np.asarray(q, dtype=float)
    n = q.shape[0]
    if q.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {q.shape}")
    if np.abs(q.T @ q - np.eye(n)).max() > 1e-8 or np.linalg.det(q) < 0.0:
        raise ValueError("matrix is not special orthogonal")
    eigvals = np.linalg.eigvals(q)
    if np.abs(eigvals + 1.0).min() < tol:
        raise ValueError("rotation angle at pi: no principal logarithm")
    w = scipy.linalg.logm(q)
    w = np.real(w)
    return 0.5 * (w - w.T)


def thin_svd(a):
    """Thin SVD ``a = u @ diag(s) @ vt`` with a fixed sign convention.

    The first nonzero component of every left singular vector is made
    positive, so identical input bits give identical output bits.
    """
    a = np.asarray(a, dtype=float)
    u, s, vt = np.linalg.svd(a, full_matrices=False)
    for j in range(u.shape[1]):
        col = u[:, j]
        nz = np.flatnonzero(col)
        if nz.size and col[nz[0]] < 0.0:
            u[:, j] = -col
            vt[j, :] = -vt[j, :]
    return u, s, vt


def thin_qr(a):
    """Thin QR ``a = q @ r`` with the diagonal of ``r`` made nonnegative."""
    a = np.asarray(a, dtype=float)
    q, r = np.linalg.qr(a)
    signs = np.where(np.diag(r) < 0.0, -1.0, 1.0)
    return q * signs, r * signs[:, None]
