"""Dense symmetric linear algebra kernels.

Problem sizes in this package are tiny (n = 9 states, m <= ~60 measurements),
so everything is dense and delegates to LAPACK through numpy/scipy. Matrices
are symmetrized before factorization to remove accumulated round-off drift.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import ConvergenceFailure, DimensionMismatch, NotPositiveDefinite


def sym_part(a: np.ndarray) -> np.ndarray:
    """Return the symmetric part (a + a.T) / 2."""
    return 0.5 * (a + a.T)


def _require_square(a: np.ndarray, name: str) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {a.shape}")


def chol_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``a @ x = b`` for symmetric positive definite ``a``.

    Parameters
    ----------
    a : (n, n) array_like
        Symmetric positive definite matrix. Symmetrized internally.
    b : (n,) or (n, k) array_like
        Right-hand side vector or matrix.

    Returns
    -------
    x : ndarray
        Solution with the same trailing shape as ``b``.

    Raises
    ------
    NotPositiveDefinite
        If the Cholesky factorization encounters a nonpositive pivot.
    DimensionMismatch
        If shapes are inconsistent.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _require_square(a, "a")
    if b.shape[0] != a.shape[0]:
        raise DimensionMismatch(f"a has shape {a.shape} but b has shape {b.shape}")
    try:
        c, low = scipy.linalg.cho_factor(sym_part(a), lower=True, check_finite=False)
    except scipy.linalg.LinAlgError as err:
        raise NotPositiveDefinite(str(err)) from err
    return scipy.linalg.cho_solve((c, low), b, check_finite=False)


def spd_inverse(a: np.ndarray) -> np.ndarray:
    """Inverse of a symmetric positive definite matrix, symmetrized."""
    a = np.asarray(a, dtype=float)
    _require_square(a, "a")
    return sym_part(chol_solve(a, np.eye(a.shape[0])))


def sym_eig_min(a: np.ndarray) -> tuple[float, np.ndarray]:
    """Minimum eigenvalue and a unit eigenvector of a symmetric matrix.

    The input must be symmetric to within ``1e-10`` relative to its largest
    entry. The eigenvector sign is canonicalized so its largest-magnitude
    component is positive, which keeps downstream cut generation
    deterministic.

    Raises
    ------
    ConvergenceFailure
        If the underlying eigensolver does not converge.
    ValueError
        If the matrix is not symmetric to tolerance.
    """
    a = np.asarray(a, dtype=float)
    _require_square(a, "a")
    scale = 1.0 + np.abs(a).max() if a.size else 1.0
    if a.size and np.abs(a - a.T).max() > 1e-10 * scale:
        raise ValueError("matrix is not symmetric to 1e-10")
    try:
        w, v = np.linalg.eigh(sym_part(a))
    except np.linalg.LinAlgError as err:
        raise ConvergenceFailure(str(err)) from err
    vec = v[:, 0].copy()
    k = int(np.argmax(np.abs(vec)))
    if vec[k] < 0.0:
        vec = -vec
    return float(w[0]), vec
