"""Polynomial roots: companion-matrix eigenvalues followed by Newton polishing."""

from __future__ import annotations

import numpy as np


class RootFindingError(ArithmeticError):
    pass


def trim(coeffs, rel: float = 0.0) -> np.ndarray:
    """Drop leading (highest-degree) zero coefficients."""
    c = np.asarray(coeffs, dtype=complex)
    if not len(c):
        return c
    cutoff = rel * np.max(np.abs(c))
    nz = np.nonzero(np.abs(c) > cutoff)[0]
    return c[nz[0]:] if len(nz) else c[:0]


def polish(coeffs: np.ndarray, root: complex, tol: float = 1e-12, maxiter: int = 50) -> complex:
    """Newton iteration on a single root; keeps the best iterate."""
    deriv = np.polyder(coeffs)
    best, best_res = root, abs(np.polyval(coeffs, root))
    z = root
    for _ in range(maxiter):
        f = np.polyval(coeffs, z)
        df = np.polyval(deriv, z)
        if df == 0:
            break
        step = f / df
        z = z - step
        res = abs(np.polyval(coeffs, z))
        if res < best_res:
            best, best_res = z, res
        if abs(step) <= tol * max(1.0, abs(z)):
            break
    return best


def polish_roots(coeffs, tol: float = 1e-12) -> np.ndarray:
    """All roots of the polynomial with coefficients highest-degree first."""
    c = trim(coeffs)
    if len(c) == 0:
        raise RootFindingError("zero polynomial has no isolated roots")
    if len(c) == 1:
        return np.array([], dtype=complex)
    raw = np.roots(c)
    if not np.all(np.isfinite(raw)):
        raise RootFindingError(f"eigenvalue solver failed on coefficients {list(c)}")
    return np.array([polish(c, r, tol) for r in raw], dtype=complex)
