"""Independent reference computations used to check the closed forms.

Nothing here uses the Clifford machinery: a plain Taylor series with scaling
and squaring, and a minimal polynomial from clustered eigenvalues.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .core import ConvergenceError, as_matrix, polyval_matrix


@dataclass(frozen=True)
class OracleConfig:
    scaling_threshold: float = 0.5
    series_tolerance: float = 1e-15
    max_terms: int = 40

    def __post_init__(self):
        if self.series_tolerance <= 0:
            raise ValueError("series_tolerance must be positive")
        if self.max_terms < 20:
            raise ValueError("max_terms must be at least 20")


DEFAULT_CONFIG = OracleConfig()


def series_expm(x, cfg=DEFAULT_CONFIG):
    """exp(x) by a truncated Taylor series on x / 2^s, squared s times."""
    x = as_matrix(x)
    norm = np.linalg.norm(x, 1)
    s = 0
    if norm > cfg.scaling_threshold:
        s = int(math.ceil(math.log2(norm / cfg.scaling_threshold)))
    y = x / 2.0**s
    ynorm = norm / 2.0**s
    eye = np.eye(x.shape[0], dtype=complex)
    out = eye.copy()
    term = eye.copy()
    for k in range(1, cfg.max_terms + 1):
        term = term @ y / k
        out = out + term
        # remaining tail is bounded by the next term times a geometric factor
        if ynorm ** (k + 1) / math.factorial(k + 1) <= cfg.series_tolerance:
            break
    else:
        raise ConvergenceError("Taylor series did not converge within max_terms")
    for _ in range(s):
        out = out @ out
    return out


def brute_minpoly(x, *, cluster_tol=None):
    """Minimal polynomial of a diagonalizable matrix from its distinct eigenvalues.

    Eigenvalues closer than ``1e-7 (1 + ||x||_F)`` are merged.  The result is a
    monic ``numpy.polynomial.Polynomial`` (coefficients lowest degree first).
    """
    x = as_matrix(x)
    fro = np.linalg.norm(x)
    tol = cluster_tol if cluster_tol is not None else 1e-7 * (1.0 + fro)
    eig = np.linalg.eigvals(x)
    clusters = []
    for lam in sorted(eig, key=lambda z: (z.real, z.imag)):
        for c in clusters:
            if abs(lam - np.mean(c)) <= tol:
                c.append(lam)
                break
        else:
            clusters.append([lam])
    roots = [complex(np.mean(c)) for c in clusters]
    poly = Polynomial.fromroots(roots)
    resid = np.linalg.norm(polyval_matrix(poly.coef, x))
    if resid > 1e-8 * (1.0 + fro) ** len(roots):
        raise ValueError(f"clustering failed: annihilation residual {resid:.3e}")
    return poly
