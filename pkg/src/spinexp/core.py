"""Matrix primitives shared by every other module.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` (or ``float64``
where the result is known to be real).  Nothing here knows about Clifford
algebras; it is linear algebra only.
"""

from itertools import combinations

import numpy as np

MAX_DIM = 16


class DomainError(ValueError):
    """Input violates a structural precondition (not antisymmetric, wrong size, ...)."""


class DegenerateError(ValueError):
    """A closed form is numerically unusable for this input."""


class ConvergenceError(RuntimeError):
    """An iterative procedure ran out of budget."""


I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
ISY = 1j * SY  # real: [[0, 1], [-1, 0]]

PAULI = {"I": I2, "x": SX, "y": SY, "z": SZ}


def as_matrix(x, *, dtype=complex):
    """Coerce ``x`` to a square 2-D array of the requested dtype."""
    a = np.asarray(x, dtype=dtype)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


def kron(*mats):
    """Kronecker product of any number of factors, capped at MAX_DIM."""
    if not mats:
        raise ValueError("kron needs at least one factor")
    out = np.asarray(mats[0], dtype=complex)
    for m in mats[1:]:
        out = np.kron(out, np.asarray(m, dtype=complex))
    if out.shape[0] > MAX_DIM:
        raise DomainError(f"dimension {out.shape[0]} exceeds {MAX_DIM}")
    return out


def frobenius_norm_sq(x):
    x = np.asarray(x)
    return float(np.sum(x.real**2 + x.imag**2))


def adjoint(x):
    return np.conj(np.asarray(x)).T


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def principal_minor_sums(x):
    """Return ``[E_1, ..., E_n]`` where ``E_k`` sums all k-by-k principal minors.

    The characteristic polynomial is then
    ``t^n - E_1 t^(n-1) + E_2 t^(n-2) - ... + (-1)^n E_n``.
    """
    x = as_matrix(x)
    n = x.shape[0]
    if n > 8:
        raise DomainError("principal minor sums limited to n <= 8")
    out = []
    for k in range(1, n + 1):
        idx = np.array(list(combinations(range(n), k)))
        subs = x[idx[:, :, None], idx[:, None, :]]
        out.append(complex(np.sum(np.linalg.det(subs))))
    return out


def det(x):
    """Determinant via LU with partial pivoting (LAPACK getrf)."""
    return complex(np.linalg.det(as_matrix(x)))


def det_schur_2x2_blocks(x, *, rcond=1e-12):
    """Determinant of a 4x4 matrix through its 2x2 block Schur complement.

    With ``x = [[A, B], [C, D]]`` and ``B`` invertible,
    ``det x = det(B) det(C - D B^-1 A)`` (the sign factor is +1 for 2x2 blocks).
    Raises ``DegenerateError`` when ``B`` is numerically singular so the caller
    can fall back to ``det``.
    """
    x = as_matrix(x)
    if x.shape != (4, 4):
        raise DomainError("block Schur determinant needs a 4x4 matrix")
    a, b, c, d = x[:2, :2], x[:2, 2:], x[2:, :2], x[2:, 2:]
    db = b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]
    scale = max(np.abs(b).max(), 1e-300)
    if abs(db) <= rcond * scale * scale:
        raise DegenerateError("upper-right block is singular")
    binv = np.array([[b[1, 1], -b[0, 1]], [-b[1, 0], b[0, 0]]]) / db
    s = c - d @ binv @ a
    return complex(db * (s[0, 0] * s[1, 1] - s[0, 1] * s[1, 0]))


def polyval_matrix(coeffs, x):
    """Evaluate a polynomial (coefficients lowest degree first) at a square matrix."""
    x = as_matrix(x)
    eye = np.eye(x.shape[0], dtype=complex)
    out = np.zeros_like(x)
    for c in reversed(list(coeffs)):
        out = out @ x + c * eye
    return out


def lagrange_exp(x, roots, *, min_gap=1e-12):
    """``exp(x)`` by Lagrange interpolation over the distinct roots of its minimal polynomial.

    ``roots`` must be pairwise distinct; the caller guarantees that the product
    of ``(x - r)`` over them annihilates ``x``.
    """
    x = as_matrix(x)
    roots = [complex(r) for r in roots]
    scale = 1.0 + max(abs(r) for r in roots)
    for i, j in combinations(range(len(roots)), 2):
        if abs(roots[i] - roots[j]) <= min_gap * scale:
            raise DegenerateError("interpolation nodes coincide")
    eye = np.eye(x.shape[0], dtype=complex)
    factors = [x - r * eye for r in roots]
    out = np.zeros_like(x)
    for k, rk in enumerate(roots):
        term = np.exp(rk) * eye
        for j, rj in enumerate(roots):
            if j != k:
                term = term @ factors[j] / (rk - rj)
        out = out + term
    return out
