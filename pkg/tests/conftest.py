import numpy as np
import pytest

from spinexp.oracle import series_expm
from spinexp.quat import theta_h
from spinexp.spin import sp4hat_basis, su4_basis


def cofactor_det(m):
    """Laplace expansion along the first row; independent of LAPACK."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    if n == 1:
        return m[0, 0]
    total = 0j
    for j in range(n):
        minor = np.delete(np.delete(m, 0, axis=0), j, axis=1)
        total += (-1) ** j * m[0, j] * cofactor_det(minor)
    return total


def cofactor_char_coeffs(x):
    """Coefficients (lowest first) of det(tI - x) by interpolation on cofactor determinants."""
    n = x.shape[0]
    ts = np.arange(n + 1, dtype=float)
    vals = [cofactor_det(t * np.eye(n) - x) for t in ts]
    v = np.vander(ts, n + 1, increasing=True)
    return np.linalg.solve(v, np.array(vals))


def random_anti_hermitian(rng, n, scale=1.0):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (a - a.conj().T) / 2


def random_unitary(rng, n=4):
    return series_expm(random_anti_hermitian(rng, n))


def random_su4(rng, scale=1.0):
    return sum(rng.uniform(-1, 1) * scale * m for _, m in su4_basis())


def random_sp4hat(rng, scale=1.0):
    return sum(rng.uniform(-1, 1) * scale * m for _, m in sp4hat_basis())


def random_sp4(rng, scale=1.0):
    z = random_anti_hermitian(rng, 2, scale)
    w = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return theta_h(z, scale * (w + w.T) / 2)


def random_sp4_group(rng):
    return series_expm(random_sp4(rng))


def random_antisymmetric(rng, n):
    u = np.triu(rng.uniform(-1.0, 1.0, (n, n)), 1)
    return u - u.T


def rel(a, b):
    return np.linalg.norm(np.asarray(a) - np.asarray(b)) / max(1.0, np.linalg.norm(b))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
