"""Closed-form exponentials driven by a known minimal polynomial.

Four formulas cover minimal polynomials x^2 + l^2, x^2 + 2i g x + l^2,
x^3 + c^2 x and (x^2 + a^2)(x^2 + b^2).  Everything else goes through Lagrange
interpolation on explicitly recovered roots.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import DegenerateError, DomainError, as_matrix, lagrange_exp
from .minpoly import annihilates, classify_sp4, classify_su4
from .oracle import series_expm
from .quat import Quaternion
from numpy.polynomial import Polynomial

DEGENERATE = 1e-8


@dataclass
class ExpResult:
    value: np.ndarray
    method: str
    minpoly_case: str


def _require(poly, x):
    if not annihilates(poly, x):
        raise DomainError("the stated minimal polynomial does not annihilate the input")


def exp_formula_quadratic(x, lam, *, check=True):
    """e^X = cos(l) I + sin(l)/l X when X^2 + l^2 = 0."""
    x = as_matrix(x)
    if check:
        _require(Polynomial([lam * lam, 0, 1]), x)
    eye = np.eye(x.shape[0])
    return math.cos(lam) * eye + (math.sin(lam) / lam) * x


def exp_formula_quadratic_shifted(x, gamma, lam, *, check=True):
    """e^X when X^2 + 2i g X + l^2 = 0, with s = sqrt(l^2 + g^2)."""
    x = as_matrix(x)
    if check:
        _require(Polynomial([lam * lam, 2j * gamma, 1]), x)
    sig = math.sqrt(lam * lam + gamma * gamma)
    eye = np.eye(x.shape[0])
    inner = (math.cos(sig) + 1j * gamma / sig * math.sin(sig)) * eye + (math.sin(sig) / sig) * x
    return np.exp(-1j * gamma) * inner


def exp_formula_cubic(x, c, *, check=True):
    """Euler-Rodrigues form: I + sin(c)/c X + (1 - cos c)/c^2 X^2 when X^3 + c^2 X = 0."""
    x = as_matrix(x)
    if check:
        _require(Polynomial([0, c * c, 0, 1]), x)
    eye = np.eye(x.shape[0])
    # 1 - cos c = 2 sin^2(c/2) avoids cancellation for small c
    return eye + (math.sin(c) / c) * x + (2 * math.sin(c / 2) ** 2 / (c * c)) * (x @ x)


def exp_formula_quartic(x, theta_sq, lambda_sq, *, check=True):
    """e^X when X^4 + t^2 X^2 + l^2 = 0 with t^4 > 4 l^2.

    a^2, b^2 are the roots of u^2 - t^2 u + l^2 = 0 and
    e^X = [ (b sin a - a sin b)/(ab) X^3 + (cos a - cos b) X^2
            + (b^3 sin a - a^3 sin b)/(ab) X + (b^2 cos a - a^2 cos b) I ] / (b^2 - a^2).
    """
    x = as_matrix(x)
    disc = theta_sq * theta_sq - 4 * lambda_sq
    if disc <= 0:
        raise DegenerateError("theta^4 <= 4 lambda^2: repeated roots, use the quadratic formula")
    if lambda_sq <= 0:
        raise DegenerateError("lambda must be nonzero for the quartic formula")
    if check:
        _require(Polynomial([lambda_sq, 0, theta_sq, 0, 1]), x)
    root = math.sqrt(disc)
    b2 = (theta_sq + root) / 2
    a2 = lambda_sq / b2  # product of roots, avoids cancellation
    a, b = math.sqrt(a2), math.sqrt(b2)
    eye = np.eye(x.shape[0])
    x2 = x @ x
    x3 = x2 @ x
    sa, sb, ca, cb = math.sin(a), math.sin(b), math.cos(a), math.cos(b)
    out = ((b * sa - a * sb) / (a * b)) * x3 + (ca - cb) * x2
    out = out + ((b**3 * sa - a**3 * sb) / (a * b)) * x + (b2 * ca - a2 * cb) * eye
    return out / (b2 - a2)


def _series(x, case):
    return ExpResult(series_expm(x), "series-fallback", case)


def _exp_sp4(y, algebra):
    rep = classify_sp4(y, algebra)
    fn2 = rep.fnorm_sq
    if rep.case == "zero":
        return ExpResult(np.eye(4, dtype=complex), "formula-I", "zero")
    if rep.case == "quadratic":
        lam = math.sqrt(fn2) / 2
        if lam < DEGENERATE:
            return _series(y, rep.case)
        return ExpResult(exp_formula_quadratic(y, lam, check=False), "formula-I", rep.case)
    if rep.case == "cubic":
        c = math.sqrt(fn2 / 2)
        if c < DEGENERATE:
            return _series(y, rep.case)
        return ExpResult(exp_formula_cubic(y, c, check=False), "formula-III", rep.case)
    theta_sq, lambda_sq = fn2 / 2, rep.det
    if math.sqrt(max(theta_sq**2 - 4 * lambda_sq, 0.0)) < DEGENERATE * theta_sq or lambda_sq <= 0:
        return _series(y, rep.case)
    return ExpResult(exp_formula_quartic(y, theta_sq, lambda_sq, check=False), "formula-IV", rep.case)


def _well_separated(roots, scale):
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < DEGENERATE * scale:
                return False
    return True


def _exp_su4(x):
    rep = classify_su4(x)
    n = math.sqrt(rep.fnorm_sq)
    if rep.case == "zero":
        return ExpResult(np.eye(4, dtype=complex), "formula-I", "zero")
    if rep.case == "case1":
        lam = math.sqrt(rep.e2 / 2)
        if lam < DEGENERATE:
            return _series(x, rep.case)
        return ExpResult(exp_formula_quadratic(x, lam, check=False), "formula-I", rep.case)
    if rep.case == "case2":
        a = rep.a
        if 2 * abs(a) < DEGENERATE:
            return _series(x, rep.case)
        return ExpResult(
            exp_formula_quadratic_shifted(x, a, math.sqrt(3) * abs(a), check=False), "formula-II", rep.case
        )
    if rep.case == "case3":
        c = math.sqrt(rep.e2)
        if c < DEGENERATE:
            return _series(x, rep.case)
        return ExpResult(exp_formula_cubic(x, c, check=False), "formula-III", rep.case)
    if rep.case == "case6" and abs(rep.e3_imag) <= 1e-9 * n**3:
        theta_sq, lambda_sq = rep.e2, rep.e4
        if lambda_sq > 0 and math.sqrt(max(theta_sq**2 - 4 * lambda_sq, 0.0)) >= DEGENERATE * theta_sq:
            return ExpResult(exp_formula_quartic(x, theta_sq, lambda_sq, check=False), "formula-IV", rep.case)
    roots = rep.roots
    if not _well_separated(roots, n):
        return _series(x, rep.case)
    if rep.case == "case6":
        poly = Polynomial.fromroots(roots)
        if not annihilates(poly, x):
            return _series(x, rep.case)
    return ExpResult(lagrange_exp(x, roots), "lagrange", rep.case)


def exp_spin_element(y, algebra):
    """Exponential of an element of sp(4), the hatted sp(4), or su(4)."""
    if algebra in ("sp4", "sp4hat"):
        return _exp_sp4(y, algebra)
    if algebra == "su4":
        return _exp_su4(y)
    raise DomainError(f"unknown algebra {algebra!r}")


# so(3)

def so3_params(x):
    """(a, b, c) from X = [[0, -c, b], [c, 0, -a], [-b, a, 0]]."""
    x = np.asarray(x)
    if x.shape != (3, 3):
        raise DomainError("expected a 3x3 matrix")
    if np.linalg.norm(np.imag(x)) > 0 or np.linalg.norm(x + x.T) > 1e-12 * max(1.0, np.linalg.norm(x)):
        raise DomainError("not real antisymmetric")
    x = np.real(x)
    return float(x[2, 1]), float(x[0, 2]), float(x[1, 0])


def exp_so3_quaternion(x):
    """exp of a 3x3 antisymmetric matrix through the unit quaternion p and v -> p v conj(p)."""
    a, b, c = so3_params(x)
    lam = math.sqrt(a * a + b * b + c * c)
    if lam == 0.0:
        return np.eye(3)
    s = math.sin(lam / 2) / lam
    p = Quaternion(math.cos(lam / 2), s * a, s * b, s * c)
    pc = p.conjugate()
    cols = []
    for u in (Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)):
        cols.append((p * u * pc).as_array()[1:])
    return np.column_stack(cols)


def exp_so3(x):
    """exp of a 3x3 antisymmetric matrix by the cubic formula with c = sqrt(a^2 + b^2 + c^2)."""
    a, b, c = so3_params(x)
    lam = math.sqrt(a * a + b * b + c * c)
    if lam == 0.0:
        return np.eye(3)
    if lam < DEGENERATE:
        return np.real(series_expm(np.real(x)))
    return np.real(exp_formula_cubic(np.real(np.asarray(x)), lam, check=False))
