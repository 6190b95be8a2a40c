"""Eigenvalue-free minimal polynomials for sp(4), its hatted conjugate, and su(4).

The sp(4) classifier needs only the Frobenius norm and the determinant.  The
su(4) classifier works from the principal-minor sums E2, E3, E4 (E1 = 0).
Roots are produced only where a closed-form exponential needs them.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial

from .core import (
    DomainError,
    as_matrix,
    det,
    det_schur_2x2_blocks,
    DegenerateError,
    frobenius_norm_sq,
    polyval_matrix,
    principal_minor_sums,
)
from .quat import J, J_HAT4, is_anti_theta_h

EPS = 1e-9


class ClassificationError(ValueError):
    """The E-values are inconsistent with the case they appear to satisfy."""


@dataclass
class Sp4MinPolyReport:
    case: str
    poly: Polynomial
    det: float
    fnorm_sq: float

    @property
    def degree(self):
        return self.poly.degree()


@dataclass
class Su4MinPolyReport:
    case: str
    poly: Polynomial
    e2: float
    e3_imag: float
    e4: float
    fnorm_sq: float
    roots: list = field(default_factory=list)
    a: float = None

    @property
    def degree(self):
        return self.poly.degree()


def annihilates(poly, x, *, tol=EPS):
    x = as_matrix(x)
    fro = math.sqrt(frobenius_norm_sq(x))
    resid = math.sqrt(frobenius_norm_sq(polyval_matrix(poly.coef, x)))
    return resid <= tol * (1.0 + fro) ** poly.degree()


def _check_anti_hermitian(x, tol=1e-10):
    fro = math.sqrt(frobenius_norm_sq(x))
    if math.sqrt(frobenius_norm_sq(x + x.conj().T)) > tol * max(1.0, fro):
        raise DomainError("not anti-Hermitian")


def _in_symplectic_algebra(y, m, tol=1e-10):
    fro = math.sqrt(frobenius_norm_sq(y))
    return math.sqrt(frobenius_norm_sq(y.T @ m + m @ y)) <= tol * max(1.0, fro)


def validate_sp4(y, algebra="auto"):
    """Raise DomainError unless y lies in sp(4) (J_4) or the hatted algebra (J_hat4)."""
    y = as_matrix(y)
    if y.shape != (4, 4):
        raise DomainError("expected a 4x4 matrix")
    _check_anti_hermitian(y)
    ok_sp = _in_symplectic_algebra(y, J(4))
    ok_hat = _in_symplectic_algebra(y, J_HAT4)
    if algebra == "sp4" and not ok_sp:
        raise DomainError("violates y^T J4 = -J4 y")
    if algebra == "sp4hat" and not ok_hat:
        raise DomainError("violates y^T J_hat4 = -J_hat4 y")
    if algebra == "auto" and not (ok_sp or ok_hat):
        raise DomainError("not in sp(4) or its J_hat4 conjugate")
    return y


def classify_sp4(y, algebra="auto"):
    """Minimal polynomial of y in sp(4) or the hatted algebra from ||y||_F and det(y)."""
    y = validate_sp4(y, algebra)
    fn2 = frobenius_norm_sq(y)
    if fn2 == 0.0:
        return Sp4MinPolyReport("zero", Polynomial([0.0, 1.0]), 0.0, 0.0)
    d = det(y).real
    scale = fn2 * fn2
    candidates = []
    if abs(fn2 * fn2 - 16.0 * d) <= EPS * scale:
        candidates.append(("quadratic", Polynomial([fn2 / 4.0, 0.0, 1.0])))
    if abs(d) <= EPS * scale:
        candidates.append(("cubic", Polynomial([0.0, fn2 / 2.0, 0.0, 1.0])))
    for case, poly in candidates:
        if annihilates(poly, y):
            return Sp4MinPolyReport(case, poly, d, fn2)
    return Sp4MinPolyReport("quartic", Polynomial([d, 0.0, fn2 / 2.0, 0.0, 1.0]), d, fn2)


def sp4_quadratic_structure_check(a, b):
    """True iff theta_H(A, B) in sp(4) has minimal polynomial x^2 + c^2.

    The test is that A A* + B B* is a nonzero scalar matrix and A B is symmetric.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    scale = max(1.0, np.linalg.norm(a) + np.linalg.norm(b))
    if np.linalg.norm(a + a.conj().T) > 1e-10 * scale:
        raise DomainError("A is not anti-Hermitian")
    if np.linalg.norm(b - b.T) > 1e-10 * scale:
        raise DomainError("B is not symmetric")
    g = a @ a.conj().T + b @ b.conj().T
    c2 = np.trace(g).real / 2.0
    if c2 <= 1e-14 * scale**2:
        return False
    tol = 1e-10 * scale**2
    scalar = np.linalg.norm(g - c2 * np.eye(2)) <= tol
    ab = a @ b
    return bool(scalar and np.linalg.norm(ab - ab.T) <= tol)


@dataclass
class HatBlockReport:
    a_in_sp2: bool
    d_in_sp2: bool
    b_equals_minus_c_star: bool
    b_anti_theta_h: bool
    fnorm_sq_shortcut: float
    fnorm_sq_direct: float
    det: complex
    det_route: str

    @property
    def ok(self):
        return self.a_in_sp2 and self.d_in_sp2 and self.b_equals_minus_c_star and self.b_anti_theta_h


def hat_sp4_block_validate(x):
    """Block structure of the hatted algebra plus its norm and determinant shortcuts."""
    x = as_matrix(x)
    if x.shape != (4, 4):
        raise DomainError("expected a 4x4 matrix")
    a, b, c, d = x[:2, :2], x[:2, 2:], x[2:, :2], x[2:, 2:]
    scale = max(1.0, math.sqrt(frobenius_norm_sq(x)))
    tol = 1e-10 * scale

    def in_sp2(m):
        return np.linalg.norm(m + m.conj().T) <= tol and abs(np.trace(m)) <= tol

    shortcut = 2 * (abs(x[0, 0]) ** 2 + abs(x[0, 1]) ** 2 + abs(x[2, 2]) ** 2 + abs(x[2, 3]) ** 2)
    shortcut += 4 * (abs(x[0, 2]) ** 2 + abs(x[0, 3]) ** 2)
    if np.linalg.norm(b) <= tol:
        dv, route = complex(np.linalg.det(a) * np.linalg.det(d)), "block-diagonal"
    else:
        try:
            dv, route = det_schur_2x2_blocks(x), "schur"
        except DegenerateError:
            dv, route = det(x), "lu"
    return HatBlockReport(
        in_sp2(a),
        in_sp2(d),
        bool(np.linalg.norm(b + c.conj().T) <= tol),
        bool(is_anti_theta_h(b)),
        float(shortcut),
        frobenius_norm_sq(x),
        dv,
        route,
    )


# su(4)

def resultant_condition(e2, e3, e4):
    """Discriminant of x^4 + E2 x^2 - E3 x + E4; zero iff there is a repeated root."""
    e3 = complex(e3)
    e3sq = e3 * e3
    r = (
        16 * e2**4 * e4
        - 4 * e2**3 * e3sq
        - 128 * e2**2 * e4**2
        + 144 * e2 * e3sq * e4
        - 27 * e3sq * e3sq
        + 256 * e4**3
    )
    return float(np.real(r))


def real_cubic_roots(p, q):
    """Real roots of t^3 + p t + q, ascending, polished by Newton steps."""
    if p == 0.0 and q == 0.0:
        return [0.0]
    disc = 4 * p**3 + 27 * q**2
    if disc <= 0 and p < 0:
        r = 2 * math.sqrt(-p / 3)
        arg = max(-1.0, min(1.0, 3 * q / (p * r)))
        phi = math.acos(arg)
        roots = [r * math.cos((phi - 2 * math.pi * k) / 3) for k in range(3)]
    else:
        s = math.sqrt(max(disc / 108.0, 0.0))
        roots = [float(np.cbrt(-q / 2 + s) + np.cbrt(-q / 2 - s))]
    out = []
    for t in roots:
        for _ in range(2):
            dp = 3 * t * t + p
            if dp == 0:
                break
            t -= (t**3 + p * t + q) / dp
        out.append(t)
    return sorted(out)


def real_quartic_roots(pc, qc, rc):
    """Real roots of t^4 + P t^2 + Q t + R (four real roots expected) by Ferrari's method."""
    if qc == 0.0:
        disc = max(pc * pc - 4 * rc, 0.0)
        us = [(-pc + math.sqrt(disc)) / 2, (-pc - math.sqrt(disc)) / 2]
        roots = []
        for u in us:
            s = math.sqrt(max(u, 0.0))
            roots += [s, -s]
        return sorted(roots)
    # resolvent 8m^3 + 8P m^2 + (2P^2 - 8R) m - Q^2 = 0, shifted to depressed form
    a2, a1, a0 = pc, (pc * pc / 4 - rc), -qc * qc / 8
    shift = a2 / 3
    dp = a1 - a2 * a2 / 3
    dq = 2 * a2**3 / 27 - a2 * a1 / 3 + a0
    m = max(real_cubic_roots(dp, dq)) - shift
    if m <= 0:
        raise DegenerateError("resolvent cubic has no positive root")
    w = math.sqrt(2 * m)
    roots = []
    for sgn in (1.0, -1.0):
        b = -sgn * w
        c = pc / 2 + m + sgn * qc / (2 * w)
        disc = max(b * b - 4 * c, 0.0)
        roots += [(-b + math.sqrt(disc)) / 2, (-b - math.sqrt(disc)) / 2]
    polished = []
    for t in roots:
        for _ in range(3):
            f = t**4 + pc * t * t + qc * t + rc
            df = 4 * t**3 + 2 * pc * t + qc
            if df == 0:
                break
            t -= f / df
        polished.append(t)
    return sorted(polished)


def _double_root_residual(a, e2, e3i, e4):
    """|p(ia)| + |p'(ia)| for p = x^4 + E2 x^2 - E3 x + E4 written in real form."""
    p = a**4 - e2 * a * a + e3i * a + e4
    dp = -4 * a**3 + 2 * e2 * a - e3i
    return abs(p) + abs(dp) * abs(a)


def recover_case5_a(e2, e3_imag, e4, fnorm_sq, x=None, *, tol=1e-8):
    """The real a with ia the double eigenvalue in case 5.

    First tries a^2 from 6 t^2 - ||X||^2 t - 2 E4 = 0 with the sign fixed by
    iE3 = 4a^3 - 2a E2; falls back to the real roots of 4 t^3 - 2 E2 t - iE3.
    """
    n = math.sqrt(max(fnorm_sq, 0.0))
    if n == 0:
        raise ClassificationError("zero matrix has no case-5 structure")
    ie3 = -e3_imag
    disc = fnorm_sq * fnorm_sq + 48 * e4
    cands = []
    if disc >= -tol * n**4:
        sq = math.sqrt(max(disc, 0.0))
        for t in ((fnorm_sq + sq) / 12, (fnorm_sq - sq) / 12):
            if t > 0:
                cands += [math.sqrt(t), -math.sqrt(t)]

    def consistent(a):
        return abs(4 * a**3 - 2 * a * e2 - ie3) <= tol * n**3 and (
            _double_root_residual(a, e2, e3_imag, e4) <= tol * n**4
        )

    good = [a for a in cands if consistent(a)]
    if not good:
        good = [a for a in real_cubic_roots(-e2 / 2, -ie3 / 4) if consistent(a)]
    if not good:
        raise ClassificationError("no candidate for a satisfies the E3 consistency test")
    best = min(good, key=lambda a: _double_root_residual(a, e2, e3_imag, e4))
    if x is not None:
        poly = _case5_poly(best, e2, e4)
        if not annihilates(poly, x):
            raise ClassificationError("recovered case-5 polynomial does not annihilate the input")
    return best


def _case5_poly(a, e2, e4):
    return Polynomial([1j * e4 / a, e2 - a * a, 1j * a, 1.0])


def validate_su4(x):
    x = as_matrix(x)
    if x.shape != (4, 4):
        raise DomainError("expected a 4x4 matrix")
    _check_anti_hermitian(x)
    if abs(np.trace(x)) > 1e-10 * max(1.0, math.sqrt(frobenius_norm_sq(x))):
        raise DomainError("trace is not zero")
    return x


def classify_su4(x):
    """Minimal polynomial of x in su(4), following the six-case decision tree."""
    x = validate_su4(x)
    fn2 = frobenius_norm_sq(x)
    if fn2 == 0.0:
        return Su4MinPolyReport("zero", Polynomial([0.0, 1.0]), 0.0, 0.0, 0.0, 0.0, [0j])
    _, e2c, e3c, e4c = principal_minor_sums(x)
    e2, e3i, e4 = e2c.real, e3c.imag, e4c.real
    n = math.sqrt(fn2)
    z3 = lambda v: abs(v) <= EPS * n**3
    z4 = lambda v: abs(v) <= EPS * fn2 * fn2
    positive = e2 > EPS * fn2

    def report(case, poly, roots, a=None):
        return Su4MinPolyReport(case, poly, e2, e3i, e4, fn2, [complex(r) for r in roots], a)

    trial = []
    if positive and z3(e3i) and z4(e4 - e2 * e2 / 4):
        lam = math.sqrt(e2 / 2)
        trial.append(report("case1", Polynomial([e2 / 2, 0, 1]), [1j * lam, -1j * lam]))
    if positive and z4(e4 + e2 * e2 / 12) and z3(abs(e3i) - 8 * (e2 / 6) ** 1.5):
        a = math.copysign(math.sqrt(e2 / 6), e3i)
        trial.append(report("case2", Polynomial([3 * a * a, 2j * a, 1]), [1j * a, -3j * a], a))
    if positive and z3(e3i) and z4(e4):
        c = math.sqrt(e2)
        trial.append(report("case3", Polynomial([0, e2, 0, 1]), [0, 1j * c, -1j * c]))
    if positive and z4(e4) and z3(abs(e3i) - 2 * (e2 / 3) ** 1.5):
        a = math.copysign(math.sqrt(e2 / 3), e3i)
        trial.append(report("case4", Polynomial([0, 2 * a * a, 1j * a, 1]), [0, 1j * a, -2j * a], a))
    if not z4(e4) and abs(resultant_condition(e2, e3c, e4)) <= EPS * fn2**6:
        try:
            a = recover_case5_a(e2, e3i, e4, fn2)
        except ClassificationError:
            a = None
        if a is not None:
            # b, c solve t^2 + 2a t + (3a^2 - E2) = 0
            disc = max(a * a - (3 * a * a - e2), 0.0)
            b, c = -a + math.sqrt(disc), -a - math.sqrt(disc)
            trial.append(report("case5", _case5_poly(a, e2, e4), [1j * a, 1j * b, 1j * c], a))
    for r in trial:
        if annihilates(r.poly, x):
            return r
    char = Polynomial([e4, -e3c, e2, 0, 1])
    roots = [1j * t for t in real_quartic_roots(-e2, e3i, e4)]
    return report("case6", char, roots)


def char_poly(x):
    """Characteristic polynomial det(tI - x) from principal-minor sums (monic, lowest first)."""
    e = principal_minor_sums(x)
    n = len(e)
    coeffs = [(-1) ** k * e[k - 1] for k in range(n, 0, -1)] + [1.0]
    return Polynomial(coeffs)
