"""Parameterization of Sp(4) = {theta_H(A, B)} by a closed-form 2x2 SVD of A.

Cases by the singular values s1 >= s2 of A:
  1: 0 < s2 < s1 < 1     2: s1 = s2 in (0, 1)    3: s1 = s2 = 1 (B = 0)
  4: A = 0               5: s2 = 0 < s1 < 1      6: s1 = 1 > s2
Only reconstructed matrices are compared; parameter sets are not unique.
"""

import cmath
import math
from dataclasses import asdict, dataclass

import numpy as np

from .core import DomainError
from .quat import J, theta_h

TOL = 1e-8
TWO_PI = 2 * math.pi


class DecompositionError(RuntimeError):
    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class CayleyKlein:
    """SU(2) element [[c e^{i lam}, s e^{i mu}], [-s e^{-i mu}, c e^{-i lam}]]."""

    theta: float
    lam: float
    mu: float

    def __post_init__(self):
        if not -1e-12 <= self.theta <= math.pi / 2 + 1e-12:
            raise DomainError("theta must lie in [0, pi/2]")

    def matrix(self):
        c, s = math.cos(self.theta), math.sin(self.theta)
        return np.array(
            [
                [c * cmath.exp(1j * self.lam), s * cmath.exp(1j * self.mu)],
                [-s * cmath.exp(-1j * self.mu), c * cmath.exp(-1j * self.lam)],
            ]
        )

    @classmethod
    def from_matrix(cls, m, tol=1e-9):
        m = np.asarray(m, dtype=complex)
        if np.linalg.norm(m @ m.conj().T - np.eye(2)) > tol or abs(np.linalg.det(m) - 1) > tol:
            raise DomainError("not in SU(2)")
        al, be = m[0, 0], m[0, 1]
        theta = math.atan2(abs(be), abs(al))
        lam = cmath.phase(al) % TWO_PI if abs(al) > 0 else 0.0
        mu = cmath.phase(be) % TWO_PI if abs(be) > 0 else 0.0
        return cls(theta, lam, mu)


@dataclass(frozen=True)
class Sp4Params:
    case: int
    sigma1: float
    sigma2: float
    s1: CayleyKlein
    s2: CayleyKlein
    s3: CayleyKlein = None
    a: float = 0.0
    b: float = 0.0
    c: float = 0.0
    lam: float = 0.0

    @property
    def theta1(self):
        return math.sqrt(max(0.0, 1 - self.sigma1**2))

    @property
    def theta2(self):
        return math.sqrt(max(0.0, 1 - self.sigma2**2))

    def as_dict(self):
        d = asdict(self)
        d["theta1"], d["theta2"] = self.theta1, self.theta2
        return d


def _validate(p):
    if p.case not in range(1, 7):
        raise DomainError("case must be 1..6")
    if not (0 <= p.sigma2 <= p.sigma1 + 1e-12 and p.sigma1 <= 1 + 1e-12):
        raise DomainError("need 0 <= sigma2 <= sigma1 <= 1")
    if p.case in (1, 5, 6) and p.s3 is None:
        raise DomainError("cases 1, 5 and 6 need s3")


def _blocks(p):
    s1, s2 = p.s1.matrix(), p.s2.matrix()
    if p.case in (1, 5, 6):
        s3 = p.s3.matrix()
        a = cmath.exp(1j * (p.a - p.b)) * s1 @ np.diag([p.sigma1, p.sigma2]) @ s2.conj().T
        b = cmath.exp(-1j * p.c) * s3.conj() @ s2.conj() @ np.diag([p.theta1, p.theta2]) @ s2.T
    elif p.case == 2:
        a = p.sigma1 * cmath.exp(1j * p.a) * s1
        b = p.theta1 * cmath.exp(1j * p.b) * s2
    elif p.case == 3:
        a, b = cmath.exp(1j * p.a) * s1, np.zeros((2, 2), dtype=complex)
    else:
        a, b = np.zeros((2, 2), dtype=complex), cmath.exp(1j * p.b) * s2
    return a, b


def reconstruct_sp4(p):
    """theta_H(A, B) for the case's displayed form of A and B."""
    _validate(p)
    a, b = _blocks(p)
    x = theta_h(a, b)
    if p.case == 2:
        ab = a.conj().T @ b
        if np.linalg.norm(ab - ab.T) > 1e-10:
            raise DomainError("case 2 needs A* B symmetric (S1* S2 symmetric)")
    return x


def sp4_residual(x):
    """max of ||x x* - I|| and ||x^T J x - J||."""
    x = np.asarray(x, dtype=complex)
    j = J(4)
    return max(np.linalg.norm(x @ x.conj().T - np.eye(4)), np.linalg.norm(x.T @ j @ x - j))


def _check_sp4(x, tol=1e-9):
    x = np.asarray(x, dtype=complex)
    if x.shape != (4, 4):
        raise DomainError("expected a 4x4 matrix")
    if np.linalg.norm(x @ x.conj().T - np.eye(4)) > tol:
        raise DomainError("not unitary")
    j = J(4)
    if np.linalg.norm(x.T @ j @ x - j) > tol:
        raise DomainError("violates x^T J4 x = J4")
    return x


def _eigvec(h, ev):
    """Unit eigenvector of a 2x2 Hermitian h for eigenvalue ev."""
    c1 = np.array([h[0, 1], ev - h[0, 0]])
    c2 = np.array([ev - h[1, 1], h[1, 0]])
    v = c1 if np.linalg.norm(c1) >= np.linalg.norm(c2) else c2
    n = np.linalg.norm(v)
    return np.array([1.0 + 0j, 0.0]) if n < 1e-300 else v / n


def _complement(v):
    return np.array([-np.conj(v[1]), np.conj(v[0])])


def svd2(a):
    """Closed-form SVD a = U diag(s1, s2) V* with V in SU(2) and U unitary."""
    a = np.asarray(a, dtype=complex)
    h = a.conj().T @ a
    tr = h[0, 0].real + h[1, 1].real
    gap = math.sqrt(((h[0, 0].real - h[1, 1].real) / 2) ** 2 + abs(h[0, 1]) ** 2)
    ev1 = tr / 2 + gap
    if gap <= 1e-15 * max(1.0, tr):
        v1 = np.array([1.0 + 0j, 0.0])
    else:
        v1 = _eigvec(h, ev1)
    v = np.column_stack([v1, _complement(v1)])
    sig = [np.linalg.norm(a @ v[:, 0]), np.linalg.norm(a @ v[:, 1])]
    if sig[0] < TOL:
        u = np.eye(2, dtype=complex)
    else:
        u1 = a @ v[:, 0] / sig[0]
        u2 = a @ v[:, 1] / sig[1] if sig[1] >= TOL else _complement(u1)
        u = np.column_stack([u1, u2])
    return u, np.array(sig), v


def classify_sigmas(s1, s2, tol=TOL):
    if s1 <= tol:
        return 4
    if s2 >= 1 - tol:
        return 3
    if abs(s1 - s2) <= tol:
        return 2
    if s1 >= 1 - tol:
        return 6
    if s2 <= tol:
        return 5
    return 1


def _su2_with_phase(m):
    """m = e^{i phi} S with S in SU(2); m must be unitary."""
    phi = cmath.phase(np.linalg.det(m)) / 2
    return phi, cmath.exp(-1j * phi) * m


def decompose_sp4(x, *, tol=1e-9):
    """Case and parameters of x in Sp(4); reconstructs x within ``tol``."""
    x = _check_sp4(x)
    a, b = x[:2, :2], x[:2, 2:]
    u, sig, v = svd2(a)
    s1v, s2v = float(min(sig[0], 1.0)), float(min(sig[1], 1.0))
    case = classify_sigmas(s1v, s2v)
    zero = CayleyKlein(0.0, 0.0, 0.0)
    if case == 4:
        phb, s2m = _su2_with_phase(b)
        p = Sp4Params(4, 0.0, 0.0, zero, CayleyKlein.from_matrix(s2m), b=phb)
    elif case == 3:
        pha, s1m = _su2_with_phase(a)
        p = Sp4Params(3, 1.0, 1.0, CayleyKlein.from_matrix(s1m), zero, a=pha)
    elif case == 2:
        sg = (s1v + s2v) / 2
        th = math.sqrt(1 - sg * sg)
        pha, s1m = _su2_with_phase(a / sg)
        phb, s2m = _su2_with_phase(b / th)
        p = Sp4Params(2, sg, sg, CayleyKlein.from_matrix(s1m), CayleyKlein.from_matrix(s2m), a=pha, b=phb)
    else:
        pha, s1m = _su2_with_phase(u)
        s2m = v
        g = s1m.conj().T @ b @ s2m.conj()
        if case == 6:
            c, lam = 0.0, -cmath.phase(g[1, 1])
        else:
            c = -(cmath.phase(g[0, 0]) + cmath.phase(g[1, 1])) / 2
            lam = (cmath.phase(g[0, 0]) - cmath.phase(g[1, 1])) / 2
        dl = np.diag([cmath.exp(1j * lam), cmath.exp(-1j * lam)])
        s3m = s1m.conj() @ dl.conj() @ s2m.conj().T
        if case == 6:
            s1v = 1.0
        if case == 5:
            s2v = 0.0
        p = Sp4Params(
            case, s1v, s2v, CayleyKlein.from_matrix(s1m), CayleyKlein.from_matrix(s2m),
            CayleyKlein.from_matrix(s3m), a=pha, b=0.0, c=c, lam=lam,
        )
    resid = np.linalg.norm(reconstruct_sp4(p) - x)
    if resid > tol:
        raise DecompositionError(f"case {case} reconstruction failed", resid)
    return p


def consistent_s3(s1, s2, lam):
    """The S3 that makes S4 = diag(e^{i lam}, e^{-i lam}) in cases 1, 5 and 6."""
    dl = np.diag([cmath.exp(-1j * lam), cmath.exp(1j * lam)])
    return CayleyKlein.from_matrix(s1.matrix().conj() @ dl @ s2.matrix().conj().T)


def case2_constraint(s1, s2):
    """c1 s2 cos(mu2 - lam1) - s1 c2 cos(lam2 - mu1); zero iff S1* S2 is symmetric."""
    c1, sn1 = math.cos(s1.theta), math.sin(s1.theta)
    c2, sn2 = math.cos(s2.theta), math.sin(s2.theta)
    return c1 * sn2 * math.cos(s2.mu - s1.lam) - sn1 * c2 * math.cos(s2.lam - s1.mu)


def s4_residual(s4, d):
    """||D S4^T - S4 D||_F."""
    s4 = np.asarray(s4, dtype=complex)
    d = np.asarray(d)
    return float(np.linalg.norm(d @ s4.T - s4 @ d))


def verify_s4_constraint(p):
    """Residual of D S4^T = S4 D for cases 1, 5 and 6."""
    if p.case not in (1, 5, 6):
        raise DomainError("the S4 constraint applies to cases 1, 5 and 6 only")
    s1, s2, s3 = p.s1.matrix(), p.s2.matrix(), p.s3.matrix()
    if p.case == 6:
        if p.sigma2 <= TOL:
            # D vanishes; fall back to the defining relation for B
            a, b = _blocks(p)
            ab = a.conj().T @ b
            return float(np.linalg.norm(ab - ab.T))
        s4 = s1.conj().T @ s3.conj() @ s2.conj()
        d = np.diag([0.0, p.theta2 / p.sigma2])
    else:
        s4 = s2.conj().T @ s3.conj().T @ s1.conj()
        d = np.diag([p.sigma1 / p.theta1, p.sigma2 / p.theta2])
    return s4_residual(s4, d)
