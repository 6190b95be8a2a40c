"""Quaternions, the real-matrix form of H (x) H, and the theta_C / theta_H embeddings."""

from dataclasses import dataclass, field

import numpy as np

from .core import ISY, SX, SZ, DomainError, frobenius_norm_sq, kron

UNITS = ("1", "i", "j", "k")


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        a1, b1, c1, d1 = self.w, self.x, self.y, self.z
        a2, b2, c2, d2 = other.w, other.x, other.y, other.z
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    __rmul__ = __mul__

    def __add__(self, other):
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self):
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm_sq(self):
        return self.w**2 + self.x**2 + self.y**2 + self.z**2

    def as_array(self):
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    @classmethod
    def unit(cls, name):
        v = [0.0] * 4
        v[UNITS.index(name)] = 1.0
        return cls(*v)


def _unit_product(a, b):
    """Product of two basis units as (sign, unit)."""
    q = Quaternion.unit(a) * Quaternion.unit(b)
    arr = q.as_array()
    idx = int(np.argmax(np.abs(arr)))
    return float(arr[idx]), UNITS[idx]


def sandwich_matrix(p, q):
    """4x4 real matrix of v -> p v conj(q) in the basis (1, i, j, k)."""
    qb = q.conjugate()
    cols = [(p * Quaternion.unit(u) * qb).as_array() for u in UNITS]
    return np.column_stack(cols)


_UNIT_MATRICES = {
    (a, b): sandwich_matrix(Quaternion.unit(a), Quaternion.unit(b)) for a in UNITS for b in UNITS
}


@dataclass(frozen=True)
class QuatTensor:
    """Formal linear combination of p (x) q with p, q basis units.

    ``terms`` maps (left, right) to a coefficient.  Coefficients may be complex
    so that elements like i(j (x) j) can be written directly.
    """

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        merged = {}
        for (l, r), c in dict(self.terms).items():
            if l not in UNITS or r not in UNITS:
                raise DomainError(f"unknown quaternion unit in ({l}, {r})")
            merged[(l, r)] = merged.get((l, r), 0) + c
        ordered = {
            (l, r): merged[(l, r)] for l in UNITS for r in UNITS if merged.get((l, r), 0) != 0
        }
        object.__setattr__(self, "terms", ordered)

    @classmethod
    def simple(cls, left, right, coeff=1.0):
        return cls({(left, right): coeff})

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return QuatTensor(t)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        return QuatTensor({k: s * c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, QuatTensor):
            return self.scale(other)
        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                sl, l = _unit_product(l1, l2)
                sr, r = _unit_product(r1, r2)
                out[(l, r)] = out.get((l, r), 0) + sl * sr * c1 * c2
        return QuatTensor(out)

    __rmul__ = scale


def quat_tensor_to_matrix(t):
    """Matrix of a QuatTensor under H (x) H -> M(4, R) (complex if coefficients are)."""
    out = np.zeros((4, 4), dtype=complex)
    for key, c in t.terms.items():
        out = out + c * _UNIT_MATRICES[key]
    return out


def quat_tensor_conjugate(t):
    """Conjugate p (x) q -> conj(p) (x) conj(q); its matrix is the transpose."""
    out = {}
    for (l, r), c in t.terms.items():
        sign = (-1 if l != "1" else 1) * (-1 if r != "1" else 1)
        out[(l, r)] = sign * c
    return QuatTensor(out)


# structure matrices

def J(n):
    """J_n = [[0, I], [-I, 0]] for even n."""
    if n % 2:
        raise DomainError("J needs an even size")
    h = n // 2
    out = np.zeros((n, n), dtype=complex)
    out[:h, h:] = np.eye(h)
    out[h:, :h] = -np.eye(h)
    return out


def J_tilde(n):
    """Block-diagonal I_{n/2} (x) J_2."""
    if n % 2:
        raise DomainError("J_tilde needs an even size")
    return kron(np.eye(n // 2), ISY)


def K(n):
    """K_n = [[0, I], [I, 0]] for even n."""
    if n % 2:
        raise DomainError("K needs an even size")
    h = n // 2
    out = np.zeros((n, n), dtype=complex)
    out[:h, h:] = np.eye(h)
    out[h:, :h] = np.eye(h)
    return out


J_HAT4 = quat_tensor_to_matrix(QuatTensor.simple("1", "i"))
J_BREVE4 = quat_tensor_to_matrix(QuatTensor.simple("j", "1"))


def conjugator_u(*, scaled=True):
    """Special orthogonal U with U^T J_hat4 U = J_4.

    U^T is the matrix of x -> x conj(q) with q = (1 + k)/sqrt 2.  With
    ``scaled=False`` the integer matrix sqrt(2) U is returned so that identities
    can be checked without rounding.
    """
    n = np.real(quat_tensor_to_matrix(QuatTensor({("1", "1"): 1, ("1", "k"): 1}))).T
    return n / np.sqrt(2) if scaled else n


# theta_C and theta_H

def theta_c(m):
    """Realification: a + ib -> a (x) I_2 + b (x) J_2."""
    m = np.asarray(m, dtype=complex)
    return np.kron(m.real, np.eye(2)) + np.kron(m.imag, ISY.real)


def theta_c_inverse(x):
    x = np.real(np.asarray(x))
    return x[::2, ::2] + 1j * x[::2, 1::2]


def _rel(x, r):
    return np.sqrt(frobenius_norm_sq(r)) <= 1e-10 * max(1.0, np.sqrt(frobenius_norm_sq(x)))


def is_theta_c(x):
    """True when x commutes with J_tilde (and is real)."""
    x = np.asarray(x, dtype=complex)
    if x.shape[0] % 2 or not _rel(x, x.imag):
        return False
    jt = J_tilde(x.shape[0])
    return _rel(x, x - jt.T @ x @ jt)


def is_anti_theta_c(x):
    x = np.asarray(x, dtype=complex)
    if x.shape[0] % 2 or not _rel(x, x.imag):
        return False
    jt = J_tilde(x.shape[0])
    return _rel(x, x + jt.T @ x @ jt)


def theta_h(z, w):
    """Complexification of Z + W j: [[Z, W], [-conj W, conj Z]]."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return np.block([[z, w], [-np.conj(w), np.conj(z)]])


def theta_h_from_quaternions(q):
    """theta_H of a square nested list of Quaternion entries."""
    z = np.array([[complex(e.w, e.x) for e in row] for row in q])
    w = np.array([[complex(e.y, e.z) for e in row] for row in q])
    return theta_h(z, w)


def is_theta_h(x):
    """True when conj(X) = J^-1 X J, i.e. X has the block form [[Z, W], [-conj W, conj Z]]."""
    x = np.asarray(x, dtype=complex)
    if x.shape[0] % 2:
        return False
    j = J(x.shape[0])
    return _rel(x, np.conj(x) - j.T @ x @ j)


def is_anti_theta_h(x):
    """True when conj(X) = -J^-1 X J, i.e. X = [[T, Z], [conj Z, -conj T]]."""
    x = np.asarray(x, dtype=complex)
    if x.shape[0] % 2:
        return False
    j = J(x.shape[0])
    return _rel(x, np.conj(x) + j.T @ x @ j)


# named Pauli-type helpers used by the Clifford module
REAL_PAULI = {"x": SX.real, "z": SZ.real, "J": ISY.real}
