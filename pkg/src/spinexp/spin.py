"""Lie-algebra isomorphisms onto so(5) and so(6), covering actions, and the
end-to-end exponentials of real antisymmetric 5x5 and 6x6 matrices.

Both isomorphisms are computed from the commutator action on 1-vectors, never
transcribed.  The printed tables are kept only for comparison.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .clifford import NotAOneVector, expand_in_basis, named_basis
from .core import I2, SX, SY, SZ, ISY, DomainError, kron
from .expm import exp_spin_element
from .quat import QuatTensor, quat_tensor_to_matrix, theta_c


class ConsistencyError(RuntimeError):
    """A commutator failed to expand as a 1-vector while building a table."""


class NotInSpinGroup(ValueError):
    """The matrix does not map 1-vectors to 1-vectors."""


@dataclass(frozen=True)
class IsoRow:
    label: str
    element: np.ndarray
    image: np.ndarray
    pair: tuple  # 1-indexed (a, b) with image[a, b] = +2

    @property
    def sign(self):
        a, b = self.pair
        return self.image[a - 1, b - 1]


@dataclass(frozen=True)
class IsoTable:
    n: int
    rows: tuple

    def __len__(self):
        return len(self.rows)

    def images(self):
        return [r.image for r in self.rows]


def pair_matrix(n, a, b, s=2.0):
    """s (e_a e_b^T - e_b e_a^T) with 1-indexed a, b."""
    out = np.zeros((n, n))
    out[a - 1, b - 1] = s
    out[b - 1, a - 1] = -s
    return out


# Lie-algebra bases

def _m(l, r):
    return quat_tensor_to_matrix(QuatTensor.simple(l, r))


def sp4hat_basis():
    """Ten anti-Hermitian 4x4 matrices spanning the hatted sp(4), as (label, matrix)."""
    spec = [
        ("i M(j,j)", 1j, "j", "j"),
        ("M(i,1)", 1, "i", "1"),
        ("M(k,1)", 1, "k", "1"),
        ("i M(j,k)", 1j, "j", "k"),
        ("i M(k,j)", 1j, "k", "j"),
        ("i M(i,j)", 1j, "i", "j"),
        ("M(1,i)", 1, "1", "i"),
        ("M(j,1)", 1, "j", "1"),
        ("i M(k,k)", 1j, "k", "k"),
        ("i M(i,k)", 1j, "i", "k"),
    ]
    return [(lab, c * _m(l, r)) for lab, c, l, r in spec]


_PAULI_NAMES = {"I": I2, "x": SX, "y": SY, "z": SZ}
SU4_LABELS = (
    "ix.I", "iy.I", "iz.I", "I.ix", "I.iy", "I.iz",
    "iz.z", "iz.x", "iz.y", "ix.x", "ix.y", "ix.z", "iy.x", "iy.y", "iy.z",
)


def su4_element(label):
    """Matrix for a label like 'iy.z' meaning i sigma_y (x) sigma_z."""
    left, right = label.split(".")
    scale = 1j
    factors = []
    for part in (left, right):
        factors.append(_PAULI_NAMES[part.lstrip("i")])
    return scale * kron(*factors)


def su4_basis():
    return [(lab, su4_element(lab)) for lab in SU4_LABELS]


# table construction

def _image(a, basis):
    n = len(basis)
    cols = []
    for v in basis.vectors:
        try:
            cols.append(expand_in_basis(a @ v - v @ a, basis))
        except NotAOneVector as exc:
            raise ConsistencyError(f"commutator is not a 1-vector: {exc}") from exc
    img = np.column_stack(cols)
    rounded = np.rint(img)
    if np.max(np.abs(img - rounded)) > 1e-12:
        raise ConsistencyError("image entries are not integers")
    return rounded.reshape(n, n)


def _single_pair(img):
    nz = np.argwhere(img > 0)
    if len(nz) != 1 or not np.array_equal(img, -img.T) or img[tuple(nz[0])] != 2:
        raise ConsistencyError("image is not a single +-2 antisymmetric pair")
    a, b = nz[0]
    return int(a) + 1, int(b) + 1


def _build(n, elements, basis, lift):
    rows = []
    for label, el in elements:
        img = _image(lift(el), basis)
        rows.append(IsoRow(label, el, img, _single_pair(img)))
    return IsoTable(n, tuple(rows))


@lru_cache(maxsize=None)
def build_psi5_table():
    """Psi_5 on the hatted sp(4): column j of Psi_5(Y) expands Y F_j - F_j Y in the F basis."""
    return _build(5, sp4hat_basis(), named_basis("F")[0], lambda y: y)


@lru_cache(maxsize=None)
def build_psi6_table():
    """Psi_6 on su(4): column j expands theta_C(W) Y_j - Y_j theta_C(W) in the Y basis."""
    return _build(6, su4_basis(), named_basis("Y")[0], theta_c)


def psi(table, element):
    """Apply the isomorphism to an arbitrary algebra element via the commutator action."""
    basis = named_basis("F" if table.n == 5 else "Y")[0]
    lift = (lambda y: y) if table.n == 5 else theta_c
    cols = [expand_in_basis(lift(element) @ v - v @ lift(element), basis) for v in basis.vectors]
    return np.column_stack(cols)


def psi5(y):
    return psi(build_psi5_table(), np.asarray(y, dtype=complex))


def psi6(w):
    return psi(build_psi6_table(), np.asarray(w, dtype=complex))


def _check_so(x, n):
    x = np.asarray(x)
    if x.shape != (n, n):
        raise DomainError(f"expected a {n}x{n} matrix")
    if np.iscomplexobj(x):
        if np.any(x.imag != 0):
            raise DomainError("not real")
        x = x.real
    x = x.astype(float)
    if np.linalg.norm(x + x.T) > 1e-12 * max(1.0, np.linalg.norm(x)):
        raise DomainError("not antisymmetric")
    return x


def _inverse(table, x):
    x = _check_so(x, table.n)
    out = np.zeros((4, 4), dtype=complex)
    for row in table.rows:
        a, b = row.pair
        out = out + (x[a - 1, b - 1] / 2.0) * row.element
    return out


def psi5_inverse(x):
    """The hatted sp(4) element Y with Psi_5(Y) = x."""
    return _inverse(build_psi5_table(), x)


def psi6_inverse(x):
    """The su(4) element W with Psi_6(W) = x."""
    return _inverse(build_psi6_table(), x)


# covering actions

def covering_action(z, basis, conj="adjoint", *, tol=1e-8):
    """Rotation whose j-th column expands z V_j z^conj in ``basis``."""
    z = np.asarray(z, dtype=complex)
    if conj == "adjoint":
        zc = z.conj().T
    elif conj == "transpose":
        zc = z.T
    else:
        raise DomainError(f"conj must be 'adjoint' or 'transpose', not {conj!r}")
    if z.shape != (basis.dim, basis.dim):
        raise DomainError("size does not match the basis")
    if np.linalg.norm(z @ zc - np.eye(basis.dim)) > tol * max(1.0, np.linalg.norm(z)):
        raise NotInSpinGroup("z z^conj is not the identity")
    cols = []
    for j, v in enumerate(basis.vectors):
        w = z @ v @ zc
        try:
            cols.append(expand_in_basis(w, basis, rtol=tol))
        except NotAOneVector as exc:
            raise NotInSpinGroup(f"image of basis vector {j + 1} is not a 1-vector") from exc
    return np.column_stack(cols)


def phi5(g):
    return covering_action(g, named_basis("F")[0], "adjoint")


def phi6(z):
    return covering_action(z, named_basis("Y")[0], "transpose")


def exp_so5(x):
    """exp of a real antisymmetric 5x5 matrix through the hatted sp(4)."""
    y = psi5_inverse(x)
    g = exp_spin_element(y, "sp4hat").value
    return phi5(g)


def exp_so6(x):
    """exp of a real antisymmetric 6x6 matrix through su(4)."""
    w = psi6_inverse(x)
    z = theta_c(exp_spin_element(w, "su4").value)
    return phi6(z)


# printed tables, kept for comparison only

PRINTED_PSI5 = ((1, 2), (3, 1), (1, 4), (1, 5), (2, 3), (2, 4), (5, 2), (4, 3), (5, 3), (5, 4))
PRINTED_PSI6 = dict(zip(SU4_LABELS, (
    (1, 5), (4, 1), (4, 5), (3, 2), (2, 6), (6, 3), (2, 1), (6, 1), (3, 1),
    (4, 6), (4, 3), (4, 2), (5, 6), (3, 5), (2, 5),
)))
# realified images as (sign, three Kronecker factor names)
PRINTED_REALIFIED = dict(zip(SU4_LABELS, (
    (1, "xIJ"), (1, "JII"), (1, "zIJ"), (1, "IxJ"), (1, "IJI"), (1, "IxJ"), (1, "zzJ"),
    (1, "zzJ"), (1, "zJI"), (1, "xxJ"), (1, "xJI"), (1, "xzJ"), (1, "JxI"), (1, "JJJ"),
    (1, "JzI"),
)))
_REAL_FACTORS = {"I": I2.real, "x": SX.real, "z": SZ.real, "J": ISY.real}


def printed_realified_matrix(label):
    sign, names = PRINTED_REALIFIED[label]
    return sign * np.real(kron(*(_REAL_FACTORS[c] for c in names)))


@dataclass(frozen=True)
class RowComparison:
    label: str
    printed: tuple
    computed: tuple

    @property
    def match(self):
        return self.printed == self.computed


def compare_psi5_with_printed():
    return [
        RowComparison(r.label, p, r.pair) for r, p in zip(build_psi5_table().rows, PRINTED_PSI5)
    ]


def compare_psi6_with_printed():
    return [RowComparison(r.label, PRINTED_PSI6[r.label], r.pair) for r in build_psi6_table().rows]


def realified_table_discrepancies():
    """Labels whose printed realified image differs from theta_C of the element."""
    out = []
    for lab in SU4_LABELS:
        if not np.array_equal(printed_realified_matrix(lab), theta_c(su4_element(lab))):
            out.append(lab)
    return out


# a worked two-plane rotation with a closed form

def two_plane_generator(beta, delta):
    """beta (e4 e6^T - e6 e4^T) + delta (e6 e1^T - e1 e6^T)."""
    return pair_matrix(6, 4, 6, beta) + pair_matrix(6, 6, 1, delta)


def two_plane_exp(beta, delta):
    """Closed-form exponential of ``two_plane_generator``; acts on span(e1, e4, e6)."""
    n = beta * beta + delta * delta
    out = np.eye(6)
    if n == 0:
        return out
    lam = math.sqrt(n) / 2
    c, s = math.cos(lam), math.sin(lam)
    out[0, 0] = (beta**2 + delta**2 * (c * c - s * s)) / n
    out[0, 3] = out[3, 0] = 2 * s * s * beta * delta / n
    out[0, 5] = -c * s * delta / lam
    out[3, 3] = (delta**2 + beta**2 * (c * c - s * s)) / n
    out[3, 5] = c * s * beta / lam
    out[5, 0] = c * s * delta / lam
    out[5, 3] = -c * s * beta / lam
    out[5, 5] = c * c - s * s
    return out
