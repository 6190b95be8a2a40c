"""Bases of 1-vectors built by the iterative constructions IC1, IC2 and IC3.

Every basis is a list of anticommuting matrices with entries in {0, +-1, +-i}.
Products of such matrices are exact in complex128, so the structural checks in
``verify_basis`` compare with zero tolerance.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .core import I2, ISY, SX, SY, SZ, DomainError, MAX_DIM, adjoint, kron
from .quat import J, J_BREVE4, J_HAT4, J_tilde, K


class NotAOneVector(ValueError):
    """Raised when a matrix is not a real combination of the basis vectors."""


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q > 8:
            raise DomainError(f"bad signature ({self.p}, {self.q})")


@dataclass(frozen=True)
class OneVectorBasis:
    signature: Signature
    vectors: tuple
    name: str = ""

    @property
    def dim(self):
        return self.vectors[0].shape[0] if self.vectors else 1

    @property
    def positives(self):
        return self.vectors[: self.signature.p]

    @property
    def negatives(self):
        return self.vectors[self.signature.p :]

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]


def make_basis(pos, neg, name=""):
    vecs = tuple(np.asarray(v, dtype=complex) for v in list(pos) + list(neg))
    return OneVectorBasis(Signature(len(pos), len(neg)), vecs, name)


@dataclass(frozen=True)
class InvolutionSpec:
    """An (anti-)automorphism X -> M^-1 op(X) M.

    kind is one of ``transpose-by-M``, ``transpose-conjugate-by-M``,
    ``hermitian-adjoint``, ``conjugate-by-M`` or ``lifted-rev`` / ``lifted-cc``.
    A missing ``m`` means the identity.  Lifted kinds carry the inner pair.
    """

    kind: str
    m: np.ndarray = None
    inner: tuple = field(default=None, repr=False)

    def __call__(self, x):
        x = np.asarray(x, dtype=complex)
        if self.kind == "hermitian-adjoint":
            return adjoint(x)
        if self.kind in ("lifted-rev", "lifted-cc"):
            return _apply_lifted(self, x)
        ops = {
            "transpose-by-M": lambda a: a.T,
            "transpose-conjugate-by-M": adjoint,
            "conjugate-by-M": np.conj,
        }
        if self.kind not in ops:
            raise DomainError(f"unknown involution kind {self.kind!r}")
        y = ops[self.kind](x)
        if self.m is None:
            return y
        # every structure matrix used here is unitary, so M^-1 = M^*
        return adjoint(self.m) @ y @ self.m


def transpose_by(m=None):
    return InvolutionSpec("transpose-by-M", None if m is None else np.asarray(m, dtype=complex))


def transpose_conjugate_by(m=None):
    return InvolutionSpec("transpose-conjugate-by-M", None if m is None else np.asarray(m, dtype=complex))


HERMITIAN = InvolutionSpec("hermitian-adjoint")


def _blocks(x):
    h = x.shape[0] // 2
    return x[:h, :h], x[:h, h:], x[h:, :h], x[h:, h:]


def _apply_lifted(spec, x):
    rev, cc = spec.inner
    a, b, c, d = _blocks(x)
    if spec.kind == "lifted-cc":
        return np.block([[rev(d), -rev(b)], [-rev(c), rev(a)]])
    return np.block([[cc(d), cc(b)], [cc(c), cc(a)]])


def lift_involutions(rev, cc, l):
    """Reversion and conjugation on the IC1 algebra of 2l x 2l matrices.

    For X = [[A, B], [C, D]] the conjugation is [[D^rev, -B^rev], [-C^rev, A^rev]]
    and the reversion is [[D^cc, B^cc], [C^cc, A^cc]].
    """
    if 2 * l > MAX_DIM:
        raise DomainError("lifted dimension too large")
    pair = (rev, cc)
    return InvolutionSpec("lifted-rev", None, pair), InvolutionSpec("lifted-cc", None, pair)


def block_transpose(x):
    a, b, c, d = _blocks(np.asarray(x))
    return np.block([[a, c], [b, d]])


def lifted_via_block_transpose(rev, cc, x):
    """Second route to the lifted pair, through J_2l / K_2l and the block transpose."""
    x = np.asarray(x, dtype=complex)
    n = x.shape[0]
    a, b, c, d = _blocks(x)
    jm, km = J(n), K(n)
    cc_x = jm.T @ block_transpose(np.block([[rev(a), rev(b)], [rev(c), rev(d)]])) @ jm
    rev_x = km.T @ block_transpose(np.block([[cc(a), cc(b)], [cc(c), cc(d)]])) @ km
    return rev_x, cc_x


def grade(rev, cc):
    return lambda x: rev(cc(x))


# iterative constructions

def ic1(b):
    """Cl(p, q) -> Cl(p+1, q+1) as 2x2 block matrices over Cl(p, q).

    Output order: diag(e_k, -e_k) ..., [[0,1],[1,0]], then diag(f_l, -f_l) ..., [[0,1],[-1,0]].
    """
    n = b.dim
    if 2 * n > MAX_DIM:
        raise DomainError("IC1 would exceed the dimension cap")
    eye = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    diag = lambda v: np.block([[v, zero], [zero, -v]])
    pos = [diag(e) for e in b.positives] + [np.block([[zero, eye], [eye, zero]])]
    neg = [diag(f) for f in b.negatives] + [np.block([[zero, eye], [-eye, zero]])]
    return make_basis(pos, neg)


def ic2(b, *, side="right"):
    """Cl(p, q) -> Cl(p-4, q+4).

    With g = e1 e2 e3 e4 the first four vectors become e_i g (``side="right"``)
    or g e_i (``side="left"``); the two choices differ by a sign on each.
    """
    p = b.signature.p
    if p < 4:
        raise DomainError("IC2 needs at least four positive vectors")
    g = b[0] @ b[1] @ b[2] @ b[3]
    if side == "right":
        head = [b[i] @ g for i in range(4)]
    elif side == "left":
        head = [g @ b[i] for i in range(4)]
    else:
        raise ValueError("side must be 'left' or 'right'")
    rest = list(b.positives[4:])
    return make_basis(rest, head + list(b.negatives))


def ic3(b, pivot=0):
    """Cl(p, q) -> Cl(q+1, p-1) using e_pivot in the distinguished role.

    Positives: e_pivot, f_1 e_pivot, ..., f_q e_pivot.
    Negatives: e_k e_pivot for the remaining positives k, in order.
    """
    p = b.signature.p
    if p < 1:
        raise DomainError("IC3 needs a positive vector")
    if not 0 <= pivot < p:
        raise DomainError(f"pivot {pivot} does not index a +1-square vector")
    e = b[pivot]
    pos = [e] + [f @ e for f in b.negatives]
    neg = [b[k] @ e for k in range(p) if k != pivot]
    return make_basis(pos, neg)


def reorder(b, order, name=""):
    """Permute vectors within each signature block; ``order`` indexes the full list."""
    p = b.signature.p
    order = list(order)
    if sorted(order[:p]) != list(range(p)) or sorted(order[p:]) != list(range(p, len(b))):
        raise DomainError("reordering must keep the signature blocks")
    return OneVectorBasis(b.signature, tuple(b[i] for i in order), name or b.name)


def with_signs(b, signs, name=""):
    """Flip chosen basis vectors (the harmless sign normalization)."""
    if len(signs) != len(b):
        raise DomainError("one sign per vector")
    return OneVectorBasis(b.signature, tuple(s * v for s, v in zip(signs, b.vectors)), name or b.name)


def renamed(b, name):
    return OneVectorBasis(b.signature, b.vectors, name)


# named bases

def cl00():
    return OneVectorBasis(Signature(0, 0), (), "Cl(0,0)")


def pauli_basis():
    return make_basis([SX, SY, SZ], [], "pauli")


@lru_cache(maxsize=None)
def _named(name):
    if name == "pauli":
        return pauli_basis(), HERMITIAN, transpose_by(ISY)
    if name == "cl41":
        b = renamed(ic1(pauli_basis()), "cl41")
        rev, cc = lift_involutions(HERMITIAN, transpose_by(ISY), 2)
        return b, rev, cc
    if name == "F":
        b = renamed(ic2(ic1(pauli_basis()), side="left"), "F")
        return b, transpose_by(J_HAT4), HERMITIAN
    if name == "Y":
        c33 = ic1(ic1(ic1(cl00())))
        b = renamed(ic2(ic3(c33, 0), side="right"), "Y")
        return b, transpose_by(J_tilde(8)), transpose_by()
    if name in ("g", "f_hat"):
        b, rev = _signed_cl05_basis(name)
        return b, rev, HERMITIAN
    if name == "cl16":
        f = _named("F")[0]
        p = np.block([[np.zeros((4, 4)), J_HAT4], [-J_HAT4, np.zeros((4, 4))]])
        return renamed(ic1(f), "cl16"), transpose_conjugate_by(K(8)), transpose_by(p)
    if name == "cl17":
        y = _named("Y")[0]
        jt = J_tilde(8)
        q = np.block([[np.zeros((8, 8)), jt], [-jt, np.zeros((8, 8))]])
        return renamed(ic1(y), "cl17"), transpose_by(K(16)), transpose_by(q)
    raise DomainError(f"unknown basis {name!r}")


def printed_cl17_q():
    """[[0, J~8], [J~8, 0]]: conjugation by this matrix fixes K_16 instead of negating it."""
    jt = J_tilde(8)
    return np.block([[np.zeros((8, 8)), jt], [jt, np.zeros((8, 8))]])


def cl23_basis():
    """Cl(2,3) from {i} by IC1 twice, with the Cl(1,2) negatives ordered (i sigma_y, i sigma_z)."""
    cl01 = make_basis([], [np.array([[1j]])])
    cl12 = reorder(ic1(cl01), [0, 2, 1])
    return ic1(cl12)


def _signed_cl05_basis(name):
    cl23 = cl23_basis()
    if name == "g":
        f = ic2(ic3(cl23, 0))
        return with_signs(f, (-1, 1, 1, -1, -1), "g"), transpose_by(J_tilde(4))
    f = ic2(ic3(cl23, 1))
    return renamed(f, "f_hat"), transpose_by(J_BREVE4)


def named_basis(name):
    """Return ``(basis, reversion, clifford_conjugation)`` for a named basis.

    Names: F, Y, g, f_hat, pauli, cl41, cl16, cl17.
    """
    return _named(name)


def alternate_cl05_basis():
    """The Cl(0,5) basis obtained by conjugating with U; reversion is transpose-by-J_4."""
    vecs = [kron(I2, 1j * SZ), kron(SX, ISY), kron(I2, 1j * SX), kron(ISY, SY), kron(SZ, ISY)]
    return make_basis([], vecs, "alt"), transpose_by(J(4)), HERMITIAN


# verification

@dataclass
class BasisReport:
    name: str
    checks: list = field(default_factory=list)

    def add(self, label, ok):
        self.checks.append((label, bool(ok)))

    @property
    def ok(self):
        return all(ok for _, ok in self.checks)


def verify_basis(b, rev=None, cc=None):
    """Exact checks: squares, anticommutators, rev fixes and cc negates every vector."""
    rep = BasisReport(b.name or "basis")
    eye = np.eye(b.dim, dtype=complex)
    p = b.signature.p
    for i, v in enumerate(b.vectors):
        eta = 1 if i < p else -1
        rep.add(f"v{i + 1}^2 = {'+' if eta > 0 else '-'}I", np.array_equal(v @ v, eta * eye))
    for i, j in combinations(range(len(b)), 2):
        rep.add(f"v{i + 1} v{j + 1} + v{j + 1} v{i + 1} = 0", not np.any(b[i] @ b[j] + b[j] @ b[i]))
    if rev is not None:
        for i, v in enumerate(b.vectors):
            rep.add(f"rev(v{i + 1}) = v{i + 1}", np.array_equal(rev(v), v))
    if cc is not None:
        for i, v in enumerate(b.vectors):
            rep.add(f"cc(v{i + 1}) = -v{i + 1}", np.array_equal(cc(v), -v))
    return rep


def _gram(b):
    mats = np.array(b.vectors)
    return mats, np.array([np.real(np.vdot(v, v)) for v in b.vectors])


def expand_in_basis(x, b, *, rtol=1e-10):
    """Real coefficients c with x = sum c_i v_i, or raise NotAOneVector."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (b.dim, b.dim):
        raise DomainError(f"shape {x.shape} does not match basis dimension {b.dim}")
    mats, norms = _gram(b)
    c = np.real(np.einsum("kij,ij->k", np.conj(mats), x)) / norms
    resid = np.linalg.norm(x - np.einsum("k,kij->ij", c, mats))
    if resid > rtol * max(1.0, np.linalg.norm(x)):
        raise NotAOneVector(f"residual {resid:.3e} exceeds tolerance")
    return c


def one_vector_from_complex_triple(z0, z1, z2):
    """The 4x4 matrix X(z0, z1, z2); for purely imaginary z2 = -id it is the g-basis vector.

    With z0 = c + ia, z1 = e + ib and z2 = -id the result is
    a g1 + b g2 + c g3 + d g4 + e g5.
    """
    z0, z1, z2 = complex(z0), complex(z1), complex(z2)
    c = np.conj
    return np.array(
        [
            [c(z2), 0, z0, c(z1)],
            [0, c(z2), z1, -c(z0)],
            [-c(z0), -c(z1), z2, 0],
            [-z1, z0, 0, z2],
        ],
        dtype=complex,
    )


def is_even_vector(x):
    """Even part of Cl(0,6) in the Y realization: X = J_tilde^T X J_tilde."""
    x = np.asarray(x, dtype=complex)
    jt = J_tilde(8)
    return np.linalg.norm(x - jt.T @ x @ jt) <= 1e-10 * max(1.0, np.linalg.norm(x))


@dataclass
class Spin6Report:
    orthogonal: bool
    even: bool
    preserves: bool

    @property
    def ok(self):
        return self.orthogonal and self.even and self.preserves


def spin6_membership(z):
    """Group-level test: Z Z^T = I, Z even, and Z Y_i Z^T a 1-vector for every Y_i."""
    z = np.asarray(z, dtype=complex)
    y = named_basis("Y")[0]
    orth = bool(np.linalg.norm(z @ z.T - np.eye(8)) <= 1e-10 and np.linalg.norm(z.imag) <= 1e-10)
    preserves = True
    for v in y.vectors:
        try:
            expand_in_basis(z @ v @ z.T, y)
        except NotAOneVector:
            preserves = False
    return Spin6Report(orth, is_even_vector(z), preserves)


def spin6_algebra_membership(v):
    """Lie-algebra test: V antisymmetric, V even, and V Y_i - Y_i V a 1-vector for every Y_i."""
    v = np.asarray(v, dtype=complex)
    y = named_basis("Y")[0]
    anti = bool(np.linalg.norm(v + v.T) <= 1e-10 * max(1.0, np.linalg.norm(v)))
    preserves = True
    for w in y.vectors:
        try:
            expand_in_basis(v @ w - w @ v, y)
        except NotAOneVector:
            preserves = False
    return Spin6Report(anti, is_even_vector(v), preserves)


__all__ = [
    "HERMITIAN",
    "InvolutionSpec",
    "NotAOneVector",
    "OneVectorBasis",
    "Signature",
    "alternate_cl05_basis",
    "block_transpose",
    "expand_in_basis",
    "grade",
    "ic1",
    "ic2",
    "ic3",
    "is_even_vector",
    "lift_involutions",
    "lifted_via_block_transpose",
    "named_basis",
    "one_vector_from_complex_triple",
    "spin6_algebra_membership",
    "spin6_membership",
    "verify_basis",
]
