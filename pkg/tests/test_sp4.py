import math

import numpy as np
import pytest

from conftest import random_sp4_group
from spinexp.core import DomainError
from spinexp.quat import theta_h
from spinexp.sp4 import (
    CayleyKlein,
    Sp4Params,
    case2_constraint,
    consistent_s3,
    decompose_sp4,
    reconstruct_sp4,
    s4_residual,
    sp4_residual,
    verify_s4_constraint,
)


def rand_ck(rng):
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    m = np.array([[q[0] + 1j * q[1], q[2] + 1j * q[3]], [-q[2] + 1j * q[3], q[0] - 1j * q[1]]])
    return CayleyKlein.from_matrix(m)


def targeted(case, rng):
    s1, s2 = rand_ck(rng), rand_ck(rng)
    a, b, c, lam = rng.uniform(-3, 3, 4)
    if case in (1, 5, 6):
        sig = {1: (0.8, 0.5), 5: (0.7, 0.0), 6: (1.0, 0.4)}[case]
        return Sp4Params(case, *sig, s1, s2, consistent_s3(s1, s2, lam), a=a, b=b, c=c, lam=lam)
    if case == 2:
        t = rng.uniform(0, math.pi / 2)
        r = np.array([[math.cos(t) * np.exp(1j * a), 1j * math.sin(t)], [1j * math.sin(t), math.cos(t) * np.exp(-1j * a)]])
        s2 = CayleyKlein.from_matrix(s1.matrix() @ r)
        return Sp4Params(2, 0.6, 0.6, s1, s2, a=b, b=c)
    if case == 3:
        return Sp4Params(3, 1.0, 1.0, s1, s2, a=a)
    return Sp4Params(4, 0.0, 0.0, s1, s2, b=b)


@pytest.mark.parametrize("case", [1, 2, 3, 4, 5, 6])
def test_targeted_cases_round_trip(case, rng):
    for _ in range(20):
        p = targeted(case, rng)
        x = reconstruct_sp4(p)
        assert sp4_residual(x) <= 1e-10
        q = decompose_sp4(x)
        assert q.case == case
        assert np.linalg.norm(reconstruct_sp4(q) - x) <= 1e-9
        if case in (1, 5, 6):
            assert verify_s4_constraint(q) <= 1e-10
            assert verify_s4_constraint(p) <= 1e-10


def test_trivial_inputs():
    assert decompose_sp4(np.eye(4)).case == 3
    assert decompose_sp4(theta_h(np.zeros((2, 2)), np.eye(2))).case == 4


def test_random_group_elements(rng):
    for _ in range(500):
        x = random_sp4_group(rng)
        p = decompose_sp4(x)
        assert p.case in range(1, 7)
        y = reconstruct_sp4(p)
        assert np.linalg.norm(y - x) <= 1e-9
        a, b = y[:2, :2], y[:2, 2:]
        assert np.allclose(a.conj().T @ a + b.T @ b.conj(), np.eye(2), atol=1e-10)
        ab = a.conj().T @ b
        assert np.allclose(ab, ab.T, atol=1e-12)
        assert 0 <= p.sigma2 <= p.sigma1 <= 1
        assert math.isclose(p.theta1**2 + p.sigma1**2, 1)


def test_case2_constraint_matches_symmetry(rng):
    for _ in range(100):
        s1, s2 = rand_ck(rng), rand_ck(rng)
        m = s1.matrix().conj().T @ s2.matrix()
        sym = abs(m[0, 1] - m[1, 0]) <= 1e-12
        assert sym == (abs(case2_constraint(s1, s2)) <= 1e-12)
        p = targeted(2, rng)
        assert abs(case2_constraint(p.s1, p.s2)) <= 1e-12


def test_case2_rejects_non_symmetric(rng):
    s1 = CayleyKlein(0.3, 0.1, 0.2)
    s2 = CayleyKlein(1.0, 0.5, 0.2)
    with pytest.raises(DomainError):
        reconstruct_sp4(Sp4Params(2, 0.5, 0.5, s1, s2))


def test_s4_negative_example():
    d = np.diag([2.0, 0.5])
    s4 = np.array([[0.8, 0.6], [-0.6, 0.8]])
    assert s4_residual(s4, d) > 0.1
    assert s4_residual(np.diag([1j, -1j]), d) == 0


def test_s4_constraint_not_applicable():
    with pytest.raises(DomainError):
        verify_s4_constraint(Sp4Params(2, 0.5, 0.5, CayleyKlein(0, 0, 0), CayleyKlein(0, 0, 0)))


def test_domain_errors():
    with pytest.raises(DomainError, match="unitary"):
        decompose_sp4(2 * np.eye(4))
    with pytest.raises(DomainError, match="J4"):
        decompose_sp4(np.diag([1, 1, 1, -1]))
    with pytest.raises(DomainError):
        CayleyKlein(2.0, 0, 0)
    with pytest.raises(DomainError):
        reconstruct_sp4(Sp4Params(1, 0.5, 0.8, CayleyKlein(0, 0, 0), CayleyKlein(0, 0, 0)))


def test_cayley_klein_round_trip(rng):
    for _ in range(50):
        ck = rand_ck(rng)
        m = ck.matrix()
        assert np.isclose(np.linalg.det(m), 1)
        assert np.allclose(CayleyKlein.from_matrix(m).matrix(), m)
