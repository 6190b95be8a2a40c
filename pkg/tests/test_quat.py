import numpy as np
import pytest

from conftest import random_sp4hat
from spinexp.core import DomainError
from spinexp.quat import (
    J,
    J_BREVE4,
    J_HAT4,
    J_tilde,
    K,
    Quaternion,
    QuatTensor,
    UNITS,
    conjugator_u,
    is_anti_theta_c,
    is_anti_theta_h,
    is_theta_c,
    is_theta_h,
    quat_tensor_conjugate,
    quat_tensor_to_matrix,
    sandwich_matrix,
    theta_c,
    theta_c_inverse,
    theta_h,
    theta_h_from_quaternions,
)


def cn(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def rand_tensor(rng):
    return QuatTensor({(a, b): rng.normal() for a in UNITS for b in UNITS})


def rand_unit_quat(rng):
    q = rng.normal(size=4)
    return Quaternion(*(q / np.linalg.norm(q)))


def test_quaternion_units():
    i, j, k = (Quaternion.unit(u) for u in "ijk")
    assert i * j == k and j * k == i and k * i == j
    assert i * i == Quaternion(-1, 0, 0, 0)


def test_structure_matrices():
    assert np.array_equal(J(2), np.array([[0, 1], [-1, 0]]))
    assert np.array_equal(K(4) @ K(4), np.eye(4))
    assert np.array_equal(J_tilde(4) @ J_tilde(4), -np.eye(4))
    for m in (J_HAT4, J_BREVE4, J(4), J_tilde(4)):
        assert np.array_equal(m.T, -m) and np.array_equal(m @ m.T, np.eye(4))
    assert np.array_equal(J(4), quat_tensor_to_matrix(QuatTensor.simple("1", "j")))
    with pytest.raises(DomainError):
        J(3)


def test_theta_c_properties(rng):
    for _ in range(100):
        m, n = cn(rng, 3), cn(rng, 3)
        a, b = rng.normal(size=2)
        assert np.allclose(theta_c(a * m + b * n), a * theta_c(m) + b * theta_c(n))
        assert np.allclose(theta_c(m @ n), theta_c(m) @ theta_c(n))
        assert np.allclose(theta_c(m.conj().T), theta_c(m).T)
        assert np.allclose(theta_c_inverse(theta_c(m)), m)
        assert is_theta_c(theta_c(m))
    assert np.array_equal(theta_c(np.eye(3)), np.eye(6))


def test_theta_c_of_i_is_j_tilde():
    assert np.array_equal(theta_c(1j * np.eye(4)), J_tilde(8))


def test_real_matrix_splits_into_theta_c_parts(rng):
    for _ in range(100):
        x = rng.normal(size=(6, 6))
        jt = J_tilde(6)
        even = (x + jt.T @ x @ jt) / 2
        odd = (x - jt.T @ x @ jt) / 2
        assert is_theta_c(even) and is_anti_theta_c(odd)
        assert np.allclose(even + odd, x)
        assert not is_theta_c(x)


def test_theta_h_properties(rng):
    for _ in range(100):
        z1, w1, z2, w2 = (cn(rng, 2) for _ in range(4))
        x, y = theta_h(z1, w1), theta_h(z2, w2)
        assert is_theta_h(x)
        prod = x @ y
        assert np.allclose(prod, theta_h(prod[:2, :2], prod[:2, 2:]))
        assert is_theta_h(x.conj().T)
        assert is_anti_theta_h(1j * x)
        assert not is_theta_h(cn(rng, 4))


def test_theta_h_from_quaternions():
    q = [[Quaternion(1, 2, 3, 4), Quaternion(0, 0, 1, 0)], [Quaternion(0, 1, 0, 0), Quaternion(5, 0, 0, 0)]]
    x = theta_h_from_quaternions(q)
    assert x[0, 0] == 1 + 2j and x[0, 2] == 3 + 4j and x[0, 3] == 1
    assert is_theta_h(x)


def test_quat_tensor_homomorphism(rng):
    for _ in range(100):
        s, t = rand_tensor(rng), rand_tensor(rng)
        assert np.allclose(quat_tensor_to_matrix(s * t), quat_tensor_to_matrix(s) @ quat_tensor_to_matrix(t))


def test_transposition_law(rng):
    for _ in range(100):
        t = rand_tensor(rng)
        assert np.allclose(quat_tensor_to_matrix(quat_tensor_conjugate(t)), quat_tensor_to_matrix(t).T)


def test_normalization_merges_and_orders():
    t = QuatTensor({("k", "1"): 1, ("1", "i"): 2}) + QuatTensor({("k", "1"): -1, ("1", "1"): 3})
    assert list(t.terms) == [("1", "1"), ("1", "i")]
    assert QuatTensor({("i", "j"): 0}).terms == {}
    with pytest.raises(DomainError):
        QuatTensor({("x", "1"): 1})


def test_unit_sandwich_is_special_orthogonal(rng):
    for _ in range(100):
        m = sandwich_matrix(rand_unit_quat(rng), rand_unit_quat(rng))
        assert np.allclose(m.T @ m, np.eye(4)) and np.isclose(np.linalg.det(m), 1)


def test_conjugator_u_exact():
    n = conjugator_u(scaled=False)
    assert np.array_equal(n.T @ np.real(J_HAT4) @ n, 2 * np.real(J(4)))
    assert np.array_equal(n.T @ n, 2 * np.eye(4))
    u = conjugator_u()
    assert np.isclose(np.linalg.det(u), 1)


def test_conjugator_maps_hatted_algebra_to_sp4(rng):
    u = conjugator_u()
    j4 = J(4)
    for _ in range(100):
        y = u.T @ random_sp4hat(rng) @ u
        assert np.allclose(y.T @ j4 + j4 @ y, 0, atol=1e-12)
