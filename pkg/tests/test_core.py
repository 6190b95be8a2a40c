import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from conftest import cofactor_char_coeffs, cofactor_det
from spinexp.core import (
    ISY,
    SX,
    SY,
    SZ,
    DegenerateError,
    DomainError,
    as_matrix,
    det,
    det_schur_2x2_blocks,
    kron,
    lagrange_exp,
    polyval_matrix,
    principal_minor_sums,
)
from spinexp.oracle import series_expm

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)


def cmat(n):
    return arrays(np.float64, (2, n, n), elements=finite).map(lambda a: a[0] + 1j * a[1])


def test_pauli_relations():
    eye = np.eye(2)
    for p in (SX, SY, SZ):
        assert np.array_equal(p @ p, eye)
    assert np.array_equal(SX @ SY, 1j * SZ)
    assert np.array_equal(ISY, np.array([[0, 1], [-1, 0]]))


def test_as_matrix_rejects_non_square():
    with pytest.raises(DomainError):
        as_matrix(np.zeros((2, 3)))


def test_kron_dimension_cap():
    with pytest.raises(DomainError):
        kron(np.eye(4), np.eye(8))
    assert kron(np.eye(4), np.eye(4)).shape == (16, 16)


@settings(max_examples=100, deadline=None)
@given(cmat(2), cmat(2), cmat(2), cmat(2))
def test_kron_mixed_product(a, b, c, d):
    assert np.allclose(kron(a, b) @ kron(c, d), kron(a @ c, b @ d), atol=1e-10)


@settings(max_examples=100, deadline=None)
@given(cmat(2), cmat(3))
def test_kron_trace(a, b):
    assert np.isclose(np.trace(kron(a, b)), np.trace(a) * np.trace(b))


def test_principal_minor_sums_match_cofactor_char_poly(rng):
    for _ in range(200):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        e = principal_minor_sums(x)
        coeffs = [e[3], -e[2], e[1], -e[0], 1.0]
        assert np.allclose(coeffs, cofactor_char_coeffs(x), atol=1e-8)


def test_principal_minor_sums_diagonal():
    e = principal_minor_sums(np.diag([1j, 1j, -1j, -1j]))
    assert np.allclose(e, [0, 2, 0, 1])


def test_det_schur_agrees_with_lu(rng):
    for _ in range(100):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        assert np.isclose(det_schur_2x2_blocks(x), det(x), rtol=1e-9)
        assert np.isclose(det(x), cofactor_det(x), rtol=1e-9)


def test_det_schur_singular_block():
    x = np.eye(4)
    with pytest.raises(DegenerateError):
        det_schur_2x2_blocks(x)


def test_polyval_matrix():
    x = np.diag([1.0, 2.0])
    assert np.allclose(polyval_matrix([2, -3, 1], x), 0)


def test_lagrange_exp_diagonal():
    x = np.diag([1j, 2j, -3j])
    assert np.allclose(lagrange_exp(x, [1j, 2j, -3j]), series_expm(x), atol=1e-13)
    with pytest.raises(DegenerateError):
        lagrange_exp(x, [1j, 1j])
