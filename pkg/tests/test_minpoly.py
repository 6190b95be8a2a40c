import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cofactor_char_coeffs, random_anti_hermitian, random_sp4, random_sp4hat, random_su4, random_unitary
from spinexp.core import DomainError
from spinexp.minpoly import (
    annihilates,
    char_poly,
    classify_sp4,
    classify_su4,
    hat_sp4_block_validate,
    real_cubic_roots,
    real_quartic_roots,
    recover_case5_a,
    resultant_condition,
    sp4_quadratic_structure_check,
)
from spinexp.oracle import brute_minpoly, series_expm
from spinexp.quat import theta_h


def conj_su4(rng, diag):
    u = random_unitary(rng)
    return u @ np.diag(1j * np.asarray(diag, float)) @ u.conj().T


def test_su4_spec_examples():
    r = classify_su4(np.diag([1j, 1j, -1j, -1j]))
    assert r.case == "case1" and np.allclose(r.poly.coef, [1, 0, 1])
    r = classify_su4(np.diag([1j, 1j, 1j, -3j]))
    assert r.case == "case2" and np.allclose(r.poly.coef, [3, 2j, 1])
    r = classify_su4(np.diag([1j, 1j, 2j, -4j]))
    assert r.case == "case5" and math.isclose(r.a, 1.0)
    assert math.isclose(r.e4, -8.0)
    assert classify_su4(np.diag([1j, 2j, -1j, -2j])).case == "case6"
    assert classify_su4(np.zeros((4, 4))).case == "zero"


def test_su4_domain_errors():
    with pytest.raises(DomainError, match="anti-Hermitian"):
        classify_su4(np.eye(4))
    with pytest.raises(DomainError, match="trace"):
        classify_su4(1j * np.eye(4))


def test_sp4_spec_example():
    r = classify_sp4(theta_h(np.diag([1j, 2j]), np.zeros((2, 2))), "sp4")
    assert r.case == "quartic" and np.allclose(r.poly.coef, [4, 0, 5, 0, 1])


def test_sp4_domain_errors(rng):
    with pytest.raises(DomainError, match="J4"):
        classify_sp4(random_sp4hat(rng), "sp4")
    with pytest.raises(DomainError):
        classify_sp4(random_su4(rng))
    with pytest.raises(DomainError):
        classify_sp4(np.zeros((3, 3)))


def test_sp4_invariants(rng):
    for _ in range(200):
        y = random_sp4(rng)
        r = classify_sp4(y, "sp4")
        assert annihilates(r.poly, y)
        assert np.all(r.poly.coef.imag == 0)
        assert all(r.poly.coef[k] == 0 for k in range(len(r.poly.coef)) if (r.poly.degree() - k) % 2)
        assert r.det >= -1e-12 * r.fnorm_sq**2
        assert r.fnorm_sq**2 >= 16 * r.det - 1e-9 * r.fnorm_sq**2
        coeffs = cofactor_char_coeffs(y)
        assert np.max(np.abs(coeffs.imag)) <= 1e-10
        assert math.isclose(coeffs[2].real, r.fnorm_sq / 2, rel_tol=1e-9)


def test_sp4hat_annihilation(rng):
    for _ in range(500):
        y = random_sp4hat(rng)
        r = classify_sp4(y, "sp4hat")
        assert annihilates(r.poly, y)


def test_quadratic_structure_check(rng):
    a = np.diag([1j, -1j])
    assert sp4_quadratic_structure_check(a, np.zeros((2, 2)))
    assert not sp4_quadratic_structure_check(np.diag([1j, 2j]), np.zeros((2, 2)))
    for _ in range(50):
        z = random_anti_hermitian(rng, 2)
        w = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        w = w + w.T
        ok = sp4_quadratic_structure_check(z, w)
        assert ok == (classify_sp4(theta_h(z, w), "sp4").case == "quadratic")
    with pytest.raises(DomainError):
        sp4_quadratic_structure_check(np.eye(2), np.zeros((2, 2)))


def test_hat_block_shortcuts(rng):
    for _ in range(100):
        y = random_sp4hat(rng)
        rep = hat_sp4_block_validate(y)
        assert rep.ok
        assert math.isclose(rep.fnorm_sq_shortcut, rep.fnorm_sq_direct, rel_tol=1e-12)
        assert np.isclose(rep.det, np.linalg.det(y), rtol=1e-9, atol=1e-12)
    diag = hat_sp4_block_validate(np.diag([1j, -1j, 2j, -2j]))
    assert diag.det_route == "block-diagonal"


def test_resultant_zero_iff_repeated_root():
    assert abs(resultant_condition(11, 18j, -8)) < 1e-9
    e = np.poly(1j * np.array([1, 2, -1.5, -1.5]))
    assert abs(resultant_condition(e[2].real, -e[3], e[4].real)) < 1e-9
    assert abs(resultant_condition(5, 0, 4)) > 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3))
def test_real_quartic_roots(vals):
    a, b, c = vals
    roots = sorted([a, b, c, -(a + b + c)])
    if min(np.diff(roots)) < 1e-3:
        return
    p = np.poly(roots)
    got = real_quartic_roots(p[2], p[3], p[4])
    assert np.allclose(got, roots, atol=1e-7)


def test_real_cubic_roots():
    assert np.allclose(real_cubic_roots(-7, 6), [-3, 1, 2])
    assert np.allclose(real_cubic_roots(1, 0), [0])


def test_recover_case5_a(rng):
    for _ in range(50):
        a = rng.uniform(0.3, 2) * rng.choice([-1, 1])
        b = rng.uniform(-2, 2)
        c = -2 * a - b
        if min(abs(b - c), abs(a - b), abs(a - c), abs(b), abs(c)) < 0.1:
            continue
        x = conj_su4(rng, [a, a, b, c])
        r = classify_su4(x)
        assert r.case == "case5"
        got = recover_case5_a(r.e2, r.e3_imag, r.e4, r.fnorm_sq, x)
        assert math.isclose(got, a, rel_tol=1e-6)


def test_su4_agrees_with_brute(rng):
    for _ in range(500):
        x = random_su4(rng)
        r = classify_su4(x)
        assert r.degree == brute_minpoly(x).degree()
        assert annihilates(r.poly, x)


def test_char_poly():
    p = char_poly(np.diag([1j, 1j, -1j, -1j]))
    assert np.allclose(p.coef, [1, 0, 2, 0, 1])


def test_unitary_helper(rng):
    u = series_expm(random_anti_hermitian(rng, 4))
    assert np.allclose(u @ u.conj().T, np.eye(4))
