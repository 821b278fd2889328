#!/usr/bin/env python3
"""
Operator algebra and matrix exponential tests
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import InputError
from core.linalg import (
    Axis,
    anticommutator,
    hermitian_eigensystem,
    identity,
    is_unitary,
    make_alpha,
    make_beta1,
    make_dirac_beta,
    make_pauli,
    matrix_exponential,
    max_residual,
    vector_norm_squared,
)

AXES = list(Axis)
LEVI_CIVITA = {(0, 1, 2): 1, (1, 2, 0): 1, (2, 0, 1): 1, (1, 0, 2): -1, (0, 2, 1): -1, (2, 1, 0): -1}

bounded = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


def random_hermitian(entries, n):
    re = np.array(entries[: n * n]).reshape(n, n)
    im = np.array(entries[n * n:]).reshape(n, n)
    A = re + 1j * im
    return 0.5 * (A + A.conj().T)


def test_pauli_matrices_match_printed_form():
    np.testing.assert_array_equal(make_pauli("x"), [[0, 1], [1, 0]])
    np.testing.assert_array_equal(make_pauli("y"), [[0, -1j], [1j, 0]])
    np.testing.assert_array_equal(make_pauli("z"), [[1, 0], [0, -1]])


def test_pauli_product_table():
    for i, a in enumerate(AXES):
        for j, b in enumerate(AXES):
            expected = identity(2) if i == j else np.zeros((2, 2), dtype=complex)
            for k, c in enumerate(AXES):
                expected = expected + 1j * LEVI_CIVITA.get((i, j, k), 0) * make_pauli(c)
            assert max_residual(make_pauli(a) @ make_pauli(b), expected) < 1e-14


def test_unknown_axis_rejected():
    with pytest.raises(InputError):
        make_pauli("w")


def test_alpha_x_is_antidiagonal():
    expected = np.fliplr(np.eye(4))
    np.testing.assert_array_equal(make_alpha("x"), expected)


def test_alpha_clifford_algebra():
    for i, a in enumerate(AXES):
        for j, b in enumerate(AXES):
            expected = 2 * identity(4) if i == j else np.zeros((4, 4))
            assert max_residual(anticommutator(make_alpha(a), make_alpha(b)), expected) < 1e-14


def test_beta1_is_singular_and_hermitian():
    beta1 = make_beta1()
    np.testing.assert_array_equal(beta1, np.diag([1, 0, -1, 0]))
    np.testing.assert_array_equal(beta1, beta1.conj().T)
    np.testing.assert_array_equal(beta1 @ beta1, np.diag([1, 0, 1, 0]))
    assert np.linalg.det(beta1) == 0


def test_dirac_beta_is_involutive_and_flips_alpha():
    beta = make_dirac_beta()
    np.testing.assert_array_equal(beta, np.diag([1, 1, -1, -1]))
    np.testing.assert_array_equal(beta @ beta, identity(4))
    for axis in AXES:
        assert max_residual(beta @ make_alpha(axis) @ beta, -make_alpha(axis)) < 1e-14


def test_exponential_of_zero_is_identity():
    np.testing.assert_allclose(matrix_exponential(np.zeros((2, 2))), identity(2), atol=1e-15)
    np.testing.assert_allclose(matrix_exponential(np.zeros((4, 4))), identity(4), atol=1e-15)


def test_exponential_of_rotated_pauli():
    theta = 0.7
    result = matrix_exponential(1j * theta * make_pauli("x"))
    analytic = np.cos(theta) * identity(2) + 1j * np.sin(theta) * make_pauli("x")
    np.testing.assert_allclose(result, analytic, atol=1e-14)

    series = sum(np.linalg.matrix_power(1j * theta * make_pauli("x"), n) / math.factorial(n) for n in range(30))
    np.testing.assert_allclose(analytic, series, atol=1e-14)


def test_exponential_of_non_normal_matrix():
    M = np.array([[0.0, 1.0], [0.0, 0.0]])
    np.testing.assert_allclose(matrix_exponential(M), [[1.0, 1.0], [0.0, 1.0]], atol=1e-14)
    np.testing.assert_allclose(matrix_exponential(M) @ matrix_exponential(-M), identity(2), atol=1e-12)


def test_exponential_rejects_bad_input():
    with pytest.raises(InputError):
        matrix_exponential(np.array([[np.nan, 0], [0, 0]]))
    with pytest.raises(InputError):
        matrix_exponential(np.zeros((3, 3)))


@settings(max_examples=50, deadline=None)
@given(st.lists(bounded, min_size=32, max_size=32), st.lists(bounded, min_size=8, max_size=8))
def test_exponential_of_anti_hermitian_is_unitary(entries, vector):
    H = random_hermitian(entries, 4)
    U = matrix_exponential(-1j * H)
    assert is_unitary(U)
    np.testing.assert_allclose(U @ matrix_exponential(1j * H), identity(4), atol=1e-12)

    v = np.array(vector[:4]) + 1j * np.array(vector[4:])
    assert abs(np.linalg.norm(U @ v) - np.linalg.norm(v)) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.lists(bounded, min_size=8, max_size=8))
def test_hermitian_eigensystem_reconstructs(entries):
    H = random_hermitian(entries, 2)
    values, vectors = hermitian_eigensystem(H)
    assert np.all(np.isreal(values))
    assert is_unitary(vectors, tol=1e-10)
    np.testing.assert_allclose(vectors @ np.diag(values) @ vectors.conj().T, H, atol=1e-10)


def test_eigensystem_rejects_non_hermitian():
    with pytest.raises(InputError):
        hermitian_eigensystem(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_vector_norm_squared_is_real_non_negative():
    assert vector_norm_squared([1j, 2.0, -1 + 1j]) == pytest.approx(7.0)
