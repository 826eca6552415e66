import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_kron, exact_eigenvalues
from partsep.errors import NotHermitian
from partsep.linalg import dagger, hermitian_eigenvalues, is_hermitian, jacobi_eigh, kron
from partsep.reduction import permutation_matrix
from partsep.states import singlet_projector


def random_complex(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(rng, n):
    g = random_complex(rng, n)
    return g + dagger(g)


@st.composite
def hermitian_matrices(draw, max_dim=8):
    n = draw(st.integers(1, max_dim))
    seed = draw(st.integers(0, 2**32 - 1))
    scale = draw(st.sampled_from([1e-3, 1.0, 1e3]))
    return scale * random_hermitian(np.random.default_rng(seed), n)


# -- kron / dagger --------------------------------------------------------------

def test_kron_identity():
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))


def test_kron_projectors():
    np.testing.assert_array_equal(kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))


def test_kron_singlet_with_identity():
    m = kron(singlet_projector(), np.eye(2))
    assert m.shape == (8, 8)
    assert np.trace(m) == pytest.approx(2.0, abs=1e-15)


def test_kron_matches_index_formula():
    rng = np.random.default_rng(1)
    a, b = random_complex(rng, 2), random_complex(rng, 4)
    np.testing.assert_allclose(kron(a, b), brute_kron(a, b), rtol=1e-15, atol=0)
    ints = rng.integers(-5, 6, (2, 2)) + 1j * rng.integers(-5, 6, (2, 2))
    np.testing.assert_array_equal(kron(ints, b.round()), brute_kron(ints, b.round()))


def test_kron_associative_and_trace_multiplicative():
    rng = np.random.default_rng(2)
    for _ in range(20):
        # small Gaussian integers multiply exactly, so associativity is bitwise
        a, b, c = (rng.integers(-9, 10, (2, 2)) + 1j * rng.integers(-9, 10, (2, 2)) for _ in range(3))
        np.testing.assert_array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))
        a, b, c = (random_complex(rng, 2) for _ in range(3))
        np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), rtol=1e-15, atol=1e-15)
        a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
        assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) <= 1e-12


def test_dagger():
    np.testing.assert_array_equal(dagger(np.eye(4)), np.eye(4))
    a = random_complex(np.random.default_rng(3), 5)
    np.testing.assert_array_equal(dagger(dagger(a)), a)
    assert dagger(a)[1, 3] == np.conj(a[3, 1])


def test_permutation_matrix_is_unitary():
    s = permutation_matrix([2, 1, 3], 3)
    np.testing.assert_array_equal(s @ dagger(s), np.eye(8))
    np.testing.assert_array_equal(dagger(s), np.linalg.inv(s))


# -- is_hermitian ---------------------------------------------------------------

def test_is_hermitian():
    assert is_hermitian(np.eye(4), 1e-12)
    m = np.zeros((2, 2), dtype=complex)
    m[0, 1] = m[1, 0] = 1j
    assert not is_hermitian(m, 1e-12)


def test_is_hermitian_tolerance():
    m = np.eye(2, dtype=complex)
    m[0, 1] = 1e-8
    assert not is_hermitian(m, 1e-9)
    assert is_hermitian(m, 1e-7)
    with pytest.raises(ValueError):
        is_hermitian(m, -1.0)


# -- eigensolver ----------------------------------------------------------------

def test_diagonal_eigenvalues_sorted():
    np.testing.assert_array_equal(hermitian_eigenvalues(np.diag([4.0, 1.0, 3.0, 2.0])), [1, 2, 3, 4])


def test_bell_partial_transpose_spectrum():
    pt = np.array([[0.5, 0, 0, 0], [0, 0, 0.5, 0], [0, 0.5, 0, 0], [0, 0, 0, 0.5]])
    expected = exact_eigenvalues([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    expected = [e / 2 for e in expected]
    assert expected == [-0.5, 0.5, 0.5, 0.5]
    np.testing.assert_allclose(hermitian_eigenvalues(pt), expected, atol=1e-15)


@pytest.mark.parametrize("x", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_werner_partial_transpose_spectrum(x):
    q, h = (1 - x) / 4, x / 2
    pt = np.diag([q, q + h, q + h, q]).astype(complex)
    pt[0, 3] = pt[3, 0] = -h
    w = hermitian_eigenvalues(pt)
    np.testing.assert_allclose(w, sorted([(1 - 3 * x) / 4] + [(1 + x) / 4] * 3), atol=1e-15)


def test_not_hermitian_raises():
    with pytest.raises(NotHermitian):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))


def test_zero_matrix():
    np.testing.assert_array_equal(hermitian_eigenvalues(np.zeros((3, 3))), [0, 0, 0])


def test_degenerate_and_complex_phases():
    rng = np.random.default_rng(4)
    q, _ = np.linalg.qr(random_complex(rng, 6))
    a = q @ np.diag([1.0, 1.0, 1.0, -2.0, -2.0, 5.0]) @ dagger(q)
    np.testing.assert_allclose(hermitian_eigenvalues(a), [-2, -2, 1, 1, 1, 5], atol=1e-12)


@settings(max_examples=60, deadline=None)
@given(hermitian_matrices())
def test_eigen_invariants(a):
    w, v = jacobi_eigh(a, tol=1e-6 * max(1.0, np.abs(a).max()))
    norm = np.linalg.norm(a)
    assert np.all(np.diff(w) >= 0)
    assert abs(w.sum() - np.trace(a).real) <= 1e-10 * max(1.0, norm)
    assert abs((w ** 2).sum() - np.trace(a @ a).real) <= 1e-9 * max(1.0, norm ** 2)
    assert np.linalg.norm(a @ v - v * w) <= 1e-9 * max(norm, 1e-300)
    np.testing.assert_allclose(dagger(v) @ v, np.eye(len(w)), atol=1e-12)


def test_matches_lapack():
    rng = np.random.default_rng(5)
    for n in (2, 4, 8, 16, 32):
        a = random_hermitian(rng, n)
        np.testing.assert_allclose(hermitian_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-12 * n)


def test_real_diagonal_exact():
    d = np.array([0.3, -1.7, 2.2, 0.3, 1e-9])
    np.testing.assert_array_equal(hermitian_eigenvalues(np.diag(d)), np.sort(d))
