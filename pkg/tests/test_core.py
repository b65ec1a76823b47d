import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import seeds
from varbounds import errors
from varbounds.core import (
    Observable,
    Tolerance,
    anticommutator,
    commutator,
    expectation,
    std_dev,
    validate_observable,
    validate_state,
    variance,
)
from varbounds.operators import (
    example1_state,
    haar_random_pure,
    qubit_from_bloch,
    random_density,
    random_hermitian,
)


class TestValidation:
    def test_pauli_x_accepted(self):
        A = validate_observable(oracle.SX)
        assert isinstance(A, Observable) and A.dim == 2

    def test_raising_operator_rejected(self):
        with pytest.raises(errors.NotHermitian) as info:
            validate_observable([[0, 1], [0, 0]])
        assert info.value.asymmetry == pytest.approx(1.0)

    @pytest.mark.parametrize("d", [1, 2, 5])
    def test_identity_accepted(self, d):
        assert validate_observable(np.eye(d)).dim == d

    def test_non_finite(self):
        with pytest.raises(errors.NonFinite):
            validate_observable([[np.nan, 0], [0, 1]])

    def test_not_square(self):
        with pytest.raises(errors.NotSquare):
            validate_observable(np.zeros((2, 3)))

    def test_hermitian_tolerance_is_relative(self):
        # 1e-9 asymmetry on entries of size 1e3 sits inside 1e-10 * (1 + 1e3)
        m = np.array([[1e3, 1.0], [1.0 + 1e-9, 0]])
        validate_observable(m)
        with pytest.raises(errors.NotHermitian):
            validate_observable(np.array([[1.0, 1.0], [1.0 + 1e-8, 0]]))

    def test_observable_is_immutable(self):
        A = validate_observable(oracle.SZ)
        with pytest.raises(ValueError):
            A.matrix[0, 0] = 5

    def test_pure_state(self):
        s = validate_state([1, 0])
        assert s.is_pure and s.dim == 2

    def test_maximally_mixed(self):
        s = validate_state(np.eye(2) / 2)
        assert not s.is_pure

    def test_bad_trace(self):
        with pytest.raises(errors.NotUnitTrace):
            validate_state(np.diag([0.7, 0.5]))

    def test_unnormalized_vector(self):
        with pytest.raises(errors.NotNormalized):
            validate_state([1, 1])

    def test_negative_eigenvalue(self):
        with pytest.raises(errors.NotPositive):
            validate_state(np.diag([1.5, -0.5]))


class TestStatistics:
    def test_expectation_eigenstate(self):
        assert expectation(oracle.SZ, [1, 0]) == 1.0

    def test_expectation_bloch(self):
        rho = qubit_from_bloch((0.3, 0, 0))
        assert expectation(oracle.SX, rho) == pytest.approx(
            np.trace(oracle.bloch_rho(0.3, 0, 0) @ oracle.SX).real, abs=1e-15
        )
        assert expectation(oracle.SX, rho) == pytest.approx(0.3, abs=1e-15)

    def test_expectation_spin1_eigenstate(self):
        assert expectation(oracle.LZ, [0, 0, 1]) == -1.0

    def test_dimension_mismatch(self):
        with pytest.raises(errors.DimensionMismatch):
            expectation(oracle.SZ, [1, 0, 0])

    def test_variance_bloch_x(self):
        assert variance(oracle.SX, qubit_from_bloch((0.6, 0, 0))) == pytest.approx(0.64, abs=1e-12)

    def test_variance_eigenstate_is_zero(self):
        assert variance(oracle.SZ, [1, 0]) == 0.0

    def test_variance_lx_on_zero(self):
        # <Lx^2> = 1 and <Lx> = 0 on |0>
        assert variance(oracle.LX, [0, 1, 0]) == pytest.approx(1.0, abs=1e-12)

    def test_std_dev_examples(self):
        sx, sy, sz = (validate_observable(m) for m in (oracle.SX, oracle.SY, oracle.SZ))
        for theta in np.linspace(-3, 3, 13):
            assert std_dev(sx - sy, example1_state(theta)) == pytest.approx(np.sqrt(2), abs=1e-12)
        assert std_dev(sz, [1, 0]) == 0.0
        assert std_dev(sy + sz, example1_state(0.0)) == pytest.approx(np.sqrt(1.5), abs=1e-12)

    def test_commutators(self):
        assert np.allclose(commutator(oracle.SX, oracle.SY), 2j * oracle.SZ)
        assert np.allclose(commutator(oracle.SX, oracle.SX), 0)
        assert np.allclose(commutator(oracle.LX, oracle.LY), 1j * oracle.LZ)

    def test_anticommutators(self):
        assert np.allclose(anticommutator(oracle.SX, oracle.SY).matrix, 0)
        assert np.allclose(anticommutator(oracle.SX, oracle.SX).matrix, 2 * np.eye(2))
        expected = np.zeros((3, 3), dtype=complex)
        expected[0, 2], expected[2, 0] = -1j, 1j
        assert np.allclose(anticommutator(oracle.LX, oracle.LY).matrix, expected)

    def test_observable_arithmetic(self):
        A = validate_observable(oracle.SX)
        B = validate_observable(oracle.SY)
        assert np.array_equal((A + B).matrix, oracle.SX + oracle.SY)
        assert np.array_equal((A - B).matrix, oracle.SX - oracle.SY)
        assert np.array_equal((-A).matrix, -oracle.SX)
        assert np.array_equal((2 * A).matrix, 2 * oracle.SX)
        assert sum([A, B]) == A + B

    def test_tolerance(self):
        tol = Tolerance()
        assert tol.close(1.0, 1.0 + 1e-10)
        assert not tol.close(1.0, 1.0 + 1e-8)
        with pytest.raises(ValueError):
            Tolerance(abs_tol=-1)


@settings(max_examples=60, deadline=None)
@given(dim=st.integers(2, 6), seed=seeds, pure=st.booleans())
def test_variance_properties(dim, seed, pure):
    A = random_hermitian(dim, seed)
    s = haar_random_pure(dim, seed ^ 1) if pure else random_density(dim, seed ^ 1)
    v = variance(A, s)
    assert v >= 0
    second = expectation(Observable(A.matrix @ A.matrix), s)
    assert v == pytest.approx(second - expectation(A, s) ** 2, abs=1e-9)
    assert v == pytest.approx(oracle.var(A.matrix, s.data), abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(2, 6), seed=seeds)
def test_commutator_antisymmetry(dim, seed):
    A = random_hermitian(dim, seed)
    B = random_hermitian(dim, seed + 1 if seed < 2**64 - 1 else 0)
    assert np.array_equal(commutator(A, B), -commutator(B, A))
    assert np.allclose(anticommutator(A, B).matrix, anticommutator(B, A).matrix, atol=1e-14)


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(2, 6), seed=seeds)
def test_eigenvectors_have_zero_variance(dim, seed):
    A = random_hermitian(dim, seed)
    _, vecs = np.linalg.eigh(A.matrix)
    for k in range(dim):
        assert variance(A, validate_state(vecs[:, k])) <= 1e-9


@settings(max_examples=40, deadline=None)
@given(dim=st.integers(2, 6), seed=seeds)
def test_pure_and_projector_agree(dim, seed):
    A = random_hermitian(dim, seed)
    psi = haar_random_pure(dim, seed ^ 0xABC)
    rho = validate_state(psi.density_matrix())
    assert variance(A, rho) == pytest.approx(variance(A, psi), abs=1e-10)
