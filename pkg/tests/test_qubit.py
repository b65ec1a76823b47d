import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings

import oracle
from conftest import bloch_vectors
from varbounds import errors
from varbounds.bounds import bound_chen, bound_new, bound_pb2, sum_of_variances
from varbounds.operators import qubit_from_bloch
from varbounds.qubit import (
    alpha,
    beta,
    diff_new_chen,
    diff_new_pb2,
    lb_chen_qubit,
    lb_new_qubit,
    lb_pb2_qubit,
    qubit_bounds,
    sv_qubit,
)

SQ2, SQ3, SQ6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)
C3 = (1 / SQ3,) * 3
E1 = (SQ2 / 2, SQ2 / 2, 0.0)
X = (1.0, 0.0, 0.0)
ORIGIN = (0.0, 0.0, 0.0)


@pytest.mark.parametrize(
    "fn,r,expected",
    [
        (alpha, ORIGIN, 3 * SQ2),
        (alpha, X, 2 + SQ2),
        (alpha, C3, 3 * SQ2),
        (beta, ORIGIN, 3 * SQ2),
        (beta, (SQ2 / 2, -SQ2 / 2, 0), SQ2 + SQ6),
        (beta, X, 2 + SQ2),
        (lb_new_qubit, ORIGIN, 3.0),
        (lb_new_qubit, C3, 2.0),
        (lb_new_qubit, E1, (11 + 4 * SQ3) / 9),
        (lb_pb2_qubit, ORIGIN, 1.5),
        (lb_pb2_qubit, C3, 1.5),
        (lb_pb2_qubit, E1, 1.25),
        (lb_chen_qubit, ORIGIN, 1.5),
        (lb_chen_qubit, E1, 1.5),
        (lb_chen_qubit, X, 2.5 - SQ2),
        (diff_new_pb2, C3, 0.5),
        (diff_new_pb2, tuple(-c for c in C3), 0.5),
        (diff_new_pb2, ORIGIN, 1.5),
        (diff_new_pb2, X, (6 + 4 * SQ2) / 9 + 1 / 6 - 0.5),
        (diff_new_chen, (math.sqrt(0.5), -math.sqrt(0.5), 0), SQ3 - 4 / 3),
        (diff_new_chen, ORIGIN, 1.5),
        (diff_new_chen, X, (6 + 4 * SQ2) / 9 + 1.5 + SQ2 + 2 / 3 + 1 - 5),
    ],
)
def test_examples(fn, r, expected):
    assert fn(r) == pytest.approx(expected, abs=1e-12)


def test_example_decimals():
    assert diff_new_pb2(X) == pytest.approx(0.961873, abs=1e-6)
    assert diff_new_chen(X) == pytest.approx(0.876087, abs=1e-6)
    assert lb_chen_qubit(X) == pytest.approx(1.085786, abs=1e-6)
    assert SQ3 - 4 / 3 == pytest.approx(0.398717, abs=1e-6)


def test_norm_exceeded():
    for fn in (alpha, beta, lb_new_qubit, diff_new_chen):
        with pytest.raises(errors.BlochNormExceeded):
            fn((1.0, 0.1, 0.0))


def test_vectorized():
    pts = np.array([ORIGIN, X, C3])
    assert np.allclose(lb_new_qubit(pts), [lb_new_qubit(p) for p in pts])


def test_bound_set():
    b = qubit_bounds(E1)
    assert b.sv == pytest.approx(2) and b.lb_pb2 == pytest.approx(1.25)
    assert b.alpha == pytest.approx(SQ2 + SQ6) and b.lb_new <= b.sv


@settings(max_examples=300, deadline=None)
@given(r=bloch_vectors())
def test_matrix_path_agreement(r, paulis):
    rho = qubit_from_bloch(r)
    assert lb_new_qubit(r) == pytest.approx(bound_new(paulis, rho), abs=1e-9)
    assert lb_pb2_qubit(r) == pytest.approx(bound_pb2(paulis, rho), abs=1e-9)
    assert lb_chen_qubit(r) == pytest.approx(bound_chen(paulis, rho), abs=1e-9)
    assert sv_qubit(r) == pytest.approx(sum_of_variances(paulis, rho), abs=1e-9)
    raw = [oracle.SX, oracle.SY, oracle.SZ]
    assert lb_new_qubit(r) == pytest.approx(oracle.lb_new(raw, oracle.bloch_rho(*r)), abs=1e-9)


@settings(max_examples=300, deadline=None)
@given(r=bloch_vectors())
def test_simplified_differences(r):
    assert diff_new_pb2(r) == pytest.approx(lb_new_qubit(r) - lb_pb2_qubit(r), abs=1e-12)
    assert diff_new_chen(r) == pytest.approx(lb_new_qubit(r) - lb_chen_qubit(r), abs=1e-12)
    b = qubit_bounds(r)
    assert max(b.lb_new, b.lb_pb2, b.lb_chen) <= b.sv + 1e-9


@settings(max_examples=200, deadline=None)
@given(r=bloch_vectors())
def test_symmetries(r):
    for fn in (diff_new_pb2, diff_new_chen):
        ref = fn(r)
        for perm in itertools.permutations(r):
            assert fn(perm) == pytest.approx(ref, abs=1e-12)
        assert fn(tuple(-c for c in r)) == pytest.approx(ref, abs=1e-12)


@settings(max_examples=300, deadline=None)
@given(r=bloch_vectors())
def test_claimed_lower_limits(r):
    assert diff_new_pb2(r) >= 0.5 - 1e-9
    assert diff_new_chen(r) >= SQ3 - 4 / 3 - 1e-9
