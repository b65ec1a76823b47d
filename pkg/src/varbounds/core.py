"""Dense complex linear algebra and the statistical primitives built on it.

Observables and states are thin immutable wrappers around numpy arrays.
Validation happens once at construction, after which every function here
is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Real

import numpy as np

from .errors import (
    DimensionMismatch,
    NegativeVariance,
    NonFinite,
    NonRealExpectation,
    NotHermitian,
    NotNormalized,
    NotPositive,
    NotSquare,
    NotUnitTrace,
)

__all__ = [
    "HERMITIAN_RTOL",
    "Observable",
    "QuantumState",
    "Tolerance",
    "anticommutator",
    "commutator",
    "expectation",
    "std_dev",
    "validate_observable",
    "validate_state",
    "variance",
]

HERMITIAN_RTOL = 1e-10
NORM_TOL = 1e-10
TRACE_TOL = 1e-10
EIGEN_TOL = 1e-9
IMAG_TOL = 1e-9
VARIANCE_CLAMP = 1e-9


def _frozen(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


def _square_matrix(matrix):
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise NotSquare(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFinite("matrix has NaN or infinite entries")
    return m


def hermitian_asymmetry(m):
    """Largest entrywise deviation ``|M[i, j] - conj(M[j, i])|``."""
    return float(np.max(np.abs(m - m.conj().T)))


def _check_hermitian(m):
    asym = hermitian_asymmetry(m)
    if asym > HERMITIAN_RTOL * (1.0 + float(np.max(np.abs(m)))):
        raise NotHermitian(asym)


@dataclass(frozen=True, eq=False)
class Observable:
    """A validated Hermitian matrix.

    Supports ``+``, ``-``, unary ``-`` and multiplication by real scalars,
    so combinations such as ``A - B`` or ``sum(obs)`` stay observables.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _square_matrix(self.matrix)
        _check_hermitian(m)
        object.__setattr__(self, "matrix", _frozen(m))

    @property
    def dim(self):
        return self.matrix.shape[0]

    def _peer(self, other):
        if not isinstance(other, Observable):
            return NotImplemented
        _check_dims(self.dim, other.dim)
        return other

    def __add__(self, other):
        if isinstance(other, (int, float)) and other == 0:
            # lets the builtin sum() start from 0
            return self
        if self._peer(other) is NotImplemented:
            return NotImplemented
        return Observable(self.matrix + other.matrix)

    __radd__ = __add__

    def __sub__(self, other):
        if self._peer(other) is NotImplemented:
            return NotImplemented
        return Observable(self.matrix - other.matrix)

    def __neg__(self):
        return Observable(-self.matrix)

    def __mul__(self, scalar):
        if not isinstance(scalar, Real):
            return NotImplemented
        return Observable(float(scalar) * self.matrix)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Observable):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool(
            np.array_equal(self.matrix, other.matrix)
        )

    __hash__ = None

    def __repr__(self):
        return f"Observable(dim={self.dim})"


@dataclass(frozen=True, eq=False)
class QuantumState:
    """A pure state vector or a density matrix.

    ``kind`` is ``"pure"`` (``data`` is a unit vector) or ``"mixed"``
    (``data`` is a density matrix). Use :func:`validate_state` to build one
    from raw input.
    """

    data: np.ndarray
    kind: str

    @property
    def is_pure(self):
        return self.kind == "pure"

    @property
    def dim(self):
        return self.data.shape[0]

    def density_matrix(self):
        if self.is_pure:
            return np.outer(self.data, self.data.conj())
        return np.array(self.data)

    def __repr__(self):
        return f"QuantumState(kind={self.kind!r}, dim={self.dim})"


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be non-negative")

    def slack(self, *values):
        """Allowed deviation when comparing quantities of the given size."""
        scale = max((abs(v) for v in values), default=0.0)
        return self.abs_tol + self.rel_tol * scale

    def close(self, a, b):
        return abs(a - b) <= self.slack(a, b)


def validate_observable(matrix):
    """Return ``matrix`` as an :class:`Observable`.

    Raises :class:`NotHermitian` (carrying the maximal asymmetry) when
    ``max|M - M^H| > 1e-10 * (1 + max|M|)`` and :class:`NonFinite` for
    NaN/inf entries.
    """
    if isinstance(matrix, Observable):
        return matrix
    return Observable(matrix)


def validate_state(raw):
    """Validate a state vector (1-D) or density matrix (2-D).

    Vectors must already be normalized; nothing is silently rescaled.
    """
    if isinstance(raw, QuantumState):
        return raw
    a = np.asarray(raw, dtype=complex)
    if a.ndim == 1:
        if a.size < 1:
            raise NotSquare("empty state vector")
        if not np.all(np.isfinite(a)):
            raise NonFinite("state vector has NaN or infinite entries")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > NORM_TOL:
            raise NotNormalized(f"state vector has norm {norm!r}")
        return QuantumState(_frozen(a), "pure")
    m = _square_matrix(a)
    asym = hermitian_asymmetry(m)
    if asym > HERMITIAN_RTOL * (1.0 + float(np.max(np.abs(m)))):
        raise NotHermitian(asym)
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotUnitTrace(f"density matrix has trace {tr.real:.12g}")
    lo = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
    if lo < -EIGEN_TOL:
        raise NotPositive(f"density matrix has eigenvalue {lo:.3e}")
    return QuantumState(_frozen(m), "mixed")


def _check_dims(a, b):
    if a != b:
        raise DimensionMismatch(f"dimension {a} does not match {b}")


def _expect_matrix(m, state):
    # <psi|M|psi> or Tr[rho M] for an arbitrary (not necessarily Hermitian) M
    if state.is_pure:
        v = state.data
        return complex(v.conj() @ (m @ v))
    return complex(np.einsum("ij,ji->", state.data, m))


def _real(value, what):
    if abs(value.imag) > IMAG_TOL:
        raise NonRealExpectation(f"{what} has imaginary part {value.imag:.3e}")
    return value.real


def expectation(A, s):
    """Expectation value ``<A>`` in the state ``s``."""
    A = validate_observable(A)
    s = validate_state(s)
    _check_dims(A.dim, s.dim)
    return _real(_expect_matrix(A.matrix, s), "expectation")


def variance(A, s):
    """Variance ``<A^2> - <A>^2``.

    Round-off negatives down to ``-1e-9`` are clamped to zero; anything
    more negative raises :class:`NegativeVariance`.
    """
    A = validate_observable(A)
    s = validate_state(s)
    _check_dims(A.dim, s.dim)
    m = A.matrix
    mean = _real(_expect_matrix(m, s), "expectation")
    # centred form <(A - <A>)^2>: same value, no cancellation near eigenstates
    if s.is_pure:
        w = m @ s.data - mean * s.data
        var = float(np.vdot(w, w).real)
    else:
        c = m - mean * np.eye(A.dim)
        var = _real(_expect_matrix(c @ c, s), "second moment")
    if var < 0.0:
        if var < -VARIANCE_CLAMP:
            raise NegativeVariance(f"variance evaluated to {var:.3e}")
        var = 0.0
    return var


def std_dev(A, s):
    return float(np.sqrt(variance(A, s)))


def commutator(A, B):
    """``AB - BA`` as a plain (anti-Hermitian) complex array."""
    A = validate_observable(A)
    B = validate_observable(B)
    _check_dims(A.dim, B.dim)
    return A.matrix @ B.matrix - B.matrix @ A.matrix


def anticommutator(A, B):
    A = validate_observable(A)
    B = validate_observable(B)
    _check_dims(A.dim, B.dim)
    return Observable(A.matrix @ B.matrix + B.matrix @ A.matrix)


def expect_operator(m, s):
    """Complex expectation ``<M>`` of an arbitrary square matrix."""
    s = validate_state(s)
    m = _square_matrix(m)
    _check_dims(m.shape[0], s.dim)
    return _expect_matrix(m, s)
