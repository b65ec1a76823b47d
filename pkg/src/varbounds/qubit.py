"""Closed-form Pauli-triple bounds as functions of the Bloch vector.

These never touch a matrix, so they serve as an independent check on the
generic path in :mod:`varbounds.bounds`. All functions accept a single
vector ``(x, y, z)`` or an array of shape ``(..., 3)`` and broadcast.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BlochNormExceeded, UncertaintyError

__all__ = [
    "QubitBoundSet",
    "alpha",
    "beta",
    "diff_new_chen",
    "diff_new_pb2",
    "lb_chen_qubit",
    "lb_new_qubit",
    "lb_pb2_qubit",
    "qubit_bounds",
    "sv_qubit",
]

RADICAND_CLAMP = 1e-12
NORM_TOL = 1e-12


def _coords(r):
    r = np.asarray(tuple(r) if not isinstance(r, np.ndarray) else r, dtype=float)
    if r.shape[-1:] != (3,):
        raise ValueError(f"expected trailing dimension 3, got shape {r.shape}")
    x, y, z = r[..., 0], r[..., 1], r[..., 2]
    n2 = x * x + y * y + z * z
    if np.any(~np.isfinite(n2)) or np.any(n2 > 1.0 + NORM_TOL):
        raise BlochNormExceeded("Bloch vector outside the unit ball")
    return x, y, z


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def _root(radicand):
    if np.any(radicand < -RADICAND_CLAMP):
        raise UncertaintyError("negative radicand inside the Bloch ball")
    return np.sqrt(np.maximum(radicand, 0.0))


def _alpha(x, y, z):
    return _root(2 - (x - y) ** 2) + _root(2 - (x - z) ** 2) + _root(2 - (y - z) ** 2)


def _beta(x, y, z):
    return _root(2 - (x + y) ** 2) + _root(2 - (x + z) ** 2) + _root(2 - (y + z) ** 2)


def alpha(r):
    """Sum of the pairwise difference deviations ``sum_{i<j} sqrt(2 - (r_i - r_j)^2)``."""
    return _out(_alpha(*_coords(r)))


def beta(r):
    """Sum of the pairwise sum deviations ``sum_{i<j} sqrt(2 - (r_i + r_j)^2)``."""
    return _out(_beta(*_coords(r)))


def sv_qubit(r):
    x, y, z = _coords(r)
    return _out(3 - (x * x + y * y + z * z))


def lb_new_qubit(r):
    x, y, z = _coords(r)
    return _out(_alpha(x, y, z) ** 2 / 9 + (3 - (x + y + z) ** 2) / 3)


def lb_pb2_qubit(r):
    x, y, z = _coords(r)
    return _out(0.5 * (3 - (x * x + y * y + z * z) + x * y + x * z + y * z))


def lb_chen_qubit(r):
    x, y, z = _coords(r)
    return _out(
        6 - 2 * (x * y + x * z + y * z) - 2 * (x * x + y * y + z * z) - _beta(x, y, z) ** 2 / 4
    )


def diff_new_pb2(r):
    """``lb_new_qubit - lb_pb2_qubit`` in simplified algebraic form. Minimum 1/2."""
    x, y, z = _coords(r)
    return _out(
        _alpha(x, y, z) ** 2 / 9
        + (x * x + y * y + z * z) / 6
        - 7 / 6 * (x * y + x * z + y * z)
        - 0.5
    )


def diff_new_chen(r):
    """``lb_new_qubit - lb_chen_qubit`` in simplified form. Minimum ``sqrt(3) - 4/3``."""
    x, y, z = _coords(r)
    return _out(
        _alpha(x, y, z) ** 2 / 9
        + _beta(x, y, z) ** 2 / 4
        + 2 / 3 * (x + y + z) ** 2
        + (x * x + y * y + z * z)
        - 5
    )


@dataclass(frozen=True)
class QubitBoundSet:
    sv: float
    lb_new: float
    lb_pb2: float
    lb_chen: float
    alpha: float
    beta: float


def qubit_bounds(r):
    return QubitBoundSet(
        sv=sv_qubit(r),
        lb_new=lb_new_qubit(r),
        lb_pb2=lb_pb2_qubit(r),
        lb_chen=lb_chen_qubit(r),
        alpha=alpha(r),
        beta=beta(r),
    )
