"""Lower bounds on sums (and products) of variances.

Every function takes a list of observables and a state and returns a real
number. Sum-form bounds for ``N`` observables:

* :func:`bound_new` -- ``(1/N) Var(sum A_i) + 2/(N^2 (N-1)) (sum_{i<j} std(A_i - A_j))^2``
* :func:`bound_chen` -- the ``N >= 3`` bound built from pairwise sums
* :func:`bound_pb1`, :func:`bound_pb2` -- averaged pairwise parallelogram bounds

plus the rearranged forms :func:`bound_pb1_form13`, :func:`bound_new_form15`
and the two-observable relations :func:`robertson`, :func:`schrodinger`,
:func:`mp_sum1`, :func:`mp_sum2`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from .core import (
    anticommutator,
    commutator,
    expect_operator,
    expectation,
    validate_observable,
    validate_state,
    variance,
)
from .errors import (
    DegeneratePerp,
    DimensionMismatch,
    EmptyList,
    MixedStateUnsupported,
    NeedAtLeastThree,
    NeedAtLeastTwo,
    NotOrthogonal,
)

__all__ = [
    "BoundReport",
    "bound_chen",
    "bound_new",
    "bound_new_form15",
    "bound_pb1",
    "bound_pb1_form13",
    "bound_pb2",
    "compare_all",
    "default_perp",
    "mp_sum1",
    "mp_sum2",
    "robertson",
    "schrodinger",
    "sum_of_variances",
]

ORTHOGONALITY_TOL = 1e-8
PERP_NORM_TOL = 1e-12


def _prepare(obs, s, min_n=1):
    obs = [validate_observable(A) for A in obs]
    n = len(obs)
    if n == 0:
        raise EmptyList("need at least one observable")
    if n < min_n:
        exc = NeedAtLeastThree if min_n >= 3 else NeedAtLeastTwo
        raise exc(f"need at least {min_n} observables, got {n}")
    s = validate_state(s)
    for A in obs:
        if A.dim != s.dim:
            raise DimensionMismatch(f"observable dim {A.dim} vs state dim {s.dim}")
    return obs, s


def _pair_variances(obs, s, sign):
    if sign > 0:
        return [variance(a + b, s) for a, b in combinations(obs, 2)]
    return [variance(a - b, s) for a, b in combinations(obs, 2)]


def _covariance_terms(obs, s):
    # <{A_i, A_j}> - 2 <A_i><A_j> for i < j
    means = [expectation(A, s) for A in obs]
    return [
        expectation(anticommutator(obs[i], obs[j]), s) - 2.0 * means[i] * means[j]
        for i, j in combinations(range(len(obs)), 2)
    ]


def sum_of_variances(obs, s):
    obs, s = _prepare(obs, s)
    return float(sum(variance(A, s) for A in obs))


def bound_new(obs, s):
    """Sum-of-variances lower bound for ``N >= 2`` observables.

    For ``N = 2`` it coincides with the sum of variances (parallelogram law).
    """
    obs, s = _prepare(obs, s, 2)
    n = len(obs)
    total = variance(sum(obs), s)
    spread = sum(np.sqrt(d) for d in _pair_variances(obs, s, -1))
    return float(total / n + 2.0 / (n * n * (n - 1)) * spread**2)


def bound_new_form15(obs, s):
    """Rearranged :func:`bound_new` inequality (needs ``N >= 3``).

    Equivalent as an inequality to :func:`bound_new` but the returned value
    differs; only ``sign(SV - bound)`` is shared.
    """
    obs, s = _prepare(obs, s, 3)
    n = len(obs)
    cov = sum(_covariance_terms(obs, s))
    stds = np.sqrt(_pair_variances(obs, s, -1))
    # ordered pairs of distinct (i<j) index pairs
    cross = float(np.sum(stds) ** 2 - np.sum(stds**2))
    return float(cov / (n - 1) + 2.0 / ((n - 2) * (n * n - 1)) * cross)


def bound_chen(obs, s):
    obs, s = _prepare(obs, s, 3)
    n = len(obs)
    plus = _pair_variances(obs, s, +1)
    spread = sum(np.sqrt(d) for d in plus)
    return float((sum(plus) - spread**2 / (n - 1) ** 2) / (n - 2))


def bound_pb1(obs, s):
    obs, s = _prepare(obs, s, 2)
    return float(sum(_pair_variances(obs, s, +1)) / (2 * (len(obs) - 1)))


def bound_pb2(obs, s):
    obs, s = _prepare(obs, s, 2)
    return float(sum(_pair_variances(obs, s, -1)) / (2 * (len(obs) - 1)))


def bound_pb1_form13(obs, s):
    """Rearranged :func:`bound_pb1` inequality: ``sum_{i<j} cov-terms / (N-1)``."""
    obs, s = _prepare(obs, s, 2)
    return float(sum(_covariance_terms(obs, s)) / (len(obs) - 1))


def robertson(A, B, s):
    """``|<[A, B]> / 2|^2``, a lower bound on ``Var(A) Var(B)``."""
    return abs(0.5 * expect_operator(commutator(A, B), s)) ** 2


def schrodinger(A, B, s):
    rob = robertson(A, B, s)
    corr = 0.5 * expectation(anticommutator(A, B), s) - expectation(A, s) * expectation(B, s)
    return rob + corr * corr


def default_perp(psi):
    """Unit vector orthogonal to ``psi``.

    Gram-Schmidt of the standard basis vector with the smallest overlap
    (lowest index on ties).
    """
    v = psi.data
    k = int(np.argmin(np.abs(v)))
    e = np.zeros_like(v)
    e[k] = 1.0
    w = e - np.conj(v[k]) * v
    return w / np.linalg.norm(w)


def _saturating_perp(M, psi):
    # <psi|M|w> = <M^H psi|w>, so the maximizing w is the centred M^H psi
    v = psi.data
    Mh = M.conj().T
    w = Mh @ v - (v.conj() @ Mh @ v) * v
    norm = np.linalg.norm(w)
    if norm < PERP_NORM_TOL:
        raise DegeneratePerp("(A -+ iB - <A -+ iB>)|psi> vanishes")
    return w / norm


def mp_sum1(A, B, psi, psi_perp=None, *, saturating=False):
    """Sum bound ``+-i<[A,B]> + |<psi|A +- iB|psi_perp>|^2`` for pure ``psi``.

    The sign follows ``i<[A, B]>`` (``+`` on a tie). Without ``psi_perp``
    :func:`default_perp` is used, or with ``saturating=True`` the state
    proportional to ``(A -+ iB - <A -+ iB>)|psi>`` (opposite sign), which
    attains equality.
    """
    A = validate_observable(A)
    B = validate_observable(B)
    psi = validate_state(psi)
    if not psi.is_pure:
        raise MixedStateUnsupported("this bound needs a pure state and an orthogonal partner")
    if A.dim != B.dim or A.dim != psi.dim:
        raise DimensionMismatch("observables and state must share a dimension")
    c = (1j * expect_operator(commutator(A, B), psi)).real
    sign = -1.0 if c < 0 else 1.0
    M = A.matrix + sign * 1j * B.matrix
    if psi_perp is not None:
        if saturating:
            raise ValueError("pass either psi_perp or saturating=True, not both")
        perp = validate_state(psi_perp)
        if not perp.is_pure:
            raise MixedStateUnsupported("psi_perp must be a pure state")
        if perp.dim != psi.dim:
            raise DimensionMismatch("psi_perp dimension differs from psi")
        overlap = abs(np.vdot(psi.data, perp.data))
        if overlap > ORTHOGONALITY_TOL:
            raise NotOrthogonal(f"|<psi|psi_perp>| = {overlap:.3e}")
        w = perp.data
    elif saturating:
        w = _saturating_perp(M, psi)
    else:
        w = default_perp(psi)
    amp = np.vdot(psi.data, M @ w)
    return float(sign * c + abs(amp) ** 2)


def mp_sum2(A, B, s):
    """``Var(A + B) / 2``."""
    A = validate_observable(A)
    B = validate_observable(B)
    return 0.5 * variance(A + B, s)


@dataclass
class BoundReport:
    sum_of_variances: float
    lb_new: float
    fb_chen: Optional[float]
    pb1_plus: float
    pb2_minus: float
    pairwise_product_bounds: list = field(default_factory=list)

    def gaps(self):
        """``SV - bound`` for each sum-form bound present."""
        out = {
            "lb_new": self.sum_of_variances - self.lb_new,
            "pb1_plus": self.sum_of_variances - self.pb1_plus,
            "pb2_minus": self.sum_of_variances - self.pb2_minus,
        }
        if self.fb_chen is not None:
            out["fb_chen"] = self.sum_of_variances - self.fb_chen
        return out

    def to_dict(self):
        d = asdict(self)
        d["pairwise_product_bounds"] = [
            {"i": i, "j": j, "robertson": r, "schrodinger": sch}
            for i, j, r, sch in self.pairwise_product_bounds
        ]
        return d


def compare_all(obs, s):
    """Evaluate every applicable bound; ``fb_chen`` is ``None`` for ``N = 2``."""
    obs, s = _prepare(obs, s, 2)
    pairs = [
        (i, j, robertson(obs[i], obs[j], s), schrodinger(obs[i], obs[j], s))
        for i, j in combinations(range(len(obs)), 2)
    ]
    return BoundReport(
        sum_of_variances=sum_of_variances(obs, s),
        lb_new=bound_new(obs, s),
        fb_chen=bound_chen(obs, s) if len(obs) >= 3 else None,
        pb1_plus=bound_pb1(obs, s),
        pb2_minus=bound_pb2(obs, s),
        pairwise_product_bounds=pairs,
    )
