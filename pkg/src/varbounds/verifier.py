"""Randomized falsification of the variance relations and Bloch-ball minimization.

An audit never raises on a failed inequality: each failure becomes a
:class:`Violation` carrying the per-trial seed, so the instance can be
replayed with :func:`run_trial`.
"""

from __future__ import annotations

import enum
import io
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bounds import (
    bound_chen,
    bound_new,
    bound_new_form15,
    bound_pb1,
    bound_pb1_form13,
    bound_pb2,
    mp_sum1,
    mp_sum2,
    robertson,
    schrodinger,
)
from .core import Observable, QuantumState, Tolerance, variance
from .errors import BadDimension, BadStep, DegeneratePerp, NeedAtLeastTwo
from .operators import (
    BlochVector,
    haar_random_pure,
    mix_seed,
    random_density,
    random_hermitian,
    standard_normals,
    uniforms,
)
from .qubit import diff_new_chen, diff_new_pb2

__all__ = [
    "AuditConfig",
    "AuditReport",
    "MinimizationResult",
    "Target",
    "Violation",
    "audit_random",
    "claimed_minimizers",
    "commuting_family",
    "minimize_diff_bloch",
    "run_trial",
    "triviality_check",
]

IDENTITY_RTOL = 1e-8
TRIVIAL_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    check: str
    seed: int
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class AuditConfig:
    trials: int
    dims: tuple = (2, 3)
    n_obs: tuple = (3,)
    seed: int = 0
    tol: Tolerance = Tolerance()
    inject_commuting: bool = True

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "n_obs", tuple(int(n) for n in self.n_obs))
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.dims or any(d < 2 or d > 16 for d in self.dims):
            raise BadDimension("dims must be a non-empty subset of [2, 16]")
        if not self.n_obs or any(n < 2 for n in self.n_obs):
            raise NeedAtLeastTwo("every n_obs entry must be >= 2")


@dataclass
class AuditReport:
    trials_run: int = 0
    violations: list = field(default_factory=list)
    max_identity_residual: float = 0.0
    checks_run: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    commuting_lb_new: float | None = None

    @property
    def passed(self):
        return not self.violations

    def summary(self):
        lines = [
            f"trials run:            {self.trials_run}",
            f"checks evaluated:      {sum(self.checks_run.values())}",
            f"max identity residual: {self.max_identity_residual:.3e}",
        ]
        if self.commuting_lb_new is not None:
            lines.append(f"commuting-family bound: {self.commuting_lb_new:.3e}")
        lines.append(f"{len(self.violations)} violations")
        for v in self.violations[:20]:
            lines.append(f"  {v.check} seed={v.seed} lhs={v.lhs:.12g} rhs={v.rhs:.12g} gap={v.gap:.3e}")
        return "\n".join(lines) + "\n"

    def violations_csv(self):
        buf = io.StringIO()
        buf.write("check,seed,lhs,rhs,gap\n")
        for v in self.violations:
            buf.write(f"{v.check},{v.seed},{v.lhs:.12g},{v.rhs:.12g},{v.gap:.12g}\n")
        return buf.getvalue()


class _Recorder:
    def __init__(self, report, seed, tol):
        self.report = report
        self.seed = seed
        self.tol = tol

    def geq(self, check, lhs, rhs):
        """Record ``lhs >= rhs`` up to tolerance."""
        self.report.checks_run[check] = self.report.checks_run.get(check, 0) + 1
        if lhs < rhs - self.tol.slack(lhs, rhs):
            self.report.violations.append(Violation(check, self.seed, lhs, rhs, lhs - rhs))

    def equal(self, check, lhs, rhs, rtol=IDENTITY_RTOL):
        self.report.checks_run[check] = self.report.checks_run.get(check, 0) + 1
        resid = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
        self.report.max_identity_residual = max(self.report.max_identity_residual, resid)
        self.report.residuals[check] = max(self.report.residuals.get(check, 0.0), resid)
        if resid > rtol:
            self.report.violations.append(Violation(check, self.seed, lhs, rhs, lhs - rhs))


def _orthogonal_partner(psi, seed):
    v = haar_random_pure(psi.dim, seed).data
    w = v - np.vdot(psi.data, v) * psi.data
    return QuantumState(w / np.linalg.norm(w), "pure")


def _check_instance(obs, s, rec, seed):
    n = len(obs)
    var = [variance(A, s) for A in obs]
    sv = float(sum(var))
    diffs = [variance(a - b, s) for a, b in combinations(obs, 2)]
    total = variance(sum(obs), s)
    lb = bound_new(obs, s)

    rec.geq("theorem", sv, lb)
    rec.equal("identity_sum", float(sum(diffs)), n * sv - total)
    root_sum = float(sum(math.sqrt(d) for d in diffs))
    rec.geq("cauchy", n * (n - 1) / 2 * float(sum(diffs)), root_sum**2)
    if lb <= 1e-12 and s.is_pure:
        rec.geq("nontrivial", 1e-6, max(var))
    if n == 2:
        rec.equal("two_observable_saturation", sv, lb, rtol=TRIVIAL_TOL)

    for (i, j) in combinations(range(n), 2):
        a, b = obs[i], obs[j]
        rec.equal(
            "parallelogram",
            var[i] + var[j],
            0.5 * variance(a + b, s) + 0.5 * variance(a - b, s),
        )
    rec.geq("form13", sv, bound_pb1_form13(obs, s))
    rec.geq("pb1", sv, bound_pb1(obs, s))
    rec.geq("pb2", sv, bound_pb2(obs, s))
    if n >= 3:
        f15 = bound_new_form15(obs, s)
        rec.geq("ordering", f15, bound_pb1_form13(obs, s))
        rec.geq("form15", sv, f15)
        rec.geq("chen", sv, bound_chen(obs, s))

    u = uniforms(mix_seed(seed, 1000), 2)
    i = int(u[0] * n)
    j = (i + 1 + int(u[1] * (n - 1))) % n
    a, b = obs[i], obs[j]
    pair_sum = var[i] + var[j]
    rec.geq("mp_sum2", pair_sum, mp_sum2(a, b, s))
    sch = schrodinger(a, b, s)
    rec.geq("schrodinger", var[i] * var[j], sch)
    rec.geq("robertson_le_schrodinger", sch, robertson(a, b, s))
    if s.is_pure:
        perp = _orthogonal_partner(s, mix_seed(seed, 1001))
        rec.geq("mp_sum1", pair_sum, mp_sum1(a, b, s, perp))
        rec.geq("mp_sum1_default", pair_sum, mp_sum1(a, b, s))
        try:
            rec.equal("mp_sum1_saturating", pair_sum, mp_sum1(a, b, s, saturating=True), rtol=1e-7)
        except DegeneratePerp:
            pass
    return lb


def run_trial(seed, dim, n_obs, pure, tol=Tolerance(), report=None):
    """Draw one random instance from ``seed`` and run every check on it."""
    report = AuditReport() if report is None else report
    obs = [random_hermitian(dim, mix_seed(seed, k)) for k in range(n_obs)]
    state_seed = mix_seed(seed, n_obs)
    s = haar_random_pure(dim, state_seed) if pure else random_density(dim, state_seed)
    _check_instance(obs, s, _Recorder(report, seed, tol), seed)
    report.trials_run += 1
    return report


def _trial_shape(cfg, t):
    # pure/mixed alternate per trial; (dim, N) advances every two trials
    k = t // 2
    dim = cfg.dims[k % len(cfg.dims)]
    n = cfg.n_obs[(k // len(cfg.dims)) % len(cfg.n_obs)]
    return dim, n, t % 2 == 0


def audit_random(cfg):
    """Run ``cfg.trials`` seeded trials; cycles through every (dim, N) pair
    and alternates pure and mixed states.

    With ``inject_commuting`` trial 0 is replaced by a commuting family
    evaluated at a common eigenstate, whose bound must vanish.
    """
    report = AuditReport()
    for t in range(cfg.trials):
        seed = mix_seed(cfg.seed, t)
        dim, n, pure = _trial_shape(cfg, t)
        if t == 0 and cfg.inject_commuting:
            obs, basis = commuting_family(dim, n, seed)
            s = QuantumState(basis[:, 0].copy(), "pure")
            rec = _Recorder(report, seed, cfg.tol)
            lb = _check_instance(obs, s, rec, seed)
            report.commuting_lb_new = lb
            rec.geq("triviality", TRIVIAL_TOL, lb)
            report.trials_run += 1
        else:
            run_trial(seed, dim, n, pure, cfg.tol, report)
    return report


def commuting_family(dim, n_obs, seed):
    """``n_obs`` observables diagonal in one random orthonormal basis.

    Returns ``(observables, basis)``; column ``k`` of ``basis`` is a common
    eigenvector.
    """
    g = standard_normals(mix_seed(seed, 0), 2 * dim * dim)
    z = (g[: dim * dim] + 1j * g[dim * dim:]).reshape(dim, dim)
    q, r = np.linalg.qr(z)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    eig = standard_normals(mix_seed(seed, 1), dim * n_obs).reshape(n_obs, dim)
    obs = [Observable((q * lam) @ q.conj().T) for lam in eig]
    return obs, q


def triviality_check(dim, n_obs, seed):
    """True iff the new bound vanishes on a common eigenstate of a commuting
    family and is strictly positive on a Haar-random state."""
    if int(dim) != dim or dim < 2:
        raise BadDimension("dim must be >= 2")
    if int(n_obs) != n_obs or n_obs < 2:
        raise NeedAtLeastTwo("n_obs must be >= 2")
    obs, basis = commuting_family(dim, n_obs, seed)
    eigen = QuantumState(basis[:, 0].copy(), "pure")
    at_eigen = bound_new(obs, eigen)
    generic = haar_random_pure(dim, mix_seed(seed, 2))
    if all(variance(A, generic) <= 1e-12 for A in obs):
        generic = haar_random_pure(dim, mix_seed(seed, 3))
    return at_eigen <= TRIVIAL_TOL and bound_new(obs, generic) > TRIVIAL_TOL


# -- minimization over the Bloch ball -----------------------------------------

class Target(enum.Enum):
    NEW_MINUS_PB2 = "new-minus-pb2"
    NEW_MINUS_CHEN = "new-minus-chen"

    @property
    def function(self):
        return diff_new_pb2 if self is Target.NEW_MINUS_PB2 else diff_new_chen

    @property
    def claimed_minimum(self):
        return 0.5 if self is Target.NEW_MINUS_PB2 else math.sqrt(3) - 4 / 3


@dataclass(frozen=True)
class MinimizationResult:
    min_value: float
    argmin: BlochVector
    grid_step: float
    refine_iterations: int
    grid_points: int


def _project(p):
    n = np.linalg.norm(p, axis=-1, keepdims=True)
    return np.where(n > 1.0, p / np.where(n > 1.0, n, 1.0), p)


def ball_grid(grid_step):
    """Cubic grid on ``[-1, 1]^3``; points outside the ball are projected
    radially onto the unit sphere so boundary minima are sampled."""
    n = int(math.ceil(2.0 / grid_step - 1e-9)) + 1
    axis = np.linspace(-1.0, 1.0, n)
    pts = np.stack(np.meshgrid(axis, axis, axis, indexing="ij"), axis=-1).reshape(-1, 3)
    return _project(pts)


def minimize_diff_bloch(target, grid_step, refine_iterations):
    """Grid search plus projected coordinate descent with a halving step."""
    target = Target(target)
    if not (0 < grid_step <= 0.1):
        raise BadStep(f"grid_step must be in (0, 0.1], got {grid_step!r}")
    if int(refine_iterations) != refine_iterations or refine_iterations < 0:
        raise BadStep("refine_iterations must be a non-negative integer")
    f = target.function
    pts = ball_grid(grid_step)
    vals = f(pts)
    k = int(np.argmin(vals))
    best, best_val = pts[k].copy(), float(vals[k])

    step = float(grid_step)
    for _ in range(int(refine_iterations)):
        for axis in range(3):
            for sgn in (1.0, -1.0):
                cand = best.copy()
                cand[axis] += sgn * step
                cand = _project(cand)
                val = f(cand)
                if val < best_val:
                    best, best_val = cand, val
        step *= 0.5

    # clip round-off that could push the norm a hair above 1
    nrm = float(np.linalg.norm(best))
    if nrm > 1.0:
        best = best / nrm
    return MinimizationResult(
        min_value=best_val,
        argmin=BlochVector(*map(float, best)),
        grid_step=float(grid_step),
        refine_iterations=int(refine_iterations),
        grid_points=len(pts),
    )


def claimed_minimizers(target):
    """Points where each bound gap attains its stated minimum.

    ``1/sqrt(2)`` is taken as ``sqrt(0.5)``, which rounds up: the vanishing
    radicand ``2 - (x - y)^2`` then lands in the clamp band instead of at
    +1e-16, whose square root would shift the value by ~1e-8.
    """
    target = Target(target)
    if target is Target.NEW_MINUS_PB2:
        c = 1 / math.sqrt(3)
        return [(c, c, c), (-c, -c, -c)]
    h = math.sqrt(0.5)
    pts = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for sgn in (1.0, -1.0):
            p = [0.0, 0.0, 0.0]
            p[i], p[j] = sgn * h, -sgn * h
            pts.append(tuple(p))
    return pts
