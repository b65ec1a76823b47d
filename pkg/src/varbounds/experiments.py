"""Parameter sweeps over the two worked-example state families, written as CSV."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import compare_all
from .errors import BadGrid
from .operators import example1_state, example2_state, pauli, spin1_ops

__all__ = [
    "FIG1_HEADER",
    "FIG2_HEADER",
    "SweepGrid",
    "SweepRow",
    "sweep_fig1",
    "sweep_fig2",
    "write_csv",
]

FIG1_HEADER = ("theta", "sv", "lb_new", "fb_chen", "pb1_plus", "pb2_minus")
FIG2_HEADER = FIG1_HEADER[:1] + ("phi",) + FIG1_HEADER[1:] + (
    "diff_lb_fb",
    "diff_lb_pb2",
    "diff_fb_pb2",
)


def inclusive_grid(lo, hi, steps):
    """``steps`` evenly spaced points with both endpoints included."""
    return np.linspace(lo, hi, steps)


@dataclass(frozen=True)
class SweepGrid:
    """Theta over ``[0, pi]`` and phi over ``[0, 2 pi]``, endpoints inclusive.

    ``phi_slice`` pins phi to one value (``phi_steps`` is then ignored).
    """

    theta_steps: int
    phi_steps: int = 1
    phi_slice: Optional[float] = None

    def __post_init__(self):
        if int(self.theta_steps) != self.theta_steps or self.theta_steps < 2:
            raise BadGrid(f"theta_steps must be an integer >= 2, got {self.theta_steps!r}")
        if int(self.phi_steps) != self.phi_steps or self.phi_steps < 1:
            raise BadGrid(f"phi_steps must be an integer >= 1, got {self.phi_steps!r}")
        if self.phi_slice is not None and not math.isfinite(self.phi_slice):
            raise BadGrid("phi_slice must be finite")

    def thetas(self):
        return inclusive_grid(0.0, math.pi, int(self.theta_steps))

    def phis(self):
        if self.phi_slice is not None:
            return np.array([float(self.phi_slice)])
        return inclusive_grid(0.0, 2 * math.pi, int(self.phi_steps))


@dataclass(frozen=True)
class SweepRow:
    theta: float
    phi: Optional[float]
    sv: float
    lb_new: float
    fb_chen: float
    pb1: float
    pb2: float

    @property
    def diff_lb_fb(self):
        return self.lb_new - self.fb_chen

    @property
    def diff_lb_pb2(self):
        return self.lb_new - self.pb2

    @property
    def diff_fb_pb2(self):
        return self.fb_chen - self.pb2


def _row(obs, state, theta, phi):
    rep = compare_all(obs, state)
    return SweepRow(
        theta=float(theta),
        phi=None if phi is None else float(phi),
        sv=rep.sum_of_variances,
        lb_new=rep.lb_new,
        fb_chen=rep.fb_chen,
        pb1=rep.pb1_plus,
        pb2=rep.pb2_minus,
    )


def sweep_fig1(theta_steps):
    """Pauli triple on the qubit family of the first worked example."""
    if int(theta_steps) != theta_steps or theta_steps < 2:
        raise BadGrid(f"theta_steps must be an integer >= 2, got {theta_steps!r}")
    obs = pauli()
    return [_row(obs, example1_state(t), t, None) for t in inclusive_grid(0.0, math.pi, int(theta_steps))]


def sweep_fig2(grid):
    """Spin-1 ``(L_x, L_y, L_z)`` on the two-angle family; theta outer, phi inner."""
    if not isinstance(grid, SweepGrid):
        raise BadGrid("expected a SweepGrid")
    obs = spin1_ops()
    phis = grid.phis()
    return [
        _row(obs, example2_state(t, p), t, p)
        for t in grid.thetas()
        for p in phis
    ]


def _fmt(v):
    return format(v, ".12g")


def write_csv(rows, path):
    """Write rows with 12 significant digits, LF line endings.

    The figure-2 layout (with ``phi`` and difference columns) is used when
    the rows carry ``phi``.
    """
    rows = list(rows)
    with_phi = bool(rows) and rows[0].phi is not None
    with open(path, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(FIG2_HEADER if with_phi else FIG1_HEADER)
        for r in rows:
            core = [r.sv, r.lb_new, r.fb_chen, r.pb1, r.pb2]
            if with_phi:
                vals = [r.theta, r.phi, *core, r.diff_lb_fb, r.diff_lb_pb2, r.diff_fb_pb2]
            else:
                vals = [r.theta, *core]
            w.writerow([_fmt(v) for v in vals])
