"""Three Pauli observables on a one-parameter family of qubit states.

Run with ``python3 demos/01_pauli_example.py``.
"""

# %%
# The family lives on a great circle of the Bloch sphere.  For every
# member the variance sum of sigma_x, sigma_y, sigma_z is exactly 2.
import numpy as np

from varbounds import compare_all, example1_state, pauli, variance

sx, sy, sz = pauli()
for theta in np.linspace(0, np.pi, 5):
    psi = example1_state(theta)
    total = variance(sx, psi) + variance(sy, psi) + variance(sz, psi)
    print(f"theta={theta:5.3f}  sum of variances={total:.12f}")

# %%
# Compare every bound at a few angles.  The new bound always sits between
# the older ones and the true variance sum.
print()
print(f"{'theta':>6} {'SV':>8} {'LB':>8} {'FB':>8} {'PB1':>8} {'PB2':>8}")
for theta in np.linspace(0, np.pi, 7):
    r = compare_all([sx, sy, sz], example1_state(theta))
    print(f"{theta:6.3f} {r.sum_of_variances:8.5f} {r.lb_new:8.5f} {r.fb_chen:8.5f} {r.pb1_plus:8.5f} {r.pb2_minus:8.5f}")

# %%
# The gaps are all non-negative.
r = compare_all([sx, sy, sz], example1_state(np.pi / 3))
for name, gap in r.gaps().items():
    print(f"{name:>16}: {gap:+.6f}")
