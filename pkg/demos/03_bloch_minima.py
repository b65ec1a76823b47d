"""How much does the new bound improve on the older ones for a qubit?

The closed-form gaps are minimized over the whole Bloch ball.
"""

# %%
import math

import numpy as np

from varbounds.qubit import diff_new_chen, diff_new_pb2, qubit_bounds
from varbounds.verifier import Target, claimed_minimizers, minimize_diff_bloch

# Closed forms are vectorized, so whole batches of Bloch vectors go in at once.
pts = np.array([[0, 0, 0], [1, 0, 0], [0.3, -0.2, 0.5]])
print(qubit_bounds(pts))

# %%
for target in Target:
    res = minimize_diff_bloch(target, grid_step=0.02, refine_iterations=40)
    print(f"{target.value}: min {res.min_value:.9f} at {tuple(round(c, 4) for c in res.argmin)}")
    print(f"    analytic value {target.claimed_minimum:.9f}")
    for p in claimed_minimizers(target):
        print(f"    at {tuple(round(c, 4) for c in p)}: {target.function(p):.12f}")

# %%
# The pb2 gap is smallest on the body diagonal; the Chen gap on a face diagonal.
d = np.array([1, 1, 1]) / math.sqrt(3)
print(diff_new_pb2(d), diff_new_chen(np.array([0, -math.sqrt(0.5), math.sqrt(0.5)])))
