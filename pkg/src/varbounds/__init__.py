"""Variance-based sum uncertainty relations for N observables.

The main entry points are :func:`bound_new` and :func:`compare_all`; the
qubit closed forms live in :mod:`varbounds.qubit` and the randomized audit
and Bloch-ball minimization in :mod:`varbounds.verifier`.
"""

from .bounds import (
    BoundReport,
    bound_chen,
    bound_new,
    bound_new_form15,
    bound_pb1,
    bound_pb1_form13,
    bound_pb2,
    compare_all,
    mp_sum1,
    mp_sum2,
    robertson,
    schrodinger,
    sum_of_variances,
)
from .core import (
    Observable,
    QuantumState,
    Tolerance,
    anticommutator,
    commutator,
    expectation,
    std_dev,
    validate_observable,
    validate_state,
    variance,
)
from .operators import (
    BlochVector,
    example1_state,
    example2_state,
    haar_random_pure,
    pauli,
    qubit_from_bloch,
    random_density,
    random_hermitian,
    spin1_ops,
)

__version__ = "0.1.0"
