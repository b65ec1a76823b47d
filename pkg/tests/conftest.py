import numpy as np
import pytest
from hypothesis import strategies as st

from varbounds import pauli, spin1_ops


@pytest.fixture(scope="session")
def paulis():
    return pauli()


@pytest.fixture(scope="session")
def spin1():
    return spin1_ops()


def bloch_vectors(max_norm=1.0):
    """Hypothesis strategy for points in the closed ball of radius ``max_norm``."""
    coord = st.floats(-1.0, 1.0, allow_nan=False)

    def shrink(v):
        v = np.array(v)
        n = np.linalg.norm(v)
        return tuple(v / n * max_norm) if n > max_norm else tuple(v)

    return st.tuples(coord, coord, coord).map(shrink)


seeds = st.integers(0, 2**64 - 1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
