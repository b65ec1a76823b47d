"""Plain-text matrix and state files.

Matrix file::

    # optional comments
    dim 2
    0 0  1 0
    1 0  0 0

Each of the ``d`` rows holds ``2d`` reals as interleaved ``(re, im)`` pairs.
A state file starts with ``pure <d>`` followed by one row of ``2d`` reals,
or ``mixed <d>`` followed by a matrix block.
"""

from pathlib import Path

import numpy as np

from .core import validate_observable, validate_state
from .errors import FormatError

__all__ = [
    "format_matrix",
    "format_state",
    "parse_matrix",
    "parse_state",
    "read_observable",
    "read_state",
]


def _lines(text):
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def _header(line, keywords):
    parts = line.split()
    if len(parts) != 2 or parts[0] not in keywords:
        raise FormatError(f"expected '<{'|'.join(keywords)}> <d>', got {line!r}")
    try:
        d = int(parts[1])
    except ValueError:
        raise FormatError(f"bad dimension in {line!r}") from None
    if d < 1:
        raise FormatError(f"dimension must be positive, got {d}")
    return parts[0], d


def _row(line, d):
    try:
        vals = [float(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"non-numeric entry in {line!r}") from None
    if len(vals) != 2 * d:
        raise FormatError(f"expected {2 * d} reals per row, got {len(vals)}")
    pairs = np.array(vals).reshape(d, 2)
    return pairs[:, 0] + 1j * pairs[:, 1]


def _block(rows, d):
    if len(rows) != d:
        raise FormatError(f"expected {d} matrix rows, got {len(rows)}")
    return np.array([_row(r, d) for r in rows])


def parse_matrix(text):
    """Parse a matrix file body into a complex ndarray (unvalidated)."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty matrix file")
    _, d = _header(lines[0], ("dim",))
    return _block(lines[1:], d)


def parse_state(text):
    lines = _lines(text)
    if not lines:
        raise FormatError("empty state file")
    kind, d = _header(lines[0], ("pure", "mixed"))
    if kind == "pure":
        if len(lines) != 2:
            raise FormatError("pure state needs exactly one amplitude row")
        return validate_state(_row(lines[1], d))
    return validate_state(_block(lines[1:], d))


def read_observable(path):
    return validate_observable(parse_matrix(Path(path).read_text()))


def read_state(path):
    return parse_state(Path(path).read_text())


def _fmt_row(values):
    return " ".join(f"{v.real:.17g} {v.imag:.17g}" for v in values)


def format_matrix(m):
    m = np.asarray(m, dtype=complex)
    return "\n".join([f"dim {m.shape[0]}"] + [_fmt_row(r) for r in m]) + "\n"


def format_state(state):
    state = validate_state(state)
    if state.is_pure:
        return f"pure {state.dim}\n{_fmt_row(state.data)}\n"
    body = format_matrix(state.data).split("\n", 1)[1]
    return f"mixed {state.dim}\n{body}"
