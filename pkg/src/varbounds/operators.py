"""Operators, state families and seeded random generators.

Random draws use a counter-based SplitMix64 stream: draw ``k`` under seed
``s`` is ``mix64(s + (k + 1) * GOLDEN)``, so output depends only on
``(seed, k)`` and every generator consumes a fixed number of draws.
Gaussians come from the Box-Muller transform (no rejection sampling).
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass

import numpy as np

from .core import Observable, QuantumState, validate_state
from .errors import BadDimension, BlochNormExceeded, FormatError

__all__ = [
    "BlochVector",
    "example1_state",
    "example2_state",
    "haar_random_pure",
    "mix_seed",
    "parse_real",
    "parse_state_spec",
    "pauli",
    "pure_from_bloch",
    "qubit_from_bloch",
    "random_density",
    "random_hermitian",
    "spin1_ops",
    "standard_normals",
    "uniforms",
]

GOLDEN = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1
BLOCH_TOL = 1e-12


# -- constant operators -------------------------------------------------------

def pauli():
    """``(sigma_x, sigma_y, sigma_z)``."""
    sx = Observable([[0, 1], [1, 0]])
    sy = Observable([[0, -1j], [1j, 0]])
    sz = Observable([[1, 0], [0, -1]])
    return sx, sy, sz


def spin1_ops():
    """``(L_x, L_y, L_z)`` for spin 1, hbar = 1, basis order ``|1>, |0>, |-1>``."""
    r = 1 / math.sqrt(2)
    lx = Observable(r * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
    ly = Observable(r * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]]))
    lz = Observable(np.diag([1.0, 0.0, -1.0]))
    return lx, ly, lz


# -- qubit / example states ---------------------------------------------------

@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def __post_init__(self):
        n2 = self.x * self.x + self.y * self.y + self.z * self.z
        if not math.isfinite(n2) or n2 > 1.0 + BLOCH_TOL:
            raise BlochNormExceeded(f"Bloch vector norm {math.sqrt(n2):.12g} exceeds 1")

    @property
    def norm(self):
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def as_array(self):
        return np.array([self.x, self.y, self.z])


def _bloch(r):
    if isinstance(r, BlochVector):
        return r
    x, y, z = (float(c) for c in r)
    return BlochVector(x, y, z)


def qubit_from_bloch(r):
    """Density matrix ``(I + x sx + y sy + z sz) / 2``."""
    x, y, z = _bloch(r)
    rho = 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]])
    return validate_state(rho)


def example1_bloch(theta):
    c = math.cos(theta) / math.sqrt(2)
    return BlochVector(c, c, math.sin(theta))


def pure_from_bloch(r):
    """State vector whose density matrix is ``qubit_from_bloch(r)``, for ``|r| = 1``."""
    r = _bloch(r)
    if abs(r.norm - 1.0) > BLOCH_TOL:
        raise BlochNormExceeded(f"pure qubit needs |r| = 1, got {r.norm:.12g}")
    x, y, z = r
    # pick the branch with the larger normalizer to avoid 0/0 at the poles
    if z >= 0:
        v = np.array([1 + z, x + 1j * y]) / math.sqrt(2 * (1 + z))
    else:
        v = np.array([x - 1j * y, 1 - z]) / math.sqrt(2 * (1 - z))
    return validate_state(v / np.linalg.norm(v))


def example1_state(theta):
    """Pure qubit with Bloch vector ``(cos t / sqrt2, cos t / sqrt2, sin t)``.

    Returned as a state vector, so variances that vanish analytically come
    out at round-off level (~1e-32) instead of ~1e-16 for a density matrix.
    """
    return pure_from_bloch(example1_bloch(theta))


def example2_state(theta, phi):
    """Spin-1 state ``sin t cos p |1> + sin t sin p |0> + cos t |-1>``."""
    st = math.sin(theta)
    v = np.array([st * math.cos(phi), st * math.sin(phi), math.cos(theta)], dtype=complex)
    return validate_state(v)


# -- seeded randomness --------------------------------------------------------

def _mix64(z):
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


def mix_seed(seed, index):
    """Derive a child seed from ``(seed, index)`` with the SplitMix64 finalizer."""
    z = np.array([(int(seed) + (int(index) + 1) * GOLDEN) & _MASK], dtype=np.uint64)
    return int(_mix64(z)[0])


def uniforms(seed, n):
    """``n`` uniforms in the open interval (0, 1), the first ``n`` draws under ``seed``."""
    k = np.arange(1, n + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = _mix64(np.uint64(int(seed) & _MASK) + k * np.uint64(GOLDEN))
    return ((z >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53


def standard_normals(seed, n):
    """``n`` standard normals via Box-Muller on ``2 * ceil(n / 2)`` uniforms."""
    m = (n + 1) // 2
    u = uniforms(seed, 2 * m)
    radius = np.sqrt(-2.0 * np.log(u[:m]))
    angle = 2.0 * np.pi * u[m:]
    return np.concatenate([radius * np.cos(angle), radius * np.sin(angle)])[:n]


def _check_dim(dim):
    if int(dim) != dim or dim < 2:
        raise BadDimension(f"dimension must be an integer >= 2, got {dim!r}")
    return int(dim)


def _complex_gaussian(seed, shape):
    size = int(np.prod(shape))
    g = standard_normals(seed, 2 * size)
    return (g[:size] + 1j * g[size:]).reshape(shape)


def haar_random_pure(dim, seed):
    """Haar-random pure state: a normalized complex Gaussian vector."""
    dim = _check_dim(dim)
    v = _complex_gaussian(seed, (dim,))
    return QuantumState(_readonly(v / np.linalg.norm(v)), "pure")


def random_density(dim, seed):
    """Ginibre density matrix ``G G^H / Tr(G G^H)``."""
    dim = _check_dim(dim)
    g = _complex_gaussian(seed, (dim, dim))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return validate_state(rho / np.trace(rho).real)


def random_hermitian(dim, seed):
    dim = _check_dim(dim)
    g = _complex_gaussian(seed, (dim, dim))
    return Observable(0.5 * (g + g.conj().T))


def _readonly(a):
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


# -- textual specifiers -------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and type(node.value) in (int, float):
        return float(node.value)
    if isinstance(node, ast.Name) and node.id == "pi":
        return math.pi
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_node(node.left), _eval_node(node.right))
    raise FormatError("only numbers, 'pi' and + - * / are allowed")


def parse_real(text):
    """Parse a real number, allowing ``pi`` arithmetic such as ``-pi/4`` or ``2*pi``."""
    try:
        value = _eval_node(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError, FormatError) as exc:
        raise FormatError(f"cannot parse number {text!r}: {exc}") from None
    if not math.isfinite(value):
        raise FormatError(f"non-finite number {text!r}")
    return value


def _args(body, count, name):
    parts = body.split(",") if body else []
    if len(parts) != count:
        raise FormatError(f"'{name}:' expects {count} comma-separated values")
    return parts


def _parse_int(text):
    try:
        return int(text.strip(), 0)
    except ValueError:
        raise FormatError(f"expected an integer, got {text!r}") from None


def parse_state_spec(spec):
    """Build a state from ``bloch:x,y,z``, ``example1:theta``,
    ``example2:theta,phi``, ``haar:dim,seed`` or ``file:path``."""
    kind, sep, body = spec.partition(":")
    if not sep:
        raise FormatError(f"state specifier {spec!r} lacks a 'kind:' prefix")
    if kind == "bloch":
        return qubit_from_bloch([parse_real(p) for p in _args(body, 3, kind)])
    if kind == "example1":
        return example1_state(parse_real(_args(body, 1, kind)[0]))
    if kind == "example2":
        theta, phi = (parse_real(p) for p in _args(body, 2, kind))
        return example2_state(theta, phi)
    if kind == "haar":
        dim, seed = (_parse_int(p) for p in _args(body, 2, kind))
        return haar_random_pure(dim, seed)
    if kind == "file":
        from .textio import read_state

        try:
            return read_state(body)
        except OSError as exc:
            raise FormatError(f"cannot read state file: {exc}") from None
    raise FormatError(f"unknown state kind {kind!r}")
