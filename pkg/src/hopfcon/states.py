"""Pure multipartite states as complex amplitude vectors with explicit factor dimensions.

Amplitudes are stored row-major over the ket labels, leftmost factor most
significant: for dims (2, 2, 2) the amplitude of |ijk> sits at index
4*i + 2*j + k.  Regrouping a multi-qubit state into a bipartition takes the
contiguous prefix of factors as the left side and is a pure reindexing.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (DimensionMismatchError, NormalizationError,
                     SplitMismatchError, ZeroNormError)

NORM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class PureState:
    """Normalized pure state over an ordered list of tensor factors."""

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).copy()
        amps.flags.writeable = False
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "amplitudes", amps)
        if any(d < 2 for d in self.dims):
            raise DimensionMismatchError(f"every factor dimension must be >= 2, got {self.dims}")
        if amps.shape != (int(np.prod(self.dims)),):
            raise DimensionMismatchError(
                f"expected {int(np.prod(self.dims))} amplitudes for dims {self.dims}, "
                f"got shape {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise NormalizationError(
                f"state norm {norm} deviates from 1 by more than {NORM_TOLERANCE}; "
                "use make_state to renormalize near-unit input")

    @property
    def total_dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def split_matrix(self, left_dim: int) -> np.ndarray:
        """Amplitudes as a left_dim x (total/left_dim) matrix over a prefix bipartition.

        The left factor must be a contiguous prefix of the stored factors
        whose dimensions multiply exactly to ``left_dim``.
        """
        prod = 1
        for d in self.dims:
            if prod == left_dim:
                break
            prod *= d
        if prod != left_dim:
            raise SplitMismatchError(
                f"cannot split dims {self.dims} with a left factor of dimension {left_dim}")
        return self.amplitudes.reshape(left_dim, self.total_dim // left_dim)


@dataclass(frozen=True)
class LocalUnitary2:
    """SU(2) element parameterized by (a, b) with |a|^2 + |b|^2 = 1.

    The induced matrix is [[a, b], [-conj(b), conj(a)]].
    """

    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0) > 1e-12:
            raise ValueError("|a|^2 + |b|^2 must equal 1 within 1e-12")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b],
                         [-np.conj(self.b), np.conj(self.a)]])


IDENTITY_UNITARY = LocalUnitary2(1.0, 0.0)


def make_state(dims, amplitudes) -> PureState:
    """Validate and exactly renormalize an amplitude vector.

    The input norm must already be within NORM_TOLERANCE of 1; an (almost)
    zero vector raises ZeroNormError, anything else out of tolerance raises
    NormalizationError.
    """
    amps = np.asarray(amplitudes, dtype=complex).ravel()
    dims = tuple(int(d) for d in dims)
    if amps.size != int(np.prod(dims)):
        raise DimensionMismatchError(
            f"dims {dims} require {int(np.prod(dims))} amplitudes, got {amps.size}")
    norm = float(np.linalg.norm(amps))
    if norm < 1e-9:
        raise ZeroNormError("state vector has zero norm")
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise NormalizationError(f"state norm {norm} deviates from 1 by more than {NORM_TOLERANCE}")
    return PureState(dims, amps / norm)


def ghz_state(m: int) -> PureState:
    """m-qubit state (|0...0> + |1...1>)/sqrt(2)."""
    if m < 2:
        raise ValueError("ghz_state requires at least 2 qubits")
    amps = np.zeros(2 ** m, dtype=complex)
    amps[0] = amps[-1] = 1.0 / math.sqrt(2.0)
    return PureState((2,) * m, amps)


def w_state(m: int) -> PureState:
    """m-qubit state with equal weight 1/sqrt(m) on every single-excitation ket."""
    if m < 2:
        raise ValueError("w_state requires at least 2 qubits")
    amps = np.zeros(2 ** m, dtype=complex)
    for i in range(m):
        amps[2 ** i] = 1.0 / math.sqrt(m)
    return PureState((2,) * m, amps)


def random_state(seed: int, dims) -> PureState:
    """Haar-like random pure state: i.i.d. complex normal amplitudes, normalized."""
    rng = np.random.default_rng(seed)
    dims = tuple(int(d) for d in dims)
    n = int(np.prod(dims))
    amps = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return PureState(dims, amps / np.linalg.norm(amps))


def _as_matrix(u) -> np.ndarray:
    if isinstance(u, LocalUnitary2):
        return u.matrix
    return np.asarray(u, dtype=complex)


def apply_local(state: PureState, u_left, u_right) -> PureState:
    """Apply (u_left tensor u_right) across the prefix bipartition the shapes select.

    u_left acts on the contiguous prefix of factors matching its dimension,
    u_right on the rest; either may be a LocalUnitary2 or a square array.
    """
    u_left = _as_matrix(u_left)
    u_right = _as_matrix(u_right)
    if u_left.ndim != 2 or u_left.shape[0] != u_left.shape[1]:
        raise DimensionMismatchError("u_left must be a square matrix")
    if u_right.ndim != 2 or u_right.shape[0] != u_right.shape[1]:
        raise DimensionMismatchError("u_right must be a square matrix")
    matrix = state.split_matrix(u_left.shape[0])
    if u_right.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(
            f"u_right of dimension {u_right.shape[0]} does not match right factor "
            f"of dimension {matrix.shape[1]}")
    transformed = u_left @ matrix @ u_right.T
    return PureState(state.dims, transformed.ravel())


def random_local_unitary(rng: np.random.Generator) -> LocalUnitary2:
    """SU(2) element from two normalized complex Gaussians."""
    v = rng.standard_normal(4)
    a = complex(v[0], v[1])
    b = complex(v[2], v[3])
    scale = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    return LocalUnitary2(a / scale, b / scale)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed n x n unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases /= np.abs(phases)
    return q * phases


def index_of(labels, dims) -> int:
    """Row-major mixed-radix encoding of ket labels."""
    if len(labels) != len(dims):
        raise DimensionMismatchError("label count must match factor count")
    index = 0
    for label, dim in zip(labels, dims):
        if not 0 <= label < dim:
            raise ValueError(f"label {label} out of range for dimension {dim}")
        index = index * dim + label
    return index


def labels_of(index: int, dims) -> tuple[int, ...]:
    """Inverse of index_of."""
    labels = []
    for dim in reversed(dims):
        labels.append(index % dim)
        index //= dim
    if index:
        raise ValueError("index out of range for the given dims")
    return tuple(reversed(labels))


def state_to_json(state: PureState) -> str:
    payload = {
        "dims": list(state.dims),
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    return json.dumps(payload)


def state_from_json(text: str) -> PureState:
    payload = json.loads(text)
    try:
        dims = payload["dims"]
        pairs = payload["amplitudes"]
    except (KeyError, TypeError) as exc:
        raise DimensionMismatchError("state JSON must carry 'dims' and 'amplitudes'") from exc
    amps = np.array([complex(re, im) for re, im in pairs])
    return make_state(dims, amps)


def save_state(state: PureState, path) -> None:
    Path(path).write_text(state_to_json(state))


def load_state(path) -> PureState:
    return state_from_json(Path(path).read_text())
