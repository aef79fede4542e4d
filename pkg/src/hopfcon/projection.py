"""Hypercomplex packing of bipartite states and the stereographic projection.

A state on H_2 (x) H_N packs into N quaternion coefficients
q_j = a_{0j} + a_{1j}*e2; a state on H_4 (x) H_N packs into N octonion
coefficients o_j = (a_{0j} + a_{1j}*e2) + (a_{2j} + conj(a_{3j})*e2)*e4.
The pairwise stereographic projection q_j * conj(q_k) (octonionic:
o_k * conj(o_l)) splits into a purely complex Schmidt part plus
hypercomplex parts whose squared magnitudes sum, over all pairs, to the
squared 2x2 minors of the amplitude matrix -- which is why the assembled
quantity 2 * sqrt(sum over pairs) is exactly the bipartite concurrence.

Sign convention: the projection is always the literally computed
hypercomplex product.  Its e2-part for a quaternion pair equals the
*negative* of the column minor a_{0j} a_{1k} - a_{1j} a_{0k}; only the
magnitude enters the concurrence, and the bilinear helpers below expose
the exact componentwise relation for cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SplitMismatchError
from .hypercomplex import (OCTONION_TABLE, QUATERNION_TABLE, Octonion,
                           Quaternion, oct_conj, oct_mul, quat_conj, quat_mul)
from .states import LocalUnitary2, PureState, apply_local

_QUAT_TABLE_F = QUATERNION_TABLE.astype(float)
_OCT_TABLE_F = OCTONION_TABLE.astype(float)
_QUAT_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])
_OCT_CONJ_SIGNS = np.array([1.0] + [-1.0] * 7)


@dataclass(frozen=True)
class QuaterState:
    """State as a vector of quaternion coefficients with unit total norm."""

    coefficients: tuple[Quaternion, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        total = sum(q.norm_squared() for q in self.coefficients)
        if abs(total - 1.0) > 1e-8:
            raise ValueError(f"quaternion coefficients have total norm^2 {total}, expected 1")

    def __len__(self) -> int:
        return len(self.coefficients)

    def norm_squared(self) -> float:
        return sum(q.norm_squared() for q in self.coefficients)

    def as_array(self) -> np.ndarray:
        return np.array([q.coefficients() for q in self.coefficients])


@dataclass(frozen=True)
class OctoState:
    """State as a vector of octonion coefficients with unit total norm."""

    coefficients: tuple[Octonion, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        total = sum(o.norm_squared() for o in self.coefficients)
        if abs(total - 1.0) > 1e-8:
            raise ValueError(f"octonion coefficients have total norm^2 {total}, expected 1")

    def __len__(self) -> int:
        return len(self.coefficients)

    def norm_squared(self) -> float:
        return sum(o.norm_squared() for o in self.coefficients)

    def as_array(self) -> np.ndarray:
        return np.array([o.coefficients() for o in self.coefficients])


@dataclass(frozen=True)
class QuatProjection:
    """Complex split S + C*e2 of a projected quaternion pair."""

    schmidt: complex
    concurrence_part: complex

    def reconstruct(self) -> Quaternion:
        return Quaternion.from_complex_pair(self.schmidt, self.concurrence_part)

    @property
    def concurrence_magnitude(self) -> float:
        return abs(self.concurrence_part)


@dataclass(frozen=True)
class OctProjection:
    """Quadruple-complex split s0 + s1*e2 + (s2 + s3*e2)*e4 of a projected octonion pair."""

    s0: complex
    s1: complex
    s2: complex
    s3: complex

    def reconstruct(self) -> Octonion:
        return Octonion.from_complex_quadruple(self.s0, self.s1, self.s2, self.s3)

    @property
    def hyper_norm_squared(self) -> float:
        """Squared magnitude of the entanglement-sensitive (non-complex) parts."""
        return abs(self.s1) ** 2 + abs(self.s2) ** 2 + abs(self.s3) ** 2


def quaternify(state: PureState) -> QuaterState:
    """Pack a state split as [2, N] into N quaternion coefficients.

    q_j = a_{0j} + a_{1j}*e2, indexed by the N-dimensional factor.
    """
    matrix = state.split_matrix(2)
    coeffs = tuple(Quaternion.from_complex_pair(matrix[0, j], matrix[1, j])
                   for j in range(matrix.shape[1]))
    return QuaterState(coeffs)


def octonify(state: PureState) -> OctoState:
    """Pack a state split as [4, N] into N octonion coefficients.

    o_j = (a_{0j} + a_{1j}*e2) + (a_{2j} + conj(a_{3j})*e2)*e4.  The
    conjugate on the final slot is what makes the pairwise projection
    magnitudes reduce to 2x2 minors (see oct_projection_bilinear).
    """
    matrix = state.split_matrix(4)
    coeffs = tuple(
        Octonion.from_complex_quadruple(matrix[0, j], matrix[1, j],
                                        matrix[2, j], np.conj(matrix[3, j]))
        for j in range(matrix.shape[1]))
    return OctoState(coeffs)


def quat_project(qj: Quaternion, qk: Quaternion) -> QuatProjection:
    """Stereographic projection of a quaternion pair: split of qj * conj(qk)."""
    product = quat_mul(qj, quat_conj(qk))
    schmidt, conc = product.complex_pair()
    return QuatProjection(schmidt, conc)


def oct_project(ok: Octonion, ol: Octonion) -> OctProjection:
    """Stereographic projection of an octonion pair: split of ok * conj(ol)."""
    product = oct_mul(ok, oct_conj(ol))
    return OctProjection(*product.complex_quadruple())


def quat_projection_bilinear(u, v) -> tuple[complex, complex]:
    """Schmidt and minor terms of a projected pair, directly from amplitudes.

    For columns u = (a_{0j}, a_{1j}) and v = (a_{0k}, a_{1k}) returns
    (S, C) with S = u0*conj(v0) + u1*conj(v1) and C = u0*v1 - u1*v0.
    The computed projection satisfies schmidt == S and
    concurrence_part == -C; the equality is asserted by the test suite as
    a cross-check on the quaternion multiplication table.
    """
    schmidt = u[0] * np.conj(v[0]) + u[1] * np.conj(v[1])
    minor = u[0] * v[1] - u[1] * v[0]
    return complex(schmidt), complex(minor)


def oct_projection_bilinear(u, v) -> tuple[complex, complex, complex, complex]:
    """Projection parts of an octonion pair, directly from amplitude columns.

    For 4-component columns u, v (amplitudes of the [4, N] split) with
    minors M_ij = u_i*v_j - u_j*v_i:

        s0 = sum_i u_i * conj(v_i)
        s1 = -M_01 - conj(M_23)
        s2 = -M_02 + conj(M_13)
        s3 = -M_12 - conj(M_03)

    so |s1|^2 + |s2|^2 + |s3|^2 = sum |M_ij|^2: the cross terms cancel by
    the Pluecker identity M_01*M_23 - M_02*M_13 + M_03*M_12 = 0.  The test
    suite asserts these against the literal octonion product.
    """
    def minor(i, j):
        return u[i] * v[j] - u[j] * v[i]

    s0 = sum(u[i] * np.conj(v[i]) for i in range(4))
    s1 = -minor(0, 1) - np.conj(minor(2, 3))
    s2 = -minor(0, 2) + np.conj(minor(1, 3))
    s3 = -minor(1, 2) - np.conj(minor(0, 3))
    return complex(s0), complex(s1), complex(s2), complex(s3)


def quat_pair_projections(qstate: QuaterState):
    """Projection of every coefficient pair (j, k), j < k, in lexicographic order."""
    coeffs = qstate.coefficients
    return [(j, k, quat_project(coeffs[j], coeffs[k]))
            for j in range(len(coeffs)) for k in range(j + 1, len(coeffs))]


def oct_pair_projections(ostate: OctoState):
    """Projection of every coefficient pair (k, l), k < l, in lexicographic order."""
    coeffs = ostate.coefficients
    return [(k, l, oct_project(coeffs[k], coeffs[l]))
            for k in range(len(coeffs)) for l in range(k + 1, len(coeffs))]


def _pairwise_hyper_sum(coeff_array: np.ndarray, table: np.ndarray,
                        conj_signs: np.ndarray, hyper_slice: slice) -> float:
    """Sum over j < k of the squared hypercomplex parts of coeff_j * conj(coeff_k).

    Batched form of the scalar projections above: the same structure table
    drives an einsum over all coefficient pairs at once.
    """
    conjugated = coeff_array * conj_signs
    products = np.einsum("ai,bj,ijk->abk", coeff_array, conjugated, table, optimize=True)
    hyper_sq = np.sum(products[:, :, hyper_slice] ** 2, axis=-1)
    upper = np.triu_indices(coeff_array.shape[0], k=1)
    return float(np.sum(hyper_sq[upper]))


def quat_concurrence(state: PureState) -> float:
    """Concurrence of a [2, N] state read off the quaternionic projection.

    2 * sqrt(sum over pairs j < k of |concurrence part of q_j conj(q_k)|^2).
    """
    qstate = quaternify(state)
    total = _pairwise_hyper_sum(qstate.as_array(), _QUAT_TABLE_F,
                                _QUAT_CONJ_SIGNS, slice(2, 4))
    return 2.0 * math.sqrt(total)


def oct_concurrence(state: PureState) -> float:
    """Concurrence of a [4, N] state read off the octonionic projection.

    2 * sqrt(sum over pairs k < l of the hypercomplex norm^2 of
    o_k * conj(o_l)).
    """
    ostate = octonify(state)
    total = _pairwise_hyper_sum(ostate.as_array(), _OCT_TABLE_F,
                                _OCT_CONJ_SIGNS, slice(2, 8))
    return 2.0 * math.sqrt(total)


def _complex_times_quat(z: complex, q: Quaternion) -> Quaternion:
    return quat_mul(Quaternion.from_complex_pair(z), q)


def right_module_action(qstate: QuaterState, coefficient_unitary: LocalUnitary2,
                        fiber_unitary: LocalUnitary2) -> QuaterState:
    """Local-unitary action on a length-2 quaterbit in right-module form.

    coefficient_unitary acts as a matrix across the two quaternion
    coefficients (it is the unitary on the enumerated N = 2 factor);
    fiber_unitary with parameters (a', b') acts inside each coefficient as
    right multiplication by the unit quaternion a' - conj(b')*e2, which is
    exactly the SU(2) matrix of fiber_unitary on the packed qubit.
    """
    if len(qstate) != 2:
        raise ValueError("right_module_action expects exactly 2 quaternion coefficients")
    q0, q1 = qstate.coefficients
    a, b = coefficient_unitary.a, coefficient_unitary.b
    scalar = Quaternion.from_complex_pair(fiber_unitary.a, -np.conj(fiber_unitary.b))
    new0 = quat_mul(_complex_times_quat(a, q0) + _complex_times_quat(b, q1), scalar)
    new1 = quat_mul(_complex_times_quat(-np.conj(b), q0) + _complex_times_quat(np.conj(a), q1),
                    scalar)
    return QuaterState((new0, new1))


def verify_equivariance(state: PureState, coefficient_unitary: LocalUnitary2,
                        fiber_unitary: LocalUnitary2, tol: float = 1e-10) -> bool:
    """Check that packing and local action commute on a two-qubit state.

    Route one applies the local unitaries to the state (fiber_unitary on
    the packed first qubit, coefficient_unitary on the second) and packs
    afterwards; route two acts on the packed state via
    right_module_action.  Returns True when the two resulting projections
    agree componentwise within tol.
    """
    if state.total_dim != 4:
        raise SplitMismatchError("verify_equivariance expects a two-qubit state")
    evolved = apply_local(state, fiber_unitary, coefficient_unitary)
    via_state = quaternify(evolved)
    via_module = right_module_action(quaternify(state), coefficient_unitary, fiber_unitary)
    proj_state = quat_project(*via_state.coefficients)
    proj_module = quat_project(*via_module.coefficients)
    return (abs(proj_state.schmidt - proj_module.schmidt) <= tol
            and abs(proj_state.concurrence_part - proj_module.concurrence_part) <= tol)


def transformed_schmidt_part(qstate: QuaterState,
                             coefficient_unitary: LocalUnitary2) -> complex:
    """Closed-form Schmidt part after the coefficient-matrix action alone.

    With S the Schmidt part of the untransformed pair and (a, b) the
    parameters of coefficient_unitary:

        S' = (|q1|^2 - |q0|^2) * a * b + a^2 * S - b^2 * conj(S)
    """
    if len(qstate) != 2:
        raise ValueError("transformed_schmidt_part expects exactly 2 quaternion coefficients")
    q0, q1 = qstate.coefficients
    schmidt = quat_project(q0, q1).schmidt
    a, b = coefficient_unitary.a, coefficient_unitary.b
    return ((q1.norm_squared() - q0.norm_squared()) * a * b
            + a * a * schmidt - b * b * np.conj(schmidt))
