"""Closed-form and numeric local time evolution of two-qubit states.

The engine evolves the Schmidt-form initial state
sqrt(lam)|00> + sqrt(1-lam)|11> under independent single-qubit
Hamiltonians H_i = r_i * n(theta_i, phi_i) . sigma and reports the
stereographic-projection trajectory.

Packing convention for trajectories: the quaterbit is indexed by the
*first* qubit and packs the *second* qubit into the e2 slot,
q_i = a_{i0} + a_{i1}*e2.  With that packing the second qubit's evolution
is a right-module scalar that cancels out of the projection, so the
Schmidt trajectory depends only on (lam, theta1, phi1, r1, t) while the
concurrence part stays pinned at sqrt(lam*(1-lam)).  Note this is the
transpose of the packing quaternify() uses for a general [2, N] split;
the cross-check tests account for the swap.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .hypercomplex import Quaternion
from .projection import QuaterState
from .states import PureState, apply_local

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True)
class LocalHamiltonianSpec:
    """Single-qubit field r * (sin t cos p, sin t sin p, cos t) . sigma."""

    theta: float
    phi: float
    r: float = 0.5

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ValueError("angles must be finite")
        if not (math.isfinite(self.r) and self.r >= 0.0):
            raise ValueError("field magnitude r must be finite and >= 0")

    def direction(self) -> np.ndarray:
        return np.array([math.sin(self.theta) * math.cos(self.phi),
                         math.sin(self.theta) * math.sin(self.phi),
                         math.cos(self.theta)])

    def matrix(self) -> np.ndarray:
        nx, ny, nz = self.direction()
        return self.r * (nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z)


@dataclass(frozen=True)
class TrajectoryPoint:
    """Projection sample: Schmidt part (complex) and concurrence magnitude."""

    t: float
    schmidt_re: float
    schmidt_im: float
    concurrence_mag: float


def pauli_propagator(spec: LocalHamiltonianSpec, t: float) -> np.ndarray:
    """exp(-i H t) for H = r * n.sigma, via cos(rt) I - i sin(rt) n.sigma."""
    angle = spec.r * t
    nx, ny, nz = spec.direction()
    n_sigma = nx * PAULI_X + ny * PAULI_Y + nz * PAULI_Z
    return math.cos(angle) * np.eye(2) - 1j * math.sin(angle) * n_sigma


def _schmidt_initial(lam: float) -> PureState:
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    amps = np.zeros(4, dtype=complex)
    amps[0] = math.sqrt(lam)
    amps[3] = math.sqrt(1.0 - lam)
    return PureState((2, 2), amps)


def evolve_closed_form(lam: float, spec1: LocalHamiltonianSpec,
                       spec2: LocalHamiltonianSpec, t: float) -> QuaterState:
    """Explicit trig expressions for the evolved quaterbit at time t.

    Returns the pair q_i = a_{i0}(t) + a_{i1}(t)*e2 (second qubit packed).
    Written out term by term, independently of any matrix product, so the
    numeric propagator route can serve as a genuine cross-oracle.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    root_lam = math.sqrt(lam)
    root_mu = math.sqrt(1.0 - lam)
    c1, s1 = math.cos(spec1.r * t), math.sin(spec1.r * t)
    c2, s2 = math.cos(spec2.r * t), math.sin(spec2.r * t)
    cth1, sth1 = math.cos(spec1.theta), math.sin(spec1.theta)
    cth2, sth2 = math.cos(spec2.theta), math.sin(spec2.theta)
    ph1 = cmath.exp(1j * spec1.phi)
    ph2 = cmath.exp(1j * spec2.phi)

    a00 = (root_lam * (c1 - 1j * s1 * cth1) * (c2 - 1j * s2 * cth2)
           - root_mu * s1 * s2 * sth1 * sth2 / (ph1 * ph2))
    a01 = -1j * (root_lam * s2 * sth2 * ph2 * (c1 - 1j * s1 * cth1)
                 + root_mu * s1 * sth1 / ph1 * (c2 + 1j * s2 * cth2))
    a10 = -1j * (root_lam * s1 * sth1 * ph1 * (c2 - 1j * s2 * cth2)
                 + root_mu * s2 * sth2 / ph2 * (c1 + 1j * s1 * cth1))
    a11 = (root_mu * (c1 + 1j * s1 * cth1) * (c2 + 1j * s2 * cth2)
           - root_lam * s1 * s2 * sth1 * sth2 * ph1 * ph2)

    return QuaterState((Quaternion.from_complex_pair(a00, a01),
                        Quaternion.from_complex_pair(a10, a11)))


def schmidt_trajectory(lam: float, spec1: LocalHamiltonianSpec,
                       times) -> list[TrajectoryPoint]:
    """Closed-form projection trajectory; independent of the second Hamiltonian.

    At each time, with s = sin(r1 t), c = cos(r1 t):

        Re S' = (2 lam - 1) s sin(theta1) (s cos(theta1) cos(phi1) + c sin(phi1))
        Im S' = (2 lam - 1) s sin(theta1) (c cos(phi1) - s cos(theta1) sin(phi1))

    and the concurrence magnitude is the constant sqrt(lam * (1 - lam)).
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError("lam must lie in [0, 1]")
    weight = 2.0 * lam - 1.0
    conc = math.sqrt(lam * (1.0 - lam))
    cth, sth = math.cos(spec1.theta), math.sin(spec1.theta)
    cph, sph = math.cos(spec1.phi), math.sin(spec1.phi)
    points = []
    for t in times:
        c, s = math.cos(spec1.r * t), math.sin(spec1.r * t)
        re = weight * s * sth * (s * cth * cph + c * sph)
        im = weight * s * sth * (c * cph - s * cth * sph)
        points.append(TrajectoryPoint(float(t), re + 0.0, im + 0.0, conc))
    return points


def evolve_numeric(state: PureState, spec1: LocalHamiltonianSpec,
                   spec2: LocalHamiltonianSpec, t: float) -> PureState:
    """Exact local evolution of a two-qubit state via the Pauli propagators."""
    return apply_local(state, pauli_propagator(spec1, t), pauli_propagator(spec2, t))


def schmidt_initial_state(lam: float) -> PureState:
    """The Schmidt-form initial state sqrt(lam)|00> + sqrt(1-lam)|11>."""
    return _schmidt_initial(lam)
