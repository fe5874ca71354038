"""
Bloch-sphere geometry for single qubits.

States are 1-D complex arrays of length 2.  A state ``|theta, phi>`` is
``(cos(theta/2), sin(theta/2) e^{i phi})``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, ZeroVectorError
from .gates import GateSpec, gate_at_time, zero_eigenvector
from .serialize import csv_text

TWO_PI = 2 * math.pi
POLE_TOL = 1e-12

TRAJECTORY_HEADER = ["t", "re0", "im0", "re1", "im1", "theta", "phi", "x", "y", "z", "imag_residue"]


@dataclass(frozen=True)
class BlochPoint:
    theta: float
    phi: float

    @property
    def cart(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])

    @classmethod
    def from_cart(cls, xyz) -> "BlochPoint":
        x, y, z = (float(c) for c in np.asarray(xyz, dtype=float) / np.linalg.norm(xyz))
        theta = math.acos(max(-1.0, min(1.0, z)))
        if math.hypot(x, y) < POLE_TOL:
            return cls(theta, 0.0)
        return cls(theta, _wrap_phi(math.atan2(y, x)))


def _wrap_phi(phi: float) -> float:
    phi = math.fmod(phi, TWO_PI)
    if phi < 0:
        phi += TWO_PI
    if phi >= TWO_PI:
        phi = 0.0
    return phi


def qubit_from_angles(theta: float, phi: float) -> np.ndarray:
    return np.array([math.cos(theta / 2), math.sin(theta / 2) * complex(math.cos(phi), math.sin(phi))])


def _as_qubit(state) -> np.ndarray:
    psi = np.asarray(state, dtype=complex).reshape(-1)
    if psi.shape != (2,):
        raise DimensionMismatchError(f"expected a 2-component state, got {np.shape(state)}")
    return psi


def bloch_point(state) -> BlochPoint:
    """Polar angles of a qubit state, independent of its global phase.

    The state is normalised and its global phase fixed so that the first
    non-zero component is real and non-negative.  At the poles the azimuth
    is reported as 0.
    """
    psi = _as_qubit(state)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ZeroVectorError("cannot place the zero vector on the Bloch sphere")
    a, b = psi / norm
    ra, rb = abs(a), abs(b)
    theta = 2 * math.atan2(rb, ra)
    if ra < POLE_TOL or rb < POLE_TOL:
        return BlochPoint(theta, 0.0)
    phi = math.atan2(b.imag, b.real) - math.atan2(a.imag, a.real)
    return BlochPoint(theta, _wrap_phi(phi))


def rebit_deviation(state) -> float:
    """Distance of a state from the real (rebit) great circle.

    Minimum over global phases ``chi`` of ``||Im(e^{i chi} psi)||``.  With
    ``psi = u + i v``::

        min^2 = (|u|^2 + |v|^2)/2 - sqrt((|u|^2 - |v|^2)^2 + 4 (u.v)^2)/2
    """
    psi = np.asarray(state, dtype=complex).reshape(-1)
    u, v = psi.real, psi.imag
    uu, vv, uv = float(u @ u), float(v @ v), float(u @ v)
    sq = 0.5 * (uu + vv) - 0.5 * math.sqrt((uu - vv) ** 2 + 4 * uv * uv)
    return math.sqrt(max(sq, 0.0))


@dataclass(frozen=True)
class Trajectory:
    """Sampled evolution of a qubit under a time-interpolated gate.

    Per-sample arrays share their first axis.
    """

    times: np.ndarray
    states: np.ndarray
    points: tuple[BlochPoint, ...]
    imag_residue: np.ndarray

    def __len__(self) -> int:
        return len(self.times)

    @property
    def cart(self) -> np.ndarray:
        return np.array([p.cart for p in self.points])

    def rows(self):
        for t, psi, p, r in zip(self.times, self.states, self.points, self.imag_residue):
            yield (t, psi[0].real, psi[0].imag, psi[1].real, psi[1].imag, p.theta, p.phi, *p.cart, r)

    def to_csv(self) -> str:
        return csv_text(TRAJECTORY_HEADER, self.rows())


def sample_trajectory(spec: GateSpec, initial, n_samples: int, t_max: float) -> Trajectory:
    """Evolve ``initial`` under ``spec`` at ``n_samples`` times spread evenly on [0, t_max]."""
    if spec.dim != 2:
        raise DimensionMismatchError(f"trajectories need a 2x2 gate, {spec.name} is {spec.dim}x{spec.dim}")
    if n_samples < 2:
        raise ValueError("need at least two samples")
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    psi0 = _as_qubit(initial)
    psi0 = psi0 / np.linalg.norm(psi0)
    times = np.linspace(0.0, t_max, n_samples)
    states = gate_at_time(spec, times) @ psi0
    points = tuple(bloch_point(s) for s in states)
    residue = np.array([rebit_deviation(s) for s in states])
    return Trajectory(times, states, points, residue)


def latitude_residual(traj: Trajectory, axis: BlochPoint) -> float:
    """How far a trajectory strays from a single latitude about ``axis``."""
    heights = traj.cart @ axis.cart
    return float(np.max(np.abs(heights - heights[0])))


def gate_axis(spec: GateSpec) -> BlochPoint:
    """Bloch point of the gate's phase-0 eigenvector."""
    return bloch_point(zero_eigenvector(spec))
