"""
Two-qubit evolution under an interaction Hamiltonian.

Basis order is (|00>, |01>, |10>, |11>); the first (control) qubit is the
slow Kronecker index.  Self-Hamiltonians are taken to be zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import numerics as nx
from .errors import DimensionMismatchError
from .gates import MATRICES, PHI_CNOT, GateSpec
from .serialize import csv_text

BELL_HEADER = ["t", "concurrence", "re00", "im00", "re01", "im01", "re10", "im10", "re11", "im11"]


@dataclass(frozen=True)
class InteractionSpec:
    """Joint eigenstates (columns, ordered 00, 01, 10, 11) and their frequencies."""

    frequencies: np.ndarray
    eigenstates: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.frequencies, dtype=float).reshape(-1)
        v = nx.as_matrix(self.eigenstates)
        if w.shape != (4,) or v.shape != (4, 4):
            raise DimensionMismatchError("an interaction spec needs 4 frequencies and a 4x4 eigenstate matrix")
        if not nx.is_unitary(v):
            raise ValueError("eigenstates are not orthonormal")
        object.__setattr__(self, "frequencies", w)
        object.__setattr__(self, "eigenstates", v)

    @property
    def grid(self) -> np.ndarray:
        """Frequencies as a 2x2 array ``omega[i, j]``."""
        return self.frequencies.reshape(2, 2)

    def unitary(self, t: float) -> np.ndarray:
        v = self.eigenstates
        return (v * np.exp(-1j * self.frequencies * t)) @ nx.dagger(v)


def interaction_from_gate(spec: GateSpec) -> InteractionSpec:
    if spec.dim != 4:
        raise DimensionMismatchError(f"{spec.name} is not a two-qubit gate")
    return InteractionSpec(-spec.eigenphases / spec.tau, spec.eigenvectors)


def cnot_interaction(tau: float = 1.0) -> InteractionSpec:
    """CNOT interaction: omega_00 = omega_01 = omega_10 = 0, omega_11 = -pi/tau."""
    return InteractionSpec(np.array([0.0, 0.0, 0.0, -math.pi / tau]), PHI_CNOT)


def _as_pair(state) -> np.ndarray:
    psi = np.asarray(state, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise DimensionMismatchError(f"expected a 4-component state, got {np.shape(state)}")
    return psi


def tensor_state(a, b) -> np.ndarray:
    psi = nx.kron(np.asarray(a, dtype=complex).reshape(-1), np.asarray(b, dtype=complex).reshape(-1))
    return psi / np.linalg.norm(psi)


def evolve_bipartite(spec: InteractionSpec, initial, t: float) -> np.ndarray:
    """``sum_ij exp(-i omega_ij t) |phi_ij><phi_ij|Psi_0>``."""
    psi0 = _as_pair(initial)
    v = spec.eigenstates
    amps = nx.dagger(v) @ psi0
    return v @ (np.exp(-1j * spec.frequencies * t) * amps)


def cnot_at_time(t: float, tau: float = 1.0) -> np.ndarray:
    """Closed-form CNOT path: identity on the control-0 block, X(t) on control-1."""
    if not tau > 0:
        raise ValueError("tau must be positive")
    e = np.exp(1j * math.pi * t / tau)
    u = np.eye(4, dtype=complex)
    u[2:, 2:] = 0.5 * np.array([[1 + e, 1 - e], [1 - e, 1 + e]])
    return u


def bell_prepare(basis_index: int, t: float, tau: float = 1.0) -> np.ndarray:
    """Hadamard on the first qubit of a basis state, then the CNOT path to time ``t``."""
    if basis_index not in range(4):
        raise ValueError(f"basis index must be 0..3, got {basis_index}")
    psi = np.zeros(4, dtype=complex)
    psi[basis_index] = 1.0
    psi = nx.kron(MATRICES["H"], np.eye(2)) @ psi
    return cnot_at_time(t, tau) @ psi


def concurrence(state) -> float:
    """Pure-state concurrence ``2 |alpha delta - beta gamma|``."""
    a, b, c, d = _as_pair(state)
    return float(min(2 * abs(a * d - b * c), 1.0))


def phase_factorizable(spec: InteractionSpec, tol: float = nx.DEFAULT_TOL) -> bool:
    """True when ``omega_ij = omega_i^A + omega_j^B`` is solvable."""
    w = spec.grid
    return abs(w[0, 0] + w[1, 1] - w[0, 1] - w[1, 0]) < tol


def bell_path(basis_index: int, n_samples: int, tau: float = 1.0):
    """``(times, states, concurrences)`` along the preparation path on [0, tau]."""
    if n_samples < 2:
        raise ValueError("need at least two samples")
    times = np.linspace(0.0, tau, n_samples)
    states = np.array([bell_prepare(basis_index, t, tau) for t in times])
    conc = np.array([concurrence(s) for s in states])
    return times, states, conc


def bell_csv(basis_index: int, n_samples: int, tau: float = 1.0) -> str:
    times, states, conc = bell_path(basis_index, n_samples, tau)
    rows = (
        (t, c, *(x for z in psi for x in (z.real, z.imag)))
        for t, psi, c in zip(times, states, conc)
    )
    return csv_text(BELL_HEADER, rows)
