"""
Gate catalog and effective-Hamiltonian time interpolation.

A gate ``U`` is treated as the result of a Hamiltonian acting for a
characteristic time ``tau`` (hbar = 1)::

    U(t) = sum_i exp(i phi_i t / tau) |phi_i><phi_i|

so that ``U(0) = I`` and ``U(tau) = U``.  Eigenphases live on (-pi, pi]
with eigenvalue -1 mapped to +pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import numerics as nx
from .errors import DimensionMismatchError, UnknownGateError
from .serialize import matrix_from_dict, matrix_to_dict

SQRT1_2 = 1 / math.sqrt(2)

# phases closer than this are treated as one eigenspace
PHASE_GROUP_TOL = 1e-9


def rotation(angle: float) -> np.ndarray:
    """2x2 counter-clockwise rotation, as a complex array."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


# Eigenvector matrices with the sign conventions used for the closed forms:
# the second column (the -1 eigenvector) carries an extra global phase of -1.
PHI_X = rotation(math.pi / 4)
PHI_Y = np.diag([1, 1j]) @ rotation(math.pi / 4)
PHI_H = rotation(math.pi / 8)
PHI_CNOT = np.array(
    [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, SQRT1_2, -SQRT1_2],
        [0, 0, SQRT1_2, SQRT1_2],
    ],
    dtype=complex,
)

MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "S": np.diag([1, 1j]).astype(complex),
    "T": np.diag([1, np.exp(1j * math.pi / 4)]),
    "H": SQRT1_2 * np.array([[1, 1], [1, -1]], dtype=complex),
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "BELL": SQRT1_2
    * np.array(
        [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [1, 0, -1, 0]], dtype=complex
    ),
}

GATE_NAMES = tuple(MATRICES)

_SPECTRA = {
    "I": ((0.0, 0.0), np.eye(2, dtype=complex)),
    "X": ((0.0, math.pi), PHI_X),
    "Y": ((0.0, math.pi), PHI_Y),
    "Z": ((0.0, math.pi), np.eye(2, dtype=complex)),
    "S": ((0.0, math.pi / 2), np.eye(2, dtype=complex)),
    "T": ((0.0, math.pi / 4), np.eye(2, dtype=complex)),
    "H": ((0.0, math.pi), PHI_H),
    "CNOT": ((0.0, 0.0, 0.0, math.pi), PHI_CNOT),
}


@dataclass(frozen=True)
class GateSpec:
    """A named unitary together with its spectral data.

    Attributes
    ----------
    name : str
    matrix : ndarray, shape (N, N)
        The gate, i.e. the evolution operator at ``t = tau``.
    eigenphases : ndarray, shape (N,)
        ``phi_i`` in (-pi, pi].
    eigenvectors : ndarray, shape (N, N)
        Unitary ``Phi`` whose columns pair with ``eigenphases``.
    tau : float
        Characteristic time.
    """

    name: str
    matrix: np.ndarray
    eigenphases: np.ndarray
    eigenvectors: np.ndarray
    tau: float = 1.0

    def __post_init__(self):
        if not self.tau > 0:
            raise ValueError("tau must be positive")
        m = nx.as_matrix(self.matrix)
        phi = nx.as_matrix(self.eigenvectors)
        phases = np.asarray(self.eigenphases, dtype=float)
        if m.shape != phi.shape or phases.shape != (m.shape[0],):
            raise DimensionMismatchError("matrix, eigenvectors and eigenphases disagree in size")
        if not nx.is_unitary(m):
            raise ValueError(f"gate {self.name!r} is not unitary")
        if not nx.is_unitary(phi):
            raise ValueError(f"eigenvectors of {self.name!r} are not unitary")
        if np.any(phases <= -math.pi) or np.any(phases > math.pi + 1e-12):
            raise ValueError("eigenphases must lie in (-pi, pi]")
        recon = (phi * np.exp(1j * phases)) @ nx.dagger(phi)
        if nx.max_abs(recon - m) >= 1e-10:
            raise ValueError(f"spectral data of {self.name!r} does not reproduce the matrix")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "eigenvectors", phi)
        object.__setattr__(self, "eigenphases", phases)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.exp(1j * self.eigenphases)

    def projectors(self) -> list[tuple[float, np.ndarray]]:
        """``(phase, projector)`` pairs, one per distinct eigenphase."""
        out: list[tuple[float, np.ndarray]] = []
        for k in np.argsort(self.eigenphases, kind="stable"):
            phase = float(self.eigenphases[k])
            v = self.eigenvectors[:, k]
            p = np.outer(v, np.conj(v))
            if out and abs(out[-1][0] - phase) <= PHASE_GROUP_TOL:
                out[-1] = (out[-1][0], out[-1][1] + p)
            else:
                out.append((phase, p))
        return out

    def with_tau(self, tau: float) -> "GateSpec":
        return GateSpec(self.name, self.matrix, self.eigenphases, self.eigenvectors, tau)

    def to_dict(self) -> dict:
        d = {"name": self.name, "tau": float(self.tau), "phases": [float(p) for p in self.eigenphases]}
        d.update(matrix_to_dict(self.matrix))
        d["eigenvectors"] = matrix_to_dict(self.eigenvectors)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GateSpec":
        return cls(
            name=d["name"],
            matrix=matrix_from_dict(d),
            eigenphases=np.array(d["phases"], dtype=float),
            eigenvectors=matrix_from_dict(d["eigenvectors"]),
            tau=float(d["tau"]),
        )


@dataclass(frozen=True)
class HamiltonianSpec:
    """Effective Hamiltonian ``H = sum_i omega_i |phi_i><phi_i|`` (hbar = 1)."""

    frequencies: np.ndarray
    eigenvectors: np.ndarray
    matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        v = self.eigenvectors
        h = (v * np.asarray(self.frequencies, dtype=float)) @ nx.dagger(v)
        object.__setattr__(self, "matrix", (h + nx.dagger(h)) / 2)

    @property
    def energies(self) -> np.ndarray:
        return np.asarray(self.frequencies)


def spec_from_matrix(name: str, u, tau: float = 1.0, tol: float = nx.DEFAULT_TOL) -> GateSpec:
    """Build a ``GateSpec`` for an arbitrary unitary via ``eig_normal``."""
    u = nx.as_matrix(u)
    if not nx.is_unitary(u, tol):
        raise ValueError(f"{name!r} is not unitary")
    dec = nx.eig_normal(u, tol)
    return GateSpec(name, u, dec.phases, dec.eigenvectors, tau)


def catalog(name: str, tau: float = 1.0) -> GateSpec:
    """Look up a standard gate with precomputed spectral data.

    Known names: I, X, Y, Z, S, T, H, CNOT, BELL.
    """
    key = name.upper()
    if key not in MATRICES:
        raise UnknownGateError(f"unknown gate {name!r}; choose from {', '.join(GATE_NAMES)}")
    if key in _SPECTRA:
        phases, phi = _SPECTRA[key]
        return GateSpec(key, MATRICES[key], np.array(phases), phi, tau)
    return spec_from_matrix(key, MATRICES[key], tau)


def gate_at_time(spec: GateSpec, t) -> np.ndarray:
    """Evolution operator ``U(t)``.

    ``t`` may be a scalar (returns an (N, N) array) or a 1-D array of times
    (returns an (len(t), N, N) stack).  Degenerate eigenspaces enter as a
    single projector so the result does not depend on the basis chosen
    inside them.
    """
    ts = np.asarray(t, dtype=float)
    scalar = ts.ndim == 0
    ts = np.atleast_1d(ts)
    out = np.zeros((ts.size, spec.dim, spec.dim), dtype=complex)
    for phase, proj in spec.projectors():
        out += np.exp(1j * phase * ts / spec.tau)[:, None, None] * proj
    return out[0] if scalar else out


def transfer_common_eigs(target_phi, source_phi, source_at_t) -> np.ndarray:
    """Carry a time-dependent gate to another gate with the same eigenvalues.

    Returns ``Phi_B Phi_A^dagger U_A(t) Phi_A Phi_B^dagger``.
    """
    pb = nx.as_matrix(target_phi)
    pa = nx.as_matrix(source_phi)
    ua = nx.as_matrix(source_at_t)
    if not (pb.shape == pa.shape == ua.shape):
        raise DimensionMismatchError(f"shapes {pb.shape}, {pa.shape}, {ua.shape} differ")
    w = pb @ nx.dagger(pa)
    return w @ ua @ nx.dagger(w)


def effective_hamiltonian(spec: GateSpec) -> HamiltonianSpec:
    """Frequencies ``omega_i = -phi_i / tau`` with the gate's eigenvectors."""
    return HamiltonianSpec(frequencies=-spec.eigenphases / spec.tau, eigenvectors=spec.eigenvectors)


def zero_eigenvector(spec: GateSpec) -> np.ndarray:
    """The eigenvector with eigenphase 0 (the gate's '0' eigenvector)."""
    k = int(np.argmin(np.abs(spec.eigenphases)))
    return spec.eigenvectors[:, k]
