"""
Complex -> real embedding and special-orthogonal checks.

A complex N x N matrix ``A`` is represented by a real 2N x 2N matrix by
replacing each scalar ``x + iy`` with ``[[x, -y], [y, x]]``.  Two Kronecker
orders are supported:

* ``A_FIRST``: ``Re[A] (x) I2 + Im[A] (x) J2``  (2x2 blocks on the diagonal)
* ``J_FIRST``: ``I2 (x) Re[A] + J2 (x) Im[A]``  (N x N blocks)

Each convention has its own complex structure ``J`` with ``J^2 = -I``; a
real matrix represents a complex one exactly when it commutes with it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import numerics as nx
from .errors import DimensionMismatchError, NotComplexStructuredError
from .gates import GateSpec, effective_hamiltonian
from .serialize import matrix_to_dict

I2 = np.eye(2)
J2 = np.array([[0.0, -1.0], [1.0, 0.0]])


class Convention(enum.Enum):
    A_FIRST = "A_FIRST"
    J_FIRST = "J_FIRST"


@dataclass(frozen=True)
class RealEmbedding:
    matrix: np.ndarray
    convention: Convention
    source_dim: int

    def to_dict(self) -> dict:
        d = matrix_to_dict(self.matrix)
        d["convention"] = self.convention.value
        return d


@dataclass(frozen=True)
class GeneratorMatrix:
    """Real antisymmetric generator ``Omega`` with ``U(t) = exp(Omega t)``."""

    matrix: np.ndarray

    def at_time(self, t: float) -> np.ndarray:
        return nx.expm(self.matrix * t)


def _convention(c) -> Convention:
    return c if isinstance(c, Convention) else Convention(str(c).upper())


def embed(a, convention=Convention.A_FIRST) -> RealEmbedding:
    conv = _convention(convention)
    a = nx.as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionMismatchError("only square matrices are embedded")
    re, im = a.real, a.imag
    if conv is Convention.A_FIRST:
        m = np.kron(re, I2) + np.kron(im, J2)
    else:
        m = np.kron(I2, re) + np.kron(J2, im)
    return RealEmbedding(m, conv, a.shape[0])


def j_matrix(n: int, convention=Convention.A_FIRST) -> np.ndarray:
    """Complex structure on R^{2n}: ``I_n (x) J2`` or ``J2 (x) I_n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if _convention(convention) is Convention.A_FIRST:
        return np.kron(np.eye(n), J2)
    return np.kron(J2, np.eye(n))


def convention_permutation(n: int) -> np.ndarray:
    """Perfect-shuffle ``P`` with ``P embed_A(A) P^T = embed_J(A)``.

    A_FIRST index ``2i + c`` (entry ``i``, component ``c``) moves to
    J_FIRST index ``c n + i``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p = np.zeros((2 * n, 2 * n))
    for i in range(n):
        for c in range(2):
            p[c * n + i, 2 * i + c] = 1.0
    return p


def _real_square_even(m) -> np.ndarray:
    m = np.asarray(m)
    if np.iscomplexobj(m):
        if np.any(m.imag != 0):
            raise ValueError("expected a real matrix")
        m = m.real
    m = nx.as_matrix(m, dtype=float)
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError("expected a square matrix")
    if m.shape[0] % 2:
        raise DimensionMismatchError("complex structure needs an even dimension")
    return m


def is_complex_structure(m, convention=Convention.A_FIRST, tol: float = nx.DEFAULT_TOL) -> bool:
    """True when ``m`` commutes with the convention's ``J`` within ``tol``."""
    m = _real_square_even(m)
    j = j_matrix(m.shape[0] // 2, convention)
    return nx.max_abs(m @ j - j @ m) < tol


def blocks_complex_form(m, convention=Convention.A_FIRST, tol: float = nx.DEFAULT_TOL) -> bool:
    """Every 2x2 block has the form ``[[x, -y], [y, x]]``."""
    m = _real_square_even(m)
    if _convention(convention) is Convention.J_FIRST:
        p = convention_permutation(m.shape[0] // 2)
        m = p.T @ m @ p
    b = m.reshape(m.shape[0] // 2, 2, m.shape[0] // 2, 2)
    return (
        nx.max_abs(b[:, 0, :, 0] - b[:, 1, :, 1]) < tol
        and nx.max_abs(b[:, 0, :, 1] + b[:, 1, :, 0]) < tol
    )


def unembed(e: RealEmbedding | np.ndarray, convention=None, tol: float = nx.DEFAULT_TOL) -> np.ndarray:
    """Recover the complex matrix from a complex-structured real matrix."""
    if isinstance(e, RealEmbedding):
        m, conv = e.matrix, e.convention
    else:
        m, conv = np.asarray(e), _convention(convention or Convention.A_FIRST)
    conv = _convention(conv)
    if not blocks_complex_form(m, conv, tol):
        raise NotComplexStructuredError("matrix blocks are not of the form [[x, -y], [y, x]]")
    m = _real_square_even(m)
    if conv is Convention.J_FIRST:
        p = convention_permutation(m.shape[0] // 2)
        m = p.T @ m @ p
    return m[0::2, 0::2] + 1j * m[1::2, 0::2]


def is_special_orthogonal(m, tol: float = nx.DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    if np.iscomplexobj(m):
        if np.any(m.imag != 0):
            return False
        m = m.real
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    if nx.max_abs(m.T @ m - np.eye(m.shape[0])) >= tol:
        return False
    return abs(nx.determinant(m) - 1) < tol


def so_generator(spec: GateSpec, convention=Convention.A_FIRST) -> GeneratorMatrix:
    """Embedded generator ``Omega = embed(-i H)`` so ``exp(Omega t) = embed(U(t))``."""
    h = effective_hamiltonian(spec).matrix
    omega = embed(-1j * h, convention).matrix
    # H is Hermitian only to rounding; antisymmetrise so Omega^T = -Omega holds exactly
    return GeneratorMatrix((omega - omega.T) / 2)


def hermitian_embed_check(h, tol: float = nx.DEFAULT_TOL) -> bool:
    """``embed(h)`` is symmetric: real part symmetric, imaginary part antisymmetric."""
    h = nx.as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise DimensionMismatchError("expected a square matrix")
    return nx.max_abs(h.real - h.real.T) < tol and nx.max_abs(h.imag + h.imag.T) < tol


def det_embed(a) -> float:
    """``det(embed(a))`` via the complex determinant: ``|det a|^2``."""
    return abs(nx.determinant(a)) ** 2
