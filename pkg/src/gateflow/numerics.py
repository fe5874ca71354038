"""
Dense small-matrix kernel.

Matrices are plain ``numpy`` arrays (``complex128`` for complex data,
``float64`` for real data).  State vectors are 1-D arrays.  Everything here
is written for desk-scale dimensions (N <= 16).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NoConvergenceError, NotNormalError

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100
MAX_DIM = 16


def as_matrix(a, dtype=complex) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D array of the given dtype."""
    m = np.asarray(a, dtype=dtype)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.size == 0:
        raise DimensionMismatchError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def _square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def kron(a, b) -> np.ndarray:
    """Kronecker product ``a (x) b``; ``a`` supplies the slow (outer) index."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.size == 0 or b.size == 0:
        raise DimensionMismatchError("kron of an empty operand")
    return np.kron(a, b)


def kron_all(*factors) -> np.ndarray:
    """Left-to-right Kronecker product of several factors."""
    out = np.asarray(factors[0])
    for f in factors[1:]:
        out = kron(out, f)
    return out


def frobenius(a, b) -> complex:
    """Frobenius inner product ``Tr[a^dagger b]``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape mismatch {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def max_abs(a) -> float:
    """Max-abs entry norm, the residual measure used throughout."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_abs(dagger(m) @ m - np.eye(m.shape[0])) < tol


def determinant(m) -> complex:
    """Determinant by LU decomposition with partial pivoting.

    Singular matrices return exactly 0.  Works for real and complex input;
    the result is always returned as a Python ``complex``.
    """
    a = as_matrix(m).copy()
    _square(a)
    n = a.shape[0]
    if n > MAX_DIM:
        raise DimensionMismatchError(f"dimension {n} exceeds {MAX_DIM}")
    det = 1.0 + 0.0j
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if a[p, k] == 0:
            return 0j
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        det *= a[k, k]
        a[k + 1:, k:] -= np.outer(a[k + 1:, k] / a[k, k], a[k, k:])
    return complex(det)


# ---------------------------------------------------------------------------
# Eigensolver for normal matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral data ``m = V diag(eigenvalues) V^dagger``.

    Attributes
    ----------
    eigenvalues : ndarray of complex, shape (N,)
    eigenvectors : ndarray of complex, shape (N, N)
        Columns are orthonormal eigenvectors.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ dagger(v)

    @property
    def phases(self) -> np.ndarray:
        return np.array([principal_phase(lam) for lam in self.eigenvalues])


def principal_phase(z: complex, tol: float = 1e-12) -> float:
    """Argument of ``z`` on the branch (-pi, pi]; -1 maps to +pi."""
    phi = math.atan2(z.imag, z.real)
    if phi <= -math.pi + tol:
        phi += 2 * math.pi
    return phi


def _jacobi_hermitian(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic complex Jacobi diagonalisation of a Hermitian matrix.

    Returns ``(diag, V)`` with ``V^dagger a V`` diagonal.
    """
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if n == 1:
        return a.diagonal().real.copy(), v
    scale = max(max_abs(a), 1.0)
    # off-diagonal target well below tol so reconstructions land inside it
    target = 1e-3 * tol * scale
    for _ in range(max_sweeps):
        off = max_abs(a - np.diag(a.diagonal()))
        if off <= target:
            return a.diagonal().real.copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= 1e-3 * target:
                    continue
                # phase rotation makes the (p, q) entry real, then a real
                # Jacobi rotation annihilates it
                w = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * r)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                g = np.array([[c, s], [-s * np.conj(w), c * np.conj(w)]], dtype=complex)
                idx = [p, q]
                a[:, idx] = a[:, idx] @ g
                a[idx, :] = dagger(g) @ a[idx, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, idx] = v[:, idx] @ g
    raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def _clusters(values: np.ndarray, gap: float) -> list[list[int]]:
    order = np.argsort(values, kind="stable")
    groups: list[list[int]] = [[int(order[0])]]
    for i in order[1:]:
        if values[i] - values[groups[-1][-1]] <= gap:
            groups[-1].append(int(i))
        else:
            groups.append([int(i)])
    return groups


def _normalize_phase(vec: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    k = int(np.argmax(np.abs(vec) > tol * max(np.max(np.abs(vec)), 1.0)))
    return vec * (np.conj(vec[k]) / abs(vec[k]))


def eig_normal(m, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a normal matrix.

    The Hermitian part ``(M + M^dagger)/2`` is diagonalised by cyclic
    Jacobi sweeps; inside each (near-)degenerate eigenspace of it the
    anti-Hermitian part ``(M - M^dagger)/2i`` is diagonalised the same way.
    Because both parts commute for a normal matrix, the combined basis
    diagonalises ``M``.

    Eigenvalues are sorted by phase in (-pi, pi]; ties are broken by the
    lexicographic order of the phase-normalised eigenvectors (first
    significant component real and positive).

    Raises
    ------
    NotNormalError
        If ``max|M M^dagger - M^dagger M| >= tol``.
    NoConvergenceError
        If a Jacobi stage exceeds ``max_sweeps``.
    """
    m = as_matrix(m)
    _square(m)
    n = m.shape[0]
    if n > MAX_DIM:
        raise DimensionMismatchError(f"dimension {n} exceeds {MAX_DIM}")
    md = dagger(m)
    if max_abs(m @ md - md @ m) >= tol:
        raise NotNormalError("matrix is not normal within tolerance")

    herm = (m + md) / 2
    anti = (m - md) / 2j
    d, v = _jacobi_hermitian(herm, tol, max_sweeps)

    scale = max(max_abs(m), 1.0)
    for group in _clusters(d, 1e-6 * scale):
        if len(group) < 2:
            continue
        vc = v[:, group]
        sub = dagger(vc) @ anti @ vc
        sub = (sub + dagger(sub)) / 2
        _, w = _jacobi_hermitian(sub, tol, max_sweeps)
        v[:, group] = vc @ w

    vecs = [_normalize_phase(v[:, k]) for k in range(n)]
    lams = [complex(np.vdot(x, m @ x)) for x in vecs]
    phases = [principal_phase(z) if abs(z) > tol else 0.0 for z in lams]

    def lexkey(x):
        return tuple(val for z in np.round(x, 9) for val in (float(z.real), float(z.imag)))

    order = sorted(range(n), key=lambda k: (round(phases[k], 9), lexkey(vecs[k])))
    vecs_out = np.column_stack([vecs[k] for k in order])
    lams_out = np.array([lams[k] for k in order])
    return EigenDecomposition(eigenvalues=lams_out, eigenvectors=vecs_out)


def expm(a, max_norm: float = 0.5, terms: int = 20) -> np.ndarray:
    """Matrix exponential by scaling and squaring with a truncated Taylor series.

    ``a`` is scaled by ``2**-s`` until its infinity norm is at most
    ``max_norm``, exponentiated with ``terms`` Taylor terms, then squared
    ``s`` times.
    """
    a = np.asarray(a)
    norm = float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0
    s = 0
    if norm > max_norm:
        s = int(math.ceil(math.log2(norm / max_norm)))
    b = a / (2.0 ** s)
    out = np.eye(a.shape[0], dtype=np.result_type(a, float))
    term = out.copy()
    for k in range(1, terms + 1):
        term = term @ b / k
        out = out + term
    for _ in range(s):
        out = out @ out
    return out
