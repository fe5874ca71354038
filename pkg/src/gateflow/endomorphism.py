"""
Frobenius-orthonormal operator basis of End(R^{2^n}).

Each basis element is ``2^{-n/2} e_{i_n} (x) ... (x) e_{i_1}`` with
``e_0 = I``, ``e_1 = X``, ``e_2 = J``, ``e_3 = Z`` and flat index
``i = sum_k i_k 4^{k-1}``.  Digit tuples are stored most-significant first,
``(i_n, ..., i_1)``; position ``k`` counts Kronecker factors from the right.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import numerics as nx
from .errors import DimensionMismatchError, IndexOutOfRangeError
from .realspace import Convention, _convention, embed

MAX_N = 4
COMMUTE_TOL = 1e-12

E = (
    np.eye(2),
    np.array([[0.0, 1.0], [1.0, 0.0]]),
    np.array([[0.0, -1.0], [1.0, 0.0]]),
    np.array([[1.0, 0.0], [0.0, -1.0]]),
)
E_NAMES = ("I", "X", "J", "Z")


class SymmetryClass(enum.Enum):
    SYMMETRIC = "SYMMETRIC"
    ANTISYMMETRIC = "ANTISYMMETRIC"


@dataclass(frozen=True)
class BasisElement:
    n: int
    digits: tuple[int, ...]
    index: int
    matrix: np.ndarray

    @property
    def label(self) -> str:
        return "(x)".join(E_NAMES[d] for d in self.digits)

    def digit_at(self, k: int) -> int:
        """Digit ``i_k`` at Kronecker position ``k`` (1 = rightmost)."""
        return self.digits[self.n - k]


@dataclass(frozen=True)
class BasisReport:
    count: int
    max_off_diagonal: float
    max_diagonal_error: float

    def passed(self, tol: float) -> bool:
        return self.max_off_diagonal < tol and self.max_diagonal_error < tol


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}, got {n}")


def index_to_digits(n: int, index: int) -> tuple[int, ...]:
    if not 0 <= index < 4 ** n:
        raise IndexOutOfRangeError(f"index {index} outside 0..{4 ** n - 1}")
    return tuple((index // 4 ** (k - 1)) % 4 for k in range(n, 0, -1))


def digits_to_index(digits) -> int:
    out = 0
    for d in digits:
        if d not in range(4):
            raise ValueError(f"digit {d} not in 0..3")
        out = 4 * out + d
    return out


@lru_cache(maxsize=None)
def basis_element(n: int, index: int) -> BasisElement:
    _check_n(n)
    digits = index_to_digits(n, index)
    m = nx.kron_all(*(E[d] for d in digits)) / 2 ** (n / 2)
    m.setflags(write=False)
    return BasisElement(n, digits, index, m)


def basis(n: int) -> list[BasisElement]:
    return [basis_element(n, i) for i in range(4 ** n)]


def basis_stack(n: int) -> np.ndarray:
    """All basis matrices flattened into rows, shape (4^n, 4^n)."""
    return np.array([b.matrix.ravel() for b in basis(n)])


def verify_basis(n: int, tol: float = 1e-12) -> BasisReport:
    """Pairwise Frobenius products against the Kronecker delta."""
    _check_n(n)
    stack = basis_stack(n)
    gram = stack @ stack.T
    count = gram.shape[0]
    diag = np.abs(np.diag(gram) - 1.0)
    off = np.abs(gram - np.diag(np.diag(gram)))
    return BasisReport(count, float(off.max()), float(diag.max()))


def classify(b: BasisElement) -> SymmetryClass:
    """Odd number of J factors means antisymmetric.

    The digit rule is cross-checked against the transpose and a mismatch
    raises ``AssertionError``.
    """
    odd = b.digits.count(2) % 2 == 1
    by_transpose = nx.max_abs(b.matrix + b.matrix.T) == 0.0
    if odd != by_transpose:
        raise AssertionError(f"digit rule disagrees with transpose for {b.label}")
    return SymmetryClass.ANTISYMMETRIC if odd else SymmetryClass.SYMMETRIC


def expand(m, n: int) -> np.ndarray:
    """Coefficients ``c_i = <v_i, m>_F``."""
    _check_n(n)
    m = np.asarray(m)
    if m.shape != (2 ** n, 2 ** n):
        raise DimensionMismatchError(f"expected a {2 ** n}x{2 ** n} matrix, got {m.shape}")
    return basis_stack(n) @ m.ravel()


def reconstruct(coeffs, n: int) -> np.ndarray:
    coeffs = np.asarray(coeffs)
    if coeffs.shape != (4 ** n,):
        raise DimensionMismatchError(f"expected {4 ** n} coefficients")
    return (coeffs @ basis_stack(n)).reshape(2 ** n, 2 ** n)


def single_j(n: int, k: int) -> np.ndarray:
    """``I (x) ... (x) J (x) ... (x) I`` with J at position ``k`` from the right."""
    if not 1 <= k <= n:
        raise ValueError(f"position {k} outside 1..{n}")
    return nx.kron_all(*(E[2] if pos == k else E[0] for pos in range(n, 0, -1)))


def commutes(a, b, tol: float = COMMUTE_TOL) -> bool:
    return nx.max_abs(a @ b - b @ a) < tol


def commuting_j_positions(b: BasisElement) -> frozenset[int]:
    """Positions ``k`` whose single-J structure commutes with ``b``.

    Decided by the explicit commutator, then checked against the digit
    rule (I or J at ``k`` commutes, X or Z anticommutes).
    """
    found = frozenset(k for k in range(1, b.n + 1) if commutes(single_j(b.n, k), b.matrix))
    rule = frozenset(k for k in range(1, b.n + 1) if b.digit_at(k) in (0, 2))
    if found != rule:
        raise AssertionError(f"commutator scan {sorted(found)} disagrees with digit rule {sorted(rule)} for {b.label}")
    return found


def antisymmetric_indices(n: int) -> list[int]:
    return [b.index for b in basis(n) if classify(b) is SymmetryClass.ANTISYMMETRIC]


def convention_j_position(n: int, convention) -> int:
    """Kronecker position carrying J in the embedding of End(C^{2^{n-1}})."""
    return 1 if _convention(convention) is Convention.A_FIRST else n


def image_generators(n: int, convention=Convention.A_FIRST) -> list[np.ndarray]:
    """Embedded images of ``E_pq`` and ``i E_pq`` spanning End(C^{2^{n-1}}) over R."""
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must be in 2..{MAX_N}")
    dim = 2 ** (n - 1)
    out = []
    for p in range(dim):
        for q in range(dim):
            unit = np.zeros((dim, dim), dtype=complex)
            unit[p, q] = 1.0
            out.append(embed(unit, convention).matrix)
            out.append(embed(1j * unit, convention).matrix)
    return out


def row_reduce_rank(a, threshold: float = 1e-9) -> int:
    """Rank by Gaussian elimination with partial pivoting."""
    a = np.array(a, dtype=float)
    rows, cols = a.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        p = rank + int(np.argmax(np.abs(a[rank:, c])))
        if abs(a[p, c]) <= threshold:
            continue
        a[[rank, p]] = a[[p, rank]]
        a[rank + 1:] -= np.outer(a[rank + 1:, c] / a[rank, c], a[rank])
        rank += 1
    return rank


def image_coefficients(n: int, convention=Convention.A_FIRST) -> np.ndarray:
    return np.array([expand(g, n) for g in image_generators(n, convention)])


def mapping_image_dimension(n: int, convention=Convention.A_FIRST) -> int:
    """Real dimension of the embedding's image inside End(R^{2^n})."""
    if not 2 <= n <= 3:
        raise ValueError("mapping image dimension is computed for n = 2 or 3")
    return row_reduce_rank(image_coefficients(n, convention))


def image_support(n: int, convention=Convention.A_FIRST, tol: float = 1e-9) -> frozenset[int]:
    """Basis indices that carry a non-zero coefficient in some image generator."""
    coeffs = image_coefficients(n, convention)
    return frozenset(int(i) for i in np.flatnonzero(np.any(np.abs(coeffs) > tol, axis=0)))


def antisymmetric_commutant(n: int, k: int) -> frozenset[int]:
    """Antisymmetric basis indices commuting with the single J at position ``k``."""
    j = single_j(n, k)
    return frozenset(i for i in antisymmetric_indices(n) if commutes(j, basis_element(n, i).matrix))


def basis_report(n: int, tol: float = 1e-12) -> dict:
    """JSON-ready census of the basis for ``n``."""
    rep = verify_basis(n, tol)
    anti = antisymmetric_indices(n)
    out = {
        "n": n,
        "count": rep.count,
        "verify": {
            "max_off_diagonal": rep.max_off_diagonal,
            "max_diagonal_error": rep.max_diagonal_error,
            "passed": rep.passed(tol),
        },
        "antisymmetric_count": len(anti),
        "antisymmetric_indices": anti,
        "commuting_positions": {
            str(b.index): sorted(commuting_j_positions(b)) for b in basis(n)
        },
    }
    if 2 <= n <= 3:
        out["image_dimension"] = {c.value: mapping_image_dimension(n, c) for c in Convention}
        # the same half-count also holds for basis cardinality: I or J in the J slot
        out["image_basis_count"] = len(image_support(n))
    else:
        out["image_dimension"] = None
        out["image_basis_count"] = None
    return out
