"""
Dense complex linear algebra for small Hilbert spaces.

Kets and matrices are plain complex numpy arrays.  :class:`Projector` and
:class:`Subspace` wrap them with validated invariants and are immutable; a
subspace is stored as an orthonormal basis (columns of an ``n x k`` array).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from qlogic.errors import DimensionError, InvariantError

DEFAULT_TOL = 1e-9


def as_ket(v, dim: int | None = None) -> np.ndarray:
    """Return ``v`` as a 1-D complex array, optionally checking its dimension."""
    arr = np.asarray(v, dtype=complex).reshape(-1)
    if dim is not None and arr.shape[0] != dim:
        raise DimensionError(f"ket has dimension {arr.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(arr)):
        raise InvariantError("ket has non-finite amplitudes")
    return arr


def as_matrix(m) -> np.ndarray:
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InvariantError("matrix has non-finite entries")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=complex, copy=True)
    arr.setflags(write=False)
    return arr


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[0] != b.shape[0]:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def is_normalized(v, tol: float = DEFAULT_TOL) -> bool:
    return abs(np.linalg.norm(as_ket(v)) - 1.0) < tol


def canonical_phase(v: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Rotate ``v`` by a global phase so its first nonzero component is real-positive."""
    for c in v:
        if abs(c) > tol:
            return v * (abs(c) / c)
    return v


def commutator(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b - b @ a


def is_zero(m, tol: float = DEFAULT_TOL) -> bool:
    return float(np.linalg.norm(np.asarray(m, dtype=complex))) < tol


def commute(a, b, tol: float = DEFAULT_TOL) -> bool:
    return is_zero(commutator(a, b), tol)


def orthonormalize(vectors: Iterable, dim: int | None = None,
                   tol: float = DEFAULT_TOL) -> np.ndarray:
    """
    Modified Gram-Schmidt with one re-orthogonalization pass.

    Vectors whose residual norm falls below ``tol`` are dropped as linearly
    dependent.  Returns an ``n x k`` array of orthonormal columns.
    """
    kets = [as_ket(v) for v in vectors]
    if dim is None:
        if not kets:
            raise DimensionError("cannot infer dimension from an empty vector list")
        dim = kets[0].shape[0]
    basis: list[np.ndarray] = []
    for v in kets:
        if v.shape[0] != dim:
            raise DimensionError(f"vector of dimension {v.shape[0]} in a {dim}-dimensional list")
        w = v.copy()
        for _ in range(2):
            for q in basis:
                w = w - np.vdot(q, w) * q
        norm = np.linalg.norm(w)
        if norm < tol:
            continue
        basis.append(canonical_phase(w / norm, tol))
    if not basis:
        return np.zeros((dim, 0), dtype=complex)
    return np.column_stack(basis)


class Projector:
    """Hermitian idempotent matrix; construction validates both properties."""

    __slots__ = ("_m", "_range")

    def __init__(self, matrix, tol: float = DEFAULT_TOL) -> None:
        m = as_matrix(matrix)
        if np.linalg.norm(m - m.conj().T) >= tol:
            raise InvariantError("matrix is not Hermitian")
        if np.linalg.norm(m @ m - m) >= tol:
            raise InvariantError("matrix is not idempotent")
        self._m = _frozen(m)
        self._range = None

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def dim(self) -> int:
        return self._m.shape[0]

    @property
    def rank(self) -> int:
        return int(round(np.trace(self._m).real))

    @classmethod
    def identity(cls, dim: int) -> "Projector":
        return cls(np.eye(dim))

    @classmethod
    def zero(cls, dim: int) -> "Projector":
        return cls(np.zeros((dim, dim)))

    def complement(self) -> "Projector":
        return Projector(np.eye(self.dim) - self._m)

    def close_to(self, other: "Projector", tol: float = DEFAULT_TOL) -> bool:
        _same_dim(self._m, other._m)
        return float(np.linalg.norm(self._m - other._m)) < tol

    def __repr__(self) -> str:
        return f"Projector(dim={self.dim}, rank={self.rank})"


class Subspace:
    """Closed subspace held as an orthonormal basis; an empty basis is ``{0}``."""

    __slots__ = ("_dim", "_basis", "_projector")

    def __init__(self, dim: int, basis=None, tol: float = DEFAULT_TOL) -> None:
        if dim < 1:
            raise DimensionError("ambient dimension must be positive")
        b = np.zeros((dim, 0), dtype=complex) if basis is None else np.asarray(basis, dtype=complex)
        if b.ndim != 2 or b.shape[0] != dim:
            raise DimensionError(f"basis shape {b.shape} does not fit dimension {dim}")
        if b.shape[1] and np.linalg.norm(b.conj().T @ b - np.eye(b.shape[1])) >= tol:
            raise InvariantError("basis is not orthonormal")
        self._dim = dim
        self._basis = _frozen(b)
        self._projector = None

    @classmethod
    def span(cls, vectors: Sequence, dim: int, tol: float = DEFAULT_TOL) -> "Subspace":
        return cls(dim, orthonormalize(vectors, dim, tol))

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls(dim, np.eye(dim, dtype=complex))

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls(dim)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def basis(self) -> np.ndarray:
        return self._basis

    @property
    def rank(self) -> int:
        return self._basis.shape[1]

    def vectors(self) -> list[np.ndarray]:
        return [self._basis[:, i] for i in range(self.rank)]

    def projector(self) -> Projector:
        if self._projector is None:
            b = self._basis
            self._projector = Projector(b @ b.conj().T)
        return self._projector

    def same_as(self, other: "Subspace", tol: float = DEFAULT_TOL) -> bool:
        return self.rank == other.rank and self.projector().close_to(other.projector(), tol)

    def __repr__(self) -> str:
        return f"Subspace(dim={self._dim}, rank={self.rank})"


def projector_onto(vectors: Sequence, dim: int | None = None,
                   tol: float = DEFAULT_TOL) -> Projector:
    """Projector onto the span of ``vectors``; an empty list needs ``dim`` and gives zero."""
    if not vectors and dim is None:
        raise DimensionError("dimension required for the zero subspace")
    q = orthonormalize(vectors, dim, tol)
    return Projector(q @ q.conj().T)


def _eigvecs_where(m: np.ndarray, keep, tol: float) -> np.ndarray:
    # eigh returns ascending eigenvalues, so the selection order is deterministic.
    w, v = np.linalg.eigh(m)
    cols = [canonical_phase(v[:, i], tol) for i in range(len(w)) if keep(w[i])]
    if not cols:
        return np.zeros((m.shape[0], 0), dtype=complex)
    return np.column_stack(cols)


def range_of(p: Projector | np.ndarray, tol: float = DEFAULT_TOL) -> Subspace:
    if not isinstance(p, Projector):
        p = Projector(p, tol)
    # atom projectors are reused across many encodings, so remember the result
    if p._range is None:
        p._range = Subspace(p.dim, _eigvecs_where(p.matrix, lambda x: x > 0.5, tol))
    return p._range


def orthocomplement(s: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    return range_of(s.projector().complement(), tol)


def intersect(a: Subspace, b: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    """``a ∩ b`` as the eigenvalue-2 eigenspace of ``P_a + P_b``."""
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    if a.rank == 0 or b.rank == 0:
        return Subspace.zero(a.dim)
    m = a.projector().matrix + b.projector().matrix
    m = (m + m.conj().T) / 2
    basis = _eigvecs_where(m, lambda x: abs(x - 2.0) < tol, tol)
    return Subspace(a.dim, basis)


def span_sum(a: Subspace, b: Subspace, tol: float = DEFAULT_TOL) -> Subspace:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return Subspace.span(a.vectors() + b.vectors(), a.dim, tol)


def contains(s: Subspace, v, tol: float = DEFAULT_TOL) -> bool:
    v = as_ket(v, s.dim)
    b = s.basis
    return float(np.linalg.norm(b @ (b.conj().T @ v) - v)) < tol


def expectation(p: Projector | np.ndarray, v) -> float:
    """``<v|P|v>`` as a real number."""
    m = p.matrix if isinstance(p, Projector) else as_matrix(p)
    v = as_ket(v, m.shape[0])
    return float(np.vdot(v, m @ v).real)
