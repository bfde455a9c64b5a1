"""Dense complex linear algebra for small quantum objects.

Everything operates on plain complex ``numpy.ndarray`` matrices with
row-major (C-order) index conventions: composite indices of Kronecker
products run lexicographically, and a vectorized matrix lists its entries
row by row.  All comparisons use absolute entrywise tolerances; the objects
handled here are O(1)-normed, so relative scaling is unnecessary.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-10

# Density-matrix admissibility tolerances.
HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10

# Spectrum sanitization: violations up to this size are rounding noise and
# clipped to zero; anything larger is a genuine structural violation.
SPECTRUM_TOL = 1e-9


class NumericalError(Exception):
    """An eigen/SVD routine failed or a spectrum violated its expected structure."""


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix has non-finite entries")
    return m


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def kron(a, b) -> np.ndarray:
    """Kronecker product with lexicographic composite indices."""
    return np.kron(as_matrix(a), as_matrix(b))


def max_abs(a) -> float:
    m = np.asarray(a)
    return 0.0 if m.size == 0 else float(np.abs(m).max())


def hermiticity_defect(a) -> float:
    m = as_matrix(a)
    return max_abs(m - dagger(m))


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    return hermiticity_defect(a) <= tol


def hermitian_eigenvalues(a, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Real spectrum of a Hermitian matrix, ascending.

    Raises ValueError if the input is not Hermitian within ``tol``.
    """
    m = as_matrix(a)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: defect {defect:.3e} > tol {tol:.3e}")
    try:
        return np.linalg.eigvalsh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigvalsh is robust at these sizes
        raise NumericalError(f"Hermitian eigensolver failed: {exc}") from exc


def general_eigenvalues(a) -> np.ndarray:
    """Full complex spectrum of a square matrix (unordered)."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix is not square: shape {m.shape}")
    try:
        return np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge on shape {m.shape}: {exc}") from exc


def sanitize_nonnegative_spectrum(values, tol: float = SPECTRUM_TOL) -> np.ndarray:
    """Clean a spectrum that is expected to be real and nonnegative.

    Imaginary parts of magnitude <= tol and real parts in [-tol, 0) are
    clipped to zero.  Larger violations raise NumericalError rather than
    being silently clipped.
    """
    v = np.asarray(values, dtype=complex)
    worst_im = max_abs(v.imag)
    if worst_im > tol:
        raise NumericalError(f"spectrum has imaginary parts up to {worst_im:.3e} > tol {tol:.3e}")
    re = v.real.copy()
    most_negative = float(re.min()) if re.size else 0.0
    if most_negative < -tol:
        raise NumericalError(f"spectrum has negative value {most_negative:.3e} < -tol")
    re[re < 0] = 0.0
    return re


def svd_values(a) -> np.ndarray:
    """Singular values, descending."""
    try:
        return np.linalg.svd(as_matrix(a), compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD failed: {exc}") from exc


def partial_trace(a, dims: tuple[int, int], keep: int) -> np.ndarray:
    """Trace out one tensor factor of a bipartite matrix.

    ``dims = (d1, d2)`` are the factor dimensions, ``keep`` selects the
    surviving subsystem (0 = first factor, 1 = second).  The trace of the
    result equals the trace of the input.
    """
    d1, d2 = dims
    m = as_matrix(a)
    if m.shape != (d1 * d2, d1 * d2):
        raise ValueError(f"matrix shape {m.shape} does not match dims {dims}")
    if keep not in (0, 1):
        raise ValueError("keep must be 0 or 1")
    t = m.reshape(d1, d2, d1, d2)
    if keep == 0:
        return np.einsum("ikjk->ij", t)
    return np.einsum("kikj->ij", t)


def partial_transpose(a, dims: tuple[int, int]) -> np.ndarray:
    """Transpose the first tensor factor of a bipartite matrix."""
    d1, d2 = dims
    m = as_matrix(a)
    if m.shape != (d1 * d2, d1 * d2):
        raise ValueError(f"matrix shape {m.shape} does not match dims {dims}")
    return m.reshape(d1, d2, d1, d2).transpose(2, 1, 0, 3).reshape(d1 * d2, d1 * d2)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated quantum state: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got {m.shape}")
        defect = hermiticity_defect(m)
        if defect > HERMITICITY_TOL:
            raise ValueError(f"density matrix not Hermitian: defect {defect:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr} differs from 1")
        lo = float(np.linalg.eigvalsh(m).min())
        if lo < -PSD_TOL:
            raise ValueError(f"density matrix has eigenvalue {lo:.3e} below -{PSD_TOL}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=complex) / dim)

    @classmethod
    def pure(cls, vector) -> "DensityMatrix":
        v = np.asarray(vector, dtype=complex).reshape(-1)
        n = np.linalg.norm(v)
        if n == 0:
            raise ValueError("cannot normalize the zero vector")
        v = v / n
        return cls(np.outer(v, v.conj()))


def as_state(rho) -> DensityMatrix:
    """Accept a DensityMatrix or any array-like that validates as one."""
    if isinstance(rho, DensityMatrix):
        return rho
    return DensityMatrix(rho)


def random_density_matrix(dim: int, rng: np.random.Generator) -> DensityMatrix:
    """Full-rank random state from the Ginibre ensemble."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ dagger(g)
    return DensityMatrix(m / np.trace(m))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via phase-fixed QR of a Ginibre matrix."""
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
