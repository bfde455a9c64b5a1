"""Channel representations, conversions among them, and structural validators.

Conventions fixed across the package:

* A channel with ``k`` Kraus operators of shape ``(n_out, n_in)`` acts as
  ``rho -> sum_i K_i rho K_i^dagger``.
* The superoperator is ``S = sum_i K_i (x) conj(K_i)``, a
  ``(n_out^2, n_in^2)`` matrix acting on row-major vectorized density
  matrices.
* The Choi matrix ``D`` lives on (input copy) (x) (output): it is
  ``sum_kl E_kl (x) Phi(E_kl)``, of trace ``n_in``; tracing out the second
  (output) factor of a trace-preserving channel gives the identity on the
  input space.  ``D / n_in`` is a density matrix whenever the channel is
  completely positive and trace preserving.
* The complementary channel swaps the Kraus index with the output row index
  of the Kraus 3-tensor; a channel is self-complementary when that swap
  fixes the tensor entrywise.
* A Stinespring dilation uses environment-major ordering env (x) sys with
  the environment prepared in the first basis state, so the Kraus operators
  are the successive ``n x n`` blocks of the first block-column of ``U``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DensityMatrix,
    as_matrix,
    as_state,
    dagger,
    hermitian_eigenvalues,
    max_abs,
)

__all__ = [
    "KrausSet",
    "SuperOperator",
    "ChoiMatrix",
    "StinespringUnitary",
    "CptpReport",
    "ChannelValidation",
    "kraus",
    "apply",
    "complementary",
    "selfcomplementarity_defect",
    "is_selfcomplementary",
    "kraus_to_superop",
    "superop_to_choi",
    "choi_to_superop",
    "choi_to_kraus",
    "choi_matrix",
    "choi_state",
    "channel_rank",
    "stinespring",
    "kraus_from_unitary",
    "tensor_channel",
    "compose",
    "is_cptp",
    "validate_channel",
    "random_cptp",
    "reshuffle_superop_to_choi",
    "reshuffle_choi_to_superop",
]


@dataclass(frozen=True, eq=False)
class KrausSet:
    """Ordered Kraus operators of a linear map from n_in to n_out dimensions.

    Maps that violate the completeness relation are representable (so that
    questionable parameterizations can be inspected numerically), but they
    carry a nonzero ``completeness_residual`` and are refused by operations
    whose contracts require a CPTP channel.
    """

    n_in: int
    n_out: int
    operators: tuple

    def __post_init__(self):
        if self.n_in < 1 or self.n_out < 1:
            raise ValueError("dimensions must be positive")
        ops = tuple(as_matrix(op) for op in self.operators)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for op in ops:
            if op.shape != (self.n_out, self.n_in):
                raise ValueError(
                    f"Kraus operator shape {op.shape} differs from ({self.n_out}, {self.n_in})"
                )
        object.__setattr__(self, "operators", ops)

    @property
    def k(self) -> int:
        """Number of Kraus operators (environment dimension of the dilation)."""
        return len(self.operators)

    @property
    def completeness_residual(self) -> float:
        """max |sum_i K_i^dagger K_i - 1|."""
        acc = sum(dagger(op) @ op for op in self.operators)
        return max_abs(acc - np.eye(self.n_in))

    def require_cptp(self, tol: float = DEFAULT_TOL) -> None:
        res = self.completeness_residual
        if res > tol:
            raise ValueError(f"channel is not trace preserving: residual {res:.3e} > {tol:.3e}")


@dataclass(frozen=True, eq=False)
class SuperOperator:
    """Matrix of a channel on row-major vectorized density matrices."""

    n_in: int
    n_out: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape != (self.n_out**2, self.n_in**2):
            raise ValueError(f"superoperator shape {m.shape} != ({self.n_out**2}, {self.n_in**2})")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class ChoiMatrix:
    """Unnormalized Choi matrix on (input copy) (x) (output), trace n_in."""

    n_in: int
    n_out: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        side = self.n_in * self.n_out
        if m.shape != (side, side):
            raise ValueError(f"Choi matrix shape {m.shape} != ({side}, {side})")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True, eq=False)
class StinespringUnitary:
    """Global unitary on env (x) sys realizing a channel by tracing out env.

    The environment starts in the first basis state, so column block
    ``U[:, :n_sys]`` stacks the Kraus operators vertically:
    ``K_i = U[i*n_sys:(i+1)*n_sys, :n_sys]``.
    """

    n_sys: int
    n_env: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        side = self.n_sys * self.n_env
        if m.shape != (side, side):
            raise ValueError(f"unitary shape {m.shape} != ({side}, {side})")
        object.__setattr__(self, "matrix", m)

    def unitarity_defect(self) -> float:
        return max_abs(dagger(self.matrix) @ self.matrix - np.eye(self.matrix.shape[0]))


@dataclass(frozen=True)
class CptpReport:
    residual: float
    tol: float
    ok: bool


@dataclass(frozen=True)
class ChannelValidation:
    """Structural report attached to generated channels by the CLI."""

    cptp_residual: float
    cptp_ok: bool
    selfcomplementary: bool
    selfcomplementarity_defect: float
    choi_rank: int


def kraus(operators, n_in: int | None = None, n_out: int | None = None) -> KrausSet:
    """Build a KrausSet, inferring dimensions from the first operator."""
    ops = [as_matrix(op) for op in operators]
    if not ops:
        raise ValueError("empty operator list")
    m, n = ops[0].shape
    return KrausSet(n_in if n_in is not None else n, n_out if n_out is not None else m, tuple(ops))


def apply(channel: KrausSet, rho, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Push a state through the channel: rho -> sum_i K_i rho K_i^dagger."""
    channel.require_cptp(tol)
    state = as_state(rho)
    if state.dim != channel.n_in:
        raise ValueError(f"state dimension {state.dim} != channel input dimension {channel.n_in}")
    out = sum(op @ state.matrix @ dagger(op) for op in channel.operators)
    return DensityMatrix(out)


def _kraus_tensor(channel: KrausSet) -> np.ndarray:
    """Stack operators into the 3-tensor T[i, row, col]."""
    return np.stack(channel.operators)


def complementary(channel: KrausSet) -> KrausSet:
    """Channel into the environment: swap Kraus index and output row index.

    A channel with k operators of shape (M, N) yields M operators of shape
    (k, N); applying the swap twice returns the original operator list.
    """
    t = _kraus_tensor(channel).transpose(1, 0, 2)
    return KrausSet(channel.n_in, channel.k, tuple(t[i] for i in range(t.shape[0])))


def selfcomplementarity_defect(channel: KrausSet) -> float:
    """max |K^i_(aj) - K^a_(ij)|, or inf when the tensor is not square."""
    if channel.k != channel.n_out:
        return math.inf
    t = _kraus_tensor(channel)
    return max_abs(t - t.transpose(1, 0, 2))


def is_selfcomplementary(channel: KrausSet, tol: float = DEFAULT_TOL) -> bool:
    """Strict tensor-symmetry check: the complementary operator list is the same list."""
    return selfcomplementarity_defect(channel) <= tol


def kraus_to_superop(channel: KrausSet) -> SuperOperator:
    """S = sum_i K_i (x) conj(K_i)."""
    m = sum(np.kron(op, op.conj()) for op in channel.operators)
    return SuperOperator(channel.n_in, channel.n_out, m)


def reshuffle_superop_to_choi(matrix, n_in: int, n_out: int) -> np.ndarray:
    """Reindex a superoperator into a Choi matrix on (input copy) (x) (output).

    D[(k,i),(l,j)] = S[(i,j),(k,l)] with i,j output indices and k,l input
    indices; applied to ``sum K (x) conj(K)`` this gives
    ``sum_kl E_kl (x) Phi(E_kl)``.
    """
    m = as_matrix(matrix)
    if m.shape != (n_out**2, n_in**2):
        raise ValueError(f"shape {m.shape} does not match ({n_out**2}, {n_in**2})")
    t = m.reshape(n_out, n_out, n_in, n_in)
    return t.transpose(2, 0, 3, 1).reshape(n_in * n_out, n_in * n_out)


def reshuffle_choi_to_superop(matrix, n_in: int, n_out: int) -> np.ndarray:
    """Exact inverse of :func:`reshuffle_superop_to_choi`."""
    m = as_matrix(matrix)
    side = n_in * n_out
    if m.shape != (side, side):
        raise ValueError(f"shape {m.shape} does not match ({side}, {side})")
    t = m.reshape(n_in, n_out, n_in, n_out)
    return t.transpose(1, 3, 0, 2).reshape(n_out**2, n_in**2)


def superop_to_choi(s: SuperOperator) -> ChoiMatrix:
    return ChoiMatrix(s.n_in, s.n_out, reshuffle_superop_to_choi(s.matrix, s.n_in, s.n_out))


def choi_to_superop(c: ChoiMatrix) -> SuperOperator:
    return SuperOperator(c.n_in, c.n_out, reshuffle_choi_to_superop(c.matrix, c.n_in, c.n_out))


def choi_matrix(channel: KrausSet) -> ChoiMatrix:
    """Choi matrix of a channel (via the superoperator reshuffle)."""
    return superop_to_choi(kraus_to_superop(channel))


def choi_state(channel: KrausSet) -> DensityMatrix:
    """Normalized Choi state D / n_in of a CPTP channel."""
    channel.require_cptp()
    return DensityMatrix(choi_matrix(channel).matrix / channel.n_in)


def channel_rank(c: ChoiMatrix, tol: float = DEFAULT_TOL) -> int:
    """Number of Choi eigenvalues above tol: the minimal Kraus count."""
    ev = hermitian_eigenvalues(c.matrix)
    return int(np.count_nonzero(ev > tol))


def choi_to_kraus(c: ChoiMatrix, tol: float = DEFAULT_TOL) -> KrausSet:
    """Minimal Kraus representation from the Choi eigendecomposition.

    One operator per eigenvalue above ``tol``, ordered by descending
    eigenvalue with ties broken lexicographically on the real parts of the
    eigenvector entries.  Raises on non-PSD input.
    """
    ev, vec = np.linalg.eigh(c.matrix)
    lo = float(ev.min())
    if lo < -tol:
        raise ValueError(f"Choi matrix is not PSD: eigenvalue {lo:.3e}")
    picked = [
        (float(ev[i]), tuple(np.real(vec[:, i])), i) for i in range(len(ev)) if ev[i] > tol
    ]
    picked.sort(key=lambda item: (-item[0], item[1]))
    ops = []
    for lam, _, i in picked:
        # Eigenvector components are indexed (input k, output i); the Kraus
        # operator is the transpose of that reshape.
        g = (math.sqrt(lam) * vec[:, i]).reshape(c.n_in, c.n_out)
        ops.append(g.T)
    if not ops:
        raise ValueError("Choi matrix has no eigenvalue above tolerance")
    return KrausSet(c.n_in, c.n_out, tuple(ops))


def stinespring(channel: KrausSet, tol: float = DEFAULT_TOL) -> StinespringUnitary:
    """Dilation unitary on env (x) sys for a square channel.

    The first block-column is the stacked Kraus operators; the remaining
    columns are completed deterministically by Gram-Schmidt against the
    canonical basis vectors in ascending index order.
    """
    if channel.n_in != channel.n_out:
        raise ValueError("square dilation requires n_in == n_out")
    n = channel.n_in
    k = channel.k
    res = channel.completeness_residual
    if res > tol:
        raise ValueError(
            f"completeness residual {res:.3e} > {tol:.3e}: block-column is not orthonormal"
        )
    side = n * k
    cols = [np.concatenate([op[:, j] for op in channel.operators]) for j in range(n)]
    for idx in range(side):
        if len(cols) == side:
            break
        cand = np.zeros(side, dtype=complex)
        cand[idx] = 1.0
        for _ in range(2):  # re-orthogonalize once for full precision
            for c in cols:
                cand = cand - np.vdot(c, cand) * c
        norm = float(np.linalg.norm(cand))
        if norm > 1e-8:
            cols.append(cand / norm)
    if len(cols) != side:
        raise ValueError("orthonormal completion failed")
    return StinespringUnitary(n, k, np.column_stack(cols))


def kraus_from_unitary(u: StinespringUnitary, n_env: int) -> KrausSet:
    """Read the Kraus operators off the first block-column of a dilation."""
    side = u.matrix.shape[0]
    if side % n_env:
        raise ValueError(f"unitary side {side} not divisible by environment dimension {n_env}")
    n = side // n_env
    ops = tuple(u.matrix[i * n : (i + 1) * n, :n] for i in range(n_env))
    return KrausSet(n, n, ops)


def tensor_channel(a: KrausSet, b: KrausSet) -> KrausSet:
    """Tensor product channel; operator (i, j) = A_i (x) B_j, i-major."""
    ops = tuple(np.kron(x, y) for x in a.operators for y in b.operators)
    return KrausSet(a.n_in * b.n_in, a.n_out * b.n_out, ops)


def compose(outer: KrausSet, inner: KrausSet) -> KrausSet:
    """Concatenation outer after inner; operator (i, j) = A_i B_j, i-major."""
    if inner.n_out != outer.n_in:
        raise ValueError(
            f"inner output dimension {inner.n_out} != outer input dimension {outer.n_in}"
        )
    ops = tuple(x @ y for x in outer.operators for y in inner.operators)
    return KrausSet(inner.n_in, outer.n_out, ops)


def is_cptp(channel: KrausSet, tol: float = DEFAULT_TOL) -> CptpReport:
    res = channel.completeness_residual
    return CptpReport(residual=res, tol=tol, ok=res <= tol)


def validate_channel(channel: KrausSet, tol: float = DEFAULT_TOL) -> ChannelValidation:
    report = is_cptp(channel, tol)
    defect = selfcomplementarity_defect(channel)
    rank = channel_rank(choi_matrix(channel), tol)
    return ChannelValidation(
        cptp_residual=report.residual,
        cptp_ok=report.ok,
        selfcomplementary=defect <= tol,
        selfcomplementarity_defect=defect,
        choi_rank=rank,
    )


def random_cptp(n_in: int, n_out: int, k: int, rng: np.random.Generator) -> KrausSet:
    """Random CPTP channel from a Haar isometry (QR of a Ginibre block)."""
    if n_out * k < n_in:
        raise ValueError(f"no isometry exists: n_out * k = {n_out * k} < n_in = {n_in}")
    g = rng.standard_normal((n_out * k, n_in)) + 1j * rng.standard_normal((n_out * k, n_in))
    q, r = np.linalg.qr(g)
    q = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
    ops = tuple(q[i * n_out : (i + 1) * n_out, :] for i in range(k))
    return KrausSet(n_in, n_out, ops)
