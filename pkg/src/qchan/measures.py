"""Entropies, capacity quantities, and entanglement monotones.

All entropic quantities are in nats (natural logarithm); callers wanting
bits divide by ln 2.  Operations that only make sense for genuine channels
refuse Kraus sets whose completeness residual exceeds tolerance.

The closed forms for the first qubit family (``qubit_family_a`` at phi = 0)
were derived from the exact spectra of the family's Choi states and agree
with the numeric pipeline to machine precision:

* Choi spectrum: {1/4 + sin^2(t)/2, 1/4 + cos^2(t)/2, 0, 0}
* spin-flip product spectrum: {sin^2(t)/2, cos^2(t)/2, 0, 0}
* negativity: |cos 2t| / 4
* concurrence: |sin t - cos t| / sqrt2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import KrausSet, apply, choi_state, complementary
from .linalg import (
    DEFAULT_TOL,
    DensityMatrix,
    as_matrix,
    as_state,
    general_eigenvalues,
    hermitian_eigenvalues,
    partial_transpose,
    sanitize_nonnegative_spectrum,
)

# Entropy eigenvalues below this are exact zeros (avoids 0 * log 0 noise).
ENTROPY_EIGENVALUE_FLOOR = 1e-14

# Spin-flip product eigenvalues below this are exact zeros.  The product of
# two rank-deficient 4x4 states has structural zero eigenvalues that the
# general eigensolver reports as O(1e-16) noise; taking square roots of that
# noise would pollute the concurrence at the 1e-8 level.
WOOTTERS_EIGENVALUE_FLOOR = 1e-13

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Weighted alphabet of quantum states."""

    probabilities: tuple
    states: tuple

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probabilities)
        states = tuple(as_state(s) for s in self.states)
        if len(probs) != len(states) or not probs:
            raise ValueError("probabilities and states must be equal-length and nonempty")
        if min(probs) < 0:
            raise ValueError("probabilities must be nonnegative")
        if abs(sum(probs) - 1.0) > 1e-12:
            raise ValueError(f"probabilities sum to {sum(probs)}, not 1")
        dims = {s.dim for s in states}
        if len(dims) != 1:
            raise ValueError(f"states have mixed dimensions {sorted(dims)}")
        object.__setattr__(self, "probabilities", probs)
        object.__setattr__(self, "states", states)

    @property
    def average_state(self) -> DensityMatrix:
        acc = sum(p * s.matrix for p, s in zip(self.probabilities, self.states))
        return DensityMatrix(acc)


def von_neumann_entropy(rho) -> float:
    """S(rho) = -tr(rho ln rho) in nats."""
    state = as_state(rho)
    ev = hermitian_eigenvalues(state.matrix)
    if float(ev.min()) < -DEFAULT_TOL:
        raise ValueError(f"state has eigenvalue {ev.min():.3e} below tolerance")
    ev = ev[ev > ENTROPY_EIGENVALUE_FLOOR]
    return float(-(ev * np.log(ev)).sum())


def map_entropy(channel: KrausSet) -> float:
    """Entropy of the normalized Choi state; 0 for unitary channels."""
    return von_neumann_entropy(choi_state(channel))


def coherent_information(channel: KrausSet, rho) -> float:
    """Output entropy minus environment entropy; zero for self-complementary maps."""
    state = as_state(rho)
    out = apply(channel, state)
    env = apply(complementary(channel), state)
    return von_neumann_entropy(out) - von_neumann_entropy(env)


def holevo_chi(ensemble: Ensemble) -> float:
    """S(sum p_i rho_i) - sum p_i S(rho_i); nonnegative by concavity."""
    mixed = von_neumann_entropy(ensemble.average_state)
    avg = sum(p * von_neumann_entropy(s) for p, s in zip(ensemble.probabilities, ensemble.states))
    return max(0.0, mixed - avg)


def classical_capacity_lower_bound(
    channel: KrausSet, basis_states, tol: float = DEFAULT_TOL
) -> float:
    """Holevo quantity of the channel outputs for an equiprobable orthogonal
    pure-state alphabet; lower-bounds the classical capacity."""
    states = [as_state(s) for s in basis_states]
    if not states:
        raise ValueError("need at least one basis state")
    for i, s in enumerate(states):
        purity = float(np.real(np.trace(s.matrix @ s.matrix)))
        if abs(purity - 1.0) > 1e-9:
            raise ValueError(f"basis state {i} is not pure (purity {purity})")
        for j in range(i):
            overlap = float(abs(np.trace(states[j].matrix @ s.matrix)))
            if overlap > tol:
                raise ValueError(f"basis states {j} and {i} overlap by {overlap:.3e}")
    m = len(states)
    pushed = Ensemble(tuple(1.0 / m for _ in states), tuple(apply(channel, s) for s in states))
    return holevo_chi(pushed)


def spin_flip(omega) -> np.ndarray:
    """(sigma_y (x) sigma_y) conj(omega) (sigma_y (x) sigma_y) on two qubits."""
    m = as_matrix(omega.matrix if isinstance(omega, DensityMatrix) else omega)
    if m.shape != (4, 4):
        raise ValueError(f"spin flip needs a 4x4 two-qubit matrix, got {m.shape}")
    return _YY @ m.conj() @ _YY


def wootters_spectrum(omega) -> np.ndarray:
    """Square roots of the eigenvalues of omega * spin_flip(omega), descending."""
    state = as_state(omega)
    if state.dim != 4:
        raise ValueError(f"concurrence needs a two-qubit state, got dim {state.dim}")
    product = state.matrix @ spin_flip(state.matrix)
    ev = sanitize_nonnegative_spectrum(general_eigenvalues(product))
    scale = max(1.0, float(np.abs(product).max()))
    ev[ev < WOOTTERS_EIGENVALUE_FLOOR * scale] = 0.0
    return np.sqrt(np.sort(ev)[::-1])


def concurrence(omega) -> float:
    """Two-qubit concurrence max{0, l1 - l2 - l3 - l4}."""
    lam = wootters_spectrum(omega)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def negativity(omega, dims: tuple[int, int]) -> float:
    """(trace norm of the partial transpose - 1) / 2."""
    state = as_state(omega)
    d1, d2 = dims
    if state.dim != d1 * d2:
        raise ValueError(f"state dimension {state.dim} != {d1} * {d2}")
    ev = hermitian_eigenvalues(partial_transpose(state.matrix, dims))
    return max(0.0, float((np.abs(ev).sum() - 1.0) / 2.0))


def concurrence_closed_form(theta: float) -> float:
    """Choi-state concurrence of the first qubit family at phi = 0.

    The spin-flip product of the family's Choi state has exact spectrum
    {sin^2(t)/2, cos^2(t)/2, 0, 0}, so the concurrence is the difference of
    the two square roots, written in the usual three-branch arrangement with
    the entanglement-breaking zero at theta = pi/4.
    """
    theta = float(theta)
    if not 0.0 <= theta <= math.pi / 2:
        raise ValueError(f"theta = {theta} outside [0, pi/2]")
    if theta < math.pi / 4:
        return (math.cos(theta) - math.sin(theta)) / math.sqrt(2.0)
    if theta == math.pi / 4:
        return 0.0
    return (math.sin(theta) - math.cos(theta)) / math.sqrt(2.0)


def negativity_closed_form(theta: float) -> float:
    """Choi-state negativity of the first qubit family: |cos 2t| / 4."""
    return abs(math.cos(2.0 * float(theta))) / 4.0


def concurrence_from_negativity(neg: float, branch: str = "lower") -> float:
    """Concurrence of a family Choi state as a monotone function of its
    negativity.

    With N = |cos 2t|/4 the concurrence is sqrt((1 - sqrt(1 - 16 N^2)) / 2)
    on every branch; the branch argument ("lower" for t < pi/4, "point" for
    the entanglement-breaking point, "upper" for t > pi/4) is retained for
    callers that track which side of pi/4 produced the negativity.
    """
    if branch not in ("lower", "point", "upper"):
        raise ValueError(f"unknown branch {branch!r}")
    neg = float(neg)
    if not 0.0 <= neg <= 0.25 + 1e-12:
        raise ValueError(f"negativity {neg} outside [0, 1/4]")
    inner = max(0.0, 1.0 - 16.0 * min(neg, 0.25) ** 2)
    return math.sqrt(max(0.0, (1.0 - math.sqrt(inner)) / 2.0))


def entanglement_evolution_factor(channel: KrausSet, rho_in) -> tuple[float, float]:
    """Check the product rule for one-sided entanglement evolution.

    For a pure two-qubit input with the channel acting on the second qubit,
    the output concurrence equals the input concurrence times the
    concurrence of the channel's Choi state.  Returns (predicted, direct)
    where predicted = C(rho_in) * C(omega) and direct = C(rho_out).
    """
    if channel.n_in != 2 or channel.n_out != 2:
        raise ValueError("entanglement evolution factor needs a qubit channel")
    state = as_state(rho_in)
    if state.dim != 4:
        raise ValueError(f"input must be a two-qubit state, got dim {state.dim}")
    omega = choi_state(channel)
    predicted = concurrence(state) * concurrence(omega)
    extended = KrausSet(
        4, 4, tuple(np.kron(np.eye(2), op) for op in channel.operators)
    )
    direct = concurrence(apply(extended, state))
    return predicted, direct
