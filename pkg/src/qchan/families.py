"""Parameterized families of self-complementary channels.

The two qubit families and the theta = 0 family in arbitrary dimension are
exactly CPTP and exactly self-complementary for every parameter value.  The
general qutrit and N-dimensional parameterizations are exploratory: away
from theta = 0 their repeated-row structure breaks the completeness sum, so
they are generated as-is and judged by a validation report instead of being
asserted valid.  Use :func:`qchan.channels.validate_channel` for the
report; operations that need a genuine channel refuse the violators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import KrausSet
from .linalg import DEFAULT_TOL, as_matrix, dagger, max_abs

SQRT_HALF = 1.0 / math.sqrt(2.0)

FAMILY_IDS = ("qubit-a", "qubit-b", "ad", "qutrit", "ndim", "ndim-theta0")


def _check_angle(name: str, value: float, hi: float) -> float:
    v = float(value)
    if not 0.0 <= v <= hi:
        raise ValueError(f"{name} = {v} outside [0, {hi}]")
    return v


def _check_unitary(w, dim: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    m = as_matrix(w)
    if m.shape != (dim, dim):
        raise ValueError(f"unitary parameter has shape {m.shape}, expected ({dim}, {dim})")
    defect = max_abs(dagger(m) @ m - np.eye(dim))
    if defect > tol:
        raise ValueError(f"matrix parameter is not unitary: defect {defect:.3e}")
    return m


def qubit_family_a(theta: float, phi: float = 0.0) -> KrausSet:
    """First qubit family:

        K1 = [[sin t, 0      ],      K2 = [[0,            1/sqrt2],
              [0,     1/sqrt2]],           [cos t e^(i p), 0      ]]

    CPTP and self-complementary for every theta in [0, pi], phi in [0, 2pi].
    theta = pi/2 is amplitude damping with decay probability 1/2.
    """
    theta = _check_angle("theta", theta, math.pi)
    phi = _check_angle("phi", phi, 2 * math.pi)
    s, c = math.sin(theta), math.cos(theta)
    k1 = np.array([[s, 0.0], [0.0, SQRT_HALF]], dtype=complex)
    k2 = np.array([[0.0, SQRT_HALF], [c * np.exp(1j * phi), 0.0]], dtype=complex)
    return KrausSet(2, 2, (k1, k2))


def qubit_family_b(theta: float, phi: float = 0.0) -> KrausSet:
    """Second qubit family:

        K1 = [[1, 0            ],    K2 = [[0, sin t / sqrt2],
              [0, sin t / sqrt2]],         [0, cos t e^(i p)]]

    theta = phi = 0 gives the dephasing channel.
    """
    theta = _check_angle("theta", theta, math.pi)
    phi = _check_angle("phi", phi, 2 * math.pi)
    s, c = math.sin(theta), math.cos(theta)
    k1 = np.array([[1.0, 0.0], [0.0, s * SQRT_HALF]], dtype=complex)
    k2 = np.array([[0.0, s * SQRT_HALF], [0.0, c * np.exp(1j * phi)]], dtype=complex)
    return KrausSet(2, 2, (k1, k2))


def amplitude_damping(p: float) -> KrausSet:
    """Decay to the ground state with probability p."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p = {p} outside [0, 1]")
    k1 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - p)]], dtype=complex)
    k2 = np.array([[0.0, math.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return KrausSet(2, 2, (k1, k2))


def dephasing() -> KrausSet:
    """Remove all off-diagonal elements in the computational basis."""
    return qubit_family_b(0.0, 0.0)


def identity_channel(dim: int = 2) -> KrausSet:
    return KrausSet(dim, dim, (np.eye(dim, dtype=complex),))


def qutrit_family(theta: float, w) -> KrausSet:
    """General qutrit parameterization.

    Rows two and three of the second and third operators share the row
    (W22, W12, W23)/sqrt2, and completeness generally fails for theta != 0;
    validate before using the result as a channel.  At theta = 0 the family
    coincides with ``ndim_theta0(3)`` regardless of W.
    """
    theta = _check_angle("theta", theta, math.pi)
    w = _check_unitary(w, 3)
    s, c = math.sin(theta), math.cos(theta)
    ch = c * SQRT_HALF
    k1 = np.diag([c, ch, ch]).astype(complex)
    shared = np.array([w[1, 1] * s * SQRT_HALF, w[0, 1] * s * SQRT_HALF, w[1, 2] * s * SQRT_HALF])
    k2 = np.array(
        [
            [0.0, ch, 0.0],
            [w[0, 0] * s, w[1, 0] * s, w[2, 0] * s],
            shared,
        ],
        dtype=complex,
    )
    k3 = np.array(
        [
            [0.0, 0.0, ch],
            shared,
            [w[0, 2] * s, w[1, 2] * s, w[2, 2] * s],
        ],
        dtype=complex,
    )
    return KrausSet(3, 3, (k1, k2, k3))


def _cycle(n: int) -> np.ndarray:
    """Cyclic permutation sending basis vector e_j to e_(j+1 mod n)."""
    p = np.zeros((n, n))
    for j in range(n):
        p[(j + 1) % n, j] = 1.0
    return p


def ndim_family(n: int, theta: float, w) -> KrausSet:
    """N-dimensional parameterization built from a cyclic permutation P and
    a unitary W.

    Operator i (i = 1..n-1, zero-based) has first row cos(t)/sqrt2 placed in
    column i (the cyclic shift of the theta = 0 pattern), middle rows taken
    from columns 1..n-2 of P^(-i) W scaled by sin(t)/sqrt(n-2), and last row
    from column n of P^(-i) W scaled by sin(t)/sqrt(n-1).  Like the qutrit
    family this is generally not CPTP away from theta = 0 and carries its
    verdict in the validation report.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    theta = _check_angle("theta", theta, math.pi)
    w = _check_unitary(w, n)
    s, c = math.sin(theta), math.cos(theta)
    ch = c * SQRT_HALF
    ops = [np.diag([c] + [ch] * (n - 1)).astype(complex)]
    p = _cycle(n)
    for i in range(1, n):
        wp = np.linalg.matrix_power(p, (n - i) % n) @ w  # P^(-i) W
        op = np.zeros((n, n), dtype=complex)
        op[0, i] = ch
        for r in range(1, n - 1):
            op[r, :] = wp[:, r - 1] * s / math.sqrt(n - 2)
        op[n - 1, :] = wp[:, n - 1] * s / math.sqrt(n - 1)
        ops.append(op)
    return KrausSet(n, n, tuple(ops))


def ndim_theta0(n: int) -> KrausSet:
    """theta = 0 member in dimension n: exactly CPTP and self-complementary.

    K1 = diag(1, 1/sqrt2, ..., 1/sqrt2); K_i (i >= 2) has its only entry
    1/sqrt2 at row 1, column i.  For n = 2 this is amplitude damping with
    p = 1/2.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    ops = [np.diag([1.0] + [SQRT_HALF] * (n - 1)).astype(complex)]
    for i in range(1, n):
        op = np.zeros((n, n), dtype=complex)
        op[0, i] = SQRT_HALF
        ops.append(op)
    return KrausSet(n, n, tuple(ops))


def dft_matrix(n: int) -> np.ndarray:
    """Unitary discrete Fourier transform matrix."""
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return np.exp(2j * math.pi * j * k / n) / math.sqrt(n)


@dataclass(frozen=True)
class FamilyParams:
    """Validated parameter bundle for the family constructors."""

    family: str
    theta: float = 0.0
    phi: float = 0.0
    p: float = 0.5
    dim: int = 2
    w: np.ndarray | None = field(default=None)

    def __post_init__(self):
        if self.family not in FAMILY_IDS:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILY_IDS}")


def make_family(params: FamilyParams) -> KrausSet:
    """Dispatch a FamilyParams bundle to the matching constructor."""
    fam = params.family
    if fam == "qubit-a":
        return qubit_family_a(params.theta, params.phi)
    if fam == "qubit-b":
        return qubit_family_b(params.theta, params.phi)
    if fam == "ad":
        return amplitude_damping(params.p)
    if fam == "ndim-theta0":
        return ndim_theta0(params.dim)
    w = params.w if params.w is not None else np.eye(params.dim if fam == "ndim" else 3)
    if fam == "qutrit":
        return qutrit_family(params.theta, w)
    return ndim_family(params.dim, params.theta, w)
