import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qchan import (
    DensityMatrix,
    Ensemble,
    amplitude_damping,
    apply,
    choi_state,
    classical_capacity_lower_bound,
    coherent_information,
    concurrence,
    concurrence_closed_form,
    concurrence_from_negativity,
    dephasing,
    entanglement_evolution_factor,
    holevo_chi,
    identity_channel,
    kraus,
    map_entropy,
    negativity,
    negativity_closed_form,
    ndim_theta0,
    qubit_family_a,
    qubit_family_b,
    qutrit_family,
    random_density_matrix,
    spin_flip,
    von_neumann_entropy,
    wootters_spectrum,
)

from conftest import bell_state, pure_concurrence, x_state_concurrence

LN2 = math.log(2.0)
# High-precision anchors, each derived analytically:
#   S(diag(1/4, 3/4)) and chi = S(diag(1/4, 3/4)) - ln(2)/2
ANCHOR_ENTROPY = 0.25 * math.log(4.0) + 0.75 * math.log(4.0 / 3.0)
ANCHOR_CHI = ANCHOR_ENTROPY - LN2 / 2.0

GRID = np.linspace(0.0, math.pi / 2.0, 100)


def basis_states(dim=2):
    return [DensityMatrix.pure(np.eye(dim)[:, i]) for i in range(dim)]


# ------------------------------------------------------------ entropy


def test_entropy_of_pure_state_is_zero(rng):
    v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    assert von_neumann_entropy(DensityMatrix.pure(v)) <= 1e-12


def test_entropy_anchor_value():
    s = von_neumann_entropy(DensityMatrix(np.diag([0.25, 0.75]).astype(complex)))
    assert abs(s - 0.56233) <= 1e-4
    assert abs(s - ANCHOR_ENTROPY) <= 1e-12


def test_entropy_of_maximally_mixed():
    assert abs(von_neumann_entropy(DensityMatrix.maximally_mixed(2)) - LN2) <= 1e-12


def test_entropy_rejects_non_state():
    with pytest.raises(ValueError):
        von_neumann_entropy(np.diag([1.5, -0.5]))


def test_map_entropy_values():
    assert map_entropy(identity_channel(2)) <= 1e-12
    paulis = [
        np.eye(2, dtype=complex),
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]]),
        np.array([[1, 0], [0, -1]], dtype=complex),
    ]
    depolarizing = kraus([p / 2 for p in paulis])
    assert abs(map_entropy(depolarizing) - math.log(4.0)) <= 1e-12
    assert abs(map_entropy(qubit_family_a(0.0)) - ANCHOR_ENTROPY) <= 1e-12


def test_map_entropy_refuses_broken_channels():
    with pytest.raises(ValueError, match="trace preserving"):
        map_entropy(qutrit_family(np.pi / 4, np.eye(3)))


def test_map_entropy_equals_output_entropy_of_maximally_mixed():
    for theta in GRID:
        ch = qubit_family_a(float(theta))
        out = apply(ch, DensityMatrix.maximally_mixed(2))
        assert abs(map_entropy(ch) - von_neumann_entropy(out)) <= 1e-9


def test_map_entropy_bounds_for_family_members():
    for theta in GRID:
        s = map_entropy(qubit_family_a(float(theta)))
        assert 0.5 * LN2 <= s <= LN2 + 1e-12
        assert s - 0.5 * LN2 >= 0.2
    for n in range(2, 7):
        s = map_entropy(ndim_theta0(n))
        assert 0.5 * math.log(n) - 1e-12 <= s <= math.log(n) + 1e-12


# ------------------------------------------------- coherent information


def test_coherent_information_vanishes_for_selfcomplementary(rng):
    for ch in (qubit_family_a(0.35, 1.1), qubit_family_b(2.0, 0.4), ndim_theta0(3)):
        for _ in range(25):
            rho = random_density_matrix(ch.n_in, rng)
            assert abs(coherent_information(ch, rho)) <= 1e-10


def test_coherent_information_of_identity():
    got = coherent_information(identity_channel(2), DensityMatrix.maximally_mixed(2))
    assert abs(got - LN2) <= 1e-12


def test_coherent_information_of_dephasing_on_classical_input():
    # dephasing is self-complementary, so system and environment outputs
    # coincide and the coherent information is exactly zero.
    rho = DensityMatrix(np.diag([0.2, 0.8]).astype(complex))
    assert abs(coherent_information(dephasing(), rho)) <= 1e-12


# ------------------------------------------------------------ Holevo


def test_holevo_chi_of_identical_states():
    rho = DensityMatrix.maximally_mixed(2)
    assert holevo_chi(Ensemble((0.5, 0.5), (rho, rho))) <= 1e-12


def test_holevo_chi_of_orthogonal_pure_states():
    ens = Ensemble((0.5, 0.5), tuple(basis_states()))
    assert abs(holevo_chi(ens) - LN2) <= 1e-12


def test_holevo_chi_anchor():
    ch = qubit_family_a(0.0)
    outputs = tuple(apply(ch, s) for s in basis_states())
    chi = holevo_chi(Ensemble((0.5, 0.5), outputs))
    assert abs(chi - 0.215761) <= 1e-5
    assert abs(chi - ANCHOR_CHI) <= 1e-12


def test_holevo_chi_nonnegative_on_random_ensembles(rng):
    for _ in range(30):
        states = tuple(random_density_matrix(2, rng) for _ in range(3))
        w = rng.random(3)
        w = w / w.sum()
        assert holevo_chi(Ensemble(tuple(w), states)) >= -1e-12


def test_ensemble_validation():
    rho = DensityMatrix.maximally_mixed(2)
    with pytest.raises(ValueError, match="sum"):
        Ensemble((0.5, 0.4), (rho, rho))
    with pytest.raises(ValueError, match="nonnegative"):
        Ensemble((1.5, -0.5), (rho, rho))
    with pytest.raises(ValueError, match="dimensions"):
        Ensemble((0.5, 0.5), (rho, DensityMatrix.maximally_mixed(3)))


def test_capacity_bound_anchor_and_positivity():
    assert abs(
        classical_capacity_lower_bound(qubit_family_a(0.0), basis_states()) - ANCHOR_CHI
    ) <= 1e-5
    assert abs(classical_capacity_lower_bound(dephasing(), basis_states()) - LN2) <= 1e-12
    for theta in GRID:
        chi = classical_capacity_lower_bound(qubit_family_a(float(theta)), basis_states())
        assert chi > 0.0


def test_capacity_bound_rejects_bad_alphabets():
    plus = DensityMatrix.pure([1.0, 1.0])
    with pytest.raises(ValueError, match="overlap"):
        classical_capacity_lower_bound(qubit_family_a(0.3), [basis_states()[0], plus])
    mixed = DensityMatrix.maximally_mixed(2)
    with pytest.raises(ValueError, match="pure"):
        classical_capacity_lower_bound(qubit_family_a(0.3), [mixed])


# ------------------------------------------------------- entanglement


def test_spin_flip_examples():
    bell = bell_state()
    assert np.abs(spin_flip(bell) - bell).max() <= 1e-12
    ket00 = np.zeros((4, 4), dtype=complex)
    ket00[0, 0] = 1.0
    ket11 = np.zeros((4, 4), dtype=complex)
    ket11[3, 3] = 1.0
    assert np.abs(spin_flip(ket00) - ket11).max() <= 1e-12
    with pytest.raises(ValueError, match="4x4"):
        spin_flip(np.eye(2))


def test_wootters_spectrum_of_family_point():
    lam = wootters_spectrum(choi_state(qubit_family_a(0.0)))
    assert abs(lam[0] - math.sqrt(0.5)) <= 1e-12
    assert np.abs(lam[1:]).max() <= 1e-12


def test_concurrence_of_bell_state():
    assert abs(concurrence(bell_state()) - 1.0) <= 1e-12


def test_concurrence_at_entanglement_breaking_point():
    assert concurrence(choi_state(qubit_family_a(math.pi / 4))) <= 1e-9


def test_concurrence_of_family_endpoint():
    got = concurrence(choi_state(qubit_family_a(0.0)))
    assert abs(got - 1.0 / math.sqrt(2.0)) <= 1e-12


def test_concurrence_against_pure_state_oracle(rng):
    for _ in range(25):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v /= np.linalg.norm(v)
        got = concurrence(DensityMatrix.pure(v))
        assert abs(got - pure_concurrence(v)) <= 1e-10


def test_concurrence_against_x_state_oracle(rng):
    for theta in np.linspace(0.0, math.pi / 2.0, 25):
        omega = choi_state(qubit_family_a(float(theta)))
        assert abs(concurrence(omega) - x_state_concurrence(omega.matrix)) <= 1e-10
    for _ in range(20):
        # random X-shaped states
        d = rng.random(4)
        d /= d.sum()
        z = min(math.sqrt(d[1] * d[2]), math.sqrt(d[0] * d[3])) * rng.random()
        m = np.diag(d).astype(complex)
        m[1, 2] = m[2, 1] = z
        omega = DensityMatrix(m)
        assert abs(concurrence(omega) - x_state_concurrence(m)) <= 1e-10


def test_concurrence_closed_form_matches_numeric_on_grid():
    for theta in list(GRID) + [math.pi / 4]:
        omega = choi_state(qubit_family_a(float(theta)))
        assert abs(concurrence(omega) - concurrence_closed_form(float(theta))) <= 1e-9


def test_concurrence_closed_form_values_and_domain():
    root = 1.0 / math.sqrt(2.0)
    assert abs(concurrence_closed_form(0.0) - root) <= 1e-15
    assert concurrence_closed_form(math.pi / 4) == 0.0
    assert abs(concurrence_closed_form(math.pi / 2) - root) <= 1e-15
    with pytest.raises(ValueError):
        concurrence_closed_form(-0.1)
    with pytest.raises(ValueError):
        concurrence_closed_form(2.0)


def test_negativity_examples():
    assert abs(negativity(bell_state(), (2, 2)) - 0.5) <= 1e-12
    assert abs(negativity(choi_state(qubit_family_a(0.0)), (2, 2)) - 0.25) <= 1e-12
    product = DensityMatrix(np.kron(np.diag([0.3, 0.7]), np.diag([0.4, 0.6])).astype(complex))
    assert negativity(product, (2, 2)) <= 1e-12
    with pytest.raises(ValueError, match="dimension"):
        negativity(bell_state(), (2, 3))


def test_negativity_closed_form_matches_numeric_on_grid():
    for theta in GRID:
        omega = choi_state(qubit_family_a(float(theta)))
        assert abs(negativity(omega, (2, 2)) - negativity_closed_form(float(theta))) <= 1e-9


def test_negativity_closed_form_values():
    assert abs(negativity_closed_form(0.0) - 0.25) <= 1e-15
    assert negativity_closed_form(math.pi / 4) <= 1e-15
    assert abs(negativity_closed_form(math.pi / 2) - 0.25) <= 1e-15


def test_concurrence_negativity_ordering():
    for theta in GRID:
        omega = choi_state(qubit_family_a(float(theta)))
        assert concurrence(omega) >= negativity(omega, (2, 2)) - 1e-10


def test_concurrence_from_negativity():
    root = 1.0 / math.sqrt(2.0)
    assert abs(concurrence_from_negativity(0.25, "lower") - root) <= 1e-12
    assert concurrence_from_negativity(0.0, "point") == 0.0
    for theta in GRID:
        branch = "lower" if theta < math.pi / 4 else "upper"
        via_neg = concurrence_from_negativity(negativity_closed_form(float(theta)), branch)
        assert abs(via_neg - concurrence_closed_form(float(theta))) <= 1e-10
    with pytest.raises(ValueError):
        concurrence_from_negativity(0.3)
    with pytest.raises(ValueError):
        concurrence_from_negativity(0.1, "sideways")


def test_entanglement_evolution_factor():
    bell = DensityMatrix(bell_state())
    predicted, direct = entanglement_evolution_factor(qubit_family_a(math.pi / 4), bell)
    assert predicted <= 1e-9 and direct <= 1e-9

    predicted, direct = entanglement_evolution_factor(qubit_family_a(0.0), bell)
    root = 1.0 / math.sqrt(2.0)
    assert abs(predicted - root) <= 1e-9
    assert abs(direct - root) <= 1e-9

    product = DensityMatrix.pure([1.0, 0.0, 0.0, 0.0])
    predicted, direct = entanglement_evolution_factor(qubit_family_a(0.9), product)
    assert predicted <= 1e-12 and direct <= 1e-9


def test_entanglement_evolution_factor_on_random_pure_inputs(rng):
    for _ in range(20):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        theta = float(rng.uniform(0.0, math.pi))
        predicted, direct = entanglement_evolution_factor(
            qubit_family_a(theta), DensityMatrix.pure(v)
        )
        assert abs(predicted - direct) <= 1e-8


def test_entanglement_evolution_factor_rejects_bad_dims():
    with pytest.raises(ValueError, match="qubit channel"):
        entanglement_evolution_factor(ndim_theta0(3), DensityMatrix(bell_state()))
    with pytest.raises(ValueError, match="two-qubit"):
        entanglement_evolution_factor(qubit_family_a(0.1), DensityMatrix.maximally_mixed(2))


def test_amplitude_damping_choi_concurrence_is_sqrt_one_minus_p(rng):
    # independent known value for the damping family
    for p in (0.0, 0.25, 0.5, 0.9):
        got = concurrence(choi_state(amplitude_damping(p)))
        assert abs(got - math.sqrt(1.0 - p)) <= 1e-10


# Within ~1e-5 of the axes the smaller Wootters root (min(sin, cos)^2 / 2)
# drops below what a double-precision eigensolver can resolve, so the
# 1e-9 agreement is tested on the resolvable interior; the exact axis
# points are covered by test_concurrence_closed_form_values_and_domain.
@given(theta=st.floats(1e-4, math.pi / 2 - 1e-4))
def test_closed_forms_agree_with_numeric_everywhere(theta):
    omega = choi_state(qubit_family_a(theta))
    assert abs(concurrence(omega) - concurrence_closed_form(theta)) <= 1e-9
    assert abs(negativity(omega, (2, 2)) - negativity_closed_form(theta)) <= 1e-9


def test_closed_form_agreement_at_exact_axes():
    for theta in (0.0, math.pi / 2):
        omega = choi_state(qubit_family_a(theta))
        assert abs(concurrence(omega) - concurrence_closed_form(theta)) <= 1e-12
        assert abs(negativity(omega, (2, 2)) - negativity_closed_form(theta)) <= 1e-12
