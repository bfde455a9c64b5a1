import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "qchan",
    deadline=None,
    max_examples=30,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qchan")


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def pure_concurrence(vector) -> float:
    """Independent oracle: C(|psi>) = 2 |ad - bc| for a 2-qubit ket."""
    a, b, c, d = np.asarray(vector, dtype=complex).reshape(4)
    return 2.0 * abs(a * d - b * c)


def x_state_concurrence(m) -> float:
    """Independent oracle for X-shaped two-qubit states.

    C = 2 max{0, |m23| - sqrt(m11 m44), |m14| - sqrt(m22 m33)}.
    """
    m = np.asarray(m)
    inner = abs(m[1, 2]) - np.sqrt(abs(m[0, 0] * m[3, 3]))
    outer = abs(m[0, 3]) - np.sqrt(abs(m[1, 1] * m[2, 2]))
    return 2.0 * max(0.0, inner, outer)


def bell_state() -> np.ndarray:
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    return np.outer(v, v)
