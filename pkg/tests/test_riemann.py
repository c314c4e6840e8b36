"""Exact Riemann solver: star-state oracle values, symmetry, limiting
cases, the self-similar sampler, and vacuum detection."""

import numpy as np
import pytest

from cfweno.riemann import VacuumError, exact_riemann, wave_pattern

# star state frozen from an independent Newton iteration on the pressure
# function (tolerance 1e-13)
SOD_P_STAR = 0.30313017805064685
SOD_U_STAR = 0.9274526200489499


def test_sod_star_state_oracle():
    p_s, u_s, _ = exact_riemann(1.0, 0.0, 1.0, 0.125, 0.0, 0.1)
    assert p_s == pytest.approx(SOD_P_STAR, abs=1e-12)
    assert u_s == pytest.approx(SOD_U_STAR, abs=1e-12)


def test_sod_wave_pattern():
    left, right = wave_pattern(1.0, 0.0, 1.0, 0.125, 0.0, 0.1)
    assert left == "rarefaction" and right == "shock"


def test_identical_states_trivial():
    p_s, u_s, sample = exact_riemann(1.0, 0.5, 2.0, 1.0, 0.5, 2.0)
    assert p_s == pytest.approx(2.0, rel=1e-12)
    assert u_s == pytest.approx(0.5, rel=1e-12)
    rho, u, p = sample(np.array([0.5]))
    assert rho[0] == pytest.approx(1.0, rel=1e-12)
    assert p[0] == pytest.approx(2.0, rel=1e-12)


def test_symmetric_collision_stagnates():
    p_s, u_s, _ = exact_riemann(1.0, 2.0, 1.0, 1.0, -2.0, 1.0)
    assert u_s == pytest.approx(0.0, abs=1e-12)
    assert p_s > 1.0        # two shocks compress the middle
    left, right = wave_pattern(1.0, 2.0, 1.0, 1.0, -2.0, 1.0)
    assert left == "shock" and right == "shock"


def test_symmetric_expansion():
    p_s, u_s, _ = exact_riemann(1.0, -1.0, 1.0, 1.0, 1.0, 1.0)
    assert u_s == pytest.approx(0.0, abs=1e-12)
    assert p_s < 1.0
    left, right = wave_pattern(1.0, -1.0, 1.0, 1.0, 1.0, 1.0)
    assert left == "rarefaction" and right == "rarefaction"


def test_mirror_symmetry():
    pf, uf, _ = exact_riemann(1.0, 0.3, 1.0, 0.5, -0.2, 0.4)
    pb, ub, _ = exact_riemann(0.5, 0.2, 0.4, 1.0, -0.3, 1.0)
    assert pf == pytest.approx(pb, rel=1e-12)
    assert uf == pytest.approx(-ub, rel=1e-12)


def test_sampler_far_field_recovers_inputs():
    _, _, sample = exact_riemann(1.0, 0.0, 1.0, 0.125, 0.0, 0.1)
    rho, u, p = sample(np.array([-10.0, 10.0]))
    np.testing.assert_allclose([rho[0], u[0], p[0]], [1.0, 0.0, 1.0],
                               atol=1e-14)
    np.testing.assert_allclose([rho[1], u[1], p[1]], [0.125, 0.0, 0.1],
                               atol=1e-14)


def test_sampler_profile_consistency():
    """Sampled profile is admissible and jumps only across the three waves."""
    p_s, u_s, sample = exact_riemann(1.0, 0.0, 1.0, 0.125, 0.0, 0.1)
    xi = np.linspace(-3.0, 3.0, 2001)
    rho, u, p = sample(xi)
    assert np.all(rho > 0) and np.all(p > 0)
    # pressure and velocity are continuous across the contact: the middle
    # region carries the star values
    mid = (xi > u_s + 1e-3) & (xi < 1.2)
    assert np.all(np.abs(p[mid & (p > 0.2)] - p_s)[:5] < 1e-10)
    i = np.searchsorted(xi, u_s + 1e-6)
    assert u[i] == pytest.approx(u_s, abs=1e-10)
    assert p[i] == pytest.approx(p_s, abs=1e-10)


def test_vacuum_generation_detected():
    with pytest.raises(VacuumError):
        exact_riemann(1.0, -10.0, 1.0, 1.0, 10.0, 1.0)
