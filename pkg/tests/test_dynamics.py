import numpy as np
import pytest

from qbmag import dynamics
from qbmag.bath import Cutoff, SpectralDensity
from qbmag.dynamics import SystemParams, f_weight, frequency_shift, heisenberg_transfer, mode_constants
from qbmag.errors import DegenerateSystemError, DomainError


def test_modes_no_field():
    mc = mode_constants(SystemParams(omega0=1.0, omega_c=0.0))
    assert mc.a_prime == pytest.approx(1.0)
    assert mc.b_prime == pytest.approx(1.0)
    assert mc.m_coef == pytest.approx(0.5)
    assert mc.p_coef == pytest.approx(0.5)
    assert mc.g_coef == pytest.approx(1.0 / np.sqrt(2.0))


def test_modes_identities_random():
    rng = np.random.default_rng(5)
    for _ in range(40):
        sys = SystemParams(omega0=rng.uniform(0.1, 25), omega_c=rng.uniform(0, 25))
        mc = mode_constants(sys)
        assert mc.a_prime >= mc.b_prime >= 0
        assert mc.m_coef + mc.p_coef == pytest.approx(1.0, abs=1e-15)
        assert mc.a_prime**2 + mc.b_prime**2 == pytest.approx(
            2 * sys.omega0**2 + sys.omega_c**2, rel=1e-12
        )
        assert (mc.a_prime * mc.b_prime) ** 2 == pytest.approx(sys.omega0**4, rel=1e-12)


def test_degenerate_system():
    with pytest.raises(DegenerateSystemError):
        SystemParams(omega0=0.0, omega_c=0.0)


def test_f_weights_at_zero():
    sys = SystemParams(omega0=10.0, omega_c=1.0)
    assert f_weight(sys, 0.0, "F1") == pytest.approx(1.0)
    assert f_weight(sys, 0.0, "F2") == 0.0
    assert f_weight(sys, 0.0, "F3") == 0.0


def test_f1_complex_arithmetic_oracle():
    # re-evaluate the raw cosh expression with A = iA', B = iB'
    sys = SystemParams(omega0=10.0, omega_c=1.0)
    mc = mode_constants(sys)
    tau = 0.1
    root = np.sqrt(4 * sys.omega0**2 + sys.omega_c**2)
    a, b = 1j * mc.a_prime, 1j * mc.b_prime
    raw = (
        (-sys.omega_c + root) * np.cosh(a * tau) + (sys.omega_c + root) * np.cosh(b * tau)
    ) / (2 * root)
    assert abs(raw.imag) < 1e-15
    assert f_weight(sys, tau, "F1") == pytest.approx(raw.real, rel=1e-14)


def test_f1_bounded():
    rng = np.random.default_rng(3)
    for _ in range(30):
        sys = SystemParams(omega0=rng.uniform(0.1, 20), omega_c=rng.uniform(0, 20))
        taus = rng.uniform(0, 20, 40)
        assert np.all(np.abs(f_weight(sys, taus, "F1")) <= 1 + 1e-12)


def test_f2_vanishes_with_field():
    sys = SystemParams(omega0=3.0, omega_c=1e-8)
    taus = np.linspace(0, 5, 50)
    assert np.max(np.abs(f_weight(sys, taus, "F2"))) < 1e-6


def test_transfer_identity_at_zero():
    sys = SystemParams(omega0=10.0, omega_c=1.0)
    assert np.allclose(heisenberg_transfer(sys, 0.0), np.eye(4), atol=1e-14)


def _eom_residual(sys, tau):
    h = 8e-4 / max(1.0, np.hypot(sys.omega0, sys.omega_c))
    tm, t0, tp = (heisenberg_transfer(sys, tau + d) for d in (-h, 0.0, h))
    acc = (tp - 2 * t0 + tm) / h**2
    vel = (tp - tm) / (2 * h)
    rx = acc[0] + sys.omega0**2 * t0[0] - sys.omega_c * vel[1]
    ry = acc[1] + sys.omega0**2 * t0[1] + sys.omega_c * vel[0]
    scale = max(np.max(np.abs(acc)), 1.0)
    return max(np.max(np.abs(rx)), np.max(np.abs(ry))) / scale


def test_transfer_solves_equations_of_motion():
    rng = np.random.default_rng(17)
    for _ in range(50):
        sys = SystemParams(omega0=rng.uniform(0.2, 15), omega_c=rng.uniform(0, 15))
        assert _eom_residual(sys, rng.uniform(0.05, 2.0)) < 1e-6


def test_transfer_x_row_matches_f1():
    rng = np.random.default_rng(23)
    for _ in range(20):
        sys = SystemParams(omega0=rng.uniform(0.5, 15), omega_c=rng.uniform(0, 10))
        tau = rng.uniform(0, 3)
        T = heisenberg_transfer(sys, tau)
        assert T[0, 0] == pytest.approx(f_weight(sys, tau, "F1"), rel=1e-12, abs=1e-14)
        # Y-coefficient carries the cross weight up to the -1/sqrt(2) prefactor
        assert T[0, 1] == pytest.approx(-f_weight(sys, tau, "F2") / np.sqrt(2), rel=1e-12, abs=1e-14)


def test_frequency_shift_zero_coupling():
    sys = SystemParams(omega0=1.0, omega_c=0.0)
    sd = SpectralDensity(1.0, Cutoff.EXPONENTIAL, 10.0, 0.0)
    assert frequency_shift(sys, sd, 5.0) == 0.0


def test_frequency_shift_converged_and_negative():
    sys = SystemParams(omega0=1.0, omega_c=0.0)
    sd = SpectralDensity(1.0, Cutoff.EXPONENTIAL, 10.0, 0.05)
    v1 = frequency_shift(sys, sd, 40.0)
    v2, tail = frequency_shift(sys, sd, 80.0, with_tail_estimate=True)
    assert v1 == pytest.approx(v2, rel=0.01)
    assert v2 < 0  # softening at weak coupling
    assert tail >= 0


def test_frequency_shift_domain():
    sys = SystemParams(omega0=1.0, omega_c=0.0)
    sd = SpectralDensity(1.0, Cutoff.EXPONENTIAL, 10.0)
    with pytest.raises(DomainError):
        frequency_shift(sys, sd, 0.0)


def test_momentum_weights_exposed():
    # F3/F4 are inspection-only weights of the dropped momentum terms
    sys = SystemParams(omega0=2.0, omega_c=1.0)
    assert np.isfinite(f_weight(sys, 0.7, "F3"))
    assert f_weight(sys, 0.0, "F4") == pytest.approx(
        4 * sys.omega_c / (sys.m * np.sqrt(4 * sys.omega0**2 + sys.omega_c**2))
    )
    with pytest.raises(ValueError):
        f_weight(sys, 0.1, "F9")
