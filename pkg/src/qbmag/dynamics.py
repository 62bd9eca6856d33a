"""Closed-system quantities for the charged oscillator in a magnetic field.

The trapped charge in a perpendicular field B has the two real mode
frequencies

    A' = (sqrt(4 w0^2 + wc^2) + wc) / 2,   B' = (sqrt(4 w0^2 + wc^2) - wc) / 2,

with wc = eB/m the cyclotron frequency.  They satisfy A'B' = w0^2 and
A'^2 + B'^2 = 2 w0^2 + wc^2, and reduce to w0 at wc = 0.  The kernel-weight
functions F1..F4 and the Heisenberg transfer matrix are built on the same
modes, so the transfer matrix solves the classical equations of motion
x'' = -w0^2 x + wc y', y'' = -w0^2 y - wc x' exactly.
"""

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .bath import _reference_kernel_fn, dissipation_kernel_quadrature
from .errors import DegenerateSystemError, DomainError

_F_NAMES = ("F1", "F2", "F3", "F4")


@dataclass(frozen=True)
class SystemParams:
    """Particle, trap, field and unit parameters (frequencies in gamma/m)."""

    omega0: float
    omega_c: float
    m: float = 1.0
    gamma: float = 1.0
    hbar: float = 1.0
    omega_th: float = 0.0

    def __post_init__(self):
        if self.m <= 0 or self.hbar <= 0:
            raise DomainError("m and hbar must be > 0")
        if self.omega0 < 0 or self.omega_c < 0:
            raise DomainError("omega0 and omega_c must be >= 0")
        if self.omega0 == 0 and self.omega_c == 0:
            raise DegenerateSystemError("omega0 = omega_c = 0 leaves the modes undefined")


@dataclass(frozen=True)
class ModeConstants:
    a_prime: float
    b_prime: float
    m_coef: float
    p_coef: float
    g_coef: float


def mode_constants(sys):
    """Mode frequencies A' >= B' >= 0 and the weights M, P (M + P = 1) and G."""
    root = np.sqrt(4.0 * sys.omega0**2 + sys.omega_c**2)
    a_prime = 0.5 * (root + sys.omega_c)
    b_prime = 0.5 * (root - sys.omega_c)
    m_coef = (root - sys.omega_c) / (2.0 * root)
    p_coef = (root + sys.omega_c) / (2.0 * root)
    g_coef = np.sqrt(2.0) * sys.omega0**2 / root
    return ModeConstants(a_prime, b_prime, m_coef, p_coef, g_coef)


def _sinc(z, tau):
    """sin(z tau)/z, finite at z = 0."""
    return tau * np.sinc(z * np.asarray(tau) / np.pi)


def f_weight(sys, tau, which="F1"):
    """Kernel-weight functions F1..F4 of the decoherence master equation.

    F1 multiplies the position-position noise terms (F1(0) = 1), F2 the
    cross x-y terms (F2(0) = 0), F3 and F4 the momentum-damping terms that
    the decoherence-only equation drops; they are exposed for inspection.
    Accepts scalar or array tau >= 0.
    """
    tau = np.asarray(tau, dtype=float)
    mc = mode_constants(sys)
    ap, bp = mc.a_prime, mc.b_prime
    root = ap + bp
    if which == "F1":
        out = mc.m_coef * np.cos(ap * tau) + mc.p_coef * np.cos(bp * tau)
    elif which == "F2":
        if ap - bp < 1e-6 * ap:
            # cancellation-safe midpoint form of sin(b t)/b - sin(a t)/a
            zm = 0.5 * (ap + bp)
            diff = (ap - bp) * (zm * tau * np.cos(zm * tau) - np.sin(zm * tau)) / zm**2
            out = mc.g_coef * diff
        else:
            out = mc.g_coef * (_sinc(bp, tau) - _sinc(ap, tau))
    elif which == "F3":
        out = -(
            (sys.omega_c + root) * _sinc(ap, tau) + (root - sys.omega_c) * _sinc(bp, tau)
        ) / (sys.m * np.sqrt(2.0) * root)
    elif which == "F4":
        out = 2.0 * sys.omega_c * (np.cos(ap * tau) + np.cos(bp * tau)) / (sys.m * root)
    else:
        raise ValueError("which must be one of %s" % (_F_NAMES,))
    return out if out.ndim else float(out)


def heisenberg_transfer(sys, tau):
    """Transfer matrix T(tau) with (x, y, vx, vy)(tau) = T(tau) (X, Y, Vx, Vy).

    T(0) is the identity and every column solves the classical equations of
    motion of the trapped charge.  The x-row coefficient of X equals
    F1(tau); the coefficient of Y equals -F2(tau)/sqrt(2).
    """
    tau = float(tau)
    mc = mode_constants(sys)
    w1, w2 = mc.a_prime, mc.b_prime
    root = w1 + w2
    c1, c2 = np.cos(w1 * tau), np.cos(w2 * tau)
    s1, s2 = np.sin(w1 * tau), np.sin(w2 * tau)
    # position rows from zeta = x + i y, zeta(t) = [(w1 e^{i w2 t} + w2 e^{-i w1 t}) Z
    #                                              + i (e^{-i w1 t} - e^{i w2 t}) W]/root
    xx = (w1 * c2 + w2 * c1) / root
    xy = -(w1 * s2 - w2 * s1) / root
    xvx = (s1 + s2) / root
    xvy = -(c1 - c2) / root
    # time derivatives of the four coefficients above
    dxx = (-w1 * w2 * s2 - w2 * w1 * s1) / root
    dxy = -(w1 * w2 * c2 - w2 * w1 * c1) / root
    dxvx = (w1 * c1 + w2 * c2) / root
    dxvy = (w1 * s1 - w2 * s2) / root
    return np.array(
        [
            [xx, xy, xvx, xvy],
            [-xy, xx, -xvy, xvx],
            [dxx, dxy, dxvx, dxvy],
            [-dxy, dxx, -dxvy, dxvx],
        ]
    )


def frequency_shift(sys, sd, t_max, with_tail_estimate=False):
    """Trap-frequency renormalisation -(2/m) int_0^{t_max} eta(tau) F1(tau) dtau.

    Uses the closed transform of eta where catalogued, the defining
    quadrature otherwise.  The tail estimate is the contribution of
    [t_max, 4 t_max], a self-convergence proxy for the truncation error.
    """
    if t_max <= 0:
        raise DomainError("t_max must be > 0")
    eta_fn = _reference_kernel_fn(sd, None, "sin")
    mc = mode_constants(sys)

    if eta_fn is not None:
        freq = sd.lam + mc.a_prime
        xg, wg = np.polynomial.legendre.leggauss(16)

        def block(a, b):
            n = max(8, int(np.ceil((b - a) * freq / np.pi)))
            edges = np.linspace(a, b, n + 1)
            mid = 0.5 * (edges[1:] + edges[:-1])
            half = 0.5 * (edges[1:] - edges[:-1])
            u = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
            w = (half[:, None] * wg[None, :]).ravel()
            vals = np.asarray(eta_fn(u)) * f_weight(sys, u, "F1")
            return float(np.sum(w * vals))

    else:

        def block(a, b):
            fn = lambda t: dissipation_kernel_quadrature(sd, t) * f_weight(sys, t, "F1")
            return integrate.quad(fn, a, b, limit=400)[0]

    main = block(0.0, t_max)
    tail = block(t_max, 4.0 * t_max)
    shift = -(2.0 / sys.m) * main
    if with_tail_estimate:
        return shift, abs(2.0 / sys.m * tail)
    return shift
