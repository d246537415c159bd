"""Equations of motion generated by a linear Hamiltonian, on every chart.

The returned velocities are time derivatives (the ``i`` on the left-hand side
of the printed equations has already been divided out).
"""

from __future__ import annotations

import numpy as np

from sjd.domains import SJDiskPoint
from sjd.dynamics.coeffs import Coeffs, HamiltonianCoeffs, NonHermitianCoeffs
from sjd.geometry import diff_op_coeffs

CHARTS = ("disk", "fc", "uhp", "fc1")


def _riccati_disk(w, c):
    return -1j * (c.eps_minus + c.eps_0 * w + c.eps_plus * w * w)


def _riccati_uhp(v, c):
    s = c.eps_0 + c.eps_plus + c.eps_minus
    return -0.5 * (s * v * v + 2j * (c.eps_minus - c.eps_plus) * v + c.eps_0 - c.eps_minus - c.eps_plus)


def _eta_dot(eta, c):
    return -1j * (c.eps_a + c.eps_minus * np.conj(eta) + 0.5 * c.eps_0 * eta)


def eom(chart: str, state, coeffs: Coeffs):
    """Velocity ``(d zeta1/dt, d zeta2/dt)`` at ``state = (zeta1, zeta2)``."""
    if isinstance(coeffs, NonHermitianCoeffs):
        if chart == "fc":
            return eom_nonhermitian_fc(state, coeffs)
        if chart == "disk":
            return eom_nonhermitian_disk(state, coeffs)
        raise ValueError(f"non-hermitian dynamics are provided on 'disk' and 'fc', not {chart!r}")
    z1, z2 = state
    c = coeffs
    if chart == "disk":
        z, w = z1, z2
        zdot = -1j * (c.eps_a + np.conj(c.eps_a) * w + (0.5 * c.eps_0 + c.eps_plus * w) * z)
        return zdot, _riccati_disk(w, c)
    if chart == "fc":
        return _eta_dot(z1, c), _riccati_disk(z2, c)
    if chart == "uhp":
        u, v = z1, z2
        s = c.eps_0 + c.eps_plus + c.eps_minus
        ea = c.eps_a
        udot = -0.5 * ((ea + np.conj(ea)) * v + 1j * (ea - np.conj(ea))
                       + (s * v + 1j * (c.eps_minus - c.eps_plus)) * u)
        return udot, _riccati_uhp(v, c)
    if chart == "fc1":
        return _eta_dot(z1, c), _riccati_uhp(z2, c)
    raise ValueError(f"unknown chart {chart!r}")


def eom_nonhermitian_disk(state, c: NonHermitianCoeffs):
    z, w = state
    zdot = -1j * (c.eps_a + c.eps_b * w + (0.5 * c.eps_0 + c.eps_plus * w) * z)
    return zdot, _riccati_disk(w, c)


def eom_nonhermitian_fc(state, c: NonHermitianCoeffs):
    """i d(eta)/dt = (R + S eta + T conj(eta)) / (1 - |w|^2)."""
    eta, w = state
    ww = np.abs(w) ** 2
    R = c.eps_a + (c.eps_b - np.conj(c.eps_a)) * w - np.conj(c.eps_b) * ww
    S = 0.5 * c.eps_0 + (c.eps_plus - np.conj(c.eps_minus)) * w - 0.5 * np.conj(c.eps_0) * ww
    T = c.eps_minus + 0.5 * (c.eps_0 - np.conj(c.eps_0)) * w - np.conj(c.eps_plus) * ww
    etadot = -1j * (R + S * eta + T * np.conj(eta)) / (1 - ww)
    return etadot, _riccati_disk(w, c)


def eom_from_generators(state, coeffs: HamiltonianCoeffs, k: float = 1.0):
    """Disk-chart velocity assembled as i zdot_b = sum_l eps_l Q_{l,b}.

    Independent route to the disk equations through the differential
    action of the generators; ``k`` enters only P and cancels.
    """
    z, w = state
    ops = diff_op_coeffs(SJDiskPoint(z, w), k)
    weights = {"a": coeffs.eps_a, "a+": np.conj(coeffs.eps_a), "K0": coeffs.eps_0,
               "K+": coeffs.eps_plus, "K-": coeffs.eps_minus}
    qz = sum(weights[g] * ops[g][1] for g in weights)
    qw = sum(weights[g] * ops[g][2] for g in weights)
    return -1j * qz, -1j * qw
