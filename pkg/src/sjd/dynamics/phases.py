"""Berry and dynamical phases.

The Berry phase of a path is phi_B = -Im int theta, where theta is the
(1,0) part of d log K:

    disk chart:  theta = conj(eta) dz + (conj(eta)^2/2 + 2k conj(w)/P) dw
    fc chart:    theta = (conj(eta) + conj(w) eta) d eta + (2k conj(w)/P - conj(eta)^2/2) dw

Both charts give the same number with the same sign.  For the loop
w = r e^{i s}, eta = 0 traversed counterclockwise the value is
-4 pi k r^2 / (1 - r^2).
"""

from __future__ import annotations

import numpy as np

from sjd.errors import DomainError


def berry_one_form(chart: str, zeta1, zeta2, k: float = 1.0):
    """Coefficients (a1, a2) of theta = a1 d zeta1 + a2 d zeta2."""
    w = zeta2
    P = 1 - np.abs(w) ** 2
    wb = np.conj(w)
    if chart == "disk":
        eta = (zeta1 + np.conj(zeta1) * w) / P
        eb = np.conj(eta)
        return eb, eb * eb / 2 + 2 * k * wb / P
    if chart == "fc":
        eta = zeta1
        eb = np.conj(eta)
        return eb + wb * eta, 2 * k * wb / P - eb * eb / 2
    raise ValueError(f"berry phase is provided on 'disk' and 'fc', not {chart!r}")


def berry_increments(zeta1, zeta2, chart: str = "fc", k: float = 1.0) -> np.ndarray:
    """Per-segment midpoint-rule contributions to phi_B along a sampled path."""
    zeta1 = np.asarray(zeta1, dtype=complex)
    zeta2 = np.asarray(zeta2, dtype=complex)
    if zeta1.shape != zeta2.shape or zeta1.ndim != 1:
        raise ValueError("path coordinates must be 1-d arrays of equal length")
    if np.any(np.abs(zeta2) >= 1):
        raise DomainError("path leaves the disk")
    m1, m2 = (zeta1[1:] + zeta1[:-1]) / 2, (zeta2[1:] + zeta2[:-1]) / 2
    a1, a2 = berry_one_form(chart, m1, m2, k)
    return -np.imag(a1 * np.diff(zeta1) + a2 * np.diff(zeta2))


def berry_phase(zeta1, zeta2, chart: str = "fc", k: float = 1.0) -> float:
    """Midpoint-rule line integral of -Im theta along the polyline through the samples."""
    return float(np.sum(berry_increments(zeta1, zeta2, chart, k)))


def circle_path(radius: float, segments: int, center: complex = 0j, turns: float = 1.0, eta: complex = 0j):
    """(eta, w) samples of w = center + radius e^{i s}, s in [0, 2 pi turns], eta fixed."""
    s = np.linspace(0.0, 2 * np.pi * turns, segments + 1)
    w = center + radius * np.exp(1j * s)
    return np.full(w.shape, complex(eta)), w


def polyline_path(vertices, segments: int):
    """Uniformly subdivide the polyline through (eta, w) vertices into ``segments`` pieces."""
    v = np.asarray(vertices, dtype=complex)
    if v.ndim != 2 or v.shape[1] != 2 or len(v) < 2:
        raise ValueError("vertices must be a list of at least two (eta, w) pairs")
    lengths = np.abs(np.diff(v, axis=0)).sum(axis=1)
    cum = np.concatenate([[0.0], np.cumsum(lengths)])
    if cum[-1] == 0:
        return np.repeat(v[:1, 0], segments + 1), np.repeat(v[:1, 1], segments + 1)
    s = np.linspace(0.0, cum[-1], segments + 1)
    eta = np.interp(s, cum, v[:, 0].real) + 1j * np.interp(s, cum, v[:, 0].imag)
    w = np.interp(s, cum, v[:, 1].real) + 1j * np.interp(s, cum, v[:, 1].imag)
    return eta, w


def path_length(zeta1, zeta2) -> float:
    """Euclidean length of the polyline in C^2."""
    return float(np.sum(np.sqrt(np.abs(np.diff(zeta1)) ** 2 + np.abs(np.diff(zeta2)) ** 2)))


def richardson(coarse: float, fine: float, order: int = 2) -> float:
    """Extrapolate two estimates at N and 2N segments."""
    f = 2 ** order
    return (f * fine - coarse) / (f - 1)


def circle_berry_exact(radius: float, k: float = 1.0) -> float:
    """Closed value for the counterclockwise circle at eta = 0."""
    return -4 * np.pi * k * radius ** 2 / (1 - radius ** 2)


def dynamical_phase(times, energies, rule: str = "trapezoid") -> float:
    """phi_D = -int H dt over sampled energies.

    ``rule="midpoint"`` uses energies at interval midpoints, so ``energies``
    must then have one entry fewer than ``times``.
    """
    return float(cumulative_dynamical_phase(times, energies, rule)[-1])


def cumulative_dynamical_phase(times, energies, rule: str = "trapezoid") -> np.ndarray:
    t = np.asarray(times, dtype=float)
    e = np.asarray(energies, dtype=float)
    dt = np.diff(t)
    if rule == "trapezoid":
        if e.shape != t.shape:
            raise ValueError("trapezoid rule needs one energy per time")
        inc = dt * (e[1:] + e[:-1]) / 2
    elif rule == "midpoint":
        if e.size != t.size - 1:
            raise ValueError("midpoint rule needs one energy per interval")
        inc = dt * e
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return np.concatenate([[0.0], -np.cumsum(inc)])
