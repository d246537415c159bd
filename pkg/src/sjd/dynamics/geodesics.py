"""Geodesics on the disk and the residuals of the geodesic equations on C x D."""

from __future__ import annotations

import numpy as np

from sjd.numdiff import central_derivatives


def geodesic_disk(B, t):
    """w(t) = B tanh(t |B|) / |B|; B = 0 gives the constant path w = 0."""
    B = complex(B)
    t = np.asarray(t, dtype=float)
    a = abs(B)
    if a == 0:
        return np.zeros(t.shape, dtype=complex) if t.ndim else 0j
    return B * np.tanh(t * a) / a


def geodesic_particular(B, eta0, t):
    """(z, w) with eta held at eta0 and w the disk geodesic: z = eta0 - w conj(eta0)."""
    w = geodesic_disk(B, t)
    return eta0 - w * np.conj(eta0), w


def disk_geodesic_residual(w, dt):
    """w'' + 2 conj(w)/(1 - |w|^2) w'^2 at interior samples."""
    w = np.asarray(w, dtype=complex)
    d1, d2 = central_derivatives(w, dt)
    wm = w[1:-1]
    return d2 + 2 * np.conj(wm) / (1 - np.abs(wm) ** 2) * d1 * d1


def geodesic_residual(z, w, dt, k: float = 1.0):
    """Residuals of the two geodesic equations at interior samples of a uniform grid.

    Returns arrays (r1, r2) for the z- and w-equations.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    dz, ddz = central_derivatives(z, dt)
    dw, ddw = central_derivatives(w, dt)
    zm, wm = z[1:-1], w[1:-1]
    P = 1 - np.abs(wm) ** 2
    eb = np.conj((zm + np.conj(zm) * wm) / P)
    wb = np.conj(wm)
    r1 = 2 * k * ddz - eb * dz * dz + 2 * (2 * k * wb / P - eb * eb) * dz * dw - eb ** 3 * dw * dw
    r2 = 2 * k * ddw + dz * dz + 2 * eb * dz * dw + (4 * k * wb / P + eb * eb) * dw * dw
    return r1, r2
