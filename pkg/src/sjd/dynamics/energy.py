"""Energy function, its conserved values, critical point and Hessian."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from sjd.dynamics.coeffs import HamiltonianCoeffs, riccati_roots
from sjd.dynamics.linear import EtaClosedForm, eta_fixed_point
from sjd.dynamics.riccati import disk_constants
from sjd.errors import UnsupportedRegimeError
from sjd.numdiff import fd_gradient, fd_hessian


def energy_eta(eta, coeffs: HamiltonianCoeffs):
    """conj(eps_a) eta + eps_a conj(eta) + (eps_plus eta^2 + eps_minus conj(eta)^2 + eps_0 |eta|^2)/2."""
    eb = np.conj(eta)
    return (np.conj(coeffs.eps_a) * eta + coeffs.eps_a * eb
            + 0.5 * (coeffs.eps_plus * eta * eta + coeffs.eps_minus * eb * eb + coeffs.eps_0 * eta * eb))


def energy_w(w, coeffs: HamiltonianCoeffs, k: float = 1.0):
    P = 1 - np.abs(w) ** 2
    return k * coeffs.eps_0 + 2 * k / P * (coeffs.eps_plus * w + coeffs.eps_minus * np.conj(w)
                                           + coeffs.eps_0 * np.abs(w) ** 2)


def energy_disk(z, w, coeffs: HamiltonianCoeffs, k: float = 1.0):
    """Energy in the (z, w) chart, as a complex number (imaginary part is round-off)."""
    P = 1 - np.abs(w) ** 2
    eta = (z + np.conj(z) * w) / P
    eb = np.conj(eta)
    ea, e0, ep, em = coeffs.eps_a, coeffs.eps_0, coeffs.eps_plus, coeffs.eps_minus
    return (k * e0 + np.conj(ea) * z + ep * (2 * k * w + z * z / 2)
            + (ea + np.conj(ea) * w + (e0 / 2 + ep * w) * z) * eb
            + (em + e0 * w + ep * w * w) * (eb * eb / 2 + 2 * k * np.conj(w) / P))


def energy(state, chart: str, coeffs: HamiltonianCoeffs, k: float = 1.0, real: bool = True):
    """Energy at ``state = (zeta1, zeta2)`` on any chart."""
    z1, z2 = state
    if chart == "disk":
        val = energy_disk(z1, z2, coeffs, k)
    elif chart == "fc":
        val = energy_eta(z1, coeffs) + energy_w(z2, coeffs, k)
    elif chart in ("uhp", "fc1"):
        w = (z2 - 1j) / (z2 + 1j)
        if chart == "uhp":
            val = energy_disk(z1 * (1 - w), w, coeffs, k)
        else:
            val = energy_eta(z1, coeffs) + energy_w(w, coeffs, k)
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return np.real(val) if real else val


def conserved_energy_w(w0, coeffs: HamiltonianCoeffs, k: float = 1.0):
    """k (eps_0 + 2 (-w1^2 |C1|^2 + w2^2 |C2|^2) / (-w1 |C1|^2 + w2 |C2|^2))."""
    r = riccati_roots(coeffs)
    C1, C2 = disk_constants(complex(w0), coeffs)
    a, b = abs(C1) ** 2, abs(C2) ** 2
    den = -r.w1 * a + r.w2 * b
    if abs(den) < 1e-14 * (abs(r.w1) * a + abs(r.w2) * b + 1e-300):
        return float(np.real(energy_w(w0, coeffs, k)))
    return float(np.real(k * (coeffs.eps_0 + 2 * (-r.w1 ** 2 * a + r.w2 ** 2 * b) / den)))


def _eta_constant(coeffs, q, r, alpha):
    ea, ep, em, e0 = coeffs.eps_a, coeffs.eps_plus, coeffs.eps_minus, coeffs.eps_0
    base = 2 / coeffs.delta * (ep * ea ** 2 + em * np.conj(ea) ** 2 - e0 * abs(ea) ** 2)
    return float(np.real(base - q * q / r * abs(alpha) ** 2))


def conserved_energy_eta(form: EtaClosedForm):
    """(2/Delta)(eps_plus eps_a^2 + eps_minus conj(eps_a)^2 - eps_0 |eps_a|^2) - (q^2/r) |alpha|^2.

    alpha is the constant carried by ``form`` (recovered from M).  When it is
    undefined the conserved value is read off the initial condition.
    """
    if form.alpha is None:
        return float(np.real(energy_eta(form.eta0, form.coeffs)))
    return _eta_constant(form.coeffs, form.q, form.r, form.alpha)


def conserved_energy_eta_printed_alpha(form: EtaClosedForm):
    """Same expression with alpha = i (r/q)(eta(0) - P); kept to expose the mismatch."""
    a = form.printed_alpha()
    if a is None or abs(form.r) == 0:
        return None
    return _eta_constant(form.coeffs, form.q, form.r, a)


def critical_point(coeffs: HamiltonianCoeffs):
    """(w_c, eta_c): the zero of the velocity field with |w_c| < 1.

    For eps_0 > 0 this is (-eps_0 + sqrt(Delta)) / (2 eps_plus); for eps_0 < 0
    the other root is the one inside the disk.
    """
    r = riccati_roots(coeffs)
    if not r.delta > 0:
        raise UnsupportedRegimeError(f"critical point needs Delta > 0 (got {r.delta!r})")
    eta_c = complex(eta_fixed_point(coeffs))
    ep, e0 = complex(coeffs.eps_plus), float(coeffs.eps_0)
    if abs(ep) < 1e-14:
        return 0j, eta_c
    root = r.w1 if e0 > 0 else r.w2
    return complex(root / ep), eta_c


def printed_hessian_g(coeffs: HamiltonianCoeffs, k: float = 1.0) -> float:
    d = coeffs.delta
    s = np.sqrt(d)
    return float(k / (2 * s) * (4 * np.real(coeffs.eps_plus * coeffs.eps_minus) / (coeffs.eps_0 - s)) ** 2)


def printed_hessian_function(w, eta, coeffs: HamiltonianCoeffs, k: float = 1.0):
    """g |w|^2 + (eps_0/2)|eta|^2 + eps_plus eta^2 + eps_minus conj(eta)^2."""
    g = printed_hessian_g(coeffs, k)
    return np.real(g * abs(w) ** 2 + coeffs.eps_0 / 2 * abs(eta) ** 2
                   + coeffs.eps_plus * eta ** 2 + coeffs.eps_minus * np.conj(eta) ** 2)


def _energy_real(coeffs, k):
    def f(x):
        return float(energy((complex(x[0], x[1]), complex(x[2], x[3])), "fc", coeffs, k))
    return f


def energy_gradient(coeffs: HamiltonianCoeffs, point, k: float = 1.0, step: float | None = None):
    """Five-point finite-difference gradient in (Re eta, Im eta, Re w, Im w) at ``point = (w, eta)``.

    The default step shrinks with the distance of w to the boundary.
    """
    w, eta = point
    if step is None:
        step = 1e-3 * min(1.0, 1 - abs(w) ** 2)
    return fd_gradient(_energy_real(coeffs, k), [eta.real, eta.imag, w.real, w.imag], step, order=4)


def energy_hessian(coeffs: HamiltonianCoeffs, k: float = 1.0, step: float = 1e-4):
    """Finite-difference real Hessian at the critical point, order (Re eta, Im eta, Re w, Im w)."""
    w, eta = critical_point(coeffs)
    return fd_hessian(_energy_real(coeffs, k), [eta.real, eta.imag, w.real, w.imag], step)


def _sign_class(eigs, tol):
    neg = int(np.sum(eigs < -tol))
    if np.any(np.abs(eigs) <= tol):
        return "degenerate"
    if neg == 0:
        return "positive-definite"
    if neg == eigs.size:
        return "negative-definite"
    return f"index-{neg}"


@dataclass(frozen=True)
class HessianClassification:
    g: float
    p_plus_2m: float
    classification: str
    eigenvalues: np.ndarray
    numeric_classification: str

    @property
    def consistent(self) -> bool:
        return self.classification == self.numeric_classification


def hessian_classify(coeffs: HamiltonianCoeffs, k: float = 1.0) -> HessianClassification:
    """Printed classification (sign of p + 2m, p = eps_0/2, m = Re eps_minus) next to the numeric one."""
    g = printed_hessian_g(coeffs, k)
    pm = coeffs.eps_0 / 2 + 2 * float(np.real(coeffs.eps_minus))
    if pm > 0:
        cls = "positive-definite"
    elif pm < 0:
        cls = "index-2"
    else:
        cls = "degenerate"
    eigs = np.linalg.eigvalsh(energy_hessian(coeffs, k))
    tol = 1e-6 * max(1.0, float(np.max(np.abs(eigs))))
    return HessianClassification(g, pm, cls, eigs, _sign_class(eigs, tol))
