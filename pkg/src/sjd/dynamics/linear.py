"""The linear equations: z by variation of constants, eta in closed form.

eta obeys  i eta' = eps_a + eps_minus conj(eta) + (eps_0/2) eta.
Writing xi = eta - P with P the fixed point, the solution is

    eta(t) = M exp(i omega t) + N exp(-i omega t) + P,   omega = sqrt(Delta)/2,

with N = c conj(M), c = -(omega + eps_0/2)/conj(eps_minus), and M fixed by
eta(0).  The printed parametrisation through (q, r, alpha, beta) is kept
alongside for comparison; alpha is recovered from M.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from sjd.dynamics.coeffs import HamiltonianCoeffs, riccati_roots
from sjd.errors import UnsupportedRegimeError

SMALL = 1e-13


def eta_fixed_point(coeffs: HamiltonianCoeffs):
    """P = (4 eps_minus conj(eps_a) - 2 eps_0 eps_a) / Delta."""
    d = coeffs.delta
    if d == 0:
        raise UnsupportedRegimeError("Delta = 0: no isolated fixed point")
    return (4 * coeffs.eps_minus * np.conj(coeffs.eps_a) - 2 * coeffs.eps_0 * coeffs.eps_a) / d


def eta_real_system(coeffs: HamiltonianCoeffs):
    """(L, c) with d/dt (x, y) = L (x, y) + c for eta = x + i y."""
    a, b = np.real(coeffs.eps_a), np.imag(coeffs.eps_a)
    m, n = np.real(coeffs.eps_minus), np.imag(coeffs.eps_minus)
    p = coeffs.eps_0 / 2
    L = np.array([[n, p - m], [-(m + p), -n]], dtype=float)
    return L, np.array([b, -a], dtype=float)


def solve_eta_linear_system(eta0, coeffs: HamiltonianCoeffs, t):
    """eta(t) from the matrix exponential of the augmented real system.

    Valid for every Delta; used where the closed-form constants degenerate.
    """
    L, c = eta_real_system(coeffs)
    aug = np.zeros((3, 3))
    aug[:2, :2], aug[:2, 2] = L, c
    x0 = np.array([np.real(eta0), np.imag(eta0), 1.0])
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array([expm(aug * s) @ x0 for s in ts])
    eta = out[:, 0] + 1j * out[:, 1]
    return eta if np.ndim(t) else complex(eta[0])


@dataclass(frozen=True)
class EtaClosedForm:
    eta0: complex
    coeffs: HamiltonianCoeffs
    M: complex
    N: complex
    P: complex
    omega: float
    q: float
    r: float
    alpha: complex | None
    beta: complex | None
    route: str  # "closed" or "linear-system"

    def __call__(self, t):
        if self.route == "linear-system":
            return solve_eta_linear_system(self.eta0, self.coeffs, t)
        t = np.asarray(t, dtype=float)
        return self.M * np.exp(1j * self.omega * t) + self.N * np.exp(-1j * self.omega * t) + self.P

    def printed_alpha(self):
        """alpha = i (r/q)(eta(0) - P) as printed; does not reproduce eta(0) in general."""
        if abs(self.q) < SMALL:
            return None
        return 1j * (self.r / self.q) * (self.eta0 - self.P)

    def printed_initial_value(self):
        """M + N + P when M, N are rebuilt from :meth:`printed_alpha`."""
        a = self.printed_alpha()
        if a is None or self.alpha is None:
            return None
        s = a / self.alpha
        return s * self.M + np.conj(s) * self.N + self.P


def printed_qr(coeffs: HamiltonianCoeffs):
    """q = -(eps_0/4)(eps_a + conj(eps_a)) + (eps_a eps_plus + conj(eps_a) eps_minus)/2,
    r = (eps_minus + eps_plus - eps_0)/2; both real under hermiticity."""
    ea = coeffs.eps_a
    q = -coeffs.eps_0 / 4 * (ea + np.conj(ea)) + 0.5 * (ea * coeffs.eps_plus + np.conj(ea) * coeffs.eps_minus)
    r = 0.5 * (coeffs.eps_minus + coeffs.eps_plus - coeffs.eps_0)
    return float(np.real(q)), float(np.real(r))


def eta_closed_form(eta0, coeffs: HamiltonianCoeffs) -> EtaClosedForm:
    """Build the closed-form eta trajectory through ``eta0`` (Delta > 0)."""
    eta0 = complex(eta0)
    roots = riccati_roots(coeffs)
    if not roots.delta > 0:
        raise UnsupportedRegimeError(
            f"closed form needs Delta > 0 (got {roots.delta!r}); use integrate_numeric")
    d = roots.delta
    omega = np.sqrt(d) / 2
    P = complex(eta_fixed_point(coeffs))
    em = complex(coeffs.eps_minus)
    q, r = printed_qr(coeffs)
    if abs(em) < SMALL:
        return EtaClosedForm(eta0, coeffs, np.nan, np.nan, P, omega, q, r, None, None, "linear-system")
    c = -(omega + coeffs.eps_0 / 2) / np.conj(em)
    xi0 = eta0 - P
    den = 1 - abs(c) ** 2
    if abs(den) < SMALL:
        return EtaClosedForm(eta0, coeffs, np.nan, np.nan, P, omega, q, r, None, None, "linear-system")
    M = complex((xi0 - c * np.conj(xi0)) / den)
    N = complex(c * np.conj(M))
    # alpha, beta through the printed M, N relations; undefined when q or r vanish
    alpha = beta = None
    s = np.sqrt(roots.delta)
    if abs(q) > SMALL and abs(r) > SMALL:
        k1, k2 = em + roots.w1, em + roots.w2
        if abs(k1) > SMALL:
            alpha = M * r * s / (-1j * q * k1)
        if abs(k2) > SMALL:
            beta = N * r * s / (1j * q * k2)
    return EtaClosedForm(eta0, coeffs, M, N, P, omega, q, r, alpha, beta, "closed")


def solve_eta_closed(eta0, coeffs: HamiltonianCoeffs, t):
    return eta_closed_form(eta0, coeffs)(t)


def _gauss_legendre(f, a, b, nodes, weights):
    mid, half = (a + b) / 2, (b - a) / 2
    return half * np.sum(weights * f(mid + half * nodes))


def solve_z_variation(w_solution, coeffs: HamiltonianCoeffs, z0, t, order: int = 40, panels: int | None = None):
    """z(t) = F(t) (z0 - i int_0^t A/F),  F = exp(-i int_0^t B).

    A = eps_a + conj(eps_a) w and B = eps_0/2 + eps_plus w, with ``w_solution``
    a callable t -> w(t) (vectorised).  Composite Gauss-Legendre for both the
    inner integral of B and the outer integral of A/F.
    """
    t = float(t)
    if t == 0:
        return complex(z0)
    if panels is None:
        panels = max(1, int(np.ceil(abs(t) / 0.5)))
    nodes, weights = np.polynomial.legendre.leggauss(order)
    ea, e0, ep = coeffs.eps_a, coeffs.eps_0, coeffs.eps_plus

    def B(s):
        return e0 / 2 + ep * w_solution(s)

    edges = np.linspace(0.0, t, panels + 1)
    cum = np.concatenate([[0j], np.cumsum([_gauss_legendre(B, edges[j], edges[j + 1], nodes, weights)
                                           for j in range(panels)])])

    def int_B(s):
        # integral of B from 0 to each s: whole panels plus a partial one
        s = np.atleast_1d(s)
        k = np.clip(np.floor(s / t * panels).astype(int), 0, panels - 1)
        return np.array([cum[j] + _gauss_legendre(B, edges[j], x, nodes, weights) for j, x in zip(k, s)])

    def integrand(s):
        A = ea + np.conj(ea) * w_solution(s)
        return A * np.exp(1j * int_B(s))

    outer = sum(_gauss_legendre(integrand, edges[j], edges[j + 1], nodes, weights) for j in range(panels))
    F = np.exp(-1j * int_B(np.array([t]))[0])
    return complex(F * (z0 - 1j * outer))
