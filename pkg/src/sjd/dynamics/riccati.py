"""Closed-form solutions of the Riccati equations on the disk and the half-plane.

Disk:        i w' = eps_minus + eps_0 w + eps_plus w^2
Half-plane: -v' = A v^2 + B v + C,  A = (eps_minus + eps_plus + eps_0)/2,
                                     B = i (eps_minus - eps_plus),
                                     C = (eps_0 - eps_minus - eps_plus)/2

Both are written with homogeneous constants (C1, C2) so that the fixed point
(C2 = 0) needs no special casing:

    w(t) = (C1 w1 E + C2 w2) / (eps_plus (C1 E + C2)),   E = exp(i sqrt(Delta) t)

with C1 = eps_plus w0 - w2 and C2 = w1 - eps_plus w0.
"""

from __future__ import annotations

import numpy as np

from sjd.domains import check_disk, check_uhp
from sjd.dynamics.coeffs import Coeffs, riccati_roots
from sjd.errors import SingularityError, UnsupportedRegimeError

SMALL = 1e-14


def _require_oscillatory(coeffs):
    roots = riccati_roots(coeffs)
    if not roots.delta > 0:
        raise UnsupportedRegimeError(
            f"closed form needs Delta > 0 (got {roots.delta!r}); use integrate_numeric")
    return roots


def disk_constants(w0, coeffs: Coeffs):
    """Homogeneous constants (C1, C2); their ratio is the f of the closed form."""
    r = riccati_roots(coeffs)
    return coeffs.eps_plus * w0 - r.w2, r.w1 - coeffs.eps_plus * w0


def solve_riccati_disk(w0, coeffs: Coeffs, t, *, allow_exterior: bool = False):
    """w(t) for constant coefficients with Delta > 0.

    ``t`` may be an array.  ``allow_exterior`` lifts the |w0| < 1 check, which
    is useful when probing the flow of the whole Riemann sphere.
    """
    w0 = complex(w0)
    if not allow_exterior:
        check_disk(w0, "w0")
    roots = _require_oscillatory(coeffs)
    t = np.asarray(t, dtype=float)
    ep, em, e0 = complex(coeffs.eps_plus), complex(coeffs.eps_minus), complex(coeffs.eps_0)
    if abs(ep) < SMALL:
        # linear branch: i w' = eps_minus + eps_0 w
        if abs(e0) < SMALL:
            return w0 - 1j * em * t
        shift = em / e0
        return (w0 + shift) * np.exp(-1j * e0 * t) - shift
    C1, C2 = disk_constants(w0, coeffs)
    E = np.exp(1j * np.sqrt(roots.delta) * t)
    den = ep * (C1 * E + C2)
    scale = abs(ep) * (abs(C1) + abs(C2))
    if np.any(np.abs(den) <= SMALL * max(scale, 1.0)):
        raise SingularityError("closed-form Riccati denominator vanishes on the requested times")
    return (C1 * roots.w1 * E + C2 * roots.w2) / den


def disk_threshold(coeffs: Coeffs) -> float:
    """(1 + sqrt(1 - delta)) / sqrt(delta) with delta = 4 eps_plus eps_minus / eps_0^2."""
    d = _small_delta(coeffs)
    return (1 + np.sqrt(1 - d)) / np.sqrt(d)


def _small_delta(coeffs):
    e0 = float(np.real(coeffs.eps_0))
    if not e0 > 0:
        raise ValueError("criterion needs eps_0 > 0")
    d = float(np.real(4 * coeffs.eps_plus * coeffs.eps_minus)) / e0 ** 2
    if not 0 < d < 1:
        raise ValueError(f"criterion needs 0 < delta < 1 (got {d!r})")
    return d


def stays_in_disk(coeffs: Coeffs, w0=None, ratio=None) -> bool:
    """Whether the closed-form orbit through ``w0`` (or with C1/C2 = ``ratio``) stays in |w| < 1.

    The criterion is |C1/C2| > sqrt(w2/w1).
    """
    threshold = disk_threshold(coeffs)
    if (w0 is None) == (ratio is None):
        raise ValueError("give exactly one of w0 or ratio")
    if ratio is None:
        C1, C2 = disk_constants(complex(w0), coeffs)
        if abs(C2) == 0:
            return True
        ratio = C1 / C2
    return bool(abs(ratio) > threshold)


def one_minus_abs2(w0, coeffs: Coeffs, t):
    """1 - |w(t)|^2 along the closed-form orbit, built from the constants:

        (|eps_plus|^2 |C1 E + C2|^2 - |C1 w1 E + C2 w2|^2) / (|eps_plus|^2 |C1 E + C2|^2)
    """
    roots = _require_oscillatory(coeffs)
    C1, C2 = disk_constants(complex(w0), coeffs)
    E = np.exp(1j * np.sqrt(roots.delta) * np.asarray(t, dtype=float))
    ep2 = abs(coeffs.eps_plus) ** 2
    num = ep2 * np.abs(C1 * E + C2) ** 2 - np.abs(C1 * roots.w1 * E + C2 * roots.w2) ** 2
    return num / (ep2 * np.abs(C1 * E + C2) ** 2)


def uhp_abc(coeffs: Coeffs):
    A = 0.5 * (coeffs.eps_minus + coeffs.eps_plus + coeffs.eps_0)
    B = 1j * (coeffs.eps_minus - coeffs.eps_plus)
    C = 0.5 * (coeffs.eps_0 - coeffs.eps_minus - coeffs.eps_plus)
    return A, B, C


def _uhp_nus(coeffs):
    roots = _require_oscillatory(coeffs)
    s = np.sqrt(roots.delta)
    base = coeffs.eps_plus - coeffs.eps_minus
    return roots, (base + s) / 2, (base - s) / 2


def uhp_constants(v0, coeffs: Coeffs):
    """(C1', C2') for the half-plane solution through v0."""
    A, _, _ = uhp_abc(coeffs)
    _, nu1, nu2 = _uhp_nus(coeffs)
    s0 = -1j * A * v0
    return s0 - nu2, nu1 - s0


def uhp_constants_from_disk(C1, C2, coeffs: Coeffs):
    """Half-plane constants equivalent to disk constants (C1, C2).

    The two sets differ by C1/C1' = eps_plus - w2 and C2/C2' = eps_plus - w1
    up to a common factor, which is the stated ratio relation.
    """
    roots = riccati_roots(coeffs)
    return C1 / (coeffs.eps_plus - roots.w2), C2 / (coeffs.eps_plus - roots.w1)


def constants_ratio_relation(C1, C2, C1p, C2p, coeffs: Coeffs):
    """Both sides of (C1/C2)(C2'/C1') = (eps_plus - w2)/(eps_plus - w1)."""
    roots = riccati_roots(coeffs)
    return (C1 / C2) * (C2p / C1p), (coeffs.eps_plus - roots.w2) / (coeffs.eps_plus - roots.w1)


def solve_riccati_uhp_constants(C1p, C2p, coeffs: Coeffs, t):
    A, B, C = uhp_abc(coeffs)
    roots, nu1, nu2 = _uhp_nus(coeffs)
    t = np.asarray(t, dtype=float)
    E = np.exp(1j * np.sqrt(roots.delta) * t)
    den = A * (C1p * E + C2p)
    scale = abs(A) * (abs(C1p) + abs(C2p))
    if np.any(np.abs(den) <= SMALL * max(scale, 1.0)):
        raise SingularityError("closed-form half-plane denominator vanishes on the requested times")
    return 1j * (nu1 * C1p * E + nu2 * C2p) / den


def solve_riccati_uhp(v0, coeffs: Coeffs, t):
    """v(t) for constant coefficients with Delta > 0."""
    v0 = complex(v0)
    check_uhp(v0, "v0")
    _require_oscillatory(coeffs)
    A, B, C = uhp_abc(coeffs)
    t = np.asarray(t, dtype=float)
    if abs(A) < SMALL:
        # linear branch: -v' = B v + C
        if abs(B) < SMALL:
            return v0 - C * t
        return (v0 + C / B) * np.exp(-B * t) - C / B
    C1p, C2p = uhp_constants(v0, coeffs)
    return solve_riccati_uhp_constants(C1p, C2p, coeffs, t)


def uhp_fixed_point(coeffs: Coeffs):
    """Root of A v^2 + B v + C = 0 in the upper half-plane."""
    A, B, C = uhp_abc(coeffs)
    r = np.roots([A, B, C])
    inside = [x for x in r if x.imag > 0]
    if not inside:
        raise UnsupportedRegimeError("no fixed point in the upper half-plane")
    return complex(inside[0])
