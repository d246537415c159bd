"""Kahler geometry of the Siegel-Jacobi disk and its companion charts.

Charts and their complex coordinates ``(zeta1, zeta2)``:

=======  ============  ==========================================
chart    coordinates   two-form
=======  ============  ==========================================
disk     (z, w)        omega_1, non-product
fc       (eta, w)      omega_0 = omega_D1 + omega_C
uhp      (u, v)        omega_1', non-product
fc1      (eta, v)      omega_0' = omega_X1 + omega_C
=======  ============  ==========================================

A two-form is stored as the Hermitian coefficient matrix ``h`` of
``-i omega = h[a, b] dzeta_a ^ dconj(zeta_b)``.  Its real representation uses
the ordering ``(Re zeta1, Im zeta1, Re zeta2, Im zeta2)`` and the convention
``dzeta ^ dconj(zeta) = -2i dRe ^ dIm``; the real matrix ``Omega`` satisfies
``omega(X, Y) = X^T Omega Y``.  With this convention the identity metric maps
to two blocks ``[[0, 2], [-2, 0]]``.

Pullbacks are computed as ``J^T Omega J`` with ``J`` the real 4x4 Jacobian,
which is needed because FC depends on ``conj(eta)`` and is not holomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from sjd.domains import FCPoint, SJDiskPoint, SJUHPPoint, UpperHalfPlanePoint, check_disk, check_uhp
from sjd.group import JacobiElement, SL2RElement
from sjd.numdiff import fd_jacobian, to_complex, to_real

CHARTS = ("disk", "fc", "uhp", "fc1")


@dataclass(frozen=True)
class ModelParams:
    """Bargmann index ``k`` of the positive discrete series."""

    k: float = 1.0
    strict: bool = False

    def __post_init__(self):
        k = float(self.k)
        object.__setattr__(self, "k", k)
        if not k > 0.75:
            raise ValueError(f"k must exceed 3/4 so that Lambda_1 > 0, got {k}")
        if self.strict and (abs(2 * k - round(2 * k)) > 1e-12 or round(2 * k) < 2):
            raise ValueError(f"strict mode requires 2k in {{2, 3, ...}}, got 2k = {2 * k}")

    @property
    def lambda1(self) -> float:
        """Normalisation (4k - 3) / (2 pi^2) of the scalar product."""
        return (4 * self.k - 3) / (2 * np.pi ** 2)


def _coords(point, chart: str):
    """Unpack ``point`` into validated complex coordinates for ``chart``."""
    if isinstance(point, (SJDiskPoint, FCPoint, SJUHPPoint)):
        z1, z2 = point.as_tuple()
    else:
        z1, z2 = point
        if isinstance(z2, UpperHalfPlanePoint):
            z2 = z2.v
        z1, z2 = complex(z1), complex(z2)
    if chart in ("disk", "fc"):
        check_disk(z2)
    elif chart in ("uhp", "fc1"):
        check_uhp(z2)
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return z1, z2


# -- potential and kernels -------------------------------------------------

def kahler_potential(p: SJDiskPoint, k: float = 1.0):
    z, w = p.z, p.w
    P = 1 - np.abs(w) ** 2
    quad = 2 * np.abs(z) ** 2 + z * z * np.conj(w) + np.conj(z) ** 2 * w
    return np.real(quad) / (2 * P) - 2 * k * np.log(P)


def log_kernel(p: SJDiskPoint, q: SJDiskPoint, k: float = 1.0):
    """log K(z, w; conj(z'), conj(w')) on the principal branch.

    Kernels overflow for moderate |z| (exp of a quadratic), so everything is
    kept in log form until :func:`kernel` exponentiates.
    """
    z, w = p.z, p.w
    zpb, wpb = np.conj(q.z), np.conj(q.w)
    P = 1 - w * wpb
    F = (2 * zpb * z + z * z * wpb + zpb ** 2 * w) / (2 * P)
    return -2 * k * np.log(P) + F


def kernel(p: SJDiskPoint, q: SJDiskPoint, k: float = 1.0):
    return np.exp(log_kernel(p, q, k))


def log_kernel_fc(p: FCPoint, q: FCPoint, k: float = 1.0):
    """The kernel written directly in the (eta, w) variables."""
    eta, w = p.eta, p.w
    etap, wpb = q.eta, np.conj(q.w)
    P = 1 - w * wpb
    zeta = eta - etap
    two_F = (2 * (np.conj(eta) * zeta + np.abs(etap) ** 2)
             - w * np.conj(eta) ** 2 - wpb * etap ** 2
             + (-2 * np.abs(zeta) ** 2 + w * np.conj(zeta) ** 2 + wpb * zeta ** 2) / P)
    return -2 * k * np.log(P) + two_F / 2


def kernel_fc(p: FCPoint, q: FCPoint, k: float = 1.0):
    return np.exp(log_kernel_fc(p, q, k))


def gram_matrix(points: list, k: float = 1.0, normalized: bool = True) -> np.ndarray:
    """Gram matrix K(p_i; p_j) of disk-chart points.

    With ``normalized`` the entries are divided by sqrt(K(p_i;p_i) K(p_j;p_j)),
    a diagonal congruence that keeps the inertia and avoids overflow.
    """
    n = len(points)
    logs = np.array([[log_kernel(points[i], points[j], k) for j in range(n)] for i in range(n)])
    if normalized:
        d = np.real(np.diag(logs))
        logs = logs - 0.5 * (d[:, None] + d[None, :])
    return np.exp(logs)


# -- metrics and real forms ------------------------------------------------

@dataclass(frozen=True)
class HermitianMetric2:
    h: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.h, dtype=complex)
        if h.shape != (2, 2):
            raise ValueError("metric must be 2x2")
        if np.max(np.abs(h - h.conj().T)) > 1e-12 * max(1.0, np.max(np.abs(h))):
            raise ValueError("metric is not Hermitian")
        object.__setattr__(self, "h", h)

    def is_positive_definite(self) -> bool:
        return bool(np.all(np.linalg.eigvalsh(self.h) > 0))


@dataclass(frozen=True)
class RealTwoForm:
    omega: np.ndarray = field(repr=False)

    def __post_init__(self):
        om = np.asarray(self.omega, dtype=float)
        if om.shape != (4, 4):
            raise ValueError("real two-form must be 4x4")
        if np.max(np.abs(om + om.T)) > 1e-12 * max(1.0, np.max(np.abs(om))):
            raise ValueError("real two-form is not antisymmetric")
        object.__setattr__(self, "omega", om)

    def pfaffian(self) -> float:
        o = self.omega
        return o[0, 1] * o[2, 3] - o[0, 2] * o[1, 3] + o[0, 3] * o[1, 2]


def metric(chart: str, point, k: float = 1.0) -> HermitianMetric2:
    z1, z2 = _coords(point, chart)
    if chart == "disk":
        z, w = z1, z2
        P = 1 - abs(w) ** 2
        eta = (z + w * np.conj(z)) / P
        h = [[1 / P, eta / P], [np.conj(eta) / P, 2 * k / P ** 2 + abs(eta) ** 2 / P]]
    elif chart == "fc":
        P = 1 - abs(z2) ** 2
        h = [[1.0, 0.0], [0.0, 2 * k / P ** 2]]
    elif chart == "uhp":
        u, v = z1, z2
        y = v.imag
        rho = u.imag / y  # (u - conj u) / (v - conj v) is real
        h = [[1 / y, -rho / y], [-rho / y, k / (2 * y * y) + rho * rho / y]]
    else:  # fc1
        y = z2.imag
        h = [[1.0, 0.0], [0.0, k / (2 * y * y)]]
    return HermitianMetric2(np.array(h, dtype=complex))


# complex coordinate a -> real basis columns (2a, 2a+1) carry (1, i)
_E = np.array([[1, 1j, 0, 0], [0, 0, 1, 1j]])


def to_real_two_form(m: HermitianMetric2) -> RealTwoForm:
    # omega(X, Y) = i sum h_ab (X_a conj(Y_b) - Y_a conj(X_b)) = -2 Im(X^T h conj(Y))
    om = -2 * np.imag(_E.T @ m.h @ np.conj(_E))
    return RealTwoForm(0.5 * (om - om.T))


def two_form(chart: str, point, k: float = 1.0) -> RealTwoForm:
    return to_real_two_form(metric(chart, point, k))


# -- maps with analytic Jacobians ------------------------------------------

def wirtinger_to_real(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Real 4x4 Jacobian from A[i,j] = d f_i/d zeta_j and B[i,j] = d f_i/d conj(zeta_j)."""
    J = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            a, b = A[i, j], B[i, j]
            J[2 * i:2 * i + 2, 2 * j:2 * j + 2] = [[(a + b).real, -(a - b).imag],
                                                   [(a + b).imag, (a - b).real]]
    return J


@dataclass(frozen=True)
class ChartMap:
    """A smooth map between two charts with hand-derived Wirtinger derivatives."""

    name: str
    source: str
    target: str
    forward: Callable
    wirtinger: Callable

    def real_forward(self, x) -> np.ndarray:
        return to_real(*self.forward(*to_complex(x)))

    def jacobian(self, x, method: str = "analytic", step: float = 1e-5) -> np.ndarray:
        if method == "analytic":
            A, B = self.wirtinger(*to_complex(x))
            return wirtinger_to_real(np.asarray(A, dtype=complex), np.asarray(B, dtype=complex))
        if method == "fd":
            return fd_jacobian(self.real_forward, x, step)
        raise ValueError(f"unknown Jacobian method {method!r}")


def _fc_forward(eta, w):
    return eta - w * np.conj(eta), w


def _fc_wirtinger(eta, w):
    return [[1, -np.conj(eta)], [0, 1]], [[-w, 0], [0, 0]]


def fc_map(sign: float = 1.0) -> ChartMap:
    """FC: (eta, w) -> (z, w).  ``sign=-1`` gives the deliberately broken
    variant z = eta + w conj(eta) used as a negative control."""
    if sign == 1.0:
        return ChartMap("FC", "fc", "disk", _fc_forward, _fc_wirtinger)

    def fwd(eta, w):
        return eta - sign * w * np.conj(eta), w

    def wirt(eta, w):
        return [[1, -sign * np.conj(eta)], [0, 1]], [[-sign * w, 0], [0, 0]]

    return ChartMap("FC(broken)", "fc", "disk", fwd, wirt)


def fc_inverse_map() -> ChartMap:
    def fwd(z, w):
        return (z + w * np.conj(z)) / (1 - abs(w) ** 2), w

    def wirt(z, w):
        P = 1 - abs(w) ** 2
        eta = (z + w * np.conj(z)) / P
        return [[1 / P, np.conj(eta) / P], [0, 1]], [[w / P, eta * w / P], [0, 0]]

    return ChartMap("FC^-1", "disk", "fc", fwd, wirt)


def fc1_map() -> ChartMap:
    def fwd(eta, v):
        return ((v + 1j) * eta - (v - 1j) * np.conj(eta)) / 2j, v

    def wirt(eta, v):
        return ([[(v + 1j) / 2j, (eta - np.conj(eta)) / 2j], [0, 1]],
                [[-(v - 1j) / 2j, 0], [0, 0]])

    return ChartMap("FC1", "fc1", "uhp", fwd, wirt)


def partial_cayley_map() -> ChartMap:
    def fwd(u, v):
        return 2j * u / (v + 1j), (v - 1j) / (v + 1j)

    def wirt(u, v):
        s = v + 1j
        return [[2j / s, -2j * u / s ** 2], [0, 2j / s ** 2]], np.zeros((2, 2))

    return ChartMap("partial-Cayley", "uhp", "disk", fwd, wirt)


def disk_action_map(j: JacobiElement) -> ChartMap:
    a, b, al = j.g.a, j.g.b, j.alpha

    def fwd(z, w):
        D = np.conj(b) * w + np.conj(a)
        return (al - np.conj(al) * w + z) / D, (a * w + b) / D

    def wirt(z, w):
        D = np.conj(b) * w + np.conj(a)
        num = al - np.conj(al) * w + z
        return ([[1 / D, -np.conj(al) / D - num * np.conj(b) / D ** 2], [0, 1 / D ** 2]],
                np.zeros((2, 2)))

    return ChartMap("group-action(disk)", "disk", "disk", fwd, wirt)


def fc_action_map(j: JacobiElement) -> ChartMap:
    a, b, al = j.g.a, j.g.b, j.alpha

    def fwd(eta, w):
        s = eta + al
        return a * s + b * np.conj(s), (a * w + b) / (np.conj(b) * w + np.conj(a))

    def wirt(eta, w):
        D = np.conj(b) * w + np.conj(a)
        return [[a, 0], [0, 1 / D ** 2]], [[b, 0], [0, 0]]

    return ChartMap("group-action(fc)", "fc", "fc", fwd, wirt)


def uhp_action_map(h: SL2RElement, alpha) -> ChartMap:
    m, n = complex(alpha).real, complex(alpha).imag

    def fwd(u, v):
        E = h.c * v + h.d
        return (u + n * v + m) / E, (h.a * v + h.b) / E

    def wirt(u, v):
        E = h.c * v + h.d
        return ([[1 / E, n / E - (u + n * v + m) * h.c / E ** 2], [0, 1 / E ** 2]],
                np.zeros((2, 2)))

    return ChartMap("group-action(uhp)", "uhp", "uhp", fwd, wirt)


def pullback(phi: ChartMap, base_point, target_form=None, k: float = 1.0,
             method: str = "analytic", step: float = 1e-5) -> RealTwoForm:
    """phi^* omega at ``base_point`` (complex pair or point object in ``phi.source``).

    ``target_form`` may be a :class:`RealTwoForm` already evaluated at the
    image point, a callable taking the image point, or ``None`` for the
    canonical form of ``phi.target``.
    """
    z1, z2 = _coords(base_point, phi.source)
    image = phi.forward(z1, z2)
    if target_form is None:
        om = two_form(phi.target, image, k)
    elif isinstance(target_form, RealTwoForm):
        om = target_form
    else:
        om = target_form(image)
    J = phi.jacobian(to_real(z1, z2), method, step)
    return RealTwoForm(J.T @ om.omega @ J)


# -- measures ---------------------------------------------------------------

def log_measure_density(chart: str, point, k: float = 1.0):
    """Log of weight times invariant density, per unit dRe dIm dRe dIm."""
    z1, z2 = _coords(point, chart)
    P = 1 - abs(z2) ** 2
    if chart == "disk":
        z, w = z1, z2
        F = (2 * abs(z) ** 2 + (z * z * np.conj(w)).real * 2) / (2 * P)
        return (2 * k - 3) * np.log(P) - F
    if chart == "fc":
        eta, w = z1, z2
        F = (2 * abs(eta) ** 2 - 2 * (np.conj(w) * eta ** 2).real) / 2
        return (2 * k - 2) * np.log(P) - F
    raise ValueError(f"measure density defined on 'disk' and 'fc' charts, not {chart!r}")


def measure_density(chart: str, point, k: float = 1.0) -> float:
    return float(np.exp(log_measure_density(chart, point, k)))


def invariant_density(chart: str, point) -> float:
    """Density of the invariant measure alone (1/P^3 on disk, 1/P^2 on fc)."""
    _, w = _coords(point, chart)
    P = 1 - abs(w) ** 2
    return {"disk": P ** -3, "fc": P ** -2}[chart]


def top_form_check(point, k: float = 1.0) -> tuple[float, float]:
    """(coefficient of omega_0 ^ omega_0, -8k times the d nu' density).

    omega ^ omega = 2 Pf(Omega) dx0 ^ dx1 ^ dx2 ^ dx3.  The ratio of the two
    numbers is reported rather than asserted.
    """
    om = two_form("fc", point, k)
    return 2 * om.pfaffian(), -8 * k * invariant_density("fc", point)


# -- differential operators -------------------------------------------------

GENERATORS = ("a", "a+", "K0", "K+", "K-")


@dataclass(frozen=True)
class DiffOpCoeffs:
    """Per-generator (P, Q_z, Q_w) of X = P + Q_z d/dz + Q_w d/dw at a point."""

    coeffs: dict

    def __getitem__(self, name: str):
        return self.coeffs[name]

    def as_array(self) -> np.ndarray:
        return np.array([self.coeffs[g] for g in GENERATORS], dtype=complex)


def diff_op_coeffs(p: SJDiskPoint, k: float = 1.0) -> DiffOpCoeffs:
    """Holomorphic differential action of the generators on functions of (z, w)."""
    z, w = p.z, p.w
    return DiffOpCoeffs({
        "a": (0j, 1 + 0j, 0j),
        "a+": (z, w, 0j),
        "K-": (0j, 0j, 1 + 0j),
        "K0": (k + 0j, z / 2, w),
        "K+": (z * z / 2 + 2 * k * w, z * w, w * w),
    })


def coherent_state_action(p: SJDiskPoint, k: float = 1.0) -> DiffOpCoeffs:
    """Action of the generators on the coherent vector e_{z,w} itself.

    This is the dual of :func:`diff_op_coeffs`: the roles of a / a+ and
    K+ / K- are exchanged.
    """
    z, w = p.z, p.w
    return DiffOpCoeffs({
        "a+": (0j, 1 + 0j, 0j),
        "a": (z, w, 0j),
        "K+": (0j, 0j, 1 + 0j),
        "K0": (k + 0j, z / 2, w),
        "K-": (z * z / 2 + 2 * k * w, z * w, w * w),
    })


def annihilator_combinations(p: SJDiskPoint, k: float = 1.0, printed_x: bool = False):
    """Generator weights of the two operators X, Y with X e_{z,w} = Y e_{z,w} = 0.

    The K+ weight of X is ``z w``.  ``printed_x=True`` uses ``w k`` instead,
    which leaves a residual ``w (k - z)`` in the d/dw coefficient.
    """
    z, w = p.z, p.w
    X = {"a": k, "a+": z * z / 2 - k * w, "K+": (w * k if printed_x else z * w), "K0": -z, "K-": 0}
    Y = {"a": 0, "a+": z ** 3 / 2, "K+": (2 * k * w + z * z) * w, "K0": -(4 * k * w + z * z), "K-": 2 * k}
    return X, Y


def annihilator_residual(p: SJDiskPoint, k: float = 1.0, printed_x: bool = False):
    """(const, d/dz, d/dw) coefficients of X e_{z,w} and Y e_{z,w}; both vanish."""
    act = coherent_state_action(p, k)
    out = []
    for weights in annihilator_combinations(p, k, printed_x):
        tot = np.zeros(3, dtype=complex)
        for g, c in weights.items():
            tot += c * np.asarray(act[g], dtype=complex)
        out.append(tot)
    return out[0], out[1]
