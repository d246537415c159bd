"""Coordinate charts and the exact maps between them.

Five charts are modelled:

* ``DiskPoint``    w in the unit disk
* ``UpperHalfPlanePoint``  v with Im v > 0
* ``SJDiskPoint``  (z, w), z in C, |w| < 1      (Siegel-Jacobi disk)
* ``FCPoint``      (eta, w), eta in C, |w| < 1  (the split product chart)
* ``SJUHPPoint``   (u, v), u in C, Im v > 0     (Siegel-Jacobi upper half-plane)

Every point type accepts either scalars or equally-shaped numpy arrays, so a
batch of points is a single object.  All maps are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from sjd.errors import DomainError

ComplexLike = Union[complex, float, np.ndarray]

#: Points closer than this to the boundary of D_1 or X_1 are rejected.
BOUNDARY_EPS = 1e-14


def _c(x: ComplexLike):
    if np.ndim(x) == 0:
        return complex(x)
    return np.asarray(x, dtype=complex)


def _r(x):
    if np.ndim(x) == 0:
        return float(x)
    return np.asarray(x, dtype=float)


def check_disk(w, what: str = "w") -> None:
    if not np.all(np.isfinite(w)):
        raise DomainError(f"{what} is not finite")
    if np.any(np.abs(w) >= 1.0 - BOUNDARY_EPS):
        raise DomainError(f"|{what}| must be < 1, got max |{what}| = {np.max(np.abs(w))!r}")


def check_uhp(v, what: str = "v") -> None:
    if not np.all(np.isfinite(v)):
        raise DomainError(f"{what} is not finite")
    if np.any(np.imag(v) <= BOUNDARY_EPS):
        raise DomainError(f"Im({what}) must be > 0, got min Im({what}) = {np.min(np.imag(v))!r}")


@dataclass(frozen=True)
class DiskPoint:
    w: ComplexLike

    def __post_init__(self):
        object.__setattr__(self, "w", _c(self.w))
        check_disk(self.w)


@dataclass(frozen=True)
class UpperHalfPlanePoint:
    v: ComplexLike

    def __post_init__(self):
        object.__setattr__(self, "v", _c(self.v))
        check_uhp(self.v)


@dataclass(frozen=True)
class SJDiskPoint:
    z: ComplexLike
    w: ComplexLike

    def __post_init__(self):
        object.__setattr__(self, "z", _c(self.z))
        object.__setattr__(self, "w", _c(self.w))
        check_disk(self.w)

    def as_tuple(self):
        return self.z, self.w


@dataclass(frozen=True)
class FCPoint:
    eta: ComplexLike
    w: ComplexLike

    def __post_init__(self):
        object.__setattr__(self, "eta", _c(self.eta))
        object.__setattr__(self, "w", _c(self.w))
        check_disk(self.w)

    def as_tuple(self):
        return self.eta, self.w


@dataclass(frozen=True)
class SJUHPPoint:
    u: ComplexLike
    v: ComplexLike

    def __post_init__(self):
        object.__setattr__(self, "u", _c(self.u))
        object.__setattr__(self, "v", _c(self.v))
        check_uhp(self.v)

    def as_tuple(self):
        return self.u, self.v


@dataclass(frozen=True)
class EZCoordinates:
    """Eichler-Zagier coordinates: v = x + i y, u = p v + q, all real, y > 0."""

    x: float
    y: float
    p: float
    q: float

    def __post_init__(self):
        for name in ("x", "y", "p", "q"):
            object.__setattr__(self, name, _r(getattr(self, name)))
        if np.any(np.asarray(self.y) <= BOUNDARY_EPS):
            raise DomainError("EZ coordinate y must be > 0")


# -- Cayley transform ------------------------------------------------------

def cayley_to_disk(v: UpperHalfPlanePoint) -> DiskPoint:
    """w = (v - i) / (v + i)."""
    return DiskPoint((v.v - 1j) / (v.v + 1j))


def cayley_to_uhp(w: DiskPoint) -> UpperHalfPlanePoint:
    """v = i (1 + w) / (1 - w)."""
    return UpperHalfPlanePoint(1j * (1 + w.w) / (1 - w.w))


def partial_cayley(p: SJUHPPoint) -> SJDiskPoint:
    u, v = p.u, p.v
    return SJDiskPoint(2j * u / (v + 1j), (v - 1j) / (v + 1j))


def partial_cayley_inv(p: SJDiskPoint) -> SJUHPPoint:
    z, w = p.z, p.w
    # v + i = 2i / (1 - w), so u = z (v + i) / (2i) = z / (1 - w)
    return SJUHPPoint(z / (1 - w), 1j * (1 + w) / (1 - w))


# -- FC and FC_1 -----------------------------------------------------------

def fc_forward(p: FCPoint) -> SJDiskPoint:
    """(eta, w) -> (z, w) with z = eta - w * conj(eta)."""
    return SJDiskPoint(p.eta - p.w * np.conj(p.eta), p.w)


def fc_inverse(p: SJDiskPoint) -> FCPoint:
    """(z, w) -> (eta, w) with eta = (z + w * conj(z)) / (1 - |w|^2)."""
    z, w = p.z, p.w
    return FCPoint((z + w * np.conj(z)) / (1 - np.abs(w) ** 2), w)


def fc1_forward(eta: ComplexLike, v: UpperHalfPlanePoint) -> SJUHPPoint:
    """Half-plane version of FC: 2i u = (v + i) eta - (v - i) conj(eta).

    The coefficient of conj(eta) is (v - i); this is the form that makes
    partial_cayley(fc1_forward(eta, v)) == fc_forward(eta, cayley_to_disk(v))
    and that reproduces u = p v + q for eta = q + i p.
    """
    eta = _c(eta)
    vv = v.v
    u = ((vv + 1j) * eta - (vv - 1j) * np.conj(eta)) / 2j
    return SJUHPPoint(u, vv)


def fc1_inverse(p: SJUHPPoint):
    """eta = (u conj(v) - conj(u) v + i (conj(u) - u)) / (conj(v) - v)."""
    u, v = p.u, p.v
    ub, vb = np.conj(u), np.conj(v)
    return _c((u * vb - ub * v + 1j * (ub - u)) / (vb - v))


def ez_decompose(p: SJUHPPoint) -> EZCoordinates:
    y = np.imag(p.v)
    pp = np.imag(p.u) / y
    return EZCoordinates(np.real(p.v), y, pp, np.real(p.u) - pp * np.real(p.v))


def ez_compose(c: EZCoordinates) -> SJUHPPoint:
    v = c.x + 1j * c.y
    return SJUHPPoint(c.p * v + c.q, v)


def ez_eta(c: EZCoordinates):
    """The fibre coordinate eta = q + i p attached to EZ coordinates."""
    return _c(c.q + 1j * c.p)


# -- seeded sampling -------------------------------------------------------

def sample_disk(rng: np.random.Generator, n: int, radius: float = 0.95) -> np.ndarray:
    """Uniform samples (by area) in |w| <= radius."""
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))


def sample_plane(rng: np.random.Generator, n: int, half_width: float = 3.0) -> np.ndarray:
    """Re and Im uniform in [-half_width, half_width]."""
    return rng.uniform(-half_width, half_width, n) + 1j * rng.uniform(-half_width, half_width, n)


def sample_uhp(rng: np.random.Generator, n: int, radius: float = 0.95) -> np.ndarray:
    """Half-plane samples obtained as Cayley images of disk samples."""
    w = sample_disk(rng, n, radius)
    return 1j * (1 + w) / (1 - w)
