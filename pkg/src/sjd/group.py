"""The Jacobi group G^J_1 = H_1 x| SU(1,1) and its actions.

Elements are triples ``(g, alpha, t)`` with ``g`` in SU(1,1) written as
``[[a, b], [conj(b), conj(a)]]``, ``alpha`` complex and ``t`` the real centre
coordinate.  The product is

    (g1, a1, t1) o (g2, a2, t2) = (g1 g2, g2^-1 . a1 + a2,
                                   t1 + t2 + Im((g2^-1 . a1) conj(a2)))

with ``g . alpha = a alpha + b conj(alpha)``.

Action convention
-----------------
Every ``act_*`` below is a *left* action for this product::

    act(compose(j1, j2), p) == act(j1, act(j2, p))

This was fixed by testing both orderings numerically; the right-action
ordering fails already for pure translations composed with rotations.
The centre ``t`` never enters an action; it only rides along in ``compose``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from sjd.domains import FCPoint, SJDiskPoint, SJUHPPoint, _c
from sjd.errors import InvariantError

RENORM_TOL = 1e-9
DEGENERACY_TOL = 1e-14

# Cayley matrix and its inverse; C^-1 SL(2,R) C = SU(1,1).
CAYLEY = np.array([[1j, 1j], [-1.0, 1.0]])
CAYLEY_INV = np.array([[1.0, -1j], [1.0, 1j]]) / 2j


@dataclass(frozen=True)
class SU11Element:
    a: complex
    b: complex

    def __post_init__(self):
        a, b = complex(self.a), complex(self.b)
        det = abs(a) ** 2 - abs(b) ** 2
        # rounding in |a|^2 - |b|^2 scales with |a|^2 + |b|^2
        if not np.isfinite(det) or abs(det - 1.0) > RENORM_TOL * (abs(a) ** 2 + abs(b) ** 2):
            raise InvariantError(f"|a|^2 - |b|^2 = {det!r}, expected 1")
        s = 1.0 / np.sqrt(det)
        object.__setattr__(self, "a", a * s)
        object.__setattr__(self, "b", b * s)

    @classmethod
    def identity(cls) -> "SU11Element":
        return cls(1.0, 0.0)

    @classmethod
    def from_parameters(cls, s: float, phi: float, psi: float) -> "SU11Element":
        """a = cosh(s) e^{i phi}, b = sinh(s) e^{i psi}."""
        return cls(np.cosh(s) * np.exp(1j * phi), np.sinh(s) * np.exp(1j * psi))

    @property
    def matrix(self) -> np.ndarray:
        a, b = self.a, self.b
        return np.array([[a, b], [np.conj(b), np.conj(a)]])

    def __matmul__(self, other: "SU11Element") -> "SU11Element":
        m = self.matrix @ other.matrix
        return SU11Element(m[0, 0], m[0, 1])

    def inverse(self) -> "SU11Element":
        return SU11Element(np.conj(self.a), -self.b)

    def act_vector(self, alpha):
        """g . alpha = a alpha + b conj(alpha)."""
        return self.a * alpha + self.b * np.conj(alpha)

    def mobius(self, w):
        """g . w = (a w + b) / (conj(b) w + conj(a))."""
        den = np.conj(self.b) * w + np.conj(self.a)
        if np.any(np.abs(den) < DEGENERACY_TOL):
            raise ArithmeticError("degenerate Mobius denominator")
        return (self.a * w + self.b) / den


@dataclass(frozen=True)
class SL2RElement:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        vals = [float(getattr(self, n)) for n in "abcd"]
        det = vals[0] * vals[3] - vals[1] * vals[2]
        if not np.isfinite(det) or abs(det - 1.0) > 1e-12:
            raise InvariantError(f"ad - bc = {det!r}, expected 1")
        for n, x in zip("abcd", vals):
            object.__setattr__(self, n, x)

    @classmethod
    def identity(cls) -> "SL2RElement":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "SL2RElement") -> "SL2RElement":
        m = self.matrix @ other.matrix
        return SL2RElement(*m.ravel())


@dataclass(frozen=True)
class JacobiElement:
    g: SU11Element
    alpha: complex = 0j
    t: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "t", float(self.t))

    @classmethod
    def identity(cls) -> "JacobiElement":
        return cls(SU11Element.identity(), 0j, 0.0)


def star_conjugate(m: SL2RElement) -> SU11Element:
    """M_* = C^-1 M C."""
    ms = CAYLEY_INV @ m.matrix @ CAYLEY
    return SU11Element(ms[0, 0], ms[0, 1])


def star_conjugate_inv(g: SU11Element) -> SL2RElement:
    """Inverse of :func:`star_conjugate`: M = C M_* C^-1 (real up to rounding)."""
    m = CAYLEY @ g.matrix @ CAYLEY_INV
    if np.max(np.abs(m.imag)) > 1e-9:
        raise InvariantError("conjugate of the SU(1,1) element is not real")
    return SL2RElement(*m.real.ravel())


def compose(j1: JacobiElement, j2: JacobiElement) -> JacobiElement:
    moved = j2.g.inverse().act_vector(j1.alpha)
    return JacobiElement(
        j1.g @ j2.g,
        moved + j2.alpha,
        j1.t + j2.t + float(np.imag(moved * np.conj(j2.alpha))),
    )


def inverse(j: JacobiElement) -> JacobiElement:
    # Solving compose(j, x) = e gives alpha_x = -(g . alpha); the centre term
    # Im(|g.alpha|^2) vanishes, so t_x = -t.
    return JacobiElement(j.g.inverse(), -j.g.act_vector(j.alpha), -j.t)


def act_disk(j: JacobiElement, p: SJDiskPoint) -> SJDiskPoint:
    a, b, al = j.g.a, j.g.b, j.alpha
    z, w = p.z, p.w
    den = np.conj(b) * w + np.conj(a)
    if np.any(np.abs(den) < DEGENERACY_TOL):
        raise ArithmeticError("degenerate denominator in disk action")
    return SJDiskPoint((al - np.conj(al) * w + z) / den, (a * w + b) / den)


def act_fc(j: JacobiElement, p: FCPoint) -> FCPoint:
    shifted = p.eta + j.alpha
    return FCPoint(j.g.act_vector(shifted), j.g.mobius(p.w))


def act_uhp(h: SL2RElement, alpha, p: SJUHPPoint) -> SJUHPPoint:
    alpha = _c(alpha)
    m, n = np.real(alpha), np.imag(alpha)
    u, v = p.u, p.v
    den = h.c * v + h.d
    if np.any(np.abs(den) < DEGENERACY_TOL):
        raise ArithmeticError("degenerate denominator in half-plane action")
    return SJUHPPoint((u + n * v + m) / den, (h.a * v + h.b) / den)


def jacobi_from_sl2r(h: SL2RElement, alpha, t: float = 0.0) -> JacobiElement:
    """The disk-side Jacobi element matching ``act_uhp(h, alpha, .)`` under partial Cayley."""
    return JacobiElement(star_conjugate(h), alpha, t)


def random_su11(rng: np.random.Generator, max_s: float = 1.5) -> SU11Element:
    s = rng.uniform(0.0, max_s)
    phi, psi = rng.uniform(0.0, 2 * np.pi, 2)
    return SU11Element.from_parameters(s, phi, psi)


def random_jacobi(rng: np.random.Generator, max_s: float = 1.5, alpha_width: float = 2.0) -> JacobiElement:
    g = random_su11(rng, max_s)
    alpha = complex(*rng.uniform(-alpha_width, alpha_width, 2))
    return JacobiElement(g, alpha, rng.uniform(-1.0, 1.0))


def random_sl2r(rng: np.random.Generator, max_s: float = 1.5) -> SL2RElement:
    return star_conjugate_inv(random_su11(rng, max_s))
