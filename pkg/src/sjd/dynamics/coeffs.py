"""Coefficients of Hamiltonians linear in the Jacobi generators.

    H = eps_a a + conj(eps_a) a+ + eps_0 K0 + eps_plus K+ + eps_minus K-

Fields may be scalars or broadcastable numpy arrays (a batch of Hamiltonians).
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Callable, Union

import numpy as np

HERMITICITY_TOL = 1e-12


def _c(x):
    return complex(x) if np.ndim(x) == 0 else np.asarray(x, dtype=complex)


@dataclass(frozen=True)
class HamiltonianCoeffs:
    """Hermitian coefficients: eps_0 real, eps_minus = conj(eps_plus).

    ``eps_minus`` may be omitted and is then taken as ``conj(eps_plus)``.
    """

    eps_a: complex = 0j
    eps_0: float = 0.0
    eps_plus: complex = 0j
    eps_minus: complex | None = None

    def __post_init__(self):
        eps_0 = np.asarray(self.eps_0)
        if np.iscomplexobj(eps_0):
            if np.any(np.abs(eps_0.imag) > HERMITICITY_TOL):
                raise ValueError("eps_0 must be real for a hermitian Hamiltonian")
            eps_0 = eps_0.real
        object.__setattr__(self, "eps_0", float(eps_0) if eps_0.ndim == 0 else eps_0.astype(float))
        object.__setattr__(self, "eps_a", _c(self.eps_a))
        object.__setattr__(self, "eps_plus", _c(self.eps_plus))
        if self.eps_minus is None:
            object.__setattr__(self, "eps_minus", _c(np.conj(self.eps_plus)))
        else:
            em = _c(self.eps_minus)
            if np.any(np.abs(em - np.conj(self.eps_plus)) > HERMITICITY_TOL):
                raise ValueError("hermiticity requires eps_minus == conj(eps_plus)")
            object.__setattr__(self, "eps_minus", em)

    @property
    def delta(self):
        """Delta = eps_0^2 - 4 eps_plus eps_minus (real for hermitian coefficients)."""
        d = self.eps_0 ** 2 - 4 * np.abs(self.eps_plus) ** 2
        return float(d) if np.ndim(d) == 0 else d

    def is_zero(self) -> bool:
        return all(np.all(getattr(self, f.name) == 0) for f in fields(self))

    def to_nonhermitian(self) -> "NonHermitianCoeffs":
        return NonHermitianCoeffs(self.eps_a, np.conj(self.eps_a), self.eps_0, self.eps_plus, self.eps_minus)

    def take(self, i) -> "HamiltonianCoeffs":
        """Member ``i`` of a batch."""
        pick = lambda x: x if np.ndim(x) == 0 else x[i]
        return HamiltonianCoeffs(pick(self.eps_a), pick(self.eps_0), pick(self.eps_plus), pick(self.eps_minus))


@dataclass(frozen=True)
class NonHermitianCoeffs:
    """All five coefficients independent; ``eps_b`` multiplies a+."""

    eps_a: complex = 0j
    eps_b: complex = 0j
    eps_0: complex = 0j
    eps_plus: complex = 0j
    eps_minus: complex = 0j

    def __post_init__(self):
        for f in fields(self):
            v = _c(getattr(self, f.name))
            if not np.all(np.isfinite(v)):
                raise ValueError(f"{f.name} must be finite")
            object.__setattr__(self, f.name, v)

    def is_hermitian(self, tol: float = HERMITICITY_TOL) -> bool:
        return bool(np.all(np.abs(self.eps_b - np.conj(self.eps_a)) <= tol)
                    and np.all(np.abs(np.imag(self.eps_0)) <= tol)
                    and np.all(np.abs(self.eps_minus - np.conj(self.eps_plus)) <= tol))


Coeffs = Union[HamiltonianCoeffs, NonHermitianCoeffs]
CoeffsLike = Union[Coeffs, Callable[[float], Coeffs]]


def coeffs_at(coeffs: CoeffsLike, t: float) -> Coeffs:
    return coeffs(t) if callable(coeffs) else coeffs


@dataclass(frozen=True)
class RiccatiRoots:
    """Roots of w^2 + eps_0 w + eps_plus eps_minus = 0."""

    delta: float
    w1: complex
    w2: complex

    @property
    def oscillatory(self) -> bool:
        """Delta > 0: the regime of the closed-form solutions."""
        return self.delta > 0


def riccati_roots(coeffs: Coeffs) -> RiccatiRoots:
    prod = coeffs.eps_plus * coeffs.eps_minus
    if abs(np.imag(prod)) > 1e-12 * max(1.0, abs(prod)):
        raise ValueError("eps_plus * eps_minus must be real")
    e0 = complex(coeffs.eps_0)
    if abs(e0.imag) > 1e-12:
        raise ValueError("eps_0 must be real")
    e0, prod = e0.real, float(np.real(prod))
    delta = e0 * e0 - 4 * prod
    if delta >= 0:
        s = np.sqrt(delta)
        return RiccatiRoots(delta, (-e0 + s) / 2, (-e0 - s) / 2)
    s = 1j * np.sqrt(-delta)
    return RiccatiRoots(delta, (-e0 + s) / 2, (-e0 - s) / 2)


def random_hermitian(rng: np.random.Generator, min_delta: float = 0.1, eps0_range=(0.5, 3.0),
                     signed: bool = False, scale: float = 1.0) -> HamiltonianCoeffs:
    """Draw hermitian coefficients with Delta >= min_delta.

    ``signed`` lets eps_0 take either sign.
    """
    while True:
        e0 = rng.uniform(*eps0_range)
        if signed and rng.uniform() < 0.5:
            e0 = -e0
        ep = complex(*rng.uniform(-1, 1, 2)) * abs(e0) / 2
        ea = complex(*rng.uniform(-scale, scale, 2))
        c = HamiltonianCoeffs(ea, e0, ep)
        if c.delta >= min_delta:
            return c


def stack_coeffs(items: list[HamiltonianCoeffs]) -> HamiltonianCoeffs:
    """Batch a list of scalar coefficient sets into one with array fields."""
    return HamiltonianCoeffs(
        np.array([c.eps_a for c in items]),
        np.array([c.eps_0 for c in items]),
        np.array([c.eps_plus for c in items]),
        np.array([c.eps_minus for c in items]),
    )
