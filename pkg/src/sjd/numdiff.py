"""Small finite-difference helpers shared by the verification harness and the tests."""

from __future__ import annotations

import numpy as np


def to_real(zeta1, zeta2) -> np.ndarray:
    return np.array([np.real(zeta1), np.imag(zeta1), np.real(zeta2), np.imag(zeta2)], dtype=float)


def to_complex(x):
    return complex(x[0], x[1]), complex(x[2], x[3])


def fd_jacobian(f, x, step: float = 1e-5) -> np.ndarray:
    """Central-difference Jacobian of a map R^n -> R^m."""
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        cols.append((np.asarray(f(x + e)) - np.asarray(f(x - e))) / (2 * step))
    return np.stack(cols, axis=1)


def fd_hessian(f, x, step: float = 1e-4) -> np.ndarray:
    """Central-difference Hessian of a scalar function R^n -> R."""
    x = np.asarray(x, dtype=float)
    n = x.size
    h = np.zeros((n, n))
    eye = np.eye(n) * step
    for i in range(n):
        for j in range(i, n):
            val = (f(x + eye[i] + eye[j]) - f(x + eye[i] - eye[j])
                   - f(x - eye[i] + eye[j]) + f(x - eye[i] - eye[j])) / (4 * step * step)
            h[i, j] = h[j, i] = val
    return h


def fd_gradient(f, x, step: float = 1e-6, order: int = 2) -> np.ndarray:
    """Central-difference gradient; ``order=4`` uses the five-point stencil."""
    x = np.asarray(x, dtype=float)
    g = np.zeros_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = step
        if order == 2:
            g[i] = (f(x + e) - f(x - e)) / (2 * step)
        elif order == 4:
            g[i] = (-f(x + 2 * e) + 8 * f(x + e) - 8 * f(x - e) + f(x - 2 * e)) / (12 * step)
        else:
            raise ValueError("order must be 2 or 4")
    return g


def complex_hessian_fd(f, zeta, step: float = 1e-5) -> np.ndarray:
    """Matrix of d^2 f / d zeta_a d conj(zeta_b) for a real function of complex variables.

    ``f`` takes a tuple of complex numbers.  Uses
    d_a dbar_b = 1/4 (d_xa - i d_ya)(d_xb + i d_yb).
    """
    zeta = [complex(c) for c in zeta]
    n = len(zeta)

    def g(x):
        return f(tuple(complex(x[2 * i], x[2 * i + 1]) for i in range(n)))

    x0 = np.array([c for z in zeta for c in (z.real, z.imag)])
    hr = fd_hessian(g, x0, step)
    out = np.zeros((n, n), dtype=complex)
    for a in range(n):
        for b in range(n):
            xa, ya, xb, yb = 2 * a, 2 * a + 1, 2 * b, 2 * b + 1
            out[a, b] = 0.25 * (hr[xa, xb] + hr[ya, yb] + 1j * (hr[xa, yb] - hr[ya, xb]))
    return out


def central_derivatives(y: np.ndarray, dt: float):
    """First and second central differences at interior samples of a uniform grid."""
    d1 = (y[2:] - y[:-2]) / (2 * dt)
    d2 = (y[2:] - 2 * y[1:-1] + y[:-2]) / (dt * dt)
    return d1, d2
