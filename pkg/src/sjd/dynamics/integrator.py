"""Fixed-step RK4 with a Richardson step-halving error check.

Each step of size h is compared against two steps of size h/2.  The
difference over 15 estimates the local error of the half-step result; if it
exceeds ``tol * (1 + |y|)`` the step is split in two and retried.  The
accepted value is the half-step result.

States are complex arrays of shape (2, *batch).  A batch of independent
trajectories is integrated in lockstep, which is the cheap way to sweep
parameters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from sjd.dynamics.coeffs import CoeffsLike, coeffs_at
from sjd.dynamics.eom import eom
from sjd.errors import IntegrationError

log = logging.getLogger(__name__)

DOMAIN_MARGIN = 1e-10


@dataclass(frozen=True)
class StepParams:
    h: float = 1e-3
    tol: float = 1e-10
    min_step: float = 1e-9
    margin: float = DOMAIN_MARGIN


@dataclass
class Trajectory:
    """Sampled solution on an output grid.

    ``states`` has shape (n_times, 2, *batch); ``status`` is ``"ok"`` or
    ``"domain_exit"``, in which case the arrays stop at the last grid time
    where every member was still inside the chart.
    """

    chart: str
    times: np.ndarray
    states: np.ndarray
    status: str = "ok"
    message: str = ""
    samples: dict = field(default_factory=dict)

    @property
    def zeta1(self) -> np.ndarray:
        return self.states[:, 0]

    @property
    def zeta2(self) -> np.ndarray:
        return self.states[:, 1]

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def __len__(self):
        return len(self.times)


def rk4_step(f, t, y, h):
    k1 = f(t, y)
    k2 = f(t + h / 2, y + (h / 2) * k1)
    k3 = f(t + h / 2, y + (h / 2) * k2)
    k4 = f(t + h, y + h * k3)
    return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)


def _checked_step(f, t, y, h, params: StepParams):
    full = rk4_step(f, t, y, h)
    half = rk4_step(f, t + h / 2, rk4_step(f, t, y, h / 2), h / 2)
    err = np.max(np.abs(half - full)) / 15
    if err <= params.tol * (1 + np.max(np.abs(half))) and np.all(np.isfinite(half)):
        return half
    if h / 2 < params.min_step:
        raise IntegrationError(f"step underflow at t={t!r} (error estimate {err!r})")
    y = _checked_step(f, t, y, h / 2, params)
    return _checked_step(f, t + h / 2, y, h / 2, params)


def _inside(chart, y, margin):
    if chart in ("disk", "fc"):
        return bool(np.all(np.abs(y[1]) <= 1 - margin))
    return bool(np.all(np.imag(y[1]) >= margin))


def integrate_ode(f, y0, t_grid, params: StepParams = StepParams(), inside=None):
    """Integrate y' = f(t, y) onto ``t_grid``; returns (times, states, status, message)."""
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size < 1 or np.any(np.diff(t_grid) <= 0):
        raise ValueError("t_grid must be a strictly increasing 1-d array")
    y = np.array(y0, dtype=complex)
    out = [y.copy()]
    for i in range(1, t_grid.size):
        t0, t1 = t_grid[i - 1], t_grid[i]
        n = max(1, int(np.ceil((t1 - t0) / params.h - 1e-9)))
        h = (t1 - t0) / n
        for j in range(n):
            y = _checked_step(f, t0 + j * h, y, h, params)
            if inside is not None and not inside(y):
                msg = f"left the chart domain between t={t0 + j * h!r} and t={t0 + (j + 1) * h!r}"
                log.warning(msg)
                return t_grid[:i], np.array(out), "domain_exit", msg
        out.append(y.copy())
    return t_grid, np.array(out), "ok", ""


def integrate_numeric(chart: str, state0, coeffs: CoeffsLike, t_grid, params: StepParams = StepParams()) -> Trajectory:
    """Integrate the equations of motion on ``chart`` from ``state0 = (zeta1, zeta2)``.

    ``coeffs`` is a coefficient set or a callable ``t -> coefficients``.
    """
    y0 = np.array([state0[0], state0[1]], dtype=complex)
    if not _inside(chart, y0, 0.0):
        raise ValueError("initial state outside the chart domain")

    def f(t, y):
        d1, d2 = eom(chart, (y[0], y[1]), coeffs_at(coeffs, t))
        return np.array([d1 + 0 * y[0], d2 + 0 * y[1]])

    times, states, status, msg = integrate_ode(f, y0, t_grid, params, lambda y: _inside(chart, y, params.margin))
    return Trajectory(chart, times, states, status, msg)


def integrate_riccati_linear(w0, coeffs: CoeffsLike, t_grid, params: StepParams = StepParams()):
    """w = X / Y from  i X' = eps_minus Y + eps_0 X,  i Y' = -eps_plus X."""
    def f(t, y):
        c = coeffs_at(coeffs, t)
        X, Y = y[0], y[1]
        return np.array([-1j * (c.eps_minus * Y + c.eps_0 * X), 1j * c.eps_plus * X + 0 * Y])

    y0 = np.array([w0, np.ones_like(w0)], dtype=complex)
    times, states, status, msg = integrate_ode(f, y0, t_grid, params)
    return times, states[:, 0] / states[:, 1]
