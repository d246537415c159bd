"""Trajectory runs and their CSV / JSON output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from sjd.dynamics.energy import energy
from sjd.dynamics.integrator import StepParams, Trajectory, integrate_numeric
from sjd.dynamics.phases import berry_increments, cumulative_dynamical_phase
from sjd.cli.config import RunConfig, complex_pair

COLUMNS = {
    "disk": ("z", "w"),
    "fc": ("eta", "w"),
    "uhp": ("u", "v"),
    "fc1": ("eta", "v"),
}


def header(chart: str) -> list:
    a, b = COLUMNS[chart]
    return ["t", f"re_{a}", f"im_{a}", f"re_{b}", f"im_{b}", "energy", "abs_w", "phi_D_cum", "phi_B_cum"]


def to_fc(chart: str, z1, z2):
    """(eta, w) for states on any chart."""
    if chart == "fc":
        return z1, z2
    if chart == "disk":
        return (z1 + z2 * np.conj(z1)) / (1 - np.abs(z2) ** 2), z2
    w = (z2 - 1j) / (z2 + 1j)
    if chart == "fc1":
        return z1, w
    z = z1 * (1 - w)
    return (z + w * np.conj(z)) / (1 - np.abs(w) ** 2), w


@dataclass
class SimulationResult:
    config: RunConfig
    trajectory: Trajectory
    energy: np.ndarray
    abs_w: np.ndarray
    phi_D: np.ndarray
    phi_B: np.ndarray

    @property
    def exit_code(self) -> int:
        return 0 if self.trajectory.ok else 3

    def rows(self):
        tr = self.trajectory
        for i, t in enumerate(tr.times):
            z1, z2 = tr.states[i]
            yield [t, z1.real, z1.imag, z2.real, z2.imag, self.energy[i], self.abs_w[i], self.phi_D[i], self.phi_B[i]]

    def summary(self) -> dict:
        e = self.energy
        finite = e[np.isfinite(e)]
        return {
            "status": self.trajectory.status,
            "message": self.trajectory.message,
            "exit_code": self.exit_code,
            "rows": len(self.trajectory),
            "t_final": float(self.trajectory.times[-1]),
            "final_state": [complex_pair(c) for c in self.trajectory.states[-1]],
            "conserved": {
                "autonomous": self.config.coefficients.autonomous,
                "energy_initial": float(e[0]) if finite.size else None,
                "energy_final": float(e[-1]) if finite.size else None,
                "energy_max_drift": float(np.max(np.abs(finite - finite[0]))) if finite.size else None,
            },
            "phi_D": float(self.phi_D[-1]) if np.isfinite(self.phi_D[-1]) else None,
            "phi_B": float(self.phi_B[-1]),
        }


def run_simulation(cfg: RunConfig) -> SimulationResult:
    params = StepParams(h=cfg.h, tol=cfg.tol)
    sched = cfg.coefficients
    coeffs = sched(0.0) if sched.autonomous else sched
    tr = integrate_numeric(cfg.chart, cfg.state0, coeffs, cfg.times, params)
    z1, z2 = tr.zeta1, tr.zeta2
    if cfg.coefficients.hermitian:
        en = np.array([float(energy((a, b), cfg.chart, cfg.coefficients(t), cfg.k))
                       for t, a, b in zip(tr.times, z1, z2)])
        phi_D = cumulative_dynamical_phase(tr.times, en)
    else:
        en = np.full(len(tr), np.nan)
        phi_D = np.full(len(tr), np.nan)
    eta, w = to_fc(cfg.chart, z1, z2)
    phi_B = np.concatenate([[0.0], np.cumsum(berry_increments(eta, w, "fc", cfg.k))]) if len(tr) > 1 else np.zeros(1)
    return SimulationResult(cfg, tr, en, np.abs(w), phi_D, phi_B)


def _fmt(x) -> str:
    return repr(float(x))


def csv_text(res: SimulationResult) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header(res.config.chart))
    for row in res.rows():
        wr.writerow([_fmt(x) for x in row])
    return buf.getvalue()


def sidecar(res: SimulationResult) -> dict:
    return {"config": res.config.raw, "seed": res.config.seed, **res.summary()}


def write_outputs(res: SimulationResult):
    cfg = res.config
    if cfg.csv_path is not None:
        cfg.csv_path.write_text(csv_text(res))
    if cfg.json_path is not None:
        cfg.json_path.write_text(json.dumps(sidecar(res), indent=2, sort_keys=True) + "\n")


def read_csv(path):
    """(header, float array) of an emitted trajectory file."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array([[float(x) for x in r] for r in rows[1:]])
