"""Berry-phase reports for closed paths.

Config::

    {
      "k": 1.0,
      "chart": "fc",
      "segments": 10000,
      "path": {"type": "circle", "center": [0, 0], "radius": 0.5, "turns": 1, "eta": [0, 0]},
      "trajectory_csv": "run.csv"          (optional, adds phi_D)
    }

A polyline path is ``{"type": "polyline", "vertices": [[eta, w], ...]}`` with
each complex number as ``[re, im]``.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from sjd.cli.config import ConfigError, load_json, parse_complex
from sjd.cli.simulate import read_csv
from sjd.dynamics.phases import berry_phase, circle_path, dynamical_phase, path_length, polyline_path, richardson
from sjd.errors import DomainError
from sjd.geometry import ModelParams


def _path_builder(spec: dict):
    if not isinstance(spec, dict):
        raise ConfigError("path must be an object")
    kind = spec.get("type")
    if kind == "circle":
        center = parse_complex(spec.get("center", 0), "path.center")
        radius = float(spec.get("radius", 0.0))
        turns = float(spec.get("turns", 1.0))
        eta = parse_complex(spec.get("eta", 0), "path.eta")
        if radius < 0:
            raise ConfigError("path.radius must be non-negative")
        return lambda n: circle_path(radius, n, center, turns, eta)
    if kind == "polyline":
        verts = spec.get("vertices")
        if not isinstance(verts, list) or len(verts) < 2:
            raise ConfigError("path.vertices must list at least two [eta, w] pairs")
        try:
            v = [[parse_complex(a, "vertex eta"), parse_complex(b, "vertex w")] for a, b in verts]
        except (TypeError, ValueError) as e:
            raise ConfigError(f"path.vertices: {e}") from None
        return lambda n: polyline_path(v, n)
    raise ConfigError(f"path.type must be 'circle' or 'polyline', got {kind!r}")


def phase_report(raw: dict, base_dir: Path | None = None) -> dict:
    """Berry phase at N and N/2 segments, the Richardson estimate, and phi_D if a trajectory is given.

    Raises DomainError if the path leaves the disk.
    """
    if not isinstance(raw, dict):
        raise ConfigError("configuration must be a JSON object")
    try:
        k = ModelParams(raw.get("k", 1.0)).k
    except (TypeError, ValueError) as e:
        raise ConfigError(f"k: {e}") from None
    chart = raw.get("chart", "fc")
    if chart not in ("fc", "disk"):
        raise ConfigError("chart must be 'fc' or 'disk'")
    n = raw.get("segments", 10_000)
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ConfigError("segments must be an even integer >= 2")
    build = _path_builder(raw.get("path"))
    eta, w = build(n)
    if np.any(np.abs(w) >= 1):
        raise DomainError("path leaves the disk")
    eta_h, w_h = build(n // 2)
    z1, z1_h = (eta, eta_h) if chart == "fc" else (eta - w * np.conj(eta), eta_h - w_h * np.conj(eta_h))
    fine = berry_phase(z1, w, chart, k)
    coarse = berry_phase(z1_h, w_h, chart, k)
    report = {
        "k": k,
        "chart": chart,
        "segments": n,
        "path_length": path_length(eta, w),
        "phi_B": fine,
        "phi_B_half_segments": coarse,
        "phi_B_richardson": richardson(coarse, fine),
        "phi_D": None,
    }
    traj = raw.get("trajectory_csv")
    if traj is not None:
        p = Path(traj)
        if not p.is_absolute() and base_dir is not None:
            p = base_dir / p
        if not p.exists():
            raise ConfigError(f"trajectory_csv not found: {p}")
        head, data = read_csv(p)
        report["phi_D"] = dynamical_phase(data[:, head.index("t")], data[:, head.index("energy")])
    return report


def load_phase_config(path):
    return load_json(path), Path(path).resolve().parent
