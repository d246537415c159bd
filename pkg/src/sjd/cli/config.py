"""JSON run configuration.

Complex numbers are written as ``[re, im]`` pairs (a bare number is read as
real).  A coefficient is either a constant or a profile object::

    {"profile": "sinusoidal", "base": [2, 0], "amplitude": [0.1, 0], "omega": 1.5}

meaning base + amplitude * sin(omega t).  Example::

    {
      "chart": "fc",
      "k": 1.0,
      "initial_state": [[0, 0], [0, 0]],
      "coefficients": {"eps_a": [1, 0], "eps_0": 2.0, "eps_plus": [0.5, 0]},
      "time": {"span": 10.0, "step": 0.01},
      "output": {"csv": "run.csv", "json": "run.json"}
    }
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from sjd.domains import check_disk, check_uhp, sample_disk, sample_plane, sample_uhp
from sjd.dynamics.coeffs import HamiltonianCoeffs, NonHermitianCoeffs
from sjd.dynamics.eom import CHARTS
from sjd.geometry import ModelParams


class ConfigError(ValueError):
    """Malformed or inconsistent configuration."""


def parse_complex(x, what: str) -> complex:
    if isinstance(x, bool):
        raise ConfigError(f"{what}: expected a number or [re, im], got {x!r}")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, (list, tuple)) and len(x) == 2 and all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in x):
        return complex(x[0], x[1])
    raise ConfigError(f"{what}: expected a number or [re, im], got {x!r}")


def complex_pair(c: complex) -> list:
    return [float(np.real(c)), float(np.imag(c))]


@dataclass(frozen=True)
class Profile:
    """base + amplitude * sin(omega t); constant when amplitude is 0."""

    base: complex
    amplitude: complex = 0j
    omega: float = 0.0

    def __call__(self, t: float) -> complex:
        return self.base + self.amplitude * np.sin(self.omega * t)

    @property
    def constant(self) -> bool:
        return self.amplitude == 0 or self.omega == 0


def parse_profile(x, what: str) -> Profile:
    if isinstance(x, dict):
        kind = x.get("profile", "constant")
        if kind == "constant":
            return Profile(parse_complex(x.get("value", 0), what))
        if kind == "sinusoidal":
            try:
                return Profile(parse_complex(x["base"], what), parse_complex(x["amplitude"], what),
                               float(x["omega"]))
            except KeyError as e:
                raise ConfigError(f"{what}: sinusoidal profile needs {e.args[0]!r}") from None
        raise ConfigError(f"{what}: unknown profile {kind!r}")
    return Profile(parse_complex(x, what))


HERMITIAN_KEYS = ("eps_a", "eps_0", "eps_plus")
NONHERMITIAN_KEYS = ("eps_a", "eps_b", "eps_0", "eps_plus", "eps_minus")


@dataclass(frozen=True)
class CoefficientSchedule:
    profiles: dict
    hermitian: bool = True

    @property
    def autonomous(self) -> bool:
        return all(p.constant for p in self.profiles.values())

    def __call__(self, t: float):
        vals = {k: p(t) for k, p in self.profiles.items()}
        if self.hermitian:
            return HamiltonianCoeffs(vals["eps_a"], vals["eps_0"].real, vals["eps_plus"])
        return NonHermitianCoeffs(**vals)


def parse_coefficients(x) -> CoefficientSchedule:
    if not isinstance(x, dict):
        raise ConfigError("coefficients: expected an object")
    hermitian = bool(x.get("hermitian", True))
    keys = HERMITIAN_KEYS if hermitian else NONHERMITIAN_KEYS
    extra = set(x) - set(keys) - {"hermitian", "eps_minus"}
    if extra:
        raise ConfigError(f"coefficients: unknown keys {sorted(extra)}")
    profiles = {k: parse_profile(x.get(k, 0), f"coefficients.{k}") for k in keys}
    if hermitian:
        e0 = profiles["eps_0"]
        if e0.base.imag or e0.amplitude.imag:
            raise ConfigError("coefficients.eps_0 must be real for a hermitian Hamiltonian")
        if "eps_minus" in x:
            em = parse_profile(x["eps_minus"], "coefficients.eps_minus")
            ep = profiles["eps_plus"]
            if (em.base != np.conj(ep.base) or em.amplitude != np.conj(ep.amplitude)
                    or (em.amplitude and em.omega != ep.omega)):
                raise ConfigError("coefficients: hermiticity requires eps_minus = conj(eps_plus)")
    return CoefficientSchedule(profiles, hermitian)


def seed_default(seed=None) -> int:
    if seed is not None:
        return int(seed)
    env = os.environ.get("SJD_SEED")
    if env is None or env == "":
        return 0
    try:
        return int(env)
    except ValueError:
        raise ConfigError(f"SJD_SEED must be an integer, got {env!r}") from None


@dataclass(frozen=True)
class RunConfig:
    chart: str
    state0: tuple
    coefficients: CoefficientSchedule
    k: float
    span: float
    step: float
    h: float = 1e-3
    tol: float = 1e-10
    csv_path: Path | None = None
    json_path: Path | None = None
    seed: int = 0
    raw: dict = field(default_factory=dict, compare=False)

    @property
    def times(self) -> np.ndarray:
        n = int(round(self.span / self.step))
        if abs(n * self.step - self.span) > 1e-9 * self.span:
            n = int(np.ceil(self.span / self.step))
        return np.linspace(0.0, self.span, n + 1)


def _random_state(chart, rng):
    a = complex(sample_plane(rng, 1, 1.0)[0])
    if chart in ("disk", "fc"):
        return a, complex(sample_disk(rng, 1, 0.5)[0])
    return a, complex(sample_uhp(rng, 1, 0.5)[0])


def parse_run_config(raw: dict, base_dir: Path | None = None, seed=None) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("configuration must be a JSON object")
    chart = raw.get("chart", "disk")
    if chart not in CHARTS:
        raise ConfigError(f"chart must be one of {CHARTS}, got {chart!r}")
    try:
        k = ModelParams(raw.get("k", 1.0)).k
    except (TypeError, ValueError) as e:
        raise ConfigError(f"k: {e}") from None
    s = seed_default(raw.get("seed") if seed is None else seed)
    coeffs = parse_coefficients(raw.get("coefficients", {}))
    if not coeffs.hermitian and chart not in ("disk", "fc"):
        raise ConfigError("non-hermitian coefficients are supported on the disk and fc charts")
    st = raw.get("initial_state", [[0, 0], [0, 0]])
    if st == "random":
        state0 = _random_state(chart, np.random.default_rng(s))
    elif isinstance(st, (list, tuple)) and len(st) == 2:
        state0 = (parse_complex(st[0], "initial_state[0]"), parse_complex(st[1], "initial_state[1]"))
    else:
        raise ConfigError("initial_state must be [zeta1, zeta2] or \"random\"")
    try:
        if chart in ("disk", "fc"):
            check_disk(state0[1], "initial_state[1]")
        else:
            check_uhp(state0[1], "initial_state[1]")
    except ValueError as e:
        raise ConfigError(str(e)) from None
    tm = raw.get("time", {})
    try:
        span = float(tm.get("span", 10.0))
        step = float(tm.get("step", 0.01))
        h = float(tm.get("h", 1e-3))
        tol = float(tm.get("tol", 1e-10))
    except (TypeError, ValueError, AttributeError) as e:
        raise ConfigError(f"time: {e}") from None
    if not span > 0 or not step > 0 or not h > 0 or not tol > 0:
        raise ConfigError("time: span, step, h and tol must be positive")
    out = raw.get("output", {})
    base_dir = base_dir or Path.cwd()

    def _path(key):
        v = out.get(key)
        return None if v is None else (base_dir / v if not os.path.isabs(v) else Path(v))

    return RunConfig(chart, state0, coeffs, k, span, step, h, tol, _path("csv"), _path("json"), s, raw)


def load_json(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON in {path}: {e}") from None


def load_run_config(path, seed=None) -> RunConfig:
    return parse_run_config(load_json(path), Path(path).resolve().parent, seed)
