"""Command-line entry point ``sjd``.

Exit codes: 0 success, 2 configuration error, 3 the trajectory left the
chart domain, 4 a verification invariant failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from sjd.cli.config import ConfigError, load_run_config, seed_default
from sjd.cli.phase import load_phase_config, phase_report
from sjd.cli.simulate import csv_text, run_simulation, sidecar, write_outputs
from sjd.cli.verify import run_verify
from sjd.errors import DomainError, IntegrationError, SJDError

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4

log = logging.getLogger("sjd")


def cmd_simulate(args) -> int:
    cfg = load_run_config(args.config, args.seed)
    res = run_simulation(cfg)
    write_outputs(res)
    if cfg.csv_path is None:
        sys.stdout.write(csv_text(res))
    if cfg.json_path is None:
        sys.stderr.write(json.dumps(sidecar(res), sort_keys=True) + "\n")
    if not res.trajectory.ok:
        log.error("integration stopped: %s", res.trajectory.message)
    return res.exit_code


def cmd_verify(args) -> int:
    seed = seed_default(args.seed)
    report = run_verify(seed, args.samples, inject_bug=args.inject_bug)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for line in report.lines():
            print(line)
        print(f"seed={seed}  {'all invariants hold' if report.passed else f'{len(report.failures())} failed'}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_phase(args) -> int:
    raw, base = load_phase_config(args.config)
    try:
        report = phase_report(raw, base)
    except DomainError as e:
        log.error("%s", e)
        return EXIT_DOMAIN
    text = json.dumps(report, indent=2, sort_keys=True)
    out = raw.get("output")
    if out:
        (base / out).write_text(text + "\n")
    print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sjd", description="Siegel-Jacobi disk geometry and dynamics")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("simulate", help="integrate a trajectory and write CSV / JSON")
    s.add_argument("--config", required=True)
    s.add_argument("--seed", type=int, default=None)
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.add_argument("--seed", type=int, default=None, help="defaults to $SJD_SEED, then 0")
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--inject-bug", action="store_true", help="flip a sign inside FC to exercise the harness")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    ph = sub.add_parser("phase", help="Berry / dynamical phase report for a closed path")
    ph.add_argument("--config", required=True)
    ph.set_defaults(func=cmd_phase)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as e:
        log.error("configuration error: %s", e)
        return EXIT_CONFIG
    except IntegrationError as e:
        log.error("%s", e)
        return EXIT_DOMAIN
    except SJDError as e:
        log.error("%s", e)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
