"""Command-line entry point.

Two verbs: ``run`` executes a single scenario file, ``compare`` runs
several with a shared payload bit pool. Both write the CSV tables and a
JSON mirror into --out. Exit codes: 0 success, 2 configuration error,
3 runtime numeric error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from wavebench import __version__
from wavebench.numerics import force_naive_transforms, naive_transforms_forced
from wavebench.harness.reports import emit_reports
from wavebench.harness.runner import run_comparison, run_scenario
from wavebench.harness.scenario import Scenario, ScenarioError, load_scenario


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wavebench",
        description="Run waveform comparison scenarios and emit CSV reports.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--out", required=True, help="output directory")
    shared.add_argument(
        "--seed", type=int, default=None, help="override the scenario seed"
    )
    shared.add_argument(
        "--trials", type=int, default=None, help="override the trial count"
    )
    shared.add_argument(
        "--oracle-dft",
        action="store_true",
        help="force the quadratic reference transform everywhere",
    )

    p_run = sub.add_parser("run", parents=[shared], help="run one scenario")
    p_run.add_argument("scenario", help="scenario JSON file")

    p_cmp = sub.add_parser(
        "compare",
        parents=[shared],
        help="run several scenarios on a shared payload",
    )
    p_cmp.add_argument("scenarios", nargs="+", help="scenario JSON files")
    return parser


def _apply_overrides(sc: Scenario, args: argparse.Namespace) -> Scenario:
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise ScenarioError("scenario.seed: outside unsigned 64-bit range")
        sc = replace(sc, seed=args.seed)
    if args.trials is not None:
        if args.trials < 1:
            raise ScenarioError(f"scenario.trials: {args.trials} must be >= 1")
        sc = replace(sc, trials=args.trials)
    return sc


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    was_forced = naive_transforms_forced()
    try:
        if args.oracle_dft:
            force_naive_transforms(True)
        if args.command == "run":
            scenarios = [load_scenario(args.scenario)]
        else:
            scenarios = [load_scenario(p) for p in args.scenarios]
        scenarios = [_apply_overrides(sc, args) for sc in scenarios]
        ids = [sc.scenario_id for sc in scenarios]
        if len(set(ids)) != len(ids):
            raise ScenarioError("scenario.id: duplicate ids in one comparison")

        if args.command == "run":
            reports = [run_scenario(scenarios[0])]
        else:
            reports = run_comparison(scenarios)
        trials = {sc.scenario_id: sc.trials for sc in scenarios}
        written = emit_reports(reports, args.out, trials)
        for path in written:
            print(path)
        return 0
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"runtime error: {exc}", file=sys.stderr)
        return 3
    finally:
        force_naive_transforms(was_forced)


if __name__ == "__main__":
    sys.exit(main())
