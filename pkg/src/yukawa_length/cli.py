"""Command-line entry point: ``yukawa-length <verb> [flags]``.

Exit statuses: 0 pass, 1 verification failure, 2 invalid input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from pathlib import Path

from . import errors
from .report import (
    DEFAULT_SWEEP,
    SPEC_VERSION,
    Scenario,
    cmd_higgs,
    cmd_hodge_numbers,
    cmd_jacobian_dims,
    cmd_oracle,
    cmd_sweep,
    cmd_verify,
    dumps,
    render_table,
)

EXIT_PASS, EXIT_FAIL, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3
VERBS = ("hodge-numbers", "jacobian-dims", "higgs", "verify", "oracle", "sweep")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="number of points / hyperplanes")
    p.add_argument("--r", type=int, help="cover degree (must divide m)")
    p.add_argument("--point", help="a_1,...,a_{m-3}; rationals like 5/2 allowed (default 2,3,...,m-2)")
    p.add_argument("--lambda", dest="lam", help="lambda_1,...,lambda_{m-3} for an explicit Higgs matrix")
    p.add_argument("--seed", type=int, help="seed for sampled directions (default 0)")
    p.add_argument("--trials", type=int, help="number of sampled directions (default 20)")
    p.add_argument("--bound", type=int, help="sampled entries lie in [-bound, bound] (default 100)")
    p.add_argument("--config", type=Path, help="JSON file with scenario fields; flags take precedence")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="add wall-time per stage (breaks byte-identity)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yukawa-length",
        description="Jacobian-ring dimensions, Higgs matrices and certified coupling lengths for (m, r).",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        p = sub.add_parser(verb)
        _common(p)
        if verb == "oracle":
            p.add_argument("--p", type=int, help="mu-degree (default: source and target bidegrees)")
            p.add_argument("--q", type=int, help="y-degree")
        if verb == "sweep":
            p.add_argument("--pairs", help="m:r list, e.g. '4:2,6:2' (default: the acceptance sweep)")
            p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    return parser


def load_scenario(args: argparse.Namespace, require_mr: bool = True) -> Scenario:
    data: dict = {}
    if args.config is not None:
        try:
            data = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise errors.InvalidInput(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise errors.InvalidInput("config file must hold a JSON object")
    overrides = {
        "m": args.m,
        "r": args.r,
        "point": args.point,
        "lambda": args.lam,
        "seed": args.seed,
        "trials": args.trials,
        "bound": args.bound,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if not require_mr:
        data.setdefault("m", 4)
        data.setdefault("r", 2)
    return Scenario.from_mapping(data)


def _parse_pairs(text: str | None) -> tuple[tuple[int, int], ...]:
    if text is None:
        return DEFAULT_SWEEP
    try:
        return tuple(tuple(int(x) for x in item.split(":")) for item in text.split(",") if item.strip())
    except ValueError:
        raise errors.InvalidInput(f"cannot parse --pairs {text!r}; expected 'm:r,m:r'") from None


def run(args: argparse.Namespace) -> dict:
    if args.verb == "sweep":
        return cmd_sweep(load_scenario(args, require_mr=False), _parse_pairs(args.pairs),
                         jobs=args.jobs, timings=args.timings)
    scenario = load_scenario(args)
    if args.verb == "hodge-numbers":
        return cmd_hodge_numbers(scenario)
    if args.verb == "jacobian-dims":
        return cmd_jacobian_dims(scenario)
    if args.verb == "higgs":
        return cmd_higgs(scenario)
    if args.verb == "verify":
        return cmd_verify(scenario, timings=args.timings)
    if args.verb == "oracle":
        return cmd_oracle(scenario, args.p, args.q)
    raise AssertionError(args.verb)


def _error_report(exc: BaseException, code: str) -> dict:
    return {
        "spec_version": SPEC_VERSION,
        "pass": False,
        "error": {"code": code, "type": type(exc).__name__, "message": str(exc)},
    }


def _emit(report: dict, args: argparse.Namespace) -> None:
    text = render_table(report) if getattr(args, "format", "json") == "table" else dumps(report)
    out = getattr(args, "out", None)
    if out is not None:
        out.write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = run(args)
    except errors.InvalidInput as exc:
        _emit(_error_report(exc, exc.code), args)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001 - surfaced as a machine-readable error object
        traceback.print_exc(file=sys.stderr)
        _emit(_error_report(exc, "internal-error"), args)
        return EXIT_INTERNAL
    _emit(report, args)
    return EXIT_PASS if report["pass"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
