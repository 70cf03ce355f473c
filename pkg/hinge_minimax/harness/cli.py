
# Copyright © 2019-2026 Cognizant Technology Solutions Corp, www.cognizant.com.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# END COPYRIGHT

"""
Command line entry point:

    hinge-minimax run CONFIG [--set key.path=value ...]
    hinge-minimax verify [SUITE ...] [--quick]
    hinge-minimax bounds KIND [--param name=value ...]
    hinge-minimax plot CSV [--exponent E]
"""
import argparse
import json
import logging
import math
import os
import sys
from typing import Any
from typing import Callable
from typing import Dict
from typing import List

import pandas as pd

from hinge_minimax.bounds.minimax_calculators import clamped
from hinge_minimax.bounds.minimax_calculators import fano_lower_bound
from hinge_minimax.bounds.minimax_calculators import lecam_lower_bound
from hinge_minimax.bounds.minimax_calculators import rate_exponent
from hinge_minimax.bounds.oracle_inequality import eps_grid
from hinge_minimax.bounds.oracle_inequality import oracle_rhs
from hinge_minimax.bounds.oracle_params import OracleParams
from hinge_minimax.bounds.tail_integral import tail_integral_bound
from hinge_minimax.errors.hinge_minimax_error import HingeMinimaxError
from hinge_minimax.errors.parameter_error import ParameterError
from hinge_minimax.estimators.hyperparam_schedule import covering_radius
from hinge_minimax.estimators.hyperparam_schedule import hyperparam_schedule
from hinge_minimax.harness.experiment_config import load_experiment_config
from hinge_minimax.harness.rate_experiment import run_rate_experiment
from hinge_minimax.harness.rate_report import RateReport
from hinge_minimax.harness.rate_report import rows_from_frame
from hinge_minimax.harness.report_emitter import emit_report
from hinge_minimax.harness.report_emitter import read_json
from hinge_minimax.harness.report_emitter import write_plot
from hinge_minimax.harness.verification_suites import SUITES
from hinge_minimax.harness.verification_suites import run_suite
from hinge_minimax.logging.logging_setup import setup_logging

LOGGER = logging.getLogger(__name__)


def parse_assignments(assignments: List[str]) -> Dict[str, Any]:
    """
    :param assignments: Strings "a.b.c=value"; values are read as JSON when they parse
    :return: The nested dictionary they describe
    """
    nested: Dict[str, Any] = {}
    for assignment in assignments or []:
        if "=" not in assignment:
            raise ParameterError(f"Expected key=value, got '{assignment}'")
        key, text = assignment.split("=", 1)
        try:
            value = json.loads(text)
        except json.JSONDecodeError:
            value = text
        target = nested
        parts = key.strip().split(".")
        for part in parts[:-1]:
            target = target.setdefault(part, {})
        target[parts[-1]] = value
    return nested


def _number(params: Dict[str, Any], name: str, default: float = None) -> float:
    value = params.get(name, default)
    if value is None:
        raise ParameterError(f"Missing parameter '{name}'")
    return float(value)


def _oracle(params: Dict[str, Any]) -> Dict[str, Any]:
    base = OracleParams(n=int(_number(params, "n")), W=_number(params, "W"), M=_number(params, "M", 2.0),
                        Gamma=_number(params, "Gamma"), theta=_number(params, "theta"),
                        gamma=_number(params, "gamma", 0.0), J=_number(params, "J", 1.0),
                        H=_number(params, "H", 0.0), eps=_number(params, "eps", 1.0),
                        approx_term=_number(params, "approx_term", 0.0))
    by_eps = {str(eps): oracle_rhs(base.with_eps(eps)) for eps in eps_grid(base.theta)}
    return {"params": base.to_dict(), "rhs": oracle_rhs(base), "rhs_by_eps": by_eps,
            "min_rhs": min(by_eps.values())}


def _fano(params: Dict[str, Any]) -> Dict[str, Any]:
    raw = fano_lower_bound(_number(params, "v"), _number(params, "u"),
                           int(_number(params, "M")), int(_number(params, "n")))
    return {"fano_raw": raw, "fano": clamped(raw)}


def _lecam(params: Dict[str, Any]) -> Dict[str, Any]:
    return {"lecam": lecam_lower_bound(_number(params, "v"), _number(params, "affinity"))}


def _rate_exponent(params: Dict[str, Any]) -> Dict[str, Any]:
    return {"rate_exponent": rate_exponent(_number(params, "beta"), int(_number(params, "q")),
                                           int(_number(params, "d_lower")), _number(params, "s"))}


def _tail(params: Dict[str, Any]) -> Dict[str, Any]:
    bound, numeric = tail_integral_bound(_number(params, "A"), _number(params, "a"), _number(params, "b"))
    return {"bound": bound, "numeric": numeric}


def _schedule(params: Dict[str, Any]) -> Dict[str, Any]:
    budget = hyperparam_schedule(int(_number(params, "n")), _number(params, "beta"), int(_number(params, "q")),
                                 int(_number(params, "d_lower")), _number(params, "s"),
                                 _number(params, "a", 1.0), _number(params, "b", 2.0))
    return budget.to_dict()


def _xi(params: Dict[str, Any]) -> Dict[str, Any]:
    return {"xi": covering_radius(int(_number(params, "n")), _number(params, "beta"), int(_number(params, "q")),
                                  int(_number(params, "d_lower")), _number(params, "s"), _number(params, "tau"))}


BOUNDS: Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]] = {
    "oracle": _oracle,
    "fano": _fano,
    "lecam": _lecam,
    "rate-exponent": _rate_exponent,
    "tail": _tail,
    "schedule": _schedule,
    "xi": _xi,
}


def _json_ready(value):
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {key: _json_ready(item) for key, item in value.items()}
    return value


def command_run(args) -> int:
    """
    Runs a rate experiment and writes its reports.

    :return: 0 when the fitted slope matches theory, 1 otherwise
    """
    overrides = parse_assignments(args.set)
    if args.output_dir:
        overrides.setdefault("output", {})["dir"] = args.output_dir
    cfg = load_experiment_config(args.config, overrides)
    report = run_rate_experiment(cfg)
    written = emit_report(report, cfg.output_dir, cfg.formats)
    print(json.dumps({"experiment_id": cfg.experiment_id, "passed": report.passed,
                      "fit": None if report.fit is None else report.fit.to_dict(),
                      "theoretical_slope": report.theoretical_slope, "files": written}, indent=4))
    return 0 if report.passed else 1


def command_verify(args) -> int:
    """
    Runs verification suites and prints a pass/fail table.

    :return: 0 when every suite passes, 1 otherwise
    """
    names = list(SUITES) if not args.suites or "all" in args.suites else args.suites
    lines = []
    for name in names:
        report = run_suite(name, quick=args.quick, seed=args.seed)
        worst = min((row.slack for row in report.rows), default=math.nan)
        lines.append({"suite": name, "checks": len(report.rows), "worst_slack": worst,
                      "result": "pass" if report.passed else "FAIL"})
    table = pd.DataFrame(lines, columns=["suite", "checks", "worst_slack", "result"])
    print(table.to_string(index=False))
    return 0 if all(line["result"] == "pass" for line in lines) else 1


def command_bounds(args) -> int:
    """
    Evaluates one calculator and prints its result as JSON.
    """
    params = parse_assignments(args.param)
    print(json.dumps(_json_ready(BOUNDS[args.kind](params)), indent=4, sort_keys=True))
    return 0


def command_plot(args) -> int:
    """
    Re-renders the log-log plot of a results CSV.
    """
    folder, file_name = os.path.split(os.path.abspath(args.csv))
    stem = os.path.splitext(file_name)[0]
    try:
        frame = pd.read_csv(args.csv)
    except OSError as exception:
        raise HingeMinimaxError(f"Cannot read {args.csv}: {exception}") from exception
    exponent = args.exponent
    summary = read_json(folder, stem)
    if exponent is None and summary is not None:
        exponent = summary.get("theoretical_exponent")
    if exponent is None:
        raise ParameterError(f"No theoretical exponent given and no summary {stem}.json next to {args.csv}")
    tolerance = 0.12 if summary is None else float(summary.get("slope_tolerance", 0.12))
    rows = rows_from_frame(frame)
    estimator = rows[0].estimator if rows else "unknown"
    report = RateReport.from_rows(stem, estimator, rows, float(exponent), tolerance)
    path = args.output or os.path.join(folder, f"{stem}.png")
    write_plot(report, path)
    print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    """
    :return: The argument parser of all subcommands
    """
    parser = argparse.ArgumentParser(prog="hinge-minimax",
                                     description="Hinge-loss classification rate experiments and bound calculators")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run a rate experiment from a config file")
    run.add_argument("config", help="HOCON, JSON or YAML experiment config")
    run.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                     help="Override a config value, e.g. --set schedule.a=2")
    run.add_argument("--output-dir", default=None, help="Override output.dir")
    run.set_defaults(handler=command_run)

    verify = commands.add_parser("verify", help="Run numerical verification suites")
    verify.add_argument("suites", nargs="*", metavar="SUITE",
                        help=f"Any of {', '.join(SUITES)} or all (default)")
    verify.add_argument("--quick", action="store_true", help="Smaller sweeps")
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=command_verify)

    bounds = commands.add_parser("bounds", help="Evaluate one bound calculator")
    bounds.add_argument("kind", choices=list(BOUNDS))
    bounds.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    bounds.set_defaults(handler=command_bounds)

    plot = commands.add_parser("plot", help="Re-render the plot of a results CSV")
    plot.add_argument("csv")
    plot.add_argument("--exponent", type=float, default=None,
                      help="Theoretical rate exponent; default read from the JSON summary")
    plot.add_argument("--output", default=None, help="Image path; default next to the CSV")
    plot.set_defaults(handler=command_plot)
    return parser


def main(argv: List[str] = None) -> int:
    """
    :param argv: Arguments without the program name; default sys.argv[1:]
    :return: The process exit code
    """
    args = build_parser().parse_args(argv)
    setup_logging("hinge-minimax")
    try:
        return args.handler(args)
    except HingeMinimaxError as exception:
        LOGGER.error("%s", exception)
        return 2


if __name__ == "__main__":
    sys.exit(main())
