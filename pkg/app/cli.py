"""Command-line front end: check ``.vml`` files, evaluate expressions, run the rule suite.

Exit status is 0 when everything holds, 1 when something fails, 2 when
only undecided verdicts remain and 3 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
from typing import Any, List, Optional, Sequence

from pydantic import BaseModel, Field, ValidationError

from .config import configure_logging, load_settings
from .errors import KernelError, PremiseFails, ScopeError, VmlSyntaxError
from .harness.runner import run_suite
from .interp.checker import check_source, evaluate, scope_judgment
from .interp.models import CheckConfig, JudgmentResult
from .syntax.parser import parse, parse_expr
from .zf.literals import print_vset

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILS, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3

TOO_DEEP = "expression nests too deeply to interpret"


class CliConfig(BaseModel):
    """Validated command-line options."""

    command: str = Field(..., pattern="^(check|eval|suite)$")
    inputs: List[str] = Field(default_factory=list, description="Paths, or an expression for eval")
    fuel: int = Field(10000, gt=0)
    nat_bound: int = Field(16, gt=0)
    seed: int = Field(0, ge=0)
    cases: int = Field(20, gt=0, description="Instances per rule in the suite")
    rules: List[str] = Field(default_factory=list, description="Restrict the suite to these labels")
    controls: bool = Field(False, description="Include the deliberately unsound control rule")
    json_output: bool = False
    trace: bool = False

    def check_config(self) -> CheckConfig:
        return CheckConfig(fuel=self.fuel, nat_bound=self.nat_bound, trace=self.trace)


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def status_of(outcomes: Sequence[str]) -> int:
    """Exit status for a list of outcome names."""

    if "fails" in outcomes:
        return EXIT_FAILS
    if "unknown" in outcomes:
        return EXIT_UNKNOWN
    return EXIT_OK


# ----- check -----


def _check_file(path: str, cfg: CheckConfig) -> List[JudgmentResult]:
    with open(path, encoding="utf-8") as handle:
        src = parse(handle.read())
    for item in src.judgments:
        try:
            scope_judgment(item.judgment)
        except ScopeError as exc:
            raise VmlSyntaxError(str(exc), item.line, 1) from exc
    return check_source(src, cfg)


def cmd_check(config: CliConfig) -> int:
    cfg = config.check_config()
    reports = []
    outcomes: List[str] = []
    for path in config.inputs:
        try:
            results = _check_file(path, cfg)
        except OSError as exc:
            print(f"{path}: {exc.strerror}")
            return EXIT_INPUT
        except VmlSyntaxError as exc:
            print(f"{path}:{exc}")
            return EXIT_INPUT
        except RecursionError:
            print(f"{path}: {TOO_DEEP}")
            return EXIT_INPUT
        outcomes.extend(r.outcome for r in results)
        reports.append({"file": path, "results": [r.model_dump() for r in results]})
        if not config.json_output:
            for r in results:
                print(f"{path}:{r.line}: {r.verdict}  {r.judgment}")
    status = status_of(outcomes)
    if config.json_output:
        _emit({"status": status, "files": reports})
    return status


# ----- eval -----


def cmd_eval(config: CliConfig) -> int:
    (source,) = config.inputs
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as handle:
            source = handle.read()
    try:
        printed = print_vset(evaluate(parse_expr(source), config.check_config()))
    except (VmlSyntaxError, ScopeError) as exc:
        print(f"error: {exc}")
        return EXIT_INPUT
    except RecursionError:
        print(f"error: {TOO_DEEP}")
        return EXIT_INPUT
    except PremiseFails as exc:
        print(f"fails: {exc}")
        return EXIT_FAILS
    except KernelError as exc:
        print(f"unknown: {exc}")
        return EXIT_UNKNOWN
    if config.json_output:
        _emit({"value": printed})
    else:
        print(printed)
    return EXIT_OK


# ----- suite -----


def cmd_suite(config: CliConfig) -> int:
    try:
        report = run_suite(
            config.check_config(),
            cases=config.cases,
            seed=config.seed,
            labels=config.rules or None,
            include_controls=config.controls,
        )
    except KeyError as exc:
        print(f"error: {exc.args[0]}")
        return EXIT_INPUT
    if config.json_output:
        _emit(report.summary())
    else:
        for r in report.rules:
            mark = "FAIL" if r.fails else ("VACUOUS" if r.vacuous else ("UNDECIDED" if r.undecided else "ok"))
            print(
                f"{mark:8} {r.rule:16} holds={r.holds} bounded={r.bounded} fails={r.fails} "
                f"unknown={r.unknown} premise_fails={r.premise_fails}"
            )
            for failure in r.failures:
                print(f"         seed {failure.seed}: {failure.conclusion}: {failure.verdict}")
        print(
            f"{len(report.rules)} rules, {report.soundness_failures} soundness failures, "
            f"{len(report.vacuous_rules)} vacuous, {len(report.undecided_rules)} undecided, {report.elapsed:.1f}s"
        )
    return EXIT_OK if report.ok else EXIT_FAILS


COMMANDS = {"check": cmd_check, "eval": cmd_eval, "suite": cmd_suite}


def build_parser() -> argparse.ArgumentParser:
    settings = load_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=settings.fuel, help="recursion steps per verdict")
    common.add_argument(
        "--nat-bound", type=int, default=settings.nat_bound, help="numerals probed in infinite contexts"
    )
    common.add_argument("--seed", type=int, default=settings.seed, help="base seed for rule instances")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trace", action="store_true", help="log every pointwise verdict")

    parser = argparse.ArgumentParser(prog="setoid-kernel", description="Setoid model kernel")
    sub = parser.add_subparsers(dest="command", required=True)
    check = sub.add_parser("check", parents=[common], help="check the judgments of .vml files")
    check.add_argument("paths", nargs="+")
    ev = sub.add_parser("eval", parents=[common], help="print the set value of a closed expression")
    ev.add_argument("expr", help="an expression, or a file holding one")
    suite = sub.add_parser("suite", parents=[common], help="run the rule soundness suite")
    suite.add_argument("--cases", type=int, default=settings.cases, help="instances per rule")
    suite.add_argument("--rule", action="append", default=[], help="only this rule (repeatable)")
    suite.add_argument("--control", action="store_true", help="include the unsound control rule")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(load_settings().log_level, args.trace)
    inputs = args.paths if args.command == "check" else ([args.expr] if args.command == "eval" else [])
    try:
        config = CliConfig(
            command=args.command,
            inputs=inputs,
            fuel=args.fuel,
            nat_bound=args.nat_bound,
            seed=args.seed,
            cases=getattr(args, "cases", 20),
            rules=getattr(args, "rule", []),
            controls=getattr(args, "control", False),
            json_output=args.json,
            trace=args.trace,
        )
    except ValidationError as exc:
        print(f"invalid options: {exc.errors()[0]['loc'][0]}: {exc.errors()[0]['msg']}")
        return EXIT_INPUT
    logger.debug("running command", extra={"command": config.command})
    return COMMANDS[config.command](config)


if __name__ == "__main__":
    raise SystemExit(main())
