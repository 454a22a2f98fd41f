"""Runs the rule catalog through the checker and tallies outcomes.

A case is a soundness failure when every premise holds (or holds up to the
numeral bound) and the conclusion fails. Cases whose premises fail are
counted but do not say anything about the rule.
"""

from __future__ import annotations

import logging
import time
from typing import Iterable, List, Optional, Tuple

from ..interp.checker import Checker
from ..interp.models import CheckConfig
from ..syntax.printer import print_judgment
from ..zf.verdict import Fails, Holds, Unknown, Verdict, holds_or_bounded, verdict_label
from .catalog import catalog, lookup
from .fixtures import Gen
from .models import CaseOutcome, Instance, Report, RuleCase, RuleReport

logger = logging.getLogger(__name__)


def gen_instance(case: RuleCase, seed: int) -> Instance:
    """The instance of ``case`` for ``seed``; equal seeds give equal instances."""

    return case.generator(Gen(seed))


def classify(premises: List[Verdict], conclusion: Optional[Verdict]) -> str:
    """Outcome name for one case.

    ``conclusion`` is ``None`` when it was not checked because a premise
    failed.
    """

    if any(isinstance(v, Fails) for v in premises):
        return "premise_fails"
    assert conclusion is not None
    if all(holds_or_bounded(v) for v in premises):
        return verdict_label(conclusion)
    # Some premise is undecided: only a passing conclusion is informative.
    if isinstance(conclusion, Holds):
        return "holds"
    if isinstance(conclusion, Unknown) and conclusion.bounded:
        return "bounded"
    return "unknown"


def run_case(checker: Checker, case: RuleCase, seed: int) -> Tuple[str, Instance, Optional[Verdict]]:
    inst = gen_instance(case, seed)
    premises: List[Verdict] = []
    for premise in inst.premises:
        verdict = checker.check(premise)
        premises.append(verdict)
        if isinstance(verdict, Fails):
            logger.debug(
                "premise fails",
                extra={"rule": case.rule_name, "seed": seed, "premise": print_judgment(premise)},
            )
            return classify(premises, None), inst, None
    conclusion = checker.check(inst.conclusion)
    return classify(premises, conclusion), inst, conclusion


def check_rule(case: RuleCase, n_cases: int, cfg: Optional[CheckConfig] = None, seed: int = 0) -> RuleReport:
    """Check ``n_cases`` seeded instances of one rule."""

    checker = Checker(cfg)
    report = RuleReport(rule=case.rule_name, group=case.group)
    for i in range(n_cases):
        case_seed = seed + i
        outcome, inst, conclusion = run_case(checker, case, case_seed)
        report.record(outcome)
        report.seeds.append(case_seed)
        if outcome in ("holds", "bounded", "fails"):
            report.non_vacuous += 1
        if outcome == "fails":
            printed = print_judgment(inst.conclusion)
            logger.error(
                "soundness failure",
                extra={"rule": case.rule_name, "seed": case_seed, "conclusion": printed},
            )
            report.failures.append(
                CaseOutcome(seed=case_seed, outcome=outcome, conclusion=printed, verdict=str(conclusion))
            )
    return report


def select(labels: Optional[Iterable[str]] = None, include_controls: bool = False) -> List[RuleCase]:
    if labels:
        return [lookup(label) for label in labels]
    return catalog(include_controls)


def run_suite(
    cfg: Optional[CheckConfig] = None,
    cases: int = 20,
    seed: int = 0,
    labels: Optional[Iterable[str]] = None,
    include_controls: bool = False,
) -> Report:
    """Run every selected rule and collect the report."""

    started = time.perf_counter()
    rules = select(labels, include_controls)
    logger.info("running rule suite", extra={"rules": len(rules), "cases": cases, "seed": seed})
    report = Report(seed=seed, cases=cases)
    for case in rules:
        rule_report = check_rule(case, cases, cfg, seed)
        logger.debug(
            "rule done",
            extra={
                "rule": case.rule_name,
                "holds": rule_report.holds,
                "fails": rule_report.fails,
                "premise_fails": rule_report.premise_fails,
            },
        )
        report.rules.append(rule_report)
    report.elapsed = time.perf_counter() - started
    if report.vacuous_rules:
        logger.warning("vacuous rules", extra={"rules": report.vacuous_rules})
    if report.undecided_rules:
        logger.warning("undecided rules", extra={"rules": report.undecided_rules})
    return report
