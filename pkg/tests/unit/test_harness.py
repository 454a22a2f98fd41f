import pytest

from app.harness.catalog import CATALOG, CONTROLS, EXPECTED_LABELS, catalog, lookup, rule
from app.harness.fixtures import Gen
from app.harness.models import Report, RuleReport
from app.harness.runner import check_rule, classify, gen_instance, run_suite, select
from app.interp.models import CheckConfig
from app.syntax.parser import parse
from app.syntax.printer import print_judgment
from app.zf.equality import clear_caches
from app.zf.verdict import HOLDS, Fails, Unknown

UNDECIDED = Unknown(10, 4)
BOUNDED = Unknown(10, 4, bounded=True, points=4)

SMALL_CFG = CheckConfig(fuel=4000, nat_bound=6)


# ----- catalog -----


def test_catalog_covers_every_label_once():
    assert len(EXPECTED_LABELS) == 155
    assert len(set(EXPECTED_LABELS)) == len(EXPECTED_LABELS)
    assert [c.rule_name for c in catalog()] == list(EXPECTED_LABELS)


def test_controls_are_opt_in():
    names = [c.rule_name for c in catalog(include_controls=True)]
    assert names[-1] == "control-unsound"
    assert "control-unsound" not in CATALOG
    assert lookup("control-unsound") is CONTROLS["control-unsound"]


def test_duplicate_labels_are_refused():
    with pytest.raises(ValueError, match="duplicate"):
        rule("Pi-f", "pi")(lambda g: None)


def test_lookup_unknown_label():
    with pytest.raises(KeyError):
        lookup("Pi-nonsense")


def test_select():
    assert [c.rule_name for c in select(["Sum-c1", "ID-e"])] == ["Sum-c1", "ID-e"]
    assert len(select()) == 155


@pytest.mark.parametrize("label", ["Pi-beta-gen", "Sigma-c-1", "Sum-e", "Br-e-sub"])
def test_instances_are_a_function_of_the_seed(label):
    case = lookup(label)
    assert gen_instance(case, 7) == gen_instance(case, 7)


def test_gen_is_seeded():
    a, b = Gen(3), Gen(3)
    assert [a.numeral() for _ in range(5)] == [b.numeral() for _ in range(5)]


# ----- classification -----


@pytest.mark.parametrize(
    "premises, conclusion, expected",
    [
        ([HOLDS, HOLDS], HOLDS, "holds"),
        ([HOLDS, BOUNDED], HOLDS, "holds"),
        ([HOLDS], Fails("x"), "fails"),
        ([BOUNDED], Fails("x"), "fails"),
        ([HOLDS], BOUNDED, "bounded"),
        ([HOLDS], UNDECIDED, "unknown"),
        ([HOLDS, Fails("p")], None, "premise_fails"),
        ([UNDECIDED], Fails("x"), "unknown"),
        ([UNDECIDED], HOLDS, "holds"),
        ([UNDECIDED], BOUNDED, "bounded"),
    ],
)
def test_classify(premises, conclusion, expected):
    assert classify(premises, conclusion) == expected


# ----- running rules -----


def test_negative_control_is_caught():
    report = check_rule(lookup("control-unsound"), 3, SMALL_CFG)
    assert report.fails == 3
    assert report.seeds == [0, 1, 2]
    assert len(report.failures) == 3
    assert report.failures[0].conclusion.startswith("(judg ty-eq")


@pytest.mark.parametrize("label", ["ID-e", "Sum-c1", "Nat-c-s", "Br-beta", "Pi-beta-gen", "Sigma-c-1"])
def test_selected_rules_are_sound(label):
    report = check_rule(lookup(label), 4)
    assert report.fails == 0
    assert report.non_vacuous > 0
    assert report.total == 4


def test_run_suite_report():
    report = run_suite(SMALL_CFG, cases=2, seed=5, labels=["Nat-c-0", "control-unsound"])
    summary = report.summary()
    assert summary["seed"] == 5 and summary["cases"] == 2
    assert [r["rule"] for r in summary["rules"]] == ["Nat-c-0", "control-unsound"]
    assert summary["rules"][0]["seeds"] == [5, 6]
    assert report.soundness_failures == 2
    assert not report.ok


def test_report_flags_vacuous_rules():
    vacuous = RuleReport(rule="N0-e", premise_fails=3)
    undecided = RuleReport(rule="Pi-e", unknown=2, premise_fails=1)
    fine = RuleReport(rule="Nat-f", holds=3, non_vacuous=3)
    report = Report(rules=[vacuous, undecided, fine])
    assert report.vacuous_rules == ["N0-e"]
    assert report.undecided_rules == ["Pi-e"]
    assert not report.ok
    assert vacuous.total == 3
    assert Report(rules=[undecided, fine]).ok


def test_instances_print_and_parse_back():
    mismatches = []
    for case in catalog(include_controls=True):
        for seed in range(3):
            inst = gen_instance(case, seed)
            for j in inst.premises + (inst.conclusion,):
                text = print_judgment(j)
                [item] = parse(text).judgments
                if item.judgment != j:
                    mismatches.append((case.rule_name, seed, text))
    assert mismatches == []


@pytest.mark.slow
def test_doubling_the_fuel_keeps_the_counts():
    labels = list(EXPECTED_LABELS)
    clear_caches()
    base = run_suite(CheckConfig(fuel=10000), cases=5, labels=labels)
    clear_caches()
    doubled = run_suite(CheckConfig(fuel=20000), cases=5, labels=labels)
    assert [(r.rule, r.holds, r.fails) for r in base.rules] == [
        (r.rule, r.holds, r.fails) for r in doubled.rules
    ]
    assert base.soundness_failures == 0


def test_record_counts_outcomes():
    r = RuleReport(rule="Sum")
    for outcome in ("holds", "bounded", "premise_fails", "holds"):
        r.record(outcome)
    assert (r.holds, r.bounded, r.premise_fails, r.total) == (2, 1, 1, 4)
