"""End-to-end runs of the command line against the .vml fixtures."""

import json
from pathlib import Path

import pytest

from app.cli import EXIT_FAILS, EXIT_INPUT, EXIT_OK, EXIT_UNKNOWN, TOO_DEEP, main, status_of
from app.zf.equality import clear_caches

pytestmark = pytest.mark.integration

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures" / "vml"


def fixture(name):
    return str(FIXTURES / name)


def run_json(capsys, *argv):
    status = main(list(argv) + ["--json"])
    return status, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "name, status",
    [
        ("nat_type.vml", EXIT_OK),
        ("numerals.vml", EXIT_OK),
        ("bool_negation.vml", EXIT_OK),
        ("sigma_projection.vml", EXIT_OK),
        ("rec_double.vml", EXIT_OK),
        ("unit_squash.vml", EXIT_OK),
        ("contexts_equal.vml", EXIT_OK),
        ("universe_small.vml", EXIT_OK),
        ("substitution.vml", EXIT_OK),
        ("bracket_elim.vml", EXIT_OK),
        ("sum_case.vml", EXIT_OK),
        ("nat_context.vml", EXIT_OK),
        ("comments.vml", EXIT_OK),
        ("nat_not_empty.vml", EXIT_FAILS),
        ("wrong_member.vml", EXIT_FAILS),
        ("universe_not_self.vml", EXIT_FAILS),
        ("not_identity.vml", EXIT_FAILS),
        ("mixed.vml", EXIT_FAILS),
        ("premise_fails.vml", EXIT_FAILS),
        ("universes_differ.vml", EXIT_UNKNOWN),
        ("unbalanced.vml", EXIT_INPUT),
        ("unknown_form.vml", EXIT_INPUT),
        ("bad_scope.vml", EXIT_INPUT),
        ("bad_arity.vml", EXIT_INPUT),
    ],
)
def test_check_exit_status(name, status, capsys):
    assert main(["check", fixture(name)]) == status
    capsys.readouterr()


def test_check_prints_one_line_per_judgment(capsys):
    path = fixture("mixed.vml")
    assert main(["check", path]) == EXIT_FAILS
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == f"{path}:1: holds  (judg ty (ctx) nat)"
    assert lines[1].startswith(f"{path}:2: fails")
    assert lines[2] == f"{path}:3: holds  (judg elt (ctx) zero nat)"


def test_check_json_report(capsys):
    status, report = run_json(capsys, "check", fixture("nat_context.vml"), fixture("bool_negation.vml"))
    assert status == EXIT_OK
    assert report["status"] == EXIT_OK
    assert [f["file"] for f in report["files"]] == [fixture("nat_context.vml"), fixture("bool_negation.vml")]
    nat = report["files"][0]["results"]
    assert [r["outcome"] for r in nat] == ["holds", "bounded"]
    assert nat[1]["line"] == 3
    assert nat[1]["verdict"].startswith("holds-bounded")
    negation = report["files"][1]["results"]
    assert negation[2]["judgment"] == "(judg elt-eq (ctx) (app bool bool not true) false bool)"
    assert set(negation[0]) == {"line", "judgment", "outcome", "verdict"}


def test_check_json_undecided(capsys):
    status, report = run_json(capsys, "check", fixture("universes_differ.vml"))
    assert status == EXIT_UNKNOWN
    [result] = report["files"][0]["results"]
    assert result["outcome"] == "unknown"
    assert result["verdict"].startswith("unknown(fuel=")


def test_worst_status_wins_across_files(capsys):
    assert main(["check", fixture("universes_differ.vml"), fixture("nat_not_empty.vml")]) == EXIT_FAILS
    capsys.readouterr()


def test_syntax_errors_carry_positions(capsys):
    path = fixture("unknown_form.vml")
    assert main(["check", path]) == EXIT_INPUT
    out = capsys.readouterr().out
    assert out.startswith(f"{path}:1:")
    assert "unknown form 'frob'" in out


def test_scope_errors_report_their_line(capsys):
    path = fixture("bad_scope.vml")
    assert main(["check", path]) == EXIT_INPUT
    assert capsys.readouterr().out.startswith(f"{path}:2:")


def test_missing_file(capsys, tmp_path):
    assert main(["check", str(tmp_path / "absent.vml")]) == EXIT_INPUT
    assert "absent.vml" in capsys.readouterr().out


def test_invalid_budget_is_an_input_error(capsys):
    assert main(["check", fixture("nat_type.vml"), "--fuel", "0"]) == EXIT_INPUT
    assert capsys.readouterr().out.startswith("invalid options: fuel")


def test_check_from_a_temporary_file(tmp_path, capsys):
    path = tmp_path / "pairs.vml"
    path.write_text("(judg elt-eq (ctx) (pr1 (pr zero zero)) zero nat)\n", encoding="utf-8")
    status, report = run_json(capsys, "check", str(path))
    assert status == EXIT_OK
    assert report["files"][0]["results"][0]["outcome"] == "holds"


# ----- eval -----


@pytest.mark.parametrize(
    "expr, printed",
    [
        ("zero", "empty"),
        ("(succ (succ zero))", "{ { empty } }"),
        ("(id nat zero (succ zero))", "empty"),
        ("(u 0)", "univ 0"),
    ],
)
def test_eval_prints_the_value(expr, printed, capsys):
    assert main(["eval", expr]) == EXIT_OK
    assert capsys.readouterr().out.strip() == printed


def test_eval_reads_a_file(capsys):
    status, body = run_json(capsys, "eval", fixture("eval_double.vml"))
    assert status == EXIT_OK
    assert body == {"value": "{ { { { empty } } } }"}


@pytest.mark.parametrize(
    "expr, status, prefix",
    [
        ("(r0 nat zero)", EXIT_FAILS, "fails:"),
        ("(frob)", EXIT_INPUT, "error:"),
        ("var", EXIT_INPUT, "error:"),
        ("(pi nat nat)", EXIT_UNKNOWN, "unknown:"),
    ],
)
def test_eval_errors(expr, status, prefix, capsys):
    assert main(["eval", expr]) == status
    assert capsys.readouterr().out.startswith(prefix)


def nested_succ(depth, inner="zero"):
    return "(succ " * depth + inner + ")" * depth


def test_eval_of_a_deep_numeral(capsys):
    assert main(["eval", nested_succ(100)]) == EXIT_OK
    assert capsys.readouterr().out.startswith("{ " * 100 + "empty")


def test_eval_rejects_nesting_past_the_reader_limit(capsys):
    assert main(["eval", nested_succ(600)]) == EXIT_INPUT
    assert "forms nest deeper than 128 levels" in capsys.readouterr().out


def test_definitions_too_deep_to_interpret_are_input_errors(capsys, tmp_path):
    lines = ["(def d0 zero)"]
    lines += [f"(def d{i} {nested_succ(100, f'd{i - 1}')})" for i in range(1, 31)]
    assert main(["eval", "\n".join(lines + ["d30"])]) == EXIT_INPUT
    assert capsys.readouterr().out == f"error: {TOO_DEEP}\n"
    path = tmp_path / "deep.vml"
    path.write_text("\n".join(lines + ["(judg elt (ctx) d30 nat)"]), encoding="utf-8")
    assert main(["check", str(path)]) == EXIT_INPUT
    assert capsys.readouterr().out == f"{path}: {TOO_DEEP}\n"


# ----- suite -----


def test_suite_for_selected_rules(capsys):
    status, summary = run_json(capsys, "suite", "--rule", "Nat-c-0", "--rule", "Sum-c1", "--cases", "4")
    assert status == EXIT_OK
    assert summary["ok"] is True
    assert [r["rule"] for r in summary["rules"]] == ["Nat-c-0", "Sum-c1"]
    assert all(r["fails"] == 0 for r in summary["rules"])


def test_suite_reports_the_control(capsys):
    status, summary = run_json(capsys, "suite", "--rule", "control-unsound", "--cases", "2", "--seed", "3")
    assert status == EXIT_FAILS
    assert summary["soundness_failures"] == 2
    assert summary["rules"][0]["seeds"] == [3, 4]


def test_suite_text_output(capsys):
    assert main(["suite", "--rule", "Nat-f", "--cases", "1"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("ok")
    assert out[-1].startswith("1 rules, 0 soundness failures, 0 vacuous")


def test_suite_unknown_rule(capsys):
    assert main(["suite", "--rule", "Pi-nonsense"]) == EXIT_INPUT
    assert capsys.readouterr().out.startswith("error:")


def test_suite_on_one_unit_of_fuel_is_undecided_but_sound(capsys):
    clear_caches()
    labels = ["Pi-beta-gen", "Sigma-c-1", "Sum-c1", "Nat-c-s", "ID-e"]
    argv = ["suite", "--fuel", "1", "--cases", "3"]
    for label in labels:
        argv += ["--rule", label]
    status, summary = run_json(capsys, *argv)
    assert summary["soundness_failures"] == 0
    assert summary["vacuous_rules"] == []
    assert status == EXIT_OK
    assert sum(r["unknown"] for r in summary["rules"]) > 0


@pytest.mark.slow
def test_full_suite_catches_only_the_control(capsys):
    status, summary = run_json(capsys, "suite", "--control", "--cases", "20")
    assert status == EXIT_FAILS
    failing = [r["rule"] for r in summary["rules"] if r["fails"]]
    assert failing == ["control-unsound"]
    assert summary["vacuous_rules"] == []
    assert summary["undecided_rules"] == []
    assert all(r["seeds"] == list(range(20)) for r in summary["rules"])
    assert len(summary["rules"]) == 156


@pytest.mark.parametrize(
    "outcomes, status",
    [
        ([], EXIT_OK),
        (["holds", "bounded"], EXIT_OK),
        (["holds", "unknown"], EXIT_UNKNOWN),
        (["unknown", "fails", "holds"], EXIT_FAILS),
    ],
)
def test_status_of(outcomes, status):
    assert status_of(outcomes) == status
