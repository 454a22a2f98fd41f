import pytest

from app.zf.keys import Atom
from app.zf.verdict import (
    HOLDS,
    Budget,
    Fails,
    Holds,
    Unknown,
    bounded_pass,
    conj,
    exists,
    forall,
    holds_or_bounded,
    implies,
    verdict_label,
)


@pytest.fixture()
def budget():
    return Budget(fuel=100, nat_bound=4)


@pytest.mark.parametrize(
    "verdict, printed, label",
    [
        (Holds(), "holds", "holds"),
        (Fails("x"), "fails: x", "fails"),
        (Fails(), "fails", "fails"),
        (Unknown(100, 4), "unknown(fuel=100, nat_bound=4)", "unknown"),
        (Unknown(100, 4, bounded=True, points=4), "holds-bounded(4)", "bounded"),
    ],
)
def test_printing_and_labels(verdict, printed, label):
    assert str(verdict) == printed
    assert verdict_label(verdict) == label


def test_witness_is_first():
    assert Holds((Atom(2), Atom(5))).witness == Atom(2)
    assert HOLDS.witness is None


def test_budget_spend():
    b = Budget(fuel=2)
    assert b.spend() and b.spend()
    assert not b.spend()
    assert b.exhausted and b.spent == 2


def test_conj_prefers_failure_then_unknown(budget):
    assert conj([HOLDS, HOLDS], budget) == HOLDS
    assert conj([HOLDS, Fails("a"), budget.unknown("u")], budget) == Fails("a")
    mixed = conj([bounded_pass(budget, 3), budget.unknown("u")], budget)
    assert isinstance(mixed, Unknown) and not mixed.bounded and mixed.reason == "u"
    both = conj([bounded_pass(budget, 3), bounded_pass(budget, 5)], budget)
    assert both.bounded and both.points == 5


def test_forall_stops_at_first_failure(budget):
    seen = []

    def checks():
        for v in (HOLDS, Fails("stop"), HOLDS):
            seen.append(v)
            yield v

    assert forall(checks(), budget) == Fails("stop")
    assert len(seen) == 2


def test_forall_over_a_prefix_is_bounded(budget):
    verdict = forall([HOLDS] * 4, budget, complete=False)
    assert holds_or_bounded(verdict)
    assert str(verdict) == "holds-bounded(4)"


def test_exists(budget):
    assert exists([Fails(), Holds((Atom(1),))], budget).witness == Atom(1)
    assert isinstance(exists([Fails(), Fails()], budget), Fails)
    assert isinstance(exists([Fails()], budget, complete=False), Unknown)
    assert isinstance(exists([budget.unknown(), Fails()], budget), Unknown)


def test_implies():
    assert implies(Fails(), lambda: Fails("never")) == HOLDS
    assert implies(HOLDS, lambda: Fails("c")) == Fails("c")
    undecided = Unknown(1, 1)
    assert implies(undecided, lambda: HOLDS) == HOLDS
    assert implies(undecided, lambda: Fails("c")) is undecided
