"""Bisimulation equality checked against a brute-force extensional oracle."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.zf.constructions import pair_v
from app.zf.equality import (
    cache_size,
    clear_caches,
    eq_v,
    is_hereditarily_tabled,
    mem_v,
    subset_v,
    witness,
)
from app.zf.keys import Atom, Numeral
from app.zf.literals import parse_vset
from app.zf.verdict import Budget, Fails, Holds, Unknown
from app.zf.vset import from_children, natv, numeral


def build(tree):
    return from_children([build(t) for t in tree])


def canon(tree):
    """Extensional collapse: equal sets have equal frozensets."""

    return frozenset(canon(t) for t in tree)


def trees(height, width=3):
    if height == 0:
        return [()]
    smaller = trees(height - 1, width)
    out = []
    for n in range(width + 1):
        out.extend(itertools.product(smaller, repeat=n))
    return out


HEIGHT_TWO = trees(2)


def first_of_each_class(presentations):
    seen = {}
    for t in presentations:
        seen.setdefault(canon(t), t)
    return list(seen.values())


# one presentation per class of height two, plus a duplicated and a reordered one
CHILD_POOL = first_of_each_class(HEIGHT_TWO) + [((), ()), (((),), ())]
HEIGHT_THREE = [c for n in range(4) for c in itertools.product(CHILD_POOL, repeat=n)]

hf_trees = st.recursive(
    st.just(()), lambda kids: st.lists(kids, max_size=3).map(tuple), max_leaves=12
)
pool = st.sampled_from(HEIGHT_TWO)


def test_enumeration_size():
    assert len(HEIGHT_TWO) == 85


def test_eq_v_agrees_with_oracle_exhaustively():
    built = [(canon(t), build(t)) for t in HEIGHT_TWO]
    disagreements = []
    for (cx, x), (cy, y) in itertools.product(built, built):
        verdict = eq_v(x, y)
        assert not isinstance(verdict, Unknown)
        if isinstance(verdict, Holds) != (cx == cy):
            disagreements.append((cx, cy))
    assert disagreements == []


def test_height_three_enumeration():
    assert len(CHILD_POOL) == 6
    assert len(HEIGHT_THREE) == 259
    assert len({canon(t) for t in HEIGHT_THREE}) == 15


def test_height_three_equality_is_the_oracle_partition():
    built = [(canon(t), build(t)) for t in HEIGHT_THREE]
    classes = {}
    for i, (cx, x) in enumerate(built):
        for j, (cy, y) in enumerate(built):
            verdict = eq_v(x, y)
            assert isinstance(verdict, (Holds, Fails))
            assert isinstance(verdict, Holds) == (cx == cy)
            assert type(eq_v(y, x)) is type(verdict)
            if isinstance(verdict, Holds):
                classes.setdefault(i, set()).add(j)
    # each class is the same set seen from every member: an equivalence
    for i, members in classes.items():
        assert i in members
        assert all(classes[j] == members for j in members)
    assert len({frozenset(m) for m in classes.values()}) == 15


def test_height_three_membership_is_extensional():
    containers = first_of_each_class(HEIGHT_THREE)
    containers += [(c,) for c in containers] + [tuple(reversed(c)) for c in containers if len(c) > 1]
    built_containers = [(canon(z), build(z)) for z in containers]
    for x in HEIGHT_THREE:
        cx, vx = canon(x), build(x)
        for cz, vz in built_containers:
            verdict = mem_v(vx, vz)
            assert isinstance(verdict, (Holds, Fails))
            assert isinstance(verdict, Holds) == (cx in cz)
            assert isinstance(mem_v(vz, vx), Holds) == (cz in cx)


@settings(max_examples=200)
@given(hf_trees, hf_trees)
def test_eq_v_agrees_with_oracle(x, y):
    verdict = eq_v(build(x), build(y))
    assert isinstance(verdict, Holds) == (canon(x) == canon(y))


@given(hf_trees, hf_trees)
def test_equality_is_reflexive_and_symmetric(x, y):
    vx, vy = build(x), build(y)
    assert isinstance(eq_v(vx, build(x)), Holds)
    assert type(eq_v(vx, vy)) is type(eq_v(vy, vx))


@settings(max_examples=300)
@given(pool, pool, pool)
def test_equality_is_transitive(x, y, z):
    vx, vy, vz = build(x), build(y), build(z)
    if isinstance(eq_v(vx, vy), Holds) and isinstance(eq_v(vy, vz), Holds):
        assert isinstance(eq_v(vx, vz), Holds)


@settings(max_examples=300)
@given(pool, pool, hf_trees)
def test_membership_respects_equality(x, y, z):
    vx, vy, vz = build(x), build(y), build(z)
    inside = mem_v(vx, vz)
    assert isinstance(inside, Holds) == (canon(x) in canon(z))
    if isinstance(eq_v(vx, vy), Holds) and isinstance(inside, Holds):
        assert isinstance(mem_v(vy, vz), Holds)


def test_membership_witness_is_least_key():
    alpha = parse_vset("{ num 1, num 0, num 1 }")
    assert mem_v(numeral(1), alpha).witness == Atom(0)
    assert witness(mem_v(numeral(0), alpha)) == Atom(1)
    assert witness(mem_v(numeral(2), alpha)) is None


def test_numerals_are_distinct_up_to_32():
    for m, n in itertools.product(range(33), range(33)):
        verdict = eq_v(numeral(m), numeral(n))
        assert isinstance(verdict, Holds) == (m == n)


@pytest.mark.parametrize("n", [0, 1, 7, 32])
def test_numerals_are_members_of_natv(n):
    verdict = mem_v(numeral(n), natv())
    assert verdict == Holds((Numeral(n),))


def test_non_numerals_are_not_in_natv():
    assert isinstance(mem_v(pair_v(numeral(0), numeral(1)), natv()), Fails)
    assert isinstance(mem_v(natv(), natv()), Fails)


def test_natv_against_finite_sets():
    assert isinstance(eq_v(natv(), natv()), Holds)
    assert isinstance(eq_v(natv(), numeral(3)), Fails)


def test_rank_refutes_membership():
    verdict = mem_v(numeral(3), numeral(2))
    assert isinstance(verdict, Fails)
    assert "rank" in verdict.counterexample


def test_fuel_exhaustion_is_unknown_and_not_cached():
    clear_caches()
    x = parse_vset("{ { num 0, num 1 } }")
    y = parse_vset("{ { num 1, num 0 } }")
    starved = eq_v(x, y, Budget(fuel=1))
    assert isinstance(starved, Unknown)
    assert not starved.bounded
    assert str(starved) == "unknown(fuel=1, nat_bound=16)"
    assert cache_size() == 0
    assert isinstance(eq_v(x, y), Holds)
    assert cache_size() > 0


@given(hf_trees, hf_trees)
def test_more_fuel_never_changes_a_definitive_verdict(x, y):
    clear_caches()
    vx, vy = build(x), build(y)
    small = eq_v(vx, vy, Budget(fuel=3))
    clear_caches()
    large = eq_v(vx, vy, Budget(fuel=6))
    if small.definitive:
        assert type(large) is type(small)


def test_subset():
    small, big = parse_vset("{ num 0 }"), parse_vset("{ num 0, num 1 }")
    assert isinstance(subset_v(small, big), Holds)
    assert isinstance(subset_v(big, small), Fails)


def test_hereditarily_tabled():
    assert is_hereditarily_tabled(parse_vset("{ num 2, pairv(empty, num 1) }"))
    assert not is_hereditarily_tabled(natv())
    assert not is_hereditarily_tabled(from_children([natv()]))
