import itertools

import pytest

from app.errors import InfiniteUnsupported, NotAPair, UndecidedEquality
from app.zf.constructions import (
    VFamily,
    constant_family,
    id_v,
    inl_v,
    inr_v,
    numeral_of,
    pair_v,
    pi_v,
    sigma_v,
    sq_v,
    sum_v,
    table_family,
    unpair_v,
)
from app.zf.equality import clear_caches, eq_v, mem_v
from app.zf.keys import Atom, FunTable, Inl, Inr, KPair, Numeral
from app.zf.literals import parse_vset, print_vset
from app.zf.verdict import Budget, Holds
from app.zf.vset import EMPTY, Fin, from_children, natv, numeral

BOOL = from_children([numeral(0), numeral(1)])
TWINS = from_children([EMPTY, EMPTY])


def build(tree):
    return from_children([build(t) for t in tree])


def canon(tree):
    return frozenset(canon(t) for t in tree)


def small_trees():
    leaves = [()]
    level_one = [t for n in range(3) for t in itertools.product(leaves, repeat=n)]
    return [t for n in range(3) for t in itertools.product(level_one, repeat=n)]


def equal(x, y):
    return isinstance(eq_v(x, y), Holds)


# ----- pairs and numerals -----


def test_pairs_are_equal_exactly_componentwise():
    pool = [(canon(t), build(t)) for t in small_trees()]
    for (ca, a), (cb, b), (cc, c), (cd, d) in itertools.product(pool, repeat=4):
        same = equal(pair_v(a, b), pair_v(c, d))
        assert same == (ca == cc and cb == cd)


@pytest.mark.parametrize("left, right", [("num 0", "num 1"), ("num 2", "num 2"), ("{ num 1 }", "empty")])
def test_unpair_recovers_components(left, right):
    a, b = parse_vset(left), parse_vset(right)
    first, second = unpair_v(pair_v(a, b))
    assert equal(first, a) and equal(second, b)


@pytest.mark.parametrize(
    "literal",
    [
        "empty",
        "{ num 0, num 1, num 2 }",
        "natv",
        "{ natv }",
        "{ { num 0 }, { num 1, num 2 } }",
        "{ { num 1 }, { num 2 } }",
    ],
)
def test_unpair_rejects_non_pairs(literal):
    with pytest.raises(NotAPair):
        unpair_v(parse_vset(literal))


def test_unpair_needs_decided_components():
    clear_caches()
    with pytest.raises(UndecidedEquality):
        unpair_v(pair_v(numeral(3), numeral(5)), Budget(fuel=1))


def test_numeral_of():
    assert numeral_of(numeral(5)) == 5
    assert numeral_of(parse_vset("{ { empty } }")) == 2
    assert numeral_of(pair_v(numeral(0), numeral(1))) is None
    assert numeral_of(natv()) is None


# ----- sigma and pi -----


def test_sigma_children_are_pairs():
    fam = table_family(BOOL, {Atom(0): from_children([numeral(3)]), Atom(1): EMPTY})
    s = sigma_v(BOOL, fam)
    assert s.space.keys() == (KPair(Atom(0), Atom(0)),)
    assert equal(s.elem(KPair(Atom(0), Atom(0))), pair_v(numeral(0), numeral(3)))


def test_sigma_over_natv_needs_a_rule():
    with pytest.raises(InfiniteUnsupported):
        sigma_v(natv(), VFamily(natv(), {}))
    lazy = sigma_v(natv(), constant_family(natv(), BOOL))
    child = lazy.elem(KPair(Numeral(4), Atom(1)))
    assert equal(child, pair_v(numeral(4), numeral(1)))


def test_pi_counts_extensional_functions():
    assert len(pi_v(BOOL, constant_family(BOOL, BOOL)).space.keys()) == 4
    assert len(pi_v(TWINS, constant_family(TWINS, BOOL)).space.keys()) == 2


def test_pi_keys_are_function_tables_with_graph_children():
    space = pi_v(BOOL, constant_family(BOOL, BOOL))
    swap = FunTable(((Atom(0), Atom(1)), (Atom(1), Atom(0))))
    graph = space.elem(swap)
    assert mem_v(pair_v(numeral(0), numeral(1)), graph).witness == Atom(0)
    assert mem_v(pair_v(numeral(1), numeral(0)), graph).witness == Atom(1)


def test_pi_over_the_empty_set_has_one_member():
    assert print_vset(pi_v(EMPTY, constant_family(EMPTY, EMPTY))) == "{ empty }"


def test_pi_refuses_infinite_bases_and_fibers():
    with pytest.raises(InfiniteUnsupported):
        pi_v(natv(), constant_family(natv(), BOOL))
    with pytest.raises(InfiniteUnsupported):
        pi_v(BOOL, constant_family(BOOL, natv()))


# ----- identity, squash, sums -----


def test_id_v_reifies_equality():
    assert print_vset(id_v(BOOL, Atom(0), Atom(1))) == "empty"
    inhabited = id_v(TWINS, Atom(0), Atom(1))
    assert len(inhabited.space.keys()) == 1
    assert equal(inhabited.elem(Atom(0)), EMPTY)


def test_identity_proofs_are_unique():
    base = parse_vset("{ num 1, num 0, { empty }, pairv(empty, empty) }")
    for x, y in itertools.product(base.space.keys(), repeat=2):
        members = [c for _, c in id_v(base, x, y).items()]
        for p, q in itertools.combinations(members, 2):
            assert equal(p, q)


def test_squash_collapses_children():
    sq = sq_v(BOOL)
    assert sq.space == BOOL.space
    assert all(c is EMPTY for _, c in sq.items())
    assert sq.rank == Fin(1)
    assert sq_v(natv()).rank == Fin(1)
    assert sq_v(EMPTY).rank == Fin(0)


def test_sum_tags_components():
    total = sum_v(BOOL, from_children([numeral(7)]))
    assert total.space.keys() == (Inl(Atom(0)), Inl(Atom(1)), Inr(Atom(0)))
    assert equal(total.elem(Inr(Atom(0))), inr_v(numeral(7)))
    assert equal(inl_v(numeral(1)), pair_v(numeral(0), numeral(1)))


def test_sum_with_natv_is_lazy():
    total = sum_v(natv(), EMPTY)
    assert not total.space.is_finite
    assert equal(total.elem(Inl(Numeral(2))), inl_v(numeral(2)))
