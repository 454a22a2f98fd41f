import pytest

from app.errors import IllFormedCode, InfiniteUnsupported
from app.universes.codes import (
    N,
    N0,
    N1,
    CodeSpace,
    ConstFamily,
    ExtTable,
    IxCode,
    LftCode,
    LiftFamily,
    NatTree,
    Node,
    PiCode,
    PlusCode,
    RuleFamily,
    SigmaCode,
    TableFamily,
    TimesCode,
    TreeSpace,
    UEnv,
    UnivTree,
    WCode,
    decode,
    fin_code,
    lift_code,
    numeral_tree,
    tree_well_formed,
    universe_code,
    universe_level_of,
    value_key,
    well_formed,
)
from app.universes.hierarchy import check_mem_u, emb, recognize, tree_of, u_v, v_k
from app.zf.constructions import constant_family, pi_v, sq_v, sum_v
from app.zf.equality import eq_v, mem_v, subset_v
from app.zf.keys import Atom, CodeKey, FunTable, Inl, Inr, KPair, TreeKey
from app.zf.literals import parse_vset
from app.zf.verdict import Budget, Fails, Holds, Unknown
from app.zf.vset import from_children, natv, numeral, singleton

UNIT = singleton(numeral(0))
BOOL = sum_v(UNIT, UNIT)
BOOL_CODE = PlusCode(N1, N1)


@pytest.fixture()
def budget():
    return Budget()


# ----- codes -----


@pytest.mark.parametrize(
    "code, level, expected",
    [
        (N0, 0, True),
        (N, 0, True),
        (IxCode(), 0, False),
        (IxCode(), 1, True),
        (LftCode(N), 0, False),
        (LftCode(IxCode()), 2, True),
        (TimesCode(N1, IxCode()), 0, False),
        (WCode(IxCode(), LiftFamily()), 1, True),
        (WCode(N1, LiftFamily()), 1, False),
        (SigmaCode(N, RuleFamily(lambda _k: N1)), 0, True),
        (SigmaCode(BOOL_CODE, TableFamily(((Inl(Atom(0)), N),))), 0, False),
    ],
)
def test_well_formed(code, level, expected):
    assert well_formed(code, level) is expected


def test_finite_codes_decode_to_listed_spaces():
    assert len(decode(fin_code(3), 0).keys()) == 3
    assert decode(fin_code(0), 0).keys() == ()
    assert len(decode(PiCode(BOOL_CODE, ConstFamily(BOOL_CODE)), 0).keys()) == 4
    assert decode(TimesCode(N1, BOOL_CODE), 0).keys() == (
        KPair(Atom(0), Inl(Atom(0))),
        KPair(Atom(0), Inr(Atom(0))),
    )


def test_decode_rejects_ill_formed_and_infinite_pi():
    with pytest.raises(IllFormedCode):
        decode(IxCode(), 0)
    with pytest.raises(InfiniteUnsupported):
        decode(PiCode(N, ConstFamily(N1)), 0)


def test_w_codes():
    unary = WCode(BOOL_CODE, TableFamily(((Inl(Atom(0)), N0), (Inr(Atom(0)), N1))))
    space = decode(unary, 0)
    assert not space.is_finite
    zero = KPair(Inl(Atom(0)), FunTable(()))
    one = KPair(Inr(Atom(0)), FunTable(((Atom(0), zero),)))
    two = KPair(Inr(Atom(0)), FunTable(((Atom(0), one),)))
    assert space.probe(3) == (zero, one, two)
    assert two in space
    assert len(decode(WCode(BOOL_CODE, ConstFamily(N0)), 0).keys()) == 2
    assert decode(WCode(N1, ConstFamily(N1)), 0).keys() == ()


def test_universe_codes():
    code = universe_code(0, 2)
    assert code == LftCode(WCode(IxCode(), LiftFamily()))
    assert universe_level_of(code, 2) == 0
    assert universe_level_of(N, 2) is None
    assert decode(universe_code(0, 1), 1) == TreeSpace(0)
    with pytest.raises(IllFormedCode):
        universe_code(1, 1)


def test_lift_code_and_levels():
    lifted = lift_code(N, 2)
    assert lifted == LftCode(LftCode(N))
    assert well_formed(lifted, 2) and not well_formed(lifted, 1)
    assert value_key(lifted, Atom(4), 2) == Atom(4)
    with pytest.raises(IllFormedCode):
        UEnv(0).index_space()
    assert UEnv(1).index_space() == CodeSpace(0)


def test_code_space():
    space = CodeSpace(0)
    assert space.probe(4) == tuple(CodeKey(c) for c in (N0, N1, N, PlusCode(N0, N0)))
    assert CodeKey(N1) in space
    assert CodeKey(IxCode()) not in space


# ----- trees and embedding -----


def test_numeral_trees_embed_to_numerals():
    for n in range(5):
        tree = numeral_tree(n)
        assert tree_well_formed(tree, 0)
        assert isinstance(eq_v(emb(tree), numeral(n)), Holds)


def test_canonical_trees():
    assert emb(NatTree()) is natv()
    assert emb(UnivTree(0)) is v_k(0)
    assert tree_well_formed(UnivTree(0), 1) and not tree_well_formed(UnivTree(0), 0)
    assert TreeSpace(1).probe(4) == tuple(
        TreeKey(t) for t in (numeral_tree(0), numeral_tree(1), numeral_tree(2), NatTree())
    )


def test_tree_of():
    x = parse_vset("{ num 0, num 1, num 1 }")
    tree = tree_of(x, 0)
    assert isinstance(tree, Node) and tree.code == fin_code(3)
    assert isinstance(eq_v(emb(tree), x), Holds)
    assert tree_of(natv(), 0) == NatTree()
    assert tree_of(v_k(0), 1) == UnivTree(0)
    assert tree_of(v_k(0), 0) is None
    assert tree_of(sq_v(natv()), 0) is None


def test_universe_sets_are_shared():
    assert v_k(1) is v_k(1)
    assert u_v(UEnv(1)) is v_k(1)


# ----- membership -----


@pytest.mark.parametrize("literal", ["empty", "num 3", "pairv(num 1, empty)", "natv"])
def test_small_sets_are_recognized(literal, budget):
    verdict = mem_v(parse_vset(literal), v_k(0), budget)
    assert isinstance(verdict, Holds)
    assert isinstance(verdict.witness, TreeKey)


def test_universes_are_cumulative(budget):
    assert isinstance(mem_v(v_k(0), v_k(1), budget), Holds)
    assert isinstance(mem_v(v_k(0), v_k(2), budget), Holds)
    assert isinstance(mem_v(v_k(0), v_k(0), budget), Fails)
    assert isinstance(mem_v(v_k(1), v_k(0), budget), Fails)
    corpus = from_children([numeral(0), natv(), BOOL, UNIT])
    assert isinstance(subset_v(corpus, v_k(0), budget), Holds)
    assert isinstance(subset_v(corpus, v_k(1), budget), Holds)
    assert isinstance(subset_v(from_children([v_k(0)]), v_k(0), budget), Fails)


def test_lazy_sets_are_not_recognized(budget):
    assert isinstance(recognize(sq_v(natv()), 0, budget), Unknown)


def test_certificates_for_finite_sets(budget):
    assert isinstance(check_mem_u(BOOL, 0, BOOL_CODE, budget), Holds)
    assert isinstance(check_mem_u(UNIT, 0, N1, budget), Holds)
    assert isinstance(check_mem_u(numeral(0), 0, N0, budget), Holds)
    wrong = check_mem_u(BOOL, 0, N1, budget)
    assert isinstance(wrong, Fails) and "does not index" in wrong.counterexample


def test_certificate_for_natv(budget):
    assert check_mem_u(natv(), 0, N, budget) == Holds((TreeKey(NatTree()),))
    assert isinstance(check_mem_u(natv(), 1, LftCode(N), budget), Holds)


def test_certificate_for_a_function_space(budget):
    funs = pi_v(BOOL, constant_family(BOOL, BOOL), budget)
    pi = PiCode(BOOL_CODE, ConstFamily(BOOL_CODE))
    marks = ExtTable(tuple((f, N1) for f in decode(pi, 0).keys()))
    assert isinstance(check_mem_u(funs, 0, SigmaCode(pi, marks), budget), Holds)


def test_certificate_for_a_universe(budget):
    assert isinstance(check_mem_u(v_k(0), 1, universe_code(0, 1), budget), Holds)


def test_ill_formed_certificate_fails(budget):
    verdict = check_mem_u(BOOL, 0, IxCode(), budget)
    assert isinstance(verdict, Fails) and "not well formed" in verdict.counterexample
