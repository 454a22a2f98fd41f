import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.errors import DomainMismatch, InfiniteUnsupported, KeyOutOfRange, VmlSyntaxError
from app.universes.hierarchy import v_k
from app.zf.constructions import pair_v, sq_v
from app.zf.equality import mem_v
from app.zf.keys import (
    Atom,
    Finite,
    FunTable,
    Inl,
    Inr,
    KPair,
    Naturals,
    Numeral,
    funtable,
    key_order,
    pair_space,
    sort_keys,
    sum_space,
)
from app.zf.literals import parse_vset, print_vset
from app.zf.verdict import Holds
from app.zf.vset import (
    EMPTY,
    Fin,
    Infinite,
    NumeralGen,
    Table,
    from_children,
    is_natv,
    mk_sup,
    natv,
    numeral,
    singleton,
)

hf_trees = st.recursive(
    st.just(()), lambda kids: st.lists(kids, max_size=3).map(tuple), max_leaves=10
)


def build(tree):
    return from_children([build(t) for t in tree])


# ----- keys and key spaces -----


def test_key_order_groups_variants():
    keys = [Numeral(0), Inr(Atom(0)), KPair(Atom(0), Atom(1)), Inl(Atom(1)), Atom(3)]
    assert sort_keys(keys) == (
        Atom(3),
        KPair(Atom(0), Atom(1)),
        Inl(Atom(1)),
        Inr(Atom(0)),
        Numeral(0),
    )
    assert key_order(KPair(Atom(0), Atom(1))) < key_order(KPair(Atom(1), Atom(0)))
    with pytest.raises(TypeError):
        key_order("atom")


def test_funtable_is_sorted_and_callable():
    table = funtable([(Atom(1), Atom(0)), (Atom(0), Atom(1))])
    assert table.entries == ((Atom(0), Atom(1)), (Atom(1), Atom(0)))
    assert table(Atom(1)) == Atom(0)
    with pytest.raises(DomainMismatch):
        FunTable(((Atom(1), Atom(0)), (Atom(0), Atom(0))))


def test_finite_space_rejects_unsorted_keys():
    with pytest.raises(DomainMismatch):
        Finite((Atom(1), Atom(0)))
    assert Finite.of([Atom(1), Atom(0), Atom(1)]).keys() == (Atom(0), Atom(1))


def test_naturals_probe_and_listing():
    assert Naturals().probe(3) == (Numeral(0), Numeral(1), Numeral(2))
    assert Numeral(40) in Naturals()
    with pytest.raises(InfiniteUnsupported):
        Naturals().keys()


def test_pair_space_lists_finite_and_probes_infinite():
    two = Finite((Atom(0), Atom(1)))
    listed = pair_space(two, lambda _y: two)
    assert listed.is_finite and len(listed.keys()) == 4
    lazy = pair_space(Naturals(), lambda _y: two)
    assert not lazy.is_finite
    probed = lazy.probe(5)
    assert len(probed) == 5 and len(set(probed)) == 5
    assert KPair(Numeral(7), Atom(1)) in lazy


def test_sum_space_interleaves_probes():
    space = sum_space(Naturals(), Finite((Atom(0),)))
    assert space.probe(4) == (Inl(Numeral(0)), Inr(Atom(0)), Inl(Numeral(1)), Inl(Numeral(2)))
    assert Inr(Atom(1)) not in space


# ----- sets -----


def test_numerals_are_shared_and_ranked():
    assert numeral(5) is numeral(5)
    assert numeral(0) is EMPTY
    assert numeral(3).rank == Fin(3)
    assert singleton(numeral(2)).digest == numeral(3).digest


def test_deep_sets_rank_and_digest_without_recursion():
    deep = numeral(1000)
    assert deep.rank == Fin(1000)
    verdict = mem_v(deep, natv())
    assert isinstance(verdict, Holds) and verdict.witness == Numeral(1000)
    chain = EMPTY
    for _ in range(5000):
        chain = from_children([chain])
    assert chain.rank == Fin(5000)
    assert chain.digest == numeral(5000).digest


def test_natv_is_infinite_and_lazy():
    nat = natv()
    assert is_natv(nat)
    assert nat.rank == Infinite()
    assert [k for k, _ in nat.items(3)] == [Numeral(0), Numeral(1), Numeral(2)]
    assert nat.elem(Numeral(4)) is numeral(4)


def test_mk_sup_checks_the_table_domain():
    with pytest.raises(DomainMismatch):
        mk_sup(Finite((Atom(0),)), Table(()))
    with pytest.raises(DomainMismatch):
        mk_sup(Naturals(), Table(()))
    with pytest.raises(DomainMismatch):
        mk_sup(Finite(()), NumeralGen())


def test_elem_outside_the_space_raises():
    with pytest.raises(KeyOutOfRange):
        numeral(2).elem(Atom(1))


def test_from_children_uses_atom_keys():
    v = from_children([EMPTY, numeral(1)])
    assert v.space.keys() == (Atom(0), Atom(1))
    assert v.elem(Atom(1)) is numeral(1)
    assert v.rank == Fin(2)


def test_digest_follows_presentation():
    a = from_children([numeral(0), numeral(1)])
    b = from_children([numeral(0), numeral(1)])
    c = from_children([numeral(1), numeral(0)])
    assert a.digest == b.digest
    assert a.digest != c.digest


# ----- literals -----


@pytest.mark.parametrize(
    "text, printed",
    [
        ("empty", "empty"),
        ("num 2", "{ { empty } }"),
        ("{ }", "empty"),
        ("{ num 1, empty }", "{ { empty }, empty }"),
        ("pairv(empty, empty)", "{ { empty }, { empty, empty } }"),
        ("natv", "natv"),
    ],
)
def test_literal_printing(text, printed):
    assert print_vset(parse_vset(text)) == printed


def test_pair_literal_is_a_kuratowski_pair():
    assert parse_vset("pairv(num 0, num 1)").digest == pair_v(numeral(0), numeral(1)).digest


def test_lazy_sets_print_by_label():
    assert print_vset(sq_v(natv())) == "lazy(squash)"
    assert print_vset(v_k(0)) == "univ 0"


@pytest.mark.parametrize(
    "text, message",
    [
        ("{ num 1", "not closed"),
        ("num x", "natural number"),
        ("frob", "unknown set literal"),
        ("{ } empty", "trailing input"),
        ("{ empty empty }", "expected ','"),
        ("", "unexpected end"),
    ],
)
def test_literal_errors(text, message):
    with pytest.raises(VmlSyntaxError) as exc:
        parse_vset(text)
    assert message in str(exc.value)
    assert exc.value.line == 1


@given(hf_trees)
def test_printed_literal_reads_back(tree):
    v = build(tree)
    again = parse_vset(print_vset(v))
    assert again.digest == v.digest
