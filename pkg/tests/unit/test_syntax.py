import pytest

from app.errors import ScopeError, VmlSyntaxError
from app.harness.fixtures import BOOL, NOT, SAMPLES, TRUE
from app.syntax import ast
from app.syntax.builders import (
    br_sb,
    els,
    expand,
    is_derived,
    lift,
    pr_x,
    pr_y,
    step_sub,
    sum_sub_lf,
    sum_sub_rg,
)
from app.syntax.parser import parse, parse_expr
from app.syntax.printer import print_expr, print_source
from app.syntax.reader import Atom, SList, read_all
from app.syntax.scope import check_scope, infer_cod, infer_ctx_of_sub, well_scoped
from app.zf.verdict import Fails, Holds

EMPTY = ast.Empty()
NAT = ast.Nat()
N0 = ast.N0()
NAT_CTX = ast.Ext(EMPTY, NAT)
DOUBLE_NAT = ast.Ext(NAT_CTX, ast.TySub(NAT, ast.Down(NAT)))


# ----- reader -----


def test_reader_keeps_positions():
    [form] = read_all("(pi nat\n  nat)")
    assert isinstance(form, SList)
    assert (form.line, form.column) == (1, 1)
    assert form.items[2] == Atom("nat", 2, 3)


def test_reader_skips_comments():
    forms = read_all("; a comment\n(u 0) ; trailing\n; (not read)\nzero")
    assert len(forms) == 2
    assert forms[1] == Atom("zero", 4, 1)


@pytest.mark.parametrize(
    "text, message, position",
    [
        ("(pi nat", "list not closed", (1, 1)),
        (")", "unbalanced parentheses", (1, 1)),
        ("nat\n  )", "unbalanced parentheses", (2, 3)),
        ("(ctx (u 0)", "list not closed", (1, 1)),
        ("(succ " * 129 + "zero" + ")" * 129, "forms nest deeper than 128 levels", (1, 129 * 6 - 5)),
    ],
)
def test_reader_errors(text, message, position):
    with pytest.raises(VmlSyntaxError) as info:
        read_all(text)
    assert info.value.message == message
    assert (info.value.line, info.value.column) == position


def test_reader_handles_the_deepest_allowed_nesting():
    [form] = read_all("(succ " * 128 + "zero" + ")" * 128)
    depth = 0
    while isinstance(form, SList):
        form = form.items[1]
        depth += 1
    assert depth == 128
    assert form == Atom("zero", 1, 128 * 6 + 1)


# ----- parser -----


@pytest.mark.parametrize(
    "text, expected",
    [
        ("nat", NAT),
        ("(pi nat (u 0))", ast.PiF(NAT, ast.U(0))),
        ("(ctx nat n0)", ast.Ext(NAT_CTX, N0)),
        ("(ctx)", EMPTY),
        ("(tmsub var (down nat))", ast.TmSub(ast.Var(), ast.Down(NAT))),
        ("(els nat zero)", ast.Els(NAT, ast.Zero())),
        ("(def two (succ (succ zero))) (succ two)", ast.Succ(ast.Succ(ast.Succ(ast.Zero())))),
    ],
)
def test_parse_expr(text, expected):
    assert parse_expr(text) == expected


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("(pi nat)", "'pi' takes 2 arguments, got 1"),
        ("(u x)", "expected a natural number"),
        ("(frob nat)", "unknown form 'frob'"),
        ("bool", "unknown name 'bool'"),
        ("()", "empty form"),
        ("(pi (idsub (ctx)) nat)", "expected a type or term"),
        ("(idsub nat)", "expected a context"),
        ("(def pi nat) nat", "'pi' cannot be defined"),
        ("(judg ty (ctx) nat) nat", "only definitions may precede"),
        ("", "expected an expression"),
    ],
)
def test_parse_expr_errors(text, fragment):
    with pytest.raises(VmlSyntaxError) as info:
        parse_expr(text)
    assert fragment in str(info.value)


def test_parse_source_with_definitions():
    src = parse("(def one (succ zero))\n\n(judg elt (ctx) one nat)\n(judg ctx (ctx nat))\n")
    assert src.def_map == {"one": ast.Succ(ast.Zero())}
    first, second = src.judgments
    assert first == ast.Located(ast.Elt(EMPTY, ast.Succ(ast.Zero()), NAT), 3)
    assert second.judgment == ast.CtxValid(NAT_CTX)
    assert second.line == 4


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("(judg frob (ctx))", "unknown judgment form 'frob'", 1),
        ("\n(judg ty (ctx))", "'ty' takes 2 arguments, got 1", 2),
        ("(check (ctx))", "unknown top-level form 'check'", 1),
        ("nat", "expected (def ...) or (judg ...)", 1),
        ("(def 3 nat)", "'3' cannot be defined", 1),
        ("(def x)", "expected (def name expr)", 1),
    ],
)
def test_parse_errors(text, fragment, line):
    with pytest.raises(VmlSyntaxError) as info:
        parse(text)
    assert fragment in info.value.message
    assert info.value.line == line


def test_later_definitions_see_earlier_ones():
    src = parse("(def b (sum n0 n0))\n(def f (pi b b))\n(judg ty (ctx) f)")
    assert src.judgments[0].judgment.ty == ast.PiF(ast.Sum(N0, N0), ast.Sum(N0, N0))


# ----- printer -----


@pytest.mark.parametrize(
    "expr, text",
    [
        (ast.PiF(NAT, ast.U(0)), "(pi nat (u 0))"),
        (ast.Ext(NAT_CTX, N0), "(ctx nat n0)"),
        (EMPTY, "(ctx)"),
        (ast.SumSubLf(NAT, N0), "(sumsub-lf nat n0)"),
    ],
)
def test_print_expr(expr, text):
    assert print_expr(expr) == text


@pytest.mark.parametrize("sample", SAMPLES, ids=lambda s: print_expr(s.ty))
def test_printed_samples_parse_back(sample):
    for e in (sample.ty,) + sample.terms:
        assert parse_expr(print_expr(e)) == e


def test_print_source_uses_definition_names():
    text = "(def one (succ zero))\n(judg elt (ctx) one nat)\n"
    src = parse(text)
    assert print_source(src) == text
    assert parse(print_source(src)).defs == src.defs


def test_print_source_without_definitions():
    src = ast.SourceFile((), (ast.Located(ast.Elt(EMPTY, NOT, ast.PiF(BOOL, BOOL)), 1),))
    again = parse(print_source(src))
    assert [j.judgment for j in again.judgments] == [j.judgment for j in src.judgments]


# ----- scope -----


def test_infer_cod():
    assert infer_cod(ast.Down(NAT), NAT_CTX) == EMPTY
    assert infer_cod(ast.Pair(ast.Id(EMPTY), NAT, ast.Zero()), EMPTY) == NAT_CTX
    assert infer_cod(ast.StepSub(EMPTY), NAT_CTX) == NAT_CTX
    assert infer_cod(ast.Phi(NAT_CTX, EMPTY), NAT_CTX) == EMPTY
    assert infer_cod(ast.Comp(ast.Down(NAT), ast.Down(ast.TySub(NAT, ast.Down(NAT)))), DOUBLE_NAT) == EMPTY
    assert infer_ctx_of_sub(ast.Id(NAT_CTX), NAT_CTX) == (NAT_CTX, NAT_CTX)


@pytest.mark.parametrize(
    "sub, dom",
    [
        (ast.Down(NAT), EMPTY),
        (ast.Down(N0), NAT_CTX),
        (ast.Id(EMPTY), NAT_CTX),
        (ast.StepSub(EMPTY), EMPTY),
        (ast.Phi(EMPTY, NAT_CTX), NAT_CTX),
    ],
)
def test_infer_cod_mismatches(sub, dom):
    with pytest.raises(ScopeError):
        infer_cod(sub, dom)


@pytest.mark.parametrize(
    "expr, ctx, ok",
    [
        (ast.Var(), EMPTY, False),
        (ast.Var(), NAT_CTX, True),
        (ast.Lam(NAT, NAT, ast.Var()), EMPTY, True),
        (ast.TmSub(ast.Var(), ast.Down(NAT)), NAT_CTX, False),
        (ast.TmSub(ast.Var(), ast.Down(ast.TySub(NAT, ast.Down(NAT)))), DOUBLE_NAT, True),
        (ast.Rec(NAT, ast.Zero(), ast.Succ(ast.Var()), ast.Zero()), EMPTY, True),
        (ast.R0(NAT, ast.Var()), EMPTY, False),
        (ast.SumRec(NAT, N0, NAT, ast.Var(), ast.Var(), ast.Var()), EMPTY, False),
        (ast.Ext(ast.Ext(EMPTY, NAT), ast.IdT(NAT, ast.Var(), ast.Zero())), EMPTY, True),
        (ast.Ext(EMPTY, ast.IdT(NAT, ast.Var(), ast.Zero())), EMPTY, False),
        (TRUE, EMPTY, True),
    ],
)
def test_well_scoped(expr, ctx, ok):
    verdict = well_scoped(expr, ctx)
    assert isinstance(verdict, Holds if ok else Fails)


def test_check_scope_names_the_node():
    with pytest.raises(ScopeError) as info:
        check_scope(ast.TmSub(ast.Zero(), ast.Down(N0)), NAT_CTX)
    assert "(down n0)" in str(info.value)


# ----- derived substitutions -----

DERIVED = [
    (els(NAT, ast.Zero()), EMPTY),
    (lift(NAT, ast.Down(NAT)), DOUBLE_NAT),
    (step_sub(EMPTY), NAT_CTX),
    (sum_sub_lf(NAT, N0), NAT_CTX),
    (sum_sub_rg(NAT, N0), ast.Ext(EMPTY, N0)),
    (pr_x(NAT), DOUBLE_NAT),
    (pr_y(NAT), DOUBLE_NAT),
    (br_sb(NAT), NAT_CTX),
]


@pytest.mark.parametrize("sub, dom", DERIVED, ids=lambda v: print_expr(v))
def test_expansion_keeps_the_codomain(sub, dom):
    expanded = expand(sub, dom)
    assert is_derived(sub) and not is_derived(expanded)
    assert infer_cod(expanded, dom) == infer_cod(sub, dom)
    assert isinstance(well_scoped(expanded, dom), Holds)


def test_expected_codomains_of_derived_substitutions():
    assert infer_cod(sum_sub_lf(NAT, N0), NAT_CTX) == ast.Ext(EMPTY, ast.Sum(NAT, N0))
    assert infer_cod(br_sb(NAT), NAT_CTX) == ast.Ext(EMPTY, ast.Br(NAT))
    assert infer_cod(pr_x(NAT), DOUBLE_NAT) == NAT_CTX


def test_primitive_substitutions_expand_to_themselves():
    for sub in (ast.Id(EMPTY), ast.Down(NAT), ast.Phi(EMPTY, EMPTY)):
        assert expand(sub, NAT_CTX) is sub
        assert not is_derived(sub)
