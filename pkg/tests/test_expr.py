import pytest
from hypothesis import given, strategies as st

from calibfree.expr import (
    CatalogRef,
    ExprArityError,
    ExprNameError,
    ExprSyntaxError,
    Repeat,
    Sum,
    evaluate,
    evaluate_text,
    parse_expr,
    pretty,
    summands,
)
from calibfree.manifolds import CATALOG, DomainError, parse_catalog_text


def test_family_expression():
    assert parse_expr("M1(11) # 2*K3") == Sum(CatalogRef("M1", (11,)), Repeat(2, CatalogRef("K3")))


def test_single_name():
    assert parse_expr("K3") == CatalogRef("K3")
    assert parse_expr("  k3 ") == CatalogRef("K3")


def test_left_nesting_and_roundtrip():
    node = parse_expr("M2(1,2) # 3*S2xS2 # S4")
    assert node == Sum(Sum(CatalogRef("M2", (1, 2)), Repeat(3, CatalogRef("S2xS2"))),
                       CatalogRef("S4"))
    assert pretty(node) == "M2(1,2) # 3*S2xS2 # S4"
    assert parse_expr(pretty(node)) == node


def test_whitespace_insignificant():
    assert parse_expr("M2( 1 , 2 )#3 * s2xs2") == parse_expr("M2(1,2) # 3*S2xS2")


def test_nested_repeat():
    node = parse_expr("2*3*K3")
    assert node == Repeat(2, Repeat(3, CatalogRef("K3")))
    assert evaluate(node).invariants == evaluate_text("6*K3").invariants


@pytest.mark.parametrize("text, pos", [
    ("", 0),
    ("K3 #", 4),
    ("# K3", 0),
    ("K3 K3", 3),
    ("M1(11", 5),
    ("M1()", 3),
    ("2 K3", 2),
    ("K3 + S4", 3),
    ("0*K3", 0),
])
def test_syntax_errors(text, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse_expr(text)
    assert exc.value.position == pos
    assert str(exc.value).startswith("syntax error at position")


def test_unknown_name():
    with pytest.raises(ExprNameError, match="unknown name"):
        parse_expr("K3 # RP4")


@pytest.mark.parametrize("text", ["M1", "K3(1)", "M2(1)", "SigmaProd(1,2,3)"])
def test_arity(text):
    with pytest.raises(ExprArityError, match="arity mismatch"):
        parse_expr(text)


def test_domain_error_at_evaluation():
    node = parse_expr("M1(0)")
    with pytest.raises(DomainError):
        evaluate(node)


def test_user_catalog_names():
    cat = CATALOG.extended(parse_catalog_text("manifold Enriques chi=12 tau=-8 spin=false"))
    assert evaluate_text("2*enriques # K3", cat).invariants == (44, -32, False)
    with pytest.raises(ExprNameError):
        parse_expr("Enriques")


def test_summands():
    assert [pretty(s) for s in summands(parse_expr("S4 # 2*K3 # T4"))] == ["S4", "2*K3", "T4"]


leaves = st.sampled_from(["S4", "K3", "T4", "S2xS2", "CP2", "CP2bar", "M1(3)", "M2(1,2)",
                          "M4(5)", "SigmaProd(0,2)"])
terms = st.recursive(leaves, lambda t: st.tuples(st.integers(1, 3), t).map(
    lambda p: f"{p[0]}*{p[1]}"), max_leaves=3)


@given(st.lists(terms, min_size=1, max_size=5))
def test_pretty_idempotent(parts):
    text = " # ".join(parts)
    once = pretty(parse_expr(text))
    assert pretty(parse_expr(once)) == once


def _right_assoc(node):
    items = summands(node)
    acc = items[-1]
    for it in reversed(items[:-1]):
        acc = Sum(it, acc)
    return acc


@given(st.lists(terms, min_size=1, max_size=5))
def test_reassociation_irrelevant(parts):
    node = parse_expr(" # ".join(parts))
    assert evaluate(node).invariants == evaluate(_right_assoc(node)).invariants
