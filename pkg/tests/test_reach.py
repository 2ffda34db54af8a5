import pytest
from hypothesis import given

from biradial import (
    MINUS,
    PLUS,
    BidirectedGraph,
    BudgetExceeded,
    SignConstraint,
    diwalk_reachable,
    enumerate_ditrails,
    exists_closed_ditrail,
    exists_ditrail,
    validate_diwalk,
)

from graphs import G0, G2
from naive import ditrail_types
from strategies import graphs

PAIRS = [(s, t) for s in (PLUS, MINUS) for t in (PLUS, MINUS)]


def test_sign_constraint_parsing():
    assert SignConstraint.of("-+") == SignConstraint(MINUS, PLUS)
    assert SignConstraint.of("*+") == SignConstraint(None, PLUS)
    assert SignConstraint.of(None) == SignConstraint(None, None)
    assert str(SignConstraint.of((PLUS, None))) == "(+,*)"


def test_g2_minus_plus_witness():
    w = exists_ditrail(G2, "a", "r", "-+")
    assert w.walk.terms == ("a", "ab", "b", "br", "r")
    assert (w.start_sign, w.end_sign) == (MINUS, PLUS)


def test_no_minus_minus_into_r_on_g2():
    assert exists_ditrail(G2, "a", "r", "--") is None


def test_trivial_walk_is_never_equal_signed():
    assert exists_ditrail(G0, "r", "r", "++") is None
    assert exists_ditrail(G0, "r", "r", "+-").walk.is_trivial


def test_closed_ditrails_over_r():
    w = exists_closed_ditrail(G2, "r", "++")
    assert w.walk.terms == ("r", "ar", "a", "ab", "b", "br", "r")
    assert exists_closed_ditrail(G2, "r", "--") is None
    assert exists_closed_ditrail(G0, "r") is None


def test_enumerate():
    assert len(enumerate_ditrails(G2, "a", "r", "-+", 10)) == 1
    only = enumerate_ditrails(G0, "r", "r", None, 10)
    assert len(only) == 1 and only[0].walk.is_trivial
    assert len(enumerate_ditrails(G2, "r", "r", None, 1)) == 1


def test_enumeration_is_lexicographic_in_edge_ids():
    fwd = [(f"e{i}", ("x", "+"), ("y", "-")) for i in (0, 1)]
    back = [(f"e{i}", ("x", "-"), ("y", "+")) for i in (2, 3)]
    G = BidirectedGraph("xy", fwd + back)
    seqs = [w.walk.edges for w in enumerate_ditrails(G, "x", "y", "+-", 100)]
    assert seqs == sorted(seqs, key=list)
    # e0 or e1 alone, or forward-back-forward through both forward edges
    assert seqs == [("e0",), ("e0", "e2", "e1"), ("e0", "e3", "e1"), ("e1",), ("e1", "e2", "e0"), ("e1", "e3", "e0")]


def test_witnesses_are_valid_ditrails():
    for w in enumerate_ditrails(G2, "r", "r", None, 50):
        info = validate_diwalk(G2, w.walk)
        assert info.is_ditrail
        assert info.is_type(w.start_sign, w.end_sign)


def test_diwalk_reachability():
    assert diwalk_reachable(G2, "a", "r", "-+")
    assert not diwalk_reachable(G0, "r", "r", "++")


def test_budget_is_enforced():
    G = BidirectedGraph("x", [(f"l{i}", ("x", "+"), ("x", "-")) for i in range(6)])
    with pytest.raises(BudgetExceeded):
        # every ordering of the loops is a candidate; none closes with (+,+)
        exists_ditrail(G, "x", "x", "++", nontrivial=True, budget=5)


def test_target_once():
    G = BidirectedGraph("rx", [("a", ("x", "+"), ("r", "-")), ("l", ("r", "+"), ("r", "+"))])
    assert exists_ditrail(G, "x", "r", "++") is not None
    assert exists_ditrail(G, "x", "r", "++", target_once=True) is None


@given(graphs(max_vertices=3, max_edges=5))
def test_oracle_agrees_with_naive_enumeration(G):
    for x in G.sorted_vertices():
        truth = ditrail_types(G, x, "r")
        for pair in PAIRS:
            w = exists_ditrail(G, x, "r", pair)
            assert (w is not None) == (pair in truth), (x, pair)
            if w is not None:
                assert validate_diwalk(G, w.walk).is_type(*pair)
                assert diwalk_reachable(G, x, "r", pair)
