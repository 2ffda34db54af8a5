import pytest
from hypothesis import given, settings, strategies as st

from biradial import (
    MINUS,
    PLUS,
    BidirectedGraph,
    ClassLabel,
    Edge,
    PreconditionError,
    ReplayError,
    TrivialAlmostStrongError,
    UnsatisfiableSize,
    Walk,
    cut,
    exists_closed_ditrail,
    exists_ditrail,
    recognize,
)
from biradial.core import concat
from biradial.construct import (
    SCOOP,
    SIMPLE,
    AddRootEdge,
    AlmostStrongTree,
    Base,
    Contact,
    EarMode,
    EarProgram,
    Glue,
    LinearCore,
    ProgramEar,
    SublinearCore,
    decompose,
    decompose_almost_strong,
    decompose_linear,
    decompose_sublinear,
    extract_absolute,
    extract_strong,
    find_diear,
    random_program,
    replay,
    validate_diear,
)

from graphs import G0, G2, G3, G4, G5, G6, K
from strategies import graphs

CLASSES = [
    ClassLabel.ABSOLUTE_SEMIRADIAL,
    ClassLabel.STRONG_RADIAL,
    ClassLabel.ALMOST_STRONG_RADIAL,
    ClassLabel.LINEAR_SEMIRADIAL,
    ClassLabel.SUBLINEAR_RADIAL,
]


def _edges(G, *ids):
    return tuple(G.edge(e) for e in ids)


# -- replay ------------------------------------------------------------------


def test_empty_program_is_the_root_alone():
    assert replay(EarProgram("r")) == G0


def test_base_over_k_replays_to_g3():
    p = extract_strong(K, "x", MINUS)
    tree = AlmostStrongTree("r", MINUS, Base(G3.edge("g"), p))
    G = replay(tree)
    assert G == G3
    assert recognize(G, "r", MINUS, "almost_strong")


def test_empty_linear_core_is_the_root_alone():
    core = LinearCore("r", PLUS, BidirectedGraph(), ())
    assert replay(core) == G0
    assert recognize(G0, "r", PLUS, "linear")


def test_replay_reports_rule_and_index():
    initial = ProgramEar(Walk(("r", "ar", "a", "ab", "b", "br", "r"), (1, 0, 0)), _edges(G2, "ar", "ab", "br"))
    reuse = ProgramEar(Walk(("r", "ar", "a"), (1,)), _edges(G2, "ar"))
    with pytest.raises(ReplayError, match=r"ear\[0\].*already exist"):
        replay(EarProgram("r", (reuse,), initial, MINUS))
    # G2's closed ditrail is (+,+), so it cannot start a strong + program
    with pytest.raises(ReplayError, match="initial"):
        replay(EarProgram("r", (), initial, PLUS))


def test_replay_rejects_bad_glue_and_root_edges():
    base = decompose_almost_strong(G3, "r", MINUS).node
    with pytest.raises(ReplayError, match="glue"):
        replay(AlmostStrongTree("r", MINUS, Glue((base,))))
    with pytest.raises(ReplayError, match="glue"):
        replay(AlmostStrongTree("r", MINUS, Glue((base, base))))
    wrong = Edge.make("h", "r", "+", "y", "+")  # + at r, but alpha is -
    with pytest.raises(ReplayError, match="add_root_edge"):
        replay(AlmostStrongTree("r", MINUS, AddRootEdge(wrong, base)))


def test_linear_replay_rejects_loop_at_root_and_wrong_kinds():
    core = decompose_linear(G4, "r", PLUS)
    loop = Edge.make("l", "r", "+", "r", "+")
    with pytest.raises(ReplayError, match=r"added\[0\]: loop"):
        replay(LinearCore("r", PLUS, core.base, core.contacts, (), (loop,)))
    mixed = Edge.make("m", "a", "+", "r", "-")
    with pytest.raises(ReplayError, match=r"added\[0\]"):
        replay(LinearCore("r", PLUS, core.base, core.contacts, (), (mixed,)))
    with pytest.raises(ReplayError, match="contact"):
        replay(LinearCore("r", PLUS, core.base, ()))


def test_sublinear_replay_needs_a_flowgraph():
    with pytest.raises(ReplayError, match="flowgraph"):
        replay(SublinearCore("r", MINUS, G4))
    assert replay(SublinearCore("r", PLUS, G4, (G5.edge("h"),))) == G5


# -- diears ------------------------------------------------------------------


def test_validate_diear_simple_closed():
    W = Walk.of("r", "ar", "a", "ab", "b", "br", "r")
    d = validate_diear(G2, BidirectedGraph("r"), W)
    assert d.kind == SIMPLE and d.grip is None


def test_validate_diear_scoop():
    G = BidirectedGraph("rx", [("g", ("r", "+"), ("x", "-")), ("l", ("x", "+"), ("x", "+"))])
    d = validate_diear(G, {"r"}, Walk.of("r", "g", "x", "l", "x", "g", "r"))
    assert d.kind == SCOOP and d.grip == "g" and d.mode is EarMode.INDUCED


def test_validate_diear_short_repeat_is_invalid():
    G = BidirectedGraph("rx", [("g", ("r", "+"), ("x", "-"))])
    d = validate_diear(G, {"r"}, Walk.of("r", "g", "x", "g", "r"))
    assert not d


def test_validate_diear_modes_differ_on_chords():
    # the ear avoids E(H) but uses a chord of G[V(H)]
    H = BidirectedGraph("ra", [("ar", ("a", "+"), ("r", "-"))])
    G = H.add(edges=[Edge.make("c", "r", "+", "a", "-")])
    W = Walk.of("r", "c", "a")
    assert validate_diear(G, H, W, EarMode.SUBGRAPH)
    assert not validate_diear(G, H, W, EarMode.INDUCED)


def test_find_diear_g2_from_the_root():
    d = find_diear(G2, BidirectedGraph("r"), "r")
    assert d.kind == SIMPLE
    assert d.walk.terms == ("r", "ar", "a", "ab", "b", "br", "r")


def test_find_diear_missing_edge_only():
    H = G2.remove_edges({"ab"})
    G = G2.add(edges=[Edge.make("l", "r", "-", "r", "-")])
    H = G.remove_edges({"l"})
    d = find_diear(G, H, "r")
    assert d.walk.edges == ("l",) and d.kind == SIMPLE


def test_find_diear_builds_a_scoop_when_the_trail_comes_back():
    G = BidirectedGraph("rx", [("g", ("r", "+"), ("x", "-")), ("l", ("x", "+"), ("x", "+"))])
    d = find_diear(G, BidirectedGraph("r"), "r")
    assert d.kind == SCOOP and d.grip == "g"
    assert d.walk.terms == ("r", "g", "x", "l", "x", "g", "r")


def test_find_diear_passes_a_return_with_the_grip_sign():
    # the oracle trail from x re-enters x arriving with the grip's own sign there;
    # closing a scoop at that point would not be a diwalk, so the trace continues
    G = BidirectedGraph(
        "rxz",
        [
            ("g", ("r", "+"), ("x", "-")),
            ("f", ("x", "+"), ("z", "-")),
            ("h", ("z", "+"), ("x", "-")),
            ("k", ("x", "+"), ("r", "+")),
        ],
    )
    assert recognize(G, "r", None, "absolute")
    d = find_diear(G, BidirectedGraph("r"), "r")
    assert d.kind == SIMPLE
    assert d.walk.terms == ("r", "g", "x", "f", "z", "h", "x", "k", "r")


def test_find_diear_checks_preconditions():
    with pytest.raises(PreconditionError):
        find_diear(G2, G2, "r")
    with pytest.raises(PreconditionError):
        find_diear(G4, G0, "r")  # G4 has no --ditrail from a


# -- extraction --------------------------------------------------------------


def test_extract_absolute_examples():
    assert extract_absolute(G0, "r").ears == ()
    p = extract_absolute(G2, "r")
    assert len(p.ears) == 1 and replay(p) == G2
    p = extract_absolute(G3, "r")
    assert replay(p) == G3
    # one scoop hanging from r through g
    assert [e.kind for e in p.ears] == [SCOOP]


def test_extract_strong_examples():
    p = extract_strong(G2, "r", MINUS)
    assert p.initial.walk.terms == ("r", "ar", "a", "ab", "b", "br", "r") and p.ears == ()
    assert replay(p) == G2
    p = extract_strong(K, "x", MINUS)
    assert len(p.initial.walk.edges) == 2 and replay(p) == K
    with pytest.raises(PreconditionError):
        extract_strong(G0, "r", PLUS)


def test_decompose_almost_strong_examples():
    t = decompose_almost_strong(G3, "r", MINUS)
    assert isinstance(t.node, Base) and t.node.edge.id == "g"
    assert replay(t) == G3

    G = G3.add(edges=[Edge.make("h", "r", "-", "y", "+")])
    t = decompose_almost_strong(G, "r", MINUS)
    assert isinstance(t.node, AddRootEdge) and t.node.edge.id == "h"
    assert isinstance(t.node.child, Base) and replay(t) == G

    copy = BidirectedGraph(
        "rpq", {"k1": (("p", "+"), ("q", "-")), "k2": (("q", "+"), ("p", "+")), "k3": (("r", "+"), ("p", "-"))}
    )
    G = G3.union(copy)
    t = decompose_almost_strong(G, "r", MINUS)
    assert isinstance(t.node, Glue) and all(isinstance(c, Base) for c in t.node.children)
    assert replay(t) == G


def test_decompose_almost_strong_rejects_trivial_and_non_members():
    with pytest.raises(TrivialAlmostStrongError):
        decompose_almost_strong(G0, "r", MINUS)
    with pytest.raises(PreconditionError):
        decompose_almost_strong(G2, "r", MINUS)


def test_decompose_linear_examples():
    core = decompose_linear(G4, "r", PLUS)
    assert core.base.vertices == {"a"} and [c.edge.id for c in core.contacts] == ["e"] and core.added == ()
    core = decompose_linear(G5, "r", PLUS)
    assert [e.id for e in core.added] == ["h"] and replay(core) == G5
    bad = decompose_linear(G6, "r", PLUS)
    assert not bad and "not a maximal strong component" in bad.reason


def test_linear_core_keeps_extra_arcs_into_the_root():
    # a -> b -> r with a second arc a -> r: {a} is not maximal, yet the graph is linear
    G = BidirectedGraph(
        "rab",
        {"ab": (("a", "+"), ("b", "-")), "br": (("b", "+"), ("r", "-")), "ar": (("a", "+"), ("r", "-"))},
    )
    assert recognize(G, "r", PLUS, "linear")
    core = decompose_linear(G, "r", PLUS)
    assert [e.id for e in core.root_arcs] == ["ar"]
    assert replay(core) == G


def test_decompose_sublinear_examples():
    core = decompose_sublinear(G6, "r", PLUS)
    assert core.base == G6 and core.added == ()
    core = decompose_sublinear(G5, "r", PLUS)
    assert core.base == G4 and [e.id for e in core.added] == ["h"]
    assert not decompose_sublinear(G2, "r", PLUS)


def test_generic_decompose_dispatch():
    assert isinstance(decompose(G2, "r", None, "absolute"), EarProgram)
    with pytest.raises(PreconditionError):
        decompose(G6, "r", PLUS, "linear")
    with pytest.raises(PreconditionError):
        decompose(G2, "r", None, "strong")


# -- generation --------------------------------------------------------------


def test_random_program_examples():
    cert = random_program("strong", 1, (6, 10))
    G = replay(cert)
    assert recognize(G, "r", cert.alpha, "strong")
    assert len(G) <= 6 and len(G.edges) <= 10
    assert random_program("absolute", 7, (1, 0)) == EarProgram("r")
    with pytest.raises(UnsatisfiableSize):
        random_program("strong", 7, (1, 0))


def test_random_program_is_deterministic():
    for cls in CLASSES:
        assert random_program(cls, 11, (8, 12)) == random_program(cls, 11, (8, 12))


@settings(max_examples=60)
@given(st.sampled_from(CLASSES), st.integers(0, 10**6), st.integers(1, 8), st.integers(0, 12))
def test_generated_certificates_are_sound_and_complete(cls, seed, nv, ne):
    try:
        cert = random_program(cls, seed, (nv, ne))
    except UnsatisfiableSize:
        assert cls in (ClassLabel.STRONG_RADIAL, ClassLabel.ALMOST_STRONG_RADIAL)
        return
    G = replay(cert)
    assert len(G) <= nv and len(G.edges) <= ne
    alpha = getattr(cert, "alpha", None)
    assert recognize(G, cert.root, alpha, cls)
    if cls is ClassLabel.ALMOST_STRONG_RADIAL or len(G) > 1 or cls is not ClassLabel.ALMOST_STRONG_RADIAL:
        assert replay(decompose(G, cert.root, alpha, cls)) == G


# -- structural and definitional agreement -----------------------------------


@given(graphs(max_vertices=3, max_edges=4), st.sampled_from([PLUS, MINUS]))
def test_structural_linear_matches_definition(G, a):
    assert bool(decompose_linear(G, "r", a)) == recognize(G, "r", a, "linear")


@given(graphs(max_vertices=3, max_edges=4), st.sampled_from([PLUS, MINUS]))
def test_structural_sublinear_matches_definition(G, a):
    assert bool(decompose_sublinear(G, "r", a)) == recognize(G, "r", a, "sublinear")


@given(graphs(max_vertices=3, max_edges=4), st.sampled_from([PLUS, MINUS]))
def test_extractors_round_trip_on_members(G, a):
    for cls in (ClassLabel.ABSOLUTE_SEMIRADIAL, ClassLabel.STRONG_RADIAL, ClassLabel.ALMOST_STRONG_RADIAL):
        if not recognize(G, "r", a, cls) or (cls is ClassLabel.ALMOST_STRONG_RADIAL and len(G) == 1):
            continue
        assert replay(decompose(G, "r", a, cls)) == G


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.sampled_from([PLUS, MINUS]))
def test_almost_strong_root_edges_grip_a_scoop(seed, a):
    # every root edge with -alpha at r grips a (-alpha)-scoop meeting r only at its ends
    G = replay(random_program("almost_strong", seed, (7, 10), alpha=a))
    r = "r"
    necks = [G.edge(e) for e in sorted(cut(G, {r})) if G.edge(e).sign_at(r) is -a]
    assert necks
    rest = G.remove_vertices([r])
    for e in necks:
        x = e.other(r)
        beta = e.sign_at(x)
        C = exists_closed_ditrail(rest, x, (-beta, -beta))
        assert C is not None
        slot = 0 if e.ends[0].vertex == r else 1
        W = concat(concat(Walk((r, e.id, x), (slot,)), C.walk), Walk((x, e.id, r), (1 - slot,)))
        d = validate_diear(G, {r}, W)
        assert d and d.kind == SCOOP and d.grip == e.id
        assert W.vertices.count(r) == 2


@settings(max_examples=40)
@given(st.integers(0, 10**6), st.sampled_from([PLUS, MINUS]))
def test_almost_strong_witnesses_meet_the_root_once(seed, a):
    G = replay(random_program("almost_strong", seed, (7, 10), alpha=a))
    for x in sorted(G.vertices - {"r"}):
        for c in ((a, -a), (-a, -a)):
            w = exists_ditrail(G, x, "r", c, target_once=True)
            assert w is not None and w.walk.vertices.count("r") == 1
