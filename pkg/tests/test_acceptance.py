"""Acceptance suites. Each test prints one ``PASS``/``FAIL criterion N`` line.

Run alone with ``pytest tests/test_acceptance.py -v``; the lines are written
straight to the terminal, so no ``-s`` is needed.
"""

import random
import time
from itertools import combinations_with_replacement, permutations

import networkx as nx
import pytest

from biradial import (
    MINUS,
    PLUS,
    BidirectedGraph,
    ClassLabel,
    Edge,
    PreconditionError,
    criticality_crosscheck,
    diwalk_reachable,
    exists_ditrail,
    realize_poset,
    recognize,
    scc_poset,
    strong_ears_build,
    strong_ears_extract,
    strong_via_absolute,
)
from biradial.construct import decompose, decompose_linear, decompose_sublinear, random_program, replay
from biradial.construct.generate import random_poset, random_strong_piece

from naive import ditrail_types

CLASSES = [
    ClassLabel.ABSOLUTE_SEMIRADIAL,
    ClassLabel.STRONG_RADIAL,
    ClassLabel.ALMOST_STRONG_RADIAL,
    ClassLabel.LINEAR_SEMIRADIAL,
    ClassLabel.SUBLINEAR_RADIAL,
]
PER_CLASS = 300
SIZE = (10, 14)
SIGNS = (PLUS, MINUS)
PAIRS = [(s, t) for s in SIGNS for t in SIGNS]


@pytest.fixture
def report(capsys):
    def emit(n: int, ok: bool, detail: str, notes: tuple[str, ...] = ()) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
            for line in notes:
                print(f"  {line}")

    return emit


def _suite_graphs():
    """Generated certificates for suites 1 and 2, built once."""
    if not hasattr(_suite_graphs, "cache"):
        _suite_graphs.cache = [(cls, random_program(cls, seed, SIZE)) for cls in CLASSES for seed in range(PER_CLASS)]
    return _suite_graphs.cache


def _small_graphs():
    """Every multiset of at most three edges over r, a, b (21 edge types)."""
    if hasattr(_small_graphs, "cache"):
        return _small_graphs.cache
    types = []
    for u, v in (("r", "a"), ("r", "b"), ("a", "b")):
        types += [(u, s, v, t) for s in SIGNS for t in SIGNS]
    for v in ("a", "b", "r"):
        types += [(v, PLUS, v, PLUS), (v, MINUS, v, MINUS), (v, PLUS, v, MINUS)]
    out = []
    for k in range(4):
        for combo in combinations_with_replacement(types, k):
            edges = [Edge.make(f"e{i + 1}", u, s, v, t) for i, (u, s, v, t) in enumerate(combo)]
            out.append(BidirectedGraph("rab", edges))
    _small_graphs.cache = out
    return out


# -- 1 and 2 -----------------------------------------------------------------


def test_criterion_1_soundness(report):
    start = time.perf_counter()
    failures = []
    for cls, cert in _suite_graphs():
        try:
            G = replay(cert)
            ok = recognize(G, cert.root, getattr(cert, "alpha", None), cls)
        except Exception as exc:  # any replay error counts as a failure
            ok, G = False, exc
        if not ok:
            failures.append((cls.value, G))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 600
    report(1, ok, f"{len(_suite_graphs())} certificates, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:3]
    assert elapsed <= 600


def test_criterion_2_round_trip(report):
    failures = []
    for cls, cert in _suite_graphs():
        G = replay(cert)
        try:
            back = replay(decompose(G, cert.root, getattr(cert, "alpha", None), cls))
        except Exception as exc:
            back = exc
        if back != G:
            failures.append((cls.value, cert, back))
    report(2, not failures, f"{len(_suite_graphs())} graphs decomposed and replayed, {len(failures)} mismatches")
    assert not failures, failures[:3]


# -- 3 -----------------------------------------------------------------------


def test_criterion_3_structural_matches_definition(report):
    graphs = _small_graphs()
    bad = {"linear": 0, "sublinear": 0, "strong": 0}
    # agreement of "sublinear" with two readings of the sign condition, per host class
    readings = {(host, rd): [0, 0] for host in ("semiradial", "radial") for rd in ("(alpha,alpha)", "(-alpha,-alpha)")}
    for G in graphs:
        for a in SIGNS:
            lin = recognize(G, "r", a, "linear")
            sub = recognize(G, "r", a, "sublinear")
            bad["linear"] += bool(decompose_linear(G, "r", a)) != lin
            bad["sublinear"] += bool(decompose_sublinear(G, "r", a)) != sub
            bad["strong"] += strong_via_absolute(G, "r", a) != recognize(G, "r", a, "strong")
            has = {
                "(alpha,alpha)": any(e.is_homogeneous(a) for e in G),
                "(-alpha,-alpha)": any(e.is_homogeneous(-a) for e in G),
            }
            for host in ("semiradial", "radial"):
                if not recognize(G, "r", a, host):
                    continue
                for rd in has:
                    cell = readings[(host, rd)]
                    cell[0] += sub == (not has[rd])
                    cell[1] += 1
    ok = not any(bad.values())
    summary = ", ".join(f"{k} {v} disagreements" for k, v in bad.items())
    notes = []
    for (host, rd), (agree, total) in readings.items():
        verdict = "matches" if agree == total else "does not match"
        notes.append(f"sign reading: sublinear <=> no {rd}-edge, over {host}s: {agree}/{total}, {verdict} the oracle")
    report(3, ok, f"{len(graphs)} graphs x 2 signs: {summary}", tuple(notes))
    assert ok, bad


# -- 4 -----------------------------------------------------------------------


def test_criterion_4_criticality_bridge(report):
    graphs = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 5 and nx.is_connected(g)]
    checked = violations = skipped = 0
    for g in graphs:
        names = {v: f"v{v}" for v in g}
        G = BidirectedGraph(
            names.values(), [Edge.make(f"e{i}", names[u], PLUS, names[v], PLUS) for i, (u, v) in enumerate(g.edges())]
        )
        b = {v: 1 for v in G.vertices}
        for r in G.sorted_vertices():
            try:
                holds = criticality_crosscheck(G, b, r)
            except PreconditionError:
                skipped += 1
                continue
            checked += 1
            violations += not holds
    report(
        4,
        violations == 0,
        f"{len(graphs)} connected simple graphs, {checked} admissible roots, {violations} violations "
        f"({skipped} roots without a lowered factor skipped)",
    )
    assert violations == 0


# -- 5 -----------------------------------------------------------------------


def test_criterion_5_scc_machinery(report):
    poset_bad = extract_bad = dipath_bad = pairs = 0
    for seed in range(200):
        rng = random.Random(f"acceptance-5:{seed}")
        n = rng.randint(1, 5)
        order = random_poset(rng, n)
        alpha = rng.choice(SIGNS)
        pieces = []
        for i in range(n):
            k = rng.randint(1, 4)
            verts = [f"p{i}v{j}" for j in range(k)]
            counter = iter(range(100))
            prog = random_strong_piece(rng, verts, rng.randint(k, 2 * k), lambda i=i: f"p{i}a{next(counter)}")
            pieces.append(strong_ears_build(prog))
        G = realize_poset(pieces, order, alpha)
        P = scc_poset(G, alpha)
        comps = [p.vertices for p in pieces]
        poset_bad += not P.same_as(comps, [(comps[i], comps[j]) for i, j in order])
        for u, v in permutations(G.sorted_vertices(), 2):
            pairs += 1
            leq = P.leq(P.component_of(u), P.component_of(v))
            dipath_bad += leq != (exists_ditrail(G, u, v, (alpha, -alpha)) is not None)

        k = rng.randint(1, 5)
        prog = random_strong_piece(rng, [f"w{j}" for j in range(k)], rng.randint(k, 2 * k + 1))
        H = strong_ears_build(prog)
        extract_bad += strong_ears_build(strong_ears_extract(H)) != H
    ok = not (poset_bad or extract_bad or dipath_bad)
    report(
        5,
        ok,
        f"200 posets: {poset_bad} order mismatches; 200 ear programs: {extract_bad} mismatches; "
        f"{pairs} vertex pairs: {dipath_bad} reachability disagreements",
    )
    assert ok


# -- 6 -----------------------------------------------------------------------


def test_criterion_6_oracle_self_check(report):
    graphs = _small_graphs()
    disagree = unsound = queries = walk_only = 0
    for G in graphs:
        for x in G.sorted_vertices():
            for t in G.sorted_vertices():
                naive = ditrail_types(G, x, t)
                for c in PAIRS:
                    queries += 1
                    trail = exists_ditrail(G, x, t, c) is not None
                    disagree += trail != (c in naive)
                    walk = diwalk_reachable(G, x, t, c)
                    unsound += trail and not walk
                    walk_only += walk and not trail
    ok = disagree == 0 and unsound == 0
    report(
        6,
        ok,
        f"{queries} queries on {len(graphs)} graphs: {disagree} oracle disagreements, "
        f"{unsound} filter misses; diwalk-only reachability in {walk_only} queries",
    )
    assert ok
