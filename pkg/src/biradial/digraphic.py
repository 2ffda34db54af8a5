"""Digraphic bidirected graphs: strong components, their order, ears, flowgraphs.

A digraphic graph is read as a digraph by taking the ``alpha``-signed end of
each edge as the tail. Strong components do not depend on ``alpha``; the order
between them is reversed when ``alpha`` flips.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import networkx as nx

from .core import BidirectedGraph, Edge, EdgeKind, Sign, Walk, validate_diwalk, PLUS
from .errors import GraphError, PreconditionError, ReplayError


def is_digraphic(G: BidirectedGraph) -> bool:
    return all(e.kind is EdgeKind.MIXED for e in G)


def arcs(G: BidirectedGraph, alpha: Sign) -> list[tuple[str, str, str]]:
    """``(tail, head, edge id)`` for every non-loop edge, tail = ``alpha`` end."""
    out = []
    for e in G:
        if e.is_loop:
            continue
        (u, su), (v, _) = e.ends
        out.append((u, v, e.id) if su is alpha else (v, u, e.id))
    return out


def to_digraph(G: BidirectedGraph, alpha: Sign = PLUS) -> nx.MultiDiGraph:
    if not is_digraphic(G):
        raise PreconditionError("graph is not digraphic")
    d = nx.MultiDiGraph()
    d.add_nodes_from(G.vertices)
    for u, v, eid in arcs(G, alpha):
        d.add_edge(u, v, key=eid)
    for e in G:
        if e.is_loop:
            d.add_edge(e.ends[0].vertex, e.ends[0].vertex, key=e.id)
    return d


@dataclass(frozen=True)
class SccPoset:
    """Strong components and the reflexive-transitive order between them."""

    components: tuple[frozenset[str], ...]
    order: frozenset[tuple[frozenset[str], frozenset[str]]]
    alpha: Sign

    def component_of(self, v: str) -> frozenset[str]:
        for c in self.components:
            if v in c:
                return c
        raise GraphError(f"unknown vertex {v!r}")

    def leq(self, c: frozenset[str], d: frozenset[str]) -> bool:
        return (c, d) in self.order

    def maximal(self) -> list[frozenset[str]]:
        return [c for c in self.components if not any(c != d and self.leq(c, d) for d in self.components)]

    def maximum(self) -> frozenset[str] | None:
        top = [c for c in self.components if all(self.leq(d, c) for d in self.components)]
        return top[0] if top else None

    def same_as(self, components: Iterable[Iterable[str]], order: Iterable[tuple]) -> bool:
        comps = {frozenset(c) for c in components}
        rel = {(frozenset(a), frozenset(b)) for a, b in order} | {(c, c) for c in comps}
        return comps == set(self.components) and rel == set(self.order)

    def to_json(self) -> dict:
        def key(c):
            return sorted(c)

        return {
            "alpha": self.alpha.value,
            "components": [sorted(c) for c in self.components],
            "order": sorted([key(a), key(b)] for a, b in self.order if a != b),
        }


def scc_poset(G: BidirectedGraph, alpha: Sign = PLUS) -> SccPoset:
    d = to_digraph(G, alpha)
    comps = sorted((frozenset(c) for c in nx.strongly_connected_components(d)), key=min)
    where = {v: c for c in comps for v in c}
    cond = nx.DiGraph()
    cond.add_nodes_from(comps)
    cond.add_edges_from((where[u], where[v]) for u, v in d.edges() if where[u] != where[v])
    order = {(c, c) for c in comps}
    for c in comps:
        order.update((c, t) for t in nx.descendants(cond, c))
    return SccPoset(tuple(comps), frozenset(order), alpha)


def is_strongly_connected(G: BidirectedGraph) -> bool:
    return len(G) > 0 and len(scc_poset(G).components) == 1


def is_flowgraph(G: BidirectedGraph, r: str, alpha: Sign = PLUS) -> bool:
    """Whether every vertex has a directed trail to ``r`` (``alpha`` end = tail)."""
    G.check_vertex(r)
    top = scc_poset(G, alpha).maximum()
    return top is not None and r in top


def _check_partial_order(n: int, order: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    rel = {(i, i) for i in range(n)}
    for i, j in order:
        if not (0 <= i < n and 0 <= j < n):
            raise PreconditionError(f"order pair {(i, j)} out of range")
        rel.add((i, j))
    for i, j in rel:
        if i != j and (j, i) in rel:
            raise PreconditionError(f"order is not antisymmetric at {(i, j)}")
    for (i, j), (k, l) in product(rel, rel):
        if j == k and (i, l) not in rel:
            raise PreconditionError(f"order is not transitive: {(i, j)}, {(k, l)}")
    return rel


def covering_pairs(n: int, order: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Pairs ``i < j`` in the order with nothing strictly between them."""
    rel = _check_partial_order(n, order)
    dag = nx.DiGraph()
    dag.add_nodes_from(range(n))
    dag.add_edges_from((i, j) for i, j in rel if i != j)
    return sorted(nx.transitive_reduction(dag).edges())


def realize_poset(
    pieces: Sequence[BidirectedGraph],
    order: Iterable[tuple[int, int]],
    alpha: Sign = PLUS,
    extra: Iterable[tuple[str, str, str]] = (),
) -> BidirectedGraph:
    """Join strongly connected ``pieces`` so their strong-component order is ``order``.

    ``order`` holds index pairs ``(i, j)`` meaning piece ``i`` precedes piece
    ``j``. One arc, between the least vertices, is added per covering pair.
    ``extra`` holds ``(edge id, tail, head)`` arcs, each required to respect
    the order.
    """
    pieces = list(pieces)
    seen_v: set[str] = set()
    seen_e: set[str] = set()
    for i, p in enumerate(pieces):
        if not is_digraphic(p) or not is_strongly_connected(p):
            raise PreconditionError(f"piece {i} is not a strongly connected digraphic graph")
        if seen_v & p.vertices or seen_e & p.edge_ids():
            raise PreconditionError(f"piece {i} overlaps an earlier piece")
        seen_v |= p.vertices
        seen_e |= p.edge_ids()
    order = list(order)
    rel = _check_partial_order(len(pieces), order)
    owner = {v: i for i, p in enumerate(pieces) for v in p.vertices}
    new: list[Edge] = []
    for i, j in covering_pairs(len(pieces), order):
        eid = f"poset:{i}<{j}"
        if eid in seen_e:
            raise PreconditionError(f"edge id {eid!r} already used by a piece")
        new.append(Edge.make(eid, min(pieces[i].vertices), alpha, min(pieces[j].vertices), -alpha))
    for eid, tail, head in extra:
        if tail not in owner or head not in owner:
            raise PreconditionError(f"extra arc {eid!r} has an end outside every piece")
        if (owner[tail], owner[head]) not in rel:
            raise PreconditionError(f"extra arc {eid!r} goes against the order")
        new.append(Edge.make(eid, tail, alpha, head, -alpha))
    out = BidirectedGraph(seen_v, [e for p in pieces for e in p])
    return out.add(edges=new)


# -- ear decomposition of strongly connected graphs ---------------------------


@dataclass(frozen=True)
class DigraphEar:
    walk: Walk
    edges: tuple[Edge, ...]


@dataclass(frozen=True)
class EarProgramD:
    """Single base vertex followed by ditrails attached to the graph built so far."""

    base: str
    ears: tuple[DigraphEar, ...] = ()


def strong_ears_build(p: EarProgramD) -> BidirectedGraph:
    H = BidirectedGraph([p.base])
    for i, ear in enumerate(p.ears):
        W = ear.walk
        if W.is_trivial:
            raise ReplayError("ear", i, "trivial ear adds nothing")
        if set(W.edges) != {e.id for e in ear.edges} or len(ear.edges) != len(W.edges):
            raise ReplayError("ear", i, "edge records do not match the walk's edges")
        if any(e.id in H.edges for e in ear.edges):
            raise ReplayError("ear", i, "ear reuses an existing edge")
        if any(e.kind is not EdgeKind.MIXED for e in ear.edges):
            raise ReplayError("ear", i, "ear has a non-digraphic edge")
        if W.start not in H or W.end not in H:
            raise ReplayError("ear", i, "ear ends are not on the current graph")
        if any(v in H for v in W.vertices[1:-1]):
            raise ReplayError("ear", i, "ear interior meets the current graph")
        try:
            G = H.add(W.vertices, ear.edges)
        except GraphError as exc:
            raise ReplayError("ear", i, str(exc)) from None
        if not validate_diwalk(G, W).is_ditrail:
            raise ReplayError("ear", i, "ear is not a ditrail")
        H = G
    return H


def strong_ears_extract(G: BidirectedGraph) -> EarProgramD:
    """Ear program of a strongly connected digraphic graph whose replay is ``G``."""
    if not is_digraphic(G):
        raise PreconditionError("graph is not digraphic")
    if not is_strongly_connected(G):
        raise PreconditionError("graph is not strongly connected")
    base = min(G.vertices)
    inside = {base}
    used: set[str] = set()
    out_arcs: dict[str, list[tuple[str, str]]] = {v: [] for v in G.vertices}
    for u, v, eid in sorted(arcs(G, PLUS), key=lambda a: a[2]):
        out_arcs[u].append((eid, v))
    ears = []

    def ear_of(path: list[tuple[str, str, str]]) -> DigraphEar:
        terms = [path[0][0]]
        for u, v, eid in path:
            terms += [eid, v]
        W = Walk(terms)
        return DigraphEar(Walk(terms, validate_diwalk(G, W).slots), tuple(G.edge(e) for _, _, e in path))

    while inside != G.vertices:
        # least arc leaving the current graph, then a shortest way back
        tail, eid, head = min(
            ((u, eid, v) for u in inside for eid, v in out_arcs[u] if v not in inside),
            key=lambda a: a[1],
        )
        parent: dict[str, tuple[str, str]] = {head: (tail, eid)}
        queue = [head]
        stop = None
        while stop is None:
            nxt = []
            for u in queue:
                for e2, v in out_arcs[u]:
                    if v in inside:
                        stop = (u, e2, v)
                        break
                    if v not in parent:
                        parent[v] = (u, e2)
                        nxt.append(v)
                if stop:
                    break
            queue = nxt
        u, e2, z = stop
        path = [(u, z, e2)]
        while u in parent:  # parent only holds vertices outside the current graph
            pu, pe = parent[u]
            path.append((pu, u, pe))
            u = pu
        path.reverse()
        ears.append(ear_of(path))
        for a, b, e in path:
            inside.update((a, b))
            used.add(e)
    for e in G:
        if e.id in used:
            continue
        if e.is_loop:
            v = e.ends[0].vertex
            W = Walk((v, e.id, v), (0,))
        else:
            (u, su), (v, _) = e.ends
            W = Walk((u, e.id, v)) if su is PLUS else Walk((v, e.id, u))
            W = Walk(W.terms, validate_diwalk(G, W).slots)
        ears.append(DigraphEar(W, (e,)))
    return EarProgramD(base, tuple(ears))
