"""Bidirected multigraphs, walks, and sign-aware walk validation."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, NamedTuple

import networkx as nx

from .errors import GraphError, WalkError


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value

    def __lt__(self, other: Sign) -> bool:
        # "+" sorts before "-"
        return self is Sign.PLUS and other is Sign.MINUS

    @classmethod
    def of(cls, value: Sign | str) -> Sign:
        if isinstance(value, Sign):
            return value
        try:
            return cls(value)
        except ValueError:
            raise GraphError(f"not a sign: {value!r}") from None


PLUS = Sign.PLUS
MINUS = Sign.MINUS


class End(NamedTuple):
    vertex: str
    sign: Sign


class EdgeKind(enum.Enum):
    PLUS_PLUS = "(+,+)"
    MINUS_MINUS = "(-,-)"
    MIXED = "(+,-)"

    @classmethod
    def homogeneous(cls, sign: Sign) -> EdgeKind:
        return cls.PLUS_PLUS if sign is PLUS else cls.MINUS_MINUS


@dataclass(frozen=True)
class Edge:
    """An edge with two ordered end slots; slot order is part of the identity."""

    id: str
    ends: tuple[End, End]

    @classmethod
    def make(cls, id: str, u: str, su: Sign | str, v: str, sv: Sign | str) -> Edge:
        return cls(str(id), (End(str(u), Sign.of(su)), End(str(v), Sign.of(sv))))

    @property
    def is_loop(self) -> bool:
        return self.ends[0].vertex == self.ends[1].vertex

    @property
    def kind(self) -> EdgeKind:
        s0, s1 = self.ends[0].sign, self.ends[1].sign
        return EdgeKind.homogeneous(s0) if s0 is s1 else EdgeKind.MIXED

    @property
    def vertices(self) -> tuple[str, str]:
        return self.ends[0].vertex, self.ends[1].vertex

    def is_homogeneous(self, sign: Sign) -> bool:
        """True for an (sign, sign)-edge."""
        return self.ends[0].sign is sign and self.ends[1].sign is sign

    def other(self, v: str) -> str:
        a, b = self.vertices
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v!r} is not an end of edge {self.id!r}")

    def sign_at(self, v: str) -> Sign:
        """Sign of non-loop end ``v``; loops have no single sign at their vertex."""
        if self.is_loop:
            raise GraphError(f"edge {self.id!r} is a loop; its sign at {v!r} depends on the slot")
        for end in self.ends:
            if end.vertex == v:
                return end.sign
        raise GraphError(f"vertex {v!r} is not an end of edge {self.id!r}")

    def has_sign_at(self, v: str, sign: Sign) -> bool:
        return any(end.vertex == v and end.sign is sign for end in self.ends)


class Move(NamedTuple):
    """One way to traverse an edge away from a vertex."""

    edge: str
    slot: int  # slot departed from
    depart: Sign
    head: str
    arrive: Sign


class EdgeClass(NamedTuple):
    kind: EdgeKind
    is_loop: bool

    @property
    def is_mixed_loop(self) -> bool:
        return self.is_loop and self.kind is EdgeKind.MIXED


def _coerce_edge(item) -> Edge:
    if isinstance(item, Edge):
        return item
    eid, a, b = item
    return Edge(str(eid), (End(str(a[0]), Sign.of(a[1])), End(str(b[0]), Sign.of(b[1]))))


class BidirectedGraph:
    """Finite bidirected multigraph. Immutable; all surgery returns new graphs.

    ``edges`` may be given as :class:`Edge` objects, ``(id, (u, su), (v, sv))``
    triples, or a mapping ``id -> ((u, su), (v, sv))``.
    """

    def __init__(self, vertices: Iterable[str] = (), edges=()):
        if isinstance(edges, Mapping):
            edges = [(k, *v) for k, v in edges.items()]
        vs = frozenset(str(v) for v in vertices)
        es: dict[str, Edge] = {}
        for item in edges:
            e = _coerce_edge(item)
            if e.id in es:
                raise GraphError(f"duplicate edge id {e.id!r}")
            for end in e.ends:
                if end.vertex not in vs:
                    raise GraphError(f"edge {e.id!r} references unknown vertex {end.vertex!r}")
            es[e.id] = e
        self._vertices = vs
        self._edges = dict(sorted(es.items()))

    # -- basic access -------------------------------------------------------

    @property
    def vertices(self) -> frozenset[str]:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, Edge]:
        return self._edges

    def edge(self, eid: str) -> Edge:
        try:
            return self._edges[eid]
        except KeyError:
            raise GraphError(f"unknown edge id {eid!r}") from None

    def edge_ids(self) -> frozenset[str]:
        return frozenset(self._edges)

    def sorted_vertices(self) -> list[str]:
        return sorted(self._vertices)

    def __contains__(self, v: str) -> bool:
        return v in self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, BidirectedGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, tuple(self._edges.values())))

    def __repr__(self) -> str:
        es = ", ".join(
            f"{e.id}:({e.ends[0].sign}{e.ends[0].vertex},{e.ends[1].sign}{e.ends[1].vertex})"
            for e in self._edges.values()
        )
        return f"BidirectedGraph({{{', '.join(self.sorted_vertices())}}}; {es})"

    def check_vertex(self, v: str) -> None:
        if v not in self._vertices:
            raise GraphError(f"unknown vertex {v!r}")

    def check_vertices(self, xs: Iterable[str]) -> frozenset[str]:
        xs = frozenset(xs)
        missing = xs - self._vertices
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing)}")
        return xs

    # -- incidence ----------------------------------------------------------

    @cached_property
    def _moves(self) -> dict[str, tuple[Move, ...]]:
        out: dict[str, list[Move]] = {v: [] for v in self._vertices}
        for e in self._edges.values():
            (u, su), (v, sv) = e.ends
            out[u].append(Move(e.id, 0, su, v, sv))
            if e.is_loop and su is sv:
                # both slots give the same signed traversal
                continue
            out[v].append(Move(e.id, 1, sv, u, su))
        return {v: tuple(ms) for v, ms in out.items()}

    def moves(self, v: str) -> tuple[Move, ...]:
        """Traversals leaving ``v``, ordered by edge id then slot."""
        return self._moves[v]

    def incident(self, v: str) -> list[Edge]:
        """Edges with at least one end at ``v`` (loops listed once)."""
        return [e for e in self._edges.values() if v in e.vertices]

    def loops_at(self, v: str) -> list[Edge]:
        return [e for e in self._edges.values() if e.is_loop and e.ends[0].vertex == v]

    def degree(self, v: str) -> int:
        """Number of edge ends at ``v``; loops count twice."""
        return sum((e.ends[0].vertex == v) + (e.ends[1].vertex == v) for e in self._edges.values())

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self._vertices)
        for e in self._edges.values():
            g.add_edge(*e.vertices, key=e.id)
        return g

    def components(self) -> list[frozenset[str]]:
        """Connected components, sorted by least vertex."""
        comps = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=min)

    def is_connected(self) -> bool:
        return len(self._vertices) > 0 and len(self.components()) == 1

    # -- surgery ------------------------------------------------------------

    def remove_edges(self, ids: Iterable[str]) -> BidirectedGraph:
        ids = frozenset(ids)
        missing = ids - self._edges.keys()
        if missing:
            raise GraphError(f"unknown edge ids {sorted(missing)}")
        return BidirectedGraph(self._vertices, [e for e in self._edges.values() if e.id not in ids])

    def induced(self, xs: Iterable[str]) -> BidirectedGraph:
        xs = self.check_vertices(xs)
        return BidirectedGraph(
            xs, [e for e in self._edges.values() if e.ends[0].vertex in xs and e.ends[1].vertex in xs]
        )

    def remove_vertices(self, xs: Iterable[str]) -> BidirectedGraph:
        """``G - X``: the subgraph induced by the complement of ``X``."""
        xs = self.check_vertices(xs)
        return self.induced(self._vertices - xs)

    def add(self, vertices: Iterable[str] = (), edges: Iterable[Edge] = ()) -> BidirectedGraph:
        return BidirectedGraph(self._vertices | set(vertices), [*self._edges.values(), *edges])

    def union(self, other: BidirectedGraph) -> BidirectedGraph:
        """``G1 + G2``; shared edge ids must denote identical edges."""
        edges = dict(self._edges)
        for e in other:
            if e.id in edges and edges[e.id] != e:
                raise GraphError(f"edge id {e.id!r} denotes different edges in the two graphs")
            edges[e.id] = e
        return BidirectedGraph(self._vertices | other._vertices, edges.values())

    def is_subgraph_of(self, other: BidirectedGraph) -> bool:
        return self._vertices <= other._vertices and all(
            other._edges.get(e.id) == e for e in self._edges.values()
        )


def classify_edge(G: BidirectedGraph, eid: str) -> EdgeClass:
    e = G.edge(eid)
    return EdgeClass(e.kind, e.is_loop)


def cut(G: BidirectedGraph, xs: Iterable[str]) -> frozenset[str]:
    """Ids of edges with exactly one end in ``xs``."""
    xs = G.check_vertices(xs)
    return frozenset(
        e.id for e in G if (e.ends[0].vertex in xs) != (e.ends[1].vertex in xs)
    )


def blocks_over(G: BidirectedGraph, v: str) -> list[BidirectedGraph]:
    """Blocks of ``G`` over ``v``, one per component of ``G - v``.

    With fewer than two components the whole graph is the only block. Loops at
    ``v`` go to the first block (ordered by least vertex), so the returned edge
    sets partition ``E(G)``.
    """
    G.check_vertex(v)
    if not G.is_connected():
        raise GraphError("blocks_over requires a connected graph")
    comps = G.remove_vertices({v}).components()
    if len(comps) < 2:
        return [G]
    root_loops = {e.id for e in G.loops_at(v)}
    blocks = []
    for i, comp in enumerate(comps):
        sub = G.induced(comp | {v})
        if i > 0 and root_loops:
            sub = sub.remove_edges(root_loops)
        blocks.append(sub)
    return blocks


# -- walks --------------------------------------------------------------------


@dataclass(frozen=True)
class Walk:
    """Alternating vertex/edge sequence ``(v1, e2, v3, ..., vk)``.

    ``slots[i]`` is the end slot the ``i``-th edge occurrence departs from, or
    ``None`` when unrecorded (only ever ambiguous for mixed loops).
    """

    terms: tuple[str, ...]
    slots: tuple[int | None, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        terms = tuple(str(t) for t in self.terms)
        if len(terms) % 2 == 0:
            raise WalkError(f"a walk has odd length, got {len(terms)}")
        object.__setattr__(self, "terms", terms)
        n = len(terms) // 2
        slots = (None,) * n if self.slots is None else tuple(self.slots)
        if len(slots) != n:
            raise WalkError(f"expected {n} slot entries, got {len(slots)}")
        if any(s not in (None, 0, 1) for s in slots):
            raise WalkError(f"slots must be 0, 1 or None: {slots}")
        object.__setattr__(self, "slots", slots)

    @classmethod
    def of(cls, *terms: str) -> Walk:
        return cls(terms)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.terms[::2]

    @property
    def edges(self) -> tuple[str, ...]:
        return self.terms[1::2]

    @property
    def start(self) -> str:
        return self.terms[0]

    @property
    def end(self) -> str:
        return self.terms[-1]

    @property
    def is_trivial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_closed(self) -> bool:
        return self.terms[0] == self.terms[-1]

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        return "(" + ", ".join(self.terms) + ")"


def reverse(W: Walk) -> Walk:
    return Walk(W.terms[::-1], tuple(None if s is None else 1 - s for s in W.slots[::-1]))


def concat(W1: Walk, W2: Walk) -> Walk:
    if W1.end != W2.start:
        raise WalkError(f"cannot concatenate: {W1.end!r} != {W2.start!r}")
    return Walk(W1.terms + W2.terms[1:], W1.slots + W2.slots)


def subwalk(W: Walk, i: int, j: int) -> Walk:
    """Subwalk between vertex positions ``i <= j`` (indices into ``W.vertices``)."""
    return Walk(W.terms[2 * i : 2 * j + 1], W.slots[i:j])


@dataclass(frozen=True)
class DiwalkInfo:
    """Result of :func:`validate_diwalk`. ``None`` signs mark the trivial walk."""

    is_diwalk: bool
    is_ditrail: bool
    is_dipath: bool
    start_sign: Sign | None
    end_sign: Sign | None
    slots: tuple[int, ...] | None = None

    @property
    def trivial(self) -> bool:
        return self.is_diwalk and self.start_sign is None

    def is_type(self, start: Sign | None = None, end: Sign | None = None) -> bool:
        """Whether the diwalk is a ``(start, end)``-diwalk; ``None`` matches either sign."""
        if not self.is_diwalk:
            return False
        if self.trivial:
            # the trivial walk is a (+,-)- and a (-,+)-ditrail, never (s,s)
            return start is None or end is None or start is not end
        return (start is None or start is self.start_sign) and (end is None or end is self.end_sign)


_NOT_DIWALK = DiwalkInfo(False, False, False, None, None)


def _edge_options(G: BidirectedGraph, W: Walk) -> list[list[tuple[int, Sign, Sign]]]:
    """Per edge occurrence, the admissible (slot, depart sign, arrive sign) triples."""
    options = []
    for i, (eid, slot) in enumerate(zip(W.edges, W.slots)):
        u, v = W.vertices[i], W.vertices[i + 1]
        for x in (u, v):
            if x not in G:
                raise WalkError(f"walk vertex {x!r} is not in the graph")
        e = G.edge(eid) if eid in G.edges else None
        if e is None:
            raise WalkError(f"walk edge {eid!r} is not in the graph")
        if {u, v} != set(e.vertices) or (u == v) != e.is_loop:
            raise WalkError(f"edge {eid!r} does not join {u!r} and {v!r}")
        if slot is not None:
            if e.ends[slot].vertex != u:
                raise WalkError(f"edge {eid!r} slot {slot} is not at {u!r}")
            cands = [slot]
        elif e.is_loop:
            cands = [0, 1]
        else:
            cands = [0 if e.ends[0].vertex == u else 1]
        options.append([(s, e.ends[s].sign, e.ends[1 - s].sign) for s in cands])
    return options


def validate_diwalk(G: BidirectedGraph, W: Walk) -> DiwalkInfo:
    """Decide whether ``W`` is a diwalk / ditrail / dipath and report its end signs.

    Raises :class:`WalkError` if ``W`` is not a walk of ``G`` at all.
    """
    if W.is_trivial:
        G.check_vertex(W.start)
        return DiwalkInfo(True, True, True, None, None, ())
    options = _edge_options(G, W)
    n = len(options)
    # backward feasibility: ok[i] = options at i that admit a valid continuation
    ok: list[list[tuple[int, Sign, Sign]]] = [[] for _ in range(n)]
    ok[n - 1] = list(options[n - 1])
    for i in range(n - 2, -1, -1):
        nxt = {dep for _, dep, _ in ok[i + 1]}
        ok[i] = [o for o in options[i] if (-o[2]) in nxt]
    if not ok[0]:
        return _NOT_DIWALK
    chosen = [ok[0][0]]
    for i in range(1, n):
        need = -chosen[-1][2]
        chosen.append(next(o for o in ok[i] if o[1] is need))
    is_ditrail = len(set(W.edges)) == n
    is_dipath = is_ditrail and len(set(W.vertices)) == len(W.vertices)
    return DiwalkInfo(
        True, is_ditrail, is_dipath, chosen[0][1], chosen[-1][2], tuple(o[0] for o in chosen)
    )


def with_slots(G: BidirectedGraph, W: Walk) -> Walk:
    """Return ``W`` with every slot recorded (raises if ``W`` is not a diwalk)."""
    info = validate_diwalk(G, W)
    if not info.is_diwalk:
        raise WalkError(f"{W} is not a diwalk")
    return Walk(W.terms, info.slots)


def walk_graph(G: BidirectedGraph, W: Walk) -> BidirectedGraph:
    """The subgraph formed by the vertices and edges of ``W``."""
    return BidirectedGraph(W.vertices, [G.edge(e) for e in set(W.edges)])


def remove_edges(G: BidirectedGraph, F: Iterable[str]) -> BidirectedGraph:
    return G.remove_edges(F)


def induced(G: BidirectedGraph, X: Iterable[str]) -> BidirectedGraph:
    return G.induced(X)


class Refutation:
    """A negative answer with a human-readable reason and optional witness.

    Falsy, so ``if decompose_linear(G, r, a): ...`` reads naturally.
    """

    __slots__ = ("reason", "witness")

    def __init__(self, reason: str, witness=None):
        self.reason = reason
        self.witness = witness

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"Refutation({self.reason!r})"

    def __str__(self) -> str:
        return self.reason
