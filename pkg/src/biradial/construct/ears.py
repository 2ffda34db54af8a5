"""Diears, ear programs, and ear extraction for absolute semiradials and strong radials."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from ..core import (
    BidirectedGraph,
    Edge,
    Refutation,
    Sign,
    Walk,
    concat,
    cut,
    validate_diwalk,
    walk_graph,
)
from ..errors import GraphError, PreconditionError, ReplayError, WalkError
from ..radials import ClassLabel, refute
from ..reach import DEFAULT_BUDGET, exists_closed_ditrail, exists_ditrail

SIMPLE = "simple"
SCOOP = "scoop"


class EarMode(enum.Enum):
    """Which edges an ear must avoid when attached to a subgraph ``H``."""

    SUBGRAPH = "subgraph"  # E(H)
    INDUCED = "induced"  # E(G[V(H)])


@dataclass(frozen=True)
class DiEar:
    walk: Walk
    kind: str
    grip: str | None
    relative_to: frozenset[str]
    mode: EarMode = EarMode.SUBGRAPH


def validate_diear(
    G: BidirectedGraph,
    reference: BidirectedGraph | Iterable[str],
    W: Walk,
    mode: EarMode = EarMode.SUBGRAPH,
) -> DiEar | Refutation:
    """Classify ``W`` as a simple or scoop diear relative to ``reference``.

    A vertex-set reference always means edges of the induced subgraph must be
    avoided; a subgraph reference follows ``mode``.
    """
    if isinstance(reference, BidirectedGraph):
        if not reference.is_subgraph_of(G):
            return Refutation("reference is not a subgraph of the graph")
        X = reference.vertices
        avoid = reference.edge_ids() if mode is EarMode.SUBGRAPH else G.induced(X).edge_ids()
    else:
        X = frozenset(reference)
        if not X <= G.vertices:
            return Refutation("reference vertices are not in the graph")
        avoid = G.induced(X).edge_ids()
        mode = EarMode.INDUCED
    if W.start not in X or W.end not in X:
        return Refutation("ends are not in the reference set")
    shared = set(W.edges) & avoid
    if shared:
        return Refutation(f"uses reference edges {sorted(shared)}")
    try:
        info = validate_diwalk(G, W)
    except (WalkError, GraphError) as exc:
        return Refutation(f"not a walk: {exc}")
    if not info.is_diwalk:
        return Refutation("not a diwalk")
    W = Walk(W.terms, info.slots)
    if info.is_ditrail:
        return DiEar(W, SIMPLE, None, X, mode)
    if len(W) < 7:
        return Refutation("repeats an edge but is too short to be a scoop")
    v, grip = W.terms[0], W.terms[1]
    if W.terms[-1] != v or W.terms[-2] != grip:
        return Refutation("repeats an edge but is not shaped as a scoop")
    if grip not in cut(G, X):
        return Refutation(f"grip {grip} is not in the cut of the reference")
    inner = Walk(W.terms[2:-2], W.slots[1:-1])
    inner_info = validate_diwalk(G, inner)
    if not (inner.is_closed and inner_info.is_ditrail) or grip in inner.edges:
        return Refutation("scoop interior is not a closed ditrail avoiding the grip")
    return DiEar(W, SCOOP, grip, X, mode)


# -- ear programs -------------------------------------------------------------


@dataclass(frozen=True)
class ProgramEar:
    """One construction step: the ear's walk plus records of the edges it adds."""

    walk: Walk
    edges: tuple[Edge, ...]
    kind: str = SIMPLE
    grip: str | None = None


@dataclass(frozen=True)
class EarProgram:
    """Ear construction from the single vertex ``root``.

    With ``initial`` set (and ``alpha``), the program builds a strong
    ``alpha``-radial: the initial ear is a closed ``(-alpha, -alpha)``-ditrail
    over the root. Without it, the program builds an absolute semiradial.
    """

    root: str
    ears: tuple[ProgramEar, ...] = ()
    initial: ProgramEar | None = None
    alpha: Sign | None = None

    @property
    def is_strong(self) -> bool:
        return self.initial is not None


def _ear_step(H: BidirectedGraph, ear: ProgramEar, rule: str, index: int | None) -> tuple[BidirectedGraph, DiEar]:
    W = ear.walk
    ids = [e.id for e in ear.edges]
    if len(set(ids)) != len(ids) or set(ids) != set(W.edges):
        raise ReplayError(rule, index, "edge records do not match the walk's edges")
    reused = [i for i in ids if i in H.edges]
    if reused:
        raise ReplayError(rule, index, f"edges {reused} already exist")
    try:
        G = H.add(W.vertices, ear.edges)
    except GraphError as exc:
        raise ReplayError(rule, index, str(exc)) from None
    d = validate_diear(G, H, W, EarMode.SUBGRAPH)
    if not d:
        raise ReplayError(rule, index, f"not a diear: {d.reason}")
    if d.kind != ear.kind or d.grip != ear.grip:
        raise ReplayError(rule, index, f"declared {ear.kind} ear (grip {ear.grip}) is {d.kind} (grip {d.grip})")
    return G, d


def replay_ear_program(p: EarProgram) -> BidirectedGraph:
    H = BidirectedGraph([p.root])
    if p.initial is not None:
        if p.alpha is None:
            raise ReplayError("initial", None, "strong program needs alpha")
        W = p.initial.walk
        if W.start != p.root or W.end != p.root:
            raise ReplayError("initial", None, "initial ear is not closed over the root")
        H, d = _ear_step(H, p.initial, "initial", None)
        info = validate_diwalk(H, d.walk)
        a = p.alpha
        if d.kind != SIMPLE or W.is_trivial or not info.is_type(-a, -a):
            raise ReplayError("initial", None, f"initial ear is not a simple ({-a},{-a})-diear")
    for i, ear in enumerate(p.ears):
        H, _ = _ear_step(H, ear, "ear", i)
    return H


def to_program_ear(G: BidirectedGraph, d: DiEar) -> ProgramEar:
    return ProgramEar(d.walk, tuple(G.edge(e) for e in dict.fromkeys(d.walk.edges)), d.kind, d.grip)


# -- extraction ---------------------------------------------------------------


def _arrival_signs(G: BidirectedGraph, W: Walk) -> list[Sign]:
    return [G.edge(e).ends[1 - s].sign for e, s in zip(W.edges, W.slots)]


def find_diear(
    G: BidirectedGraph,
    H: BidirectedGraph,
    r: str,
    *,
    check: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> DiEar:
    """A diear of ``G`` relative to the proper subgraph ``H``; both absolute semiradials at ``r``.

    When ``H`` misses vertices, the ear leaves ``H`` through the least cut edge
    ``e = xy`` and follows an oracle ditrail from ``y`` to the root that departs
    ``y`` against ``e``'s sign there. The ditrail is cut at its first vertex in
    ``H``, giving a simple ear, unless it first returns to ``y`` arriving with
    the sign opposite to ``e``'s, which closes a scoop with grip ``e``.
    """
    if check:
        if r not in H or not H.is_subgraph_of(G):
            raise PreconditionError("H must be a subgraph of G containing the root")
        if H == G:
            raise PreconditionError("H equals G; there is nothing left to attach")
        for name, graph in (("G", G), ("H", H)):
            bad = refute(graph, r, None, ClassLabel.ABSOLUTE_SEMIRADIAL, budget=budget)
            if bad is not None:
                raise PreconditionError(f"{name} is not an absolute semiradial: {bad}")

    if H.vertices == G.vertices:
        e = G.edge(min(G.edge_ids() - H.edge_ids()))
        u, v = e.vertices
        W = Walk((u, e.id, v), (0,))
    else:
        e = G.edge(min(cut(G, H.vertices)))
        x_slot = 0 if e.ends[0].vertex in H else 1
        x, y = e.ends[x_slot].vertex, e.ends[1 - x_slot].vertex
        gamma = e.ends[1 - x_slot].sign
        P = exists_ditrail(G, y, r, (-gamma, None), budget=budget)
        if P is None:
            raise PreconditionError(f"no {-gamma}-ditrail from {y} to {r}; G is not an absolute semiradial")
        P = P.walk
        arrivals = _arrival_signs(G, P)
        out = Walk((x, e.id, y), (x_slot,))
        for i in range(1, len(P.vertices)):
            z = P.vertices[i]
            if z in H:
                W = concat(out, Walk(P.terms[: 2 * i + 1], P.slots[:i]))
                break
            # returning to y arriving against the grip's sign there closes a scoop;
            # e itself can only be met after such a return, so the ear stays edge-valid
            if z == y and arrivals[i - 1] is -gamma:
                body = concat(out, Walk(P.terms[: 2 * i + 1], P.slots[:i]))
                W = concat(body, Walk((y, e.id, x), (1 - x_slot,)))
                break
        else:  # pragma: no cover - P ends at the root, which is in H
            raise AssertionError("ditrail never reached H")
    d = validate_diear(G, H, W, EarMode.SUBGRAPH)
    if not d:
        raise AssertionError(f"constructed ear {W} is invalid: {d.reason}")
    return d


def _grow(G: BidirectedGraph, H: BidirectedGraph, r: str, budget: int) -> list[ProgramEar]:
    ears = []
    while H != G:
        d = find_diear(G, H, r, check=False, budget=budget)
        ears.append(to_program_ear(G, d))
        H = H.union(walk_graph(G, d.walk))
    return ears


def extract_absolute(G: BidirectedGraph, r: str, *, budget: int = DEFAULT_BUDGET) -> EarProgram:
    bad = refute(G, r, None, ClassLabel.ABSOLUTE_SEMIRADIAL, budget=budget)
    if bad is not None:
        raise PreconditionError(f"not an absolute semiradial: {bad}")
    return EarProgram(r, tuple(_grow(G, BidirectedGraph([r]), r, budget)))


def extract_strong(
    G: BidirectedGraph, r: str, alpha: Sign | str, *, budget: int = DEFAULT_BUDGET
) -> EarProgram:
    alpha = Sign.of(alpha)
    bad = refute(G, r, alpha, ClassLabel.STRONG_RADIAL, budget=budget)
    if bad is not None:
        raise PreconditionError(f"not a strong {alpha}-radial: {bad}")
    C = exists_closed_ditrail(G, r, (-alpha, -alpha), budget=budget)
    if C is None:  # pragma: no cover - a strong radial always has one
        raise AssertionError("strong radial without a closed ditrail over its root")
    initial = ProgramEar(C.walk, tuple(G.edge(e) for e in dict.fromkeys(C.walk.edges)))
    H = walk_graph(G, C.walk)
    return EarProgram(r, tuple(_grow(G, H, r, budget)), initial, alpha)
