"""Rule trees for almost strong radials: base, root-edge addition, and gluing at the root."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..core import BidirectedGraph, Edge, Sign, blocks_over, cut
from ..errors import GraphError, PreconditionError, ReplayError, TrivialAlmostStrongError
from ..radials import ClassLabel, refute
from ..reach import DEFAULT_BUDGET
from .ears import EarProgram, extract_strong, replay_ear_program


@dataclass(frozen=True)
class Base:
    """Strong radial ``program`` (root r', sign beta) hung from r by ``edge``.

    ``edge`` carries ``-alpha`` at r and ``program.alpha`` at ``program.root``.
    """

    edge: Edge
    program: EarProgram


@dataclass(frozen=True)
class AddRootEdge:
    """``child`` plus an edge whose end at r has sign ``alpha``."""

    edge: Edge
    child: Node


@dataclass(frozen=True)
class Glue:
    """Children pairwise sharing only the root."""

    children: tuple[Node, ...]


Node = Union[Base, AddRootEdge, Glue]


@dataclass(frozen=True)
class AlmostStrongTree:
    root: str
    alpha: Sign
    node: Node


def _replay(node: Node, r: str, alpha: Sign, path: str) -> BidirectedGraph:
    if isinstance(node, Base):
        p, e = node.program, node.edge
        if not p.is_strong or p.alpha is None:
            raise ReplayError("base", None, f"{path}: program is not a strong radial program")
        K = replay_ear_program(p)
        if r in K:
            raise ReplayError("base", None, f"{path}: strong part already contains the root {r}")
        if e.id in K.edges:
            raise ReplayError("base", None, f"{path}: edge id {e.id} reused")
        ends = {end.vertex: end.sign for end in e.ends}
        if e.is_loop or set(ends) != {r, p.root}:
            raise ReplayError("base", None, f"{path}: edge must join {r} and {p.root}")
        if ends[r] is not -alpha or ends[p.root] is not p.alpha:
            raise ReplayError(
                "base", None, f"{path}: edge signs must be {-alpha} at {r} and {p.alpha} at {p.root}"
            )
        return K.add([r], [e])
    if isinstance(node, AddRootEdge):
        G = _replay(node.child, r, alpha, path + ".child")
        e = node.edge
        if e.id in G.edges:
            raise ReplayError("add_root_edge", None, f"{path}: edge id {e.id} reused")
        if not e.has_sign_at(r, alpha):
            raise ReplayError("add_root_edge", None, f"{path}: edge has no {alpha} end at {r}")
        if e.is_loop:
            other = r
        elif e.ends[0].vertex == r and e.ends[0].sign is alpha:
            other = e.ends[1].vertex
        else:
            other = e.ends[0].vertex
        if other not in G:
            raise ReplayError("add_root_edge", None, f"{path}: edge end {other} is not in the subtree")
        return G.add(edges=[e])
    if isinstance(node, Glue):
        if len(node.children) < 2:
            raise ReplayError("glue", None, f"{path}: glue needs at least two children")
        parts = [_replay(c, r, alpha, f"{path}.children[{i}]") for i, c in enumerate(node.children)]
        G = parts[0]
        for i, part in enumerate(parts[1:], 1):
            if G.vertices & part.vertices != {r} or G.edge_ids() & part.edge_ids():
                raise ReplayError("glue", i, f"{path}: child shares more than the root")
            G = G.union(part)
        return G
    raise ReplayError("tree", None, f"{path}: unknown node {type(node).__name__}")


def replay_almost_strong(tree: AlmostStrongTree) -> BidirectedGraph:
    return _replay(tree.node, tree.root, tree.alpha, "tree")


def decompose_almost_strong(
    G: BidirectedGraph, r: str, alpha: Sign | str, *, budget: int = DEFAULT_BUDGET
) -> AlmostStrongTree:
    """Rule tree whose replay is ``G``.

    Several blocks over the root become a glue; otherwise root edges with
    ``alpha`` at the root are stripped one at a time; what remains hangs from
    its unique ``-alpha`` root edge over a strong radial.
    """
    alpha = Sign.of(alpha)
    bad = refute(G, r, alpha, ClassLabel.ALMOST_STRONG_RADIAL, budget=budget)
    if bad is not None:
        raise PreconditionError(f"not an almost strong {alpha}-radial: {bad}")
    if G.vertices == {r}:
        raise TrivialAlmostStrongError(
            "the single-vertex graph is an almost strong radial by definition but no rule tree builds it"
        )
    return AlmostStrongTree(r, alpha, _decompose(G, r, alpha, budget))


def _decompose(G: BidirectedGraph, r: str, alpha: Sign, budget: int) -> Node:
    blocks = blocks_over(G, r)
    if len(blocks) > 1:
        return Glue(tuple(_decompose(B, r, alpha, budget) for B in blocks))
    strip = [e for e in G.incident(r) if e.has_sign_at(r, alpha)]
    if strip:
        e = strip[0]
        return AddRootEdge(e, _decompose(G.remove_edges([e.id]), r, alpha, budget))
    necks = sorted(cut(G, {r}))
    # exactly one root edge remains, all others having been stripped
    if len(necks) != 1:
        raise AssertionError(f"expected exactly one {-alpha} edge at {r}, found {necks}")
    e = G.edge(necks[0])
    x = e.other(r)
    beta = e.sign_at(x)
    try:
        program = extract_strong(G.remove_vertices([r]), x, beta, budget=budget)
    except (PreconditionError, GraphError) as exc:
        raise AssertionError(f"part below {e.id} is not a strong {beta}-radial at {x}: {exc}") from None
    return Base(e, program)
