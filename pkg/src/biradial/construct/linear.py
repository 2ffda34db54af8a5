"""Linear semiradials and sublinear radials as digraphic cores plus (alpha, alpha)-edges."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import BidirectedGraph, Edge, EdgeKind, Refutation, Sign
from ..digraphic import is_digraphic, is_flowgraph, scc_poset
from ..errors import GraphError, ReplayError


@dataclass(frozen=True)
class Contact:
    """The edge joining one maximal strong component of the base to the root."""

    component: frozenset[str]
    edge: Edge


@dataclass(frozen=True)
class LinearCore:
    """Digraphic ``base`` without the root, one contact per maximal strong component,
    further arcs into the root, and added (alpha, alpha)-edges (no loops at the root)."""

    root: str
    alpha: Sign
    base: BidirectedGraph
    contacts: tuple[Contact, ...]
    root_arcs: tuple[Edge, ...] = ()
    added: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class SublinearCore:
    """An ``alpha``-flowgraph ``base`` rooted at ``root`` plus added (alpha, alpha)-edges."""

    root: str
    alpha: Sign
    base: BidirectedGraph
    added: tuple[Edge, ...] = ()


def _joins_root(e: Edge, r: str) -> str | None:
    """The non-root end of a non-loop edge at ``r``, else ``None``."""
    u, v = e.vertices
    if e.is_loop or r not in (u, v):
        return None
    return v if u == r else u


def replay_linear(core: LinearCore) -> BidirectedGraph:
    r, a, D = core.root, core.alpha, core.base
    if r in D:
        raise ReplayError("base", None, f"base contains the root {r}")
    if not is_digraphic(D):
        raise ReplayError("base", None, "base is not digraphic")
    maximal = set(scc_poset(D, a).maximal()) if len(D) else set()
    covered = set()
    for i, c in enumerate(core.contacts):
        u = _joins_root(c.edge, r)
        if c.component not in maximal or c.component in covered:
            raise ReplayError("contact", i, "component is not an uncovered maximal strong component")
        if u is None or u not in c.component or not c.edge.has_sign_at(u, a):
            raise ReplayError("contact", i, f"edge must join the component to {r} with {a} at the component")
        covered.add(c.component)
    if covered != maximal:
        raise ReplayError("contact", None, "some maximal strong component has no contact")
    for i, e in enumerate(core.root_arcs):
        u = _joins_root(e, r)
        if u is None or u not in D or e.sign_at(u) is not a or e.sign_at(r) is not -a:
            raise ReplayError("root_arc", i, f"must be an arc from the base into {r}")
    for i, e in enumerate(core.added):
        if not e.is_homogeneous(a):
            raise ReplayError("added", i, f"added edge is not ({a},{a})")
        if e.is_loop and e.ends[0].vertex == r:
            raise ReplayError("added", i, f"loop at the root {r}")
    try:
        return D.add([r], [c.edge for c in core.contacts] + list(core.root_arcs) + list(core.added))
    except GraphError as exc:
        raise ReplayError("linear_core", None, str(exc)) from None


def decompose_linear(G: BidirectedGraph, r: str, alpha: Sign | str) -> LinearCore | Refutation:
    """Structural test for linear semiradials; the core on success, else why not."""
    G.check_vertex(r)
    a = Sign.of(alpha)
    F = [e for e in G if e.is_homogeneous(a)]
    bad = [e.id for e in G if e.is_homogeneous(-a)]
    if bad:
        return Refutation(f"({-a},{-a})-edges {bad}")
    loops = G.loops_at(r)
    if loops:
        return Refutation(f"loop {loops[0].id} at {r}")
    rest = G.remove_edges(e.id for e in F)
    for e in rest.incident(r):
        if e.sign_at(r) is a:
            return Refutation(f"arc {e.id} leaves {r}, so {{{r}}} is not a maximal strong component")
    D = rest.remove_vertices([r])
    root_edges = sorted((e for e in G.incident(r)), key=lambda e: e.id)
    contacts = []
    used = set()
    for comp in scc_poset(D, a).maximal() if len(D) else []:
        joins = [e for e in root_edges if _joins_root(e, r) in comp]
        if not joins:
            return Refutation(f"maximal strong component {sorted(comp)} is not joined to {r}")
        contacts.append(Contact(comp, joins[0]))
        used.add(joins[0].id)
    contacts.sort(key=lambda c: min(c.component))
    root_arcs = tuple(e for e in rest.incident(r) if e.id not in used)
    added = tuple(e for e in F if e.id not in used)
    return LinearCore(r, a, D, tuple(contacts), root_arcs, added)


def replay_sublinear(core: SublinearCore) -> BidirectedGraph:
    r, a, D = core.root, core.alpha, core.base
    if r not in D:
        raise ReplayError("base", None, f"base does not contain the root {r}")
    if not is_digraphic(D):
        raise ReplayError("base", None, "base is not digraphic")
    if not is_flowgraph(D, r, a):
        raise ReplayError("base", None, f"base is not a {a}-flowgraph with root {r}")
    for i, e in enumerate(core.added):
        if not e.is_homogeneous(a):
            raise ReplayError("added", i, f"added edge is not ({a},{a})")
    try:
        return D.add(edges=core.added)
    except GraphError as exc:
        raise ReplayError("sublinear_core", None, str(exc)) from None


def decompose_sublinear(G: BidirectedGraph, r: str, alpha: Sign | str) -> SublinearCore | Refutation:
    """Structural test for sublinear radials; the core on success, else why not."""
    G.check_vertex(r)
    a = Sign.of(alpha)
    bad = [e.id for e in G if e.is_homogeneous(-a)]
    if bad:
        return Refutation(f"({-a},{-a})-edges {bad}")
    F = tuple(e for e in G if e.is_homogeneous(a))
    D = G.remove_edges(e.id for e in F)
    assert all(e.kind is EdgeKind.MIXED for e in D)
    if not is_flowgraph(D, r, a):
        return Refutation(f"without its ({a},{a})-edges the graph is not a {a}-flowgraph with root {r}")
    return SublinearCore(r, a, D, F)
