"""Seeded random certificates for the five characterized classes.

Every generator follows only the construction rules of its class, so replay
never fails. Vertex ids are ``v1, v2, ...`` besides the root; edge ids are
``e1, e2, ...`` (plus ``poset:i<j`` arcs from :func:`realize_poset`).
"""

from __future__ import annotations

import random
from itertools import count
from typing import Union

import networkx as nx

from ..core import BidirectedGraph, Edge, Sign, Walk, PLUS, MINUS
from ..digraphic import DigraphEar, EarProgramD, realize_poset, scc_poset, strong_ears_build
from ..errors import PreconditionError, UnsatisfiableSize
from ..radials import ClassLabel
from .almost import AddRootEdge, AlmostStrongTree, Base, Glue, Node
from .ears import SCOOP, SIMPLE, EarProgram, ProgramEar
from .linear import Contact, LinearCore, SublinearCore

Certificate = Union[EarProgram, AlmostStrongTree, LinearCore, SublinearCore]

SIGNS = (PLUS, MINUS)


class _Ids:
    """Fresh vertex and edge ids, plus budgets for how many more may be drawn."""

    def __init__(self, max_v: int, max_e: int, used_vertices: int = 1, counters=None):
        self._v, self._e = counters or (count(1), count(1))
        self.v_left = max_v - used_vertices
        self.e_left = max_e

    def sub(self, v_left: int, e_left: int) -> _Ids:
        """Same id streams, separate budgets."""
        return _Ids(v_left, e_left, 0, (self._v, self._e))

    def vertex(self) -> str:
        assert self.v_left > 0
        self.v_left -= 1
        return f"v{next(self._v)}"

    def edge(self) -> str:
        assert self.e_left > 0
        self.e_left -= 1
        return f"e{next(self._e)}"


# -- ears --------------------------------------------------------------------


def _pick_vertex(rng: random.Random, ids: _Ids, pool: list[str], p_fresh: float = 0.7) -> str:
    if ids.v_left > 0 and (not pool or rng.random() < p_fresh):
        v = ids.vertex()
        pool.append(v)
        return v
    return rng.choice(pool)


def _trail(
    rng: random.Random,
    ids: _Ids,
    pool: list[str],
    start: str,
    end: str | None,
    length: int,
    first: Sign | None = None,
    last: Sign | None = None,
) -> tuple[Walk, list[Edge]]:
    """A ditrail of fresh edges from ``start``; interior vertices fresh or from ``pool``.

    ``end`` fixes the last vertex (else it is drawn like the interior ones);
    ``first``/``last`` fix the departure and arrival signs.
    """
    terms: list[str] = [start]
    edges: list[Edge] = []
    depart = first if first is not None else rng.choice(SIGNS)
    u = start
    for i in range(length):
        final = i == length - 1
        v = end if final and end is not None else _pick_vertex(rng, ids, pool)
        arrive = last if final and last is not None else rng.choice(SIGNS)
        e = Edge.make(ids.edge(), u, depart, v, arrive)
        edges.append(e)
        terms += [e.id, v]
        u, depart = v, -arrive
    return Walk(tuple(terms), (0,) * length), edges


def _simple_ear(rng, ids, pool, length) -> ProgramEar:
    x, y = rng.choice(pool), rng.choice(pool)
    W, edges = _trail(rng, ids, pool, x, y, length)
    return ProgramEar(W, tuple(edges), SIMPLE)


def _scoop_ear(rng, ids, pool, inner_length) -> ProgramEar:
    v = rng.choice(pool)
    x = ids.vertex()
    sigma = rng.choice(SIGNS)
    grip = Edge.make(ids.edge(), v, rng.choice(SIGNS), x, sigma)
    pool.append(x)
    inner, edges = _trail(rng, ids, pool, x, x, inner_length, -sigma, -sigma)
    terms = (v, grip.id) + inner.terms + (grip.id, v)
    return ProgramEar(Walk(terms, (0,) + inner.slots + (1,)), (grip, *edges), SCOOP, grip.id)


def _ears(rng: random.Random, ids: _Ids, pool: list[str], edge_target: int) -> list[ProgramEar]:
    ears = []
    while ids.e_left > 0 and edge_target > 0:
        budget = min(ids.e_left, edge_target)
        if ids.v_left > 0 and budget >= 2 and rng.random() < 0.3:
            ear = _scoop_ear(rng, ids, pool, rng.randint(1, min(budget - 1, 5)))
        else:
            ear = _simple_ear(rng, ids, pool, rng.randint(1, min(budget, 5)))
        edge_target -= len(ear.edges)
        ears.append(ear)
    return ears


def _strong_program(rng: random.Random, ids: _Ids, root: str, alpha: Sign, edge_target: int) -> EarProgram:
    pool = [root]
    length = rng.randint(1, min(edge_target, 4))
    W, edges = _trail(rng, ids, pool, root, root, length, -alpha, -alpha)
    initial = ProgramEar(W, tuple(edges), SIMPLE)
    ears = _ears(rng, ids, pool, edge_target - length)
    return EarProgram(root, tuple(ears), initial, alpha)


# -- almost strong trees -----------------------------------------------------


def _tree(rng: random.Random, ids: _Ids, r: str, alpha: Sign, v_budget: int, e_budget: int) -> tuple[Node, list[str]]:
    """A rule tree with at most ``v_budget`` new vertices and ``e_budget`` edges (at least 1 and 2)."""
    if v_budget >= 2 and e_budget >= 4 and rng.random() < 0.25:
        v1 = rng.randint(1, v_budget - 1)
        e1 = rng.randint(2, e_budget - 2)
        a, va = _tree(rng, ids, r, alpha, v1, e1)
        b, vb = _tree(rng, ids, r, alpha, v_budget - v1, e_budget - e1)
        return Glue((a, b)), va + vb
    if e_budget >= 3 and rng.random() < 0.35:
        child, verts = _tree(rng, ids, r, alpha, v_budget, e_budget - 1)
        other = rng.choice([r] + verts)
        e = Edge.make(ids.sub(0, 1).edge(), r, alpha, other, rng.choice(SIGNS))
        return AddRootEdge(e, child), verts
    sub = ids.sub(v_budget, e_budget)
    rp = sub.vertex()
    beta = rng.choice(SIGNS)
    neck = Edge.make(sub.edge(), r, -alpha, rp, beta)
    program = _strong_program(rng, sub, rp, beta, rng.randint(1, sub.e_left))
    return Base(neck, program), sorted(_program_vertices(program))


def _program_vertices(p: EarProgram) -> set[str]:
    out = {p.root}
    for ear in ((p.initial,) if p.initial else ()) + p.ears:
        out.update(ear.walk.vertices)
    return out


# -- digraphic pieces and posets --------------------------------------------


def random_strong_piece(
    rng: random.Random, vertices: list[str], max_edges: int, edge_id=None
) -> EarProgramD:
    """Ear program of a strongly connected digraphic graph on ``vertices``.

    Needs ``max_edges >= len(vertices)`` unless there is a single vertex.
    Arcs point from the ``+`` end to the ``-`` end.
    """
    n = len(vertices)
    if n > 1 and max_edges < n:
        raise UnsatisfiableSize(f"{n} vertices need at least {n} arcs to be strongly connected")
    edge_id = edge_id or (lambda c=count(1): f"a{next(c)}")
    inside = [vertices[0]]
    fresh = list(vertices[1:])
    left = max_edges
    ears = []

    def ear(path: list[str]) -> DigraphEar:
        edges = []
        terms = [path[0]]
        for u, v in zip(path, path[1:]):
            e = Edge.make(edge_id(), u, PLUS, v, MINUS)
            edges.append(e)
            terms += [e.id, v]
        return DigraphEar(Walk(tuple(terms), (0,) * len(edges)), tuple(edges))

    while fresh:
        m = len(fresh)
        # taking k fresh vertices costs k + 1 arcs; leave enough for the rest
        ks = [k for k in range(1, m + 1) if k == m or left - (k + 1) >= (m - k) + 1]
        k = rng.choice(ks)
        mid = [fresh.pop(rng.randrange(len(fresh))) for _ in range(k)]
        ears.append(ear([rng.choice(inside), *mid, rng.choice(inside)]))
        inside += mid
        left -= k + 1
    for _ in range(rng.randint(0, left)):
        ears.append(ear([rng.choice(inside), rng.choice(inside)]))
    return EarProgramD(vertices[0], tuple(ears))


def random_poset(rng: random.Random, n: int, density: float = 0.4) -> list[tuple[int, int]]:
    """Strict order pairs ``(i, j)``, ``i < j``, closed under transitivity."""
    dag = nx.DiGraph()
    dag.add_nodes_from(range(n))
    dag.add_edges_from((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density)
    closure = nx.transitive_closure_dag(dag)
    return sorted(closure.edges())


def _digraphic_base(
    rng: random.Random, ids: _Ids, vertices: list[str], e_budget: int, alpha: Sign, top: str | None
) -> BidirectedGraph:
    """Digraphic graph on ``vertices`` built from pieces and a poset, with at most ``e_budget`` edges.

    With ``top`` set, its piece is the maximum of the order (a flowgraph root).
    Each multi-vertex piece gets at least its size in arcs; arcs between pieces
    come from the covering pairs plus a few extras respecting the order.
    """
    for _ in range(20):
        groups = _group(rng, vertices, top)
        rel = _order(rng, groups, top)
        if _mandatory(groups, rel) <= e_budget:
            break
    else:  # singletons, ordered only as far as a root demands
        groups = _group(rng, vertices, top, together=0.0)
        rel = _order(rng, groups, top, density=0.0)
    spare = e_budget - _mandatory(groups, rel)
    pieces = []
    for g in groups:
        give = rng.randint(0, spare) if len(g) > 1 else 0
        spare -= give
        p = random_strong_piece(rng, g, (len(g) if len(g) > 1 else 0) + give, edge_id=lambda: ids.sub(0, 1).edge())
        pieces.append(strong_ears_build(p))
    if alpha is MINUS:
        pieces = [_flip(p) for p in pieces]
    pairs = rel
    extra = []
    for _ in range(rng.randint(0, spare) if pairs else 0):
        i, j = rng.choice(pairs)
        extra.append((ids.sub(0, 1).edge(), rng.choice(groups[i]), rng.choice(groups[j])))
    return realize_poset(pieces, pairs, alpha, extra)


def _group(rng, vertices, top, together=0.4) -> list[list[str]]:
    """Random partition of ``vertices``; the part holding ``top`` comes last."""
    groups: list[list[str]] = []
    for v in rng.sample(vertices, len(vertices)):
        if groups and rng.random() < together:
            groups[-1].append(v)
        else:
            groups.append([v])
    if top is not None:
        groups.append(groups.pop(next(i for i, g in enumerate(groups) if top in g)))
    return groups


def _order(rng, groups, top, density=0.4) -> list[tuple[int, int]]:
    """Random strict order on the groups; with ``top``, the last group is the maximum."""
    n = len(groups)
    rel = set(random_poset(rng, n, density))
    if top is not None:
        rel |= {(i, n - 1) for i in range(n - 1)}
    return sorted(rel)


def _mandatory(groups, rel) -> int:
    return sum(len(g) for g in groups if len(g) > 1) + _n_covering(len(groups), rel)


def _flip(G: BidirectedGraph) -> BidirectedGraph:
    """Swap every sign; arcs stay arcs, read the other way."""
    return BidirectedGraph(
        G.vertices, [Edge.make(e.id, e.ends[0].vertex, -e.ends[0].sign, e.ends[1].vertex, -e.ends[1].sign) for e in G]
    )


def _n_covering(n: int, rel) -> int:
    rel = set(rel)
    return sum(1 for i, j in rel if not any((i, k) in rel and (k, j) in rel for k in range(n)))


# -- linear and sublinear ----------------------------------------------------


def _linear(rng: random.Random, r: str, alpha: Sign, max_v: int, max_e: int) -> LinearCore:
    # every base vertex needs an edge, so |V(D)| <= max_e
    nv = rng.randint(0, min(max_v - 1, max_e))
    ids = _Ids(max_v, max_e)
    verts = [ids.vertex() for _ in range(nv)]
    if not verts:
        return LinearCore(r, alpha, BidirectedGraph([]), ())
    # leave room for the contacts: at most one per vertex
    D = _digraphic_base(rng, ids, verts, max_e - nv, alpha, None)
    contacts = []
    for comp in scc_poset(D, alpha).maximal():
        u = rng.choice(sorted(comp))
        at_r = rng.choice(SIGNS)  # an arc into r or an (alpha, alpha)-edge
        contacts.append(Contact(comp, Edge.make(ids.edge(), u, alpha, r, at_r)))
    contacts.sort(key=lambda c: min(c.component))
    left = max_e - len(D.edges) - len(contacts)
    root_arcs, added = [], []
    for _ in range(rng.randint(0, max(left, 0))):
        u = rng.choice(verts)
        if rng.random() < 0.4:
            root_arcs.append(Edge.make(ids.edge(), u, alpha, r, -alpha))
        else:
            v = rng.choice(verts + [r])
            added.append(Edge.make(ids.edge(), u, alpha, v, alpha))
    return LinearCore(r, alpha, D, tuple(contacts), tuple(root_arcs), tuple(added))


def _sublinear(rng: random.Random, r: str, alpha: Sign, max_v: int, max_e: int) -> SublinearCore:
    nv = rng.randint(0, min(max_v - 1, max_e))
    ids = _Ids(max_v, max_e)
    verts = [ids.vertex() for _ in range(nv)] + [r]
    D = _digraphic_base(rng, ids, verts, max_e, alpha, r)
    added = []
    for _ in range(rng.randint(0, max_e - len(D.edges))):
        u, v = rng.choice(verts), rng.choice(verts)
        added.append(Edge.make(ids.edge(), u, alpha, v, alpha))
    return SublinearCore(r, alpha, D, tuple(added))


# -- entry point -------------------------------------------------------------


def random_program(
    cls: ClassLabel | str,
    seed: int,
    size: tuple[int, int],
    *,
    root: str = "r",
    alpha: Sign | str | None = None,
) -> Certificate:
    """A seeded certificate of class ``cls`` with at most ``size = (vertices, edges)``.

    ``alpha`` is drawn from the seed when not given (and ignored for absolute
    semiradials). Same arguments, same certificate.
    """
    cls = ClassLabel.parse(cls)
    max_v, max_e = size
    if max_v < 1 or max_e < 0:
        raise UnsatisfiableSize(f"size {size} has no room for the root")
    rng = random.Random(f"{cls.value}:{seed}")
    a = Sign.of(alpha) if alpha is not None else rng.choice(SIGNS)
    if root.startswith(("v", "e")) and root[1:].isdigit():
        raise PreconditionError(f"root id {root!r} clashes with generated ids")

    if cls is ClassLabel.ABSOLUTE_SEMIRADIAL:
        ids = _Ids(max_v, max_e)
        return EarProgram(root, tuple(_ears(rng, ids, [root], rng.randint(max_e // 3, max_e))))
    if cls is ClassLabel.STRONG_RADIAL:
        if max_e < 1:
            raise UnsatisfiableSize("a strong radial needs a closed ditrail over its root, so at least one edge")
        ids = _Ids(max_v, max_e)
        return _strong_program(rng, ids, root, a, rng.randint(max(1, max_e // 3), max_e))
    if cls is ClassLabel.ALMOST_STRONG_RADIAL:
        if max_v < 2 or max_e < 2:
            raise UnsatisfiableSize("an almost strong rule tree needs at least 2 vertices and 2 edges")
        node, _ = _tree(rng, _Ids(max_v, max_e), root, a, max_v - 1, rng.randint(max(2, max_e // 3), max_e))
        return AlmostStrongTree(root, a, node)
    if cls is ClassLabel.LINEAR_SEMIRADIAL:
        return _linear(rng, root, a, max_v, max_e)
    if cls is ClassLabel.SUBLINEAR_RADIAL:
        return _sublinear(rng, root, a, max_v, max_e)
    raise PreconditionError(f"no constructive characterization for {cls.value}")
