"""Definitional recognizers for the radial classes, and the matching-theory bridge.

Every recognizer evaluates its class definition literally through the trail
oracle in :mod:`biradial.reach`; nothing here is structural.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping

from .core import BidirectedGraph, Edge, Refutation, Sign, PLUS, MINUS
from .errors import BudgetExceeded, PreconditionError
from .reach import DEFAULT_BUDGET, SignConstraint, exists_closed_ditrail, exists_ditrail


class ClassLabel(enum.Enum):
    SEMIRADIAL = "semiradial"
    RADIAL = "radial"
    ABSOLUTE_SEMIRADIAL = "absolute_semiradial"
    STRONG_RADIAL = "strong_radial"
    ALMOST_STRONG_RADIAL = "almost_strong_radial"
    LINEAR_SEMIRADIAL = "linear_semiradial"
    SUBLINEAR_RADIAL = "sublinear_radial"

    @classmethod
    def parse(cls, name: str | ClassLabel) -> ClassLabel:
        if isinstance(name, ClassLabel):
            return name
        key = name.strip().lower().replace("-", "_")
        if key in _ALIASES:
            return _ALIASES[key]
        try:
            return cls(key)
        except ValueError:
            raise PreconditionError(f"unknown class {name!r}") from None


_ALIASES = {
    "absolute": ClassLabel.ABSOLUTE_SEMIRADIAL,
    "strong": ClassLabel.STRONG_RADIAL,
    "almost_strong": ClassLabel.ALMOST_STRONG_RADIAL,
    "linear": ClassLabel.LINEAR_SEMIRADIAL,
    "sublinear": ClassLabel.SUBLINEAR_RADIAL,
}

#: Classes with a constructive characterization (certificates exist for these).
CHARACTERIZED = (
    ClassLabel.ABSOLUTE_SEMIRADIAL,
    ClassLabel.STRONG_RADIAL,
    ClassLabel.ALMOST_STRONG_RADIAL,
    ClassLabel.LINEAR_SEMIRADIAL,
    ClassLabel.SUBLINEAR_RADIAL,
)


def _every_vertex_reaches(G, r, c, budget, skip_root=False) -> Refutation | None:
    c = SignConstraint.of(c)
    for v in G.sorted_vertices():
        if skip_root and v == r:
            continue
        if exists_ditrail(G, v, r, c, budget=budget) is None:
            return Refutation(f"no {c}-ditrail from {v} to {r}")
    return None


def _no_ditrail_into(G, r, c, budget, nontrivial=False) -> Refutation | None:
    c = SignConstraint.of(c)
    for v in G.sorted_vertices():
        w = exists_ditrail(G, v, r, c, nontrivial=nontrivial, budget=budget)
        if w is not None:
            return Refutation(f"forbidden ditrail {w}", w)
    return None


def refute(
    G: BidirectedGraph,
    r: str,
    alpha: Sign | str,
    cls: ClassLabel | str,
    *,
    budget: int = DEFAULT_BUDGET,
) -> Refutation | None:
    """``None`` if ``G`` is in ``cls`` with root ``r``; otherwise the first failed condition."""
    G.check_vertex(r)
    cls = ClassLabel.parse(cls)
    a = Sign.of(alpha) if alpha is not None else PLUS
    C = ClassLabel

    def reach(c, **kw):
        return lambda: _every_vertex_reaches(G, r, c, budget, **kw)

    def avoid(c, **kw):
        return lambda: _no_ditrail_into(G, r, c, budget, **kw)

    def no_closed():
        w = exists_closed_ditrail(G, r, (-a, -a), budget=budget)
        return Refutation(f"closed ditrail over {r}: {w}", w) if w is not None else None

    def no_root_loop():
        loops = G.loops_at(r)
        return Refutation(f"loop {loops[0].id} at {r}") if loops else None

    checks = {
        C.SEMIRADIAL: [reach((a, None))],
        C.RADIAL: [reach((a, -a))],
        C.ABSOLUTE_SEMIRADIAL: [reach((PLUS, None)), reach((MINUS, None))],
        C.STRONG_RADIAL: [reach((a, -a)), reach((-a, -a))],
        C.ALMOST_STRONG_RADIAL: [reach((a, -a)), reach((-a, -a), skip_root=True), no_closed],
        C.LINEAR_SEMIRADIAL: [reach((a, None)), no_root_loop, avoid((-a, None), nontrivial=True)],
        C.SUBLINEAR_RADIAL: [reach((a, -a)), avoid((-a, -a))],
    }[cls]
    # Refutations are falsy, so test against None rather than chaining with `or`
    for check in checks:
        bad = check()
        if bad is not None:
            return bad
    return None


def recognize(
    G: BidirectedGraph,
    r: str,
    alpha: Sign | str,
    cls: ClassLabel | str,
    *,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Membership of ``G`` (root ``r``) in ``cls``; ``alpha`` is ignored for absolute semiradials."""
    return refute(G, r, alpha, cls, budget=budget) is None


def strong_via_absolute(
    G: BidirectedGraph, r: str, alpha: Sign | str, *, budget: int = DEFAULT_BUDGET
) -> bool:
    """Strong radial test by the other route: an absolute semiradial with a
    closed ``(-alpha, -alpha)``-ditrail over ``r``."""
    a = Sign.of(alpha)
    if refute(G, r, None, ClassLabel.ABSOLUTE_SEMIRADIAL, budget=budget) is not None:
        return False
    return exists_closed_ditrail(G, r, (-a, -a), budget=budget) is not None


# -- b-factors and criticality ------------------------------------------------

FACTOR_BUDGET = 2**20


def find_b_factor(
    G: BidirectedGraph, b: Mapping[str, int], *, budget: int = FACTOR_BUDGET
) -> frozenset[str] | None:
    """An edge set ``F`` with ``deg_F(v) = b(v)`` for all ``v``, preferring earlier edge ids.

    Degrees count a loop twice. Backtracking over edges with two prunings: no
    vertex may exceed its target, and the edges left must still be able to
    cover every deficit.
    """
    need = {v: int(b[v]) for v in G.vertices}
    if any(x < 0 for x in need.values()):
        return None
    edges = list(G)
    # remaining[i][v] = ends at v among edges[i:]
    remaining = [dict.fromkeys(G.vertices, 0) for _ in range(len(edges) + 1)]
    for i in range(len(edges) - 1, -1, -1):
        remaining[i] = dict(remaining[i + 1])
        for end in edges[i].ends:
            remaining[i][end.vertex] += 1
    chosen: list[str] = []
    visited = 0

    def rec(i: int) -> bool:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceeded(budget, "b-factor search")
        if any(need[v] > remaining[i][v] for v in need):
            return False
        if i == len(edges):
            return True
        e = edges[i]
        ends = [end.vertex for end in e.ends]
        for v in ends:
            need[v] -= 1
        if all(need[v] >= 0 for v in ends):
            chosen.append(e.id)
            if rec(i + 1):
                return True
            chosen.pop()
        for v in ends:
            need[v] += 1
        return rec(i + 1)

    return frozenset(chosen) if rec(0) else None


def _reduced(b: Mapping[str, int], x: str) -> dict[str, int]:
    out = dict(b)
    out[x] = out[x] - 1
    return out


def is_b_critical(G: BidirectedGraph, b: Mapping[str, int], *, budget: int = FACTOR_BUDGET) -> bool:
    """Whether every vertex ``x`` admits a factor for ``b`` lowered by one at ``x``."""
    _check_degrees(G, b)
    return all(find_b_factor(G, _reduced(b, x), budget=budget) is not None for x in G.sorted_vertices())


def _check_degrees(G, b):
    missing = G.vertices - set(b)
    if missing:
        raise PreconditionError(f"degree map misses vertices {sorted(missing)}")
    if any(b[v] < 0 for v in G.vertices):
        raise PreconditionError("degree map must be nonnegative")


def signed_from_factor(G: BidirectedGraph, F: Iterable[str]) -> BidirectedGraph:
    """Same graph with edges of ``F`` made (-,-) and every other edge (+,+)."""
    F = frozenset(F)
    unknown = F - G.edge_ids()
    if unknown:
        raise PreconditionError(f"edges {sorted(unknown)} are not in the graph")
    edges = []
    for e in G:
        s = MINUS if e.id in F else PLUS
        (u, _), (v, _) = e.ends
        edges.append(Edge.make(e.id, u, s, v, s))
    return BidirectedGraph(G.vertices, edges)


def criticality_crosscheck(
    G: BidirectedGraph, b: Mapping[str, int], r: str, *, budget: int = DEFAULT_BUDGET
) -> bool:
    """Whether b-criticality agrees with (-,+)-ditrail reachability of ``r`` in ``G^F``.

    ``F`` is the first factor for ``b`` lowered at ``r``; raises if none exists.
    """
    G.check_vertex(r)
    _check_degrees(G, b)
    F = find_b_factor(G, _reduced(b, r))
    if F is None:
        raise PreconditionError(f"no factor for b lowered at {r}")
    signed = signed_from_factor(G, F)
    reach = all(
        exists_ditrail(signed, x, r, (MINUS, PLUS), budget=budget) is not None
        for x in G.sorted_vertices()
    )
    return is_b_critical(G, b) == reach
