"""Ditrail reachability: an exhaustive trail search and a diwalk relaxation.

The trail search is the ground truth every recognizer relies on. It explores
states ``(vertex, arrival sign, used edges)`` depth-first, in edge-id order, so
witnesses are reproducible. Two sound prunings keep it fast at desk scale:

* a state whose subtree produced nothing is remembered and never re-expanded;
* a state from which the target is unreachable even when edges may repeat
  (a breadth-first diwalk closure over the unused edges) is cut immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .core import BidirectedGraph, Sign, Walk
from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**7


class SignConstraint(NamedTuple):
    """Required departure sign at the start and arrival sign at the end; ``None`` = any."""

    start: Sign | None = None
    end: Sign | None = None

    @classmethod
    def of(cls, value) -> SignConstraint:
        """Accepts a constraint, a pair of signs/strings, or a 2-char string like ``"-+"`` / ``"*+"``."""
        if isinstance(value, SignConstraint):
            return value
        if value is None:
            return cls()
        a, b = value
        return cls(_sign_or_any(a), _sign_or_any(b))

    def admits_trivial(self) -> bool:
        # the trivial ditrail is (+,-) and (-,+)
        return self.start is None or self.end is None or self.start is not self.end

    def __str__(self) -> str:
        return f"({self.start or '*'},{self.end or '*'})"


def _sign_or_any(s) -> Sign | None:
    if s is None or s in ("*", "any"):
        return None
    return Sign.of(s)


@dataclass(frozen=True)
class DitrailWitness:
    walk: Walk
    start_sign: Sign
    end_sign: Sign

    def __str__(self) -> str:
        return f"{self.walk} as a ({self.start_sign},{self.end_sign})-ditrail"


class _Index:
    """Bitmask form of a graph's traversal table."""

    __slots__ = ("moves",)

    def __init__(self, G: BidirectedGraph):
        bit = {eid: 1 << i for i, eid in enumerate(G.edges)}
        self.moves = {
            v: tuple((bit[m.edge], m.edge, m.slot, m.depart, m.head, m.arrive) for m in G.moves(v))
            for v in G.vertices
        }


def _index(G: BidirectedGraph) -> _Index:
    idx = G.__dict__.get("_reach_index")
    if idx is None:
        idx = G.__dict__["_reach_index"] = _Index(G)
    return idx


def _trivial_witness(v: str, c: SignConstraint) -> DitrailWitness:
    s = c.start if c.start is not None else (-c.end if c.end is not None else Sign.PLUS)
    return DitrailWitness(Walk((v,)), s, -s)


def _search(
    G: BidirectedGraph,
    x: str,
    r: str,
    c: SignConstraint,
    *,
    nontrivial: bool = False,
    target_once: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[DitrailWitness]:
    G.check_vertex(x)
    G.check_vertex(r)
    moves = _index(G).moves
    start, end = c.start, c.end
    dead: set[tuple[str, Sign, int]] = set()
    terms: list[str] = [x]
    slots: list[int] = []
    expanded = 0

    def can_finish(v: str, arr: Sign | None, mask: int) -> bool:
        seen = set()
        stack = [(v, arr)]
        while stack:
            u, a = stack.pop()
            for b, _, _, dep, head, arrive in moves[u]:
                if b & mask or dep is a:
                    continue
                if head == r and (end is None or arrive is end):
                    return True
                if (head, arrive) not in seen:
                    seen.add((head, arrive))
                    stack.append((head, arrive))
        return False

    def rec(v: str, arr: Sign, mask: int) -> Iterator[DitrailWitness]:
        nonlocal expanded
        expanded += 1
        if expanded > budget:
            raise BudgetExceeded(budget, "ditrail search")
        found = False
        if v == r and (end is None or arr is end):
            found = True
            yield DitrailWitness(Walk(tuple(terms), tuple(slots)), first_sign, arr)
        if v == r and target_once:
            return
        key = (v, arr, mask)
        if key in dead:
            return
        if not can_finish(v, arr, mask):
            if not found:
                dead.add(key)
            return
        produced = found
        for b, eid, slot, dep, head, arrive in moves[v]:
            if b & mask or dep is arr:
                continue
            terms.append(eid)
            terms.append(head)
            slots.append(slot)
            for w in rec(head, arrive, mask | b):
                produced = True
                yield w
            del terms[-2:]
            slots.pop()
        if not produced:
            dead.add(key)

    if x == r and not nontrivial and c.admits_trivial():
        yield _trivial_witness(x, c)
    first_sign = start
    for b, eid, slot, dep, head, arrive in moves[x]:
        if start is not None and dep is not start:
            continue
        first_sign = dep
        terms.extend((eid, head))
        slots.append(slot)
        yield from rec(head, arrive, b)
        del terms[-2:]
        slots.pop()


def exists_ditrail(
    G: BidirectedGraph,
    x: str,
    r: str,
    c=None,
    *,
    nontrivial: bool = False,
    target_once: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> DitrailWitness | None:
    """First ditrail from ``x`` to ``r`` meeting ``c`` in edge-id order, or ``None``.

    ``nontrivial`` excludes the one-vertex ditrail; ``target_once`` forbids
    continuing past any visit to ``r``, so ``r`` appears only as the last term.
    Raises :class:`BudgetExceeded` rather than answering ``None`` when the
    search is cut short.
    """
    c = SignConstraint.of(c)
    gen = _search(G, x, r, c, nontrivial=nontrivial, target_once=target_once, budget=budget)
    try:
        return next(gen, None)
    finally:
        gen.close()


def exists_closed_ditrail(
    G: BidirectedGraph, r: str, c=None, *, budget: int = DEFAULT_BUDGET
) -> DitrailWitness | None:
    """A nontrivial closed ditrail over ``r`` meeting ``c``, or ``None``."""
    return exists_ditrail(G, r, r, c, nontrivial=True, budget=budget)


def enumerate_ditrails(
    G: BidirectedGraph,
    x: str,
    r: str,
    c=None,
    limit: int = 100,
    *,
    nontrivial: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> list[DitrailWitness]:
    """All ditrails from ``x`` to ``r`` meeting ``c``, lexicographic by edge ids, up to ``limit``."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    c = SignConstraint.of(c)
    out = []
    gen = _search(G, x, r, c, nontrivial=nontrivial, budget=budget)
    try:
        for w in gen:
            out.append(w)
            if len(out) >= limit:
                break
    finally:
        gen.close()
    return out


def diwalk_reachable(G: BidirectedGraph, x: str, r: str, c=None) -> bool:
    """Whether some diwalk (edges may repeat) from ``x`` to ``r`` meets ``c``.

    A necessary condition for :func:`exists_ditrail`; never used in its place.
    """
    G.check_vertex(x)
    G.check_vertex(r)
    c = SignConstraint.of(c)
    if x == r and c.admits_trivial():
        return True
    moves = G.moves
    seen: set[tuple[str, Sign]] = set()
    frontier = []
    for m in moves(x):
        if c.start is None or m.depart is c.start:
            frontier.append((m.head, m.arrive))
    while frontier:
        state = frontier.pop()
        if state in seen:
            continue
        seen.add(state)
        v, arr = state
        if v == r and (c.end is None or arr is c.end):
            return True
        for m in moves(v):
            if m.depart is not arr:
                frontier.append((m.head, m.arrive))
    return False
