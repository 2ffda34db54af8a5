"""Walking a bidirected graph: which turns are allowed, and where they lead.

Every edge end carries a sign. A walk may pass through a vertex only if it
arrives and leaves on opposite signs. This script builds a small graph and
asks the trail oracle a few questions about it.

    python3 demos/signs_and_trails.py
"""

from biradial import MINUS, PLUS, BidirectedGraph, Walk, diwalk_reachable, enumerate_ditrails, exists_ditrail
from biradial import validate_diwalk

# a triangle: one edge with two minus ends, two with two plus ends
G = BidirectedGraph(
    "rab",
    {"ab": (("a", "-"), ("b", "-")), "ar": (("a", "+"), ("r", "+")), "br": (("b", "+"), ("r", "+"))},
)

print("graph:", sorted(G.edges))

# through b the walk arrives on - (via ab) and leaves on + (via br): fine
info = validate_diwalk(G, Walk.of("a", "ab", "b", "br", "r"))
print("a-ab-b-br-r is a ditrail:", info.is_ditrail, "signs", info.start_sign.value, info.end_sign.value)

# through r it would arrive and leave on +: not allowed
info = validate_diwalk(G, Walk.of("a", "ar", "r", "br", "b"))
print("a-ar-r-br-b is a diwalk:", info.is_diwalk)

print()
print("ditrails from a to r, by end signs:")
for s in (PLUS, MINUS):
    for t in (PLUS, MINUS):
        w = exists_ditrail(G, "a", "r", (s, t))
        print(f"  ({s.value},{t.value}):", w.walk if w is not None else "none")

print()
print("every ditrail from b to r:")
for w in enumerate_ditrails(G, "b", "r"):
    print("  ", w.walk, f"({w.start_sign.value},{w.end_sign.value})")

# diwalks may reuse edges, so they reach more; the library only uses this as a filter
# leaving x on + the walk must turn around at y's loop and come back over e
loop = BidirectedGraph(
    "xyr",
    {"e": (("x", "+"), ("y", "-")), "l": (("y", "+"), ("y", "+")), "h": (("x", "-"), ("r", "+"))},
)
print()
print("leaving x on + towards r, with a (+,+) loop at y:")
print("  ditrail:", exists_ditrail(loop, "x", "r", (PLUS, None)) is not None)
print("  diwalk: ", diwalk_reachable(loop, "x", "r", (PLUS, None)), "(x, e, y, l, y, e, x, h, r)")
