"""Linear and sublinear graphs are digraphs in disguise.

Strip the (alpha, alpha)-edges off a sublinear radial and what is left is an
ordinary digraph in which every vertex can reach the root. This script shows
the decomposition for a graph that passes and one that fails.

    python3 demos/linear_structure.py
"""

from biradial import PLUS, BidirectedGraph, Edge, recognize, refute, scc_poset
from biradial.construct import decompose_linear, decompose_sublinear

# a -> b -> r and a (+,+) chord between a and r
G = BidirectedGraph(
    "rab",
    {"ab": (("a", "+"), ("b", "-")), "br": (("b", "+"), ("r", "-")), "h": (("a", "+"), ("r", "+"))},
)

core = decompose_sublinear(G, "r", PLUS)
print("sublinear core base edges:", sorted(core.base.edges), "added:", [e.id for e in core.added])
poset = scc_poset(core.base, PLUS)
print("strong components of the base:", poset.to_json()["components"], "top:", sorted(poset.maximum()))

core = decompose_linear(G, "r", PLUS)
print("linear core:", [sorted(c.component) for c in core.contacts], "joined through",
      [c.edge.id for c in core.contacts], "extra edges", [e.id for e in core.added])
print("agrees with the definition:", recognize(G, "r", PLUS, "linear"), recognize(G, "r", PLUS, "sublinear"))

# an arc out of r breaks linearity: r now sits below a in the order
bad = G.add(edges=[Edge.make("f", "r", "+", "a", "-")])
print()
print("after adding an arc r -> a:")
print("  structural test:", decompose_linear(bad, "r", PLUS).reason)
print("  definitional test:", refute(bad, "r", PLUS, "linear").reason)
