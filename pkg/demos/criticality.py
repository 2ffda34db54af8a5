"""From matchings to radials.

Take an undirected graph and a perfect matching of it with one vertex left
out (a factor for b lowered at r). Sign matched edges (-,-) and the rest
(+,+). The graph is factor-critical exactly when every vertex then has a
(-,+)-ditrail to r. This script runs the comparison on a few small graphs.

    python3 demos/criticality.py
"""

import networkx as nx

from biradial import PLUS, BidirectedGraph, Edge, PreconditionError, criticality_crosscheck, is_b_critical


def from_networkx(g: nx.Graph) -> BidirectedGraph:
    return BidirectedGraph(
        [str(v) for v in g], [Edge.make(f"e{i}", str(u), PLUS, str(v), PLUS) for i, (u, v) in enumerate(g.edges())]
    )


examples = {
    "triangle": nx.cycle_graph(3),
    "5-cycle": nx.cycle_graph(5),
    "bowtie": nx.from_edgelist([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
    "path on 3": nx.path_graph(3),
    "4-cycle": nx.cycle_graph(4),
}

for name, g in examples.items():
    G = from_networkx(g)
    b = {v: 1 for v in G.vertices}
    critical = is_b_critical(G, b)
    verdicts = []
    for r in G.sorted_vertices():
        try:
            verdicts.append(f"{r}:{'agree' if criticality_crosscheck(G, b, r) else 'DISAGREE'}")
        except PreconditionError:
            verdicts.append(f"{r}:-")
    print(f"{name:10s} factor-critical={critical!s:5s} roots {' '.join(verdicts)}")

print("('-' marks a root with no matching that misses it)")
