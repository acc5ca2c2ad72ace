"""
Symbolic against ordinary powers of edge ideals
================================================

For an edge ideal I(G) the module I^(t)/I^t vanishes exactly when G is
bipartite.  Its dimension grows with t and eventually settles.  This script
prints the dimension sequence for a few small graphs.
"""

from monlc import Graph, odd_cycle_census
from monlc.symbolic import cm_edge_report, discrepancy_report, unicyclic_stable_dim

graphs = {
    "hexagon": Graph.cycle(6),
    "pentagon": Graph.cycle(5),
    "triangle with a path of length two": Graph(5, [(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)]),
    "pentagon and triangle sharing a vertex, two leaves": Graph(9, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5),
                                                         (1, 6), (1, 7), (6, 7), (7, 8), (7, 9)]),
}

for name, G in graphs.items():
    census = odd_cycle_census(G)
    rep = discrepancy_report(G, 4, cm=False)
    print(f"{name}: c(G)={census.c}  dims for t=1..4: {list(rep.dims)}")
    if census.is_unicyclic and census.c > 0:
        print("   one odd cycle; predicted stable dimension", unicyclic_stable_dim(G))

# when every odd cycle dominates the graph the quotients stay zero-dimensional
rep = cm_edge_report(Graph.cycle(5), 4)
print("pentagon: every odd cycle dominates =", rep.condition4, " all CM =", rep.all_cm)
rep = cm_edge_report(graphs["triangle with a path of length two"], 4)
print("triangle with path: every odd cycle dominates =", rep.condition4, " all CM =", rep.all_cm)
