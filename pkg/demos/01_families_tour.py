"""Tour of the construction families and their structural certificates.

Run:  python3 demos/01_families_tour.py
"""

from exgraph import (
    cartesian_product,
    complete,
    critical_family,
    cycle,
    degeneracy,
    elimination_is_valid,
    glue,
    glued_prism,
    glued_prism_minus,
    glued_prism_minus_witness,
    is_bipartite,
    is_critical_r_degenerate,
    prism,
    serialize_graph,
)
from exgraph.core import BipartiteGraph

print("== products and prisms ==")
square, tags = cartesian_product(complete(2), complete(2))
print(f"K2 x K2 has {square.n} vertices, {square.num_edges} edges (a 4-cycle)")
for ell in (3, 4, 7):
    p = prism(ell)
    bip = isinstance(is_bipartite(p), BipartiteGraph)
    print(f"prism({ell}): {p.n} vertices, {p.num_edges} edges, bipartite={bip}")

print()
print("== the critical family ==")
for r in range(2, 5):
    h = critical_family(r)
    g = h.graph
    print(
        f"r={r}: {g.n} vertices, {g.num_edges} edges, "
        f"root degree {g.degree(h.root)}, "
        f"critical={is_critical_r_degenerate(g, r)}"
    )

print()
print("== gluing two critical graphs kills degeneracy ==")
h = critical_family(2)
merged = glue(h, h)
d, _ = degeneracy(merged.graph)
print(
    f"glued: {merged.graph.n} vertices, {merged.graph.num_edges} edges, "
    f"min degree {merged.graph.min_degree()}, degeneracy {d} (> 2)"
)

print()
print("== glued prisms and the 54-vertex example ==")
for ell in (3, 7):
    g = glued_prism(ell)
    print(f"glued_prism({ell}): {g.n} vertices, {g.num_edges} edges")
rooted = glued_prism_minus(7)
g = rooted.graph
witness = glued_prism_minus_witness(7)
print(
    f"glued_prism_minus(7): {g.n} vertices, {g.num_edges} edges, "
    f"unique degree-2 vertex {rooted.root}"
)
print(
    "construction order certifies 2-degeneracy:",
    elimination_is_valid(g, witness, 2),
)
print("critical 2-degenerate:", is_critical_r_degenerate(g, 2))

print()
print("== edge-list serialization (first lines of the r=2 graph) ==")
for line in serialize_graph(critical_family(2)).splitlines()[:6]:
    print(" ", line)
