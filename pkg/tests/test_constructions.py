"""Construction families: counts, degrees, criticality, containments."""

import random

import pytest

from exgraph.core import (
    BipartiteGraph,
    Graph,
    GraphError,
    OddCycle,
    are_isomorphic,
    canonical_form,
    degeneracy,
    elimination_is_valid,
    is_bipartite,
    is_critical_r_degenerate,
)
from exgraph.constructions import (
    ProductEdgeType,
    cartesian_product,
    complete,
    complete_bipartite,
    critical_family,
    cycle,
    glue,
    glued_prism,
    glued_prism_halves,
    glued_prism_minus,
    glued_prism_minus_witness,
    path,
    path_prism,
    prism,
)
from exgraph.core import RootedGraph
from exgraph.counting import Embedding, verify_embedding


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Standard graphs


def test_standard_graphs():
    assert cycle(4).num_edges == 4
    assert complete_bipartite(2, 3).graph.num_edges == 6
    assert path(0).n == 1 and path(0).num_edges == 0
    assert complete(4).num_edges == 6
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(-1)
    with pytest.raises(GraphError):
        complete_bipartite(0, 3)


# ---------------------------------------------------------------------------
# Gluing


def test_glue_two_edges_is_path():
    k2 = RootedGraph(complete(2), 0)
    g = glue(k2, k2)
    assert are_isomorphic(g.graph, path(2))
    assert g.graph.degree(g.root) == 2


def test_glue_two_c4():
    c4 = RootedGraph(cycle(4), 0)
    g = glue(c4, c4)
    assert g.graph.n == 7
    assert g.graph.num_edges == 8
    assert g.graph.degree(g.root) == 4


def test_glue_count_property():
    rng = random.Random(9)
    for _ in range(40):
        g1 = random_graph(rng.randint(1, 7), rng.random(), rng)
        g2 = random_graph(rng.randint(1, 7), rng.random(), rng)
        h1 = RootedGraph(g1, rng.randrange(g1.n))
        h2 = RootedGraph(g2, rng.randrange(g2.n))
        glued = glue(h1, h2)
        assert glued.graph.n == g1.n + g2.n - 1
        assert glued.graph.num_edges == g1.num_edges + g2.num_edges
        assert glued.graph.degree(glued.root) == g1.degree(h1.root) + g2.degree(h2.root)


def test_glue_of_critical_pair_loses_degeneracy():
    h = critical_family(2)
    g = glue(h, h)
    assert g.graph.n == 15
    assert g.graph.num_edges == 24
    assert g.graph.min_degree() == 3
    assert degeneracy(g.graph)[0] > 2


# ---------------------------------------------------------------------------
# Cartesian products


def test_product_k2_k2_is_c4():
    g, tags = cartesian_product(complete(2), complete(2))
    assert are_isomorphic(g, cycle(4))
    assert len(tags) == 4


def test_product_triangle_prism():
    g, _ = cartesian_product(cycle(3), complete(2))
    assert g.n == 6 and g.num_edges == 9
    assert set(g.degrees) == {3}


def test_product_p2_k2():
    g, _ = cartesian_product(path(2), complete(2))
    assert g.n == 6 and g.num_edges == 7


def test_product_count_formulas():
    rng = random.Random(13)
    for _ in range(50):
        a = random_graph(rng.randint(1, 6), rng.random(), rng)
        b = random_graph(rng.randint(1, 6), rng.random(), rng)
        g, tags = cartesian_product(a, b)
        assert g.n == a.n * b.n
        assert g.num_edges == a.n * b.num_edges + b.n * a.num_edges
        assert len(tags) == g.num_edges
        lefts = sum(1 for t in tags.values() if t is ProductEdgeType.LEFT_FACTOR)
        assert lefts == b.n * a.num_edges


# ---------------------------------------------------------------------------
# Prisms


def test_prism_counts():
    g = prism(3)
    assert g.n == 6 and g.num_edges == 9
    g = prism(4)
    assert g.n == 8 and g.num_edges == 12
    assert isinstance(is_bipartite(g), BipartiteGraph)
    assert are_isomorphic(g, cartesian_product(cycle(4), complete(2))[0])
    big = prism(14)
    assert big.n == 28 and big.num_edges == 42
    assert isinstance(is_bipartite(big), BipartiteGraph)
    assert isinstance(is_bipartite(prism(5)), OddCycle)


def test_path_prism():
    b = path_prism(1)
    assert are_isomorphic(b.graph, cycle(4))
    b = path_prism(2)
    assert b.graph.n == 6 and b.graph.num_edges == 7
    b = path_prism(8)
    assert b.graph.n == 18 and b.graph.num_edges == 25


# ---------------------------------------------------------------------------
# Critical family


def test_critical_family_r2():
    h = critical_family(2)
    assert h.graph.n == 8
    assert h.graph.num_edges == 12
    assert sorted(h.graph.degrees) == [2, 3, 3, 3, 3, 3, 3, 4]
    assert h.graph.degree(h.root) == 2
    assert is_critical_r_degenerate(h.graph, 2)
    b = is_bipartite(h.graph)
    assert isinstance(b, BipartiteGraph)
    # sides split as X with the subset vertices, Y with the final vertex
    r = 2
    x_side = b.side[0]
    assert all(b.side[v] == x_side for v in range(r))
    assert all(b.side[r + i] != x_side for i in range(r + 1))
    assert all(b.side[2 * r + i] == x_side for i in range(1, r + 1))
    assert b.side[3 * r + 1] != x_side


def test_critical_family_counts_and_predicate():
    for r in range(2, 7):
        h = critical_family(r)
        assert h.graph.n == 3 * r + 2
        assert h.graph.num_edges == 2 * r * r + 2 * r
        assert isinstance(is_bipartite(h.graph), BipartiteGraph)
        assert is_critical_r_degenerate(h.graph, r)
        assert h.graph.degree(h.root) == r


def test_critical_family_r3():
    h = critical_family(3)
    assert h.graph.n == 11 and h.graph.num_edges == 24


# ---------------------------------------------------------------------------
# Glued prisms


def test_glued_prism_counts():
    g = glued_prism(3)
    assert g.n == 22 and g.num_edges == 35
    g = glued_prism(7)
    assert g.n == 54 and g.num_edges == 83
    degs = sorted(g.degrees)
    assert degs.count(5) == 2 and degs.count(3) == 52


def test_glued_prism_shared_edge():
    for ell in (3, 5):
        g = glued_prism(ell)
        fives = [v for v in range(g.n) if g.degree(v) == 5]
        assert len(fives) == 2
        assert g.has_edge(*fives)


def test_glued_prism_minus_figure_family():
    for ell in range(3, 9):
        r = glued_prism_minus(ell)
        g = r.graph
        assert g.n == 8 * ell - 2
        assert g.num_edges == 12 * ell - 3
        degs = g.degrees
        assert degs[r.root] == 2
        assert sum(1 for d in degs if d == 2) == 1
        assert all(d >= 3 for v, d in enumerate(degs) if v != r.root)
        assert sum(1 for d in degs if d == 4) == 1
        d, elim = degeneracy(g)
        assert d == 2
        assert elimination_is_valid(g, elim, 2)
        witness = glued_prism_minus_witness(ell)
        assert elimination_is_valid(g, witness, 2)
        assert is_critical_r_degenerate(g, 2)


def test_glued_prism_minus_54_vertices():
    r = glued_prism_minus(7)
    assert r.graph.n == 54
    assert r.graph.num_edges == 81


def test_glued_prism_minus_merged_pair_degrees():
    r = glued_prism_minus(7)
    merged = (2 * 7 - 1, 6 * 7 - 2)
    degs = {v: r.graph.degree(v) for v in merged}
    assert sorted(degs.values()) == [3, 4]


def test_alternate_removed_cycle_edge_is_isomorphic():
    # removing the matching edge plus either cycle edge at the same endpoint
    # gives isomorphic graphs
    for ell in (3, 4):
        g = glued_prism(ell)
        e1 = (2 * ell - 1, 6 * ell - 2)
        ours = g.without_edges([e1, (0, 2 * ell - 1)])
        other = g.without_edges([e1, (2 * ell - 2, 2 * ell - 1)])
        assert are_isomorphic(ours, other)


def test_prism_halves_embed_and_overlap():
    for ell in (3, 4):
        host = glued_prism(ell)
        pat = prism(2 * ell)
        right, left = glued_prism_halves(ell)
        for mapping in (right, left):
            emb = Embedding(pat, host, tuple(mapping))
            assert verify_embedding(emb)
        shared = set(right) & set(left)
        assert len(shared) == 2
        u, v = sorted(shared)
        assert host.has_edge(u, v)


def test_glued_prism_minus_label_invariance():
    # 54 vertices is beyond the canonical cap; the fallback isomorphism
    # path must still recognize relabelings
    g = glued_prism_minus(7).graph
    rng = random.Random(47)
    for _ in range(3):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert are_isomorphic(g, g.relabel(perm))
