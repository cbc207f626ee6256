"""Graph substrate tests: parsing, predicates, degeneracy, canonical forms."""

import itertools
import random

import pytest

from exgraph.core import (
    BipartiteGraph,
    EliminationOrder,
    Graph,
    GraphError,
    OddCycle,
    ParseError,
    RootedGraph,
    are_isomorphic,
    canonical_form,
    canonical_relabel,
    codegree,
    degeneracy,
    elimination_is_valid,
    induced_bipartite_subgraph,
    is_almost_regular,
    is_bipartite,
    is_critical_r_degenerate,
    parse_graph,
    serialize_graph,
)
from exgraph.constructions import (
    complete,
    complete_bipartite,
    cycle,
    path,
    prism,
)


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Parsing


def test_parse_k2():
    g = parse_graph("n 2\n0 1\n")
    assert g.n == 2 and g.num_edges == 1


def test_parse_c4():
    g = parse_graph("n 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g.num_edges == 4
    assert sorted(g.degrees) == [2, 2, 2, 2]


def test_parse_duplicate_edge_names_line():
    with pytest.raises(ParseError) as err:
        parse_graph("n 3\n0 1\n0 1\n")
    assert "line 3" in str(err.value)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("n 3\n0 3\n")  # vertex out of range
    with pytest.raises(ParseError):
        parse_graph("n 3\n1 1\n")  # loop
    with pytest.raises(ParseError):
        parse_graph("0 1\nn 2\n")  # edges before n line
    with pytest.raises(ParseError):
        parse_graph("n 2\n0 1\npart 0 0\n")  # partial labeling
    with pytest.raises(ParseError):
        parse_graph("n 2\n0 1\npart 0 0\npart 1 0\n")  # same-side edge
    with pytest.raises(ParseError):
        parse_graph("n 2\n0 1 2\n")


def test_parse_sides_and_root():
    doc = "n 3\n0 1\n1 2\npart 0 0\npart 1 1\npart 2 0\nroot 2\n"
    g = parse_graph(doc)
    assert isinstance(g, RootedGraph)
    assert g.root == 2 and g.side == (0, 1, 0)

    doc2 = "n 3\n0 1\n1 2\npart 0 0\npart 1 1\npart 2 0\n"
    b = parse_graph(doc2)
    assert isinstance(b, BipartiteGraph)


def test_roundtrip_identity():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng.randint(1, 9), 0.4, rng)
        assert parse_graph(serialize_graph(g)) == g
    b = is_bipartite(cycle(6))
    assert parse_graph(serialize_graph(b)) == b
    r = RootedGraph(cycle(4), 2)
    assert parse_graph(serialize_graph(r)) == r


def test_comments_ignored():
    g = parse_graph("# hello\nn 2  # two vertices\n0 1\n")
    assert g.num_edges == 1


# ---------------------------------------------------------------------------
# Degree bookkeeping


def test_handshake_on_random_graphs():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        assert sum(g.degrees) == 2 * g.num_edges


def test_codegree():
    c4 = cycle(4)
    assert codegree(c4, 0, 2) == 2  # diagonal pair
    assert codegree(c4, 0, 1) == 0  # adjacent pair
    k23 = complete_bipartite(2, 3).graph
    assert codegree(k23, 0, 1) == 3
    with pytest.raises(GraphError):
        codegree(c4, 1, 1)


# ---------------------------------------------------------------------------
# Bipartiteness


def test_bipartite_c4_sides():
    b = is_bipartite(cycle(4))
    assert isinstance(b, BipartiteGraph)
    assert b.side == (0, 1, 0, 1)


def test_odd_cycle_witness_k3():
    w = is_bipartite(complete(3))
    assert isinstance(w, OddCycle)
    assert len(w.cycle) == 3


def test_odd_cycle_is_a_cycle():
    rng = random.Random(7)
    found = 0
    for _ in range(60):
        g = random_graph(rng.randint(3, 9), 0.5, rng)
        res = is_bipartite(g)
        if isinstance(res, OddCycle):
            found += 1
            cyc = res.cycle
            assert len(cyc) % 2 == 1
            assert len(set(cyc)) == len(cyc)
            for i, v in enumerate(cyc):
                assert g.has_edge(v, cyc[(i + 1) % len(cyc)])
    assert found > 10


# ---------------------------------------------------------------------------
# Degeneracy


def test_degeneracy_small():
    assert degeneracy(cycle(4))[0] == 2
    assert degeneracy(complete(4))[0] == 3
    assert degeneracy(path(3))[0] == 1
    assert degeneracy(Graph.from_edges(1, []))[0] == 0


def test_degeneracy_witness_replays():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng.randint(1, 10), rng.random(), rng)
        d, elim = degeneracy(g)
        assert elimination_is_valid(g, elim, d)
        # d is minimal: no witness can do better than max back degree
        if d > 0:
            assert not elimination_is_valid(g, elim, d - 1)


def test_is_critical_r_degenerate():
    assert not is_critical_r_degenerate(cycle(4), 2)  # four degree-2 vertices
    # a triangle with a pendant vertex: unique degree-1 vertex, 1-degenerate? no
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
    assert not is_critical_r_degenerate(g, 1)  # degeneracy 2 > 1
    assert not is_critical_r_degenerate(g, 2)  # unique min degree is 1, not 2


def test_is_almost_regular():
    assert is_almost_regular(cycle(5), 1)
    assert not is_almost_regular(complete_bipartite(1, 5).graph, 2)
    assert is_almost_regular(prism(6), 1000)
    with pytest.raises(GraphError):
        is_almost_regular(Graph.from_edges(2, []), 2)


# ---------------------------------------------------------------------------
# Canonical forms


def brute_canonical(g):
    """Oracle: minimize the column-major adjacency bit string over all
    permutations by explicit enumeration."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        h = g.relabel(list(perm))
        bits = []
        for j in range(g.n):
            for i in range(j):
                bits.append((h.adj[i] >> j) & 1)
        if best is None or bits < best:
            best = bits
    return tuple(best)


def unpack_canonical(form, n):
    payload = int.from_bytes(form[1:], "big")
    nbits = n * (n - 1) // 2
    return tuple((payload >> (nbits - 1 - i)) & 1 for i in range(nbits))


def test_canonical_matches_brute_force():
    rng = random.Random(17)
    for _ in range(30):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        assert unpack_canonical(canonical_form(g), g.n) == brute_canonical(g)


def test_canonical_examples():
    assert canonical_form(cycle(4)) == canonical_form(complete_bipartite(2, 2).graph)
    assert canonical_form(path(3)) != canonical_form(complete_bipartite(1, 3).graph)


def test_canonical_invariant_under_permutation():
    rng = random.Random(23)
    for _ in range(20):
        g = random_graph(rng.randint(2, 8), rng.random(), rng)
        ref = canonical_form(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == ref


def test_canonical_distinguishes_nonisomorphic():
    # same degree sequence, not isomorphic: C6 vs two triangles
    c6 = cycle(6)
    twotri = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert canonical_form(c6) != canonical_form(twotri)


def test_canonical_limit():
    with pytest.raises(GraphError):
        canonical_form(complete(13))


def test_canonical_relabel_is_isomorphic_copy():
    rng = random.Random(31)
    for _ in range(10):
        g = random_graph(7, 0.5, rng)
        form, h = canonical_relabel(g)
        assert canonical_form(h) == form
        assert sorted(g.degrees) == sorted(h.degrees)


def test_are_isomorphic_large_fallback():
    # beyond the canonical cap: backtracking path
    rng = random.Random(41)
    g = random_graph(16, 0.25, rng)
    perm = list(range(16))
    rng.shuffle(perm)
    assert are_isomorphic(g, g.relabel(perm))
    h = random_graph(16, 0.25, random.Random(42))
    if sorted(h.degrees) == sorted(g.degrees) and h.num_edges == g.num_edges:
        pass  # cannot assert non-isomorphism cheaply; skip
    else:
        assert not are_isomorphic(g, h)


# ---------------------------------------------------------------------------
# Induced bipartite subgraphs


def test_induced_bipartite_identity():
    b = complete_bipartite(2, 2)
    sub = induced_bipartite_subgraph(b, [0, 1], [2, 3])
    assert sub.graph.num_edges == 4


def test_induced_bipartite_k13():
    b = complete_bipartite(2, 3)
    sub = induced_bipartite_subgraph(b, [0], [2, 3, 4])
    assert sub.graph.n == 4 and sub.graph.num_edges == 3


def test_induced_bipartite_k22_from_k33():
    b = complete_bipartite(3, 3)
    sub = induced_bipartite_subgraph(b, [0, 1], [3, 4])
    assert sub.graph.num_edges == 4


def test_induced_bipartite_side_errors():
    b = complete_bipartite(2, 3)
    with pytest.raises(GraphError):
        induced_bipartite_subgraph(b, [2], [3])  # 2 is on side 1
