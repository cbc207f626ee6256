"""Seeded graph corpora shared by the verification suites and the tests.

All generators take explicit seeds and use their own Random instances, so a
corpus is a pure function of its parameters.
"""

from __future__ import annotations

import random

from .core import BipartiteGraph, Graph
from .constructions import complete, complete_bipartite, cycle, path, prism
from .counting import Relation


def random_graph(n, p, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(a, b, p, rng):
    edges = [(u, a + v) for u in range(a) for v in range(b) if rng.random() < p]
    g = Graph.from_edges(a + b, edges)
    return BipartiteGraph(g, tuple([0] * a + [1] * b))


def random_relation(n, p, rng):
    pairs = [(u, w) for u in range(n) for w in range(n) if rng.random() < p]
    return Relation.from_pairs(n, pairs)


def random_nonempty_subset(n, p, rng):
    chosen = [v for v in range(n) if rng.random() < p]
    return chosen if chosen else [rng.randrange(n)]


def hom_equality_corpus():
    """30 graphs on at most 7 vertices for the walk-count equality check."""
    graphs = [cycle(k) for k in range(3, 8)]
    graphs += [path(t) for t in range(1, 7)]
    graphs += [complete(s) for s in range(2, 6)]
    graphs += [
        complete_bipartite(a, b).graph
        for a, b in ((1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4))
    ]
    graphs.append(prism(3))
    rng = random.Random(710)
    while len(graphs) < 30:
        graphs.append(random_graph(rng.randint(4, 7), rng.choice((0.3, 0.5, 0.7)), rng))
    return graphs


def convexity_corpus(seed, count):
    """Random graphs on at most 12 vertices."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(random_graph(rng.randint(2, 12), rng.choice((0.2, 0.35, 0.5, 0.7)), rng))
    return out


def relation_instance_corpus(seed, count):
    """(graph, relation, x1, x2, k) instances on at most 8 vertices."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, 8)
        g = random_graph(n, rng.choice((0.3, 0.5, 0.7)), rng)
        rel = random_relation(n, rng.choice((0.0, 0.1, 0.25, 0.5, 1.0)), rng)
        x1 = random_nonempty_subset(n, 0.6, rng)
        x2 = random_nonempty_subset(n, 0.6, rng)
        k = 2 if i % 2 == 0 else 3
        out.append((g, rel, x1, x2, k))
    return out


def cut_peel_corpus(seed, count):
    """Random graphs on at most 20 vertices, each with at least one edge."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_graph(rng.randint(2, 20), rng.choice((0.2, 0.4, 0.6, 0.9)), rng)
        if g.num_edges >= 1:
            out.append(g)
    return out


def partition_corpus(seed, count, min_right_degree=30):
    """Dense bipartite hosts whose side-1 minimum degree meets the floor."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        b = random_bipartite(40, rng.randint(8, 14), 0.88, rng)
        if min(b.graph.degree(v) for v in b.side_vertices(1)) >= min_right_degree:
            out.append(b)
    return out
