"""Graph families with documented, reproducible labelings.

Every construction fixes an explicit vertex numbering so that witnesses,
elimination orders, and golden files are stable across runs.
"""

from __future__ import annotations

from enum import Enum

from .core import (
    BipartiteGraph,
    EliminationOrder,
    Graph,
    GraphError,
    RootedGraph,
    as_graph,
)


# ---------------------------------------------------------------------------
# Standard graphs


def cycle(length):
    """Cycle 0-1-...-(length-1)-0."""
    if length < 3:
        raise GraphError("cycle needs length >= 3")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def path(t):
    """Path with t edges on vertices 0..t (a single vertex when t = 0)."""
    if t < 0:
        raise GraphError("path length must be >= 0")
    return Graph.from_edges(t + 1, [(i, i + 1) for i in range(t)])


def complete(s):
    if s < 1:
        raise GraphError("complete graph needs >= 1 vertex")
    return Graph.from_edges(s, [(u, v) for u in range(s) for v in range(u + 1, s)])


def complete_bipartite(a, b):
    """K_{a,b} with side 0 = vertices 0..a-1, side 1 = a..a+b-1."""
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs nonempty sides")
    g = Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])
    return BipartiteGraph(g, tuple([0] * a + [1] * b))


# ---------------------------------------------------------------------------
# Gluing


def glue(h1, h2):
    """Identify the two roots into one vertex.

    Labeling: vertices of ``h1`` keep their ids; non-root vertices of ``h2``
    follow in input order.  The result is rooted at the merged vertex, has
    v(h1)+v(h2)-1 vertices and e(h1)+e(h2) edges, and the merged vertex has
    degree deg(root1)+deg(root2).
    """
    g1, g2 = h1.graph, h2.graph
    if g1.n == 0 or g2.n == 0:
        raise GraphError("glue needs nonempty graphs")
    n1 = g1.n
    remap = {}
    nxt = n1
    for v in range(g2.n):
        if v == h2.root:
            remap[v] = h1.root
        else:
            remap[v] = nxt
            nxt += 1
    edges = g1.edges() + [(remap[u], remap[v]) for u, v in g2.edges()]
    return RootedGraph(Graph.from_edges(nxt, edges), h1.root)


# ---------------------------------------------------------------------------
# Cartesian products and prisms


class ProductEdgeType(Enum):
    LEFT_FACTOR = "left-factor"
    RIGHT_FACTOR = "right-factor"


def cartesian_product(g, h):
    """Cartesian product; vertex (u, v) gets id u*v(h)+v.

    Returns the product graph and a tag per edge telling which factor it came
    from: an edge keeping the right coordinate fixed comes from the left
    factor, and vice versa.
    """
    g, h = as_graph(g), as_graph(h)
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product needs nonempty factors")
    edges = []
    tags = {}

    def vid(u, v):
        return u * h.n + v

    for u in range(g.n):
        for a, b in h.edges():
            e = (vid(u, a), vid(u, b))
            edges.append(e)
            tags[e] = ProductEdgeType.RIGHT_FACTOR
    for a, b in g.edges():
        for v in range(h.n):
            e = (vid(a, v), vid(b, v))
            edges.append(e)
            tags[e] = ProductEdgeType.LEFT_FACTOR
    return Graph.from_edges(g.n * h.n, edges), tags


def prism(length):
    """Two ``length``-cycles joined by a perfect matching (C x K2).

    Vertex (i, s) of cycle position i and layer s has id 2*i+s.
    """
    if length < 3:
        raise GraphError("prism needs cycle length >= 3")
    product, _ = cartesian_product(cycle(length), complete(2))
    return product


def path_prism(t):
    """Ladder on 2(t+1) vertices: the t-edge path times an edge."""
    if t < 1:
        raise GraphError("path prism needs t >= 1")
    product, _ = cartesian_product(path(t), complete(2))
    side = tuple((v // 2 + v % 2) % 2 for v in range(product.n))
    return BipartiteGraph(product, side)


# ---------------------------------------------------------------------------
# Critical r-degenerate family


def critical_family(r):
    """Bipartite graph with a unique degree-r vertex and all others >= r+1.

    Three-step build, labeled as follows:

    * X = 0..r-1 and Y = r..2r, joined completely (Y has r+1 vertices);
    * for i = 1..r, vertex 2r+i is adjacent to Y minus its i-th vertex
      (the subset avoiding Y's first vertex is the one omitted);
    * vertex 3r+1 is adjacent to all of 2r+1..3r and is the root.

    Totals: 3r+2 vertices and 2r^2+2r edges.
    """
    if r < 2:
        raise GraphError("critical family needs r >= 2")
    edges = [(x, r + i) for x in range(r) for i in range(r + 1)]
    for i in range(1, r + 1):
        z = 2 * r + i
        edges += [(z, r + j) for j in range(r + 1) if j != i]
    w = 3 * r + 1
    edges += [(w, 2 * r + i) for i in range(1, r + 1)]
    return RootedGraph(Graph.from_edges(3 * r + 2, edges), w)


# ---------------------------------------------------------------------------
# Glued prisms

# Labeling used by glued_prism / glued_prism_minus, with N = 8L-2 and the two
# prisms sharing the matching edge {2L-1, 6L-2}:
#
#   cycle A: 0 .. 2L-1            (right prism, first layer)
#   cycle B: 2L-1 .. 4L-2         (left prism, first layer)
#   cycle C: 4L-1 .. 6L-2         (left prism, second layer)
#   cycle D: 6L-2 .. 8L-3         (right prism, second layer)
#   matching: u -- (8L-3-u) for u = 0 .. 4L-2
#
# where "2L" abbreviates the cycle length 2*ell.


def _glued_prism_edges(ell):
    L2 = 2 * ell
    top = 4 * L2 - 3  # 8*ell-3, the largest vertex id
    edges = []
    for lo, hi in ((0, L2 - 1), (L2 - 1, 2 * L2 - 2),
                   (2 * L2 - 1, 3 * L2 - 2), (3 * L2 - 2, 4 * L2 - 3)):
        edges += [(i, i + 1) for i in range(lo, hi)]
        edges.append((hi, lo))
    edges += [(u, top - u) for u in range(2 * L2 - 1)]
    return edges


def glued_prism(ell):
    """Two prisms over the 2*ell cycle sharing one matching edge.

    8*ell-2 vertices and 12*ell-1 edges; the shared edge is
    {2*ell-1, 6*ell-2} and its endpoints are the only degree-5 vertices.
    """
    if ell < 3:
        raise GraphError("glued prism needs ell >= 3")
    return Graph.from_edges(8 * ell - 2, _glued_prism_edges(ell))


def glued_prism_minus(ell):
    """Glued prism minus the shared edge and one incident cycle edge.

    Removes the shared matching edge {2*ell-1, 6*ell-2} and the cycle edge
    {0, 2*ell-1} next to its first endpoint.  Vertex 0 becomes the unique
    degree-2 vertex and is the root; {2*ell-1, 6*ell-2} end up with degrees
    3 and 4.
    """
    if ell < 3:
        raise GraphError("glued prism needs ell >= 3")
    g = glued_prism(ell)
    g = g.without_edges([(2 * ell - 1, 6 * ell - 2), (0, 2 * ell - 1)])
    return RootedGraph(g, 0)


def glued_prism_minus_witness(ell):
    """Elimination order certifying that glued_prism_minus is 2-degenerate.

    Peeling vertices in increasing id order removes at most two neighbors'
    worth of back edges at every step; the witness is that order reversed,
    with back degrees recomputed from the graph.
    """
    g = glued_prism_minus(ell).graph
    order = tuple(range(g.n - 1, -1, -1))
    seen = 0
    back = []
    for v in order:
        back.append((g.adj[v] & seen).bit_count())
        seen |= 1 << v
    return EliminationOrder(order, tuple(back))


def glued_prism_halves(ell):
    """The two prism copies inside glued_prism(ell), as vertex maps.

    Each map sends vertex 2*i+s of prism(2*ell) to its image in the glued
    graph; the two images overlap in exactly the two shared-edge endpoints.
    """
    L2 = 2 * ell
    top = 4 * L2 - 3
    right = []
    left = []
    for i in range(L2):
        right += [i, top - i]
        left += [L2 - 1 + i, top - (L2 - 1 + i)]
    return tuple(right), tuple(left)
