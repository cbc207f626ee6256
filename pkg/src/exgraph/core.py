"""Immutable bitset-backed graphs and the predicates everything else builds on.

Vertices are dense integers 0..n-1.  Adjacency is one Python int bitmask per
vertex, which keeps neighbourhood intersections (codegrees, embedding
feasibility) cheap on the small graphs this package targets and makes graph
values hashable.

The text format shared by the whole package is line oriented::

    # comment
    n 5
    0 1          one edge per line, 0-based, u != v, each pair at most once
    part 0 0     optional side labels (all vertices labeled, or none)
    root 3       optional distinguished vertex (at most one)

Serialisation emits edges sorted lexicographically, so parse -> serialize ->
parse is the identity on the graph, labels and root included.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class ParseError(GraphError):
    """Malformed edge-list document; carries the 1-based offending line."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _bits(mask):
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    n: int
    adj: tuple

    @staticmethod
    def from_edges(n, edges):
        if n < 0:
            raise GraphError("negative vertex count")
        masks = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return Graph(n, tuple(masks))

    @staticmethod
    def from_masks(n, masks):
        """Build from adjacency masks, validating symmetry and no loops."""
        if len(masks) != n:
            raise GraphError("mask count != n")
        for v, m in enumerate(masks):
            if m >> n:
                raise GraphError(f"mask of {v} references vertices >= {n}")
            if (m >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, m in enumerate(masks):
            for u in _bits(m):
                if not (masks[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")
        return Graph(n, tuple(masks))

    @cached_property
    def num_edges(self):
        return sum(m.bit_count() for m in self.adj) // 2

    @cached_property
    def degrees(self):
        return tuple(m.bit_count() for m in self.adj)

    def degree(self, v):
        return self.adj[v].bit_count()

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v):
        return list(_bits(self.adj[v]))

    def edges(self):
        """Edges as (u, v) with u < v, sorted lexicographically."""
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            for off in _bits(m):
                out.append((u, u + 1 + off))
        return out

    def min_degree(self):
        return min(self.degrees) if self.n else 0

    def max_degree(self):
        return max(self.degrees) if self.n else 0

    def relabel(self, perm):
        """Image under the permutation ``perm`` (vertex i becomes perm[i])."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel requires a permutation of 0..n-1")
        masks = [0] * self.n
        for v in range(self.n):
            m = 0
            for u in _bits(self.adj[v]):
                m |= 1 << perm[u]
            masks[perm[v]] = m
        return Graph(self.n, tuple(masks))

    def restrict_edges(self, keep_mask):
        """Same vertex set, keeping only edges inside ``keep_mask``."""
        masks = tuple(
            self.adj[v] & keep_mask if (keep_mask >> v) & 1 else 0
            for v in range(self.n)
        )
        return Graph(self.n, masks)

    def without_edges(self, edges):
        masks = list(self.adj)
        for u, v in edges:
            if not (masks[u] >> v) & 1:
                raise GraphError(f"edge ({u},{v}) not present")
            masks[u] &= ~(1 << v)
            masks[v] &= ~(1 << u)
        return Graph(self.n, tuple(masks))

    def induced(self, vertices):
        """Induced subgraph relabeled densely by ascending original id."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        keep = 0
        for v in verts:
            keep |= 1 << v
        masks = [0] * len(verts)
        for v in verts:
            for u in _bits(self.adj[v] & keep):
                masks[index[v]] |= 1 << index[u]
        return Graph(len(verts), tuple(masks))


@dataclass(frozen=True)
class BipartiteGraph:
    """Graph plus a two-part labeling; every edge joins side 0 to side 1."""

    graph: Graph
    side: tuple

    def __post_init__(self):
        g = self.graph
        if len(self.side) != g.n:
            raise GraphError("side labels must cover all vertices")
        if any(s not in (0, 1) for s in self.side):
            raise GraphError("side labels must be 0 or 1")
        for u, v in g.edges():
            if self.side[u] == self.side[v]:
                raise GraphError(f"edge ({u},{v}) inside side {self.side[u]}")
        if g.num_edges and (0 not in self.side or 1 not in self.side):
            raise GraphError("a side is empty although edges exist")

    def side_vertices(self, s):
        return [v for v in range(self.graph.n) if self.side[v] == s]

    def side_mask(self, s):
        m = 0
        for v in range(self.graph.n):
            if self.side[v] == s:
                m |= 1 << v
        return m


@dataclass(frozen=True)
class RootedGraph:
    """Graph with one distinguished vertex; ``side`` travels along if known."""

    graph: Graph
    root: int
    side: tuple = None

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise GraphError(f"root {self.root} outside 0..{self.graph.n - 1}")
        if self.side is not None:
            BipartiteGraph(self.graph, self.side)  # validates


@dataclass(frozen=True)
class EliminationOrder:
    """Degeneracy witness: order[p] has back_degrees[p] neighbors among
    order[0..p-1], the vertex's degree at the moment it was peeled."""

    order: tuple
    back_degrees: tuple


@dataclass(frozen=True)
class OddCycle:
    """Witness that a graph is not bipartite; ``cycle`` is a closed odd walk
    of distinct vertices with consecutive vertices adjacent."""

    cycle: tuple


def as_graph(g):
    """Unwrap any of Graph/BipartiteGraph/RootedGraph to the bare Graph."""
    if isinstance(g, Graph):
        return g
    if isinstance(g, (BipartiteGraph, RootedGraph)):
        return g.graph
    raise TypeError(f"not a graph value: {g!r}")


# ---------------------------------------------------------------------------
# Parsing and serialisation


def parse_graph(text):
    """Parse the edge-list format.

    Returns a Graph, a BipartiteGraph when ``part`` lines are present, or a
    RootedGraph when a ``root`` line is present (side labels, if any, are
    carried on the RootedGraph).
    """
    n = None
    edges = []
    edge_lines = {}
    parts = {}
    root = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "n" or len(tokens) != 2:
                raise ParseError(lineno, "expected 'n <count>' first")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {tokens[1]!r}")
            if n < 0:
                raise ParseError(lineno, "negative vertex count")
            continue
        if tokens[0] == "part":
            if len(tokens) != 3:
                raise ParseError(lineno, "expected 'part <vertex> <0|1>'")
            v, s = _parse_int(lineno, tokens[1]), _parse_int(lineno, tokens[2])
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex {v} >= n")
            if s not in (0, 1):
                raise ParseError(lineno, f"side must be 0 or 1, got {s}")
            if v in parts:
                raise ParseError(lineno, f"vertex {v} labeled twice")
            parts[v] = s
            continue
        if tokens[0] == "root":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'root <vertex>'")
            if root is not None:
                raise ParseError(lineno, "second root line")
            root = _parse_int(lineno, tokens[1])
            if not 0 <= root < n:
                raise ParseError(lineno, f"vertex {root} >= n")
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, f"malformed line {raw!r}")
        u, v = _parse_int(lineno, tokens[0]), _parse_int(lineno, tokens[1])
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"edge ({u},{v}) has a vertex >= n")
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in edge_lines:
            raise ParseError(lineno, f"duplicate edge ({key[0]},{key[1]})")
        edge_lines[key] = lineno
        edges.append(key)
    if n is None:
        raise ParseError(1, "empty document")
    graph = Graph.from_edges(n, edges)
    side = None
    if parts:
        if len(parts) != n:
            raise ParseError(
                max(1, len(text.splitlines())),
                f"{len(parts)} of {n} vertices labeled; label all or none",
            )
        side = tuple(parts[v] for v in range(n))
        for (u, v), lineno in edge_lines.items():
            if side[u] == side[v]:
                raise ParseError(
                    lineno, f"edge ({u},{v}) joins two side-{side[u]} vertices"
                )
    if root is not None:
        return RootedGraph(graph, root, side)
    if side is not None:
        return BipartiteGraph(graph, side)
    return graph


def _parse_int(lineno, token):
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {token!r}")


def serialize_graph(g):
    """Emit the edge-list format (edges sorted, then parts, then root)."""
    graph = as_graph(g)
    side = getattr(g, "side", None)
    root = g.root if isinstance(g, RootedGraph) else None
    lines = [f"n {graph.n}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    if side is not None:
        lines += [f"part {v} {side[v]}" for v in range(graph.n)]
    if root is not None:
        lines.append(f"root {root}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Elementary quantities and predicates


def codegree(g, u, v):
    """Number of common neighbors of two distinct vertices."""
    g = as_graph(g)
    if u == v:
        raise GraphError("codegree of a vertex with itself is undefined")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range: ({u},{v})")
    return (g.adj[u] & g.adj[v]).bit_count()


def is_bipartite(g):
    """Two-color the graph; return a BipartiteGraph or an OddCycle witness.

    Coloring is deterministic: each component is explored breadth-first from
    its smallest vertex, which gets side 0.
    """
    g = as_graph(g)
    side = [None] * g.n
    parent = [None] * g.n
    for start in range(g.n):
        if side[start] is not None:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for v in queue:
                for u in _bits(g.adj[v]):
                    if side[u] is None:
                        side[u] = 1 - side[v]
                        parent[u] = v
                        nxt.append(u)
                    elif side[u] == side[v]:
                        return OddCycle(_odd_cycle(parent, u, v))
            queue = nxt
    return BipartiteGraph(g, tuple(side))


def _odd_cycle(parent, u, v):
    """Close the BFS tree paths of u and v at their meeting point."""
    pu = [u]
    seen = {u: 0}
    x = u
    while parent[x] is not None:
        x = parent[x]
        seen[x] = len(pu)
        pu.append(x)
    pv = [v]
    x = v
    while x not in seen:
        x = parent[x]
        pv.append(x)
    return tuple(pu[: seen[x] + 1] + list(reversed(pv[:-1])))


def degeneracy(g):
    """Smallest r admitting an elimination order of back-degree <= r.

    Peels a minimum-degree vertex (smallest id on ties) until the graph is
    empty; returns (r, witness) with the witness order reversed so every
    vertex has at most r neighbors earlier in the order.
    """
    g = as_graph(g)
    if g.n < 1:
        raise GraphError("degeneracy needs at least one vertex")
    deg = list(g.degrees)
    alive = (1 << g.n) - 1
    removal = []
    removal_deg = []
    d = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if (alive >> u) & 1), key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        removal.append(v)
        removal_deg.append(deg[v])
        alive &= ~(1 << v)
        for u in _bits(g.adj[v] & alive):
            deg[u] -= 1
    order = tuple(reversed(removal))
    back = tuple(reversed(removal_deg))
    return d, EliminationOrder(order, back)


def elimination_is_valid(g, elim, d):
    """Replay a witness: every vertex must see <= d earlier neighbors, and
    back_degrees must match the graph."""
    g = as_graph(g)
    if sorted(elim.order) != list(range(g.n)):
        return False
    seen = 0
    for pos, v in enumerate(elim.order):
        cnt = (g.adj[v] & seen).bit_count()
        if cnt > d or cnt != elim.back_degrees[pos]:
            return False
        seen |= 1 << v
    return True


def is_critical_r_degenerate(g, r):
    """Degeneracy at most r, exactly one vertex of degree r, rest >= r+1."""
    g = as_graph(g)
    if r < 1:
        raise GraphError("r must be >= 1")
    if g.n == 0:
        return False
    degs = g.degrees
    if sum(1 for x in degs if x == r) != 1 or any(x < r for x in degs):
        return False
    d, _ = degeneracy(g)
    return d <= r


def is_almost_regular(g, k):
    """Whether the maximum degree is at most ``k`` times the minimum degree."""
    g = as_graph(g)
    if k < 1:
        raise GraphError("ratio must be >= 1")
    for v in range(g.n):
        if g.adj[v] == 0:
            raise GraphError(f"vertex {v} is isolated; minimum degree is 0")
    return g.max_degree() <= k * g.min_degree()


def induced_bipartite_subgraph(b, left, right):
    """Subgraph of a bipartite graph on chosen vertices of each side.

    Vertices are relabeled densely: sorted ``left`` first, then sorted
    ``right``; only edges with one end in each set survive.
    """
    if not isinstance(b, BipartiteGraph):
        raise TypeError("induced_bipartite_subgraph expects a BipartiteGraph")
    left = sorted(set(left))
    right = sorted(set(right))
    for v in left:
        if b.side[v] != 0:
            raise GraphError(f"vertex {v} is not on side 0")
    for v in right:
        if b.side[v] != 1:
            raise GraphError(f"vertex {v} is not on side 1")
    index = {v: i for i, v in enumerate(left + right)}
    nL = len(left)
    edges = []
    for v in left:
        for u in _bits(b.graph.adj[v]):
            if u in index and index[u] >= nL:
                edges.append((index[v], index[u]))
    graph = Graph.from_edges(len(index), edges)
    return BipartiteGraph(graph, tuple([0] * nL + [1] * len(right)))


# ---------------------------------------------------------------------------
# Canonical forms

CANONICAL_LIMIT = 12


def canonical_form(g, limit=CANONICAL_LIMIT):
    """Canonical byte string: equal bytes iff isomorphic graphs.

    Minimizes the upper-triangular adjacency bit string, read column by
    column, over all vertex orderings.  Backtracking keeps only orderings
    whose next column block can still tie the best string, and never tries
    two interchangeable (twin) vertices at the same position.  Exact but
    exponential, hence the size cap.
    """
    bytes_form, _ = canonical_relabel(g, limit)
    return bytes_form


def canonical_relabel(g, limit=CANONICAL_LIMIT):
    """Canonical bytes plus an isomorphic copy carrying the canonical labels."""
    g = as_graph(g)
    if g.n > limit:
        raise GraphError(f"canonical form capped at {limit} vertices, got {g.n}")
    n, adj, deg = g.n, g.adj, g.degrees
    if n == 0:
        return b"\x00", g

    sentinel = 1 << n  # exceeds every column block
    best = [sentinel] * n
    best_perm = None
    placed = [0] * n
    blocks = [0] * n
    candidates = sorted(range(n), key=lambda u: (deg[u], u))

    def rec(j, used):
        nonlocal best_perm
        if j == n:
            if best_perm is None:
                best_perm = placed[:]
            return
        tried = []
        for v in candidates:
            if (used >> v) & 1:
                continue
            block = 0
            for i in range(j):
                block |= ((adj[v] >> placed[i]) & 1) << (j - 1 - i)
            if block > best[j]:
                continue
            if any(wblock == block and _twins(adj, v, w) for w, wblock in tried):
                continue
            tried.append((v, block))
            if block < best[j]:
                # strictly better prefix: everything below is the new incumbent
                best[j] = block
                for t in range(j + 1, n):
                    best[t] = sentinel
                best_perm = None
            placed[j] = v
            blocks[j] = block
            rec(j + 1, used | (1 << v))

    rec(0, 0)
    acc = 0
    for j in range(n):
        acc = (acc << j) | best[j]
    nbits = n * (n - 1) // 2
    payload = acc.to_bytes((nbits + 7) // 8 or 1, "big")
    inverse = [0] * n
    for pos, v in enumerate(best_perm):
        inverse[v] = pos
    return bytes([n]) + payload, g.relabel(inverse)


def _twins(adj, v, w):
    return (adj[v] & ~(1 << w)) == (adj[w] & ~(1 << v))


def are_isomorphic(g, h, limit=CANONICAL_LIMIT):
    """Isomorphism test: canonical forms when small, degree-pruned
    backtracking beyond the canonical cap."""
    g, h = as_graph(g), as_graph(h)
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    if g.n <= limit:
        return canonical_form(g, limit) == canonical_form(h, limit)
    return _iso_backtrack(g, h)


def _iso_backtrack(g, h):
    n = g.n
    hdeg = h.degrees
    allowed = [0] * n
    for v in range(n):
        for u in range(n):
            if hdeg[u] == g.degree(v):
                allowed[v] |= 1 << u
    # process pattern vertices by increasing candidate count, neighbors first
    order = []
    placed_mask = 0
    remaining = set(range(n))
    while remaining:
        nxt = min(
            remaining,
            key=lambda v: (
                -((g.adj[v] & placed_mask).bit_count()),
                allowed[v].bit_count(),
                v,
            ),
        )
        order.append(nxt)
        placed_mask |= 1 << nxt
        remaining.discard(nxt)
    pos_of = {v: i for i, v in enumerate(order)}
    earlier = [
        [u for u in _bits(g.adj[v]) if pos_of[u] < pos_of[v]] for v in order
    ]
    image = [0] * n

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        cands = allowed[v] & ~used
        for u in earlier[i]:
            cands &= h.adj[image[pos_of[u]]]
        for w in _bits(cands):
            image[i] = w
            if rec(i + 1, used | (1 << w)):
                return True
        return False

    return rec(0, 0)
