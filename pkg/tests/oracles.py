"""Deliberately naive reference computations used to check the fast paths.

Everything here enumerates without pruning or algebra so that it shares no
code path with the library functions under test.
"""

import itertools


def closed_walk_count(g, length):
    """Count closed walks of the given length by explicit extension."""
    if length == 0:
        return g.n
    total = 0
    stack = [(v, v, length) for v in range(g.n)]
    while stack:
        start, at, rem = stack.pop()
        if rem == 1:
            if g.has_edge(at, start):
                total += 1
            continue
        for u in g.neighbors(at):
            stack.append((start, u, rem - 1))
    return total


def walk_count_between(g, a, b, t):
    if t == 0:
        return int(a == b)
    total = 0
    stack = [(a, t)]
    while stack:
        at, rem = stack.pop()
        if rem == 1:
            if g.has_edge(at, b):
                total += 1
            continue
        for u in g.neighbors(at):
            stack.append((u, rem - 1))
    return total


def alternating_bad_tuples(g, rel, k, x1, x2):
    """Bad alternating 2k-cycles by materializing every candidate tuple."""
    length = 2 * k
    seen = set()
    for first, second in ((x1, x2), (x2, x1)):
        pools = [sorted(first) if i % 2 == 0 else sorted(second) for i in range(length)]
        for tup in itertools.product(*pools):
            if tup in seen:
                continue
            if not all(g.has_edge(tup[i], tup[(i + 1) % length]) for i in range(length)):
                continue
            if any(
                rel.holds(tup[i], tup[j])
                for i in range(length)
                for j in range(length)
                if i != j
            ):
                seen.add(tup)
    return len(seen)


def subgraph_count_by_permutations(pattern, host):
    """Labeled copies of the pattern by scanning all vertex injections."""
    pn, hn = pattern.n, host.n
    edges = pattern.edges()
    total = 0
    for image in itertools.permutations(range(hn), pn):
        if all(host.has_edge(image[u], image[v]) for u, v in edges):
            total += 1
    return total


def contains_pattern(pattern, host):
    pn, hn = pattern.n, host.n
    if pn > hn:
        return False
    edges = pattern.edges()
    for image in itertools.permutations(range(hn), pn):
        if all(host.has_edge(image[u], image[v]) for u, v in edges):
            return True
    return False


def _popcount_groups_desc(total_bits):
    groups = {}
    for mask in range(1 << total_bits):
        groups.setdefault(mask.bit_count(), []).append(mask)
    for e in sorted(groups, reverse=True):
        yield e, groups[e]


def extremal_number_by_enumeration(n, pattern):
    """ex(n, pattern) by scanning all graphs in decreasing edge count."""
    pairs = list(itertools.combinations(range(n), 2))
    for e, masks in _popcount_groups_desc(len(pairs)):
        for mask in masks:
            adj = [0] * n
            for i, (u, v) in enumerate(pairs):
                if (mask >> i) & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            host = _MaskHost(n, adj)
            if not contains_pattern(pattern, host):
                return e
    return 0


class _MaskHost:
    def __init__(self, n, adj):
        self.n = n
        self.adj = adj

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v):
        return [u for u in range(self.n) if (self.adj[v] >> u) & 1]


def _matrix_contains(rows, n, m, side0, side1, edges):
    """Side-respecting containment scan: side0 -> rows, side1 -> cols."""
    if len(side0) > n or len(side1) > m:
        return False
    for rimg in itertools.permutations(range(n), len(side0)):
        for cimg in itertools.permutations(range(m), len(side1)):
            place = {}
            for p, r in zip(side0, rimg):
                place[p] = ("r", r)
            for p, c in zip(side1, cimg):
                place[p] = ("c", c)
            if all(
                (rows[place[u][1]] >> place[v][1]) & 1
                if place[u][0] == "r"
                else (rows[place[v][1]] >> place[u][1]) & 1
                for u, v in edges
            ):
                return True
    return False


def matrix_extremal_by_enumeration(n, m, side, edges, orientations):
    """Maximum ones over all n x m matrices avoiding the pattern.

    ``orientations`` is a list of side tuples (0 = rows); scanning goes by
    decreasing popcount and stops at the first pattern-free matrix.
    """
    pattern_n = len(side)
    variants = []
    for variant in orientations:
        s0 = [p for p in range(pattern_n) if variant[p] == 0]
        s1 = [p for p in range(pattern_n) if variant[p] == 1]
        variants.append((s0, s1))
    for ones, masks in _popcount_groups_desc(n * m):
        for mask in masks:
            rows = [(mask >> (r * m)) & ((1 << m) - 1) for r in range(n)]
            if not any(
                _matrix_contains(rows, n, m, s0, s1, edges) for s0, s1 in variants
            ):
                return ones
    return 0


def _cheap_invariant(g):
    degs = tuple(sorted(g.degrees))
    nbr_sums = tuple(
        sorted(sum(g.degrees[u] for u in g.neighbors(v)) for v in range(g.n))
    )
    return (g.n, g.num_edges, degs, nbr_sums)


def graph_classes_up_to(max_n, max_edges):
    """All isomorphism classes with <= max_n vertices and <= max_edges edges.

    Grows graphs one vertex at a time, deduplicating through a cheap
    invariant bucket plus exact isomorphism tests inside each bucket.
    """
    from exgraph.core import Graph, are_isomorphic

    levels = {1: [Graph.from_edges(1, [])]}
    for n in range(2, max_n + 1):
        buckets = {}
        for g in levels[n - 1]:
            k = g.n
            for hood in range(1 << k):
                if g.num_edges + hood.bit_count() > max_edges:
                    continue
                masks = list(g.adj) + [hood]
                for u in range(k):
                    if (hood >> u) & 1:
                        masks[u] |= 1 << k
                cand = Graph(n, tuple(masks))
                key = _cheap_invariant(cand)
                reps = buckets.setdefault(key, [])
                if not any(are_isomorphic(cand, rep, limit=0) for rep in reps):
                    reps.append(cand)
        levels[n] = [g for reps in buckets.values() for g in reps]
    return [g for level in levels.values() for g in level]
