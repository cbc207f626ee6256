"""Exact forbidden-subgraph maximization at desk scale.

Three hosts are supported: all graphs on n vertices, subgraphs of the
complete bipartite graph (pattern forbidden in either orientation), and the
side-respecting variant where the pattern's designated sides must land in
the designated parts.

The general search grows graphs one vertex at a time, trying every
neighborhood for the new vertex; states are deduplicated by canonical form
per vertex count, which is sound because two isomorphic graphs whose
undecided structure is "everything touching the future vertices" have
isomorphic sets of completions.  The bipartite searches fill the biadjacency
matrix cell by cell and only visit matrices whose rows and columns are
lexicographically non-increasing; every matrix can be row/column-permuted
into that form, so the maximum is preserved.

Exhausting the node or time budget is reported, never hidden: the returned
value is then a lower bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .core import (
    BipartiteGraph,
    Graph,
    GraphError,
    OddCycle,
    as_graph,
    canonical_form,
    canonical_relabel,
    is_bipartite,
    _bits,
)
from .counting import _earlier_neighbors, _embed_engine, embeds_through_edge

EXACT_VERTEX_LIMIT = 10


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10 ** 8
    max_seconds: float = 600.0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise GraphError("budget limits must be positive")


@dataclass
class SearchReport:
    """Outcome of one extremal search.

    When ``budget_exhausted`` the value is only a lower bound; the witness is
    still a valid pattern-free graph with that many edges.
    """

    mode: str
    value: int
    witness: object
    nodes_explored: int
    budget_exhausted: bool
    elapsed: float

    @property
    def exact(self):
        return not self.budget_exhausted


class _Exhausted(Exception):
    pass


class _Clock:
    def __init__(self, budget):
        self.budget = budget or Budget()
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _Exhausted
        if self.nodes % 256 == 0 and self.elapsed() > self.budget.max_seconds:
            raise _Exhausted

    def elapsed(self):
        return time.perf_counter() - self.start


# ---------------------------------------------------------------------------
# General hosts


def extremal_number(n, pattern, budget=None):
    """Maximum edges of an n-vertex graph with no copy of the pattern."""
    pat = as_graph(pattern)
    if pat.n < 2 or pat.num_edges < 1:
        raise GraphError("pattern needs at least two vertices and one edge")
    if n < 1:
        raise GraphError("host needs at least one vertex")
    if n > EXACT_VERTEX_LIMIT:
        raise GraphError(
            f"exact general search refuses n > {EXACT_VERTEX_LIMIT}"
        )
    clock = _Clock(budget)
    total_pairs = n * (n - 1) // 2
    best = {"value": -1, "masks": None}
    visited = [set() for _ in range(n + 1)]
    exhausted = False

    def rec(k, masks, e):
        clock.tick()
        if e + (total_pairs - k * (k - 1) // 2) <= best["value"]:
            return
        if k == n:
            if e > best["value"]:
                best["value"] = e
                best["masks"] = list(masks)
            return
        hood_order = sorted(range(1 << k), key=lambda s: (-s.bit_count(), s))
        degs = [m.bit_count() for m in masks]
        for hood in hood_order:
            new_masks = list(masks)
            new_masks.append(hood)
            new_degs = list(degs)
            new_degs.append(hood.bit_count())
            ok = True
            for u in _bits(hood):
                new_masks[u] |= 1 << k
                new_degs[u] += 1
            for u in _bits(hood):
                if embeds_through_edge(pat, new_masks, new_degs, u, k):
                    ok = False
                    break
            if not ok:
                continue
            key = canonical_form(Graph(k + 1, tuple(new_masks)))
            if key in visited[k + 1]:
                continue
            visited[k + 1].add(key)
            rec(k + 1, new_masks, e + hood.bit_count())

    try:
        rec(1, [0], 0)
    except _Exhausted:
        exhausted = True
    value = max(best["value"], 0)
    if best["masks"] is None:
        witness = Graph.from_edges(n, [])
    else:
        _, witness = canonical_relabel(Graph(n, tuple(best["masks"])))
    return SearchReport(
        "general", value, witness, clock.nodes, exhausted, clock.elapsed()
    )


# ---------------------------------------------------------------------------
# Bipartite hosts


def _components(g):
    comp = [-1] * g.n
    c = 0
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = c
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if comp[u] < 0:
                    comp[u] = c
                    stack.append(u)
        c += 1
    return comp, c


def _orientation_variants(bip, fixed):
    """Per-vertex row/column assignments of a bipartite pattern.

    Each connected component can flip independently unless ``fixed``; the
    result is a deduplicated list of tuples with 0 = row part, 1 = column
    part.
    """
    g = bip.graph
    if fixed:
        return [tuple(bip.side)]
    comp, c = _components(g)
    variants = set()
    for bitseq in range(1 << c):
        variants.add(
            tuple(bip.side[v] ^ ((bitseq >> comp[v]) & 1) for v in range(g.n))
        )
    return sorted(variants)


def _variant_fits(variant, n, m):
    rows_needed = sum(1 for s in variant if s == 0)
    return rows_needed <= n and len(variant) - rows_needed <= m


def _matrix_report(mode, n, m, rows, value, clock, exhausted):
    edges = []
    for r in range(n):
        for c in _bits(rows[r]):
            edges.append((r, n + c))
    graph = Graph.from_edges(n + m, edges)
    witness = BipartiteGraph(graph, tuple([0] * n + [1] * m))
    return SearchReport(mode, value, witness, clock.nodes, exhausted, clock.elapsed())


def _matrix_search(mode, n, m, pat, variants, budget):
    """Maximize ones in an n x m 0/1 matrix avoiding the pattern.

    ``variants`` lists the admissible row/column assignments of pattern
    vertices.  Cells are decided row-major, ones first, under the
    doubly-lexicographic symmetry-breaking constraints.
    """
    if n < 1 or m < 1:
        raise GraphError("host parts must be nonempty")
    clock = _Clock(budget)
    if not any(_variant_fits(v, n, m) for v in variants):
        full = [(1 << m) - 1] * n
        return _matrix_report(mode, n, m, full, n * m, clock, False)

    earlier = _earlier_neighbors(pat)
    pat_edges = pat.edges()
    pat_deg = pat.degrees
    total = n * m
    rows = [0] * n
    host_adj = [0] * (n + m)
    host_deg = [0] * (n + m)
    rows_mask = (1 << n) - 1
    cols_mask = ((1 << m) - 1) << n
    best = {"value": -1, "rows": None}
    exhausted = False

    def contains_through(r, c):
        col_id = n + c
        for variant in variants:
            if not _variant_fits(variant, n, m):
                continue
            side_mask = [rows_mask if variant[p] == 0 else cols_mask
                         for p in range(pat.n)]
            base = []
            for p in range(pat.n):
                mask = 0
                for v in _bits(side_mask[p]):
                    if host_deg[v] >= pat_deg[p]:
                        mask |= 1 << v
                base.append(mask)
            for p, q in pat_edges:
                if variant[p] == 0:
                    hp, hq = r, col_id
                else:
                    hp, hq = col_id, r
                if not (base[p] >> hp) & 1 or not (base[q] >> hq) & 1:
                    continue
                allowed = list(base)
                allowed[p] = 1 << hp
                allowed[q] = 1 << hq
                if _embed_engine(earlier, host_adj, allowed, "first") is not None:
                    return True
        return False

    col_tie = [True] * m

    def rec(idx, ones, row_tie):
        clock.tick()
        if ones + (total - idx) <= best["value"]:
            return
        if idx == total:
            if ones > best["value"]:
                best["value"] = ones
                best["rows"] = list(rows)
            return
        r, c = divmod(idx, m)
        new_row = row_tie if c else True
        prev_row_bit = (rows[r - 1] >> c) & 1 if r else 1
        left_bit = (rows[r] >> (c - 1)) & 1 if c else 1
        saved_col = col_tie[c] if c else True
        for x in (1, 0):
            if r and new_row and x > prev_row_bit:
                continue
            if c and saved_col and x > left_bit:
                continue
            if x:
                rows[r] |= 1 << c
                host_adj[r] |= 1 << (n + c)
                host_adj[n + c] |= 1 << r
                host_deg[r] += 1
                host_deg[n + c] += 1
                hit = contains_through(r, c)
                if not hit:
                    if c:
                        col_tie[c] = saved_col and (x == left_bit)
                    rec(idx + 1, ones + 1,
                        new_row and (x == prev_row_bit) if r else True)
                    if c:
                        col_tie[c] = saved_col
                rows[r] &= ~(1 << c)
                host_adj[r] &= ~(1 << (n + c))
                host_adj[n + c] &= ~(1 << r)
                host_deg[r] -= 1
                host_deg[n + c] -= 1
            else:
                if c:
                    col_tie[c] = saved_col and (x == left_bit)
                rec(idx + 1, ones,
                    new_row and (x == prev_row_bit) if r else True)
                if c:
                    col_tie[c] = saved_col

    try:
        rec(0, 0, True)
    except _Exhausted:
        exhausted = True
    if best["rows"] is None:
        best["rows"] = [0] * n
        best["value"] = 0
    return _matrix_report(mode, n, m, best["rows"], best["value"], clock, exhausted)


def bipartite_extremal_number(n, m, pattern, budget=None):
    """Maximum ones in an n x m matrix with no copy of the pattern in either
    orientation.  A non-bipartite pattern can never embed, so the answer is
    then n*m."""
    pat = as_graph(pattern)
    if pat.n < 1 or pat.num_edges < 1:
        raise GraphError("pattern needs at least one edge")
    sides = is_bipartite(pat)
    clock = _Clock(budget)
    if isinstance(sides, OddCycle):
        full = [(1 << m) - 1] * n
        return _matrix_report("bip", n, m, full, n * m, clock, False)
    variants = _orientation_variants(sides, fixed=False)
    return _matrix_search("bip", n, m, pat, variants, budget)


def zarankiewicz_number(n, m, pattern, budget=None):
    """Maximum ones avoiding only side-respecting copies: pattern side 0 in
    the n rows, side 1 in the m columns."""
    if not isinstance(pattern, BipartiteGraph):
        raise GraphError("side-respecting search needs a side-labeled pattern")
    if pattern.graph.num_edges < 1:
        raise GraphError("pattern needs at least one edge")
    variants = _orientation_variants(pattern, fixed=True)
    return _matrix_search("zar", n, m, pattern.graph, variants, budget)
