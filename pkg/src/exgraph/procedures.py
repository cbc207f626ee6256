"""Runnable, assertion-checked procedures extracted from existence proofs.

The pieces compose into two pipelines:

* ``find_glued_copy`` looks for a copy of two rooted bipartite patterns glued
  at their roots inside a host: balanced bipartition, minimum-degree
  cleanup, a balanced-neighborhood split of one side, greedy packing of the
  first pattern, and a root-constrained search for the second.

* ``case2_relation_pipeline`` builds the thin-4-cycle auxiliary graph,
  extracts a well-connected bipartite piece, measures how "nice" the
  share-a-vertex and landing-set relations are, and greedily collects
  relation-avoiding homomorphic cycles, reporting every measured quantity.

At desk scale neither pipeline carries an existence guarantee; both verify
whatever they output and report the stage that stopped them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    BipartiteGraph,
    Graph,
    GraphError,
    OddCycle,
    RootedGraph,
    as_graph,
    is_bipartite,
    _bits,
)
from .constructions import glue, prism
from .counting import (
    Embedding,
    ThinCycleParams,
    find_embedding,
    find_good_hom_cycle,
    four_cycle_census,
    min_nice_beta,
    overlap_relation,
    share_vertex_relation,
    thin_cycle_auxiliary,
    verify_embedding,
)

DEFAULT_SEED = 2024


# ---------------------------------------------------------------------------
# Balanced bipartite subgraphs


def balanced_bipartite_subgraph(g):
    """Split V(G) into halves so that at least ceil(e/2) edges cross.

    Greedy assignment followed by first-improvement swaps; a swap-local
    optimum of the balanced cut always meets the bound, so the loop
    terminates.  Only crossing edges survive in the returned graph.
    """
    g = as_graph(g)
    if g.n < 2:
        raise GraphError("balanced split needs at least two vertices")
    cap0 = (g.n + 1) // 2
    side = [None] * g.n
    count0 = 0
    for v in range(g.n):
        c0 = sum(1 for u in _bits(g.adj[v]) if side[u] == 0)
        c1 = sum(1 for u in _bits(g.adj[v]) if side[u] == 1)
        room0 = count0 < cap0
        room1 = (v - count0) < g.n - cap0
        if not room0:
            pick = 1
        elif not room1:
            pick = 0
        elif c1 != c0:
            pick = 0 if c1 > c0 else 1
        else:
            pick = 0
        if pick == 0:
            count0 += 1
        side[v] = pick

    def cross_degree(v, s):
        return sum(1 for u in _bits(g.adj[v]) if side[u] == s)

    def cut():
        return sum(
            1 for u, v in g.edges() if side[u] != side[v]
        )

    need = (g.num_edges + 1) // 2
    current = cut()
    improved = True
    while current < need and improved:
        improved = False
        for u in range(g.n):
            if side[u] != 0:
                continue
            for v in range(g.n):
                if side[v] != 1:
                    continue
                delta = (
                    cross_degree(u, 0)
                    - cross_degree(u, 1)
                    + cross_degree(v, 1)
                    - cross_degree(v, 0)
                    + 2 * (1 if g.has_edge(u, v) else 0)
                )
                if delta > 0:
                    side[u], side[v] = 1, 0
                    current += delta
                    improved = True
                    break
            if improved:
                break
    if current < need:
        raise AssertionError("balanced swap optimum below half the edges")
    edges = [(u, v) for u, v in g.edges() if side[u] != side[v]]
    return BipartiteGraph(Graph.from_edges(g.n, edges), tuple(side))


# ---------------------------------------------------------------------------
# Minimum-degree cleanup


def _peel_kept(adj, active, threshold_num, threshold_den):
    """Vertices surviving repeated deletion of degree < num/den (exact)."""
    alive = set(active)
    deg = {v: sum(1 for u in _bits(adj[v]) if u in alive) for v in alive}
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] * threshold_den < threshold_num:
                alive.discard(v)
                for u in _bits(adj[v]):
                    if u in alive:
                        deg[u] -= 1
                changed = True
    return sorted(alive)


def min_degree_peel(g):
    """Drop low-degree vertices until the rest have degree >= e/(2n).

    The threshold is fixed from the input graph; the surviving subgraph is
    relabeled densely, keeps more than half the edges, and is nonempty.
    """
    g = as_graph(g)
    if g.num_edges < 1:
        raise GraphError("peel needs at least one edge")
    kept = _peel_kept(g.adj, range(g.n), g.num_edges, 2 * g.n)
    sub = g.induced(kept)
    if sub.n == 0 or 2 * sub.num_edges < g.num_edges:
        raise AssertionError("peel postcondition failed")
    if any(2 * g.n * d < g.num_edges for d in sub.degrees):
        raise AssertionError("peel left a low-degree vertex")
    return sub


# ---------------------------------------------------------------------------
# Balanced-neighborhood partitions


@dataclass(frozen=True)
class GoodPartition:
    """Split (L1, L2) of side 0 such that every side-1 vertex sees between
    (1/2 - eps)*deg and (1/2 + eps)*deg neighbors in each part.

    ``tries`` counts the random draws used; 0 marks the deterministic
    local-search fallback."""

    parts: tuple
    epsilon: Fraction
    tries: int = 1


@dataclass(frozen=True)
class GoodPartitionFailure:
    worst_vertex: int
    violation: Fraction
    tries: int


def _partition_violation(b, left1, epsilon):
    """Worst excess |#(N in L1) - deg/2| - eps*deg over side-1 vertices."""
    worst = Fraction(-1)
    worst_v = None
    mask1 = 0
    for v in left1:
        mask1 |= 1 << v
    for v in b.side_vertices(1):
        d = b.graph.degree(v)
        c = (b.graph.adj[v] & mask1).bit_count()
        # |c - d/2| <= eps*d, scaled by 2 to stay integral
        excess = Fraction(abs(2 * c - d)) - 2 * epsilon * d
        if excess > worst:
            worst = excess
            worst_v = v
    return worst, worst_v


def good_partition(b, epsilon, seed=DEFAULT_SEED, max_tries=64):
    """Search for an epsilon-balanced split of side 0.

    Draws seeded uniform random partitions; after ``max_tries`` misses, a
    deterministic local search moves single vertices while the worst
    violation improves.  Failure is a result carrying the worst vertex.
    """
    if not isinstance(b, BipartiteGraph):
        raise GraphError("good_partition expects a BipartiteGraph")
    epsilon = Fraction(epsilon).limit_denominator(10 ** 9)
    if not 0 < epsilon < Fraction(1, 2):
        raise GraphError("epsilon must lie strictly between 0 and 1/2")
    left = b.side_vertices(0)
    rng = random.Random(seed)
    tries = 0
    last = None
    for tries in range(1, max_tries + 1):
        chosen = frozenset(v for v in left if rng.random() < 0.5)
        last = chosen
        worst, _ = _partition_violation(b, chosen, epsilon)
        if worst <= 0:
            rest = frozenset(left) - chosen
            return GoodPartition((chosen, rest), epsilon, tries)
    # deterministic fallback: single-vertex moves that shrink the violation
    chosen = set(last if last is not None else [])
    worst, worst_v = _partition_violation(b, chosen, epsilon)
    while worst > 0:
        best_move = None
        best_worst = worst
        for v in left:
            trial = set(chosen)
            if v in trial:
                trial.discard(v)
            else:
                trial.add(v)
            w, _ = _partition_violation(b, trial, epsilon)
            if w < best_worst:
                best_worst = w
                best_move = v
        if best_move is None:
            return GoodPartitionFailure(worst_v, worst, tries)
        if best_move in chosen:
            chosen.discard(best_move)
        else:
            chosen.add(best_move)
        worst, worst_v = _partition_violation(b, chosen, epsilon)
    rest = frozenset(left) - frozenset(chosen)
    return GoodPartition((frozenset(chosen), rest), epsilon, 0)


def good_partition_is_valid(b, gp):
    """Independent recheck of the balanced-neighborhood property."""
    left1, left2 = gp.parts
    if set(left1) | set(left2) != set(b.side_vertices(0)) or set(left1) & set(left2):
        return False
    for part in gp.parts:
        worst, _ = _partition_violation(b, part, gp.epsilon)
        if worst > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Greedy packing of rooted copies


@dataclass
class PackingResult:
    """Copies F_1..F_k of the pattern with roots in side 1.

    s_sets[i] is the side-1 part of each image; sprime_sets[i] its members
    whose degree does not exceed the root's; roots collects the root images.
    The invariants (each root meets later images only through itself, and
    every image avoids all earlier sprime sets) are asserted on every run.
    """

    copies: list
    s_sets: list
    sprime_sets: list
    roots: list
    halted: bool
    remaining_edges: int
    density_check: bool


def greedy_pack(g1, h1, threshold):
    """Pack root-in-side-1 copies of ``h1`` into ``g1`` greedily.

    Step i+1 picks, among copies avoiding every earlier sprime set, one whose
    root has maximum degree (ties: lexicographically smallest embedding);
    the loop halts when no such copy exists.  If fewer than ``threshold``
    edges survive between side 0 and the untouched side-1 vertices, the
    packed roots must carry at least e(g1)/(2 v(h1)) edges, which is
    asserted.
    """
    if not isinstance(g1, BipartiteGraph):
        raise GraphError("greedy_pack expects a BipartiteGraph host")
    if not isinstance(h1, RootedGraph):
        raise GraphError("greedy_pack expects a rooted pattern")
    if isinstance(is_bipartite(h1.graph), OddCycle):
        raise GraphError("pattern must be bipartite")
    host = g1.graph
    rstar = g1.side_vertices(1)
    deg = host.degrees
    copies, s_sets, sprime_sets, roots = [], [], [], []
    forbidden = set()
    while True:
        candidates = [v for v in rstar if v not in forbidden]
        found = None
        for d in sorted({deg[v] for v in candidates}, reverse=True):
            best = None
            for r in [v for v in candidates if deg[v] == d]:
                emb = find_embedding(
                    h1, host, root_targets=[r], forbidden=forbidden
                )
                if emb is not None and (best is None or emb.mapping < best.mapping):
                    best = emb
            if best is not None:
                found = best
                break
        if found is None:
            break
        image = set(found.mapping)
        root_img = found.mapping[h1.root]
        s_i = image & set(rstar)
        sprime_i = {x for x in s_i if deg[x] <= deg[root_img]}
        assert not (image & forbidden), "copy touches an earlier sprime set"
        copies.append(found)
        s_sets.append(frozenset(s_i))
        sprime_sets.append(frozenset(sprime_i))
        roots.append(root_img)
        forbidden |= sprime_i
    root_set = set(roots)
    for i, s_i in enumerate(s_sets):
        assert root_set & s_i == {roots[i]}, "root appears in a foreign image"
    remaining = sum(deg[v] for v in rstar if v not in forbidden)
    density_check = False
    if remaining < threshold:
        lhs = 2 * h1.graph.n * sum(deg[r] for r in roots)
        assert lhs >= host.num_edges, "packed roots carry too few edges"
        density_check = True
    return PackingResult(
        copies, s_sets, sprime_sets, roots, True, remaining, density_check
    )


# ---------------------------------------------------------------------------
# The glued-copy pipeline


@dataclass
class GlueFailure:
    stage: str
    detail: str
    trace: list = field(default_factory=list)


def find_glued_copy(g, h1, h2, fraction=None, seed=DEFAULT_SEED,
                    partition_tries=16, trace=None):
    """Find a copy of glue(h1, h2) in ``g`` via the staged pipeline.

    Stages: bipartite reduction (balanced split when the host is odd),
    minimum-degree cleanup, a 1/4-balanced split of the left side, greedy
    packing of ``h1`` with roots on the right, and a search for ``h2`` rooted
    at a packed root and avoiding the rest of that root's copy.  Any stage
    failure falls back to a direct whole-graph search; the returned
    embedding always passes the independent verifier.
    """
    if trace is None:
        trace = []
    host_graph = as_graph(g)
    for name, pat in (("h1", h1), ("h2", h2)):
        if not isinstance(pat, RootedGraph):
            raise GraphError(f"{name} must be rooted")
        if isinstance(is_bipartite(pat.graph), OddCycle):
            raise GraphError(f"{name} must be bipartite")
    if fraction is None:
        fraction = 48 * h1.graph.n
    glued = glue(h1, h2)

    def fallback(stage, detail):
        trace.append(("fallback-after", stage))
        emb = find_embedding(glued.graph, host_graph)
        if emb is not None:
            trace.append(("route", "direct"))
            return Embedding(glued.graph, host_graph, emb.mapping)
        return GlueFailure(stage, detail, trace)

    # stage: bipartite structure
    if isinstance(g, BipartiteGraph):
        bip = g
    else:
        res = is_bipartite(host_graph)
        if isinstance(res, OddCycle):
            if host_graph.n < 2:
                return fallback("bipartite-reduction", "host too small")
            bip = balanced_bipartite_subgraph(host_graph)
        else:
            bip = res
    trace.append(("bipartite-edges", str(bip.graph.num_edges)))
    if bip.graph.num_edges == 0:
        return fallback("bipartite-reduction", "no crossing edges")

    # stage: minimum-degree cleanup (kept in the original labeling)
    kept = _peel_kept(
        bip.graph.adj, range(bip.graph.n), bip.graph.num_edges, 2 * bip.graph.n
    )
    keep_mask = 0
    for v in kept:
        keep_mask |= 1 << v
    star = bip.graph.restrict_edges(keep_mask)
    lstar = [v for v in kept if bip.side[v] == 0]
    rstar = [v for v in kept if bip.side[v] == 1]
    trace.append(("peeled-vertices", str(len(kept))))
    if star.num_edges == 0:
        return fallback("peel", "nothing survives the degree threshold")

    # stage: 1/4-balanced split of the left side
    star_bip = BipartiteGraph(star, bip.side)
    gp = good_partition(star_bip, Fraction(1, 4), seed=seed,
                        max_tries=partition_tries)
    if isinstance(gp, GoodPartitionFailure):
        return fallback(
            "good-partition",
            f"worst vertex {gp.worst_vertex} violates by {gp.violation}",
        )
    left1 = sorted(set(gp.parts[0]) & set(lstar))
    left2 = sorted(set(gp.parts[1]) & set(lstar))
    trace.append(("left-split", f"{len(left1)}/{len(left2)}"))

    # stage: greedy packing of h1 in [L1, R*]
    mask1 = keep_mask
    for v in left2:
        mask1 &= ~(1 << v)
    g1 = BipartiteGraph(star.restrict_edges(mask1), bip.side)
    threshold = Fraction(host_graph.num_edges, fraction)
    packing = greedy_pack(g1, h1, threshold)
    trace.append(("packed-copies", str(len(packing.roots))))
    if not packing.roots:
        return fallback("pack", "no rooted copies of h1")

    # stage: second copy rooted at a packed root, avoiding that copy
    mask2 = keep_mask
    for v in left1:
        mask2 &= ~(1 << v)
    g2 = star.restrict_edges(mask2)
    for emb1 in packing.copies:
        root_img = emb1.mapping[h1.root]
        avoid = [v for v in emb1.mapping if v != root_img]
        emb2 = find_embedding(
            h2, g2, root_targets=[root_img], forbidden=avoid
        )
        if emb2 is None:
            continue
        mapping = list(emb1.mapping)
        for v in range(h2.graph.n):
            if v == h2.root:
                continue
            mapping.append(emb2.mapping[v])
        out = Embedding(glued.graph, host_graph, tuple(mapping))
        assert verify_embedding(out), "assembled glued copy failed verification"
        trace.append(("route", "pipeline"))
        trace.append(("merged-vertex", str(root_img)))
        return out
    return fallback("second-copy", "no rooted h2 copy meets a packed root")


# ---------------------------------------------------------------------------
# The thin-cycle relation pipeline


@dataclass
class Case2Trace:
    """Structured record of the thin-cycle relation pipeline.

    ``records`` is the key/value log; the structured fields hold whatever the
    run got far enough to produce (None otherwise).  The trace is diagnostic:
    it measures, it does not promise existence.
    """

    records: list = field(default_factory=list)
    halted_stage: str = None
    gamma: Graph = None
    gamma_edges: tuple = None
    core_vertices: tuple = None
    beta_share: Fraction = None
    cycles: list = field(default_factory=list)
    prism_copies: list = field(default_factory=list)
    beta_landing: Fraction = None
    final_cycle: tuple = None

    def log(self, key, value):
        self.records.append((key, str(value)))


def _connector_lookup(g, tau):
    """Map Γ-adjacent edge pairs to the connecting edges of the first thin
    4-cycle witnessing them (by canonical cycle order)."""
    thin, _ = four_cycle_census(g, ThinCycleParams(tau))
    table = {}
    for cyc in thin:
        a, b, c, d = cyc.vertices
        ab, bc, cd, da = (
            tuple(sorted((a, b))),
            tuple(sorted((b, c))),
            tuple(sorted((c, d))),
            tuple(sorted((d, a))),
        )
        for pair, conns in ((frozenset((ab, cd)), (bc, da)),
                            (frozenset((bc, da)), (ab, cd))):
            table.setdefault(pair, conns)
    return table


def _assemble_prism_copy(edge_walk, connectors):
    """Union of the walk's edges with the connecting edges per link.

    Returns (vertex set, edge set, untwisted) where ``untwisted`` says the
    connector cycles split into two halves, i.e. the copy really is a prism
    over the cycle of the walk length.
    """
    L = len(edge_walk)
    vertices = set()
    edges = set(edge_walk)
    for e in edge_walk:
        vertices |= set(e)
    for i in range(L):
        pair = frozenset((edge_walk[i], edge_walk[(i + 1) % L]))
        edges |= set(connectors[pair])
    # connectors alone form a 2-regular graph; count its cycles
    conn_adj = {}
    for e in edges - set(edge_walk):
        u, v = e
        conn_adj.setdefault(u, []).append(v)
        conn_adj.setdefault(v, []).append(u)
    seen = set()
    cycles = 0
    for start in sorted(conn_adj):
        if start in seen:
            continue
        cycles += 1
        prev, at = None, start
        while True:
            seen.add(at)
            nxts = [w for w in conn_adj[at] if w != prev]
            if not nxts:
                break
            prev, at = at, nxts[0]
            if at == start:
                break
    untwisted = (
        cycles == 2
        and len(vertices) == 2 * L
        and len(edges) == 3 * L
        and all(len(conn_adj.get(v, ())) == 2 for v in vertices)
    )
    return frozenset(vertices), frozenset(edges), untwisted


def case2_relation_pipeline(g, tau, ell, seed=DEFAULT_SEED):
    """Measure the thin-cycle auxiliary structure of ``g`` end to end.

    Builds the auxiliary graph on E(g), extracts a balanced well-connected
    bipartite core, measures the niceness of the share-a-vertex relation,
    greedily collects relation-avoiding homomorphic 2*ell-cycles that are
    disjoint on the left side, associates a landing set to every core vertex,
    and measures the niceness of the landing relation.
    """
    g = as_graph(g)
    if ell < 2:
        raise GraphError("need ell >= 2")
    trace = Case2Trace()
    gamma, edge_of = thin_cycle_auxiliary(g, ThinCycleParams(tau))
    trace.gamma, trace.gamma_edges = gamma, edge_of
    trace.log("gamma-vertices", gamma.n)
    trace.log("gamma-edge-count", gamma.num_edges)
    if gamma.num_edges == 0:
        trace.halted_stage = "gamma-empty"
        trace.log("halted", trace.halted_stage)
        return trace

    # balanced bipartite core with high minimum degree
    bal = balanced_bipartite_subgraph(gamma)
    kept = _peel_kept(
        bal.graph.adj, range(bal.graph.n), bal.graph.num_edges, 2 * bal.graph.n
    )
    core = bal.graph.induced(kept)
    core_side = tuple(bal.side[v] for v in kept)
    trace.core_vertices = tuple(kept)
    trace.log("core-vertices", core.n)
    trace.log("core-edges", core.num_edges)
    if core.num_edges == 0:
        trace.halted_stage = "core-empty"
        trace.log("halted", trace.halted_stage)
        return trace

    endpoints = [edge_of[kept[i]] for i in range(core.n)]
    share = share_vertex_relation(endpoints)
    trace.beta_share = min_nice_beta(core, share)
    trace.log("beta-share", trace.beta_share)

    # greedy collection of relation-avoiding cycles, disjoint on the left
    left = [i for i in range(core.n) if core_side[i] == 0]
    used_left = set()
    full_mask = (1 << core.n) - 1
    half_edges = core.num_edges
    while True:
        mask = full_mask
        for v in used_left:
            mask &= ~(1 << v)
        current = core.restrict_edges(mask)
        if 2 * current.num_edges < half_edges:
            trace.log("cycle-selection", "left side exhausted")
            break
        walk = find_good_hom_cycle(current, share, ell)
        if walk is None:
            trace.log("cycle-selection", "no relation-avoiding cycle found")
            break
        trace.cycles.append(walk)
        used_left |= set(walk) & set(left)
    trace.log("cycles-selected", len(trace.cycles))
    if not trace.cycles:
        trace.halted_stage = "no-cycles"
        trace.log("halted", trace.halted_stage)
        return trace

    # assemble the prism copy carried by each selected cycle
    connectors = _connector_lookup(g, tau)
    owner = {}
    for ci, walk in enumerate(trace.cycles):
        edge_walk = [endpoints[i] for i in walk]
        verts, edges, untwisted = _assemble_prism_copy(edge_walk, connectors)
        trace.prism_copies.append(
            {"cycle": walk, "vertices": verts, "edges": edges,
             "untwisted": untwisted}
        )
        trace.log(f"prism-{ci}-vertices", len(verts))
        trace.log(f"prism-{ci}-untwisted", untwisted)
        for i in set(walk):
            if core_side[i] == 0 and i not in owner:
                owner[i] = ci

    # landing sets: the prism's vertex set on the left, the edge itself on
    # the right
    selected = sorted(owner)
    right = [i for i in range(core.n) if core_side[i] == 1]
    active = selected + right
    sub_edges = sum(
        1 for u, v in core.edges()
        if (u in owner or core_side[u] == 1) and (v in owner or core_side[v] == 1)
        and (u in owner or v in owner)
    )
    trace.log("landing-host-edges", sub_edges)
    if sub_edges == 0:
        trace.halted_stage = "landing-empty"
        trace.log("halted", trace.halted_stage)
        return trace
    kept2 = _peel_kept(core.adj, active, sub_edges, 2 * len(active))
    tilde = core.induced(kept2)
    if tilde.num_edges == 0:
        trace.halted_stage = "landing-core-empty"
        trace.log("halted", trace.halted_stage)
        return trace
    landing_sets = []
    target_sets = []
    for i in kept2:
        target_sets.append(frozenset(endpoints[i]))
        if i in owner:
            landing_sets.append(trace.prism_copies[owner[i]]["vertices"])
        else:
            landing_sets.append(frozenset(endpoints[i]))
    landing = overlap_relation(landing_sets, target_sets)
    trace.beta_landing = min_nice_beta(tilde, landing)
    trace.log("beta-landing", trace.beta_landing)
    trace.final_cycle = find_good_hom_cycle(tilde, landing, ell)
    trace.log("final-cycle", trace.final_cycle)
    return trace
