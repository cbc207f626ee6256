"""Subgraph embeddings, exact homomorphism counts, and relation profiles.

Everything here is exact: copy counts come from complete backtracking
enumeration, homomorphic cycle and path counts from integer adjacency-matrix
powers (Python ints, so no overflow), and the inequality verifiers compare
cross-multiplied integers instead of taking roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BipartiteGraph,
    Graph,
    GraphError,
    RootedGraph,
    as_graph,
    _bits,
)


def _mask(vertices, n):
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} outside 0..{n - 1}")
        m |= 1 << v
    return m


# ---------------------------------------------------------------------------
# Embeddings


@dataclass(frozen=True)
class Embedding:
    """Injective, edge-preserving vertex map from pattern to host.

    ``pattern`` and ``host`` are stored as given (possibly side-labeled or
    rooted); ``mapping[p]`` is the host image of pattern vertex p.
    """

    pattern: object
    host: object
    mapping: tuple
    root_targets: frozenset = None
    side_pairing: tuple = None


def verify_embedding(emb):
    """Re-check an embedding from scratch; independent of the search path."""
    pat = as_graph(emb.pattern)
    host = as_graph(emb.host)
    m = emb.mapping
    if len(m) != pat.n or len(set(m)) != pat.n:
        return False
    if any(not 0 <= v < host.n for v in m):
        return False
    for u, v in pat.edges():
        if not host.has_edge(m[u], m[v]):
            return False
    if emb.root_targets is not None:
        if not isinstance(emb.pattern, RootedGraph):
            return False
        if m[emb.pattern.root] not in emb.root_targets:
            return False
    if emb.side_pairing is not None:
        pside = getattr(emb.pattern, "side", None)
        hside = getattr(emb.host, "side", None)
        if pside is None or hside is None:
            return False
        for p in range(pat.n):
            if hside[m[p]] != emb.side_pairing[pside[p]]:
                return False
    return True


def _earlier_neighbors(pat):
    return [[q for q in _bits(pat.adj[p]) if q < p] for p in range(pat.n)]


def _embed_engine(earlier, host_adj, allowed, mode):
    """Backtracking core shared by all searches.

    ``earlier[p]`` lists the pattern neighbors of p with smaller id;
    ``allowed[p]`` is the candidate bitmask for p.  Pattern vertices are
    assigned in id order and candidates scanned in ascending host id, so the
    first complete mapping is the lexicographically smallest.  ``mode`` is
    'first' (mapping or None) or 'count' (number of embeddings).
    """
    k = len(earlier)
    mapping = [0] * k
    count = 0

    def rec(p, used):
        nonlocal count
        if p == k:
            if mode == "count":
                count += 1
                return False
            return True
        cands = allowed[p] & ~used
        for q in earlier[p]:
            cands &= host_adj[mapping[q]]
        m = cands
        while m:
            low = m & -m
            mapping[p] = low.bit_length() - 1
            if rec(p + 1, used | low):
                return True
            m ^= low
        return False

    found = rec(0, 0)
    if mode == "count":
        return count
    return tuple(mapping) if found else None


def _base_allowed(pat, host, forbidden_mask=0):
    full = ((1 << host.n) - 1) & ~forbidden_mask
    return [
        full & _degree_filter(pat.degree(p), host)
        for p in range(pat.n)
    ]


def _degree_filter(min_degree, host):
    m = 0
    for v in range(host.n):
        if host.degree(v) >= min_degree:
            m |= 1 << v
    return m


def find_embedding(pattern, host, root_targets=None, forbidden=(), side_pairing=None):
    """Deterministic search for a copy of ``pattern`` inside ``host``.

    Constraints:

    * ``root_targets``: host vertices the pattern root may map to (pattern
      must be rooted);
    * ``forbidden``: host vertices no pattern vertex may use;
    * ``side_pairing``: (h0, h1) sends pattern side 0 into host side h0 and
      side 1 into h1 (both graphs must carry side labels).

    Returns the lexicographically first Embedding, or None.
    """
    pat = as_graph(pattern)
    hst = as_graph(host)
    if pat.n == 0:
        raise GraphError("empty pattern")
    forbidden_mask = _mask(forbidden, hst.n)
    allowed = _base_allowed(pat, hst, forbidden_mask)
    if root_targets is not None:
        if not isinstance(pattern, RootedGraph):
            raise GraphError("root_targets requires a rooted pattern")
        allowed[pattern.root] &= _mask(root_targets, hst.n)
    if side_pairing is not None:
        pside = getattr(pattern, "side", None)
        hside = getattr(host, "side", None)
        if pside is None or hside is None:
            raise GraphError("side_pairing requires side labels on both graphs")
        side_masks = {0: 0, 1: 0}
        for v in range(hst.n):
            side_masks[hside[v]] |= 1 << v
        for p in range(pat.n):
            allowed[p] &= side_masks[side_pairing[pside[p]]]
    mapping = _embed_engine(_earlier_neighbors(pat), hst.adj, allowed, "first")
    if mapping is None:
        return None
    return Embedding(
        pattern,
        host,
        mapping,
        frozenset(root_targets) if root_targets is not None else None,
        tuple(side_pairing) if side_pairing is not None else None,
    )


def count_embeddings(pattern, host):
    """Number of injective edge-preserving maps (labeled copies)."""
    pat, hst = as_graph(pattern), as_graph(host)
    if pat.n == 0:
        raise GraphError("empty pattern")
    return _embed_engine(
        _earlier_neighbors(pat), hst.adj, _base_allowed(pat, hst), "count"
    )


def automorphism_count(g):
    g = as_graph(g)
    return count_embeddings(g, g)


def count_copies(pattern, host):
    """Number of subgraphs of ``host`` isomorphic to ``pattern``."""
    pat = as_graph(pattern)
    total = count_embeddings(pat, host)
    aut = automorphism_count(pat)
    if total % aut:
        raise AssertionError("labeled count not divisible by automorphisms")
    return total // aut


def embeds_through_vertex(pattern, host, v):
    """Whether a copy of the pattern uses host vertex ``v``."""
    pat, hst = as_graph(pattern), as_graph(host)
    earlier = _earlier_neighbors(pat)
    base = _base_allowed(pat, hst)
    bit = 1 << v
    for p in range(pat.n):
        if not base[p] & bit:
            continue
        allowed = list(base)
        allowed[p] = bit
        if _embed_engine(earlier, hst.adj, allowed, "first") is not None:
            return True
    return False


def embeds_through_edge(pattern, host_adj, host_degrees, a, b):
    """Whether a copy of the pattern uses the host edge {a, b}.

    Works on raw adjacency masks so incremental searches can avoid
    rebuilding Graph values.
    """
    pat = as_graph(pattern)
    earlier = _earlier_neighbors(pat)
    full = (1 << len(host_adj)) - 1
    base = []
    for p in range(pat.n):
        need = pat.degree(p)
        m = 0
        for v in range(len(host_adj)):
            if host_degrees[v] >= need:
                m |= 1 << v
        base.append(m & full)
    for p, q in pat.edges():
        for hp, hq in ((a, b), (b, a)):
            if not (base[p] >> hp) & 1 or not (base[q] >> hq) & 1:
                continue
            allowed = list(base)
            allowed[p] = 1 << hp
            allowed[q] = 1 << hq
            if _embed_engine(earlier, host_adj, allowed, "first") is not None:
                return True
    return False


# ---------------------------------------------------------------------------
# Exact homomorphism counting (integer matrix powers)


def _matrix(g):
    return [[(g.adj[u] >> v) & 1 for v in range(g.n)] for u in range(g.n)]


def _mat_mul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(n):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(n):
                    oi[j] += x * bt[j]
    return out


def _mat_pow(a, e):
    n = len(a)
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    while e:
        if e & 1:
            result = _mat_mul(result, a)
        a = _mat_mul(a, a)
        e >>= 1
    return result


def hom_cycle(length, g):
    """Closed walks of the given even length: trace of the matrix power.

    ``length`` = 0 returns the vertex count (empty closed walks).
    """
    g = as_graph(g)
    if length < 0 or length % 2:
        raise GraphError("cycle homomorphisms need an even length >= 0")
    if length == 0:
        return g.n
    power = _mat_pow(_matrix(g), length)
    return sum(power[i][i] for i in range(g.n))


def path_hom_between(a, b, t, g):
    """Walks with t edges from a to b: one entry of the matrix power."""
    g = as_graph(g)
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphError("endpoint out of range")
    if t < 0:
        raise GraphError("negative path length")
    if t == 0:
        return int(a == b)
    return _mat_pow(_matrix(g), t)[a][b]


# ---------------------------------------------------------------------------
# 4-cycle census and the thin-cycle auxiliary graph


@dataclass(frozen=True)
class ThinCycleParams:
    """Codegree threshold separating thin from thick 4-cycles."""

    tau: int

    def __post_init__(self):
        if self.tau < 0:
            raise GraphError("threshold must be >= 0")


@dataclass(frozen=True)
class FourCycle:
    """4-cycle (a, b, c, d): edges ab, bc, cd, da; diagonals {a,c}, {b,d}.

    Canonical orientation: a is the smallest vertex and b its smaller
    neighbor on the cycle.
    """

    vertices: tuple
    diagonal_codegrees: tuple


def four_cycle_census(g, params):
    """All 4-cycles, each listed once, split into thin and thick.

    A cycle is thin when both diagonal pairs have codegree at most tau
    (codegrees measured in the full graph).
    """
    g = as_graph(g)
    tau = params.tau
    thin, thick = [], []
    for a in range(g.n):
        for c in range(a + 1, g.n):
            common = g.adj[a] & g.adj[c]
            if common.bit_count() < 2:
                continue
            cands = [y for y in _bits(common) if y > a]
            cd_ac = (g.adj[a] & g.adj[c]).bit_count()
            for i, b in enumerate(cands):
                for d in cands[i + 1:]:
                    cd_bd = (g.adj[b] & g.adj[d]).bit_count()
                    cyc = FourCycle((a, b, c, d), (cd_ac, cd_bd))
                    if cd_ac <= tau and cd_bd <= tau:
                        thin.append(cyc)
                    else:
                        thick.append(cyc)
    thin.sort(key=lambda x: x.vertices)
    thick.sort(key=lambda x: x.vertices)
    return thin, thick


def thin_cycle_auxiliary(g, params):
    """Graph on the edges of g joining opposite edges of thin 4-cycles.

    Returns (gamma, edge_of_vertex): vertex i of gamma is the i-th edge of g
    in lexicographic order.
    """
    g = as_graph(g)
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    thin, _ = four_cycle_census(g, params)
    gamma_edges = set()
    for cyc in thin:
        a, b, c, d = cyc.vertices
        for e1, e2 in (((a, b), (c, d)), ((b, c), (a, d))):
            i = index[tuple(sorted(e1))]
            j = index[tuple(sorted(e2))]
            gamma_edges.add((min(i, j), max(i, j)))
    return Graph.from_edges(len(edges), sorted(gamma_edges)), tuple(edges)


# ---------------------------------------------------------------------------
# Binary relations and niceness


@dataclass(frozen=True)
class Relation:
    """Boolean matrix over ordered vertex pairs; rows[u] is the bitmask of w
    with u -> w.  Not necessarily symmetric."""

    n: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise GraphError("relation rows must cover all vertices")
        if any(r >> self.n for r in self.rows):
            raise GraphError("relation row references vertices >= n")

    def holds(self, u, w):
        return bool((self.rows[u] >> w) & 1)

    def pairs(self):
        return [(u, w) for u in range(self.n) for w in _bits(self.rows[u])]

    @staticmethod
    def empty(n):
        return Relation(n, tuple([0] * n))

    @staticmethod
    def total(n):
        full = (1 << n) - 1
        return Relation(n, tuple([full] * n))

    @staticmethod
    def identity(n):
        return Relation(n, tuple(1 << v for v in range(n)))

    @staticmethod
    def from_pairs(n, pairs):
        rows = [0] * n
        for u, w in pairs:
            if not (0 <= u < n and 0 <= w < n):
                raise GraphError(f"pair ({u},{w}) out of range")
            rows[u] |= 1 << w
        return Relation(n, tuple(rows))


def overlap_relation(source_sets, target_sets):
    """u -> w iff source_sets[u] intersects target_sets[w].

    Both arguments are sequences of vertex collections of equal length; this
    is the shape of both relations the thin-cycle pipeline measures.
    """
    if len(source_sets) != len(target_sets):
        raise GraphError("set families must have equal length")
    src = [frozenset(s) for s in source_sets]
    tgt = [frozenset(t) for t in target_sets]
    n = len(src)
    rows = []
    for u in range(n):
        m = 0
        for w in range(n):
            if src[u] & tgt[w]:
                m |= 1 << w
        rows.append(m)
    return Relation(n, tuple(rows))


def share_vertex_relation(edge_endpoints):
    """Edges related when they share an endpoint (reflexive by construction)."""
    return overlap_relation(edge_endpoints, edge_endpoints)


def min_nice_beta(h, rel):
    """Smallest beta for which the relation is beta-nice on h.

    That is the maximum over ordered pairs (u, v) of
    |{w in N(v) : u -> w}| / deg(v), as an exact Fraction.
    """
    h = as_graph(h)
    if h.n != rel.n:
        raise GraphError("relation size does not match graph")
    best = Fraction(0)
    for v in range(h.n):
        d = h.degree(v)
        if d == 0:
            raise GraphError(f"vertex {v} is isolated")
        nbrs = h.adj[v]
        top = max((nbrs & rel.rows[u]).bit_count() for u in range(h.n))
        best = max(best, Fraction(top, d))
    return best


# ---------------------------------------------------------------------------
# Alternating homomorphic cycles and relation-avoiding walks


def _count_bad_closed_walks(g, rel, masks):
    """Closed walks following the per-position masks that contain a related
    ordered index pair; plain enumeration."""
    length = len(masks)
    total = 0
    walk = [0] * length

    def rec(pos, bad):
        nonlocal total
        prev = walk[pos - 1]
        cands = g.adj[prev] & masks[pos]
        for v in _bits(cands):
            now = bad
            if not now:
                for j in range(pos):
                    u = walk[j]
                    if rel.holds(u, v) or rel.holds(v, u):
                        now = True
                        break
            walk[pos] = v
            if pos == length - 1:
                if now and g.has_edge(v, walk[0]):
                    total += 1
            else:
                rec(pos + 1, now)

    for start in _bits(masks[0]):
        walk[0] = start
        rec(1, False)
    return total


def bad_hom_cycle_count(g, rel, k, x1, x2):
    """Alternating homomorphic 2k-cycles containing a related index pair.

    Tuples (v_1, ..., v_2k) lie in (X1 x X2 x ... x X2) or
    (X2 x X1 x ... x X1); a tuple is counted once even when the sets overlap,
    and is bad when v_i -> v_j holds for some i != j (as indices).
    """
    g = as_graph(g)
    if k < 2:
        raise GraphError("need k >= 2")
    if g.n != rel.n:
        raise GraphError("relation size does not match graph")
    m1 = _mask(x1, g.n)
    m2 = _mask(x2, g.n)
    pat1 = [m1 if i % 2 == 0 else m2 for i in range(2 * k)]
    pat2 = [m2 if i % 2 == 0 else m1 for i in range(2 * k)]
    both = [m1 & m2] * (2 * k)
    n1 = _count_bad_closed_walks(g, rel, pat1)
    n2 = _count_bad_closed_walks(g, rel, pat2)
    n12 = _count_bad_closed_walks(g, rel, both) if m1 & m2 else 0
    return n1 + n2 - n12


def find_good_hom_cycle(h, rel, ell):
    """Closed 2*ell walk whose vertices are pairwise unrelated (as indices).

    Vertices may repeat; whenever a vertex is revisited at a later index the
    relation is consulted on the repeated value too, so reflexive relations
    force genuinely vertex-disjoint cycles.  Returns the first walk in
    lexicographic order, or None.
    """
    h = as_graph(h)
    if ell < 2:
        raise GraphError("need ell >= 2")
    if h.n != rel.n:
        raise GraphError("relation size does not match graph")
    length = 2 * ell
    cols = [0] * h.n
    for u in range(h.n):
        for w in _bits(rel.rows[u]):
            cols[w] |= 1 << u
    walk = [0] * length

    def rec(pos, forbid):
        prev = walk[pos - 1]
        cands = h.adj[prev] & ~forbid
        if pos == length - 1:
            cands &= h.adj[walk[0]]
        for v in _bits(cands):
            walk[pos] = v
            if pos == length - 1:
                return True
            if rec(pos + 1, forbid | rel.rows[v] | cols[v]):
                return True
        return False

    for start in range(h.n):
        walk[0] = start
        if rec(1, rel.rows[start] | cols[start]):
            return tuple(walk)
    return None


# ---------------------------------------------------------------------------
# Dyadic profiles and exact inequality checks


@dataclass(frozen=True)
class RelationDegreeParams:
    """Measured crossing-degree and relation-degree maxima for (X1, X2).

    delta1 bounds |N(v) & X2| over v in X1 and s1 bounds how many of those
    neighbors any u relates to; delta2/s2 swap the roles of the sets.
    m_value = max(delta1*s2, delta2*s1).
    """

    delta1: int
    s1: int
    delta2: int
    s2: int
    m_value: int


def relation_degree_params(g, rel, x1, x2):
    g = as_graph(g)
    m1 = _mask(x1, g.n)
    m2 = _mask(x2, g.n)

    def side(members, other):
        delta = 0
        s = 0
        for v in _bits(members):
            nbrs = g.adj[v] & other
            delta = max(delta, nbrs.bit_count())
            for u in range(g.n):
                s = max(s, (nbrs & rel.rows[u]).bit_count())
        return delta, s

    delta1, s1 = side(m1, m2)
    delta2, s2 = side(m2, m1)
    return RelationDegreeParams(
        delta1, s1, delta2, s2, max(delta1 * s2, delta2 * s1)
    )


@dataclass(frozen=True)
class CycleRelationProfile:
    """Dyadic tables for walks and bad alternating cycles at one k.

    alpha[r] counts (k-1)-edge walks whose endpoint pair admits between
    2^(r-1) and 2^r - 1 such walks; beta[t] does the same for k-edge walks;
    gamma[(r, t)] counts alternating 2k-cycles in X1 x X2 x ... x X2 whose
    two endpoint-walk counts fall in those buckets and whose first vertex is
    related from one of the k vertices opposite to it.

    The three *_sum_ok flags are the executable forms of the dyadic-sum
    bounds, compared in exact integers.
    """

    k: int
    alpha: dict
    beta: dict
    gamma: dict
    hom_short: int
    hom_long: int
    params: RelationDegreeParams
    alpha_sum_ok: bool
    beta_sum_ok: bool
    gamma_sum_ok: bool


def _bucketed_walk_counts(g, t, power):
    """Dyadic histogram of all t-edge walks keyed by endpoint walk counts."""
    buckets = {}
    if t == 0:
        return {1: g.n} if g.n else {}
    walk = [0] * (t + 1)

    def rec(pos):
        prev = walk[pos - 1]
        for v in _bits(g.adj[prev]):
            walk[pos] = v
            if pos == t:
                r = power[walk[0]][v].bit_length()
                buckets[r] = buckets.get(r, 0) + 1
            else:
                rec(pos + 1)

    for start in range(g.n):
        walk[0] = start
        rec(1)
    return buckets


def profile_alpha_beta_gamma(g, k, rel, x1, x2):
    """Measure the dyadic walk/cycle tables and check their sum bounds."""
    g = as_graph(g)
    if k < 2:
        raise GraphError("need k >= 2")
    if g.n != rel.n:
        raise GraphError("relation size does not match graph")
    mat = _matrix(g)
    p_short = _mat_pow(mat, k - 1)
    p_long = _mat_pow(mat, k)
    alpha = _bucketed_walk_counts(g, k - 1, p_short)
    beta = _bucketed_walk_counts(g, k, p_long)
    hom_short = hom_cycle(2 * k - 2, g)
    hom_long = hom_cycle(2 * k, g)

    m1 = _mask(x1, g.n)
    m2 = _mask(x2, g.n)
    masks = [m1 if i % 2 == 0 else m2 for i in range(2 * k)]
    gamma = {}
    walk = [0] * (2 * k)

    def rec(pos):
        prev = walk[pos - 1]
        cands = g.adj[prev] & masks[pos]
        if pos == 2 * k - 1:
            cands &= g.adj[walk[0]]
        for v in _bits(cands):
            walk[pos] = v
            if pos == 2 * k - 1:
                if any(rel.holds(walk[i], walk[0]) for i in range(1, k + 1)):
                    r = p_short[walk[0]][walk[k + 1]].bit_length()
                    t = p_long[walk[1]][walk[k + 1]].bit_length()
                    gamma[(r, t)] = gamma.get((r, t), 0) + 1
            else:
                rec(pos + 1)

    for start in _bits(m1):
        walk[0] = start
        rec(1)

    params = relation_degree_params(g, rel, x1, x2)
    alpha_ok = sum(c << (r - 1) for r, c in alpha.items()) <= hom_short
    beta_ok = sum(c << (t - 1) for t, c in beta.items()) <= hom_long
    gamma_total = sum(gamma.values())
    gamma_ok = gamma_total ** 2 <= 64 * k * params.m_value * hom_short * hom_long
    return CycleRelationProfile(
        k, alpha, beta, gamma, hom_short, hom_long, params,
        alpha_ok, beta_ok, gamma_ok,
    )


@dataclass(frozen=True)
class BoundCheck:
    """Cross-multiplied integer comparison lhs_power <= rhs_power."""

    lhs: int
    lhs_power: int
    rhs_power: int
    holds: bool


def verify_bad_cycle_bound(g, rel, k, ell, x1, x2):
    """Check the bad-cycle count against its measured-parameter ceiling.

    The ceiling 64 k^(3/2) M^(1/2) hom(C_2ell)^(1/(2(k-ell)))
    hom(C_2k)^(1-1/(2(k-ell))) is compared after raising both sides to the
    power 2(k-ell), which clears every fractional exponent.
    """
    g = as_graph(g)
    if not 0 <= ell <= k - 1 or k < 2:
        raise GraphError("need k >= 2 and 0 <= ell < k")
    bad = bad_hom_cycle_count(g, rel, k, x1, x2)
    params = relation_degree_params(g, rel, x1, x2)
    d = k - ell
    lhs_power = bad ** (2 * d)
    rhs_power = (
        64 ** (2 * d)
        * k ** (3 * d)
        * params.m_value ** d
        * hom_cycle(2 * ell, g)
        * hom_cycle(2 * k, g) ** (2 * d - 1)
    )
    return BoundCheck(bad, lhs_power, rhs_power, lhs_power <= rhs_power)


def hom_cycle_convexity(g, k, ell):
    """Even-cycle homomorphism counts interpolate: the cross-multiplied form
    hom(C_2k-2)^(k-ell) <= hom(C_2ell) * hom(C_2k)^(k-ell-1)."""
    g = as_graph(g)
    if not 0 <= ell <= k - 1 or k < 2:
        raise GraphError("need k >= 2 and 0 <= ell < k")
    lhs = hom_cycle(2 * k - 2, g) ** (k - ell)
    rhs = hom_cycle(2 * ell, g) * hom_cycle(2 * k, g) ** (k - ell - 1)
    return BoundCheck(hom_cycle(2 * k - 2, g), lhs, rhs, lhs <= rhs)
