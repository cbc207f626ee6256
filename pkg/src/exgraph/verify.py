"""Batch verification suites behind the ``verify`` CLI subcommand.

Each suite runs one family of checks over a seeded corpus and returns rows of
(check id, lhs, rhs, passed), all values exact integers or rationals printed
verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BipartiteGraph, as_graph, degeneracy, is_bipartite
from .constructions import critical_family, glue
from .corpus import (
    convexity_corpus,
    cut_peel_corpus,
    relation_instance_corpus,
)
from .counting import (
    hom_cycle_convexity,
    profile_alpha_beta_gamma,
    verify_bad_cycle_bound,
)
from .core import is_critical_r_degenerate
from .extremal import (
    bipartite_extremal_number,
    extremal_number,
    zarankiewicz_number,
)
from .procedures import balanced_bipartite_subgraph, min_degree_peel

SUITES = ("chain", "lemma37", "lemma36", "eqs", "facts", "critical")


@dataclass(frozen=True)
class CheckRow:
    check_id: str
    lhs: object
    rhs: object
    passed: bool


@dataclass
class SuiteReport:
    suite: str
    rows: list
    budget_exhausted: bool = False

    @property
    def passed(self):
        return all(r.passed for r in self.rows)


def suite_chain(pattern, n, budget=None):
    """Definitional inequalities between the three extremal quantities."""
    pat = as_graph(pattern)
    sides = pattern if isinstance(pattern, BipartiteGraph) else is_bipartite(pat)
    if not isinstance(sides, BipartiteGraph):
        raise ValueError("chain suite needs a bipartite pattern")
    rz = zarankiewicz_number(n, n, sides, budget)
    re_nn = bipartite_extremal_number(n, n, pat, budget)
    re_2n = extremal_number(2 * n, pat, budget)
    exhausted = rz.budget_exhausted or re_nn.budget_exhausted or re_2n.budget_exhausted
    rows = [
        CheckRow("z(n,n)>=ex(n,n)", rz.value, re_nn.value, rz.value >= re_nn.value),
        CheckRow("ex(2n)>=ex(n,n)", re_2n.value, re_nn.value, re_2n.value >= re_nn.value),
        CheckRow("2ex(n,n)>=ex(2n)", 2 * re_nn.value, re_2n.value,
                 2 * re_nn.value >= re_2n.value),
    ]
    return SuiteReport("chain", rows, exhausted)


def suite_convexity(seed, count):
    """Cross-multiplied even-cycle interpolation on a random corpus."""
    rows = []
    for i, g in enumerate(convexity_corpus(seed, count)):
        for k, ell in ((2, 0), (3, 0), (3, 1), (4, 2)):
            chk = hom_cycle_convexity(g, k, ell)
            rows.append(
                CheckRow(f"g{i}-k{k}-l{ell}", chk.lhs_power, chk.rhs_power, chk.holds)
            )
    return SuiteReport("lemma37", rows)


def suite_bad_cycle_bound(seed, count):
    """Measured-parameter ceiling on related alternating cycles."""
    rows = []
    for i, (g, rel, x1, x2, k) in enumerate(relation_instance_corpus(seed, count)):
        for ell in range(k):
            chk = verify_bad_cycle_bound(g, rel, k, ell, x1, x2)
            rows.append(
                CheckRow(f"i{i}-k{k}-l{ell}", chk.lhs_power, chk.rhs_power, chk.holds)
            )
    return SuiteReport("lemma36", rows)


def suite_dyadic_sums(seed, count):
    """The three dyadic-sum inequalities of the cycle profiles."""
    rows = []
    for i, (g, rel, x1, x2, k) in enumerate(relation_instance_corpus(seed, count)):
        prof = profile_alpha_beta_gamma(g, k, rel, x1, x2)
        alpha_lhs = sum(c << (r - 1) for r, c in prof.alpha.items())
        beta_lhs = sum(c << (t - 1) for t, c in prof.beta.items())
        gamma_lhs = sum(prof.gamma.values()) ** 2
        gamma_rhs = 64 * k * prof.params.m_value * prof.hom_short * prof.hom_long
        rows += [
            CheckRow(f"i{i}-alpha", alpha_lhs, prof.hom_short, prof.alpha_sum_ok),
            CheckRow(f"i{i}-beta", beta_lhs, prof.hom_long, prof.beta_sum_ok),
            CheckRow(f"i{i}-gamma", gamma_lhs, gamma_rhs, prof.gamma_sum_ok),
        ]
    return SuiteReport("eqs", rows)


def suite_cut_and_peel(seed, count):
    """Balanced-cut and minimum-degree-cleanup guarantees."""
    rows = []
    for i, g in enumerate(cut_peel_corpus(seed, count)):
        bal = balanced_bipartite_subgraph(g)
        rows.append(
            CheckRow(
                f"g{i}-cut", 2 * bal.graph.num_edges, g.num_edges,
                2 * bal.graph.num_edges >= g.num_edges,
            )
        )
        sub = min_degree_peel(g)
        rows.append(
            CheckRow(
                f"g{i}-peel-edges", 2 * sub.num_edges, g.num_edges,
                2 * sub.num_edges >= g.num_edges,
            )
        )
        min_deg = min(sub.degrees)
        rows.append(
            CheckRow(
                f"g{i}-peel-mindeg", 2 * g.n * min_deg, g.num_edges,
                2 * g.n * min_deg >= g.num_edges,
            )
        )
    return SuiteReport("facts", rows)


def suite_critical():
    """The critical family and the loss of degeneracy after gluing."""
    rows = []
    for r in range(2, 7):
        h = critical_family(r)
        g = h.graph
        rows.append(CheckRow(f"r{r}-vertices", g.n, 3 * r + 2, g.n == 3 * r + 2))
        rows.append(
            CheckRow(
                f"r{r}-edges", g.num_edges, 2 * r * r + 2 * r,
                g.num_edges == 2 * r * r + 2 * r,
            )
        )
        bip = isinstance(is_bipartite(g), BipartiteGraph)
        rows.append(CheckRow(f"r{r}-bipartite", int(bip), 1, bip))
        crit = is_critical_r_degenerate(g, r)
        rows.append(CheckRow(f"r{r}-critical", int(crit), 1, crit))
        merged = glue(h, h).graph
        rows.append(
            CheckRow(
                f"r{r}-glue-mindeg", merged.min_degree(), r + 1,
                merged.min_degree() >= r + 1,
            )
        )
        d, _ = degeneracy(merged)
        rows.append(CheckRow(f"r{r}-glue-degeneracy", d, r, d > r))
    return SuiteReport("critical", rows)


def run_suite(name, pattern=None, n=3, seed=7, count=None, budget=None):
    """Dispatch a suite by its CLI token."""
    if name == "chain":
        if pattern is None:
            raise ValueError("chain suite needs a pattern")
        return suite_chain(pattern, n, budget)
    if name == "lemma37":
        return suite_convexity(seed, count or 200)
    if name == "lemma36":
        return suite_bad_cycle_bound(seed, count or 50)
    if name == "eqs":
        return suite_dyadic_sums(seed, count or 50)
    if name == "facts":
        return suite_cut_and_peel(seed, count or 100)
    if name == "critical":
        return suite_critical()
    raise ValueError(f"unknown suite {name!r}")
