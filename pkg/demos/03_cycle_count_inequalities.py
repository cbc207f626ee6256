"""Exact cycle-homomorphism counts and the inequalities they satisfy.

Closed-walk counts come from integer adjacency powers, so every comparison
below is exact; roots are cleared by cross-multiplying.

Run:  python3 demos/03_cycle_count_inequalities.py
"""

import random

from exgraph import (
    Relation,
    bad_hom_cycle_count,
    cycle,
    hom_cycle,
    hom_cycle_convexity,
    profile_alpha_beta_gamma,
    verify_bad_cycle_bound,
)
from exgraph.corpus import random_graph, random_relation

rng = random.Random(5)
g = random_graph(7, 0.5, rng)
print(f"host: {g.n} vertices, {g.num_edges} edges")

print()
print("== closed-walk counts ==")
for k in range(5):
    print(f"hom(C_{2 * k}) = {hom_cycle(2 * k, g)}")

print()
print("== interpolation between even-cycle counts ==")
for k, ell in ((2, 0), (3, 0), (3, 1), (4, 2)):
    chk = hom_cycle_convexity(g, k, ell)
    print(
        f"k={k}, l={ell}: hom(C_{2 * k - 2})^{k - ell} = {chk.lhs_power} "
        f"<= {chk.rhs_power}  [{chk.holds}]"
    )

print()
print("== alternating cycles that hit a relation ==")
rel = random_relation(g.n, 0.2, rng)
x1 = [0, 1, 2, 3]
x2 = [3, 4, 5, 6]
for k in (2, 3):
    bad = bad_hom_cycle_count(g, rel, k, x1, x2)
    chk = verify_bad_cycle_bound(g, rel, k, 0, x1, x2)
    print(f"k={k}: bad count {bad}, ceiling holds: {chk.holds}")

print()
print("== dyadic walk profiles ==")
prof = profile_alpha_beta_gamma(g, 2, rel, x1, x2)
print("alpha buckets:", dict(sorted(prof.alpha.items())))
print("beta buckets: ", dict(sorted(prof.beta.items())))
print("gamma buckets:", dict(sorted(prof.gamma.items())))
print(
    "sum bounds hold:",
    prof.alpha_sum_ok and prof.beta_sum_ok and prof.gamma_sum_ok,
)

print()
print("== a sanity anchor on the 4-cycle ==")
c4 = cycle(4)
print("hom(C_4) of the 4-cycle:", hom_cycle(4, c4))
print(
    "bad alternating 4-cycles under the identity relation:",
    bad_hom_cycle_count(c4, Relation.identity(4), 2, [0, 2], [1, 3]),
)
