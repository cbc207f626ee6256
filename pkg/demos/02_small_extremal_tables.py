"""Exact extremal and side-respecting extremal numbers at small scale.

Prints ex(n, H) for general hosts, the bipartite-host variant ex(n, n, H),
and the side-respecting z(n, n, H), then checks the definitional sandwich
z(n,n,H) >= ex(n,n,H) and ex(n,n,H) <= ex(2n,H) <= 2 ex(n,n,H).

Run:  python3 demos/02_small_extremal_tables.py
"""

from exgraph import (
    bipartite_extremal_number,
    cycle,
    extremal_number,
    is_bipartite,
    zarankiewicz_number,
)

print("== ex(n, C4) ==")
for n in range(4, 8):
    rep = extremal_number(n, cycle(4))
    print(
        f"n={n}: value {rep.value} (exact={rep.exact}, "
        f"{rep.nodes_explored} nodes, {rep.elapsed:.2f}s)"
    )

print()
print("== bipartite hosts ==")
for pattern_name, pattern in (("C4", cycle(4)), ("C6", cycle(6))):
    sided = is_bipartite(pattern)
    print(f"pattern {pattern_name}:")
    for n in (2, 3):
        z = zarankiewicz_number(n, n, sided).value
        e_nn = bipartite_extremal_number(n, n, pattern).value
        e_2n = extremal_number(2 * n, pattern).value
        print(
            f"  n={n}: z(n,n)={z}  ex(n,n)={e_nn}  ex(2n)={e_2n}  "
            f"[z>=ex(n,n): {z >= e_nn}, "
            f"ex(n,n) <= ex(2n) <= 2ex(n,n): {e_nn <= e_2n <= 2 * e_nn}]"
        )

print()
print("== a witness graph ==")
rep = extremal_number(6, cycle(4))
print(f"a 4-cycle-free graph on 6 vertices with {rep.value} edges:")
print("  edges:", rep.witness.edges())
