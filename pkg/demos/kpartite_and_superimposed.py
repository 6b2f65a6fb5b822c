"""Beyond bipartite: k-partite guarantees and superimposed cliques.

Two extensions of the same rectangle picture: complete k-partite
multigraphs, where any 2-coloring with parts of size n > 2(p-1) contains
a monochromatic complete subgraph on p vertices per part; and clique
families, where averaging forces t colors to share many vertices.

Run: python3 demos/kpartite_and_superimposed.py
"""

import random

from shufflecover import (
    CliqueFamily,
    KPartiteCover,
    Rectangle,
    construct_kpartite_avoiding,
    find_mono_kpartite,
    find_mono_kpartite_brute,
    max_superimposed,
    superimposed_bound,
    verify_kpartite_witness,
)


def two_coloring_with_split_part(n: int) -> KPartiteCover:
    # part 0 is split between the colors; parts 1, 2 carry both in full
    full = frozenset(range(n))
    low = frozenset(range((n + 1) // 2 + 1))
    high = frozenset(range(n // 2 - 1, n))
    split = (
        Rectangle(color=0, rows=low, cols=full),
        Rectangle(color=1, rows=high, cols=full),
    )
    both = (
        Rectangle(color=0, rows=full, cols=full),
        Rectangle(color=1, rows=full, cols=full),
    )
    return KPartiteCover(k=3, n=n, pairs=((0, 1, split), (0, 2, split), (1, 2, both)))


def main() -> None:
    print("3-partite 2-coloring, parts of size 7")
    cover = two_coloring_with_split_part(7)
    for p in range(2, 6):
        w = find_mono_kpartite(cover, p)
        forced = 2 * (p - 1) < 7
        line = f"  p={p} (forced={forced}): "
        if w is None:
            print(line + "none")
        else:
            assert verify_kpartite_witness(cover, w, p)
            print(line + f"color {w.color}, parts {[sorted(part) for part in w.parts]}")
    print()

    print("avoidance construction: n=6, m=3, k=3 dodges p=3")
    avoid = construct_kpartite_avoiding(6, 3, 3)
    p = -(-6 // 3) + 1
    print("  brute-force search for p=3:", find_mono_kpartite_brute(avoid, p))
    print()

    print("superimposed cliques: 6 cliques on 12 vertices")
    rng = random.Random(99)
    cliques = tuple(
        (color, frozenset(rng.sample(range(12), rng.randint(4, 10))))
        for color in range(6)
    )
    family = CliqueFamily(n_vertices=12, cliques=cliques)
    hist = family.membership_histogram()
    print("  membership histogram d_i:", dict(sorted(hist.items())))
    print(f"  {'t':>3} {'bound':>6} {'exact':>6}  best subset")
    for t in range(1, 7):
        bound = superimposed_bound(family, t)
        w = max_superimposed(family, t)
        print(f"  {t:>3} {bound:>6} {len(w.vertices):>6}  colors {sorted(w.colors)}")
    print()
    print("the averaging bound never exceeds the exact optimum, and both")
    print("shrink as more cliques must agree on the same vertices.")


if __name__ == "__main__":
    main()
