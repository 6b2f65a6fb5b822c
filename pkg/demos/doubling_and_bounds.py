"""The doubling construction against the closed-form bounds.

Level k of the recursive family is a 2^k x 2^k matrix that stays free of
monochromatic K_{2,2} while using only 3 * 2^(k-2) colors per vertex; the
mod-m family trades width for avoidance at any scale.  Both are compared
to the guarantee/avoidance bounds.

Run: python3 demos/doubling_and_bounds.py
"""

from shufflecover import (
    avoidance_threshold,
    construct_mod_m,
    construct_recursive_matrix,
    find_mono_biclique_brute,
    guaranteed_p,
    matrix_local_profile,
    validate_shuffle_preserved,
)


def main() -> None:
    print("doubling family: width grows, K_{2,2} never appears")
    print(f"{'k':>3} {'side':>5} {'local width':>12} {'mono 2x2':>9}")
    for k in range(2, 6):
        matrix = construct_recursive_matrix(k)
        assert validate_shuffle_preserved(matrix) is None
        width = matrix_local_profile(matrix).local_width
        found = find_mono_biclique_brute(matrix, 2, max_n=matrix.n_rows) is not None
        print(f"{k:>3} {matrix.n_rows:>5} {width:>12} {str(found):>9}")
    print()
    print("the guarantee bound forces a K_{2,2} whenever 2(m-1) < n, i.e.")
    print("below width about n/2; the doubling family avoids one at width")
    print("3n/4, so the true threshold for n = 2^k sits between n/2 and 3n/4.")
    print()

    print("bounds for n = 16:")
    print(f"{'m':>3} {'forced K_pp up to p=':>21} {'avoidable for p >':>18}")
    for m in (1, 2, 3, 4, 6, 8):
        print(f"{m:>3} {guaranteed_p(16, m):>21} {avoidance_threshold(16, m):>18}")
    print()

    print("mod-m at n=9: stripes of ceil(9/m) rows")
    for m in (1, 2, 3, 4):
        matrix = construct_mod_m(9, m)
        thin = -(-9 // m)
        hit = find_mono_biclique_brute(matrix, min(thin, 6)) is not None
        miss = find_mono_biclique_brute(matrix, min(thin + 1, 7), max_p=7) is not None
        print(
            f"  m={m}: K_{{{thin},{thin}}} present={hit}, "
            f"K_{{{thin + 1},{thin + 1}}} present={miss}"
        )


if __name__ == "__main__":
    main()
