"""Table of chromatic numbers and first-fit palette sizes per order and
adjacency mode.

    python scripts/chromatic_survey.py --max-order 6 --trials 200
"""

import argparse
import random
import time

from tricolor.coloring import exact_chromatic, greedy_coloring, periodic_coloring
from tricolor.errors import ResourceError
from tricolor.structure import AdjacencyMode, build_structure, to_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-order", type=int, default=6)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'n':>3} {'mode':>6} {'V':>4} {'E':>5} {'maxdeg':>6} {'chi':>4} "
          f"{'greedy min/max':>15} {'periodic':>8} {'secs':>6}")
    for n in range(2, args.max_order + 1):
        s = build_structure(n)
        for mode in AdjacencyMode:
            g = to_graph(s, mode)
            t0 = time.perf_counter()
            try:
                chi = exact_chromatic(g)[0]
            except ResourceError:
                chi = "-"
            secs = time.perf_counter() - t0
            sizes = []
            for _ in range(args.trials):
                order = rng.sample(range(g.vertex_count), g.vertex_count)
                sizes.append(greedy_coloring(g, order).palette_size)
            periodic = "yes" if mode is AdjacencyMode.PATH else "-"
            if mode is AdjacencyMode.PATH:
                assert periodic_coloring(s).palette_size == 3
            print(f"{n:>3} {mode.value:>6} {g.vertex_count:>4} {len(g.edges):>5} {g.max_degree:>6} "
                  f"{chi:>4} {min(sizes):>7}/{max(sizes):<7} {periodic:>8} {secs:>6.2f}")


if __name__ == "__main__":
    main()
