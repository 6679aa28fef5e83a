"""Random length multisets: how often the Kraft sum admits a code, and a
check that every admissible one yields a prefix code via the canonical
construction."""

import argparse
import random
from collections import Counter

from tricolor.errors import KraftViolation
from tricolor.prefixcode import format_rational, is_prefix_free, kraft_construct, kraft_sum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=5000)
    ap.add_argument("--max-length", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    tally = Counter()
    for _ in range(args.samples):
        lengths = [rng.randint(1, args.max_length) for _ in range(rng.randint(1, 16))]
        total = kraft_sum(lengths)
        try:
            code = kraft_construct(lengths)
        except KraftViolation:
            tally["rejected"] += 1
            continue
        assert is_prefix_free(code)
        tally["complete" if total == 1 else "admissible"] += 1
    for k in ("complete", "admissible", "rejected"):
        print(f"{k:>10}: {tally[k]}")
    print("paper lengths 1,2,3,3 ->", format_rational(kraft_sum([1, 2, 3, 3])),
          kraft_construct([1, 2, 3, 3]))


if __name__ == "__main__":
    main()
