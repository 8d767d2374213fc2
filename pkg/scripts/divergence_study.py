"""How often do centroid ranking and mean ranking disagree?

Draws pairs of groups whose scores come from the same normal distribution
(mean 50%, sd 7%, clipped to [0, 100], rounded to hundredths) and counts the
pairs where the two rankings differ, for several group sizes.

    python scripts/divergence_study.py --trials 5000 --seed 1
"""
import argparse
import random

from fuzzybridge import Percentage, assess_group, report


def draw(rng, n, sd):
    return [Percentage(min(10000, max(0, round(rng.gauss(50, sd) * 100)))) for _ in range(n)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--sd", type=float, default=7.0, help="score spread, in percent")
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 5, 8, 12, 20, 40])
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'size':>5}  {'diverge':>8}  {'xc ties':>8}")
    for n in args.sizes:
        diverge = ties = 0
        for _ in range(args.trials):
            a = assess_group("a", draw(rng, n, args.sd))
            b = assess_group("b", draw(rng, n, args.sd))
            rep = report([a, b])
            diverge += rep.divergence_flag
            ties += a.centroid.x_c == b.centroid.x_c
        print(f"{n:>5}  {diverge / args.trials:>8.3f}  {ties / args.trials:>8.3f}")


if __name__ == "__main__":
    main()
