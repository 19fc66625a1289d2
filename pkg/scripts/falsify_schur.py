"""Randomized Schur-convexity falsifier: probes symmetric functions with
random strictly majorized pairs and reports the first counterexample."""

import argparse
import math

from snorder.schur import (
    DEFAULT_SEED,
    SymmetricFunction,
    negative_sum_of_squares,
    schur_convex_falsify,
    sum_of_squares,
)


def candidates(n):
    yield "sum of squares", sum_of_squares(n)
    yield "negative sum of squares", negative_sum_of_squares(n)
    yield "sum of cubes", SymmetricFunction(n, lambda v: sum(z ** 3 for z in v))
    yield "product", SymmetricFunction(n, lambda v: math.prod(v))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--complex", action="store_true", dest="complex_entries")
    args = ap.parse_args()
    for name, f in candidates(args.n):
        cex = schur_convex_falsify(
            f, args.n, trials=args.trials, seed=args.seed,
            complex_entries=args.complex_entries,
        )
        if cex is None:
            print(f"{name:26s} survived {args.trials} trials")
        else:
            print(f"{name:26s} falsified at trial {cex.trial}:")
            print(f"  x = {[z.to_complex() for z in cex.x]}")
            print(f"  y = {[z.to_complex() for z in cex.y]}")
            print(f"  f(x) = {cex.f_x}  >  f(y) = {cex.f_y}")


if __name__ == "__main__":
    main()
