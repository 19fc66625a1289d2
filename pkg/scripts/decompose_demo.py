"""Draw random strict-majorization pairs, decompose each into T-transform
steps, and verify the replay reproduces the smaller vector exactly."""

import argparse
import random
from dataclasses import dataclass
from fractions import Fraction

from snorder import TTransform, exact, gds_check, gds_from_transforms, sort_desc
from snorder.majorization import (
    apply_row_vector,
    t_transform_apply,
    t_transform_decompose_trace,
)


@dataclass
class Config:
    pairs: int = 10
    n: int = 5
    seed: int = 0
    complex_entries: bool = True


def random_pair(rng, cfg):
    y = tuple(
        exact(
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)),
            Fraction(rng.randint(-20, 20), rng.randint(1, 4)) if cfg.complex_entries else 0,
        )
        for _ in range(cfg.n)
    )
    x = list(y)
    for _ in range(rng.randint(1, 4)):
        i, j = sorted(rng.sample(range(cfg.n), 2))
        x = list(t_transform_apply(x, TTransform(i, j, exact(Fraction(rng.randint(0, 12), 12)))))
    return tuple(x), y


def fmt(v):
    return "(" + ", ".join(str(z.to_complex()) for z in v) + ")"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=10)
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--real", action="store_true", help="real entries only")
    args = ap.parse_args()
    cfg = Config(args.pairs, args.n, args.seed, not args.real)
    rng = random.Random(cfg.seed)
    for k in range(cfg.pairs):
        x, y = random_pair(rng, cfg)
        ts, _ = t_transform_decompose_trace(x, y)
        p = gds_from_transforms(ts, cfg.n)
        replay = apply_row_vector(sort_desc(y), p)
        exact_match = all(a.re == b.re and a.im == b.im for a, b in zip(replay, x))
        mixing = sum(1 for t in ts if not (t.beta.is_zero() and t.beta.is_real()))
        print(
            f"pair {k:2d}: steps={len(ts):3d} (mixing={mixing}) "
            f"gds_valid={gds_check(p)} replay_exact={exact_match}"
        )
        print(f"  x = {fmt(x)}")
        print(f"  y = {fmt(y)}")


if __name__ == "__main__":
    main()
