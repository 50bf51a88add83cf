"""Monte Carlo estimates next to the stable value for a few variance profiles."""

from __future__ import annotations

import argparse

from barett_rsk.probability import VarianceProfile, monte_carlo, prob_stable

PROFILES = [
    ((1, 1), (2, 3)),
    ((1, 1), (2, 2)),
    ((1, 2, 3, 4), (1, 1, 1, 1)),
    ((0.5, 3, 1), (2, 2, 5)),
    ((3, 1, 4, 1), (5, 9, 2, 6)),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10**6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for chi, delta in PROFILES:
        p = VarianceProfile(tuple(map(float, chi)), tuple(map(float, delta)))
        r = monte_carlo(p, args.samples, seed=args.seed)
        ref = prob_stable(p)
        z = (r.estimate - ref) / r.std_error
        print(f"chi={chi} delta={delta}: mc {r.estimate:.6f} (se {r.std_error:.1e})  stable {ref:.6f}  z {z:+.2f}")


if __name__ == "__main__":
    main()
