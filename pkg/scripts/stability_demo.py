"""Float evaluation of P(U < V) as two delta variances merge.

Compares the Bezout route and the raw closed form against exact rationals
at chi = (1, 1), delta = (2, 2 + eps).
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from barett_rsk.probability import VarianceProfile, barett_direct, prob_stable


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--decades", type=int, default=12, help="smallest eps is 10^-decades")
    args = parser.parse_args()
    print(f"{'eps':>7}  {'exact':>17}  {'prob_stable':>17}  {'barett_direct':>17}  {'stable err':>10}  {'direct err':>10}")
    for k in range(1, args.decades + 1):
        eps = 10.0**-k
        exact = float(prob_stable(VarianceProfile((1, 1), (2, 2 + Fraction(eps)))))
        p = VarianceProfile((1.0, 1.0), (2.0, 2.0 + eps))
        stable = prob_stable(p)
        direct = barett_direct(p, rtol=0)
        print(
            f"{eps:7.0e}  {exact:17.15f}  {stable:17.15f}  {direct:17.15f}  "
            f"{abs(stable - exact):10.1e}  {abs(direct - exact):10.1e}"
        )


if __name__ == "__main__":
    main()
