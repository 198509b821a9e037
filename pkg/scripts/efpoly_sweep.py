"""Regular-weight f-polynomials: closed formula, face classification, hull.

Draws a few random regular dominant integral weights per diagram and checks
that the three counts agree.

    python3 scripts/efpoly_sweep.py [--trials 5] [--seed 0]
"""

import argparse
import random
import time

from weylfaces.cartan import validate_gcm
from weylfaces.faces import ModuleDescriptor, f_polynomial, f_polynomial_regular
from weylfaces.oracle import hull_f_polynomial, orbit_offsets

DIAGRAMS = {
    "A1": [[2]],
    "A1xA1": [[2, 0], [0, 2]],
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B3": [[2, -1, 0], [-1, 2, -1], [0, -2, 2]],
    "C3": [[2, -1, 0], [-1, 2, -2], [0, -1, 2]],
    "A1xA2": [[2, 0, 0], [0, 2, -1], [0, -1, 2]],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    failures = 0
    for name, m in DIAGRAMS.items():
        c = validate_gcm(m)
        formula = f_polynomial_regular(c)
        t0 = time.perf_counter()
        for _ in range(args.trials):
            p = [rng.randint(1, 5) for _ in range(c.n)]
            ours = f_polynomial(ModuleDescriptor.classical(c, p, c.nodes))
            theirs = hull_f_polynomial(orbit_offsets(m, p, range(c.n), 10**5))
            if not formula == ours == theirs:
                failures += 1
                print(f"  mismatch {name} {p}: {formula} | {ours} | {theirs}")
        print(f"{name:>6}: {formula}   ({args.trials} weights, {time.perf_counter() - t0:.2f}s)")
    print("all agree" if not failures else f"{failures} mismatches")
    return failures


if __name__ == "__main__":
    raise SystemExit(main())
