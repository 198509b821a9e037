"""Exhaustive comparison of the finite-type test with the orbit predicate.

Every GCM of rank <= R whose off-diagonal pairs are drawn from
{(0, 0)} and {-1, -2, -3}^2 is classified twice: by positive definiteness
of the symmetrized matrix, and by whether the orbit of rho stays within
the budget.  Infinite principal submatrices short-circuit the orbit run.

    python3 scripts/gcm_sweep.py [--rank 4] [--cap 10000]

The default budget exceeds |W(F4)| = 1152, the largest finite Weyl group
in rank <= 4.  Much larger budgets run out of memory on hyperbolic
diagrams, whose orbit coordinates grow exponentially.
"""

import argparse
import time
from itertools import combinations, product

from weylfaces.cartan import is_finite_type, validate_gcm
from weylfaces.errors import NotSymmetrizable
from weylfaces.oracle import brute_force_finite_type

PAIRS = [(0, 0)] + [(a, b) for a in (-1, -2, -3) for b in (-1, -2, -3)]


def matrices(n):
    edges = list(combinations(range(n), 2))
    for choice in product(PAIRS, repeat=len(edges)):
        m = [[2] * n for _ in range(n)]
        for (i, j), (a, b) in zip(edges, choice):
            m[i][j], m[j][i] = a, b
        yield m


def key(m, nodes):
    return tuple(tuple(m[i][j] for j in nodes) for i in nodes)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=4)
    ap.add_argument("--cap", type=int, default=10**4)
    args = ap.parse_args()
    verdict = {}
    for n in range(1, args.rank + 1):
        t0 = time.perf_counter()
        total = finite = orbit_runs = 0
        bad = []
        for m in matrices(n):
            total += 1
            subs = [verdict[key(m, s)] for s in combinations(range(n), n - 1)] if n > 1 else []
            if all(subs):
                orbit_runs += 1
                brute = brute_force_finite_type(m, args.cap)
            else:
                brute = False
            if n < args.rank:  # only principal submatrices are looked up later
                verdict[key(m, range(n))] = brute
            try:
                ours = is_finite_type(validate_gcm(m))
            except NotSymmetrizable:
                ours = False
            finite += ours
            if ours != brute:
                bad.append(m)
        print(f"rank {n}: {total} matrices, {finite} finite, {orbit_runs} orbit runs, "
              f"{len(bad)} disagreements ({time.perf_counter() - t0:.1f}s)", flush=True)
        for m in bad[:5]:
            print("   ", m)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
