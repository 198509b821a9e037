"""Face classes of the A3 permutohedron and its hull cross-check.

    python3 scripts/permutohedron_a3.py [--pairings 1,1,1]
"""

import argparse
import time

from weylfaces.cartan import validate_gcm
from weylfaces.faces import ModuleDescriptor, enumerate_standard_faces, f_polynomial
from weylfaces.model import parse_offset
from weylfaces.oracle import hull, orbit_offsets
from weylfaces.weyl import parabolic_index

A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairings", default="1,1,1")
    args = ap.parse_args()
    c = validate_gcm(A3)
    p = parse_offset(args.pairings, 3)
    V = ModuleDescriptor.classical(c, p, c.nodes)

    t0 = time.perf_counter()
    print(f"{'j_min':>12} {'j_max':>12} {'dim':>4} {'count':>6}")
    for lo, hi, dim in enumerate_standard_faces(V):
        n = parabolic_index(c, c.nodes, hi)
        print(f"{str(c.label_list(lo)):>12} {str(c.label_list(hi)):>12} {dim:>4} {n:>6}")
    fp = f_polynomial(V)
    t1 = time.perf_counter()
    hc = hull(orbit_offsets(A3, p, range(3), 10**4))
    t2 = time.perf_counter()
    print(f"classification: {fp}   ({t1 - t0:.3f}s)")
    print(f"hull oracle:    {hc.f_polynomial}   ({t2 - t1:.3f}s, {len(hc.vertices)} vertices)")
    print("agree" if fp == hc.f_polynomial else "MISMATCH")


if __name__ == "__main__":
    main()
