"""Universal f-polynomials by stratum for a few small diagrams.

    python3 scripts/universal_table.py [--convention coroot_real|real_form]
"""

import argparse

from weylfaces.cartan import validate_gcm
from weylfaces.faces import all_subsets, f_polynomial
from weylfaces.universal import fiber_module, strata, universal_f_polynomial, universal_is_polyhedron

DIAGRAMS = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-2, 2]],
    "A1^(1)": [[2, -2], [-2, 2]],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--convention", choices=("coroot_real", "real_form"), default="coroot_real")
    args = ap.parse_args()
    for name, m in DIAGRAMS.items():
        c = validate_gcm(m)
        print(f"== {name} (dim h* = {c.realization_dim})")
        for J in all_subsets(c.nodes):
            total = universal_f_polynomial(c, J, convention=args.convention)
            shape = "polyhedron" if universal_is_polyhedron(c, J) else "not a polyhedron"
            print(f"  J={c.label_list(J)}: {total}  [{shape}]")
            for st in strata(c, J, args.convention):
                fp = f_polynomial(fiber_module(c, J, st.K))
                print(f"      K={c.label_list(st.K)} dim {st.dim}: fiber {fp}")


if __name__ == "__main__":
    main()
