"""Shape predicates (polytope, polyhedron, closed) over all integrabilities and
0/1 highest weights of a few diagrams.

    python3 scripts/closedness_survey.py
"""

from itertools import product

from weylfaces.cartan import is_finite_type, validate_gcm
from weylfaces.faces import ModuleDescriptor, all_subsets
from weylfaces.weights import is_closed, is_polyhedron, is_polytope

DIAGRAMS = {
    "A2": [[2, -1], [-1, 2]],
    "A1^(1)": [[2, -2], [-2, 2]],
    "aff_a1_ext": [[2, -2, -1], [-2, 2, 0], [-1, 0, 2]],
    "A2^(1)": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "hyp": [[2, -3], [-3, 2]],
}


def main():
    for name, m in DIAGRAMS.items():
        c = validate_gcm(m)
        print(f"== {name} ({'finite' if is_finite_type(c) else 'infinite'} type)")
        counts = {}
        for I_V in all_subsets(c.nodes):
            for p in product((0, 1), repeat=c.n):
                V = ModuleDescriptor.classical(c, p, I_V)
                key = (is_polytope(V), is_polyhedron(V), is_closed(V))
                assert not key[0] or key[1], "polytope without polyhedron"
                counts[key] = counts.get(key, 0) + 1
                if name in ("A1^(1)", "aff_a1_ext") and I_V == frozenset({0, 1}):
                    print(f"  I_V={c.label_list(I_V)} pairings={p}: polytope={key[0]} polyhedron={key[1]} closed={key[2]}")
        for key, n in sorted(counts.items()):
            print(f"  (polytope, polyhedron, closed)={key}: {n} modules")


if __name__ == "__main__":
    main()
