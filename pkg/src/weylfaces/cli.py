"""Command line interface: ``weylfaces <command> MODEL.json [options]``.

Results go to stdout as JSON; logging goes to stderr.  Exit codes: 0 ok,
2 invalid input, 3 budget exhausted, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from itertools import product

from weylfaces import config
from weylfaces.cartan import is_finite_type
from weylfaces.errors import CapExceeded, WeylFacesError
from weylfaces.faces import (
    active_nodes,
    all_subsets,
    enumerate_standard_faces,
    f_polynomial,
    face_map_fiber,
)
from weylfaces.model import format_rational, load_model, parse_offset
from weylfaces.oracle import enumerate_module_weights, module_polyhedron_f_polynomial, sample_membership_crosscheck
from weylfaces.universal import fiber_module, strata, universal_f_polynomial, universal_is_polyhedron
from weylfaces.weights import (
    WeylPolyhedronDescriptor,
    in_weyl_polyhedron,
    in_wt_parabolic_verma,
    in_wt_simple,
)
from weylfaces.weyl import Weight

log = logging.getLogger("weylfaces")

EXIT_INVALID = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


class Mismatch(Exception):
    def __init__(self, report):
        self.report = report


def _emit(obj):
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def cmd_faces(args, m):
    out = []
    for lo, hi, dim in enumerate_standard_faces(m.module):
        out.append({"j_min": m.labels(lo), "j_max": m.labels(hi), "dim": dim})
    return out


def cmd_fpoly(args, m):
    return {"fpoly": f_polynomial(m.module, args.orbit_cap).to_pairs()}


def cmd_member(args, m):
    V = m.module
    c = m.cartan
    mu = Weight(V.hw.base, parse_offset(args.offset, c.n))
    if args.mode == "verma":
        ans = in_wt_parabolic_verma(V, mu, args.dominance_cap)
    elif args.mode == "simple":
        ans = in_wt_simple(c, V.hw, mu, args.dominance_cap)
    else:
        ans = in_weyl_polyhedron(WeylPolyhedronDescriptor(c, V.hw, V.integrability), mu, args.dominance_cap)
    return {"member": ans}


def cmd_universal(args, m):
    c = m.cartan
    J = m.J if m.J is not None else m.module.integrability
    rows = []
    for st in strata(c, J, args.convention):
        fp = f_polynomial(fiber_module(c, J, st.K), args.orbit_cap)
        rows.append({"K": m.labels(st.K), "dim": st.dim, "fpoly": fp.to_pairs()})
    return {
        "J": m.labels(J),
        "fpoly": universal_f_polynomial(c, J, args.orbit_cap, args.convention).to_pairs(),
        "polyhedron": universal_is_polyhedron(c, J),
        "strata": rows,
    }


def cmd_oracle(args, m):
    V = m.module
    c = m.cartan
    if V.flavor != "classical":
        raise ValueError("the oracle handles the classical flavor only")
    if not is_finite_type(c, V.integrability):
        raise ValueError("the oracle needs a finite integrable Weyl group")
    if args.check == "fpoly":
        ours = f_polynomial(V, args.orbit_cap)
        theirs = module_polyhedron_f_polynomial(c, V.hw, V.integrability, config.orbit_cap(args.orbit_cap))
        report = {"check": "fpoly", "fpoly": ours.to_pairs(), "oracle": theirs.to_pairs(), "pass": ours == theirs}
    elif args.check == "membership":
        rep = sample_membership_crosscheck(V, args.samples, args.seed)
        report = {
            "check": "membership",
            "samples": rep.n_samples,
            "inside": rep.inside,
            "disagreements": [[format_rational(x) for x in p] for p in rep.disagreements],
            "pass": not rep.disagreements,
        }
    else:
        depth = args.depth
        enumerated = enumerate_module_weights(c, V.hw, V.integrability, depth, config.orbit_cap(args.orbit_cap))
        bad = []
        total = 0
        for x in product(range(depth + 1), repeat=c.n):
            if sum(x) > depth:
                continue
            total += 1
            mu = V.hw.lower(x)
            if in_wt_parabolic_verma(V, mu, args.dominance_cap) != (x in enumerated):
                bad.append(list(x))
        report = {"check": "slices", "depth": depth, "points": total, "weights": len(enumerated),
                  "disagreements": bad, "pass": not bad}
    if not report["pass"]:
        raise Mismatch(report)
    return report


def cmd_quantum(args, m):
    V = m.module
    table = []
    for J in all_subsets(m.cartan.nodes):
        lo, hi = face_map_fiber(V, J)
        table.append({
            "J": m.labels(J),
            "active": m.labels(active_nodes(V, J)),
            "j_min": m.labels(lo),
            "j_max": m.labels(hi),
        })
    return {"flavor": V.flavor, "table": table}


COMMANDS = {
    "faces": cmd_faces,
    "fpoly": cmd_fpoly,
    "member": cmd_member,
    "universal": cmd_universal,
    "oracle": cmd_oracle,
    "quantum": cmd_quantum,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylfaces", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("model", help="path to a JSON model file")
        sp.add_argument("--orbit-cap", type=int, default=None, help="orbit budget (env WEYLFACES_ORBIT_CAP)")
        sp.add_argument("--dominance-cap", type=int, default=None,
                        help="reflection descent budget (env WEYLFACES_DOMINANCE_CAP)")
        return sp

    add("faces", "standard face classes (j_min, j_max, dim)")
    add("fpoly", "f-polynomial of conv V")
    sp = add("member", "weight or hull membership of lambda - offset")
    sp.add_argument("--offset", required=True, help='root offset, e.g. "1,0,2/3"')
    sp.add_argument("--mode", choices=("verma", "simple", "polyhedron"), default="verma")
    sp = add("universal", "f-polynomial and strata of the universal Weyl polyhedron")
    sp.add_argument("--convention", choices=("coroot_real", "real_form"), default="coroot_real")
    sp = add("oracle", "cross-check against brute force")
    sp.add_argument("--check", choices=("fpoly", "membership", "slices"), default="fpoly")
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--depth", type=int, default=4)
    add("quantum", "active nodes and (j_min, j_max) for every J")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args.orbit_cap = config.orbit_cap(args.orbit_cap)
    args.dominance_cap = config.dominance_cap(args.dominance_cap)
    try:
        m = load_model(args.model)
        log.info("loaded %s: rank %d, I_V = %s", args.model, m.cartan.n, m.labels(m.module.integrability))
        result = COMMANDS[args.command](args, m)
    except CapExceeded as exc:
        log.error("%s", exc)
        if args.command == "member":
            _emit({"member": "cap_exceeded"})
        return EXIT_CAP
    except Mismatch as exc:
        _emit(exc.report)
        log.error("oracle mismatch")
        return EXIT_MISMATCH
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError, WeylFacesError) as exc:
        log.error("invalid input: %s", exc)
        return EXIT_INVALID
    _emit(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
