"""JSON model files and exact (de)serialization of rationals."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from weylfaces.cartan import CartanData, validate_gcm
from weylfaces.faces import ModuleDescriptor, TorusValue
from weylfaces.weyl import Weight


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise ValueError(f"rational {x!r} must be an integer or 'p/q'")
        return Fraction(s)
    raise ValueError(f"cannot read {x!r} as an exact rational (floats are rejected)")


def format_rational(x: Fraction) -> Any:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_offset(text: str, n: int) -> tuple:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != n:
        raise ValueError(f"offset needs {n} comma separated rationals, got {len(parts)}")
    return tuple(parse_rational(p) for p in parts)


def parse_torus_value(v: Any) -> TorusValue:
    if v == "generic":
        return TorusValue.generic()
    if v == "pm_one":
        return TorusValue.pm_one()
    if isinstance(v, dict) and set(v) == {"q_power"}:
        n = v["q_power"]
        if isinstance(n, bool) or not isinstance(n, int):
            raise ValueError("q_power exponent must be an integer")
        return TorusValue.q_power(n)
    raise ValueError(f"bad torus value {v!r}")


def format_torus_value(t: TorusValue) -> Any:
    return {"q_power": t.n} if t.kind == "q_power" else t.kind


@dataclass
class Model:
    cartan: CartanData
    module: ModuleDescriptor
    J: frozenset | None = None

    def labels(self, nodes) -> list[str]:
        return self.cartan.label_list(nodes)


def _node_list(c: CartanData, refs, what: str) -> frozenset:
    if not isinstance(refs, list):
        raise ValueError(f"{what} must be a list of node labels or 0-based indices")
    return c.subset(refs)


def model_from_dict(data: dict) -> Model:
    if not isinstance(data, dict) or "cartan" not in data:
        raise ValueError("model must be an object with a 'cartan' matrix")
    c = validate_gcm(data["cartan"], data.get("labels"))
    hw = data.get("highest_weight", {"pairings": [0] * c.n})
    pairings = [parse_rational(p) for p in hw.get("pairings", [])]
    if len(pairings) != c.n:
        raise ValueError(f"highest_weight needs {c.n} pairings")
    I_V = _node_list(c, data.get("integrability", []), "integrability")
    flavor = data.get("flavor", "classical")
    if flavor == "classical":
        V = ModuleDescriptor(c, Weight.from_pairings(pairings), I_V)
    elif flavor == "quantum":
        tv = data.get("torus_values")
        if not isinstance(tv, list) or len(tv) != c.n:
            raise ValueError("quantum models need one torus value per node")
        V = ModuleDescriptor(c, Weight.from_pairings(pairings), I_V, tuple(parse_torus_value(v) for v in tv))
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    J = _node_list(c, data["J"], "J") if "J" in data else None
    return Model(c, V, J)


def load_model(path: str | Path) -> Model:
    with open(path, encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))


def model_to_dict(m: Model) -> dict:
    V = m.module
    out = {
        "cartan": [list(r) for r in m.cartan.matrix],
        "labels": list(m.cartan.labels),
        "highest_weight": {"pairings": [format_rational(p) for p in V.pairings]},
        "integrability": m.labels(V.integrability),
        "flavor": V.flavor,
    }
    if V.torus_values is not None:
        out["torus_values"] = [format_torus_value(t) for t in V.torus_values]
    if m.J is not None:
        out["J"] = m.labels(m.J)
    return out
