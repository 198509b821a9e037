"""Face classification for convex hulls of highest weight modules.

A face of conv V is named by a subset J of I (the weights reachable from the
highest weight through the Levi on J), up to the interval ``j_min <= J <=
j_max``, and then up to the action of the integrable Weyl group W_{I_V}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from weylfaces import config
from weylfaces.cartan import CartanData, components, validate_gcm
from weylfaces.errors import RankTooLarge, RegularityRequired
from weylfaces.extpoly import ONE_PLUS_Q, ExtPolynomial
from weylfaces.weyl import Weight, apply_word, descend, marker, parabolic_index


@dataclass(frozen=True)
class TorusValue:
    """Symbolic value of the highest weight on q^{coroot_i} (quantum flavor)."""

    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in ("generic", "pm_one", "q_power"):
            raise ValueError(f"unknown torus value kind {self.kind!r}")
        if (self.kind == "q_power") != (self.n is not None):
            raise ValueError("q_power carries an integer exponent, the other kinds do not")

    @classmethod
    def generic(cls):
        return cls("generic")

    @classmethod
    def pm_one(cls):
        return cls("pm_one")

    @classmethod
    def q_power(cls, n: int):
        return cls("q_power", int(n))

    @property
    def is_pm_one(self) -> bool:
        return self.kind == "pm_one" or (self.kind == "q_power" and self.n == 0)

    @property
    def allows_integrable(self) -> bool:
        return self.kind == "pm_one" or (self.kind == "q_power" and self.n >= 0)

    def __str__(self):
        return f"q^{self.n}" if self.kind == "q_power" else self.kind


def all_subsets(nodes: Iterable[int]):
    nodes = sorted(nodes)
    for r in range(len(nodes) + 1):
        for combo in combinations(nodes, r):
            yield frozenset(combo)


@dataclass(frozen=True)
class ModuleDescriptor:
    """A highest weight module as far as its convex hull is concerned.

    ``torus_values`` is None for the classical flavor.  ``integral=False``
    relaxes the integrability check to nonnegative real pairings, which is
    what a Weyl polyhedron P(lambda, J) needs.
    """

    cartan: CartanData
    hw: Weight
    integrability: frozenset
    torus_values: tuple | None = None
    integral: bool = True

    def __post_init__(self):
        c = self.cartan
        I_V = frozenset(self.integrability)
        object.__setattr__(self, "integrability", I_V)
        if not I_V <= c.nodes:
            raise ValueError("integrability must be a subset of the nodes")
        if self.hw.n != c.n:
            raise ValueError("highest weight has the wrong length")
        if self.torus_values is None:
            p = self.hw.pairings(c)
            for i in I_V:
                if p[i] < 0 or (self.integral and p[i].denominator != 1):
                    kind = "a nonnegative integer" if self.integral else "nonnegative"
                    raise ValueError(f"node {c.labels[i]} is integrable but its pairing {p[i]} is not {kind}")
        else:
            tv = tuple(self.torus_values)
            object.__setattr__(self, "torus_values", tv)
            if len(tv) != c.n:
                raise ValueError("one torus value per node is required")
            for i in I_V:
                if not tv[i].allows_integrable:
                    raise ValueError(f"node {c.labels[i]} is integrable but has torus value {tv[i]}")

    @classmethod
    def classical(cls, c: CartanData, pairings: Sequence, integrability: Iterable[int], integral: bool = True):
        return cls(c, Weight.from_pairings(pairings), frozenset(integrability), None, integral)

    @classmethod
    def quantum(cls, c: CartanData, torus_values: Sequence[TorusValue], integrability: Iterable[int]):
        return cls(c, Weight.from_pairings([0] * c.n), frozenset(integrability), tuple(torus_values))

    @property
    def flavor(self) -> str:
        return "classical" if self.torus_values is None else "quantum"

    @property
    def pairings(self) -> tuple:
        return self.hw.pairings(self.cartan)

    def is_dormant_value(self, i: int) -> bool:
        """True when the highest weight is 'flat' at node i (pairing 0, or value +-1)."""
        if self.torus_values is None:
            return self.hw.pairing(self.cartan, i) == 0
        return self.torus_values[i].is_pm_one


@dataclass(frozen=True)
class FaceDescriptor:
    j_min: frozenset
    j_max: frozenset
    coset_marker: Weight

    @property
    def dim(self) -> int:
        return len(self.j_min)


def active_nodes(V: ModuleDescriptor, J: Iterable[int]) -> frozenset[int]:
    I_V = V.integrability
    return frozenset(j for j in J if j not in I_V or not V.is_dormant_value(j))


def j_min(V: ModuleDescriptor, J: Iterable[int]) -> frozenset[int]:
    J = frozenset(J)
    act = active_nodes(V, J)
    out: set[int] = set()
    for comp in components(V.cartan, J):
        if comp & act:
            out |= comp
    return frozenset(out)


def j_max(V: ModuleDescriptor, J: Iterable[int]) -> frozenset[int]:
    lo = j_min(V, J)
    return lo | _dormant(V, lo)


def _dormant(V: ModuleDescriptor, lo: frozenset) -> frozenset[int]:
    c = V.cartan
    return frozenset(
        j
        for j in V.integrability - lo
        if V.is_dormant_value(j) and not c.connected_to(j, lo)
    )


def face_map_fiber(V: ModuleDescriptor, J: Iterable[int]) -> tuple[frozenset, frozenset]:
    lo = j_min(V, J)
    return lo, lo | _dormant(V, lo)


def face_subset(V: ModuleDescriptor, J: Iterable[int], J2: Iterable[int]) -> bool:
    """wt_J V is contained in wt_J2 V."""
    return j_min(V, J) <= frozenset(J2)


def face_equal(V: ModuleDescriptor, J: Iterable[int], J2: Iterable[int]) -> bool:
    lo, hi = face_map_fiber(V, J)
    return lo <= frozenset(J2) <= hi


def face_stabilizer(V: ModuleDescriptor, J: Iterable[int]) -> frozenset[int]:
    return V.integrability & j_max(V, J)


def canonical_marker(V: ModuleDescriptor, jmax: frozenset) -> Weight:
    I_V = V.integrability
    return marker(V.cartan, I_V & jmax, I_V - jmax)


def face_descriptor(V: ModuleDescriptor, J: Iterable[int], word: Sequence[int] = ()) -> FaceDescriptor:
    """Descriptor of the face ``w wt_J V`` for w given by a word in I_V."""
    _check_word(V, word)
    lo, hi = face_map_fiber(V, J)
    m = apply_word(V.cartan, word, canonical_marker(V, hi))
    return FaceDescriptor(lo, hi, m)


def _check_word(V: ModuleDescriptor, word: Sequence[int]):
    bad = [i for i in word if i not in V.integrability]
    if bad:
        raise ValueError(f"word letters {bad} are not integrable nodes")


def coset_face_subset(
    V: ModuleDescriptor, word: Sequence[int], J: Iterable[int], J2: Iterable[int], cap: int | None = None
) -> bool:
    """wt_J2 V is contained in w wt_J V.

    Holds iff wt_J2 is inside wt_J and w lies in W_A W_B, with
    B = I_V & j_min(J) and A = I_V & j_max(J2).  The double coset test
    moves a marker with stabilizer W_B by w, then descends inside W_A.
    """
    _check_word(V, word)
    J = frozenset(J)
    J2 = frozenset(J2)
    if not face_subset(V, J2, J):
        return False
    c = V.cartan
    I_V = V.integrability
    B = I_V & j_min(V, J)
    A = I_V & j_max(V, J2)
    mu = marker(c, B, I_V - B)
    moved = apply_word(c, word, mu)
    dom, _ = descend(c, A, moved, cap)
    return dom.offset == mu.offset


def _subset_guard(c: CartanData, max_rank: int | None):
    limit = config.DEFAULT_MAX_RANK if max_rank is None else max_rank
    if c.n > limit:
        raise RankTooLarge(f"rank {c.n} exceeds the enumeration bound {limit}")


def enumerate_standard_faces(V: ModuleDescriptor, max_rank: int | None = None) -> list[tuple]:
    """Distinct (j_min, j_max, dim) over all J, in order of first appearance."""
    _subset_guard(V.cartan, max_rank)
    seen = {}
    for J in all_subsets(V.cartan.nodes):
        lo, hi = face_map_fiber(V, J)
        if lo not in seen:
            seen[lo] = (lo, hi, len(lo))
    return list(seen.values())


def f_polynomial(V: ModuleDescriptor, cap: int | None = None, max_rank: int | None = None) -> ExtPolynomial:
    I_V = V.integrability
    terms = []
    for lo, hi, dim in enumerate_standard_faces(V, max_rank):
        terms.append((dim, parabolic_index(V.cartan, I_V, I_V & hi, cap)))
    return ExtPolynomial(tuple(terms))


def f_polynomial_regular(
    c: CartanData, nodes: Iterable[int] | None = None, cap: int | None = None
) -> ExtPolynomial:
    """sum over J of [W : W_J] q^|J|, the f-polynomial for regular dominant integral weights."""
    nodes = c.nodes if nodes is None else frozenset(nodes)
    _subset_guard(c, None)
    return ExtPolynomial(tuple((len(K), parabolic_index(c, nodes, K, cap)) for K in all_subsets(nodes)))


def restrict(c: CartanData, nodes: Iterable[int]) -> tuple[CartanData, list[int]]:
    """Principal sub-diagram on ``nodes``; also returns the index map new -> old."""
    idx = sorted(nodes)
    sub = validate_gcm([[c.matrix[i][j] for j in idx] for i in idx], [c.labels[i] for i in idx])
    return sub, idx


def top_slice(V: ModuleDescriptor) -> ModuleDescriptor:
    """The integrable slice as a module over the Levi subalgebra on I_V."""
    sub, idx = restrict(V.cartan, V.integrability)
    if V.torus_values is None:
        p = V.pairings
        return ModuleDescriptor.classical(sub, [p[i] for i in idx], range(len(idx)), V.integral)
    return ModuleDescriptor.quantum(sub, [V.torus_values[i] for i in idx], range(len(idx)))


def f_polynomial_int_regular(V: ModuleDescriptor, cap: int | None = None) -> ExtPolynomial:
    if any(V.is_dormant_value(i) for i in V.integrability):
        raise RegularityRequired("highest weight must be regular on the integrable nodes")
    extra = V.cartan.n - len(V.integrability)
    return f_polynomial(top_slice(V), cap) * ONE_PLUS_Q**extra


def tangent_cone(V: ModuleDescriptor) -> ModuleDescriptor:
    """Tangent cone at the highest weight, as a parabolic Verma hull."""
    perp = frozenset(i for i in V.integrability if V.hw.pairing(V.cartan, i) == 0)
    return ModuleDescriptor(V.cartan, V.hw, perp, None, V.integral)


def localize_face(V: ModuleDescriptor, J: Iterable[int]) -> ModuleDescriptor:
    if any(V.is_dormant_value(i) for i in V.integrability):
        raise RegularityRequired("localization needs a trivial integrable stabilizer")
    return ModuleDescriptor(V.cartan, V.hw, V.integrability & frozenset(J), V.torus_values, V.integral)


def is_restriction_simple(V: ModuleDescriptor, J: Iterable[int]) -> bool:
    """Branching criterion for the restriction to the Levi on J of a simple module."""
    return j_min(V, V.cartan.nodes) <= frozenset(J)


def is_restriction_hw(V: ModuleDescriptor, J: Iterable[int]) -> bool:
    return j_min(V, V.cartan.nodes) <= frozenset(J)
