"""Weight membership, the nondegenerate orders <=_J, and the shape of conv V.

Points of ``lambda - R pi`` are handled through their root offsets relative
to the shared base of the highest weight, so ``lambda - nu`` is simply the
offset difference.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from weylfaces import config
from weylfaces.cartan import CartanData, components, is_finite_type
from weylfaces.errors import NotDominant, Unclosed
from weylfaces.faces import ModuleDescriptor
from weylfaces.weyl import (
    Weight,
    apply_word,
    apply_word_coweight,
    descend,
    group_elements,
    is_dominant,
    orbit,
    reflect,
    reflect_root,
)


@dataclass(frozen=True)
class WeylPolyhedronDescriptor:
    """P(lambda, J): the hull of any module with highest weight lambda and integrability J."""

    cartan: CartanData
    hw: Weight
    J: frozenset

    def __post_init__(self):
        object.__setattr__(self, "J", frozenset(self.J))
        if not is_dominant(self.cartan, self.J, self.hw):
            raise NotDominant("highest weight of a Weyl polyhedron must be J-dominant")

    def module(self) -> ModuleDescriptor:
        return ModuleDescriptor(self.cartan, self.hw, self.J, None, integral=False)


def _same_base(a: Weight, b: Weight):
    if a.base != b.base:
        raise ValueError("weights must share a base; compare offsets against a common reference")


def leq_J(c: CartanData, J: Iterable[int], nu: Weight, lam: Weight, lattice: bool = False) -> bool:
    """The nondegenerate order nu <=_J lam (or its lattice variant <='_J).

    (1) lam - nu is a nonnegative (integral) combination of simple roots;
    (2) splitting lam - nu = beta_J + beta_rest, every connected component
    of supp beta_J contains a node pairing positively with lam - beta_rest.
    """
    _same_base(nu, lam)
    J = frozenset(J)
    beta = [a - b for a, b in zip(nu.offset, lam.offset)]
    if any(b < 0 for b in beta):
        return False
    if lattice and any(b.denominator != 1 for b in beta):
        return False
    supp = [j for j in J if beta[j] != 0]
    if not supp:
        return True
    rest = [i for i in range(c.n) if i not in J and beta[i] != 0]
    lam_p = lam.pairings(c)
    for comp in components(c, supp):
        if not any(lam_p[k] - sum(beta[i] * c.matrix[k][i] for i in rest) > 0 for k in comp):
            return False
    return True


def _dominant_below(c: CartanData, J, mu: Weight, lam: Weight, cap):
    """J-dominant representative of mu, or None if it cannot lie below lam."""
    found = descend(c, J, mu, cap, floor=lam.offset)
    return None if found is None else found[0]


def in_weyl_polyhedron(P: WeylPolyhedronDescriptor, mu: Weight, cap: int | None = None) -> bool:
    _same_base(mu, P.hw)
    dom = _dominant_below(P.cartan, P.J, mu, P.hw, cap)
    if dom is None:
        return False
    return leq_J(P.cartan, P.J, dom, P.hw, lattice=False)


def _in_wt(c: CartanData, J, lam: Weight, mu: Weight, cap) -> bool:
    _same_base(mu, lam)
    if any((a - b).denominator != 1 for a, b in zip(mu.offset, lam.offset)):
        return False
    dom = _dominant_below(c, J, mu, lam, cap)
    if dom is None:
        return False
    p = dom.pairings(c)
    if any(p[j].denominator != 1 for j in J):
        return False
    return leq_J(c, J, dom, lam, lattice=True)


def in_wt_parabolic_verma(V: ModuleDescriptor, mu: Weight, cap: int | None = None) -> bool:
    """mu is a weight of the parabolic Verma module M(lambda, I_V)."""
    return _in_wt(V.cartan, V.integrability, V.hw, mu, cap)


def simple_integrability(c: CartanData, lam: Weight) -> frozenset[int]:
    return frozenset(i for i, p in enumerate(lam.pairings(c)) if p >= 0 and p.denominator == 1)


def in_wt_simple(c: CartanData, lam: Weight, mu: Weight, cap: int | None = None) -> bool:
    """mu is a weight of the simple module L(lambda)."""
    return _in_wt(c, simple_integrability(c, lam), lam, mu, cap)


def nondegenerate(c: CartanData, lam: Weight, mu: Weight) -> bool:
    """lam is not orthogonal to any connected component of supp(lam - mu)."""
    _same_base(mu, lam)
    beta = [a - b for a, b in zip(mu.offset, lam.offset)]
    supp = [i for i, b in enumerate(beta) if b != 0]
    p = lam.pairings(c)
    return all(any(p[k] != 0 for k in comp) for comp in components(c, supp))


def polyhedron_contains(c: CartanData, J: Iterable[int], mu: Weight, nu: Weight) -> bool:
    """P(mu, J) is contained in P(nu, J)."""
    J = frozenset(J)
    for w, name in ((mu, "mu"), (nu, "nu")):
        if not is_dominant(c, J, w):
            raise NotDominant(f"{name} is not J-dominant")
    return leq_J(c, J, mu, nu, lattice=False)


@dataclass
class RayGenerators:
    """Vertices w lambda and rays w(lambda - R>=0 alpha_i).

    A ray is stored as ``(vertex, direction)`` with the direction in root
    coordinates: the ray is the set of offsets ``vertex.offset + t * direction``.
    """

    vertices: list = field(default_factory=list)
    rays: list = field(default_factory=list)
    truncated: bool = False


def ray_generators(V: ModuleDescriptor, orbit_cap: int | None = None) -> RayGenerators:
    """Orbit of lambda, and the W_{I_V}-orbit of each pair (lambda, alpha_i), i outside I_V.

    The pair orbits are walked separately from the vertex orbit: when lambda
    has a large stabilizer the rays still fan out.
    """
    c = V.cartan
    cap = config.orbit_cap(orbit_cap)
    J = sorted(V.integrability)
    rep = orbit(c, J, V.hw, cap)
    out = RayGenerators(vertices=rep.weights(), truncated=rep.truncated)
    for i in range(c.n):
        if i in V.integrability:
            continue
        start = (V.hw, tuple(Fraction(int(k == i)) for k in range(c.n)))
        seen = {(start[0].offset, start[1])}
        out.rays.append(start)
        queue = deque([start])
        while queue:
            vertex, d = queue.popleft()
            for j in J:
                nxt = (reflect(c, j, vertex), reflect_root(c, j, d))
                key = (nxt[0].offset, nxt[1])
                if key in seen:
                    continue
                if len(seen) >= cap:
                    out.truncated = True
                    queue.clear()
                    break
                seen.add(key)
                out.rays.append(nxt)
                queue.append(nxt)
    return out


@dataclass(frozen=True)
class HalfSpace:
    """{mu : normal . (mu.offset - offset_point) >= 0}, i.e. normal . x >= offset.

    ``normal[k]`` is the pairing of w(omega_i-check) with alpha_k, so the
    functional evaluates (w lambda - mu, w omega_i-check) on root offsets.
    """

    normal: tuple
    offset: Fraction

    def value(self, x: Sequence) -> Fraction:
        return sum(a * b for a, b in zip(self.normal, x)) - self.offset

    def contains(self, mu: Weight) -> bool:
        return self.value(mu.offset) >= 0


@dataclass
class HalfSpaceReport:
    items: list = field(default_factory=list)
    raw_count: int = 0
    truncated: bool = False

    def contains(self, mu: Weight) -> bool:
        return all(h.contains(mu) for h in self.items)


def half_spaces(V: ModuleDescriptor, orbit_cap: int | None = None) -> HalfSpaceReport:
    if not is_closed(V):
        raise Unclosed("conv V is not closed; no half-space description is available")
    c = V.cartan
    elems = group_elements(c, V.integrability, orbit_cap)
    report = HalfSpaceReport(truncated=elems.truncated)
    seen = set()
    for word in elems.words.values():
        y = apply_word(c, word, V.hw).offset
        for i in range(c.n):
            e = tuple(Fraction(int(k == i)) for k in range(c.n))
            n = apply_word_coweight(c, word, e)
            h = HalfSpace(n, sum(a * b for a, b in zip(n, y)))
            report.raw_count += 1
            if h not in seen:
                seen.add(h)
                report.items.append(h)
    return report


def _trivial_on(V: ModuleDescriptor, comp: frozenset) -> bool:
    p = V.pairings
    return comp <= V.integrability and all(p[i] == 0 for i in comp)


def is_polytope(V: ModuleDescriptor) -> bool:
    c = V.cartan
    for comp in components(c, c.nodes):
        if is_finite_type(c, comp):
            if not comp <= V.integrability:
                return False
        elif not _trivial_on(V, comp):
            return False
    return True


def is_polyhedron(V: ModuleDescriptor) -> bool:
    c = V.cartan
    for comp in components(c, c.nodes):
        if is_finite_type(c, comp) or _trivial_on(V, comp):
            continue
        if not is_finite_type(c, comp & V.integrability):
            return False
    return True


def is_closed(V: ModuleDescriptor) -> bool:
    c = V.cartan
    p = V.pairings
    for comp in components(c, c.nodes):
        if is_finite_type(c, comp) or _trivial_on(V, comp):
            continue
        stab = frozenset(i for i in comp & V.integrability if p[i] == 0)
        if not is_finite_type(c, stab):
            return False
    return True
