"""Brute-force ground truth for finite regimes.

Nothing here uses the face classification: orbits are re-enumerated with a
separate BFS, hulls come from an exact double description computation and
face lattices from intersecting facet incidence sets.  Weight sets are
enumerated by walking down from the highest weight and testing hull
membership.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Iterable, Sequence

from weylfaces.errors import CapExceeded, TooLarge, Unclosed
from weylfaces.extpoly import ExtPolynomial
from weylfaces.linalg import nullspace, primitive_int_vector, rank, rref, to_fraction
from weylfaces.weights import (
    WeylPolyhedronDescriptor,
    half_spaces,
    in_weyl_polyhedron,
    is_closed,
    ray_generators,
)
from weylfaces.weyl import Weight

MAX_HULL_POINTS = 2000


# ---------------------------------------------------------------- orbits


def orbit_offsets(
    matrix: Sequence[Sequence[int]],
    pairings: Sequence,
    nodes: Iterable[int],
    cap: int,
    start: Sequence | None = None,
) -> list[tuple]:
    """Root offsets of the orbit of ``base - start . alpha`` (``base`` given by pairings).

    Raises CapExceeded once more than ``cap`` points have been found.
    """
    n = len(matrix)
    nodes = sorted(set(nodes))
    base = [to_fraction(p) for p in pairings]
    start = tuple(to_fraction(v) for v in start) if start is not None else (Fraction(0),) * n
    base = [p - sum(matrix[i][k] * start[k] for k in range(n)) for i, p in enumerate(base)]
    if all(p.denominator == 1 for p in base + list(start)):
        base = [int(p) for p in base]  # plain ints are much faster
        start = tuple(int(v) for v in start)
    cols = [[matrix[k][j] for k in range(n)] for j in range(n)]
    seen = {start}
    order = [start]
    queue = deque([(start, tuple(base))])
    while queue:
        x, pairs = queue.popleft()
        for j in nodes:
            p = pairs[j]
            if p == 0:
                continue
            y = x[:j] + (x[j] + p,) + x[j + 1 :]
            if y not in seen:
                if len(seen) >= cap:
                    raise CapExceeded("oracle orbit", cap)
                seen.add(y)
                order.append(y)
                col = cols[j]
                queue.append((y, tuple(q - p * a for q, a in zip(pairs, col))))
    return [tuple(Fraction(v) for v in x) for x in order]


def brute_force_finite_type(matrix: Sequence[Sequence[int]], cap: int = 10**4) -> bool:
    """The orbit of rho is finite within the budget.

    Orbit coordinates grow exponentially for hyperbolic diagrams, so large
    budgets cost memory fast; 10^4 already exceeds every finite Weyl group
    of rank <= 4.
    """
    n = len(matrix)
    try:
        orbit_offsets(matrix, [1] * n, range(n), cap)
    except CapExceeded:
        return False
    return True


# ---------------------------------------------------------------- hulls


def _scale_to_int(points: list[tuple]) -> tuple[list[tuple[int, ...]], int]:
    den = 1
    for p in points:
        for x in p:
            den = den * x.denominator // gcd(den, x.denominator)
    return [tuple(int(x * den) for x in p) for p in points], den


def _dd_facets(pts: list[tuple[int, ...]], d: int) -> list[tuple[tuple[int, ...], int]]:
    """Facets a.x <= b of a full-dimensional integer point set in R^d.

    Double description on the cone of valid inequalities
    {(a, b) : b - a.y >= 0 for every point y}; its extreme rays are the
    facets.  Adjacency uses the combinatorial test on zero sets.
    """
    D = d + 1
    rows = [tuple(-v for v in y) + (1,) for y in pts]

    # d+1 affinely independent points give the initial simplicial cone
    basis: list[int] = []
    for idx in range(len(rows)):
        if rank([rows[i] for i in basis + [idx]]) > len(basis):
            basis.append(idx)
            if len(basis) == D:
                break
    M0 = [[Fraction(x) for x in rows[i]] for i in basis]
    # columns of the inverse: solve M0 R = Id
    aug = [M0[i] + [Fraction(int(i == k)) for k in range(D)] for i in range(D)]
    red, _ = rref(aug)
    inv = [r[D:] for r in red]
    rays = [primitive_int_vector([inv[i][k] for i in range(D)]) for k in range(D)]

    def zero_mask(r, idxs):
        m = 0
        for t in idxs:
            if sum(a * b for a, b in zip(rows[t], r)) == 0:
                m |= 1 << t
        return m

    done = list(basis)
    zeros = [zero_mask(r, done) for r in rays]
    for t in range(len(rows)):
        if t in basis:
            continue
        h = rows[t]
        vals = [sum(a * b for a, b in zip(h, r)) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        new_rays = [rays[k] for k in pos] + [rays[k] for k in zer]
        new_zeros = [zeros[k] for k in pos] + [zeros[k] | (1 << t) for k in zer]
        for a in pos:
            for b in neg:
                z = zeros[a] & zeros[b]
                if bin(z).count("1") < D - 2:
                    continue
                if any(k != a and k != b and (zeros[k] & z) == z for k in range(len(rays))):
                    continue
                va, vb = vals[a], -vals[b]
                r = primitive_int_vector([vb * x + va * y for x, y in zip(rays[a], rays[b])])
                new_rays.append(r)
                new_zeros.append(z | (1 << t))
        rays, zeros = new_rays, new_zeros
        done.append(t)
    out = []
    for r in rays:
        a, b = r[:d], r[d]
        if any(a):
            out.append((a, b))
    return sorted(set(out))


@dataclass
class HullComplex:
    """Face lattice of the convex hull of finitely many rational points."""

    vertices: list
    facets: list  # (normal, offset) with normal . x <= offset
    face_counts: dict
    dimension: int
    equations: list = field(default_factory=list)  # (normal, value) with normal . x == value

    @property
    def f_polynomial(self) -> ExtPolynomial:
        return ExtPolynomial(tuple(self.face_counts.items()))

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * v for k, v in self.face_counts.items())

    def contains(self, x: Sequence) -> bool:
        x = [to_fraction(v) for v in x]
        for nvec, val in self.equations:
            if sum(a * b for a, b in zip(nvec, x)) != val:
                return False
        return all(sum(a * b for a, b in zip(nvec, x)) <= off for nvec, off in self.facets)


def _affine_rank(points: list[tuple]) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def hull(points: Iterable[Sequence]) -> HullComplex:
    pts = sorted({tuple(to_fraction(x) for x in p) for p in points})
    if not pts:
        raise ValueError("hull of an empty set")
    if len(pts) > MAX_HULL_POINTS:
        raise TooLarge(f"{len(pts)} points exceeds the oracle bound {MAX_HULL_POINTS}")
    amb = len(pts[0])
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    red, pivots = rref(diffs) if diffs else ([], [])
    d = len(pivots)
    equations = []
    for nvec in nullspace(red, amb) if red else [tuple(Fraction(int(i == k)) for i in range(amb)) for k in range(amb)]:
        equations.append((nvec, sum(a * b for a, b in zip(nvec, p0))))
    if d == 0:
        return HullComplex([p0], [], {0: 1}, 0, equations)

    proj = [tuple(p[k] - p0[k] for k in pivots) for p in pts]
    ipts, scale = _scale_to_int(proj)
    if d == 1:
        lo = min(range(len(ipts)), key=lambda k: ipts[k][0])
        hi = max(range(len(ipts)), key=lambda k: ipts[k][0])
        raw = [((-1,), -ipts[lo][0]), ((1,), ipts[hi][0])]
    else:
        raw = _dd_facets(ipts, d)

    # incidence sets as bitmasks over the points
    facet_sets = []
    for a, b in raw:
        m = 0
        for k, y in enumerate(ipts):
            if sum(u * v for u, v in zip(a, y)) == b:
                m |= 1 << k
        facet_sets.append(m)
    full = (1 << len(pts)) - 1
    faces = {full}
    frontier = list(set(facet_sets))
    faces.update(frontier)
    while frontier:
        nxt = []
        for f in frontier:
            for g in facet_sets:
                h = f & g
                if h and h not in faces:
                    faces.add(h)
                    nxt.append(h)
        frontier = nxt
    counts: dict[int, int] = {}
    vertices = []
    for f in faces:
        members = [pts[k] for k in range(len(pts)) if f >> k & 1]
        dim = _affine_rank(members)
        counts[dim] = counts.get(dim, 0) + 1
        if dim == 0:
            vertices.append(members[0])
    # facets back in the original coordinates
    facets = []
    for a, b in raw:
        nvec = [Fraction(0)] * amb
        for coef, k in zip(a, pivots):
            nvec[k] = Fraction(coef)
        off = Fraction(b, scale) + sum(Fraction(coef) * p0[k] for coef, k in zip(a, pivots))
        facets.append((tuple(nvec), off))
    hc = HullComplex(sorted(vertices), facets, dict(sorted(counts.items())), d, equations)
    if hc.euler_characteristic() != 1:
        raise AssertionError(f"Euler relation fails for hull with counts {hc.face_counts}")
    return hc


def hull_f_polynomial(points: Iterable[Sequence]) -> ExtPolynomial:
    return hull(points).f_polynomial


def pointed_cone_f_polynomial(rays: Iterable[Sequence], functional: Sequence) -> ExtPolynomial:
    """f-polynomial of a pointed cone from its generators.

    ``functional`` must be positive on every generator; the cone's faces
    are the apex plus one face per face of the section h = 1.
    """
    section = []
    for r in rays:
        r = [to_fraction(x) for x in r]
        h = sum(a * b for a, b in zip(functional, r))
        if h <= 0:
            raise ValueError("functional is not positive on every generator")
        section.append(tuple(x / h for x in r))
    if not section:
        return ExtPolynomial.constant(1)
    return ExtPolynomial.constant(1) + hull_f_polynomial(section).shift(1)


def polyhedron_f_polynomial(vertices: Iterable[Sequence], directions: Iterable[Sequence]) -> ExtPolynomial:
    """f-polynomial of conv(vertices) + cone(directions) for a pointed polyhedron.

    Uses the homogenization: its faces are the cones over faces of P
    together with the faces of the recession cone, so
    f_hom = q f_P + f_rec.  The functional t + sum(x) must be positive on
    every generator, which holds for offsets and root directions that are
    nonnegative.
    """
    vertices = [tuple(to_fraction(x) for x in v) for v in vertices]
    directions = [tuple(to_fraction(x) for x in d) for d in directions]
    if not directions:
        return hull_f_polynomial(vertices)
    n = len(vertices[0])
    gens = [(Fraction(1),) + v for v in vertices] + [(Fraction(0),) + d for d in directions]
    f_hom = pointed_cone_f_polynomial(gens, [1] * (n + 1))
    f_rec = pointed_cone_f_polynomial(directions, [1] * n)
    diff = {}
    rec = f_rec.as_dict()
    for e, c in f_hom.terms:
        diff[e - 1] = c - rec.get(e, 0)
    assert all(v >= 0 for v in diff.values())
    return ExtPolynomial.from_dict(diff)


def module_polyhedron_f_polynomial(c, lam, integrability: Iterable[int], cap: int = 10**6) -> ExtPolynomial:
    """Oracle f-polynomial of the hull of a module with finite integrable Weyl group.

    Vertices are the orbit of lam under the integrable reflections; the
    recession cone is spanned by the orbits of the remaining simple roots.
    """
    I_V = sorted(set(integrability))
    pairs = lam.pairings(c) if hasattr(lam, "pairings") else [to_fraction(p) for p in lam]
    verts = orbit_offsets(c.matrix, pairs, I_V, cap)
    dirs = []
    for i in range(c.n):
        if i in I_V:
            continue
        e = [0] * c.n
        e[i] = 1
        dirs += orbit_offsets(c.matrix, [0] * c.n, I_V, cap, start=e)
    return polyhedron_f_polynomial(verts, dirs)


# ---------------------------------------------------------------- weight sets


def _integrable_weights(matrix, pairings, cap: int, depth: int | None = None) -> set[tuple]:
    n = len(matrix)
    verts = orbit_offsets(matrix, pairings, range(n), cap)
    hc = hull(verts)
    start = (0,) * n
    found = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        if depth is not None and sum(x) >= depth:
            continue
        for i in range(n):
            y = x[:i] + (x[i] + 1,) + x[i + 1 :]
            if y in found or not hc.contains(y):
                continue
            if len(found) >= cap:
                raise CapExceeded("integrable weight enumeration", cap)
            found.add(y)
            queue.append(y)
    return found


def enumerate_integrable_weights(c, lam, cap: int = 10**6) -> set[tuple]:
    """Root offsets of the weights of the simple integrable module L(lam).

    ``lam`` is a dominant integral weight (any object with ``pairings(c)``,
    or a plain pairing vector).
    """
    pairs = lam.pairings(c) if hasattr(lam, "pairings") else [to_fraction(p) for p in lam]
    if any(p < 0 or to_fraction(p).denominator != 1 for p in pairs):
        raise ValueError("highest weight must be dominant integral")
    return _integrable_weights(c.matrix, pairs, cap)


def enumerate_module_weights(c, lam, J: Iterable[int], depth: int, cap: int = 10**6) -> set[tuple]:
    """Weights of the parabolic Verma module M(lam, J) down to total depth ``depth``.

    Union over mu in Z>=0 (pi minus pi_J) of the Levi weights of lam - mu.
    """
    J = sorted(set(J))
    n = c.n
    outside = [i for i in range(n) if i not in J]
    pairs = lam.pairings(c) if hasattr(lam, "pairings") else [to_fraction(p) for p in lam]
    sub = [[c.matrix[i][j] for j in J] for i in J]
    out = set()
    for mu in product(range(depth + 1), repeat=len(outside)):
        if sum(mu) > depth:
            continue
        shifted = [pairs[j] - sum(m * c.matrix[j][i] for m, i in zip(mu, outside)) for j in J]
        if J:
            levi = _integrable_weights(sub, shifted, cap, depth - sum(mu))
        else:
            levi = {()}
        for k in levi:
            x = [0] * n
            for m, i in zip(mu, outside):
                x[i] = m
            for v, j in zip(k, J):
                x[j] = v
            out.add(tuple(x))
    return out


# ---------------------------------------------------------------- sampling


@dataclass
class CrosscheckReport:
    n_samples: int
    inside: int
    disagreements: list


def sample_box_points(V, n_samples: int, seed: int, T: int = 10, grid: int = 12) -> list[tuple]:
    """Seeded rational points in (a slight enlargement of) the box spanned by the ray generators."""
    gens = ray_generators(V)
    pts = [v.offset for v in gens.vertices]
    pts += [tuple(a + T * b for a, b in zip(v.offset, d)) for v, d in gens.rays]
    n = V.cartan.n
    lo = [min(p[k] for p in pts) - 1 for k in range(n)]
    hi = [max(p[k] for p in pts) + 1 for k in range(n)]
    rng = random.Random(seed)
    out = []
    for _ in range(n_samples):
        x = []
        for k in range(n):
            g = Fraction(rng.randint(0, grid), grid)
            jitter = Fraction(rng.randint(-3, 3), 17 * grid)
            x.append(lo[k] + (hi[k] - lo[k]) * g + jitter)
        out.append(tuple(x))
    return out


def sample_membership_crosscheck(V, n_samples: int, seed: int) -> CrosscheckReport:
    """Half-space membership against the order-theoretic membership test."""
    if not is_closed(V):
        raise Unclosed("cross-check needs a closed hull")
    hs = half_spaces(V)
    P = WeylPolyhedronDescriptor(V.cartan, V.hw, V.integrability)
    bad = []
    inside = 0
    for x in sample_box_points(V, n_samples, seed):
        mu = Weight(V.hw.base, x)
        a = hs.contains(mu)
        b = in_weyl_polyhedron(P, mu)
        inside += a
        if a != b:
            bad.append(x)
    return CrosscheckReport(n_samples, inside, bad)
