"""The universal Weyl polyhedron P_J over the J-dominant chamber D_J.

Faces of D_J are the strata ``K`` (subsets of J, the nodes where the
highest weight pairs to zero).  A face of P_J is a stratum together with a
face of the fiber P(lambda_K, J).

Two conventions for the real dimension of D_J are supported.  ``"coroot_real"``
places D_J in the real subspace cut out by real pairings with all simple
coroots, of real dimension ``2 dim h* - |I|``.  ``"real_form"`` places it
in a real form of h*, of dimension ``dim h*``.  They agree when A is
invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from weylfaces.cartan import CartanData, is_finite_type
from weylfaces.errors import NotApplicable, NotDominant
from weylfaces.extpoly import ExtPolynomial
from weylfaces.faces import (
    FaceDescriptor,
    ModuleDescriptor,
    all_subsets,
    coset_face_subset,
    enumerate_standard_faces,
    f_polynomial,
    face_descriptor,
    face_map_fiber,
    j_min,
)
from weylfaces.linalg import nullspace, solve
from weylfaces.weyl import Weight, is_dominant, orbit, parabolic_index, stabilizer_nodes

CONVENTIONS = ("coroot_real", "real_form")


def leading_exponent(c: CartanData, convention: str = "coroot_real") -> int:
    if convention == "coroot_real":
        return 2 * c.realization_dim - c.n
    if convention == "real_form":
        return c.realization_dim
    raise ValueError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


@dataclass(frozen=True)
class Stratum:
    J: frozenset
    K: frozenset
    dim: int


def _stratum(c: CartanData, J: frozenset, K: frozenset, convention: str) -> Stratum:
    return Stratum(J, K, leading_exponent(c, convention) - len(K))


def strata(c: CartanData, J: Iterable[int], convention: str = "coroot_real") -> list[Stratum]:
    """All strata, open stratum first (reverse inclusion of K)."""
    J = frozenset(J)
    return [_stratum(c, J, K, convention) for K in all_subsets(J)]


def stratum_of(c: CartanData, J: Iterable[int], lam: Weight, convention: str = "coroot_real") -> Stratum:
    J = frozenset(J)
    return _stratum(c, J, stabilizer_nodes(c, J, lam), convention)


def representative_weight(c: CartanData, J: Iterable[int], K: Iterable[int]) -> Weight:
    """Pairing 0 on K and 1 on every other node."""
    K = frozenset(K)
    if not K <= frozenset(J):
        raise ValueError("K must be a subset of J")
    return Weight.from_pairings([0 if i in K else 1 for i in range(c.n)])


def fiber_module(c: CartanData, J: Iterable[int], K: Iterable[int]) -> ModuleDescriptor:
    return ModuleDescriptor(c, representative_weight(c, J, K), frozenset(J))


@dataclass(frozen=True)
class UniversalFaceDescriptor:
    stratum: Stratum
    face: FaceDescriptor

    @property
    def dim(self) -> int:
        return self.stratum.dim + self.face.dim


def universal_face_equal(c: CartanData, J: Iterable[int], first: tuple, second: tuple) -> bool:
    """(K, J1) and (K2, J2) name the same face of P_J."""
    (K, J1), (K2, J2) = first, second
    K, K2, J2 = frozenset(K), frozenset(K2), frozenset(J2)
    if K != K2:
        return False
    lo, hi = face_map_fiber(fiber_module(c, J, K), J1)
    return lo <= J2 <= hi


def universal_face_subset(
    c: CartanData, J: Iterable[int], first: tuple, second: tuple, word: Sequence[int] = (), cap: int | None = None
) -> bool:
    """``w`` applied to the face named by ``first`` lies in the face named by ``second``.

    The stratum of ``first`` must lie in the closure of the stratum of
    ``second`` (K2 inside K).  The fiber condition is checked at the
    representative of the smaller stratum.
    """
    (K, J1), (K2, J2) = first, second
    K, K2 = frozenset(K), frozenset(K2)
    if not K2 <= K:
        return False
    V = fiber_module(c, J, K)
    if not word:
        return j_min(V, J1) <= frozenset(J2)
    # w X inside Y is the same as X inside w^{-1} Y
    return coset_face_subset(V, tuple(reversed(word)), J2, J1, cap)


def universal_faces(c: CartanData, J: Iterable[int], convention: str = "coroot_real") -> list[UniversalFaceDescriptor]:
    """Standard face classes of P_J, one per (stratum, fiber face class)."""
    J = frozenset(J)
    out = []
    for st in strata(c, J, convention):
        V = fiber_module(c, J, st.K)
        for lo, hi, _ in enumerate_standard_faces(V):
            out.append(UniversalFaceDescriptor(st, face_descriptor(V, lo)))
    return out


def universal_f_polynomial(
    c: CartanData, J: Iterable[int], cap: int | None = None, convention: str = "coroot_real"
) -> ExtPolynomial:
    J = frozenset(J)
    total = ExtPolynomial()
    for K in all_subsets(J):
        total = total + f_polynomial(fiber_module(c, J, K), cap).shift(-len(K))
    result = total.shift(leading_exponent(c, convention))
    assert result.min_exponent is None or result.min_exponent >= 0
    return result


def universal_f_polynomial_by_faces(
    c: CartanData, J: Iterable[int], cap: int | None = None, convention: str = "coroot_real"
) -> ExtPolynomial:
    """Same count, summing orbit sizes of the individual face classes."""
    J = frozenset(J)
    terms = [
        (f.dim, parabolic_index(c, J, J & f.face.j_max, cap))
        for f in universal_faces(c, J, convention)
    ]
    return ExtPolynomial(tuple(terms))


def universal_is_polyhedron(c: CartanData, J: Iterable[int]) -> bool:
    return is_finite_type(c, J)


@dataclass
class MinkowskiGenerators:
    """Rays and lines of P_J in coordinates (base, fiber), each a vector of h*.

    h* is realized with basis (alpha_1..alpha_n, Lambda_1..Lambda_c); the
    coroot pairings are the rows of ``CartanData.realization_matrix``.
    """

    rays: list
    lines: list
    truncated: bool


def fundamental_weight(c: CartanData, j: int) -> tuple:
    """A vector of h* pairing to 1 with coroot j and to 0 with the others."""
    rows = c.realization_matrix
    rhs = [1 if i == j else 0 for i in range(c.n)]
    x = solve(rows, rhs)
    assert x is not None
    return x


def minkowski_generators(c: CartanData, J: Iterable[int], cap: int | None = None) -> MinkowskiGenerators:
    J = frozenset(J)
    dim = c.realization_dim
    zero = (Fraction(0),) * dim
    rays = []
    truncated = False

    def pad(offset):
        return tuple(offset) + (Fraction(0),) * (dim - c.n)

    for i in sorted(c.nodes - J):
        # W_J-orbit of alpha_i, via the orbit of the weight -alpha_i seen from 0
        start = Weight((Fraction(0),) * c.n, tuple(Fraction(int(k == i)) for k in range(c.n)))
        rep = orbit(c, J, start, cap)
        truncated |= rep.truncated
        for off in rep.words:
            rays.append((zero, tuple(-x for x in pad(off))))
    for j in sorted(J):
        om = fundamental_weight(c, j)
        rep = orbit(c, J, Weight.from_pairings([int(k == j) for k in range(c.n)]), cap)
        truncated |= rep.truncated
        for off in rep.words:
            rays.append((om, tuple(a - b for a, b in zip(om, pad(off)))))
    rows = [c.realization_matrix[j] for j in sorted(J)]
    lines = [(v, v) for v in nullspace(rows, dim)] if rows else [
        (e, e) for e in (tuple(Fraction(int(k == m)) for k in range(dim)) for m in range(dim))
    ]
    return MinkowskiGenerators(rays, lines, truncated)


def same_stratum_strong_iso(c: CartanData, J: Iterable[int], lam: Weight, lam2: Weight) -> bool:
    """Strong combinatorial isomorphism of P(lam, J) and P(lam2, J).

    Different strata always give False.  Equal strata give True when the
    stabilizers are finite; otherwise the question is left open.
    """
    J = frozenset(J)
    for w in (lam, lam2):
        if not is_dominant(c, J, w):
            raise NotDominant("weights must be J-dominant")
    K, K2 = stabilizer_nodes(c, J, lam), stabilizer_nodes(c, J, lam2)
    if K != K2:
        return False
    if is_finite_type(c, K):
        return True
    raise NotApplicable("equal strata with infinite stabilizer")
