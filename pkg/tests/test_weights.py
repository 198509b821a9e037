from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import A1, A2, A3, AFF_A1, B2, AFF_A1_EXT, G2, module, node_subsets, nonneg_rationals
from weylfaces.cartan import validate_gcm
from weylfaces.errors import NotDominant, Unclosed
from weylfaces.oracle import enumerate_integrable_weights, enumerate_module_weights, hull
from weylfaces.weights import (
    WeylPolyhedronDescriptor,
    half_spaces,
    in_weyl_polyhedron,
    in_wt_parabolic_verma,
    in_wt_simple,
    is_closed,
    is_polyhedron,
    is_polytope,
    leq_J,
    nondegenerate,
    polyhedron_contains,
    ray_generators,
)
from weylfaces.weyl import Weight, orbit

F = Fraction


def W(p, off=None):
    w = Weight.from_pairings(p)
    return w if off is None else w.with_offset(off)


def test_leq_examples(a2):
    rho = W([1, 1])
    assert leq_J(a2, a2.nodes, rho.lower([1, 0]), rho)
    assert leq_J(a2, a2.nodes, rho, rho)
    z = W([0, 0])
    assert not leq_J(a2, a2.nodes, z.lower([1, 0]), z)
    assert not leq_J(a2, a2.nodes, rho.lower([F(1, 2), 0]), rho, lattice=True)
    assert leq_J(a2, a2.nodes, rho.lower([F(1, 2), 0]), rho)
    with pytest.raises(ValueError):
        leq_J(a2, a2.nodes, W([0, 0]), rho)


def test_leq_uses_the_non_J_part(a2):
    # below lambda = 0 along alpha_2 (outside J) makes node 1 positive
    z = W([0, 0])
    assert leq_J(a2, {0}, z.lower([1, 1]), z)
    assert not leq_J(a2, {0}, z.lower([1, 0]), z)


def test_polyhedron_membership_examples(a2):
    P = WeylPolyhedronDescriptor(a2, W([1, 1]), a2.nodes)
    assert in_weyl_polyhedron(P, W([1, 1], [1, 1]))
    assert in_weyl_polyhedron(P, P.hw)
    assert not in_weyl_polyhedron(P, P.hw.lower([-1, 0]))
    with pytest.raises(NotDominant):
        WeylPolyhedronDescriptor(a2, W([-1, 1]), a2.nodes)


def test_verma_membership_examples():
    V = module(A1, [F(1, 2)], set(), integral=False)
    assert all(in_wt_parabolic_verma(V, V.hw.lower([k])) for k in range(51))
    assert not in_wt_parabolic_verma(V, V.hw.lower([F(1, 2)]))
    assert not in_wt_parabolic_verma(V, V.hw.lower([-1]))
    V = module(A1, [3], {0})
    assert in_wt_parabolic_verma(V, V.hw.lower([3]))
    assert not in_wt_parabolic_verma(V, V.hw.lower([4]))
    assert in_wt_parabolic_verma(V, V.hw)


def test_simple_membership_examples(a2):
    a1 = validate_gcm(A1)
    z = W([0, 0])
    assert in_wt_simple(a2, z, z)
    assert not in_wt_simple(a2, z, z.lower([1, 0]))
    assert not in_wt_simple(a2, z, z.lower([1, 1]))
    rho = W([1, 1])
    assert in_wt_simple(a2, rho, rho.lower([1, 1]))
    half = W([F(1, 2)])
    assert all(in_wt_simple(a1, half, half.lower([k])) for k in range(20))


def test_nondegenerate_examples(a2):
    lam = W([1, 0])
    assert nondegenerate(a2, lam, lam)
    assert not nondegenerate(a2, lam, lam.lower([0, 1]))
    assert nondegenerate(a2, lam, lam.lower([1, 1]))


def test_polyhedron_contains_examples(a2):
    z = W([0, 0])
    rho_as_offset = z.lower([-1, -1])  # rho = alpha_1 + alpha_2 in A2
    assert rho_as_offset.pairings(a2) == (1, 1)
    assert polyhedron_contains(a2, a2.nodes, rho_as_offset, rho_as_offset)
    assert polyhedron_contains(a2, a2.nodes, z, rho_as_offset)
    assert not polyhedron_contains(a2, a2.nodes, rho_as_offset, z)
    with pytest.raises(NotDominant):
        polyhedron_contains(a2, a2.nodes, z.lower([1, 0]), z)


def test_ray_generator_examples():
    V = module(A1, [F(1, 2)], set(), integral=False)
    g = ray_generators(V)
    assert [v.offset for v in g.vertices] == [(0,)]
    assert g.rays == [(V.hw, (1,))]
    g = ray_generators(module(A3, [1, 1, 1], {0, 1, 2}))
    assert (len(g.vertices), len(g.rays), g.truncated) == (24, 0, False)
    g = ray_generators(module(AFF_A1_EXT, [0, 0, F(1, 3)], {0, 1}, integral=False), orbit_cap=100)
    assert g.truncated


def test_half_space_examples():
    V = module(A2, [1, 1], {0, 1})
    hs = half_spaces(V)
    assert (hs.raw_count, len(hs.items)) == (12, 6)
    S = module(A1, [3], {0})
    hs = half_spaces(S)
    assert len(hs.items) == 2
    assert [hs.contains(S.hw.lower([k])) for k in (-1, 0, 3, 4)] == [False, True, True, False]
    T = module(A2, [0, 0], {0, 1})
    hs = half_spaces(T)
    assert hs.contains(T.hw)
    assert not any(hs.contains(T.hw.lower(x)) for x in [(1, 0), (0, -1), (F(1, 3), F(1, 3))])


def test_half_spaces_refuse_unclosed():
    with pytest.raises(Unclosed):
        half_spaces(module(AFF_A1_EXT, [0, 0, 1], {0, 1}))


def test_shape_examples():
    for p, I_V in [([1, 1, 1], {0, 1, 2}), ([0, F(1, 2), 0], {0, 2}), ([F(1, 3)] * 3, set())]:
        V = module(A3, p, I_V)
        assert is_polyhedron(V)
        assert is_closed(V)
    V = module(AFF_A1, [1, 1], {0, 1})
    assert (is_polytope(V), is_polyhedron(V), is_closed(V)) == (False, False, True)
    V = module(AFF_A1, [0, 0], {0, 1})
    assert (is_polytope(V), is_polyhedron(V), is_closed(V)) == (True, True, True)
    V = module(AFF_A1_EXT, [0, 0, 1], {0, 1})
    assert not is_closed(V)
    assert not is_polyhedron(V)
    V = module(A3, [1, 1, 1], {0, 2})
    assert not is_polytope(V) and is_polyhedron(V)


def test_shape_factors_over_components():
    m = [[2, -2, 0], [-2, 2, 0], [0, 0, 2]]
    V = module(m, [0, 0, 1], {0, 1, 2})
    assert is_polytope(V)
    V = module(m, [0, 0, 1], {0, 1})
    assert not is_polytope(V) and is_polyhedron(V)
    V = module(m, [1, 0, 1], {0, 1, 2})
    assert not is_polyhedron(V) and is_closed(V)


# ---------------------------------------------------------------- order properties

TWO = [A2, B2, G2]


@st.composite
def dominant_pair(draw, lattice=False):
    """J-dominant lam and a random nu = lam - beta, beta >= 0."""
    m = draw(st.sampled_from(TWO + [A3]))
    c = validate_gcm(m)
    J = draw(node_subsets(c.n))
    p = [draw(nonneg_rationals) if i in J else draw(st.fractions(-3, 3, max_denominator=4)) for i in range(c.n)]
    lam = W(p)
    steps = st.integers(0, 3) if lattice else nonneg_rationals
    beta = [draw(steps) for _ in range(c.n)]
    return c, J, lam, lam.lower(beta)


@given(dominant_pair(), st.data())
def test_leq_transitive_and_antisymmetric(x, data):
    c, J, lam, nu = x
    assert leq_J(c, J, lam, lam)
    if nu != lam and leq_J(c, J, nu, lam):
        assert not leq_J(c, J, lam, nu)
    beta = [data.draw(nonneg_rationals) for _ in range(c.n)]
    rho = nu.lower(beta)
    if leq_J(c, J, nu, lam) and leq_J(c, J, rho, nu):
        assert leq_J(c, J, rho, lam)


@given(dominant_pair(), st.data())
def test_leq_down_set_is_convex(x, data):
    c, J, lam, nu = x
    beta = [data.draw(nonneg_rationals) for _ in range(c.n)]
    nu2 = lam.lower(beta)
    t = data.draw(st.fractions(0, 1, max_denominator=7))
    mix = lam.with_offset([t * a + (1 - t) * b for a, b in zip(nu.offset, nu2.offset)])
    if leq_J(c, J, nu, lam) and leq_J(c, J, nu2, lam):
        assert leq_J(c, J, mix, lam)


@given(dominant_pair(), st.data())
@settings(max_examples=60)
def test_minkowski_identity(x, data):
    """t P(l1) + (1-t) P(l2) = P(t l1 + (1-t) l2), on generator memberships."""
    c, J, l1, _ = x
    p2 = [data.draw(nonneg_rationals) if i in J else data.draw(st.fractions(-3, 3, max_denominator=4))
          for i in range(c.n)]
    l2 = W(p2)
    t = data.draw(st.fractions(0, 1, max_denominator=5))
    mix = W([t * a + (1 - t) * b for a, b in zip(l1.base, l2.base)])
    P = WeylPolyhedronDescriptor(c, mix, J)
    r1 = orbit(c, J, l1, cap=200)
    r2 = orbit(c, J, l2, cap=200)
    assume(not r1.truncated and not r2.truncated)
    # t w l1 + (1-t) w l2 sits in P(mix) (a vertex), and so do mixed-word sums
    w1 = list(r1.words.items())
    for off, word in w1[:6]:
        from weylfaces.weyl import apply_word

        y = apply_word(c, word, l2).offset
        pt = mix.with_offset([t * a + (1 - t) * b for a, b in zip(off, y)])
        assert in_weyl_polyhedron(P, pt)
    for (o1, _), (o2, _) in product(w1[:4], list(r2.words.items())[:4]):
        pt = mix.with_offset([t * a + (1 - t) * b for a, b in zip(o1, o2)])
        assert in_weyl_polyhedron(P, pt)


# ---------------------------------------------------------------- slices and holes


def _levi_slice_union(c, lam, J, depth):
    return enumerate_module_weights(c, lam, J, depth)


@pytest.mark.parametrize(
    "matrix,pairings,J",
    [
        (A2, [1, 0], {0}),
        (A2, [2, F(1, 2)], {0}),
        (B2, [1, 2], {1}),
        (A3, [0, 1, 0], {0, 2}),
        (A3, [1, 0, F(-1, 2)], {0, 1}),
        (A3, [1, 1, 1], {0, 1, 2}),
        (G2, [1, 0], {0, 1}),
    ],
)
def test_integrable_slice_decomposition(matrix, pairings, J):
    V = module(matrix, pairings, J)
    c = V.cartan
    depth = 5
    oracle = _levi_slice_union(c, V.hw, J, depth)
    for x in product(range(depth + 1), repeat=c.n):
        if sum(x) > depth:
            continue
        assert in_wt_parabolic_verma(V, V.hw.lower(x)) == (x in oracle), x


@pytest.mark.parametrize(
    "matrix,pairings,J",
    [(A2, [1, 1], {0, 1}), (A2, [2, 0], {0, 1}), (B2, [1, 1], {0, 1}), (A3, [1, 0, 2], {0, 1, 2}),
     (A1, [4], {0})],
)
def test_no_holes(matrix, pairings, J):
    """Lattice points of the hull are exactly the weights."""
    V = module(matrix, pairings, J)
    hs = half_spaces(V)
    c = V.cartan
    wts = enumerate_integrable_weights(c, V.hw)
    for x in product(range(-1, 9), repeat=c.n):
        mu = V.hw.lower(x)
        assert hs.contains(mu) == in_wt_parabolic_verma(V, mu) == (x in wts), x


def test_half_spaces_cut_out_the_hull():
    V = module(A3, [1, 2, 1], {0, 1, 2})
    hs = half_spaces(V)
    hc = hull([v.offset for v in ray_generators(V).vertices])
    facets = {frozenset(i for i, v in enumerate(hc.vertices) if h.value(v) == 0) for h in hs.items}
    supporting = [f for f in facets if len(f) >= 3]
    assert len(supporting) == len(hc.facets) == 14
