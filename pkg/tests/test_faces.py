from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import A1, A2, A3, AFF_A1, AFF_A1_EXT, module, node_subsets
from weylfaces.cartan import validate_gcm
from weylfaces.errors import RankTooLarge, RegularityRequired
from weylfaces.extpoly import INF, ExtPolynomial
from weylfaces.faces import (
    ModuleDescriptor,
    TorusValue,
    active_nodes,
    all_subsets,
    coset_face_subset,
    enumerate_standard_faces,
    f_polynomial,
    f_polynomial_int_regular,
    f_polynomial_regular,
    face_descriptor,
    face_equal,
    face_map_fiber,
    face_stabilizer,
    face_subset,
    is_restriction_hw,
    is_restriction_simple,
    j_max,
    j_min,
    localize_face,
    tangent_cone,
)
from weylfaces.oracle import enumerate_integrable_weights, enumerate_module_weights
from weylfaces.weyl import apply_word, group_elements

P = ExtPolynomial.from_coeffs
S = frozenset


def test_module_validation(a2):
    with pytest.raises(ValueError):
        module(A2, [1, -1], {0, 1})
    with pytest.raises(ValueError):
        module(A2, [Fraction(1, 2), 0], {0})
    assert module(A2, [Fraction(1, 2), 0], {0}, integral=False).integrability == {0}
    with pytest.raises(ValueError):
        ModuleDescriptor.quantum(a2, [TorusValue.generic(), TorusValue.pm_one()], {0})
    with pytest.raises(ValueError):
        ModuleDescriptor.quantum(a2, [TorusValue.q_power(-1), TorusValue.pm_one()], {0})


def test_active_nodes_examples(a2):
    V = module(A2, [1, 0], {0, 1})
    assert active_nodes(V, {0, 1}) == {0}
    assert active_nodes(V, set()) == S()
    Q = ModuleDescriptor.quantum(a2, [TorusValue.q_power(3), TorusValue.pm_one()], {0, 1})
    assert active_nodes(Q, {0, 1}) == {0}
    Q0 = ModuleDescriptor.quantum(a2, [TorusValue.q_power(0), TorusValue.generic()], {0})
    assert active_nodes(Q0, {0, 1}) == {1}


def test_jmin_jmax_examples():
    V = module(A3, [1, 2, 3], {0, 1, 2})
    assert (j_min(V, {0, 2}), j_max(V, {0, 2})) == ({0, 2}, {0, 2})
    V = module(A3, [1, 0, 1], {0, 1, 2})
    assert (j_min(V, set()), j_max(V, set())) == (S(), {1})
    V = module(A2, [0, 0], {0, 1})
    assert (j_min(V, {0}), j_max(V, {0})) == (S(), {0, 1})


def test_dormant_nodes_come_from_all_of_integrability():
    V = module(A3, [0, 1, 0], {0, 1, 2})
    # J = {1}: node 1 active; nodes 0 and 2 are dormant but adjacent to it
    assert face_map_fiber(V, {1}) == ({1}, {1})
    assert face_map_fiber(V, {0}) == (S(), {0, 2})


def test_face_equal_and_subset_examples():
    V = module(A3, [1, 0, 1], {0, 1, 2})
    assert face_equal(V, set(), {1})
    assert face_equal(V, {1}, set())
    W = module(A2, [1, 1], {0, 1})
    assert not face_subset(W, {0}, {1})
    assert face_subset(W, {0}, {0})


def test_face_stabilizer_examples():
    assert face_stabilizer(module(A3, [1, 1, 1], {0, 1, 2}), {0, 2}) == {0, 2}
    assert face_stabilizer(module(A3, [1, 1, 1], {0, 1, 2}), set()) == S()
    assert face_stabilizer(module(A3, [1, 0, 1], {0, 1, 2}), set()) == {1}


def test_coset_face_subset_examples():
    V = module(A2, [1, 1], {0, 1})
    assert coset_face_subset(V, (0,), {0}, {0})
    assert not coset_face_subset(V, (1,), {0}, {0})
    for J, J2 in product(all_subsets(V.cartan.nodes), repeat=2):
        assert coset_face_subset(V, (), J, J2) == face_subset(V, J2, J)
    with pytest.raises(ValueError):
        coset_face_subset(module(A2, [1, 1], {0}), (1,), {0}, {0})


def _weights_by_support(V):
    pts = enumerate_integrable_weights(V.cartan, V.hw)
    return lambda J: {x for x in pts if all(x[i] == 0 for i in range(V.cartan.n) if i not in J)}


@pytest.mark.parametrize(
    "matrix,pairings",
    [(A2, [1, 1]), (A2, [1, 0]), (A3, [1, 0, 1]), (A3, [0, 1, 0]), (A3, [1, 1, 1])],
)
def test_coset_face_subset_against_weight_sets(matrix, pairings):
    """w wt_J contains wt_J2, checked on explicit finite weight sets."""
    V = module(matrix, pairings, range(len(matrix)))
    c = V.cartan
    wt = _weights_by_support(V)
    elems = group_elements(c, c.nodes).words.values()
    subsets = list(all_subsets(c.nodes))
    for word in elems:
        for J in subsets:
            moved = {apply_word(c, word, V.hw.with_offset(x)).offset for x in wt(J)}
            for J2 in subsets:
                assert coset_face_subset(V, word, J, J2) == (wt(J2) <= moved), (word, J, J2)


def test_face_descriptor_markers_distinguish_translates(a2):
    V = module(A2, [1, 1], {0, 1})
    d0 = face_descriptor(V, {0})
    assert face_descriptor(V, {0}, (0,)) == d0
    assert face_descriptor(V, {0}, (1,)) != d0
    assert d0.dim == 1


def test_enumerate_examples(a3):
    assert enumerate_standard_faces(module(A1, [Fraction(1, 2)], set(), integral=False)) == [
        (S(), S(), 0),
        ({0}, {0}, 1),
    ]
    assert enumerate_standard_faces(module(A2, [0, 0], {0, 1})) == [(S(), {0, 1}, 0)]
    assert len(enumerate_standard_faces(module(A3, [1, 1, 1], {0, 1, 2}))) == 8


def test_rank_guard(a3):
    with pytest.raises(RankTooLarge):
        enumerate_standard_faces(module(A3, [1, 1, 1], {0, 1, 2}), max_rank=2)


def test_f_polynomial_examples():
    assert f_polynomial(module(A3, [1, 1, 1], {0, 1, 2})) == P([24, 36, 14, 1])
    assert f_polynomial(module(A1, [3], {0})) == P([2, 1])
    assert f_polynomial(module(A2, [Fraction(1, 3), 2], set(), integral=False)) == P([1, 2, 1])
    assert f_polynomial(module(A2, [0, 0], {0, 1})) == P([1])


def test_f_polynomial_infinite_coefficients():
    assert f_polynomial(module(AFF_A1_EXT, [0, 0, Fraction(1, 3)], {0, 1}, integral=False)) == P([1, INF, INF, 1])
    assert f_polynomial(module(AFF_A1, [1, 1], {0, 1})) == P([INF, INF, 1])


def test_regular_formulas(a2, a3):
    assert f_polynomial_regular(a2) == P([6, 6, 1])
    assert f_polynomial_regular(a3) == P([24, 36, 14, 1])
    V = module(A3, [1, 2, 1], {0, 1, 2})
    assert f_polynomial_int_regular(V) == f_polynomial(V)
    V = module(A3, [2, Fraction(-1, 2), 1], {0, 2})
    assert f_polynomial_int_regular(V) == f_polynomial(V) == P([4, 4, 1]) * P([1, 1])
    with pytest.raises(RegularityRequired):
        f_polynomial_int_regular(module(A3, [0, 1, 1], {0, 1, 2}))


def test_tangent_cone_and_localization():
    V = module(A2, [1, 1], {0, 1})
    assert tangent_cone(V).integrability == S()
    assert tangent_cone(module(A2, [0, 0], {0, 1})).integrability == {0, 1}
    assert tangent_cone(module(A2, [1, 0], {0, 1})).integrability == {1}
    assert localize_face(V, set()).integrability == S()
    assert localize_face(V, {0, 1}).integrability == {0, 1}
    assert localize_face(module(A3, [1, 1, 1], {0, 1, 2}), {0, 2}).integrability == {0, 2}
    with pytest.raises(RegularityRequired):
        localize_face(module(A2, [1, 0], {0, 1}), {0})


def test_tangent_cone_matches_face_structure_near_top():
    """Faces through the highest weight are those of the tangent cone."""
    V = module(A3, [1, 0, 2], {0, 1, 2})
    T = tangent_cone(V)
    for J in all_subsets(V.cartan.nodes):
        assert face_map_fiber(V, J) == face_map_fiber(T, J)


def test_branching_examples():
    V = module(A2, [1, 1], {0, 1})
    assert is_restriction_simple(V, {0, 1}) and is_restriction_hw(V, {0, 1})
    assert not is_restriction_simple(V, {0})
    T = module(A3, [0, 0, 0], {0, 1, 2})
    assert all(is_restriction_simple(T, J) for J in all_subsets(T.cartan.nodes))


# ---------------------------------------------------------------- properties

DIAGRAMS = [A2, A3, AFF_A1_EXT, AFF_A1, [[2, -1], [-2, 2]]]


@st.composite
def modules(draw):
    m = draw(st.sampled_from(DIAGRAMS))
    n = len(m)
    I_V = draw(node_subsets(n))
    p = []
    for i in range(n):
        if i in I_V:
            p.append(draw(st.integers(0, 2)))
        else:
            p.append(draw(st.fractions(-3, 3, max_denominator=3)))
    return module(m, p, I_V)


@given(modules())
def test_interval_property(V):
    subsets = list(all_subsets(V.cartan.nodes))
    for J in subsets:
        lo, hi = face_map_fiber(V, J)
        assert lo <= J | hi and lo <= hi
        assert hi - lo <= V.integrability
        for J2 in subsets:
            eq = face_equal(V, J, J2)
            assert eq == (lo <= J2 <= hi)
            assert eq == (face_map_fiber(V, J2) == (lo, hi))


@given(modules())
def test_canonicalization_is_idempotent(V):
    for J in all_subsets(V.cartan.nodes):
        lo = j_min(V, J)
        hi = j_max(V, J)
        assert j_min(V, lo) == lo
        assert j_max(V, hi) == hi
        assert lo <= J


@given(modules(), st.data())
def test_monotone(V, data):
    J = data.draw(node_subsets(V.cartan.n))
    J2 = data.draw(node_subsets(V.cartan.n))
    assert face_subset(V, J, J | J2)


@given(modules())
def test_fpoly_counts_standard_faces(V):
    """f(1) is the orbit-weighted face count; f(0) is the vertex count."""
    from weylfaces.weyl import orbit, parabolic_index

    fp = f_polynomial(V)
    faces = enumerate_standard_faces(V)
    I_V = V.integrability
    total = ExtPolynomial.constant(0)
    for lo, hi, dim in faces:
        total = total + ExtPolynomial.monomial(0, parabolic_index(V.cartan, I_V, I_V & hi))
    assert fp.at_one() == total.coeff(0)
    if not any(V.is_dormant_value(i) for i in I_V):
        rep = orbit(V.cartan, I_V, V.hw, cap=200)
        expected = INF if rep.truncated else len(rep)
        assert fp.coeff(0) == expected


@given(st.sampled_from([A2, A3]), st.data())
@settings(max_examples=40)
def test_quantum_matches_classical(m, data):
    c = validate_gcm(m)
    I_V = data.draw(node_subsets(c.n))
    p = [data.draw(st.integers(0, 3)) for _ in range(c.n)]
    V = module(m, p, I_V)
    Q = ModuleDescriptor.quantum(c, [TorusValue.q_power(x) for x in p], I_V)
    for J in all_subsets(c.nodes):
        assert face_map_fiber(Q, J) == face_map_fiber(V, J)


# ---------------------------------------------------------------- weight sets


def _wt_J(c, lam, I_V, J, depth):
    pts = enumerate_module_weights(c, lam, I_V, depth)
    return {x for x in pts if all(x[i] == 0 for i in range(c.n) if i not in J)}


@pytest.mark.parametrize(
    "matrix,pairings,I_V",
    [
        (A2, [1, 0], {0, 1}),
        (A2, [0, Fraction(1, 2)], {0}),
        (A3, [1, 0, 0], {0, 1, 2}),
        (A3, [0, 2, 0], {0, 2}),
        (A3, [0, Fraction(-1, 3), 0], {0, 2}),
    ],
)
@pytest.mark.parametrize("depth", [3, 4, 5])
def test_face_equal_matches_truncated_weight_sets(matrix, pairings, I_V, depth):
    V = module(matrix, pairings, I_V)
    c = V.cartan
    subsets = list(all_subsets(c.nodes))
    sets = {J: _wt_J(c, V.hw, I_V, J, depth) for J in subsets}
    for J, J2 in product(subsets, repeat=2):
        assert face_equal(V, J, J2) == (sets[J] == sets[J2]), (J, J2)
