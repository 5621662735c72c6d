from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quatlie.liecore import (GradedDecomposition, LieAlgebra, NotStableError,
                             StructureAlgebra, center, centralizer,
                             close_and_structure, derivation_defect,
                             derivations, endomorphism_coords, form_coords,
                             invariant_symmetric_forms, is_lie_algebra,
                             jacobiator, orthogonal_projector)
from quatlie.qlinalg import MatrixQ, Subspace
from quatlie.scalars import I, J, K, ONE
from quatlie.spfactory import Signature, build_sp


def sp1():
    return close_and_structure([MatrixQ.diag([u]) for u in (I, J, K)], name="sp(1)")


def unflatten(vec, d):
    return [list(vec[e * d:(e + 1) * d]) for e in range(d)]


def test_sp1_structure_constants():
    L = sp1()
    assert L.is_closed and L.dim == 3
    # [i, j] = 2k, cyclically
    assert L.bracket_basis(0, 1) == {2: 2}
    assert L.bracket_basis(1, 2) == {0: 2}
    assert L.bracket_basis(2, 0) == {1: 2}
    assert L.is_antisymmetric()
    assert is_lie_algebra(L) == (True, None)


def test_not_closed_and_dependent():
    E12, E21 = MatrixQ.unit(2, 2, 0, 1), MatrixQ.unit(2, 2, 1, 0)
    L = close_and_structure([E12, E21])
    assert not L.is_closed and L.witness == (0, 1)
    with pytest.raises(ValueError):
        close_and_structure([E12, E12.scale(2)])


def test_center_and_centralizer():
    assert center(sp1()).dim == 0
    ab = close_and_structure([MatrixQ.diag([ONE, 0]), MatrixQ.diag([0, ONE])])
    assert center(ab).dim == 2
    L = sp1()
    assert centralizer(L, Subspace.coordinate(3, [0])) == Subspace.coordinate(3, [0])


def test_derivations_of_sp1_are_inner():
    L = sp1()
    D = derivations(L)
    inner = Subspace(9, [endomorphism_coords(L.ad_matrix({a: 1})) for a in range(3)])
    assert D.dim == 3 and D == inner
    for v in D.basis:
        assert not derivation_defect(L, unflatten(v, 3))


def test_derivations_of_abelian():
    A = StructureAlgebra("ab2", 2, {})
    assert derivations(A).dim == 4


def test_derivations_semisimple_sp11():
    L = build_sp(Signature(1, 1))
    D = derivations(L)
    inner = Subspace(100, [endomorphism_coords(L.ad_matrix({a: 1})) for a in range(10)])
    assert D == inner and D.dim == 10


def test_derivation_defect_detects_non_derivation():
    L = sp1()
    T = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]  # identity
    assert derivation_defect(L, T)


coeffs = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


@given(coeffs, coeffs, coeffs)
def test_jacobiator_vanishes_on_lie(x, y, z):
    L = sp1()
    assert jacobiator(L, x, y, z) == {}


def test_jacobi_on_sp_algebras():
    for sig in (Signature(1, 0), Signature(1, 1), Signature(2, 0)):
        assert is_lie_algebra(build_sp(sig))[0]


def test_is_lie_witness_for_broken_product():
    # [e0,e1] = e2, [e1,e2] = e1: the cyclic sum on (e0,e1,e2) is -e2
    prod = {(0, 1): {2: 1}, (1, 0): {2: -1}, (1, 2): {1: 1}, (2, 1): {1: -1}}
    A = StructureAlgebra("bad", 3, prod)
    ok, wit = is_lie_algebra(A)
    assert not ok and wit["triple"] == [0, 1, 2]
    assert wit["jacobiator"] == {2: -1}
    assert jacobiator(A, {0: 1}, {1: 1}, {2: 1}) == {2: -1}


def test_invariant_forms_trivial_action():
    A = StructureAlgebra("ab2", 2, {})
    F = invariant_symmetric_forms(A, Subspace.full(2), acting=Subspace.zero(2))
    assert F.dim == 3


def test_invariant_forms_on_simple_algebra():
    L = build_sp(Signature(1, 1))
    F = invariant_symmetric_forms(L, Subspace.full(L.dim))
    assert F.dim == 1
    assert F.contains(form_coords(L.gram()))


def test_invariant_forms_requires_stability():
    L = sp1()
    with pytest.raises(NotStableError):
        invariant_symmetric_forms(L, Subspace.coordinate(3, [0]))


def test_orthogonal_projector():
    L = build_sp(Signature(1, 1))
    M = Subspace.coordinate(L.dim, [0, 1, 2, 6])
    P = orthogonal_projector(L, M)
    x = [Fraction(i + 1) for i in range(L.dim)]
    px = P(x)
    img = [sum((c * b[t] for c, b in zip(px, M.basis)), Fraction(0)) for t in range(L.dim)]
    resid = [a - b for a, b in zip(x, img)]
    assert all(L.trace_form(resid, m) == 0 for m in M.basis)
    assert P(img) == px


def test_graded_components_sum_back():
    L = build_sp(Signature(1, 1))
    parts = {"a": Subspace.coordinate(10, range(6)), "b": Subspace.coordinate(10, range(6, 10))}
    G = GradedDecomposition(L, parts)
    assert G.is_direct() and G.is_complete()
    x = [Fraction(i - 4) for i in range(10)]
    comps = G.components(x)
    assert [comps["a"][i] + comps["b"][i] for i in range(10)] == x


def test_lie_json_roundtrip():
    L = build_sp(Signature(1, 1))
    data = L.to_json()
    assert {"name", "matrix_size", "basis", "structure"} <= set(data)
    L2 = LieAlgebra.from_json(data)
    assert L2.product == L.product and L2.basis == L.basis
