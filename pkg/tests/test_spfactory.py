from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from quatlie.liecore import (bracket_span, center, close_and_structure,
                             derivations, endomorphism_coords, is_lie_algebra,
                             symmetric_pair_check)
from quatlie.qlinalg import MatrixQ, Subspace, quat_to_complex, rank
from quatlie.scalars import I, J, K, ONE, ZERO, Quaternion
from quatlie.spfactory import (Signature, Variant, build_h_rs, build_S_map,
                               build_so_decomposition, build_sp, build_su,
                               build_T_map, embed_triple, graded_commutator,
                               hermitian_matrix, in_sp, omega_bracket,
                               omega_form, phi_rescale_iso, restricted_ad,
                               sigma, sp1_triple, symplectic_matrix,
                               witness_slot, witness_triple)

small = st.integers(-3, 3)
quats = st.builds(Quaternion, small, small, small, small)
variants = st.sampled_from(list(Variant))


def qvec(n):
    return st.lists(quats, min_size=n, max_size=n)


def test_signature():
    s = Signature.parse("2,1")
    assert (s.k, s.l, s.n, s.signs) == (2, 1, 3, [1, 1, -1])
    assert str(s) == "2,1"
    with pytest.raises(ValueError):
        Signature(0, 0)
    with pytest.raises(ValueError):
        Signature.parse("2;1")


@pytest.mark.parametrize("k,l,dim", [(1, 0, 3), (1, 1, 10), (2, 1, 21), (0, 2, 10)])
def test_build_sp(k, l, dim):
    sig = Signature(k, l)
    L = build_sp(sig)
    assert L.is_closed and L.dim == dim
    assert all(in_sp(X, sig) for X in L.basis)
    assert center(L).dim == 0


@pytest.mark.parametrize("k,l", [(1, 1), (2, 1)])
def test_complex_image_is_symplectic_and_unitary(k, l):
    sig = Signature(k, l)
    Jm, H = symplectic_matrix(sig), hermitian_matrix(sig)
    for X in build_sp(sig).basis:
        Y = quat_to_complex(X)
        assert (Y @ Jm + Jm @ Y.transpose()).is_zero()
        assert (Y.conj_transpose() @ H + H @ Y).is_zero()


def test_embedding_example(emb):
    E, _ = emb(1, 1, "add_to_l")
    assert E.target.name == "sp(1,2)"
    assert E.parts.dims() == {"g": 10, "k": 3, "V": 8}
    assert E.target.dim == 21
    P = E.parts
    assert bracket_span(E.target, P["g"], P["V"]).is_subspace_of(P["V"])
    assert bracket_span(E.target, P["k"], P["V"]).is_subspace_of(P["V"])
    assert not E.parts.orthogonality_defects(E.target.trace_form)


@pytest.mark.parametrize("variant", list(Variant))
def test_symmetric_pairs(emb, variant):
    E, _ = emb(2, 1, variant)
    h, P = E.target, E.parts
    assert symmetric_pair_check(h, P["g"] + P["k"], P["V"])[0]
    assert symmetric_pair_check(h, Subspace.full(h.dim), Subspace.zero(h.dim))[0]
    ok, details = symmetric_pair_check(h, P["g"], P["k"] + P["V"])
    assert not ok and details["[t,W] in W"] and not details["[W,W] in t"]


@given(qvec(2), variants)
def test_embedded_V_lies_in_target_sp(Z, variant):
    sig = Signature(1, 1)
    M = embed_triple(sig, variant, Z=Z)
    hs = Signature(1, 2) if Variant(variant) == Variant.ADD_TO_L else Signature(2, 1)
    assert in_sp(M, hs)


@given(Z=qvec(2), W=qvec(2), variant=variants)
def test_omega_matches_commutator_random(emb, Z, W, variant):
    E, _ = emb(1, 1, variant)
    g, k = omega_bracket(E, Z, W)
    cg, ck, cv = graded_commutator(E, Z, W)
    assert (g, k) == (cg, ck)
    assert not any(cv)
    assert omega_bracket(E, Z, Z) == (MatrixQ.zeros(2), ZERO)


@given(Z=qvec(3), W=qvec(3))
def test_omega_prime_is_minus_omega(emb, Z, W):
    El, Ek = emb(2, 1, "add_to_l")[0], emb(2, 1, "add_to_k")[0]
    g, k = omega_bracket(El, Z, W)
    cg, ck, _ = graded_commutator(Ek, Z, W)
    assert (cg, ck) == (-g, -k)


def _block(E, M, slot):
    n = E.sig.n
    p, r = (slot, n) if E.variant == Variant.ADD_TO_L else (slot + 1, 0)
    lo, hi = sorted((p, r))
    return (p, r), MatrixQ.from_rows([[M[lo, lo], M[lo, hi]], [M[hi, lo], M[hi, hi]]])


LITERAL = [MatrixQ.from_rows([[ZERO, ONE], [-ONE, ZERO]]),
           MatrixQ.from_rows([[ZERO, I], [I, ZERO]]),
           MatrixQ.from_rows([[ZERO, J], [J, ZERO]])]


@pytest.mark.parametrize("k,l,variant", [(0, 1, "add_to_l"), (1, 0, "add_to_k"),
                                         (1, 1, "add_to_l"), (1, 1, "add_to_k"), (2, 1, "add_to_l")])
def test_witness_triple_terms(emb, k, l, variant):
    E, m = emb(k, l, variant)
    slot = witness_slot(E)
    mats = [E.embed_V(Z) for Z in witness_triple(E)]
    (p, r), _ = _block(E, mats[0], slot)
    assert [_block(E, M, slot)[1] for M in mats] == LITERAL
    X, Y, Z = (m.from_ambient(E.coords_of(M)) for M in mats)
    br = m.bracket
    # [Y,[X,Z]] = [[X,Y],Z] = -[X,[Y,Z]]
    t1 = br(Y, br(X, Z))
    t2 = br(br(X, Y), Z)
    t3 = {c: -v for c, v in br(X, br(Y, Z)).items()}
    assert t1 == t2 == t3
    T = E.target.element(m.to_ambient(t1))
    assert {pos for pos, _ in T.nonzero()} == {(p, r), (r, p)}
    assert T[p, r] == T[r, p] and T[p, r] in (K.scale(2), K.scale(-2))


def test_witness_block_values_frozen(emb):
    # frozen from the exact computation: the sign depends on the inclusion
    expected = {"add_to_l": K.scale(2), "add_to_k": K.scale(-2)}
    for variant, val in expected.items():
        E, m = emb(1, 1, variant)
        X, Y, Z = (m.from_ambient(E.coords_of(E.embed_V(v))) for v in witness_triple(E))
        T = E.target.element(m.to_ambient(m.bracket(m.bracket(X, Y), Z)))
        nz = dict(T.nonzero())
        assert set(nz.values()) == {val}


def test_h_rs_examples(emb):
    E, _ = emb(1, 1, "add_to_l")
    h11 = build_h_rs(E, 1, 1)
    assert h11.product == E.target.product
    assert is_lie_algebra(h11)[0]
    ok, wit = is_lie_algebra(build_h_rs(E, 1, 0))
    assert not ok and wit["triple"]
    assert is_lie_algebra(build_h_rs(E, 2, 2))[0]
    assert is_lie_algebra(build_h_rs(E, -1, -1))[0]


def test_phi_rescale(emb):
    E, _ = emb(1, 1, "add_to_k")
    diag, ok, _ = phi_rescale_iso(E, 1)
    assert ok and set(diag) == {1}
    for t in (2, 3, Fraction(1, 2), -2):
        assert phi_rescale_iso(E, t)[1]
    with pytest.raises(ValueError):
        phi_rescale_iso(E, 0)


def test_m_algebra(emb):
    E, m = emb(1, 1, "add_to_l")
    assert m.dim == 18
    assert not is_lie_algebra(m)[0]
    D = derivations(m)
    for a in E.g_index + E.k_index:
        assert D.contains(endomorphism_coords(restricted_ad(E, m, {a: 1})))
    assert D.dim == 13


def test_su_split():
    S = build_su(Signature(1, 1))
    assert S.algebra.dim == 15
    assert S.parts.dims() == {"sp": 10, "W0": 5}
    for X in S.algebra.basis:
        assert sigma(sigma(X, Signature(1, 1)), Signature(1, 1)) == X
    assert bracket_span(S.algebra, S.parts["W0"], S.parts["W0"]).is_subspace_of(S.parts["sp"])


def test_so_decomposition_11():
    D = build_so_decomposition(Signature(1, 1))
    assert D.algebra.dim == 28
    assert D.parts.dims() == {"sp": 10, "sp1": 3, "V0": 5, "V1": 5, "V2": 5}
    assert D.parts.is_complete()
    trip = close_and_structure(sp1_triple(2))
    assert trip.is_closed and trip.dim == 3 and center(trip).dim == 0
    for s in ("V0", "V1", "V2"):
        assert bracket_span(D.algebra, D.parts[s], D.parts[s]) == D.parts["sp"]


def _e(n2, s):
    return [ONE if t == s else ZERO for t in range(n2)]


def test_S_map_examples():
    sig = Signature(1, 1)
    n, n2 = 2, 4
    assert build_S_map(_e(n2, 0), _e(n2, 0), sig).is_zero()
    assert build_S_map(_e(n2, 0), _e(n2, n), sig).trace() == Quaternion(2)
    assert build_S_map(_e(n2, 1), _e(n2, n + 1), sig).trace() == Quaternion(-2)
    for x, y in combinations(range(n2), 2):
        S = build_S_map(_e(n2, x), _e(n2, y), sig)
        assert S.trace() == omega_form(_e(n2, x), _e(n2, y), sig).scale(2)
        assert sigma(S, sig) == -S


def test_T_maps():
    sig = Signature(1, 1)
    x = [Quaternion(1, 2), Quaternion(0, -1), ONE, I]
    for s in ("T0", "T1", "T2"):
        assert build_T_map(s, x, x, sig).is_zero()
    basis = []
    for s in range(4):
        basis += [_e(4, s), [I if t == s else ZERO for t in range(4)]]
    flats = [build_T_map("T2", a, b, sig).flatten() for a, b in combinations(basis, 2)]
    assert rank(flats) == 28
    with pytest.raises(ValueError):
        build_T_map("T3", x, x, sig)
