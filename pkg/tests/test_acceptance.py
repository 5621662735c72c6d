"""One test per acceptance criterion; each records a PASS/FAIL line for the summary.

All comparisons are exact (tolerance zero).
"""

import os
import subprocess
import sys
from math import comb

from conftest import record_criterion
from quatlie.liecore import (bracket_span, center, close_and_structure,
                             derivations, endomorphism_coords, form_coords,
                             form_matrix, invariant_symmetric_forms,
                             is_lie_algebra, kernel, orthogonal_projector)
from quatlie.qlinalg import Subspace
from quatlie.scalars import K
from quatlie.spfactory import (Signature, Variant, build_h_rs,
                               build_so_decomposition, build_sp, build_su,
                               graded_commutator, m_subspace, omega_bracket,
                               phi_rescale_iso, restricted_ad, trace_form_on,
                               witness_slot, witness_triple)
from quatlie.weights import DominantWeight, enumerate_small_reps, weyl_dim

SIGS = [(1, 1), (2, 1), (1, 2)]
VARIANTS = list(Variant)


def _w(n, *prefix):
    return DominantWeight(tuple(prefix) + (0,) * (n - len(prefix)))


def _check(number, failures, summary):
    ok = not failures
    record_criterion(number, ok, summary if ok else f"{summary}; failures: {failures[:3]}")
    assert ok, failures


def test_criterion_01_dimension_formulas():
    failures = []
    for n in range(3, 7):
        expect = {
            (1,): 2 * n,
            (2,): n * (2 * n + 1),
            (0, 1): n * (2 * n - 1) - 1,
            (1, 0, 1): (n + 1) * (2 * n + 1) * (2 * n - 1) * (n - 2) // 2,
            (0, 2): n * (n - 1) * (2 * n - 1) * (2 * n + 3) // 3,
            (1, 1): 8 * n * (n - 1) * (n + 1) // 3,
        }
        for prefix, val in expect.items():
            got = weyl_dim(_w(n, *prefix))
            if got != val:
                failures.append((n, prefix, got, val))
        for k in range(1, n + 1):
            d = comb(2 * n, k) - (comb(2 * n, k - 2) if k >= 2 else 0)
            if weyl_dim(DominantWeight.fundamental(k, n)) != d:
                failures.append((n, f"w{k}", d))
    _check(1, failures, "closed forms and D_k^n exact for n = 3..6")


def test_criterion_02_small_irreducibles():
    failures = []
    cases = {(4, "auto"): {"w1", "w2", "2w1"}, (5, "auto"): {"w1", "w2", "2w1"},
             (4, 36): {"w1", "w2", "2w1"}, (5, 55): {"w1", "w2", "2w1"},
             (3, 21): {"w1", "w2", "w3", "2w1"}}
    for (n, bound), exp in cases.items():
        got = [str(x) for x in enumerate_small_reps(n, bound)]
        if len(got) != len(exp) or set(got) != exp:
            failures.append((n, bound, got))
    _check(2, failures, "n=4,5 -> {w1, w2, 2w1}; n=3 (bound 21) -> {w1, w2, w3, 2w1}")


def test_criterion_03_exterior_square_identity():
    failures = []
    for n in range(3, 7):
        d = weyl_dim(_w(n, 0, 1))
        lhs = weyl_dim(_w(n, 2)) + weyl_dim(_w(n, 1, 0, 1))
        if lhs != comb(d, 2):
            failures.append((n, lhs, comb(d, 2)))
    assert weyl_dim(_w(3, 2)) + weyl_dim(_w(3, 1, 0, 1)) == 21 + 70 == 91
    _check(3, failures, "n(2n+1) + dim V(w1+w3) = C(dim V(w2), 2) for n = 3..6")


def test_criterion_04_sp_and_orthogonal_gradings(emb):
    failures = []
    for k, l in SIGS:
        sig = Signature(k, l)
        L = build_sp(sig)
        if not L.is_closed or L.dim != sig.n * (2 * sig.n + 1) or center(L).dim:
            failures.append(("sp", sig, L.dim))
        for v in VARIANTS:
            E, _ = emb(k, l, v)
            if E.parts.orthogonality_defects(E.target.trace_form) or not E.parts.is_complete():
                failures.append(("grading", sig, v.value))
    _check(4, failures, "sp(k,l) closed, dim n(2n+1), center 0; g+k+V trace-orthogonal, both inclusions")


def test_criterion_05_master_oracle(emb):
    failures = []
    pairs = 0
    for k, l in SIGS:
        El, Ek = emb(k, l, "add_to_l")[0], emb(k, l, "add_to_k")[0]
        n4 = 4 * (k + l)
        for a in range(n4):
            for b in range(a + 1, n4):
                Z, W = El.V_basis_vector(a), El.V_basis_vector(b)
                for E in (El, Ek):
                    g, kk = omega_bracket(E, Z, W)
                    cg, ck, cv = graded_commutator(E, Z, W)
                    if (g, kk) != (cg, ck) or any(cv):
                        failures.append((k, l, E.variant.value, a, b))
                # the second inclusion's commutator against minus the first formula
                g, kk = omega_bracket(El, Z, W)
                cg, ck, _ = graded_commutator(Ek, Z, W)
                if (cg, ck) != (-g, -kk):
                    failures.append((k, l, "omega_prime", a, b))
                pairs += 1
    _check(5, failures, f"formula = graded commutator on {pairs} basis pairs x 2 inclusions; Omega' = -Omega")


def test_criterion_06_jacobiator_witness(emb):
    failures = []
    blocks = []
    for k, l in SIGS:
        for v in VARIANTS:
            E, m = emb(k, l, v)
            n, slot = E.sig.n, witness_slot(E)
            p, r = (slot, n) if v == Variant.ADD_TO_L else (slot + 1, 0)
            X, Y, Z = (m.from_ambient(E.coords_of(E.embed_V(z))) for z in witness_triple(E))
            br = m.bracket
            terms = [E.target.element(m.to_ambient(t))
                     for t in (br(br(Y, Z), X), br(br(X, Y), Z), br(br(Z, X), Y))]
            T = terms[0]
            jac = terms[0] + terms[1] + terms[2]
            support = {pos for pos, _ in T.nonzero()}
            ok = (terms[0] == terms[1] == terms[2] and support == {(p, r), (r, p)}
                  and T[p, r] in (K.scale(2), K.scale(-2)) and T[r, p] == T[p, r]
                  and not jac.is_zero())
            blocks.append(str(T[p, r]))
            lie, wit = is_lie_algebra(m)
            if not ok or lie or not wit:
                failures.append((k, l, v.value, str(T[p, r]), lie))
    _check(6, failures, f"each cyclic term is a +-2k block at (slot, added index); blocks {sorted(set(blocks))}; m not Lie")


def test_criterion_07_deformations(emb):
    grid = [-2, -1, 0, "1/2", 1, 2]
    failures = []
    for k, l in SIGS:
        for v in VARIANTS:
            E, _ = emb(k, l, v)
            for r in grid:
                for s in grid:
                    lie, _ = is_lie_algebra(build_h_rs(E, r, s))
                    if lie != (r == s):
                        failures.append((k, l, v.value, r, s, lie))
            for t in (1, 2, 3):
                if not phi_rescale_iso(E, t)[1]:
                    failures.append((k, l, v.value, "phi", t))
    _check(7, failures, "h_{r,s} Lie exactly on r = s over the 6x6 grid; X + v -> X + t v iso for t = 1,2,3")


def _restricted_ad_span(E, m, indices, project):
    return [endomorphism_coords(restricted_ad(E, m, {a: 1}, project)) for a in indices]


def test_criterion_08_derivations_of_m(emb):
    failures = []
    dims = []
    for k, l in [(1, 1), (2, 1)]:
        for v in VARIANTS:
            E, m = emb(k, l, v)
            D = derivations(m)
            project = orthogonal_projector(E.target, m.m_basis)
            inner = Subspace(m.dim ** 2, _restricted_ad_span(E, m, E.g_index + E.k_index, project))
            expected = E.sig.n * (2 * E.sig.n + 1) + 3
            if D != inner or D.dim != expected:
                failures.append((k, l, v.value, D.dim, inner.dim))
            resid = [D.reduce(x) for x in _restricted_ad_span(E, m, E.V_index, project)]
            rows = [{i: x[c] for i, x in enumerate(resid) if x[c]} for c in range(m.dim ** 2)]
            if kernel([row for row in rows if row], ncols=len(resid)).dim:
                failures.append((k, l, v.value, "p0 nonzero"))
            dims.append(D.dim)
    _check(8, failures, f"Der(m) = ad(g+k)|m with dims {dims}; no nonzero x in p gives a derivation")


def test_criterion_09_real_forms():
    failures = []
    for k, l in SIGS:
        sig = Signature(k, l)
        n = sig.n
        S = build_su(sig)
        d = S.algebra.dim
        sq_id = all(sum(S.sigma_matrix[a][b] * S.sigma_matrix[b][c] for b in range(d)) == (a == c)
                    for a in range(d) for c in range(d))
        if (d != 4 * n * n - 1 or S.parts.dims() != {"sp": n * (2 * n + 1), "W0": n * (2 * n - 1) - 1}
                or not sq_id
                or not bracket_span(S.algebra, S.parts["W0"], S.parts["W0"]).is_subspace_of(S.parts["sp"])):
            failures.append(("su", k, l))
    D = build_so_decomposition(Signature(1, 1))
    so, P = D.algebra, D.parts
    if so.dim != 28 or P.dims() != {"sp": 10, "sp1": 3, "V0": 5, "V1": 5, "V2": 5} or not P.is_complete():
        failures.append(("so dims", P.dims()))
    trip = close_and_structure([so.element(x) for x in P["sp1"].basis])
    if not trip.is_closed or center(trip).dim or bracket_span(so, P["sp1"], P["sp"]).dim:
        failures.append("sp(1) triple")
    for s in ("V0", "V1", "V2"):
        if not bracket_span(so, P["sp"], P[s]).is_subspace_of(P[s]):
            failures.append((s, "not stable"))
        if bracket_span(so, P[s], P[s]) != P["sp"]:
            failures.append((s, "[V,V] != sp"))
    _check(9, failures, "4n^2-1 = n(2n+1) + (n(2n-1)-1), sigma^2 = id; so(4,4): 28 = 10+3+5+5+5")


def test_criterion_10_invariant_forms(emb):
    failures = []
    for k, l in SIGS:
        for v in VARIANTS:
            E, _ = emb(k, l, v)
            h, g, V = E.target, E.parts["g"], E.parts["V"]
            F = invariant_symmetric_forms(h, V, acting=g)
            if F.dim != 1 or not F.contains(form_coords(trace_form_on(h, V))):
                failures.append((k, l, v.value, "p", F.dim))
            M = m_subspace(E)
            in_g = [p in set(E.g_index) for p in M.pivots]
            F2 = invariant_symmetric_forms(h, M, acting=g)
            for b in F2.basis:
                B = form_matrix(b, M.dim)
                if any(B[s][t] for s in range(M.dim) for t in range(M.dim) if in_g[s] and not in_g[t]):
                    failures.append((k, l, v.value, "cross block"))
    _check(10, failures, "invariant symmetric forms on p: dim 1, contains Re tr; g-p cross block forced to 0")


def test_criterion_11_deterministic_report(tmp_path):
    cmd = [sys.executable, "-m", "quatlie.cli", "verify", "--checks", "all", "--seed", "7", "--quiet"]
    procs = []
    for i, hashseed in enumerate(("1", "2")):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        out = tmp_path / f"report{i}.json"
        procs.append((out, subprocess.Popen(cmd + ["--report", str(out)], env=env,
                                            stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)))
    codes = []
    for out, p in procs:
        p.communicate(timeout=900)
        codes.append(p.returncode)
    a, b = (out.read_bytes() for out, _ in procs)
    failures = []
    if a != b:
        failures.append("reports differ")
    if codes != [0, 0]:
        failures.append(f"exit codes {codes}")
    _check(11, failures, f"two runs of verify --checks all --seed 7 byte-identical ({len(a)} bytes), exit 0")
