"""Named checks over the constructions, a runner and a deterministic JSON report.

Each check id carries the label of the statement it exercises (``P3.3-der-m``
and so on). Checks never raise: an exception becomes a failing result with
the error as witness.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .liecore import (bracket_span, center, close_and_structure, derivations,
                      endomorphism_coords, form_coords, form_matrix,
                      invariant_symmetric_forms, is_lie_algebra, jacobiator,
                      orthogonal_projector, symmetric_pair_check)
from .qlinalg import MatrixQ, Subspace, kernel, quat_to_complex, rank, realify
from .scalars import (GaussianRational, I, J, K, ONE, Quaternion, ZERO,
                      format_rational, q)
from .spfactory import (Signature, Variant, build_embedding, build_m_algebra,
                        build_S_map, build_so_decomposition, build_sp,
                        build_su, build_T_map, build_h_rs,
                        graded_commutator,
                        hermitian_matrix, in_sp, m_subspace, omega_bracket,
                        omega_form, phi_rescale_iso, real_metric_signs,
                        restricted_ad, sigma, symplectic_matrix,
                        trace_form_on, witness_slot, witness_triple)
from .weights import (CLOSED_FORMS, DominantWeight, check_C12_exclusions,
                      check_L11_dims, check_L14, closed_form_mismatches,
                      enumerate_small_reps, fundamental_dim, sp_dim, weyl_dim)

DEFAULT_SIGNATURES = ((1, 1), (2, 1), (1, 2))
EXTENDED_SIGNATURES = ((2, 2),)
DEFAULT_RANKS = (3, 4, 5, 6)
RS_GRID = (Fraction(-2), Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
PHI_SCALES = (1, 2, 3)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    check_id: str
    statement: str
    status: Status
    witness: object = None
    elapsed_ms: int = 0

    def to_json(self, timings=False) -> dict:
        out = {"check_id": self.check_id, "statement": self.statement,
               "status": self.status.value, "witness": to_jsonable(self.witness)}
        if timings:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class RunConfig:
    signatures: list = field(default_factory=lambda: [Signature(*s) for s in DEFAULT_SIGNATURES])
    variants: list = field(default_factory=lambda: list(Variant))
    rank_range: list = field(default_factory=lambda: list(DEFAULT_RANKS))
    checks: object = "all"
    seed: int = 0
    output_path: str = None
    timings: bool = False

    def __post_init__(self):
        self.signatures = [s if isinstance(s, Signature) else Signature(*s) for s in self.signatures]
        self.variants = [Variant(v) for v in self.variants]
        for s in self.signatures:
            if s.n < 2:
                raise ValueError(f"signature ({s}) has k+l < 2; embedding checks need k+l >= 2")
        if not self.signatures:
            raise ValueError("at least one signature is required")
        if not self.variants:
            raise ValueError("at least one variant is required")
        if any(n < 1 for n in self.rank_range):
            raise ValueError("ranks must be positive")
        known = set(REGISTRY)
        if self.checks != "all":
            self.checks = list(self.checks)
            unknown = [c for c in self.checks if c not in known]
            if unknown:
                raise ValueError(f"unknown check id(s): {', '.join(unknown)}")

    def selected(self) -> list:
        if self.checks == "all":
            return list(REGISTRY)
        wanted = set(self.checks)
        return [c for c in REGISTRY if c in wanted]

    def to_json(self) -> dict:
        return {
            "signatures": [str(s) for s in self.signatures],
            "variants": [v.value for v in self.variants],
            "rank_range": list(self.rank_range),
            "checks": self.checks if self.checks == "all" else list(self.selected()),
            "seed": self.seed,
            "timings": self.timings,
        }


def to_jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (Quaternion, GaussianRational, MatrixQ, Signature)):
        if isinstance(x, MatrixQ):
            return [[str(v) for v in row] for row in x.to_rows()]
        return str(x)
    if isinstance(x, Enum):
        return x.value
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    return repr(x)


class Context:
    """Per-run cache of the expensive constructions."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def sp(self, sig):
        return self._get(("sp", sig), lambda: build_sp(sig))

    def su(self, sig):
        return self._get(("su", sig), lambda: build_su(sig))

    def so(self, sig):
        return self._get(("so", sig), lambda: build_so_decomposition(sig))

    def emb(self, sig, variant):
        return self._get(("emb", sig, variant), lambda: build_embedding(sig, variant))

    def m(self, sig, variant):
        return self._get(("m", sig, variant), lambda: build_m_algebra(self.emb(sig, variant)))

    def der(self, sig, variant):
        return self._get(("der", sig, variant), lambda: derivations(self.m(sig, variant)))

    def rng(self, tag):
        return random.Random(f"{self.cfg.seed}:{tag}")

    def cases(self):
        for sig in self.cfg.signatures:
            for v in self.cfg.variants:
                yield sig, v


class Outcome:
    """Collects per-case witnesses; the check fails if any case failed."""

    def __init__(self):
        self.ok = True
        self.cases = []

    def add(self, ok, **info):
        self.ok = self.ok and bool(ok)
        info["ok"] = bool(ok)
        self.cases.append(info)


def _label(sig, variant=None):
    return str(sig) if variant is None else f"{sig}/{variant.value}"


# -- weight checks ---------------------------------------------------------------

def chk_wdf_closed_forms(ctx):
    out = Outcome()
    for n in ctx.cfg.rank_range:
        bad = closed_form_mismatches(n)
        dims = {lab: weyl_dim(DominantWeight(p + (0,) * (n - len(p))))
                for lab, (p, _) in CLOSED_FORMS.items() if len(p) <= n}
        dims.update({f"D_{k}": fundamental_dim(k, n) for k in range(1, n + 1)})
        out.add(not bad, n=n, dims=dims, mismatches=bad)
    return out


def chk_wdf_monotonicity(ctx):
    out = Outcome()
    for n in ctx.cfg.rank_range:
        viol = []
        count = len(enumerate_small_reps(n, 4 * sp_dim(n) ** 2, violations=viol))
        out.add(not viol, n=n, weights_visited=count, violations=viol[:5])
    return out


def chk_L14(ctx):
    out = Outcome()
    for n in ctx.cfg.rank_range:
        dims = {f"D_{k}": fundamental_dim(k, n) for k in range(3, n + 1)}
        if n <= 3:
            # exceptional rank: D_3 is below the bound, so the claim is not made here
            out.add(fundamental_dim(3, 3) < sp_dim(3) if n == 3 else True,
                    n=n, excluded=True, dims=dims, bound=sp_dim(n))
            continue
        out.add(check_L14(n), n=n, dims=dims, bound=sp_dim(n))
    return out


def chk_C12_enum(ctx):
    out = Outcome()
    expected = {3: ["w1", "w2", "w3", "2w1"], 4: ["w1", "w2", "2w1"], 5: ["w1", "w2", "2w1"]}
    for n, exp in expected.items():
        got = [str(w) for w in enumerate_small_reps(n, "auto")]
        out.add(sorted(got) == sorted(exp), n=n, bound=sp_dim(n), found=got, expected=exp)
    for n in ctx.cfg.rank_range:
        if n >= 3:
            out.add(check_C12_exclusions(n), n=n,
                    dim_2w2=weyl_dim(DominantWeight((0, 2) + (0,) * (n - 2))),
                    dim_w1_w2=weyl_dim(DominantWeight((1, 1) + (0,) * (n - 2))), bound=sp_dim(n))
    return out


def chk_L11_dims(ctx):
    out = Outcome()
    for n in ctx.cfg.rank_range:
        if n < 3:
            continue
        d = fundamental_dim(2, n)
        out.add(check_L11_dims(n), n=n, dim_2w1=sp_dim(n),
                dim_w1_w3=weyl_dim(DominantWeight((1, 0, 1) + (0,) * (n - 3))),
                dim_wedge2_w2=d * (d - 1) // 2)
    return out


# -- algebra checks --------------------------------------------------------------

def chk_center_simple(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        L = ctx.sp(sig)
        lie, wit = is_lie_algebra(L)
        info = dict(signature=sig, dim=L.dim, expected_dim=sp_dim(sig.n), closed=L.is_closed,
                    center_dim=center(L).dim, jacobi=lie,
                    basis_in_sp=all(in_sp(X, sig) for X in L.basis))
        out.add(L.is_closed and L.dim == sp_dim(sig.n) and info["center_dim"] == 0
                and lie and info["basis_in_sp"], **info)
    for sig, v in ctx.cases():
        h = ctx.emb(sig, v).target
        cdim = center(h).dim
        out.add(cdim == 0, case=_label(sig, v), h=h.name, center_dim=cdim)
    return out


def chk_realforms_su(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        n = sig.n
        S = ctx.su(sig)
        L, d = S.algebra, S.algebra.dim
        sq = [[sum(S.sigma_matrix[a][b] * S.sigma_matrix[b][c] for b in range(d)) for c in range(d)]
              for a in range(d)]
        involutive = all(sq[a][c] == (1 if a == c else 0) for a in range(d) for c in range(d))
        sp_img = Subspace(d, [L.coords(quat_to_complex(X)) for X in ctx.sp(sig).basis])
        Jm, H = symplectic_matrix(sig), hermitian_matrix(sig)
        conditions = all((Y @ Jm + Jm @ Y.transpose()).is_zero()
                         and (Y.conj_transpose() @ H + H @ Y).is_zero()
                         for Y in (quat_to_complex(X) for X in ctx.sp(sig).basis))
        ww = bracket_span(L, S.parts["W0"], S.parts["W0"]).is_subspace_of(S.parts["sp"])
        dims = S.parts.dims()
        w2 = weyl_dim(DominantWeight.fundamental(2, n)) if n >= 2 else None
        info = dict(signature=sig, su_dim=d, dims=dims, sigma_squared_is_id=involutive,
                    sp_part_is_image=sp_img == S.parts["sp"], image_conditions=conditions,
                    W0_bracket_in_sp=ww, dim_V_w2=w2)
        out.add(d == 4 * n * n - 1 and dims == {"sp": sp_dim(n), "W0": n * (2 * n - 1) - 1}
                and S.parts.is_complete() and involutive and info["sp_part_is_image"]
                and conditions and ww and dims["W0"] == w2, **info)
    return out


def _random_complex_vector(rng, n2):
    return [GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n2)]


def chk_realforms_S(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        n2 = 2 * sig.n
        units = [[ONE if t == s else ZERO for t in range(n2)] for s in range(n2)]
        tr_ok = all(build_S_map(x, y, sig).trace() == omega_form(x, y, sig).scale(2)
                    for x in units for y in units)
        rng = ctx.rng(f"S:{sig}")
        anti = True
        for _ in range(5):
            x = _random_complex_vector(rng, n2)
            y = _random_complex_vector(rng, n2)
            # make omega(x, y) = 0 by correcting y along a basis vector
            c = omega_form(x, y, sig)
            t = next((t for t in range(n2) if omega_form(x, units[t], sig)), None)
            if t is not None and c:
                y = [q(v) for v in y]
                y[t] = y[t] - c * omega_form(x, units[t], sig).inverse()
            Sxy = build_S_map(x, y, sig)
            anti = anti and (sigma(Sxy, sig) == -Sxy) and not omega_form(x, y, sig)
        zero_diag = all(build_S_map(x, x, sig).is_zero() for x in units)
        out.add(tr_ok and anti and zero_diag, signature=sig, trace_is_2_omega=tr_ok,
                sigma_negates_isotropic=anti, diagonal_vanishes=zero_diag)
    return out


def _sylvester_negative(G):
    # negative definite iff leading minors alternate in sign starting negative
    n = len(G)
    for k in range(1, n + 1):
        M = [list(r[:k]) for r in G[:k]]
        det = _det(M)
        if (det < 0) != (k % 2 == 1) or det == 0:
            return False
    return True


def _det(M):
    M = [list(r) for r in M]
    n, det = len(M), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                for j in range(c, n):
                    M[r][j] -= f * M[c][j]
    return det


def chk_L16_so_decomp(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        D = ctx.so(sig)
        so, P = D.algebra, D.parts
        n = sig.n
        triple = close_and_structure([so.element(v) for v in P["sp1"].basis], name="sp1")
        gram = triple.gram() if triple.is_closed else None
        sp1_ok = triple.is_closed and center(triple).dim == 0 and _sylvester_negative(gram)
        commutes = bracket_span(so, P["sp1"], P["sp"]).dim == 0
        stable = {lab: bracket_span(so, P["sp"], P[lab]).is_subspace_of(P[lab])
                  for lab in ("V0", "V1", "V2")}
        dims = P.dims()
        expected = {"sp": sp_dim(n), "sp1": 3, "V0": n * (2 * n - 1) - 1,
                    "V1": n * (2 * n - 1) - 1, "V2": n * (2 * n - 1) - 1}
        out.add(so.dim == 2 * n * (4 * n - 1) and dims == expected and P.is_complete()
                and sp1_ok and commutes and all(stable.values()),
                signature=sig, so_dim=so.dim, dims=dims, complete=P.is_complete(),
                sp1_closes_compact=sp1_ok, sp1_commutes_with_sp=commutes, V_stable=stable)
    return out


def chk_L16_VsVs(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        D = ctx.so(sig)
        spans = {lab: bracket_span(D.algebra, D.parts[lab], D.parts[lab]) for lab in ("V0", "V1", "V2")}
        eq = {lab: S == D.parts["sp"] for lab, S in spans.items()}
        out.add(all(eq.values()), signature=sig, equals_sp=eq,
                dims={lab: S.dim for lab, S in spans.items()})
    return out


def chk_L16_T_maps(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        n2 = 2 * sig.n
        rng = ctx.rng(f"T:{sig}")
        G = MatrixQ.diag(real_metric_signs(sig))
        Jc = realify(MatrixQ.diag([I] * n2))

        def in_so(R):
            return (R.transpose() @ G + G @ R).is_zero()

        ok_zero = ok_u = ok_anti = True
        for _ in range(4):
            x = _random_complex_vector(rng, n2)
            y = _random_complex_vector(rng, n2)
            ok_zero = ok_zero and all(build_T_map(s, x, x, sig).is_zero() for s in ("T0", "T1", "T2"))
            T0 = build_T_map("T0", x, y, sig)
            ok_u = ok_u and in_so(T0) and (T0 @ Jc == Jc @ T0)
            T1 = build_T_map("T1", x, y, sig)
            ok_anti = ok_anti and in_so(T1) and (T1 @ Jc == -(Jc @ T1))
        real_basis = []
        for s in range(n2):
            for u in (ONE, I):
                v = [ZERO] * n2
                v[s] = u
                real_basis.append(v)
        flats = [build_T_map("T2", a, b, sig).flatten() for a, b in combinations(real_basis, 2)]
        r = rank(flats)
        target = sig.n * 2 * (4 * sig.n - 1)
        out.add(ok_zero and ok_u and ok_anti and r == target, signature=sig, self_wedge_zero=ok_zero,
                T0_in_u=ok_u, T1_antilinear_in_so=ok_anti, T2_rank=r, so_dim=target)
    return out


def chk_PA1_oracle(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        n4 = 4 * sig.n
        bad = []
        pairs = [(E.V_basis_vector(a), E.V_basis_vector(b)) for a in range(n4) for b in range(a + 1, n4)]
        rng = ctx.rng(f"PA1:{sig}:{v.value}")
        for _ in range(3):
            pairs.append(tuple([Quaternion(*(rng.randint(-2, 2) for _ in range(4))) for _ in range(sig.n)]
                               for _ in range(2)))
        for Z, W in pairs:
            g, k = omega_bracket(E, Z, W)
            cg, ck, cv = graded_commutator(E, Z, W)
            if g != cg or k != ck or any(cv):
                bad.append({"Z": Z, "W": W, "formula": [g, k], "commutator": [cg, ck]})
        self_zero = all(omega_bracket(E, E.V_basis_vector(a), E.V_basis_vector(a)) == (MatrixQ.zeros(sig.n), ZERO)
                        for a in range(n4))
        out.add(not bad and self_zero, case=_label(sig, v), pairs=len(pairs), mismatches=bad[:3],
                self_bracket_zero=self_zero)
    return out


def chk_PA1_omega_prime(ctx):
    out = Outcome()
    for sig in ctx.cfg.signatures:
        El = ctx.emb(sig, Variant.ADD_TO_L)
        Ek = ctx.emb(sig, Variant.ADD_TO_K)
        n4 = 4 * sig.n
        bad = []
        for a in range(n4):
            for b in range(a + 1, n4):
                Z, W = El.V_basis_vector(a), El.V_basis_vector(b)
                g, k = omega_bracket(El, Z, W)
                cg, ck, _ = graded_commutator(Ek, Z, W)
                if cg != -g or ck != -k:
                    bad.append({"pair": [a, b], "omega": [g, k], "omega_prime": [cg, ck]})
        out.add(not bad, signature=sig, pairs=n4 * (n4 - 1) // 2, mismatches=bad[:3])
    return out


def _witness_block(E, M):
    n, slot = E.sig.n, witness_slot(E)
    if E.variant == Variant.ADD_TO_L:
        p, r = slot, n
    else:
        p, r = slot + 1, 0
    return (p, r), MatrixQ.from_rows([[M[p, p], M[p, r]], [M[r, p], M[r, r]]])


def chk_PA2_jacobiator(ctx):
    out = Outcome()
    lit = [MatrixQ.from_rows([[ZERO, ONE], [-ONE, ZERO]]),
           MatrixQ.from_rows([[ZERO, I], [I, ZERO]]),
           MatrixQ.from_rows([[ZERO, J], [J, ZERO]])]
    for sig, v in ctx.cases():
        E, m = ctx.emb(sig, v), ctx.m(sig, v)
        mats = [E.embed_V(Z) for Z in witness_triple(E)]
        (p, r), _ = _witness_block(E, mats[0])
        # rows/columns of the 2 x 2 block in ascending index order
        lo, hi = sorted((p, r))
        blocks = [MatrixQ.from_rows([[M[lo, lo], M[lo, hi]], [M[hi, lo], M[hi, hi]]]) for M in mats]
        literal = blocks == lit
        X, Y, Z = (m.from_ambient(E.coords_of(M)) for M in mats)
        br = m.bracket
        terms = [br(br(Y, Z), X), br(br(X, Y), Z), br(br(Z, X), Y)]
        term_mats = [E.target.element(m.to_ambient(t)) for t in terms]
        jac = E.target.element(m.to_ambient(jacobiator(m, X, Y, Z)))
        T = term_mats[0]
        two_k = K.scale(2)
        support = {pos for pos, _ in T.nonzero()}
        block_ok = (T[p, r] in (two_k, -two_k) and T[r, p] in (two_k, -two_k)
                    and support == {(p, r), (r, p)})
        equal_terms = term_mats[0] == term_mats[1] == term_mats[2]
        out.add(literal and block_ok and equal_terms and not jac.is_zero() and jac == T.scale(3),
                case=_label(sig, v), slot=witness_slot(E), positions=[[p, r], [r, p]],
                literal_blocks=literal, term_block=[T[p, r], T[r, p]], terms_equal=equal_terms,
                jacobiator_block=[jac[p, r], jac[r, p]])
    return out


def chk_CA1_m_not_lie(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        m = ctx.m(sig, v)
        lie, wit = is_lie_algebra(m)
        out.add(not lie and wit is not None, case=_label(sig, v), m_dim=m.dim, witness=wit)
    return out


def chk_LA1_grid(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        non_lie, wrong = [], []
        for r in RS_GRID:
            for s in RS_GRID:
                lie, _ = is_lie_algebra(build_h_rs(E, r, s))
                if not lie:
                    non_lie.append([r, s])
                if lie != (r == s):
                    wrong.append([r, s])
        out.add(not wrong, case=_label(sig, v), non_lie_pairs=len(non_lie), wrong=wrong,
                diagonal_lie=[[r, r] for r in RS_GRID if [r, r] not in non_lie])
    return out


def chk_LA1_phi(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        res = {}
        for t in PHI_SCALES:
            _, ok, fails = phi_rescale_iso(E, t)
            res[str(t)] = {"iso": ok, "failures": fails[:3]}
        out.add(all(x["iso"] for x in res.values()), case=_label(sig, v), scales=res)
    return out


def chk_B_orthogonality(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        defects = E.parts.orthogonality_defects(E.target.trace_form)
        nondeg = {}
        for lab in ("g", "k", "V"):
            try:
                orthogonal_projector(E.target, E.parts[lab])
                nondeg[lab] = True
            except ValueError:
                nondeg[lab] = False
        out.add(not defects and all(nondeg.values()) and E.parts.is_complete(),
                case=_label(sig, v), dims=E.parts.dims(), defects=defects[:5], nondegenerate=nondeg)
    return out


def chk_R14_forms(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        h, g, V = E.target, E.parts["g"], E.parts["V"]
        F = invariant_symmetric_forms(h, V, acting=g)
        trace_in = F.contains(form_coords(trace_form_on(h, V)))
        M = m_subspace(E)
        F2 = invariant_symmetric_forms(h, M, acting=g)
        gset = set(E.g_index)
        in_g = [p in gset for p in M.pivots]
        cross = []
        for b in F2.basis:
            B = form_matrix(b, M.dim)
            cross += [(s, t) for s in range(M.dim) for t in range(M.dim)
                      if in_g[s] and not in_g[t] and B[s][t]]
        out.add(F.dim == 1 and trace_in and not cross, case=_label(sig, v), forms_on_p=F.dim,
                trace_form_contained=trace_in, forms_on_g_plus_p=F2.dim, cross_entries=cross[:5])
    return out


def _ad_span(E, m, indices):
    project = orthogonal_projector(E.target, m.m_basis)
    vecs = [endomorphism_coords(restricted_ad(E, m, {a: 1}, project)) for a in indices]
    return Subspace(m.dim ** 2, vecs)


def chk_P33_der_m(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E, m = ctx.emb(sig, v), ctx.m(sig, v)
        D = ctx.der(sig, v)
        inner = _ad_span(E, m, E.g_index + E.k_index)
        expected = sp_dim(sig.n) + 3
        out.add(D == inner and D.dim == expected, case=_label(sig, v), der_dim=D.dim,
                ad_dim=inner.dim, expected=expected, unknowns=m.dim ** 2)
    return out


def chk_L32_p_derivations(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E, m = ctx.emb(sig, v), ctx.m(sig, v)
        D = ctx.der(sig, v)
        project = orthogonal_projector(E.target, m.m_basis)
        resid = [D.reduce(endomorphism_coords(restricted_ad(E, m, {a: 1}, project))) for a in E.V_index]
        rows = [{i: r[c] for i, r in enumerate(resid) if r[c]} for c in range(m.dim ** 2)]
        sol = kernel([r for r in rows if r], ncols=len(resid))
        out.add(sol.dim == 0, case=_label(sig, v), solution_dim=sol.dim, p_dim=len(resid))
    return out


def chk_RA1_sympair(ctx):
    out = Outcome()
    for sig, v in ctx.cases():
        E = ctx.emb(sig, v)
        h, P = E.target, E.parts
        ok, det = symmetric_pair_check(h, P["g"] + P["k"], P["V"])
        trivial, _ = symmetric_pair_check(h, Subspace.full(h.dim), Subspace.zero(h.dim))
        wrong, wdet = symmetric_pair_check(h, P["g"], P["k"] + P["V"])
        out.add(ok and trivial and not wrong, case=_label(sig, v), g_plus_k=det,
                whole_vs_zero=trivial, g_alone=wdet)
    return out


REGISTRY = {
    "WDF-closed-forms": ("Weyl dimension product matches the closed forms and D_k^n", chk_wdf_closed_forms),
    "WDF-monotonicity": ("Dimension strictly increases when a fundamental weight is added", chk_wdf_monotonicity),
    "L1.4": ("dim V(w_k) exceeds n(2n+1) for 3 <= k <= n when n > 3", chk_L14),
    "C1.2-enum": ("Nontrivial irreducibles of dimension at most n(2n+1)", chk_C12_enum),
    "L1.1-dims": ("dim V(2w_1) + dim V(w_1+w_3) = dim of the second exterior power of V(w_2)", chk_L11_dims),
    "center-simple": ("sp(k,l) is closed of dimension n(2n+1) with trivial center", chk_center_simple),
    "realforms-su": ("su(2k,2l) splits into sp(k,l) and W_0 under sigma", chk_realforms_su),
    "realforms-S-map": ("S maps: trace is twice omega and sigma negates S", chk_realforms_S),
    "L1.6-so-decomp": ("so(4k,4l) = sp(k,l) + sp(1) + V_0 + V_1 + V_2", chk_L16_so_decomp),
    "L1.6-VsVs": ("Brackets of each V_s span sp(k,l)", chk_L16_VsVs),
    "L1.6-T-maps": ("T maps: antisymmetry, unitarity of T^0, T^2 spans so(4k,4l)", chk_L16_T_maps),
    "PA.1-oracle": ("Closed-form bracket of V equals the graded ambient commutator", chk_PA1_oracle),
    "PA.1-omega-prime": ("Bracket of the second inclusion is minus that of the first", chk_PA1_omega_prime),
    "PA.2-jacobiator": ("Witness triple has a nonzero Jacobiator built from +-2k blocks", chk_PA2_jacobiator),
    "CA.1-m-not-lie": ("The projected bracket on m violates Jacobi", chk_CA1_m_not_lie),
    "LA.1-grid": ("h_{r,s} is a Lie algebra exactly when r = s", chk_LA1_grid),
    "LA.1-phi": ("X + v -> X + t v is an isomorphism h_{t^2,t^2} -> h", chk_LA1_phi),
    "B-orthogonality": ("g, k and V are trace-form orthogonal and nondegenerate", chk_B_orthogonality),
    "R1.4-forms": ("Invariant symmetric forms on p and on g + p", chk_R14_forms),
    "L3.2-p-derivations": ("No nonzero x in p has a derivation as restricted ad", chk_L32_p_derivations),
    "P3.3-der-m": ("Der(m) equals the restricted ad of g + k", chk_P33_der_m),
    "RA.1-sympair": ("(h, g + k) is a symmetric pair", chk_RA1_sympair),
}


def registry() -> list:
    return [(cid, desc) for cid, (desc, _) in REGISTRY.items()]


def run_check(cid, ctx) -> CheckResult:
    desc, fn = REGISTRY[cid]
    t0 = time.perf_counter()
    try:
        res = fn(ctx)
        status = Status.PASS if res.ok else Status.FAIL
        witness = {"cases": res.cases}
    except Exception as exc:  # a broken check is a failed check, not a crashed run
        status = Status.FAIL
        witness = {"error": f"{type(exc).__name__}: {exc}"}
    if status == Status.PASS and not witness.get("cases"):
        status, witness = Status.SKIPPED, {"reason": "no applicable cases in this configuration"}
    ms = int((time.perf_counter() - t0) * 1000)
    return CheckResult(cid, desc, status, witness, ms)


def run_checks(cfg: RunConfig, progress=None) -> list:
    ctx = Context(cfg)
    results = []
    for cid in cfg.selected():
        res = run_check(cid, ctx)
        if progress:
            progress(res)
        results.append(res)
    return results


def build_report(cfg: RunConfig, results) -> dict:
    summary = {s.value: sum(r.status == s for r in results) for s in Status}
    return {"config": cfg.to_json(),
            "results": [r.to_json(timings=cfg.timings) for r in results],
            "summary": summary}


def report_json(cfg: RunConfig, results) -> str:
    return json.dumps(build_report(cfg, results), indent=2, sort_keys=False) + "\n"


def all_passed(results) -> bool:
    return all(r.status == Status.PASS for r in results)
