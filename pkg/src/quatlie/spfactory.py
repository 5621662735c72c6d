"""Concrete symplectic, unitary and orthogonal algebras and their embeddings.

All matrices are exact. Quaternionic vectors ``Z`` in ``H^{k,l}`` are lists
of ``n = k + l`` quaternions; complex vectors in ``C^{2k,2l}`` are lists of
``2n`` complex scalars ordered ``(e_1..e_n, e^1..e^n)``; real vectors in
``C^{2k,2l}_R`` use the ordered basis ``(e_s, e^s, i e_s, i e^s)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .liecore import (GradedDecomposition, LieAlgebra, NonAssocAlgebra,
                      close_and_structure, orthogonal_projector,
                      projected_algebra, symmetric_pair_check)
from .qlinalg import (MatrixQ, Subspace, kernel, quat_to_complex,
                      re_trace_form, realify, realify_antilinear,
                      signature_matrix)
from .scalars import (I, IMAGINARY_UNITS, J, ONE, UNITS, ZERO, Quaternion,
                      as_rational, q)


@dataclass(frozen=True)
class Signature:
    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0 or self.k + self.l < 1:
            raise ValueError(f"invalid signature ({self.k},{self.l}): need k,l >= 0 and k+l >= 1")

    @property
    def n(self) -> int:
        return self.k + self.l

    @property
    def signs(self) -> list:
        return [1] * self.k + [-1] * self.l

    def matrix(self) -> MatrixQ:
        return signature_matrix(self.k, self.l)

    def __str__(self):
        return f"{self.k},{self.l}"

    @classmethod
    def parse(cls, text: str) -> "Signature":
        try:
            k, l = (int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"signature must look like 'k,l', got {text!r}") from None
        return cls(k, l)


class Variant(str, Enum):
    ADD_TO_L = "add_to_l"  # h = sp(k, l+1)
    ADD_TO_K = "add_to_k"  # h = sp(k+1, l)


# -- sp(k,l) ----------------------------------------------------------------

def sp_basis(sig: Signature) -> list:
    """Basis of ``{X : X* I_{k,l} + I_{k,l} X = 0}`` over the reals."""
    n, eps = sig.n, sig.signs
    basis = []
    for s in range(n):
        for u in IMAGINARY_UNITS:
            basis.append(MatrixQ.unit(n, n, s, s, u))
    for a in range(n):
        for b in range(a + 1, n):
            for u in UNITS:
                ent = [ZERO] * (n * n)
                ent[a * n + b] = u
                ent[b * n + a] = u.conj().scale(-eps[a] * eps[b])
                basis.append(MatrixQ(n, n, ent))
    return basis


def in_sp(X: MatrixQ, sig: Signature) -> bool:
    Ikl = sig.matrix()
    return (X.conj_transpose() @ Ikl + Ikl @ X).is_zero()


def build_sp(sig: Signature) -> LieAlgebra:
    return close_and_structure(sp_basis(sig), name=f"sp({sig.k},{sig.l})")


# -- su(2k,2l) and the involution sigma ---------------------------------------

def hermitian_matrix(sig: Signature) -> MatrixQ:
    """Gram matrix of ``<x, y>`` on ``C^{2k,2l}``: ``diag(I_{k,l}, I_{k,l})``."""
    return MatrixQ.diag(sig.signs + sig.signs)


def symplectic_matrix(sig: Signature) -> MatrixQ:
    """``J_{k,l}`` with ``omega(x, y) = x^t J_{k,l} y``."""
    Ikl = sig.matrix()
    Z = MatrixQ.zeros(sig.n)
    return MatrixQ.from_blocks([[Z, Ikl], [-Ikl, Z]])


def sigma(X: MatrixQ, sig: Signature) -> MatrixQ:
    """``X -> J_{k,l} X^t J_{k,l}`` (plain transpose)."""
    Jm = symplectic_matrix(sig)
    return Jm @ X.transpose() @ Jm


def su_basis(sig: Signature) -> list:
    N = 2 * sig.n
    h = sig.signs + sig.signs
    iq = q(I)
    basis = []
    for a in range(N - 1):
        ent = [ZERO] * (N * N)
        ent[a * N + a] = iq
        ent[(a + 1) * N + a + 1] = -iq
        basis.append(MatrixQ(N, N, ent))
    for a in range(N):
        for b in range(a + 1, N):
            for u in (ONE, I):
                ent = [ZERO] * (N * N)
                ent[a * N + b] = u
                ent[b * N + a] = u.conj().scale(-h[a] * h[b])
                basis.append(MatrixQ(N, N, ent))
    return basis


@dataclass
class SuSplit:
    algebra: LieAlgebra
    parts: GradedDecomposition  # labels "sp" (+1 eigenspace) and "W0" (-1 eigenspace)
    sigma_matrix: list  # sigma in su coordinates, columns = images of basis vectors


def build_su(sig: Signature) -> SuSplit:
    """``su(2k,2l)`` split into the ``+1`` and ``-1`` eigenspaces of sigma."""
    L = close_and_structure(su_basis(sig), name=f"su({2 * sig.k},{2 * sig.l})")
    d = L.dim
    S = [[Fraction(0)] * d for _ in range(d)]
    for a, X in enumerate(L.basis):
        c = L.coords(sigma(X, sig))
        if c is None:
            raise ValueError("sigma does not preserve su(2k,2l)")
        for e in range(d):
            S[e][a] = c[e]
    plus = kernel([[S[e][a] - (1 if a == e else 0) for a in range(d)] for e in range(d)])
    minus = kernel([[S[e][a] + (1 if a == e else 0) for a in range(d)] for e in range(d)])
    parts = GradedDecomposition(L, {"sp": plus, "W0": minus})
    return SuSplit(L, parts, S)


# -- so(4k,4l) -----------------------------------------------------------------

def real_metric_signs(sig: Signature) -> list:
    """Signs of ``Re<x, y>`` on the real basis ``(e_s, e^s, i e_s, i e^s)``."""
    return sig.signs * 4


def so_basis(sig: Signature) -> list:
    g = real_metric_signs(sig)
    N = len(g)
    basis = []
    for a in range(N):
        for b in range(a + 1, N):
            ent = [ZERO] * (N * N)
            ent[a * N + b] = ONE
            ent[b * N + a] = q(-g[a] * g[b])
            basis.append(MatrixQ(N, N, ent))
    return basis


def build_so(sig: Signature) -> LieAlgebra:
    return close_and_structure(so_basis(sig), name=f"so({4 * sig.k},{4 * sig.l})")


def sp1_triple(n: int) -> list:
    """Right multiplications by ``-i``, ``j`` and the third unit, on ``C^{2n}_R``.

    Real ``4n x 4n`` matrices in the basis ``(e_s, e^s, i e_s, i e^s)``.
    """
    Id, Z = MatrixQ.identity(n), MatrixQ.zeros(n)
    I2 = MatrixQ.identity(2 * n)
    Z2 = MatrixQ.zeros(2 * n)
    m1 = MatrixQ.from_blocks([[Z2, I2], [-I2, Z2]])
    m2 = MatrixQ.from_blocks([[Z, -Id, Z, Z], [Id, Z, Z, Z], [Z, Z, Z, Id], [Z, Z, -Id, Z]])
    m3 = MatrixQ.from_blocks([[Z, Z, Z, Id], [Z, Z, -Id, Z], [Z, Id, Z, Z], [-Id, Z, Z, Z]])
    return [m1, m2, m3]


def _cvec(v) -> list:
    out = []
    for x in v:
        x = q(x)
        if x.im_j or x.im_k:
            raise ValueError("complex vector entries must have zero j and k parts")
        out.append(x)
    return out


def _outer(x, y) -> MatrixQ:
    return MatrixQ(len(x), len(y), [a * b for a in x for b in y])


def wedge_matrix(x, y) -> MatrixQ:
    """Antisymmetric matrix ``y x^t - x y^t`` representing ``x ^ y``."""
    x, y = _cvec(x), _cvec(y)
    return _outer(y, x) - _outer(x, y)


def build_S_map(x, y, sig: Signature) -> MatrixQ:
    """``S_{x^y}(z) = omega(x,z) y - omega(y,z) x`` as a complex ``2n x 2n`` matrix."""
    return wedge_matrix(x, y) @ symplectic_matrix(sig)


def S_from_wedge(A: MatrixQ, sig: Signature) -> MatrixQ:
    return A @ symplectic_matrix(sig)


def T1_from_wedge(A: MatrixQ, sig: Signature) -> MatrixQ:
    """Real matrix of ``z -> A H conj(z)``, the antilinear map ``T^1`` of the wedge ``A``."""
    return realify_antilinear(A @ hermitian_matrix(sig))


def build_T_map(variant: str, x, y, sig: Signature) -> MatrixQ:
    """Real ``4n x 4n`` matrix of ``T^s_{x^y}(z) = B_s(x,z) y - B_s(y,z) x``.

    ``B_0(x,z) = <x,z>``, ``B_1(x,z) = <z,x>`` and ``B_2(x,z) = Re<x,z>``
    where ``<x,y> = sum eps_s conj(x) y`` is conjugate-linear in ``x``.
    """
    x, y = _cvec(x), _cvec(y)
    H = hermitian_matrix(sig)
    if variant == "T0":
        xs = [v.conj() for v in x]
        ys = [v.conj() for v in y]
        return realify((_outer(y, xs) - _outer(x, ys)) @ H)
    if variant == "T1":
        return T1_from_wedge(wedge_matrix(x, y), sig)
    if variant == "T2":
        X, Y = complex_to_real_vector(x), complex_to_real_vector(y)
        G = MatrixQ.diag(real_metric_signs(sig))
        return (_outer(Y, X) - _outer(X, Y)) @ G
    raise ValueError(f"unknown T variant {variant!r}")


def complex_to_real_vector(x) -> list:
    x = _cvec(x)
    return [q(v.re) for v in x] + [q(v.im_i) for v in x]


def hermitian_product(x, y, sig: Signature) -> Quaternion:
    """``<x, y> = sum eps_s (conj(x_s) y_s + conj(x^s) y^s)``."""
    h = sig.signs + sig.signs
    total = ZERO
    for e, a, b in zip(h, _cvec(x), _cvec(y)):
        total = total + (a.conj() * b).scale(e)
    return total


def omega_form(x, y, sig: Signature) -> Quaternion:
    n = sig.n
    x, y = _cvec(x), _cvec(y)
    total = ZERO
    for s, e in enumerate(sig.signs):
        total = total + (x[s] * y[n + s] - x[n + s] * y[s]).scale(e)
    return total


@dataclass
class SoDecomposition:
    algebra: LieAlgebra
    parts: GradedDecomposition  # labels sp, sp1, V0, V1, V2
    su: SuSplit
    wedges: list = field(default_factory=list)  # antisymmetric matrices spanning the real form W_0


def build_so_decomposition(sig: Signature) -> SoDecomposition:
    """``so(4k,4l) = sp(k,l) + sp(1) + V_0 + V_1 + V_2`` as subspaces.

    ``V_0`` is the realification of the ``-1`` eigenspace of sigma in
    ``su(2k,2l)``; writing each of its elements as ``S`` of a wedge ``A``
    (``X = A J_{k,l}``), ``V_1`` and ``V_2`` are ``T^1`` of ``A`` and ``iA``.
    """
    if sig.n < 2:
        raise ValueError("so decomposition needs k + l >= 2")
    so = build_so(sig)
    su = build_su(sig)
    sp = build_sp(sig)
    Jm = symplectic_matrix(sig)

    def so_coords(M):
        c = so.coords(M)
        if c is None:
            raise ValueError("matrix is not in so(4k,4l)")
        return c

    sp_part = Subspace(so.dim, [so_coords(realify(quat_to_complex(X))) for X in sp.basis])
    sp1_part = Subspace(so.dim, [so_coords(M) for M in sp1_triple(sig.n)])
    wedges, v0, v1, v2 = [], [], [], []
    iq = q(I)
    for w in su.parts["W0"].basis:
        X = su.algebra.element(w)
        A = -(X @ Jm)  # J^{-1} = -J
        if A.transpose() != -A:
            raise AssertionError("sigma(-1) element is not S of a wedge")
        wedges.append(A)
        v0.append(so_coords(realify(X)))
        v1.append(so_coords(T1_from_wedge(A, sig)))
        v2.append(so_coords(T1_from_wedge(A.left_scalar(iq), sig)))
    parts = {
        "sp": sp_part,
        "sp1": sp1_part,
        "V0": Subspace(so.dim, v0),
        "V1": Subspace(so.dim, v1),
        "V2": Subspace(so.dim, v2),
    }
    return SoDecomposition(so, GradedDecomposition(so, parts), su, wedges)


# -- embeddings sp(k,l) + sp(1) + H^{k,l} into h --------------------------------

@dataclass
class EmbeddingData:
    sig: Signature
    variant: Variant
    target: LieAlgebra  # basis adapted to g, k, V (in that order)
    parts: GradedDecomposition
    g_algebra: LieAlgebra
    g_index: list
    k_index: list
    V_index: list

    @property
    def h_signature(self) -> Signature:
        if self.variant == Variant.ADD_TO_L:
            return Signature(self.sig.k, self.sig.l + 1)
        return Signature(self.sig.k + 1, self.sig.l)

    def embed_g(self, X: MatrixQ) -> MatrixQ:
        return embed_triple(self.sig, self.variant, X=X)

    def embed_k(self, zeta) -> MatrixQ:
        return embed_triple(self.sig, self.variant, zeta=zeta)

    def embed_V(self, Z) -> MatrixQ:
        return embed_triple(self.sig, self.variant, Z=Z)

    def g_block(self, M: MatrixQ) -> MatrixQ:
        n = self.sig.n
        return M.block(0, n, 0, n) if self.variant == Variant.ADD_TO_L else M.block(1, n + 1, 1, n + 1)

    def k_entry(self, M: MatrixQ) -> Quaternion:
        n = self.sig.n
        return M[n, n] if self.variant == Variant.ADD_TO_L else M[0, 0]

    def V_vector(self, M: MatrixQ) -> list:
        """Recover ``Z`` from the off-diagonal blocks of an element of V."""
        n = self.sig.n
        if self.variant == Variant.ADD_TO_L:
            return [-M[a, n] for a in range(n)]
        return [M[a + 1, 0] for a in range(n)]

    def V_basis_vector(self, idx: int) -> list:
        """Quaternion vector ``Z`` of the V basis element number ``idx``."""
        a, u = divmod(idx, 4)
        Z = [ZERO] * self.sig.n
        Z[a] = UNITS[u]
        return Z

    def coords_of(self, M: MatrixQ) -> list:
        c = self.target.coords(M)
        if c is None:
            raise ValueError("matrix is not in h")
        return c


def embed_triple(sig: Signature, variant, X=None, zeta=None, Z=None) -> MatrixQ:
    """Block matrix of ``(X, zeta, Z)`` under the chosen inclusion.

    ``add_to_l``: ``[[X, -Z], [Z0*, zeta]]`` in ``sp(k,l+1)``;
    ``add_to_k``: ``[[zeta, Z0*], [Z, X]]`` in ``sp(k+1,l)``; ``Z0 = -I_{k,l} Z``.
    """
    variant = Variant(variant)
    n = sig.n
    N = n + 1
    ent = [ZERO] * (N * N)
    off = 0 if variant == Variant.ADD_TO_L else 1
    if X is not None:
        for (a, b), v in X.nonzero():
            ent[(a + off) * N + b + off] = v
    if zeta is not None:
        pos = n if variant == Variant.ADD_TO_L else 0
        ent[pos * N + pos] = q(zeta)
    if Z is not None:
        Z = [q(z) for z in Z]
        # Z0* is the row vector with entries conj(-eps_a Z_a)
        z0s = [z.conj().scale(-e) for z, e in zip(Z, sig.signs)]
        for a in range(n):
            if variant == Variant.ADD_TO_L:
                ent[a * N + n] = -Z[a]
                ent[n * N + a] = z0s[a]
            else:
                ent[(a + 1) * N] = Z[a]
                ent[a + 1] = z0s[a]
    return MatrixQ(N, N, ent)


def build_embedding(sig: Signature, variant) -> EmbeddingData:
    """``h = g + k + V`` with ``g = sp(k,l)``, ``k = sp(1)``, ``V = H^{k,l}``.

    Raises ``AssertionError`` if any structural invariant fails (dimensions,
    trace-form orthogonality, symmetric pair).
    """
    variant = Variant(variant)
    n = sig.n
    g_alg = build_sp(sig)
    mats = [embed_triple(sig, variant, X=X) for X in g_alg.basis]
    mats += [embed_triple(sig, variant, zeta=u) for u in IMAGINARY_UNITS]
    for a in range(n):
        for u in UNITS:
            Z = [ZERO] * n
            Z[a] = u
            mats.append(embed_triple(sig, variant, Z=Z))
    hs = Signature(sig.k, sig.l + 1) if variant == Variant.ADD_TO_L else Signature(sig.k + 1, sig.l)
    target = close_and_structure(mats, name=f"sp({hs.k},{hs.l})")
    dg = g_alg.dim
    g_idx = list(range(dg))
    k_idx = list(range(dg, dg + 3))
    V_idx = list(range(dg + 3, dg + 3 + 4 * n))
    d = target.dim
    parts = GradedDecomposition(target, {
        "g": Subspace.coordinate(d, g_idx),
        "k": Subspace.coordinate(d, k_idx),
        "V": Subspace.coordinate(d, V_idx),
    }, orthogonal=True)
    E = EmbeddingData(sig, variant, target, parts, g_alg, g_idx, k_idx, V_idx)
    _verify_embedding(E)
    return E


def _verify_embedding(E: EmbeddingData):
    n = E.sig.n
    assert E.target.is_closed, "embedded basis is not closed under brackets"
    assert E.parts.dims() == {"g": n * (2 * n + 1), "k": 3, "V": 4 * n}
    assert E.parts.is_complete()
    assert not E.parts.orthogonality_defects(E.target.trace_form), "decomposition not trace-form orthogonal"
    t = E.parts["g"] + E.parts["k"]
    ok, _ = symmetric_pair_check(E.target, t, E.parts["V"])
    assert ok, "(h, g + k) is not a symmetric pair"


def omega_bracket(E: EmbeddingData, Z, W):
    """Closed-form bracket of two elements of V, returned as ``(g_part, k_part)``.

    ``g_part = W Z0* - Z W0*`` (``n x n``) and ``k_part = W0* Z - Z0* W``,
    with ``Z0 = -I_{k,l} Z``. The ``add_to_k`` inclusion carries the
    opposite overall sign.
    """
    sig = E.sig
    Z = [q(z) for z in Z]
    W = [q(w) for w in W]
    Z0s = [z.conj().scale(-e) for z, e in zip(Z, sig.signs)]
    W0s = [w.conj().scale(-e) for w, e in zip(W, sig.signs)]
    n = sig.n
    g = MatrixQ(n, n, [W[a] * Z0s[b] - Z[a] * W0s[b] for a in range(n) for b in range(n)])
    kp = ZERO
    for a in range(n):
        kp = kp + W0s[a] * Z[a] - Z0s[a] * W[a]
    if E.variant == Variant.ADD_TO_K:
        return -g, -kp
    return g, kp


def graded_commutator(E: EmbeddingData, Z, W):
    """Ambient commutator ``[iota(Z), iota(W)]`` split along ``g + k + V``.

    Returns ``(g_part, k_part, V_part)`` as matrices ``n x n``, a quaternion
    and the V coordinates (which vanish for a symmetric pair).
    """
    C = E.embed_V(Z) @ E.embed_V(W) - E.embed_V(W) @ E.embed_V(Z)
    comps = E.parts.components(E.coords_of(C))
    g_mat = E.g_block(E.target.element(comps["g"]))
    k_val = E.k_entry(E.target.element(comps["k"]))
    return g_mat, k_val, [comps["V"][i] for i in E.V_index]


def build_h_rs(E: EmbeddingData, r, s) -> NonAssocAlgebra:
    """``h_{r,s}``: the bracket of h with ``V x V -> g + k`` replaced by ``r*Omega_g + s*Omega_k``."""
    r, s = as_rational(r), as_rational(s)
    h = E.target
    Vset, gset, kset = set(E.V_index), set(E.g_index), set(E.k_index)
    product = {}
    for (a, b), vec in h.product.items():
        if a in Vset and b in Vset:
            new = {}
            for c, x in vec.items():
                if c in gset:
                    new[c] = r * x
                elif c in kset:
                    new[c] = s * x
                else:
                    new[c] = x
            product[(a, b)] = new
        else:
            product[(a, b)] = vec
    return NonAssocAlgebra(f"h_{{{r},{s}}}", h, Subspace.full(h.dim), product)


def phi_rescale_iso(E: EmbeddingData, t):
    """Map ``X + v -> X + t v`` and whether it is an isomorphism ``h_{t^2,t^2} -> h``.

    Returns ``(diagonal, ok, failures)``; ``diagonal[a]`` scales basis vector ``a``.
    """
    t = as_rational(t)
    if t == 0:
        raise ValueError("rescaling parameter must be nonzero")
    h = E.target
    hrr = build_h_rs(E, t * t, t * t)
    Vset = set(E.V_index)
    diag = [t if a in Vset else Fraction(1) for a in range(h.dim)]
    failures = []
    for a in range(h.dim):
        for b in range(a + 1, h.dim):
            lhs = {c: diag[c] * x for c, x in hrr.bracket_basis(a, b).items()}
            rhs = {c: diag[a] * diag[b] * x for c, x in h.bracket_basis(a, b).items()}
            if lhs != rhs:
                failures.append((a, b))
    return diag, not failures, failures


def m_subspace(E: EmbeddingData) -> Subspace:
    return E.parts["g"] + E.parts["V"]


def build_m_algebra(E: EmbeddingData) -> NonAssocAlgebra:
    """``m = g + V`` with the bracket of h followed by orthogonal projection onto m."""
    h = E.target
    for label, S in (("k", E.parts["k"]), ("m", m_subspace(E))):
        try:
            orthogonal_projector(h, S)
        except ValueError:
            raise ValueError(f"trace form degenerate on {label}") from None
    return projected_algebra(f"m[{h.name}]", h, m_subspace(E))


def restricted_ad(E: EmbeddingData, m: NonAssocAlgebra, x, project=None) -> list:
    """Matrix of ``y -> [x, y]_m`` on m for an ambient vector ``x``.

    ``project`` may pass in a precomputed projector onto m.
    """
    if project is None:
        project = orthogonal_projector(E.target, m.m_basis)
    d = m.dim
    M = [[Fraction(0)] * d for _ in range(d)]
    for b in range(d):
        img = project(E.target.bracket(x, m.to_ambient({b: 1})))
        for c, v in enumerate(img):
            M[c][b] = v
    return M


def witness_slot(E: EmbeddingData) -> int:
    """Slot whose sign makes the 2 x 2 block on (slot, added index) definite.

    ``add_to_l`` prefers a negative slot (block signature ``(0, 2)``) and
    ``add_to_k`` a positive one (block signature ``(2, 0)``).
    """
    signs = E.sig.signs
    want = -1 if E.variant == Variant.ADD_TO_L else 1
    return signs.index(want) if want in signs else 0


def witness_triple(E: EmbeddingData, slot: int = None):
    """Three vectors of V supported on one quaternion slot.

    On the preferred slot their 2 x 2 blocks are ``[[0,1],[-1,0]]``,
    ``[[0,i],[i,0]]`` and ``[[0,j],[j,0]]`` (rows/columns ordered as in h).
    """
    if slot is None:
        slot = witness_slot(E)
    n = E.sig.n
    if E.variant == Variant.ADD_TO_L:
        units = (-ONE, -I, -J)
    else:
        units = (-ONE, I, J)
    out = []
    for u in units:
        Z = [ZERO] * n
        Z[slot] = u
        out.append(Z)
    return out


def trace_form_on(L: LieAlgebra, S: Subspace) -> list:
    """Gram matrix of ``Re tr`` on the echelon basis of ``S``."""
    mats = [L.element(v) for v in S.basis]
    return [[re_trace_form(A, B) for B in mats] for A in mats]
