"""Finite-dimensional algebras given by exact structure constants.

An algebra of dimension ``d`` is stored as a sparse product table
``product[(a, b)] = {c: coeff}`` meaning ``[x_a, x_b] = sum coeff * x_c``.
Only nonzero entries are stored; the table is kept for every ordered pair
so that lookups never need the antisymmetry rule.

Endomorphisms are ``d x d`` matrices acting on coordinate columns and are
flattened row-major: entry ``T[e][a]`` (the ``x_e`` component of ``T x_a``)
sits at index ``e*d + a``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .qlinalg import (DimensionError, MatrixQ, SpanSolver, Subspace, commutator,
                      kernel, re_trace_form, rref)
from .scalars import format_rational, parse_rational


class NotClosedError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class NotStableError(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def _add_into(acc: dict, vec: dict, coeff):
    for c, x in vec.items():
        v = acc.get(c, 0) + coeff * x
        if v:
            acc[c] = v
        else:
            acc.pop(c, None)


def _sparse(v) -> dict:
    if isinstance(v, dict):
        return {c: Fraction(x) for c, x in v.items() if x}
    return {c: Fraction(x) for c, x in enumerate(v) if x}


class StructureAlgebra:
    """Antisymmetric bilinear algebra on ``Q^d`` given by a product table."""

    def __init__(self, name: str, dim: int, product: dict):
        self.name = name
        self.dim = dim
        self.product = {}
        for (a, b), vec in product.items():
            vec = {c: Fraction(x) for c, x in vec.items() if x}
            if vec:
                self.product[(a, b)] = vec
        self._right = None

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r}, dim={self.dim})"

    def bracket_basis(self, a: int, b: int) -> dict:
        return self.product.get((a, b), {})

    def bracket(self, x, y) -> dict:
        """Product of two coordinate vectors, returned sparse."""
        x, y = _sparse(x), _sparse(y)
        out = {}
        for a, xa in x.items():
            for b, yb in y.items():
                vec = self.product.get((a, b))
                if vec:
                    _add_into(out, vec, xa * yb)
        return out

    def dense(self, v) -> list:
        out = [Fraction(0)] * self.dim
        for c, x in _sparse(v).items():
            out[c] = x
        return out

    def is_antisymmetric(self) -> bool:
        for (a, b), vec in self.product.items():
            other = self.product.get((b, a), {})
            if a == b or {c: -x for c, x in vec.items()} != other:
                return False
        return True

    def ad_matrix(self, x) -> list:
        """Dense ``d x d`` matrix of ``y -> [x, y]``."""
        d = self.dim
        M = [[Fraction(0)] * d for _ in range(d)]
        for b in range(d):
            for c, v in self.bracket(x, {b: 1}).items():
                M[c][b] = v
        return M

    def right_table(self):
        """``table[b][c] = [(e, coeff of x_c in [x_e, x_b]), ...]``."""
        if self._right is None:
            tab = [dict() for _ in range(self.dim)]
            for (e, b), vec in sorted(self.product.items()):
                for c, x in vec.items():
                    tab[b].setdefault(c, []).append((e, x))
            self._right = tab
        return self._right

    def structure_triples(self):
        """Sorted ``(a, b, c, coeff)`` for ``a < b``."""
        out = []
        for (a, b) in sorted(self.product):
            if a < b:
                for c, x in sorted(self.product[(a, b)].items()):
                    out.append((a, b, c, x))
        return out


class LieAlgebra(StructureAlgebra):
    """Matrix algebra spanned by ``basis`` with its structure tensor.

    ``is_closed`` is False when some commutator leaves the span; ``witness``
    then holds the offending index pair and the product table is partial.
    """

    def __init__(self, name, basis, product, is_closed=True, witness=None, solver=None):
        super().__init__(name, len(basis), product)
        self.basis = list(basis)
        self.matrix_size = self.basis[0].rows if self.basis else 0
        self.is_closed = is_closed
        self.witness = witness
        self._solver = solver
        self._gram = None

    @property
    def solver(self) -> SpanSolver:
        if self._solver is None:
            n = self.matrix_size
            self._solver = SpanSolver([b.flatten_sparse() for b in self.basis], 4 * n * n)
        return self._solver

    def coords(self, X: MatrixQ):
        """Coordinates of a matrix in this basis, or None if outside the span."""
        return self.solver.coordinates(X.flatten_sparse())

    def element(self, x) -> MatrixQ:
        n = self.matrix_size
        out = MatrixQ.zeros(n)
        for a, c in _sparse(x).items():
            out = out + self.basis[a].scale(c)
        return out

    def gram(self) -> list:
        """Gram matrix of ``Re tr(XY)`` on the basis."""
        if self._gram is None:
            d = self.dim
            G = [[Fraction(0)] * d for _ in range(d)]
            for a in range(d):
                for b in range(a, d):
                    G[a][b] = G[b][a] = re_trace_form(self.basis[a], self.basis[b])
            self._gram = G
        return self._gram

    def trace_form(self, x, y) -> Fraction:
        G = self.gram()
        x, y = _sparse(x), _sparse(y)
        return sum((xa * G[a][b] * yb for a, xa in x.items() for b, yb in y.items()), Fraction(0))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "matrix_size": self.matrix_size,
            "basis": [b.to_json() for b in self.basis],
            "structure": [[a, b, c, format_rational(x)] for a, b, c, x in self.structure_triples()],
        }

    @classmethod
    def from_json(cls, data) -> "LieAlgebra":
        basis = [MatrixQ.from_json(b) for b in data["basis"]]
        product = {}
        for a, b, c, x in data["structure"]:
            x = parse_rational(x)
            product.setdefault((a, b), {})[c] = x
            product.setdefault((b, a), {})[c] = -x
        return cls(data["name"], basis, product)


def close_and_structure(basis, name="L") -> LieAlgebra:
    """Compute all commutators of a matrix basis and express them in it.

    Raises ``ValueError`` for a dependent basis. If a commutator escapes the
    span the returned algebra has ``is_closed=False`` and ``witness=(a, b)``.
    """
    basis = list(basis)
    if not basis:
        raise ValueError("empty basis")
    n = basis[0].rows
    if any(not b.is_square() or b.rows != n for b in basis):
        raise DimensionError("basis matrices must be square of equal size")
    solver = SpanSolver([b.flatten_sparse() for b in basis], 4 * n * n)
    product = {}
    for a, b in combinations(range(len(basis)), 2):
        C = commutator(basis[a], basis[b])
        if C.is_zero():
            continue
        coeffs = solver.coordinates(C.flatten_sparse())
        if coeffs is None:
            return LieAlgebra(name, basis, product, is_closed=False, witness=(a, b), solver=solver)
        vec = {c: x for c, x in enumerate(coeffs) if x}
        product[(a, b)] = vec
        product[(b, a)] = {c: -x for c, x in vec.items()}
    return LieAlgebra(name, basis, product, solver=solver)


def center(L: StructureAlgebra) -> Subspace:
    """``{x : [x, y] = 0 for all y}`` as a subspace of coordinates."""
    return centralizer(L, Subspace.full(L.dim))


def centralizer(L: StructureAlgebra, S: Subspace) -> Subspace:
    """``{x : [x, s] = 0 for every basis vector s of S}``."""
    if S.ambient_dim != L.dim:
        raise DimensionError("subspace does not live in this algebra")
    d = L.dim
    rows = []
    for s in S.basis:
        # column a of the map x -> [x, s]
        cols = [L.bracket({a: 1}, s) for a in range(d)]
        for c in range(d):
            row = {a: v[c] for a, v in enumerate(cols) if c in v}
            if row:
                rows.append(row)
    return kernel(rows, ncols=d)


def derivation_defect(A: StructureAlgebra, T) -> dict:
    """``T[x_a,x_b] - [T x_a, x_b] - [x_a, T x_b]`` for all ``a < b``.

    ``T`` is a dense ``d x d`` matrix (list of rows). Returns the nonzero
    components keyed by ``(a, b, c)``; empty exactly when T is a derivation.
    """
    d = A.dim
    cols = [{e: T[e][a] for e in range(d) if T[e][a]} for a in range(d)]
    out = {}
    for a, b in combinations(range(d), 2):
        acc = {}
        for e, x in A.bracket_basis(a, b).items():
            _add_into(acc, cols[e], x)
        _add_into(acc, A.bracket(cols[a], {b: 1}), -1)
        _add_into(acc, A.bracket({a: 1}, cols[b]), -1)
        for c, v in acc.items():
            out[(a, b, c)] = v
    return out


def derivation_equations(A: StructureAlgebra):
    """Sparse linear equations in the ``d*d`` entries of ``T``.

    One equation per pair ``a < b`` and output component ``c``. Pairs with
    ``a > b`` and ``a == b`` add nothing for an antisymmetric product.
    """
    d = A.dim
    R = A.right_table()
    for a, b in combinations(range(d), 2):
        pab = A.bracket_basis(a, b)
        for c in range(d):
            row = {}
            for e, x in pab.items():
                idx = c * d + e
                row[idx] = row.get(idx, 0) + x
            for e, x in R[b].get(c, ()):
                idx = e * d + a
                row[idx] = row.get(idx, 0) - x
            # [x_a, T x_b]_c = -sum_e T[e][b] [x_e, x_a]_c
            for e, x in R[a].get(c, ()):
                idx = e * d + b
                row[idx] = row.get(idx, 0) + x
            row = {i: v for i, v in row.items() if v}
            if row:
                yield row


def derivations(A: StructureAlgebra) -> Subspace:
    """All derivations of ``A`` as a subspace of the ``d*d`` endomorphism coordinates."""
    return kernel(derivation_equations(A), ncols=A.dim * A.dim)


def endomorphism_coords(T) -> list:
    return [x for row in T for x in row]


def jacobiator(A: StructureAlgebra, x, y, z) -> dict:
    """``[[y,z],x] + [[x,y],z] + [[z,x],y]`` in coordinates (sparse)."""
    out = {}
    _add_into(out, A.bracket(A.bracket(y, z), x), 1)
    _add_into(out, A.bracket(A.bracket(x, y), z), 1)
    _add_into(out, A.bracket(A.bracket(z, x), y), 1)
    return out


def _basis_jacobiator(A: StructureAlgebra, a, b, c) -> dict:
    out = {}
    for (p, q_, r) in ((a, b, c), (b, c, a), (c, a, b)):
        for e, x in A.bracket_basis(p, q_).items():
            vec = A.bracket_basis(e, r)
            if vec:
                _add_into(out, vec, x)
    return out


def is_lie_algebra(A: StructureAlgebra):
    """Check antisymmetry and Jacobi on all basis triples.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness is a
    dict with the failing triple and its Jacobiator.
    """
    if not A.is_antisymmetric():
        return False, {"reason": "product is not antisymmetric"}
    for a, b, c in combinations(range(A.dim), 3):
        jac = _basis_jacobiator(A, a, b, c)
        if jac:
            return False, {"triple": [a, b, c], "jacobiator": dict(sorted(jac.items()))}
    return True, None


def invariant_symmetric_forms(A: StructureAlgebra, M: Subspace, acting: Subspace = None) -> Subspace:
    """Symmetric bilinear forms on ``M`` invariant under ``ad`` of ``acting``.

    ``acting`` defaults to the whole algebra. Forms are written in the
    echelon basis ``m_0..m_{r-1}`` of ``M`` and returned as coordinates
    ``beta[s][t]`` for ``s <= t`` in row-major order (see
    :func:`symmetric_index`). Raises :class:`NotStableError` if ``M`` is not
    ad-stable.
    """
    if acting is None:
        acting = Subspace.full(A.dim)
    r = M.dim
    idx = symmetric_index(r)
    nunk = r * (r + 1) // 2
    rows = []
    for X in acting.basis:
        # act[i] = coordinates of [X, m_i] in the echelon basis of M
        act = []
        for i, m in enumerate(M.basis):
            img = A.dense(A.bracket(X, m))
            try:
                act.append(M.coordinates(img))
            except ValueError:
                raise NotStableError("module is not ad-stable", witness={"acting": list(X), "vector": i}) from None
        for i in range(r):
            for j in range(i, r):
                row = {}
                # beta(X.m_i, m_j) + beta(m_i, X.m_j)
                for s, a in enumerate(act[i]):
                    if a:
                        k = idx[min(s, j), max(s, j)]
                        row[k] = row.get(k, 0) + a
                for s, a in enumerate(act[j]):
                    if a:
                        k = idx[min(s, i), max(s, i)]
                        row[k] = row.get(k, 0) + a
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return kernel(rows, ncols=nunk)


def symmetric_index(r: int) -> dict:
    idx = {}
    for i in range(r):
        for j in range(i, r):
            idx[i, j] = len(idx)
    return idx


def form_matrix(coords, r: int) -> list:
    """Expand upper-triangle form coordinates into a full symmetric matrix."""
    B = [[Fraction(0)] * r for _ in range(r)]
    for (i, j), k in symmetric_index(r).items():
        B[i][j] = B[j][i] = Fraction(coords[k])
    return B


def form_coords(B) -> list:
    r = len(B)
    return [B[i][j] for (i, j) in symmetric_index(r)]


def bracket_span(A: StructureAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of ``[s, t]`` over basis vectors of ``S`` and ``T``."""
    vecs = []
    for s in S.basis:
        for t in T.basis:
            v = A.bracket(s, t)
            if v:
                vecs.append(v)
    return Subspace(A.dim, vecs)


def symmetric_pair_check(A: StructureAlgebra, t: Subspace, W: Subspace):
    """Whether ``A = t + W`` is a symmetric pair decomposition.

    Returns ``(ok, details)`` with one boolean per inclusion. Raises
    ``ValueError`` if ``t`` and ``W`` do not form a direct sum equal to A.
    """
    if t.dim + W.dim != A.dim or (t + W).dim != A.dim:
        raise ValueError("t and W do not form a direct sum decomposition")
    details = {
        "[t,t] in t": bracket_span(A, t, t).is_subspace_of(t),
        "[t,W] in W": bracket_span(A, t, W).is_subspace_of(W),
        "[W,W] in t": bracket_span(A, W, W).is_subspace_of(t),
    }
    return all(details.values()), details


class GradedDecomposition:
    """Named subspaces of a parent algebra forming a direct sum."""

    def __init__(self, parent: StructureAlgebra, parts: dict, orthogonal=False):
        self.parent = parent
        self.parts = dict(parts)
        self.orthogonal = orthogonal
        vecs = [v for S in self.parts.values() for v in S.basis]
        self._labels = [lab for lab, S in self.parts.items() for _ in S.basis]
        self._solver = SpanSolver([_sparse(v) for v in vecs], parent.dim) if vecs else None

    def __getitem__(self, label) -> Subspace:
        return self.parts[label]

    def dims(self) -> dict:
        return {lab: S.dim for lab, S in self.parts.items()}

    def is_direct(self) -> bool:
        total = Subspace(self.parent.dim, [v for S in self.parts.values() for v in S.basis])
        return total.dim == sum(S.dim for S in self.parts.values())

    def is_complete(self) -> bool:
        return self.is_direct() and sum(S.dim for S in self.parts.values()) == self.parent.dim

    def components(self, x) -> dict:
        """Split a parent vector into its part components (dense parent coordinates)."""
        coeffs = self._solver.coordinates(_sparse(x))
        if coeffs is None:
            raise ValueError("vector not in the sum of the parts")
        out = {lab: [Fraction(0)] * self.parent.dim for lab in self.parts}
        vecs = [v for S in self.parts.values() for v in S.basis]
        for c, lab, v in zip(coeffs, self._labels, vecs):
            if c:
                acc = out[lab]
                for i, y in enumerate(v):
                    if y:
                        acc[i] += c * y
        return out

    def orthogonality_defects(self, form) -> list:
        """Pairs of basis vectors in distinct parts where ``form`` is nonzero."""
        bad = []
        labels = list(self.parts)
        for i, la in enumerate(labels):
            for lb in labels[i + 1:]:
                for u_i, u in enumerate(self.parts[la].basis):
                    for v_i, v in enumerate(self.parts[lb].basis):
                        val = form(u, v)
                        if val:
                            bad.append((la, u_i, lb, v_i, val))
        return bad


def orthogonal_projector(L: LieAlgebra, M: Subspace):
    """Return ``P`` mapping parent coordinates to the ``Re tr``-orthogonal projection onto ``M``.

    ``P(z)`` is expressed in the echelon basis of ``M``. Raises ``ValueError``
    if the trace form restricted to ``M`` is degenerate.
    """
    G = L.gram()
    basis = [list(b) for b in M.basis]
    r = len(basis)
    # pairing[i][a] = B(m_i, x_a)
    pairing = [[sum((mi[s] * G[s][a] for s in range(L.dim) if mi[s]), Fraction(0)) for a in range(L.dim)]
               for mi in basis]
    gram = [[sum((pairing[i][a] * basis[j][a] for a in range(L.dim) if basis[j][a]), Fraction(0))
             for j in range(r)] for i in range(r)]
    inv = _inverse(gram)
    if inv is None:
        raise ValueError("trace form is degenerate on the subspace")

    def project(z) -> list:
        z = _sparse(z)
        b = [sum((pairing[i][a] * x for a, x in z.items()), Fraction(0)) for i in range(r)]
        return [sum((inv[i][j] * b[j] for j in range(r) if b[j]), Fraction(0)) for i in range(r)]

    return project


def _inverse(M):
    n = len(M)
    if n == 0:
        return []
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    red, piv = rref(aug, n)
    if piv != list(range(n)):
        return None
    return [list(row[n:]) for row in red]


class NonAssocAlgebra(StructureAlgebra):
    """Algebra on a subspace ``m`` of an ambient Lie algebra.

    Coordinates refer to the echelon basis of ``m_basis``; ``product`` is
    whatever bilinear rule built the algebra (e.g. bracket followed by a
    projection, or a deformed bracket).
    """

    def __init__(self, name, ambient: LieAlgebra, m_basis: Subspace, product):
        super().__init__(name, m_basis.dim, product)
        self.ambient = ambient
        self.m_basis = m_basis

    def to_ambient(self, x) -> list:
        out = [Fraction(0)] * self.ambient.dim
        for i, c in _sparse(x).items():
            for t, y in enumerate(self.m_basis.basis[i]):
                if y:
                    out[t] += c * y
        return out

    def from_ambient(self, v) -> list:
        return self.m_basis.coordinates(v)


def projected_algebra(name, L: LieAlgebra, m: Subspace) -> NonAssocAlgebra:
    """``m`` with ``[x, y]_m`` = orthogonal projection of ``[x, y]`` onto ``m``."""
    project = orthogonal_projector(L, m)
    r = m.dim
    product = {}
    for i in range(r):
        for j in range(i + 1, r):
            vec = {c: x for c, x in enumerate(project(L.bracket(m.basis[i], m.basis[j]))) if x}
            if vec:
                product[(i, j)] = vec
                product[(j, i)] = {c: -x for c, x in vec.items()}
    return NonAssocAlgebra(name, L, m, product)
