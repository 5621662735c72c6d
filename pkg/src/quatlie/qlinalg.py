"""Quaternionic matrices and exact linear algebra over the rationals.

Matrices hold :class:`~quatlie.scalars.Quaternion` entries; complex matrices
are the special case with zero ``j``/``k`` parts and real matrices have only
``re`` parts. ``flatten`` maps a matrix to its real coordinate vector, four
coordinates ``(re, i, j, k)`` per entry in row-major order.

Conventions fixed here:

* ``quat_to_complex`` writes an entry as ``q = z + j*w`` and sends an
  ``n x n`` matrix ``Z + jW`` to the ``2n x 2n`` block matrix
  ``[[Z, -conj(W)], [W, conj(Z)]]``. The first ``n`` complex coordinates are
  ``e_1..e_n`` and the last ``n`` are ``e^1..e^n``.
* ``realify`` sends a complex-linear map ``z -> M z`` on ``C^N`` to a real
  ``2N x 2N`` matrix acting on ``(Re z, Im z)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .scalars import (ONE, ZERO, GaussianRational, Quaternion, as_rational,
                      format_rational, parse_rational, q, quat_mul)


class DimensionError(ValueError):
    pass


class MatrixQ:
    """Dense ``rows x cols`` matrix with quaternion entries (immutable)."""

    __slots__ = ("rows", "cols", "entries", "_nz")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(q(e) for e in entries)
        if rows < 1 or cols < 1:
            raise DimensionError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_nz", None)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixQ is immutable")

    @classmethod
    def _raw(cls, rows, cols, entries):
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", tuple(entries))
        object.__setattr__(m, "_nz", None)
        return m

    # -- constructors --
    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls.diag([ONE] * n)

    @classmethod
    def diag(cls, values):
        values = [q(v) for v in values]
        n = len(values)
        ent = [ZERO] * (n * n)
        for a, v in enumerate(values):
            ent[a * n + a] = v
        return cls._raw(n, n, ent)

    @classmethod
    def unit(cls, rows, cols, i, j, value=ONE):
        """Elementary matrix with ``value`` at ``(i, j)`` (0-based)."""
        ent = [ZERO] * (rows * cols)
        ent[i * cols + j] = q(value)
        return cls._raw(rows, cols, ent)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_blocks(cls, blocks):
        """Assemble a matrix from a 2D list of MatrixQ blocks."""
        row_heights = [row[0].rows for row in blocks]
        col_widths = [b.cols for b in blocks[0]]
        R, C = sum(row_heights), sum(col_widths)
        ent = [ZERO] * (R * C)
        r0 = 0
        for row, h in zip(blocks, row_heights):
            c0 = 0
            for b, w in zip(row, col_widths):
                if b.rows != h or b.cols != w:
                    raise DimensionError("inconsistent block sizes")
                for (i, j), v in b.nonzero():
                    ent[(r0 + i) * C + c0 + j] = v
                c0 += w
            r0 += h
        return cls._raw(R, C, ent)

    # -- access --
    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i * self.cols + j]

    def nonzero(self):
        """List of ``((i, j), value)`` for the nonzero entries."""
        if self._nz is None:
            c = self.cols
            nz = tuple(((t // c, t % c), v) for t, v in enumerate(self.entries) if v)
            object.__setattr__(self, "_nz", nz)
        return self._nz

    def block(self, r0, r1, c0, c1) -> "MatrixQ":
        return MatrixQ._raw(r1 - r0, c1 - c0,
                            [self.entries[i * self.cols + j] for i in range(r0, r1) for j in range(c0, c1)])

    def to_rows(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return not self.nonzero()

    def __eq__(self, other):
        if not isinstance(other, MatrixQ):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.to_rows()]
        return f"MatrixQ({self.rows}x{self.cols}: " + "; ".join(rows) + ")"

    # -- arithmetic --
    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        return MatrixQ._raw(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check_same(other)
        return MatrixQ._raw(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatrixQ._raw(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, t):
        t = as_rational(t)
        return MatrixQ._raw(self.rows, self.cols, [a.scale(t) for a in self.entries])

    def left_scalar(self, s):
        """Entrywise ``s * A_ij`` for a quaternion scalar ``s``."""
        s = q(s)
        return MatrixQ._raw(self.rows, self.cols, [quat_mul(s, a) for a in self.entries])

    def right_scalar(self, s):
        s = q(s)
        return MatrixQ._raw(self.rows, self.cols, [quat_mul(a, s) for a in self.entries])

    def __matmul__(self, other):
        return mat_mul(self, other)

    def transpose(self):
        """Plain transpose, no conjugation."""
        R, C = self.rows, self.cols
        return MatrixQ._raw(C, R, [self.entries[i * C + j] for j in range(C) for i in range(R)])

    def conj(self):
        """Entrywise quaternion conjugate (complex conjugate for complex matrices)."""
        return MatrixQ._raw(self.rows, self.cols, [a.conj() for a in self.entries])

    def conj_transpose(self):
        R, C = self.rows, self.cols
        return MatrixQ._raw(C, R, [self.entries[i * C + j].conj() for j in range(C) for i in range(R)])

    def trace(self) -> Quaternion:
        if not self.is_square():
            raise DimensionError("trace of non-square matrix")
        t = ZERO
        for a in range(self.rows):
            t = t + self.entries[a * self.cols + a]
        return t

    def is_complex(self):
        return all(not (v.im_j or v.im_k) for _, v in self.nonzero())

    def is_real(self):
        return all(v.is_real() for _, v in self.nonzero())

    def flatten(self) -> tuple:
        """Real coordinate vector of length ``4*rows*cols``."""
        out = []
        for v in self.entries:
            out.extend((v.re, v.im_i, v.im_j, v.im_k))
        return tuple(out)

    def flatten_sparse(self) -> dict:
        out = {}
        c = self.cols
        for (i, j), v in self.nonzero():
            base = 4 * (i * c + j)
            for t, x in enumerate((v.re, v.im_i, v.im_j, v.im_k)):
                if x:
                    out[base + t] = x
        return out

    @classmethod
    def unflatten(cls, rows, cols, coords):
        coords = list(coords)
        if len(coords) != 4 * rows * cols:
            raise DimensionError("coordinate vector has wrong length")
        ent = [Quaternion(*coords[4 * t:4 * t + 4]) for t in range(rows * cols)]
        return cls._raw(rows, cols, ent)

    @classmethod
    def unflatten_sparse(cls, rows, cols, coords: dict):
        comp = {}
        for idx, x in coords.items():
            comp.setdefault(idx // 4, [0, 0, 0, 0])[idx % 4] = x
        ent = [ZERO] * (rows * cols)
        for t, c in comp.items():
            ent[t] = Quaternion(*c)
        return cls._raw(rows, cols, ent)

    # -- serialization --
    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [v.to_json() for v in self.entries]}

    @classmethod
    def from_json(cls, data) -> "MatrixQ":
        return cls(int(data["rows"]), int(data["cols"]),
                   [Quaternion.from_json(e) for e in data["entries"]])


def mat_mul(A: MatrixQ, B: MatrixQ) -> MatrixQ:
    """Exact product; entry ``(i, j)`` is ``sum_s A[i,s] * B[s,j]`` in that order."""
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.shape} by {B.shape}")
    brows = {}
    for (s, j), v in B.nonzero():
        brows.setdefault(s, []).append((j, v))
    C = B.cols
    acc = {}
    for (i, s), a in A.nonzero():
        for j, b in brows.get(s, ()):
            key = i * C + j
            p = quat_mul(a, b)
            acc[key] = acc[key] + p if key in acc else p
    ent = [ZERO] * (A.rows * C)
    for key, v in acc.items():
        ent[key] = v
    return MatrixQ._raw(A.rows, C, ent)


def commutator(A: MatrixQ, B: MatrixQ) -> MatrixQ:
    if not (A.is_square() and A.shape == B.shape):
        raise DimensionError("commutator needs square matrices of equal size")
    return mat_mul(A, B) - mat_mul(B, A)


def re_trace_form(A: MatrixQ, B: MatrixQ) -> Fraction:
    """``Re tr(AB)``, computed without forming the full product."""
    if not (A.is_square() and A.shape == B.shape):
        raise DimensionError("trace form needs square matrices of equal size")
    n = A.cols
    total = Fraction(0)
    bent = B.entries
    for (i, s), a in A.nonzero():
        b = bent[s * n + i]
        if b:
            # Re(a*b) = a0 b0 - a1 b1 - a2 b2 - a3 b3
            total += a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j - a.im_k * b.im_k
    return total


def block_diag(*blocks) -> MatrixQ:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    ent = [ZERO] * (n * m)
    r0 = c0 = 0
    for b in blocks:
        for (i, j), v in b.nonzero():
            ent[(r0 + i) * m + c0 + j] = v
        r0 += b.rows
        c0 += b.cols
    return MatrixQ._raw(n, m, ent)


def signature_matrix(k: int, l: int) -> MatrixQ:
    """``I_{k,l} = diag(I_k, -I_l)``."""
    return MatrixQ.diag([1] * k + [-1] * l)


# -- complex and real realizations ------------------------------------------

def quat_to_complex(A: MatrixQ) -> MatrixQ:
    """Complex ``2n x 2n`` image of a quaternionic ``n x n`` matrix.

    Each entry ``q = z + j*w`` contributes ``z`` to the top-left block,
    ``-conj(w)`` to the top-right, ``w`` to the bottom-left and ``conj(z)``
    to the bottom-right. This is a ring homomorphism intertwining ``*``.
    """
    if not A.is_square():
        raise DimensionError("quat_to_complex needs a square matrix")
    n = A.rows
    N = 2 * n
    ent = [ZERO] * (N * N)
    for (a, b), v in A.nonzero():
        z, w = v.complex_parts()
        ent[a * N + b] = z.to_quaternion()
        ent[a * N + n + b] = (-w.conj()).to_quaternion()
        ent[(n + a) * N + b] = w.to_quaternion()
        ent[(n + a) * N + n + b] = z.conj().to_quaternion()
    return MatrixQ._raw(N, N, ent)


def complex_to_quat(M: MatrixQ) -> MatrixQ:
    """Inverse of :func:`quat_to_complex` on its image (raises otherwise)."""
    if not M.is_square() or M.rows % 2:
        raise DimensionError("need an even square complex matrix")
    n = M.rows // 2
    ent = []
    for a in range(n):
        for b in range(n):
            z = _gauss(M[a, b])
            w = _gauss(M[n + a, b])
            ent.append(Quaternion.from_complex_parts(z, w))
    out = MatrixQ._raw(n, n, ent)
    if quat_to_complex(out) != M:
        raise ValueError("matrix is not in the image of quat_to_complex")
    return out


def _gauss(v: Quaternion) -> GaussianRational:
    if v.im_j or v.im_k:
        raise ValueError("entry is not complex")
    return GaussianRational(v.re, v.im_i)


def realify(M: MatrixQ) -> MatrixQ:
    """Real ``2N x 2N`` matrix of ``z -> M z`` on ``(Re z, Im z)``.

    ``M = P + iQ`` maps to ``[[P, -Q], [Q, P]]``.
    """
    if not M.is_complex():
        raise ValueError("realify needs a complex matrix")
    R, C = M.rows, M.cols
    W = 2 * C
    ent = [ZERO] * (4 * R * C)
    for (a, b), v in M.nonzero():
        p, s = v.re, v.im_i
        if p:
            ent[a * W + b] = q(p)
            ent[(R + a) * W + C + b] = q(p)
        if s:
            ent[a * W + C + b] = q(-s)
            ent[(R + a) * W + b] = q(s)
    return MatrixQ._raw(2 * R, W, ent)


def realify_antilinear(M: MatrixQ) -> MatrixQ:
    """Real matrix of the conjugate-linear map ``z -> M conj(z)``.

    ``M = P + iQ`` maps to ``[[P, Q], [Q, -P]]``.
    """
    if not M.is_complex():
        raise ValueError("realify_antilinear needs a complex matrix")
    R, C = M.rows, M.cols
    W = 2 * C
    ent = [ZERO] * (4 * R * C)
    for (a, b), v in M.nonzero():
        p, s = v.re, v.im_i
        if p:
            ent[a * W + b] = q(p)
            ent[(R + a) * W + C + b] = q(-p)
        if s:
            ent[a * W + C + b] = q(s)
            ent[(R + a) * W + b] = q(s)
    return MatrixQ._raw(2 * R, W, ent)


# -- exact elimination --------------------------------------------------------

def _primitive(row: dict) -> dict:
    """Scale a sparse rational row to coprime integers with positive leading sign."""
    if not row:
        return row
    vals = list(row.values())
    if any(isinstance(v, Fraction) and v.denominator != 1 for v in vals):
        den = reduce(lambda a, b: a * b // math.gcd(a, b),
                     (Fraction(v).denominator for v in vals), 1)
        row = {c: int(Fraction(v) * den) for c, v in row.items()}
    else:
        row = {c: int(v) for c, v in row.items()}
    g = math.gcd(*row.values())
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


class SparseEchelon:
    """Incremental fully reduced echelon form over the integers.

    Rows are sparse ``{column: int}`` dicts kept primitive (content removed)
    and reduced fraction-free: eliminating with pivot ``b`` from a row with
    entry ``a`` computes ``b*row - a*pivot_row`` and then divides out the gcd.
    Every stored row has exactly one pivot column and no entries in other
    pivot columns, so rank and null space can be read off directly.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, dict] = {}
        # non-pivot column -> set of pivot columns whose rows touch it
        self._col_users: dict[int, set] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def _reduce(self, r: dict) -> dict:
        hits = [c for c in r if c in self.pivot_rows]
        for p in hits:
            a = r.get(p)
            if not a:
                continue
            prow = self.pivot_rows[p]
            b = prow[p]
            r = _combine(r, b, prow, a)
        return r

    def add(self, row) -> bool:
        """Insert a row; returns True if it raised the rank."""
        if not isinstance(row, dict):
            row = {c: v for c, v in enumerate(row) if v}
        else:
            row = {c: v for c, v in row.items() if v}
        if not row:
            return False
        r = self._reduce(_primitive(row))
        if not r:
            return False
        r = _primitive(r)
        users = self._col_users
        # fewest existing users keeps fill-in down; ties broken by column index
        piv = min(r, key=lambda c: (len(users.get(c, ())), c))
        b = r[piv]
        for p in sorted(users.pop(piv, ())):
            prow = self.pivot_rows[p]
            a = prow[piv]
            old_cols = set(prow)
            new = _primitive(_combine(prow, b, r, a))
            if new[p] < 0:
                new = {c: -v for c, v in new.items()}
            self.pivot_rows[p] = new
            for c in old_cols - set(new):
                if c != p and c in users:
                    users[c].discard(p)
            for c in new:
                if c != p:
                    users.setdefault(c, set()).add(p)
        if b < 0:
            r = {c: -v for c, v in r.items()}
        self.pivot_rows[piv] = r
        for c in r:
            if c != piv:
                users.setdefault(c, set()).add(piv)
        return True

    def contains(self, row) -> bool:
        """True if the row lies in the span of rows added so far."""
        if not isinstance(row, dict):
            row = {c: v for c, v in enumerate(row) if v}
        row = {c: v for c, v in row.items() if v}
        if not row:
            return True
        return not self._reduce(_primitive(row))

    def null_space(self) -> list:
        """Basis of the solution space of ``row . x = 0`` for all stored rows."""
        basis = []
        for f in range(self.ncols):
            if f in self.pivot_rows:
                continue
            vec = {f: Fraction(1)}
            for p in self._col_users.get(f, ()):
                prow = self.pivot_rows[p]
                vec[p] = Fraction(-prow[f], prow[p])
            basis.append(vec)
        return basis


def _combine(r: dict, b: int, prow: dict, a: int) -> dict:
    """``b*r - a*prow`` with zero entries dropped."""
    out = {c: b * v for c, v in r.items()} if b != 1 else dict(r)
    for c, v in prow.items():
        nv = out.get(c, 0) - a * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


def rref(rows, ncols=None):
    """Dense reduced row echelon form over Q. Returns ``(rows, pivots)``.

    Pivots are searched only in the first ``ncols`` columns; later columns
    ride along (useful for tracking transformations).
    """
    M = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        sel = next((i for i in range(r, len(M)) if M[i][c]), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        pv = M[r][c]
        if pv != 1:
            M[r] = [x / pv for x in M[r]]
        prow = M[r]
        # row operations act on the whole row, including any augmented columns
        nzc = [j for j in range(c, len(prow)) if prow[j]]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f:
                    row = M[i]
                    for j in nzc:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return [tuple(x) for x in M[:r]], pivots


def _dense(v, n):
    if isinstance(v, dict):
        out = [Fraction(0)] * n
        for c, x in v.items():
            out[c] = Fraction(x)
        return out
    v = [Fraction(x) for x in v]
    if len(v) != n:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {n}")
    return v


class Subspace:
    """Subspace of ``Q^n`` stored by its reduced row echelon basis.

    Two subspaces are equal exactly when their echelon bases coincide.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors=()):
        rows = [_dense(v, ambient_dim) for v in vectors]
        rows = [r for r in rows if any(r)]
        basis, pivots = rref(rows, ambient_dim) if rows else ([], [])
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def coordinate(cls, n, indices):
        """Span of the standard basis vectors with the given indices."""
        return cls(n, [{i: 1} for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, v) -> list:
        """Remainder of ``v`` after elimination against the echelon basis."""
        v = _dense(v, self.ambient_dim)
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= f * row[j]
        return v

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v) -> list:
        """Coefficients of ``v`` against the echelon basis (raises if outside)."""
        v = _dense(v, self.ambient_dim)
        coeffs = [v[p] for p in self.pivots]
        if any(self.reduce(v)):
            raise ValueError("vector is not in the subspace")
        return coeffs

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("ambient dimension mismatch")
        if not self.dim or not other.dim:
            return Subspace(self.ambient_dim)
        # a in self, b in other with sum(a_i s_i) - sum(b_j o_j) = 0
        d1 = self.dim
        cols = list(self.basis) + [tuple(-x for x in b) for b in other.basis]
        rows = [[c[t] for c in cols] for t in range(self.ambient_dim)]
        ker = kernel(rows, ncols=len(cols))
        vecs = []
        for kv in ker.basis:
            v = [Fraction(0)] * self.ambient_dim
            for i in range(d1):
                if kv[i]:
                    for t, x in enumerate(self.basis[i]):
                        if x:
                            v[t] += kv[i] * x
            vecs.append(v)
        return Subspace(self.ambient_dim, vecs)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim,
                "basis": [[format_rational(x) for x in b] for b in self.basis]}

    @classmethod
    def from_json(cls, data) -> "Subspace":
        return cls(int(data["ambient_dim"]), [[parse_rational(x) for x in b] for b in data["basis"]])


def kernel(rows, ncols=None) -> Subspace:
    """Exact null space ``{x : row . x = 0 for every row}``.

    Rows may be dense sequences or sparse ``{column: value}`` dicts; ``ncols``
    is required when any row is sparse or when there are no rows.
    """
    rows = list(rows)
    if ncols is None:
        if not rows or isinstance(rows[0], dict):
            raise ValueError("ncols is required for sparse or empty input")
        ncols = len(rows[0])
    for r in rows:
        if not isinstance(r, dict) and len(r) != ncols:
            raise DimensionError("all rows must have the same length")
    ech = SparseEchelon(ncols)
    for r in rows:
        ech.add(r)
    basis = ech.null_space()
    out = Subspace(ncols, basis)
    assert out.dim + ech.rank == ncols
    return out


def rank(rows, ncols=None) -> int:
    rows = list(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows and not isinstance(rows[0], dict) else 0
    ech = SparseEchelon(ncols)
    for r in rows:
        ech.add(r)
    return ech.rank


def span_membership(v, S: Subspace) -> bool:
    if not isinstance(v, dict) and len(v) != S.ambient_dim:
        raise DimensionError("vector and subspace have different ambient dimensions")
    return S.contains(v)


class SpanSolver:
    """Coordinates of vectors with respect to a fixed independent list.

    Raises ``ValueError`` at construction if the list is dependent.
    """

    def __init__(self, vectors, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.vectors = [dict((c, Fraction(x)) for c, x in (v.items() if isinstance(v, dict) else enumerate(v)) if x)
                        for v in vectors]
        d = len(self.vectors)
        # rref of [V | I] tracks the combination producing each echelon row
        aug = []
        for i, v in enumerate(self.vectors):
            row = _dense(v, ambient_dim) + [Fraction(int(i == j)) for j in range(d)]
            aug.append(row)
        red, piv = rref(aug, ambient_dim) if aug else ([], [])
        if len(piv) != d:
            raise ValueError("basis vectors are linearly dependent")
        self.pivots = piv
        self.transform = [row[ambient_dim:] for row in red]

    @property
    def dim(self):
        return len(self.vectors)

    def coordinates(self, v, check=True):
        """Return coefficients ``c`` with ``sum c_i vectors[i] == v``, or None if ``v`` is outside the span."""
        if not isinstance(v, dict):
            v = {c: x for c, x in enumerate(v) if x}
        d = self.dim
        coeffs = [Fraction(0)] * d
        for r, p in enumerate(self.pivots):
            x = v.get(p)
            if x:
                for i, t in enumerate(self.transform[r]):
                    if t:
                        coeffs[i] += x * t
        if check:
            recon = {}
            for i, c in enumerate(coeffs):
                if c:
                    for col, x in self.vectors[i].items():
                        recon[col] = recon.get(col, 0) + c * x
            recon = {c: x for c, x in recon.items() if x}
            if recon != {c: Fraction(x) for c, x in v.items() if x}:
                return None
        return coeffs
