"""Dense exact matrices over a finite field.

Matrices are immutable values; row-major entry order is the single
vectorization convention used throughout the library.  The characteristic
polynomial is computed division-free (Berkowitz), which is valid in every
characteristic.
"""

from __future__ import annotations

from .errors import (
    ConstantPolynomialError,
    DependentPrefixError,
    FieldMismatchError,
    NotMonicError,
    NotSquareError,
    SingularError,
    SizeMismatchError,
)
from .fields import FiniteField
from .polys import Poly


class Matrix:
    """An r x s matrix with integer-encoded entries, row major."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FiniteField, nrows: int, ncols: int, entries):
        entries = tuple(entries)
        if nrows < 0 or ncols < 0 or len(entries) != nrows * ncols:
            raise SizeMismatchError(
                f"expected {nrows}x{ncols} = {nrows * ncols} entries, got {len(entries)}"
            )
        q = field.q
        for v in entries:
            if not isinstance(v, int) or not 0 <= v < q:
                raise ValueError(f"entry {v!r} is not an element encoding of {field}")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = entries

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls(field, nrows, ncols, (0,) * (nrows * ncols))

    @classmethod
    def identity(cls, field, n):
        ent = [0] * (n * n)
        for i in range(n):
            ent[i * n + i] = 1
        return cls(field, n, n, ent)

    @classmethod
    def scalar(cls, field, n, c):
        """c times the identity."""
        ent = [0] * (n * n)
        for i in range(n):
            ent[i * n + i] = c
        return cls(field, n, n, ent)

    @classmethod
    def diagonal(cls, field, values):
        values = list(values)
        n = len(values)
        ent = [0] * (n * n)
        for i, v in enumerate(values):
            ent[i * n + i] = v
        return cls(field, n, n, ent)

    @classmethod
    def from_rows(cls, field, rows):
        rows = [tuple(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise SizeMismatchError("rows have unequal lengths")
        return cls(field, nrows, ncols, [v for r in rows for v in r])

    @classmethod
    def unit(cls, field, nrows, ncols, i, j):
        """The matrix with a single 1 in position (i, j)."""
        ent = [0] * (nrows * ncols)
        ent[i * ncols + j] = 1
        return cls(field, nrows, ncols, ent)

    @classmethod
    def from_vector(cls, field, nrows, ncols, vec):
        """Reshape a row-major vector of length nrows*ncols."""
        return cls(field, nrows, ncols, vec)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i):
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def col(self, j):
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def _same_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def weight(self) -> int:
        """Number of nonzero entries (Hamming weight of the vectorization)."""
        return len(self.entries) - self.entries.count(0)

    @property
    def is_zero(self):
        return self.weight() == 0

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise SizeMismatchError("matrix addition needs equal shapes")
        add = self.field.add
        return Matrix(self.field, self.nrows, self.ncols,
                      [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise SizeMismatchError("matrix subtraction needs equal shapes")
        sub = self.field.sub
        return Matrix(self.field, self.nrows, self.ncols,
                      [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, self.nrows, self.ncols, [neg(a) for a in self.entries])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._same_field(other)
        if self.ncols != other.nrows:
            raise SizeMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        f = self.field
        add, mul = f.add, f.mul
        n, m, k = self.nrows, self.ncols, other.ncols
        a, b = self.entries, other.entries
        out = [0] * (n * k)
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            base = i * k
            for t in range(m):
                c = arow[t]
                if c:
                    brow = b[t * k:(t + 1) * k]
                    for j in range(k):
                        if brow[j]:
                            out[base + j] = add(out[base + j], mul(c, brow[j]))
        return Matrix(f, n, k, out)

    def scale(self, c: int):
        mul = self.field.mul
        return Matrix(self.field, self.nrows, self.ncols, [mul(c, a) for a in self.entries])

    def transpose(self):
        n, m = self.nrows, self.ncols
        e = self.entries
        return Matrix(self.field, m, n,
                      [e[i * m + j] for j in range(m) for i in range(n)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.nrows == other.nrows
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, {list(map(list, self.rows()))})"

    # -- elimination ------------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, rank, pivot_columns)."""
        f = self.field
        sub, mul, inv = f.sub, f.mul, f.inv
        n, m = self.nrows, self.ncols
        rows = [list(self.entries[i * m:(i + 1) * m]) for i in range(n)]
        pivots = []
        r = 0
        for c in range(m):
            if r == n:
                break
            pr = next((i for i in range(r, n) if rows[i][c]), None)
            if pr is None:
                continue
            rows[r], rows[pr] = rows[pr], rows[r]
            pv = rows[r][c]
            if pv != 1:
                ip = inv(pv)
                rows[r] = [mul(ip, v) for v in rows[r]]
            top = rows[r]
            for i in range(n):
                if i != r and rows[i][c]:
                    ci = rows[i][c]
                    rowi = rows[i]
                    for j in range(c, m):
                        if top[j]:
                            rowi[j] = sub(rowi[j], mul(ci, top[j]))
            pivots.append(c)
            r += 1
        flat = [v for row in rows for v in row]
        return Matrix(f, n, m, flat), r, tuple(pivots)

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace(self):
        """Canonical kernel basis: one column vector per free column, the free
        variable set to 1 in ascending column order."""
        reduced, _, pivots = self.rref()
        f, m = self.field, self.ncols
        neg = f.neg
        pivset = set(pivots)
        basis = []
        for free in range(m):
            if free in pivset:
                continue
            v = [0] * m
            v[free] = 1
            for rr, pc in enumerate(pivots):
                coef = reduced.entries[rr * m + free]
                if coef:
                    v[pc] = neg(coef)
            basis.append(Matrix(f, m, 1, v))
        return basis

    def inverse(self):
        if not self.is_square:
            raise NotSquareError("inverse needs a square matrix")
        f, n = self.field, self.nrows
        aug_rows = []
        for i in range(n):
            row = list(self.row(i)) + [0] * n
            row[n + i] = 1
            aug_rows.append(row)
        aug = Matrix.from_rows(f, aug_rows)
        reduced, _, pivots = aug.rref()
        # invertible exactly when every pivot lands in the left block
        if pivots[:n] != tuple(range(n)):
            raise SingularError(f"{n}x{n} matrix has rank {sum(1 for p in pivots if p < n)}")
        ent = []
        for i in range(n):
            ent.extend(reduced.entries[i * 2 * n + n:(i + 1) * 2 * n])
        return Matrix(f, n, n, ent)

    # -- characteristic polynomial ------------------------------------------------

    def charpoly(self) -> Poly:
        """det(tI - M), monic of degree n, by the Berkowitz iteration."""
        if not self.is_square:
            raise NotSquareError("characteristic polynomial needs a square matrix")
        f = self.field
        n = self.nrows
        if n == 0:
            return Poly.one(f)
        add, mul, neg = f.add, f.mul, f.neg
        ent = self.entries
        p = [1, neg(ent[0])]  # descending coefficients for the leading 1x1 block
        for r in range(1, n):
            col = [ent[i * n + r] for i in range(r)]
            row = [ent[r * n + j] for j in range(r)]
            c = [1, neg(ent[r * n + r])]
            w = col
            for k in range(1, r + 1):
                acc = 0
                for t in range(r):
                    if row[t] and w[t]:
                        acc = add(acc, mul(row[t], w[t]))
                c.append(neg(acc))
                if k < r:
                    w2 = [0] * r
                    for i in range(r):
                        acc = 0
                        base = i * n
                        for t in range(r):
                            a = ent[base + t]
                            if a and w[t]:
                                acc = add(acc, mul(a, w[t]))
                        w2[i] = acc
                    w = w2
            new_p = [0] * (r + 2)
            for i, ci in enumerate(c):
                if ci:
                    for j, pj in enumerate(p):
                        idx = i + j
                        if idx < r + 2 and pj:
                            new_p[idx] = add(new_p[idx], mul(ci, pj))
            p = new_p
        return Poly(f, list(reversed(p)))


def poly_eval(f: Poly, m: Matrix) -> Matrix:
    """Evaluate a polynomial at a square matrix by Horner's scheme."""
    if not m.is_square:
        raise NotSquareError("polynomial evaluation needs a square matrix")
    if f.field != m.field:
        raise FieldMismatchError(f"{f.field} vs {m.field}")
    n = m.nrows
    if f.is_zero:
        return Matrix.zero(m.field, n, n)
    cs = f.coeffs
    acc = Matrix.scalar(m.field, n, cs[-1])
    for c in reversed(cs[:-1]):
        acc = acc * m
        if c:
            acc = acc + Matrix.scalar(m.field, n, c)
    return acc


def direct_sum(blocks, field=None) -> Matrix:
    """Block-diagonal assembly; the empty sum is the 0x0 matrix."""
    blocks = list(blocks)
    if not blocks:
        if field is None:
            raise ValueError("an empty direct sum needs an explicit field")
        return Matrix(field, 0, 0, ())
    field = blocks[0].field
    for b in blocks[1:]:
        if b.field != field:
            raise FieldMismatchError("direct sum blocks over different fields")
    nrows = sum(b.nrows for b in blocks)
    ncols = sum(b.ncols for b in blocks)
    ent = [0] * (nrows * ncols)
    roff = coff = 0
    for b in blocks:
        for i in range(b.nrows):
            base = (roff + i) * ncols + coff
            ent[base:base + b.ncols] = b.row(i)
        roff += b.nrows
        coff += b.ncols
    return Matrix(field, nrows, ncols, ent)


def complete_invertible(field, vectors, n, mode="rows") -> Matrix:
    """Extend independent length-n vectors to an invertible n x n matrix.

    In "rows" mode the vectors become the first rows and the completion
    appends standard basis vectors at the non-pivot columns of the prefix's
    reduced echelon form, in ascending order; "columns" mode is the transpose
    of the same construction.
    """
    if mode not in ("rows", "columns"):
        raise ValueError(f"mode must be 'rows' or 'columns', got {mode!r}")
    vecs = [tuple(v) for v in vectors]
    k = len(vecs)
    if k > n:
        raise DependentPrefixError(f"{k} vectors cannot be independent in dimension {n}")
    if any(len(v) != n for v in vecs):
        raise SizeMismatchError(f"prefix vectors must have length {n}")
    if mode == "columns":
        return complete_invertible(field, vecs, n, "rows").transpose()
    prefix = Matrix(field, k, n, [x for v in vecs for x in v])
    _, rank, pivots = prefix.rref()
    if rank < k:
        raise DependentPrefixError(f"prefix has rank {rank} < {k}")
    rows = list(vecs)
    pivset = set(pivots)
    for j in range(n):
        if j not in pivset:
            e = [0] * n
            e[j] = 1
            rows.append(tuple(e))
    return Matrix.from_rows(field, rows)


def companion_matrix(f: Poly) -> Matrix:
    """Companion matrix: ones on the superdiagonal, negated coefficients in
    the last row; its characteristic polynomial is f."""
    if f.degree < 1:
        raise ConstantPolynomialError("companion matrix needs degree >= 1")
    if not f.is_monic:
        raise NotMonicError("companion matrix needs a monic polynomial")
    field = f.field
    d = f.degree
    neg = field.neg
    ent = [0] * (d * d)
    for i in range(d - 1):
        ent[i * d + i + 1] = 1
    for j in range(d):
        ent[(d - 1) * d + j] = neg(f.coeffs[j])
    return Matrix(field, d, d, ent)
