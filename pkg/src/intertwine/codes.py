"""Intertwining codes: the spaces of matrices X with A_i X = X B_i.

Viewed entrywise, such a space is a linear code of length r*s.  The kernel
basis here is the ground truth everything else is checked against: it is
assembled by direct elimination on the r*s unknown entries of X, avoiding any
Kronecker-product vectorization convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .canonical import primary_decomposition, spectral_summary
from .errors import (
    BudgetExceededError,
    FieldMismatchError,
    LengthMismatchError,
    NotSquareError,
    SizeMismatchError,
    ZeroCodeError,
)
from .matrices import Matrix
from .partitions import Partition, conjugate_product
from .polys import Poly, gcd

#: Default ceiling on exhaustively enumerated codewords.
DEFAULT_BUDGET = 1 << 24

# Scalar-multiple rows are cached per basis element for fields up to this order.
_SCALAR_CACHE_LIMIT = 4096


@dataclass(frozen=True)
class CodeParams:
    """[n, k, d] parameters with the exact rate k/n."""

    n: int
    k: int
    d: int
    rate: Fraction


class IntertwiningCode:
    """A subspace of r x s matrices as a linear code of length n = r*s.

    The stored basis is canonical: the row-major vectorizations form a
    reduced-row-echelon basis, so two instances describe the same subspace
    exactly when their bases compare equal.  ``d`` and ``d_budget`` record a
    computed minimum distance and the enumeration budget used for it; they do
    not participate in equality.
    """

    __slots__ = ("field", "r", "s", "basis", "d", "d_budget")

    def __init__(self, field, r, s, basis, d=None, d_budget=None):
        if r < 1 or s < 1:
            raise SizeMismatchError("codes need positive block dimensions")
        mats = []
        for m in basis:
            if m.field != field:
                raise FieldMismatchError("basis matrix over a different field")
            if (m.nrows, m.ncols) != (r, s):
                raise SizeMismatchError(f"basis matrix is {m.nrows}x{m.ncols}, expected {r}x{s}")
            mats.append(m)
        self.field = field
        self.r = r
        self.s = s
        self.basis = _canonical_basis(field, r, s, mats)
        self.d = d
        self.d_budget = d_budget

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.r * self.s

    def codeword(self, coefficients) -> Matrix:
        """The linear combination of basis elements with the given coefficients."""
        coefficients = list(coefficients)
        if len(coefficients) != self.k:
            raise SizeMismatchError(f"expected {self.k} coefficients, got {len(coefficients)}")
        f = self.field
        add, mul = f.add, f.mul
        acc = [0] * self.n
        for c, mat in zip(coefficients, self.basis):
            if c:
                for i, v in enumerate(mat.entries):
                    if v:
                        acc[i] = add(acc[i], mul(c, v))
        return Matrix(f, self.r, self.s, acc)

    def with_distance(self, d, budget) -> "IntertwiningCode":
        return IntertwiningCode(self.field, self.r, self.s, self.basis, d, budget)

    def params(self) -> CodeParams:
        if self.d is None:
            raise ValueError("minimum distance has not been computed")
        return CodeParams(self.n, self.k, self.d, Fraction(self.k, self.n))

    def __eq__(self, other):
        if not isinstance(other, IntertwiningCode):
            return NotImplemented
        return (self.field == other.field and self.r == other.r
                and self.s == other.s and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.r, self.s, self.basis))

    def __repr__(self):
        return f"IntertwiningCode({self.field}, r={self.r}, s={self.s}, k={self.k}, d={self.d})"


def _canonical_basis(field, r, s, mats):
    if not mats:
        return ()
    stacked = Matrix(field, len(mats), r * s, [v for m in mats for v in m.entries])
    reduced, rank, _ = stacked.rref()
    n = r * s
    out = []
    for i in range(rank):
        out.append(Matrix(field, r, s, reduced.entries[i * n:(i + 1) * n]))
    return tuple(out)


def _check_pair(a: Matrix, b: Matrix):
    if not a.is_square or not b.is_square:
        raise NotSquareError("intertwining pairs must be square")
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")


def intertwiner_basis(a_list, b_list) -> IntertwiningCode:
    """Kernel-oracle basis of {X : A_i X = X B_i for every i}.

    The r*s entries of X are treated as unknowns and every pair contributes
    r*s homogeneous conditions; the canonical nullspace basis is returned.
    This is the brute-force oracle each closed-form result is tested against.
    """
    a_list = list(a_list)
    b_list = list(b_list)
    if len(a_list) != len(b_list):
        raise LengthMismatchError(f"{len(a_list)} left matrices vs {len(b_list)} right matrices")
    if not a_list:
        raise LengthMismatchError("at least one pair is required")
    for a, b in zip(a_list, b_list):
        _check_pair(a, b)
    field = a_list[0].field
    r = a_list[0].nrows
    s = b_list[0].nrows
    for a, b in zip(a_list, b_list):
        if a.field != field:
            raise FieldMismatchError("pairs over different fields")
        if a.nrows != r or b.nrows != s:
            raise SizeMismatchError("pairs have inconsistent block dimensions")
    n = r * s
    sub = field.sub
    rows = []
    for a, b in zip(a_list, b_list):
        ae, be = a.entries, b.entries
        for u in range(r):
            for v in range(s):
                row = [0] * n
                for t in range(r):
                    c = ae[u * r + t]
                    if c:
                        row[t * s + v] = c
                for t in range(s):
                    c = be[t * s + v]
                    if c:
                        idx = u * s + t
                        row[idx] = sub(row[idx], c)
                rows.append(row)
    system = Matrix(field, len(rows), n, [v for row in rows for v in row])
    kernel = system.nullspace()
    mats = [Matrix(field, r, s, vec.entries) for vec in kernel]
    return IntertwiningCode(field, r, s, mats)


@dataclass(frozen=True)
class FactorTerm:
    """Contribution of one shared irreducible factor to the dimension."""

    irr: Poly
    lam: Partition
    mu: Partition
    contribution: int


@dataclass(frozen=True)
class DimensionBreakdown:
    total: int
    terms: tuple[FactorTerm, ...]


def dimension_formula(a: Matrix, b: Matrix, seed: int = 0) -> DimensionBreakdown:
    """Closed-form dim of the intertwiner space of a single pair.

    Both matrices are primary-decomposed; every irreducible p dividing both
    characteristic polynomials contributes deg(p) times the conjugate-product
    pairing of its two partitions.  Equals the kernel-oracle dimension.
    """
    _check_pair(a, b)
    dec_a = primary_decomposition(a, seed)
    dec_b = primary_decomposition(b, seed)
    by_irr = {c.irr: c for c in dec_b.components}
    terms = []
    total = 0
    for ca in dec_a.components:
        cb = by_irr.get(ca.irr)
        if cb is None:
            continue
        amount = ca.degree * conjugate_product([ca.partition, cb.partition])
        terms.append(FactorTerm(ca.irr, ca.partition, cb.partition, amount))
        total += amount
    return DimensionBreakdown(total, tuple(terms))


def is_zero_code(a: Matrix, b: Matrix) -> bool:
    """True exactly when the intertwiner space of (a, b) is zero.

    One gcd of the two characteristic polynomials decides this: coprimality
    forces the zero code, and any common irreducible factor contributes a
    positive term to the dimension formula.  No factorization is needed.
    """
    _check_pair(a, b)
    return gcd(a.charpoly(), b.charpoly()).degree == 0


def min_distance(code: IntertwiningCode, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum Hamming weight by exhaustive ranked enumeration.

    All q^k - 1 nonzero coefficient vectors are visited in ranked order (the
    vector is the base-q digit string of its index, most significant digit
    first), each codeword is materialized and its nonzero entries counted.
    Raises unless q^k - 1 fits in the budget.
    """
    k = code.k
    if k == 0:
        raise ZeroCodeError("the zero code has no minimum distance")
    count = code.field.q**k - 1
    if count > budget:
        raise BudgetExceededError(count, budget)
    return _min_weight_scan(code, 1, count + 1)


def _min_weight_scan(code: IntertwiningCode, start: int, stop: int) -> int:
    """Minimum weight over codewords with ranked index in [start, stop).

    Disjoint ranges may be scanned independently and min-reduced; the result
    is identical to a single full scan.
    """
    field = code.field
    q = field.q
    k = code.k
    n = code.n
    if start >= stop:
        return n + 1
    vecs = [list(m.entries) for m in code.basis]
    mul = field.mul
    cache_rows = q <= _SCALAR_CACHE_LIMIT
    tables = [[None] * q for _ in range(k)] if cache_rows else None
    zero_row = [0] * n

    def scaled(i, c):
        if c == 0:
            return zero_row
        if c == 1:
            return vecs[i]
        if cache_rows:
            row = tables[i][c]
            if row is None:
                row = [mul(c, x) for x in vecs[i]]
                tables[i][c] = row
            return row
        return [mul(c, x) for x in vecs[i]]

    add = field.add
    digits = []
    m = start
    for _ in range(k):
        digits.append(m % q)
        m //= q
    digits.reverse()
    partial = [None] * k

    def recompute(pos):
        for i in range(pos, k):
            row = scaled(i, digits[i])
            if i == 0:
                partial[0] = row
            else:
                prev = partial[i - 1]
                partial[i] = [add(prev[t], row[t]) for t in range(n)]

    recompute(0)
    best = n + 1
    m = start
    while True:
        word = partial[k - 1]
        w = n - word.count(0)
        if w < best:
            best = w
            if best == 1:
                break
        m += 1
        if m >= stop:
            break
        i = k - 1
        while True:
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i -= 1
        recompute(i)
    return best


def rank_bounds(a: Matrix, b: Matrix) -> tuple[int, int]:
    """(lo, hi) with lo = (r - rk a)(s - rk b) and hi = lo + rk(a) rk(b)."""
    _check_pair(a, b)
    ra = a.rank()
    rb = b.rank()
    lo = (a.nrows - ra) * (b.nrows - rb)
    return lo, lo + ra * rb


def spectral_bounds(a: Matrix, b: Matrix, seed: int = 0) -> tuple[int, int]:
    """Eigenspace/generalized-eigenspace sandwich for the dimension.

    Per shared irreducible factor p, each of its deg(p) closure roots
    contributes (eigendim_a * eigendim_b) to the lower bound and
    (mult_a * mult_b) to the upper bound.
    """
    _check_pair(a, b)
    summary_a = {irr: (kdim, mdim) for irr, _, kdim, mdim in spectral_summary(a, seed)}
    lo = hi = 0
    for irr, d, kb, mb in spectral_summary(b, seed):
        got = summary_a.get(irr)
        if got is not None:
            ka, ma = got
            lo += d * ka * kb
            hi += d * ma * mb
    return lo, hi


def conjugate_code(code: IntertwiningCode, r_mat: Matrix, s_mat: Matrix) -> IntertwiningCode:
    """Image of the code under X -> R^{-1} X S, recanonicalized.

    The result equals the intertwiner space of the conjugated pairs; the
    dimension is preserved but the minimum distance generally is not.
    """
    if not r_mat.is_square or not s_mat.is_square:
        raise NotSquareError("conjugators must be square")
    if r_mat.field != code.field or s_mat.field != code.field:
        raise FieldMismatchError("conjugators over a different field")
    if r_mat.nrows != code.r or s_mat.nrows != code.s:
        raise SizeMismatchError(
            f"conjugators must be {code.r}x{code.r} and {code.s}x{code.s}"
        )
    t = r_mat.inverse()
    s_mat.inverse()  # raises SingularError if S is not invertible
    return IntertwiningCode(code.field, code.r, code.s,
                            [t * x * s_mat for x in code.basis])


def syndrome(a_list, b_list, x: Matrix) -> list[Matrix]:
    """The defect matrices A_i X - X B_i; all zero exactly for codewords."""
    a_list = list(a_list)
    b_list = list(b_list)
    if len(a_list) != len(b_list):
        raise LengthMismatchError(f"{len(a_list)} left matrices vs {len(b_list)} right matrices")
    out = []
    for a, b in zip(a_list, b_list):
        _check_pair(a, b)
        if a.nrows != x.nrows or b.nrows != x.ncols:
            raise SizeMismatchError("syndrome shapes are inconsistent")
        out.append(a * x - x * b)
    return out
