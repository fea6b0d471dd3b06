"""Kernel oracle, dimension formula, distance enumeration, bounds, conjugation."""

import random
from fractions import Fraction

import pytest

from intertwine import (
    BudgetExceededError,
    FiniteField,
    IntertwiningCode,
    LengthMismatchError,
    Matrix,
    Partition,
    Poly,
    SingularError,
    ZeroCodeError,
    complete_invertible,
    conjugate_code,
    dimension_formula,
    direct_sum,
    generalized_jordan_matrix,
    intertwiner_basis,
    is_zero_code,
    min_distance,
    nilpotent_matrix,
    rank_bounds,
    spectral_bounds,
    syndrome,
)
from intertwine.codes import _min_weight_scan
from support import get_field, rand_invertible, rand_matrix

F2 = FiniteField(2)
F3 = FiniteField(3)
F5 = FiniteField(5)


def brute_min_distance(code):
    """Independent oracle: materialize every nonzero codeword via codeword()."""
    q = code.field.q
    best = None
    for m in range(1, q**code.k):
        digits = []
        x = m
        for _ in range(code.k):
            digits.append(x % q)
            x //= q
        w = code.codeword(reversed(digits)).weight()
        best = w if best is None else min(best, w)
    return best


def embed(matrix, big):
    """Entrywise reinterpretation over an extension field sharing encodings."""
    return Matrix(big, matrix.nrows, matrix.ncols, matrix.entries)


def test_intertwiner_basis_examples():
    one = Matrix.zero(F2, 1, 1)
    code = intertwiner_basis([one], [one])
    assert code.k == 1 and code.basis == (Matrix(F2, 1, 1, [1]),)

    full = intertwiner_basis([Matrix.zero(F3, 2, 2)], [Matrix.zero(F3, 3, 3)])
    assert full.k == 6 and full.n == 6

    assert intertwiner_basis([Matrix.identity(F3, 2)], [Matrix.zero(F3, 2, 2)]).k == 0


def test_intertwiner_basis_is_canonical():
    rng = random.Random(57)
    a = rand_matrix(rng, F3, 3, 3)
    b = rand_matrix(rng, F3, 3, 3)
    code = intertwiner_basis([a], [b])
    # rebuilding the code from a shuffled, rescaled basis gives the same object
    mats = list(code.basis)
    rng.shuffle(mats)
    mats = [m.scale(2) for m in mats]
    assert IntertwiningCode(F3, 3, 3, mats) == code
    for x in code.basis:
        assert (a * x - x * b).is_zero


def test_multi_pair_intersection():
    rng = random.Random(59)
    for _ in range(20):
        a1, a2 = (rand_matrix(rng, F2, 3, 3) for _ in range(2))
        b1, b2 = (rand_matrix(rng, F2, 3, 3) for _ in range(2))
        joint = intertwiner_basis([a1, a2], [b1, b2])
        k1 = intertwiner_basis([a1], [b1]).k
        k2 = intertwiner_basis([a2], [b2]).k
        assert joint.k <= min(k1, k2)
        for x in joint.basis:
            assert all(m.is_zero for m in syndrome([a1, a2], [b1, b2], x))
    with pytest.raises(LengthMismatchError):
        intertwiner_basis([Matrix.zero(F2, 1, 1)], [])


def test_dimension_formula_examples():
    p = Poly(F2, (1, 1, 0, 1))
    a9 = generalized_jordan_matrix(p, Partition([3]))
    breakdown = dimension_formula(a9, a9)
    assert breakdown.total == 9
    assert len(breakdown.terms) == 1
    term = breakdown.terms[0]
    assert term.irr == p and term.contribution == 9
    assert term.lam == term.mu == Partition([3])

    n21 = nilpotent_matrix(F2, Partition([2, 1]))
    n2 = nilpotent_matrix(F2, Partition([2]))
    assert dimension_formula(n21, n2).total == 3

    empty = dimension_formula(Matrix.identity(F2, 2), Matrix.zero(F2, 2, 2))
    assert empty.total == 0 and empty.terms == ()


def test_is_zero_code_examples():
    assert is_zero_code(Matrix.identity(F2, 2), Matrix.zero(F2, 2, 2))
    n2 = nilpotent_matrix(F2, Partition([2]))
    assert not is_zero_code(n2, n2)
    comp = Matrix(F2, 2, 2, [0, 1, 1, 1])  # companion of t^2 + t + 1
    assert is_zero_code(comp, Matrix.identity(F2, 2))


def test_formula_matches_oracle_over_larger_extensions():
    rng = random.Random(109)
    for q in (8, 27):
        field = get_field(q)
        for _ in range(10):
            r, s = rng.randint(1, 4), rng.randint(1, 4)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            assert dimension_formula(a, b).total == intertwiner_basis([a], [b]).k


def test_zero_test_biconditional():
    rng = random.Random(61)
    for q in (2, 3, 4, 5):
        field = get_field(q)
        for _ in range(25):
            r, s = rng.randint(1, 4), rng.randint(1, 4)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            assert is_zero_code(a, b) == (intertwiner_basis([a], [b]).k == 0)


def test_min_distance_examples():
    full = intertwiner_basis([Matrix.zero(F2, 2, 2)], [Matrix.zero(F2, 2, 2)])
    assert full.k == 4
    assert F2.q**full.k - 1 == 15
    assert min_distance(full) == 1

    diag = IntertwiningCode(F3, 2, 2, [Matrix.unit(F3, 2, 2, 0, 0), Matrix.unit(F3, 2, 2, 1, 1)])
    assert min_distance(diag) == 1


def test_min_distance_matches_brute_oracle():
    rng = random.Random(67)
    for q in (2, 3, 4, 5):
        field = get_field(q)
        for _ in range(10):
            r, s = rng.randint(1, 3), rng.randint(1, 3)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            code = intertwiner_basis([a], [b])
            if code.k == 0 or field.q**code.k > 3000:
                continue
            assert min_distance(code) == brute_min_distance(code)


def test_min_distance_errors():
    zero = intertwiner_basis([Matrix.identity(F2, 2)], [Matrix.zero(F2, 2, 2)])
    with pytest.raises(ZeroCodeError):
        min_distance(zero)
    full = intertwiner_basis([Matrix.zero(F2, 2, 2)], [Matrix.zero(F2, 2, 2)])
    with pytest.raises(BudgetExceededError) as exc:
        min_distance(full, budget=3)
    assert (exc.value.needed, exc.value.budget) == (15, 3)


def test_min_distance_range_split_is_deterministic():
    full = intertwiner_basis([Matrix.zero(F3, 2, 2)], [Matrix.zero(F3, 2, 2)])
    total = F3.q**full.k - 1
    whole = min_distance(full)
    cut = total // 3
    chunked = min(
        _min_weight_scan(full, 1, cut),
        _min_weight_scan(full, cut, 2 * cut),
        _min_weight_scan(full, 2 * cut, total + 1),
    )
    assert chunked == whole


def test_bounds_examples():
    rs = (3, 4)
    lo, hi = rank_bounds(Matrix.zero(F5, rs[0], rs[0]), Matrix.zero(F5, rs[1], rs[1]))
    assert (lo, hi) == (12, 12)

    n21 = nilpotent_matrix(F2, Partition([2, 1]))
    n2 = nilpotent_matrix(F2, Partition([2]))
    assert rank_bounds(n21, n2) == (2, 3)
    assert intertwiner_basis([n21], [n2]).k == 3

    rng = random.Random(71)
    a = rand_invertible(rng, F5, 3)
    b = rand_invertible(rng, F5, 2)
    assert rank_bounds(a, b) == (0, 6)

    n2 = nilpotent_matrix(F2, Partition([2]))
    assert spectral_bounds(n2, n2) == (1, 4)
    assert spectral_bounds(Matrix.identity(F2, 2), Matrix.zero(F2, 2, 2)) == (0, 0)
    d = Matrix.diagonal(F5, [1, 2])
    assert spectral_bounds(d, d) == (2, 2) == (intertwiner_basis([d], [d]).k,) * 2


def test_bound_sandwich_on_random_pairs():
    rng = random.Random(73)
    for q in (2, 3, 9):
        field = get_field(q)
        for _ in range(15):
            r, s = rng.randint(1, 5), rng.randint(1, 5)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            k = intertwiner_basis([a], [b]).k
            lo, hi = spectral_bounds(a, b)
            assert lo <= k <= hi
            lo, hi = rank_bounds(a, b)
            assert lo <= k <= hi


def test_conjugate_code_identity_and_composition():
    rng = random.Random(79)
    a = rand_matrix(rng, F5, 3, 3)
    b = rand_matrix(rng, F5, 2, 2)
    code = intertwiner_basis([a], [b])
    eye_r, eye_s = Matrix.identity(F5, 3), Matrix.identity(F5, 2)
    assert conjugate_code(code, eye_r, eye_s) == code

    r1, r2 = rand_invertible(rng, F5, 3), rand_invertible(rng, F5, 3)
    s1, s2 = rand_invertible(rng, F5, 2), rand_invertible(rng, F5, 2)
    once = conjugate_code(conjugate_code(code, r1, s1), r2, s2)
    assert once == conjugate_code(code, r1 * r2, s1 * s2)


def test_conjugate_code_matches_conjugated_pair():
    rng = random.Random(83)
    for q in (2, 3, 5):
        field = get_field(q)
        for _ in range(10):
            r, s = rng.randint(1, 4), rng.randint(1, 4)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            code = intertwiner_basis([a], [b])
            rm = rand_invertible(rng, field, r)
            sm = rand_invertible(rng, field, s)
            conjugated = conjugate_code(code, rm, sm)
            direct = intertwiner_basis([rm.inverse() * a * rm], [sm.inverse() * b * sm])
            assert conjugated == direct
            assert conjugated.k == code.k


def test_conjugation_can_spread_distance_to_rs():
    # start from the code spanned by a single matrix unit and conjugate by
    # all-ones bordered invertible matrices: the image is the all-ones
    # rank-one matrix, so the distance jumps from 1 to r*s
    r, s = 3, 2
    seed = IntertwiningCode(F5, r, s, [Matrix.unit(F5, r, s, 0, 0)])
    assert min_distance(seed) == 1
    t = complete_invertible(F5, [(1,) * r], r, mode="columns")
    smat = complete_invertible(F5, [(1,) * s], s, mode="rows")
    image = conjugate_code(seed, t.inverse(), smat)
    assert image.k == 1
    assert min_distance(image) == r * s
    assert image.basis[0] == Matrix(F5, r, s, [1] * (r * s))


def test_conjugate_code_rejects_singular():
    code = intertwiner_basis([Matrix.zero(F2, 2, 2)], [Matrix.zero(F2, 2, 2)])
    singular = Matrix(F2, 2, 2, [1, 1, 1, 1])
    with pytest.raises(SingularError):
        conjugate_code(code, singular, Matrix.identity(F2, 2))


def test_syndrome_examples():
    a = Matrix.identity(F2, 2)
    b = Matrix.zero(F2, 2, 2)
    x = Matrix.unit(F2, 2, 2, 0, 0)
    assert syndrome([a], [b], x) == [x]
    assert syndrome([b], [b], x) == [Matrix.zero(F2, 2, 2)]
    code = intertwiner_basis([b], [b])
    for w in code.basis:
        assert all(m.is_zero for m in syndrome([b], [b], w))


def test_shift_invariance():
    rng = random.Random(89)
    for q in (2, 3, 5, 9):
        field = get_field(q)
        for _ in range(8):
            n = rng.randint(1, 4)
            a = rand_matrix(rng, field, n, n)
            b = rand_matrix(rng, field, n, n)
            alpha = rng.randrange(q)
            shift_a = a - Matrix.scalar(field, n, alpha)
            shift_b = b - Matrix.scalar(field, n, alpha)
            assert intertwiner_basis([a], [b]) == intertwiner_basis([shift_a], [shift_b])


def test_extension_invariance():
    rng = random.Random(97)
    big = get_field(4)
    for _ in range(15):
        r, s = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, F2, r, r)
        b = rand_matrix(rng, F2, s, s)
        small_dim = intertwiner_basis([a], [b]).k
        big_dim = intertwiner_basis([embed(a, big)], [embed(b, big)]).k
        assert small_dim == big_dim


def test_direct_sum_additivity():
    rng = random.Random(101)
    for q in (2, 3):
        field = get_field(q)
        for _ in range(8):
            sizes = [rng.randint(1, 3) for _ in range(4)]
            a1 = rand_matrix(rng, field, sizes[0], sizes[0])
            a2 = rand_matrix(rng, field, sizes[1], sizes[1])
            b1 = rand_matrix(rng, field, sizes[2], sizes[2])
            b2 = rand_matrix(rng, field, sizes[3], sizes[3])
            lhs = intertwiner_basis([direct_sum([a1, a2])], [direct_sum([b1, b2])]).k
            rhs = sum(
                intertwiner_basis([x], [y]).k
                for x in (a1, a2) for y in (b1, b2)
            )
            assert lhs == rhs


def test_transpose_duality():
    rng = random.Random(103)
    for q in (2, 5):
        field = get_field(q)
        for _ in range(10):
            r, s = rng.randint(1, 4), rng.randint(1, 4)
            a = rand_matrix(rng, field, r, r)
            b = rand_matrix(rng, field, s, s)
            code = intertwiner_basis([a], [b])
            dual = intertwiner_basis([b.transpose()], [a.transpose()])
            assert dual.k == code.k
            transposed = IntertwiningCode(field, s, r, [x.transpose() for x in code.basis])
            assert transposed == dual
            assert sorted(x.weight() for x in transposed.basis) == sorted(
                x.weight() for x in dual.basis)


def test_dimension_below_rank_upper_bound_invariant():
    rng = random.Random(107)
    for _ in range(20):
        r, s = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, F3, r, r)
        b = rand_matrix(rng, F3, s, s)
        code = intertwiner_basis([a], [b])
        assert code.k <= rank_bounds(a, b)[1]


def test_code_params_and_singleton():
    full = intertwiner_basis([Matrix.zero(F2, 2, 2)], [Matrix.zero(F2, 2, 2)])
    d = min_distance(full)
    coded = full.with_distance(d, 1 << 24)
    params = coded.params()
    assert (params.n, params.k, params.d) == (4, 4, 1)
    assert params.rate == Fraction(1)
    assert params.d + params.k <= params.n + 1
    with pytest.raises(ValueError):
        full.params()


def test_codeword_materializes_combinations():
    code = intertwiner_basis([Matrix.zero(F3, 2, 2)], [Matrix.zero(F3, 2, 2)])
    w = code.codeword([1, 2, 0, 1])
    expected = code.basis[0] + code.basis[1].scale(2) + code.basis[3]
    assert w == expected
