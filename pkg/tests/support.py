"""Shared helpers for the test suite."""

from intertwine import FiniteField, Matrix, Partition

_FIELD_CACHE = {}


def get_field(q):
    """Cached GF(q) for a prime power written as a plain integer."""
    if q not in _FIELD_CACHE:
        p = 2
        while p * p <= q and q % p:
            p += 1
        if q % p:
            p = q
        e = 0
        m = q
        while m > 1:
            assert m % p == 0, f"{q} is not a prime power"
            m //= p
            e += 1
        _FIELD_CACHE[q] = FiniteField(p, e)
    return _FIELD_CACHE[q]


def rand_matrix(rng, field, nrows, ncols):
    return Matrix(field, nrows, ncols, [rng.randrange(field.q) for _ in range(nrows * ncols)])


def rand_invertible(rng, field, n):
    while True:
        m = rand_matrix(rng, field, n, n)
        if m.rank() == n:
            return m


def rand_partition(rng, max_weight):
    w = rng.randint(0, max_weight)
    parts = []
    while w:
        part = rng.randint(1, w)
        parts.append(part)
        w -= part
    return Partition(sorted(parts, reverse=True))


def partitions_of(n):
    """All partitions of n (oracle-style enumeration)."""

    def gen(total, largest):
        if total == 0:
            yield []
            return
        for first in range(min(total, largest), 0, -1):
            for rest in gen(total - first, first):
                yield [first] + rest

    for parts in gen(n, n):
        yield Partition(parts)
