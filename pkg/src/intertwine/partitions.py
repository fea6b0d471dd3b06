"""Integer partitions, conjugation, and the identities behind the dimension
formula for nilpotent pairs."""

from __future__ import annotations

from itertools import product as _cartesian

from .errors import EmptyListError


class Partition:
    """Weakly decreasing positive parts; the empty partition has weight 0."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        ps = tuple(int(x) for x in parts)
        for i, x in enumerate(ps):
            if x < 1:
                raise ValueError(f"parts must be positive, got {x}")
            if i and ps[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing, got {list(ps)}")
        self.parts = ps

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def first(self) -> int:
        """Largest part, 0 for the empty partition."""
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: part i counts original parts >= i."""
        return Partition(
            sum(1 for x in self.parts if x > i) for i in range(self.first)
        )

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def min_sum(partitions) -> int:
    """Sum of min over every index tuple, one part per partition.

    This is the direct multi-sum; conjugate_product evaluates the same
    quantity as a single sum over conjugate parts.
    """
    ps = list(partitions)
    if not ps:
        raise EmptyListError("min_sum needs at least one partition")
    if any(not p.parts for p in ps):
        return 0
    return sum(min(tup) for tup in _cartesian(*(p.parts for p in ps)))


def conjugate_product(partitions) -> int:
    """Sum over i of the product of the i-th conjugate parts, i up to the
    least largest part."""
    ps = list(partitions)
    if not ps:
        raise EmptyListError("conjugate_product needs at least one partition")
    m = min(p.first for p in ps)
    if m == 0:
        return 0
    conjs = [p.conjugate().parts for p in ps]
    total = 0
    for i in range(m):
        term = 1
        for c in conjs:
            term *= c[i]
        total += term
    return total


def nilpotent_pair_dim(lam: Partition, mu: Partition) -> int:
    """Dimension of the space of matrices intertwining the nilpotent model
    matrices with block structures lam and mu, over any field."""
    return conjugate_product([lam, mu])
