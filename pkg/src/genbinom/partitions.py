"""Integer partitions and their elementary statistics."""

from __future__ import annotations

from bisect import insort
from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Partitions are plain immutable tuples, so equality, hashing and ordering
    are the tuple ones.  ``Partition()`` is the empty partition of 0.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        """Build a partition from parts given in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def multiplicities(self) -> dict[int, int]:
        """Sparse view part -> count, in decreasing part order."""
        return dict(Counter(self))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


def _generate(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> enumerate_partitions(3)
    ((3), (2,1), (1,1,1))
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _generate(n, n))


def enumerate_with_length(n: int, p: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` with exactly ``p`` parts, same order as ``enumerate_partitions``."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return tuple(mu for mu in enumerate_partitions(n) if len(mu) == p)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for k in range(n + 1):
        yield from enumerate_partitions(k)


def multiplicity(mu: Partition, i: int) -> int:
    if i < 1:
        raise ValueError("part index must be positive")
    return mu.count(i)


@lru_cache(maxsize=None)
def zeta(mu: Partition) -> int:
    """z_mu = prod_i i^{m_i} m_i!; |mu|!/z_mu permutations have cycle type mu."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def add_part(lam: Partition, i: int) -> Partition:
    """Return lam with one more part equal to ``i``."""
    if i < 1:
        raise ValueError("part must be positive")
    parts = [-p for p in lam]
    insort(parts, -i)
    return Partition(-p for p in parts)


def cells(mu: Partition) -> list[tuple[int, int]]:
    """Ferrers diagram cells (row, col), 1-based, row by row."""
    return [(i, j) for i, part in enumerate(mu, 1) for j in range(1, part + 1)]
