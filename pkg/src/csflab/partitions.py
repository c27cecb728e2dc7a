"""Integer partitions: enumeration, refinement order and reduced forms."""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache

from .errors import DomainError, check_limit

MAX_PARTITION_N = 40


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty partition (weight 0) is a legal value; it is the reduced form
    of an all-ones partition.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the textual form ``"3,2,1"``; the empty string is ``()``."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise DomainError(f"not a partition: {text!r}") from None
        return cls(parts)

    @classmethod
    def from_sizes(cls, sizes) -> "Partition":
        return cls(sorted(sizes, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"


def sort_key(lam: Partition):
    """Canonical order: ascending length, then lexicographically descending."""
    return (len(lam), tuple(-p for p in lam))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in canonical order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")
    check_limit("partition n", n, MAX_PARTITION_N)
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(sorted(out, key=sort_key))


@lru_cache(maxsize=None)
def _groupable(parts: tuple, bins: tuple) -> bool:
    # parts descending; bins = remaining capacities sorted descending
    if not parts:
        return all(b == 0 for b in bins)
    head, tail = parts[0], parts[1:]
    seen = set()
    for i, cap in enumerate(bins):
        if cap >= head and cap not in seen:
            seen.add(cap)
            nb = list(bins)
            nb[i] -= head
            if _groupable(tail, tuple(sorted(nb, reverse=True))):
                return True
    return False


def is_refinement(mu, lam) -> bool:
    """True iff ``mu <= lam``: the parts of ``lam`` are sums of disjoint groups of ``mu``'s parts."""
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight != lam.weight:
        raise DomainError(f"refinement needs equal weights: {mu.weight} != {lam.weight}")
    if len(mu) < len(lam):
        return False
    return _groupable(tuple(mu), tuple(lam))


def reduced_form(lam) -> Partition:
    return Partition(p for p in Partition(lam) if p > 1)


def equivalent(lam1, lam2) -> bool:
    return reduced_form(lam1) == reduced_form(lam2)


def s_reduced_form(lam, s: int) -> Partition | None:
    """The partition of ``s`` with the same reduced form, or ``None`` if none exists."""
    lam = Partition(lam)
    if s > lam.weight:
        raise DomainError(f"s={s} exceeds the weight {lam.weight}")
    core = reduced_form(lam)
    m = core.weight
    if m > s:
        return None
    return Partition(tuple(core) + (1,) * (s - m))


def multiplicity_factorial(lam) -> int:
    """Product of ``r_i!`` over the multiplicities ``r_i`` of the distinct parts."""
    return math.prod(math.factorial(r) for r in Counter(Partition(lam)).values())
