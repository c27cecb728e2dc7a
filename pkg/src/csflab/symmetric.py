"""Homogeneous symmetric functions in the monomial basis and the CSF."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from types import MappingProxyType
from typing import Mapping

from . import kernels
from .errors import DomainError, check_limit
from .graphs import Graph
from .partitions import Partition, enumerate_partitions, multiplicity_factorial, sort_key

MAX_CENSUS_N = 12
MAX_ORACLE_N = 6
MAX_PRODUCT_DEGREE = 12


def _fmt(q: Fraction) -> str:
    return str(q)


class MPoly:
    """Degree-``n`` symmetric function ``sum c_lam m_lam`` with exact rational coefficients.

    Zero coefficients are never stored and keys are kept in canonical
    partition order, so iteration and JSON output are deterministic.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping | None = None):
        acc: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if lam.weight != degree:
                raise DomainError(f"m_{lam} has degree {lam.weight}, expected {degree}")
            acc[lam] = acc.get(lam, Fraction(0)) + Fraction(c)
        self.degree = degree
        self._coeffs = {k: acc[k] for k in sorted(acc, key=sort_key) if acc[k]}

    @classmethod
    def monomial(cls, lam, coeff=1) -> "MPoly":
        lam = Partition(lam)
        return cls(lam.weight, {lam: coeff})

    @classmethod
    def zero(cls, degree: int) -> "MPoly":
        return cls(degree)

    @property
    def coeffs(self) -> Mapping[Partition, Fraction]:
        return MappingProxyType(self._coeffs)

    def __getitem__(self, lam) -> Fraction:
        return self._coeffs.get(Partition(lam), Fraction(0))

    def __iter__(self):
        return iter(self._coeffs.items())

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, tuple(self._coeffs.items())))

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(other, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            return product(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __repr__(self):
        if not self._coeffs:
            return f"MPoly({self.degree}, 0)"
        terms = " + ".join(f"{c}*m[{lam}]" for lam, c in self._coeffs.items())
        return f"MPoly({self.degree}, {terms})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": "m",
            "coeffs": {str(lam): _fmt(c) for lam, c in self._coeffs.items()},
        }


def add(f: MPoly, g: MPoly) -> MPoly:
    if f.degree != g.degree:
        raise DomainError(f"cannot add degree {f.degree} and degree {g.degree}")
    out = dict(f.coeffs)
    for lam, c in g:
        out[lam] = out.get(lam, Fraction(0)) + c
    return MPoly(f.degree, out)


def scale(f: MPoly, q) -> MPoly:
    q = Fraction(q)
    return MPoly(f.degree, {lam: q * c for lam, c in f})


def _arrangements(parts: tuple, caps: tuple):
    """Distinct placements of ``parts`` (with zeros) into slots bounded by ``caps``."""
    remaining = {}
    for p in parts:
        remaining[p] = remaining.get(p, 0) + 1
    zeros = len(caps) - len(parts)
    if zeros < 0:
        return
    remaining[0] = zeros
    slot = [0] * len(caps)

    def rec(i):
        if i == len(caps):
            yield tuple(slot)
            return
        for value in list(remaining):
            if remaining[value] and value <= caps[i]:
                remaining[value] -= 1
                slot[i] = value
                yield from rec(i + 1)
                remaining[value] += 1

    yield from rec(0)


def product(f: MPoly, g: MPoly) -> MPoly:
    """Monomial-basis product.

    ``[m_nu](fg)`` is read off as the coefficient of the single monomial
    ``x_1^nu_1 ... x_l^nu_l`` in the expanded product over ``deg f + deg g``
    variables: only monomials of ``f`` supported inside ``nu``'s support can
    contribute, so each is an arrangement ``alpha <= nu`` of some ``lam`` and
    must pair with ``nu - alpha``, an arrangement of some ``mu`` in ``g``.
    """
    total = f.degree + g.degree
    check_limit("product degree", total, MAX_PRODUCT_DEGREE)
    out = {}
    for nu in enumerate_partitions(total):
        acc = Fraction(0)
        for lam, a in f:
            for alpha in _arrangements(tuple(lam), tuple(nu)):
                beta = Partition.from_sizes(x - y for x, y in zip(nu, alpha) if x != y)
                b = g[beta] if beta.weight == g.degree else 0
                if b:
                    acc += a * b
        if acc:
            out[nu] = acc
    return MPoly(total, out)


def _decode_block_code(code: int) -> Partition:
    sizes = []
    s = 1
    while code:
        sizes.extend([s] * (code & 15))
        code >>= 4
        s += 1
    return Partition.from_sizes(sizes)


@lru_cache(maxsize=1 << 16)
def stable_partition_census(g: Graph) -> Mapping[Partition, int]:
    """Number of independent lam-partitions of ``g`` for every ``lam`` (zeros omitted)."""
    check_limit("stable_partition_census n", g.n, MAX_CENSUS_N)
    raw = kernels.stable_census(g.n, list(g.adj))
    census = {_decode_block_code(code): count for code, count in raw.items()}
    return MappingProxyType({lam: census[lam] for lam in sorted(census, key=sort_key)})


@lru_cache(maxsize=1 << 16)
def csf(g: Graph) -> MPoly:
    """Chromatic symmetric function of ``g`` in the monomial basis."""
    census = stable_partition_census(g)
    return MPoly(g.n, {lam: multiplicity_factorial(lam) * c for lam, c in census.items()})


def csf_coloring_oracle(g: Graph) -> MPoly:
    """CSF by brute force over all colourings with ``n`` colours.

    ``[m_lam]`` is the number of proper colourings that use colour ``i``
    exactly ``lam_i`` times (and no other colour), i.e. the coefficient of the
    monomial ``x_1^lam_1 x_2^lam_2 ...``.
    """
    check_limit("csf_coloring_oracle n", g.n, MAX_ORACLE_N)
    n = g.n
    edges = g.sorted_edges()
    counts: dict[tuple, int] = {}
    for colouring in cartesian(range(n), repeat=n):
        if any(colouring[u] == colouring[v] for u, v in edges):
            continue
        usage = [0] * n
        for c in colouring:
            usage[c] += 1
        if all(usage[i] >= usage[i + 1] for i in range(n - 1)):
            key = tuple(u for u in usage if u)
            counts[key] = counts.get(key, 0) + 1
    return MPoly(n, counts)


def specialize_ones(f: MPoly, k: int) -> Fraction:
    """Evaluate at ``x_1 = ... = x_k = 1`` and all other variables 0."""
    if k < 0:
        raise DomainError(f"k must be non-negative: {k}")
    total = Fraction(0)
    for lam, c in f:
        if len(lam) <= k:
            total += c * Fraction(math.perm(k, len(lam)), multiplicity_factorial(lam))
    if f.degree == 0:
        return f[()]
    return total


def chromatic_polynomial(g: Graph) -> list[int]:
    """Coefficients (constant term first) of the chromatic polynomial of ``g``.

    Interpolates the ``n + 1`` values ``X_G(1^k)``, ``k = 0..n``.
    """
    f = csf(g)
    n = g.n
    ys = [specialize_ones(f, k) for k in range(n + 1)]
    # Newton forward differences on the nodes 0..n
    diffs = [ys[:]]
    for _ in range(n):
        prev = diffs[-1]
        diffs.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    coeffs = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]  # falling factorial k(k-1)...(k-j+1), constant first
    for j in range(n + 1):
        term = diffs[j][0] / math.factorial(j)
        for i, b in enumerate(basis):
            coeffs[i] += term * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= j * b
        basis = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise AssertionError("chromatic polynomial has non-integer coefficients")
    return [int(c) for c in coeffs]


def mpoly_from_json(obj: Mapping) -> MPoly:
    if obj.get("basis") != "m":
        raise DomainError("expected basis 'm'")
    return MPoly(int(obj["degree"]), {Partition.parse(k): Fraction(v) for k, v in obj["coeffs"].items()})
