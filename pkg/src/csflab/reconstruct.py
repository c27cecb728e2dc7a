"""Induced-subgraph censuses, the reconstruction formula and lambda-matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import DomainError, check_limit
from .graphio import encode_graph6
from .graphs import CanonicalKey, Graph, canonical_key, enumerate_graphs, generate_special
from .linalg import bareiss_rank
from .partitions import Partition, enumerate_partitions, reduced_form, s_reduced_form
from .symmetric import stable_partition_census

MAX_MATRIX_N = 9


@dataclass(frozen=True)
class SubgraphCensus:
    """``counts[key]`` is the number of ``k``-subsets inducing the class ``key``."""

    k: int
    counts: Mapping[CanonicalKey, int]

    def __getitem__(self, h: Graph) -> int:
        return self.counts.get(canonical_key(h), 0)

    def total(self) -> int:
        return sum(self.counts.values())


def induced_subgraph_census(g: Graph, k: int) -> SubgraphCensus:
    if not 1 <= k <= g.n:
        raise DomainError(f"k must lie in 1..{g.n}, got {k}")
    counts: dict[bytes, int] = {}
    for subset in combinations(range(g.n), k):
        key = canonical_key(g.induced(subset))
        counts[key] = counts.get(key, 0) + 1
    return SubgraphCensus(k, MappingProxyType(dict(sorted(counts.items()))))


def reconstruct_coefficient(g: Graph, lam1, k: int) -> Fraction:
    """``c^G_lam1`` rebuilt from the ``k``-vertex induced subgraphs of ``g``.

    With ``m`` the weight of ``lam1``'s reduced form and ``lam2`` its
    ``k``-reduced form, returns
    ``sum_H c^H_lam2 * (G choose H) / C(n - m, k - m)`` over all ``k``-vertex
    isomorphism classes ``H``.
    """
    lam1 = Partition(lam1)
    n = g.n
    if lam1.weight != n:
        raise DomainError(f"{lam1} is not a partition of n={n}")
    if not 1 <= k <= n:
        raise DomainError(f"k must lie in 1..{n}, got {k}")
    m = reduced_form(lam1).weight
    if m > k:
        raise DomainError(f"{lam1} is not {k}-reducible: its reduced form has weight m={m} > k={k}")
    lam2 = s_reduced_form(lam1, k)
    census = induced_subgraph_census(g, k)
    total = 0
    for h in enumerate_graphs(k):
        count = census.counts.get(canonical_key(h), 0)
        if count:
            total += stable_partition_census(h).get(lam2, 0) * count
    return Fraction(total, math.comb(n - m, k - m))


@dataclass(frozen=True)
class LambdaMatrix:
    rows: tuple[Graph, ...]
    cols: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.cols[0].weight if self.cols else 0

    def entry(self, j: int, lam) -> int:
        return self.entries[j][self.cols.index(Partition(lam))]

    def is_upper_triangular(self) -> bool:
        return all(self.entries[j][i] == 0 for j in range(len(self.rows)) for i in range(min(j, len(self.cols))))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "columns": [str(lam) for lam in self.cols],
            "rows": [
                {"graph6": encode_graph6(g), "entries": [str(x) for x in row]}
                for g, row in zip(self.rows, self.entries)
            ],
            "rank": exact_rank(self),
        }


def lambda_matrix(family: Sequence[Graph]) -> LambdaMatrix:
    family = tuple(family)
    if not family:
        raise DomainError("lambda_matrix needs a nonempty family")
    n = family[0].n
    if any(g.n != n for g in family):
        raise DomainError("all graphs in a lambda-matrix family must have the same vertex count")
    check_limit("lambda_matrix n", n, MAX_MATRIX_N)
    cols = enumerate_partitions(n)
    entries = []
    for g in family:
        census = stable_partition_census(g)
        entries.append(tuple(census.get(lam, 0) for lam in cols))
    return LambdaMatrix(family, cols, tuple(entries))


def exact_rank(mat: LambdaMatrix) -> int:
    return bareiss_rank(mat.entries)


def k_lambda_family(n: int) -> tuple[Graph, ...]:
    """Complete multipartite graphs ``K_lam`` in canonical partition order."""
    return tuple(generate_special("complete-multipartite", lam) for lam in enumerate_partitions(n))


@dataclass(frozen=True)
class RelationRow:
    lam: Partition  # k-reducible partition of n
    lam_k: Partition  # its k-reduced form
    lhs: int  # (row vector of (G choose H)) times lambda-matrix, at lam_k
    multiplier: int  # C(n - m, k - m)
    census_value: int  # c^G_lam

    @property
    def equal(self) -> bool:
        return self.lhs == self.multiplier * self.census_value


@dataclass(frozen=True)
class MatrixRelationReport:
    graph: Graph
    k: int
    rows: tuple[RelationRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.equal for r in self.rows)


def verify_matrix_relation(g: Graph, k: int) -> MatrixRelationReport:
    """Check ``(G choose H_j)_j * M_k = (C(n-m_i, k-m_i) c^G_lam_i)_i`` column by column."""
    n = g.n
    if not 2 <= k < n:
        raise DomainError(f"k must satisfy 2 <= k < n={n}, got {k}")
    family = enumerate_graphs(k)
    census = induced_subgraph_census(g, k)
    weights = [census.counts.get(canonical_key(h), 0) for h in family]
    mat = lambda_matrix(family)
    lhs = {lam_k: sum(w * mat.entries[j][i] for j, w in enumerate(weights)) for i, lam_k in enumerate(mat.cols)}
    c_g = stable_partition_census(g)
    rows = []
    for lam in enumerate_partitions(n):
        m = reduced_form(lam).weight
        if m > k:
            continue
        lam_k = s_reduced_form(lam, k)
        rows.append(RelationRow(lam, lam_k, lhs[lam_k], math.comb(n - m, k - m), c_g.get(lam, 0)))
    return MatrixRelationReport(g, k, tuple(rows))
