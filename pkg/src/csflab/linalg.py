"""Exact linear algebra over the integers and rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q via fraction-free (Bareiss) elimination on Python ints."""
    m = [list(map(int, r)) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            a = m[r][col]
            for c in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                m[r][c] = (p * m[r][c] - a * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_left(rows: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Solve ``sum_i c_i * rows[i] = target`` for a square invertible ``rows``.

    Returns ``None`` when the matrix is singular.
    """
    n = len(rows)
    # transpose so the unknowns are columns: A c = target with A[j][i] = rows[i][j]
    a = [[Fraction(rows[i][j]) for i in range(n)] + [Fraction(target[j])] for j in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]
