"""Exact matrix rank over the rationals and over prime fields."""

from __future__ import annotations

from typing import Sequence

Matrix = Sequence[Sequence[int]]


def rank_rational(matrix: Matrix) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            row = rows[r]
            top = rows[rank]
            # exact division is guaranteed by Sylvester's identity
            rows[r] = [(p * row[c] - a * top[c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_mod_p(matrix: Matrix, p: int) -> int:
    """Rank over GF(p)."""
    if p == 2:
        return _rank_gf2(matrix)
    rows = [[x % p for x in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        top = [(x * inv) % p for x in rows[rank]]
        rows[rank] = top
        for r in range(rank + 1, len(rows)):
            a = rows[r][col]
            if a:
                rows[r] = [(x - a * y) % p for x, y in zip(rows[r], top)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_gf2(matrix: Matrix) -> int:
    # rows packed into ints; xor basis keyed by leading bit
    basis: dict[int, int] = {}
    for r in matrix:
        v = 0
        for j, x in enumerate(r):
            if x % 2:
                v |= 1 << j
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)
