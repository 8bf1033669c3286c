"""Exact rational linear algebra on small dense matrices (python-flint)."""

from __future__ import annotations

from math import gcd
from typing import List, Sequence

from flint import fmpq, fmpq_mat, fmpz_mat


def _matrix(rows: Sequence[Sequence[int]], ncols: int) -> fmpq_mat:
    if not rows:
        return fmpq_mat(0, ncols)
    return fmpq_mat([list(r) for r in rows])


def rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    return _matrix(rows, ncols or len(rows[0])).rank()


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> List[List[fmpq]]:
    """Basis of {v : M v = 0}, read off the reduced row echelon form."""
    if not rows:
        return [[fmpq(1) if i == j else fmpq(0) for i in range(ncols)] for j in range(ncols)]
    red, r = _matrix(rows, ncols).rref()
    pivots = []
    for i in range(r):
        for j in range(ncols):
            if red[i, j] != 0:
                pivots.append(j)
                break
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [fmpq(0)] * ncols
        v[f] = fmpq(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i, f]
        basis.append(v)
    return basis


def determinant_nonzero(rows: Sequence[Sequence[int]]) -> bool:
    n = len(rows)
    return n == 0 or rank(rows, n) == n


def _row_index(columns: Sequence[dict]) -> dict:
    keys = sorted({r for col in columns for r, a in col.items() if a})
    return {r: i for i, r in enumerate(keys)}


def rank_of_columns(columns: Sequence[dict]) -> int:
    """Rank of a matrix given as sparse integer columns {row_key: value}.

    Works with K itself when it has no more rows than columns and with
    K^T K (same rank over Q) otherwise, so the dense matrix formed has
    min(rows, columns)^2 or rows * columns entries, whichever is smaller.
    """
    m = len(columns)
    if m == 0:
        return 0
    rows = _row_index(columns)
    if not rows:
        return 0
    if len(rows) <= m:
        dense = fmpz_mat(len(rows), m)
        for j, col in enumerate(columns):
            for r, a in col.items():
                if a:
                    dense[rows[r], j] = a
        return dense.rank()
    gram = fmpz_mat(m, m)
    by_row: dict = {}
    for j, col in enumerate(columns):
        for r, a in col.items():
            if a:
                by_row.setdefault(r, []).append((j, a))
    acc = [[0] * m for _ in range(m)]
    for entries in by_row.values():
        for p, a in entries:
            row = acc[p]
            for q, b in entries:
                row[q] += a * b
    for p in range(m):
        for q in range(m):
            if acc[p][q]:
                gram[p, q] = acc[p][q]
    return gram.rank()


def row_basis(columns: Sequence[dict]) -> List[dict]:
    """A basis of the span of sparse integer vectors, as sparse integer vectors.

    Fraction-free: the rows of the integer row echelon form, rescaled to
    primitive integer vectors.
    """
    if not columns:
        return []
    rows = _row_index(columns)
    if not rows:
        return []
    keys = sorted(rows, key=rows.get)
    dense = fmpz_mat(len(columns), len(keys))
    for i, col in enumerate(columns):
        for r, a in col.items():
            if a:
                dense[i, rows[r]] = a
    red, _, rk = dense.rref()
    out = []
    for i in range(rk):
        vec = {keys[j]: int(red[i, j]) for j in range(len(keys)) if red[i, j] != 0}
        g = 0
        for a in vec.values():
            g = gcd(g, a)
        out.append({r: a // g for r, a in vec.items()})
    return out
