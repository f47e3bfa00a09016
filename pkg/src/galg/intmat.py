"""Small exact integer/rational matrix helpers.

Matrices are tuples of row tuples.  Everything here is exact; nothing
goes through floating point.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix is not square")
    return m


def zeros(r: int, c: int | None = None) -> list[list[int]]:
    return [[0] * (r if c is None else c) for _ in range(r)]


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a)) if a else ()


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    if not a:
        return ()
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("incompatible dimensions for matrix product")
    bt = transpose(b) if b else ()
    if not bt:
        return tuple(() for _ in a)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def congruence(m: Sequence[Sequence[int]], p: Sequence[Sequence[int]]) -> tuple:
    """``Pᵀ M P``."""
    return matmul(matmul(transpose(p), m), p)


def mat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def det(a: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (piv * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = piv
    return sign * m[n - 1][n - 1]


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of a list of integer vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / rows[r][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def is_unimodular(p: Sequence[Sequence[int]]) -> bool:
    n = len(p)
    return all(len(row) == n for row in p) and (n == 0 or abs(det(p)) == 1)


def block_diag(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    n, m = len(a), len(b)
    out = zeros(n + m)
    for i in range(n):
        out[i][:n] = a[i]
    for i in range(m):
        out[n + i][n:] = b[i]
    return as_matrix(out)


def random_unimodular(n: int, steps: int, rng: random.Random, max_mult: int = 2) -> Matrix:
    """Product of ``steps`` random elementary row operations (and sign flips)."""
    p = [list(row) for row in identity(n)]
    if n == 0:
        return ()
    for _ in range(steps):
        kind = rng.random()
        if n > 1 and kind < 0.8:
            i, j = rng.sample(range(n), 2)
            c = rng.choice([k for k in range(-max_mult, max_mult + 1) if k])
            p[i] = [x + c * y for x, y in zip(p[i], p[j])]
        elif n > 1 and kind < 0.9:
            i, j = rng.sample(range(n), 2)
            p[i], p[j] = p[j], p[i]
        else:
            i = rng.randrange(n)
            p[i] = [-x for x in p[i]]
    return as_matrix(p)


def congruence_diagonal(sym: Sequence[Sequence]) -> list[Fraction]:
    """Diagonal entries of a rational congruence diagonalization of a symmetric matrix.

    Zero diagonal entries are kept, so the list length equals the size.
    """
    n = len(sym)
    s = [[Fraction(x) for x in row] for row in sym]
    diag = []
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if s[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if s[i][j] != 0), None)
            if off is None:
                diag.extend([Fraction(0)] * (n - k))
                break
            i, j = off
            # row/col i += row/col j gives s[i][i] = 2 s[i][j] != 0
            for c in range(n):
                s[i][c] += s[j][c]
            for r in range(n):
                s[r][i] += s[r][j]
            piv = i
        if piv != k:
            s[k], s[piv] = s[piv], s[k]
            for row in s:
                row[k], row[piv] = row[piv], row[k]
        d = s[k][k]
        for i in range(k + 1, n):
            f = s[i][k] / d
            if f:
                for c in range(k, n):
                    s[i][c] -= f * s[k][c]
                for r in range(k, n):
                    s[r][i] -= f * s[r][k]
        diag.append(d)
        k += 1
    return diag
