"""Pairs of twists acting on Seifert matrices in normal position.

A pair of twists with coefficients ``m = -a x²`` and ``n = a y²`` can be
undone, at the level of Seifert matrices, by one stabilization followed by
a unimodular congruence.  This module builds both sides explicitly.
Indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from . import intmat
from .seifert import SeifertPair


@dataclass(frozen=True)
class TwistSpec:
    m: int
    n: int
    a: int
    x: int
    y: int

    def __post_init__(self):
        if self.m != -self.a * self.x**2 or self.n != self.a * self.y**2:
            raise ValueError(
                f"inconsistent twist spec: m={self.m}, n={self.n} vs a={self.a}, x={self.x}, y={self.y}"
            )


def _is_square(k: int) -> bool:
    return k >= 0 and isqrt(k) ** 2 == k


def _largest_square_divisor_root(k: int) -> int:
    k = abs(k)
    for x in range(isqrt(k), 0, -1):
        if k % (x * x) == 0:
            return x
    return 1


def factor_square_pair(m: int, n: int) -> TwistSpec:
    """Write ``m = -a x²``, ``n = a y²``, taking ``x`` as large as possible."""
    if not _is_square(-m * n):
        raise ValueError("twist pair not square-compatible")
    if m == 0 and n == 0:
        return TwistSpec(0, 0, 0, 1, 1)
    if m == 0:
        y = _largest_square_divisor_root(n)
        return TwistSpec(m, n, n // (y * y), 0, y)
    for x in range(isqrt(abs(m)), 0, -1):
        if m % (x * x):
            continue
        a = -m // (x * x)
        if n % a == 0 and _is_square(n // a):
            return TwistSpec(m, n, a, x, isqrt(n // a))
    raise AssertionError("unreachable: -m*n square always admits a factorization")


def _check_pair(s: SeifertPair, i: int, j: int) -> None:
    size = s.size
    if not (0 <= i < size and 0 <= j < size):
        raise ValueError(f"twist indices ({i}, {j}) out of range for a {size}x{size} matrix")
    if i == j:
        raise ValueError("twist indices must be distinct")


def apply_twists(s: SeifertPair, i: int, j: int, m: int, n: int) -> SeifertPair:
    """Twist the zero-framed unknotted classes ``i`` and ``j`` by ``m`` and ``n``."""
    _check_pair(s, i, j)
    if s.mat[i][i] != 0 or s.mat[j][j] != 0:
        raise ValueError("matrix not in twist normal position")
    out = [list(row) for row in s.mat]
    out[i][i] = -m
    out[j][j] = -n
    return SeifertPair(out, s.r)


def untwist_stabilize(s: SeifertPair, i: int, j: int, spec: TwistSpec) -> SeifertPair:
    """The reduced form ``Pᵀ M'' P`` of the stabilized twisted matrix.

    Its leading ``n x n`` block is the untwisted matrix; two rows and
    columns are appended.
    """
    _check_pair(s, i, j)
    a, x, y = spec.a, spec.x, spec.y
    if s.mat[i][i] != -spec.m or s.mat[j][j] != -spec.n:
        raise ValueError("diagonal entries inconsistent with TwistSpec")
    n = s.size
    out = intmat.zeros(n + 2)
    for r in range(n):
        out[r][:n] = s.mat[r]
    out[i][i] = 0
    out[j][j] = 0
    out[i][n] = -a * x
    out[i][n + 1] = x
    out[j][n + 1] = y
    out[n][j] = a * y
    out[n][n + 1] = 1
    return SeifertPair(out, s.r)


def stabilized_twisted(s: SeifertPair, i: int, j: int, spec: TwistSpec) -> intmat.Matrix:
    """``M''``: the twisted matrix stabilized with the extra ``-a x`` coupling in column ``n``."""
    _check_pair(s, i, j)
    n = s.size
    out = intmat.zeros(n + 2)
    for r in range(n):
        out[r][:n] = s.mat[r]
    out[i][n] = -spec.a * spec.x
    out[n][n + 1] = 1
    return intmat.as_matrix(out)


def reduction_matrix(size: int, i: int, j: int, spec: TwistSpec) -> intmat.Matrix:
    """The unimodular ``P`` with ``Pᵀ M'' P`` equal to :func:`untwist_stabilize` output."""
    p = [list(row) for row in intmat.identity(size + 2)]
    p[size][i] = spec.x
    p[size][j] = spec.y
    p[size + 1][j] = spec.a * spec.y
    return intmat.as_matrix(p)


def _blocks_dtype(*arrays):
    big = max((int(np.abs(a).max()) for a in arrays if a.size), default=0)
    # products of three factors in the identity stay far below 2^63 under this cap
    return np.int64 if big < 2**15 else object


def _twist_sides(A, B, C, D, a, x, y):
    """Both sides of the untwisting congruence, batched over the leading axis.

    ``A..D`` have shape ``(N, k, k)``; ``a, x, y`` have shape ``(N,)``.
    """
    n, k = A.shape[0], A.shape[1]
    eye = np.broadcast_to(np.eye(k, dtype=A.dtype), (n, k, k))
    zero = np.zeros((n, k, k), dtype=A.dtype)

    def scal(c):
        return c[:, None, None] * eye

    X, Y, AY, mAX = scal(x), scal(y), scal(a * y), scal(-a * x)
    left = np.block([[eye, zero, X, zero], [zero, eye, Y, AY], [zero, zero, eye, zero], [zero, zero, zero, eye]])
    middle = np.block(
        [
            [A + scal(a * x * x), B, mAX, zero],
            [C, D - scal(a * y * y), zero, zero],
            [zero, zero, zero, eye],
            [zero, zero, zero, zero],
        ]
    )
    right = np.block([[eye, zero, zero, zero], [zero, eye, zero, zero], [X, Y, eye, zero], [zero, AY, zero, eye]])
    rhs = np.block([[A, B, mAX, X], [C, D, zero, Y], [zero, AY, zero, eye], [zero, zero, zero, zero]])
    return left @ middle @ right, rhs


def _check_blocks(k, named):
    for name, blk in named:
        if blk.shape[-2:] != (k, k):
            raise ValueError(f"incompatible block dimensions: {name} must be {k}x{k}")


def verify_twist_identity(A, B, C, D, a: int, x: int, y: int, rhs_override=None) -> bool:
    """Check the block congruence identity used to untwist, with all blocks ``k x k``.

    Scalars ``x``, ``y``, ``a x``, ``a y`` stand for multiples of the
    identity.  ``rhs_override`` replaces the right-hand side (for
    soundness testing).
    """
    raw = [np.array(blk, dtype=object) for blk in (A, B, C, D)]
    if any(r.ndim != 2 for r in raw):
        raise ValueError("incompatible block dimensions: blocks must be 2-dimensional")
    k = raw[0].shape[0]
    _check_blocks(k, zip("ABCD", raw))
    scalars = np.array([a, x, y], dtype=object)
    dtype = _blocks_dtype(*raw, scalars)
    blocks = [r.astype(dtype)[None] for r in raw]
    a_, x_, y_ = (np.array([v], dtype=dtype) for v in (a, x, y))
    lhs, rhs = _twist_sides(*blocks, a_, x_, y_)
    if rhs_override is not None:
        rhs = np.array(rhs_override, dtype=object)[None]
        if rhs.shape != lhs.shape:
            return False
    return bool((lhs == rhs).all())


def verify_twist_identity_batch(A, B, C, D, a, x, y) -> np.ndarray:
    """Vectorized :func:`verify_twist_identity` over a leading batch axis.

    ``A..D`` have shape ``(N, k, k)`` and ``a, x, y`` shape ``(N,)``;
    returns one boolean per instance.
    """
    raw = [np.asarray(blk) for blk in (A, B, C, D)]
    if raw[0].ndim != 3:
        raise ValueError("incompatible block dimensions: expected (N, k, k) arrays")
    k = raw[0].shape[1]
    _check_blocks(k, zip("ABCD", raw))
    scal = [np.asarray(v) for v in (a, x, y)]
    dtype = _blocks_dtype(*raw, *scal)
    lhs, rhs = _twist_sides(*(r.astype(dtype) for r in raw), *(v.astype(dtype) for v in scal))
    return (lhs == rhs).reshape(len(lhs), -1).all(axis=1)
