"""Bounded subgroup searches giving bounds on the algebraic genus and Taylor's invariant.

Neither quantity has a known decision procedure, so every search runs
over vectors with entries in ``[-B, B]`` and reports what it certifies:
an *upper* bound for the algebraic genus, a *lower* bound for the
maximal isotropic rank.  Witnesses are re-verified exactly before they
are returned.

Alexander-trivial subgroups are searched through symplectic bases for
``M - Mᵀ``: any such subgroup has unimodular antisymmetrization and so
admits one.  Candidate vectors are primitive, sign-normalized (first
nonzero entry positive) and ordered by L1 norm, then lexicographically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

import numpy as np

from . import intmat
from .laurent import LaurentPoly
from .numtheory import AnisotropyCertificate, anisotropy_certificate
from .seifert import SeifertPair, alexander_determinant, genus, is_alexander_trivial, restrict, stabilize

ALEXANDER_TRIVIAL = "alexander-trivial"
ISOTROPIC = "isotropic"


@dataclass(frozen=True)
class SubgroupWitness:
    columns: tuple[tuple[int, ...], ...]
    kind: str

    @property
    def rank(self) -> int:
        return len(self.columns)

    @property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        """The ``n x rank`` matrix whose columns generate the subgroup."""
        return intmat.transpose(self.columns)


@dataclass(frozen=True)
class TaylorResult:
    lower_rank: int
    exact: bool
    taylor_value: int | tuple[int, int]
    witness: SubgroupWitness | None = None
    certificate: AnisotropyCertificate | None = None


def verify_witness(s, w: SubgroupWitness) -> bool:
    """Independent exact check of a witness against its defining equation."""
    m = s.mat if isinstance(s, SeifertPair) else intmat.as_matrix(s)
    cols = [list(c) for c in w.columns]
    if intmat.rank(cols) != len(cols):
        return False
    gram = restrict(m, cols)
    if w.kind == ISOTROPIC:
        return all(x == 0 for row in gram for x in row)
    if w.kind == ALEXANDER_TRIVIAL:
        return len(cols) % 2 == 0 and alexander_determinant(gram) == LaurentPoly.monomial(len(cols) // 2)
    raise ValueError(f"unknown witness kind {w.kind!r}")


def candidate_vectors(n: int, bound: int) -> list[tuple[int, ...]]:
    """Primitive vectors in ``[-bound, bound]^n`` with first nonzero entry positive."""
    out = []
    for v in product(range(-bound, bound + 1), repeat=n):
        lead = next((x for x in v if x), 0)
        if lead > 0 and gcd(*v) == 1:
            out.append(v)
    out.sort(key=lambda v: (sum(abs(x) for x in v), v))
    return out


def _array(vectors, m):
    big = max((abs(x) for row in m for x in row), default=0)
    bound = max((abs(x) for v in vectors for x in v), default=0)
    n = len(m)
    safe = (n * n * (big + 1) * (bound + 1) ** 2) < 2**62
    dtype = np.int64 if safe else object
    return np.array(vectors, dtype=dtype).reshape(len(vectors), n), np.array(m, dtype=dtype).reshape(n, n)


_CHUNK = 256


def _alexander_trivial_mask(R: np.ndarray, k: int) -> np.ndarray:
    """Float pre-filter: ``det(t R - Rᵀ)`` could equal ``t^k`` at ``2k + 1`` sample points.

    Never rejects a true solution (tolerance scaled by the Hadamard bound);
    survivors are re-checked exactly.
    """
    ok = np.ones(len(R), dtype=bool)
    Rf = R.astype(float)
    Rt = np.swapaxes(Rf, 1, 2)
    for t in range(-k, k + 1):
        A = t * Rf - Rt
        d = np.linalg.det(A)
        scale = np.prod(np.linalg.norm(A, axis=2) + 1.0, axis=1)
        ok &= np.abs(d - float(t) ** k) <= 1e-9 * scale + 0.5
    return ok


def _symplectic_search(m, vectors, k):
    """First rank-2k Alexander-trivial subgroup spanned by a symplectic basis from ``vectors``.

    Pairs ``(u, w)`` with ``ω(u, w) = ±1`` are chosen with increasing first
    index, each ω-orthogonal to the earlier pairs; the last pair is tested
    in batch.
    """
    V, M = _array(vectors, m)
    if len(vectors) == 0:
        return None
    target = LaurentPoly.monomial(k)

    def last_pair(chosen, allowed, min_first):
        C = np.array(chosen, dtype=int)
        Vc = V[C]
        Rcc = Vc @ M @ Vc.T if len(C) else np.zeros((0, 0), dtype=V.dtype)
        a = allowed
        Va = V[a]
        Ma = Va @ M  # rows: v_aᵀ M
        firsts = np.flatnonzero(a >= min_first)
        for lo in range(0, len(firsts), _CHUNK):
            xs = firsts[lo:lo + _CHUNK]
            th = Ma[xs] @ Va.T  # θ(a_x, a_y)
            tht = (Ma @ Va[xs].T).T  # θ(a_y, a_x)
            om = th - tht
            xi, yi = np.nonzero((np.abs(om) == 1) & (a[None, :] > a[xs][:, None]))
            if len(xi) == 0:
                continue
            px, py = xs[xi], yi
            if k == 1:
                # with ω = ±1 the 2x2 restriction is Alexander trivial iff det R = 0
                qx = np.einsum("ij,ij->i", Ma[px], Va[px])
                qy = np.einsum("ij,ij->i", Ma[py], Va[py])
                keep = qx * qy - th[xi, yi] * tht[xi, yi] == 0
            else:
                size = 2 * k
                R = np.zeros((len(px), size, size), dtype=V.dtype)
                c = len(C)
                R[:, :c, :c] = Rcc
                for col, idx in ((c, px), (c + 1, py)):
                    R[:, :c, col] = (Vc @ M @ Va[idx].T).T
                    R[:, col, :c] = Ma[idx] @ Vc.T
                R[:, c, c] = np.einsum("ij,ij->i", Ma[px], Va[px])
                R[:, c + 1, c + 1] = np.einsum("ij,ij->i", Ma[py], Va[py])
                R[:, c, c + 1] = th[xi, yi]
                R[:, c + 1, c] = tht[xi, yi]
                keep = _alexander_trivial_mask(R, k)
            for h in np.flatnonzero(keep):
                pair = list(chosen) + [int(a[px[h]]), int(a[py[h]])]
                if alexander_determinant(restrict(m, [vectors[i] for i in pair])) == target:
                    return pair
        return None

    def rec(level, chosen, allowed, min_first):
        if level == k - 1:
            return last_pair(chosen, allowed, min_first)
        Va = V[allowed]
        Ma = Va @ M
        for x in np.flatnonzero(allowed >= min_first):
            u = int(allowed[x])
            om_u = Va @ Ma[x] - Ma @ Va[x]
            for y in np.flatnonzero((np.abs(om_u) == 1) & (allowed > u)):
                om_w = Va @ Ma[y] - Ma @ Va[y]
                rest = allowed[(om_u == 0) & (om_w == 0)]
                found = rec(level + 1, chosen + [u, int(allowed[y])], rest, u + 1)
                if found:
                    return found
        return None

    hit = rec(0, [], np.arange(len(vectors)), 0)
    return None if hit is None else [vectors[c] for c in hit]


def galg_upper_bound(s: SeifertPair, coeff_bound: int = 3, stabilize_times: int = 0):
    """Upper bound for the algebraic genus from the largest Alexander-trivial subgroup found.

    Returns ``(bound, witness)``; ``witness`` is ``None`` when no
    subgroup was found, in which case the bound is the genus.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    for _ in range(stabilize_times):
        s = stabilize(s)
    g, n = genus(s), s.size
    vectors = None
    for k in range(g, 0, -1):
        if 2 * k == n:
            # index-d sublattices scale det(M - Mᵀ) by d², so only the full lattice can qualify
            if is_alexander_trivial(s):
                cols = intmat.identity(n)
                return g - k, SubgroupWitness(cols, ALEXANDER_TRIVIAL)
            continue
        if vectors is None:
            vectors = candidate_vectors(n, coeff_bound)
        cols = _symplectic_search(s.mat, vectors, k)
        if cols is not None:
            w = SubgroupWitness(tuple(cols), ALEXANDER_TRIVIAL)
            if not verify_witness(s, w):
                raise AssertionError(f"search returned an invalid witness {w}")
            return g - k, w
    return g, None


def _isotropic_search(m, vectors, d):
    V, M = _array(vectors, m)
    A = V @ M
    N = len(vectors)
    if N == 0:
        return None

    def dfs(start, allowed, chosen):
        if len(chosen) == d:
            return chosen
        for i in np.flatnonzero(allowed[start:]) + start:
            cols = chosen + [int(i)]
            if intmat.rank([vectors[c] for c in cols]) < len(cols):
                continue
            ok = allowed & (V @ A[i] == 0) & (A @ V[i] == 0)
            found = dfs(int(i) + 1, ok, cols)
            if found:
                return found
        return None

    hit = dfs(0, np.ones(N, dtype=bool), [])
    return None if hit is None else [vectors[c] for c in hit]


def isotropic_rank(s: SeifertPair, coeff_bound: int = 3) -> TaylorResult:
    """Bounds on Taylor's invariant ``g - a(θ)`` for a knot.

    ``a(θ)`` is the largest rank of a subgroup on which the Seifert form
    vanishes.  The search gives a lower bound for it; the value is exact
    when the bound reaches ``g`` or the form is provably anisotropic.
    """
    if s.r != 1:
        raise ValueError("Taylor invariant requires a knot")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be positive")
    g, n = genus(s), s.size
    if g == 0:
        return TaylorResult(0, True, 0)
    cert = anisotropy_certificate(s)
    if cert is not None:
        return TaylorResult(0, True, g, certificate=cert)
    vectors = [v for v in candidate_vectors(n, coeff_bound) if _quad(s.mat, v) == 0]
    if is_alexander_trivial(s):
        # Taylor's invariant is at most g_alg, which is 0 here, so a(θ) = g
        # even if no isotropic basis lies inside the box
        cols = _isotropic_search(s.mat, vectors, g)
        w = None if cols is None else SubgroupWitness(tuple(cols), ISOTROPIC)
        if w is not None and not verify_witness(s, w):
            raise AssertionError(f"search returned an invalid witness {w}")
        return TaylorResult(g, True, 0, witness=w)
    for d in range(g, 0, -1):
        cols = _isotropic_search(s.mat, vectors, d)
        if cols is not None:
            w = SubgroupWitness(tuple(cols), ISOTROPIC)
            if not verify_witness(s, w):
                raise AssertionError(f"search returned an invalid witness {w}")
            exact = d == g
            return TaylorResult(d, exact, 0 if exact else (0, g - d), witness=w)
    return TaylorResult(0, False, (0, g))


def _quad(m, v) -> int:
    return sum(v[i] * m[i][j] * v[j] for i in range(len(v)) for j in range(len(v)))


def satellite_bound(bound_pattern_unknot: int, bound_companion: int) -> int:
    """Bound for a satellite: pattern-in-unknot bound plus companion bound."""
    if bound_pattern_unknot < 0 or bound_companion < 0:
        raise ValueError("bounds must be non-negative")
    return bound_pattern_unknot + bound_companion


def satellite_matrix(pattern: SeifertPair, block) -> SeifertPair:
    """Block sum of a pattern Seifert matrix with an Alexander-trivial companion block."""
    x = block.mat if isinstance(block, SeifertPair) else intmat.as_matrix(block)
    if len(x) % 2 or not is_alexander_trivial(x):
        raise ValueError("companion block not Alexander-one")
    return SeifertPair(intmat.block_diag(pattern.mat, x), pattern.r)


def band_move_bound(bound_before: int, moves_up: int, moves_down: int) -> int:
    """Bound after band moves: each component-decreasing move costs at most one."""
    if min(bound_before, moves_up, moves_down) < 0:
        raise ValueError("arguments must be non-negative")
    return bound_before + moves_down
