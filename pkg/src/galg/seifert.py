"""Seifert matrices and the classical invariants read off from them."""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction
from typing import Sequence

from . import intmat
from .laurent import ONE, ZERO, LaurentPoly, lp_canonical

_T = LaurentPoly.monomial(1)


@dataclass(frozen=True)
class SeifertPair:
    """A Seifert matrix together with the number of link components.

    ``n = 2g + r - 1`` where ``n`` is the matrix size.  For knots the
    antisymmetrization ``M - Mᵀ`` must be unimodular; pass
    ``validate=False`` for restricted forms that need not satisfy this.
    """

    mat: intmat.Matrix
    r: int = 1
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        object.__setattr__(self, "mat", intmat.as_matrix(self.mat))
        if not validate:
            return
        n = len(self.mat)
        if self.r < 1:
            raise ValueError(f"component count must be positive, got r={self.r}")
        excess = n - self.r + 1
        if excess < 0 or excess % 2:
            raise ValueError(f"n - r + 1 = {excess} must be even and non-negative")
        if self.r == 1 and n > 0:
            d = intmat.det(intmat.mat_sub(self.mat, intmat.transpose(self.mat)))
            if d != 1:
                raise ValueError(f"det(M - M^T) = {d}, expected 1 for a knot")

    @property
    def size(self) -> int:
        return len(self.mat)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.mat)


def _mat(s) -> intmat.Matrix:
    return s.mat if isinstance(s, SeifertPair) else intmat.as_matrix(s)


def _cofactor_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = ZERO
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _cofactor_det(minor)
        total = total - term if j % 2 else total + term
    return total


def _bareiss_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign, prev = 1, ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (piv * a[i][j] - a[i][k] * a[k][j]).divexact(prev)
        prev = piv
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def poly_det(m: Sequence[Sequence[LaurentPoly]], method: str = "auto") -> LaurentPoly:
    """Determinant of a matrix of Laurent polynomials.

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"`` (cofactor up to 4x4).
    """
    if method == "auto":
        method = "cofactor" if len(m) <= 4 else "bareiss"
    if method == "cofactor":
        return _cofactor_det(m)
    if method == "bareiss":
        return _bareiss_det(m)
    raise ValueError(f"unknown determinant method {method!r}")


def alexander_matrix(mat) -> list[list[LaurentPoly]]:
    """``t M - Mᵀ`` with Laurent polynomial entries."""
    m = _mat(mat)
    return [[_T * m[i][j] - m[j][i] for j in range(len(m))] for i in range(len(m))]


def alexander_determinant(mat, method: str = "auto") -> LaurentPoly:
    """Unnormalized ``det(t M - Mᵀ)``."""
    return poly_det(alexander_matrix(mat), method)


def alexander_polynomial(s) -> LaurentPoly:
    d = alexander_determinant(s)
    return d if d.is_zero() else lp_canonical(d)


def signature(s) -> int:
    """Signature of ``M + Mᵀ`` via exact rational congruence diagonalization."""
    m = _mat(s)
    sym = intmat.mat_add(m, intmat.transpose(m))
    diag = intmat.congruence_diagonal(sym)
    return sum(1 for d in diag if d > 0) - sum(1 for d in diag if d < 0)


def genus(s: SeifertPair) -> int:
    return (s.size - s.r + 1) // 2


def congruent_transform(s: SeifertPair, p) -> SeifertPair:
    """Base change ``Pᵀ M P`` by a unimodular ``P``."""
    p = tuple(tuple(int(x) for x in row) for row in p)
    if len(p) != s.size or any(len(row) != s.size for row in p):
        raise ValueError(f"dimension mismatch: P must be {s.size}x{s.size}")
    if not intmat.is_unimodular(p):
        raise ValueError("P is not unimodular")
    return SeifertPair(intmat.congruence(s.mat, p), s.r)


def stabilize(s: SeifertPair) -> SeifertPair:
    n = s.size
    out = intmat.zeros(n + 2)
    for i in range(n):
        out[i][:n] = s.mat[i]
    out[n][n + 1] = 1
    return SeifertPair(out, s.r)


def block_sum(s1: SeifertPair, s2: SeifertPair) -> SeifertPair:
    return SeifertPair(intmat.block_diag(s1.mat, s2.mat), s1.r + s2.r - 1)


def is_alexander_trivial(s) -> bool:
    """True iff ``det(t M - Mᵀ)`` equals ``t^(n/2)`` exactly."""
    m = _mat(s)
    if len(m) % 2:
        raise ValueError("Alexander triviality defined for even rank")
    return alexander_determinant(m) == LaurentPoly.monomial(len(m) // 2)


def restrict(s, basis_columns: Sequence[Sequence[int]]) -> intmat.Matrix:
    """Gram matrix ``Vᵀ M V`` of the form on the span of the given column vectors."""
    m = _mat(s)
    v = intmat.transpose(basis_columns)
    return intmat.as_matrix(intmat.congruence(m, v)) if basis_columns else ()


def symmetrized(s) -> list[list[Fraction]]:
    m = _mat(s)
    return [[Fraction(m[i][j] + m[j][i]) for j in range(len(m))] for i in range(len(m))]
