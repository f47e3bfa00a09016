"""Legendre symbols, diagonal quadratic forms and anisotropy certificates.

The main product is :func:`construct_counterexample`: a knot ``K(a,b,c,d)``
whose Seifert form is anisotropic, witnessed by a prime ``p`` at which
the diagonalized form splits as ``<u1, u2> + p <u3, u4>`` with both
binary pieces anisotropic mod ``p``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import Sequence

from . import intmat
from .seifert import SeifertPair, signature

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for ``n < 3.3e24``."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes():
    p = 3
    while True:
        if is_prime(p):
            yield p
        p += 2


def legendre(n: int, p: int) -> int:
    """Legendre symbol via Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(n % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def find_witness_prime(n: int) -> int:
    """Smallest odd prime ``p`` with ``(n/p) = -1``."""
    if n <= 0:
        raise ValueError("n must be positive")
    if is_square(n):
        raise ValueError("every odd prime gives symbol 0 or 1")
    # a non-square always has one (quadratic reciprocity + Dirichlet), so this terminates
    for p in odd_primes():
        if legendre(n, p) == -1:
            return p


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1 if k == 2 else 2
    if n > 1:
        out.append(n)
    return out


def squarefree_part(n: int) -> int:
    """Signed squarefree kernel: ``n`` divided by its largest square factor."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    m = abs(n)
    for p in prime_factors(m):
        while m % (p * p) == 0:
            m //= p * p
    return sign * m


@dataclass(frozen=True)
class QuadForm:
    """Diagonal form ``sum d_i x_i^2`` with nonzero integer coefficients."""

    diag: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(int(d) for d in self.diag))
        if any(d == 0 for d in self.diag):
            raise ValueError("zero coefficient: split off isotropic directions first")

    @property
    def rank(self) -> int:
        return len(self.diag)

    def __call__(self, v: Sequence[int]) -> int:
        return sum(d * x * x for d, x in zip(self.diag, v))

    def squarefree(self) -> "QuadForm":
        """Same rational isotropy class with every coefficient squarefree."""
        return QuadForm(tuple(squarefree_part(d) for d in self.diag))


def _binary_anisotropic_mod_p(u: Sequence[int], p: int) -> bool:
    # reduction of a p-unit diagonal form over F_p; rank >= 3 is always isotropic
    if len(u) <= 1:
        return True
    if len(u) == 2:
        return legendre(-u[0] * u[1], p) == -1
    return False


def anisotropic_at_prime(form: QuadForm, p: int) -> bool:
    """Exact anisotropy test over the p-adic numbers for odd ``p``.

    After reducing to squarefree coefficients the form splits as
    ``f1 + p f2`` with ``f1``, ``f2`` diagonal in p-units; it is
    anisotropic over Q_p iff both reductions are anisotropic over F_p.
    """
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    sf = form.squarefree()
    units = [d for d in sf.diag if d % p]
    multiples = [d // p for d in sf.diag if d % p == 0]
    return _binary_anisotropic_mod_p(units, p) and _binary_anisotropic_mod_p(multiples, p)


def anisotropic_by_criterion(a: int, b: int, p: int, M: int, N: int) -> bool:
    """Sufficient test for anisotropy of ``a x1² - b x2² + p (M x3² + N x4²)``.

    Requires ``(ab/p) = -1`` and ``(-MN/p) = -1``; ``False`` means inconclusive.
    """
    for name, v in (("a", a), ("b", b), ("M", M), ("N", N)):
        if v <= 0:
            raise ValueError(f"{name}={v} must be positive")
        if v % p == 0:
            raise ValueError(f"{name}={v} is divisible by p={p}")
    return legendre(a * b, p) == -1 and legendre(-M * N, p) == -1


def _half_values(diag: Sequence[int], bound: int) -> Counter:
    rng = range(-bound, bound + 1)
    return Counter(sum(d * x * x for d, x in zip(diag, v)) for v in product(rng, repeat=len(diag)))


def _count_nonzero_solutions(diag: Sequence[int], bound: int) -> int:
    h = len(diag) // 2
    left = _half_values(diag[:h], bound)
    right = _half_values(diag[h:], bound)
    return sum(c * right.get(-k, 0) for k, c in left.items()) - 1


def brute_force_isotropy(form, bound: int):
    """Smallest nonzero ``v`` with ``|v_i| <= bound`` and ``form(v) = 0``, or ``None``.

    Vectors are ordered by max-norm, then lexicographically (negative
    before positive).  ``None`` only certifies anisotropy inside the box.
    """
    diag = form.diag if isinstance(form, QuadForm) else tuple(form)
    if bound < 1:
        raise ValueError("bound must be positive")
    if not diag or _count_nonzero_solutions(diag, bound) == 0:
        return None
    h = len(diag) // 2
    for s in range(1, bound + 1):
        if _count_nonzero_solutions(diag, s) == 0:
            continue
        rng = range(-s, s + 1)
        table: dict[int, list[tuple[int, ...]]] = {}
        for w in product(rng, repeat=len(diag) - h):
            table.setdefault(sum(d * x * x for d, x in zip(diag[h:], w)), []).append(w)
        for u in product(rng, repeat=h):
            target = -sum(d * x * x for d, x in zip(diag[:h], u))
            u_top = max((abs(x) for x in u), default=0)
            for w in table.get(target, ()):
                if max(u_top, max((abs(x) for x in w), default=0)) == s:
                    return u + w
    raise AssertionError("solution count and enumeration disagree")


def k_abcd_matrix(a: int, b: int, c: int, d: int) -> SeifertPair:
    return SeifertPair(((a, 0, 1, 0), (0, b, 0, 1), (0, 0, c, 0), (0, 0, 0, d)), 1)


def diagonalize_kabcd(a: int, b: int, c: int, d: int) -> QuadForm:
    """Integral diagonal form rationally equivalent to the quadratic form of ``K(a,b,c,d)``."""
    if a <= 0 or b >= 0:
        raise ValueError(f"need a > 0 > b, got a={a}, b={b}")
    nb = -b
    return QuadForm((a, -nb, a * (4 * a * c - 1), nb * (4 * nb * d + 1)))


@dataclass(frozen=True)
class AnisotropyCertificate:
    kind: str  # "definite" or "local"
    form: QuadForm
    prime: int | None = None


def rational_diagonal_form(mat) -> tuple[QuadForm | None, int]:
    """Diagonalize ``v -> vᵀ M v`` over Q; returns (form, number of zero directions)."""
    m = mat.mat if isinstance(mat, SeifertPair) else intmat.as_matrix(mat)
    sym = intmat.mat_add(m, intmat.transpose(m))
    diag = intmat.congruence_diagonal(sym)
    zeros = sum(1 for x in diag if x == 0)
    # d = num/den lies in the square class of num*den
    ints = [x.numerator * x.denominator for x in diag if x != 0]
    return (QuadForm(ints) if ints else None), zeros


def anisotropy_certificate(form_or_mat) -> AnisotropyCertificate | None:
    """Proof that a quadratic form has no nonzero rational zero, if one is found.

    Accepts a :class:`QuadForm` or a Seifert matrix (whose quadratic form
    ``vᵀ M v`` is used).  ``None`` means no certificate, not isotropy.
    """
    if isinstance(form_or_mat, QuadForm):
        form = form_or_mat
    else:
        form, zeros = rational_diagonal_form(form_or_mat)
        if zeros or form is None:
            return None
    if all(d > 0 for d in form.diag) or all(d < 0 for d in form.diag):
        return AnisotropyCertificate("definite", form)
    sf = form.squarefree()
    if sf.rank == 2:
        # binary: isotropic iff -d1 d2 is a square
        if is_square(-sf.diag[0] * sf.diag[1]):
            return None
    primes = sorted({p for d in sf.diag for p in prime_factors(d) if p > 2})
    for p in primes:
        if anisotropic_at_prime(sf, p):
            return AnisotropyCertificate("local", form, p)
    return None


@dataclass(frozen=True)
class CounterexampleCert:
    """Data showing ``K(a,b,c,d)`` has Seifert form with no isotropic vector.

    ``method`` is ``"legendre"`` (mixed signs, prime ``p`` certifies) or
    ``"signature"`` (same signs, ``|σ| = 4``).
    """

    m: int
    n: int
    a: int
    b: int
    c: int
    d: int
    p: int | None
    diag_form: QuadForm
    search_bound: int
    exhausted: bool
    method: str = "legendre"
    signature: int | None = None
    matrix: SeifertPair = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", k_abcd_matrix(self.a, self.b, self.c, self.d))
        self.check()

    def check(self) -> None:
        if (self.a, self.b) not in ((self.m, self.n), (self.n, self.m)):
            raise ValueError("construction integers (a, b) must be the twist pair")
        if self.method == "signature":
            if self.signature != signature(self.matrix) or abs(self.signature) != 4:
                raise ValueError("signature branch requires |signature| = 4")
            return
        a, nb, c, d, p = self.a, -self.b, self.c, self.d, self.p
        if not a > 0 > self.b:
            raise ValueError("legendre branch requires a > 0 > b")
        if legendre(a * nb, p) != -1:
            raise ValueError(f"({a * nb}/{p}) != -1")
        for label, v in (("4ac-1", 4 * a * c - 1), ("4|b|d+1", 4 * nb * d + 1)):
            if v % p or v % (p * p) == 0:
                raise ValueError(f"{p} must divide {label}={v} exactly once")
        if self.diag_form != diagonalize_kabcd(a, self.b, c, d):
            raise ValueError("diag_form does not match the construction")
        M = a * (4 * a * c - 1) // p
        N = nb * (4 * nb * d + 1) // p
        if not anisotropic_by_criterion(a, nb, p, M, N):
            raise ValueError("anisotropy criterion fails for this (c, d)")

    def lines(self) -> list[str]:
        out = [f"m={self.m}", f"n={self.n}", f"a={self.a}", f"b={self.b}", f"c={self.c}", f"d={self.d}"]
        out.append(f"method={self.method}")
        out.append(f"p={self.p if self.p is not None else 'none'}")
        if self.signature is not None:
            out.append(f"signature={self.signature}")
        out.append("diag_form=" + ",".join(str(x) for x in self.diag_form.diag))
        out.append(f"search_bound={self.search_bound}")
        out.append(f"exhausted={'true' if self.exhausted else 'false'}")
        return out


def _exactly_once(v: int, p: int) -> bool:
    return v % p == 0 and v % (p * p) != 0


def construct_counterexample(m: int, n: int, search_bound: int = 25) -> CounterexampleCert:
    """Pick ``K(a,b,c,d)`` unknotted by an ``m``- and an ``n``-twist with anisotropic Seifert form."""
    if is_square(-m * n):
        raise ValueError(f"-m*n = {-m * n} is a perfect square: such a twist pair changes the algebraic genus by at most one")
    if (m > 0) == (n > 0):
        c = d = 1 if m > 0 else -1
        sig = signature(k_abcd_matrix(m, n, c, d))
        form, _ = rational_diagonal_form(k_abcd_matrix(m, n, c, d))
        exhausted = brute_force_isotropy(form, search_bound) is None
        return CounterexampleCert(m, n, m, n, c, d, None, form, search_bound, exhausted, "signature", sig)
    a, b = (m, n) if m > 0 else (n, m)
    nb = -b
    p = find_witness_prime(a * nb)
    limit = 10 * p * p
    c = next((c for c in range(1, limit + 1) if _exactly_once(4 * a * c - 1, p)), None)
    if c is None:
        raise RuntimeError(f"no c <= {limit} with {p} || 4ac-1")
    M = a * (4 * a * c - 1) // p
    d = next(
        (
            d
            for d in range(1, limit + 1)
            if _exactly_once(4 * nb * d + 1, p) and legendre(-M * (nb * (4 * nb * d + 1) // p), p) == -1
        ),
        None,
    )
    if d is None:
        raise RuntimeError(f"no d <= {limit} satisfying the divisibility and residue conditions at p={p}")
    form = diagonalize_kabcd(a, b, c, d)
    found = brute_force_isotropy(form, search_bound)
    if found is not None:
        raise RuntimeError(f"certified anisotropic form has zero {found}")
    return CounterexampleCert(m, n, a, b, c, d, p, form, search_bound, True)
