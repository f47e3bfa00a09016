"""Algebraic-genus upper bounds for torus knots and links.

Bounds are assembled from two ingredients: full twists on ``2^k``
strands (each undone by ``(4^k - 1)/3`` twist pairs) and gluing
``T(a, b)`` and ``T(a, c)`` into ``T(a, b + c)`` at a cost of ``a``.
Every bound comes with a certificate tree that can be audited.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class TorusParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"torus parameters must be >= 1, got ({self.p}, {self.q})")


@dataclass(frozen=True)
class Unknot:
    params: TorusParams
    value: int = 0


@dataclass(frozen=True)
class TwoPower:
    """``T(2^a, 2^b)`` bounded by removing full twists."""

    params: TorusParams
    a: int
    b: int
    value: int


@dataclass(frozen=True)
class Glue:
    params: TorusParams
    left: "BoundCertificate"
    right: "BoundCertificate"
    strands: int
    value: int


BoundCertificate = Unknot | TwoPower | Glue


def two_power_bound(a: int, b: int) -> int:
    """Bound for ``T(2^a, 2^b)``: ``2^(b-a) (4^a - 1)/3`` with ``a <= b``."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    a, b = min(a, b), max(a, b)
    return (2 ** (b - a)) * ((4**a - 1) // 3)


def two_power_certificate(a: int, b: int) -> TwoPower:
    return TwoPower(TorusParams(2**a, 2**b), a, b, two_power_bound(a, b))


def glue_bound(left: BoundCertificate, right: BoundCertificate) -> Glue:
    """Glue certificates for ``T(a, b)`` and ``T(a, c)`` into one for ``T(a, b + c)``."""
    a = left.params.p
    if right.params.p != a:
        raise ValueError(
            f"mismatched strand counts: T({left.params.p},{left.params.q}) "
            f"and T({right.params.p},{right.params.q})"
        )
    params = TorusParams(a, left.params.q + right.params.q)
    return Glue(params, left, right, a, left.value + right.value + a)


def _orient(cert: BoundCertificate, strands: int) -> BoundCertificate:
    """Relabel ``T(x, y)`` as ``T(y, x)`` when needed so that ``params.p == strands``."""
    if cert.params.p == strands:
        return cert
    if cert.params.q != strands:
        raise ValueError(f"T({cert.params.p},{cert.params.q}) has no side with {strands} strands")
    flipped = TorusParams(cert.params.q, cert.params.p)
    if isinstance(cert, TwoPower):
        return TwoPower(flipped, cert.b, cert.a, cert.value)
    if isinstance(cert, Glue):
        return Glue(flipped, cert.left, cert.right, cert.strands, cert.value)
    return Unknot(flipped)


def _binary_exponents(k: int) -> list[int]:
    """Exponents of the binary digits of ``k``, most significant first."""
    return [e for e in range(k.bit_length() - 1, -1, -1) if k >> e & 1]


def _fold(certs: list[BoundCertificate], strands: int) -> BoundCertificate:
    acc = _orient(certs[0], strands)
    for c in certs[1:]:
        acc = glue_bound(acc, _orient(c, strands))
    return acc


def _assemble(p: int, q: int) -> BoundCertificate:
    """Build ``T(q, 2^b)`` from the binary digits of ``q`` for each digit ``2^b`` of ``p``, then glue along ``q``."""
    rows = []
    for b in _binary_exponents(p):
        pieces = [two_power_certificate(b, a) for a in _binary_exponents(q)]
        rows.append(_fold(pieces, 2**b))
    return _fold(rows, q)


def torus_galg_bound(tp: TorusParams) -> BoundCertificate:
    """Smaller of the two assembly orders, reported as a certificate for ``T(p, q)``."""
    if isinstance(tp, tuple):
        tp = TorusParams(*tp)
    p, q = tp.p, tp.q
    if min(p, q) == 1:
        return Unknot(tp)
    one = _assemble(p, q)
    two = _assemble(q, p)
    best = one if one.value <= two.value else two
    return _orient(best, p)


def audit(cert: BoundCertificate) -> int:
    """Recompute a certificate bottom-up; raise on any arithmetic drift."""
    if isinstance(cert, Unknot):
        if min(cert.params.p, cert.params.q) != 1 or cert.value != 0:
            raise AssertionError(f"bad unknot step {cert}")
        return 0
    if isinstance(cert, TwoPower):
        if {cert.params.p, cert.params.q} != {2**cert.a, 2**cert.b}:
            raise AssertionError(f"two-power step has wrong parameters {cert}")
        if cert.value != two_power_bound(cert.a, cert.b):
            raise AssertionError(f"two-power value drift {cert}")
        return cert.value
    lv, rv = audit(cert.left), audit(cert.right)
    if not cert.left.params.p == cert.right.params.p == cert.strands:
        raise AssertionError(f"glue step strand count mismatch at T{cert.params}")
    total = cert.left.params.q + cert.right.params.q
    if sorted((cert.params.p, cert.params.q)) != sorted((cert.strands, total)):
        raise AssertionError(f"glue step parameters do not add up at {cert.params}")
    if cert.value != lv + rv + cert.strands:
        raise AssertionError(f"glue value drift at {cert.params}")
    return cert.value


def certificate_lines(cert: BoundCertificate, indent: int = 0) -> list[str]:
    pad = "  " * indent
    tag = f"T({cert.params.p},{cert.params.q})"
    if isinstance(cert, Unknot):
        return [f"{pad}{tag} unknot value=0"]
    if isinstance(cert, TwoPower):
        return [f"{pad}{tag} two-power a={cert.a} b={cert.b} value={cert.value}"]
    lines = [f"{pad}{tag} glue strands={cert.strands} value={cert.value}"]
    lines += certificate_lines(cert.left, indent + 1)
    lines += certificate_lines(cert.right, indent + 1)
    return lines


def closed_form_bound(tp: TorusParams) -> float:
    """``pq/3 + p log2 q + q log2 p`` in double precision."""
    if isinstance(tp, tuple):
        tp = TorusParams(*tp)
    p, q = tp.p, tp.q
    if p <= 1 or q <= 1:
        raise ValueError("closed form stated for p, q > 1")
    return p * q / 3 + p * math.log2(q) + q * math.log2(p)


def smooth_genus(tp: TorusParams) -> int:
    if isinstance(tp, tuple):
        tp = TorusParams(*tp)
    p, q = tp.p, tp.q
    if gcd(p, q) != 1:
        raise ValueError("smooth genus formula implemented for torus knots only")
    if p < 2 or q < 2:
        raise ValueError("smooth genus formula needs p, q >= 2")
    return (p - 1) * (q - 1) // 2


@dataclass(frozen=True)
class RatioRow:
    p: int
    q: int
    bound: int
    genus: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.bound, self.genus)


def ratio_report(p_max: int) -> list[RatioRow]:
    """Bound over smooth genus for ``T(p, p+1)``, ``p = 2 .. p_max``."""
    if p_max < 3:
        raise ValueError("p_max must be at least 3")
    rows = []
    for p in range(2, p_max + 1):
        tp = TorusParams(p, p + 1)
        rows.append(RatioRow(p, p + 1, torus_galg_bound(tp).value, smooth_genus(tp)))
    return rows


def format_ratio(r: Fraction) -> str:
    # exact half-up rounding to 6 decimals
    scaled = r * 10**6
    n = math.floor(scaled + Fraction(1, 2))
    return f"{n // 10**6}.{n % 10**6:06d}"
