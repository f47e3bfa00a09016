"""Exact Seifert-form invariants, twist machinery and algebraic-genus bounds."""

from .laurent import LaurentPoly, format_laurent, parse_laurent
from .seifert import SeifertPair, alexander_polynomial, genus, signature
from .smat import parse_smat, format_smat

__all__ = [
    "LaurentPoly",
    "SeifertPair",
    "alexander_polynomial",
    "format_laurent",
    "format_smat",
    "genus",
    "parse_laurent",
    "parse_smat",
    "signature",
]
