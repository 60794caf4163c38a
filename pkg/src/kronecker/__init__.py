"""Exact-arithmetic computer algebra for Kronecker-style algorithmics:
polynomial factorization, elimination-theoretic variety decomposition,
divisor arithmetic in number fields, Galois groups via resolvents, and
trace/residue formulas.  Every result is exactly checkable."""

from kronecker.errors import AlgebraError, DomainError, ParseError
from kronecker.polyring import (
    MultiPoly,
    UniPoly,
    content_primitive,
    discriminant,
    gcd,
    kronecker_inverse,
    kronecker_substitute,
    parse_poly,
    resultant,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "DomainError",
    "ParseError",
    "MultiPoly",
    "UniPoly",
    "content_primitive",
    "discriminant",
    "gcd",
    "kronecker_inverse",
    "kronecker_substitute",
    "parse_poly",
    "resultant",
    "__version__",
]
