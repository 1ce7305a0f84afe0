"""Exact homomorphism counts from finite Abelian p-groups into GL_n(F_q) and their p-adic bounds."""

from .exact import INF, ConsistencyError, InputError, VerificationError
from .groups import AbelianPGroup
from .qpoly import QPolynomial
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "INF",
    "AbelianPGroup",
    "ConsistencyError",
    "InputError",
    "QPolynomial",
    "TruncatedSeries",
    "VerificationError",
]
