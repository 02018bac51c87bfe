"""Finite-dimensional U_q(gl(n)) modules in the Gelfand-Tsetlin basis."""

from .patterns import GTPattern, HighestWeight, enumerate_patterns, weight_of, weyl_dimension
from .representations import Irrep, build_irrep
from .scalars import HalfInt, NotASquareError, PoleError, QRat, eval_at, limit_q1, qnumber, qpow

__all__ = [
    "GTPattern",
    "HighestWeight",
    "Irrep",
    "HalfInt",
    "NotASquareError",
    "PoleError",
    "QRat",
    "build_irrep",
    "enumerate_patterns",
    "eval_at",
    "limit_q1",
    "qnumber",
    "qpow",
    "weight_of",
    "weyl_dimension",
]

__version__ = "0.1.0"
