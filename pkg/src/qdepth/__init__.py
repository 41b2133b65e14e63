"""Quasi depth of monomial ideal quotients, with exact closed forms for powers
of the maximal graded ideal and a brute-force enumeration oracle."""

__version__ = "0.1.0"

from qdepth.combinatorics import binom, ceil_div, identity_magic, identity_magic2
from qdepth.monomials import (
    Monomial,
    MonomialIdeal,
    PolarizationResult,
    QuotientPresentation,
    maximal_power_ideal,
    polarize,
)
from qdepth.core import AlphaVector, QDepthResult, qdepth_general, qdepth_squarefree
from qdepth.power import qdepth_power_fast
from qdepth.theorems import verify_theorem

__all__ = [
    "AlphaVector",
    "Monomial",
    "MonomialIdeal",
    "PolarizationResult",
    "QDepthResult",
    "QuotientPresentation",
    "binom",
    "ceil_div",
    "identity_magic",
    "identity_magic2",
    "maximal_power_ideal",
    "polarize",
    "qdepth_general",
    "qdepth_power_fast",
    "qdepth_squarefree",
    "verify_theorem",
]
