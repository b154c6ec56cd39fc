"""Exact and numeric companion toolkit for the Borwein sign-pattern polynomials."""

__version__ = "0.1.0"

from .polyring import DensePoly, NonzeroRemainder  # noqa: F401
from .core import BorweinTriple, FamilyPoly, NonIntegralExponent  # noqa: F401
