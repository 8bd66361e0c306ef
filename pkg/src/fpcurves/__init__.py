"""Exact computational geometry of algebraic curves over small prime fields.

Randomized constructions of curves of genus 7-14 (nodal plane curves, space
curves presented by finite-length modules, canonical genus-8 curves cut out
by Pfaffian quadrics, degree-18 genus-14 curves obtained by linkage) together
with the Groebner / free-resolution machinery needed to certify their degrees,
genera, Betti tables and smoothness.
"""

from .arith import PrimeField, SeededRng, UnivariatePoly, factor_degrees, rational_roots
from .ring import Ring, Polynomial, GradedFreeModule, GradedMatrix

__version__ = "0.1.0"

__all__ = [
    "PrimeField",
    "SeededRng",
    "UnivariatePoly",
    "factor_degrees",
    "rational_roots",
    "Ring",
    "Polynomial",
    "GradedFreeModule",
    "GradedMatrix",
    "__version__",
]
