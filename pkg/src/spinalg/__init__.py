"""Exact computer algebra for Grassmann and spin algebras.

Arithmetic is over Q(i, sqrt2).  The subpackages cover scalars, the algebras
themselves, their automorphism groups, the Hopf structure of the spin algebra
and the Lorentz geometry built on top of it.
"""

from .algebra import AlgebraElement, AlgebraSpec, LinearOperator, make_grassmann, make_spin_algebra
from .scalar import I, ONE, SQRT2, ZERO, RealScalar, Scalar

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraSpec",
    "LinearOperator",
    "make_grassmann",
    "make_spin_algebra",
    "RealScalar",
    "Scalar",
    "I",
    "ONE",
    "SQRT2",
    "ZERO",
]
