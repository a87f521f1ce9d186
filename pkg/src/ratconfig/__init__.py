"""Exact rational arithmetic on the curves y^2 = N(eta (z^2-x^2, 2xz)).

Modules: arith (rationals, slopes), curves (the family and its symmetries),
reduction (triangular normal form), elliptic (group law, torsion),
quartic (maps to the Jacobian), configmap (slope pairs), three_distance
(configuration generators), local (p-adic solubility and the census).
"""

from .arith import SlopePair, parse_rational, format_rational
from .curves import Matrix, WPoint, classify_fiber, h_contains, h_discriminant
from .elliptic import ECPoint, WCurve, classify_minus1_point, torsion_order
from .reduction import reduce_to_triangular

__version__ = "0.1.0"
