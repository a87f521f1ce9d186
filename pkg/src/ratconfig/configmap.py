"""Pythagorean slope pairs on F_eta from rational points of H_eta, and back.

phi sends (x:y:z) to ((-c p - d q : a p + b q), (p : q)) with
(p, q) = (z^2 - x^2, 2xz); it is constant on Klein four-group orbits and
every slope pair it produces is Pythagorean.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import SlopePair, parameters_from_slope
from .curves import Matrix, WPoint, binary_vector, f_contains, h_contains


def phi(eta: Matrix, P: WPoint) -> tuple[SlopePair, SlopePair]:
    if not h_contains(eta, P):
        raise ValueError(f"{P} is not on H_eta for eta = {eta}")
    p, q = binary_vector(P.x, P.z)
    l1, l2 = eta.apply(p, q)
    alpha1 = SlopePair.of(-l2, l1)
    alpha2 = SlopePair.of(p, q)
    assert alpha1.pythagorean and alpha2.pythagorean
    return alpha1, alpha2


def phi_lift(eta: Matrix, alpha1: SlopePair, alpha2: SlopePair) -> WPoint:
    """One point of H_eta over (alpha1, alpha2); its orbit is the whole fiber of phi."""
    if not (alpha1.pythagorean and alpha2.pythagorean):
        raise ValueError("both slopes must be Pythagorean")
    if not f_contains(eta, alpha1, alpha2):
        raise ValueError(f"({alpha1}, {alpha2}) is not on F_eta")
    x, z = parameters_from_slope(alpha2.u, alpha2.v)[0]
    xp, zp = parameters_from_slope(alpha1.u, alpha1.v)[0]
    l1, l2 = eta.apply(*binary_vector(x, z))
    t1, t2 = Fraction(-2 * xp * zp), Fraction(zp * zp - xp * xp)
    # eta (z^2-x^2, 2xz) = lam (-2x'z', z'^2-x'^2)
    lam = l1 / t1 if t1 != 0 else l2 / t2
    if (l1, l2) != (lam * t1, lam * t2):
        raise ArithmeticError("lift is inconsistent across coordinates")  # pragma: no cover
    P = WPoint(x, abs(lam) * (zp * zp + xp * xp), z)
    assert h_contains(eta, P)
    return P
