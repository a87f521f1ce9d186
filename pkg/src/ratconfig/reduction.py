"""Reduction of a fiber with a known point to the triangular form (1, r; 0, s).

Also transports points along the isomorphisms H_eta -> H_eta' that exist
whenever eta' = lam * r1 * eta * r2^-1 with r1, r2 orthogonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Q, proj_canon
from .curves import Matrix, WPoint, binary_vector, h_contains, triangular


@dataclass(frozen=True)
class ReductionWitness:
    """scale * r1 * eta * r2 == (1, r; 0, s), with r1, r2 in SO2(Q)."""

    r: Fraction
    s: Fraction
    r1: Matrix
    r2: Matrix
    scale: Fraction

    @property
    def triangular(self) -> Matrix:
        return triangular(self.r, self.s)


def reduce_to_triangular(eta: Matrix, P: WPoint) -> ReductionWitness:
    if not h_contains(eta, P):
        raise ValueError(f"{P} is not on H_eta for eta = {eta}")
    a, b, c, d = eta.entries
    x0, y0, z0 = Fraction(P.x), P.y, Fraction(P.z)
    n0 = x0 * x0 + z0 * z0
    # both cases contradict invertibility of eta over Q
    if n0 == 0:
        raise ArithmeticError("x0^2 + z0^2 = 0 on a rational point")
    if y0 == 0:
        raise ArithmeticError("y0 = 0 on a rational point of an invertible fiber")
    p, q = binary_vector(x0, z0)
    r = ((a * b + c * d) * (p * p - q * q) - (a * a - b * b + c * c - d * d) * p * q) / (y0 * y0)
    s = eta.det * n0 * n0 / (y0 * y0)
    l1, l2 = eta.apply(p, q)
    r1 = Matrix(l1 / y0, l2 / y0, -l2 / y0, l1 / y0)
    r2 = Matrix(p / n0, -q / n0, q / n0, p / n0)
    scale = n0 / y0
    w = ReductionWitness(r, s, r1, r2, scale)
    if (r1 @ eta @ r2).scaled(scale) != w.triangular:
        raise ArithmeticError("reduction identity failed")  # pragma: no cover
    return w


def so2_parameter(R: Matrix) -> tuple[int, int, int]:
    """Write R = (u, -v; e*v, e*u) with u = (t^2-s^2)/(t^2+s^2), v = 2st/(t^2+s^2).

    Returns (s, t, e) with (s:t) canonical; the half-angle s/t = v/(1+u)
    is used unless u = -1.
    """
    if not R.is_orthogonal():
        raise ValueError(f"{R} is not orthogonal")
    u, v = R.a, -R.b
    eps = 1 if R.det == 1 else -1
    if u == -1:
        return 1, 0, eps
    s, t = proj_canon(v / (1 + u), 1)
    return s, t, eps


def transport_point(eta: Matrix, eta2: Matrix, lam, r1: Matrix, r2: Matrix, P: WPoint) -> WPoint:
    """Image of P under the isomorphism H_eta -> H_eta2, eta2 = lam r1 eta r2^-1."""
    lam = Q(lam)
    if lam == 0 or not r1.is_orthogonal() or not r2.is_orthogonal():
        raise ValueError("coset data must be a nonzero scalar and two orthogonal matrices")
    if (r1 @ eta @ r2.inverse()).scaled(lam) != eta2:
        raise ValueError("eta2 is not lam * r1 * eta * r2^-1")
    if not h_contains(eta, P):
        raise ValueError(f"{P} is not on H_eta for eta = {eta}")
    s, t, eps = so2_parameter(r2)
    x, y, z = P.x, P.y, P.z
    return WPoint(eps * (t * x + s * z), lam * (s * s + t * t) * y, t * z - s * x)


def to_triangular(eta: Matrix, w: ReductionWitness, P: WPoint) -> WPoint:
    """Carry P from H_eta to H_(1,r;0,s) using the reduction witness."""
    return transport_point(eta, w.triangular, w.scale, w.r1, w.r2.transpose(), P)
