"""Birational maps between a pointed fiber H_eta and its Jacobian model.

Construction: a linear change of (x:z) moves the base point P0 to (0:1),
which turns the fiber into y^2 = a u^4 + b u^3 + c u^2 + d u + q^2 with
q = y0.  The classical transformation of that quartic to long Weierstrass
form (Washington, *Elliptic Curves*, Thm 2.17) sends (0, q) to O.  Completing
the square and an exact substitution X = mu^2 X' + theta then lands on
y^2 = x^3 + (a^2+b^2+c^2+d^2) x^2 + (ad-bc)^2 x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import Q, is_rational_square
from .curves import FiberClass, Matrix, WPoint, classify_fiber, h_contains, NONSINGULAR
from .elliptic import INFINITY, ECPoint, WCurve


def jacobian_model(eta: Matrix) -> WCurve:
    a, b, c, d = eta.entries
    return WCurve(a * a + b * b + c * c + d * d, eta.det**2)


def _pmul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _padd(*ps):
    out = [Fraction(0)] * max(len(p) for p in ps)
    for p in ps:
        for i, x in enumerate(p):
            out[i] += x
    return out


def _pscale(k, p):
    return [k * x for x in p]


def _rational_cube_root(q: Fraction) -> Fraction | None:
    def icbrt(n):
        s = -1 if n < 0 else 1
        n = abs(n)
        r = round(n ** (1 / 3)) if n < 2**60 else int(n ** (1 / 3))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand**3 == n:
                return s * cand
        lo, hi = 0, 1 << (n.bit_length() // 3 + 2)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**3 < n:
                lo = mid + 1
            else:
                hi = mid
        return s * lo if lo**3 == n else None

    n, d = icbrt(q.numerator), icbrt(q.denominator)
    return None if n is None or d is None else Fraction(n, d)


def _c4c6(a2, a4, a6):
    return 16 * (a2 * a2 - 3 * a4), -64 * a2**3 + 288 * a2 * a4 - 864 * a6


@dataclass(frozen=True)
class QuarticWeierstrassMaps:
    """forward: H_eta -> curve with forward(base_point) = O; backward is its inverse.

    ``section`` records the normalization chosen among the equivalent
    choices (mu > 0 in the final scaling).
    """

    eta: Matrix
    base_point: WPoint
    curve: WCurve
    _q: dict = field(repr=False, compare=False)
    section: str = "mu>0"

    # quartic coefficients and Weierstrass data live in _q
    def _to_quartic(self, P: WPoint):
        k = self._q
        x0, z0, n0 = k["x0"], k["z0"], k["n0"]
        v = (-z0 * P.x + x0 * P.z) / n0
        w = (x0 * P.x + z0 * P.z) / n0
        return v, w

    def forward(self, P: WPoint) -> ECPoint:
        if not h_contains(self.eta, P):
            raise ValueError(f"{P} is not on H_eta for eta = {self.eta}")
        k = self._q
        a2, a1, a3, q, c, d = k["a2"], k["a1"], k["a3"], k["q"], k["c"], k["d"]
        v, w = self._to_quartic(P)
        if w == 0:
            X, Yl = 2 * q * P.y / (v * v), Fraction(0)
        else:
            u, V = v / w, P.y / (w * w)
            if u == 0:
                if V == q:
                    return INFINITY
                X, Yl = -a2, a1 * a2 - a3
            else:
                X = (2 * q * (V + q) + d * u) / (u * u)
                Yl = (4 * q * q * (V + q) + 2 * q * (d * u + c * u * u) - d * d * u * u / (2 * q)) / u**3
        Ys = Yl + (a1 * X + a3) / 2
        mu, theta = k["mu"], k["theta"]
        R = ECPoint((X - theta) / mu**2, Ys / mu**3)
        if not self.curve.contains(R):
            raise ArithmeticError(f"forward image {R} is off the Jacobian model")  # pragma: no cover
        return R

    def backward(self, R: ECPoint) -> WPoint:
        if not self.curve.contains(R):
            raise ValueError(f"{R} is not on {self.curve}")
        if R.is_infinity:
            return self.base_point
        k = self._q
        a2, a1, a3, q, c, d = k["a2"], k["a1"], k["a3"], k["q"], k["c"], k["d"]
        x0, z0 = k["x0"], k["z0"]
        X = k["mu"] ** 2 * R.x + k["theta"]
        Yl = k["mu"] ** 3 * R.y - (a1 * X + a3) / 2
        if Yl != 0:
            u = (2 * q * (X + c) - d * d / (2 * q)) / Yl
            V = -q + u * (u * X - d) / (2 * q)
        elif X in (2 * q * k["alpha"], -2 * q * k["alpha"]):
            # a point at infinity of the quartic model
            P = WPoint(-z0, X / (2 * q), x0)
            return self._checked(P)
        else:
            u = k["u_star"]
            if u is None:
                raise ArithmeticError("no finite preimage for (-a2, 0)")  # pragma: no cover
            V = -q + (-2 * q * (d * u + c * u * u) + d * d * u * u / (2 * q)) / (4 * q * q)
        return self._checked(WPoint(x0 - z0 * u, V, z0 + x0 * u))

    def _checked(self, P: WPoint) -> WPoint:
        if not h_contains(self.eta, P):
            raise ArithmeticError(f"backward image {P} is off H_eta")  # pragma: no cover
        return P


def build_quartic_maps(eta: Matrix, P0: WPoint) -> QuarticWeierstrassMaps:
    if not h_contains(eta, P0):
        raise ValueError(f"{P0} is not on H_eta for eta = {eta}")
    fiber: FiberClass = classify_fiber(eta)
    if fiber.tag != NONSINGULAR:
        raise ValueError(f"fiber is {fiber}; the quartic maps need a nonsingular fiber")
    x0, z0, q = Fraction(P0.x), Fraction(P0.z), P0.y
    n0 = x0 * x0 + z0 * z0
    X = [x0, -z0]
    Z = [z0, x0]
    p = _padd(_pmul(Z, Z), _pscale(-1, _pmul(X, X)))
    r = _pscale(2, _pmul(X, Z))
    l1 = _padd(_pscale(eta.a, p), _pscale(eta.b, r))
    l2 = _padd(_pscale(eta.c, p), _pscale(eta.d, r))
    f = _padd(_pmul(l1, l1), _pmul(l2, l2))
    f += [Fraction(0)] * (5 - len(f))
    e, d, c, b, a = f[:5]
    assert e == q * q
    alpha = is_rational_square(a)
    if alpha is None:
        raise ArithmeticError("leading coefficient of the quartic is not a square")  # pragma: no cover

    a1 = d / q
    a2 = c - d * d / (4 * q * q)
    a3 = 2 * q * b
    a4 = -4 * q * q * a
    a6 = a2 * a4
    # y -> y + (a1 x + a3)/2
    A2 = a2 + a1 * a1 / 4
    A4 = a4 + a1 * a3 / 2
    A6 = a6 + a3 * a3 / 4

    target = jacobian_model(eta)
    mu, theta = _match_models((A2, A4, A6), target)

    # the finite preimage of (-a2, 0): remaining root of the y = 0 locus
    den = 64 * a * q**6 - 16 * c * c * q**4 + 8 * c * d * d * q * q - d**4
    num = 64 * b * q**6 - 32 * c * d * q**4 + 8 * d**3 * q * q
    u_star = None if den == 0 else -num / den

    data = dict(x0=x0, z0=z0, n0=n0, q=q, a=a, b=b, c=c, d=d, alpha=alpha,
                a1=a1, a2=a2, a3=a3, mu=mu, theta=theta, u_star=u_star)
    return QuarticWeierstrassMaps(eta, P0, target, data)


def _match_models(src, target: WCurve) -> tuple[Fraction, Fraction]:
    """mu > 0, theta with X = mu^2 X' + theta carrying the target cubic onto src."""
    A2, A4, A6 = src
    c4, c6 = _c4c6(A2, A4, A6)
    t4, t6 = _c4c6(target.A, target.B, Fraction(0))
    candidates = []
    if c4 != 0 and c6 != 0 and t4 != 0 and t6 != 0:
        candidates.append((c6 / t6) * (t4 / c4))
    elif c6 == 0 and t6 == 0 and t4 != 0:
        m = is_rational_square(c4 / t4)
        if m is not None:
            candidates += [m, -m]
    elif c4 == 0 and t4 == 0 and t6 != 0:
        m = _rational_cube_root(c6 / t6)
        if m is not None:
            candidates.append(m)
    for m2 in candidates:
        if m2 <= 0:
            continue
        mu = is_rational_square(m2)
        if mu is None:
            continue
        theta = (m2 * target.A - A2) / 3
        g = theta**3 + A2 * theta**2 + A4 * theta + A6
        dg = 3 * theta**2 + 2 * A2 * theta + A4
        if g == 0 and dg == m2 * m2 * target.B:
            return mu, theta
    raise ArithmeticError("Weierstrass model is not isomorphic over Q to the Jacobian model")
