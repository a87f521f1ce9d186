"""Group law on y^2 = x^3 + A x^2 + B x over Q, division polynomials, torsion.

Non-torsion is certified the way Mazur's theorem allows over Q: a point
whose first twelve multiples avoid the identity has infinite order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Q, format_rational

MAZUR_BOUND = 12


@dataclass(frozen=True)
class WCurve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Q(self.A))
        object.__setattr__(self, "B", Q(self.B))
        if self.B == 0 or self.A * self.A == 4 * self.B:
            raise ValueError(f"singular curve A={self.A}, B={self.B}")

    def rhs(self, x) -> Fraction:
        return x * (x * x + self.A * x + self.B)

    def contains(self, P: "ECPoint") -> bool:
        return P.is_infinity or P.y * P.y == self.rhs(P.x)

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({format_rational(self.A)})x^2 + ({format_rational(self.B)})x"


def e_rs(r, s) -> WCurve:
    """E_{r,s}: y^2 = x^3 + (1 + r^2 + s^2) x^2 + s^2 x."""
    r, s = Q(r), Q(s)
    return WCurve(1 + r * r + s * s, s * s)


@dataclass(frozen=True)
class ECPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("affine points need both coordinates")
        if self.x is not None:
            object.__setattr__(self, "x", Q(self.x))
            object.__setattr__(self, "y", Q(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "ECPoint":
        return self if self.is_infinity else ECPoint(self.x, -self.y)

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


INFINITY = ECPoint()


def _check(C: WCurve, *points: ECPoint) -> None:
    for P in points:
        if not C.contains(P):
            raise ValueError(f"{P} is not on {C}")


def _add(C: WCurve, P: ECPoint, R: ECPoint) -> ECPoint:
    if P.is_infinity:
        return R
    if R.is_infinity:
        return P
    if P.x == R.x:
        if P.y + R.y == 0:
            return INFINITY
        lam = (3 * P.x * P.x + 2 * C.A * P.x + C.B) / (2 * P.y)
    else:
        lam = (R.y - P.y) / (R.x - P.x)
    x3 = lam * lam - C.A - P.x - R.x
    return ECPoint(x3, lam * (P.x - x3) - P.y)


def ec_add(C: WCurve, P: ECPoint, R: ECPoint) -> ECPoint:
    _check(C, P, R)
    return _add(C, P, R)


def ec_scalar_mul(C: WCurve, n: int, P: ECPoint) -> ECPoint:
    _check(C, P)
    if n < 0:
        return -ec_scalar_mul(C, -n, P)
    acc, base = INFINITY, P
    while n:
        if n & 1:
            acc = _add(C, acc, base)
        base = _add(C, base, base)
        n >>= 1
    return acc


def multiples(C: WCurve, P: ECPoint, count: int) -> list[ECPoint]:
    """[1P, 2P, ..., count*P] by repeated addition."""
    _check(C, P)
    out, acc = [], INFINITY
    for _ in range(count):
        acc = _add(C, acc, P)
        out.append(acc)
    return out


def torsion_order(C: WCurve, P: ECPoint) -> int | None:
    """Least k <= 12 with kP = O, else None (infinite order by Mazur)."""
    for k, kP in enumerate(multiples(C, P, MAZUR_BOUND), start=1):
        if kP.is_infinity:
            return k
    return None


# Division polynomials.  With psi_n = f_n for odd n and psi_n = y f_n for
# even n, the recurrences close over Q[x] once y^2 is replaced by the cubic.

DIVISION_INDICES = (2, 3, 4, 6, 8, 12)


def _f_values(C: WCurve, x: Fraction, top: int) -> dict[int, Fraction]:
    A, B = C.A, C.B
    F = C.rhs(x)
    b2, b4, b8 = 4 * A, 2 * B, -B * B
    f = {0: Fraction(0), 1: Fraction(1), 2: Fraction(2)}
    f[3] = 3 * x**4 + b2 * x**3 + 3 * b4 * x**2 + b8
    f[4] = 2 * (2 * x**6 + b2 * x**5 + 5 * b4 * x**4 + 10 * b8 * x**2 + b2 * b8 * x + b4 * b8)

    def get(n):
        if n in f:
            return f[n]
        m = n // 2
        if n % 2:
            if m % 2 == 0:
                val = F * F * get(m + 2) * get(m) ** 3 - get(m - 1) * get(m + 1) ** 3
            else:
                val = get(m + 2) * get(m) ** 3 - F * F * get(m - 1) * get(m + 1) ** 3
        else:
            val = get(m) * (get(m + 2) * get(m - 1) ** 2 - get(m - 2) * get(m + 1) ** 2) / 2
        f[n] = val
        return val

    get(top)
    return f


def division_poly_at(ell: int, C: WCurve, x) -> Fraction:
    """Value at x of the ell-th division polynomial, made y-free.

    Odd ell gives psi_ell(x).  Even ell gives psi_ell * psi_2, a polynomial
    in x vanishing exactly on x-coordinates of points whose order divides ell.
    """
    if ell not in DIVISION_INDICES:
        raise ValueError(f"division polynomial index must be one of {DIVISION_INDICES}")
    x = Q(x)
    fv = _f_values(C, x, ell)[ell]
    if ell % 2:
        return fv
    return 2 * C.rhs(x) * fv


ORDER2, ORDER4, ORDER8, NON_TORSION = "Order2", "Order4", "Order8", "NonTorsion"
VERDICT_ORDER = {ORDER2: 2, ORDER4: 4, ORDER8: 8, NON_TORSION: None}


def classify_minus1_point(r, s) -> str:
    """Order of (-1, r) on E_{r,s}: Order2, Order4, Order8 or NonTorsion."""
    r, s = Q(r), Q(s)
    if s == 0 or (r == 0 and s in (1, -1)):
        raise ValueError(f"(r, s) = ({r}, {s}) gives a singular E_(r,s)")
    if r == 0:
        return ORDER2
    if s in (1, -1):
        return ORDER4
    if 4 * r * r * s in ((1 - s * s) ** 2, -((1 - s * s) ** 2)):
        return ORDER8
    return NON_TORSION


def minus1_point(r) -> ECPoint:
    return ECPoint(-1, Q(r))
