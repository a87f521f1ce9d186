"""The genus-one family y^2 = N(eta (z^2-x^2, 2xz)) and the bilinear curve F_eta.

Points live in the weighted projective plane with weights (1, 2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Q, SlopePair, format_rational, is_rational_square, parse_rational


@dataclass(frozen=True)
class Matrix:
    """An invertible 2x2 matrix (a, b; c, d) with rational entries."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Q(getattr(self, name)))
        if self.det == 0:
            raise ValueError(f"singular matrix {self}")

    @classmethod
    def parse(cls, text: str) -> "Matrix":
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"matrix must be 'a,b,c,d', got {text!r}")
        return cls(*(parse_rational(p) for p in parts))

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scaled(self, k) -> "Matrix":
        k = Q(k)
        return Matrix(k * self.a, k * self.b, k * self.c, k * self.d)

    def transpose(self) -> "Matrix":
        return Matrix(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Matrix":
        D = self.det
        return Matrix(self.d / D, -self.b / D, -self.c / D, self.a / D)

    def apply(self, u, v) -> tuple[Fraction, Fraction]:
        return (self.a * u + self.b * v, self.c * u + self.d * v)

    def is_orthogonal(self) -> bool:
        return self @ self.transpose() == IDENTITY

    def __str__(self) -> str:
        return ",".join(format_rational(e) for e in self.entries)


IDENTITY = Matrix(1, 0, 0, 1)


def triangular(r, s) -> Matrix:
    return Matrix(1, r, 0, s)


def integral_scaling(eta: Matrix) -> tuple[int, Matrix]:
    """Least positive m with m*eta integral; H_{m eta} is isomorphic to H_eta via y -> m y."""
    m = 1
    for e in eta.entries:
        m = m * e.denominator // gcd(m, e.denominator)
    return m, eta.scaled(m)


def _squarefree_kernel(n: int) -> int:
    sign = -1 if n < 0 else 1
    n = abs(n)
    out, p = 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
        if n % p == 0:
            out *= p
            n //= p
        p += 1
    return sign * out * n


@dataclass(frozen=True)
class WPoint:
    """A point (x:y:z) of the (1,2,1)-weighted projective plane.

    Stored canonically: x, z coprime integers, z > 0 (or z = 0 and x > 0),
    y rescaled by the square of the same factor.  Equality of instances is
    equality of weighted-projective classes.
    """

    x: int
    y: Fraction
    z: int

    def __post_init__(self):
        x, y, z = Q(self.x), Q(self.y), Q(self.z)
        if x == 0 and z == 0:
            if y == 0:
                raise ValueError("(0:0:0) is not a point")
            # (0:y:0) ~ (0:lambda^2 y:0); keep the squarefree integer class
            k = _squarefree_kernel(y.numerator * y.denominator)
            object.__setattr__(self, "x", 0)
            object.__setattr__(self, "y", Fraction(k))
            object.__setattr__(self, "z", 0)
            return
        den = x.denominator * z.denominator // gcd(x.denominator, z.denominator)
        ix, iz = int(x * den), int(z * den)
        g = gcd(ix, iz)
        lam = Fraction(den, g)
        ix, iz = ix // g, iz // g
        if iz < 0 or (iz == 0 and ix < 0):
            ix, iz, lam = -ix, -iz, -lam
        object.__setattr__(self, "x", ix)
        object.__setattr__(self, "y", y * lam * lam)
        object.__setattr__(self, "z", iz)

    @classmethod
    def parse(cls, text: str) -> "WPoint":
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"point must be 'x:y:z', got {text!r}")
        return cls(*(parse_rational(p) for p in parts))

    def rescaled(self, lam) -> tuple[Fraction, Fraction, Fraction]:
        """Raw coordinates (lam x, lam^2 y, lam z), not canonicalized."""
        lam = Q(lam)
        return (lam * self.x, lam * lam * self.y, lam * self.z)

    def __str__(self) -> str:
        return f"{self.x}:{format_rational(self.y)}:{self.z}"


def binary_vector(x, z) -> tuple[Fraction, Fraction]:
    """(z^2 - x^2, 2xz), the vector whose image under eta is normed."""
    x, z = Q(x), Q(z)
    return (z * z - x * x, 2 * x * z)


def norm_form(eta: Matrix, x, z) -> Fraction:
    u, v = eta.apply(*binary_vector(x, z))
    return u * u + v * v


def h_contains(eta: Matrix, P: WPoint) -> bool:
    return P.y * P.y == norm_form(eta, P.x, P.z)


def h_discriminant(eta: Matrix) -> Fraction:
    a, b, c, d = eta.entries
    return 2**16 * eta.det**4 * ((a + d) ** 2 + (b - c) ** 2) * ((a - d) ** 2 + (b + c) ** 2)


@dataclass(frozen=True)
class FiberClass:
    """Nonsingular, SingularSplit (with lam > 0, lam^2 = a^2+b^2) or SingularPointless."""

    tag: str
    lam: Fraction | None = None

    def __str__(self) -> str:
        if self.tag == "SingularSplit":
            return f"SingularSplit λ={format_rational(self.lam)}"
        return self.tag


NONSINGULAR = "Nonsingular"
SINGULAR_SPLIT = "SingularSplit"
SINGULAR_POINTLESS = "SingularPointless"


def classify_fiber(eta: Matrix) -> FiberClass:
    if h_discriminant(eta) != 0:
        return FiberClass(NONSINGULAR)
    # eta eta^t = (a^2+b^2) I, so the curve is y^2 = (a^2+b^2)(x^2+z^2)^2
    lam = is_rational_square(eta.a**2 + eta.b**2)
    if lam is not None:
        return FiberClass(SINGULAR_SPLIT, lam)
    return FiberClass(SINGULAR_POINTLESS)


def sigma1(P: WPoint) -> WPoint:
    return WPoint(P.x, -P.y, P.z)


def sigma2(P: WPoint) -> WPoint:
    return WPoint(-P.z, P.y, P.x)


def gamma_orbit(P: WPoint) -> frozenset[WPoint]:
    """Orbit under the Klein four-group generated by sigma1 and sigma2."""
    return frozenset({P, sigma1(P), sigma2(P), sigma1(sigma2(P))})


def f_contains(eta: Matrix, alpha1, alpha2) -> bool:
    u1, v1 = _pair(alpha1)
    u2, v2 = _pair(alpha2)
    if (u1, v1) == (0, 0) or (u2, v2) == (0, 0):
        raise ValueError("(0:0) is not a point of the projective line")
    return eta.a * u1 * u2 + eta.b * u1 * v2 + eta.c * v1 * u2 + eta.d * v1 * v2 == 0


def _pair(alpha):
    if isinstance(alpha, SlopePair):
        return alpha.u, alpha.v
    u, v = alpha
    return Q(u), Q(v)


def degeneracy_product(eta: Matrix, P: WPoint) -> Fraction:
    x, z = P.x, P.z
    l1, l2 = eta.apply(*binary_vector(x, z))
    return x * P.y * z * (z**4 - x**4) * l1 * l2


def is_degenerate(eta: Matrix, P: WPoint) -> bool:
    if not h_contains(eta, P):
        raise ValueError(f"{P} is not on H_eta for eta = {eta}")
    return degeneracy_product(eta, P) == 0


def conic_point(lam, x, z) -> WPoint:
    """Point on the conic y = lam (x^2 + z^2) of a split singular fiber."""
    lam = Q(lam)
    return WPoint(x, lam * (Q(x) ** 2 + Q(z) ** 2), z)

