"""Exact rational and modular arithmetic shared by the rest of the package.

Rationals are plain :class:`fractions.Fraction` values.  Projective pairs
``(u:v)`` are stored as coprime integers with the last nonzero coordinate
positive, so tuple equality is projective equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def Q(value) -> Fraction:
    """Coerce ints, Fractions and ``"n/d"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r} (expected n or n/d)")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def is_rational_square(q) -> Fraction | None:
    """Nonnegative rational square root of ``q``, or None."""
    q = Q(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    return [p for p in range(2, bound + 1) if is_prime(p)]


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre_symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def proj_canon(u, v) -> tuple[int, int]:
    """Canonical coprime integer representative of the projective pair (u:v)."""
    u, v = Q(u), Q(v)
    if u == 0 and v == 0:
        raise ValueError("(0:0) is not a point of the projective line")
    den = u.denominator * v.denominator // gcd(u.denominator, v.denominator)
    iu, iv = int(u * den), int(v * den)
    g = gcd(iu, iv)
    iu, iv = iu // g, iv // g
    if iv < 0 or (iv == 0 and iu < 0):
        iu, iv = -iu, -iv
    return iu, iv


@dataclass(frozen=True)
class SlopePair:
    """A point (u:v) of P^1(Q) together with sqrt(u^2+v^2) when it is rational.

    ``hyp`` is present exactly when the slope belongs to the set of
    Pythagorean slopes.
    """

    u: int
    v: int
    hyp: Fraction | None = field(default=None, compare=False)

    @classmethod
    def of(cls, u, v) -> "SlopePair":
        iu, iv = proj_canon(u, v)
        return cls(iu, iv, is_rational_square(iu * iu + iv * iv))

    @property
    def pythagorean(self) -> bool:
        return self.hyp is not None

    @property
    def affine(self) -> Fraction | None:
        """The slope u/v, or None at (1:0)."""
        return None if self.v == 0 else Fraction(self.u, self.v)

    def __str__(self) -> str:
        return f"({self.u}:{self.v})"


def slope_from_parameter(t) -> SlopePair:
    """The Pythagorean slope (1-t^2 : 2t) with hypotenuse 1+t^2."""
    t = Q(t)
    return SlopePair.of(1 - t * t, 2 * t)


def parameters_from_slope(u, v) -> list[tuple[int, int]]:
    """All (x:z) with (z^2-x^2 : 2xz) = (u:v), sorted; empty if (u:v) is not Pythagorean."""
    u, v = proj_canon(u, v)
    if v == 0:
        return sorted([(0, 1), (1, 0)])
    h = isqrt(u * u + v * v)
    if h * h != u * u + v * v:
        return []
    # v*t^2 + 2u*t - v = 0 with t = x/z
    roots = {proj_canon(-u + h, v), proj_canon(-u - h, v)}
    return sorted(roots)
