"""Rational-distance configurations generated from Mordell-Weil multiples.

rho(n, t) produces points on the line y = 2t/(1-t^2) x at rational distance
from (0,0), (0,1) and (1,1).  sum_decompose, three_sum and three_product
write a rational as a sum or product of Pythagorean slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import Q, SlopePair, format_rational, is_rational_square, slope_from_parameter
from .configmap import phi
from .curves import Matrix, WPoint, triangular
from .elliptic import ECPoint, classify_minus1_point, ec_add, ec_scalar_mul, torsion_order, NON_TORSION
from .quartic import QuarticWeierstrassMaps, build_quartic_maps
from .reduction import reduce_to_triangular

BASE = WPoint(0, 1, 1)


def _check_t(t) -> Fraction:
    t = Q(t)
    if t in (0, 1, -1):
        raise ValueError(f"t must avoid 0 and ±1, got {t}")
    return t


def eta_of_t(t) -> Matrix:
    t = _check_t(t)
    return triangular(-1, 1 - 2 * t / (1 - t * t))


@lru_cache(maxsize=256)
def _maps_for(eta: Matrix, base: WPoint) -> QuarticWeierstrassMaps:
    return build_quartic_maps(eta, base)


def z_map(t, alpha1: SlopePair) -> tuple[Fraction, Fraction] | None:
    t = _check_t(t)
    u1, v1 = alpha1.u, alpha1.v
    D = (1 - t * t) * u1 + 2 * t * v1
    if D == 0:
        return None
    return (1 - t * t) * v1 / D, 2 * t * v1 / D


@dataclass(frozen=True)
class ThreeDistanceSolution:
    x: Fraction
    y: Fraction
    d1: Fraction
    d2: Fraction
    d3: Fraction
    t: Fraction
    n: int | None = None

    @classmethod
    def at(cls, x, y, t, n=None) -> "ThreeDistanceSolution":
        """Build a solution, certifying the three distances exactly."""
        x, y = Q(x), Q(y)
        d = [is_rational_square(sq) for sq in three_distance_squares(x, y)]
        if any(v is None for v in d):
            raise ArithmeticError(f"({x}, {y}) is not at rational distance from all three vertices")
        return cls(x, y, d[0], d[1], d[2], Q(t), n)

    def as_json(self) -> dict:
        out = {k: format_rational(getattr(self, k)) for k in ("t", "x", "y", "d1", "d2", "d3")}
        out["n"] = self.n
        return out


def three_distance_squares(x, y) -> tuple[Fraction, Fraction, Fraction]:
    """Squared distances from (x, y) to (0,0), (0,1), (1,1)."""
    return x * x + y * y, x * x + (1 - y) ** 2, (1 - x) ** 2 + (1 - y) ** 2


def rho(n: int, t) -> ThreeDistanceSolution | None:
    t = _check_t(t)
    maps = _maps_for(eta_of_t(t), BASE)
    G = ECPoint(-1, -1)
    Qn = _multiple(maps, n, G)
    if Qn.is_infinity:
        return None
    alpha1, _ = phi(maps.eta, maps.backward(Qn))
    xy = z_map(t, alpha1)
    if xy is None:
        return None
    sol = ThreeDistanceSolution.at(xy[0], xy[1], t, n)
    assert sol.y * (1 - t * t) == 2 * t * sol.x
    return sol


def rho_range(t, n_max: int, n_min: int = 1) -> list[ThreeDistanceSolution]:
    """Defined rho_n(t) for n_min <= n <= n_max, deduplicated by point."""
    seen, out = set(), []
    for n in range(n_min, n_max + 1):
        sol = rho(n, t)
        if sol is not None and (sol.x, sol.y) not in seen:
            seen.add((sol.x, sol.y))
            out.append(sol)
    return out


def _multiple(maps: QuarticWeierstrassMaps, n: int, G: ECPoint) -> ECPoint:
    return ec_scalar_mul(maps.curve, n, G)


def _slope_pairs(maps: QuarticWeierstrassMaps, G: ECPoint):
    """Affine slope pairs phi(backward(kG)) for k = 1, 2, ... (skipping non-affine ones)."""
    acc = ECPoint()
    while True:
        acc = ec_add(maps.curve, acc, G)
        if acc.is_infinity:
            raise ArithmeticError("generator turned out to be torsion")
        a1, a2 = phi(maps.eta, maps.backward(acc))
        if a1.v != 0 and a2.v != 0:
            yield a1.affine, a2.affine


def _collect(pairs, count, key, limit):
    seen, out = set(), []
    for i, pair in enumerate(pairs):
        if i >= limit:
            break
        k = key(pair)
        if k in seen:
            continue
        seen.add(k)
        out.append(pair)
        if len(out) == count:
            return out
    raise ArithmeticError(f"only {len(out)} distinct solutions within {limit} multiples")


def in_s_prime(alpha) -> bool:
    return is_rational_square(Q(alpha) ** 2 + 1) is not None


def sum_decompose(alpha3, count: int) -> list[tuple[Fraction, Fraction]]:
    """`count` distinct pairs of Pythagorean slopes with alpha1 + alpha2 = alpha3."""
    alpha3 = Q(alpha3)
    h = is_rational_square(alpha3 * alpha3 + 1)
    if h is None:
        raise ValueError(f"{alpha3} is not a Pythagorean slope")
    if alpha3 == 0:
        # closed under negation
        out = []
        k = 2
        while len(out) < count:
            a = slope_from_parameter(k).affine
            out.append((a, -a))
            k += 1
        return out
    t = h - alpha3  # alpha3 = (1 - t^2) / (2t)
    eta = Matrix(0, 1, 1, -alpha3)
    maps = _maps_for(eta, BASE)
    G = ECPoint(t, (t + 1) ** 2 / 2)
    if not maps.curve.contains(G):
        raise ArithmeticError(f"generator {G} is not on {maps.curve}")  # pragma: no cover
    pairs = _collect(_slope_pairs(maps, G), count, lambda p: frozenset(p), 8 * count + 20)
    for a1, a2 in pairs:
        assert a1 + a2 == alpha3 and in_s_prime(a1) and in_s_prime(a2)
    return pairs


def triangular_generator(eta: Matrix, base: WPoint) -> tuple[ECPoint, str]:
    """(-1, r) of E_(r,s) carried to the Jacobian model of eta, with its torsion verdict."""
    w = reduce_to_triangular(eta, base)
    k = w.scale
    return ECPoint(-1 / k**2, w.r / k**3), classify_minus1_point(w.r, w.s)


def three_sum(t, count: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Triples (x1, x2, x2) of Pythagorean slopes with x1 + 2 x2 = t."""
    t = Q(t)
    if t == 0:
        raise ValueError("t = 0 is covered by sum_decompose(0, ...) with negation")
    eta = Matrix(0, 1, 2, -t)
    base = WPoint(0, 2, 1)
    maps = _maps_for(eta, base)
    G, verdict = triangular_generator(eta, base)
    if verdict != NON_TORSION:
        raise ArithmeticError(f"generator is {verdict}")  # pragma: no cover
    pairs = _collect(_slope_pairs(maps, G), count, lambda p: p, 8 * count + 20)
    triples = [(x1, x2, x2) for x1, x2 in pairs]
    for trip in triples:
        assert sum(trip) == t and all(in_s_prime(x) for x in trip)
    return triples


def product_setup(t) -> tuple[Fraction, Fraction, ECPoint]:
    """(s, multiplier, point) for writing t = x1 * x2 * multiplier with x1 x2 = -s."""
    t = Q(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    if t in (1, -1):
        u = Fraction(5, 6)
        point = ECPoint(Fraction(-12, 11), Fraction(204, 121))
    else:
        u = t * t + 2
        T = t * t
        point = ECPoint(
            T * (T + 1) ** 2 * (T + 2) / (T + 3) ** 2,
            T * (T + 2) * (T**4 + 4 * T**3 + 6 * T**2 + 8 * T + 9) / (T + 3) ** 3,
        )
    s = -t * 2 * u / (1 - u * u)
    return s, (1 - u * u) / (2 * u), point


def three_product(t, count: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Triples of Pythagorean slopes with x1 * x2 * x3 = t."""
    s, mult, G = product_setup(t)
    eta = Matrix(1, 0, 0, s)
    maps = _maps_for(eta, BASE)
    if not maps.curve.contains(G):
        raise ArithmeticError(f"{G} is not on {maps.curve}")
    if torsion_order(maps.curve, G) is not None:
        raise ArithmeticError(f"{G} is torsion")  # pragma: no cover
    pairs = _collect(_slope_pairs(maps, G), count, lambda p: frozenset(p), 8 * count + 20)
    triples = [(x1, x2, mult) for x1, x2 in pairs]
    for x1, x2, x3 in triples:
        assert x1 * x2 * x3 == Q(t) and all(in_s_prime(x) for x in (x1, x2, x3))
    return triples
