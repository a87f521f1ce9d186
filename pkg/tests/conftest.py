from fractions import Fraction as F

import pytest

from ratconfig.arith import slope_from_parameter
from ratconfig.curves import Matrix, WPoint, triangular
from ratconfig.elliptic import ec_scalar_mul, NON_TORSION
from ratconfig.quartic import build_quartic_maps
from ratconfig.reduction import transport_point
from ratconfig.three_distance import eta_of_t, triangular_generator


def rotation(t):
    """Rational rotation with cos = (1-t^2)/(1+t^2)."""
    t = F(t)
    u, v = (1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)
    return Matrix(u, -v, v, u)


def _moved(r, s, lam, t1, t2):
    """Fiber lam * r1 * (1,r;0,s) * r2^-1 with the image of (0:1:1)."""
    T = triangular(r, s)
    r1, r2 = rotation(t1), rotation(t2)
    eta = (r1 @ T @ r2.inverse()).scaled(lam)
    return eta, transport_point(T, eta, lam, r1, r2, WPoint(0, 1, 1))


def pointed_fibers():
    """Nonsingular fibers with a base point whose generator has infinite order."""
    out = [
        (triangular(5, 3), WPoint(0, 1, 1)),
        (triangular(F(-7, 2), F(-1, 2)), WPoint(0, -1, 1)),
        (Matrix(0, 1, 2, -7), WPoint(0, 2, 1)),
        (Matrix(0, 1, 2, F(3, 5)), WPoint(0, 2, 1)),
        (eta_of_t(2), WPoint(0, 1, 1)),
        (eta_of_t(F(1, 2)), WPoint(0, 1, 1)),
        (eta_of_t(3), WPoint(0, 1, 1)),
        _moved(2, 3, 1, F(1, 2), 0),
        _moved(F(1, 3), F(5, 2), F(3, 7), 2, F(-1, 3)),
        _moved(-4, F(2, 9), -2, F(2, 3), 5),
        _moved(F(7, 5), -3, F(1, 4), F(-3, 4), F(1, 5)),
        _moved(1, 2, 5, 3, 7),
    ]
    return out


def fiber_points(eta, base, span=5):
    """On-curve points backward(k G) for |k| <= span, G the transported (-1, r)."""
    maps = build_quartic_maps(eta, base)
    G, verdict = triangular_generator(eta, base)
    assert verdict == NON_TORSION
    return maps, G, [maps.backward(ec_scalar_mul(maps.curve, k, G)) for k in range(-span, span + 1)]


@pytest.fixture(scope="session")
def fibers():
    return pointed_fibers()


@pytest.fixture(scope="session")
def fiber_samples(fibers):
    return [(eta, base, fiber_points(eta, base)) for eta, base in fibers]


@pytest.fixture
def pythagorean_slopes():
    return [slope_from_parameter(F(n, d)) for n in range(-5, 6) for d in (1, 2, 3, 7)]
