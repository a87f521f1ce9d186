from fractions import Fraction as F

import pytest

from ratconfig.curves import Matrix, WPoint, gamma_orbit, h_contains, triangular
from ratconfig.elliptic import INFINITY, ECPoint, ec_add, ec_scalar_mul
from ratconfig.quartic import build_quartic_maps, jacobian_model
from ratconfig.three_distance import eta_of_t


def test_jacobian_model_coefficients():
    C = jacobian_model(Matrix(1, 2, 3, 4))
    assert (C.A, C.B) == (30, 4)
    C = jacobian_model(triangular(F(15, 4), 4))
    assert (C.A, C.B) == (1 + F(15, 4) ** 2 + 16, 16)


def test_eta_of_two_model():
    maps = build_quartic_maps(eta_of_t(2), WPoint(0, 1, 1))
    assert (maps.curve.A, maps.curve.B) == (F(67, 9), F(49, 9))
    assert maps.section == "mu>0"


def test_base_point_goes_to_infinity(fibers):
    for eta, base in fibers:
        maps = build_quartic_maps(eta, base)
        assert maps.curve == jacobian_model(eta)
        assert maps.forward(base) == INFINITY
        assert maps.backward(INFINITY) == base


def test_round_trips(fiber_samples):
    total = 0
    for eta, base, (maps, G, pts) in fiber_samples:
        for k, P in zip(range(-5, 6), pts):
            assert h_contains(eta, P)
            assert maps.forward(P) == ec_scalar_mul(maps.curve, k, G)
            assert maps.backward(maps.forward(P)) == P
            total += 1
    assert total >= 100


def test_round_trip_through_gamma_orbit(fibers):
    for eta, base in fibers[:6]:
        maps = build_quartic_maps(eta, base)
        for P in gamma_orbit(base):
            R = maps.forward(P)
            assert maps.curve.contains(R)
            assert maps.backward(R) == P


def test_two_torsion_images(fibers):
    # the 2-torsion of the model comes back to points with y = 0 or at the chart edge
    for eta, base in fibers:
        maps = build_quartic_maps(eta, base)
        T = ECPoint(0, 0)
        P = maps.backward(T)
        assert h_contains(eta, P)
        assert maps.forward(P) == T


def test_forward_is_a_homomorphism_up_to_translation(fiber_samples):
    # with the base point at O, forward(P) + forward(Q) pulls back to a point on the curve
    eta, base, (maps, G, pts) = fiber_samples[4]
    C = maps.curve
    for P in pts[:4]:
        for Q in pts[-4:]:
            S = ec_add(C, maps.forward(P), maps.forward(Q))
            assert h_contains(eta, maps.backward(S))


def test_rejects_singular_fiber_and_off_curve():
    with pytest.raises(ValueError):
        build_quartic_maps(Matrix(1, 0, 0, 1), WPoint(0, 1, 1))
    with pytest.raises(ValueError):
        build_quartic_maps(triangular(5, 3), WPoint(0, 2, 1))
    maps = build_quartic_maps(triangular(5, 3), WPoint(0, 1, 1))
    with pytest.raises(ValueError):
        maps.forward(WPoint(1, 1, 1))
    with pytest.raises(ValueError):
        maps.backward(ECPoint(1, 1))
