from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from ratconfig.arith import (SlopePair, format_rational, is_rational_square, legendre_symbol,
                             parameters_from_slope, parse_rational, proj_canon,
                             slope_from_parameter)

rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize("q, root", [(F(25, 16), F(5, 4)), (F(2), None),
                                     (F(41616, 14641), F(204, 121)), (F(-4), None), (F(0), F(0))])
def test_is_rational_square_examples(q, root):
    assert is_rational_square(q) == root


@given(rationals)
def test_square_of_rational_has_root(q):
    assert is_rational_square(q * q) == abs(q)


@pytest.mark.parametrize("a, p, expected", [(2, 3, -1), (4, 5, 1), (3, 3, 0), (-1, 7, -1), (-1, 13, 1)])
def test_legendre_examples(a, p, expected):
    assert legendre_symbol(a, p) == expected


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 31, 97])
def test_legendre_against_residue_set(p):
    residues = {x * x % p for x in range(1, p)}
    for a in range(-2 * p, 2 * p):
        expected = 0 if a % p == 0 else (1 if a % p in residues else -1)
        assert legendre_symbol(a, p) == expected


@given(st.integers(1, 10**6), st.integers(1, 10**6), st.sampled_from([3, 5, 7, 11, 101]))
def test_legendre_multiplicative(a, b, p):
    if a % p and b % p:
        assert legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p)


@pytest.mark.parametrize("p", [2, 9, 1, 15])
def test_legendre_rejects_bad_modulus(p):
    with pytest.raises(ValueError):
        legendre_symbol(3, p)


def test_slope_from_parameter_examples():
    s = slope_from_parameter(F(1, 2))
    assert (s.u, s.v, s.hyp) == (3, 4, 5)
    assert (slope_from_parameter(0).u, slope_from_parameter(0).v) == (1, 0)
    assert (slope_from_parameter(2).u, slope_from_parameter(2).v) == (-3, 4)


def test_parameters_from_slope_examples():
    assert parameters_from_slope(3, 4) == sorted([(1, 2), (-2, 1)])
    assert parameters_from_slope(1, 1) == []
    assert parameters_from_slope(1, 0) == [(0, 1), (1, 0)]
    with pytest.raises(ValueError):
        parameters_from_slope(0, 0)


@given(rationals)
def test_slope_parameter_round_trip(t):
    s = slope_from_parameter(t)
    assert s.pythagorean
    assert s.hyp ** 2 == s.u ** 2 + s.v ** 2
    sols = parameters_from_slope(s.u, s.v)
    assert len(sols) == 2
    x, z = sols[0]
    assert sols[1] == proj_canon(-z, x)
    assert proj_canon(t, 1) in sols


def test_slope_pair_not_pythagorean():
    s = SlopePair.of(1, 1)
    assert not s.pythagorean and s.affine == 1


@given(rationals)
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@pytest.mark.parametrize("text", ["1.5", "x", "1/0", "", "3/-4"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)
