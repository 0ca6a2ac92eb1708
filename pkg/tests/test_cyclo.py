import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouplie.cyclo import CycloScalar, context, cyclotomic_polynomial
from grouplie.errors import ConductorMismatch, DivisionByZero


def euler_phi(m):
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)


def test_cyclotomic_polynomials_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_degree_is_phi(m):
    assert len(cyclotomic_polynomial(m)) - 1 == euler_phi(m)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8, 12, 24])
def test_root_of_unity_identities(m):
    ctx = context(m)
    z = ctx.zeta(1)
    assert z * ctx.zeta(m - 1) == 1
    assert z**m == 1
    for k in range(m):
        assert ctx.zeta(k).conj() == ctx.zeta((m - k) % m)


@pytest.mark.parametrize("m", [2, 3, 5, 7, 11])
def test_prime_conductor_full_sum_vanishes(m):
    ctx = context(m)
    total = ctx.zero
    for k in range(m):
        total = total + ctx.zeta(k)
    assert total.is_zero()


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        context(4).zeta(1) + context(6).zeta(1)


def test_division_by_zero():
    ctx = context(5)
    with pytest.raises(DivisionByZero):
        ctx.zero.inverse()


def test_inverse_simple():
    ctx = context(5)
    a = ctx.one + ctx.zeta(1)
    assert a * a.inverse() == 1
    assert (ctx.zeta(2) / ctx.zeta(2)) == 1


coeff = st.integers(min_value=-6, max_value=6)


def scalars(m):
    ctx = context(m)
    d = ctx.degree
    return st.lists(coeff, min_size=d, max_size=d).map(
        lambda cs: CycloScalar(ctx, tuple(cs))
    )


@settings(max_examples=100)
@given(scalars(12), scalars(12), scalars(12))
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=100)
@given(scalars(12))
def test_multiplicative_inverse(a):
    if a:
        assert a * a.inverse() == 1


@settings(max_examples=100)
@given(scalars(10), scalars(10))
def test_conj_is_ring_map(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


def test_to_complex_values():
    assert context(1).one.to_complex() == 1.0
    i = context(4).zeta(1).to_complex(12)
    assert abs(i - 1j) < 1e-12
    ctx = context(5)
    golden = (ctx.zeta(1) + ctx.zeta(4)).to_complex(12)
    # 2 cos(2 pi / 5), frozen from (sqrt(5) - 1) / 2
    assert abs(golden - 0.6180339887498949) < 1e-12


def test_to_complex_precision_scaling():
    ctx = context(7)
    v = ctx.zeta(3) * Fraction(355, 113) + ctx.zeta(5)
    import cmath

    reference = Fraction(355, 113) * cmath.exp(2j * cmath.pi * 3 / 7) + cmath.exp(
        2j * cmath.pi * 5 / 7
    )
    assert abs(v.to_complex(14) - reference) < 1e-13


def test_embed():
    z3 = context(3).zeta(1)
    assert z3.embed(12) == context(12).zeta(4)
    assert abs(complex(z3.embed(12)) - complex(z3)) < 1e-12
    with pytest.raises(ConductorMismatch):
        z3.embed(8)


def test_fraction_coefficients_survive():
    ctx = context(6)
    v = ctx.zeta(1) * Fraction(1, 2)
    assert (v + v) == ctx.zeta(1)
    assert not v.is_rational()


def test_serialization_round_trip():
    ctx = context(12)
    v = ctx.zeta(5) * Fraction(3, 7) - ctx.zeta(2) + 4
    data = v.to_json()
    assert len(data) == 12
    assert CycloScalar.from_json(12, data) == v


def test_padded_length_matches_conductor():
    ctx = context(8)
    assert len(ctx.zeta(3).padded_coeffs()) == 8


def test_rational_detection():
    ctx = context(5)
    assert ctx.from_fraction(Fraction(2, 3)).as_fraction() == Fraction(2, 3)
    assert not ctx.zeta(1).is_rational()
    # 1 + z + z^2 + z^3 + z^4 = 0 makes z^4 rational minus the rest
    total = sum((ctx.zeta(k) for k in range(1, 5)), ctx.zero)
    assert total == -1
