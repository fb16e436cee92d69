import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import cyc_scalars
from weylift.scalars import (
    CycScalar,
    FieldError,
    context_conductor,
    cyclotomic_polynomial,
    imag_unit,
    scalar_arith,
    sqrt2,
    to_complex,
    zeta,
)


@pytest.mark.parametrize(
    "N, coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (8, (1, 0, 0, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomial(N, coeffs):
    assert cyclotomic_polynomial(N) == coeffs


def test_cyclotomic_polynomial_matches_sympy():
    import sympy

    x = sympy.Symbol("x")
    for N in range(1, 31):
        ref = sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs()[::-1]
        assert cyclotomic_polynomial(N) == tuple(int(c) for c in ref)


def test_documented_products():
    i = zeta(4)
    assert scalar_arith("mul", i, i) == -1
    r2 = zeta(8) + zeta(8, -1)
    assert scalar_arith("mul", r2, r2) == 2
    assert scalar_arith("div", CycScalar.rational(1, 4), i) == -i


def test_division_by_zero_is_field_error():
    with pytest.raises(FieldError):
        scalar_arith("div", zeta(4), CycScalar.rational(0, 4))
    with pytest.raises(ZeroDivisionError):
        CycScalar.rational(0, 8).inverse()


def test_unknown_operation():
    with pytest.raises(ValueError):
        scalar_arith("pow", zeta(4), zeta(4))


def test_to_complex_examples():
    assert to_complex(zeta(4)) == pytest.approx((0.0, 1.0), abs=1e-10)
    re, im = to_complex(zeta(8) + zeta(8, -1), precision=8)
    assert re == pytest.approx(1.41421356, abs=1e-8) and im == 0.0
    assert to_complex(CycScalar.rational(0)) == (0.0, 0.0)
    with pytest.raises(ValueError):
        to_complex(zeta(4), precision=0)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_half_turn_root_of_unity(m):
    assert zeta(2 * m) ** m == -1


def test_named_constants():
    assert imag_unit() ** 2 == -1
    assert sqrt2() ** 2 == 2
    assert sqrt2(24) ** 2 == 2
    with pytest.raises(ValueError):
        imag_unit(6)
    with pytest.raises(ValueError):
        sqrt2(4)


@pytest.mark.parametrize("rank, N", [(1, 8), (2, 24), (3, 8), (4, 40), (5, 24)])
def test_context_conductor(rank, N):
    assert context_conductor(rank) == N
    assert (zeta(N, N // (2 * (rank + 1)))) ** (rank + 1) == -1


def test_mixed_conductors_lift_to_lcm():
    x = zeta(3) + zeta(4)
    assert x.N == 12
    assert x - zeta(4) == zeta(3)


def test_rational_constructor_takes_conductor():
    x = CycScalar.rational(Fraction(1, 2), 8)
    assert x.N == 8 and x.to_fraction() == Fraction(1, 2)


def test_numeric_value_matches_embedding():
    for N in (5, 7, 8, 12):
        for k in range(N):
            z = zeta(N, k).to_complex()
            assert abs(z - cmath.exp(2j * math.pi * k / N)) < 1e-12


@given(cyc_scalars(8), cyc_scalars(8), cyc_scalars(8))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(cyc_scalars(nonzero=True))
def test_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == 1


@given(cyc_scalars(), cyc_scalars())
def test_conj_is_an_involutive_automorphism(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert scalar_arith("conj", a) == a.conj()


@given(cyc_scalars())
def test_conj_is_complex_conjugation(a):
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-9


@given(cyc_scalars(), cyc_scalars())
def test_equality_is_canonical(a, b):
    same = a.N == b.N and a.coeffs == b.coeffs
    if same:
        assert a == b and hash(a) == hash(b)
    c = b + a - b
    assert c == a and hash(c) == hash(a)


@given(cyc_scalars(4), st.sampled_from([8, 12, 24]))
def test_lift_preserves_value(a, M):
    b = a.lift(M)
    assert b.N == M and b == a.lift(M)
    assert abs(b.to_complex() - a.to_complex()) < 1e-9


@given(cyc_scalars(), cyc_scalars())
def test_json_roundtrip(a, b):
    doc = a.to_json()
    back = CycScalar.from_coeffs(doc["conductor"], [Fraction(s) for s in doc["coeffs"]])
    assert back == a
