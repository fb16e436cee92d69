import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylift.exactmat import ExactMatrix
from weylift.quat import (
    ONE,
    I,
    J,
    K,
    QuatMatrix,
    Quaternion,
    QuaternionError,
    hat_embedding,
    monomial_normalizer_check,
    quat_arith,
    quat_conj_complex_check,
    quat_weyl_closure,
    random_quaternion,
    so3_lift,
    su2_to_so3,
    verify_quat_suite,
)
from weylift.scalars import imag_unit

fr = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
quats = st.builds(Quaternion, fr, fr, fr, fr)

# Unit quaternions with rational coefficients from Pythagorean quadruples.
QUADRUPLES = [(1, 2, 2, 3), (2, 3, 6, 7), (1, 4, 8, 9), (2, 6, 9, 11), (4, 4, 7, 9), (0, 3, 4, 5)]


def rational_units():
    out = [ONE, I, J, K]
    for a, b, c, d in QUADRUPLES:
        for s in ((1, 1, 1), (-1, 1, 1), (1, -1, 1), (1, 1, -1)):
            out.append(Quaternion(0, a * s[0], b * s[1], c * s[2]) / d)
            out.append(Quaternion(a * s[0], b * s[1], c * s[2], 0) / d)
    return out


def test_arith_examples():
    assert quat_arith("mul", J, J) == -ONE
    assert quat_arith("mul", I, J) == K
    assert quat_arith("norm", Quaternion(1, 1, 1, 1)) == 4
    assert quat_arith("conj", Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4)
    assert quat_arith("inv", J) == -J
    with pytest.raises(QuaternionError):
        quat_arith("inv", Quaternion())
    with pytest.raises(ValueError):
        quat_arith("exp", J)


@given(quats, quats, quats)
def test_division_ring(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conj() == b.conj() * a.conj()
    assert (a * b).norm() == a.norm() * b.norm()
    if not a.is_zero():
        assert a * a.inverse() == ONE


def test_hat_examples():
    i = imag_unit()
    assert hat_embedding(J) == ExactMatrix.from_rows([[0, 1], [-1, 0]])
    assert hat_embedding(I) == ExactMatrix.diag([i, -i])
    assert hat_embedding(K) == ExactMatrix.from_rows([[0, i], [i, 0]])
    z = Quaternion(3, -2)
    assert hat_embedding(z) == ExactMatrix.diag([i * -2 + 3, i * 2 + 3])
    assert hat_embedding(I).det() == 1 == I.norm()


@given(quats, quats)
def test_hat_is_an_algebra_homomorphism(a, b):
    assert hat_embedding(a * b) == hat_embedding(a) * hat_embedding(b)
    assert hat_embedding(a + b) == hat_embedding(a) + hat_embedding(b)
    assert hat_embedding(a).det() == a.norm()


def test_hat_det_equals_norm_on_many_random_quaternions():
    rng = random.Random(12)
    for _ in range(10_000):
        q = random_quaternion(rng)
        assert hat_embedding(q).det() == q.norm()


def test_covering_examples():
    assert su2_to_so3(ONE).is_identity()
    assert su2_to_so3(J) == ExactMatrix.diag([-1, 1, -1])
    assert su2_to_so3(I) == ExactMatrix.diag([1, -1, -1])
    with pytest.raises(QuaternionError):
        su2_to_so3(Quaternion(1, 1))


def test_lift_examples():
    assert so3_lift(ExactMatrix.identity(3)) in (ONE, -ONE)
    q = so3_lift(ExactMatrix.diag([-1, 1, -1]))
    assert q in (J, -J) and q * q == -ONE
    assert so3_lift(ExactMatrix.diag([-1, -1, 1])) in (K, -K)


def test_lift_errors():
    with pytest.raises(QuaternionError):
        so3_lift(ExactMatrix.diag([-1, -1, -1]))
    # rotation by pi/2 about the z axis needs sqrt(2)
    with pytest.raises(QuaternionError):
        so3_lift(ExactMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 1]]))


@pytest.mark.parametrize("q", rational_units())
def test_covering_has_kernel_plus_minus_one(q):
    R = su2_to_so3(q)
    assert (R.transpose() * R).is_identity() and R.det() == 1
    assert su2_to_so3(-q) == R
    assert so3_lift(R) in (q, -q)


@given(st.sampled_from(rational_units()), st.sampled_from(rational_units()))
def test_covering_is_multiplicative(p, q):
    assert su2_to_so3(p * q) == su2_to_so3(p) * su2_to_so3(q)


def test_conjugation_report():
    rep = quat_conj_complex_check()
    assert rep.passed, rep.to_text()
    z = Quaternion(Fraction(3, 5), Fraction(4, 5))
    assert J * z * J.inverse() == z.conj()


@pytest.mark.parametrize("m, order", [(1, 4), (2, 32), (3, 384)])
def test_weyl_closure(m, order):
    res, rep = quat_weyl_closure(m)
    assert res.order == order
    assert rep.passed, rep.to_text()


def test_closure_m1_elements():
    res, _ = quat_weyl_closure(1)
    assert {g[0, 0] for g in res.elements} == {ONE, -ONE, J, -J}


def test_closure_m_cap():
    with pytest.raises(ValueError):
        quat_weyl_closure(4)


def test_swap_conjugation():
    swap = QuatMatrix.permutation([1, 0])
    assert swap * QuatMatrix.diag([ONE, J]) * swap == QuatMatrix.diag([J, ONE])


def test_normalizer_examples():
    M = QuatMatrix.diag([J, ONE])
    D = QuatMatrix.diag([I, ONE])
    assert M * D * M.inverse() == QuatMatrix.diag([-I, ONE])
    U = QuatMatrix([[1, 1], [0, 1]])
    assert not (U * D * U.inverse()).is_diagonal()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_normalizer_report(m):
    rep = monomial_normalizer_check(m, trials=100)
    assert rep.passed, rep.to_text()


def test_inverse_of_singular_matrix():
    with pytest.raises(QuaternionError):
        QuatMatrix([[ONE, I], [J, J * I]]).inverse()


@pytest.mark.parametrize("m", [1, 2, 3])
def test_full_suite(m):
    rep = verify_quat_suite(m, random_trials=200)
    assert rep.passed, rep.to_text()


def test_json():
    assert Quaternion(1, Fraction(1, 2)).to_json() == ["1/1", "1/2", "0/1", "0/1"]
    assert QuatMatrix.identity(1).to_json() == {"m": 1, "rows": [[["1/1", "0/1", "0/1", "0/1"]]]}
