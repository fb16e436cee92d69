import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylift.exactmat import ExactMatrix, ThetaInvolution
from weylift.liealg import (
    RepresentationError,
    ad_power,
    adjoint_table,
    appendix_form_S_D,
    chevalley_generators,
    exp_quarter_J,
    theta_fixed_dimension,
    verify_adjoint_suite,
    verify_serre,
)
from weylift.lifts import classical_generators, gl_generators
from weylift.scalars import sqrt2

M = ExactMatrix.from_rows
ALL = [(t, r) for t in "ABCD" for r in range(1, 5) if not (t == "D" and r < 2)]


def bracket(a, b):
    return a * b - b * a


def test_chevalley_examples():
    a1 = chevalley_generators("A", 1)
    assert a1.e[0] == M([[0, 1], [0, 0]])
    # f is the transpose of e (the displayed -e_{i+1,i} breaks [e, f] = h)
    assert a1.f[0] == M([[0, 0], [1, 0]])
    b1 = chevalley_generators("B", 1)
    assert b1.e[0] == M([[0, 1, 0], [0, 0, 1], [0, 0, 0]]) * sqrt2()
    assert chevalley_generators("C", 1).e[0] == M([[0, 1], [0, 0]])


@pytest.mark.parametrize("t, r", ALL)
def test_serre_suite(t, r):
    rep = verify_serre(t, r)
    assert rep.passed, rep.to_text()


@pytest.mark.parametrize("t, r", ALL)
def test_chevalley_relations_directly(t, r):
    ch = chevalley_generators(t, r)
    A = ch.cartan
    for i in range(r):
        assert bracket(ch.e[i], ch.f[i]) == ch.h[i]
        for j in range(r):
            assert bracket(ch.h[i], ch.e[j]) == ch.e[j] * A[i][j]
            if i != j:
                assert ad_power(ch.e[i], ch.e[j], 1 - A[i][j]).is_zero()
                assert not ad_power(ch.e[i], ch.e[j], -A[i][j]).is_zero()


def test_b2_serre_exponent():
    ch = chevalley_generators("B", 2)
    assert ch.cartan[1][0] == -1
    assert ad_power(ch.e[1], ch.e[0], 2).is_zero()
    assert ad_power(ch.e[0], ch.e[1], 3).is_zero()


def test_exp_examples():
    assert exp_quarter_J("A", 1, 1) == M([[0, -1], [1, 0]])
    assert exp_quarter_J("B", 1, 1) == M([[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    assert exp_quarter_J("C", 1, 1) == M([[0, -1], [1, 0]])


@pytest.mark.parametrize("t, r", ALL)
def test_exp_matches_tits_generators(t, r):
    sdot = gl_generators(r + 1).sdot if t == "A" else classical_generators(t, r).sdotg
    for i in range(1, r + 1):
        assert exp_quarter_J(t, r, i) == sdot[i - 1]


def test_exp_numerically_against_scipy():
    import numpy as np
    from scipy.linalg import expm

    for t, r in (("B", 2), ("C", 3), ("D", 3), ("A", 3)):
        ch = chevalley_generators(t, r)
        for i in range(r):
            J = np.array([[complex(x.to_complex()) for x in row] for row in ch.J[i].rows()])
            ref = expm(np.pi / 2 * J)
            got = np.array([[complex(x.to_complex()) for x in row] for row in exp_quarter_J(t, r, i + 1).rows()])
            assert np.allclose(ref, got, atol=1e-9)


def test_exp_rejects_bad_index():
    with pytest.raises((ValueError, IndexError, RepresentationError)):
        exp_quarter_J("A", 2, 3)


@pytest.mark.parametrize(
    "t, r, dim",
    [("B", 1, 3), ("C", 1, 3), ("D", 2, 6), ("B", 2, 10), ("C", 3, 21), ("D", 3, 15), ("B", 4, 36), ("C", 4, 36), ("D", 4, 28)],
)
def test_theta_fixed_dimension(t, r, dim):
    assert theta_fixed_dimension(t, r) == dim


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_two_forms_of_s_d(r):
    th = ThetaInvolution("D", r)
    assert appendix_form_S_D(r) == th.S
    assert theta_fixed_dimension("D", r, appendix_form_S_D(r)) == r * (2 * r - 1)


@pytest.mark.parametrize("t, r", ALL)
def test_adjoint_suite(t, r):
    rep = verify_adjoint_suite(t, r)
    assert rep.passed, rep.to_text()
    table = rep.checks[0]
    assert "erratum" not in table.detail


def test_adjoint_examples():
    ch = chevalley_generators("A", 2)
    S1 = gl_generators(3).S[0]
    assert S1 * ch.e[0] * S1.inverse() == ch.f[0]
    for r in (1, 2, 3):
        ch = chevalley_generators("C", r)
        S = classical_generators("C", r).Sg[0]
        assert S * ch.e[0] * S.inverse() == -ch.f[0]
        assert adjoint_table("C", r, 0, 0, "e") == -ch.f[0]
        chb = chevalley_generators("B", r)
        Sb = classical_generators("B", r).Sg[0]
        assert Sb * chb.e[0] * Sb.inverse() == chb.f[0]


@pytest.mark.parametrize("t, r", [("B", 3), ("C", 3), ("D", 4)])
def test_sdot_conjugation_of_e(t, r):
    ch = chevalley_generators(t, r)
    sd = classical_generators(t, r).sdotg
    for i in range(r):
        assert sd[i] * ch.e[i] * sd[i].inverse() == -ch.f[i]


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(0, 2))
def test_sdot_acts_on_cartan_by_reflection(coeffs, i):
    ch = chevalley_generators("B", 3)
    sd = classical_generators("B", 3).sdotg[i]
    h = ExactMatrix.zero(7)
    for c, w in zip(coeffs, ch.coweights):
        h = h + w * c
    image = sd * h * sd.inverse()
    # s_i(h) = h - <alpha_i, h> h_i
    alpha_i_of_h = coeffs[i]
    assert image == h - ch.h[i] * alpha_i_of_h
