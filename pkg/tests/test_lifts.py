import math

import pytest

from weylift.exactmat import ExactMatrix, ThetaInvolution, group_closure, monomial_decompose
from weylift.lifts import (
    LiftConstructionError,
    classical_generators,
    coxeter_m,
    gl_generators,
    outer_rep_D,
    printed_sdot_D1,
    sl_lift,
    so_odd_lift,
    theta_action_on_gl,
    theta_fixed_weyl_order,
    theta_fixed_weyl_order_matrices,
    verify_classical_suite,
    verify_gl_tits_presentation,
    weyl_action_matches_reflection,
    weyl_order,
)
from weylift.rootdata import weyl_enumerate
from weylift.scalars import zeta

M = ExactMatrix.from_rows
CLASSICAL = [(t, r) for t in "BCD" for r in range(1, 5) if not (t == "D" and r < 2)]


def test_gl_generator_blocks():
    g2 = gl_generators(2)
    assert g2.S[0] == M([[0, 1], [1, 0]])
    assert g2.sdot[0] == M([[0, -1], [1, 0]])
    assert g2.sdot[0] ** 2 == -ExactMatrix.identity(2) == g2.T[0] * g2.T[1].inverse()
    g3 = gl_generators(3)
    assert g3.Sbar[1] == M([[1, 0, 0], [0, 0, -1], [0, -1, 0]])
    assert g3.T[2] == ExactMatrix.diag([1, 1, -1])
    with pytest.raises(ValueError):
        gl_generators(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_gl_presentation(n):
    rep = verify_gl_tits_presentation(n)
    assert rep.passed, rep.to_text()


def test_gl_closure_examples():
    g4 = gl_generators(4)
    assert group_closure(g4.S).order == 24 == len(weyl_enumerate("A", 3))
    g3 = gl_generators(3)
    assert group_closure(list(g3.S) + list(g3.T)).order == 48


def test_coxeter_numbers():
    assert [coxeter_m(0, 0), coxeter_m(-1, -1), coxeter_m(-2, -1), coxeter_m(-1, -2)] == [2, 3, 4, 4]
    assert weyl_order("A", 3) == 24 and weyl_order("B", 3) == 48 and weyl_order("D", 4) == 192


def test_classical_examples():
    b1 = classical_generators("B", 1)
    assert b1.Sg[0] == M([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    c1 = classical_generators("C", 1)
    assert c1.Sg[0] == M([[0, -1], [1, 0]])
    d2 = classical_generators("D", 2)
    g = gl_generators(4)
    assert d2.Sg[1] == g.s(1) * g.sb(3)


@pytest.mark.parametrize("t, r", CLASSICAL)
def test_members_are_theta_fixed(t, r):
    th = ThetaInvolution(t, r)
    lift = classical_generators(t, r)
    for name, g in lift.members():
        assert th.is_fixed(g), name
    for name, lhs, rhs in lift.identifications():
        assert lhs == rhs, name


@pytest.mark.parametrize("t, r", CLASSICAL)
def test_classical_suite(t, r):
    rep = verify_classical_suite(t, r)
    if t == "C" and r >= 2:
        # the fourth-power clause is false in GL_{2l}; see the order detail
        assert [c.name for c in rep.failures()] == ["(S^C_1 S^C_2)^4 = (S^C_2 S^C_1)^4 = 1"]
        assert "order of S^C_1 S^C_2 is 8" in rep.failures()[0].detail
    else:
        assert rep.passed, rep.to_text()


def test_c_fourth_power_is_a_torus_element():
    for r in (2, 3, 4):
        lift = classical_generators("C", r)
        S = lift.Sg
        x = (S[0] * S[1]) ** 4
        assert x == lift.Tg[1] * lift.Tg[2] and not x.is_identity()
        assert (S[0] * S[1]) ** 2 == (S[1] * S[0]) ** 2


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c_non_splitting_witness(r):
    lift = classical_generators("C", r)
    sq = lift.Sg[0] ** 2
    assert sq == lift.Tg[1] and not sq.is_identity()


@pytest.mark.parametrize("t, r, order", [("B", 3, 48), ("C", 1, 4), ("D", 3, 24), ("C", 2, 32), ("B", 2, 8)])
def test_classical_closures(t, r, order):
    assert group_closure(classical_generators(t, r).Sg).order == order


def test_stilde_generates_weyl_sized_group():
    for r, order in ((1, 2), (2, 8), (3, 48)):
        lift = classical_generators("C", r)
        assert group_closure([lift.Stilde1] + list(lift.Sg[1:])).order == order


@pytest.mark.parametrize("t, r", CLASSICAL)
def test_projection_matches_folded_reflections(t, r):
    for k in range(1, r + 1):
        assert weyl_action_matches_reflection(t, r, k)
        monomial_decompose(classical_generators(t, r).Sg[k - 1])


def test_printed_d_word_is_not_theta_fixed_tits_element():
    for r in (2, 3, 4):
        lift = classical_generators("D", r)
        assert printed_sdot_D1(r) != lift.sdotg[0]


@pytest.mark.parametrize("t, r, count", [("B", 1, 2), ("B", 2, 8), ("B", 3, 48), ("C", 2, 8), ("C", 3, 48), ("C", 4, 384), ("D", 2, 8), ("D", 3, 48), ("D", 4, 384)])
def test_theta_fixed_weyl_order(t, r, count):
    assert theta_fixed_weyl_order(t, r) == count


@pytest.mark.parametrize("t, r", [("B", 1), ("B", 2), ("C", 2), ("D", 2), ("C", 3)])
def test_theta_fixed_count_by_matrices_agrees(t, r):
    assert theta_fixed_weyl_order_matrices(t, r) == theta_fixed_weyl_order(t, r)


def test_theta_fixed_weyl_order_cap():
    with pytest.raises(ValueError):
        theta_fixed_weyl_order("B", 4)


def test_sl_examples():
    l1 = sl_lift(1)
    i = zeta(4)
    assert l1.generators[0] == M([[0, 1], [1, 0]]) * i
    assert l1.generators[0] ** 2 == -ExactMatrix.identity(2)
    l2 = sl_lift(2)
    z = ExactMatrix.identity(3) * zeta(3)
    assert all(s * s == z for s in l2.generators)
    assert group_closure(l2.generators).order == 18


@pytest.mark.parametrize("r", [1, 2, 3])
def test_sl_and_so_suites(r):
    assert sl_lift(r).report.passed
    assert so_odd_lift(r).report.passed


def test_so_examples():
    s1 = so_odd_lift(1).generators[0]
    assert s1 == -M([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert s1.det() == 1 and (s1 * s1).is_identity()
    assert group_closure(so_odd_lift(2).generators).order == 8


@pytest.mark.parametrize("r", [2, 3, 4])
def test_outer_rep(r):
    out = outer_rep_D(r)
    assert out.report.passed, out.report.to_text()
    S = out.generators[0]
    assert S.det() == -1 and (S * S).is_identity()


@pytest.mark.parametrize("t, r", [("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 2), ("D", 3)])
def test_theta_action_on_gl(t, r):
    assert theta_action_on_gl(t, r).passed


def test_weyl_orders_are_factorial_formulae():
    for r in range(1, 6):
        assert weyl_order("B", r) == 2**r * math.factorial(r)
        assert weyl_order("A", r) == math.factorial(r + 1)


def test_bad_type():
    with pytest.raises((ValueError, LiftConstructionError)):
        classical_generators("A", 2)
