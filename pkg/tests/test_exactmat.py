import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import exact_matrices, signed_permutation_matrices
from weylift.closure import ClosureCapExceeded
from weylift.exactmat import (
    ExactMatrix,
    NotMonomialError,
    SingularMatrixError,
    ThetaInvolution,
    antidiag_transpose,
    exact_rank,
    group_closure,
    monomial_compose,
    monomial_decompose,
    theta,
)
from weylift.scalars import CycScalar, zeta

ROT = ExactMatrix.from_rows([[0, -1], [1, 0]])
SWAP = ExactMatrix.from_rows([[0, 1], [1, 0]])


def test_antidiag_transpose_examples():
    a, b, c, d = (zeta(8, k) for k in range(4))
    g = ExactMatrix.from_rows([[a, b], [c, d]])
    assert antidiag_transpose(g) == ExactMatrix.from_rows([[d, b], [c, a]])
    assert antidiag_transpose(ExactMatrix.identity(4)) == ExactMatrix.identity(4)
    assert antidiag_transpose(ExactMatrix.diag([1, 2, 3])) == ExactMatrix.diag([3, 2, 1])


@given(exact_matrices(n=3), exact_matrices(n=3))
def test_antidiag_transpose_is_anti_multiplicative(a, b):
    assert antidiag_transpose(a * b) == antidiag_transpose(b) * antidiag_transpose(a)
    assert antidiag_transpose(antidiag_transpose(a)) == a


def test_theta_examples():
    assert theta(ThetaInvolution("C", 1), ROT) == ROT
    anti = ExactMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    assert theta(ThetaInvolution("B", 1), anti) == anti
    for t in "BCD":
        th = ThetaInvolution(t, 2)
        assert th(ExactMatrix.identity(th.n)).is_identity()


def test_theta_signs():
    assert ThetaInvolution("B", 2).signs == (1, -1, 1, -1, 1)
    assert ThetaInvolution("C", 2).signs == (1, -1, 1, -1)
    assert ThetaInvolution("D", 2).signs == (1, -1, -1, 1)
    with pytest.raises(ValueError):
        ThetaInvolution("A", 2)


def test_theta_rejects_singular_and_wrong_size():
    th = ThetaInvolution("C", 1)
    with pytest.raises(SingularMatrixError):
        th(ExactMatrix.from_rows([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        th(ExactMatrix.identity(3))


@pytest.mark.parametrize("t, rank", [("B", 1), ("B", 2), ("C", 2), ("D", 2), ("D", 3)])
@given(data=st.data())
def test_theta_is_an_involutive_automorphism(t, rank, data):
    th = ThetaInvolution(t, rank)
    g = data.draw(signed_permutation_matrices(th.n))
    h = data.draw(signed_permutation_matrices(th.n))
    assert th(th(g)) == g
    assert th(g * h) == th(g) * th(h)


def test_theta_involution_on_many_monomials():
    import random

    rng = random.Random(1)
    for t, rank in (("B", 2), ("C", 2), ("D", 2)):
        th = ThetaInvolution(t, rank)
        n = th.n
        for _ in range(10_000):
            perm = list(range(n))
            rng.shuffle(perm)
            vals = [rng.choice((1, -1, zeta(4), -zeta(4))) for _ in range(n)]
            g = monomial_compose(perm, vals)
            assert th(th(g)) == g


def test_group_closure_examples():
    assert group_closure([ExactMatrix.identity(2)]).order == 1
    assert group_closure([SWAP]).order == 2
    res = group_closure([ROT], track_words=True)
    assert res.order == 4
    assert len(set(res.elements)) == 4
    for g, w in zip(res.elements, res.words):
        assert ROT ** len(w) == g


def test_group_closure_cap():
    with pytest.raises(ClosureCapExceeded) as info:
        group_closure([ROT], cap=2)
    assert info.value.partial == 3


def test_closure_is_closed():
    gens = [SWAP, ExactMatrix.diag([1, -1])]
    res = group_closure(gens)
    keys = {g.key() for g in res.elements}
    assert all((g * s).key() in keys for g in res.elements for s in gens)


def test_monomial_decompose_examples():
    a, b = zeta(4), CycScalar.rational(3)
    assert monomial_decompose(ExactMatrix.diag([a, b])) == ((0, 1), (a, b))
    assert monomial_decompose(ROT) == ((1, 0), (-1, 1))
    with pytest.raises(NotMonomialError):
        monomial_decompose(ExactMatrix.from_rows([[1, 1], [0, 1]]))


@given(signed_permutation_matrices(4))
def test_monomial_roundtrip(g):
    cols, diag = monomial_decompose(g)
    assert monomial_compose(cols, diag) == g


@given(signed_permutation_matrices(4), signed_permutation_matrices(4))
def test_monomial_product_is_semidirect(g, h):
    cg, dg = monomial_decompose(g)
    ch, dh = monomial_decompose(h)
    cols, diag = monomial_decompose(g * h)
    assert cols == tuple(ch[cg[i]] for i in range(4))
    assert diag == tuple(dg[i] * dh[cg[i]] for i in range(4))


@given(exact_matrices(n=3, N=4))
def test_inverse_and_det(g):
    if g.det().is_zero():
        with pytest.raises(SingularMatrixError):
            g.inverse()
        return
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()


@given(exact_matrices(n=3, N=8), exact_matrices(n=3, N=8))
def test_det_multiplicative(a, b):
    assert (a * b).det() == a.det() * b.det()


def test_det_against_sympy():
    import sympy

    rows = [[2, -1, 0, 3], [1, 1, 4, 0], [0, 5, -2, 1], [7, 0, 1, 1]]
    assert ExactMatrix.from_rows(rows).det() == int(sympy.Matrix(rows).det())


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([[1, 0], [0, 1]]) == 2
    assert exact_rank([[0, 0]]) == 0


def test_scalar_products_lift_conductors():
    m = ExactMatrix.identity(2) * zeta(3)
    n = ExactMatrix.identity(2) * zeta(4)
    assert (m * n) == ExactMatrix.identity(2) * zeta(12, 7)


def test_json_shape():
    doc = ROT.to_json()
    assert doc["n"] == 2 and doc["conductor"] == 1
    assert doc["rows"][0][1] == {"conductor": 1, "coeffs": ["-1/1"]}
