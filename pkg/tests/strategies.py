"""Shared hypothesis strategies for exact scalars and matrices."""

from fractions import Fraction

from hypothesis import strategies as st

from weylift.exactmat import ExactMatrix
from weylift.scalars import CycScalar, field

small_fraction = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 6))


@st.composite
def cyc_scalars(draw, N=None, nonzero=False):
    if N is None:
        N = draw(st.sampled_from([1, 3, 4, 6, 8, 12]))
    d = field(N).d
    coeffs = draw(st.lists(small_fraction, min_size=d, max_size=d))
    x = CycScalar.from_coeffs(N, coeffs)
    if nonzero and x.is_zero():
        x = x + 1
    return x


@st.composite
def exact_matrices(draw, n=None, N=None):
    if n is None:
        n = draw(st.integers(1, 4))
    if N is None:
        N = draw(st.sampled_from([1, 4, 8]))
    rows = [[draw(cyc_scalars(N)) for _ in range(n)] for _ in range(n)]
    return ExactMatrix.from_rows(rows, N)


@st.composite
def signed_permutation_matrices(draw, n):
    perm = draw(st.permutations(range(n)))
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        rows[i][j] = signs[i]
    return ExactMatrix.from_rows(rows)
