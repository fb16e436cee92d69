"""The compiled and pure-Python matrix kernels agree on every input."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylift import _backend, _kernels_py
from weylift.exactmat import _red_table
from weylift.scalars import field

ckernels = pytest.importorskip("weylift._ckernels")


@st.composite
def kernel_inputs(draw):
    N = draw(st.sampled_from([1, 3, 4, 5, 8, 12]))
    n = draw(st.integers(1, 5))
    d = field(N).d
    ints = st.integers(-1000, 1000)
    a = tuple(draw(st.lists(ints, min_size=n * n * d, max_size=n * n * d)))
    b = tuple(draw(st.lists(ints, min_size=n * n * d, max_size=n * n * d)))
    return n, d, a, b, _red_table(N)


@given(kernel_inputs())
def test_compiled_matches_python(args):
    assert ckernels.matmul(*args) == _kernels_py.matmul(*args)


def test_backend_selected():
    assert _backend.BACKEND in ("cython", "python")
    assert _backend.BACKEND == "cython"


def test_env_var_forces_python():
    code = "from weylift import BACKEND; print(BACKEND)"
    env = dict(os.environ, WEYLIFT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_large_entries_fall_back_to_python_ints():
    from weylift.exactmat import ExactMatrix

    big = ExactMatrix.from_rows([[2**40, 1], [0, 2**40]])
    sq = big * big * big
    assert sq[0, 0].to_fraction() == 2**120
    assert sq[0, 1].to_fraction() == 3 * 2**80


def test_same_closure_with_either_backend(monkeypatch):
    from weylift import exactmat
    from weylift.lifts import classical_generators

    gens = classical_generators("C", 2).Sg
    fast = exactmat.group_closure(gens)
    monkeypatch.setattr(_backend, "matmul", _kernels_py.matmul)
    slow = exactmat.group_closure(gens)
    assert fast.order == slow.order == 32
    assert [g.key() for g in fast.elements] == [g.key() for g in slow.elements]
