from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from nilgraph import _fallback
from nilgraph.errors import SingularMatrix
from nilgraph.kernels import BACKEND, available_backends
from nilgraph.linalg import (
    RationalMatrix,
    determinant,
    format_rational,
    leading_principal_minors,
    parse_rational,
    solve,
)

BACKENDS = available_backends()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def square_systems(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))
    b = draw(st.lists(rationals, min_size=n, max_size=n))
    return RationalMatrix(rows), b


@settings(max_examples=150, deadline=None)
@given(square_systems())
def test_solve_multiplies_back(system):
    a, b = system
    assume(determinant(a) != 0)
    x = solve(a, b)
    assert a.apply(x) == [Fraction(v) for v in b]


@settings(max_examples=60, deadline=None)
@given(square_systems(max_n=6))
def test_singular_iff_zero_determinant(system):
    a, b = system
    if determinant(a) == 0:
        with pytest.raises(SingularMatrix):
            solve(a, b)
    else:
        solve(a, b)


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("seed", range(8))
def test_backends_agree_on_large_entries(name, seed):
    rng = random.Random(seed)
    n = rng.randint(1, 25)
    bits = rng.choice([4, 40, 100])
    rows = [[rng.randint(-(2**bits), 2**bits) for _ in range(n)] for _ in range(n)]
    rhs = [rng.randint(-(2**bits), 2**bits) for _ in range(n)]
    ref = _fallback.solve_integer_system(rows, rhs)
    nums, den = BACKENDS[name](rows, rhs)
    assert den > 0
    assert [Fraction(v, den) for v in nums] == [Fraction(v, ref[1]) for v in ref[0]]


@pytest.mark.parametrize("name", sorted(BACKENDS))
@pytest.mark.parametrize("rows", [[[0]], [[1, 2], [2, 4]], [[1, 1, 1], [1, 2, 3], [2, 3, 4]]])
def test_backends_detect_singularity(name, rows):
    with pytest.raises(SingularMatrix):
        BACKENDS[name](rows, [1] * len(rows))


def test_compiled_backend_selected_when_built():
    assert BACKEND in BACKENDS


@pytest.mark.parametrize(
    "rows, b, expected",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 1, 1], [1, 1, 1]),
        ([[5]], [1], [Fraction(1, 5)]),
        ([[0, 1], [1, 0]], [2, 3], [3, 2]),
    ],
)
def test_solve_examples(rows, b, expected):
    assert solve(RationalMatrix(rows), b) == expected


@pytest.mark.parametrize(
    "rows, minors",
    [
        ([[1, 0], [0, 1]], [1, 1]),
        ([[3, 1], [1, 3]], [3, 8]),
        ([[3, 2, 2], [2, 3, 2], [2, 2, 3]], [3, 5, 7]),
        ([[0, 1], [1, 0]], [0, -1]),
    ],
)
def test_leading_principal_minors(rows, minors):
    assert leading_principal_minors(RationalMatrix(rows)) == minors


@settings(max_examples=80, deadline=None)
@given(square_systems(max_n=6))
def test_minors_match_determinants(system):
    a, _ = system
    assert leading_principal_minors(a) == [determinant(a.submatrix(k)) for k in range(1, a.n_rows + 1)]


def test_matrix_basics():
    a = RationalMatrix([[1, Fraction(1, 2)], [Fraction(1, 2), 3]])
    assert a.shape == (2, 2) and a.is_symmetric() and a.transpose() == a
    assert a @ RationalMatrix.identity(2) == a
    assert a[0, 1] == Fraction(1, 2)
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        solve(RationalMatrix([[1, 2]]), [1])


@pytest.mark.parametrize("x, s", [(Fraction(3), "3"), (Fraction(-1, 29), "-1/29"), (Fraction(0), "0")])
def test_rational_format_round_trip(x, s):
    assert format_rational(x) == s
    assert parse_rational(s) == x


def test_pure_python_backend_forced_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, NILGRAPH_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import nilgraph; print(nilgraph.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
