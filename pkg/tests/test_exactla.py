from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nabext.exactla import (
    DimensionError, Matrix, column_space_basis, extend_to_quotient_basis, format_rational,
    mat_nullspace, mat_rank, parse_rational, solve_affine,
)

F = Fraction


def test_rank_identity():
    assert mat_rank(Matrix.identity(3)) == 3


def test_rank_proportional_rows():
    assert mat_rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_fractional_singular():
    assert mat_rank(Matrix.from_rows([[F(1, 2), F(1, 3)], [F(1, 4), F(1, 6)]])) == 1


def test_nullspace_examples():
    assert mat_nullspace(Matrix.identity(2)) == []
    (v,) = mat_nullspace(Matrix.from_rows([[1, 2], [2, 4]]))
    assert v[0] == -2 * v[1] and v != (0, 0)
    assert len(mat_nullspace(Matrix.zero(1, 3))) == 3


def test_solve_affine_examples():
    s = solve_affine(Matrix.identity(2), (3, 5))
    assert s.particular == (3, 5) and len(s.kernel_basis) == 0
    s = solve_affine(Matrix.from_rows([[1, 1]]), (2,))
    assert s.particular == (2, 0)
    (k,) = s.kernel_basis
    assert k[0] == -k[1]
    s = solve_affine(Matrix.from_rows([[1], [1]]), (0, 1))
    assert s.particular is None and not s.consistent


def test_matrix_shape_errors():
    with pytest.raises(DimensionError):
        Matrix.identity(2) @ Matrix.identity(3)
    with pytest.raises(DimensionError):
        Matrix.identity(2) + Matrix.zero(2, 3)
    with pytest.raises(DimensionError):
        Matrix.from_rows([[1, 2], [3]])


def test_rational_text_round_trip():
    for s in ("0", "3", "-7/4", "1/3"):
        assert format_rational(parse_rational(s)) == s
    assert format_rational(parse_rational("6/8")) == "3/4"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(ValueError):
        parse_rational("0.5x")


def test_quotient_basis_extends_span():
    span = [(F(1), F(0), F(0))]
    cands = [(F(1), F(0), F(0)), (F(1), F(1), F(0)), (F(0), F(1), F(0))]
    out = extend_to_quotient_basis(span, cands)
    assert len(out) == 1
    assert mat_rank(Matrix.from_rows(span + out)) == 2


entries = st.integers(-3, 3).map(F) | st.fractions(min_value=-2, max_value=2, max_denominator=4)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return Matrix.from_rows([[draw(entries) for _ in range(c)] for _ in range(r)], cols=c)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert mat_rank(m) == sympy.Matrix(m.to_rows()).rank()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    ker = mat_nullspace(m)
    assert mat_rank(m) + len(ker) == m.cols
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    assert len(column_space_basis(m)) == mat_rank(m)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_affine_solves(m, data):
    x = tuple(data.draw(entries) for _ in range(m.cols))
    b = m.apply(x)
    s = solve_affine(m, b)
    assert s.particular is not None
    assert m.apply(s.particular) == b
    assert len(s.kernel_basis) == m.cols - mat_rank(m)
