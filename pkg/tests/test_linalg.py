from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from liecohom.linalg import (
    Matrix,
    coordinates,
    format_scalar,
    in_span,
    kron,
    rank_of,
    rational_gcd,
    scalar,
    span_basis,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, square=False):
    m = draw(st.integers(1, max_rows))
    n = m if square else draw(st.integers(1, max_cols))
    # mix in zeros so low-rank cases are common
    entry = st.one_of(st.just(Fraction(0)), small)
    return [[draw(entry) for _ in range(n)] for _ in range(m)]


def _sympy(rows):
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in r] for r in rows])


@given(matrices())
def test_rank_matches_sympy(rows):
    assert Matrix(rows).rank() == _sympy(rows).rank()


@given(matrices(square=True))
def test_det_matches_sympy(rows):
    d = _sympy(rows).det()
    assert Matrix(rows).det() == Fraction(int(d.p), int(d.q))


@given(matrices())
def test_rref_matches_sympy(rows):
    r, pivots = Matrix(rows).rref()
    sr, spiv = _sympy(rows).rref()
    assert tuple(pivots) == tuple(spiv)
    nonzero = [[Fraction(int(x.p), int(x.q)) for x in sr.row(i)] for i in range(len(spiv))]
    assert r == Matrix(nonzero, ncols=len(rows[0]))


@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(rows):
    m = Matrix(rows)
    ns = m.nullspace()
    assert len(ns) == m.ncols - m.rank()
    for v in ns:
        assert all(x == 0 for x in m @ v)
    assert rank_of(ns, m.ncols) == len(ns)


@given(matrices(square=True))
def test_inverse_when_invertible(rows):
    m = Matrix(rows)
    if m.det() == 0:
        assert not m.is_invertible()
        return
    assert m @ m.inverse() == Matrix.identity(m.nrows)


@given(matrices(square=True), matrices(square=True))
def test_det_multiplicative(a, b):
    if len(a) != len(b):
        return
    a, b = Matrix(a), Matrix(b)
    assert (a @ b).det() == a.det() * b.det()


def test_solve_and_coordinates():
    m = Matrix([[1, 2], [3, 4]])
    x = m.solve([5, 6])
    assert m @ x == (5, 6)
    assert Matrix([[1, 1], [1, 1]]).solve([1, 2]) is None
    basis = [(1, 0, 1), (0, 1, 1)]
    assert coordinates((2, 3, 5), basis, 3) == (2, 3)
    assert coordinates((0, 0, 1), basis, 3) is None
    assert in_span((1, 1, 2), basis, 3)
    assert len(span_basis([(1, 2), (2, 4), (0, 0)], 2)) == 1


def test_kron_mixed_product():
    a, b = Matrix([[1, 2], [0, 1]]), Matrix([[0, 1], [1, 0]])
    c, d = Matrix([[2, 0], [1, 1]]), Matrix([[1, 1], [0, 3]])
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)
    assert kron(a, b).shape == (4, 4)


def test_rational_gcd():
    assert rational_gcd([Fraction(2, 3), Fraction(5, 7)]) == Fraction(1, 21)
    assert rational_gcd([4, 6]) == 2
    assert rational_gcd([Fraction(-1, 2)]) == Fraction(1, 2)
    assert rational_gcd([]) == 0


@given(st.lists(st.fractions(max_denominator=30).filter(lambda x: x != 0), min_size=1, max_size=5))
def test_rational_gcd_divides_each_value(values):
    g = rational_gcd(values)
    assert g > 0
    for v in values:
        assert (v / g).denominator == 1


def test_scalar_parsing_and_format():
    assert scalar("3/6") == Fraction(1, 2)
    assert format_scalar(Fraction(-4, 2)) == "-2"
    assert format_scalar(Fraction(1, 3)) == "1/3"
    with pytest.raises((TypeError, ValueError)):
        scalar(0.5)
