"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from liecohom import catalog
from liecohom.algebra import LieAlgebra, validate_algebra
from liecohom.linalg import Matrix

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)

BASE_ALGEBRAS = ("abelian1", "abelian2", "abelian3", "heisenberg3", "sl2", "ga1", "su2")


def change_basis(g: LieAlgebra, p: Matrix, name: str = "") -> LieAlgebra:
    """The same algebra in the basis given by the columns of ``p``."""
    n = g.dim
    p_inv = p.inverse()
    cols = p.columns()
    structure = [[p_inv @ g.bracket(cols[i], cols[j]) for j in range(n)] for i in range(n)]
    return validate_algebra(structure, tuple(f"f{i + 1}" for i in range(n)), name or f"{g.name}'")


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    n, m = a.dim, b.dim
    c = [[[Fraction(0)] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c[i][j][k] = a.structure[i][j][k]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                c[n + i][n + j][n + k] = b.structure[i][j][k]
    return validate_algebra(c, tuple(f"u{i + 1}" for i in range(n + m)), f"{a.name}+{b.name}")


nonzero = st.sampled_from([Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3), Fraction(2, 3)])


@st.composite
def invertible(draw, n):
    """Unit lower times upper triangular with nonzero diagonal, optionally
    followed by a permutation; shrinks to the identity."""
    lower = Matrix([[draw(small) if j < i else Fraction(int(i == j)) for j in range(n)] for i in range(n)])
    upper = Matrix([[draw(small) if j > i else (draw(nonzero) if i == j else Fraction(0)) for j in range(n)] for i in range(n)])
    perm = draw(st.permutations(range(n)))
    p = Matrix([[Fraction(int(perm[i] == j)) for j in range(n)] for i in range(n)])
    return p @ lower @ upper


@st.composite
def lie_algebras(draw, max_dim=4):
    """Catalog algebras, small direct sums, and rational basis changes."""
    names = draw(st.lists(st.sampled_from(BASE_ALGEBRAS), min_size=1, max_size=2))
    g = catalog.get(names[0]).payload
    if len(names) == 2:
        h = catalog.get(names[1]).payload
        if g.dim + h.dim <= max_dim:
            g = direct_sum(g, h)
    if draw(st.booleans()):
        g = change_basis(g, draw(invertible(g.dim)))
    return g


@st.composite
def algebra_with_basis_change(draw):
    g = catalog.get(draw(st.sampled_from(BASE_ALGEBRAS))).payload
    return g, draw(invertible(g.dim))
