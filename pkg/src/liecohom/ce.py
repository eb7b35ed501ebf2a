"""Chevalley-Eilenberg cochain complexes and exact cohomology dimensions.

An r-cochain with values in an m-dimensional module is stored as a vector
indexed by ``(I, a)`` at position ``pos(I) * m + a``, where ``I`` runs over
the degree-r multi-indices of :mod:`liecohom.exterior` and ``a`` over the
module basis.  The same layout is used for chains ``e_I (x) v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import LieAlgebra, ad_matrix
from .errors import DegreeOutOfRange, DimensionMismatch, NotARepresentation
from .exterior import basis as ext_basis
from .exterior import basis_position, sort_sign
from .linalg import Matrix, Vector, in_span, span_basis, vector


@dataclass(frozen=True)
class CoefficientModule:
    """A representation: ``rho[i]`` is the action of the i-th basis vector."""

    dim: int
    rho: tuple

    def action(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for c, m in zip(vector(x), self.rho):
            if c:
                out = out + m.scale(c)
        return out


def validate_module(g: LieAlgebra, rho: Sequence) -> CoefficientModule:
    """Check ``rho([e_i, e_j]) = [rho(e_i), rho(e_j)]`` on all basis pairs."""
    rho = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in rho)
    if len(rho) != g.dim:
        raise DimensionMismatch(f"{len(rho)} action matrices for a {g.dim}-dimensional algebra")
    if not rho:
        raise DimensionMismatch("cannot infer the module dimension from zero matrices")
    m = rho[0].nrows
    for a in rho:
        if a.shape != (m, m):
            raise DimensionMismatch("action matrices must be square of one size")
    module = CoefficientModule(m, rho)
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = module.action(g.bracket(g.basis_vector(i), g.basis_vector(j)))
            rhs = rho[i] @ rho[j] - rho[j] @ rho[i]
            if lhs != rhs:
                raise NotARepresentation(f"rho([e{i}, e{j}]) differs from the commutator")
    return module


def trivial_module(g: LieAlgebra) -> CoefficientModule:
    return CoefficientModule(1, tuple(Matrix.zeros(1, 1) for _ in range(g.dim)))


def adjoint_module(g: LieAlgebra) -> CoefficientModule:
    return CoefficientModule(g.dim, tuple(ad_matrix(g, g.basis_vector(i)) for i in range(g.dim)))


def character_module(g: LieAlgebra, chi: Sequence) -> CoefficientModule:
    """One-dimensional module on which X acts by the scalar chi(X)."""
    return validate_module(g, [Matrix([[c]]) for c in vector(chi)])


def dual_module(v: CoefficientModule) -> CoefficientModule:
    """``(X phi)(v) = -phi(X v)``, i.e. minus the transpose."""
    return CoefficientModule(v.dim, tuple(-a.T for a in v.rho))


# --- complexes ----------------------------------------------------------


@dataclass(frozen=True)
class CochainComplex:
    """``differentials[r]`` maps degree r to degree r+1."""

    dims: tuple
    differentials: tuple

    def is_complex(self) -> bool:
        return all((d2 @ d1).is_zero() for d1, d2 in zip(self.differentials, self.differentials[1:]))


@dataclass(frozen=True)
class ChainComplex:
    """``boundaries[r]`` maps degree r+1 to degree r."""

    dims: tuple
    boundaries: tuple

    def is_complex(self) -> bool:
        return all((b1 @ b2).is_zero() for b1, b2 in zip(self.boundaries, self.boundaries[1:]))


@dataclass(frozen=True)
class BettiTable:
    numbers: tuple
    representatives: tuple | None = None

    def __str__(self):
        return " ".join(str(b) for b in self.numbers)

    def __iter__(self):
        return iter(self.numbers)

    def __getitem__(self, r):
        return self.numbers[r]

    def __len__(self):
        return len(self.numbers)


def cochain_differential_matrix(structure, rho: Sequence[Matrix], m: int, r: int) -> Matrix:
    """The CE differential on r-cochains of a bracket given by ``structure``.

    ``(d w)(X_0..X_r) = sum_i (-1)^i X_i . w(..^i..)
    + sum_{i<j} (-1)^(i+j) w([X_i, X_j], ..^i..^j..)``.
    ``structure`` need not satisfy Jacobi (the relative complex feeds in a
    projected bracket); d^2 = 0 is then only guaranteed on invariants.
    """
    q = len(structure)
    src = basis_position(q, r)
    dst = ext_basis(q, r + 1)
    rows = [[Fraction(0)] * (len(src) * m) for _ in range(len(dst) * m)]
    for jpos, J in enumerate(dst):
        for i, ji in enumerate(J):
            rest = J[:i] + J[i + 1:]
            col0 = src[rest] * m
            sgn = -1 if i % 2 else 1
            act = rho[ji]
            for b in range(m):
                row = rows[jpos * m + b]
                for a in range(m):
                    c = act[b, a]
                    if c:
                        row[col0 + a] += sgn * c
        for i in range(len(J)):
            for l in range(i + 1, len(J)):
                rest = J[:i] + J[i + 1:l] + J[l + 1:]
                sgn = -1 if (i + l) % 2 else 1
                for k, c in enumerate(structure[J[i]][J[l]]):
                    if not c:
                        continue
                    s2, key = sort_sign((k,) + rest)
                    if not s2:
                        continue
                    col0 = src[key] * m
                    for b in range(m):
                        rows[jpos * m + b][col0 + b] += sgn * s2 * c
    return Matrix(rows, ncols=len(src) * m)


def chain_boundary_matrix(structure, rho: Sequence[Matrix], m: int, r: int) -> Matrix:
    """Boundary from degree r to r-1 on ``Lambda^r (x) V``.

    ``d(X_1^..^X_r (x) v) = sum_{s<t} (-1)^(s+t) [X_s, X_t]^..^s..^t.. (x) v
    + sum_s (-1)^s ..^s.. (x) X_s v`` (indices from 1), so in degree one
    ``d(X (x) v) = -X v``.
    """
    q = len(structure)
    src = ext_basis(q, r)
    dst = basis_position(q, r - 1)
    cols = []
    for I in src:
        for a in range(m):
            col = [Fraction(0)] * (len(dst) * m)
            for s, i_s in enumerate(I):
                rest = I[:s] + I[s + 1:]
                sgn = 1 if s % 2 else -1
                row0 = dst[rest] * m
                act = rho[i_s]
                for b in range(m):
                    c = act[b, a]
                    if c:
                        col[row0 + b] += sgn * c
            for s in range(len(I)):
                for t in range(s + 1, len(I)):
                    rest = I[:s] + I[s + 1:t] + I[t + 1:]
                    sgn = -1 if (s + t) % 2 else 1
                    for k, c in enumerate(structure[I[s]][I[t]]):
                        if not c:
                            continue
                        s2, key = sort_sign((k,) + rest)
                        if s2:
                            col[dst[key] * m + a] += sgn * s2 * c
            cols.append(col)
    return Matrix.from_columns(cols, len(dst) * m)


def _check_module(g: LieAlgebra, v: CoefficientModule):
    if len(v.rho) != g.dim:
        raise DimensionMismatch("module does not match the algebra dimension")


def ce_differential(g: LieAlgebra, v: CoefficientModule, r: int) -> Matrix:
    if not 0 <= r < g.dim:
        raise DegreeOutOfRange(f"degree {r} outside 0..{g.dim - 1}")
    _check_module(g, v)
    return cochain_differential_matrix(g.structure, v.rho, v.dim, r)


def cochain_complex(g: LieAlgebra, v: CoefficientModule) -> CochainComplex:
    _check_module(g, v)
    n = g.dim
    dims = tuple(comb(n, r) * v.dim for r in range(n + 1))
    return CochainComplex(dims, tuple(ce_differential(g, v, r) for r in range(n)))


def chain_complex(g: LieAlgebra, v: CoefficientModule) -> ChainComplex:
    _check_module(g, v)
    n = g.dim
    dims = tuple(comb(n, r) * v.dim for r in range(n + 1))
    return ChainComplex(
        dims, tuple(chain_boundary_matrix(g.structure, v.rho, v.dim, r) for r in range(1, n + 1))
    )


def cohomology(cx: CochainComplex, representatives: bool = False) -> BettiTable:
    """``b_r = dim C^r - rank D_r - rank D_(r-1)``, optionally with cocycles
    spanning a complement of the coboundaries."""
    ranks = [d.rank() for d in cx.differentials]
    numbers = []
    for r, dim in enumerate(cx.dims):
        out_rank = ranks[r] if r < len(ranks) else 0
        in_rank = ranks[r - 1] if r > 0 else 0
        b = dim - out_rank - in_rank
        if b < 0:
            raise ArithmeticError("negative Betti number: not a complex")
        numbers.append(b)
    reps = None
    if representatives:
        reps = []
        for r, dim in enumerate(cx.dims):
            if r < len(cx.differentials):
                cocycles = cx.differentials[r].nullspace()
            else:
                cocycles = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
            bounds = cx.differentials[r - 1].columns() if r > 0 else []
            reps.append(tuple(_complement(cocycles, bounds, dim)))
        reps = tuple(reps)
    return BettiTable(tuple(numbers), reps)


def homology(cx: ChainComplex) -> BettiTable:
    ranks = [b.rank() for b in cx.boundaries]
    numbers = []
    for r, dim in enumerate(cx.dims):
        out_rank = ranks[r - 1] if r > 0 else 0
        in_rank = ranks[r] if r < len(ranks) else 0
        numbers.append(dim - out_rank - in_rank)
    return BettiTable(tuple(numbers))


def _complement(candidates: Sequence[Vector], base: Sequence[Vector], n: int) -> list[Vector]:
    """Greedy choice, in order, of candidates independent modulo ``span(base)``."""
    chosen = []
    current = span_basis(base, n)
    for c in candidates:
        if not in_span(c, current, n):
            chosen.append(c)
            current = span_basis(current + [c], n)
    return chosen


def betti(g: LieAlgebra, v: CoefficientModule | None = None, representatives: bool = False) -> BettiTable:
    return cohomology(cochain_complex(g, v or trivial_module(g)), representatives)


def euler_characteristic(table: BettiTable) -> int:
    return sum((-1) ** r * b for r, b in enumerate(table.numbers))
