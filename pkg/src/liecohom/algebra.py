"""Lie algebras over Q given by structure constants, and reductive pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .errors import (
    AntisymmetryViolation,
    DimensionMismatch,
    JacobiViolation,
    NoComplement,
    NotAdInvariant,
    NotAutomorphism,
    NotComplement,
    NotSubalgebra,
    ValidationError,
)
from .linalg import (
    Matrix,
    Vector,
    format_scalar,
    in_span,
    is_zero_vector,
    rank_of,
    scalar,
    span_basis,
    unit_vector,
    vector,
)


@dataclass(frozen=True)
class LieAlgebra:
    """A finite-dimensional Lie algebra; ``structure[i][j][k]`` is the
    coefficient of ``e_k`` in ``[e_i, e_j]``.

    Build instances through :func:`validate_algebra` or :func:`lie_algebra`.
    """

    name: str
    basis: tuple[str, ...]
    structure: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, name: str) -> int:
        try:
            return self.basis.index(name)
        except ValueError:
            raise ValidationError(f"{name!r} is not a basis element of {self.name or 'the algebra'}")

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionMismatch(f"vectors must have length {n}")
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, cijk in enumerate(self.structure[i][j]):
                    if cijk:
                        out[k] += c * cijk
        return tuple(out)

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def validate_algebra(structure, basis: Sequence[str] | None = None, name: str = "") -> LieAlgebra:
    """Check antisymmetry and the Jacobi identity and freeze the table."""
    n = len(structure)
    table = []
    for i in range(n):
        if len(structure[i]) != n:
            raise DimensionMismatch(f"structure table row {i} has length {len(structure[i])}, expected {n}")
        row = []
        for j in range(n):
            if len(structure[i][j]) != n:
                raise DimensionMismatch(f"structure entry ({i},{j}) has length {len(structure[i][j])}")
            row.append(vector(structure[i][j]))
        table.append(tuple(row))
    table = tuple(table)
    if basis is None:
        basis = tuple(f"e{i + 1}" for i in range(n))
    basis = tuple(basis)
    if len(basis) != n:
        raise DimensionMismatch(f"{len(basis)} basis names for a {n}-dimensional table")
    if len(set(basis)) != n:
        raise ValidationError("basis names must be distinct")

    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if table[i][j][k] != -table[j][i][k]:
                    raise AntisymmetryViolation(i, j, k)

    g = LieAlgebra(name, basis, table)
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                ei, ej, el = (unit_vector(n, t) for t in (i, j, l))
                a = g.bracket(ei, g.bracket(ej, el))
                b = g.bracket(ej, g.bracket(el, ei))
                c = g.bracket(el, g.bracket(ei, ej))
                residual = tuple(x + y + z for x, y, z in zip(a, b, c))
                if not is_zero_vector(residual):
                    raise JacobiViolation(i, j, l, residual)
    return g


def lie_algebra(name: str, basis: Sequence[str], brackets: Mapping) -> LieAlgebra:
    """Build from ``{("X", "Y"): {"Y": 2}, ...}``; each unordered pair listed once."""
    basis = tuple(basis)
    n = len(basis)
    pos = {b: i for i, b in enumerate(basis)}
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for (a, b), value in brackets.items():
        if a not in pos or b not in pos:
            raise ValidationError(f"bracket [{a},{b}] uses an unknown basis element")
        i, j = pos[a], pos[b]
        if i == j:
            if any(scalar(c) != 0 for c in value.values()):
                raise AntisymmetryViolation(i, i, 0)
            continue
        if frozenset((i, j)) in seen:
            raise ValidationError(f"bracket [{a},{b}] given twice")
        seen.add(frozenset((i, j)))
        for target, coeff in value.items():
            if target not in pos:
                raise ValidationError(f"unknown basis element {target!r}")
            k = pos[target]
            table[i][j][k] += scalar(coeff)
            table[j][i][k] -= scalar(coeff)
    return validate_algebra(table, basis, name)


def abelian(n: int, name: str = "") -> LieAlgebra:
    return lie_algebra(name or f"abelian{n}", [f"e{i + 1}" for i in range(n)], {})


def ad_matrix(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``ad_x``; column j holds the coordinates of ``[x, e_j]``."""
    x = vector(x)
    if len(x) != g.dim:
        raise DimensionMismatch(f"vector of length {len(x)} in a {g.dim}-dimensional algebra")
    cols = [g.bracket(x, g.basis_vector(j)) for j in range(g.dim)]
    return Matrix.from_columns(cols, g.dim)


@dataclass(frozen=True)
class ModularCharacter:
    """The covector X -> trace ad_X."""

    values: tuple

    def __call__(self, x: Sequence) -> Fraction:
        return sum((a * b for a, b in zip(self.values, vector(x))), Fraction(0))

    @property
    def is_unimodular(self) -> bool:
        return is_zero_vector(self.values)

    def __str__(self):
        return " ".join(format_scalar(v) for v in self.values)


def modular_character(g: LieAlgebra) -> ModularCharacter:
    return ModularCharacter(tuple(ad_matrix(g, g.basis_vector(i)).trace() for i in range(g.dim)))


def is_automorphism(g: LieAlgebra, a: Matrix) -> bool:
    """True when ``a`` is invertible and ``a[x, y] = [a x, a y]`` on basis pairs."""
    if a.shape != (g.dim, g.dim) or not a.is_invertible():
        return False
    cols = a.columns()
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = a @ g.bracket(g.basis_vector(i), g.basis_vector(j))
            if lhs != g.bracket(cols[i], cols[j]):
                return False
    return True


@dataclass(frozen=True)
class ReductivePair:
    """A splitting g = k + p with [k, p] in p, plus Ad-matrices on g of
    finitely many generators of the component group of K.

    All vectors are coordinates over ``algebra.basis``.
    """

    algebra: LieAlgebra
    k_basis: tuple
    p_basis: tuple
    generators: tuple = ()
    name: str = ""

    @property
    def k_dim(self) -> int:
        return len(self.k_basis)

    @property
    def q(self) -> int:
        """Dimension of p, i.e. of the homogeneous space."""
        return len(self.p_basis)

    @cached_property
    def frame(self) -> Matrix:
        """Columns: the k basis followed by the p basis."""
        return Matrix.from_columns(self.k_basis + self.p_basis, self.algebra.dim)

    @cached_property
    def _frame_inverse(self) -> Matrix:
        return self.frame.inverse()

    def split(self, x: Sequence) -> tuple[Vector, Vector]:
        """Coordinates of ``x`` along (k basis, p basis)."""
        c = self._frame_inverse @ vector(x)
        return c[: self.k_dim], c[self.k_dim:]

    def in_frame(self, a: Matrix) -> Matrix:
        """``a`` written in the adapted basis (k basis, then p basis)."""
        return self._frame_inverse @ a @ self.frame

    def p_structure(self) -> tuple:
        """Structure constants of the bracket projected to p, in the p basis."""
        q = self.q
        out = []
        for i in range(q):
            row = []
            for j in range(q):
                _, pc = self.split(self.algebra.bracket(self.p_basis[i], self.p_basis[j]))
                row.append(pc)
            out.append(tuple(row))
        return tuple(out)

    def ad_on_p(self, x: Sequence) -> Matrix:
        """p-block of ``ad_x`` (x in k), in the p basis."""
        return self.p_block(ad_matrix(self.algebra, x))

    def ad_on_k(self, x: Sequence) -> Matrix:
        return self.k_block(ad_matrix(self.algebra, x))

    def p_block(self, a: Matrix) -> Matrix:
        m = self.in_frame(a)
        idx = range(self.k_dim, self.algebra.dim)
        return m.submatrix(idx, idx)

    def k_block(self, a: Matrix) -> Matrix:
        m = self.in_frame(a)
        idx = range(self.k_dim)
        return m.submatrix(idx, idx)

    def __repr__(self):
        return f"ReductivePair({self.name!r}, algebra={self.algebra.name!r}, k={self.k_dim}, p={self.q}, generators={len(self.generators)})"


def validate_reductive_pair(
    g: LieAlgebra,
    k_basis: Sequence[Sequence],
    p_basis: Sequence[Sequence],
    generators: Sequence = (),
    name: str = "",
) -> ReductivePair:
    n = g.dim
    k_basis = tuple(vector(v) for v in k_basis)
    p_basis = tuple(vector(v) for v in p_basis)
    for v in k_basis + p_basis:
        if len(v) != n:
            raise DimensionMismatch(f"basis vector of length {len(v)} in a {n}-dimensional algebra")
    if rank_of(k_basis, n) != len(k_basis):
        raise NotComplement("k basis is linearly dependent")
    if rank_of(p_basis, n) != len(p_basis):
        raise NotComplement("p basis is linearly dependent")
    if len(k_basis) + len(p_basis) != n or rank_of(k_basis + p_basis, n) != n:
        raise NotComplement("k and p do not span g as a direct sum")

    for a in range(len(k_basis)):
        for b in range(a + 1, len(k_basis)):
            br = g.bracket(k_basis[a], k_basis[b])
            if not in_span(br, k_basis, n):
                raise NotSubalgebra(f"[k{a}, k{b}] = {_fmt(br)} leaves k")

    for a, y in enumerate(k_basis):
        for b, x in enumerate(p_basis):
            br = g.bracket(y, x)
            if not in_span(br, p_basis, n):
                raise NotAdInvariant(f"[k{a}, p{b}] = {_fmt(br)} leaves p", witness=("bracket", a, b, br))

    gens = []
    for idx, m in enumerate(generators):
        m = m if isinstance(m, Matrix) else Matrix(m)
        if m.shape != (n, n) or not m.is_invertible():
            raise NotAutomorphism(f"generator {idx} is not an invertible {n}x{n} matrix", index=idx)
        if not is_automorphism(g, m):
            raise NotAutomorphism(f"generator {idx} does not preserve the bracket", index=idx)
        for sub, label in ((k_basis, "k"), (p_basis, "p")):
            for v in sub:
                if not in_span(m @ v, sub, n):
                    raise NotAdInvariant(f"generator {idx} does not preserve {label}", witness=("generator", idx))
        gens.append(m)

    return ReductivePair(g, k_basis, p_basis, tuple(gens), name)


def trivial_pair(g: LieAlgebra, name: str = "") -> ReductivePair:
    """The pair (g, {0}) with p = g in the standard basis."""
    return validate_reductive_pair(g, (), [g.basis_vector(i) for i in range(g.dim)], (), name)


def find_reductive_complement(
    g: LieAlgebra, k_basis: Sequence[Sequence], generators: Sequence = ()
) -> list[Vector]:
    """Find p with g = k + p stable under ad(k) and the generators.

    Complements of k are graphs ``{x + T x : x in P0}`` of linear maps
    ``T: P0 -> k`` over the coordinate complement P0 of k.  For an operator
    A preserving k with blocks ``A_kk, A_kp, A_pp`` invariance of the graph
    is the Sylvester equation ``A_kk T - T A_pp = -A_kp``, linear in T.  The
    particular solution with all free unknowns zero is returned, in echelon
    form.
    """
    n = g.dim
    k_basis = [vector(v) for v in k_basis]
    if rank_of(k_basis, n) != len(k_basis):
        raise NotComplement("k basis is linearly dependent")
    for a in range(len(k_basis)):
        for b in range(a + 1, len(k_basis)):
            if not in_span(g.bracket(k_basis[a], k_basis[b]), k_basis, n):
                raise NotSubalgebra(f"[k{a}, k{b}] leaves k")
    kb = span_basis(k_basis, n)
    d = len(kb)
    if d == 0:
        return [g.basis_vector(i) for i in range(n)]
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in kb]
    p0 = [unit_vector(n, j) for j in range(n) if j not in pivots]
    q = len(p0)
    frame = Matrix.from_columns(kb + p0, n)
    finv = frame.inverse()

    operators = [ad_matrix(g, y) for y in kb]
    for idx, m in enumerate(generators):
        m = m if isinstance(m, Matrix) else Matrix(m)
        if not is_automorphism(g, m):
            raise NotAutomorphism(f"generator {idx} does not preserve the bracket", index=idx)
        operators.append(m)

    # unknown T[a][b] (a < d, b < q) sits at position a*q + b
    rows, rhs = [], []
    for op in operators:
        blk = finv @ op @ frame
        if not blk.submatrix(range(d, n), range(d)).is_zero():
            raise NoComplement("an operator does not preserve k")
        akk = blk.submatrix(range(d), range(d))
        akp = blk.submatrix(range(d), range(d, n))
        app = blk.submatrix(range(d, n), range(d, n))
        for a in range(d):
            for b in range(q):
                row = [Fraction(0)] * (d * q)
                for c in range(d):
                    row[c * q + b] += akk[a, c]
                for c in range(q):
                    row[a * q + c] -= app[c, b]
                rows.append(row)
                rhs.append(-akp[a, b])
    if rows:
        t = Matrix(rows, ncols=d * q).solve(rhs)
        if t is None:
            raise NoComplement("no invariant complement exists")
    else:
        t = (Fraction(0),) * (d * q)
    p = []
    for b in range(q):
        x = list(p0[b])
        for a in range(d):
            coef = t[a * q + b]
            if coef:
                x = [xi + coef * ki for xi, ki in zip(x, kb[a])]
        p.append(tuple(x))
    return span_basis(p, n)


def _fmt(v) -> str:
    return "(" + ",".join(format_scalar(x) for x in v) + ")"
