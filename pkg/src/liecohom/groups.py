"""Group-level data: det Ad and modular values, the det-Ad block
decomposition on a reductive pair, finite groups given by multiplication
tables, normal cores, and exact averaging projectors.

Group elements only ever enter through their Ad matrices on the Lie
algebra; no exponentials are taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Sequence

from .algebra import LieAlgebra, ReductivePair, is_automorphism
from .ce import CochainComplex, cochain_differential_matrix
from .errors import (
    DimensionMismatch,
    NotAGroup,
    NotARepresentation,
    NotASubgroup,
    NotAutomorphism,
    NotBlockPreserving,
)
from .exterior import exterior_power_matrix
from .linalg import Matrix, coordinates, rank_of, span_basis, vector

# --- Ad matrices and modular values -----------------------------------------


@dataclass(frozen=True)
class GroupElementAd:
    label: str
    matrix: Matrix


@dataclass(frozen=True)
class DetAd:
    det: Fraction

    @property
    def modular_value(self) -> Fraction:
        """``m(g) = |det Ad(g)|``."""
        return abs(self.det)

    @property
    def unimodular(self) -> bool:
        return abs(self.det) == 1

    @property
    def strongly_unimodular(self) -> bool:
        return self.det == 1


def group_element(label: str, matrix, algebra: LieAlgebra | None = None) -> GroupElementAd:
    m = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
    if not m.is_square() or not m.is_invertible():
        raise NotAutomorphism(f"Ad matrix of {label!r} is not invertible")
    if algebra is not None:
        if m.nrows != algebra.dim:
            raise DimensionMismatch(f"Ad matrix of {label!r} does not match dim {algebra.dim}")
        if not is_automorphism(algebra, m):
            raise NotAutomorphism(f"Ad matrix of {label!r} does not preserve the bracket")
    return GroupElementAd(label, m)


def det_ad(e: GroupElementAd, algebra: LieAlgebra | None = None) -> DetAd:
    if algebra is not None:
        group_element(e.label, e.matrix, algebra)
    return DetAd(e.matrix.det())


@dataclass(frozen=True)
class DetAdDecomposition:
    det_k: Fraction
    det_p: Fraction
    det: Fraction

    @property
    def product_ok(self) -> bool:
        return self.det_k * self.det_p == self.det

    @property
    def p_strongly_unimodular(self) -> bool:
        return self.det_p == 1


def det_ad_decomposition(pair: ReductivePair, e: GroupElementAd) -> DetAdDecomposition:
    """Block determinants of Ad on k and on p; raises unless both are preserved."""
    n = pair.algebra.dim
    if e.matrix.shape != (n, n):
        raise DimensionMismatch("Ad matrix does not match the algebra")
    m = pair.in_frame(e.matrix)
    d = pair.k_dim
    if not m.submatrix(range(d, n), range(d)).is_zero() or not m.submatrix(range(d), range(d, n)).is_zero():
        raise NotBlockPreserving(f"{e.label!r} does not preserve both k and p")
    return DetAdDecomposition(pair.k_block(e.matrix).det(), pair.p_block(e.matrix).det(), e.matrix.det())


def ad_from_conjugation(basis: Sequence[Matrix], g: Matrix) -> Matrix:
    """Ad matrix of ``g`` on a matrix Lie algebra with the given basis:
    column j holds the coordinates of ``g B_j g^-1``."""
    basis = [b if isinstance(b, Matrix) else Matrix(b) for b in basis]
    g = g if isinstance(g, Matrix) else Matrix(g)
    flat = [tuple(x for row in b.tolist() for x in row) for b in basis]
    size = len(flat[0])
    g_inv = g.inverse()
    cols = []
    for b in basis:
        image = g @ b @ g_inv
        c = coordinates([x for row in image.tolist() for x in row], flat, size)
        if c is None:
            raise NotAutomorphism("conjugation leaves the span of the basis")
        cols.append(c)
    return Matrix.from_columns(cols, len(basis))


# basis (H, S) of the affine-line algebra, [H, S] = S
GA_BASIS = (Matrix([[1, 0], [0, 0]]), Matrix([[0, 1], [0, 0]]))


def ga_ad_matrix(s, a) -> Matrix:
    """Ad of ``[[a, s], [0, 1]]`` in the basis (H, S); ``a`` stands in for
    the homothety ratio (``lambda^t`` in the exponential parametrisation)."""
    return ad_from_conjugation(GA_BASIS, Matrix([[a, s], [0, 1]]))


# --- finite groups ---------------------------------------------------------


@dataclass(frozen=True)
class FiniteGroup:
    """Elements are ``0..order-1``; ``table[a][b]`` is the product ``a*b``."""

    table: tuple
    identity: int = 0
    labels: tuple = ()
    name: str = ""
    inverses: tuple = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)


def validate_group(table: Sequence[Sequence[int]], labels: Sequence[str] = (), name: str = "") -> FiniteGroup:
    """Check closure, associativity, identity and inverses of a table."""
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    table = tuple(tuple(int(x) for x in row) for row in table)
    for row in table:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise NotAGroup("table is not a closed n x n table on 0..n-1")
    ids = [e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    inverses = []
    for a in range(n):
        inv = [b for b in range(n) if table[a][b] == e]
        if not inv or table[inv[0]][a] != e:
            raise NotAGroup(f"element {a} has no inverse")
        inverses.append(inv[0])
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAGroup(f"associativity fails on ({a},{b},{c})")
    if labels and len(labels) != n:
        raise NotAGroup("label count does not match the order")
    return FiniteGroup(table, e, tuple(labels), name, tuple(inverses))


def permutation_group(generators: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Closure of permutations (one-line notation on 0..d-1), elements in
    lexicographic order so the identity is element 0."""
    d = len(generators[0])
    ident = tuple(range(d))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(d))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    order = sorted(elems)
    pos = {p: i for i, p in enumerate(order)}
    # (a*b)(i) = a(b(i)): apply b first
    table = [[pos[tuple(a[b[i]] for i in range(d))] for b in order] for a in order]
    labels = ["".join(str(i + 1) for i in p) for p in order]
    return validate_group(table, labels, name)


def permutation_matrix(p: Sequence[int]) -> Matrix:
    """Column i is the unit vector ``e_p(i)``."""
    d = len(p)
    return Matrix.from_columns([[int(j == p[i]) for j in range(d)] for i in range(d)], d)


def permutation_representation(g: FiniteGroup) -> tuple[Matrix, ...]:
    """Permutation matrices of a group built by :func:`permutation_group`,
    read back from its one-line labels."""
    return tuple(permutation_matrix([int(c) - 1 for c in lab]) for lab in g.labels)


def symmetric_group(d: int, name: str = "") -> FiniteGroup:
    return permutation_group(list(permutations(range(d))), name=name or f"S{d}")


def cyclic_group(n: int, name: str = "") -> FiniteGroup:
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)], name=name or f"Z{n}")


def is_subgroup(g: FiniteGroup, k: Sequence[int]) -> bool:
    ks = set(k)
    if g.identity not in ks or any(not 0 <= a < g.order for a in ks):
        return False
    return all(g.mul(a, g.inv(b)) in ks for a in ks for b in ks)


def _require_subgroup(g: FiniteGroup, k: Sequence[int]) -> frozenset:
    if not is_subgroup(g, k):
        raise NotASubgroup(f"{sorted(set(k))} is not a subgroup")
    return frozenset(k)


def conjugate(g: FiniteGroup, x: int, k: Sequence[int]) -> frozenset:
    """``x K x^-1``."""
    return frozenset(g.mul(g.mul(x, a), g.inv(x)) for a in k)


def is_normal(g: FiniteGroup, k: Sequence[int]) -> bool:
    ks = frozenset(k)
    return all(conjugate(g, x, ks) == ks for x in range(g.order))


def normal_core(g: FiniteGroup, k: Sequence[int]) -> tuple[int, ...]:
    """Intersection of all conjugates of K, by brute force."""
    core = _require_subgroup(g, k)
    for x in range(g.order):
        core &= conjugate(g, x, core)
    return tuple(sorted(core))


def generated_subgroup(g: FiniteGroup, gens: Sequence[int]) -> frozenset:
    out = {g.identity}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = g.mul(a, s)
                if b not in out:
                    out.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(out)


def all_subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """Every subgroup, found by adjoining one element at a time to known
    subgroups until nothing new appears; sorted by order then contents."""
    found = {frozenset([g.identity])}
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            for x in range(g.order):
                if x in h:
                    continue
                s = generated_subgroup(g, list(h) + [x])
                if s not in found:
                    found.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted((tuple(sorted(h)) for h in found), key=lambda h: (len(h), h))


# --- actions and averaging -------------------------------------------------


def validate_action(g: FiniteGroup, matrices: Sequence) -> tuple[Matrix, ...]:
    """Check ``rho(a) rho(b) = rho(ab)`` and ``rho(e) = 1`` on the table."""
    mats = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
    if len(mats) != g.order:
        raise NotARepresentation(f"{len(mats)} action matrices for a group of order {g.order}")
    n = mats[0].nrows
    if any(m.shape != (n, n) for m in mats):
        raise NotARepresentation("action matrices must be square of one size")
    if mats[g.identity] != Matrix.identity(n):
        raise NotARepresentation("identity does not act trivially")
    for a in range(g.order):
        for b in range(g.order):
            if mats[a] @ mats[b] != mats[g.mul(a, b)]:
                raise NotARepresentation(f"action is not multiplicative on ({a},{b})")
    return mats


def average_projector(g: FiniteGroup, matrices: Sequence) -> Matrix:
    """Reynolds operator ``(1/|G|) sum_g rho(g)``."""
    mats = validate_action(g, matrices)
    total = Matrix.zeros(*mats[0].shape)
    for m in mats:
        total = total + m
    return total.scale(Fraction(1, g.order))


def fixed_vectors(matrices: Sequence[Matrix]) -> list:
    """Echelon basis of the common fixed space."""
    n = matrices[0].nrows
    stacked = Matrix.zeros(0, n)
    for m in matrices:
        stacked = stacked.vstack(m - Matrix.identity(n))
    return span_basis(stacked.nullspace(), n)


def exterior_action(matrices: Sequence[Matrix], r: int) -> tuple[Matrix, ...]:
    """Induced action on the r-th exterior power."""
    return tuple(exterior_power_matrix(m, r) for m in matrices)


def cochain_action(matrices: Sequence[Matrix], r: int) -> tuple[Matrix, ...]:
    """Action on r-cochains with trivial coefficients: ``w -> w o Lambda^r(A^-1)``."""
    return tuple(exterior_power_matrix(m.inverse(), r).T for m in matrices)


@dataclass(frozen=True)
class AveragingReport:
    """Averaging of CE cochains over a finite group of automorphisms.

    ``invariant_betti`` is the cohomology of the invariant subcomplex,
    ``full_betti`` that of the whole complex.  ``injective`` records that a
    cocycle of the invariant subcomplex exact in the full complex is already
    exact in the subcomplex, in every degree.
    """

    idempotent: bool
    retraction: bool
    commutes: bool
    injective: bool
    invariant_betti: tuple
    full_betti: tuple

    @property
    def ok(self) -> bool:
        return self.idempotent and self.retraction and self.commutes and self.injective


def averaged_cochains(g: LieAlgebra, group: FiniteGroup, matrices: Sequence) -> AveragingReport:
    """Average trivial-coefficient cochains of ``g`` over a finite group
    acting by automorphisms; check ``P^2 = P``, ``P i = i`` on invariant
    cochains, ``P d = d P``, and injectivity of ``i*`` in cohomology."""
    mats = validate_action(group, matrices)
    for idx, m in enumerate(mats):
        if m.shape != (g.dim, g.dim) or not is_automorphism(g, m):
            raise NotAutomorphism(f"element {group.label(idx)} does not act by an automorphism", index=idx)
    n = g.dim
    dims = [comb(n, r) for r in range(n + 1)]
    projectors = [average_projector(group, cochain_action(mats, r)) for r in range(n + 1)]
    trivial = [Matrix.zeros(1, 1)] * n
    diffs = [cochain_differential_matrix(g.structure, trivial, 1, r) for r in range(n)]

    idempotent = all(p @ p == p for p in projectors)
    retraction = True
    inv_bases = []
    for r, p in enumerate(projectors):
        fixed = fixed_vectors(cochain_action(mats, r))
        inv_bases.append(fixed)
        retraction &= all(p @ v == tuple(v) for v in fixed)
    commutes = all(projectors[r + 1] @ diffs[r] == diffs[r] @ projectors[r] for r in range(n))

    full_ranks = [d.rank() for d in diffs]
    full_betti = tuple(dims[r] - (full_ranks[r] if r < n else 0) - (full_ranks[r - 1] if r else 0) for r in range(n + 1))
    inv_betti = []
    injective = True
    for r in range(n + 1):
        basis = inv_bases[r]
        z_inv = _kernel_in(basis, diffs[r] if r < n else None, dims[r])
        b_inv = [diffs[r - 1] @ v for v in inv_bases[r - 1]] if r else []
        b_full = diffs[r - 1].columns() if r else []
        rb_inv = rank_of(b_inv, dims[r])
        inv_betti.append(len(z_inv) - rb_inv)
        # dim(Z_inv n B_full) = dim Z_inv + dim B_full - dim(Z_inv + B_full)
        meet = len(z_inv) + rank_of(b_full, dims[r]) - rank_of(list(z_inv) + list(b_full), dims[r])
        injective &= meet == rb_inv
    return AveragingReport(idempotent, retraction, commutes, injective, tuple(inv_betti), full_betti)


def _kernel_in(basis: Sequence, d: Matrix | None, n: int) -> list:
    """Vectors in ``span(basis)`` killed by ``d`` (all of it when d is None)."""
    if d is None or not basis:
        return list(basis)
    images = Matrix.from_columns([d @ v for v in basis], d.nrows)
    out = []
    for c in images.nullspace():
        out.append(vector(sum(ci * v[k] for ci, v in zip(c, basis)) for k in range(n)))
    return out


def cochain_complex_of_invariants(g: LieAlgebra, group: FiniteGroup, matrices: Sequence) -> CochainComplex:
    """The invariant subcomplex, in the echelon bases of invariant cochains."""
    mats = validate_action(group, matrices)
    n = g.dim
    trivial = [Matrix.zeros(1, 1)] * n
    bases = [fixed_vectors(cochain_action(mats, r)) for r in range(n + 1)]
    diffs = []
    for r in range(n):
        d = cochain_differential_matrix(g.structure, trivial, 1, r)
        dst = Matrix.from_columns(bases[r + 1], comb(n, r + 1)) if bases[r + 1] else None
        cols = []
        for v in bases[r]:
            w = d @ v
            cols.append(dst.solve(w) if dst is not None else ())
        diffs.append(Matrix.from_columns(cols, len(bases[r + 1])))
    return CochainComplex(tuple(len(b) for b in bases), tuple(diffs))


@dataclass(frozen=True)
class GroupData:
    """A finite group with an optional subgroup and an optional linear
    action; ``algebra`` is set when the action is by automorphisms of it."""

    group: FiniteGroup
    subgroup: tuple = ()
    action: tuple = ()
    algebra: LieAlgebra | None = None

    @property
    def name(self) -> str:
        return self.group.name


def group_data(group: FiniteGroup, subgroup: Sequence[int] = (), action: Sequence = (), algebra: LieAlgebra | None = None) -> GroupData:
    sub = tuple(sorted(_require_subgroup(group, subgroup))) if subgroup else ()
    mats = validate_action(group, action) if action else ()
    if algebra is not None:
        if not mats:
            raise NotARepresentation("an algebra is attached but no action is given")
        for idx, m in enumerate(mats):
            if m.shape != (algebra.dim, algebra.dim) or not is_automorphism(algebra, m):
                raise NotAutomorphism(f"element {group.label(idx)} does not act by an automorphism", index=idx)
    return GroupData(group, sub, mats, algebra)
