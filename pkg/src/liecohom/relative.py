"""Relative (g, K) cohomology and homology on a reductive pair.

Cochains are K-equivariant maps ``Lambda^r p -> V``; chains are the
coinvariants ``(Lambda^r p (x) V)_K``.  "K-equivariant" means killed by the
infinitesimal action of every k basis vector and fixed by every listed
component generator.  Both complexes use the bracket of g projected to p
along k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .algebra import ReductivePair, ad_matrix, modular_character
from .ce import (
    BettiTable,
    ChainComplex,
    CochainComplex,
    CoefficientModule,
    chain_boundary_matrix,
    cochain_differential_matrix,
    cohomology,
    homology,
    validate_module,
)
from .errors import (
    DimensionMismatch,
    InvariantsNotPreserved,
    KNotUnimodular,
    NotCompatible,
    ValidationError,
)
from .exterior import ExteriorElement, eval_top, exterior_derivation_matrix, exterior_power_matrix, wedge
from .exterior import basis as ext_basis
from .linalg import Matrix, Vector, kron, span_basis, unit_vector


@dataclass(frozen=True)
class GKModule:
    """A (g, K)-module: ``coefficient.rho`` acts by the g basis and
    ``component_action[i]`` is the action of ``pair.generators[i]``."""

    pair: ReductivePair
    coefficient: CoefficientModule
    component_action: tuple = ()

    @property
    def dim(self) -> int:
        return self.coefficient.dim

    def action(self, x: Sequence) -> Matrix:
        return self.coefficient.action(x)


def validate_gk_module(pair: ReductivePair, rho: Sequence, component_action: Sequence = ()) -> GKModule:
    """Check the representation property and, for each component generator k,
    ``alpha(k) rho(X) alpha(k)^-1 = rho(Ad(k) X)`` on the basis of g."""
    g = pair.algebra
    coefficient = rho if isinstance(rho, CoefficientModule) else validate_module(g, rho)
    if isinstance(rho, CoefficientModule):
        validate_module(g, rho.rho)
    alpha = tuple(a if isinstance(a, Matrix) else Matrix(a) for a in component_action)
    if len(alpha) != len(pair.generators):
        raise DimensionMismatch(
            f"{len(alpha)} component actions for {len(pair.generators)} component generators"
        )
    m = coefficient.dim
    for idx, (a, ad_k) in enumerate(zip(alpha, pair.generators)):
        if a.shape != (m, m) or not a.is_invertible():
            raise NotCompatible(f"component action {idx} is not an invertible {m}x{m} matrix")
        a_inv = a.inverse()
        for i in range(g.dim):
            lhs = a @ coefficient.rho[i] @ a_inv
            rhs = coefficient.action(ad_k.column(i))
            if lhs != rhs:
                raise NotCompatible(f"component action {idx} is incompatible with rho on basis vector {i}")
    return GKModule(pair, coefficient, alpha)


def trivial_gk_module(pair: ReductivePair) -> GKModule:
    n = pair.algebra.dim
    return GKModule(
        pair,
        CoefficientModule(1, tuple(Matrix.zeros(1, 1) for _ in range(n))),
        tuple(Matrix.identity(1) for _ in pair.generators),
    )


def adjoint_gk_module(pair: ReductivePair) -> GKModule:
    g = pair.algebra
    rho = CoefficientModule(g.dim, tuple(ad_matrix(g, g.basis_vector(i)) for i in range(g.dim)))
    return GKModule(pair, rho, tuple(pair.generators))


def dual_gk_module(v: GKModule) -> GKModule:
    """``(X phi)(v) = -phi(X v)`` and ``(k phi)(v) = phi(k^-1 v)``."""
    rho = CoefficientModule(v.dim, tuple(-a.T for a in v.coefficient.rho))
    return GKModule(v.pair, rho, tuple(a.inverse().T for a in v.component_action))


def character_gk_module(pair: ReductivePair, chi: Sequence, component_values: Sequence = ()) -> GKModule:
    """One-dimensional module: X acts by chi(X), generator i by ``component_values[i]``."""
    vals = list(component_values) or [1] * len(pair.generators)
    return validate_gk_module(pair, [Matrix([[c]]) for c in chi], [Matrix([[c]]) for c in vals])


def tensor_gk_module(v: GKModule, w: GKModule) -> GKModule:
    if v.pair != w.pair:
        raise ValidationError("modules over different pairs")
    iv, iw = Matrix.identity(v.dim), Matrix.identity(w.dim)
    rho = tuple(kron(a, iw) + kron(iv, b) for a, b in zip(v.coefficient.rho, w.coefficient.rho))
    alpha = tuple(kron(a, b) for a, b in zip(v.component_action, w.component_action))
    return GKModule(v.pair, CoefficientModule(v.dim * w.dim, rho), alpha)


# --- Ad data on p --------------------------------------------------------


def k_trace_defects(pair: ReductivePair) -> list[Fraction]:
    """``trace(ad_Y restricted to k)`` for each k basis vector Y."""
    return [pair.ad_on_k(y).trace() for y in pair.k_basis]


def is_k_unimodular(pair: ReductivePair) -> bool:
    return all(t == 0 for t in k_trace_defects(pair))


def det_ad_p(pair: ReductivePair) -> list[Fraction]:
    """``det Ad_p(k)`` for each component generator."""
    return [pair.p_block(a).det() for a in pair.generators]


def hazewinkel_twist(pair: ReductivePair, v: GKModule) -> GKModule:
    """``X . v - trace(ad_X) v`` and ``det(Ad_p(k))^-1 k . v``."""
    if not is_k_unimodular(pair):
        raise KNotUnimodular("trace of ad restricted to k does not vanish on k")
    g = pair.algebra
    chi = modular_character(g).values
    ident = Matrix.identity(v.dim)
    rho = tuple(a - ident.scale(c) for a, c in zip(v.coefficient.rho, chi))
    alpha = tuple(a.scale(1 / d) for a, d in zip(v.component_action, det_ad_p(pair)))
    return validate_gk_module(pair, rho, alpha)


# --- relative cochains ---------------------------------------------------


def _p_rho(v: GKModule) -> list[Matrix]:
    return [v.action(x) for x in v.pair.p_basis]


def _cochain_constraints(pair: ReductivePair, v: GKModule, r: int) -> Matrix:
    """Stacked linear conditions whose kernel is ``L_K(Lambda^r p, V)``.

    With a cochain stored as the m x N matrix W (column I = w(p_I)) and
    vec(W) in the package layout, the conditions are
    ``rho(Y) W - W D_Y = 0`` for Y in k (D_Y the derivation induced by
    ad_Y on Lambda^r p) and ``W E_k - alpha(k) W = 0`` for each component
    generator (E_k the induced action of Ad_p(k)).
    """
    q, m = pair.q, v.dim
    size = comb(q, r) * m
    blocks = []
    i_lambda = Matrix.identity(comb(q, r))
    i_v = Matrix.identity(m)
    for y in pair.k_basis:
        d = exterior_derivation_matrix(pair.ad_on_p(y), r)
        blocks.append(kron(i_lambda, v.action(y)) - kron(d.T, i_v))
    for ad_k, a in zip(pair.generators, v.component_action):
        e = exterior_power_matrix(pair.p_block(ad_k), r)
        blocks.append(kron(e.T, i_v) - kron(i_lambda, a))
    out = Matrix.zeros(0, size)
    for b in blocks:
        out = out.vstack(b)
    return out


def invariant_cochains(pair: ReductivePair, v: GKModule, r: int) -> list[Vector]:
    """Echelon-normalized basis of ``L_K(Lambda^r p, V)``."""
    if not 0 <= r <= pair.q:
        return []
    cons = _cochain_constraints(pair, v, r)
    return span_basis(cons.nullspace(), cons.ncols)


def relative_cochain_complex(pair: ReductivePair, v: GKModule) -> CochainComplex:
    """The invariant subcomplex, written in the echelon bases of the invariants."""
    q, m = pair.q, v.dim
    structure = pair.p_structure()
    rho_p = _p_rho(v)
    bases = [invariant_cochains(pair, v, r) for r in range(q + 1)]
    diffs = []
    for r in range(q):
        full = cochain_differential_matrix(structure, rho_p, m, r)
        src = Matrix.from_columns(bases[r], full.ncols)
        dst = Matrix.from_columns(bases[r + 1], full.nrows)
        image = full @ src
        if bases[r + 1]:
            coords = dst.solve_matrix(image)
        else:
            coords = Matrix.zeros(0, len(bases[r])) if image.is_zero() else None
        if coords is None:
            raise InvariantsNotPreserved(f"differential leaves the invariant cochains in degree {r + 1}")
        diffs.append(coords)
    return CochainComplex(tuple(len(b) for b in bases), tuple(diffs))


def relative_betti(pair: ReductivePair, v: GKModule | None = None, representatives: bool = False) -> BettiTable:
    return cohomology(relative_cochain_complex(pair, v or trivial_gk_module(pair)), representatives)


# --- relative chains -----------------------------------------------------


def _chain_relations(pair: ReductivePair, v: GKModule, r: int) -> list[Vector]:
    """Spanning set of the subspace divided out to form K-coinvariants."""
    q, m = pair.q, v.dim
    i_lambda = Matrix.identity(comb(q, r))
    i_v = Matrix.identity(m)
    rel = []
    for y in pair.k_basis:
        d = exterior_derivation_matrix(pair.ad_on_p(y), r)
        rel.extend((kron(d, i_v) + kron(i_lambda, v.action(y))).columns())
    for ad_k, a in zip(pair.generators, v.component_action):
        e = exterior_power_matrix(pair.p_block(ad_k), r)
        rel.extend((kron(e, a) - kron(i_lambda, i_v)).columns())
    return span_basis(rel, comb(q, r) * m)


def _quotient(relations: list[Vector], n: int) -> tuple[Matrix, Matrix]:
    """Projection onto, and section of, the quotient by ``span(relations)``.

    The quotient basis is the unit vectors on the non-pivot coordinates of
    the (echelon) relations.
    """
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in relations]
    free = [j for j in range(n) if j not in pivots]
    section = Matrix.from_columns([unit_vector(n, j) for j in free], n)
    frame = Matrix.from_columns(list(relations) + [unit_vector(n, j) for j in free], n)
    coords = frame.inverse()
    proj = coords.submatrix(range(len(relations), n), range(n))
    return proj, section


def relative_chain_complex(pair: ReductivePair, v: GKModule) -> ChainComplex:
    """The coinvariant complex, written in the quotient bases of :func:`_quotient`."""
    q, m = pair.q, v.dim
    structure = pair.p_structure()
    rho_p = _p_rho(v)
    quots = []
    rels = []
    for r in range(q + 1):
        rel = _chain_relations(pair, v, r)
        rels.append(rel)
        quots.append(_quotient(rel, comb(q, r) * m))
    bounds = []
    for r in range(1, q + 1):
        full = chain_boundary_matrix(structure, rho_p, m, r)
        for x in rels[r]:
            image = full @ x
            if quots[r - 1][0].ncols and any(quots[r - 1][0] @ image):
                raise InvariantsNotPreserved(f"boundary does not preserve the relations in degree {r}")
        bounds.append(quots[r - 1][0] @ full @ quots[r][1])
    return ChainComplex(tuple(s.ncols for _, s in quots), tuple(bounds))


def relative_homology_betti(pair: ReductivePair, v: GKModule | None = None) -> BettiTable:
    return homology(relative_chain_complex(pair, v or trivial_gk_module(pair)))


# --- fixed points and duality --------------------------------------------


def h0_fixed_points(pair: ReductivePair, v: GKModule) -> tuple[int, list[Vector]]:
    """Vectors killed by all of g and fixed by every component generator."""
    m = v.dim
    cons = Matrix.zeros(0, m)
    for x in pair.k_basis + pair.p_basis:
        cons = cons.vstack(v.action(x))
    for a in v.component_action:
        cons = cons.vstack(a - Matrix.identity(m))
    basis = span_basis(cons.nullspace(), m)
    return len(basis), basis


@dataclass(frozen=True)
class DualityReport:
    """``cohomology[r]`` is ``dim H^r(g,K;V)``, ``twisted_homology[r]`` is
    ``dim H_r(g,K;V^tw)``; duality pairs degree r with q - r."""

    q: int
    cohomology: tuple
    twisted_homology: tuple
    matches: tuple
    top_cohomology_trivial: int
    h0_dual_twist: int

    @property
    def degrees_match(self) -> bool:
        return all(self.matches)

    @property
    def corollary_holds(self) -> bool:
        return self.top_cohomology_trivial == self.h0_dual_twist

    @property
    def ok(self) -> bool:
        return self.degrees_match and self.corollary_holds


def duality_check(pair: ReductivePair, v: GKModule | None = None) -> DualityReport:
    """Compare ``dim H^r(g,K;V)`` with ``dim H_(q-r)(g,K;V^tw)`` degree by
    degree, and ``dim H^q(g,K;R)`` with ``dim H^0(g,K;(R^tw)*)``."""
    v = v or trivial_gk_module(pair)
    q = pair.q
    tw = hazewinkel_twist(pair, v)
    coh = relative_betti(pair, v).numbers
    hom = relative_homology_betti(pair, tw).numbers
    matches = tuple(coh[r] == hom[q - r] for r in range(q + 1))
    trivial = trivial_gk_module(pair)
    top = relative_betti(pair, trivial).numbers[q]
    h0, _ = h0_fixed_points(pair, dual_gk_module(hazewinkel_twist(pair, trivial)))
    return DualityReport(q, coh, hom, matches, top, h0)


# --- explicit duality isomorphism ---------------------------------------


def poincare_map(q: int, m: int, r: int) -> Matrix:
    """``lambda(a (x) v)(b) = eps0(a ^ b) v`` from ``Lambda^r p (x) V`` to
    ``Hom(Lambda^(q-r) p, V)``, with eps0 the coefficient of ``p_1^...^p_q``."""
    top = tuple(range(q))
    rows = comb(q, q - r) * m
    cols = []
    for idx in ext_basis(q, r):
        a = ExteriorElement.monomial(q, idx)
        evals = [eval_top(top, wedge(a, ExteriorElement.monomial(q, jdx))) for jdx in ext_basis(q, q - r)]
        for s in range(m):
            col = [Fraction(0)] * rows
            for jpos, e in enumerate(evals):
                col[jpos * m + s] = e
            cols.append(col)
    return Matrix.from_columns(cols, rows)


def poincare_map_check(pair: ReductivePair, v: GKModule | None = None) -> bool:
    """Check that the wedge pairing intertwines the chain complex of V^tw
    with the cochain complex of V on the full (non-invariant) spaces:
    ``lambda d = (-1)^r delta lambda`` in each degree, and lambda commutes
    with the k basis and the component generators."""
    v = v or trivial_gk_module(pair)
    tw = hazewinkel_twist(pair, v)
    q, m = pair.q, v.dim
    structure = pair.p_structure()
    rho_v, rho_tw = _p_rho(v), _p_rho(tw)
    lams = [poincare_map(q, m, r) for r in range(q + 1)]
    i_v = Matrix.identity(m)
    for r in range(1, q + 1):
        bd = chain_boundary_matrix(structure, rho_tw, m, r)
        d = cochain_differential_matrix(structure, rho_v, m, q - r)
        if lams[r - 1] @ bd != (d @ lams[r]).scale((-1) ** r):
            return False
    for r in range(q + 1):
        i_src = Matrix.identity(comb(q, r))
        i_dst = Matrix.identity(comb(q, q - r))
        for y in pair.k_basis:
            ad_p = pair.ad_on_p(y)
            on_chains = kron(exterior_derivation_matrix(ad_p, r), i_v) + kron(i_src, tw.action(y))
            on_cochains = kron(i_dst, v.action(y)) - kron(exterior_derivation_matrix(ad_p, q - r).T, i_v)
            if lams[r] @ on_chains != on_cochains @ lams[r]:
                return False
        for ad_k, a, a_tw in zip(pair.generators, v.component_action, tw.component_action):
            blk = pair.p_block(ad_k)
            on_chains = kron(exterior_power_matrix(blk, r), a_tw)
            on_cochains = kron(exterior_power_matrix(blk.inverse(), q - r).T, a)
            if lams[r] @ on_chains != on_cochains @ lams[r]:
                return False
    return True
