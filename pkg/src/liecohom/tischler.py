"""Period groups, the discreteness test behind Tischler's theorem, and
the fibration verdicts for transversely homogeneous foliations.

A period is a formal rational combination of named real constants that
the caller declares linearly independent over Q.  A finitely generated
subgroup of R given that way is discrete exactly when its Q-span has
dimension at most one.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Sequence

from .algebra import modular_character, validate_algebra
from .errors import NotHyperbolic, NotUnimodularMatrix, ValidationError
from .groups import ga_ad_matrix
from .linalg import Matrix, format_scalar, rank_of, rational_gcd, vector

# --- period groups ---------------------------------------------------------


@dataclass(frozen=True)
class PeriodGroup:
    constants: tuple
    generators: tuple = ()

    def format_period(self, v: Sequence) -> str:
        return format_combination(v, self.constants)


def period_group(constants: Sequence[str], generators: Sequence[Sequence] = ()) -> PeriodGroup:
    constants = tuple(constants)
    if not constants:
        raise ValidationError("a period group needs at least one constant")
    if len(set(constants)) != len(constants):
        raise ValidationError("repeated constant name")
    gens = tuple(vector(g) for g in generators)
    for g in gens:
        if len(g) != len(constants):
            raise ValidationError(f"period of length {len(g)} over {len(constants)} constants")
    return PeriodGroup(constants, gens)


def format_combination(v: Sequence, constants: Sequence[str]) -> str:
    """``2/3*c + log_lambda``; ``0`` for the zero vector.  The constant
    named ``1`` prints as a bare coefficient."""
    parts = []
    for c, name in zip(v, constants):
        if c == 0:
            continue
        if name == "1":
            term = format_scalar(abs(c))
        elif abs(c) == 1:
            term = name
        else:
            term = f"{format_scalar(abs(c))}*{name}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"


def q_rank(p: PeriodGroup) -> int:
    """Dimension over Q of the span of the periods."""
    return rank_of(p.generators, len(p.constants))


@dataclass(frozen=True)
class Discreteness:
    discrete: bool
    rank: int
    generator: tuple | None = None  # cyclic generator when discrete and nontrivial
    constants: tuple = ()

    def generator_text(self) -> str:
        return "none" if self.generator is None else format_combination(self.generator, self.constants)


def is_discrete(p: PeriodGroup) -> Discreteness:
    """Discrete iff the Q-rank is at most one.  In rank one every period is
    ``q_i * u`` for the direction ``u`` scaled to have first nonzero entry
    1, and the group is cyclic on ``gcd(q_i) * u``."""
    r = q_rank(p)
    if r == 0:
        return Discreteness(True, 0, None, p.constants)
    if r > 1:
        return Discreteness(False, r, None, p.constants)
    nonzero = [g for g in p.generators if any(g)]
    lead = next(i for i, x in enumerate(nonzero[0]) if x)
    u = tuple(x / nonzero[0][lead] for x in nonzero[0])
    multiples = [g[lead] for g in nonzero]
    step = rational_gcd(multiples)
    return Discreteness(True, 1, tuple(step * x for x in u), p.constants)


# --- foliation profiles and verdicts ---------------------------------------


@dataclass(frozen=True)
class FoliationProfile:
    """Unimodularity flags of the groups attached to a transversely
    homogeneous foliation with model G0/K0 (``#`` denotes the quotient by
    the normal core): G0#, the closure of the holonomy group and its
    identity component, and (K0)#, plus the trusted topological flags."""

    g0_unimodular: bool
    gamma_closure_unimodular: bool
    gamma_identity_unimodular: bool
    k_compact: bool
    k_strongly_unimodular: bool
    fibers_finite_components: bool
    manifold_compact: bool
    periods: PeriodGroup | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)


FLAG_NAMES = tuple(f.name for f in fields(FoliationProfile) if f.type in ("bool", bool))

VERDICT_KINDS = (
    "FoliationUnimodular",
    "ManifoldFibers",
    "LeafClosuresFiber",
    "BlumenthalBundleFibers",
    "HypothesesNotMet",
)


@dataclass(frozen=True)
class Verdict:
    kind: str
    certificate: tuple  # lines, most general first
    discreteness: Discreteness | None = None

    def __str__(self):
        return self.kind


_STANDING = (
    "standing hypotheses hold: M compact, (K0)# compact and strongly unimodular,"
    " developing-map fibers with finitely many components"
)


def _missing_hypotheses(p: FoliationProfile) -> list[str]:
    need = ("manifold_compact", "k_compact", "k_strongly_unimodular", "fibers_finite_components")
    return [n for n in need if not getattr(p, n)]


def unimodularity_verdict(p: FoliationProfile) -> Verdict:
    """FoliationUnimodular when G0# and the holonomy closure are unimodular
    under the standing hypotheses; otherwise defer to the trichotomy."""
    if not (p.manifold_compact and p.k_compact):
        return _not_met(p)
    if p.g0_unimodular and p.gamma_closure_unimodular and p.k_strongly_unimodular and p.fibers_finite_components:
        return Verdict(
            "FoliationUnimodular",
            (
                _STANDING,
                "G0# is connected and unimodular, hence G# is strongly unimodular",
                "the closure of the holonomy group is unimodular",
                "so the top basic cohomology is nonzero: the foliation is unimodular",
            ),
        )
    return trichotomy_verdict(p)


def trichotomy_verdict(p: FoliationProfile) -> Verdict:
    """Which space fibers over the circle when the foliation may fail to be
    unimodular; each branch reduces to Tischler's theorem for a closed
    nonsingular 1-form built from a modular function."""
    if _missing_hypotheses(p):
        return _not_met(p)
    disc = is_discrete(p.periods) if p.periods is not None else None
    if not p.g0_unimodular:
        lines = [
            _STANDING,
            "G0# is not unimodular",
            "log of its modular function composed with the developing map is a closed nonsingular 1-form on M",
            "Tischler's theorem: M fibers over S^1",
        ]
        if disc is not None:
            lines.append(_period_line(disc))
        return Verdict("ManifoldFibers", tuple(lines), disc)
    if not p.gamma_closure_unimodular and not p.gamma_identity_unimodular:
        return Verdict(
            "LeafClosuresFiber",
            (
                _STANDING,
                "G0# is unimodular; the holonomy closure and its identity component are not",
                "the modular function of the identity component gives a closed nonsingular 1-form on each leaf closure",
                "Tischler's theorem: the closure of every leaf fibers over S^1",
            ),
            disc,
        )
    if not p.gamma_closure_unimodular:
        return Verdict(
            "BlumenthalBundleFibers",
            (
                _STANDING,
                "G0# is unimodular; the holonomy closure is not, its identity component is",
                "the modular function of the holonomy closure gives a closed nonsingular 1-form on the Blumenthal bundle",
                "Tischler's theorem: the total space of the Blumenthal bundle fibers over S^1",
            ),
            disc,
        )
    # both unimodular: the unimodularity theorem applies
    return unimodularity_verdict(p)


def verdict(p: FoliationProfile) -> Verdict:
    return unimodularity_verdict(p)


def _not_met(p: FoliationProfile) -> Verdict:
    return Verdict("HypothesesNotMet", tuple(f"{n} is false" for n in _missing_hypotheses(p)))


def _period_line(d: Discreteness) -> str:
    if d.discrete:
        return f"period group discrete (Q-rank {d.rank}), generated by {d.generator_text()}"
    return f"period group dense (Q-rank {d.rank})"


# --- the hyperbolic torus bundle example -----------------------------------

# affine line algebra in the basis (H, S), [H, S] = S
_GA_STRUCTURE = (((0, 0), (0, 1)), ((0, -1), (0, 0)))


@dataclass(frozen=True)
class TorusBundleReport:
    """The Lie flow on the torus bundle of a hyperbolic ``A`` in SL(2, Z)."""

    matrix: Matrix
    trace: int
    minimal_polynomial: str
    modular_character: tuple
    modular_function: str
    profile: FoliationProfile
    periods: PeriodGroup
    verdict: Verdict


def _ga_algebra():
    return validate_algebra(_GA_STRUCTURE, ("H", "S"), "ga1")


def ga_modular_function_check(samples: Sequence[tuple] = ((0, 2), (3, Fraction(1, 2)), (-5, 7), (Fraction(2, 3), 3))) -> bool:
    """``det Ad(s, a) = a`` on rational stand-ins ``a`` for ``lambda^t``;
    det is polynomial in the entries, so this pins ``m(s, t) = lambda^t``."""
    return all(ga_ad_matrix(s, a).det() == a for s, a in samples)


def carriere_profile(a) -> TorusBundleReport:
    """Profile, periods and verdict for the flow on the torus bundle of A.

    The model group is the affine group of the line; its Lie algebra has
    modular character (1, 0), so G0# is not unimodular.  The holonomy
    ``Z^3 -> GA`` composed with log of the modular function sends
    ``(x, y, t)`` to ``t * log(lambda)``, so the periods of the generators
    are ``0, 0, log_lambda``.  Eigenvalue lambda stays symbolic; it is a
    root of ``x^2 - tr(A) x + 1``, irrational because tr(A) > 2.
    """
    m = a if isinstance(a, Matrix) else Matrix(a)
    if m.shape != (2, 2) or any(x.denominator != 1 for row in m.rows for x in row):
        raise ValidationError("expected a 2x2 integer matrix")
    if m.det() != 1:
        raise NotUnimodularMatrix(f"det A = {format_scalar(m.det())}, expected 1")
    tr = int(m.trace())
    if tr <= 2:
        raise NotHyperbolic(f"trace A = {tr}, need trace > 2")
    chi = modular_character(_ga_algebra())
    if not ga_modular_function_check():
        raise ArithmeticError("det Ad on the affine group does not reproduce the modular function")
    periods = period_group(("log_lambda",), ((0,), (0,), (1,)))
    profile = FoliationProfile(
        g0_unimodular=chi.is_unimodular,
        # declared input: the closure Z x R of the holonomy image is taken as
        # unimodular; no branch below depends on it once g0 fails
        gamma_closure_unimodular=True,
        gamma_identity_unimodular=True,
        k_compact=True,
        k_strongly_unimodular=True,
        fibers_finite_components=True,
        manifold_compact=True,
        periods=periods,
        name="carriere",
    )
    return TorusBundleReport(
        matrix=m,
        trace=tr,
        minimal_polynomial=f"x^2 - {tr}*x + 1",
        modular_character=chi.values,
        modular_function="lambda^t",
        profile=profile,
        periods=periods,
        verdict=verdict(profile),
    )
