"""Named worked examples with their expected results.

Each entry carries a validated payload and a table of expected values
tagged by where they come from: ``PAPER`` (stated in the source
material), ``DERIVED`` (computed by an independent oracle or by hand) or
``TRIVIAL`` (forced by the definitions).  :func:`reproduce` recomputes
every expected key, so the catalog doubles as the regression fixture set.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (
    LieAlgebra,
    ReductivePair,
    abelian,
    lie_algebra,
    modular_character,
    validate_reductive_pair,
)
from .ce import betti
from .errors import UnknownName
from .groups import (
    GroupData,
    GroupElementAd,
    ad_from_conjugation,
    average_projector,
    averaged_cochains,
    cyclic_group,
    det_ad,
    det_ad_decomposition,
    ga_ad_matrix,
    generated_subgroup,
    group_data,
    group_element,
    normal_core,
    permutation_representation,
    symmetric_group,
)
from .linalg import Matrix
from .relative import (
    GKModule,
    adjoint_gk_module,
    dual_gk_module,
    h0_fixed_points,
    hazewinkel_twist,
    is_k_unimodular,
    relative_betti,
    relative_homology_betti,
    trivial_gk_module,
)
from .tischler import FoliationProfile, carriere_profile, is_discrete, q_rank, verdict

PAPER, DERIVED, TRIVIAL = "PAPER", "DERIVED", "TRIVIAL"


@dataclass(frozen=True)
class Expected:
    value: object
    provenance: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # algebra | pair | group | profile
    payload: object
    expected: dict = field(default_factory=dict, compare=False)
    elements: tuple = ()  # GroupElementAd on the algebra (algebras and pairs)


# --- algebras ----------------------------------------------------------------

SL2_BASIS = (Matrix([[1, 0], [0, -1]]), Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]]))
ROTATION_3_4_5 = Matrix([[Fraction(3, 5), Fraction(-4, 5)], [Fraction(4, 5), Fraction(3, 5)]])


def _sl2() -> LieAlgebra:
    return lie_algebra("sl2", ["X", "Y", "Z"], {("X", "Y"): {"Y": 2}, ("X", "Z"): {"Z": -2}, ("Y", "Z"): {"X": 1}})


def _heisenberg() -> LieAlgebra:
    return lie_algebra("heisenberg3", ["P", "Q", "Z"], {("P", "Q"): {"Z": 1}})


def _ga1() -> LieAlgebra:
    return lie_algebra("ga1", ["H", "S"], {("H", "S"): {"S": 1}})


def _su2() -> LieAlgebra:
    return lie_algebra("su2", ["I", "J", "K"], {("I", "J"): {"K": 1}, ("J", "K"): {"I": 1}, ("K", "I"): {"J": 1}})


def _abelian(n: int) -> LieAlgebra:
    return abelian(n, name=f"abelian{n}")


def _sl2_rotation() -> GroupElementAd:
    return group_element("rotation_3_4_5", ad_from_conjugation(SL2_BASIS, ROTATION_3_4_5), _sl2())


# --- builders ------------------------------------------------------------------


def _algebra_entries() -> list[CatalogEntry]:
    out = []
    for n in range(1, 5):
        out.append(
            CatalogEntry(
                f"abelian{n}",
                "algebra",
                _abelian(n),
                {"betti": Expected(tuple(comb(n, r) for r in range(n + 1)), TRIVIAL), "character": Expected((0,) * n, TRIVIAL)},
            )
        )
    out.append(
        CatalogEntry(
            "heisenberg3",
            "algebra",
            _heisenberg(),
            {"betti": Expected((1, 2, 2, 1), DERIVED), "character": Expected((0, 0, 0), DERIVED)},
        )
    )
    out.append(
        CatalogEntry(
            "sl2",
            "algebra",
            _sl2(),
            {"betti": Expected((1, 0, 0, 1), DERIVED), "character": Expected((0, 0, 0), PAPER), "det_ad": Expected((1,), DERIVED)},
            (_sl2_rotation(),),
        )
    )
    ga_elem = group_element("s3_a5/2", ga_ad_matrix(3, Fraction(5, 2)), _ga1())
    out.append(
        CatalogEntry(
            "ga1",
            "algebra",
            _ga1(),
            {"betti": Expected((1, 1, 0), DERIVED), "character": Expected((1, 0), DERIVED), "det_ad": Expected((Fraction(5, 2),), PAPER)},
            (ga_elem,),
        )
    )
    out.append(
        CatalogEntry(
            "su2",
            "algebra",
            _su2(),
            {"betti": Expected((1, 0, 0, 1), DERIVED), "character": Expected((0, 0, 0), DERIVED)},
        )
    )
    return out


def _pair_entries() -> list[CatalogEntry]:
    sl2 = _sl2()
    pairs = []
    pairs.append(
        CatalogEntry(
            "sl2_so2_pair",
            "pair",
            validate_reductive_pair(sl2, [(0, 1, -1)], [(1, 0, 0), (0, 1, 1)], (), "sl2_so2_pair"),
            {
                "relative_betti": Expected((1, 0, 1), DERIVED),
                "homology_betti": Expected((1, 0, 1), DERIVED),
                "h0_dual_twist": Expected(1, DERIVED),
                "decompose": Expected(((1, 1, 1),), DERIVED),
            },
            (_sl2_rotation(),),
        )
    )
    ga1 = _ga1()
    pairs.append(
        CatalogEntry(
            "ga1_trivial_pair",
            "pair",
            validate_reductive_pair(ga1, [], [(1, 0), (0, 1)], (), "ga1_trivial_pair"),
            {
                "relative_betti": Expected((1, 1, 0), DERIVED),
                "homology_betti": Expected((1, 1, 0), DERIVED),
                "h0_dual_twist": Expected(0, DERIVED),
                "decompose": Expected(((1, Fraction(5, 2), Fraction(5, 2)),), DERIVED),
            },
            (group_element("s3_a5/2", ga_ad_matrix(3, Fraction(5, 2)), ga1),),
        )
    )
    pairs.append(
        CatalogEntry(
            "su2_u1_pair",
            "pair",
            validate_reductive_pair(_su2(), [(0, 0, 1)], [(1, 0, 0), (0, 1, 0)], (), "su2_u1_pair"),
            {"relative_betti": Expected((1, 0, 1), DERIVED), "h0_dual_twist": Expected(1, DERIVED)},
        )
    )
    pairs.append(
        CatalogEntry(
            "heisenberg_center_pair",
            "pair",
            validate_reductive_pair(_heisenberg(), [(0, 0, 1)], [(1, 0, 0), (0, 1, 0)], (), "heisenberg_center_pair"),
            {"relative_betti": Expected((1, 2, 1), DERIVED), "h0_dual_twist": Expected(1, DERIVED)},
        )
    )
    reflection = Matrix.diagonal([-1, 1])
    pairs.append(
        CatalogEntry(
            "abelian2_reflection_pair",
            "pair",
            validate_reductive_pair(_abelian(2), [], [(1, 0), (0, 1)], (reflection,), "abelian2_reflection_pair"),
            {
                "relative_betti": Expected((1, 1, 0), DERIVED),
                "h0_dual_twist": Expected(0, DERIVED),
                "decompose": Expected(((1, -1, -1),), TRIVIAL),
            },
            (group_element("reflection", reflection, _abelian(2)),),
        )
    )
    scaling = Matrix.diagonal([2, 3, Fraction(1, 3)])
    a3 = _abelian(3)
    pairs.append(
        CatalogEntry(
            "abelian3_split_pair",
            "pair",
            validate_reductive_pair(a3, [(1, 0, 0)], [(0, 1, 0), (0, 0, 1)], (), "abelian3_split_pair"),
            {"relative_betti": Expected((1, 2, 1), TRIVIAL), "decompose": Expected(((2, 1, 2),), TRIVIAL)},
            (group_element("diag_2_3_1/3", scaling, a3),),
        )
    )
    return pairs


def _group_entries() -> list[CatalogEntry]:
    s3 = symmetric_group(3, "s3_table")
    sub3 = generated_subgroup(s3, [s3.labels.index("213")])
    s4 = symmetric_group(4, "s4_table")
    d8 = generated_subgroup(s4, [s4.labels.index("2341"), s4.labels.index("3214")])
    z2 = cyclic_group(2, "z2_sign")
    z4 = cyclic_group(4, "z4_rotation")
    rot = Matrix([[0, -1], [1, 0]])
    return [
        CatalogEntry(
            "s3_table",
            "group",
            group_data(s3, sub3, permutation_representation(s3), _abelian(3)),
            {"core_order": Expected(1, DERIVED), "invariant_betti": Expected((1, 1, 0, 0), DERIVED)},
        ),
        CatalogEntry(
            "s4_table",
            "group",
            group_data(s4, d8, permutation_representation(s4), _abelian(4)),
            {"core_order": Expected(4, DERIVED), "invariant_betti": Expected((1, 1, 0, 0, 0), DERIVED)},
        ),
        CatalogEntry(
            "z2_sign",
            "group",
            group_data(z2, (0, 1), (Matrix.identity(1), Matrix([[-1]])), _abelian(1)),
            {"core_order": Expected(2, TRIVIAL), "projector_rank": Expected(0, TRIVIAL), "invariant_betti": Expected((1, 0), TRIVIAL)},
        ),
        CatalogEntry(
            "z4_rotation",
            "group",
            group_data(z4, (0, 2), tuple(rot ** k for k in range(4)), _abelian(2)),
            {"core_order": Expected(2, TRIVIAL), "projector_rank": Expected(0, DERIVED), "invariant_betti": Expected((1, 0, 1), DERIVED)},
        ),
    ]


def _profile(name: str, g0: bool, closure: bool, identity: bool, **over) -> FoliationProfile:
    flags = dict(k_compact=True, k_strongly_unimodular=True, fibers_finite_components=True, manifold_compact=True)
    flags.update(over)
    return FoliationProfile(g0, closure, identity, name=name, **flags)


def _profile_entries() -> list[CatalogEntry]:
    report = carriere_profile([[2, 1], [1, 1]])
    carriere = replace(report.profile, name="carriere_default")
    return [
        CatalogEntry(
            "carriere_default",
            "profile",
            carriere,
            {
                "verdict": Expected("ManifoldFibers", PAPER),
                "q_rank": Expected(1, PAPER),
                "period_generator": Expected((1,), PAPER),
                "g0_unimodular": Expected(False, DERIVED),
            },
        ),
        CatalogEntry("sl2_example", "profile", _profile("sl2_example", True, True, True), {"verdict": Expected("FoliationUnimodular", PAPER)}),
        CatalogEntry(
            "leaf_closures_example",
            "profile",
            _profile("leaf_closures_example", True, False, False),
            {"verdict": Expected("LeafClosuresFiber", PAPER)},
        ),
        CatalogEntry(
            "blumenthal_example",
            "profile",
            _profile("blumenthal_example", True, False, True),
            {"verdict": Expected("BlumenthalBundleFibers", PAPER)},
        ),
        CatalogEntry(
            "noncompact_example",
            "profile",
            _profile("noncompact_example", True, True, True, manifold_compact=False),
            {"verdict": Expected("HypothesesNotMet", TRIVIAL)},
        ),
    ]


@lru_cache(maxsize=None)
def _entries() -> dict:
    out = {}
    for e in _algebra_entries() + _pair_entries() + _group_entries() + _profile_entries():
        out[e.name] = e
    return out


def names() -> list[str]:
    return list(_entries())


def get(name: str) -> CatalogEntry:
    try:
        return _entries()[name]
    except KeyError:
        raise UnknownName(f"no catalog entry named {name!r}") from None


def entries(kind: str | None = None) -> list[CatalogEntry]:
    return [e for e in _entries().values() if kind is None or e.kind == kind]


def modules_for(pair: ReductivePair) -> dict[str, GKModule]:
    """Standard coefficient modules: trivial, adjoint, coadjoint and, when
    k is unimodular, the twist of R and its dual."""
    triv = trivial_gk_module(pair)
    adj = adjoint_gk_module(pair)
    out = {"trivial": triv, "adjoint": adj, "coadjoint": dual_gk_module(adj)}
    if not is_k_unimodular(pair):
        return out
    tw = hazewinkel_twist(pair, triv)
    out["twist"] = tw
    out["dual-twist"] = dual_gk_module(tw)
    return out


def reproduce(entry: CatalogEntry) -> dict:
    """Recompute each expected key of ``entry``."""
    p = entry.payload
    got = {}
    for key in entry.expected:
        if key == "betti":
            got[key] = betti(p).numbers
        elif key == "character":
            got[key] = modular_character(p).values
        elif key == "det_ad":
            got[key] = tuple(det_ad(e, p).det for e in entry.elements)
        elif key == "relative_betti":
            got[key] = relative_betti(p).numbers
        elif key == "homology_betti":
            got[key] = relative_homology_betti(p, trivial_gk_module(p)).numbers
        elif key == "h0_dual_twist":
            got[key] = h0_fixed_points(p, modules_for(p)["dual-twist"])[0]
        elif key == "decompose":
            out = []
            for e in entry.elements:
                d = det_ad_decomposition(p, e)
                out.append((d.det_k, d.det_p, d.det))
            got[key] = tuple(out)
        elif key == "core_order":
            got[key] = len(normal_core(p.group, p.subgroup))
        elif key == "projector_rank":
            got[key] = average_projector(p.group, p.action).rank()
        elif key == "invariant_betti":
            got[key] = averaged_cochains(p.algebra, p.group, p.action).invariant_betti
        elif key == "verdict":
            got[key] = verdict(p).kind
        elif key == "q_rank":
            got[key] = q_rank(p.periods)
        elif key == "period_generator":
            got[key] = is_discrete(p.periods).generator
        elif key == "g0_unimodular":
            got[key] = p.g0_unimodular
        else:
            raise KeyError(key)
    return got
