"""Exact Chevalley-Eilenberg and relative (g, K) cohomology over Q, with
the unimodularity and fibration verdicts for transversely homogeneous
foliations."""

from .algebra import (
    LieAlgebra,
    ModularCharacter,
    ReductivePair,
    abelian,
    ad_matrix,
    find_reductive_complement,
    is_automorphism,
    lie_algebra,
    modular_character,
    trivial_pair,
    validate_algebra,
    validate_reductive_pair,
)
from .ce import (
    BettiTable,
    ChainComplex,
    CochainComplex,
    CoefficientModule,
    adjoint_module,
    betti,
    ce_differential,
    chain_complex,
    character_module,
    cochain_complex,
    dual_module,
    euler_characteristic,
    trivial_module,
    validate_module,
)
from .errors import *  # noqa: F401,F403
from .exterior import ExteriorElement, eval_top, exterior_power_matrix, wedge
from .groups import (
    FiniteGroup,
    GroupData,
    GroupElementAd,
    ad_from_conjugation,
    average_projector,
    averaged_cochains,
    cyclic_group,
    det_ad,
    det_ad_decomposition,
    ga_ad_matrix,
    group_element,
    normal_core,
    permutation_group,
    symmetric_group,
    validate_group,
)
from .linalg import Matrix
from .relative import (
    GKModule,
    adjoint_gk_module,
    character_gk_module,
    dual_gk_module,
    duality_check,
    h0_fixed_points,
    hazewinkel_twist,
    invariant_cochains,
    is_k_unimodular,
    poincare_map,
    poincare_map_check,
    relative_betti,
    relative_chain_complex,
    relative_cochain_complex,
    relative_homology_betti,
    trivial_gk_module,
    validate_gk_module,
)
from .textformat import parse, serialize
from .tischler import (
    FoliationProfile,
    PeriodGroup,
    Verdict,
    carriere_profile,
    is_discrete,
    period_group,
    q_rank,
    trichotomy_verdict,
    unimodularity_verdict,
    verdict,
)

__version__ = "0.1.0"
