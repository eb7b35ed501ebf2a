from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecohom import catalog
from liecohom.algebra import abelian, validate_reductive_pair
from liecohom.catalog import ROTATION_3_4_5, SL2_BASIS
from liecohom.errors import (
    NotAGroup,
    NotARepresentation,
    NotASubgroup,
    NotAutomorphism,
    NotBlockPreserving,
)
from liecohom.exterior import exterior_power_matrix
from liecohom.groups import (
    ad_from_conjugation,
    all_subgroups,
    average_projector,
    averaged_cochains,
    cochain_complex_of_invariants,
    conjugate,
    cyclic_group,
    det_ad,
    det_ad_decomposition,
    exterior_action,
    fixed_vectors,
    ga_ad_matrix,
    generated_subgroup,
    group_element,
    is_normal,
    is_subgroup,
    normal_core,
    permutation_group,
    permutation_representation,
    symmetric_group,
    validate_action,
    validate_group,
)
from liecohom.linalg import Matrix
from strategies import small

SL2 = catalog.get("sl2").payload
GA = catalog.get("ga1").payload
GROUPS = [e.name for e in catalog.entries("group")]
PAIRS = [e.name for e in catalog.entries("pair")]

# --- det Ad ------------------------------------------------------------------


def test_identity_det():
    d = det_ad(group_element("e", Matrix.identity(3), SL2))
    assert d.det == 1 and d.strongly_unimodular and d.unimodular


def test_ga_element_det_is_homothety_ratio():
    a, s = Fraction(5, 2), Fraction(3)
    m = ga_ad_matrix(s, a)
    assert m == Matrix([[1, 0], [-s, a]])
    # reordered to the basis (S, H): [[a, -s], [0, 1]]
    swap = Matrix([[0, 1], [1, 0]])
    assert swap @ m @ swap == Matrix([[a, -s], [0, 1]])
    d = det_ad(group_element("g", m, GA))
    assert d.det == a and d.modular_value == a and not d.unimodular


def test_negative_det_is_unimodular_not_strongly():
    d = det_ad(group_element("r", Matrix.diagonal([-1, 1])))
    assert d.unimodular and not d.strongly_unimodular and d.modular_value == 1


def test_rotation_det_and_decomposition():
    e = catalog.get("sl2").elements[0]
    assert det_ad(e, SL2).det == 1
    pair = catalog.get("sl2_so2_pair").payload
    dec = det_ad_decomposition(pair, e)
    assert (dec.det_k, dec.det_p, dec.product_ok) == (1, 1, True)


def test_diagonal_split_decomposition():
    pair = catalog.get("abelian3_split_pair").payload
    e = catalog.get("abelian3_split_pair").elements[0]
    dec = det_ad_decomposition(pair, e)
    assert (dec.det_k, dec.det_p, dec.det) == (2, 1, 2)
    assert dec.product_ok and dec.p_strongly_unimodular
    assert not det_ad(e).unimodular


def test_not_block_preserving():
    pair = validate_reductive_pair(abelian(2), [(1, 0)], [(0, 1)])
    with pytest.raises(NotBlockPreserving):
        det_ad_decomposition(pair, group_element("swap", Matrix([[0, 1], [1, 0]])))


def test_non_automorphism_rejected():
    with pytest.raises(NotAutomorphism):
        group_element("bad", Matrix.diagonal([1, 1, 2]), SL2)
    with pytest.raises(NotAutomorphism):
        group_element("singular", Matrix([[1, 1], [1, 1]]))


def test_covering_consistency():
    # g and -g in SL(2) have the same image in PSL(2): same Ad, same det
    a = ad_from_conjugation(SL2_BASIS, ROTATION_3_4_5)
    b = ad_from_conjugation(SL2_BASIS, -ROTATION_3_4_5)
    assert a == b
    assert det_ad(group_element("g", a)).det == det_ad(group_element("-g", b)).det


@st.composite
def sl2_elements(draw):
    # products of rational elementary matrices stay in SL(2, Q)
    m = Matrix.identity(2)
    for _ in range(draw(st.integers(0, 4))):
        t = draw(small)
        m = m @ (Matrix([[1, t], [0, 1]]) if draw(st.booleans()) else Matrix([[1, 0], [t, 1]]))
    return m


@given(sl2_elements(), sl2_elements())
def test_ad_homomorphism_and_det_multiplicative(g, h):
    ag, ah = ad_from_conjugation(SL2_BASIS, g), ad_from_conjugation(SL2_BASIS, h)
    agh = ad_from_conjugation(SL2_BASIS, g @ h)
    assert agh == ag @ ah
    assert det_ad(group_element("gh", agh, SL2)).det == det_ad(group_element("g", ag)).det * det_ad(group_element("h", ah)).det
    assert agh.det() == 1


@given(small, small.filter(lambda x: x != 0), small, small.filter(lambda x: x != 0))
def test_ga_det_multiplicative(s1, a1, s2, a2):
    m1, m2 = ga_ad_matrix(s1, a1), ga_ad_matrix(s2, a2)
    assert (m1 @ m2).det() == a1 * a2


@pytest.mark.parametrize("name", PAIRS)
def test_det_ad_splits_over_k_and_p(name):
    entry = catalog.get(name)
    pair = entry.payload
    for m in pair.generators:
        assert det_ad_decomposition(pair, group_element("gen", m)).product_ok
    for e in entry.elements:
        assert det_ad_decomposition(pair, e).product_ok


# --- finite groups -------------------------------------------------------------


def test_validate_group_errors():
    with pytest.raises(NotAGroup):
        validate_group([[0, 1], [1, 1]])
    with pytest.raises(NotAGroup):
        validate_group([])
    with pytest.raises(NotAGroup):
        validate_group([[0, 2], [1, 0]])


def test_subgroup_counts():
    assert len(all_subgroups(symmetric_group(3))) == 6
    assert len(all_subgroups(symmetric_group(4))) == 30
    assert len(all_subgroups(cyclic_group(6))) == 4


def test_core_examples():
    z6 = cyclic_group(6)
    assert normal_core(z6, (0, 3)) == (0, 3)
    s3 = catalog.get("s3_table").payload
    assert normal_core(s3.group, s3.subgroup) == (s3.group.identity,)
    s4 = catalog.get("s4_table").payload
    core = normal_core(s4.group, s4.subgroup)
    assert len(core) == 4
    assert sorted(s4.group.label(x) for x in core) == ["1234", "2143", "3412", "4321"]


def test_core_requires_subgroup():
    s3 = symmetric_group(3)
    with pytest.raises(NotASubgroup):
        normal_core(s3, (0, 1, 2))
    assert not is_subgroup(s3, (1,))


def _check_core(g, k):
    core = normal_core(g, k)
    assert set(core) <= set(k)
    assert is_normal(g, core)
    for h in all_subgroups(g):
        if set(h) <= set(k) and is_normal(g, h):
            assert set(h) <= set(core)


@pytest.mark.parametrize("g", [symmetric_group(3), symmetric_group(4), cyclic_group(4), permutation_group([(1, 2, 3, 0), (2, 1, 0, 3)])], ids=["S3", "S4", "Z4", "D8"])
def test_core_is_largest_normal_subgroup_inside(g):
    for k in all_subgroups(g):
        _check_core(g, k)


@st.composite
def permutation_groups(draw):
    d = draw(st.integers(2, 4))
    gens = draw(st.lists(st.permutations(range(d)), min_size=1, max_size=2))
    return permutation_group(gens)


@given(permutation_groups(), st.data())
def test_core_property_random_groups(g, data):
    subs = all_subgroups(g)
    k = data.draw(st.sampled_from(subs))
    _check_core(g, k)
    x = data.draw(st.integers(0, g.order - 1))
    assert len(conjugate(g, x, k)) == len(k)


def test_generated_subgroup():
    s4 = symmetric_group(4)
    d8 = generated_subgroup(s4, [s4.labels.index("2341"), s4.labels.index("3214")])
    assert len(d8) == 8


# --- averaging -------------------------------------------------------------------


def test_trivial_group_projector():
    g = cyclic_group(1)
    assert average_projector(g, [Matrix.identity(3)]) == Matrix.identity(3)


def test_sign_projector_is_zero():
    z2 = catalog.get("z2_sign").payload
    p = average_projector(z2.group, z2.action)
    assert p == Matrix([[0]])
    assert fixed_vectors(list(z2.action)) == []


def test_rotation_on_top_power():
    z4 = catalog.get("z4_rotation").payload
    assert average_projector(z4.group, exterior_action(z4.action, 2)) == Matrix.identity(1)
    assert average_projector(z4.group, z4.action) == Matrix.zeros(2, 2)


def test_bad_action_rejected():
    z2 = cyclic_group(2)
    with pytest.raises(NotARepresentation):
        validate_action(z2, [Matrix.identity(1), Matrix([[2]])])
    with pytest.raises(NotARepresentation):
        validate_action(z2, [Matrix.identity(1)])


@pytest.mark.parametrize("name", GROUPS)
def test_averaging_on_catalog_actions(name):
    data = catalog.get(name).payload
    n = data.action[0].nrows
    for r in range(n + 1):
        mats = exterior_action(data.action, r)
        p = average_projector(data.group, mats)
        assert p @ p == p
        for v in fixed_vectors(list(mats)):
            assert p @ v == tuple(v)
        for m in mats:
            assert m @ p == p
    rep = averaged_cochains(data.algebra, data.group, data.action)
    assert rep.ok
    assert cochain_complex_of_invariants(data.algebra, data.group, data.action).is_complex()


@given(permutation_groups())
def test_projector_properties_random(g):
    mats = permutation_representation(g)
    n = mats[0].nrows
    for r in range(n + 1):
        lam = exterior_action(mats, r)
        p = average_projector(g, lam)
        assert p @ p == p
        assert p.rank() == len(fixed_vectors(list(lam)))
        for m in lam:
            assert m @ p == p == p @ m


def test_sl2_rotation_group_averaging_injective():
    # the order-4 rotation subgroup of SO(2) acting on sl2 by Ad
    r = Matrix([[0, -1], [1, 0]])
    mats = [ad_from_conjugation(SL2_BASIS, r ** k) for k in range(4)]
    rep = averaged_cochains(SL2, cyclic_group(4), mats)
    assert rep.ok
    assert rep.full_betti == (1, 0, 0, 1)
    assert rep.invariant_betti == (1, 0, 0, 1)


def test_exterior_action_matches_compound():
    z4 = catalog.get("z4_rotation").payload
    assert exterior_action(z4.action, 2)[1] == exterior_power_matrix(z4.action[1], 2)
