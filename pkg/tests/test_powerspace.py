import random

import pytest
from hypothesis import given, settings

from sobertool.errors import InputError, PreconditionError
from sobertool.finite import (classify, discrete, find_homeomorphism, is_embedding, is_sober, point_closures,
                              random_space, sierpinski)
from sobertool.order import FinitePoset, subsets
from sobertool.finite import topology_from_poset
from sobertool.powerspace import (box, box_determinacy, closure_identity_check, closure_identity_terms, coincidence_check, families,
                                  hoare_space, reflection_families, smyth_space, sobrification)

from conftest import spaces


def test_two_point_discrete_hoare_space():
    res = hoare_space(discrete(["a", "b"]), families(discrete(["a", "b"]))["all_closed"])
    assert len(res.space) == 3
    assert classify(res.space).sober
    assert is_embedding(res.eta)


@given(spaces(max_size=4))
@settings(max_examples=30, deadline=None)
def test_hoare_space_is_sober(X):
    H = hoare_space(X).space
    assert is_sober(H)[0]
    assert len(H) == len(X.closed_sets) - 1


@given(spaces(max_size=5))
@settings(max_examples=30, deadline=None)
def test_sobrification_of_a_finite_space_is_itself(X):
    res = sobrification(X)
    h = find_homeomorphism(X, res.space)
    assert h is not None
    assert all(res.eta(x) == res.point(X.point_closure(x)) for x in X.points)


def test_smyth_space_points_are_saturated_sets():
    res = smyth_space(sierpinski())
    assert len(res.space) == 2
    assert classify(res.space).sober


def test_hoare_space_input_checks():
    X = sierpinski()
    with pytest.raises(InputError):
        hoare_space(X, [])
    with pytest.raises(InputError, match="not closed"):
        hoare_space(X, [{"1"}])
    with pytest.raises(InputError):
        hoare_space(X, [set()])
    assert hoare_space(X, [{"0", "1"}]).eta is None


def test_box_is_membership_by_inclusion():
    fam = [frozenset({"a"}), frozenset({"a", "b"})]
    assert box(fam, {"a"}) == {frozenset({"a"})}


@given(spaces(max_size=5))
@settings(max_examples=25, deadline=None)
def test_closure_identity_over_both_families(X):
    fams = families(X)
    P = X.specialization()
    for name in ("irreducible", "point_closures"):
        for A in subsets(X.points):
            terms = closure_identity_terms(X, fams[name], A)
            assert terms["closure_of_image"] == terms["closure_of_image_of_closure"] == terms["box_of_closure"]
            assert terms["closure_of_box"] <= terms["box_of_closure"]
            if P.down_set(A) == A:
                assert closure_identity_check(X, fams[name], A)


def test_box_term_can_fall_short_off_lower_sets():
    # p0 < p1 and an isolated p2: no member of the family fits inside {p1, p2} except {p2}
    X = topology_from_poset(FinitePoset(["p0", "p1", "p2"], [("p0", "p1")]), "alexandroff")
    terms = closure_identity_terms(X, point_closures(X), {"p1", "p2"})
    assert terms["closure_of_box"] == frozenset({"{p2}"})
    assert len(terms["box_of_closure"]) == 3
    assert not closure_identity_check(X, point_closures(X), {"p1", "p2"})


def test_closure_identity_needs_a_sandwiched_family():
    X = discrete(["a", "b"])
    with pytest.raises(PreconditionError):
        closure_identity_check(X, [{"a"}], {"a"})
    with pytest.raises(PreconditionError):
        closure_identity_check(X, [{"a"}, {"b"}, {"a", "b"}], {"a"})


@given(spaces(max_size=4))
@settings(max_examples=25, deadline=None)
def test_boxes_determine_closed_sets(X):
    fam = point_closures(X)
    for A in X.closed_sets:
        for B in X.closed_sets:
            assert box_determinacy(X, fam, A, B)


def test_box_determinacy_preconditions():
    X = sierpinski()
    with pytest.raises(PreconditionError):
        box_determinacy(X, [{"0"}], {"0"}, {"0"})
    with pytest.raises(PreconditionError):
        box_determinacy(X, point_closures(X), {"1"}, {"0"})


def test_reflection_families_collapse_on_finite_spaces():
    rng = random.Random(3)
    for _ in range(20):
        X = random_space(rng.randint(2, 5), rng)
        fams = reflection_families(X)
        assert fams["well_filtered"] == fams["sober"] == fams["d"]
        assert coincidence_check(X) == {"families_determined": True, "well_filtered": True, "d": True}
