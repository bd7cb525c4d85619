import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sobertool.errors import InputError
from sobertool.finite import ClassificationReport
from sobertool.gallery import (BOT, GALLERY_NAMES, TOP1, TOP2, TOP_N, Closed, N, Pt, make_gallery_space)
from sobertool.gallery.classify import (check_chain_closures, check_irreducible_extras, classify_symbolic,
                                        point_closure_problems, smallest_member_check)
from sobertool.gallery.sampling import MIN_CUTOFF, consistency_sample

EXPECTED = {
    "L_top": dict(cut_space=False, weakly_sober=False, quasisober=False, dc=True, rudin=True, wd="yes",
                  d_space=False, well_filtered=False),
    "cofinite_nat": dict(weakly_sober=True, quasisober=False, dc=False, rudin=True, well_filtered=False, t1=True),
    "johnstone_scott": dict(cut_space=True, weakly_sober=True, quasisober=False, dc=False, rudin=True,
                            well_filtered=False, d_space=True),
    "cocountable": dict(weakly_sober=True, quasisober=False, well_filtered=True, wd="no", rudin=False, dc=False),
}
WITNESS_SPACES = ("N_two_tops", "Y_upper", "nat_scott", "Y2_upper")


@pytest.fixture(scope="module")
def reports():
    return {name: classify_symbolic(make_gallery_space(name)) for name in GALLERY_NAMES}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_counterexample_classification(reports, name):
    r = reports[name]
    assert {k: getattr(r, k) for k in EXPECTED[name]} == EXPECTED[name]


@pytest.mark.parametrize("name", WITNESS_SPACES)
def test_witness_spaces_are_in_the_target_classes(reports, name):
    r = reports[name]
    assert r.dc and r.rudin and r.quasisober and r.weakly_sober and r.cut_space and r.wd == "yes"
    assert r.sober is False


@pytest.mark.parametrize("name", GALLERY_NAMES)
def test_reports_respect_implications(reports, name):
    assert reports[name].implication_violations() == []
    assert set(reports[name].provenance) >= set(ClassificationReport.FLAGS)


def test_undetermined_flags_are_reported_as_such(reports):
    r = reports["noetherian_antichain"]
    assert r.well_filtered is None and r.rudin is None and r.wd == "undetermined"
    assert r.provenance["rudin"] == "not stated"


@pytest.mark.parametrize("name", GALLERY_NAMES)
def test_inventories_are_sound(name):
    O = make_gallery_space(name)
    assert check_irreducible_extras(O, 8) == []
    assert point_closure_problems(O, 8) == []
    assert check_chain_closures(O, 8) == []


@pytest.mark.parametrize("name", GALLERY_NAMES)
@pytest.mark.parametrize("cutoff", [MIN_CUTOFF, 8, 16])
def test_truncations_agree_with_the_oracle(name, cutoff):
    sample = consistency_sample(make_gallery_space(name), cutoff)
    assert sample["ok"], sample["disagreements"]
    assert all(row["lower_set"] for row in sample["irreducible_restrictions"])
    assert all(row["directed"] for row in sample["chains"])


def test_small_truncations_cannot_see_limit_properties():
    sample = consistency_sample(make_gallery_space("L_top"), 8)
    flags = {row["flag"] for row in sample["limit_only_properties"]}
    # every finite model is sober, so the failures of sobriety-like flags live only in the limit
    assert {"sober", "cut_space"} <= flags


def test_cutoff_below_minimum_is_rejected():
    with pytest.raises(InputError):
        consistency_sample(make_gallery_space("L_top"), MIN_CUTOFF - 1)


def test_descriptors_outside_the_grammar_are_rejected():
    L = make_gallery_space("L_top")
    with pytest.raises(InputError, match="outside the closed grammar"):
        L.check(Closed("L_top", "chain", frozenset({TOP_N}), 3))
    with pytest.raises(InputError):
        L.check(make_gallery_space("nat_scott").all)
    with pytest.raises(InputError):
        make_gallery_space("no_such_space")


def test_chain_space_facts():
    L = make_gallery_space("L_top")
    assert L.greatest_in(L.all) == TOP_N
    assert L.greatest_in(L.nat()) is None
    assert L.cut_closure(L.nat()) == L.all
    assert L.closure_point(N(3)) == L._mk(3)
    assert L.complement_of_top() == L.nat()
    W = make_gallery_space("N_two_tops")
    assert W.cut_closure(W.nat()) == W.nat()
    assert W.greatest_in(W.all) is None
    assert not W.leq(TOP1, TOP2)


def test_mutated_chain_space_loses_the_naturals():
    L = make_gallery_space("L_top", nat_closed=False)
    with pytest.raises(InputError):
        L.check(L.nat())


def test_discrete_space_facts():
    C = make_gallery_space("cofinite_nat")
    a = C.fin({Pt("x", 1), Pt("x", 2)})
    b = C.fin({Pt("x", 2), Pt("x", 5)})
    assert C.intersect(a, b) == C.closure_point(Pt("x", 2))
    assert C.contains(C.union(a, b), Pt("x", 5))
    assert C.greatest_in(C.all) is None
    assert C.cut_closure(C.closure_point(Pt("x", 4))) == C.closure_point(Pt("x", 4))
    assert C.cut_closure(a) == C.all


def test_upper_space_facts():
    Y = make_gallery_space("Y_upper")
    chain = Y.chains()[0]
    assert Y.chain_closure(chain, None) == Y.all
    assert Y.lower_bounds(Y.chain_upper_bounds(chain, None)) == Y.all


def test_johnstone_facts():
    J = make_gallery_space("johnstone_scott")
    assert J.leq(Pt("p", 2, 5), Pt("w", 5))
    assert not J.leq(Pt("p", 2, 5), Pt("w", 4))
    assert J.leq(Pt("w", 3), Pt("w", 3))
    assert J.greatest_in(J.all) is None
    assert J.cut_closure(J.all) == J.all


def test_noetherian_bottom():
    A = make_gallery_space("noetherian_antichain")
    assert A.greatest_in(A.closure_point(BOT)) == BOT


def test_filtered_families_of_finite_sets_have_a_least_member():
    assert smallest_member_check()["ok"]


@pytest.mark.parametrize("name", GALLERY_NAMES)
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_descriptor_algebra_is_a_lattice(name, data):
    O = make_gallery_space(name)
    pool = list(O.sample_descriptors(6))
    a, b, c = (data.draw(st.sampled_from(pool)) for _ in range(3))
    assert O.union(a, b) == O.union(b, a)
    assert O.intersect(a, b) == O.intersect(b, a)
    assert O.union(a, O.intersect(a, b)) == a
    assert O.intersect(a, O.union(a, b)) == a
    assert O.union(O.union(a, b), c) == O.union(a, O.union(b, c))
    for p in O.points_upto(6):
        assert O.contains(O.union(a, b), p) == (O.contains(a, p) or O.contains(b, p))
        assert O.contains(O.intersect(a, b), p) == (O.contains(a, p) and O.contains(b, p))


@pytest.mark.parametrize("name", GALLERY_NAMES)
def test_metadata_is_serializable(name):
    import json
    meta = make_gallery_space(name).metadata()
    assert json.loads(json.dumps(meta))["name"] == name
