import pytest
from hypothesis import given, settings

from sobertool.errors import InputError, SizeError
from sobertool.finite import (ClassificationReport, FiniteSpace, SpaceMap, all_t0_spaces, check_continuous,
                              classify, compact_saturated, directed_closures, discrete, find_homeomorphism,
                              identity_map, irreducible_closed, is_compact, is_embedding, point_closures,
                              rudin_machinery, rudin_sets, sierpinski, topology_from_poset)
from sobertool.order import FinitePoset, antichain, chain

from conftest import spaces


def test_sierpinski_is_in_every_class():
    report = classify(sierpinski())
    assert all(getattr(report, f) for f in ClassificationReport.FLAGS if f != "t1")
    assert report.t1 is False
    assert report.wd == "yes"


def test_non_t0_family_is_rejected():
    with pytest.raises(InputError, match="T0"):
        FiniteSpace(["a", "b"], [[], ["a", "b"]])


def test_family_must_be_a_lattice():
    with pytest.raises(InputError, match="union"):
        FiniteSpace(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])
    with pytest.raises(InputError):
        FiniteSpace(["a"], [["a"]])
    with pytest.raises(InputError, match="unknown point"):
        FiniteSpace(["a"], [[], ["a"], ["z"]])


def test_specialization_follows_closures():
    P = sierpinski().specialization()
    assert P.le("0", "1") and not P.le("1", "0")


def test_finite_scott_topology_is_alexandroff():
    P = FinitePoset(["b", "x", "y", "t"], [("b", "x"), ("b", "y"), ("x", "t"), ("y", "t")])
    alex = topology_from_poset(P, "alexandroff")
    assert topology_from_poset(P, "scott").same_topology(alex)
    assert topology_from_poset(P, "weak_scott").same_topology(alex)


def test_upper_topology_of_an_antichain_is_cofinite():
    X = topology_from_poset(antichain(["a", "b", "c"]), "upper")
    assert len(X.closed_sets) == 8
    with pytest.raises(InputError):
        topology_from_poset(chain(2), "lower")


def test_exhaustive_collapse_up_to_four_points():
    count = 0
    for n in range(1, 5):
        for X in all_t0_spaces(n):
            count += 1
            r = classify(X)
            assert r.sober and r.dc and r.rudin and r.well_filtered and r.quasisober
            assert set(irreducible_closed(X)) == set(point_closures(X)) == set(directed_closures(X))
    assert count == 1 + 3 + 19 + 219


@given(spaces(max_size=6))
@settings(max_examples=40, deadline=None)
def test_finite_spaces_satisfy_every_implication(X):
    r = classify(X)
    assert r.implication_violations() == []
    pcs, dcs = set(point_closures(X)), set(directed_closures(X))
    rd, irr = set(rudin_sets(X)), set(irreducible_closed(X))
    assert pcs <= dcs <= rd <= irr


def test_rudin_machinery_rejects_bad_families():
    X = discrete(["a", "b"])
    with pytest.raises(InputError):
        rudin_machinery(X, [])
    with pytest.raises(InputError, match="filtered"):
        rudin_machinery(X, [{"a"}, {"b"}])
    M, m = rudin_machinery(X, [{"a", "b"}])
    assert set(m) == {frozenset({"a"}), frozenset({"b"})}


def test_compactness_by_covers():
    X = sierpinski()
    assert all(is_compact(X, K) for K in compact_saturated(X))
    assert compact_saturated(X) == [frozenset({"1"}), frozenset({"0", "1"})]


def test_homeomorphism_search_and_embeddings():
    X = sierpinski()
    Y = X.relabel({"0": "low", "1": "high"})
    h = find_homeomorphism(X, Y)
    assert h is not None and h("0") == "low"
    assert find_homeomorphism(X, discrete(["a", "b"])) is None
    assert is_embedding(identity_map(X))
    collapse = SpaceMap(discrete(["a", "b"]), X, {"a": "0", "b": "1"})
    assert check_continuous(collapse) and not is_embedding(collapse)
    with pytest.raises(InputError, match="total"):
        check_continuous(SpaceMap(X, X, {"0": "0"}))


def test_homeomorphism_search_is_capped():
    X = topology_from_poset(chain(9), "alexandroff")
    with pytest.raises(SizeError):
        find_homeomorphism(X, X)


def test_json_round_trip():
    X = topology_from_poset(antichain(["a", "b"]), "upper")
    assert FiniteSpace.from_json(X.to_json()).same_topology(X)
    with pytest.raises(InputError):
        FiniteSpace.from_json({"points": ["a"]})
