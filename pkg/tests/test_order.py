import pytest
from hypothesis import given, settings

from sobertool.errors import InputError, SizeError
from sobertool.order import (FinitePoset, antichain, bounds, chain, cut_closure, dedekind_macneille,
                             is_cut, is_directed, is_lattice, order_isomorphism, subsets)

from conftest import posets


@given(posets())
@settings(max_examples=60, deadline=None)
def test_cut_closure_is_a_closure_operator(P):
    sets = list(subsets(P.elements))
    for A in sets:
        c = cut_closure(P, A)
        assert A <= c
        assert cut_closure(P, c) == c
    for A in sets[:24]:
        for B in sets[:24]:
            if A <= B:
                assert cut_closure(P, A) <= cut_closure(P, B)


@given(posets())
@settings(max_examples=60, deadline=None)
def test_cut_of_a_point_is_its_down_set(P):
    for x in P.elements:
        assert cut_closure(P, {x}) == P.down(x)


def test_empty_set_closure_is_the_bottom_or_empty():
    assert cut_closure(chain(3), set()) == frozenset({"0"})
    assert cut_closure(antichain(["a", "b"]), set()) == frozenset()


def test_cut_closure_of_an_antichain_is_everything():
    P = antichain(["a", "b", "c"])
    assert cut_closure(P, {"a", "b"}) == frozenset(P.elements)
    assert bounds(P, {"a", "b"}).upper == frozenset()


def test_cut_detection():
    P = chain(4)
    assert is_cut(P, {"0", "1"})
    assert not is_cut(P, {"1"})


@given(posets(max_size=5))
@settings(max_examples=40, deadline=None)
def test_completion_is_a_lattice_with_an_order_embedding(P):
    comp = dedekind_macneille(P)
    assert is_lattice(comp.lattice)
    e = comp.embedding
    for a in P.elements:
        for b in P.elements:
            assert P.le(a, b) == comp.lattice.le(e[a], e[b])


def test_completion_sizes():
    assert len(dedekind_macneille(chain(4)).lattice) == 4
    assert len(dedekind_macneille(antichain(["a", "b", "c"])).lattice) == 5


def test_completion_of_a_lattice_is_isomorphic_to_it():
    P = FinitePoset(["b", "x", "y", "t"], [("b", "x"), ("b", "y"), ("x", "t"), ("y", "t")])
    assert order_isomorphism(P, dedekind_macneille(P).lattice) is not None


def test_directedness():
    P = FinitePoset(["b", "x", "y"], [("b", "x"), ("b", "y")])
    assert is_directed(P, {"b", "x"})
    assert not is_directed(P, {"x", "y"})
    assert not is_directed(P, set())


def test_rejects_cycles_and_unknown_elements():
    with pytest.raises(InputError):
        FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(InputError):
        FinitePoset(["a"], [("a", "z")])
    with pytest.raises(InputError):
        FinitePoset(["a", "a"])


def test_size_cap_is_configurable(monkeypatch):
    monkeypatch.setenv("SOBERTOOL_SIZE_CAP", "3")
    with pytest.raises(SizeError, match="SOBERTOOL_SIZE_CAP"):
        dedekind_macneille(chain(4))
    monkeypatch.setenv("SOBERTOOL_SIZE_CAP", "many")
    with pytest.raises(InputError):
        dedekind_macneille(chain(2))


def test_json_round_trip():
    P = FinitePoset(["b", "x", "y"], [("b", "x"), ("b", "y")])
    assert FinitePoset.from_json(P.to_json()) == P
    with pytest.raises(InputError):
        FinitePoset.from_json({"leq": []})
