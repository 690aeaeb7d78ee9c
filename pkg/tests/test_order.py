import pytest

import oracles
from infoalg import limits
from infoalg.errors import MalformedInputError, ResourceLimitError
from infoalg.generators import all_posets, poset_corpus
from infoalg.order import (
    FiniteLattice,
    Poset,
    chain,
    complete_via_directed,
    is_algebraic_lattice,
    is_complete_lattice,
    is_continuous_lattice,
    is_directed,
    lub,
    powerset_lattice,
    product_lattice,
    way_below,
)


def diamond():
    return FiniteLattice(["b", "l", "r", "t"], [("b", "l"), ("b", "r"), ("b", "t"), ("l", "t"), ("r", "t")])


def test_reflexive_pairs_are_implicit():
    p = Poset(["a", "b"], [("a", "b")])
    assert p.leq("a", "a") and p.leq("a", "b") and not p.leq("b", "a")


def test_non_transitive_relation_rejected():
    with pytest.raises(MalformedInputError):
        Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])


def test_antisymmetry_violation_rejected():
    with pytest.raises(MalformedInputError):
        Poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_directed_sets():
    d = diamond()
    assert is_directed(["l", "t"], d)
    assert is_directed(["l", "r", "t"], d)
    assert not is_directed(["l", "r"], d)
    assert not is_directed([], d)


def test_lub_of_empty_set_is_bottom():
    assert lub([], diamond()) == "b"
    assert lub(["l", "r"], diamond()) == "t"


def test_lub_missing_in_antichain():
    assert lub(["a", "b"], Poset(["a", "b"], [])) is None


def test_way_below_on_chain_matches_order():
    c = chain(4)
    for a in c.elements:
        for b in c.elements:
            assert way_below(a, b, c) == c.leq(a, b)


def test_diamond_is_continuous_and_algebraic():
    d = diamond()
    assert is_complete_lattice(d)
    assert is_continuous_lattice(d)
    assert is_algebraic_lattice(d)


def test_two_element_antichain_is_not_complete():
    p = Poset(["a", "b"], [])
    assert not is_complete_lattice(p)
    assert not complete_via_directed(p)
    assert not is_continuous_lattice(p)


def test_poset_without_bottom_has_directed_sups_but_is_not_complete():
    # every finite directed set has a maximum, so only the empty lub can be missing
    p = Poset(["a", "b", "t"], [("a", "t"), ("b", "t")])
    assert not is_complete_lattice(p)
    assert not complete_via_directed(p)


def test_way_below_agrees_with_brute_force_oracle():
    for p in list(all_posets(3)) + poset_corpus(seed=3, random_count=6)[-6:]:
        for a in p.elements:
            for b in p.elements:
                assert p.way_below(a, b) == oracles.way_below(p.leq, p.elements, a, b)


def test_completeness_agrees_with_oracle():
    for p in all_posets(3):
        assert is_complete_lattice(p) == oracles.complete(p.leq, p.elements)


def test_poset_counts():
    # number of labelled partial orders on 1..4 points
    assert [sum(1 for _ in all_posets(n)) for n in range(1, 5)] == [1, 3, 19, 219]


def test_product_lattice_names_and_order():
    p = product_lattice(chain(2, ["0", "1"]), chain(2, ["a", "b"]))
    assert p.elements == ("(0,a)", "(0,b)", "(1,a)", "(1,b)")
    assert p.top == "(1,b)" and p.bottom == "(0,a)"
    assert not p.leq("(0,b)", "(1,a)")
    assert p.join("(0,b)", "(1,a)") == "(1,b)"
    assert p.factors["(1,a)"] == ("1", "a")


def test_powerset_lattice():
    lat, sets = powerset_lattice(["y", "x"])
    assert lat.elements == ("{}", "{x}", "{y}", "{x,y}")
    assert lat.meet("{x}", "{y}") == "{}"
    assert sets["{x,y}"] == frozenset("xy")


def test_lattice_rejects_wrong_join_table():
    c = chain(2)
    with pytest.raises(MalformedInputError):
        FiniteLattice(c.elements, c.strict_pairs(), join={(a, b): "0" for a in c.elements for b in c.elements})


def test_non_lattice_rejected():
    with pytest.raises(MalformedInputError):
        FiniteLattice(["a", "b"], [])


def test_subset_cap_is_enforced():
    c = chain(6)
    with limits.override(max_subsets=16):
        with pytest.raises(ResourceLimitError):
            is_complete_lattice(c)
    assert is_complete_lattice(c)


def test_limits_from_environment():
    lim = limits.Limits.from_env({"INFOALG_MAX_SUBSETS": "64", "INFOALG_MAX_CARRIER": "10"})
    assert lim.max_subsets == 64 and lim.max_carrier == 10 and lim.max_enum_elements == 6
    with pytest.raises(ValueError):
        limits.Limits.from_env({"INFOALG_MAX_CARRIER": "many"})
