import itertools
from fractions import Fraction

import pytest

from infoalg import check_df_axioms, check_labeled_axioms, limits
from infoalg.errors import ContractError, MalformedInputError, ResourceLimitError
from infoalg.instances import (
    NATURALS,
    CofiniteSoftAlgebra,
    Constraint,
    FiniteOrCofinite,
    Semiring,
    SoftSet,
    UnitIntervalAnalytic,
    boolean_semiring,
    constraint_algebra,
    constraint_combine,
    constraint_project,
    enumerate_semirings,
    focus_formula,
    fuzzy_chain,
    null_soft_set,
    powerset_algebra,
    semiring_gates,
    soft_extended_intersection,
    soft_project,
    soft_set_algebra,
    truncated_min_plus,
    tuple_project,
    unit_interval_algebra,
)
from infoalg.instances.unit_interval import Interval

B = ["0", "1"]


# --- semirings ------------------------------------------------------------


def test_bundled_gates():
    assert semiring_gates(boolean_semiring()).has_absorption
    assert semiring_gates(fuzzy_chain()).has_absorption
    g = semiring_gates(truncated_min_plus())
    assert not g.has_absorption and g.is_c_semiring and not g.times_idempotent


def test_min_plus_absorption_fails_at_one_one():
    s = truncated_min_plus()
    assert s.mul("1", s.add("1", "1")) == "inf" != "1"


def test_generated_semiring_gates_are_consistent():
    gen = [s for n in (2, 3, 4) for s in enumerate_semirings(n)]
    assert len(gen) == 2 + 6 + 69
    assert all(semiring_gates(s).consistent for s in gen)


def test_non_semiring_rejected():
    s = boolean_semiring()
    bad = dict(s.times)
    bad["1", "1"] = "0"
    with pytest.raises(MalformedInputError):
        Semiring(s.carrier, s.plus, bad, s.zero, s.one)


# --- constraints ------------------------------------------------------------


def test_tuple_projection():
    assert tuple_project(("a", "b"), ("v1", "v2"), ("v1", "v2")) == ("a", "b")
    assert tuple_project(("a", "b"), ("v1", "v2"), ("v2",)) == ("b",)
    assert tuple_project(("a", "b"), ("v1", "v2"), ()) == ()
    with pytest.raises(ContractError):
        tuple_project(("a",), ("v1",), ("v3",))


def test_constraint_combination_examples():
    s = boolean_semiring()
    c1 = Constraint.make(["v"], {("0",): "1", ("1",): "0"}, B)
    c2 = Constraint.make(["v"], {("0",): "1", ("1",): "1"}, B)
    assert constraint_combine(c1, c2, s, B) == c1
    d1 = Constraint.make(["v1"], {("0",): "1", ("1",): "0"}, B)
    d2 = Constraint.make(["v2"], {("0",): "0", ("1",): "1"}, B)
    c = constraint_combine(d1, d2, s, B)
    assert c.con == ("v1", "v2")
    assert c.defn == {("0", "0"): "0", ("0", "1"): "1", ("1", "0"): "0", ("1", "1"): "0"}


def test_constraint_projection_examples():
    s = boolean_semiring()
    c = Constraint.make(["v"], {("0",): "1", ("1",): "0"}, B)
    assert constraint_project(c, [], s, B).defn == {(): "1"}
    assert constraint_project(c, ["v"], s, B) == c
    f = fuzzy_chain()
    c = Constraint.make(["v"], {("0",): "1/2", ("1",): "1"}, B)
    assert constraint_project(c, [], f, B).defn == {(): "1"}
    with pytest.raises(ContractError):
        constraint_project(c, ["w"], f, B)


def test_partial_constraint_definition_rejected():
    with pytest.raises(MalformedInputError):
        Constraint.make(["v"], {("0",): "1"}, B)


def test_constraint_carrier_sizes():
    # |S|^(|D|^k) summed over variable subsets
    assert len(constraint_algebra(boolean_semiring(), ["v1"], B).carrier) == 2 + 4
    assert len(constraint_algebra(boolean_semiring(), ["v1", "v2"], B).carrier) == 2 + 2 * 4 + 16


def test_constraint_cap():
    with limits.override(max_carrier=20):
        with pytest.raises(ResourceLimitError):
            constraint_algebra(boolean_semiring(), ["v1", "v2"], B)


def test_constraint_axioms_iff_absorption_on_generated_semirings():
    for s in itertools.islice((s for n in (2, 3, 4) for s in enumerate_semirings(n)), 30):
        rep = check_labeled_axioms(constraint_algebra(s, ["v1"], B))
        assert rep.passed == semiring_gates(s).has_absorption, s.name


# --- soft sets ------------------------------------------------------------


def test_extended_intersection_cases():
    f = SoftSet.of({"e1": {"u1"}, "e2": {"u1", "u2"}})
    g = SoftSet.of({"e2": {"u2", "u3"}, "e3": {"u3"}})
    h = soft_extended_intersection(f, g)
    assert h.F == {"e1": {"u1"}, "e2": {"u2"}, "e3": {"u3"}}
    assert soft_extended_intersection(f, null_soft_set()) == f
    assert soft_extended_intersection(f, f) == f


def test_soft_projection():
    f = SoftSet.of({"e1": {"u1"}, "e2": {"u2"}})
    assert soft_project(f, ["e1", "e2"]) == f
    assert soft_project(f, []) == null_soft_set()
    with pytest.raises(ContractError):
        soft_project(f, ["e3"])


def test_soft_combination_identity_exhaustively():
    a = soft_set_algebra(["u1", "u2"], ["e1", "e2"])
    lat = a.lattice
    for p in a.carrier:
        for q in a.carrier:
            x, y = a.d(p), a.d(q)
            for s in lat.elements:
                if lat.leq(x, s) and lat.leq(s, lat.join(x, y)):
                    lhs = a.marginalize(a.combine(p, q), s)
                    rhs = a.combine(p, a.marginalize(q, lat.meet(s, y)))
                    assert lhs == rhs


def test_soft_quotient_sizes():
    assert len(soft_set_algebra(["u1", "u2"], ["e1"]).carrier) == 5
    assert len(soft_set_algebra(["u1", "u2", "u3"], ["e1", "e2"]).carrier) == 1 + 8 + 8 + 64


def test_finite_or_cofinite_operations():
    a, b = FiniteOrCofinite.co([1, 2]), FiniteOrCofinite.finite([0, 1, 5])
    assert (a & b) == FiniteOrCofinite.finite([0, 5])
    assert (a | b) == FiniteOrCofinite.co([2])
    assert 3 in a and 1 not in a
    assert b <= NATURALS and not (a <= b)
    assert a.complement() == FiniteOrCofinite.finite([1, 2])
    with pytest.raises(MalformedInputError):
        FiniteOrCofinite.finite([-1])


def _battery(params):
    vals = [
        NATURALS,
        FiniteOrCofinite.co([0]),
        FiniteOrCofinite.co([3, 7]),
        FiniteOrCofinite.co(range(5)),
        FiniteOrCofinite.finite([]),
        FiniteOrCofinite.finite([1, 2]),
        FiniteOrCofinite.finite(range(10)),
    ]
    out = []
    for k in range(len(params) + 1):
        for ps in itertools.combinations(params, k):
            for choice in itertools.product(vals, repeat=len(ps)):
                out.append(SoftSet.of(dict(zip(ps, choice))))
    return out


def test_cofinite_finite_elements_are_exactly_the_all_cofinite_soft_sets():
    a = CofiniteSoftAlgebra(["e1", "e2"])
    battery = _battery(["e1", "e2"])
    assert len(battery) >= 50
    for f in battery:
        assert a.is_finite_element(f) == all(v.cofinite for _, v in f.entries)
        assert a.way_below(f, f) == a.is_finite_element(f)


def test_cofinite_refutation_chain():
    a = CofiniteSoftAlgebra(["e1"])
    f = SoftSet.of({"e1": FiniteOrCofinite.finite([2])})
    chain = a.refutation_chain(f, 5)
    assert all(a.leq(c, d) for c, d in zip(chain, chain[1:]))
    assert all(not a.leq(f, c) for c in chain)
    assert a.chain_limit(f) == f
    with pytest.raises(ContractError):
        a.refutation_chain(SoftSet.of({"e1": NATURALS}), 3)


def test_cofinite_density():
    a = CofiniteSoftAlgebra(["e1", "e2"])
    for f in a.sample_soft_sets():
        assert a.density_holds(f)


def test_cofinite_rejects_plain_sets():
    with pytest.raises(MalformedInputError):
        CofiniteSoftAlgebra(["e1"]).is_finite_element(SoftSet.of({"e1": {"u1"}}))


# --- unit interval ------------------------------------------------------------


def test_focus_formula_cases():
    assert focus_formula(Fraction(7, 10), "0") == Fraction(1, 2)
    assert focus_formula(Fraction(3, 10), "0") == Fraction(3, 10)
    assert focus_formula(Fraction(1, 2), "0") == Fraction(1, 2)
    assert focus_formula(Fraction(7, 10), "1") == Fraction(7, 10)
    with pytest.raises(MalformedInputError):
        focus_formula(2, "0")


def test_grid16_table_matches_formula():
    u = unit_interval_algebra(16)
    assert len(u.carrier) == 17
    assert check_df_axioms(u).passed
    for p in u.carrier:
        for x in ("0", "1"):
            assert Fraction(u.focus(p, x)) == focus_formula(Fraction(p), x)


def test_grid_focus_onto_zero_is_idempotent_and_deflationary():
    u = unit_interval_algebra(16)
    for p in u.carrier:
        q = u.focus(p, "0")
        assert u.focus(q, "0") == q
        assert Fraction(q) <= Fraction(p)


def test_analytic_way_below():
    ui = UnitIntervalAnalytic()
    assert ui.way_below(0, 0)
    assert ui.way_below(Fraction(1, 3), Fraction(1, 2))
    assert not ui.way_below(Fraction(1, 2), Fraction(1, 2))
    assert ui.approximants(Fraction(1, 2)).sup() == Fraction(1, 2)
    assert not ui.approximants(Fraction(1, 2)).has_max()


def test_interval_clamp():
    half = Fraction(1, 2)
    assert Interval(Fraction(1, 4), Fraction(3, 4)).clamp_image() == Interval(Fraction(1, 4), half)
    assert Interval(Fraction(3, 5), Fraction(4, 5), False, False).clamp_image() == Interval(half, half)
    assert Interval(half, half, False, True).empty


def test_powerset_axioms():
    for n in range(4):
        assert check_df_axioms(powerset_algebra([f"x{i}" for i in range(n)])).passed
