import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from infoalg import check_df_axioms, classify
from infoalg.document import dumps, loads
from infoalg.domain_free import focus_preserves_directed_sups
from infoalg.generators import random_df_algebras, random_poset
from infoalg.instances import (
    FiniteOrCofinite,
    enumerate_semirings,
    focus_formula,
    semiring_gates,
    soft_extended_intersection,
    SoftSet,
)
from infoalg.transforms import associated_labeled

seeds = st.integers(min_value=0, max_value=10_000)
WINDOW = 30
fin_or_cofin = st.builds(
    FiniteOrCofinite, st.booleans(), st.frozensets(st.integers(min_value=0, max_value=19), max_size=6)
)
unit = st.fractions(min_value=0, max_value=1, max_denominator=64)


def members(s):
    return {n for n in range(WINDOW) if n in s}


@given(fin_or_cofin, fin_or_cofin)
def test_finite_or_cofinite_matches_a_window_model(a, b):
    assert members(a & b) == members(a) & members(b)
    assert members(a | b) == members(a) | members(b)
    assert members(a.complement()) == set(range(WINDOW)) - members(a)
    # supports stay below 20, so the window sees the tail of every cofinite set
    assert (a <= b) == (members(a) <= members(b))


@given(fin_or_cofin)
def test_finite_or_cofinite_complement_is_an_involution(a):
    assert a.complement().complement() == a
    assert (a & a.complement()) == FiniteOrCofinite.finite([])


@given(seeds, st.integers(min_value=1, max_value=6), st.sampled_from([0.2, 0.5, 0.8]))
@settings(max_examples=60, deadline=None)
def test_finite_posets_way_below_is_the_order(seed, n, density):
    p = random_poset(n, random.Random(seed), density)
    elems = list(p.elements)
    for a in elems:
        for b in elems:
            assert p.way_below(a, b) == p.leq(a, b)
            assert p.way_below(a, b) == oracles.way_below(p.leq, elems, a, b)


@given(seeds, st.integers(min_value=1, max_value=5))
@settings(max_examples=40, deadline=None)
def test_poset_lub_matches_brute_force(seed, n):
    p = random_poset(n, random.Random(seed))
    elems = list(p.elements)
    for s in oracles.subsets(elems):
        assert p.lub(s) == oracles.lub(p.leq, elems, s)


@given(seeds)
@settings(max_examples=15, deadline=None)
def test_generated_algebras_obey_the_theory(seed):
    for a in random_df_algebras(4, seed=seed, max_carrier=5):
        assert check_df_axioms(a).passed
        assert oracles.df_axioms_hold(a)
        rep = classify(a)
        assert rep.implications_hold
        assert focus_preserves_directed_sups(a) == rep.s_continuous
        o = a.order
        for p in a.carrier:
            for q in a.carrier:
                assert o.lub([p, q]) == a.combine(p, q)
            for x in a.lattice.elements:
                f = a.focus(p, x)
                assert a.focus(f, x) == f and o.leq(f, p)


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_documents_round_trip_for_generated_algebras(seed):
    for a in random_df_algebras(2, seed=seed, max_carrier=5):
        assert loads(dumps(a)).algebra == a
        lab = associated_labeled(a)
        assert dumps(loads(dumps(lab))) == dumps(lab)


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_labels_of_combinations_are_joins(seed):
    for a in random_df_algebras(2, seed=seed, max_carrier=4):
        lab = associated_labeled(a)
        for p in lab.carrier:
            for q in lab.carrier:
                assert lab.d(lab.combine(p, q)) == lab.lattice.join(lab.d(p), lab.d(q))


@given(unit, unit)
def test_clamp_is_a_monotone_deflationary_projection(u, v):
    for x in ("0", "1"):
        f = focus_formula(u, x)
        assert focus_formula(f, x) == f <= u
        if u <= v:
            assert f <= focus_formula(v, x)
    assert focus_formula(max(focus_formula(u, "0"), v), "0") == max(focus_formula(u, "0"), focus_formula(v, "0"))
    assert focus_formula(u, "0") == min(u, Fraction(1, 2))


soft = st.dictionaries(
    st.sampled_from(["e1", "e2", "e3"]), st.frozensets(st.sampled_from(["u1", "u2", "u3"]))
).map(SoftSet.of)


@given(soft, soft, soft)
def test_extended_intersection_is_a_semilattice(f, g, h):
    assert soft_extended_intersection(f, g) == soft_extended_intersection(g, f)
    assert soft_extended_intersection(f, f) == f
    lhs = soft_extended_intersection(soft_extended_intersection(f, g), h)
    assert lhs == soft_extended_intersection(f, soft_extended_intersection(g, h))
    assert soft_extended_intersection(f, g).params == f.params | g.params


GENERATED = [s for n in (2, 3, 4) for s in enumerate_semirings(n)]


@given(st.sampled_from(GENERATED))
def test_semiring_gates_are_consistent(s):
    g = semiring_gates(s)
    assert g.consistent
    if g.has_absorption:
        # absorption with b = 0 reads a * a = a
        assert all(s.mul(a, a) == a for a in s.carrier)
