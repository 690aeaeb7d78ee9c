import pytest

from infoalg import check_df_axioms, check_labeled_axioms, classify
from infoalg.domain_free import one_element_algebra
from infoalg.errors import AxiomViolation, ContractError
from infoalg.instances import (
    UnitIntervalAnalytic,
    bundled_df_instances,
    bundled_labeled_instances,
    powerset_algebra,
    soft_set_algebra,
)
from infoalg.labeled import LabeledAlgebra
from infoalg.transforms import (
    associated_labeled,
    isomorphism_probe,
    lemma5_check,
    lemma6_check,
    lemma7_check,
    quotient_domain_free,
    remark3_search,
    sigma_congruence,
    theorem2_5_check,
    theorem3_4_check,
)


@pytest.fixture(scope="module")
def soft21():
    return soft_set_algebra(["u1", "u2"], ["e1"])


def test_soft_quotient_has_four_classes(soft21):
    q = quotient_domain_free(soft21)
    assert len(q.carrier) == 4
    sigma = sigma_congruence(soft21)
    # the null soft set merges with the e1 neutral
    assert sigma.class_name("()") == sigma.class_name("(e1:{u1,u2})") == q.neutral
    assert check_df_axioms(q).passed


def test_single_domain_quotient_matches_top_poset():
    a = associated_labeled(powerset_algebra(["a", "b"]))
    q = quotient_domain_free(a)
    assert len(q.carrier) == len(a.domain(a.top))


def test_associated_labeled_carrier_size():
    for df in bundled_df_instances():
        lab = associated_labeled(df)
        assert len(lab.carrier) == sum(len(df.fixed_points(x)) for x in df.lattice.elements)
        assert check_labeled_axioms(lab).passed
        for x in df.lattice.elements:
            assert lab.neutrals[x] == f"{df.neutral}@{x}"


def test_quotients_of_bundled_instances_pass():
    for lab in bundled_labeled_instances():
        assert check_df_axioms(quotient_domain_free(lab)).passed


def test_lemmas_on_bundled_instances():
    for df in bundled_df_instances():
        assert lemma5_check(df)
        assert lemma6_check(df)
    for lab in bundled_labeled_instances():
        assert lemma7_check(lab)


def test_theorem_reports():
    r = theorem2_5_check(powerset_algebra(["a", "b"]))
    assert r.passed and r.checks["theorem5_s_compact"] is True
    assert theorem2_5_check(one_element_algebra()).passed
    r = theorem3_4_check(soft_set_algebra(["u1", "u2"], ["e1"]))
    assert r.passed and r.checks["theorem4_s_compact"] is True
    assert r.details["classes"] == 4


def test_transforms_refuse_analytic_instances():
    with pytest.raises(ContractError):
        theorem2_5_check(UnitIntervalAnalytic())


def test_broken_congruence_is_detected(soft21):
    ct = dict(soft21.combine_table)
    ct["()", "(e1:{u1})"] = "(e1:{u2})"
    broken = LabeledAlgebra(soft21.carrier, soft21.lattice, soft21.label, ct, soft21.marginal_table, soft21.neutrals)
    with pytest.raises(AxiomViolation):
        quotient_domain_free(broken)


def test_isomorphism_probe_is_diagnostic_only():
    assert isinstance(isomorphism_probe(powerset_algebra(["a"])), bool)


def test_remark3_search_finds_nothing_at_finite_scale():
    res = remark3_search(bundled_labeled_instances(), count=10, seed=1)
    assert res["kind"] == "exploration"
    assert res["counterexamples"] == []
    assert res["examined_s_continuous"] == 15
    assert remark3_search()["examined_s_continuous"] == 0


def test_remark3_search_skips_analytic():
    from infoalg.instances import CofiniteSoftAlgebra

    res = remark3_search([CofiniteSoftAlgebra(["e1"])])
    assert res["skipped"][0]["name"] == "cofinite-soft-sets(|E|=1)"


def test_classification_transfers_for_generated_instances():
    from infoalg.generators import random_df_algebras

    for df in random_df_algebras(30, seed=2):
        r = theorem2_5_check(df)
        assert r.passed, df.name
        assert classify(df).s_compact
