import json

import pytest

from sevensphere.verifier import (SEARCH_IDENTITIES, SUITES, SuiteConfig,
                                  VerificationReport, measure_sign_law,
                                  prop3b_hypothesis, run_suite,
                                  search_counterexamples)


def test_registry_contents():
    expected = {"eq3p14", "alternativity_x", "composition_x", "minus_x",
                "xi_closure", "prop2_lemanovo", "prop3a", "prop3b",
                "euue_beta", "eq2205", "eq2206_st", "idempotent_bu",
                "projection_Pa", "kernel_ideal", "sevenfold", "odot_examples",
                "uproduct_inequality", "torsion_closure", "hopf_sphere",
                "hopf_consistency", "norm_composition", "moufang_base",
                "concluding_identity"}
    assert set(SUITES) == expected


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig("nope"))


def test_config_guards():
    with pytest.raises(ValueError):
        SuiteConfig("prop3a", samples=0)
    with pytest.raises(ValueError):
        SuiteConfig("prop3a", tolerance=-1.0)


def test_exhaustive_suites_pass():
    for sid in ("prop3a", "prop3b", "eq2206_st", "idempotent_bu",
                "projection_Pa", "sevenfold", "kernel_ideal",
                "odot_examples"):
        report = run_suite(SuiteConfig(sid, samples=1))
        assert report.passed, (sid, report.failures[:2])


def test_sampled_suites_pass_quickly():
    for sid in ("eq3p14", "alternativity_x", "composition_x", "minus_x",
                "prop2_lemanovo", "euue_beta", "eq2205", "xi_closure",
                "uproduct_inequality", "torsion_closure", "hopf_sphere",
                "hopf_consistency", "norm_composition", "moufang_base",
                "concluding_identity"):
        report = run_suite(SuiteConfig(sid, samples=5))
        assert report.passed, (sid, report.failures[:2])


def test_reports_deterministic():
    a = run_suite(SuiteConfig("eq3p14", seed=11, samples=3))
    b = run_suite(SuiteConfig("eq3p14", seed=11, samples=3))
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())
    assert "elapsed" not in a.to_dict()
    assert a.elapsed >= 0.0


def test_report_schema_keys():
    r = run_suite(SuiteConfig("sevenfold"))
    d = r.to_dict()
    assert list(d) == ["suite", "cases_total", "failures", "seed", "tolerance"]
    assert isinstance(r, VerificationReport)


def test_prop3b_hypothesis_examples():
    from sevensphere.clifford import Multivector
    e12 = Multivector.blade(0b11)
    assert prop3b_hypothesis(3, e12) is True
    assert prop3b_hypothesis(6, e12) is False
    assert prop3b_hypothesis(1, e12) is False
    assert prop3b_hypothesis(5, 0) is True
    with pytest.raises(ValueError):
        prop3b_hypothesis(0, e12)


def test_measure_rho():
    law = measure_sign_law("rho")
    assert law.kind == "rho"
    assert law.table == {0: 1, 1: 1, 2: -1, 3: -1, 4: 1, 5: 1, 6: -1, 7: -1}


def test_measure_lambda():
    # the hypothesis class is only inhabited up to degree 3 and the
    # measured sign there is +1 throughout
    law = measure_sign_law("lambda")
    assert law.table == {0: 1, 1: 1, 2: 1, 3: 1}


def test_measure_st():
    law = measure_sign_law("st")
    # s = (-1)^{k-1} when e_a divides the blade, (-1)^k otherwise
    for (membership, k), s in law.table.items():
        want = (-1) ** (k - 1) if membership == "in" else (-1) ** k
        assert s == want


def test_measure_beta():
    law = measure_sign_law("beta")
    assert law.table == {0: 1, 1: -1, 2: -1, 3: 1}


def test_measure_unknown_kind():
    with pytest.raises(ValueError):
        measure_sign_law("sigma")


def test_search_finds_blade_witnesses():
    for identity in SEARCH_IDENTITIES:
        report = search_counterexamples(identity, "basis_blades")
        assert report.cases_total == 128 * 64
        assert len(report.failures) > 0
    with pytest.raises(ValueError):
        search_counterexamples("nope")
    with pytest.raises(ValueError):
        search_counterexamples("moufang_u_left", "everywhere")


def test_search_witnesses_replay_through_eval():
    from sevensphere.exprs import eval_text
    report = search_counterexamples("uprod_eq_right_nested", "basis_blades")
    f = report.failures[0]
    for text in list(f.inputs) + [f.lhs, f.rhs]:
        eval_text(text)  # must parse and evaluate


def test_search_random_domain_deterministic():
    a = search_counterexamples("moufang_u_left", "random", seed=3, samples=10)
    b = search_counterexamples("moufang_u_left", "random", seed=3, samples=10)
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())
    assert a.cases_total == 10


def test_search_empty_on_unit_paravector_identity():
    # with u a paravector the rewrite is an actual Moufang law; witnesses
    # must disappear in the sampled paravector phase of the suite
    report = run_suite(SuiteConfig("uproduct_inequality", samples=20))
    assert report.passed
