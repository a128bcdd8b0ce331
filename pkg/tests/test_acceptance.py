"""End-to-end acceptance checks, one pass/fail line per criterion."""
import json
import time

import numpy as np

from sevensphere.clifford import Multivector
from sevensphere.octonion import (E, EPSILON, oct_mul, oct_mul_reference,
                                  oct_conj, random_octonion, random_unit)
from sevensphere.deformed import bullet_right, u_product, x_product
from sevensphere.idempotents import frame
from sevensphere.torsion import bracket_defect, hopf, torsion
from sevensphere.verifier import (SuiteConfig, measure_sign_law, run_all,
                                  run_suite, search_counterexamples,
                                  _load_golden)


def check(num, description, ok):
    print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {description}")
    assert ok, f"criterion {num} failed: {description}"


def test_01_multiplication_table():
    start = time.perf_counter()
    ok = all(oct_mul(E[a], E[b]) == oct_mul_reference(E[a], E[b])
             for a in range(8) for b in range(8))
    ok = ok and (time.perf_counter() - start) < 1.0
    check(1, "structure-constant table matches the projection product "
             "on all 64 basis pairs, exact, < 1 s", ok)


def test_02_sevenfold_nesting():
    report = run_suite(SuiteConfig("sevenfold"))
    check(2, "both seven-fold nestings of e1..e7 equal -1 exactly",
          report.passed)


def test_03_three_way_equality():
    start = time.perf_counter()
    report = run_suite(SuiteConfig("eq3p14", samples=200, tolerance=1e-12))
    elapsed = time.perf_counter() - start
    check(3, "three-way deformed-product equality on 64 basis pairs x 200 "
             "random unit X, residual <= 1e-12, < 5 s",
          report.passed and report.cases_total == 200 * 64 and elapsed < 5.0)


def test_04_xi_closure():
    report = run_suite(SuiteConfig("xi_closure", tolerance=1e-12))
    check(4, "every member of the four exceptional sets sends basis pairs "
             "to signed basis units, residual <= 1e-12", report.passed)


def test_05_idempotent_frame():
    report = run_suite(SuiteConfig("idempotent_bu"))
    check(5, "all 64 (a,b) chain-idempotent relations exact on basis "
             "octonions; sum P_a = 1; both constructions agree", report.passed)


def test_06_conjugation_transfer():
    _, alphas = frame()
    rng = np.random.default_rng(42)
    ok = True
    for a in range(1, 8):
        for c in range(8):  # dyadic points: exact
            lhs = bullet_right(alphas[a], oct_mul(E[c], E[a]))
            rhs = oct_mul(oct_conj(E[c]), E[a])
            ok = ok and np.array_equal(lhs.x, rhs.x)
    for _ in range(500):
        x = random_octonion(rng)
        for a in range(1, 8):
            lhs = bullet_right(alphas[a], oct_mul(x, E[a]))
            rhs = oct_mul(oct_conj(x), E[a])
            ok = ok and float(np.max(np.abs(lhs.x - rhs.x))) <= 1e-12
    check(6, "alpha_a transfers conjugation through the chain product: "
             "exact on dyadic points, <= 1e-12 on 500 random points", ok)


def test_07_chain_sign_laws():
    rho = measure_sign_law("rho")
    ok = all(rho.table[k] == (-1) ** (k * (k - 1) // 2) for k in range(8))
    report = run_suite(SuiteConfig("prop3b"))
    ok = ok and report.passed
    lam = measure_sign_law("lambda")
    # the stated closed form matches the measured class sign at degrees 1, 2;
    # the class is empty above degree 3 (see the decisions ledger for the
    # degree-3 discrepancy with the quoted formula)
    ok = ok and all(lam.table[k] == (-1) ** ((k * k + k + 2) // 2)
                    for k in (1, 2))
    golden = _load_golden("left_chain_signs.json")["signs"]
    ok = ok and all(golden[f"{k},0,0"] == s for k, s in lam.table.items())
    check(7, "degree sign law exact over all 128 blades; hypothesis-class "
             "chain signs exhaustive and frozen; complementary-class signs "
             "match the golden table", ok)


def test_08_u_product_degree_sign():
    beta = measure_sign_law("beta")
    golden = _load_golden("beta_table.json")["beta"]
    ok = all(golden[str(k)] == s for k, s in beta.table.items())
    report = run_suite(SuiteConfig("euue_beta"))
    check(8, "u-product degree sign is constant per degree in the "
             "hypothesis class, residual 0, table matches the golden file",
          ok and report.passed)


def test_09_st_rule_and_class_group():
    report = run_suite(SuiteConfig("eq2206_st"))
    check(9, "s,t sign rule exact over basis vectors x basis blades; the "
             "eight sign classes compose as the expected Abelian group",
          report.passed)


def test_10_kernel_of_the_ideal():
    report = run_suite(SuiteConfig("kernel_ideal"))
    check(10, "1+omega annihilates both chain products, its extension "
              "matrices vanish, and P_a P_b = 0 mod the ideal for a != b",
          report.passed)


def test_11_odot_worked_example():
    report = run_suite(SuiteConfig("odot_examples"))
    check(11, "(e57 - e31) under both odot products of e123 gives "
              "e7 + e2 and -e7 + e2 exactly", report.passed)


def test_12_u_product_inequality():
    witnesses = search_counterexamples("uprod_eq_right_nested",
                                       "basis_blades")
    rng = np.random.default_rng(42)
    para_violations = 0
    for _ in range(50):
        x = random_unit(rng)
        u = x.to_multivector()
        for a in range(8):
            for b in range(8):
                lhs = u_product(E[a], E[b], u)
                rhs_oct = x_product(E[a], E[b], x)
                if float(np.max(np.abs(lhs.x - rhs_oct.x))) > 1e-10:
                    para_violations += 1
    report = run_suite(SuiteConfig("uproduct_inequality", samples=50))
    check(12, "the nested rewrite of the u-product has exact blade "
              "witnesses but none on unit paravectors",
          len(witnesses.failures) >= 1 and para_violations == 0
          and report.passed)


def test_13_torsion_closure():
    ok = np.array_equal(torsion(E[0]).T, EPSILON)
    rng = np.random.default_rng(42)
    for _ in range(200):
        x = random_unit(rng)
        tensor = torsion(x)
        for a in range(1, 8):
            for b in range(a + 1, 8):
                ok = ok and bracket_defect(x, a, b, tensor=tensor) <= 1e-10
    check(13, "torsion components close the derivation bracket on 200 "
              "random points x 21 index pairs and reduce to the structure "
              "constants at 1", ok)


def test_14_hopf_map():
    rng = np.random.default_rng(42)
    ok = hopf(E[0]).A.tolist() == [0.0, 0.0, 0.0, 1.0, 0.0]
    for _ in range(1000):
        x = random_unit(rng)
        h = hopf(x)
        p = x_product(E[1], E[2], x)
        ok = ok and float(np.max(np.abs(h.A - p.x[3:8]))) <= 1e-12
        ok = ok and float(np.max(np.abs(p.x[:3]))) <= 1e-12
        ok = ok and abs(float(h.A @ h.A) - 1.0) <= 1e-12
        ok = ok and np.array_equal(h.A, hopf(-x).A)
    check(14, "quadratic 4-sphere map: coefficient match and sphere "
              "condition <= 1e-12 on 1000 points, antipodal symmetry exact, "
              "base point maps to (0,0,0,1,0)", ok)


def test_15_verify_all_deterministic():
    start = time.perf_counter()
    first = run_all(seed=42)
    second = run_all(seed=42)
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in first)
    blob1 = json.dumps([r.to_dict() for r in first])
    blob2 = json.dumps([r.to_dict() for r in second])
    ok = ok and blob1 == blob2 and (elapsed / 2) < 60.0
    check(15, "the full verification battery passes in under 60 s and two "
              "same-seed runs serialize byte-identically", ok)
