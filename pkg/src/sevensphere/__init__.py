"""Exact numerics for the octonion algebra carried by Cl(0,7) paravectors,
its deformed (X-, u-, chain and odot) products, the idempotent frame, the
parallelizing torsion of the 7-sphere, and reproducible verification suites
for all of it."""

from .clifford import (DIM, GRADE, IDEAL_PROJECTOR, OMEGA, ONE, PSI,
                       Multivector, blade_sign, conjugation, gp,
                       grade_involution, grade_project, graded_products,
                       involution, reduce_mod_ideal, reversion,
                       vector_inverse)
from .octonion import (E, EPSILON, FANO_LINES, MUL, ONE_O, Octonion,
                       TranslationOperator, extend_morphism, fano_third,
                       is_h_triple, is_unit, oct_conj, oct_mul,
                       oct_mul_reference, random_octonion, random_unit,
                       translation)
from .deformed import (XiSet, bullet_left, bullet_right, class_compose, odot,
                       u_product, unit_class, x_product, x_product_raw,
                       xi_set)
from .idempotents import P_TRIVECTORS, alpha, build_P, frame, presentation_sign
from .torsion import (HopfPoint, TorsionTensor, bracket_defect, hopf,
                      hopf_via_product, torsion)
from .verifier import (SEARCH_IDENTITIES, SUITES, Failure, SignLaw,
                       SuiteConfig, VerificationReport, measure_sign_law,
                       prop3b_hypothesis, run_all, run_suite,
                       search_counterexamples)
from .exprs import (EvalError, ParseError, eval_text, evaluate,
                    format_multivector, format_octonion, parse)

__version__ = "0.1.0"
