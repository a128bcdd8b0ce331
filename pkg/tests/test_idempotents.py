import numpy as np
import pytest

from sevensphere.clifford import Multivector, ONE, PSI, gp, reduce_mod_ideal
from sevensphere.octonion import E, Octonion, random_octonion
from sevensphere.deformed import bullet_left, bullet_right
from sevensphere.idempotents import (P_TRIVECTORS, alpha, build_P, frame,
                                     presentation_sign)


def test_p0_is_one_minus_psi_over_eight():
    assert build_P(0) == 0.125 * (ONE - PSI)


def test_presentation_signs():
    t = (4, 7, 6)
    assert presentation_sign(0, t) == 1
    assert presentation_sign(4, t) == 1
    assert presentation_sign(1, t) == -1


def test_coefficients_are_eighths():
    for a in range(8):
        p = build_P(a)
        nz = np.flatnonzero(p.coeff)
        assert len(nz) == 8
        assert all(abs(p.coeff[m]) == 0.125 for m in nz)


def test_table_and_conjugation_constructions_agree():
    for a in range(8):
        assert build_P(a, "table") == build_P(a, "conjugation")
    with pytest.raises(ValueError):
        build_P(0, "magic")
    with pytest.raises(ValueError):
        build_P(9)


def test_sum_to_one():
    ps, _ = frame()
    total = ps[0]
    for p in ps[1:]:
        total = total + p
    assert total == ONE


def test_chain_idempotency_and_orthogonality():
    ps, _ = frame()
    rng = np.random.default_rng(0)
    xs = [E[c] for c in range(8)] + [random_octonion(rng)]
    for a in range(8):
        for b in range(8):
            delta = 1.0 if a == b else 0.0
            for x in xs:
                lhs = bullet_right(ps[b], bullet_right(ps[a], x))
                rhs = delta * bullet_right(ps[a], x)
                assert np.max(np.abs(lhs.x - rhs.x)) < 1e-12
                lhs = bullet_left(bullet_left(x, ps[a]), ps[b])
                rhs = delta * bullet_left(x, ps[a])
                assert np.max(np.abs(lhs.x - rhs.x)) < 1e-12


def test_projection_onto_basis_units():
    ps, _ = frame()
    for a in range(8):
        for b in range(8):
            want = E[a] if a == b else Octonion.scalar(0.0)
            assert bullet_right(ps[a], E[b]) == want
            assert bullet_left(E[b], ps[a]) == want


def test_frame_resolves_identity_pointwise():
    ps, _ = frame()
    rng = np.random.default_rng(1)
    x = random_octonion(rng)
    total = np.zeros(8)
    for p in ps:
        total = total + bullet_right(p, x).x
    assert np.max(np.abs(total - x.x)) < 1e-12


def test_alpha_is_affine_in_P():
    for a in range(8):
        assert alpha(a) == 2.0 * build_P(a) - ONE


def test_geometric_products_vanish_mod_ideal():
    ps, _ = frame()
    for a in range(8):
        for b in range(8):
            if a != b:
                assert reduce_mod_ideal(gp(ps[a], ps[b])).max_abs() == 0.0


def test_trivector_table_lines():
    # each trivector of the published frame is a quaternionic line
    from sevensphere.octonion import is_h_triple
    for t in P_TRIVECTORS:
        assert is_h_triple(*t)
    assert len({frozenset(t) for t in P_TRIVECTORS}) == 7
