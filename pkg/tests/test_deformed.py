import numpy as np
import pytest

from sevensphere.clifford import Multivector, conjugation
from sevensphere.octonion import E, Octonion, oct_conj, oct_mul, random_unit
from sevensphere.deformed import (bullet_left, bullet_right, class_compose,
                                  odot, u_product, unit_class, x_product,
                                  x_product_raw, xi_set)


def blade(*indices):
    return Multivector.from_indices(indices)


def test_x_product_at_one_is_plain_product():
    for a in range(8):
        for b in range(8):
            assert x_product(E[a], E[b], E[0]) == oct_mul(E[a], E[b])


def test_x_product_frozen_example():
    assert x_product(E[1], E[2], E[3]) == -E[6]


def test_x_product_requires_unit_parameter():
    with pytest.raises(ValueError):
        x_product(E[1], E[2], 2.0 * E[3])
    # the raw variant skips the guard
    out = x_product_raw(E[1], E[2], 2.0 * E[3])
    assert np.max(np.abs(out.x)) > 0


def test_x_product_three_way_equality_random():
    rng = np.random.default_rng(0)
    for _ in range(20):
        x = random_unit(rng)
        xbar = oct_conj(x)
        a, b = E[rng.integers(8)], E[rng.integers(8)]
        lhs = x_product(a, b, x)
        mid = oct_mul(x, oct_mul(oct_mul(xbar, a), b))
        rhs = oct_mul(oct_mul(a, oct_mul(b, x)), xbar)
        assert np.max(np.abs(lhs.x - mid.x)) < 1e-12
        assert np.max(np.abs(lhs.x - rhs.x)) < 1e-12


def test_x_product_sign_invariance():
    rng = np.random.default_rng(1)
    x = random_unit(rng)
    for a in range(8):
        for b in range(8):
            assert x_product(E[a], E[b], x) == x_product(E[a], E[b], -x)


def test_bullet_chains_frozen_values():
    # 1 bl e12 = e1 o e2 = e6
    assert bullet_left(E[0], blade(1, 2)) == E[6]
    # 1 bl e124 = (e1 o e2) o e4 = e6 o e4 = -e7
    assert bullet_left(E[0], blade(1, 2, 4)) == -E[7]
    # e7 bl e124 = ((e7 o e1) o e2) o e4 = (e5 o e2) o e4 = e4 o e4 = -1
    assert bullet_left(E[7], blade(1, 2, 4)) == -E[0]
    # e12 br 1 = e1 o (e2 o 1) = e6
    assert bullet_right(blade(1, 2), E[0]) == E[6]


def test_bullet_on_scalar_blade_is_scaling():
    a = Octonion(np.arange(8, dtype=float))
    u = Multivector.scalar(3.0)
    assert bullet_left(a, u) == 3.0 * a
    assert bullet_right(u, a) == 3.0 * a


def test_bullet_linear_in_u():
    rng = np.random.default_rng(2)
    a = Octonion(rng.standard_normal(8))
    u = Multivector(rng.standard_normal(128))
    v = Multivector(rng.standard_normal(128))
    lhs = bullet_left(a, u + v).x
    rhs = (bullet_left(a, u) + bullet_left(a, v)).x
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_u_product_reduces_to_x_product_on_paravectors():
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = random_unit(rng)
        u = x.to_multivector()
        for a in range(8):
            for b in range(8):
                lhs = u_product(E[a], E[b], u)
                rhs = x_product(E[a], E[b], x)
                assert np.max(np.abs(lhs.x - rhs.x)) < 1e-12


def test_u_product_differs_from_nested_form_on_blades():
    # the right-nested rewrite fails already for u = e12
    u = blade(1, 2)
    ubar = conjugation(u)
    lhs = u_product(E[0], E[3], u)
    rhs = bullet_left(oct_mul(E[0], bullet_left(E[3], u)), ubar)
    assert np.max(np.abs(lhs.x - rhs.x)) > 0


def test_odot_worked_examples():
    u = blade(5, 7) - blade(3, 1)
    v = blade(1, 2, 3)
    assert odot(u, v, "left") == E[7] + E[2]
    assert odot(u, v, "right") == -E[7] + E[2]
    with pytest.raises(ValueError):
        odot(u, v, "sideways")


def test_odot_scalar_blades():
    # a scalar factor on either side acts by plain scaling through e0
    u = Multivector.scalar(2.0)
    v = blade(1, 2)
    assert odot(u, v, "left") == 2.0 * E[6]
    assert odot(blade(1, 2), Multivector.scalar(2.0), "right") == 2.0 * E[6]


def test_xi_set_sizes():
    assert len(xi_set(0)) == 14
    assert len(xi_set(1)) == 112
    assert len(xi_set(2)) == 224
    assert len(xi_set(3)) == 128
    with pytest.raises(ValueError):
        xi_set(4)


def test_xi_members_are_unit():
    for level in range(4):
        for x in xi_set(level):
            assert abs(x.norm_sq() - 1.0) < 1e-12


def test_xi_closure_spot_checks():
    rng = np.random.default_rng(4)
    for level in range(4):
        members = xi_set(level).members
        for x in rng.choice(len(members), size=5, replace=False):
            m = members[int(x)]
            for a in range(8):
                for b in range(8):
                    r = np.sort(np.abs(x_product(E[a], E[b], m).x))
                    assert abs(r[-1] - 1.0) < 1e-12
                    assert r[-2] < 1e-12


def test_unit_class_values():
    cls, val = unit_class(blade(1, 2))
    assert cls == 6 and val == E[6]
    cls, val = unit_class(blade(1, 2, 4))
    assert cls == 7 and val == -E[7]
    cls, val = unit_class(Multivector.scalar(1.0))
    assert cls == 0 and val == E[0]
    with pytest.raises(ValueError):
        unit_class(blade(1) + blade(2))
    with pytest.raises(ValueError):
        unit_class(Multivector.blade(0b11, 0.5))


def test_class_compose_group_axioms():
    for b in range(8):
        assert class_compose(0, b) == b
        assert class_compose(b, 0) == b
        assert class_compose(b, b) == 0
    assert class_compose(1, 2) == 6
    assert class_compose(2, 6) == 1
    # commutativity and associativity over the whole table
    for a in range(8):
        for b in range(8):
            assert class_compose(a, b) == class_compose(b, a)
            for c in range(8):
                assert (class_compose(class_compose(a, b), c)
                        == class_compose(a, class_compose(b, c)))


def test_class_group_law_matches_full_evaluation():
    for m1 in range(0, 128, 7):
        for m2 in range(128):
            if m1 & m2:
                continue
            c1, _ = unit_class(Multivector.blade(m1))
            c2, _ = unit_class(Multivector.blade(m2))
            cfull, _ = unit_class(Multivector.blade(m1 ^ m2))
            assert class_compose(c1, c2) == cfull
