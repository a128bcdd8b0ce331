"""The deformed non-associative products built on the octonion algebra.

A unit paravector X deforms the product to (A o X) o (Xbar o B).  A general
multivector u deforms it factor by factor: each canonical blade is read as
its ascending list of basis-vector factors, applied left-nested (bullet_left)
or right-nested (bullet_right), and the whole thing extends by linearity.
"""
from __future__ import annotations

import itertools

import numpy as np

from .clifford import Multivector, conjugation
from .octonion import (E, LMAT, RMAT, Octonion, fano_third, is_unit, oct_conj,
                       oct_mul)

_ROOT2 = float(np.sqrt(2.0))
_ROOT8 = float(np.sqrt(8.0))


def _mask_indices(mask: int) -> list[int]:
    return [i for i in range(1, 8) if mask >> (i - 1) & 1]


def x_product(a: Octonion, b: Octonion, x: Octonion,
              tol: float = 1e-10) -> Octonion:
    """Deformed product (a o x) o (conj(x) o b) for unit x."""
    if not is_unit(x, tol):
        raise ValueError("x-product parameter must lie on the unit 7-sphere")
    return x_product_raw(a, b, x)


def x_product_raw(a: Octonion, b: Octonion, x: Octonion) -> Octonion:
    """Same formula without the unit-norm guard, for experiments."""
    return oct_mul(oct_mul(a, x), oct_mul(oct_conj(x), b))


def bullet_left(a: Octonion, u: Multivector) -> Octonion:
    """(((a o u1) o u2) ... ) o uk per canonical blade of u, linearly."""
    out = np.zeros(8)
    for mask in np.flatnonzero(u.coeff):
        cur = a.x
        for i in _mask_indices(int(mask)):
            cur = RMAT[i] @ cur
        out = out + u.coeff[mask] * cur
    return Octonion(out)


def bullet_right(u: Multivector, a: Octonion) -> Octonion:
    """u1 o (u2 o ( ... o (uk o a))) per canonical blade of u, linearly."""
    out = np.zeros(8)
    for mask in np.flatnonzero(u.coeff):
        cur = a.x
        for i in reversed(_mask_indices(int(mask))):
            cur = LMAT[i] @ cur
        out = out + u.coeff[mask] * cur
    return Octonion(out)


def u_product(a: Octonion, b: Octonion, u: Multivector) -> Octonion:
    """(a bullet_left u) o (conj(u) bullet_right b)."""
    return oct_mul(bullet_left(a, u), bullet_right(conjugation(u), b))


def odot(u: Multivector, v: Multivector, side: str) -> Octonion:
    """Products between Clifford elements, landing in the paravector space.

    left:  u1 o (u2 o ( ... (uk bullet_left v))) per blade of u;
    right: ((u bullet_right v1) o v2) ... o vk per blade of v.
    """
    out = np.zeros(8)
    if side == "left":
        for mask in np.flatnonzero(u.coeff):
            idx = _mask_indices(int(mask))
            if idx:
                cur = bullet_left(E[idx[-1]], v).x
                for i in reversed(idx[:-1]):
                    cur = LMAT[i] @ cur
            else:
                cur = bullet_left(E[0], v).x
            out = out + u.coeff[mask] * cur
    elif side == "right":
        for mask in np.flatnonzero(v.coeff):
            idx = _mask_indices(int(mask))
            if idx:
                cur = bullet_right(u, E[idx[0]]).x
                for i in idx[1:]:
                    cur = RMAT[i] @ cur
            else:
                cur = bullet_right(u, E[0]).x
            out = out + v.coeff[mask] * cur
    else:
        raise ValueError(f"unknown side {side!r}")
    return Octonion(out)


def _nested_right(indices) -> Octonion:
    """e_a o (e_b o (e_c o e_d)) for a list of basis indices."""
    cur = E[indices[-1]]
    for i in reversed(indices[:-1]):
        cur = oct_mul(E[i], cur)
    return cur


class XiSet:
    """One of the four exceptional families of deformation points."""

    __slots__ = ("level", "members")

    def __init__(self, level: int, members: list[Octonion]):
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "members", tuple(members))

    def __setattr__(self, name, value):
        raise AttributeError("XiSet is immutable")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def xi_set(level: int) -> XiSet:
    """Exceptional sets of unit octonions whose deformed product stays
    within the signed basis units.

    level 0: +-e_a (a in 1..7)
    level 1: (+-e_a +- e_b)/sqrt(2), distinct a, b in 0..7
    level 2: four distinct indices in 0..7 with coordinates +-1/2, subject to
             the nested-product filter e_a o (e_b o (e_c o e_d)) = +-1
    level 3: all eight coordinates +-1/sqrt(8), odd number of plus signs
    """
    members: list[Octonion] = []
    if level == 0:
        for a in range(1, 8):
            members.append(E[a])
            members.append(-E[a])
    elif level == 1:
        for a, b in itertools.combinations(range(8), 2):
            for sa, sb in itertools.product((1.0, -1.0), repeat=2):
                v = np.zeros(8)
                v[a] = sa / _ROOT2
                v[b] = sb / _ROOT2
                members.append(Octonion(v))
    elif level == 2:
        for quad in itertools.combinations(range(8), 4):
            prod = _nested_right(list(quad))
            if abs(abs(prod.x[0]) - 1.0) > 1e-12:
                continue
            for signs in itertools.product((1.0, -1.0), repeat=4):
                v = np.zeros(8)
                for a, s in zip(quad, signs):
                    v[a] = s / 2.0
                members.append(Octonion(v))
    elif level == 3:
        for signs in itertools.product((1.0, -1.0), repeat=8):
            if sum(1 for s in signs if s > 0) % 2 == 1:
                members.append(Octonion(np.array(signs) / _ROOT8))
    else:
        raise ValueError(f"unknown Xi level {level}")
    return XiSet(level, members)


def class_compose(b: int, c: int) -> int:
    """Group law of the eight sets {+-e_b}: 0 is the identity, b*b = 0,
    and distinct nonzero classes compose along their quaternionic line."""
    if b == 0:
        return c
    if c == 0:
        return b
    if b == c:
        return 0
    return fano_third(b, c)


def unit_class(u: Multivector) -> tuple[int, Octonion]:
    """Class and exact value of 1 bullet_left u for a single signed blade."""
    nz = np.flatnonzero(u.coeff)
    if len(nz) != 1 or abs(u.coeff[nz[0]]) != 1.0:
        raise ValueError("unit_class requires a single blade with coefficient +-1")
    value = bullet_left(E[0], u)
    support = np.flatnonzero(value.x)
    assert len(support) == 1 and abs(value.x[support[0]]) == 1.0
    return int(support[0]), value
