"""Dense exact arithmetic in the 128-dimensional Clifford algebra Cl(0,7).

Blades are 7-bit masks (bit i-1 set means the generator e_i is a factor),
kept in canonical ascending-index order.  All seven generators square to -1.
Coefficients are float64; every structural constant used here (+-1, +-1/2,
+-1/8) is dyadic, so identity checks on such inputs are exact.
"""
from __future__ import annotations

import numpy as np

DIM = 128
NGEN = 7

_MASKS = np.arange(DIM)
GRADE = np.array([m.bit_count() for m in range(DIM)], dtype=np.int64)


def blade_sign(a: int, b: int) -> int:
    """Sign of the product of canonical blades with masks a and b.

    Counts the transpositions needed to interleave the two ascending factor
    lists, then one factor of -1 per contracted pair (e_i^2 = -1).
    """
    sign = 1
    sh = a >> 1
    while sh:
        if (sh & b).bit_count() & 1:
            sign = -sign
        sh >>= 1
    if (a & b).bit_count() & 1:
        sign = -sign
    return sign


SIGN = np.array([[blade_sign(a, b) for b in range(DIM)] for a in range(DIM)],
                dtype=np.float64)
XOR = _MASKS[:, None] ^ _MASKS[None, :]

# gp as one matmul: out[c] = sum_a u[a] * v[a^c] * SIGN[a, a^c]
_GP_SIGN = np.array([[SIGN[a, a ^ c] for a in range(DIM)] for c in range(DIM)])
_GP_IDX = np.array([[a ^ c for a in range(DIM)] for c in range(DIM)])

_REV_SIGN = np.where(GRADE % 4 <= 1, 1.0, -1.0)          # (-1)^{k(k-1)/2}
_GI_SIGN = np.where(GRADE % 2 == 0, 1.0, -1.0)           # (-1)^k
_CONJ_SIGN = _REV_SIGN * _GI_SIGN


class Multivector:
    """Immutable element of Cl(0,7) as a length-128 coefficient vector."""

    __slots__ = ("coeff",)

    def __init__(self, coeff):
        c = np.array(coeff, dtype=np.float64)
        if c.shape != (DIM,):
            raise ValueError(f"expected {DIM} coefficients, got shape {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "coeff", c)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zero(cls) -> "Multivector":
        return cls(np.zeros(DIM))

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        c = np.zeros(DIM)
        c[0] = value
        return cls(c)

    @classmethod
    def blade(cls, mask: int, coeff: float = 1.0) -> "Multivector":
        if not 0 <= mask < DIM:
            raise ValueError(f"blade mask {mask} out of range")
        c = np.zeros(DIM)
        c[mask] = coeff
        return cls(c)

    @classmethod
    def from_indices(cls, indices, coeff: float = 1.0) -> "Multivector":
        """Blade from a (possibly unsorted) list of distinct indices in 1..7.

        The reordering sign relative to the canonical ascending form is
        folded into the coefficient, e.g. e_{21} = -e_{12}.
        """
        idx = list(indices)
        if len(set(idx)) != len(idx) or any(i < 1 or i > 7 for i in idx):
            raise ValueError(f"bad index list {idx}")
        mv = cls.scalar(coeff)
        for i in idx:
            mv = gp(mv, cls.blade(1 << (i - 1)))
        return mv

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeff + other.coeff)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.coeff - other.coeff)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.coeff)

    def __rmul__(self, scalar: float) -> "Multivector":
        return Multivector(scalar * self.coeff)

    def __eq__(self, other) -> bool:
        return isinstance(other, Multivector) and bool(
            np.array_equal(self.coeff, other.coeff))

    def __hash__(self):
        return hash(self.coeff.tobytes())

    def __repr__(self):
        nz = np.flatnonzero(self.coeff)
        terms = ", ".join(f"{int(m)}: {self.coeff[m]:g}" for m in nz[:8])
        more = "..." if len(nz) > 8 else ""
        return f"Multivector({{{terms}{more}}})"

    def scalar_part(self) -> float:
        return float(self.coeff[0])

    def grades(self) -> set[int]:
        return {int(GRADE[m]) for m in np.flatnonzero(self.coeff)}

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeff)))


def gp(u: Multivector, v: Multivector) -> Multivector:
    """Geometric (Clifford) product.  Associative, unital."""
    out = (_GP_SIGN * v.coeff[_GP_IDX]) @ u.coeff
    return Multivector(out)


def grade_project(u: Multivector, ks) -> Multivector:
    """Keep only the components whose grade lies in ks."""
    keep = np.isin(GRADE, list(ks))
    return Multivector(np.where(keep, u.coeff, 0.0))


def involution(u: Multivector, kind: str) -> Multivector:
    """Reversion, grade involution, or Clifford conjugation."""
    if kind == "reversion":
        return Multivector(_REV_SIGN * u.coeff)
    if kind == "grade_involution":
        return Multivector(_GI_SIGN * u.coeff)
    if kind == "conjugation":
        return Multivector(_CONJ_SIGN * u.coeff)
    raise ValueError(f"unknown involution kind {kind!r}")


def reversion(u: Multivector) -> Multivector:
    return involution(u, "reversion")


def grade_involution(u: Multivector) -> Multivector:
    return involution(u, "grade_involution")


def conjugation(u: Multivector) -> Multivector:
    return involution(u, "conjugation")


def graded_products(u: Multivector, v: Multivector):
    """(wedge, left contraction) parts of the geometric product.

    For grade-1 u the two parts sum to gp(u, v).
    """
    wedge = np.zeros(DIM)
    contr = np.zeros(DIM)
    for a in np.flatnonzero(u.coeff):
        for b in np.flatnonzero(v.coeff):
            term = u.coeff[a] * v.coeff[b] * SIGN[a, b]
            if a & b == 0:
                wedge[a ^ b] += term
            if a & b == a:
                contr[a ^ b] += term
    return Multivector(wedge), Multivector(contr)


def vector_inverse(v: Multivector) -> Multivector:
    """Inverse of a nonzero grade-1 vector: v / v^2 (v^2 is a scalar)."""
    if v.grades() - {1}:
        raise ValueError("vector_inverse requires a pure grade-1 argument")
    vsq = gp(v, v).scalar_part()
    if vsq == 0.0:
        raise ValueError("cannot invert the zero vector")
    return (1.0 / vsq) * v


# e_{1234567}: central, squares to +1
OMEGA = Multivector.blade(0b1111111)
ONE = Multivector.scalar(1.0)

# psi = e126 + e237 + e341 + e452 + e563 + e674 + e715 (grade 3)
_PSI_TRIPLES = [(1, 2, 6), (2, 3, 7), (3, 4, 1), (4, 5, 2),
                (5, 6, 3), (6, 7, 4), (7, 1, 5)]
PSI = Multivector.zero()
for _t in _PSI_TRIPLES:
    PSI = PSI + Multivector.from_indices(_t)

IDEAL_PROJECTOR = 0.5 * (ONE - OMEGA)


def reduce_mod_ideal(u: Multivector) -> Multivector:
    """Canonical representative of u modulo the ideal (1 + omega) Cl(0,7)."""
    return gp(u, IDEAL_PROJECTOR)
