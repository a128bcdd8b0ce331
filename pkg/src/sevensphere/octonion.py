"""Octonions as paravectors of Cl(0,7).

The product table follows the seven cyclic triples
(126) (237) (341) (452) (563) (674) (715): for each, e_a o e_b = e_c
cyclically, and e_a o e_a = -1.  The same product falls out of the Clifford
projection <AB(1 - psi)>_{0+1}, which is kept as a cross-checked reference
path.
"""
from __future__ import annotations

import numpy as np

from .clifford import Multivector, PSI, ONE, gp, grade_project

FANO_LINES = [(1, 2, 6), (2, 3, 7), (3, 4, 1), (4, 5, 2),
              (5, 6, 3), (6, 7, 4), (7, 1, 5)]
_LINE_SETS = [frozenset(t) for t in FANO_LINES]

# epsilon[a, b, c] for a, b, c in 1..7 (slot 0 unused)
EPSILON = np.zeros((8, 8, 8))
for _a, _b, _c in FANO_LINES:
    for i, j, k in ((_a, _b, _c), (_b, _c, _a), (_c, _a, _b)):
        EPSILON[i, j, k] = 1.0
        EPSILON[j, i, k] = -1.0

# full product tensor: (A o B)_k = sum_ij MUL[i, j, k] A_i B_j
MUL = np.zeros((8, 8, 8))
MUL[0, :, :] = np.eye(8)
MUL[:, 0, :] = np.eye(8)
for _a in range(1, 8):
    MUL[_a, _a, 0] = -1.0
    for _b in range(1, 8):
        if _a != _b:
            MUL[_a, _b, 1:] = EPSILON[_a, _b, 1:]
_MUL_FLAT = MUL.reshape(64, 8)

# matrices of left/right multiplication by the basis units
LMAT = [np.array([MUL[i, j, :] for j in range(8)]).T for i in range(8)]
RMAT = [np.array([MUL[i, j, :] for i in range(8)]).T for j in range(8)]


class Octonion:
    """Immutable element of R + R^{0,7}: scalar X^0 plus seven vector parts."""

    __slots__ = ("x",)

    def __init__(self, x):
        v = np.array(x, dtype=np.float64)
        if v.shape != (8,):
            raise ValueError(f"expected 8 coordinates, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "x", v)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def unit(cls, a: int) -> "Octonion":
        if not 0 <= a <= 7:
            raise ValueError(f"basis index {a} out of range")
        v = np.zeros(8)
        v[a] = 1.0
        return cls(v)

    @classmethod
    def scalar(cls, value: float) -> "Octonion":
        v = np.zeros(8)
        v[0] = value
        return cls(v)

    def __add__(self, other):
        return Octonion(self.x + other.x)

    def __sub__(self, other):
        return Octonion(self.x - other.x)

    def __neg__(self):
        return Octonion(-self.x)

    def __rmul__(self, scalar: float):
        return Octonion(scalar * self.x)

    def __eq__(self, other):
        return isinstance(other, Octonion) and bool(np.array_equal(self.x, other.x))

    def __hash__(self):
        return hash(self.x.tobytes())

    def __repr__(self):
        return f"Octonion({self.x.tolist()})"

    def norm_sq(self) -> float:
        return float(self.x @ self.x)

    def to_multivector(self) -> Multivector:
        c = np.zeros(128)
        c[0] = self.x[0]
        for a in range(1, 8):
            c[1 << (a - 1)] = self.x[a]
        return Multivector(c)

    @classmethod
    def from_multivector(cls, mv: Multivector, tol: float = 0.0) -> "Octonion":
        rest = mv.coeff.copy()
        v = np.zeros(8)
        v[0] = rest[0]
        rest[0] = 0.0
        for a in range(1, 8):
            v[a] = rest[1 << (a - 1)]
            rest[1 << (a - 1)] = 0.0
        if np.max(np.abs(rest)) > tol:
            raise ValueError("multivector has components outside grades 0 and 1")
        return cls(v)


E = [Octonion.unit(a) for a in range(8)]
ONE_O = E[0]


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    """Octonionic product via the structure-constant table (fast path)."""
    return Octonion(np.outer(a.x, b.x).reshape(64) @ _MUL_FLAT)


def oct_mul_reference(a: Octonion, b: Octonion) -> Octonion:
    """Octonionic product as the Clifford projection <AB(1 - psi)>_{0+1}."""
    prod = gp(gp(a.to_multivector(), b.to_multivector()), ONE - PSI)
    return Octonion.from_multivector(grade_project(prod, {0, 1}))


def oct_conj(a: Octonion) -> Octonion:
    """Conjugation: negate the vector part."""
    v = a.x.copy()
    v[1:] = -v[1:]
    return Octonion(v)


def is_unit(a: Octonion, tol: float) -> bool:
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    return abs(a.norm_sq() - 1.0) <= tol


def is_h_triple(a: int, b: int, c: int) -> bool:
    """True iff {a,b,c} spans one of the seven quaternionic lines."""
    for i in (a, b, c):
        if not 1 <= i <= 7:
            raise ValueError(f"index {i} out of range 1..7")
    s = frozenset((a, b, c))
    return len(s) == 3 and s in _LINE_SETS


def fano_third(a: int, b: int) -> int:
    """The third index on the line through distinct a, b in 1..7."""
    if a == b:
        raise ValueError("indices must be distinct")
    for line in _LINE_SETS:
        if a in line and b in line:
            return next(iter(line - {a, b}))
    raise ValueError(f"no line through {a} and {b}")


class TranslationOperator:
    """8x8 matrix acting on octonion coordinates."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=np.float64)
        if m.shape != (8, 8):
            raise ValueError("expected an 8x8 matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("TranslationOperator is immutable")

    def __call__(self, a: Octonion) -> Octonion:
        return Octonion(self.matrix @ a.x)

    def __matmul__(self, other: "TranslationOperator") -> "TranslationOperator":
        return TranslationOperator(self.matrix @ other.matrix)

    def __eq__(self, other):
        return isinstance(other, TranslationOperator) and bool(
            np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash(self.matrix.tobytes())


def translation(v: Octonion, side: str) -> TranslationOperator:
    """Matrix of A -> v o A (left) or A -> A o v (right)."""
    if side == "left":
        m = np.einsum("ijk,i->kj", MUL, v.x)
    elif side == "right":
        m = np.einsum("ijk,j->ki", MUL, v.x)
    else:
        raise ValueError(f"unknown side {side!r}")
    return TranslationOperator(m)


def extend_morphism(u: Multivector, side: str) -> TranslationOperator:
    """Clifford extension of the translation operators.

    left:  A -> u bullet_right A   (morphism on blades)
    right: A -> A bullet_left u    (anti-morphism on blades)
    Both kill the ideal generated by 1 + e_{1234567}.
    """
    from .deformed import bullet_left, bullet_right

    cols = []
    for a in range(8):
        if side == "left":
            cols.append(bullet_right(u, E[a]).x)
        elif side == "right":
            cols.append(bullet_left(E[a], u).x)
        else:
            raise ValueError(f"unknown side {side!r}")
    return TranslationOperator(np.array(cols).T)


def random_unit(rng: np.random.Generator) -> Octonion:
    """Uniform point of the unit 7-sphere (normalized Gaussian draw)."""
    v = rng.standard_normal(8)
    return Octonion(v / np.linalg.norm(v))


def random_octonion(rng: np.random.Generator) -> Octonion:
    return Octonion(rng.standard_normal(8))
