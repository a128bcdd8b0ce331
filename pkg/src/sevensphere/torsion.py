"""Pointwise parallelizing torsion on the 7-sphere and the quadratic map
down to the 4-sphere read off from the deformed product of e_1 and e_2."""
from __future__ import annotations

import numpy as np

from .octonion import E, Octonion, is_unit, oct_conj, oct_mul
from .deformed import x_product


class TorsionTensor:
    """Components T[a, b, c] for a, b, c in 1..7 at a unit base point.

    Index 0 rows are kept zero so the tensor can be addressed with the
    natural 1-based indices.
    """

    __slots__ = ("T", "base_point")

    def __init__(self, T: np.ndarray, base_point: Octonion):
        T = np.array(T, dtype=np.float64)
        if T.shape != (8, 8, 8):
            raise ValueError("expected an 8x8x8 component array")
        T.setflags(write=False)
        object.__setattr__(self, "T", T)
        object.__setattr__(self, "base_point", base_point)

    def __setattr__(self, name, value):
        raise AttributeError("TorsionTensor is immutable")


def torsion(x: Octonion, tol: float = 1e-10) -> TorsionTensor:
    """T_abc(x) extracted from [(conj(e_a) o conj(x)) o (x o e_b)] o e_c.

    The bracketed expression is an octonion I; multiplying by e_c and taking
    the scalar part gives -I^c, so the component is read as the negated
    e_c-coordinate of I.  That sign choice is the one that closes the
    derivation bracket (see bracket_defect).
    """
    if not is_unit(x, tol):
        raise ValueError("torsion base point must lie on the unit 7-sphere")
    xbar = oct_conj(x)
    T = np.zeros((8, 8, 8))
    for a in range(1, 8):
        left = oct_mul(-E[a], xbar)
        for b in range(1, 8):
            inner = oct_mul(left, oct_mul(x, E[b]))
            T[a, b, 1:] = -inner.x[1:]
    return TorsionTensor(T, x)


def bracket_defect(x: Octonion, a: int, b: int, tol: float = 1e-10,
                   tensor: TorsionTensor | None = None) -> float:
    """Max-norm residual of (x o e_a) o e_b - (x o e_b) o e_a
    - 2 sum_c T_abc(x) (x o e_c).

    Pass a precomputed tensor for x to avoid re-deriving it per index pair.
    """
    if not (1 <= a <= 7 and 1 <= b <= 7):
        raise ValueError("indices must lie in 1..7")
    T = (tensor if tensor is not None else torsion(x, tol)).T
    lhs = oct_mul(oct_mul(x, E[a]), E[b]) - oct_mul(oct_mul(x, E[b]), E[a])
    acc = np.zeros(8)
    for c in range(1, 8):
        acc = acc + 2.0 * T[a, b, c] * oct_mul(x, E[c]).x
    return float(np.max(np.abs(lhs.x - acc)))


class HopfPoint:
    """Coordinates (A3, A4, A5, A6, A7) on the 4-sphere."""

    __slots__ = ("A",)

    def __init__(self, A):
        v = np.array(A, dtype=np.float64)
        if v.shape != (5,):
            raise ValueError("expected 5 coordinates")
        v.setflags(write=False)
        object.__setattr__(self, "A", v)

    def __setattr__(self, name, value):
        raise AttributeError("HopfPoint is immutable")

    def __eq__(self, other):
        return isinstance(other, HopfPoint) and bool(np.array_equal(self.A, other.A))

    def __hash__(self):
        return hash(self.A.tobytes())


def hopf(x: Octonion, tol: float = 1e-10) -> HopfPoint:
    """Quadratic map from the unit 7-sphere to the 4-sphere.

    The five coordinates are the e_3..e_7 coefficients of the deformed
    product of e_1 and e_2 at x; every term is quadratic, so antipodal
    points map identically.
    """
    if not is_unit(x, tol):
        raise ValueError("hopf base point must lie on the unit 7-sphere")
    X = x.x
    a3 = 2.0 * (X[0] * X[5] + X[1] * X[7] - X[2] * X[4] + X[3] * X[6])
    a4 = 2.0 * (-X[0] * X[7] + X[1] * X[5] + X[2] * X[3] + X[4] * X[6])
    a5 = 2.0 * (-X[0] * X[3] - X[1] * X[4] - X[2] * X[7] + X[5] * X[6])
    a6 = (X[0] ** 2 + X[1] ** 2 + X[2] ** 2 + X[6] ** 2
          - X[3] ** 2 - X[4] ** 2 - X[5] ** 2 - X[7] ** 2)
    a7 = 2.0 * (X[0] * X[4] - X[1] * X[3] + X[2] * X[5] + X[7] * X[6])
    return HopfPoint([a3, a4, a5, a6, a7])


def hopf_via_product(x: Octonion, tol: float = 1e-10) -> HopfPoint:
    """Cross-check path: the same point from x_product(e_1, e_2, x)."""
    p = x_product(E[1], E[2], x, tol)
    return HopfPoint(p.x[3:8])
