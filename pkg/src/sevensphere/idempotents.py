"""The eight orthogonal projection idempotents of the deformed product.

P_a lives in grade 0 + grade 3 with all coefficients +-1/8; the elements
alpha_a = 2 P_a - 1 implement conjugation-like actions on octonion products.
"""
from __future__ import annotations

from .clifford import (Multivector, ONE, PSI, gp, vector_inverse)

# presentation-order trivectors of the published table; each one carries a
# reordering sign of -1 relative to its canonical ascending form
P_TRIVECTORS = [(4, 7, 6), (5, 1, 7), (6, 2, 1), (7, 3, 2),
                (1, 4, 3), (2, 5, 4), (3, 6, 5)]


def presentation_sign(a: int, trivector: tuple[int, int, int]) -> int:
    """Sign of the trivector in the table row of P_a (+ for P_0; for a >= 1,
    + exactly when a is one of the three indices)."""
    if a == 0 or a in trivector:
        return 1
    return -1


def build_P(a: int, method: str = "table") -> Multivector:
    """Projection idempotent P_a, by the published table or by conjugating
    (1 - psi)/8 with the basis unit e_a."""
    if not 0 <= a <= 7:
        raise ValueError(f"index {a} out of range 0..7")
    if method == "table":
        mv = Multivector.scalar(1.0)
        for t in P_TRIVECTORS:
            mv = mv + Multivector.from_indices(t, presentation_sign(a, t))
        return 0.125 * mv
    if method == "conjugation":
        base = ONE - PSI
        if a == 0:
            return 0.125 * base
        ea = Multivector.blade(1 << (a - 1))
        return 0.125 * gp(gp(ea, base), vector_inverse(ea))
    raise ValueError(f"unknown method {method!r}")


def alpha(a: int) -> Multivector:
    """alpha_a = 2 P_a - 1."""
    return 2.0 * build_P(a) - ONE


def frame() -> tuple[list[Multivector], list[Multivector]]:
    """All eight (P_a, alpha_a) pairs."""
    ps = [build_P(a) for a in range(8)]
    return ps, [2.0 * p - ONE for p in ps]
