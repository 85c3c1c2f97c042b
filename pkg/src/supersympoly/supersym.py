"""Membership predicates for the supersymmetric algebra and its variants."""

from __future__ import annotations

from dataclasses import dataclass

from .poly_core import Poly, d_dT, psi
from .symfun import Block, is_symmetric


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the three clause membership test."""

    symmetric_x: bool
    symmetric_y: bool
    derivative_vanishes: bool

    @property
    def overall(self) -> bool:
        return self.symmetric_x and self.symmetric_y and self.derivative_vanishes


def is_supersymmetric(f: Poly) -> MembershipVerdict:
    """Test symmetry in both blocks and vanishing of d/dT after x_m = y_n = T.

    When one block is empty there is no x/y pair to merge into T, so the
    derivative clause is vacuously satisfied.
    """
    ring = f.ring
    if ring.has_t:
        raise ValueError("membership applies to polynomials without T")
    sym_x = is_symmetric(f, Block.X)
    sym_y = is_symmetric(f, Block.Y)
    if ring.m == 0 or ring.n == 0:
        deriv = True
    else:
        deriv = d_dT(psi(f)).is_zero
    return MembershipVerdict(sym_x, sym_y, deriv)


def is_strictly_supersymmetric(f: Poly) -> bool:
    """True iff the substitution x_m = y_n = T does not involve T at all."""
    ring = f.ring
    if ring.has_t:
        raise ValueError("membership applies to polynomials without T")
    if ring.m < 1 or ring.n < 1:
        raise ValueError("strict membership needs m >= 1 and n >= 1")
    return all(exps[-1] == 0 for exps in psi(f).terms)


def is_p_balanced(f: Poly) -> bool:
    """True iff p divides every cross sum of an x-exponent and a y-exponent.

    The condition is checked per stored term, zero exponents included.
    It is equivalent to each term's x-exponents sharing one residue c
    mod p while all its y-exponents are congruent to -c.
    """
    ring = f.ring
    if ring.has_t:
        raise ValueError("balance applies to polynomials without T")
    m, n, p = ring.m, ring.n, ring.p
    if m == 0 or n == 0:
        return True
    for exps in f.terms:
        xres = {e % p for e in exps[:m]}
        yres = {e % p for e in exps[m : m + n]}
        if len(xres) > 1 or len(yres) > 1:
            return False
        if (next(iter(xres)) + next(iter(yres))) % p != 0:
            return False
    return True
