"""Independent brute force verification machinery.

``as_dimension`` measures the graded pieces of the supersymmetric
algebra directly from the defining conditions: the block-symmetric
space of one degree is spanned by products of monomial symmetric
functions, and the surviving subspace is the kernel of the linear map
f -> d/dT f(x_m = y_n = T).  ``generated_dimension`` measures the span
of all generator monomials of the same degree by row reduction.  The
generator property predicts the two numbers agree everywhere; the two
computations share no code path beyond basic polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .generators import (
    DeltaSeq,
    KSeq,
    bracket_brace,
    bracket_round,
    bracket_square,
    c_r,
    w_poly,
)
from .genexpr import gen_span
from .poly_core import (
    Poly,
    Ring,
    d_dT,
    fp_inv,
    one,
    psi,
    t_power,
    x_var,
    y_var,
    zero,
    _term_key,
)
from .symfun import Block, orbit_sym


class FpEchelon:
    """Incremental row echelon form over F_p for sparse vectors."""

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[tuple, dict] = {}

    def add(self, vec: dict) -> bool:
        """Reduce and insert; True when the vector was independent."""
        p = self.p
        vec = {k: v % p for k, v in vec.items() if v % p}
        while vec:
            piv = max(vec, key=_term_key)
            row = self.rows.get(piv)
            if row is None:
                inv = fp_inv(vec[piv], p)
                self.rows[piv] = {k: (inv * v) % p for k, v in vec.items()}
                return True
            c = vec[piv]
            for k, v in row.items():
                nv = (vec.get(k, 0) - c * v) % p
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def partitions_max_parts(total: int, max_parts: int):
    """Partitions of ``total`` into at most ``max_parts`` parts."""
    def rec(remaining: int, largest: int, parts: int, prefix: list):
        if remaining == 0:
            yield tuple(prefix)
            return
        if parts == 0:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, parts - 1, prefix)
            prefix.pop()

    yield from rec(total, total, max_parts, [])


def symmetric_basis(m: int, n: int, p: int, d: int) -> list[Poly]:
    """Products m_lambda(x) m_mu(y) spanning the block-symmetric degree d."""
    ring = Ring(m, n, False, p)
    basis = []
    for dx in range(d + 1):
        for lam in partitions_max_parts(dx, m):
            for mu in partitions_max_parts(d - dx, n):
                basis.append(orbit_sym(lam, Block.X, ring) * orbit_sym(mu, Block.Y, ring))
    return basis


def as_dimension(m: int, n: int, p: int, d: int) -> int:
    """Dimension of the degree d piece of the supersymmetric algebra."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    basis = symmetric_basis(m, n, p, d)
    if m == 0 or n == 0:
        return len(basis)
    ech = FpEchelon(p)
    rank = 0
    for f in basis:
        if ech.add(d_dT(psi(f)).terms):
            rank += 1
    return len(basis) - rank


def generated_dimension(m: int, n: int, p: int, d: int) -> int:
    """Dimension of the span of generator monomial expansions at degree d."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    return gen_span(m, n, p, d).dimension


@dataclass(frozen=True)
class DimReport:
    """Per degree comparison of the two dimension computations."""

    m: int
    n: int
    p: int
    degree: int
    dim_as: int
    dim_generated: int

    @property
    def match(self) -> bool:
        return self.dim_as == self.dim_generated


def dim_grid(m: int, n: int, p: int, dmax: int) -> list[DimReport]:
    return [
        DimReport(m, n, p, d, as_dimension(m, n, p, d), generated_dimension(m, n, p, d))
        for d in range(dmax + 1)
    ]


def dim_reports_to_csv(reports: list[DimReport]) -> str:
    lines = ["m,n,p,d,dim_As,dim_generated,match"]
    for r in reports:
        lines.append(
            f"{r.m},{r.n},{r.p},{r.degree},{r.dim_as},{r.dim_generated},"
            + ("true" if r.match else "false")
        )
    return "\n".join(lines)


# -- generating function cross-check ------------------------------------------


def cr_generating_check(m: int, n: int, p: int, R: int) -> bool:
    """Verify sum_r c_r t^r * prod_j (1 + y_j t) = prod_i (1 + x_i t)
    through degree R in t, with T playing the role of t."""
    if R < m + n:
        raise ValueError("truncation order must be at least m + n")
    ring = Ring(m, n, True, p)
    series = zero(ring)
    for r in range(R + 1):
        series = series + c_r(r, ring) * t_power(ring, r)
    lhs = series
    for j in range(1, n + 1):
        lhs = lhs * (one(ring) + y_var(ring, j) * t_power(ring, 1))
    rhs = one(ring)
    for i in range(1, m + 1):
        rhs = rhs * (one(ring) + x_var(ring, i) * t_power(ring, 1))
    return _truncate_t(lhs, R) == _truncate_t(rhs, R)


def _truncate_t(f: Poly, R: int) -> Poly:
    return Poly(f.ring, {e: c for e, c in f.terms.items() if e[-1] <= R})


# -- bracket substitution identities -------------------------------------------


def bracket_identity_check(
    delta: DeltaSeq,
    l: int | None,
    j: int,
    m: int,
    n: int,
    ks: KSeq,
    variant: str = "brace",
) -> bool:
    """Check one bracket substitution identity up to the kernel of d/dT.

    For the brace family the image of {delta, l, j} at level (m, n)
    under x_m = y_n = T matches
    T^k {delta, l, j-1} + T^((l+1)(p-k)) [delta, j] + T^(l(p-k)) [delta, j-1]
    + sum over the support (T^(k_i) {delta-i, l, j-1} + T^(k_{i-1}) {delta-i, l, j}),
    all at level (m-1, n-1).  The round variant (l is ignored) matches
    T^k (delta, j-1) + T^(s(p-k)) [delta, j]
    + sum (T^(k_i) (delta-i, j-1) + T^(k_{i-1}) (delta-i, j) + T^((s-i)(p-k)) [delta-i, j]).
    """
    p, k, s = ks.p, ks.k, ks.s
    ring = Ring(m, n, False, p)
    ring_t = Ring(m - 1, n - 1, True, p)

    def tp(e: int) -> Poly:
        return t_power(ring_t, e)

    if variant == "brace":
        if l is None:
            raise ValueError("the brace identity needs l")
        lhs = psi(bracket_brace(delta, l, j, ks, ring))
        rhs = tp(k) * bracket_brace(delta, l, j - 1, ks, ring_t)
        rhs = rhs + tp((l + 1) * (p - k)) * bracket_square(delta, j, ks, ring_t)
        rhs = rhs + tp(l * (p - k)) * bracket_square(delta, j - 1, ks, ring_t)
        for i in delta.support:
            smaller = delta.remove(i)
            rhs = rhs + tp(ks.k_i(i)) * bracket_brace(smaller, l, j - 1, ks, ring_t)
            rhs = rhs + tp(ks.k_i(i - 1)) * bracket_brace(smaller, l, j, ks, ring_t)
    elif variant == "round":
        lhs = psi(bracket_round(delta, j, ks, ring))
        rhs = tp(k) * bracket_round(delta, j - 1, ks, ring_t)
        rhs = rhs + tp(s * (p - k)) * bracket_square(delta, j, ks, ring_t)
        for i in delta.support:
            smaller = delta.remove(i)
            rhs = rhs + tp(ks.k_i(i)) * bracket_round(smaller, j - 1, ks, ring_t)
            rhs = rhs + tp(ks.k_i(i - 1)) * bracket_round(smaller, j, ks, ring_t)
            rhs = rhs + tp((s - i) * (p - k)) * bracket_square(smaller, j, ks, ring_t)
    else:
        raise ValueError(f"unknown identity variant {variant!r}")
    return d_dT(lhs - rhs).is_zero


def psi_w_check(m: int, n: int, ks: KSeq) -> bool:
    """Check that the image of w under x_m = y_n = T collapses, modulo
    the kernel of d/dT, to (-1)^(s+1) s T^(p-k) [empty, 0] one level down."""
    p, k, s = ks.p, ks.k, ks.s
    ring = Ring(m, n, False, p)
    ring_t = Ring(m - 1, n - 1, True, p)
    lhs = psi(w_poly(ks, ring))
    sign = 1 if (s + 1) % 2 == 0 else -1
    rhs = (
        (sign * s)
        * t_power(ring_t, p - k)
        * bracket_square(DeltaSeq(()), 0, ks, ring_t)
    )
    return d_dT(lhs - rhs).is_zero
