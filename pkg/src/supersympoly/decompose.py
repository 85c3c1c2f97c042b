"""Constructive decomposition over the generator families.

Any supersymmetric polynomial is rewritten as a GenExpr in C, EX, EY
and U symbols.  The algorithm follows the recursion behind the generator
property: restrict x_m to 0, decompose the restriction one level down,
lift the result back (sending each U[k] to the explicit lift polynomial
v_k, which restricts to the core u_k one level down), and subtract.
The residue vanishes under the restriction, so its variable cores can
be peeled off as products of EX[m], EY[n] and U[k] symbols whenever the
peeled core degree is a multiple of p, and the cofactor is again
supersymmetric of lower degree.

Two corner cases need more than the recursion:

* The residue's maximal core (a, b) can have a + b below p and not a
  multiple of p (for example x1^3 + x1*y1^2 at level (1, 1), p = 3,
  whose residue is forced to be the input itself).  No core can be
  peeled then; the residue is written directly in the span of all
  generator monomials of its degree by exact linear algebra.
* Expressing v_k itself over the generators through the recursion would
  be self referential (its restriction decomposes to the bare symbol
  U[k], whose lift is v_k again), so the v_k certificates also come
  from the span solver, once per (m, n, p, k).

Every certificate is verifiable by expansion; nothing in this module
depends on unverified claims.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass, field

from .errors import (
    InternalInvariantViolation,
    NotSupersymmetricError,
    ZeroPolynomialError,
)
from .genexpr import GenExpr, expand, expand_key, gen_span
from .generators import kseq, v_k
from .poly_core import (
    Poly,
    Ring,
    exact_monomial_div,
    homogeneous_components,
    set_xm_zero,
)
from .supersym import is_supersymmetric
from .symfun import Block, Family, rewrite_symmetric


@dataclass(frozen=True)
class CoreFactorization:
    """f = (x_1...x_m)^a (y_1...y_n)^b * cofactor with maximal a and b."""

    a: int
    b: int
    cofactor: Poly


def factor_core(f: Poly) -> CoreFactorization:
    """Peel the maximal symmetric variable cores off a nonzero polynomial."""
    if f.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    ring = f.ring
    m, n = ring.m, ring.n
    a = min(min(e[:m]) for e in f.terms) if m else 0
    b = min(min(e[m : m + n]) for e in f.terms) if n else 0
    core = _core_exponents(ring, a, b)
    return CoreFactorization(a, b, exact_monomial_div(f, core))


def _core_exponents(ring: Ring, a: int, b: int) -> tuple:
    exps = [a] * ring.m + [b] * ring.n
    if ring.has_t:
        exps.append(0)
    return tuple(exps)


def core_to_generators(a: int, b: int, p: int, m: int, n: int) -> GenExpr:
    """Write the core (x_1..x_m)^a (y_1..y_n)^b over EX[m], EY[n], U.

    Requires a + b divisible by p.  With a = alpha*p + k0: for k0 = 0
    the core is EX[m]^alpha * EY[n]^(b/p); otherwise one U[k0] absorbs
    the off-multiple parts and the remaining y core is a p-th power.
    """
    if a < 0 or b < 0:
        raise ValueError("core exponents must be nonnegative")
    if (a + b) % p:
        raise ValueError(f"core degree a+b = {a + b} is not divisible by p = {p}")
    alpha, k0 = divmod(a, p)
    out = GenExpr.const(m, n, p, 1)
    if alpha:
        out = out * GenExpr.symbol(m, n, p, "EX", m, alpha)
    if k0 == 0:
        beta = b // p
    else:
        if n < 1:
            raise ValueError("a core with k0 > 0 needs a y block")
        out = out * GenExpr.symbol(m, n, p, "U", k0)
        beta = (b - (p - k0)) // p
    if beta:
        out = out * GenExpr.symbol(m, n, p, "EY", n, beta)
    return out


# -- v_k certificates ---------------------------------------------------------

_VK_CACHE: dict[tuple, GenExpr] = {}
_VK_LOCK = threading.Lock()


def vk_gen_expr(m: int, n: int, p: int, k: int) -> GenExpr:
    """GenExpr certificate for v_k at level (m, n), solved once and cached."""
    key = (m, n, p, k)
    cached = _VK_CACHE.get(key)
    if cached is not None:
        return cached
    ring = Ring(m, n, False, p)
    v = v_k(kseq(p, k), ring)
    degree = v.degree()
    expr = gen_span(m, n, p, degree).solve(v)
    if expr is None:
        raise InternalInvariantViolation(
            f"lift v_{k} at level ({m},{n}), p={p} is outside the generator span"
        )
    with _VK_LOCK:
        _VK_CACHE.setdefault(key, expr)
    return expr


# -- decomposition trace ------------------------------------------------------


@dataclass
class DecomposeTrace:
    """Observational record of one or more decomposition runs."""

    residues: list = field(default_factory=list)  # (m, n, p, degree, a, b)
    peels: list = field(default_factory=list)  # (m, n, p, a_peel, b_peel)
    span_solves: list = field(default_factory=list)  # (m, n, p, degree)
    calls: list = field(default_factory=list)  # (m, degree) per recursion entry


_TRACE = threading.local()


@contextmanager
def trace_decomposition():
    """Collect residue and peel data from decompositions run inside."""
    trace = DecomposeTrace()
    prev = getattr(_TRACE, "current", None)
    _TRACE.current = trace
    try:
        yield trace
    finally:
        _TRACE.current = prev


def _trace_event(kind: str, data):
    trace = getattr(_TRACE, "current", None)
    if trace is not None:
        getattr(trace, kind).append(data)


# -- the algorithm ------------------------------------------------------------


def decompose(f: Poly) -> GenExpr:
    """Express a supersymmetric polynomial over the generator symbols.

    The result E satisfies expand(E, f.ring) == f; it is a valid
    representation, not a canonical one.  Raises NotSupersymmetricError
    for inputs outside the algebra and InternalInvariantViolation if an
    internal step contradicts the theory (which would indicate a bug).
    """
    ring = f.ring
    if ring.has_t:
        raise ValueError("decompose applies to polynomials without T")
    verdict = is_supersymmetric(f)
    if not verdict.overall:
        raise NotSupersymmetricError(
            f"input is not supersymmetric: symmetric_x={verdict.symmetric_x}, "
            f"symmetric_y={verdict.symmetric_y}, "
            f"derivative_vanishes={verdict.derivative_vanishes}"
        )
    total = GenExpr.zero(ring.m, ring.n, ring.p)
    for _, comp in homogeneous_components(f):
        total = total + _decompose_homogeneous(comp, None)
    return total


def verify_decomposition(f: Poly, e: GenExpr) -> bool:
    """True iff the certificate expands back to f exactly."""
    return expand(e, f.ring) == f


def _decompose_homogeneous(f: Poly, parent: tuple | None) -> GenExpr:
    ring = f.ring
    m, n, p = ring.m, ring.n, ring.p
    degree = f.degree()
    key = (m, degree)
    if parent is not None and key >= parent:
        raise InternalInvariantViolation(
            f"termination metric did not decrease: {parent} -> {key}"
        )
    _trace_event("calls", key)

    if degree == 0:
        return GenExpr.const(m, n, p, next(iter(f.terms.values())))
    if m == 0:
        return _base_no_x(f)
    if n == 0:
        return _base_no_y(f)

    f0 = set_xm_zero(f)
    if f0.is_zero:
        lifted_expr = GenExpr.zero(m, n, p)
        residue = f
    else:
        h = _decompose_homogeneous(f0, key)
        lifted_poly, lifted_expr = _lift(h, ring)
        residue = f - lifted_poly
        if not set_xm_zero(residue).is_zero:
            raise InternalInvariantViolation(
                "lifted expression does not match the restriction"
            )
    if residue.is_zero:
        return lifted_expr

    cores = factor_core(residue)
    a, b = cores.a, cores.b
    _trace_event("residues", (m, n, p, degree, a, b))
    if a < 1:
        raise InternalInvariantViolation("residue is not divisible by x_m")

    peel_total = (a + b) - (a + b) % p
    if peel_total > 0:
        a_peel = min(a, peel_total)
        b_peel = peel_total - a_peel
        cofactor = exact_monomial_div(residue, _core_exponents(ring, a_peel, b_peel))
        if not is_supersymmetric(cofactor).overall:
            raise InternalInvariantViolation(
                "core cofactor left the supersymmetric algebra"
            )
        _trace_event("peels", (m, n, p, a_peel, b_peel))
        core_expr = core_to_generators(a_peel, b_peel, p, m, n)
        return lifted_expr + core_expr * _decompose_homogeneous(cofactor, key)

    # 0 < a + b < p: no admissible core; certify through the span directly.
    expr = gen_span(m, n, p, degree).solve(residue)
    if expr is None:
        raise InternalInvariantViolation(
            f"residue at level ({m},{n}), p={p}, degree {degree} "
            "is outside the generator span"
        )
    _trace_event("span_solves", (m, n, p, degree))
    return lifted_expr + expr


def _lift(h: GenExpr, ring: Ring) -> tuple[Poly, GenExpr]:
    """Lift a level (m-1, n) certificate to level (m, n).

    C, EX and EY symbols keep their names (their level (m, n) versions
    restrict to the level (m-1, n) ones when x_m = 0), while each U[k]
    becomes the lift v_k: as a polynomial for the subtraction step, and
    as its span certificate for the returned expression.
    """
    m, n, p = ring.m, ring.n, ring.p
    poly_total = Poly(ring, {})
    expr_total = GenExpr.zero(m, n, p)
    for hkey, c in h.terms.items():
        plain = []
        poly_part = Poly(ring, {(0,) * ring.nvars: c})
        expr_part = GenExpr.const(m, n, p, c)
        for (kind, idx), e in hkey:
            if kind == "U":
                vk_poly = v_k(kseq(p, idx), ring)
                poly_part = poly_part * vk_poly**e
                expr_part = expr_part * vk_gen_expr(m, n, p, idx) ** e
            else:
                plain.append(((kind, idx), e))
        if plain:
            key = tuple(plain)
            poly_part = poly_part * expand_key(key, ring)
            expr_part = expr_part * GenExpr(m, n, p, {key: 1})
        poly_total = poly_total + poly_part
        expr_total = expr_total + expr_part
    return poly_total, expr_total


def _base_no_x(f: Poly) -> GenExpr:
    """Level (0, n): rewrite over complete symmetric functions of y.

    At this level c_r reduces to (-1)^r h_r(y), so a monomial
    h_{r_1}...h_{r_t} maps to (-1)^(r_1+...+r_t) C[r_1]...C[r_t].
    """
    ring = f.ring
    m, n, p = ring.m, ring.n, ring.p
    hexpr = rewrite_symmetric(f, Block.Y, Family.COMPLETE)
    terms = {}
    for key, c in hexpr.items():
        sign = 1 if sum(key) % 2 == 0 else -1
        gkey = _indices_to_c_key(key)
        terms[gkey] = (terms.get(gkey, 0) + sign * c) % p
    return GenExpr(m, n, p, terms)


def _base_no_y(f: Poly) -> GenExpr:
    """Level (m, 0): rewrite over elementary symmetric functions of x.

    Here c_r equals sigma_r(x), so the elementary rewrite maps straight
    onto C symbols.
    """
    ring = f.ring
    m, n, p = ring.m, ring.n, ring.p
    eexpr = rewrite_symmetric(f, Block.X, Family.ELEMENTARY)
    return GenExpr(m, n, p, {_indices_to_c_key(key): c for key, c in eexpr.items()})


def _indices_to_c_key(indices: tuple) -> tuple:
    counts: dict[int, int] = {}
    for r in indices:
        counts[r] = counts.get(r, 0) + 1
    return tuple((("C", r), e) for r, e in sorted(counts.items()))
