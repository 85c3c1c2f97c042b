"""Named generator families and the explicit lift construction.

Four polynomial families generate the algebra:

* ``c_r``: the alternating convolution of elementary symmetric functions
  of the x block with complete homogeneous functions of the y block,
  c_r = sum_{i} (-1)^(r-i) sigma_i(x) h_{r-i}(y).
* ``sigma_x_p`` / ``sigma_y_p``: p-th powers of elementary symmetric
  polynomials of one block.
* ``u_k``: the core product (x_1...x_m)^k (y_1...y_n)^(p-k).

On top of these sits the combinatorial apparatus that lifts the core
u_k(m-1|n) to a supersymmetric polynomial v_k at level (m, n): exponent
sequences (KSeq), nondecreasing index sequences (DeltaSeq), and three
bracket families built from placed symmetrizations.

A bracket is a product of two "placed" symmetric sums.  Each placed sum
is described by slot families (value, count): monomials are obtained by
assigning all slots to distinct variables of the block, where slots of
the same family are interchangeable but slots of different families are
distinguished even when their exponent values happen to coincide.  In
the generic case this is exactly the monomial symmetric function; when
two families carry equal values (which happens only for k = p-1) the
colliding monomials pick up integer multiplicities.  Those
multiplicities are essential: with plain orbit sums the lift identities
fail at k = p-1, with placed sums they hold for every 0 < k < p.
Zero-valued slots still occupy a variable, which matters when the tail
exponent k_p vanishes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalInvariantViolation
from .poly_core import Poly, Ring, fp_inv, monomial, zero
from .symfun import Block, block_span, complete, elementary


# -- exponent bookkeeping -------------------------------------------------


@dataclass(frozen=True)
class KSeq:
    """Derived exponents for a fixed 0 < k < p.

    s = ceil(k / (p-k)); k_i = (i+1)k - ip for 0 <= i < s; and the tail
    exponent kp = sp - (s+1)k.  The relations k_i + (p-k) = k_{i-1},
    kp + k = s(p-k) and k_i + kp = (s-i)(p-k) drive every bracket
    identity below and are asserted at construction.
    """

    p: int
    k: int
    s: int
    kvals: tuple
    kp: int

    def k_i(self, i: int) -> int:
        return self.kvals[i]


def kseq(p: int, k: int) -> KSeq:
    """Build and validate the exponent data for 0 < k < p."""
    if not 0 < k < p:
        raise ValueError(f"k must satisfy 0 < k < p, got k={k}, p={p}")
    s = -(-k // (p - k))  # ceil(k / (p - k))
    kvals = tuple((i + 1) * k - i * p for i in range(s))
    kp = s * p - (s + 1) * k
    ks = KSeq(p, k, s, kvals, kp)
    _validate_kseq(ks)
    return ks


def _validate_kseq(ks: KSeq):
    p, k, s, kvals, kp = ks.p, ks.k, ks.s, ks.kvals, ks.kp
    checks = [
        s >= 1,
        s < p,
        len(kvals) == s,
        all(v > 0 for v in kvals),
        kvals[0] == k,
        kp >= 0,
        kp + k == s * (p - k),
        all(kvals[i] + (p - k) == kvals[i - 1] for i in range(1, s)),
        all(kvals[i] + kp == (s - i) * (p - k) for i in range(s)),
    ]
    if not all(checks):
        raise InternalInvariantViolation(f"exponent relations failed for {ks}")


@dataclass(frozen=True)
class DeltaSeq:
    """Nondecreasing sequence of indices in [1, s-1] with length below s."""

    entries: tuple

    def __post_init__(self):
        if any(self.entries[i] > self.entries[i + 1] for i in range(len(self.entries) - 1)):
            raise ValueError("entries must be nondecreasing")
        if any(e < 1 for e in self.entries):
            raise ValueError("entries must be positive")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def weight(self) -> int:
        return sum(self.entries)

    @property
    def support(self) -> tuple:
        return tuple(sorted(set(self.entries)))

    def remove(self, i: int) -> "DeltaSeq":
        """Drop one occurrence of the value i."""
        entries = list(self.entries)
        entries.remove(i)
        return DeltaSeq(tuple(entries))

    def __repr__(self):
        return f"Delta{self.entries}"


EMPTY_DELTA = DeltaSeq(())


def enumerate_deltas(s: int, max_weight: int | None = None) -> list[DeltaSeq]:
    """All sequences for the given s, with weight at most max_weight.

    Entries range over [1, s-1] and lengths over [0, s-1]; the empty
    sequence is always included.  With max_weight None the full finite
    set is returned, ordered by (weight, length, entries).
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if max_weight is None:
        max_weight = (s - 1) * (s - 1)
    found = []

    def rec(prefix: list, low: int, weight: int):
        found.append(DeltaSeq(tuple(prefix)))
        if len(prefix) >= s - 1:
            return
        for v in range(low, s):
            if weight + v > max_weight:
                break
            prefix.append(v)
            rec(prefix, v, weight + v)
            prefix.pop()

    rec([], 1, 0)
    return sorted(found, key=lambda d: (d.weight, d.size, d.entries))


# -- placed symmetrization -------------------------------------------------


def placed_sym(families, block: Block, ring: Ring) -> Poly:
    """Sum over assignments of slot families to distinct block variables.

    ``families`` is a sequence of (value, count) pairs.  Families with
    count 0 are skipped; if the remaining slots outnumber the block's
    variables the sum is empty.  Families are never merged, so equal
    values in different families contribute multiplicities, and a
    zero-valued slot still occupies a variable.
    """
    off, size = block_span(ring, block)
    fams = [(v, c) for v, c in families if c > 0]
    if any(v < 0 for v, _ in fams):
        raise ValueError("slot values must be nonnegative")
    if sum(c for _, c in fams) > size:
        return zero(ring)
    terms: dict[tuple, int] = {}
    nvars = ring.nvars
    p = ring.p

    def rec(fi: int, free: tuple, exps: list):
        if fi == len(fams):
            key = tuple(exps)
            terms[key] = (terms.get(key, 0) + 1) % p
            return
        value, count = fams[fi]
        for combo in itertools.combinations(free, count):
            chosen = set(combo)
            for v in combo:
                exps[off + v] += value
            rec(fi + 1, tuple(v for v in free if v not in chosen), exps)
            for v in combo:
                exps[off + v] -= value
    rec(0, tuple(range(size)), [0] * nvars)
    return Poly(ring, terms)


# -- the generator families ------------------------------------------------


def c_r(r: int, ring: Ring) -> Poly:
    """sum_{0 <= i <= min(r, m)} (-1)^(r-i) sigma_i(x) h_(r-i)(y)."""
    if r < 0:
        raise ValueError("index must be nonnegative")
    out = zero(ring)
    for i in range(0, min(r, ring.m) + 1):
        sign = 1 if (r - i) % 2 == 0 else -1
        out = out + sign * (elementary(i, Block.X, ring) * complete(r - i, Block.Y, ring))
    return out


def sigma_x_p(i: int, ring: Ring) -> Poly:
    """p-th power of the i-th elementary symmetric polynomial in x."""
    if not 1 <= i <= ring.m:
        raise ValueError(f"index {i} out of range for m={ring.m}")
    return elementary(i, Block.X, ring) ** ring.p


def sigma_y_p(j: int, ring: Ring) -> Poly:
    """p-th power of the j-th elementary symmetric polynomial in y."""
    if not 1 <= j <= ring.n:
        raise ValueError(f"index {j} out of range for n={ring.n}")
    return elementary(j, Block.Y, ring) ** ring.p


def u_k(k: int, ring: Ring) -> Poly:
    """(x_1...x_m)^k (y_1...y_n)^(p-k) for 0 < k < p; needs n >= 1."""
    p = ring.p
    if not 0 < k < p:
        raise ValueError(f"k must satisfy 0 < k < p, got {k}")
    if ring.n < 1:
        raise ValueError("u_k needs at least one y variable")
    exps = [k] * ring.m + [p - k] * ring.n
    if ring.has_t:
        exps.append(0)
    return monomial(ring, exps)


# -- bracket families --------------------------------------------------------
#
# All three brackets live at the level (M, N) = (ring.m, ring.n) of the
# ring they are built in.  Out-of-range index combinations yield the
# zero polynomial, which is what makes the extended summation ranges in
# w_poly legitimate.


def _delta_x_families(delta: DeltaSeq, ks: KSeq):
    if delta.size and max(delta.entries) > ks.s - 1:
        raise ValueError(f"{delta} has entries outside [1, s-1] for s={ks.s}")
    return [(ks.k_i(i), delta.entries.count(i)) for i in delta.support]


def bracket_round(delta: DeltaSeq, j: int, ks: KSeq, ring: Ring) -> Poly:
    """x slots: k repeated (M-t) with the delta exponents; y slots:
    (p-k) repeated (N-j-1) and one tail slot kp.  Zero unless
    0 <= t <= M and 0 <= j < N."""
    M, N = ring.m, ring.n
    t = delta.size
    if not (0 <= t <= M and 0 <= j < N):
        return zero(ring)
    xpart = placed_sym([(ks.k, M - t)] + _delta_x_families(delta, ks), Block.X, ring)
    ypart = placed_sym([(ks.p - ks.k, N - j - 1), (ks.kp, 1)], Block.Y, ring)
    return xpart * ypart


def bracket_square(delta: DeltaSeq, j: int, ks: KSeq, ring: Ring) -> Poly:
    """Like the round bracket but with a plain (p-k) tail of length N-j.
    Zero unless 0 <= t <= M and 0 <= j <= N; j = N empties the y part."""
    M, N = ring.m, ring.n
    t = delta.size
    if not (0 <= t <= M and 0 <= j <= N):
        return zero(ring)
    xpart = placed_sym([(ks.k, M - t)] + _delta_x_families(delta, ks), Block.X, ring)
    ypart = placed_sym([(ks.p - ks.k, N - j)], Block.Y, ring)
    return xpart * ypart


def bracket_brace(delta: DeltaSeq, l: int, j: int, ks: KSeq, ring: Ring) -> Poly:
    """x slots: k repeated (M-t-1), one slot l(p-k), the delta exponents;
    y slots: (p-k) repeated (N-j).  Zero unless 0 <= t < M and
    0 <= j <= N; any l >= 0 is allowed."""
    M, N = ring.m, ring.n
    t = delta.size
    if l < 0:
        raise ValueError("l must be nonnegative")
    if not (0 <= t < M and 0 <= j <= N):
        return zero(ring)
    xfams = [(ks.k, M - t - 1), (l * (ks.p - ks.k), 1)] + _delta_x_families(delta, ks)
    xpart = placed_sym(xfams, Block.X, ring)
    ypart = placed_sym([(ks.p - ks.k, N - j)], Block.Y, ring)
    return xpart * ypart


# -- the lift ---------------------------------------------------------------


def w_poly(ks: KSeq, ring: Ring) -> Poly:
    """The signed double sum of brackets whose x_m = y_n = T image
    collapses, modulo the kernel of d/dT, to a single bracket term.

    Both sums run over every delta sequence; the zero conventions of the
    bracket constructors prune the out-of-range combinations.
    """
    if ring.m < 1 or ring.n < 1:
        raise ValueError("w needs m >= 1 and n >= 1")
    s = ks.s
    deltas = enumerate_deltas(s)
    total = zero(ring)
    for l in range(1, s):
        for delta in deltas:
            sign = 1 if (delta.weight + s + l) % 2 == 0 else -1
            coeff = sign * (s - l)
            total = total + coeff * bracket_brace(delta, l, l - delta.weight, ks, ring)
    for delta in deltas:
        sign = 1 if delta.weight % 2 == 0 else -1
        total = total + sign * bracket_round(delta, s - 1 - delta.weight, ks, ring)
    return total


def v_k(ks: KSeq, ring: Ring) -> Poly:
    """Supersymmetric lift of the core u_k(m-1|n) to level (m, n).

    v = ((-1)^s / s) w + Sym_m(x^k repeated m-1) (y_1...y_n)^(p-k).
    It is block symmetric, homogeneous of degree (m-1)k + (p-k)n, its
    x_m = y_n = T image is killed by d/dT, and setting x_m = 0 recovers
    u_k(m-1|n) exactly.  Invertibility of s uses s < p.
    """
    if ring.m < 1 or ring.n < 1:
        raise ValueError("v_k needs m >= 1 and n >= 1")
    p = ring.p
    sign = 1 if ks.s % 2 == 0 else -1
    scalar = (sign * fp_inv(ks.s, p)) % p
    head = scalar * w_poly(ks, ring)
    yexps = [0] * ring.m + [p - ks.k] * ring.n
    if ring.has_t:
        yexps.append(0)
    tail = placed_sym([(ks.k, ring.m - 1)], Block.X, ring) * monomial(ring, yexps)
    return head + tail


def make_v(p: int, k: int, m: int, n: int) -> Poly:
    """Convenience wrapper: v_k at level (m, n) over F_p."""
    return v_k(kseq(p, k), Ring(m, n, False, p))


@lru_cache(maxsize=None)
def _cached_generator(ring: Ring, kind: str, index: int) -> Poly:
    if kind == "C":
        return c_r(index, ring)
    if kind == "EX":
        return sigma_x_p(index, ring)
    if kind == "EY":
        return sigma_y_p(index, ring)
    if kind == "U":
        return u_k(index, ring)
    raise ValueError(f"unknown generator kind {kind!r}")


def generator_poly(kind: str, index: int, ring: Ring) -> Poly:
    """Memoized concrete polynomial for a generator symbol."""
    return _cached_generator(ring, kind, index)
