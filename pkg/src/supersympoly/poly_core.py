"""Exact sparse multivariate polynomials over a prime field F_p.

A polynomial lives in a fixed :class:`Ring` that describes two blocks of
variables, x_1..x_m and y_1..y_n, plus an optional auxiliary variable T.
Terms are stored as a dict mapping flat exponent tuples (x block, then
y block, then T) to nonzero residues in [1, p).  The zero polynomial has
an empty term dict, so equality is plain structural equality of the
canonical form.

Every value is immutable after construction and every operation returns
a fresh Poly, which makes sharing across threads safe.  There is no
global mutable state in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DivisibilityError, PolyParseError, RingMismatchError


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def fp_inv(a: int, p: int) -> int:
    """Multiplicative inverse of a nonzero residue mod p."""
    return pow(a % p, -1, p)


@dataclass(frozen=True)
class Ring:
    """Variable layout (m x-variables, n y-variables, optional T) over F_p."""

    m: int
    n: int
    has_t: bool
    p: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("variable counts must be nonnegative")
        if not is_odd_prime(self.p):
            raise ValueError(f"characteristic must be an odd prime, got {self.p}")

    @property
    def nvars(self) -> int:
        return self.m + self.n + (1 if self.has_t else 0)

    def var_names(self) -> list[str]:
        names = [f"x{i}" for i in range(1, self.m + 1)]
        names += [f"y{j}" for j in range(1, self.n + 1)]
        if self.has_t:
            names.append("T")
        return names


def _term_key(exps: tuple) -> tuple:
    # graded lexicographic: total degree first, then the exponent tuple
    return (sum(exps), exps)


class Poly:
    """Immutable sparse polynomial attached to a Ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[tuple, int]):
        clean = {}
        nvars = ring.nvars
        p = ring.p
        for exps, c in terms.items():
            c %= p
            if c:
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent tuple {exps} does not fit ring with {nvars} variables"
                    )
                clean[tuple(exps)] = c
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("Poly is immutable")

    # -- basic queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading(self) -> tuple[tuple, int]:
        """(exponents, coefficient) of the graded-lex largest term."""
        exps = max(self.terms, key=_term_key)
        return exps, self.terms[exps]

    def coefficient(self, exps: tuple) -> int:
        return self.terms.get(tuple(exps), 0)

    # -- arithmetic ----------------------------------------------------

    def _require_same_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = constant(self.ring, other)
        self._require_same_ring(other)
        out = dict(self.terms)
        p = self.ring.p
        for exps, c in other.terms.items():
            nc = (out.get(exps, 0) + c) % p
            if nc:
                out[exps] = nc
            else:
                out.pop(exps, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        self._require_same_ring(other)
        p = self.ring.p
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                out[exps] = (out.get(exps, 0) + c1 * c2) % p
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if e == 0:
            return one(self.ring)
        if self.is_zero:
            return self
        # In characteristic p the p-th power map just scales exponents,
        # so split e into base-p digits and use Frobenius per digit.
        p = self.ring.p
        result = one(self.ring)
        base = self
        rem = e
        while rem:
            digit = rem % p
            if digit:
                result = result * _small_pow(base, digit)
            rem //= p
            if rem:
                base = frobenius(base)
        return result

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return f"Poly({self.ring.m},{self.ring.n},p={self.ring.p}: {poly_to_str(self)})"


def _small_pow(f: Poly, e: int) -> Poly:
    result = one(f.ring)
    base = f
    while e:
        if e & 1:
            result = result * base
        base = base * base if e > 1 else base
        e >>= 1
    return result


def frobenius(f: Poly, i: int = 1) -> Poly:
    """Raise to the p^i-th power by scaling exponents (valid over F_p)."""
    scale = f.ring.p**i
    return Poly(f.ring, {tuple(a * scale for a in e): c for e, c in f.terms.items()})


# -- constructors -------------------------------------------------------


def zero(ring: Ring) -> Poly:
    return Poly(ring, {})


def one(ring: Ring) -> Poly:
    return constant(ring, 1)


def constant(ring: Ring, c: int) -> Poly:
    return Poly(ring, {(0,) * ring.nvars: c % ring.p})


def monomial(ring: Ring, exps: Iterable[int], coeff: int = 1) -> Poly:
    return Poly(ring, {tuple(exps): coeff})


def _unit_exps(ring: Ring, slot: int, e: int = 1) -> tuple:
    exps = [0] * ring.nvars
    exps[slot] = e
    return tuple(exps)


def x_var(ring: Ring, i: int) -> Poly:
    """The variable x_i, 1-based."""
    if not 1 <= i <= ring.m:
        raise ValueError(f"x{i} is not a variable of {ring}")
    return Poly(ring, {_unit_exps(ring, i - 1): 1})


def y_var(ring: Ring, j: int) -> Poly:
    """The variable y_j, 1-based."""
    if not 1 <= j <= ring.n:
        raise ValueError(f"y{j} is not a variable of {ring}")
    return Poly(ring, {_unit_exps(ring, ring.m + j - 1): 1})


def t_var(ring: Ring) -> Poly:
    if not ring.has_t:
        raise ValueError(f"{ring} has no T variable")
    return Poly(ring, {_unit_exps(ring, ring.nvars - 1): 1})


def t_power(ring: Ring, e: int) -> Poly:
    if not ring.has_t:
        raise ValueError(f"{ring} has no T variable")
    return Poly(ring, {_unit_exps(ring, ring.nvars - 1, e): 1})


# -- structural operations ----------------------------------------------


def substitute(f: Poly, target_ring: Ring, images: list[Poly]) -> Poly:
    """Apply the ring morphism sending each source variable to its image.

    ``images`` lists one target polynomial per source variable, in the
    flat order x_1..x_m, y_1..y_n, then T if present.
    """
    if len(images) != f.ring.nvars:
        raise ValueError(
            f"expected {f.ring.nvars} images, got {len(images)}"
        )
    for img in images:
        if img.ring != target_ring:
            raise RingMismatchError("image polynomial not in the target ring")
    out = zero(target_ring)
    power_cache: dict[tuple[int, int], Poly] = {}
    for exps, c in f.terms.items():
        term = constant(target_ring, c)
        for idx, e in enumerate(exps):
            if e:
                key = (idx, e)
                pw = power_cache.get(key)
                if pw is None:
                    pw = images[idx] ** e
                    power_cache[key] = pw
                term = term * pw
        out = out + term
    return out


def psi(f: Poly) -> Poly:
    """Substitute x_m = y_n = T, mapping (m, n) into (m-1, n-1, T)."""
    ring = f.ring
    if ring.has_t:
        raise ValueError("psi expects a polynomial without T")
    if ring.m < 1 or ring.n < 1:
        raise ValueError("psi needs at least one variable in each block")
    target = Ring(ring.m - 1, ring.n - 1, True, ring.p)
    m, n, p = ring.m, ring.n, ring.p
    out: dict[tuple, int] = {}
    for exps, c in f.terms.items():
        ne = exps[: m - 1] + exps[m : m + n - 1] + (exps[m - 1] + exps[m + n - 1],)
        out[ne] = (out.get(ne, 0) + c) % p
    return Poly(target, out)


def d_dT(g: Poly) -> Poly:
    """Formal derivative in T; kills T-exponents divisible by p."""
    ring = g.ring
    if not ring.has_t:
        raise ValueError("d_dT needs a ring with T")
    p = ring.p
    out: dict[tuple, int] = {}
    for exps, c in g.terms.items():
        e = exps[-1]
        if e:
            nc = (c * e) % p
            if nc:
                out[exps[:-1] + (e - 1,)] = nc
    return Poly(ring, out)


def set_xm_zero(f: Poly) -> Poly:
    """Restrict x_m = 0, re-housing the result at (m-1, n)."""
    ring = f.ring
    if ring.m < 1:
        raise ValueError("set_xm_zero needs m >= 1")
    target = Ring(ring.m - 1, ring.n, ring.has_t, ring.p)
    m = ring.m
    out = {}
    for exps, c in f.terms.items():
        if exps[m - 1] == 0:
            out[exps[: m - 1] + exps[m:]] = c
    return Poly(target, out)


def set_yn_zero(f: Poly) -> Poly:
    """Restrict y_n = 0, re-housing the result at (m, n-1)."""
    ring = f.ring
    if ring.n < 1:
        raise ValueError("set_yn_zero needs n >= 1")
    target = Ring(ring.m, ring.n - 1, ring.has_t, ring.p)
    slot = ring.m + ring.n - 1
    out = {}
    for exps, c in f.terms.items():
        if exps[slot] == 0:
            out[exps[:slot] + exps[slot + 1 :]] = c
    return Poly(target, out)


def extend_with_t(f: Poly) -> Poly:
    """Embed a T-free polynomial into the same ring with T adjoined."""
    ring = f.ring
    if ring.has_t:
        raise ValueError("polynomial already has T")
    target = Ring(ring.m, ring.n, True, ring.p)
    return Poly(target, {e + (0,): c for e, c in f.terms.items()})


def exact_monomial_div(f: Poly, divisor: Iterable[int]) -> Poly:
    """Divide every term by the monomial with the given exponents."""
    d = tuple(divisor)
    if len(d) != f.ring.nvars:
        raise ValueError("divisor exponent tuple has the wrong length")
    out = {}
    for exps, c in f.terms.items():
        if any(a < b for a, b in zip(exps, d)):
            raise DivisibilityError(
                f"term with exponents {exps} is not divisible by {d}"
            )
        out[tuple(a - b for a, b in zip(exps, d))] = c
    return Poly(f.ring, out)


def homogeneous_components(f: Poly) -> list[tuple[int, Poly]]:
    """Split into homogeneous parts, listed by strictly increasing degree."""
    buckets: dict[int, dict] = {}
    for exps, c in f.terms.items():
        buckets.setdefault(sum(exps), {})[exps] = c
    return [(d, Poly(f.ring, t)) for d, t in sorted(buckets.items())]


# -- text form -----------------------------------------------------------

_SLOT_NAME_CACHE: dict[Ring, list[str]] = {}


def poly_to_str(f: Poly) -> str:
    """Canonical text form: graded-lex descending, residues in [0, p)."""
    if f.is_zero:
        return "0"
    names = _SLOT_NAME_CACHE.get(f.ring)
    if names is None:
        names = f.ring.var_names()
        _SLOT_NAME_CACHE[f.ring] = names
    parts = []
    for exps in sorted(f.terms, key=_term_key, reverse=True):
        c = f.terms[exps]
        factors = []
        for slot, e in enumerate(exps):
            if e == 1:
                factors.append(names[slot])
            elif e > 1:
                factors.append(f"{names[slot]}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(str(c) + "*" + "*".join(factors))
    return " + ".join(parts)


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif ch in "xy":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError(f"variable '{ch}' needs an index at position {i}")
            tokens.append(("var", (ch, int(text[i + 1 : j]))))
            i = j
        elif ch == "T":
            tokens.append(("var", ("T", 0)))
            i += 1
        elif ch in "+-*^":
            tokens.append((ch, None))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse the CLI polynomial grammar into a Poly of the given ring.

    Grammar: terms separated by + or -, each term an optional integer
    coefficient and '*'-joined factors, each factor a variable with an
    optional '^' power.  A sign is also allowed before the first term.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def var_slot(v):
        kind, idx = v
        if kind == "x":
            if not 1 <= idx <= ring.m:
                raise PolyParseError(f"x{idx} out of range for m={ring.m}")
            return idx - 1
        if kind == "y":
            if not 1 <= idx <= ring.n:
                raise PolyParseError(f"y{idx} out of range for n={ring.n}")
            return ring.m + idx - 1
        if not ring.has_t:
            raise PolyParseError("T is not a variable of this ring")
        return ring.nvars - 1

    def parse_factor(exps):
        nonlocal pos
        kind, val = peek()
        if kind != "var":
            raise PolyParseError("expected a variable")
        slot = var_slot(val)
        pos += 1
        e = 1
        if peek()[0] == "^":
            pos += 1
            kind, val = peek()
            if kind != "int":
                raise PolyParseError("expected an integer exponent after '^'")
            e = val
            pos += 1
        exps[slot] += e

    terms: dict[tuple, int] = {}
    sign = 1
    kind, _ = peek()
    if kind in ("+", "-"):
        sign = -1 if kind == "-" else 1
        pos += 1
    if pos >= len(tokens):
        raise PolyParseError("empty polynomial text")
    while True:
        coeff = 1
        exps = [0] * ring.nvars
        kind, val = peek()
        if kind == "int":
            coeff = val
            pos += 1
            while peek()[0] == "*":
                pos += 1
                parse_factor(exps)
        elif kind == "var":
            parse_factor(exps)
            while peek()[0] == "*":
                pos += 1
                parse_factor(exps)
        else:
            raise PolyParseError("expected a term")
        key = tuple(exps)
        terms[key] = (terms.get(key, 0) + sign * coeff) % ring.p
        kind, _ = peek()
        if kind is None:
            break
        if kind not in ("+", "-"):
            raise PolyParseError(f"expected '+' or '-', found {kind!r}")
        sign = -1 if kind == "-" else 1
        pos += 1
        if pos >= len(tokens):
            raise PolyParseError("dangling sign at end of input")
    return Poly(ring, terms)
