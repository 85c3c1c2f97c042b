"""Formal expressions in the generator symbols C, EX, EY and U.

A GenExpr is a polynomial whose variables are generator symbols at a
fixed level (m, n) over F_p: C[r] stands for c_r, EX[i] for
sigma_i(x)^p, EY[j] for sigma_j(y)^p and U[k] for the core product
u_k.  Terms map a multiset of symbols to a coefficient.  A GenExpr is a
certificate, not a normal form: the generator algebra has relations, so
different expressions may expand to the same polynomial.

GenSpan row-reduces the expansions of all symbol monomials of one
weighted degree and can write any polynomial of the spanned space as a
GenExpr, tracking the combination exactly over F_p.
"""

from __future__ import annotations

from .errors import PolyParseError
from .generators import generator_poly
from .poly_core import Poly, Ring, fp_inv, one, zero, _term_key

_KIND_RANK = {"C": 0, "EX": 1, "EY": 2, "U": 3}
_KINDS = tuple(_KIND_RANK)


def symbol_weight(kind: str, index: int, m: int, n: int, p: int) -> int:
    """Total degree of the expanded symbol."""
    if kind == "C":
        return index
    if kind == "EX" or kind == "EY":
        return p * index
    return m * index + n * (p - index)


def _validate_symbol(kind: str, index: int, m: int, n: int, p: int):
    if kind == "C":
        ok = index >= 1
    elif kind == "EX":
        ok = 1 <= index <= m
    elif kind == "EY":
        ok = 1 <= index <= n
    elif kind == "U":
        ok = 0 < index < p and n >= 1
    else:
        ok = False
    if not ok:
        raise ValueError(f"symbol {kind}[{index}] is invalid at level ({m},{n}), p={p}")


def _key_weight(key: tuple, m: int, n: int, p: int) -> int:
    return sum(symbol_weight(kind, idx, m, n, p) * e for (kind, idx), e in key)


class GenExpr:
    """Immutable formal polynomial in generator symbols at level (m, n)."""

    __slots__ = ("m", "n", "p", "terms")

    def __init__(self, m: int, n: int, p: int, terms):
        clean = {}
        for key, c in terms.items():
            c %= p
            if not c:
                continue
            parts = []
            for (kind, idx), e in key:
                if e < 0:
                    raise ValueError("symbol exponents must be nonnegative")
                if e:
                    _validate_symbol(kind, idx, m, n, p)
                    parts.append(((kind, idx), e))
            parts.sort(key=lambda s: (_KIND_RANK[s[0][0]], s[0][1]))
            clean[tuple(parts)] = (clean.get(tuple(parts), 0) + c) % p
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("GenExpr is immutable")

    @classmethod
    def zero(cls, m: int, n: int, p: int) -> "GenExpr":
        return cls(m, n, p, {})

    @classmethod
    def const(cls, m: int, n: int, p: int, c: int) -> "GenExpr":
        return cls(m, n, p, {(): c})

    @classmethod
    def symbol(cls, m: int, n: int, p: int, kind: str, index: int, exp: int = 1) -> "GenExpr":
        return cls(m, n, p, {(((kind, index), exp),): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def level(self) -> tuple[int, int]:
        return (self.m, self.n)

    def weighted_degree(self):
        if not self.terms:
            return None
        return max(_key_weight(k, self.m, self.n, self.p) for k in self.terms)

    def _require_compatible(self, other: "GenExpr"):
        if (self.m, self.n, self.p) != (other.m, other.n, other.p):
            raise ValueError("generator expressions at different levels")

    def __add__(self, other):
        if isinstance(other, int):
            other = GenExpr.const(self.m, self.n, self.p, other)
        self._require_compatible(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = (out.get(k, 0) + c) % self.p
        return GenExpr(self.m, self.n, self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return self * (self.p - 1)

    def __sub__(self, other):
        if isinstance(other, int):
            other = GenExpr.const(self.m, self.n, self.p, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GenExpr(self.m, self.n, self.p, {k: c * other for k, c in self.terms.items()})
        self._require_compatible(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            d1 = dict(k1)
            for k2, c2 in other.terms.items():
                merged = dict(d1)
                for sym, e in k2:
                    merged[sym] = merged.get(sym, 0) + e
                key = tuple(sorted(merged.items(), key=lambda s: (_KIND_RANK[s[0][0]], s[0][1])))
                out[key] = (out.get(key, 0) + c1 * c2) % self.p
        return GenExpr(self.m, self.n, self.p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = GenExpr.const(self.m, self.n, self.p, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GenExpr):
            return NotImplemented
        return (self.m, self.n, self.p, self.terms) == (other.m, other.n, other.p, other.terms)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return f"GenExpr({self.m},{self.n},p={self.p}: {serialize_gen_expr(self)})"


def expand_key(key: tuple, ring: Ring) -> Poly:
    """Concrete polynomial of one symbol monomial."""
    out = one(ring)
    for (kind, idx), e in key:
        out = out * generator_poly(kind, idx, ring) ** e
    return out


def expand(e: GenExpr, ring: Ring) -> Poly:
    """Evaluate a GenExpr to the polynomial it denotes."""
    if (ring.m, ring.n, ring.p) != (e.m, e.n, e.p) or ring.has_t:
        raise ValueError(f"ring {ring} does not match level ({e.m},{e.n}), p={e.p}")
    out = zero(ring)
    for key, c in e.terms.items():
        out = out + c * expand_key(key, ring)
    return out


# -- text form ---------------------------------------------------------------


def serialize_gen_expr(e: GenExpr) -> str:
    """Deterministic text form; weighted degree descending, then symbol order."""
    if e.is_zero:
        return "0"
    def order(key):
        return (-_key_weight(key, e.m, e.n, e.p), key)
    parts = []
    for key in sorted(e.terms, key=order):
        c = e.terms[key]
        factors = []
        for (kind, idx), exp in key:
            s = f"{kind}[{idx}]"
            if exp > 1:
                s += f"^{exp}"
            factors.append(s)
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(str(c) + "*" + "*".join(factors))
    return " + ".join(parts)


def _tokenize_gen(text: str):
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
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in _KINDS:
                raise PolyParseError(f"unknown symbol kind {word!r}")
            tokens.append(("kind", word))
            i = j
        elif ch in "[]^*+-":
            tokens.append((ch, None))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def parse_gen_expr(text: str, m: int, n: int, p: int) -> GenExpr:
    """Inverse of serialize_gen_expr (also accepts '-' separators)."""
    tokens = _tokenize_gen(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def expect(kind):
        nonlocal pos
        k, v = peek()
        if k != kind:
            raise PolyParseError(f"expected {kind!r}, found {k!r}")
        pos += 1
        return v

    def parse_factor(acc: dict):
        nonlocal pos
        kind = expect("kind")
        expect("[")
        idx = expect("int")
        expect("]")
        e = 1
        if peek()[0] == "^":
            pos += 1
            e = expect("int")
        acc[(kind, idx)] = acc.get((kind, idx), 0) + e

    terms: dict = {}
    sign = 1
    k, _ = peek()
    if k in ("+", "-"):
        sign = -1 if k == "-" else 1
        pos += 1
    if pos >= len(tokens):
        raise PolyParseError("empty generator expression")
    while True:
        coeff = 1
        acc: dict = {}
        k, v = peek()
        if k == "int":
            coeff = v
            pos += 1
            while peek()[0] == "*":
                pos += 1
                parse_factor(acc)
        elif k == "kind":
            parse_factor(acc)
            while peek()[0] == "*":
                pos += 1
                parse_factor(acc)
        else:
            raise PolyParseError("expected a term")
        key = tuple(sorted(acc.items(), key=lambda s: (_KIND_RANK[s[0][0]], s[0][1])))
        terms[key] = (terms.get(key, 0) + sign * coeff) % p
        k, _ = peek()
        if k is None:
            break
        if k not in ("+", "-"):
            raise PolyParseError(f"expected '+' or '-', found {k!r}")
        sign = -1 if k == "-" else 1
        pos += 1
        if pos >= len(tokens):
            raise PolyParseError("dangling sign at end of input")
    return GenExpr(m, n, p, terms)


# -- the generated span at one degree ----------------------------------------


def enumerate_gen_monomials(m: int, n: int, p: int, degree: int) -> list[tuple]:
    """All symbol monomials of exact weighted degree, in canonical order.

    Symbols: C[r] for 1 <= r <= degree, EX[i] for i <= m, EY[j] for
    j <= n, and U[k] for 0 < k < p when n >= 1, each admitted only when
    its weight fits.
    """
    symbols = [("C", r, r) for r in range(1, degree + 1)]
    symbols += [("EX", i, p * i) for i in range(1, m + 1) if p * i <= degree]
    symbols += [("EY", j, p * j) for j in range(1, n + 1) if p * j <= degree]
    if n >= 1:
        symbols += [
            ("U", k, m * k + n * (p - k))
            for k in range(1, p)
            if m * k + n * (p - k) <= degree
        ]
    found = []

    def rec(idx: int, remaining: int, prefix: list):
        if remaining == 0:
            found.append(tuple(prefix))
            return
        if idx == len(symbols):
            return
        kind, sidx, w = symbols[idx]
        rec(idx + 1, remaining, prefix)
        e = 1
        while e * w <= remaining:
            prefix.append(((kind, sidx), e))
            rec(idx + 1, remaining - e * w, prefix)
            prefix.pop()
            e += 1

    rec(0, degree, [])
    return [tuple(sorted(key, key=lambda s: (_KIND_RANK[s[0][0]], s[0][1]))) for key in found]


class GenSpan:
    """Row-reduced span of the symbol monomial expansions at one degree.

    Rows keep the exact combination of generator monomials they came
    from, so solve() returns a GenExpr certificate for any member of
    the span.  The construction is deterministic.
    """

    def __init__(self, m: int, n: int, p: int, degree: int):
        self.m, self.n, self.p, self.degree = m, n, p, degree
        self.ring = Ring(m, n, False, p)
        self.rows: dict[tuple, tuple[dict, dict]] = {}
        for key in enumerate_gen_monomials(m, n, p, degree):
            poly = expand_key(key, self.ring)
            if poly.is_zero:
                continue
            vec, acc = self._reduce(poly.terms)
            if not vec:
                continue
            lead = max(vec, key=_term_key)
            inv = fp_inv(vec[lead], p)
            rvec = {e: (inv * c) % p for e, c in vec.items()}
            combo = {key: 1}
            for k2, c2 in acc.items():
                combo[k2] = (combo.get(k2, 0) - c2) % p
            rcombo = {k2: (inv * c2) % p for k2, c2 in combo.items() if (inv * c2) % p}
            self.rows[lead] = (rvec, rcombo)

    def _reduce(self, vec: dict) -> tuple[dict, dict]:
        """Reduce against stored rows.  Returns (residue, acc) with
        input = residue + sum(acc[key] * expansion(key))."""
        p = self.p
        vec = dict(vec)
        acc: dict = {}
        while vec:
            piv = max(vec, key=_term_key)
            row = self.rows.get(piv)
            if row is None:
                break
            rvec, rcombo = row
            c = vec[piv]
            for e, v in rvec.items():
                nv = (vec.get(e, 0) - c * v) % p
                if nv:
                    vec[e] = nv
                else:
                    vec.pop(e, None)
            for k2, v in rcombo.items():
                nv = (acc.get(k2, 0) + c * v) % p
                if nv:
                    acc[k2] = nv
                else:
                    acc.pop(k2, None)
        return vec, acc

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def solve(self, f: Poly):
        """GenExpr with expand == f, or None when f is outside the span."""
        if f.ring != self.ring:
            raise ValueError("polynomial ring does not match the span")
        vec, acc = self._reduce(f.terms)
        if vec:
            return None
        return GenExpr(self.m, self.n, self.p, acc)


_SPAN_CACHE: dict[tuple, GenSpan] = {}


def gen_span(m: int, n: int, p: int, degree: int) -> GenSpan:
    """Memoized GenSpan; the cache is read-mostly and safe to share."""
    key = (m, n, p, degree)
    span = _SPAN_CACHE.get(key)
    if span is None:
        span = GenSpan(m, n, p, degree)
        _SPAN_CACHE[key] = span
    return span
