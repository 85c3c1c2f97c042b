"""Verification suites shared by the CLI selftest and the test suite.

Each function sweeps one documented property over its full grid and
returns (ok, detail).  run_all executes everything with timings.  The
residual exponent law is a deliberate exception: it asserts a stronger
statement than the decomposition actually guarantees and fails on
documented counterexamples, so it carries expected_ok=False.  See the
README for the analysis.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .decompose import decompose, trace_decomposition, verify_decomposition
from .generators import enumerate_deltas, kseq, make_v, sigma_x_p, sigma_y_p, u_k
from .genexpr import GenExpr, expand, symbol_weight, _KIND_RANK
from .oracle import as_dimension, cr_generating_check, generated_dimension, bracket_identity_check, psi_w_check
from .poly_core import Ring, d_dT, psi, set_xm_zero
from .supersym import is_p_balanced, is_strictly_supersymmetric, is_supersymmetric
from .symfun import Block, is_symmetric

FULL_PRIMES = (3, 5, 7)
SMALL_PRIMES = (3, 5)
FULL_DIMS = (1, 2, 3)
CELLS = ((1, 1), (2, 1), (1, 2), (2, 2))


@dataclass
class CheckResult:
    name: str
    ok: bool
    expected_ok: bool
    detail: str
    seconds: float


def _grid(ps=FULL_PRIMES, dims=FULL_DIMS):
    for p in ps:
        for k in range(1, p):
            for m in dims:
                for n in dims:
                    yield p, k, m, n


def check_vk_contract(ps=FULL_PRIMES, dims=FULL_DIMS) -> tuple[bool, str]:
    """v_k is block symmetric, homogeneous of degree (m-1)k + (p-k)n,
    killed by d/dT after x_m = y_n = T, and restricts to u_k(m-1|n)."""
    bad = []
    cells = 0
    for p, k, m, n in _grid(ps, dims):
        cells += 1
        v = make_v(p, k, m, n)
        expected = u_k(k, Ring(m - 1, n, False, p))
        ok = (
            is_symmetric(v, Block.X)
            and is_symmetric(v, Block.Y)
            and {sum(e) for e in v.terms} == {(m - 1) * k + (p - k) * n}
            and d_dT(psi(v)).is_zero
            and set_xm_zero(v) == expected
        )
        if not ok:
            bad.append((p, k, m, n))
    return not bad, f"{cells} cells" + (f", failures: {bad}" if bad else "")


def check_psi_w(ps=FULL_PRIMES, dims=FULL_DIMS) -> tuple[bool, str]:
    """The closed form of the T image of w, modulo the kernel of d/dT."""
    bad = [(p, k, m, n) for p, k, m, n in _grid(ps, dims) if not psi_w_check(m, n, kseq(p, k))]
    total = sum(1 for _ in _grid(ps, dims))
    return not bad, f"{total} cells" + (f", failures: {bad}" if bad else "")


def check_bracket_identities(ps=FULL_PRIMES, dims=FULL_DIMS) -> tuple[bool, str]:
    """Both bracket substitution identities, exhaustively.

    Admissible tuples: every delta sequence for s, l from 0 to s for the
    brace family (the signed sum only uses 1 <= l <= s-1), j over the
    defining range of the left side bracket.
    """
    bad = []
    checks = 0
    for p in ps:
        for k in range(1, p):
            ks = kseq(p, k)
            deltas = enumerate_deltas(ks.s)
            for m in dims:
                for n in dims:
                    for delta in deltas:
                        for j in range(0, n + 1):
                            for l in range(0, ks.s + 1):
                                checks += 1
                                if not bracket_identity_check(delta, l, j, m, n, ks, "brace"):
                                    bad.append(("brace", p, k, m, n, delta.entries, l, j))
                        for j in range(0, n):
                            checks += 1
                            if not bracket_identity_check(delta, None, j, m, n, ks, "round"):
                                bad.append(("round", p, k, m, n, delta.entries, j))
    return not bad, f"{checks} identities" + (f", failures: {bad[:3]}..." if bad else "")


def check_dimensions(ps=SMALL_PRIMES, cells=CELLS, dmax=12) -> tuple[bool, str]:
    """Kernel dimension equals generated dimension, degree by degree."""
    bad = []
    rows = 0
    for p in ps:
        for m, n in cells:
            for d in range(dmax + 1):
                rows += 1
                da = as_dimension(m, n, p, d)
                dg = generated_dimension(m, n, p, d)
                if da != dg:
                    bad.append((m, n, p, d, da, dg))
    return not bad, f"{rows} degree cells" + (f", failures: {bad}" if bad else "")


def random_gen_expr(rng: random.Random, m: int, n: int, p: int,
                    max_weight: int = 10, max_terms: int = 4) -> GenExpr:
    """Random formal generator polynomial of bounded weighted degree."""
    symbols = [("C", r) for r in range(1, max_weight + 1)]
    symbols += [("EX", i) for i in range(1, m + 1)]
    symbols += [("EY", j) for j in range(1, n + 1)]
    symbols += [("U", k) for k in range(1, p)]
    symbols = [s for s in symbols if symbol_weight(s[0], s[1], m, n, p) <= max_weight]
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        budget = max_weight
        acc: dict = {}
        while True:
            options = [s for s in symbols if symbol_weight(s[0], s[1], m, n, p) <= budget]
            if not options or (acc and rng.random() < 0.4):
                break
            sym = rng.choice(options)
            acc[sym] = acc.get(sym, 0) + 1
            budget -= symbol_weight(sym[0], sym[1], m, n, p)
        key = tuple(sorted(acc.items(), key=lambda kv: (_KIND_RANK[kv[0][0]], kv[0][1])))
        terms[key] = (terms.get(key, 0) + rng.randint(1, p - 1)) % p
    return GenExpr(m, n, p, terms)


def check_roundtrip(ps=SMALL_PRIMES, cells=CELLS, count=200, max_weight=10,
                    seed=20240801):
    """expand -> decompose -> expand is the identity on random inputs.

    Returns (ok, detail, trace); the trace records every residue the
    recursion factored, for the exponent law check below.
    """
    bad = []
    runs = 0
    with trace_decomposition() as trace:
        for p in ps:
            for m, n in cells:
                ring = Ring(m, n, False, p)
                rng = random.Random(seed + 1000 * p + 10 * m + n)
                for _ in range(count):
                    runs += 1
                    e = random_gen_expr(rng, m, n, p, max_weight)
                    f = expand(e, ring)
                    try:
                        e2 = decompose(f)
                    except Exception as exc:  # InternalInvariantViolation included
                        bad.append((p, m, n, repr(exc)))
                        continue
                    if not verify_decomposition(f, e2):
                        bad.append((p, m, n, "re-expansion mismatch"))
    detail = f"{runs} roundtrips, {len(trace.residues)} residues factored"
    if bad:
        detail += f", failures: {bad[:3]}..."
    return not bad, detail, trace


def check_residual_exponent_law(trace) -> tuple[bool, str]:
    """Literal exponent law on every factored residue: its maximal core
    (a, b) has a > 0 and a + b divisible by p.

    The decomposition only guarantees the law for the cores it actually
    peels; residues such as the one forced by u_1 * c_2 at level (1, 1),
    p = 3 (maximal core (1, 3)) violate the raw statement.  This check
    is kept deliberately and is expected to fail; see the README.
    """
    bad = [r for r in trace.residues if not (r[4] > 0 and (r[4] + r[5]) % r[2] == 0)]
    detail = f"{len(trace.residues)} residues, {len(bad)} violate the law"
    if bad:
        detail += f"; first: (m,n,p,degree,a,b)={bad[0]}"
    return not bad, detail


def check_peeled_core_law(trace) -> tuple[bool, str]:
    """Every peeled core has positive x part and degree divisible by p."""
    bad = [r for r in trace.peels if not (r[3] > 0 and (r[3] + r[4]) % r[2] == 0)]
    return not bad, f"{len(trace.peels)} peels" + (f", failures: {bad[:3]}" if bad else "")


def check_cr_properties(ps=FULL_PRIMES, dims=FULL_DIMS, rmax=6) -> tuple[bool, str]:
    """c_r is supersymmetric and strictly so; the generating identity holds."""
    from .generators import c_r

    bad = []
    checks = 0
    for p in ps:
        for m in dims:
            for n in dims:
                ring = Ring(m, n, False, p)
                for r in range(1, rmax + 1):
                    checks += 1
                    f = c_r(r, ring)
                    if not (is_supersymmetric(f).overall and is_strictly_supersymmetric(f)):
                        bad.append((p, m, n, r))
                checks += 1
                if not cr_generating_check(m, n, p, m + n + 3):
                    bad.append((p, m, n, "generating"))
    return not bad, f"{checks} checks" + (f", failures: {bad}" if bad else "")


def check_vk_membership(ps=SMALL_PRIMES, dims=(1, 2)) -> tuple[bool, str]:
    """decompose succeeds on every v_k and the certificate verifies."""
    bad = []
    cells = 0
    for p in ps:
        for k in range(1, p):
            for m in dims:
                for n in dims:
                    cells += 1
                    v = make_v(p, k, m, n)
                    try:
                        e = decompose(v)
                    except Exception as exc:
                        bad.append((p, k, m, n, repr(exc)))
                        continue
                    if not verify_decomposition(v, e):
                        bad.append((p, k, m, n, "mismatch"))
    return not bad, f"{cells} lifts" + (f", failures: {bad}" if bad else "")


def check_balanced_generators(ps=FULL_PRIMES, dims=FULL_DIMS) -> tuple[bool, str]:
    """sigma_i(x)^p, sigma_j(y)^p and u_k are all p balanced."""
    bad = []
    checks = 0
    for p in ps:
        for m in dims:
            for n in dims:
                ring = Ring(m, n, False, p)
                polys = [sigma_x_p(i, ring) for i in range(1, m + 1)]
                polys += [sigma_y_p(j, ring) for j in range(1, n + 1)]
                polys += [u_k(k, ring) for k in range(1, p)]
                for f in polys:
                    checks += 1
                    if not is_p_balanced(f):
                        bad.append((p, m, n))
    return not bad, f"{checks} generators" + (f", failures: {bad}" if bad else "")


def run_all() -> list[CheckResult]:
    """Run the nine acceptance suites; used by the CLI selftest."""
    results = []

    def run(name, fn, expected_ok=True):
        t0 = time.time()
        out = fn()
        ok, detail = out[0], out[1]
        results.append(CheckResult(name, ok, expected_ok, detail, time.time() - t0))
        return out

    run("1 lift contract", check_vk_contract)
    run("2 collapsed image of w", check_psi_w)
    run("3 bracket identities", check_bracket_identities)
    run("4 dimension agreement", check_dimensions)
    t0 = time.time()
    ok5, detail5, trace = check_roundtrip()
    results.append(CheckResult("5 decomposition roundtrip", ok5, True, detail5, time.time() - t0))
    run("6 residual exponent law", lambda: check_residual_exponent_law(trace), expected_ok=False)
    run("7 c_r properties", check_cr_properties)
    run("8 lift decomposes over generators", check_vk_membership)
    run("9 balanced generator family", check_balanced_generators)
    return results
