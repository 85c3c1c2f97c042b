import random

import pytest

from supersympoly import (
    GenExpr,
    NotSupersymmetricError,
    Ring,
    ZeroPolynomialError,
    c_r,
    core_to_generators,
    decompose,
    expand,
    factor_core,
    make_v,
    monomial,
    parse_poly,
    serialize_gen_expr,
    u_k,
    verify_decomposition,
    vk_gen_expr,
    zero,
)
from supersympoly.decompose import trace_decomposition
from supersympoly.selfcheck import random_gen_expr

R11 = Ring(1, 1, False, 3)
R21 = Ring(2, 1, False, 3)


class TestFactorCore:
    def test_mixed_core(self):
        g = parse_poly("x1 + y1", R21)  # cofactor coprime to both cores
        f = parse_poly("x1*x2*y1", R21) * g
        out = factor_core(f)
        assert (out.a, out.b) == (1, 1)
        assert out.cofactor == g

    def test_pure_x_power(self):
        r10 = Ring(1, 0, False, 3)
        out = factor_core(parse_poly("x1^3", r10))
        assert (out.a, out.b) == (3, 0)
        assert out.cofactor == parse_poly("1", r10)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            factor_core(zero(R11))

    def test_maximality(self):
        f = parse_poly("x1^2*y1^3 + x1^3*y1^2", R11)
        out = factor_core(f)
        assert (out.a, out.b) == (2, 2)


class TestCoreToGenerators:
    def test_pure_p_power(self):
        e = core_to_generators(3, 0, 3, 1, 1)
        assert serialize_gen_expr(e) == "EX[1]"

    def test_single_core(self):
        e = core_to_generators(1, 2, 3, 1, 1)
        assert serialize_gen_expr(e) == "U[1]"

    def test_mixed(self):
        e = core_to_generators(4, 5, 3, 2, 1)
        assert serialize_gen_expr(e) == "EX[2]*EY[1]*U[1]"

    def test_expansion_matches_core(self):
        for p in (3, 5):
            for m in (1, 2):
                for n in (1, 2):
                    ring = Ring(m, n, False, p)
                    for a in range(0, 2 * p):
                        for b in range(0, 2 * p):
                            if (a + b) % p or (a % p and n < 1):
                                continue
                            e = core_to_generators(a, b, p, m, n)
                            core = [a] * m + [b] * n
                            assert expand(e, ring) == monomial(ring, core)

    def test_precondition(self):
        with pytest.raises(ValueError):
            core_to_generators(1, 1, 3, 1, 1)


class TestDecompose:
    def test_constant(self):
        e = decompose(parse_poly("2", R11))
        assert serialize_gen_expr(e) == "2"

    def test_c2_round_trip(self):
        f = c_r(2, R11)
        e = decompose(f)
        assert verify_decomposition(f, e)

    def test_mixed_degrees(self):
        f = c_r(1, R11) + c_r(2, R11) * c_r(1, R11)
        e = decompose(f)
        assert verify_decomposition(f, e)

    def test_product_example(self):
        f = u_k(1, R11) * c_r(1, R11)
        e = decompose(f)
        assert verify_decomposition(f, e)
        # weighted symbol degrees sum to the polynomial degree
        assert e.weighted_degree() == f.degree() == 4

    def test_rejects_non_member(self):
        with pytest.raises(NotSupersymmetricError):
            decompose(parse_poly("x1", R11))

    def test_verify_distinguishes(self):
        f = c_r(1, R11)
        good = GenExpr.symbol(1, 1, 3, "C", 1)
        bad = GenExpr.symbol(1, 1, 3, "C", 2)
        assert verify_decomposition(f, good)
        assert not verify_decomposition(f, bad)

    def test_zero_input(self):
        assert decompose(zero(R11)).is_zero


class TestCornerResiduals:
    # inputs whose forced residual has a maximal core that is not a
    # multiple of p; they exercise the span fallback

    def test_px_power_plus_core(self):
        f = parse_poly("x1^3 + x1*y1^2", R11)
        e = decompose(f)
        assert verify_decomposition(f, e)
        assert serialize_gen_expr(e) == "EX[1] + U[1]"

    def test_stuck_core_degree_four(self):
        f = parse_poly("x1^4 - x1^2*y1^2", R11)
        e = decompose(f)
        assert verify_decomposition(f, e)

    def test_core_times_c2(self):
        f = u_k(1, R11) * c_r(2, R11)
        with trace_decomposition() as trace:
            e = decompose(f)
        assert verify_decomposition(f, e)
        # the documented counterexample: maximal core (1, 3), sum 4
        assert (1, 1, 3, 5, 1, 3) in trace.residues

    def test_level_two_relation_residual(self):
        f = c_r(1, R21) * c_r(3, R21) - c_r(2, R21) ** 2
        e = decompose(f)
        assert verify_decomposition(f, e)


class TestBaseLevels:
    def test_y_only(self):
        r = Ring(0, 2, False, 3)
        f = parse_poly("y1^2*y2 + y1*y2^2", r)
        e = decompose(f)
        assert verify_decomposition(f, e)
        assert all(kind == "C" for key in e.terms for (kind, _), _ in key)

    def test_x_only(self):
        r = Ring(2, 0, False, 3)
        f = parse_poly("x1^2 + x1*x2 + x2^2", r)
        e = decompose(f)
        assert verify_decomposition(f, e)
        assert all(kind == "C" for key in e.terms for (kind, _), _ in key)


class TestVkCertificates:
    def test_cached_and_valid(self):
        e1 = vk_gen_expr(2, 2, 3, 2)
        e2 = vk_gen_expr(2, 2, 3, 2)
        assert e1 is e2
        ring = Ring(2, 2, False, 3)
        assert expand(e1, ring) == make_v(3, 2, 2, 2)

    def test_decompose_vk_round_trip(self):
        for p in (3, 5):
            for k in range(1, p):
                for m in (1, 2):
                    for n in (1, 2):
                        v = make_v(p, k, m, n)
                        e = decompose(v)
                        assert verify_decomposition(v, e), (p, k, m, n)


class TestTraceInvariants:
    def test_peeled_cores_obey_exponent_law(self):
        rng = random.Random(11)
        with trace_decomposition() as trace:
            for _ in range(60):
                e = random_gen_expr(rng, 2, 1, 3, max_weight=8)
                f = expand(e, R21)
                e2 = decompose(f)
                assert verify_decomposition(f, e2)
        assert trace.peels, "expected at least one peeled core"
        for (m, n, p, a, b) in trace.peels:
            assert a > 0
            assert (a + b) % p == 0

    def test_recursion_depth_metric_recorded(self):
        with trace_decomposition() as trace:
            decompose(u_k(1, R21) * c_r(2, R21))
        assert trace.calls
