import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from supersympoly import (
    Block,
    Ring,
    c_r,
    is_p_balanced,
    is_strictly_supersymmetric,
    is_supersymmetric,
    orbit_sym,
    parse_poly,
    sigma_x_p,
    u_k,
)

R11 = Ring(1, 1, False, 3)


class TestIsSupersymmetric:
    def test_c2_is_member(self):
        assert is_supersymmetric(c_r(2, R11)).overall

    def test_bare_variable_fails_derivative(self):
        verdict = is_supersymmetric(parse_poly("x1", R11))
        assert verdict.symmetric_x and verdict.symmetric_y
        assert not verdict.derivative_vanishes
        assert not verdict.overall

    def test_core_products_are_members(self):
        for p in (3, 5):
            for m in (1, 2):
                for n in (1, 2):
                    ring = Ring(m, n, False, p)
                    for k in range(1, p):
                        assert is_supersymmetric(u_k(k, ring)).overall

    def test_empty_block_is_vacuous(self):
        r = Ring(0, 2, False, 3)
        assert is_supersymmetric(parse_poly("y1*y2", r)).overall


class TestStrict:
    def test_c1_is_strict(self):
        assert is_strictly_supersymmetric(c_r(1, R11))

    def test_core_is_not_strict(self):
        assert not is_strictly_supersymmetric(u_k(1, R11))

    def test_constant_is_strict(self):
        assert is_strictly_supersymmetric(parse_poly("2", R11))

    def test_needs_both_blocks(self):
        with pytest.raises(ValueError):
            is_strictly_supersymmetric(parse_poly("x1", Ring(1, 0, False, 3)))


class TestPBalanced:
    def test_balanced_term(self):
        assert is_p_balanced(parse_poly("x1^2*y1", R11))

    def test_unbalanced_term(self):
        assert not is_p_balanced(parse_poly("x1*y1", R11))

    def test_p_th_powers(self):
        for m in (1, 2, 3):
            ring = Ring(m, 2, False, 3)
            assert is_p_balanced(sigma_x_p(1, ring))

    def test_zero_exponents_count(self):
        # x1^2 pairs exponent 2 with the implicit y exponent 0
        assert not is_p_balanced(parse_poly("x1^2", R11))


def test_cr_is_supersymmetric_and_strict_on_grid():
    for p in (3, 5, 7):
        for m in (1, 2, 3):
            for n in (1, 2, 3):
                ring = Ring(m, n, False, p)
                for r in range(1, 7):
                    f = c_r(r, ring)
                    assert is_supersymmetric(f).overall, (p, m, n, r)
                    assert is_strictly_supersymmetric(f), (p, m, n, r)


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from((3, 5)),
    st.integers(1, 2),
    st.integers(1, 2),
    st.lists(st.integers(0, 4), min_size=2, max_size=4),
)
def test_algebra_closure_on_generator_products(p, m, n, picks):
    ring = Ring(m, n, False, p)
    pool = [c_r(r, ring) for r in range(1, 4)] + [u_k(k, ring) for k in range(1, p)]
    f = ring_one = parse_poly("1", ring)
    g = ring_one
    for i, pick in enumerate(picks):
        chosen = pool[pick % len(pool)]
        if i % 2 == 0:
            f = f * chosen
        else:
            g = g * chosen
    assert is_supersymmetric(f).overall
    assert is_supersymmetric(g).overall
    assert is_supersymmetric(f + g).overall
    assert is_supersymmetric(f * g).overall


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from((3, 5)),
    st.integers(1, 3),
    st.integers(1, 3),
    st.integers(0, 4),
    st.data(),
)
def test_balanced_symmetric_implies_derivative_vanishes(p, m, n, c, data):
    # build a random balanced block-symmetric polynomial: all x exponents
    # congruent to c, all y exponents congruent to -c mod p
    ring = Ring(m, n, False, p)
    xexps = [
        c % p + p * data.draw(st.integers(0, 1), label="xlift") for _ in range(m)
    ]
    yexps = [
        (-c) % p + p * data.draw(st.integers(0, 1), label="ylift") for _ in range(n)
    ]
    f = orbit_sym(xexps, Block.X, ring) * orbit_sym(yexps, Block.Y, ring)
    assert is_p_balanced(f)
    assert is_supersymmetric(f).derivative_vanishes


def test_strict_implies_supersymmetric_on_cr_products():
    for p in (3, 5):
        ring = Ring(2, 2, False, p)
        for r in range(1, 4):
            for s in range(1, 4):
                f = c_r(r, ring) * c_r(s, ring)
                assert is_strictly_supersymmetric(f)
                assert is_supersymmetric(f).overall
