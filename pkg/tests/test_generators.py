import pytest

from supersympoly import (
    Block,
    DeltaSeq,
    Ring,
    bracket_brace,
    bracket_round,
    bracket_square,
    c_r,
    d_dT,
    enumerate_deltas,
    is_symmetric,
    kseq,
    make_v,
    one,
    parse_poly,
    psi,
    set_xm_zero,
    sigma_x_p,
    sigma_y_p,
    u_k,
    v_k,
    w_poly,
)
from supersympoly.generators import placed_sym

EMPTY = DeltaSeq(())


class TestKSeq:
    def test_frozen_values(self):
        ks = kseq(3, 1)
        assert (ks.s, ks.kvals, ks.kp) == (1, (1,), 1)
        ks = kseq(5, 3)
        assert (ks.s, ks.kvals, ks.kp) == (2, (3, 1), 1)
        ks = kseq(7, 2)
        assert (ks.s, ks.kvals, ks.kp) == (1, (2,), 3)

    def test_top_k_has_zero_tail(self):
        for p in (3, 5, 7):
            ks = kseq(p, p - 1)
            assert ks.s == p - 1
            assert ks.kp == 0

    def test_invariants_hold_on_grid(self):
        for p in (3, 5, 7, 11):
            for k in range(1, p):
                ks = kseq(p, k)
                assert ks.s < p
                assert all(v > 0 for v in ks.kvals)

    def test_rejects_out_of_range(self):
        for k in (0, 3, -1):
            with pytest.raises(ValueError):
                kseq(3, k)


class TestDeltas:
    def test_single_sequence_for_s_one(self):
        assert enumerate_deltas(1) == [EMPTY]

    def test_s_two_bounded_weight(self):
        assert [d.entries for d in enumerate_deltas(2, 1)] == [(), (1,)]

    def test_s_three_bounded_weight(self):
        assert [d.entries for d in enumerate_deltas(3, 2)] == [(), (1,), (2,), (1, 1)]

    def test_stats(self):
        d = DeltaSeq((1, 1, 2))
        assert d.size == 3
        assert d.weight == 4
        assert d.support == (1, 2)
        assert d.remove(1).entries == (1, 2)

    def test_rejects_decreasing(self):
        with pytest.raises(ValueError):
            DeltaSeq((2, 1))


class TestFamilies:
    def test_c0_is_one(self):
        assert c_r(0, Ring(2, 2, False, 3)) == one(Ring(2, 2, False, 3))

    def test_c1_and_c2_level_one(self):
        r = Ring(1, 1, False, 3)
        assert c_r(1, r) == parse_poly("x1 - y1", r)
        assert c_r(2, r) == parse_poly("y1^2 - x1*y1", r)

    def test_sigma_powers(self):
        r = Ring(1, 0, False, 3)
        assert sigma_x_p(1, r) == parse_poly("x1^3", r)
        r = Ring(2, 0, False, 3)
        assert sigma_x_p(2, r) == parse_poly("x1^3*x2^3", r)
        r = Ring(0, 2, False, 3)
        assert sigma_y_p(1, r) == parse_poly("y1^3 + y2^3", r)

    def test_sigma_power_range(self):
        with pytest.raises(ValueError):
            sigma_x_p(2, Ring(1, 1, False, 3))

    def test_u_k_examples(self):
        assert u_k(1, Ring(1, 1, False, 3)) == parse_poly("x1*y1^2", Ring(1, 1, False, 3))
        assert u_k(1, Ring(0, 1, False, 3)) == parse_poly("y1^2", Ring(0, 1, False, 3))
        assert u_k(2, Ring(2, 1, False, 3)) == parse_poly(
            "x1^2*x2^2*y1", Ring(2, 1, False, 3)
        )

    def test_u_k_range(self):
        with pytest.raises(ValueError):
            u_k(3, Ring(1, 1, False, 3))
        with pytest.raises(ValueError):
            u_k(1, Ring(1, 0, False, 3))


class TestBrackets:
    def test_round_example(self):
        r = Ring(2, 1, False, 3)
        ks = kseq(3, 1)
        assert bracket_round(EMPTY, 0, ks, r) == parse_poly("x1*x2*y1", r)

    def test_round_out_of_range_j(self):
        r = Ring(2, 1, False, 3)
        ks = kseq(3, 1)
        assert bracket_round(EMPTY, 1, ks, r).is_zero
        assert bracket_round(EMPTY, -1, ks, r).is_zero

    def test_oversized_delta_gives_zero(self):
        r = Ring(1, 2, False, 5)
        ks = kseq(5, 3)
        assert bracket_round(DeltaSeq((1, 1)), 0, ks, r).is_zero
        assert bracket_brace(DeltaSeq((1,)), 1, 0, ks, r).is_zero

    def test_square_with_empty_y_tail(self):
        r = Ring(2, 2, False, 3)
        ks = kseq(3, 1)
        assert bracket_square(EMPTY, 2, ks, r) == parse_poly("x1*x2", r)

    def test_brace_example(self):
        r = Ring(2, 1, False, 3)
        ks = kseq(3, 1)
        got = bracket_brace(EMPTY, 1, 0, ks, r)
        assert got == parse_poly("x1^2*x2*y1^2 + x1*x2^2*y1^2", r)

    def test_brace_j_at_n_drops_y_part(self):
        r = Ring(2, 1, False, 3)
        ks = kseq(3, 1)
        got = bracket_brace(EMPTY, 1, 1, ks, r)
        assert got == parse_poly("x1^2*x2 + x1*x2^2", r)

    def test_collision_multiplicity(self):
        # at k = p-1 the movable slot value l(p-k) meets the delta value
        # k_1; the two slots stay distinguishable, giving coefficient 2
        r = Ring(2, 1, False, 3)
        ks = kseq(3, 2)
        got = bracket_brace(DeltaSeq((1,)), 1, 0, ks, r)
        assert got == parse_poly("2*x1*x2*y1", r)

    def test_brackets_are_block_symmetric(self):
        for p, k in [(3, 1), (3, 2), (5, 3)]:
            ks = kseq(p, k)
            r = Ring(2, 2, False, p)
            for delta in enumerate_deltas(ks.s):
                for j in range(0, 3):
                    for f in (
                        bracket_round(delta, j, ks, r),
                        bracket_square(delta, j, ks, r),
                        bracket_brace(delta, 1, j, ks, r),
                    ):
                        assert is_symmetric(f, Block.X)
                        assert is_symmetric(f, Block.Y)


class TestPlacedSym:
    def test_single_family_is_orbit(self):
        r = Ring(2, 0, False, 3)
        assert placed_sym([(1, 2)], Block.X, r) == parse_poly("x1*x2", r)

    def test_distinct_families_with_equal_values(self):
        r = Ring(2, 0, False, 3)
        assert placed_sym([(1, 1), (1, 1)], Block.X, r) == parse_poly("2*x1*x2", r)

    def test_zero_valued_slot_occupies_a_variable(self):
        r = Ring(0, 2, False, 3)
        assert placed_sym([(0, 1)], Block.Y, r) == parse_poly("2", r)

    def test_overfull_is_zero(self):
        r = Ring(1, 0, False, 3)
        assert placed_sym([(1, 2)], Block.X, r).is_zero


class TestW:
    def test_smallest_case(self):
        r = Ring(1, 1, False, 3)
        assert w_poly(kseq(3, 1), r) == parse_poly("x1*y1", r)

    def test_two_x_variables(self):
        r = Ring(2, 1, False, 3)
        assert w_poly(kseq(3, 1), r) == parse_poly("x1*x2*y1", r)

    def test_homogeneous_of_expected_degree(self):
        for p in (3, 5):
            for k in range(1, p):
                ks = kseq(p, k)
                for m in (1, 2):
                    for n in (1, 2):
                        w = w_poly(ks, Ring(m, n, False, p))
                        assert {sum(e) for e in w.terms} == {(m - 1) * k + (p - k) * n}


class TestVk:
    def test_frozen_level_one(self):
        r = Ring(1, 1, False, 3)
        assert make_v(3, 1, 1, 1) == parse_poly("2*x1*y1 + y1^2", r)

    def test_frozen_level_two(self):
        r = Ring(2, 1, False, 3)
        assert make_v(3, 1, 2, 1) == parse_poly(
            "2*x1*x2*y1 + x1*y1^2 + x2*y1^2", r
        )

    def test_frozen_top_k(self):
        # k = p-1 exercises the slot collision; frozen from hand expansion
        r = Ring(2, 1, False, 3)
        expected = parse_poly(
            "2*x1^2*x2 + 2*x1*x2^2 + x1^2*y1 + x1*x2*y1 + x2^2*y1", r
        )
        assert make_v(3, 2, 2, 1) == expected

    def test_psi_image_example(self):
        v = make_v(3, 1, 2, 1)
        assert psi(v) == parse_poly("T^3", Ring(1, 0, True, 3))
        assert d_dT(psi(v)).is_zero

    def test_degree_example(self):
        v = make_v(3, 1, 2, 1)
        assert v.degree() == 3 == (2 - 1) * 1 + (3 - 1) * 1

    def test_triple_contract_small_grid(self):
        for p in (3, 5):
            for k in range(1, p):
                for m in (1, 2):
                    for n in (1, 2):
                        v = make_v(p, k, m, n)
                        assert is_symmetric(v, Block.X)
                        assert is_symmetric(v, Block.Y)
                        assert d_dT(psi(v)).is_zero
                        assert set_xm_zero(v) == u_k(k, Ring(m - 1, n, False, p))

    def test_requires_both_blocks(self):
        with pytest.raises(ValueError):
            v_k(kseq(3, 1), Ring(0, 1, False, 3))
