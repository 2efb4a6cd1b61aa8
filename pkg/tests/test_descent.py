import itertools

import pytest

from qperm.polynomial import ONE, ZERO, IntPolynomial
from qperm.qcore import q_binomial
from qperm.permtools import (
    EnumerationCapError,
    brute_descent_gf,
    brute_descent_gf_by_last,
)
from qperm.descent import (
    DIRECT_ENUMERATION_MAX_M,
    DescentCoefficients,
    a_coefficients_direct,
    a_coefficients_from_b,
    b_coefficients,
    b_table,
    change_basis_b_to_a,
    descent_gf_a,
    descent_gf_b,
)


def P(*coeffs):
    return IntPolynomial(coeffs)


def all_sets_with_max_at_most(m):
    for top in range(1, m + 1):
        for r in range(top):
            for rest in itertools.combinations(range(1, top), r):
                yield tuple(sorted(rest + (top,)))


class TestBTable:
    def test_empty_set_n2(self):
        table = b_table((), 2)
        assert table[1] == ZERO
        assert table[2] == ONE

    def test_single_descent_n2(self):
        table = b_table((1,), 2)
        assert table[1] == P(0, 1)
        assert table[2] == ZERO

    def test_descent_at_two_n3(self):
        table = b_table((2,), 3)
        assert table[1] == P(0, 0, 1)
        assert table[2] == P(0, 1)
        assert table[3] == ZERO

    def test_max_must_be_below_n(self):
        with pytest.raises(ValueError):
            b_table((3,), 3)
        with pytest.raises(ValueError):
            b_table((5,), 2)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_bucketed_enumeration(self, n):
        for r in range(n):
            for S in itertools.combinations(range(1, n), r):
                assert b_table(S, n)[1:] == brute_descent_gf_by_last(S, n)[1:]


class TestBCoefficients:
    def test_descent_at_two(self):
        b = b_coefficients((2,))
        assert b.basis == "b"
        assert b.coeffs == (ZERO, P(0, 0, 1), P(0, 1))

    def test_single_descent(self):
        assert b_coefficients((1,)).coeffs == (ZERO, P(0, 1))

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            b_coefficients(())

    @pytest.mark.parametrize("S", [(1,), (3,), (1, 3), (2, 4), (1, 2, 4)])
    def test_leading_zero_and_nonnegative_entries(self, S):
        b = b_coefficients(S)
        assert b.coeffs[0] == ZERO
        assert len(b.coeffs) == max(S) + 1
        assert all(c.has_nonnegative_coefficients() for c in b.coeffs)


class TestACoefficientsDirect:
    def test_descent_at_two(self):
        a = a_coefficients_direct((2,))
        assert a.basis == "a"
        assert a.coeffs == (ZERO, P(0, 1, 1), P(0, 0, 0, 0, 1))

    def test_single_descent(self):
        assert a_coefficients_direct((1,)).coeffs == (ZERO, P(0, 1))

    @pytest.mark.parametrize("S", [(1,), (2,), (1, 3), (2, 4)])
    def test_zeroth_coefficient_vanishes(self, S):
        assert a_coefficients_direct(S).coeffs[0] == ZERO

    def test_cap_refusal_names_the_alternative(self):
        big = tuple(range(1, DIRECT_ENUMERATION_MAX_M + 2))
        with pytest.raises(EnumerationCapError, match="a_coefficients_from_b"):
            a_coefficients_direct(big)


class TestChangeOfBasis:
    def test_descent_at_two(self):
        a = a_coefficients_from_b((2,))
        assert a.coeffs == (ZERO, P(0, 1, 1), P(0, 0, 0, 0, 1))

    @pytest.mark.parametrize("S", list(all_sets_with_max_at_most(4)))
    def test_agrees_with_direct_enumeration(self, S):
        assert a_coefficients_from_b(S).coeffs == a_coefficients_direct(S).coeffs

    def test_top_coefficient_collapses(self):
        # a_m = q^(m(m-1)) b_1: the i = 1 term is all that survives at k = m
        for S in [(2,), (3,), (1, 3), (2, 4)]:
            m = max(S)
            a = a_coefficients_from_b(S)
            b = b_coefficients(S)
            assert a.coeffs[m] == b.coeffs[1].times_q_power(m * (m - 1))

    def test_synthetic_spread_b_fixture(self):
        # m = 4 with b_i = q^(10(i-1)): the classic witness that the
        # transform does not preserve strong q-log-concavity
        b = (ZERO, ONE, P(*([0] * 10 + [1])), P(*([0] * 20 + [1])), P(*([0] * 30 + [1])))
        a = change_basis_b_to_a(b)
        q = IntPolynomial.monomial
        assert a[1] == ONE + q(10) + q(20) + q(30)
        assert a[2] == q(2) + q(3) + q(4) + q(12) + q(13) + q(22)
        assert a[3] == q(6) + q(7) + q(8) + q(16)
        assert a[4] == q(12)
        assert not (a[2] * a[2] - a[1] * a[3]).has_nonnegative_coefficients()

    def test_rejects_too_short_input(self):
        with pytest.raises(ValueError):
            change_basis_b_to_a((ZERO,))


class TestDescentGf:
    def test_empty_set_is_one(self):
        for n in (1, 3, 5):
            assert descent_gf_a((), n) == ONE
            assert descent_gf_b((), n) == ONE

    def test_descent_at_two_n4(self):
        assert descent_gf_a((2,), 4) == P(0, 1, 2, 1, 1)
        assert descent_gf_b((2,), 4) == P(0, 1, 2, 1, 1)

    def test_too_small_n_gives_zero(self):
        assert descent_gf_a((2,), 2) == ZERO
        assert descent_gf_b((2,), 2) == ZERO
        assert descent_gf_b((3, 5), 5) == ZERO

    def test_b_expansion_explicit_form(self):
        # D_{2}(n) = q^2 [n-1 choose 2] + q [n-2 choose 1]
        for n in range(3, 8):
            expected = q_binomial(n - 1, 2).times_q_power(2) + q_binomial(
                n - 2, 1
            ).times_q_power(1)
            assert descent_gf_b((2,), n) == expected
        assert descent_gf_b((2,), 3) == P(0, 1, 1)

    def test_single_descent_n3(self):
        assert descent_gf_b((1,), 3) == P(0, 1, 1)

    def test_pair_against_enumeration_n8(self):
        assert descent_gf_b((2, 3), 8) == brute_descent_gf((2, 3), 8)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_three_way_agreement(self, n):
        for r in range(n):
            for S in itertools.combinations(range(1, n), r):
                brute = brute_descent_gf(S, n)
                assert descent_gf_a(S, n) == brute
                assert descent_gf_b(S, n) == brute

    @pytest.mark.parametrize("n", range(2, 13))
    def test_single_descent_count_is_n_minus_one(self, n):
        assert descent_gf_a((1,), n)(1) == n - 1
        assert descent_gf_b((1,), n)(1) == n - 1


class TestDescentCoefficientsType:
    def test_rejects_unknown_basis(self):
        with pytest.raises(ValueError):
            DescentCoefficients((1,), "c", (ZERO, ONE))
