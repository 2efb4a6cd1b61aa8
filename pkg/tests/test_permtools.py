import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qperm.polynomial import ONE, ZERO, IntPolynomial
from qperm.qcore import q_binomial, q_factorial
from qperm.permtools import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapError,
    Permutation,
    brute_descent_gf,
    brute_descent_gf_by_last,
    brute_peak_gf,
    brute_superset_peak_gf,
    descent_set,
    inversion_count,
    iter_permutations,
    peak_set,
    validate_position_set,
)
from qperm.peak import admissible_supersets


def P(*coeffs):
    return IntPolynomial(coeffs)


small_perms = st.integers(1, 7).flatmap(
    lambda n: st.permutations(tuple(range(1, n + 1)))
)


class TestPermutation:
    def test_valid_construction(self):
        p = Permutation((3, 1, 2))
        assert p.size == 3

    @pytest.mark.parametrize("word", [(1, 1), (0, 1), (2, 3), (1, 2, 4)])
    def test_invalid_words_rejected(self, word):
        with pytest.raises(ValueError):
            Permutation(word)

    def test_statistics_methods(self):
        p = Permutation((3, 4, 1, 2))
        assert p.descent_set() == (2,)
        assert p.peak_set() == (2,)
        assert p.inversion_count() == 4
        assert p.reversed().word == (2, 1, 4, 3)


class TestStatistics:
    def test_descents(self):
        assert descent_set((1, 2, 3, 4)) == ()
        assert descent_set((4, 3, 2, 1)) == (1, 2, 3)
        assert descent_set((3, 4, 1, 2)) == (2,)

    def test_peaks(self):
        assert peak_set((1, 2, 3)) == ()
        assert peak_set((1, 3, 2)) == (2,)
        assert peak_set((4, 3, 2, 1)) == ()

    def test_inversions(self):
        assert inversion_count((1, 2, 3)) == 0
        assert inversion_count((4, 3, 2, 1)) == 6
        assert inversion_count((3, 4, 1, 2)) == 4

    @given(small_perms)
    def test_reversal_complements_inversions(self, word):
        n = len(word)
        assert inversion_count(word) + inversion_count(word[::-1]) == n * (n - 1) // 2

    @given(small_perms)
    def test_peaks_are_descents_preceded_by_ascents(self, word):
        des = set(descent_set(word))
        expected = tuple(i for i in sorted(des) if 2 <= i and i - 1 not in des and i <= len(word) - 1)
        assert peak_set(word) == expected


class TestPositionSets:
    def test_accepts_increasing(self):
        assert validate_position_set([2, 5, 9]) == (2, 5, 9)
        assert validate_position_set(()) == ()

    @pytest.mark.parametrize("bad", [(2, 2), (3, 1), (0,), (-1, 2), (1.5, 2)])
    def test_rejects_non_increasing_or_non_positive(self, bad):
        with pytest.raises(ValueError):
            validate_position_set(bad)


class TestDescentOracle:
    def test_empty_set_counts_identity_only(self):
        for n in range(1, 7):
            assert brute_descent_gf((), n) == ONE

    def test_single_descent_s3(self):
        assert brute_descent_gf((1,), 3) == P(0, 1, 1)

    def test_descent_at_two_s4(self):
        assert brute_descent_gf((2,), 4) == P(0, 1, 2, 1, 1)

    def test_impossible_set_is_zero(self):
        assert brute_descent_gf((4,), 3) == ZERO

    @pytest.mark.parametrize("n", range(1, 8))
    def test_descent_classes_partition_group(self, n):
        total = ZERO
        for r in range(n):
            for S in itertools.combinations(range(1, n), r):
                total = total + brute_descent_gf(S, n)
        assert total == q_factorial(n)


class TestPeakOracle:
    def test_no_peaks_s3(self):
        assert brute_peak_gf((), 3) == P(1, 1) * P(1, 0, 1)

    def test_single_peak_s3(self):
        assert brute_peak_gf((2,), 3) == P(0, 1, 1)

    def test_position_one_never_peaks(self):
        assert brute_peak_gf((1,), 4) == ZERO

    @pytest.mark.parametrize("n", range(1, 8))
    def test_peak_classes_partition_group(self, n):
        total = ZERO
        for S in admissible_supersets((), n):
            total = total + brute_peak_gf(S, n)
        assert total == q_factorial(n)


class TestSupersetOracle:
    def test_empty_set_matches_whole_group(self):
        for n in range(1, 6):
            assert brute_superset_peak_gf((), n) == q_factorial(n)

    def test_only_peak_position_in_s3(self):
        assert brute_superset_peak_gf((2,), 3) == P(0, 1, 1)

    def test_factorization_at_n4(self):
        assert brute_superset_peak_gf((2,), 4) == q_binomial(4, 3) * P(0, 1, 1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_unwinds_to_sum_over_admissible_supersets(self, n):
        for S in admissible_supersets((), n):
            expected = ZERO
            for sup in admissible_supersets(S, n):
                expected = expected + brute_peak_gf(sup, n)
            assert brute_superset_peak_gf(S, n) == expected


class TestByLastOracle:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_buckets_sum_to_class_gf(self, n):
        for r in range(n):
            for S in itertools.combinations(range(1, n), r):
                buckets = brute_descent_gf_by_last(S, n)
                assert buckets[0] == ZERO
                total = ZERO
                for poly in buckets:
                    total = total + poly
                assert total == brute_descent_gf(S, n)

    def test_explicit_bucket(self):
        # descent class of {2} in S_3 holds 132 (inv 1, last 2) and 231 (inv 2, last 1)
        buckets = brute_descent_gf_by_last((2,), 3)
        assert buckets[1] == P(0, 0, 1)
        assert buckets[2] == P(0, 1)
        assert buckets[3] == ZERO


class TestEnumerationCap:
    def test_default_cap_refuses_large_n(self):
        n = DEFAULT_ENUMERATION_CAP + 1
        with pytest.raises(EnumerationCapError, match=str(DEFAULT_ENUMERATION_CAP)):
            brute_descent_gf((1,), n)

    def test_lowered_cap_is_respected(self):
        with pytest.raises(EnumerationCapError, match="cap of 5"):
            brute_peak_gf((2,), 6, cap=5)

    def test_raised_cap_allows_the_sweep(self):
        assert brute_descent_gf((), 6, cap=6) == ONE

    def test_nonpositive_n_rejected(self):
        with pytest.raises(ValueError):
            brute_descent_gf((), 0)


class TestLexicographicOrder:
    def test_iteration_order_is_lexicographic(self):
        words = list(iter_permutations(3))
        assert words == sorted(words)
        assert words[0] == (1, 2, 3)
        assert words[-1] == (3, 2, 1)
