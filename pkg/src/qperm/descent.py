"""Descent generating functions D_S(n, q), uniformly in n.

For a finite descent set S with m = max(S), D_S(n, q) expands in two bases
of Gaussian binomials:

    a-basis:  D_S(n, q) = sum_k a_k(S; q) * [n - m choose k]_q
    b-basis:  D_S(n, q) = sum_k b_k(S; q) * [n - k choose m - k + 1]_q

with a_0 = b_0 = 0.  The b-coefficients come from bucketing the descent
class of S in S_{m+1} by last value; they satisfy a two-case recurrence on
the ambient size that costs O(n^2) polynomial operations, so both formulas
are polynomial in m and uniform in n.  The a-coefficients are recovered
from the b-coefficients by a change of basis, or independently by direct
enumeration (the validation oracle).

Recurrence used here, for the bucketed quantities
b_k(S, n; q) = sum of q^inv(w) over w with descent set S in S_n, w(n) = k:

    n-1 not in S:  b_k(S, n) = q^(n-k) * sum_{i=1}^{k-1} b_i(S, n-1)
    n-1 in S:      b_k(S, n) = q^(n-k) * sum_{i=k}^{n-1} b_i(S \\ {n-1}, n-1)

Removing the last entry of w and standardizing drops exactly n - k
inversions, and the surviving last entry has reduced value below k in the
ascent case and at least k in the descent case, which fixes the two index
ranges.  The test suite certifies both cases against direct bucketing of
S_{m+1} for every S with max(S) <= 7.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable

from .polynomial import ONE, ZERO, IntPolynomial, poly_sum
from .qcore import q_binomial
from .permtools import EnumerationCapError, PositionSet, validate_position_set

__all__ = [
    "DescentCoefficients",
    "b_table",
    "b_coefficients",
    "a_coefficients_direct",
    "a_coefficients_from_b",
    "change_basis_b_to_a",
    "descent_gf_a",
    "descent_gf_b",
    "DIRECT_ENUMERATION_MAX_M",
]

# a_coefficients_direct enumerates about 2^m * m! arrangements; m = 8 would
# already mean ~10M inner loops.
DIRECT_ENUMERATION_MAX_M = 7


@dataclass(frozen=True)
class DescentCoefficients:
    """Coefficient sequence of D_S(n, q) in one basis.

    coeffs[k] is the k-th coefficient polynomial, k = 0..max(S); coeffs[0]
    is always zero, and every entry has nonnegative coefficients (each is an
    inversion generating function over a finite permutation class).
    """

    positions: PositionSet
    basis: str  # "a" or "b"
    coeffs: tuple[IntPolynomial, ...]

    def __post_init__(self):
        if self.basis not in ("a", "b"):
            raise ValueError(f"basis must be 'a' or 'b', got {self.basis!r}")


def b_table(S: Iterable[int], n: int) -> tuple[IntPolynomial, ...]:
    """All bucketed polynomials b_k(S, n; q) for k = 1..n.

    Returns a tuple of length n + 1 whose k-th entry is b_k; entry 0 is zero
    padding.  Requires max(S) < n (the recurrence builds prefix sets of S as
    the ambient size grows, so larger positions cannot have fired yet).
    """
    key = validate_position_set(S)
    if n < 1:
        raise ValueError("b_table needs n >= 1")
    if key and key[-1] >= n:
        raise ValueError(f"b_table needs max(S) < n, got S={key} with n={n}")
    members = set(key)
    row: list[IntPolynomial] = [ZERO, ONE]  # b_1(empty set, 1) = 1
    for j in range(2, n + 1):
        prefix: list[IntPolynomial] = [ZERO]
        for i in range(1, j):
            prefix.append(prefix[-1] + row[i])
        if (j - 1) in members:
            # descent at j-1: surviving last entries have rank >= k
            new = [ZERO] + [
                (prefix[j - 1] - prefix[k - 1]).times_q_power(j - k) for k in range(1, j + 1)
            ]
        else:
            # ascent at j-1: surviving last entries have rank < k
            new = [ZERO] + [prefix[k - 1].times_q_power(j - k) for k in range(1, j + 1)]
        row = new
    return tuple(row)


def b_coefficients(S: Iterable[int]) -> DescentCoefficients:
    """The b-basis coefficients: b_k(S; q) = b_k(S, m+1; q) for k = 0..m."""
    key = validate_position_set(S)
    if not key:
        raise ValueError("b_coefficients needs a nonempty set; D for the empty set is 1")
    m = key[-1]
    table = b_table(key, m + 1)
    return DescentCoefficients(key, "b", (ZERO,) + table[1 : m + 1])


@cache
def _front_buckets(m: int) -> dict:
    """Enumeration tables behind a_coefficients_direct, shared across sets.

    A permutation counted by a_k places the k largest values of {1..m+k}
    among its first m positions and leaves the remaining positions as an
    increasing tail.  It is therefore determined by the set V of small
    values kept in front (|V| = m - k) plus the arrangement of the front.
    Inversions split into inversions inside the front plus a constant
    k^2 + #{(v, u): v in V, u in tail, u < v} crossing term per V.

    Keyed by (k, front descent set, boundary-descent flag); values are the
    inversion generating functions summed over arrangements and V.
    """
    buckets: dict[tuple, list[int]] = {}
    small = range(1, m + 1)
    maxdeg = (m + m) * (m + m - 1) // 2
    for k in range(1, m + 1):
        big = list(range(m + 1, m + k + 1))
        for V in itertools.combinations(small, m - k):
            tail = [u for u in small if u not in V]
            cross = k * k + sum(1 for v in V for u in tail if u < v)
            min_tail = tail[0]
            for front in itertools.permutations(list(V) + big):
                inv = 0
                for i in range(m):
                    fi = front[i]
                    for j in range(i + 1, m):
                        if fi > front[j]:
                            inv += 1
                des = tuple(i for i in range(1, m) if front[i - 1] > front[i])
                key = (k, des, front[-1] > min_tail)
                bucket = buckets.get(key)
                if bucket is None:
                    bucket = buckets[key] = [0] * (maxdeg + 1)
                bucket[inv + cross] += 1
    return {key: IntPolynomial(v) for key, v in buckets.items()}


def a_coefficients_direct(
    S: Iterable[int], *, max_m: int = DIRECT_ENUMERATION_MAX_M
) -> DescentCoefficients:
    """a-basis coefficients by direct enumeration (the validation oracle).

    a_k(S; q) sums q^inv(w) over w in S_{m+k} with descent set exactly S
    whose first m values include all of {m+1, ..., m+k}.  Only these
    permutations are generated, so the cost is about 2^m * m! rather than
    (m+k)!, but it still explodes with m; requests beyond the cap are
    refused and should use a_coefficients_from_b instead.
    """
    key = validate_position_set(S)
    if not key:
        raise ValueError("a_coefficients_direct needs a nonempty set")
    m = key[-1]
    if m > max_m:
        raise EnumerationCapError(
            f"direct a-coefficient enumeration is capped at max(S) <= {max_m}, "
            f"got max(S) = {m}; use a_coefficients_from_b instead"
        )
    buckets = _front_buckets(m)
    front_des = key[:-1]  # the descent at position m is the front/tail boundary
    coeffs = [ZERO]
    for k in range(1, m + 1):
        coeffs.append(buckets.get((k, front_des, True), ZERO))
    return DescentCoefficients(key, "a", tuple(coeffs))


def change_basis_b_to_a(b_coeffs: Iterable[IntPolynomial]) -> tuple[IntPolynomial, ...]:
    """Convert a b-basis coefficient sequence (indexed 0..m, entry 0 ignored)
    to the a-basis:

        a_k = q^(k(k-1)) * sum_{i=1}^{m-k+1} [m-i choose k-1]_q b_i

    Returns the a-sequence indexed 0..m with a_0 = 0.  The input need not
    come from an actual descent set; the transform is linear in the b's.
    """
    b = tuple(b_coeffs)
    m = len(b) - 1
    if m < 1:
        raise ValueError("need coefficients b_0..b_m with m >= 1")
    coeffs = [ZERO]
    for k in range(1, m + 1):
        acc = poly_sum(q_binomial(m - i, k - 1) * b[i] for i in range(1, m - k + 2))
        coeffs.append(acc.times_q_power(k * (k - 1)))
    return tuple(coeffs)


def a_coefficients_from_b(S: Iterable[int]) -> DescentCoefficients:
    """a-basis coefficients via :func:`change_basis_b_to_a` applied to the
    b-coefficients.  This is the production path; it is polynomial in m."""
    b = b_coefficients(S)
    return DescentCoefficients(b.positions, "a", change_basis_b_to_a(b.coeffs))


def descent_gf_a(S: Iterable[int], n: int) -> IntPolynomial:
    """D_S(n, q) via the a-basis expansion.

    Returns 1 for the empty set and 0 whenever n <= max(S) (a descent at
    position max(S) needs at least max(S) + 1 letters).
    """
    key = validate_position_set(S)
    if n < 1:
        raise ValueError("descent_gf_a needs n >= 1")
    if not key:
        return ONE
    m = key[-1]
    if n <= m:
        return ZERO
    a = a_coefficients_from_b(key)
    return poly_sum(a.coeffs[k] * q_binomial(n - m, k) for k in range(1, m + 1))


def descent_gf_b(S: Iterable[int], n: int) -> IntPolynomial:
    """D_S(n, q) via the b-basis expansion; agrees with descent_gf_a everywhere."""
    key = validate_position_set(S)
    if n < 1:
        raise ValueError("descent_gf_b needs n >= 1")
    if not key:
        return ONE
    m = key[-1]
    if n <= m:
        return ZERO
    b = b_coefficients(key)
    return poly_sum(b.coeffs[k] * q_binomial(n - k, m - k + 1) for k in range(1, m + 1))
