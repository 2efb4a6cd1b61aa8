"""The q-analog kernel.

q-integers, q-factorials, Gaussian binomials, q-multinomials, the product
(-q; q)_k = (1+q)(1+q^2)...(1+q^k), and the inversion generating function
E_m(q) of alternating (up-down) permutations.

All functions are pure and return immutable :class:`IntPolynomial` values.
Memo tables only grow and are safe under CPython's GIL; every cached value
is immutable, so concurrent readers are fine.
"""

from __future__ import annotations

from functools import cache
from typing import Sequence

from .polynomial import ONE, ZERO, IntPolynomial

__all__ = [
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "neg_q_pochhammer",
    "alternating_length_gf",
]


def q_integer(n: int) -> IntPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1); [0]_q = 0."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return IntPolynomial((1,) * n)


@cache
def q_factorial(n: int) -> IntPolynomial:
    """[n]!_q = [1]_q [2]_q ... [n]_q, the inversion generating function of S_n."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_integer(n)


def q_binomial(n: int, k: int) -> IntPolynomial:
    """Gaussian binomial [n choose k]_q.

    Returns the zero polynomial for k outside [0, n]; the a-basis descent
    expansion relies on out-of-range binomials silently vanishing.
    """
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return ZERO
    return _q_binomial_memo(n, min(k, n - k))


@cache
def _q_binomial_memo(n: int, k: int) -> IntPolynomial:
    # q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k]; all arithmetic stays in Z[q].
    if k == 0:
        return ONE
    left = _q_binomial_memo(n - 1, min(k - 1, n - k))
    right = _q_binomial_memo(n - 1, min(k, n - 1 - k))
    return left + right.times_q_power(k)


def q_multinomial(n: int, parts: Sequence[int]) -> IntPolynomial:
    """[n choose p_1, ..., p_k]_q as a telescoping product of q-binomials.

    The parts must be nonnegative and sum to n.  Zero parts contribute a
    factor of 1 and drop out.
    """
    if n < 0:
        raise ValueError("q_multinomial needs n >= 0")
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {list(parts)} do not sum to {n}")
    out = ONE
    remaining = n
    for p in parts:
        if p:
            out = out * q_binomial(remaining, p)
            remaining -= p
    return out


@cache
def neg_q_pochhammer(k: int) -> IntPolynomial:
    """(-q; q)_k = (1 + q)(1 + q^2) ... (1 + q^k); the empty product for k = 0.

    Degree is 1 + 2 + ... + k = k(k+1)/2, and the value at q = 1 is 2^k.
    """
    if k < 0:
        raise ValueError("neg_q_pochhammer needs k >= 0")
    if k == 0:
        return ONE
    factor = IntPolynomial((1,) + (0,) * (k - 1) + (1,))
    return neg_q_pochhammer(k - 1) * factor


@cache
def alternating_length_gf(m: int) -> IntPolynomial:
    """E_m(q): sum of q^inv(w) over up-down w in S_m (w1 < w2 > w3 < ...).

    Computed by a relative-rank dynamic program instead of factorial
    enumeration.  Values are placed left to right; the state is the rank r of
    the last placed value among {last value} union {values not yet placed}.
    Placing the value of rank r' among the remaining pool creates exactly
    r' - 1 new inversions (with the smaller values still to be placed), so
    each transition carries a factor q^(r'-1).  The up-down shape makes
    position j demand r' >= r when j is even and r' < r when j is odd.
    O(m^2) polynomial-valued states; cross-checked against full enumeration
    for all m <= 8 in the test suite.
    """
    if m < 0:
        raise ValueError("alternating_length_gf needs m >= 0")
    if m <= 1:
        return ONE
    # row[r] for r = 1..m: after placing the first value with rank r.
    row: list[IntPolynomial] = [ZERO] + [IntPolynomial.monomial(r - 1) for r in range(1, m + 1)]
    for j in range(2, m + 1):
        old_len = m - j + 2  # ranks present in row
        prefix: list[IntPolynomial] = [ZERO]
        for r in range(1, old_len + 1):
            prefix.append(prefix[-1] + row[r])
        new: list[IntPolynomial] = [ZERO] * (m - j + 2)
        for r2 in range(1, m - j + 2):
            if j % 2 == 0:
                acc = prefix[r2]  # previous rank <= r2: new value is larger
            else:
                acc = prefix[old_len] - prefix[r2]  # previous rank > r2: smaller
            new[r2] = acc.times_q_power(r2 - 1)
        row = new
    return row[1]
