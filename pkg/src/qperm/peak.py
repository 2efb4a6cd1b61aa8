"""Peak generating functions P_S(n, q) by three independent formula routes.

A set S can be a peak set in S_n iff min(S) >= 2, consecutive elements
differ by at least 2, and max(S) <= n - 1 ("n-admissible").  The routes:

1. peak_gf_compatible: a signed sum over the compatible index sets of S of
   products of Gaussian binomials and (-q; q) factors.
2. peak_gf_recurrence: the deletion recurrence
   P_S(n) = [n choose k]_q P_{S'}(k) (-q;q)_{n-k-1} - P_{S'}(n) - P_{S''}(n)
   with S' = S minus its maximum s, k = s - 1, S'' = S' plus {k}, grounded
   in P_empty(n) = (-q; q)_{n-1}.
3. peak_gf_pie: inclusion-exclusion over admissible supersets of the
   superset sums Q_S(n, q), which factor through a block decomposition into
   q-multinomials, alternating-permutation generating functions, and
   q-factorials.

All three agree with each other and with brute-force enumeration for every
admissible (S, n) with n <= 8; the acceptance suite pins this down exactly.

Route 1 deserves a warning.  The version of the compatible-set sign rule
that circulates with this formula declares a term zero whenever some s in S
has its nearest smaller neighbor s- in T at even distance.  That rule
contradicts the deletion recurrence the formula is derived from (already
for S = {3}, n = 4) and disagrees with enumeration.  Unrolling the
recurrence gives the rule implemented in :func:`epsilon` below: only odd
gaps to a neighbor in S u {0} kill a term, and even gaps to a neighbor in T
flip the sign instead of killing it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator

from .polynomial import ONE, ZERO, IntPolynomial, poly_sum
from .qcore import alternating_length_gf, neg_q_pochhammer, q_binomial, q_factorial, q_multinomial
from .permtools import PositionSet, validate_position_set

__all__ = [
    "is_admissible",
    "compatible_sets",
    "epsilon",
    "compatible_term",
    "peak_gf_compatible",
    "peak_gf_recurrence",
    "BlockDecomposition",
    "block_decomposition",
    "q_superset_gf",
    "admissible_supersets",
    "peak_gf_pie",
    "check_palindromic_peak",
]


def is_admissible(S: Iterable[int], n: int) -> bool:
    """True iff S is the peak set of some permutation of {1..n}."""
    key = validate_position_set(S)
    if n < 1:
        raise ValueError("is_admissible needs n >= 1")
    if not key:
        return True
    if key[0] < 2 or key[-1] > n - 1:
        return False
    return all(b - a >= 2 for a, b in zip(key, key[1:]))


def compatible_sets(S: Iterable[int]) -> tuple[PositionSet, ...]:
    """All index sets T compatible with S, in lexicographic order.

    T is compatible with S when T is disjoint from S, max(T) < max(S), and
    at most one element of T lies strictly between consecutive elements of
    {0} u S.  In particular |T| <= |S|.  For S empty the only compatible
    set is the empty one.
    """
    key = validate_position_set(S)
    if not key:
        return ((),)
    bounds = (0,) + key
    per_gap = [
        (None, *range(lo + 1, hi)) for lo, hi in zip(bounds, bounds[1:])
    ]
    out = []
    for pick in itertools.product(*per_gap):
        out.append(tuple(x for x in pick if x is not None))
    return tuple(sorted(out))


def epsilon(S: Iterable[int], T: Iterable[int]) -> int:
    """Sign (in {-1, 0, +1}) attached to a compatible set T of S.

    For each s in S let s- be the largest element of S u T u {0} below s.
    The sign is the product over s in S of per-element weights obtained by
    unrolling the deletion recurrence:

    * s- in S u {0}: the branch must walk s down and delete it, giving
      weight -1 when s - s- is even and 0 when it is odd;
    * s- in T: the branch must walk s down to s- + 1 and absorb it there,
      giving weight (-1)^(s - s- - 1), never zero.

    Equivalently: 0 if some s has an odd gap to a neighbor in S u {0}, and
    otherwise (-1) to the power sum(s - s- - 1 over s in S).
    """
    s_key = validate_position_set(S)
    t_key = validate_position_set(T)
    t_set = set(t_key)
    below = sorted(set(s_key) | t_set | {0})
    parity = 0
    for s in s_key:
        prev = max(x for x in below if x < s)
        gap = s - prev
        if prev in t_set:
            parity += gap - 1
        else:
            if gap % 2 == 1:
                return 0
            parity += gap - 1
    return -1 if parity % 2 else 1


def compatible_term(S: Iterable[int], T: Iterable[int], n: int) -> IntPolynomial:
    """The unsigned product attached to a compatible set T, with t_0 = 0 and
    t_{r+1} = n:

        prod_i [t_i choose t_{i-1}]_q * (-q; q)_{t_i - t_{i-1} - 1}

    Each term carries exactly n - |T| - 1 factors of the form (1 + q^j) and
    has total degree C(n, 2).
    """
    t_key = validate_position_set(T)
    ts = (0,) + t_key + (n,)
    out = ONE
    for lo, hi in zip(ts, ts[1:]):
        out = out * q_binomial(hi, lo)
        out = out * neg_q_pochhammer(hi - lo - 1)
    return out


def peak_gf_compatible(S: Iterable[int], n: int) -> IntPolynomial:
    """P_S(n, q) as the signed compatible-set sum; 0 for non-admissible S."""
    key = validate_position_set(S)
    if not is_admissible(key, n):
        return ZERO
    total = ZERO
    for T in compatible_sets(key):
        e = epsilon(key, T)
        if e == 0:
            continue
        term = compatible_term(key, T, n)
        total = total + (term if e > 0 else -term)
    return total


@cache
def _peak_recurrence(S: PositionSet, n: int) -> IntPolynomial:
    if not is_admissible(S, n):
        return ZERO
    if not S:
        return neg_q_pochhammer(n - 1)
    s = S[-1]
    s1 = S[:-1]
    k = s - 1
    s2 = s1 + (k,)  # k > max(s1) since gaps in S are >= 2
    head = q_binomial(n, k) * _peak_recurrence(s1, k) * neg_q_pochhammer(n - k - 1)
    return head - _peak_recurrence(s1, n) - _peak_recurrence(s2, n)


def peak_gf_recurrence(S: Iterable[int], n: int) -> IntPolynomial:
    """P_S(n, q) by the memoized deletion recurrence; 0 for non-admissible S.

    Splitting at k = max(S) - 1: permutations whose first k letters have
    peak set S minus its maximum and whose remainder is peak-free decompose
    as [n choose k]_q * P_{S'}(k, q) * (-q; q)_{n-k-1}, and their peak set
    is one of S, S', or S' + {k}; rearranging isolates P_S.  Non-admissible
    intermediate sets contribute zero and short-circuit.
    """
    key = validate_position_set(S)
    if n < 1:
        raise ValueError("peak_gf_recurrence needs n >= 1")
    return _peak_recurrence(key, n)


@dataclass(frozen=True)
class BlockDecomposition:
    """Partition of {1..n} into gap intervals and peak-neighborhood intervals.

    Runs of peaks spaced exactly 2 apart are widened by one on each side to
    form the blocks; what is left over forms the gaps.  Reading order is
    gaps[0], blocks[0], gaps[1], ..., blocks[k-1], gaps[k].  Intervals are
    half-open ranges; every block has odd length >= 3.
    """

    n: int
    blocks: tuple[range, ...]
    gaps: tuple[range, ...]

    def __post_init__(self):
        if len(self.gaps) != len(self.blocks) + 1:
            raise ValueError("need exactly one more gap than blocks")
        cursor = 1
        for i, block in enumerate(self.blocks):
            gap = self.gaps[i]
            if gap.start != cursor:
                raise ValueError(f"gap {i} does not start at {cursor}")
            cursor = gap.stop
            if block.start != cursor:
                raise ValueError(f"block {i} does not start at {cursor}")
            if len(block) % 2 == 0 or len(block) < 3:
                raise ValueError(f"block {i} must have odd length >= 3, got {len(block)}")
            cursor = block.stop
        last = self.gaps[-1]
        if last.start != cursor or last.stop != self.n + 1:
            raise ValueError("final gap must end the partition at n")

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def gap_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.gaps)

    @property
    def part_sizes(self) -> tuple[int, ...]:
        """Sizes interleaved in reading order: u_0, r_1, u_1, ..., r_k, u_k."""
        parts = [len(self.gaps[0])]
        for i, block in enumerate(self.blocks):
            parts.append(len(block))
            parts.append(len(self.gaps[i + 1]))
        return tuple(parts)


def block_decomposition(S: Iterable[int], n: int) -> BlockDecomposition:
    """The decomposition of {1..n} induced by the peak set S.

    Raises for non-admissible S (no decomposition exists); the empty set
    yields a single gap covering all of {1..n}.
    """
    key = validate_position_set(S)
    if not is_admissible(key, n):
        raise ValueError(f"S={key} is not admissible for n={n}")
    if not key:
        return BlockDecomposition(n, (), (range(1, n + 1),))
    runs: list[list[int]] = [[key[0]]]
    for s in key[1:]:
        if s - runs[-1][-1] == 2:
            runs[-1].append(s)
        else:
            runs.append([s])
    blocks = tuple(range(run[0] - 1, run[-1] + 2) for run in runs)
    gaps = []
    cursor = 1
    for block in blocks:
        gaps.append(range(cursor, block.start))
        cursor = block.stop
    gaps.append(range(cursor, n + 1))
    return BlockDecomposition(n, blocks, tuple(gaps))


def q_superset_gf(S: Iterable[int], n: int) -> IntPolynomial:
    """Q_S(n, q): sum of q^inv(w) over w whose peak set contains S.

    Demanding peaks at all of S constrains w only inside the blocks of the
    decomposition, where it must alternate; the blocks and gaps then factor:

        Q_S = [n choose u_0, r_1, ..., u_k]_q * prod E_{r_j}(q) * prod [u_i]!_q
    """
    key = validate_position_set(S)
    if not is_admissible(key, n):
        return ZERO
    decomp = block_decomposition(key, n)
    out = q_multinomial(n, decomp.part_sizes)
    for r in decomp.block_sizes:
        out = out * alternating_length_gf(r)
    for u in decomp.gap_sizes:
        out = out * q_factorial(u)
    return out


def admissible_supersets(S: Iterable[int], n: int) -> tuple[PositionSet, ...]:
    """All n-admissible S' containing S (including S itself), sorted.

    Backtracks over candidate positions in {2..n-1} instead of filtering
    the full power set.
    """
    key = validate_position_set(S)
    if not is_admissible(key, n):
        raise ValueError(f"S={key} is not admissible for n={n}")
    base = set(key)
    candidates = [
        p
        for p in range(2, n)
        if p not in base and all(abs(p - s) >= 2 for s in base)
    ]
    out: list[PositionSet] = []

    def extend(idx: int, chosen: list[int]) -> None:
        out.append(tuple(sorted(base.union(chosen))))
        for i in range(idx, len(candidates)):
            c = candidates[i]
            if chosen and c - chosen[-1] < 2:
                continue
            chosen.append(c)
            extend(i + 1, chosen)
            chosen.pop()

    extend(0, [])
    return tuple(sorted(out))


def peak_gf_pie(S: Iterable[int], n: int) -> IntPolynomial:
    """P_S(n, q) by inclusion-exclusion over admissible supersets of S."""
    key = validate_position_set(S)
    if not is_admissible(key, n):
        return ZERO
    total = ZERO
    for sup in admissible_supersets(key, n):
        term = q_superset_gf(sup, n)
        if (len(sup) - len(key)) % 2:
            total = total - term
        else:
            total = total + term
    return total


def check_palindromic_peak(S: Iterable[int], n: int) -> bool:
    """Whether P_S(n, q), computed by the compatible-set route, is palindromic
    in degree C(n, 2)."""
    return peak_gf_compatible(S, n).is_palindromic(n * (n - 1) // 2)
