"""Permutations, their statistics, and exhaustive brute-force oracles.

The oracles here are the ground truth that every formula elsewhere in the
package is validated against.  A single sweep of S_n buckets all of its
permutations by descent set, by peak set, and by (descent set, last value)
at once, so a full cross-validation pass costs one n! enumeration per n
rather than one per query.  Sweeps are cached; the cached tables are
immutable and safe to query from multiple threads.

Enumeration refuses n above a cap (default 10, about 3.6 million
permutations) unless the caller raises the cap explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

from .polynomial import ZERO, IntPolynomial

DEFAULT_ENUMERATION_CAP = 10

PositionSet = tuple[int, ...]


class EnumerationCapError(ValueError):
    """Raised when a brute-force request exceeds the enumeration cap."""


def validate_position_set(elements: Iterable[int]) -> PositionSet:
    """Normalize to a tuple, requiring strictly increasing positive integers.

    Deliberately does not sort: out-of-order input is more likely a typo
    than an intentional set, so it fails loudly.
    """
    elems = tuple(elements)
    for x in elems:
        if not isinstance(x, int) or x < 1:
            raise ValueError(f"position sets hold positive integers, got {x!r}")
    if any(a >= b for a, b in zip(elems, elems[1:])):
        raise ValueError(f"position set must be strictly increasing, got {elems}")
    return elems


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} in one-line notation.

    >>> Permutation((3, 4, 1, 2)).descent_set()
    (2,)
    >>> Permutation((1, 3, 2)).peak_set()
    (2,)
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word!r} is not a permutation of 1..{len(word)}")

    @property
    def size(self) -> int:
        return len(self.word)

    def descent_set(self) -> PositionSet:
        return descent_set(self.word)

    def peak_set(self) -> PositionSet:
        return peak_set(self.word)

    def inversion_count(self) -> int:
        return inversion_count(self.word)

    def reversed(self) -> "Permutation":
        return Permutation(self.word[::-1])


WordLike = Union[Permutation, Sequence[int]]


def _word(p: WordLike) -> Sequence[int]:
    return p.word if isinstance(p, Permutation) else p


def descent_set(p: WordLike) -> PositionSet:
    """Positions i (1-based) with p(i) > p(i+1)."""
    w = _word(p)
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def peak_set(p: WordLike) -> PositionSet:
    """Interior positions i with p(i-1) < p(i) > p(i+1)."""
    w = _word(p)
    return tuple(i for i in range(2, len(w)) if w[i - 2] < w[i - 1] > w[i])


def inversion_count(p: WordLike) -> int:
    """Number of pairs i < j with p(i) > p(j); at most C(n, 2)."""
    w = _word(p)
    n = len(w)
    total = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                total += 1
    return total


def iter_permutations(n: int):
    """All of S_n in lexicographic order, as tuples on {1..n}."""
    return itertools.permutations(range(1, n + 1))


class _SweepTables(NamedTuple):
    by_descent_set: dict
    by_peak_set: dict
    by_descent_and_last: dict


@lru_cache(maxsize=None)
def _sweep(n: int) -> _SweepTables:
    """One pass over S_n filling all three oracle tables."""
    size = n * (n - 1) // 2 + 1
    des_acc: dict[PositionSet, list[int]] = {}
    peak_acc: dict[PositionSet, list[int]] = {}
    last_acc: dict[tuple[PositionSet, int], list[int]] = {}
    for w in iter_permutations(n):
        inv = 0
        for i in range(n):
            wi = w[i]
            for j in range(i + 1, n):
                if wi > w[j]:
                    inv += 1
        des = tuple(i for i in range(1, n) if w[i - 1] > w[i])
        pk = tuple(i for i in range(2, n) if w[i - 2] < w[i - 1] > w[i])
        for acc, key in ((des_acc, des), (peak_acc, pk), (last_acc, (des, w[-1]))):
            bucket = acc.get(key)
            if bucket is None:
                bucket = acc[key] = [0] * size
            bucket[inv] += 1
    freeze = lambda acc: {k: IntPolynomial(v) for k, v in acc.items()}
    return _SweepTables(freeze(des_acc), freeze(peak_acc), freeze(last_acc))


def _checked(n: int, cap: int | None) -> int:
    if n < 1:
        raise ValueError("enumeration needs n >= 1")
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    if n > limit:
        raise EnumerationCapError(
            f"n={n} exceeds the brute-force enumeration cap of {limit}; "
            f"pass a larger cap explicitly to force the sweep"
        )
    return n


def brute_descent_gf(S: Iterable[int], n: int, *, cap: int | None = None) -> IntPolynomial:
    """Sum of q^inv(w) over w in S_n with descent set exactly S, by enumeration."""
    key = validate_position_set(S)
    _checked(n, cap)
    return _sweep(n).by_descent_set.get(key, ZERO)


def brute_peak_gf(S: Iterable[int], n: int, *, cap: int | None = None) -> IntPolynomial:
    """Sum of q^inv(w) over w in S_n with peak set exactly S, by enumeration."""
    key = validate_position_set(S)
    _checked(n, cap)
    return _sweep(n).by_peak_set.get(key, ZERO)


def brute_superset_peak_gf(S: Iterable[int], n: int, *, cap: int | None = None) -> IntPolynomial:
    """Sum of q^inv(w) over w in S_n whose peak set contains S."""
    key = set(validate_position_set(S))
    _checked(n, cap)
    total = ZERO
    for pk, poly in _sweep(n).by_peak_set.items():
        if key <= set(pk):
            total = total + poly
    return total


def brute_descent_gf_by_last(
    S: Iterable[int], n: int, *, cap: int | None = None
) -> tuple[IntPolynomial, ...]:
    """Bucket the descent class of S in S_n by last value.

    Entry k (1-based; entry 0 is zero padding) is the sum of q^inv(w) over
    w with descent set exactly S and w(n) = k.
    """
    key = validate_position_set(S)
    _checked(n, cap)
    table = _sweep(n).by_descent_and_last
    return tuple(table.get((key, k), ZERO) for k in range(n + 1))
