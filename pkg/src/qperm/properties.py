"""Strong q-log-concavity checking, convolution closure, and the conjecture scan.

A sequence of polynomials with nonnegative coefficients is strongly
q-log-concave when it has no internal zeroes and every difference

    a_i(q) a_j(q) - a_{i-1}(q) a_{j+1}(q),    1 <= i <= j <= len - 2,

again has nonnegative coefficients.  The quantifier deliberately runs over
all i <= j: restricting to i = j is a strictly weaker condition for
polynomial sequences (unlike for real sequences), and the regression
fixtures in the test suite pin down sequences separating the two.

The scanner checks the open question of whether the a-basis descent
coefficients are strongly q-log-concave, set by set; the b-basis
coefficients provably are, which also makes them a convenient source of
certified inputs for convolution-closure testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .polynomial import ZERO, IntPolynomial
from .descent import a_coefficients_from_b

__all__ = [
    "LogConcavityReport",
    "has_internal_zeroes",
    "is_strongly_q_log_concave",
    "convolve",
    "scan_conjecture",
    "scan_report_dict",
]


@dataclass(frozen=True)
class LogConcavityReport:
    """Outcome of a strong q-log-concavity check.

    holds is true iff both witnesses are absent.  witness carries the
    lexicographically first failing (i, j) pair together with the offending
    difference polynomial; internal_zero_witness the index of a zero entry
    strictly between nonzero entries.
    """

    holds: bool
    witness: tuple[int, int, IntPolynomial] | None = None
    internal_zero_witness: int | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None and self.internal_zero_witness is None):
            raise ValueError("holds must mirror the absence of witnesses")


def _as_entries(seq: Iterable[IntPolynomial]) -> tuple[IntPolynomial, ...]:
    entries = tuple(seq)
    for i, entry in enumerate(entries):
        if not isinstance(entry, IntPolynomial):
            raise TypeError(f"entry {i} is not an IntPolynomial: {entry!r}")
        if not entry.has_nonnegative_coefficients():
            raise ValueError(
                f"entry {i} has negative coefficients; the q-log-concavity "
                f"condition is defined for nonnegative sequences"
            )
    return entries


def has_internal_zeroes(entries: Iterable[IntPolynomial]) -> bool:
    """True iff a zero entry sits strictly between two nonzero entries."""
    entries = _as_entries(entries)
    nonzero = [i for i, e in enumerate(entries) if e]
    if not nonzero:
        return False
    return any(not entries[i] for i in range(nonzero[0], nonzero[-1]))


def is_strongly_q_log_concave(entries: Iterable[IntPolynomial]) -> LogConcavityReport:
    """Check strong q-log-concavity, reporting the first failure if any."""
    entries = _as_entries(entries)
    nonzero = [i for i, e in enumerate(entries) if e]
    if nonzero:
        for i in range(nonzero[0], nonzero[-1]):
            if not entries[i]:
                return LogConcavityReport(False, internal_zero_witness=i)
    for i in range(1, len(entries) - 1):
        for j in range(i, len(entries) - 1):
            diff = entries[i] * entries[j] - entries[i - 1] * entries[j + 1]
            if not diff.has_nonnegative_coefficients():
                return LogConcavityReport(False, witness=(i, j, diff))
    return LogConcavityReport(True)


def convolve(
    s: Sequence[IntPolynomial], t: Sequence[IntPolynomial]
) -> tuple[IntPolynomial, ...]:
    """Coefficientwise convolution: c_i = sum_j s_j t_{i-j}.

    Convolving two strongly q-log-concave sequences yields a strongly
    q-log-concave sequence (a Cauchy-Binet argument on the associated
    Hankel-style matrices); the test suite exercises this closure on
    certified random inputs.
    """
    s = tuple(s)
    t = tuple(t)
    if not s or not t:
        return ()
    out = [ZERO] * (len(s) + len(t) - 1)
    for i, a in enumerate(s):
        if not a:
            continue
        for j, b in enumerate(t):
            if b:
                out[i + j] = out[i + j] + a * b
    return tuple(out)


def scan_conjecture(
    max_m: int,
    progress: Callable[[int, int, tuple[int, ...]], None] | None = None,
) -> tuple[tuple[tuple[int, ...], LogConcavityReport], ...]:
    """Check every descent set with maximum exactly max_m.

    For each S the a-coefficients are computed through the b-basis change of
    basis, and the sequence (a_k)_{k>=1} (the zero a_0 entry dropped) is fed
    to the strong q-log-concavity checker.  Results come back in canonical
    (lexicographic) S order, independent of any internal scheduling; each
    set is an independent work item, so partitioning across workers with an
    ordered merge is safe.  Sets with smaller maxima belong to the scans at
    their own level, which keeps every set checked exactly once across a
    family of scans.
    """
    if max_m < 1:
        raise ValueError("scan_conjecture needs max_m >= 1")
    sets = sorted(
        tuple(sorted(rest + (max_m,)))
        for r in range(0, max_m)
        for rest in itertools.combinations(range(1, max_m), r)
    )
    results = []
    for idx, S in enumerate(sets):
        a = a_coefficients_from_b(S)
        report = is_strongly_q_log_concave(a.coeffs[1:])
        results.append((S, report))
        if progress is not None:
            progress(idx + 1, len(sets), S)
    return tuple(results)


def scan_report_dict(
    max_m: int,
    results: Iterable[tuple[tuple[int, ...], LogConcavityReport]],
    elapsed_seconds: float,
) -> dict:
    """Shape scan results into the report schema written by the CLI."""
    counterexamples = []
    count = 0
    for S, report in results:
        count += 1
        if report.holds:
            continue
        if report.witness is not None:
            i, j, diff = report.witness
        else:
            # an internal zero: flag the offending index on both coordinates
            i = j = report.internal_zero_witness
            diff = ZERO
        counterexamples.append(
            {"set": list(S), "i": i, "j": j, "difference": diff.to_json_dict()}
        )
    return {
        "max_m": max_m,
        "sets_checked": count,
        "counterexamples": counterexamples,
        "elapsed_seconds": elapsed_seconds,
    }
