"""Range structure and ordinal indexing of the Dyck number sequence.

Dyck numbers of the same binary length k form the k-th range: it starts
at the successor of the (k-1)-th Mersenne number and ends at the k-th.
Range sizes appear to follow the central binomial sequence A001405, with
the k-th range holding C(k-1, floor((k-1)/2)) terms. That is verified
empirically here, not proven, so every routine that skips ahead using
expected sizes double-checks the terms it lands on.

Ordinals are 1-based with term 1 equal to 0, matching the published
A036991 b-file (term 13496 is 65535).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Iterator

from . import core

logger = logging.getLogger(__name__)


def central_binomial(m: int) -> int:
    """C(m, floor(m/2)), the m-th term of A001405, exactly."""
    return comb(m, m // 2)


def iter_from(start: int = 0) -> Iterator[int]:
    """Yield start and then each Dyck successor, without end.

    Raises NotDyckNumberError if start is not a Dyck number.
    """
    core._require_dyck(start)
    d = start
    while True:
        yield d
        d = core._successor_unchecked(d)


def iter_range(k: int) -> Iterator[int]:
    """Yield the Dyck numbers of binary length exactly k, ascending."""
    if k < 1:
        raise ValueError(f"range index must be >= 1, got {k}")
    d = core.mersenne_successor(k - 1)
    last = core.mersenne(k)
    while d < last:
        yield d
        d = core._successor_unchecked(d)
    yield last


def range_terms(k: int, *, allow_zero_range: bool = False) -> list[int]:
    """All Dyck numbers of binary length exactly k, as an ascending list.

    Range 0 holds only the empty path; ask for it explicitly with
    allow_zero_range=True, since most uses start at range 1.
    """
    if k == 0:
        if not allow_zero_range:
            raise ValueError(
                "range 0 is the single empty path; pass allow_zero_range=True"
            )
        return [0]
    return list(iter_range(k))


@dataclass(frozen=True)
class RangeStats:
    """Counted versus expected size of one range of Dyck numbers."""

    k: int
    first: int
    last: int
    size: int
    expected: int

    @property
    def matches(self) -> bool:
        return self.size == self.expected


def range_stats(k: int) -> RangeStats:
    """Boundary terms and counted size of range k, with the A001405 check.

    The first and last terms come from closed forms; the size is counted
    by walking the whole range with the successor function.
    """
    size = sum(1 for _ in iter_range(k))
    return RangeStats(
        k=k,
        first=core.mersenne_successor(k - 1),
        last=core.mersenne(k),
        size=size,
        expected=central_binomial(k - 1),
    )


def verify_conjecture(max_k: int) -> list[RangeStats]:
    """Count ranges 1..max_k and compare each against A001405(k-1).

    Agreement says nothing beyond the checked indices; the range-size law
    is a conjecture and this is a desk check, not a proof.
    """
    if max_k < 1:
        raise ValueError(f"max_k must be >= 1, got {max_k}")
    return [range_stats(k) for k in range(1, max_k + 1)]


def _locate_range(i: int) -> tuple[int, int]:
    # (range index, offset inside range) of ordinal i >= 2 under the
    # conjectured sizes
    first_ordinal = 2
    k = 1
    while True:
        size = central_binomial(k - 1)
        if i < first_ordinal + size:
            return k, i - first_ordinal
        first_ordinal += size
        k += 1


def _term_at_by_iteration(i: int) -> int:
    d = 0
    for _ in range(i - 1):
        d = core._successor_unchecked(d)
    return d


def term_at(i: int) -> int:
    """The i-th Dyck number, 1-based, with term_at(1) = 0.

    Whole ranges are skipped using the conjectured A001405 sizes, then
    the successor walks the final stretch. If the walk ever crosses a
    range boundary where the conjectured size said it should not, the
    conjecture failed there: the result is recomputed by plain iteration
    from 0 and a warning is logged.
    """
    if i < 1:
        raise ValueError(f"ordinal must be >= 1, got {i}")
    if i == 1:
        return 0
    k, offset = _locate_range(i)
    d = core.mersenne_successor(k - 1)
    if d.bit_length() != k:
        logger.warning("range %d does not start at a %d-bit number", k, k)
        return _term_at_by_iteration(i)
    last = core.mersenne(k)
    for _ in range(offset):
        d = core._successor_unchecked(d)
        if d > last:
            logger.warning(
                "range %d is larger than the conjectured size; "
                "falling back to full iteration for ordinal %d",
                k,
                i,
            )
            return _term_at_by_iteration(i)
    return d


def index_of(d: int) -> int:
    """1-based ordinal of the Dyck number d; inverse of term_at.

    Raises NotDyckNumberError for non-Dyck input. Ordinals of terms in
    unexplored ranges rest on the conjectured sizes of all earlier
    ranges, like term_at.
    """
    core._require_dyck(d)
    if d == 0:
        return 1
    k = d.bit_length()
    ordinal = 2 + sum(central_binomial(j - 1) for j in range(1, k))
    t = core.mersenne_successor(k - 1)
    while t < d:
        t = core._successor_unchecked(t)
        ordinal += 1
    return ordinal


class SequenceCursor:
    """Walks the sequence keeping the term and its 1-based ordinal in step."""

    __slots__ = ("current", "ordinal")

    def __init__(self, start: int = 0):
        core._require_dyck(start)
        self.current = start
        self.ordinal = index_of(start)

    @classmethod
    def from_index(cls, i: int) -> "SequenceCursor":
        """Cursor positioned on the i-th term."""
        cursor = cls.__new__(cls)
        cursor.current = term_at(i)
        cursor.ordinal = i
        return cursor

    def advance(self) -> int:
        """Step to the next Dyck number and return it."""
        self.current = core._successor_unchecked(self.current)
        self.ordinal += 1
        return self.current

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Yield (ordinal, term) pairs from the current position, without end."""
        while True:
            yield self.ordinal, self.current
            self.advance()
