"""Dyck numbers: membership, structure, successor, and path codecs.

A Dyck number is a natural number whose binary expansion keeps at least as
many 1s as 0s in every suffix (OEIS A036991). Read left to right, with
enough leading zeros restored to balance the digit counts, the expansion
encodes a lattice path: 0 is an up step, 1 is a down step (A350346).
Zero is a Dyck number and stands for the empty path; every other Dyck
number is odd.

Bit positions are counted right to left starting at 0, as usual for
integers, so "suffix" always means the low-order end of the expansion.
Height profiles returned by this module are indexed the same way
(entry 0 belongs to the least significant digit); reverse them when you
want the left-to-right picture of the path.

All functions are pure and operate on plain ``int`` values of any size.
"""

from __future__ import annotations

UP = "U"
DOWN = "D"

_BITS_TO_STEPS = str.maketrans("01", UP + DOWN)
_STEPS_TO_BITS = str.maketrans(UP + DOWN, "01")
_STEPS_TO_STANDARD = str.maketrans(UP + DOWN, "10")


class NotDyckNumberError(ValueError):
    """Input fails the suffix-balance rule, so it encodes no Dyck path."""

    def __init__(self, value: int, suffix: str):
        self.value = value
        self.suffix = suffix
        super().__init__(
            f"{value} is not a Dyck number: suffix {suffix} of its binary "
            f"expansion has more 0s than 1s"
        )


class NotDyckWordError(ValueError):
    """Step string is not a balanced path that stays on or above ground."""

    def __init__(self, word: str, reason: str):
        self.word = word
        self.reason = reason
        super().__init__(f"{word!r} is not a Dyck word: {reason}")


def _reversed_bits(n: int) -> str:
    # binary digits of n from least to most significant
    return bin(n)[:1:-1]


def violating_suffix(n: int) -> str | None:
    """Shortest suffix of n's binary expansion with more 0s than 1s.

    Returns the suffix as a left-to-right digit string, or None when n is
    a Dyck number. Scans once from the low end, so the first position at
    which the running 1s-minus-0s balance dips below zero ends the search.
    """
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return None
    balance = 0
    pos = 0
    for bit in _reversed_bits(n):
        balance += 1 if bit == "1" else -1
        if balance < 0:
            width = pos + 1
            return format(n & ((1 << width) - 1), f"0{width}b")
        pos += 1
    return None


def is_dyck_number(n: int) -> bool:
    """True when every suffix of n's binary expansion has #1s >= #0s.

    is_dyck_number(0) is True: zero encodes the empty path.
    """
    return violating_suffix(n) is None


def _require_dyck(n: int) -> None:
    suffix = violating_suffix(n)
    if suffix is not None:
        raise NotDyckNumberError(n, suffix)


def repunit_suffix_len(n: int) -> int:
    """Number of trailing 1-digits of n (0 for n = 0 and for even n)."""
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    return ((n + 1) & -(n + 1)).bit_length() - 1


def mersenne(k: int) -> int:
    """k-th Mersenne number 2**k - 1, the largest Dyck number of k bits."""
    if k < 0:
        raise ValueError(f"Mersenne index must be non-negative, got {k}")
    return (1 << k) - 1


def mersenne_successor(k: int) -> int:
    """Dyck successor of the k-th Mersenne number, in closed form.

    The next Dyck number after 2**k - 1 is 2**k - 1 + 2**ceil(k/2): one
    leading 1, then floor(k/2) zeros, then ceil(k/2) ones. It is the first
    member of the (k+1)-bit range.
    """
    if k < 0:
        raise ValueError(f"Mersenne index must be non-negative, got {k}")
    return (1 << k) - 1 + (1 << ((k + 1) // 2))


def height_profile(d: int) -> list[int]:
    """Per-digit path heights of d's binary expansion, low digit first.

    Entry p is the count of 1s minus the count of 0s among bit positions
    0..p. For a Dyck number the profile never dips below zero; entry 0 is
    always 1 (the expansion of a non-zero Dyck number ends in 1). The
    empty list is returned for d = 0.

    Raises NotDyckNumberError if the profile would go negative.
    """
    _require_dyck(d)
    heights = []
    level = 0
    for bit in _reversed_bits(d) if d else "":
        level += 1 if bit == "1" else -1
        heights.append(level)
    return heights


def _scan_valley_depth(d: int) -> int | None:
    # minimum height immediately below each 0->1 ascent, scanning LSB first
    depth = None
    level = 0
    prev_bit = "1"
    for bit in _reversed_bits(d):
        if bit == "1":
            if prev_bit == "0" and (depth is None or level < depth):
                depth = level
            level += 1
        else:
            level -= 1
        prev_bit = bit
    return depth


def valley_depth(d: int) -> int | None:
    """Depth of the deepest valley of d's path, or None if there is none.

    A valley sits wherever a 1-digit immediately follows a 0-digit going
    up from the least significant end; its depth is the height just
    before that ascent. Mersenne numbers and 0 have no 0-digit inside the
    expansion, hence no valley and a None depth.
    """
    _require_dyck(d)
    if d == 0:
        return None
    return _scan_valley_depth(d)


def _successor_unchecked(d: int) -> int:
    rep = repunit_suffix_len(d)
    if rep == 0:
        return 1
    if rep == d.bit_length():
        # pure repunit, i.e. a Mersenne number
        return d + (1 << ((rep + 1) // 2))
    if rep <= 2:
        return d + 2
    depth = _scan_valley_depth(d)
    if depth > rep - 2:
        # swapping the lowest 0 with the top of the trailing 1-run creates
        # a valley of height rep - 2; deeper prior valleys keep priority
        depth = rep - 2
    return d + (1 << (rep - 1 - depth // 2))


def successor(d: int) -> int:
    """Smallest Dyck number strictly greater than d, in closed form.

    Only the trailing 1-run length and the deepest valley of d are
    consulted, so the cost is one pass over the binary expansion; no
    candidates are scanned. Raises NotDyckNumberError on non-Dyck input.
    """
    _require_dyck(d)
    return _successor_unchecked(d)


def _word_violation(word: str) -> str | None:
    level = 0
    for i, step in enumerate(word):
        if step == UP:
            level += 1
        elif step == DOWN:
            level -= 1
            if level < 0:
                return f"path dips below ground at step {i + 1}"
        else:
            return f"invalid step {step!r} at position {i} (expected U or D)"
    if level != 0:
        return f"unbalanced: {level} more up steps than down steps"
    return None


def is_dyck_word(word: str) -> bool:
    """True for a balanced U/D string whose every prefix has #U >= #D."""
    return _word_violation(word) is None


def to_dyck_word(d: int) -> str:
    """Step string of the path encoded by d, e.g. 5 -> 'UDUD'.

    Leading zeros are restored so the expansion has as many 0s as 1s,
    then 0 maps to U and 1 to D, most significant digit first. Returns
    the empty string for d = 0.
    """
    _require_dyck(d)
    if d == 0:
        return ""
    width = 2 * d.bit_count()
    return format(d, f"0{width}b").translate(_BITS_TO_STEPS)


def from_dyck_word(word: str) -> int:
    """Dyck number encoding the given step string; inverse of to_dyck_word.

    Raises NotDyckWordError when the string is unbalanced, dips below
    ground, or contains characters other than U and D.
    """
    reason = _word_violation(word)
    if reason is not None:
        raise NotDyckWordError(word, reason)
    if not word:
        return 0
    return int(word.translate(_STEPS_TO_BITS), 2)


def to_standard_code(d: int) -> int:
    """A014486 code of d's path: U maps to 1, D to 0, read as binary.

    The standard code of a path of semilength n occupies exactly 2n bits
    and is the bitwise complement of the zero-restored expansion of d, so
    within one semilength the map reverses order. to_standard_code(0) = 0.
    """
    _require_dyck(d)
    if d == 0:
        return 0
    return int(to_dyck_word(d).translate(_STEPS_TO_STANDARD), 2)
