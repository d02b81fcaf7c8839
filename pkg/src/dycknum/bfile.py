"""Read, write, and diff OEIS b-files.

A b-file lists one "index value" pair per line, indices consecutive,
with '#' comment lines and blank lines ignored. Output always uses \\n
line endings and ends with a newline; input accepts \\r\\n too. There is
no network code here: reference files are supplied locally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MATCH = "match"
MISMATCH = "mismatch"
LENGTH_DIFFERS = "length-differs"


class BFileParseError(ValueError):
    """Malformed b-file content, located by line number."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: consecutive indices from offset, one value each."""

    offset: int
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end(self) -> int:
        """One past the last index."""
        return self.offset + len(self.values)

    def entries(self) -> Iterator[tuple[int, int]]:
        """(index, value) pairs in file order."""
        return enumerate(self.values, start=self.offset)


def parse_bfile(text: str | Iterable[str]) -> BFile:
    """Parse b-file text into a BFile.

    Accepts a string or an iterable of lines. Comment lines start with
    '#'. Raises BFileParseError, naming the line, for anything that is
    not an "index value" pair of integers or breaks index consecutiveness.
    An input with no data lines parses as an empty BFile at offset 1.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    offset = 1
    values: list[int] = []
    next_index = None
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(
                line_number, f"expected 'index value', got {line!r}"
            )
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(
                line_number, f"non-numeric token in {line!r}"
            ) from None
        if value < 0:
            raise BFileParseError(line_number, f"negative value {value}")
        if next_index is None:
            offset = index
        elif index != next_index:
            raise BFileParseError(
                line_number, f"index gap: expected {next_index}, got {index}"
            )
        next_index = index + 1
        values.append(value)
    return BFile(offset=offset, values=tuple(values))


def emit_bfile(terms: Iterable[int], offset: int = 1) -> str:
    """Render terms as canonical b-file text.

    One "index value" line per term, indices counting up from offset,
    each line newline-terminated. Deterministic: equal inputs give
    byte-identical output. An empty sequence yields the empty string.
    """
    return "".join(f"{i} {t}\n" for i, t in enumerate(terms, start=offset))


@dataclass(frozen=True)
class DiffReport:
    """Outcome of comparing two b-files over their shared index span."""

    verdict: str  # MATCH, MISMATCH, or LENGTH_DIFFERS
    compared_count: int
    first_mismatch: tuple[int, int, int] | None = None  # (index, expected, actual)


def compare(generated: BFile, reference: BFile) -> DiffReport:
    """Compare generated against reference values position by position.

    Values are compared over the overlapping index span and the first
    disagreement wins (expected is the reference value). If all shared
    values agree but the spans differ in offset or length, including the
    case of no overlap at all, the verdict is LENGTH_DIFFERS.
    """
    lo = max(generated.offset, reference.offset)
    hi = min(generated.end, reference.end)
    compared = 0
    for index in range(lo, hi):
        compared += 1
        actual = generated.values[index - generated.offset]
        expected = reference.values[index - reference.offset]
        if actual != expected:
            return DiffReport(MISMATCH, compared, (index, expected, actual))
    if generated.offset != reference.offset or generated.end != reference.end:
        return DiffReport(LENGTH_DIFFERS, compared)
    return DiffReport(MATCH, compared)
