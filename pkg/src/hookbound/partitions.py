"""Integer partitions and Young diagrams with exact combinatorics.

Partitions are stored as weakly decreasing tuples of positive parts (no
trailing zeros); ``part(i)`` reads as 0 beyond the stored length, so
expressions like "lambda_{k+1} <= l" work for short partitions.  All values
are immutable and all operations are pure functions, so everything here is
safe to share across threads.

Cell coordinates are 1-based ``(row, col)``.  The text formats used by the
CLI and report files live here too: partitions are comma-separated part
lists ("9,6,4,2,2,1", empty string for the empty partition) and rationals
are "p/q" or "p" strings, kept exact via ``fractions.Fraction``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CellOutOfDiagramError,
    EmptySampleSpaceError,
    HookBoundError,
    RemovalError,
)


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """A partition of n, identified with its Young diagram of left-justified rows."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        prev = None
        for p in parts:
            if p < 1:
                raise HookBoundError(f"parts must be positive, got {p} in {parts}")
            if prev is not None and p > prev:
                raise HookBoundError(f"parts must be weakly decreasing, got {parts}")
            prev = p

    # -- construction and text format ------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the comma-separated text format; "" is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise HookBoundError(f"cannot parse partition {text!r}") from exc
        return cls(parts)

    def format(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return self.format() if self.parts else "(empty)"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part access; 0 beyond the stored parts."""
        if i < 1:
            raise HookBoundError(f"part index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def cells(self) -> Iterator[Cell]:
        """All cells in row-major order."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield Cell(i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    # -- diagram operations -------------------------------------------------

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: part j of the result is the length of column j."""
        if not self.parts:
            return Partition(())
        width = self.parts[0]
        cols = [0] * width
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def arm(self, cell) -> int:
        i, j = cell
        if cell not in self:
            raise CellOutOfDiagramError(Cell(i, j), self)
        return self.parts[i - 1] - j

    def leg(self, cell) -> int:
        i, j = cell
        if cell not in self:
            raise CellOutOfDiagramError(Cell(i, j), self)
        return self.conjugate().parts[j - 1] - i

    def hook_length(self, cell) -> int:
        """arm + leg + 1 of the cell, in this diagram."""
        i, j = cell
        if cell not in self:
            raise CellOutOfDiagramError(Cell(i, j), self)
        conj = self.conjugate().parts
        return (self.parts[i - 1] - j) + (conj[j - 1] - i) + 1

    def hook_grid(self) -> dict[Cell, int]:
        """Hook lengths of every cell, computed in one pass."""
        conj = self.conjugate().parts
        return {
            Cell(i, j): (row - j) + (conj[j - 1] - i) + 1
            for i, row in enumerate(self.parts, start=1)
            for j in range(1, row + 1)
        }

    def diagonal(self) -> int:
        """Side of the largest square diagram contained in this one."""
        conj = self.conjugate().parts
        d = 0
        while (
            d < len(self.parts)
            and d < len(conj)
            and self.parts[d] >= d + 1
            and conj[d] >= d + 1
        ):
            d += 1
        return d

    def in_hook_class(self, k: int, l: int) -> bool:
        """True iff part k+1 is at most l (diagram fits the k-row, l-column hook)."""
        if k < 0 or l < 0:
            raise HookBoundError("hook class parameters must be non-negative")
        return self.part(k + 1) <= l

    def corner_cells(self) -> tuple[Cell, ...]:
        """Cells with hook length 1, top to bottom."""
        out = []
        for i, row in enumerate(self.parts, start=1):
            nxt = self.parts[i] if i < len(self.parts) else 0
            if row > nxt:
                out.append(Cell(i, row))
        return tuple(out)

    def remove_cells(self, cells: Iterable[Cell]) -> "Partition":
        """Remove a set of cells that peels corners of the running diagram.

        Validates that in each row the removed cells are exactly a rightmost
        run and that the result is still a partition; otherwise the removal
        could not have proceeded corner by corner in any order.
        """
        by_row: dict[int, set[int]] = {}
        for cell in cells:
            i, j = cell
            if cell not in self:
                raise CellOutOfDiagramError(Cell(i, j), self)
            by_row.setdefault(i, set()).add(j)
        new_parts = list(self.parts)
        for i, cols in by_row.items():
            row = self.parts[i - 1]
            expected = set(range(row - len(cols) + 1, row + 1))
            if cols != expected:
                j = min(cols - expected)
                raise RemovalError(Cell(i, j), "removed cells in a row must be a rightmost run")
            new_parts[i - 1] = row - len(cols)
        for idx in range(len(new_parts) - 1):
            if new_parts[idx] < new_parts[idx + 1]:
                bad_row = idx + 1
                bad_col = min(by_row.get(bad_row, {new_parts[idx] + 1}))
                raise RemovalError(
                    Cell(bad_row, bad_col), "result is not weakly decreasing"
                )
        return Partition(tuple(p for p in new_parts if p > 0))

    def contains(self, other: "Partition") -> bool:
        """True iff ``other`` fits inside this diagram row by row."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))


# -- text format for exact rationals ----------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p"; rejects decimal and float forms."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise HookBoundError(f"cannot parse rational {text!r} (expected p or p/q)")
    return Fraction(text)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_partition(text: str) -> Partition:
    return Partition.parse(text)


def format_partition(p: Partition) -> str:
    return p.format()


# -- enumeration, counting, exact-uniform sampling ---------------------------


def enumerate_partitions(
    n: int, max_part: int | None = None, max_parts: int | None = None
) -> Iterator[Partition]:
    """All partitions of n within the bounds, in reverse lexicographic order.

    Reverse lexicographic means (4), (3,1), (2,2), (2,1,1), (1,1,1,1):
    partitions with larger leading parts come first.
    """
    if n < 0:
        raise HookBoundError("n must be non-negative")
    cap = n if max_part is None else min(max_part, n)
    slots = n if max_parts is None else max_parts

    def gen(rem: int, cap: int, slots: int, prefix: list[int]) -> Iterator[Partition]:
        if rem == 0:
            yield Partition(tuple(prefix))
            return
        if cap <= 0 or slots <= 0:
            return
        low = -(-rem // slots)
        for p in range(min(cap, rem), low - 1, -1):
            prefix.append(p)
            yield from gen(rem - p, p, slots - 1, prefix)
            prefix.pop()

    yield from gen(n, cap, slots, [])


@lru_cache(maxsize=None)
def _count(rem: int, cap: int, slots: int) -> int:
    if rem == 0:
        return 1
    if cap <= 0 or slots <= 0:
        return 0
    total = 0
    low = -(-rem // slots)
    for p in range(min(cap, rem), low - 1, -1):
        total += _count(rem - p, p, slots - 1)
    return total


def count_partitions(n: int, max_part: int | None = None, max_parts: int | None = None) -> int:
    """Exact number of partitions of n within the bounds (big-integer DP)."""
    if n < 0:
        raise HookBoundError("n must be non-negative")
    cap = n if max_part is None else min(max_part, n)
    slots = n if max_parts is None else max_parts
    return _count(n, cap, slots)


def unrank_partition(n: int, max_part: int, max_parts: int, rank: int) -> Partition:
    """The rank-th partition of the constrained set in reverse-lexicographic order.

    Walks the same count table the enumeration order follows, so unranking
    the ranks 0..count-1 reproduces ``enumerate_partitions`` exactly.
    """
    cap = min(max_part, n)
    total = _count(n, cap, max_parts)
    if not 0 <= rank < total:
        raise HookBoundError(f"rank {rank} outside 0..{total - 1}")
    parts: list[int] = []
    rem, slots = n, max_parts
    while rem > 0:
        for p in range(min(cap, rem), 0, -1):
            block = _count(rem - p, p, slots - 1)
            if rank < block:
                parts.append(p)
                rem -= p
                cap = p
                slots -= 1
                break
            rank -= block
        else:  # pragma: no cover - unreachable when total was counted consistently
            raise AssertionError("unranking exhausted the count table")
    return Partition(tuple(parts))


def sample_partition(n: int, max_part: int, max_parts: int, seed: int) -> Partition:
    """Exact-uniform sample over the constrained set by count-table unranking.

    ``randrange`` over the exact big-integer count composed with the
    unranking bijection gives exact uniformity; deterministic for a fixed
    seed.  Raises when no partition satisfies the bounds.
    """
    if n < 1:
        raise HookBoundError("n must be positive")
    total = _count(n, min(max_part, n), max_parts)
    if total == 0:
        raise EmptySampleSpaceError(
            f"no partition of {n} with parts <= {max_part} and length <= {max_parts}"
        )
    rank = random.Random(seed).randrange(total)
    return unrank_partition(n, max_part, max_parts, rank)
