"""Pipe dreams: cross tilings of the staircase region of an n x n grid.

A pipe dream is identified with its set of crosses, 1-based cells (row, col)
with row + col <= n.  The cross in cell (r, c) lies on antidiagonal r + c - 1,
which is the letter it contributes to the reading word (right to left along
each row, rows top to bottom).  Recording rows instead of antidiagonals gives
the compatible sequence, and the pair determines the pipe dream.

The permutation of a pipe dream is the Demazure product of its reading word;
the dream is reduced when the word is, equivalently when its excess is 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import perms
from .perms import Permutation, Word


@dataclass(frozen=True)
class PipeDream:
    """Crosses in the staircase of an n x n ambient grid."""

    n: int
    crosses: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for (r, c) in self.crosses:
            if r < 1 or c < 1 or r + c > self.n:
                raise ValueError(f"cross {(r, c)} outside the staircase of size {self.n}")

    @staticmethod
    def empty(n: int) -> "PipeDream":
        return PipeDream(n, frozenset())

    @cached_property
    def _reading_order(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.crosses, key=lambda rc: (rc[0], -rc[1])))

    def reading_word(self) -> Word:
        """Antidiagonal indices right-to-left, top-to-bottom."""
        return tuple(r + c - 1 for (r, c) in self._reading_order)

    def row_sequence(self) -> Word:
        """Row record of the reading order, a compatible sequence."""
        return tuple(r for (r, _) in self._reading_order)

    def permutation(self) -> Permutation:
        return perms.demazure(self.reading_word())

    @property
    def excess(self) -> int:
        return len(self.crosses) - self.permutation().length

    def is_reduced(self) -> bool:
        return perms.is_reduced(self.reading_word())

    def weight(self) -> tuple[int, ...]:
        """Crosses per row, as a weak composition."""
        top = max((r for (r, _) in self.crosses), default=0)
        counts = [0] * top
        for (r, _) in self.crosses:
            counts[r - 1] += 1
        return tuple(counts)

    def transpose(self) -> "PipeDream":
        return PipeDream(self.n, frozenset((c, r) for (r, c) in self.crosses))

    def sorted_crosses(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.crosses))

    def __repr__(self) -> str:
        cells = ",".join(f"({r},{c})" for (r, c) in self.sorted_crosses())
        return f"PipeDream(n={self.n}, {{{cells}}})"


def from_word_and_rows(word: Word, rows: Word, n: int) -> PipeDream:
    """Rebuild a pipe dream from its reading word and row record.

    The rows must be compatible with the word and the crosses must land
    inside the staircase, pairwise distinct.
    """
    if not perms.is_compatible(word, rows, lower_bound=1):
        raise ValueError(f"rows {rows!r} are not compatible with word {word!r}")
    crosses = set()
    for letter, row in zip(word, rows):
        cell = (row, letter - row + 1)
        if cell in crosses:
            raise ValueError(f"duplicate cross at {cell}")
        crosses.add(cell)
    dream = PipeDream(n, frozenset(crosses))
    if dream.reading_word() != tuple(word):
        raise ValueError("word/rows pair does not match its own reading order")
    return dream


def bottom_pipe_dream(p: Permutation, n: int | None = None) -> PipeDream:
    """Left-justified pipe dream: row i holds as many crosses as the i-th
    entry of the Lehmer code.
    """
    code = perms.lehmer_code(p)
    if n is None:
        n = ambient_size(p)
    crosses = frozenset((i + 1, j + 1) for i, c in enumerate(code) for j in range(c))
    return PipeDream(n, crosses)


def ambient_size(p: Permutation) -> int:
    """Smallest staircase holding every pipe dream for p."""
    if p.support is None:
        return 1
    if p.support[0] < 1:
        raise ValueError("pipe dreams need support inside the positive integers")
    return p.support[1]


def chute_moves(dream: PipeDream) -> frozenset[PipeDream]:
    """All pipe dreams one chute move away (either direction).

    A chute exchanges a cross between the top-right cell (i, j+k+1) and the
    bottom-left cell (i+1, j) of a 2 x (k+2) block whose interior columns are
    fully crossed in both rows and whose other two corners are elbows.
    """
    n = dream.n
    crosses = dream.crosses
    out = set()

    def pattern_clear(i: int, j: int, right: int) -> bool:
        if (i, j) in crosses or (i + 1, right) in crosses:
            return False
        return all((i, b) in crosses and (i + 1, b) in crosses
                   for b in range(j + 1, right))

    for (r, c) in crosses:
        # downward: (r, c) is the top-right cross, landing on (r+1, j).
        # The landing cell stays in the staircase because r + c <= n already.
        for j in range(c - 1, 0, -1):
            if (r + 1, j) not in crosses and pattern_clear(r, j, c):
                out.add(PipeDream(n, (crosses - {(r, c)}) | {(r + 1, j)}))
        # upward: (r, c) is the bottom-left cross, landing on (r-1, right).
        if r >= 2:
            for right in range(c + 1, n + 1):
                if (r - 1) + right > n:
                    break
                if (r - 1, right) not in crosses and pattern_clear(r - 1, c, right):
                    out.add(PipeDream(n, (crosses - {(r, c)}) | {(r - 1, right)}))
    return frozenset(out)


def ladder_moves(dream: PipeDream) -> frozenset[PipeDream]:
    """Transposes of chute moves."""
    return frozenset(d.transpose() for d in chute_moves(dream.transpose()))


def reduced_pipe_dreams(p: Permutation, n: int | None = None) -> frozenset[PipeDream]:
    """All reduced pipe dreams for p: the chute/ladder closure of the bottom
    pipe dream.
    """
    if n is None:
        n = ambient_size(p)
    start = bottom_pipe_dream(p, n)
    seen = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for neighbour in chute_moves(current) | ladder_moves(current):
            if neighbour not in seen:
                seen.add(neighbour)
                frontier.append(neighbour)
    return frozenset(seen)


def triangular_word(n: int) -> Word:
    """Reading word of the fully crossed staircase: (n-1)..1, (n-1)..2, ...

    >>> triangular_word(4)
    (3, 2, 1, 3, 2, 3)
    """
    out = []
    for row in range(1, n):
        out.extend(range(n - 1, row - 1, -1))
    return tuple(out)


def staircase_cells(n: int) -> tuple[tuple[int, int], ...]:
    """Cells in reading order; cell k carries letter triangular_word(n)[k]."""
    return tuple((r, c) for r in range(1, n) for c in range(n - r, 0, -1))


def all_pipe_dreams(p: Permutation, n: int | None = None,
                    max_excess: int | None = None) -> frozenset[PipeDream]:
    """All pipe dreams (any excess) whose permutation is p.

    These are the subsets of the staircase whose reading word has Demazure
    product p; the staircase of size n suffices for p in S_n because a cross
    on a higher antidiagonal would force a letter outside S_n into the
    product.
    """
    if n is None:
        n = ambient_size(p)
    cells = staircase_cells(n)
    target_length = p.length
    out = []
    for mask_cells in _subsets(cells):
        word = tuple(r + c - 1 for (r, c) in mask_cells)
        if max_excess is not None and len(word) - target_length > max_excess:
            continue
        if len(word) < target_length:
            continue
        if perms.demazure(word) == p:
            out.append(PipeDream(n, frozenset(mask_cells)))
    return frozenset(out)


def _subsets(cells: tuple[tuple[int, int], ...]):
    for r in range(len(cells) + 1):
        yield from itertools.combinations(cells, r)


def is_quasi_yamanouchi(dream: PipeDream) -> bool:
    """Every non-empty row's leftmost cross sits in column 1 or weakly left
    of some cross in the row below.

    >>> is_quasi_yamanouchi(PipeDream.empty(3))
    True
    """
    by_row: dict[int, list[int]] = {}
    for (r, c) in dream.crosses:
        by_row.setdefault(r, []).append(c)
    for r, cols in by_row.items():
        leftmost = min(cols)
        if leftmost == 1:
            continue
        below = by_row.get(r + 1)
        if below is None or max(below) < leftmost:
            return False
    return True


def quasi_yamanouchi_pipe_dreams(p: Permutation, n: int | None = None,
                                 reduced_only: bool = True) -> frozenset[PipeDream]:
    pool = reduced_pipe_dreams(p, n) if reduced_only else all_pipe_dreams(p, n)
    return frozenset(d for d in pool if is_quasi_yamanouchi(d))


def quasi_yamanouchi_for_word(word: Word) -> PipeDream | None:
    """The unique quasi-Yamanouchi reduced pipe dream with the given reading
    word, or None when the word admits no positive compatible sequence.
    """
    if not perms.is_reduced(word):
        raise ValueError("expected a reduced word")
    n = max(word) + 1 if word else 1
    found = None
    for rows in perms.compatible_sequences(word, lower_bound=1):
        dream = from_word_and_rows(word, rows, n)
        if is_quasi_yamanouchi(dream):
            if found is not None:
                raise AssertionError(f"two quasi-Yamanouchi dreams for word {word!r}")
            found = dream
    return found


def render_ascii(dream: PipeDream) -> str:
    """Crosses as '+', other staircase cells as '.', outside left blank."""
    lines = []
    for r in range(1, dream.n + 1):
        row = []
        for c in range(1, dream.n - r + 1):
            row.append("+" if (r, c) in dream.crosses else ".")
        lines.append("".join(row))
    return "\n".join(lines)


def render_svg(dream: PipeDream, cell: int = 24) -> str:
    """Minimal SVG: staircase cells outlined, crosses drawn as two bars."""
    n = dream.n
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{n * cell}" height="{n * cell}" '
             f'viewBox="0 0 {n * cell} {n * cell}">']
    for r in range(1, n + 1):
        for c in range(1, n - r + 1):
            x, y = (c - 1) * cell, (r - 1) * cell
            parts.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" '
                         f'fill="none" stroke="#999"/>')
            if (r, c) in dream.crosses:
                mx, my = x + cell / 2, y + cell / 2
                parts.append(f'<line x1="{mx}" y1="{y}" x2="{mx}" y2="{y + cell}" '
                             f'stroke="#000" stroke-width="2"/>')
                parts.append(f'<line x1="{x}" y1="{my}" x2="{x + cell}" y2="{my}" '
                             f'stroke="#000" stroke-width="2"/>')
    parts.append("</svg>")
    return "\n".join(parts)


def to_json(dream: PipeDream) -> dict:
    return {"size": dream.n, "crosses": [list(rc) for rc in dream.sorted_crosses()]}


def from_json(data: dict) -> PipeDream:
    return PipeDream(int(data["size"]),
                     frozenset((int(r), int(c)) for r, c in data["crosses"]))
