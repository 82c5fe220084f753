"""Shuffle bijections behind the Monk and Sottile-Pieri products of
(back-stable) Schubert polynomials, implemented on reduced words.

The Monk insertion takes a reduced word for p, a letter value i and an
insertion position, and rectifies to a reduced word for p*t(a,b) with
a <= i < b: a cross dropped from infinitely high in a fresh wiring-diagram
column slides down to the highest swap taking a wire labelled <= i over one
labelled > i; if the swapped wires already crossed, that cross is bumped
down in turn, strictly leftwards, until the word is reduced.

The Pieri version inserts k crosses at once for the cycle factors
c[i,k] = s_{i-k+1} ... s_i (column variant) or r[i,k] = s_{i+k-1} ... s_i
(row variant).  Pending crosses carry a "down" mark and are invisible to
wire labels; freshly placed crosses carry an "up" mark.  A bookkeeping set
records which wire labels may still be used on the relevant side: the
column variant tracks "big" labels (initially everything above i) consumed
through their lower label, the row variant mirrors this with "small" labels
(initially everything at most i) consumed through their upper label.  That
bookkeeping is exactly what enforces the distinctness constraints in the
two product rules.

The slot value INF compares above every integer and marks a column whose
cross has not yet been placed; such slots are always down-marked.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import perms
from .perms import Permutation, Word

INF = float("inf")

DOWN = "down"
UP = "up"


@dataclass(frozen=True)
class MarkedWord:
    """Letter slots (integers or INF) with per-slot marks."""

    slots: tuple
    marks: tuple

    def __post_init__(self) -> None:
        if len(self.slots) != len(self.marks):
            raise ValueError("slots and marks must align")
        for a, m in zip(self.slots, self.marks):
            if m not in (None, DOWN, UP):
                raise ValueError(f"bad mark {m!r}")
            if a == INF and m != DOWN:
                raise ValueError("INF slots must carry the down mark")

    def infinity_positions(self) -> tuple[int, ...]:
        return tuple(p for p, a in enumerate(self.slots, start=1) if a == INF)

    def word_and_positions(self) -> tuple[Word, tuple[int, ...]]:
        """Finite letters in order, plus the 1-based INF positions."""
        word = tuple(int(a) for a in self.slots if a != INF)
        return word, self.infinity_positions()

    def __str__(self) -> str:
        suffix = {None: "", DOWN: "v", UP: "^"}
        return " ".join(("oo" if a == INF else str(int(a))) + suffix[m]
                        for a, m in zip(self.slots, self.marks))


def insert_slots(word: Sequence[int], positions: Sequence[int]) -> MarkedWord:
    """Pad a word with down-marked INF slots at the given 1-based positions
    of the padded word.
    """
    total = len(word) + len(positions)
    wanted = sorted(positions)
    if wanted != list(positions) or len(set(wanted)) != len(wanted):
        raise ValueError("positions must be strictly increasing")
    if wanted and (wanted[0] < 1 or wanted[-1] > total):
        raise ValueError("positions out of range")
    slots: list = []
    marks: list = []
    letters = iter(word)
    spots = set(wanted)
    for p in range(1, total + 1):
        if p in spots:
            slots.append(INF)
            marks.append(DOWN)
        else:
            slots.append(next(letters))
            marks.append(None)
    return MarkedWord(tuple(slots), tuple(marks))


# ---------------------------------------------------------------------------
# wiring labels on slotted words


def _label(letters: Sequence, column: int, height: int, skip: frozenset[int]) -> int:
    """Wire label at a height in a column, ignoring the skipped positions.
    INF slots never hold a placed cross, so they contribute no swap.
    """
    h = height
    for p in range(column + 1, len(letters) + 1):
        if p in skip:
            continue
        a = letters[p - 1]
        if a == INF:
            continue
        if h == a:
            h = a + 1
        elif h == a + 1:
            h = a
    return h


def _cross_labels(letters: Sequence, position: int, skip: frozenset[int]) -> tuple[int, int]:
    h = letters[position - 1]
    return (_label(letters, position, h, skip),
            _label(letters, position, h + 1, skip))


def _height_window(letters: Sequence, pivot: int) -> tuple[int, int]:
    finite = [int(a) for a in letters if a != INF] + [pivot]
    slack = len(letters) + 2
    return (min(finite) - slack, max(finite) + slack)


def _second_crossing(letters: Sequence, j: int, skip: frozenset[int],
                     candidates: Iterable[int]) -> int | None:
    """Position among the candidates where the two wires crossing at j cross
    again; None when they cross only once.  The second crossing shows the
    same label pair in the opposite order.
    """
    a, b = _cross_labels(letters, j, skip)
    found = None
    for p in candidates:
        if p == j or p in skip or letters[p - 1] == INF:
            continue
        if _cross_labels(letters, p, skip) == (b, a):
            if found is not None:
                raise AssertionError(f"wires {a},{b} cross more than twice")
            found = p
    return found


# ---------------------------------------------------------------------------
# Monk insertion


def monk_shuffle(i: int, word: Sequence[int], position: int,
                 validate: bool = False, trace: list[str] | None = None) -> Word:
    """Insert the letter value i into a reduced word at the given position
    (1..len+1) and rectify; the result is a reduced word for p*t(a,b) with
    a <= i < b, p being the permutation of the input word.

    >>> perms.format_word(monk_shuffle(3, (3, 2, 3, 4, 3, 2), 5))
    '1232432'
    """
    word = tuple(word)
    if not perms.is_reduced(word):
        raise ValueError("monk insertion starts from a reduced word")
    if not 1 <= position <= len(word) + 1:
        raise ValueError("insertion position out of range")
    letters: list = list(word[:position - 1]) + [INF] + list(word[position - 1:])
    pending: int | None = position
    none = frozenset()
    while pending is not None:
        j = pending
        lo, hi = _height_window(letters, i)
        cur = letters[j - 1]
        k = None
        top = hi if cur == INF else min(int(cur) - 1, hi)
        for h in range(top, lo - 1, -1):
            if _label(letters, j, h, none) <= i < _label(letters, j, h + 1, none):
                k = h
                break
        if k is None:
            raise AssertionError("no available swap below the pending cross")
        letters[j - 1] = k
        if trace is not None:
            finite = [int(a) for a in letters if a != INF] + [i]
            low, high = min(finite) - 1, max(finite) + 2
            shown = [_label(letters, j, h, none) for h in range(low, high + 1)]
            trace.append(f"placed {k} at position {j}; word = "
                         + " ".join("oo" if a == INF else str(a) for a in letters)
                         + f" ; labels(col {j}, h={low}..{high}) = {shown}")
        partner = _second_crossing(letters, j, none, range(1, len(letters) + 1))
        if partner is not None and validate:
            pair = perms.defects(tuple(letters))
            assert pair == tuple(sorted((partner, j))), "defect pair mismatch"
            assert partner < j, "bumped cross should sit further left"
        pending = partner
    result = tuple(int(a) for a in letters)
    if validate:
        assert perms.is_reduced(result)
        assert perms.prod_word(result).length == perms.prod_word(word).length + 1
    return result


def monk_unshuffle(i: int, word: Sequence[int], source: Permutation,
                   validate: bool = False) -> tuple[Word, int]:
    """Inverse of monk_shuffle: recover the word for `source` and the
    insertion position from a reduced word for source*t(a,b), a <= i < b.

    The source permutation pins down which cross was inserted; the same
    output word arises from different sources.
    """
    word = tuple(word)
    if not perms.is_reduced(word):
        raise ValueError("expected a reduced word")
    sigma = perms.prod_word(word)
    t = source.inverse() * sigma
    moved = [x for x in range(*_support_range(t)) if t(x) != x]
    if len(moved) != 2:
        raise ValueError("word is not obtained from the source by one transposition")
    a, b = min(moved), max(moved)
    if not (a <= i < b):
        raise ValueError(f"transposition ({a},{b}) does not straddle {i}")
    if sigma.length != source.length + 1:
        raise ValueError("length must go up by exactly one")
    none = frozenset()
    hits = [p for p in range(1, len(word) + 1)
            if _cross_labels(word, p, none) == (a, b)]
    if len(hits) != 1:
        raise AssertionError("a reduced word shows each inversion exactly once")
    j = hits[0]
    letters: list = list(word)
    while letters[j - 1] != INF:
        lo, hi = _height_window(letters, i)
        cur = int(letters[j - 1])
        k: int | float = INF
        for h in range(cur + 1, hi + 1):
            if _label(letters, j, h + 1, none) <= i < _label(letters, j, h, none):
                k = h
                break
        letters[j - 1] = k
        if k != INF:
            partner = _second_crossing(letters, j, none, range(1, len(letters) + 1))
            if partner is None:
                raise AssertionError("raised cross must recreate a crossing")
            if validate:
                assert partner > j, "defects move right while unwinding"
            j = partner
    position = j
    out = tuple(int(a) for p, a in enumerate(letters, start=1) if p != position)
    if validate:
        assert perms.is_reduced(out) and perms.prod_word(out) == source
    return out, position


def _support_range(p: Permutation) -> tuple[int, int]:
    if p.support is None:
        return (0, 0)
    lo, hi = p.support
    return (lo, hi + 1)


# ---------------------------------------------------------------------------
# bookkeeping set for the Pieri insertion


class _CofiniteSet:
    """All integers on one side of a pivot, corrected by finitely many
    explicit additions and removals."""

    __slots__ = ("pivot", "above", "plus", "minus")

    def __init__(self, pivot: int, above: bool):
        self.pivot = pivot
        self.above = above
        self.plus: set[int] = set()
        self.minus: set[int] = set()

    def _base(self, x: int) -> bool:
        return x > self.pivot if self.above else x <= self.pivot

    def __contains__(self, x: int) -> bool:
        if x in self.plus:
            return True
        if x in self.minus:
            return False
        return self._base(x)

    def add(self, x: int) -> None:
        if x in self.minus:
            self.minus.discard(x)
        elif not self._base(x):
            self.plus.add(x)

    def remove(self, x: int) -> None:
        if x not in self:
            raise AssertionError(f"removing {x} from a set not holding it")
        if x in self.plus:
            self.plus.discard(x)
        else:
            self.minus.add(x)

    def describe(self) -> str:
        side = f"{{k > {self.pivot}}}" if self.above else f"{{k <= {self.pivot}}}"
        out = side
        if self.plus:
            out += f" + {sorted(self.plus)}"
        if self.minus:
            out += f" - {sorted(self.minus)}"
        return out


@dataclass
class PieriState:
    """Snapshot of the insertion loop: the marked word plus the bookkeeping
    set (big labels for the column variant, small for the row variant)."""

    word: MarkedWord
    bookkeeping: str


# ---------------------------------------------------------------------------
# Pieri insertion


def pieri_shuffle(i: int, word: Sequence[int] | MarkedWord,
                  positions: Sequence[int] | None = None, variant: str = "c",
                  validate: bool = False, trace: list[str] | None = None) -> Word:
    """Insert k copies of the letter value i at the marked positions and
    rectify; the result is a reduced word for a permutation reachable from
    the input word's permutation by the column (variant "c") or row
    (variant "r") Pieri relation with parameters (i, k).
    """
    marked = word if isinstance(word, MarkedWord) else insert_slots(word, positions or ())
    if any(a != INF and m is not None for a, m in zip(marked.slots, marked.marks)):
        raise ValueError("only INF slots may be marked on input")
    base_word, _ = marked.word_and_positions()
    if not perms.is_reduced(base_word):
        raise ValueError("the unmarked content must be a reduced word")
    engine = _PieriEngine(i, variant, list(marked.slots), list(marked.marks),
                          validate=validate, trace=trace)
    return engine.run_forward()


def pieri_unshuffle(i: int, word: Sequence[int], source: Permutation,
                    variant: str = "c", validate: bool = False,
                    trace: list[str] | None = None) -> MarkedWord:
    """Inverse of pieri_shuffle: peel the inserted crosses back out of a
    reduced word, leaving INF slots at the insertion positions.  The source
    permutation (whose rightmost subword seeds the marking) must be a Pieri
    predecessor of the word's permutation.
    """
    word = tuple(word)
    if not perms.is_reduced(word):
        raise ValueError("expected a reduced word")
    chosen = rightmost_subword(word, source)
    marks: list = [None if p in chosen else UP for p in range(1, len(word) + 1)]
    engine = _PieriEngine(i, variant, list(word), marks,
                          validate=validate, trace=trace)
    return engine.run_backward()


class _PieriEngine:
    def __init__(self, i: int, variant: str, slots: list, marks: list,
                 validate: bool = False, trace: list[str] | None = None):
        if variant not in ("c", "r"):
            raise ValueError("variant must be 'c' (column) or 'r' (row)")
        self.i = i
        self.variant = variant
        self.slots = slots
        self.marks = marks
        self.validate = validate
        self.trace = trace
        # column variant books "big" labels, consumed via lower labels;
        # row variant books "small" labels, consumed via upper labels.
        self.book = _CofiniteSet(i, above=(variant == "c"))
        if validate:
            self.source = perms.prod_word(self._unmarked_letters())
            self._claims: dict[int, int] = {}

    # -- mark and visibility helpers

    def _down_positions(self) -> frozenset[int]:
        return frozenset(p for p, m in enumerate(self.marks, start=1) if m == DOWN)

    def _positions_with(self, mark) -> list[int]:
        return [p for p, m in enumerate(self.marks, start=1) if m == mark]

    def _unmarked_letters(self) -> Word:
        return tuple(int(a) for a, m in zip(self.slots, self.marks)
                     if m is None and a != INF)

    def _labels(self, column: int, height: int) -> int:
        return _label(self.slots, column, height, self._down_positions())

    def _cross(self, position: int) -> tuple[int, int]:
        return _cross_labels(self.slots, position, self._down_positions())

    def _snapshot(self, note: str, column: int | None = None) -> None:
        if self.trace is None:
            return
        state = PieriState(MarkedWord(tuple(self.slots), tuple(self.marks)),
                           self.book.describe())
        line = f"{note}: {state.word} ; book = {state.bookkeeping}"
        if column is not None:
            finite = [int(a) for a in self.slots if a != INF] + [self.i]
            lo, hi = min(finite) - 1, max(finite) + 2
            labels = [self._labels(column, h) for h in range(lo, hi + 1)]
            line += f" ; labels(col {column}, h={lo}..{hi}) = {labels}"
        self.trace.append(line)

    # -- the allowed-swap predicates

    def _insert_ok(self, lower: int, upper: int) -> bool:
        if self.variant == "c":
            return lower not in self.book and upper in self.book
        return lower in self.book and upper not in self.book

    def _extract_ok(self, lower: int, upper: int) -> bool:
        if self.variant == "c":
            return lower in self.book and upper not in self.book
        return lower not in self.book and upper in self.book

    # -- forward run

    def run_forward(self) -> Word:
        self._snapshot("start")
        guard = 0
        while True:
            downs = self._positions_with(DOWN)
            if not downs:
                break
            guard += 1
            if guard > 100 * len(self.slots) + 1000:
                raise AssertionError("insertion loop failed to terminate")
            j = max(downs)
            self._step_forward(j)
            if self.validate:
                remaining = self._positions_with(DOWN)
                assert not remaining or max(remaining) < j, "pending marks must move left"
                self._check_unmarked_subword()
        result = tuple(int(a) for a in self.slots)
        if self.validate:
            assert perms.is_reduced(result)
        return result

    def _step_forward(self, j: int) -> None:
        cur = self.slots[j - 1]
        if cur != INF:
            # the pending cross was bumped: release the label it was holding
            lower, upper = self._cross(j)
            held = upper if self.variant == "c" else lower
            if self.validate:
                assert self._claims.pop(j) == held, \
                    "the released label must be the one booked at bump time"
            self.book.remove(held)
            self._release_partner_mark(j, held)
        skip = self._down_positions()
        lo, hi = _height_window(self.slots, self.i)
        top = hi if cur == INF else min(int(cur) - 1, hi)
        k = None
        for h in range(top, lo - 1, -1):
            a = _label(self.slots, j, h, skip)
            b = _label(self.slots, j, h + 1, skip)
            if self._insert_ok(a, b):
                k = h
                break
        if k is None:
            raise AssertionError("no available swap below the pending cross")
        self.slots[j - 1] = k
        self.marks[j - 1] = UP
        lower, upper = self._cross(j)
        if self.validate:
            assert lower < upper, "insertions never create a defect on their right"
        booked = lower if self.variant == "c" else upper
        self.book.add(booked)
        partner = _second_crossing(self.slots, j, self._down_positions(),
                                   range(1, j))
        if partner is not None:
            if self.validate:
                assert self.marks[partner - 1] is None, "only plain crosses get bumped"
                self._claims[partner] = booked
            self.marks[partner - 1] = DOWN
        self._snapshot(f"placed {k} at {j}", column=j)

    def _release_partner_mark(self, j: int, held: int) -> None:
        """Drop the up mark from the cross that had claimed the held label."""
        hits = []
        for p in self._positions_with(UP):
            lower, upper = self._cross(p)
            probe = lower if self.variant == "c" else upper
            if probe == held:
                hits.append(p)
        if len(hits) != 1:
            raise AssertionError(f"label {held} should be claimed exactly once, found {hits}")
        if self.validate:
            assert hits[0] > j, "the claiming cross sits to the right"
        self.marks[hits[0] - 1] = None

    def _check_unmarked_subword(self) -> None:
        """The unmarked subword, after cancelling each pending mark against
        the up-marked cross claiming its held label, is the rightmost subword
        for the original permutation inside the visible (non-pending) word.
        """
        virtual = set(self._positions_with(None))
        for j in self._positions_with(DOWN):
            if self.slots[j - 1] == INF:
                continue
            lower, upper = self._cross(j)
            held = upper if self.variant == "c" else lower
            for p in self._positions_with(UP):
                lo_p, up_p = self._cross(p)
                probe = lo_p if self.variant == "c" else up_p
                if probe == held:
                    virtual.add(p)
                    break
        down = self._down_positions()
        visible = tuple(None if (p in down or a == INF) else a
                        for p, a in enumerate(self.slots, start=1))
        expected = rightmost_subword(visible, self.source)
        assert frozenset(virtual) == frozenset(expected), \
            f"unmarked subword {sorted(virtual)} != rightmost subword {sorted(expected)}"

    # -- backward run

    def run_backward(self) -> MarkedWord:
        if self.variant == "c":
            for p in self._positions_with(UP):
                self.book.add(self._cross(p)[0])
        else:
            for p in self._positions_with(UP):
                self.book.add(self._cross(p)[1])
        self._snapshot("start")
        guard = 0
        while True:
            ups = self._positions_with(UP)
            if not ups:
                break
            guard += 1
            if guard > 100 * len(self.slots) + 1000:
                raise AssertionError("extraction loop failed to terminate")
            j = min(ups)
            self._step_backward(j)
            if self.validate:
                remaining = self._positions_with(UP)
                assert not remaining or min(remaining) > j, "up marks are consumed left to right"
        if any(m == DOWN and a != INF for a, m in zip(self.slots, self.marks)):
            raise AssertionError("pending finite crosses survived the unwinding")
        result = MarkedWord(tuple(self.slots), tuple(self.marks))
        if self.validate:
            base, _ = result.word_and_positions()
            assert perms.is_reduced(base)
        return result

    def _step_backward(self, j: int) -> None:
        lower, upper = self._cross(j)
        # if the cross at j had bumped another one down, un-bump it first
        partner = None
        for p in self._positions_with(DOWN):
            if p >= j or self.slots[p - 1] == INF:
                continue
            if self._cross(p) == (upper, lower):
                if partner is not None:
                    raise AssertionError("two pending crosses claim the same wires")
                partner = p
        if partner is not None:
            self.marks[partner - 1] = None
        self.book.remove(lower if self.variant == "c" else upper)
        skip = self._down_positions()
        lo, hi = _height_window(self.slots, self.i)
        cur = int(self.slots[j - 1])
        k: int | float = INF
        for h in range(cur + 1, hi + 1):
            a = _label(self.slots, j, h, skip)
            b = _label(self.slots, j, h + 1, skip)
            if self._extract_ok(a, b):
                k = h
                break
        self.slots[j - 1] = k
        self.marks[j - 1] = DOWN
        if k != INF:
            lower, upper = self._cross(j)
            self.book.add(upper if self.variant == "c" else lower)
            mate = self._defect_mate_in_unmarked(j)
            self.marks[mate - 1] = UP
        self._snapshot(f"raised {j} to {'oo' if k == INF else k}", column=j)

    def _defect_mate_in_unmarked(self, j: int) -> int:
        """The unmarked position whose cross pairs with j inside the subword
        of unmarked letters plus j itself.  The pairing cross sits to the
        right of j: pending marks are created leftwards, so they unwind
        rightwards (the Monk extraction's "rightmost defect")."""
        visible = set(self._positions_with(None)) | {j}
        skip = frozenset(p for p in range(1, len(self.slots) + 1) if p not in visible)
        a, b = _cross_labels(self.slots, j, skip)
        hits = [p for p in self._positions_with(None)
                if p > j and _cross_labels(self.slots, p, skip) == (b, a)]
        if len(hits) != 1:
            raise AssertionError(f"expected one defect mate for {j}, found {hits}")
        return hits[0]


# ---------------------------------------------------------------------------
# rightmost subwords and the product-rule relations


def rightmost_subword(ambient: Sequence, p: Permutation) -> tuple[int, ...]:
    """Positions of the greedy right-to-left embedding of a reduced word for
    p; entries of the ambient that are None (or INF) are unusable.

    >>> rightmost_subword((3, 2, 1, 3, 2, 3), perms.parse_permutation("[1432]"))
    (4, 5, 6)
    """
    remaining = p
    chosen: list[int] = []
    for pos in range(len(ambient), 0, -1):
        letter = ambient[pos - 1]
        if letter is None or letter == INF:
            continue
        letter = int(letter)
        if remaining(letter) > remaining(letter + 1):
            remaining = remaining.right_mul_simple(letter)
            chosen.append(pos)
    if not remaining.is_identity():
        raise ValueError("ambient word does not contain the permutation")
    return tuple(reversed(chosen))


def monk_covers(p: Permutation, i: int) -> tuple[tuple[int, int], ...]:
    """All transpositions t(a,b) with a <= i < b taking p up by one in
    Bruhat order; the summands of the Monk product with the i-th simple
    class.
    """
    if p.support is None:
        los, his = i, i + 1
    else:
        los = min(p.support[0] - 1, i)
        his = max(p.support[1] + 1, i + 1)
    out = []
    for a in range(los, i + 1):
        for b in range(i + 1, his + 1):
            if perms.bruhat_cover(p, a, b):
                out.append((a, b))
    return tuple(out)


def monk_rhs(p: Permutation, i: int) -> tuple[Permutation, ...]:
    return tuple(p * Permutation.transposition(a, b) for a, b in monk_covers(p, i))


def cycle_factor(i: int, k: int, variant: str = "c") -> Permutation:
    """The cycle whose Schubert class drives the Pieri rule: the product of
    s_{i-k+1} ... s_i (column) or s_{i+k-1} ... s_i (row).
    """
    if variant == "c":
        letters = range(i - k + 1, i + 1)
    elif variant == "r":
        letters = range(i + k - 1, i - 1, -1)
    else:
        raise ValueError("variant must be 'c' or 'r'")
    return perms.prod_word(tuple(letters))


def pieri_targets(p: Permutation, i: int, k: int, variant: str = "c") -> frozenset[Permutation]:
    """All endpoints of k-step chains of Monk covers t(a_1,b_1)..t(a_k,b_k)
    with every a_j <= i < b_j, lengths increasing by one each step, and the
    a_j (column variant) or b_j (row variant) pairwise distinct.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    out: set[Permutation] = set()

    def walk(current: Permutation, depth: int, used: frozenset[int]) -> None:
        if depth == k:
            out.add(current)
            return
        for (a, b) in monk_covers(current, i):
            key = a if variant == "c" else b
            if key in used:
                continue
            walk(current * Permutation.transposition(a, b), depth + 1, used | {key})

    walk(p, 0, frozenset())
    return frozenset(out)


def pieri_relation(p: Permutation, sigma: Permutation, i: int, k: int,
                   variant: str = "c") -> bool:
    """Whether sigma appears in the (i, k) Pieri product on p."""
    if sigma.length != p.length + k:
        return False
    return sigma in pieri_targets(p, i, k, variant)
