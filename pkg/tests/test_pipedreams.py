import itertools

import pytest

from schubcalc import perms, pipedreams
from schubcalc.perms import Permutation, parse_permutation, parse_word, symmetric_group
from schubcalc.pipedreams import (
    PipeDream,
    all_pipe_dreams,
    bottom_pipe_dream,
    chute_moves,
    from_word_and_rows,
    is_quasi_yamanouchi,
    ladder_moves,
    quasi_yamanouchi_for_word,
    quasi_yamanouchi_pipe_dreams,
    reduced_pipe_dreams,
    staircase_cells,
    triangular_word,
)


def test_reading_word_examples():
    first = from_word_and_rows(parse_word("315243"), parse_word("112233"), 6)
    assert first.reading_word() == parse_word("315243")
    assert first.row_sequence() == parse_word("112233")
    third = from_word_and_rows(parse_word("53153243"), parse_word("11122233"), 6)
    assert third.permutation() == parse_permutation("[246135]")
    assert third.excess == 2
    assert PipeDream.empty(4).reading_word() == ()


def test_from_word_and_rows_rejects_bad_input():
    with pytest.raises(ValueError):
        from_word_and_rows((1, 2), (2, 1), 4)  # rows not weakly increasing
    with pytest.raises(ValueError):
        from_word_and_rows((1, 1), (1, 1), 4)  # duplicate cross
    with pytest.raises(ValueError):
        from_word_and_rows((3,), (1,), 3)  # cross (1, 3) outside the staircase


def test_bijection_roundtrip_s4():
    for p in symmetric_group(4):
        for dream in reduced_pipe_dreams(p):
            rebuilt = from_word_and_rows(dream.reading_word(), dream.row_sequence(),
                                         dream.n)
            assert rebuilt == dream


def test_bijection_roundtrip_all_cross_sets_n5():
    """Every cross subset of the staircase of size 5, reduced or not, is
    recovered from its reading word and row record."""
    cells = staircase_cells(5)
    for r in range(len(cells) + 1):
        for chosen in itertools.combinations(cells, r):
            dream = PipeDream(5, frozenset(chosen))
            rebuilt = from_word_and_rows(dream.reading_word(),
                                         dream.row_sequence(), 5)
            assert rebuilt == dream


def test_bottom_pipe_dream():
    assert bottom_pipe_dream(Permutation.identity()).crosses == frozenset()
    assert bottom_pipe_dream(parse_permutation("[321]")).crosses == frozenset(
        {(1, 1), (1, 2), (2, 1)})
    p = parse_permutation("[15243]")
    assert perms.demazure(bottom_pipe_dream(p).reading_word()) == p
    assert bottom_pipe_dream(p).is_reduced()


def test_moves_preserve_permutation():
    for p in symmetric_group(4):
        for dream in reduced_pipe_dreams(p):
            for neighbour in chute_moves(dream) | ladder_moves(dream):
                assert neighbour.permutation() == p
                assert neighbour.is_reduced()


def test_move_counts():
    assert len(reduced_pipe_dreams(parse_permutation("[1432]"))) == 5
    assert chute_moves(PipeDream.empty(4)) == frozenset()
    assert ladder_moves(PipeDream.empty(4)) == frozenset()


def test_closure_equals_subword_enumeration():
    """Chute/ladder closure from the bottom pipe dream gives the same set as
    filtering excess-0 subwords of the triangular word."""
    for p in symmetric_group(4):
        closure = reduced_pipe_dreams(p, 4)
        direct = frozenset(d for d in all_pipe_dreams(p, 4, max_excess=0))
        assert closure == direct


def test_triangular_word():
    assert triangular_word(4) == (3, 2, 1, 3, 2, 3)
    assert triangular_word(6) == parse_word("543215432543545")
    cells = staircase_cells(4)
    assert [r + c - 1 for (r, c) in cells] == list(triangular_word(4))


def test_quasi_yamanouchi_examples():
    assert is_quasi_yamanouchi(PipeDream.empty(3))
    for p in symmetric_group(4):
        assert is_quasi_yamanouchi(bottom_pipe_dream(p))
    qy = quasi_yamanouchi_pipe_dreams(parse_permutation("[1432]"))
    weights = {d.reading_word(): d.weight() for d in qy}
    assert weights == {parse_word("323"): (0, 2, 1), parse_word("232"): (1, 2)}


def test_one_quasi_yamanouchi_per_word():
    """Each reduced word admitting a positive compatible sequence has exactly
    one quasi-Yamanouchi pipe dream with that reading word."""
    for p in symmetric_group(4):
        dreams = reduced_pipe_dreams(p)
        by_word = {}
        for d in dreams:
            if is_quasi_yamanouchi(d):
                assert d.reading_word() not in by_word
                by_word[d.reading_word()] = d
        represented = {d.reading_word() for d in dreams}
        assert set(by_word) == represented
        for w in represented:
            assert quasi_yamanouchi_for_word(w) == by_word[w]


def test_quasi_yamanouchi_for_word_without_sequence():
    assert quasi_yamanouchi_for_word((1, 2, 1)) is None


def test_quasi_yamanouchi_count_135624_by_enumeration():
    """The quasi-Yamanouchi set of [135624] is pinned down by enumeration
    plus the slide expansion identity, not by any externally stated count."""
    from schubcalc import poly

    p = parse_permutation("[135624]")
    qy = quasi_yamanouchi_pipe_dreams(p)
    assert len(qy) == len({d.reading_word() for d in reduced_pipe_dreams(p)})
    total = poly.Polynomial.zero()
    for d in qy:
        total = total + poly.slide(d.weight())
    assert total == poly.schubert(p)


def test_all_pipe_dreams_excess_bound():
    p = parse_permutation("[21]")
    assert {d.crosses for d in all_pipe_dreams(p, 2)} == {frozenset({(1, 1)})}
    bigger = all_pipe_dreams(p, 3)
    assert {d.excess for d in bigger} <= {0, 1, 2}
    capped = all_pipe_dreams(p, 3, max_excess=0)
    assert all(d.excess == 0 for d in capped)


def test_render_and_json():
    dream = bottom_pipe_dream(parse_permutation("[321]"))
    art = pipedreams.render_ascii(dream)
    assert art.splitlines()[0] == "++"
    svg = pipedreams.render_svg(dream)
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    assert pipedreams.from_json(pipedreams.to_json(dream)) == dream
