import itertools

from hypothesis import given, settings, strategies as st

from schubcalc import pipedreams, shapes
from schubcalc.perms import Permutation, parse_permutation, parse_word, symmetric_group
from schubcalc.poly import (
    Polynomial,
    backstable_truncation,
    expand_grothendieck_into_glides,
    expand_schubert_into_slides,
    expand_schur_into_fundamentals,
    from_exponent_word,
    from_weak_composition,
    fundamental_quasisymmetric,
    glide,
    glide_from_kompositions,
    grothendieck,
    schubert,
    schubert_from_words,
    schur,
    slide,
    slide_of_word,
)
from schubcalc.shuffles import monk_covers


def mono(d, c=1):
    return Polynomial.monomial(d, c)


# -- ring operations -------------------------------------------------------


def test_ring_basics():
    p = mono({1: 2}) + mono({2: 1}, 3)
    assert p + Polynomial.zero() == p
    assert p + 0 == p
    assert Polynomial.variable(1) * Polynomial.variable(2) == mono({1: 1, 2: 1})
    assert p - p == Polynomial.zero()
    assert (p * 0) == Polynomial.zero()
    assert Polynomial.one() * p == p


_terms = st.lists(
    st.tuples(st.dictionaries(st.integers(-3, 3), st.integers(1, 3), max_size=3),
              st.integers(-5, 5)),
    max_size=5)


def _build(terms):
    total = Polynomial.zero()
    for exps, coeff in terms:
        total = total + mono(exps, coeff)
    return total


def _naive_mul(p, q):
    out = Polynomial.zero()
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            exps = dict(m1)
            for i, e in m2:
                exps[i] = exps.get(i, 0) + e
            out = out + mono(exps, c1 * c2)
    return out


@settings(max_examples=60, deadline=None)
@given(_terms, _terms)
def test_mul_matches_naive_convolution(ta, tb):
    a, b = _build(ta), _build(tb)
    assert a * b == _naive_mul(a, b)
    assert a * b == b * a


@settings(max_examples=30, deadline=None)
@given(_terms, _terms, _terms)
def test_distributivity(ta, tb, tc):
    a, b, c = _build(ta), _build(tb), _build(tc)
    assert a * (b + c) == a * b + a * c


def test_printing_and_json():
    p = mono({1: 2, 2: 1}) - mono({-1: 1}, 2) + Polynomial.one()
    assert str(Polynomial.zero()) == "0"
    assert str(Polynomial.one()) == "1"
    assert str(mono({1: 2}, -1)) == "-x_1^2"
    assert "x_-1" in str(p)
    assert Polynomial.from_json(p.to_json()) == p


# -- schubert / grothendieck ------------------------------------------------


def test_schubert_examples():
    assert schubert(parse_permutation("[321]")) == mono({1: 2, 2: 1})
    expected = (mono({2: 2, 3: 1}) + mono({1: 1, 2: 1, 3: 1}) + mono({1: 2, 3: 1})
                + mono({1: 2, 2: 1}) + mono({1: 1, 2: 2}))
    assert schubert(parse_permutation("[1432]")) == expected
    assert schubert(Permutation.identity()) == Polynomial.one()


def test_schubert_two_routes_agree():
    for p in symmetric_group(4):
        assert schubert(p) == schubert_from_words(p)


def test_grothendieck_examples():
    assert grothendieck(Permutation.identity()) == Polynomial.one()
    assert grothendieck(parse_permutation("[21]")) == mono({1: 1})
    g = grothendieck(parse_permutation("[1432]"))
    assert g.lowest_degree_part() == schubert(parse_permutation("[1432]"))


def test_grothendieck_lowest_degree_is_schubert():
    for p in symmetric_group(4):
        assert grothendieck(p).lowest_degree_part() == schubert(p)


# -- schur / fundamental quasisymmetric --------------------------------------


def test_schur_examples():
    assert schur((1,), 2) == mono({1: 1}) + mono({2: 1})
    s21 = schur((2, 1), 3)
    assert sum(s21.terms.values()) == 8
    assert s21.coefficient({1: 1, 2: 1, 3: 1}) == 2


def test_schur_symmetry():
    for total in range(1, 6):
        for lam in _partitions(total):
            s = schur(lam, 4)
            for i in range(1, 4):
                assert s.swap_variables(i, i + 1) == s, (lam, i)


def _partitions(total, cap=None):
    cap = cap or total
    if total == 0:
        yield ()
        return
    for first in range(min(cap, total), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def test_fundamental_quasisymmetric_examples():
    expected = (mono({1: 1, 2: 2, 3: 1}) + mono({1: 1, 2: 2, 4: 1})
                + mono({1: 1, 2: 1, 3: 1, 4: 1}) + mono({1: 1, 3: 2, 4: 1})
                + mono({2: 1, 3: 2, 4: 1}))
    assert fundamental_quasisymmetric((1, 2, 1), 4) == expected
    assert fundamental_quasisymmetric((3,), 1) == mono({1: 3})


def _fqs_oracle(comp, n):
    """Sum over weakly increasing sequences, strict at the descent set."""
    strict = shapes.composition_to_set(comp)
    k = sum(comp)
    total = Polynomial.zero()
    for seq in itertools.combinations_with_replacement(range(1, n + 1), k):
        if all(seq[j] > seq[j - 1] for j in strict):
            total = total + from_exponent_word(seq)
    return total


def test_fundamental_quasisymmetric_against_sequence_formula():
    for total in range(1, 6):
        for comp in _compositions(total):
            assert fundamental_quasisymmetric(comp, 4) == _fqs_oracle(comp, 4)


def test_quasisymmetry_of_fundamental():
    """Coefficients only depend on the exponent composition, not on which
    increasing variable set carries it."""
    n = 4
    for total in range(1, 6):
        for comp in _compositions(total):
            f = fundamental_quasisymmetric(comp, n)
            for exps in _compositions(total):
                if len(exps) > n:
                    continue
                reference = None
                for support in itertools.combinations(range(1, n + 1), len(exps)):
                    coeff = f.coefficient(dict(zip(support, exps)))
                    if reference is None:
                        reference = coeff
                    assert coeff == reference


# -- slide / glide -----------------------------------------------------------


def test_slide_examples():
    assert slide((1, 0, 1)) == mono({1: 1, 2: 1}) + mono({1: 1, 3: 1})
    assert slide_of_word(parse_word("21")) == mono({1: 2})
    assert slide_of_word(parse_word("31")) == mono({1: 2})
    assert slide_of_word((1, 2, 1)) == Polynomial.zero()


def _slide_oracle(shape):
    total = Polynomial.zero()
    for d in shapes.compositions_weak(sum(shape), len(shape)):
        if shapes.dominates(d, shape) and _refine_ok(d, shape):
            total = total + from_weak_composition(d)
    return total


def _refine_ok(d, shape):
    fd, fs = shapes.flatten(d), shapes.flatten(shape)
    if not fs:
        return not fd
    if not fd:
        return False
    return shapes.refines(fd, fs)


def test_slide_two_routes_agree():
    for total in range(0, 6):
        for parts in range(0, 5):
            for lam in shapes.compositions_weak(total, parts):
                assert slide(lam) == _slide_oracle(lam), lam


def test_fundamental_is_padded_slide():
    """Prepending n zero rows to a composition turns its fundamental
    quasisymmetric polynomial into a slide polynomial, after restricting the
    slide to the first n variables."""
    for total in range(1, 5):
        for comp in _compositions(total):
            for n in range(1, 4):
                padded = (0,) * n + comp
                restricted = slide(padded).substitute_zero(
                    range(n + 1, n + len(comp) + 1))
                assert fundamental_quasisymmetric(comp, n) == restricted, (comp, n)


def test_glide_examples():
    assert glide((3,)) == mono({1: 3})
    expected = (mono({1: 1, 2: 1}) + mono({1: 1, 3: 1}) + mono({2: 1, 3: 1})
                - mono({1: 1, 2: 1, 3: 1}, 2))
    assert glide((0, 1, 1)) == expected


def test_glide_two_routes_agree():
    for total in range(0, 5):
        for parts in range(0, 4):
            for lam in shapes.compositions_weak(total, parts):
                assert glide(lam) == glide_from_kompositions(lam), lam


def test_glide_lowest_degree_is_slide():
    for total in range(0, 5):
        for parts in range(0, 5):
            for lam in shapes.compositions_weak(total, parts):
                assert glide(lam).lowest_degree_part() == slide(lam), lam


# -- back-stable truncations --------------------------------------------------


def test_backstable_examples():
    assert backstable_truncation(Permutation.identity(), -5) == Polynomial.one()
    assert backstable_truncation(parse_permutation("[21]"), 0) == \
        mono({0: 1}) + mono({1: 1})
    for p in symmetric_group(4):
        assert backstable_truncation(p, 1) == schubert(p)


def test_monk_rule_as_truncated_polynomials():
    """Multiplying by a simple class matches the sum over Bruhat covers
    straddling i, after killing all variables below the cutoff."""
    cutoff = -2
    for p in symmetric_group(3):
        for i in range(0, 4):
            lhs = backstable_truncation(p, cutoff) * \
                backstable_truncation(Permutation.simple(i), cutoff)
            rhs = Polynomial.zero()
            for (a, b) in monk_covers(p, i):
                rhs = rhs + backstable_truncation(p * Permutation.transposition(a, b),
                                                  cutoff)
            assert lhs == rhs, (str(p), i)


# -- expansions ----------------------------------------------------------------


def test_expand_schubert_into_slides_examples():
    expansion = expand_schubert_into_slides(parse_permutation("[1432]"))
    assert expansion[(3, 2, 3)] == slide((0, 2, 1))
    assert expansion[(2, 3, 2)] == slide((1, 2, 0))
    total = Polynomial.zero()
    for v in expansion.values():
        total = total + v
    assert total == schubert(parse_permutation("[1432]"))
    identity_expansion = expand_schubert_into_slides(Permutation.identity())
    assert identity_expansion == {(): Polynomial.one()}


def test_expand_schubert_into_slides_s4():
    for p in symmetric_group(4):
        total = Polynomial.zero()
        for v in expand_schubert_into_slides(p).values():
            total = total + v
        assert total == schubert(p)


def test_expand_schur_examples():
    expansion = expand_schur_into_fundamentals((2, 1), 3)
    assert set(expansion.values()) == {fundamental_quasisymmetric((2, 1), 3),
                                       fundamental_quasisymmetric((1, 2), 3)}
    assert expand_schur_into_fundamentals((1,), 2) == {
        ((1,),): fundamental_quasisymmetric((1,), 2)}
    for lam in [(2, 2), (3, 1), (2, 1, 1)]:
        total = Polynomial.zero()
        for v in expand_schur_into_fundamentals(lam, 4).values():
            total = total + v
        assert total == schur(lam, 4)


def test_glide_of_word():
    """On a reduced word the glide of the word extends the slide of the word;
    on an unrepresentable word it vanishes; on a non-reduced word it matches
    the weight of the quasi-Yamanouchi pipe dream with that reading word."""
    from schubcalc.poly import glide_of_word

    assert glide_of_word(parse_word("323")).lowest_degree_part() == \
        slide_of_word(parse_word("323"))
    assert glide_of_word((1, 2, 1)) == Polynomial.zero()
    for p in [parse_permutation("[1432]"), parse_permutation("[321]")]:
        for dream in pipedreams.quasi_yamanouchi_pipe_dreams(p, reduced_only=False):
            assert glide_of_word(dream.reading_word()) == glide(dream.weight())


def test_expand_grothendieck_examples():
    assert expand_grothendieck_into_glides(Permutation.identity()) == {
        pipedreams.PipeDream.empty(1): Polynomial.one()}
    p21 = parse_permutation("[21]")
    expansion = expand_grothendieck_into_glides(p21)
    only = pipedreams.PipeDream(2, frozenset({(1, 1)}))
    assert expansion == {only: glide((1,))}
    for p in symmetric_group(3):
        total = Polynomial.zero()
        for v in expand_grothendieck_into_glides(p).values():
            total = total + v
        assert total == grothendieck(p)
