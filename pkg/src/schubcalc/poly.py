"""Sparse integer polynomials in variables x_i indexed by arbitrary integers,
and the polynomial families attached to permutations, shapes and words.

A monomial is a sorted tuple of (index, exponent) pairs with positive
exponents; a polynomial maps monomials to non-zero integer coefficients.
Negative variable indices appear in truncations of back-stable series, so
nothing here assumes indices start at 1.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import perms, pipedreams, shapes
from .perms import Permutation, Word
from .shapes import Shape

Monomial = tuple[tuple[int, int], ...]


class Polynomial:
    """Immutable-by-convention sparse polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = coeff

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial({(): 1})

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial({(): c} if c else {})

    @staticmethod
    def variable(index: int) -> "Polynomial":
        return Polynomial({((index, 1),): 1})

    @staticmethod
    def monomial(exponents: Mapping[int, int], coeff: int = 1) -> "Polynomial":
        key = tuple(sorted((i, e) for i, e in exponents.items() if e))
        if any(e < 0 for _, e in key):
            raise ValueError("exponents must be non-negative")
        return Polynomial({key: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, 0) + coeff
            if new:
                out[mono] = new
            else:
                out.pop(mono, None)
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            if not other:
                return Polynomial.zero()
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                new = out.get(mono, 0) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return Polynomial(out)

    __rmul__ = __mul__

    def coefficient(self, exponents: Mapping[int, int]) -> int:
        key = tuple(sorted((i, e) for i, e in exponents.items() if e))
        return self.terms.get(key, 0)

    def total_degrees(self) -> set[int]:
        return {sum(e for _, e in m) for m in self.terms}

    def lowest_degree_part(self) -> "Polynomial":
        if not self.terms:
            return Polynomial.zero()
        low = min(sum(e for _, e in m) for m in self.terms)
        return Polynomial({m: c for m, c in self.terms.items()
                           if sum(e for _, e in m) == low})

    def substitute_zero(self, kill: Iterable[int]) -> "Polynomial":
        """Set the listed variables to zero."""
        dead = set(kill)
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            if any(i in dead for i, _ in m):
                continue
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    def swap_variables(self, i: int, j: int) -> "Polynomial":
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            exps = dict(m)
            exps[i], exps[j] = exps.get(j, 0), exps.get(i, 0)
            key = tuple(sorted((k, e) for k, e in exps.items() if e))
            out[key] = out.get(key, 0) + c
        return Polynomial(out)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Graded order, then lexicographic on the (index, exponent) pairs."""
        return sorted(self.terms.items(),
                      key=lambda mc: (sum(e for _, e in mc[0]), mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, coeff in self.sorted_terms():
            body = " ".join(f"x_{i}" if e == 1 else f"x_{i}^{e}" for i, e in mono)
            if not body:
                text = str(abs(coeff))
            elif abs(coeff) == 1:
                text = body
            else:
                text = f"{abs(coeff)} {body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"exponents": {str(i): e for i, e in mono}, "coeff": coeff}
                for mono, coeff in self.sorted_terms()]

    @staticmethod
    def from_json(data: list[dict]) -> "Polynomial":
        out: dict[Monomial, int] = {}
        for term in data:
            mono = tuple(sorted((int(i), int(e)) for i, e in term["exponents"].items()))
            out[mono] = out.get(mono, 0) + int(term["coeff"])
        return Polynomial(out)


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps = dict(m1)
    for i, e in m2:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def from_weak_composition(weight: Sequence[int]) -> Polynomial:
    """x_1^{w_1} x_2^{w_2} ... for a weak composition."""
    return Polynomial.monomial({i + 1: e for i, e in enumerate(weight) if e})


def from_exponent_word(seq: Sequence[int]) -> Polynomial:
    """The product of x_j over the entries j of a sequence."""
    exps: dict[int, int] = {}
    for j in seq:
        exps[j] = exps.get(j, 0) + 1
    return Polynomial.monomial(exps)


def from_tableau_contents(tableaux: Iterable[shapes.Tableau]) -> Polynomial:
    total = Polynomial.zero()
    for t in tableaux:
        total = total + from_weak_composition(shapes.content(t))
    return total


# ---------------------------------------------------------------------------
# the polynomial families


def schubert(p: Permutation) -> Polynomial:
    """Sum of x^weight over the reduced pipe dreams for p.

    >>> str(schubert(perms.parse_permutation("[321]")))
    'x_1^2 x_2'
    """
    total = Polynomial.zero()
    for dream in pipedreams.reduced_pipe_dreams(p):
        total = total + from_weak_composition(dream.weight())
    return total


def schubert_from_words(p: Permutation) -> Polynomial:
    """Schubert polynomial via reduced words and their compatible sequences;
    an independent route to the same polynomial as `schubert`.
    """
    total = Polynomial.zero()
    for word in perms.reduced_words(p):
        for seq in perms.compatible_sequences(word, lower_bound=1):
            total = total + from_exponent_word(seq)
    return total


def grothendieck(p: Permutation) -> Polynomial:
    """Signed sum of x^weight over all pipe dreams for p, the sign being
    (-1)^excess.
    """
    total = Polynomial.zero()
    for dream in pipedreams.all_pipe_dreams(p):
        term = from_weak_composition(dream.weight())
        total = total + (term if dream.excess % 2 == 0 else -term)
    return total


def schur(shape: Shape, n: int) -> Polynomial:
    """Generating polynomial of semistandard tableaux with entries up to n."""
    return from_tableau_contents(shapes.enumerate_tableaux("ssyt", shape, n))


def fundamental_quasisymmetric(shape: Shape, n: int) -> Polynomial:
    """Generating polynomial of composition tableaux with entries up to n."""
    return from_tableau_contents(shapes.enumerate_tableaux("ct", shape, n))


def slide(shape: Shape) -> Polynomial:
    """Generating polynomial of all weak composition tableaux of the shape.

    The row caps bound every entry by its row index, so no variable beyond
    x_len(shape) can occur and the polynomial needs no truncation parameter.
    """
    return from_tableau_contents(shapes.enumerate_tableaux("wct", shape, len(shape)))


def slide_of_word(word: Word) -> Polynomial:
    """Slide polynomial of the weight of the quasi-Yamanouchi pipe dream with
    the given reading word; zero when no such pipe dream exists.
    """
    dream = pipedreams.quasi_yamanouchi_for_word(word)
    if dream is None:
        return Polynomial.zero()
    return slide(dream.weight())


def glide(shape: Shape) -> Polynomial:
    """Signed generating polynomial of set-valued weak composition tableaux,
    each weighted by (-1)^(entries beyond one per box).
    """
    base = shapes.size(shape)
    total = Polynomial.zero()
    for svt in shapes.enumerate_set_valued_wct(shape):
        term = from_weak_composition(shapes.set_valued_content(svt))
        sign = (shapes.set_valued_size(svt) - base) % 2
        total = total + (term if sign == 0 else -term)
    return total


def glide_from_kompositions(shape: Shape) -> Polynomial:
    """The same polynomial computed from the glide predicate on kompositions;
    an independent route to `glide`.
    """
    total = Polynomial.zero()
    for kappa in shapes.glide_kompositions(shape):
        term = from_weak_composition(kappa.parts)
        total = total + (term if kappa.excess % 2 == 0 else -term)
    return total


def glide_of_word(word: Word) -> Polynomial:
    """Glide polynomial of the weight of the quasi-Yamanouchi pipe dream with
    the given (not necessarily reduced) reading word; zero when none exists.
    """
    p = perms.demazure(word)
    matches = [d for d in pipedreams.all_pipe_dreams(p)
               if pipedreams.is_quasi_yamanouchi(d) and d.reading_word() == tuple(word)]
    if not matches:
        return Polynomial.zero()
    if len(matches) > 1:
        raise AssertionError(f"two quasi-Yamanouchi dreams read {word!r}")
    return glide(matches[0].weight())


def backstable_truncation(p: Permutation, lowest_index: int) -> Polynomial:
    """The back-stable Schubert series with every x_i, i < lowest_index, set
    to zero: the sum of x^s over reduced words and compatible sequences s
    with all entries at least lowest_index.

    >>> str(backstable_truncation(perms.parse_permutation("[21]"), 0))
    'x_0 + x_1'
    """
    total = Polynomial.zero()
    for word in perms.reduced_words(p):
        for seq in perms.compatible_sequences(word, lower_bound=lowest_index):
            total = total + from_exponent_word(seq)
    return total


# ---------------------------------------------------------------------------
# expansions


def expand_schubert_into_slides(p: Permutation) -> dict[Word, Polynomial]:
    """Slide polynomial of each reduced word; the values sum to schubert(p)."""
    return {word: slide_of_word(word) for word in perms.reduced_words(p)}


def expand_schur_into_fundamentals(shape: Shape, n: int) -> dict[shapes.Tableau, Polynomial]:
    """One fundamental quasisymmetric polynomial per standard tableau, indexed
    by the descent composition; the values sum to schur(shape, n).
    """
    total = shapes.size(shape)
    out = {}
    for t in shapes.enumerate_tableaux("syt", shape, max(total, 1)):
        comp = shapes.set_to_composition(shapes.descent_set(t), total) if total else ()
        out[t] = fundamental_quasisymmetric(comp, n)
    return out


def expand_grothendieck_into_glides(p: Permutation) -> dict[pipedreams.PipeDream, Polynomial]:
    """Signed glide polynomial of each quasi-Yamanouchi pipe dream for p
    (all excesses); the values sum to grothendieck(p).
    """
    out = {}
    for dream in pipedreams.quasi_yamanouchi_pipe_dreams(p, reduced_only=False):
        term = glide(dream.weight())
        out[dream] = term if dream.excess % 2 == 0 else -term
    return out
