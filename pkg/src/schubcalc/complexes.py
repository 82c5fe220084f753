"""Simplicial complexes with deletion/link, vertex-decomposition search,
ball/sphere classification, and the subword, slide, word-set and tableau
complexes built on words and tableaux.

A complex stores an explicit vertex set (phantom vertices allowed: elements
of the ground set lying in no face) and its facets.  Faces are the subsets
of facets and are never materialized unless asked for.

The void complex (no facets at all) is distinct from the complex {} whose
only face is the empty set; `SimplicialComplex.is_void` tells them apart.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, Sequence

from . import perms, shapes
from .perms import Permutation, Word

Face = frozenset
Vertex = Hashable


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    facets: frozenset[Face]

    @staticmethod
    def from_facets(facets: Iterable[Iterable[Vertex]],
                    vertices: Iterable[Vertex] | None = None) -> "SimplicialComplex":
        packed = frozenset(frozenset(f) for f in facets)
        packed = frozenset(f for f in packed
                           if not any(f < g for g in packed))
        if vertices is None:
            seen = sorted(set().union(*packed)) if packed else []
            return SimplicialComplex(tuple(seen), packed)
        return SimplicialComplex(tuple(vertices), packed)

    @staticmethod
    def void(vertices: Iterable[Vertex] = ()) -> "SimplicialComplex":
        return SimplicialComplex(tuple(vertices), frozenset())

    @property
    def is_void(self) -> bool:
        return not self.facets

    def dimension(self) -> int:
        """Max facet dimension; -1 for {}; raises on the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def used_vertices(self) -> tuple:
        seen = set().union(*self.facets) if self.facets else set()
        return tuple(v for v in self.vertices if v in seen)

    def has_face(self, face: Iterable[Vertex]) -> bool:
        probe = frozenset(face)
        return any(probe <= f for f in self.facets)

    def faces(self) -> Iterator[Face]:
        """All faces, deduplicated, in no particular order."""
        seen: set[Face] = set()
        for facet in self.facets:
            items = sorted(facet)
            for r in range(len(items) + 1):
                for combo in itertools.combinations(items, r):
                    face = frozenset(combo)
                    if face not in seen:
                        seen.add(face)
                        yield face

    def face_count_by_dimension(self) -> dict[int, int]:
        counts: Counter[int] = Counter()
        for face in self.faces():
            counts[len(face) - 1] += 1
        return dict(counts)

    def reduced_euler_characteristic(self) -> int:
        """Alternating sum over all faces, the empty face included."""
        if self.is_void:
            return 0
        total = 0
        for face in self.faces():
            total += (-1) ** (len(face) - 1)
        return total

    def deletion(self, face: Iterable[Vertex]) -> "SimplicialComplex":
        """Faces meeting the given face nowhere."""
        probe = frozenset(face)
        if not self.has_face(probe):
            raise ValueError("deletion requires a face")
        remaining = tuple(v for v in self.vertices if v not in probe)
        stripped = {f - probe for f in self.facets}
        return SimplicialComplex.from_facets(stripped, remaining) if probe else self

    def link(self, face: Iterable[Vertex]) -> "SimplicialComplex":
        """Faces disjoint from the given face whose union with it is a face."""
        probe = frozenset(face)
        if not self.has_face(probe):
            raise ValueError("link requires a face")
        remaining = tuple(v for v in self.vertices if v not in probe)
        carriers = [f - probe for f in self.facets if probe <= f]
        return SimplicialComplex.from_facets(carriers, remaining)

    def cone_vertices(self) -> tuple:
        if self.is_void:
            return ()
        common = frozenset.intersection(*self.facets)
        return tuple(v for v in self.vertices if v in common)

    def ridge_facet_counts(self) -> dict[Face, int]:
        """How many facets contain each codimension-1 face."""
        counts: Counter[Face] = Counter()
        for facet in self.facets:
            for v in facet:
                counts[facet - {v}] += 1
        return dict(counts)

    def relabelled(self) -> frozenset[Face]:
        """Facets with vertices renamed order-preservingly to 0..m-1."""
        used = sorted(set().union(*self.facets)) if self.facets else []
        index = {v: k for k, v in enumerate(used)}
        return frozenset(frozenset(index[v] for v in f) for f in self.facets)

    def to_json(self) -> dict:
        verts = list(self.vertices)
        return {"vertices": [_vertex_json(v) for v in verts],
                "facets": sorted([sorted(_vertex_json(v) for v in f) for f in self.facets])}

    def __repr__(self) -> str:
        inner = ", ".join(sorted("{" + ",".join(map(str, sorted(f))) + "}"
                                 for f in self.facets))
        return f"SimplicialComplex({len(self.vertices)} vertices; facets {inner or 'void'})"


def _vertex_json(v):
    if isinstance(v, tuple):
        return [_vertex_json(x) for x in v]
    return v


def from_json(data: dict) -> SimplicialComplex:
    def unpack(v):
        return tuple(unpack(x) for x in v) if isinstance(v, list) else v
    vertices = tuple(unpack(v) for v in data["vertices"])
    facets = [frozenset(unpack(v) for v in f) for f in data["facets"]]
    return SimplicialComplex(vertices, frozenset(facets))


# ---------------------------------------------------------------------------
# vertex decomposability


_VD_CACHE: dict[frozenset[Face], bool] = {}


def is_vertex_decomposable(complex_: SimplicialComplex) -> bool:
    """Recursive search with memoization on relabelled facet sets.

    A pure complex qualifies when it is {} or some vertex has vertex-
    decomposable deletion and link.  Vertices are tried in sorted order, so
    for subword complexes the leftmost surviving position is tried first.
    """
    if complex_.is_void:
        return False
    return _vd_search(complex_.relabelled())


def _vd_search(facets: frozenset[Face]) -> bool:
    cached = _VD_CACHE.get(facets)
    if cached is not None:
        return cached
    result = _vd_search_uncached(facets)
    _VD_CACHE[facets] = result
    return result


def _vd_search_uncached(facets: frozenset[Face]) -> bool:
    if len({len(f) for f in facets}) > 1:
        return False
    if facets == frozenset({frozenset()}):
        return True
    used = sorted(set().union(*facets))
    for v in used:
        deletion = _facets_without(facets, v)
        link = frozenset(f - {v} for f in facets if v in f)
        if not link:
            continue
        if _vd_search(_canon(deletion)) and _vd_search(_canon(link)):
            return True
    return False


def _facets_without(facets: frozenset[Face], v) -> frozenset[Face]:
    stripped = {f - {v} for f in facets}
    return frozenset(f for f in stripped if not any(f < g for g in stripped))


def _canon(facets: frozenset[Face]) -> frozenset[Face]:
    used = sorted(set().union(*facets)) if facets else []
    index = {x: k for k, x in enumerate(used)}
    return frozenset(frozenset(index[x] for x in f) for f in facets)


def vertex_decomposition(complex_: SimplicialComplex):
    """A witness tree: "leaf" for {}, else (vertex, deletion tree, link tree).

    Returns None when the complex is not vertex-decomposable.  Unlike
    is_vertex_decomposable this keeps the original vertex labels.
    """
    if complex_.is_void or not complex_.is_pure():
        return None
    if complex_.facets == frozenset({frozenset()}):
        return "leaf"
    for v in sorted(complex_.used_vertices()):
        del_tree = vertex_decomposition(complex_.deletion([v]))
        if del_tree is None:
            continue
        link_tree = vertex_decomposition(complex_.link([v]))
        if link_tree is None:
            continue
        return (v, del_tree, link_tree)
    return None


# ---------------------------------------------------------------------------
# ball / sphere classification


@dataclass(frozen=True)
class Classification:
    kind: str  # "sphere" | "ball" | "neither"
    boundary_ridges: frozenset[Face] = field(default_factory=frozenset)
    reason: str = ""


def classify_ball_or_sphere(complex_: SimplicialComplex) -> Classification:
    """Shellability (via vertex decomposability) plus the codimension-1 count
    criterion: every ridge in exactly two facets gives a sphere; at most two
    with some in only one gives a ball whose boundary is generated by the
    once-covered ridges.  Anything else is reported as "neither" (the
    criterion is sufficient, not necessary).
    """
    if complex_.is_void:
        return Classification("neither", reason="void complex")
    if not complex_.is_pure():
        return Classification("neither", reason="not pure")
    if not is_vertex_decomposable(complex_):
        return Classification("neither", reason="not vertex-decomposable")
    counts = complex_.ridge_facet_counts()
    if any(c > 2 for c in counts.values()):
        return Classification("neither", reason="a codimension-1 face lies in more than two facets")
    boundary = frozenset(f for f, c in counts.items() if c == 1)
    if boundary:
        return Classification("ball", boundary)
    return Classification("sphere")


def boundary_faces(complex_: SimplicialComplex) -> frozenset[Face]:
    """Downward closure of the once-covered codimension-1 faces."""
    result = classify_ball_or_sphere(complex_)
    out: set[Face] = set()
    for ridge in result.boundary_ridges:
        items = sorted(ridge)
        for r in range(len(items) + 1):
            out.update(frozenset(c) for c in itertools.combinations(items, r))
    return frozenset(out)


def stanley_reisner_generators(complex_: SimplicialComplex) -> frozenset[Face]:
    """Minimal non-faces: the exponent sets of the squarefree generators of
    the face ideal.  Phantom vertices contribute singleton generators.
    """
    if complex_.is_void:
        raise ValueError("the void complex has a unit face ideal")
    out: set[Face] = set()
    vertices = list(complex_.vertices)
    top = complex_.dimension() + 2
    for size in range(1, len(vertices) + 1):
        if size > top:
            break
        for combo in itertools.combinations(vertices, size):
            face = frozenset(combo)
            if complex_.has_face(face):
                continue
            if any(gen <= face for gen in out):
                continue
            subsets_ok = all(complex_.has_face(face - {v}) for v in face)
            if subsets_ok:
                out.add(face)
    return frozenset(out)


# ---------------------------------------------------------------------------
# subword, slide and word-set complexes


def word_embeddings(ambient: Word, target: Word) -> list[frozenset[int]]:
    """All position sets (1-based) carrying the target as a subword."""
    out: list[frozenset[int]] = []

    def scan(start: int, k: int, chosen: list[int]) -> None:
        if k == len(target):
            out.append(frozenset(chosen))
            return
        for p in range(start, len(ambient) - (len(target) - k) + 2):
            if ambient[p - 1] == target[k]:
                chosen.append(p)
                scan(p + 1, k + 1, chosen)
                chosen.pop()

    scan(1, 0, [])
    return out


def contains_word_for(ambient: Word, p: Permutation) -> bool:
    """Whether some subword of the ambient word is a reduced word for p;
    equivalently the Demazure product of the ambient dominates p in Bruhat
    order.
    """
    return perms.bruhat_leq(p, perms.demazure(ambient))


def subword_complex(ambient: Word, p: Permutation) -> SimplicialComplex:
    """Faces are the position sets whose complements still contain p.

    The facets are the complements of the embeddings of the reduced words of
    p; the result is void when the ambient word does not contain p.
    """
    positions = tuple(range(1, len(ambient) + 1))
    facets = []
    for word in perms.reduced_words(p):
        for emb in word_embeddings(ambient, word):
            facets.append(frozenset(positions) - emb)
    if not facets:
        return SimplicialComplex.void(positions)
    return SimplicialComplex(positions, frozenset(facets))


def slide_complex(ambient: Word, target: Word) -> SimplicialComplex:
    """Subcomplex of the subword complex keeping only the facets whose
    complements are embeddings of the one given reduced word.
    """
    if not perms.is_reduced(target):
        raise ValueError("slide complexes are indexed by reduced words")
    return word_set_complex(ambient, [target])


def word_set_complex(ambient: Word, words: Sequence[Word]) -> SimplicialComplex:
    """Faces are position sets whose complements contain some word of the
    given set.  All words must be reduced words of one permutation, so the
    complex is pure.
    """
    _common_permutation(words)
    positions = tuple(range(1, len(ambient) + 1))
    facets = []
    for word in words:
        for emb in word_embeddings(ambient, tuple(word)):
            facets.append(frozenset(positions) - emb)
    if not facets:
        return SimplicialComplex.void(positions)
    return SimplicialComplex(positions, frozenset(facets))


def _common_permutation(words: Sequence[Word]) -> Permutation | None:
    target = None
    for w in words:
        if not perms.is_reduced(w):
            raise ValueError(f"{w!r} is not reduced")
        p = perms.prod_word(w)
        if target is None:
            target = p
        elif p != target:
            raise ValueError("words do not all represent one permutation")
    return target


def is_backwards_saturated(words: Iterable[Word]) -> bool:
    """Recursive closure property guaranteeing that the word-set complex is a
    ball or sphere: for each first letter actually used, the words behind it
    stay backwards-saturated and every word of the set contains one of them
    as a subword.
    """
    word_set = frozenset(tuple(w) for w in words)
    _common_permutation(sorted(word_set))
    return _bs_check(word_set)


_bs_memo: dict[frozenset[Word], bool] = {}


def _bs_check(word_set: frozenset[Word]) -> bool:
    cached = _bs_memo.get(word_set)
    if cached is not None:
        return cached
    result = True
    first_letters = {w[0] for w in word_set if w}
    for letter in first_letters:
        behind = frozenset(w[1:] for w in word_set if w and w[0] == letter)
        if not _bs_check(behind):
            result = False
            break
        if not all(any(_is_subword(tail, w) for tail in behind) for w in word_set):
            result = False
            break
    _bs_memo[word_set] = result
    return result


def _is_subword(short: Word, long: Word) -> bool:
    it = iter(long)
    return all(any(x == y for y in it) for x in short)


# ---------------------------------------------------------------------------
# tableau complexes


TableauVertex = tuple[tuple[int, int], int]  # ((row, col), value)


def _tableau_elements(t: shapes.Tableau) -> frozenset[TableauVertex]:
    return frozenset(((r + 1, c + 1), v)
                     for r, row in enumerate(t) for c, v in enumerate(row))


def tableau_ambient(family: str, shape: shapes.Shape, n: int) -> frozenset[TableauVertex]:
    """Union of all family tableaux, the default ambient set-valued filling."""
    out: set[TableauVertex] = set()
    for t in shapes.enumerate_tableaux(family, shape, n):
        out |= _tableau_elements(t)
    return frozenset(out)


def tableau_complex(family: str, shape: shapes.Shape, n: int,
                    ambient: frozenset[TableauVertex] | None = None) -> SimplicialComplex:
    """Facets are the complements, inside the ambient filling, of the family
    tableaux; general faces are complements of limit set-valued tableaux.
    """
    tableaux = shapes.enumerate_tableaux(family, shape, n)
    if ambient is None:
        ambient = tableau_ambient(family, shape, n)
    vertices = tuple(sorted(ambient))
    facets = []
    for t in tableaux:
        elements = _tableau_elements(t)
        if not elements <= ambient:
            raise ValueError("ambient filling must contain every family tableau")
        facets.append(frozenset(ambient) - elements)
    if not facets:
        return SimplicialComplex.void(vertices)
    return SimplicialComplex(vertices, frozenset(facets))


def elements_to_set_valued(elements: Iterable[TableauVertex],
                           shape: shapes.Shape) -> shapes.SetValuedTableau | None:
    """Reassemble ((row, col), value) pairs into a set-valued tableau;
    None when some box of the shape would be empty.
    """
    boxes: dict[tuple[int, int], set[int]] = {}
    for (box, v) in elements:
        boxes.setdefault(box, set()).add(v)
    rows = []
    for r, width in enumerate(shape, start=1):
        row = []
        for c in range(1, width + 1):
            if (r, c) not in boxes:
                return None
            row.append(frozenset(boxes[(r, c)]))
        rows.append(tuple(row))
    return tuple(rows)


def interior_faces(family: str, shape: shapes.Shape, n: int,
                   ambient: frozenset[TableauVertex] | None = None) -> frozenset[Face]:
    """Faces whose complements are set-valued family tableaux outright (every
    selection in the family), not merely limit set-valued ones.
    """
    if ambient is None:
        ambient = tableau_ambient(family, shape, n)
    complex_ = tableau_complex(family, shape, n, ambient)
    out = set()
    for face in complex_.faces():
        svt = elements_to_set_valued(ambient - face, shape)
        if svt is None:
            continue
        if shapes.classify_set_valued(svt, family, n) == "set-valued":
            out.add(face)
    return frozenset(out)


def ssyt_standardization_decomposition(shape: shapes.Shape, n: int) -> dict[shapes.Tableau, SimplicialComplex]:
    """Partition the facets of the semistandard tableau complex by the
    standardization of the complementary tableau, one subcomplex per standard
    tableau, all inside the common ambient filling.
    """
    ambient = tableau_ambient("ssyt", shape, n)
    vertices = tuple(sorted(ambient))
    classes: dict[shapes.Tableau, list[Face]] = {}
    for t in shapes.enumerate_tableaux("ssyt", shape, n):
        key = shapes.standardize(t)
        classes.setdefault(key, []).append(frozenset(ambient) - _tableau_elements(t))
    return {key: SimplicialComplex(vertices, frozenset(facets))
            for key, facets in sorted(classes.items())}


# ---------------------------------------------------------------------------
# rendering


def to_dot(complex_: SimplicialComplex, labels: dict | None = None) -> str:
    """1-skeleton as a graph; 2-faces are recorded as comments."""
    if complex_.is_void:
        return "graph complex { /* void */ }"
    if complex_.dimension() > 2:
        raise ValueError("dot output is for complexes of dimension at most 2")
    labels = labels or {}
    names = {v: f"v{k}" for k, v in enumerate(complex_.vertices)}
    lines = ["graph complex {"]
    for v in complex_.vertices:
        label = labels.get(v, v)
        lines.append(f'  {names[v]} [label="{label}"];')
    edges = sorted({tuple(sorted((names[a], names[b])))
                    for f in complex_.facets
                    for a, b in itertools.combinations(sorted(f), 2)})
    for a, b in edges:
        lines.append(f"  {a} -- {b};")
    for f in sorted(complex_.facets, key=sorted):
        if len(f) == 3:
            lines.append(f"  /* 2-face {sorted(f)} */")
    lines.append("}")
    return "\n".join(lines)


def to_svg(complex_: SimplicialComplex, labels: dict | None = None, radius: int = 120) -> str:
    """Vertices on a circle, edges as lines, triangles shaded."""
    import math

    if complex_.is_void:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10"/>'
    if complex_.dimension() > 2:
        raise ValueError("svg output is for complexes of dimension at most 2")
    labels = labels or {}
    verts = list(complex_.vertices)
    side = 2 * radius + 60
    centre = side / 2
    pos = {}
    for k, v in enumerate(verts):
        angle = 2 * math.pi * k / max(len(verts), 1)
        pos[v] = (centre + radius * math.cos(angle), centre + radius * math.sin(angle))
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}">']
    for f in sorted(complex_.facets, key=sorted):
        if len(f) == 3:
            pts = " ".join(f"{pos[v][0]:.1f},{pos[v][1]:.1f}" for v in sorted(f))
            parts.append(f'<polygon points="{pts}" fill="#ccc" stroke="none"/>')
    edges = sorted({tuple(sorted((a, b)))
                    for f in complex_.facets
                    for a, b in itertools.combinations(sorted(f), 2)})
    for a, b in edges:
        (x1, y1), (x2, y2) = pos[a], pos[b]
        parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="#000"/>')
    for v in verts:
        x, y = pos[v]
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3" fill="#000"/>')
        parts.append(f'<text x="{x + 5:.1f}" y="{y - 5:.1f}" font-size="10">{labels.get(v, v)}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
