"""Simplicial complexes on labelled vertices and the Stanley-Reisner dictionary.

Vertex sets are stored as integer bitmasks: vertex ``i`` is bit ``1 << i``
(bit 0 is never used, so labels stay 1-based).  Public builders accept plain
iterables of labels; the bitmask form is what every other module works with.

A complex is kept by its facets.  The complex ``{∅}`` is ``facets == (0,)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

VertexSet = int


class ComplexError(ValueError):
    """Raised when a complex or a support family violates its invariants."""


# --------------------------------------------------------------------------
# bitmask helpers
# --------------------------------------------------------------------------

def mask_of(labels: Iterable[int]) -> VertexSet:
    m = 0
    for i in labels:
        if i < 1:
            raise ComplexError(f"vertex labels are 1-based, got {i}")
        m |= 1 << i
    return m


def labels(mask: VertexSet) -> tuple[int, ...]:
    """Sorted vertex labels of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> VertexSet:
    return ((1 << n) - 1) << 1


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def sort_key(mask: VertexSet) -> tuple[int, ...]:
    return labels(mask)


def canonical(masks: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Deduplicate and sort lexicographically by label tuple."""
    return tuple(sorted(set(masks), key=sort_key))


def maximal(masks: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-maximal members, canonically ordered."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return canonical(kept)


def minimal(masks: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-minimal members, canonically ordered."""
    kept: list[int] = []
    for m in sorted(set(masks), key=int.bit_count):
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return canonical(kept)


def minimal_transversals(sets: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Minimal hitting sets of a hypergraph (Berge's incremental method).

    An empty hypergraph has the single transversal ``0``; a hypergraph with
    an empty edge has none.
    """
    edges = minimal(sets)
    trans: list[int] = [0]
    for e in sorted(edges, key=int.bit_count):
        if e == 0:
            return ()
        hit = [t for t in trans if t & e]
        missed = [t for t in trans if not t & e]
        grown = [t | (1 << v) for t in missed for v in iter_bits(e)]
        trans = list(minimal(hit + grown))
    return canonical(trans)


# --------------------------------------------------------------------------
# data model
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on the vertex subset ``vertices`` of ``[n]``, by facets.

    Links and stars keep the original labels; ``vertices`` records which
    labels actually occur.  Every vertex in ``vertices`` lies in a facet.
    """

    n: int
    facets: tuple[VertexSet, ...]
    vertices: VertexSet

    @property
    def dim(self) -> int:
        return max(f.bit_count() for f in self.facets) - 1

    def is_face(self, face: VertexSet) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def faces(self, k: int) -> tuple[VertexSet, ...]:
        """All faces of dimension ``k`` (``k = -1`` gives the empty face)."""
        if k == -1:
            return (0,)
        found: set[int] = set()
        for f in self.facets:
            if f.bit_count() > k:
                found.update(_subsets_of_size(f, k + 1))
        return canonical(found)

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        return [len(self.faces(k)) for k in range(-1, self.dim + 1)]

    def facet_sets(self) -> list[tuple[int, ...]]:
        return [labels(f) for f in self.facets]

    def vertex_labels(self) -> tuple[int, ...]:
        return labels(self.vertices)

    # mask-level operations; the module functions below wrap these

    def link_of(self, face: VertexSet) -> SimplicialComplex:
        if not self.is_face(face):
            raise ComplexError(f"{labels(face)} is not a face")
        pieces = maximal(f & ~face for f in self.facets if face & ~f == 0)
        verts = 0
        for p in pieces:
            verts |= p
        return SimplicialComplex(self.n, pieces, verts)

    def star_of(self, face: VertexSet) -> SimplicialComplex:
        if not self.is_face(face):
            raise ComplexError(f"{labels(face)} is not a face")
        pieces = canonical(f for f in self.facets if face & ~f == 0)
        verts = 0
        for p in pieces:
            verts |= p
        return SimplicialComplex(self.n, pieces, verts)

    def restrict(self, subset: VertexSet) -> SimplicialComplex:
        """Induced subcomplex on ``subset`` (which must be covered)."""
        return SimplicialComplex(self.n, maximal(f & subset for f in self.facets), subset & self.vertices)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, labels(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{body}>)"


def _subsets_of_size(mask: int, k: int) -> Iterator[int]:
    items = [1 << v for v in iter_bits(mask)]

    def rec(start: int, left: int, acc: int) -> Iterator[int]:
        if left == 0:
            yield acc
            return
        for j in range(start, len(items) - left + 1):
            yield from rec(j + 1, left - 1, acc | items[j])

    yield from rec(0, k, 0)


@dataclass(frozen=True)
class SupportFamily:
    """Supports of the minimal generators of a square-free monomial ideal.

    Members form an antichain of sets of size at least two, all inside
    ``vertices`` (which defaults to the whole of ``[n]``).
    """

    n: int
    members: tuple[VertexSet, ...]
    vertices: VertexSet = field(default=-1)

    def __post_init__(self) -> None:
        if self.vertices == -1:
            object.__setattr__(self, "vertices", full_mask(self.n))

    @property
    def edges(self) -> tuple[VertexSet, ...]:
        return tuple(m for m in self.members if m.bit_count() == 2)

    @property
    def big(self) -> tuple[VertexSet, ...]:
        return tuple(m for m in self.members if m.bit_count() >= 3)

    @property
    def support(self) -> VertexSet:
        u = 0
        for m in self.members:
            u |= m
        return u

    def member_sets(self) -> list[tuple[int, ...]]:
        return [labels(m) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, labels(m))) + "}" for m in self.members)
        return f"SupportFamily(n={self.n}, [{body}])"


def support_family(n: int, members: Iterable[Iterable[int]]) -> SupportFamily:
    """Validate and build a support family from label iterables."""
    masks = [mask_of(m) for m in members]
    ground = full_mask(n)
    for m in masks:
        if m & ~ground:
            raise ComplexError(f"vertex out of range 1..{n} in {labels(m)}")
        if m.bit_count() < 2:
            raise ComplexError(f"member {labels(m)} has fewer than two vertices")
    if len(set(masks)) != len(masks):
        raise ComplexError("duplicate members")
    for a in masks:
        for b in masks:
            if a != b and a & ~b == 0:
                raise ComplexError(f"{labels(a)} is contained in {labels(b)}; not an antichain")
    return SupportFamily(n, canonical(masks))


# --------------------------------------------------------------------------
# operations
# --------------------------------------------------------------------------

def from_facets(n: int, facets: Iterable[Iterable[int]], *, add_missing_vertices: bool = False) -> SimplicialComplex:
    """Build a complex on ``[n]`` from a list of faces.

    Non-maximal inputs are absorbed.  Every vertex of ``[n]`` must be
    covered unless ``add_missing_vertices`` is set, in which case uncovered
    vertices become singleton facets.
    """
    ground = full_mask(n)
    masks = []
    for f in facets:
        m = mask_of(f)
        if m == 0:
            raise ComplexError("facets must be nonempty")
        if m & ~ground:
            raise ComplexError(f"vertex out of range 1..{n} in {labels(m)}")
        masks.append(m)
    covered = 0
    for m in masks:
        covered |= m
    missing = ground & ~covered
    if missing:
        if not add_missing_vertices:
            raise ComplexError(f"vertices {labels(missing)} are not covered by any facet")
        masks.extend(1 << v for v in iter_bits(missing))
    if not masks:
        return SimplicialComplex(n, (0,), 0)
    return SimplicialComplex(n, maximal(masks), ground)


def simplex(n: int, vertex_labels: Iterable[int] | None = None) -> SimplicialComplex:
    """The full simplex on ``vertex_labels`` (default ``[n]``)."""
    m = full_mask(n) if vertex_labels is None else mask_of(vertex_labels)
    return SimplicialComplex(n, (m,), m)


def minimal_nonfaces(cx: SimplicialComplex) -> SupportFamily:
    # G is a nonface iff it meets the complement of every facet.
    complements = [cx.vertices & ~f for f in cx.facets]
    members = minimal_transversals(complements)
    return SupportFamily(cx.n, members, cx.vertices)


def from_nonfaces(family: SupportFamily) -> SimplicialComplex:
    for m in family.members:
        if m.bit_count() < 2:
            raise ComplexError(f"singleton generator {labels(m)} would delete a vertex")
    # complements of faces are exactly the transversals of the family
    facets = [family.vertices & ~t for t in minimal_transversals(family.members)]
    return SimplicialComplex(family.n, maximal(facets), family.vertices)


def link(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    return cx.link_of(mask_of(face))


def star(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    return cx.star_of(mask_of(face))


def core_vertices(cx: SimplicialComplex) -> VertexSet:
    common = cx.vertices
    for f in cx.facets:
        common &= f
    return cx.vertices & ~common


def core(cx: SimplicialComplex) -> tuple[VertexSet, SimplicialComplex]:
    """``core[n]`` (vertices that are not cone points) and the core complex."""
    c = core_vertices(cx)
    return c, SimplicialComplex(cx.n, maximal(f & c for f in cx.facets), c)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.vertices & b.vertices:
        raise ComplexError(f"join needs disjoint vertex sets, both contain {labels(a.vertices & b.vertices)}")
    facets = canonical(f | g for f in a.facets for g in b.facets)
    return SimplicialComplex(max(a.n, b.n), facets, a.vertices | b.vertices)


def is_pure(cx: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in cx.facets}) == 1
