"""Combinatorial characterization of generalized complete intersections.

Everything here works on the support family ``F`` of the minimal
generators.  Size-2 members are called edges; the graph ``G`` has the
pairs that are *not* members as its edges, so it is the 1-skeleton of the
complex.  Members with at least three vertices are "big".

Witnesses are plain dicts of label lists so they can go straight into a
JSON report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator

from .complex import (
    ComplexError,
    SimplicialComplex,
    SupportFamily,
    VertexSet,
    canonical,
    core_vertices,
    is_pure,
    iter_bits,
    labels,
    maximal,
    minimal_nonfaces,
    minimal_transversals,
)
from .ideal import is_complete_intersection, localize

CONDITION_IDS = ("1a", "1b", "1c", "2", "3", "4")


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    vertices: VertexSet

    def adjacency(self) -> dict[int, VertexSet]:
        adj = {v: 0 for v in iter_bits(self.vertices)}
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj


@dataclass(frozen=True)
class ConditionResult:
    condition_id: str
    holds: bool
    witness: dict[str, Any] | None = None

    def as_dict(self) -> dict[str, Any]:
        return {"id": self.condition_id, "holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class TheoremResult:
    holds: bool
    branch: str  # "ci", "cone", or "conditions"
    conditions: list[ConditionResult] = field(default_factory=list)


def _edge_adjacency(family: SupportFamily) -> dict[int, VertexSet]:
    adj = {v: 0 for v in iter_bits(family.vertices)}
    for e in family.edges:
        a, b = labels(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def complement_graph(family: SupportFamily) -> Graph:
    """Graph whose edges are the vertex pairs that are not members of ``family``."""
    members = set(family.edges)
    verts = labels(family.vertices)
    edges = frozenset((a, b) for a, b in combinations(verts, 2) if (1 << a | 1 << b) not in members)
    return Graph(family.n, edges, family.vertices)


def big_cover_set(family: SupportFamily, s: VertexSet) -> VertexSet:
    """Vertices joined by an edge of ``family`` to some vertex of ``s``."""
    if s not in family.members:
        raise ComplexError(f"{labels(s)} is not a member of the family")
    if s.bit_count() < 3:
        raise ComplexError(f"{labels(s)} has fewer than three vertices")
    out = 0
    for e in family.edges:
        for j in iter_bits(e & s):
            out |= e & ~(1 << j)
    return out


def check_condition1(family: SupportFamily) -> list[ConditionResult]:
    """Conditions 1(a)-(c) on every big member; vacuous without big members."""
    members = set(family.members)
    edges = set(family.edges)
    res: dict[str, ConditionResult] = {}
    for s in family.big:
        c = big_cover_set(family, s)
        s_l = list(labels(s))
        if "1a" not in res:
            if c == 0:
                res["1a"] = ConditionResult("1a", False, {"S": s_l, "C": [], "reason": "C(S) is empty"})
            elif c & s:
                res["1a"] = ConditionResult("1a", False, {"S": s_l, "C": list(labels(c)),
                                                          "reason": "C(S) meets S"})
        if "1b" not in res:
            w = None
            for i in iter_bits(c):
                j = next((j for j in iter_bits(s) if (1 << i | 1 << j) not in edges), None)
                if j is not None:
                    w = {"S": s_l, "i": i, "j": j, "reason": "missing edge {i,j}"}
                    break
            if w is None:
                for t in members:
                    if t != s and t & s and t.bit_count() != 2:
                        w = {"S": s_l, "T": list(labels(t)), "reason": "T meets S but is not an edge"}
                        break
            if w is not None:
                res["1b"] = ConditionResult("1b", False, w)
        if "1c" not in res:
            outside = family.vertices & ~(c | s)
            for k in iter_bits(outside):
                i = next((i for i in iter_bits(c) if (1 << i | 1 << k) not in edges), None)
                if i is not None:
                    res["1c"] = ConditionResult("1c", False, {"S": s_l, "k": k, "i": i,
                                                              "reason": "missing edge {i,k}"})
                    break
    return [res.get(cid, ConditionResult(cid, True)) for cid in ("1a", "1b", "1c")]


def edge_components(family: SupportFamily) -> list[VertexSet]:
    """Connected components of the graph formed by the size-2 members."""
    adj = _edge_adjacency(family)
    seen = 0
    comps = []
    for v in iter_bits(family.vertices):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def check_condition2(family: SupportFamily) -> ConditionResult:
    """Every two vertices are joined by a path of edges."""
    comps = edge_components(family)
    if len(comps) <= 1:
        return ConditionResult("2", True)
    i = min(iter_bits(comps[0]))
    j = min(iter_bits(comps[1]))
    return ConditionResult("2", False, {"pair": [i, j]})


def four_edge_walks(family: SupportFamily) -> Iterator[tuple[int, int, int, int, int]]:
    """Walks i1..i5 along edges with no edge used twice in a row."""
    adj = _edge_adjacency(family)

    def extend(walk: list[int]) -> Iterator[tuple[int, ...]]:
        if len(walk) == 5:
            yield tuple(walk)
            return
        last = walk[-1]
        for nxt in iter_bits(adj[last]):
            if len(walk) >= 2 and nxt == walk[-2]:
                continue
            walk.append(nxt)
            yield from extend(walk)
            walk.pop()

    for v in iter_bits(family.vertices):
        yield from extend([v])


def check_condition3(family: SupportFamily) -> ConditionResult:
    """Every 4-edge walk from i1 has an edge {i1, iq} with q in {3, 4, 5}."""
    edges = set(family.edges)
    for w in four_edge_walks(family):
        i1 = w[0]
        if not any(w[q] != i1 and (1 << i1 | 1 << w[q]) in edges for q in (2, 3, 4)):
            return ConditionResult("3", False, {"walk": list(w)})
    return ConditionResult("3", True)


def _maximal_cliques(adj: dict[int, VertexSet], admissible=None) -> list[VertexSet]:
    """Maximal cliques by Bron-Kerbosch over bitmasks.

    With ``admissible`` (a hereditary predicate on vertex masks) the search
    only grows cliques that stay admissible and reports the maximal ones
    among those; pivoting is unsound under that filter, so it is only used
    in the unfiltered search.
    """
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if admissible is not None:
            p = _filter(r, p, admissible)
            x = _filter(r, x, admissible)
        if not p and not x:
            out.append(r)
            return
        if admissible is None:
            pivot = max(iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
            cand = p & ~adj[pivot]
        else:
            cand = p
        for v in iter_bits(cand):
            bit = 1 << v
            bk(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    everything = 0
    for v in adj:
        everything |= 1 << v
    bk(0, everything, 0)
    return out


def _filter(r: int, cand: int, admissible) -> int:
    keep = 0
    for v in iter_bits(cand):
        if admissible(r | 1 << v):
            keep |= 1 << v
    return keep


def simp(graph: Graph) -> SimplicialComplex:
    """Clique complex of ``graph``, given by its maximal cliques."""
    cliques = _maximal_cliques(graph.adjacency())
    if not cliques:
        return SimplicialComplex(graph.n, (0,), 0)
    return SimplicialComplex(graph.n, canonical(cliques), graph.vertices)


def red(family: SupportFamily, gamma: SimplicialComplex) -> SimplicialComplex:
    """Remove from ``gamma`` every face containing a big member of ``family``."""
    big = family.big
    pieces = []
    for f in gamma.facets:
        inside = [s for s in big if s & ~f == 0]
        if not inside:
            pieces.append(f)
            continue
        # largest subsets of f avoiding every big member inside it
        pieces.extend(f & ~t for t in minimal_transversals(inside))
    return SimplicialComplex(gamma.n, maximal(pieces), gamma.vertices)


def reconstruct(family: SupportFamily) -> SimplicialComplex:
    return red(family, simp(complement_graph(family)))


def clique_ranks(family: SupportFamily) -> dict[int, int]:
    """For each vertex, the largest clique of the graph through it that contains no big member."""
    big = family.big

    def admissible(m: int) -> bool:
        return not any(s & ~m == 0 for s in big)

    adj = complement_graph(family).adjacency()
    ranks = {v: 1 for v in adj}
    for c in _maximal_cliques(adj, admissible):
        k = c.bit_count()
        for v in iter_bits(c):
            if k > ranks[v]:
                ranks[v] = k
    return ranks


def check_condition4(family: SupportFamily) -> ConditionResult:
    ranks = clique_ranks(family)
    if len(set(ranks.values())) <= 1:
        return ConditionResult("4", True)
    return ConditionResult("4", False, {"r": {str(v): r for v, r in sorted(ranks.items())}})


def check_conditions(family: SupportFamily) -> list[ConditionResult]:
    return check_condition1(family) + [check_condition2(family), check_condition3(family),
                                       check_condition4(family)]


def classify_theorem(cx: SimplicialComplex) -> TheoremResult:
    """Decide gCI through the combinatorial conditions on the generators.

    Complete intersections are settled first (they are gCI); a complex with
    a cone point that is not CI is never gCI; otherwise all of conditions
    1-4 must hold.
    """
    family = minimal_nonfaces(cx)
    if is_complete_intersection(family):
        return TheoremResult(is_pure(cx), "ci")
    if core_vertices(cx) != cx.vertices:
        return TheoremResult(False, "cone")
    conds = check_conditions(family)
    return TheoremResult(all(c.holds for c in conds), "conditions", conds)


# --------------------------------------------------------------------------
# lemma conclusions, evaluated as predicates on a family
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaResult:
    name: str
    holds: bool
    witness: dict[str, Any] | None = None


def _lemma1(f: SupportFamily) -> LemmaResult:
    for s in f.members:
        if not any(t != s and t & s for t in f.members):
            return LemmaResult("lemma1", False, {"S": list(labels(s))})
    return LemmaResult("lemma1", True)


def _lemma2(f: SupportFamily) -> LemmaResult:
    for i in iter_bits(f.vertices):
        bit = 1 << i
        mins = set(localize(f, i).minimal)
        for s in f.members:
            if s & bit and (s & ~bit) not in mins:
                return LemmaResult("lemma2", False, {"S": list(labels(s)), "i": i, "part": 1})
        for s in f.members:
            for t in f.members:
                if s != t and (s & ~bit) & ~(t & ~bit) == 0 and not s & bit:
                    return LemmaResult("lemma2", False, {"S": list(labels(s)), "T": list(labels(t)),
                                                         "i": i, "part": 2})
    return LemmaResult("lemma2", True)


def _lemma3(f: SupportFamily) -> LemmaResult:
    for s, t in combinations(f.members, 2):
        if (s & t).bit_count() > 1:
            return LemmaResult("lemma3", False, {"S": list(labels(s)), "T": list(labels(t))})
    return LemmaResult("lemma3", True)


def _lemma4(f: SupportFamily) -> LemmaResult:
    for s in f.big:
        for t in f.members:
            if t != s and t & s and t.bit_count() != 2:
                return LemmaResult("lemma4", False, {"S": list(labels(s)), "T": list(labels(t))})
    return LemmaResult("lemma4", True)


def _lemma5(f: SupportFamily) -> LemmaResult:
    edges = set(f.edges)
    for s in f.big:
        for e in edges:
            if (e & s).bit_count() == 1:
                i = labels(e & ~s)[0]
                for k in iter_bits(s):
                    if (1 << i | 1 << k) not in edges:
                        return LemmaResult("lemma5", False, {"S": list(labels(s)), "edge": list(labels(e)),
                                                             "k": k})
    return LemmaResult("lemma5", True)


def _lemma6(f: SupportFamily) -> LemmaResult:
    edges = set(f.edges)
    for s in f.big:
        c = big_cover_set(f, s)
        for i in iter_bits(f.vertices & ~(c | s)):
            for k in iter_bits(c):
                if (1 << i | 1 << k) not in edges:
                    return LemmaResult("lemma6", False, {"S": list(labels(s)), "i": i, "k": k})
    return LemmaResult("lemma6", True)


def _lemma7(f: SupportFamily) -> LemmaResult:
    r = check_condition2(f)
    return LemmaResult("lemma7", r.holds, r.witness)


def _lemma8(f: SupportFamily) -> LemmaResult:
    r = check_condition3(f)
    return LemmaResult("lemma8", r.holds, r.witness)


LEMMAS = (_lemma1, _lemma2, _lemma3, _lemma4, _lemma5, _lemma6, _lemma7, _lemma8)


def lemma_suite(family: SupportFamily) -> dict[str, LemmaResult]:
    """Evaluate the conclusion of each structural lemma on ``family``.

    Requires the members to cover the vertex set.
    """
    if family.support != family.vertices:
        raise ComplexError(f"members do not cover the vertices; missing {labels(family.vertices & ~family.support)}")
    return {r.name: r for r in (lem(family) for lem in LEMMAS)}


def localization_conditions(family: SupportFamily) -> bool:
    """Disjoint minimal localized supports at every vertex, and some two members meet."""
    for i in iter_bits(family.vertices):
        mins = localize(family, i).minimal
        if any(a & b for a, b in combinations(mins, 2)):
            return False
    return any(a & b for a, b in combinations(family.members, 2))


def satisfies_basic_conditions(family: SupportFamily) -> bool:
    """Cover, size at least two, antichain."""
    if family.support != family.vertices:
        return False
    if any(m.bit_count() < 2 for m in family.members):
        return False
    return not any(a != b and a & ~b == 0 for a in family.members for b in family.members)

