"""Graph conditions, Simp/Red and the theorem-route classifier.

Witnesses are re-checked with small helpers below that read the family as
plain frozensets, and clique ranks and reconstruction are compared against
exhaustive subset scans.
"""

from itertools import combinations

import pytest
from conftest import as_sets, brute_faces, complexes, powerset
from hypothesis import given, settings

from srgci.complex import ComplexError, from_facets, from_nonfaces, labels, mask_of, minimal_nonfaces, simplex, support_family
from srgci.combinatorics import (
    big_cover_set,
    check_condition1,
    check_condition2,
    check_condition3,
    check_condition4,
    check_conditions,
    clique_ranks,
    classify_theorem,
    complement_graph,
    four_edge_walks,
    lemma_suite,
    localization_conditions,
    reconstruct,
    red,
    simp,
)
from srgci.enumeration import enumerate_complexes
from srgci.ideal import gci_route_local


def fam(n, *members):
    return support_family(n, [set(int(c) for c in m) for m in members])


E1 = fam(4, "13", "14", "23", "24")
E2 = fam(5, "12", "23", "13", "34", "45", "15")
E4 = fam(5, "12", "15", "23", "25", "34")
E7 = fam(5, "12", "23", "34", "45", "51")
E8 = support_family(7, [{1, 2, 3}] + [{i, j} for i in (1, 2, 3) for j in (4, 5, 6)] + [{4, 7}, {5, 7}, {6, 7}])
E9 = support_family(7, [{1, 2, 3, 4}] + [{i, j} for i in (1, 2, 3, 4) for j in (5, 6, 7)])
HEXAGON = fam(6, "12", "23", "34", "45", "56", "16")


def members(f):
    return {frozenset(m) for m in f.member_sets()}


def edge_set(f):
    return {m for m in members(f) if len(m) == 2}


def by_id(results):
    return {r.condition_id: r for r in results}


# independent re-checkers for witnesses ---------------------------------------

def walk_is_chordless(f, walk):
    e = edge_set(f)
    steps = list(zip(walk, walk[1:]))
    assert all(frozenset(s) in e for s in steps)
    assert all(frozenset(a) != frozenset(b) for a, b in zip(steps, steps[1:]))
    i1 = walk[0]
    return not any(walk[q] != i1 and frozenset({i1, walk[q]}) in e for q in (2, 3, 4))


def in_different_components(f, i, j):
    e = edge_set(f)
    reach, frontier = {i}, {i}
    while frontier:
        frontier = {v for x in frontier for ed in e if x in ed for v in ed} - reach
        reach |= frontier
    return j not in reach


def brute_ranks(f):
    verts = range(1, f.n + 1)
    e = edge_set(f)
    big = [m for m in members(f) if len(m) >= 3]
    ranks = {}
    for v in verts:
        best = 1
        for c in powerset(verts):
            if v in c and all(frozenset(p) not in e for p in combinations(c, 2)) and not any(s <= c for s in big):
                best = max(best, len(c))
        ranks[v] = best
    return ranks


def brute_reconstruct(f):
    e = edge_set(f)
    big = [m for m in members(f) if len(m) >= 3]
    return {c for c in powerset(range(1, f.n + 1))
            if all(frozenset(p) not in e for p in combinations(c, 2)) and not any(s <= c for s in big)}


# -----------------------------------------------------------------------------

class TestComplementGraph:
    @pytest.mark.parametrize("f, want", [
        (E7, ["13", "14", "24", "25", "35"]),
        (E4, ["13", "14", "24", "35", "45"]),
        (support_family(3, []), ["12", "13", "23"]),
    ])
    def test_examples(self, f, want):
        assert complement_graph(f).edges == {(int(a), int(b)) for a, b in want}

    def test_is_skeleton(self):
        cx = from_nonfaces(E4)
        assert as_sets(complement_graph(E4).edges) == as_sets(labels(x) for x in cx.faces(1))


class TestBigCoverSet:
    def test_examples(self):
        assert labels(big_cover_set(E8, mask_of({1, 2, 3}))) == (4, 5, 6)
        assert labels(big_cover_set(E9, mask_of({1, 2, 3, 4}))) == (5, 6, 7)
        assert big_cover_set(fam(5, "123", "45"), mask_of({1, 2, 3})) == 0

    def test_errors(self):
        with pytest.raises(ComplexError):
            big_cover_set(E8, mask_of({1, 2, 4}))
        with pytest.raises(ComplexError):
            big_cover_set(E8, mask_of({4, 7}))

    def test_matches_definition(self):
        for f in (E8, E9):
            for s in f.big:
                want = {i for i in range(1, f.n + 1) for j in labels(s) if frozenset({i, j}) in edge_set(f)}
                assert set(labels(big_cover_set(f, s))) == want


class TestCondition1:
    def test_e8_holds(self):
        assert all(r.holds for r in check_condition1(E8))

    def test_empty_cover(self):
        r = by_id(check_condition1(fam(5, "123", "45")))
        assert not r["1a"].holds and r["1a"].witness["S"] == [1, 2, 3]

    def test_missing_edge(self):
        r = by_id(check_condition1(fam(4, "123", "14", "24")))
        assert r["1a"].holds
        w = r["1b"].witness
        assert (w["S"], w["i"], w["j"]) == ([1, 2, 3], 4, 3)

    def test_vacuous(self):
        assert all(r.holds for r in check_condition1(E7))


class TestCondition2:
    def test_examples(self, catalog):
        bip = catalog["E5"].document
        assert check_condition2(support_family(bip.n, bip.generators)).holds
        assert check_condition2(E2).holds
        r = check_condition2(fam(4, "12", "34"))
        assert not r.holds and r.witness == {"pair": [1, 3]}

    @given(complexes(max_n=6))
    @settings(max_examples=120)
    def test_witness_recheck(self, cx):
        f = minimal_nonfaces(cx)
        r = check_condition2(f)
        if r.holds:
            assert all(not in_different_components(f, i, j) for i, j in combinations(labels(f.vertices), 2))
        else:
            assert in_different_components(f, *r.witness["pair"])


class TestCondition3:
    def test_pentagon(self):
        assert (1, 2, 3, 4, 5) in set(four_edge_walks(E7))
        assert check_condition3(E7).holds

    def test_e2(self):
        assert (2, 1, 5, 4, 3) in set(four_edge_walks(E2))
        assert check_condition3(E2).holds

    def test_hexagon(self):
        r = check_condition3(HEXAGON)
        assert not r.holds and r.witness == {"walk": [1, 2, 3, 4, 5]}

    def test_e4_fails(self):
        r = check_condition3(E4)
        assert not r.holds and walk_is_chordless(E4, r.witness["walk"])

    @given(complexes(max_n=6))
    @settings(max_examples=120)
    def test_witness_recheck(self, cx):
        f = minimal_nonfaces(cx)
        r = check_condition3(f)
        if r.holds:
            assert r.witness is None
            for w in four_edge_walks(f):
                assert not walk_is_chordless(f, w)
        else:
            assert walk_is_chordless(f, r.witness["walk"])


class TestCondition4:
    def test_examples(self):
        assert clique_ranks(E7) == {v: 2 for v in range(1, 6)}
        assert check_condition4(E7).holds
        assert clique_ranks(E9) == {v: 3 for v in range(1, 8)}
        assert check_condition4(E9).holds
        impure = minimal_nonfaces(from_facets(4, [{1, 2, 3}, {3, 4}]))
        r = check_condition4(impure)
        assert not r.holds and r.witness["r"] == {"1": 3, "2": 3, "3": 3, "4": 2}

    @given(complexes(max_n=6))
    @settings(max_examples=80)
    def test_ranks_match_brute_force(self, cx):
        f = minimal_nonfaces(cx)
        assert clique_ranks(f) == brute_ranks(f)


class TestSimpRed:
    def test_simp(self):
        assert simp(complement_graph(support_family(3, []))).facet_sets() == [(1, 2, 3)]
        pentagon = complement_graph(E7)
        assert as_sets(simp(pentagon).facet_sets()) == as_sets(pentagon.edges)
        cliques = as_sets(simp(complement_graph(E8)).facet_sets())
        assert {frozenset({1, 2, 3, 7}), frozenset({4, 5, 6})} <= cliques

    def test_red(self, catalog):
        assert as_sets(red(E8, simp(complement_graph(E8))).facet_sets()) == as_sets(catalog["E8"].facets)
        assert as_sets(red(E9, simp(complement_graph(E9))).facet_sets()) == as_sets(catalog["E9"].facets)
        gamma = simplex(3)
        assert red(support_family(3, []), gamma) == gamma

    def test_reconstruct(self, catalog):
        assert as_sets(reconstruct(E1).facet_sets()) == as_sets([{1, 2}, {3, 4}])
        assert reconstruct(support_family(2, [])).facet_sets() == [(1, 2)]
        e3 = catalog["E3"].document
        assert as_sets(reconstruct(support_family(5, e3.generators)).facet_sets()) == as_sets(catalog["E3"].facets)

    @given(complexes(max_n=7))
    @settings(max_examples=150)
    def test_reconstruct_law(self, cx):
        f = minimal_nonfaces(cx)
        r = reconstruct(f)
        assert r == from_nonfaces(f) == cx
        assert brute_faces(r) == brute_reconstruct(f)

    def test_reconstruct_without_cover(self):
        # families that leave some vertex uncovered (cone points) reconstruct too
        f = fam(4, "12")
        assert reconstruct(f) == from_nonfaces(f)


class TestClassifyTheorem:
    def test_e1(self):
        t = classify_theorem(from_nonfaces(E1))
        assert t.holds and t.branch == "conditions" and all(c.holds for c in t.conditions)

    def test_hexagon(self):
        t = classify_theorem(from_nonfaces(HEXAGON))
        assert not t.holds
        assert [c.condition_id for c in t.conditions if not c.holds] == ["3"]

    def test_cone(self, catalog):
        cone = from_facets(6, [set(f) | {6} for f in catalog["E2"].facets])
        assert members(minimal_nonfaces(cone)) == members(E2)
        t = classify_theorem(cone)
        assert not t.holds and t.branch == "cone"

    def test_ci_branch(self):
        assert classify_theorem(simplex(3)).branch == "ci"
        square = classify_theorem(from_nonfaces(fam(4, "12", "34")))
        assert square.holds and square.branch == "ci"

    def test_agrees_with_local_route_up_to_four(self):
        for n in range(1, 5):
            for f in enumerate_complexes(n):
                cx = from_nonfaces(f)
                assert classify_theorem(cx).holds == gci_route_local(cx).holds

    def test_conditions_order(self):
        assert [c.condition_id for c in check_conditions(E7)] == ["1a", "1b", "1c", "2", "3", "4"]


class TestLemmaSuite:
    def test_e1(self):
        assert all(r.holds for r in lemma_suite(E1).values())

    def test_isolated_member(self):
        r = lemma_suite(fam(4, "12", "34"))
        assert not r["lemma1"].holds and r["lemma1"].witness == {"S": [1, 2]}

    def test_agrees_with_localization(self):
        f = fam(4, "123", "14", "24", "34")
        assert all(r.holds for r in lemma_suite(f).values()) == localization_conditions(f)

    def test_requires_cover(self):
        with pytest.raises(ComplexError, match="cover"):
            lemma_suite(fam(4, "12", "23"))
