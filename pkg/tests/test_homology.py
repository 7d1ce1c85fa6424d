"""Exact ranks, Betti numbers, Reisner and Buchsbaum checks.

sympy supplies the independent rank oracle; it is never used by the
package itself.
"""

import random

import pytest
import sympy
from conftest import complexes
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from srgci.complex import ComplexError, from_facets, from_nonfaces, iter_bits, support_family
from srgci.fixtures import fixtures
from srgci.homology import (
    GF2,
    QQ,
    FieldSpec,
    boundary_matrix,
    is_buchsbaum,
    is_cohen_macaulay,
    reduced_betti,
    reduced_euler_characteristic,
)
from srgci.linalg import rank_mod_p, rank_rational

HOLLOW = from_facets(3, [{1, 2}, {2, 3}, {1, 3}])
RP2 = fixtures()["RP2"].document.complex()

int_matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(int_matrices)
@settings(max_examples=300)
def test_rank_rational_matches_sympy(m):
    assert rank_rational(m) == sympy.Matrix(m).rank()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@given(m=int_matrices)
@settings(max_examples=100)
def test_rank_mod_p_matches_domain_matrix(p, m):
    dm = DomainMatrix.from_list([[x % p for x in row] for row in m], GF(p))
    assert rank_mod_p(m, p) == dm.rank()


def test_rank_degenerate():
    assert rank_rational([]) == 0
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_mod_p([[2, 4], [1, 2]], 2) == 1


class TestFieldSpec:
    def test_parse(self):
        assert FieldSpec.parse("q") == QQ
        assert FieldSpec.parse("f2") == GF2
        assert FieldSpec.parse("GF(7)").p == 7

    @pytest.mark.parametrize("bad", ["f4", "f1", "z", "f" + str(2**31 + 11)])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


class TestBoundary:
    def test_single_edge(self):
        edge = from_facets(2, [{1, 2}])
        assert boundary_matrix(edge, 1) == [[-1], [1]]

    def test_augmentation(self):
        assert boundary_matrix(HOLLOW, 0) == [[1, 1, 1]]
        assert boundary_matrix(HOLLOW, -1) == []

    def test_hollow_triangle_rank(self):
        assert sympy.Matrix(boundary_matrix(HOLLOW, 1)).rank() == 2

    def test_out_of_range(self):
        with pytest.raises(ComplexError):
            boundary_matrix(HOLLOW, 2)

    @given(complexes(max_n=7))
    @settings(max_examples=100)
    def test_boundary_squares_to_zero(self, cx):
        for k in range(0, cx.dim + 1):
            a = sympy.Matrix(boundary_matrix(cx, k)) if k >= 1 else None
            b = boundary_matrix(cx, k + 1) if k + 1 <= cx.dim else None
            if a is not None and b:
                assert (a * sympy.Matrix(b)).is_zero_matrix


class TestBetti:
    def test_hollow_triangle(self):
        assert reduced_betti(HOLLOW, QQ) == [0, 0, 1]

    def test_e8_disconnected(self, catalog):
        cx = catalog["E8"].document.complex()
        for f in (QQ, GF2, FieldSpec(3)):
            assert reduced_betti(cx, f)[1] == 1

    def test_rp2(self):
        assert reduced_betti(RP2, QQ) == [0, 0, 0, 0]
        assert reduced_betti(RP2, GF2) == [0, 0, 1, 1]
        assert reduced_betti(RP2, FieldSpec(3)) == [0, 0, 0, 0]

    def test_empty_face_complex(self):
        # the link of a facet is {∅}, whose only reduced homology sits in degree -1
        assert reduced_betti(HOLLOW.link_of(HOLLOW.facets[0])) == [1]

    @given(complexes(max_n=7), st.sampled_from([QQ, GF2, FieldSpec(3)]))
    @settings(max_examples=120)
    def test_euler_characteristic(self, cx, field):
        b = reduced_betti(cx, field)
        assert sum((-1) ** k * x for k, x in enumerate(b, start=-1)) == reduced_euler_characteristic(cx)

    def test_orientation_independent(self):
        # relabelling vertices changes the orientation but not the Betti numbers
        rng = random.Random(3)
        for cx in (RP2, HOLLOW, fixtures()["E9"].document.complex()):
            perm = list(range(1, cx.n + 1))
            rng.shuffle(perm)
            relabelled = from_facets(cx.n, [{perm[v - 1] for v in f} for f in cx.facet_sets()])
            for f in (QQ, GF2):
                assert reduced_betti(relabelled, f) == reduced_betti(cx, f)


class TestReisner:
    def test_path_of_length_three_is_cm(self):
        assert is_cohen_macaulay(from_facets(4, [{1, 3}, {1, 4}, {4, 2}])).holds

    def test_two_edges_not_cm(self):
        res = is_cohen_macaulay(from_facets(4, [{1, 2}, {3, 4}]))
        assert not res.holds and res.witness == (0, 0)

    def test_rp2_field_dependence(self):
        assert is_cohen_macaulay(RP2, QQ).holds
        res = is_cohen_macaulay(RP2, GF2)
        assert not res.holds and res.witness == (0, 1)

    def test_buchsbaum(self, catalog):
        assert is_buchsbaum(from_facets(4, [{1, 2}, {3, 4}])).holds
        assert not is_buchsbaum(from_facets(4, [{1, 2, 3}, {3, 4}])).holds
        assert is_buchsbaum(catalog["E8"].document.complex()).holds
        assert is_buchsbaum(RP2, GF2).holds

    def test_non_buchsbaum_pure(self):
        # two triangles glued at a vertex: the vertex link is two disjoint edges
        bowtie = from_facets(5, [{1, 2, 3}, {3, 4, 5}])
        res = is_buchsbaum(bowtie)
        assert not res.holds
        assert list(iter_bits(res.witness[0])) == [3]

    @given(complexes(max_n=6))
    @settings(max_examples=100)
    def test_cm_implies_buchsbaum_implies_pure(self, cx):
        for f in (QQ, GF2):
            if is_cohen_macaulay(cx, f).holds:
                assert is_buchsbaum(cx, f).holds
            if is_buchsbaum(cx, f).holds:
                assert len({x.bit_count() for x in cx.facets}) == 1

    def test_simplex_boundary_is_cm(self):
        sphere = from_nonfaces(support_family(4, [{1, 2, 3, 4}]))
        assert is_cohen_macaulay(sphere, QQ).holds and is_cohen_macaulay(sphere, GF2).holds
