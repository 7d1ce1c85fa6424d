"""Shared brute-force oracles and strategies.

The oracles only use the definition "a face is a subset of some facet" and
plain frozensets, so they share no code path with the bitmask routines.
"""

from __future__ import annotations

from itertools import chain, combinations

import pytest
from hypothesis import strategies as st

from srgci.complex import from_facets


def powerset(items):
    items = sorted(items)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))]


def brute_faces(cx) -> set[frozenset]:
    facets = [frozenset(f) for f in cx.facet_sets()]
    return {s for s in powerset(cx.vertex_labels()) if any(s <= f for f in facets)}


def brute_min_nonfaces(cx) -> set[frozenset]:
    faces = brute_faces(cx)
    non = [s for s in powerset(cx.vertex_labels()) if s not in faces]
    return {s for s in non if not any(t < s for t in non)}


def brute_facets(faces) -> set[frozenset]:
    return {f for f in faces if not any(f < g for g in faces)}


def as_sets(items) -> set[frozenset]:
    return {frozenset(x) for x in items}


@st.composite
def complexes(draw, max_n: int = 6):
    n = draw(st.integers(1, max_n))
    faces = draw(st.lists(st.sets(st.integers(1, n), min_size=1), max_size=8))
    return from_facets(n, faces, add_missing_vertices=True)


@pytest.fixture(scope="session")
def catalog():
    from srgci.fixtures import fixtures
    return fixtures()
