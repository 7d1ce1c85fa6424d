"""Named example ideals E1-E9 and the six-vertex real projective plane.

Each example carries its generators, the facet list printed alongside it,
the variable sets of the printed prime components (when given), and the
Cohen-Macaulay status implied by the heading it was listed under.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .io import InputDocument


@dataclass(frozen=True)
class Fixture:
    name: str
    document: InputDocument
    description: str
    facets: tuple[tuple[int, ...], ...]
    primes: tuple[tuple[int, ...], ...] | None = None
    listed_cm: bool | None = None
    reference: bool = True  # False for the extra homology test case


def _gens(*pairs: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(c) for c in p) for p in pairs)


def bipartite_fixture(m: int = 2) -> Fixture:
    """(X_1..X_m) ∩ (X_{m+1}..X_{2m}): generators X_i X_j for i <= m < j."""
    left = range(1, m + 1)
    right = range(m + 1, 2 * m + 1)
    gens = tuple((i, j) for i, j in product(left, right))
    return Fixture(
        name="E5" if m == 2 else f"E5_m{m}",
        document=InputDocument(2 * m, generators=gens),
        description=f"intersection of two coordinate primes on {m}+{m} variables (bipartite edge ideal)",
        facets=(tuple(left), tuple(right)),
        primes=(tuple(left), tuple(right)),
        listed_cm=False,
    )


_E8_GENS = ((1, 2, 3),) + tuple((i, j) for i in (1, 2, 3) for j in (4, 5, 6)) + ((4, 7), (5, 7), (6, 7))
_E9_GENS = ((1, 2, 3, 4),) + tuple((i, j) for i in (1, 2, 3, 4) for j in (5, 6, 7))

_RP2_FACETS = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
               (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6))


def fixtures() -> dict[str, Fixture]:
    cat = [
        Fixture("E1", InputDocument(4, generators=_gens("13", "14", "23", "24")),
                "two disjoint edges",
                facets=_gens("12", "34"), primes=_gens("12", "34"), listed_cm=False),
        Fixture("E2", InputDocument(5, generators=_gens("12", "23", "13", "34", "45", "15")),
                "a path of length 4",
                facets=_gens("14", "42", "25", "53"),
                primes=_gens("235", "135", "134", "124"), listed_cm=False),
        Fixture("E3", InputDocument(5, generators=_gens("12", "23", "13", "34", "45", "15", "25")),
                "a path of length 2 and a disjoint edge",
                facets=_gens("14", "42", "53"),
                primes=_gens("235", "135", "124"), listed_cm=False),
        Fixture("E4", InputDocument(5, generators=_gens("12", "15", "23", "25", "34")),
                "an edge attached to a circle",
                facets=_gens("13", "35", "54", "41", "42"),
                primes=_gens("245", "235", "124", "123", "135"), listed_cm=False),
        bipartite_fixture(2),
        Fixture("E6", InputDocument(4, generators=_gens("12", "23", "34")),
                "a path of length 3",
                facets=_gens("13", "14", "42"), primes=_gens("24", "23", "13"), listed_cm=True),
        Fixture("E7", InputDocument(5, generators=_gens("12", "23", "34", "45", "51")),
                "a pentagon",
                facets=_gens("13", "35", "52", "24", "41"),
                primes=_gens("245", "124", "134", "135", "235"), listed_cm=True),
        Fixture("E8", InputDocument(7, generators=_E8_GENS),
                "three triangles coned over a point plus a disjoint triangle",
                facets=_gens("127", "137", "237", "456"), listed_cm=False),
        Fixture("E9", InputDocument(7, generators=_E9_GENS),
                "boundary of a tetrahedron plus a disjoint triangle",
                facets=_gens("123", "124", "134", "234", "567"), listed_cm=False),
        Fixture("RP2", InputDocument(6, facets=_RP2_FACETS),
                "six-vertex triangulation of the real projective plane (homology test case)",
                facets=_RP2_FACETS, reference=False),
    ]
    return {f.name: f for f in cat}


REFERENCE_FIXTURES = ("E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9")
