"""Reduced simplicial homology, Reisner's criterion and the Buchsbaum test.

Orientation follows ascending vertex order: the boundary of ``[v_0..v_k]``
is ``sum (-1)^j [v_0..^v_j..v_k]``.  The augmented chain complex includes
the empty face in degree -1, so Betti numbers are reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .complex import ComplexError, SimplicialComplex, VertexSet, is_pure, iter_bits
from .linalg import rank_mod_p, rank_rational


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p != 0 and not (self.p < 2**31 and _is_prime(self.p)):
            raise ValueError(f"field characteristic must be a prime below 2^31, got {self.p}")

    @property
    def kind(self) -> str:
        return "rationals" if self.p == 0 else "prime-field"

    @property
    def name(self) -> str:
        return "q" if self.p == 0 else f"f{self.p}"

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("f") and t[1:].isdigit():
            return cls(int(t[1:]))
        if t.startswith("gf(") and t.endswith(")") and t[3:-1].isdigit():
            return cls(int(t[3:-1]))
        raise ValueError(f"unknown field {text!r}; use q, f2, f3, ...")

    def rank(self, matrix) -> int:
        return rank_rational(matrix) if self.p == 0 else rank_mod_p(matrix, self.p)


QQ = FieldSpec(0)
GF2 = FieldSpec(2)


class CMCheck(NamedTuple):
    holds: bool
    witness: tuple[VertexSet, int] | None = None  # (face, degree of nonvanishing homology)


def boundary_matrix(cx: SimplicialComplex, k: int, field: FieldSpec = QQ) -> list[list[int]]:
    """Matrix of the boundary map from k-faces (columns) to (k-1)-faces (rows).

    Entries are reduced modulo ``p`` for prime fields.
    """
    if not -1 <= k <= cx.dim:
        raise ComplexError(f"dimension {k} outside -1..{cx.dim}")
    cols = cx.faces(k)
    rows = cx.faces(k - 1) if k >= 0 else ()
    index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for j, v in enumerate(iter_bits(face)):
            sign = -1 if j % 2 else 1
            mat[index[face & ~(1 << v)]][c] = sign
    if field.p:
        mat = [[x % field.p for x in r] for r in mat]
    return mat


@lru_cache(maxsize=65536)
def _betti(cx: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    d = cx.dim
    counts = {k: len(cx.faces(k)) for k in range(-1, d + 1)}
    ranks = {k: field.rank(boundary_matrix(cx, k, field)) if counts[k] and counts.get(k - 1, 0) else 0
             for k in range(-1, d + 1)}
    ranks[d + 1] = 0
    return tuple(counts[k] - ranks[k] - ranks[k + 1] for k in range(-1, d + 1))


def reduced_betti(cx: SimplicialComplex, field: FieldSpec = QQ) -> list[int]:
    """Reduced Betti numbers ``[b_-1, b_0, ..., b_dim]`` over ``field``."""
    return list(_betti(cx, field))


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating face count, empty face included."""
    return sum((-1) ** k * c for k, c in enumerate(cx.f_vector(), start=-1))


def _all_faces(cx: SimplicialComplex) -> list[VertexSet]:
    out = []
    for k in range(-1, cx.dim + 1):
        out.extend(cx.faces(k))
    return out


def _top_vanishing(lk: SimplicialComplex, field: FieldSpec) -> int | None:
    """First degree below the top where the link has homology, else None."""
    b = _betti(lk, field)
    for k in range(-1, lk.dim):
        if b[k + 1]:
            return k
    return None


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> CMCheck:
    """Reisner's criterion: every face link has homology only in top degree."""
    for face in _all_faces(cx):
        bad = _top_vanishing(cx.link_of(face), field)
        if bad is not None:
            return CMCheck(False, (face, bad))
    return CMCheck(True)


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec = QQ) -> CMCheck:
    """Pure, and the link of every nonempty face is Cohen-Macaulay.

    The witness is the nonempty face whose link fails, with the degree
    reported by the CM check of that link; a non-pure complex has witness
    ``(0, -2)``.
    """
    if not is_pure(cx):
        return CMCheck(False, (0, -2))
    for face in _all_faces(cx):
        if face == 0:
            continue
        res = is_cohen_macaulay(cx.link_of(face), field)
        if not res.holds:
            return CMCheck(False, (face, res.witness[1]))
    return CMCheck(True)
