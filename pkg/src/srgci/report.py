"""Classification reports: every criterion and homological invariant for one complex."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from .combinatorics import check_conditions, classify_theorem
from .complex import SimplicialComplex, core_vertices, is_pure, labels, minimal_nonfaces
from .homology import QQ, FieldSpec, is_buchsbaum, is_cohen_macaulay, reduced_betti
from .ideal import RouteResult, gci_route_links, gci_route_local, is_complete_intersection

SCHEMA_VERSION = 1


class RouteDisagreement(RuntimeError):
    """The three gCI routes disagree; ``dump`` holds everything needed to replay it."""

    def __init__(self, dump: dict[str, Any]):
        super().__init__("gCI routes disagree: " + json.dumps(dump, sort_keys=True))
        self.dump = dump


@dataclass
class ClassificationReport:
    n: int
    facets: list[list[int]]
    minimal_nonfaces: list[list[int]]
    core_vertices: list[int]
    is_pure: bool
    is_ci: bool
    gci: bool
    gci_links: bool
    gci_local: bool
    gci_theorem: bool
    theorem_branch: str
    condition_results: list[dict[str, Any]]
    vertex_checks: dict[str, dict[str, Any]]
    cm_per_field: dict[str, dict[str, Any]]
    buchsbaum_per_field: dict[str, dict[str, Any]]
    betti_per_field: dict[str, list[int]]
    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"


def _vertex_checks(links: RouteResult, local: RouteResult) -> dict[str, dict[str, Any]]:
    out = {}
    for i in links.per_vertex:
        a, b = links.per_vertex[i], local.per_vertex[i]
        out[str(i)] = {
            "link_ci": a.holds,
            "link_witness": [list(labels(m)) for m in a.witness] if a.witness else None,
            "local_ci": b.holds,
            "local_witness": [list(labels(m)) for m in b.witness] if b.witness else None,
        }
    return out


def _cm_entry(res) -> dict[str, Any]:
    if res.holds:
        return {"holds": True, "witness": None}
    face, degree = res.witness
    return {"holds": False, "witness": {"face": list(labels(face)), "degree": degree}}


def classify(cx: SimplicialComplex, fields: Sequence[FieldSpec] = (QQ,)) -> ClassificationReport:
    """Full report for ``cx``; raises :class:`RouteDisagreement` if the gCI routes differ."""
    family = minimal_nonfaces(cx)
    links = gci_route_links(cx)
    local = gci_route_local(cx)
    theorem = classify_theorem(cx)
    if not links.holds == local.holds == theorem.holds:
        raise RouteDisagreement({
            "n": cx.n,
            "generators": [list(m) for m in family.member_sets()],
            "gci_links": links.holds,
            "gci_local": local.holds,
            "gci_theorem": theorem.holds,
            "theorem_branch": theorem.branch,
        })
    conditions = theorem.conditions or check_conditions(family)
    fields = list(dict.fromkeys(fields))
    return ClassificationReport(
        n=cx.n,
        facets=[list(f) for f in cx.facet_sets()],
        minimal_nonfaces=[list(m) for m in family.member_sets()],
        core_vertices=list(labels(core_vertices(cx))),
        is_pure=is_pure(cx),
        is_ci=is_complete_intersection(family),
        gci=links.holds,
        gci_links=links.holds,
        gci_local=local.holds,
        gci_theorem=theorem.holds,
        theorem_branch=theorem.branch,
        condition_results=[c.as_dict() for c in conditions],
        vertex_checks=_vertex_checks(links, local),
        cm_per_field={f.name: _cm_entry(is_cohen_macaulay(cx, f)) for f in fields},
        buchsbaum_per_field={f.name: _cm_entry(is_buchsbaum(cx, f)) for f in fields},
        betti_per_field={f.name: reduced_betti(cx, f) for f in fields},
    )
