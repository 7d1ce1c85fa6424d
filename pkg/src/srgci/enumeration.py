"""Instance generation and cross-validation of the gCI criteria.

Complexes on ``[n]`` containing every vertex are in bijection with
antichains of subsets of size >= 2 (their minimal nonfaces), so the
instance space is enumerated as antichains.  The search tree walks a fixed
ordering of candidate subsets; a prefix of include/exclude decisions names
a partition, and partitions are disjoint, so they can be checked by
independent workers and merged in partition order.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Iterator, Sequence

from .combinatorics import (
    check_condition1,
    check_condition2,
    check_condition3,
    check_condition4,
    classify_theorem,
    lemma_suite,
    localization_conditions,
    reconstruct,
    satisfies_basic_conditions,
)
from .complex import SupportFamily, canonical, from_nonfaces, full_mask, is_pure, labels, minimal
from .homology import GF2, QQ, is_buchsbaum
from .ideal import gci_route_links, gci_route_local, is_complete_intersection

MAX_EXHAUSTIVE_N = 6
MAX_SAMPLED_N = 12

CHECK_GROUPS = {
    "routes": ("route_agreement", "ci_implies_gci"),
    "buchsbaum": ("gci_implies_buchsbaum",),
    "reconstruct": ("reconstruction",),
    "converse": ("converse",),
    "purity": ("conditional_purity",),
}
ALL_CHECKS = tuple(c for group in CHECK_GROUPS.values() for c in group)


def resolve_checks(selection: str | Iterable[str]) -> tuple[str, ...]:
    """Expand ``"all"`` or group names into individual check ids, in canonical order."""
    names = [selection] if isinstance(selection, str) else list(selection)
    picked: set[str] = set()
    for name in names:
        for part in name.split(","):
            part = part.strip()
            if part == "all":
                picked.update(ALL_CHECKS)
            elif part in CHECK_GROUPS:
                picked.update(CHECK_GROUPS[part])
            elif part in ALL_CHECKS:
                picked.add(part)
            else:
                raise ValueError(f"unknown check {part!r}")
    return tuple(c for c in ALL_CHECKS if c in picked)


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    mode: str = "exhaustive"  # or "sampled"
    sample_count: int = 0
    seed: int | None = None
    checks: tuple[str, ...] = ALL_CHECKS

    def __post_init__(self) -> None:
        if self.mode == "exhaustive":
            if not 1 <= self.n <= MAX_EXHAUSTIVE_N:
                raise ValueError(f"exhaustive mode supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {self.n}")
        elif self.mode == "sampled":
            if self.seed is None:
                raise ValueError("sampled mode requires a seed")
            if not 1 <= self.n <= MAX_SAMPLED_N:
                raise ValueError(f"sampled mode supports 1 <= n <= {MAX_SAMPLED_N}, got {self.n}")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class MismatchRecord:
    family: SupportFamily
    check_id: str
    left: Any
    right: Any
    witnesses: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.family.n,
            "generators": [list(m) for m in self.family.member_sets()],
            "check": self.check_id,
            "left": self.left,
            "right": self.right,
            "witnesses": self.witnesses,
        }


@dataclass
class ValidationSummary:
    instances: int = 0
    gci_positive: int = 0
    tallies: dict[str, Counter] = field(default_factory=dict)
    mismatches: list[MismatchRecord] = field(default_factory=list)

    def merge(self, other: ValidationSummary) -> None:
        self.instances += other.instances
        self.gci_positive += other.gci_positive
        for k, c in other.tallies.items():
            self.tallies.setdefault(k, Counter()).update(c)
        self.mismatches.extend(other.mismatches)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict[str, Any]:
        return {
            "instances": self.instances,
            "gci_positive": self.gci_positive,
            "checks": {k: dict(sorted(v.items())) for k, v in sorted(self.tallies.items())},
            "mismatch_count": len(self.mismatches),
            "zero_mismatches": self.ok,
        }


# --------------------------------------------------------------------------
# generation
# --------------------------------------------------------------------------

def candidate_subsets(n: int) -> list[int]:
    """All subsets of [n] with at least two vertices: by size, then lexicographically."""
    out = []
    for k in range(2, n + 1):
        out.extend(sum(1 << v for v in c) for c in combinations(range(1, n + 1), k))
    return out


def _compat_masks(cands: Sequence[int]) -> list[int]:
    comp = []
    for a in cands:
        m = 0
        for j, b in enumerate(cands):
            if a & ~b and b & ~a:
                m |= 1 << j
        comp.append(m)
    return comp


def _antichains(cands: Sequence[int], comp: Sequence[int], chosen: list[int],
                allowed: int, start: int) -> Iterator[tuple[int, ...]]:
    yield tuple(chosen)
    rest = allowed >> start << start
    while rest:
        low = rest & -rest
        j = low.bit_length() - 1
        chosen.append(cands[j])
        yield from _antichains(cands, comp, chosen, allowed & comp[j], j + 1)
        chosen.pop()
        rest ^= low


def partitions(n: int, depth: int) -> list[tuple[tuple[int, ...], int, int]]:
    """Split the search tree by include/exclude decisions on the first ``depth`` candidates.

    Each partition is ``(chosen, allowed, start)``; consistent prefixes only.
    """
    cands = candidate_subsets(n)
    comp = _compat_masks(cands)
    depth = min(depth, len(cands))
    everything = (1 << len(cands)) - 1
    out = []

    def rec(j: int, chosen: tuple[int, ...], allowed: int, excluded: int) -> None:
        if j == depth:
            out.append((chosen, allowed & ~excluded, j))
            return
        if allowed >> j & 1:
            rec(j + 1, chosen + (cands[j],), allowed & comp[j], excluded)
        rec(j + 1, chosen, allowed, excluded | 1 << j)

    rec(0, (), everything, 0)
    return out


def _partition_stream(n: int, part: tuple[tuple[int, ...], int, int]) -> Iterator[SupportFamily]:
    cands = candidate_subsets(n)
    comp = _compat_masks(cands)
    chosen, allowed, start = part
    for ac in _antichains(cands, comp, list(chosen), allowed, start):
        yield SupportFamily(n, canonical(ac))


def enumerate_complexes(n: int) -> Iterator[SupportFamily]:
    """Every antichain of subsets of size >= 2 of [n], once each, in a fixed order."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}, got {n}")
    cands = candidate_subsets(n)
    comp = _compat_masks(cands)
    for ac in _antichains(cands, comp, [], (1 << len(cands)) - 1, 0):
        yield SupportFamily(n, canonical(ac))


def sample_complexes(task: EnumerationTask) -> Iterator[SupportFamily]:
    """Seeded random families: random subsets of size >= 2, reduced to their minimal members."""
    if task.mode != "sampled" or task.seed is None:
        raise ValueError("sample_complexes needs a sampled task with a seed")
    n = task.n
    rng = random.Random(task.seed)
    verts = list(range(1, n + 1))
    for _ in range(task.sample_count):
        if n < 2:
            yield SupportFamily(n, ())
            continue
        picks = []
        for _ in range(rng.randint(0, 2 * n)):
            k = rng.randint(2, n)
            picks.append(sum(1 << v for v in rng.sample(verts, k)))
        yield SupportFamily(n, minimal(picks))


def task_stream(task: EnumerationTask) -> Iterator[SupportFamily]:
    if task.mode == "exhaustive":
        return enumerate_complexes(task.n)
    return sample_complexes(task)


# --------------------------------------------------------------------------
# cross-validation
# --------------------------------------------------------------------------

def _fam_labels(ms) -> list[list[int]]:
    return [list(labels(m)) for m in ms]


def check_family(family: SupportFamily, checks: Iterable[str]) -> ValidationSummary:
    """Run the selected checks on one family; tallies count evaluations and outcomes."""
    checks = tuple(checks)
    out = ValidationSummary(instances=1)
    cx = from_nonfaces(family)
    need_routes = bool({"route_agreement", "ci_implies_gci", "gci_implies_buchsbaum"} & set(checks))
    links = local = theorem = None
    if need_routes:
        links = gci_route_links(cx)
        local = gci_route_local(cx)
        theorem = classify_theorem(cx)
        gci = links.holds and local.holds and theorem.holds
        if gci:
            out.gci_positive = 1

    def tally(check: str, outcome: str) -> None:
        out.tallies.setdefault(check, Counter())[outcome] += 1

    def mismatch(check: str, left, right, **witnesses) -> None:
        tally(check, "mismatch")
        out.mismatches.append(MismatchRecord(family, check, left, right, witnesses))

    if "route_agreement" in checks:
        vals = (links.holds, local.holds, theorem.holds)
        if len(set(vals)) == 1:
            tally("route_agreement", "gci" if vals[0] else "not_gci")
        else:
            mismatch("route_agreement", {"links": vals[0], "local": vals[1]}, {"theorem": vals[2]},
                     links=_route_witness(links), local=_route_witness(local),
                     theorem=[c.as_dict() for c in theorem.conditions], branch=theorem.branch)

    if "ci_implies_gci" in checks:
        ci = is_complete_intersection(family)
        if not ci:
            tally("ci_implies_gci", "not_ci")
        elif links.holds and local.holds and theorem.holds and is_pure(cx):
            tally("ci_implies_gci", "ci_and_gci")
        else:
            mismatch("ci_implies_gci", {"ci": True, "pure": is_pure(cx)},
                     {"links": links.holds, "local": local.holds, "theorem": theorem.holds})

    if "gci_implies_buchsbaum" in checks:
        if not (links.holds or local.holds or theorem.holds):
            tally("gci_implies_buchsbaum", "not_gci")
        else:
            for fld in (QQ, GF2):
                res = is_buchsbaum(cx, fld)
                if res.holds:
                    tally("gci_implies_buchsbaum", f"buchsbaum_{fld.name}")
                else:
                    face, deg = res.witness
                    mismatch("gci_implies_buchsbaum", {"gci": True}, {f"buchsbaum_{fld.name}": False},
                             face=list(labels(face)), degree=deg)

    if "reconstruction" in checks:
        rebuilt = reconstruct(family)
        if rebuilt == cx:
            tally("reconstruction", "equal")
        else:
            mismatch("reconstruction", cx.facet_sets(), rebuilt.facet_sets())

    if "converse" in checks:
        if not satisfies_basic_conditions(family):
            tally("converse", "out_of_scope")
        else:
            left = localization_conditions(family)
            lemmas = lemma_suite(family)
            right = all(r.holds for r in lemmas.values())
            if left == right:
                tally("converse", "both_hold" if left else "both_fail")
            else:
                mismatch("converse", {"localization": left}, {"lemmas": right},
                         lemmas={k: {"holds": v.holds, "witness": v.witness} for k, v in lemmas.items()})

    if "conditional_purity" in checks:
        first = check_condition1(family) + [check_condition2(family), check_condition3(family)]
        if not all(c.holds for c in first):
            tally("conditional_purity", "out_of_scope")
        else:
            c4 = check_condition4(family)
            pure = is_pure(cx)
            if c4.holds == pure:
                tally("conditional_purity", "pure" if pure else "impure")
            else:
                mismatch("conditional_purity", {"condition4": c4.holds}, {"pure": pure},
                         ranks=c4.witness, facets=cx.facet_sets())
    return out


def _route_witness(route) -> dict[str, Any]:
    return {
        "pure": route.pure,
        "failing": {str(i): _fam_labels(route.per_vertex[i].witness) for i in route.failing_vertices()},
    }


def replay(record: MismatchRecord) -> ValidationSummary:
    """Re-run the check named in a mismatch record on its stored family."""
    return check_family(record.family, (record.check_id,))


def cross_validate(stream: Iterable[SupportFamily], checks: str | Iterable[str] = "all") -> ValidationSummary:
    checks = resolve_checks(checks)
    summary = ValidationSummary()
    for fam in stream:
        summary.merge(check_family(fam, checks))
    return summary


def _run_partition(args) -> ValidationSummary:
    n, part, checks = args
    return cross_validate(_partition_stream(n, part), checks)


def run_task(task: EnumerationTask, workers: int = 1, split_depth: int = 4) -> ValidationSummary:
    """Run a task; exhaustive tasks may be spread over worker processes."""
    checks = resolve_checks(task.checks)
    if task.mode == "sampled" or workers <= 1:
        return cross_validate(task_stream(task), checks)
    parts = partitions(task.n, split_depth)
    summary = ValidationSummary()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for piece in pool.map(_run_partition, [(task.n, p, checks) for p in parts]):
            summary.merge(piece)
    return summary
