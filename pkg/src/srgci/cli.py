"""Command-line entry point: ``srgci classify|enumerate|homology|fixtures``.

Exit codes: 0 for any completed run (a "not gCI" verdict is a result, not a
failure), 1 for unreadable input or bad flags, 2 when the gCI routes
disagree, 3 when ``enumerate --fail-on-mismatch`` finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from datetime import datetime, timezone
from pathlib import Path

from .complex import ComplexError
from .enumeration import EnumerationTask, resolve_checks, run_task
from .fixtures import fixtures
from .homology import QQ, FieldSpec, is_buchsbaum, is_cohen_macaulay, reduced_betti, reduced_euler_characteristic
from .io import InputDocument, ParseError, format_document, parse_input
from .report import RouteDisagreement, classify

EXIT_INPUT = 1
EXIT_DISAGREEMENT = 2
EXIT_MISMATCH = 3


def _read_doc(path: str) -> InputDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_input(text)


def _fields(doc: InputDocument, flags: list[str] | None) -> list[FieldSpec]:
    specs = [FieldSpec.parse(f) for f in flags] if flags else doc.field_specs()
    return specs or [QQ]


def cmd_classify(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    try:
        report = classify(doc.complex(), _fields(doc, args.field))
    except RouteDisagreement as e:
        sys.stderr.write(json.dumps({"error": "route disagreement", "dump": e.dump}, indent=2) + "\n")
        return EXIT_DISAGREEMENT
    sys.stdout.write(report.to_json())
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    doc = _read_doc(args.input)
    cx = doc.complex()
    out = {"f_vector": cx.f_vector(), "reduced_euler_characteristic": reduced_euler_characteristic(cx),
           "fields": {}}
    for f in _fields(doc, args.field):
        out["fields"][f.name] = {
            "betti": reduced_betti(cx, f),
            "cohen_macaulay": is_cohen_macaulay(cx, f).holds,
            "buchsbaum": is_buchsbaum(cx, f).holds,
        }
    sys.stdout.write(json.dumps(out, sort_keys=True, indent=2) + "\n")
    return 0


def enumeration_summary(task: EnumerationTask, workers: int = 1):
    """Summary document for a task, plus the raw summary (for mismatch dumps)."""
    start = time.perf_counter()
    summary = run_task(task, workers=workers)
    elapsed = time.perf_counter() - start
    doc = {
        "task": {"n": task.n, "mode": task.mode, "sample_count": task.sample_count, "seed": task.seed,
                 "checks": list(task.checks)},
        "summary": summary.as_dict(),
        "mismatches": [m.as_dict() for m in summary.mismatches[:20]],
        # run metadata is the only part that varies between identical tasks
        "run": {"timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
                "elapsed_seconds": round(elapsed, 3), "workers": workers},
    }
    return doc, summary


def cmd_enumerate(args: argparse.Namespace) -> int:
    checks = resolve_checks(args.checks)
    if args.sample is not None:
        task = EnumerationTask(args.n, "sampled", args.sample, args.seed, checks)
    else:
        task = EnumerationTask(args.n, "exhaustive", checks=checks)
    doc, summary = enumeration_summary(task, args.workers)
    if args.dump_dir and summary.mismatches:
        out = Path(args.dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for k, m in enumerate(summary.mismatches):
            text = (f"# mismatch {k}: check {m.check_id}\n"
                    f"# left: {json.dumps(m.left, sort_keys=True)}\n"
                    f"# right: {json.dumps(m.right, sort_keys=True)}\n")
            gens = tuple(tuple(s) for s in m.family.member_sets())
            text += format_document(InputDocument(m.family.n, generators=gens))
            (out / f"mismatch_{k:04d}_{m.check_id}.txt").write_text(text, encoding="utf-8")
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    if args.fail_on_mismatch and summary.mismatches:
        return EXIT_MISMATCH
    return 0


def cmd_fixtures(args: argparse.Namespace) -> int:
    cat = fixtures()
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for name, fx in cat.items():
            header = f"# {name}: {fx.description}\n"
            (out / f"{name}.txt").write_text(header + format_document(fx.document), encoding="utf-8")
    listing = {name: {"description": fx.description, "reference": fx.reference,
                      "document": format_document(fx.document)} for name, fx in cat.items()}
    sys.stdout.write(json.dumps(listing, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srgci", description="Classify Stanley-Reisner ideals as generalized complete intersections.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="full classification report for one complex")
    c.add_argument("--input", required=True, help="input document ('-' for stdin)")
    c.add_argument("--field", action="append", help="q, f2, f3, ... (repeatable; default q)")
    c.set_defaults(func=cmd_classify)

    e = sub.add_parser("enumerate", help="cross-validate the criteria over many complexes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--sample", type=int, help="number of random families (sampled mode)")
    e.add_argument("--seed", type=int, help="RNG seed, required with --sample")
    e.add_argument("--checks", default="all", help="all, routes, purity, buchsbaum, converse, reconstruct")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--dump-dir", help="write each mismatch as a classify-able input file here")
    e.add_argument("--fail-on-mismatch", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    h = sub.add_parser("homology", help="reduced Betti numbers and CM/Buchsbaum status")
    h.add_argument("--input", required=True)
    h.add_argument("--field", action="append")
    h.set_defaults(func=cmd_homology)

    f = sub.add_parser("fixtures", help="list the built-in example ideals")
    f.add_argument("--emit", help="directory to write one input file per fixture")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "enumerate" and args.sample is not None and args.seed is None:
        parser.error("--sample requires --seed")
    try:
        return args.func(args)
    except (ParseError, ComplexError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
