"""Command-line front end.

Exit codes: 0 success, 1 a checked claim failed, 2 invalid input,
3 genericity retries exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .edges import classify_graph, edge_graph
from .errors import CrossCheckMismatch, ExhaustedTries, GramError, InvalidInput
from .exdim import exdim_report
from .factorization import RootPairSet, bits_to_code, code_to_bits, enumerate_rank2, random_root_set, rank2_point
from .gram import GramPoint, is_extreme_point, segment_face_dim, supporting_face_dim
from .pataki import pataki_binary, pataki_general
from .quadindep import random_qi_tuple
from .rng import derive_seed, make_rng
from .suites import DEFAULT_TRIALS, SUITES, run_suite

EXIT_OK, EXIT_CLAIM, EXIT_INPUT, EXIT_GENERICITY = 0, 1, 2, 3

EXPECT_LABELS = {"k44": "complete_bipartite(4,4)", "empty": "empty", "complete": "complete"}


def _dump(obj, out=None):
    text = json.dumps(obj, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc


def _default_jobs():
    try:
        return max(1, int(os.environ.get("GRAMSPEC_JOBS", "1")))
    except ValueError:
        return 1


# -- subcommands ---------------------------------------------------------------

def cmd_pataki(args):
    if args.degree is not None:
        P = pataki_binary(args.degree)
    else:
        n, m = args.general
        P = pataki_general(n, m)
    sys.stdout.write(json.dumps(P.to_json(), separators=(",", ":")) + "\n")
    return EXIT_OK


def _build_graph(args):
    """Edge graph plus the incidents logged while resampling."""
    incidents = []
    if args.roots:
        R = RootPairSet.from_json(_load_json(args.roots))
        return R, edge_graph(R, jobs=args.jobs), incidents
    if args.degree is None:
        raise InvalidInput("--random needs --degree")
    rng = make_rng(derive_seed(args.seed, "edges", args.degree))
    for attempt in range(args.retries + 1):
        R = random_root_set(args.degree, rng, bound=args.bound)
        try:
            E = edge_graph(R, jobs=args.jobs)
        except CrossCheckMismatch as exc:
            incidents.append({"attempt": attempt, "roots": R.to_json(), "reason": str(exc)})
            continue
        if R.d >= 5 and E.edge_count != len(E.pairs):
            incidents.append({"attempt": attempt, "roots": R.to_json(),
                              "reason": f"{len(E.pairs) - E.edge_count} non-edge pairs at d >= 5"})
            continue
        return R, E, incidents
    raise _Exhausted(incidents)


class _Exhausted(Exception):
    def __init__(self, incidents):
        super().__init__("genericity retries exhausted")
        self.incidents = incidents


def cmd_edges(args):
    try:
        R, E, incidents = _build_graph(args)
    except _Exhausted as exc:
        _dump({"error": "genericity retries exhausted", "incidents": exc.incidents})
        return EXIT_GENERICITY
    except CrossCheckMismatch as exc:
        _dump({"error": "cross-check mismatch", "detail": str(exc), "report": exc.report})
        return EXIT_GENERICITY
    shape = classify_graph(E)
    payload = E.to_dot() if args.format == "dot" else json.dumps(E.to_json(), indent=2) + "\n"
    summary = {
        "d": E.d,
        "vertices": len(E.vertices),
        "edge_count": E.edge_count,
        "pair_count": E.pair_count,
        "classification": shape.label,
        "roots": R.to_json(),
        "incidents": incidents,
    }
    if shape.kind == "complete_bipartite":
        summary["classes"] = [[code_to_bits(c, E.d) for c in part] for part in shape.parts]
        summary["class_rule_holds"] = shape.class_rule_holds
    if args.out == "-":
        sys.stdout.write(payload)
        sys.stderr.write(json.dumps(summary, indent=2) + "\n")
    else:
        if args.out:
            Path(args.out).write_text(payload)
        _dump(summary)
    if args.expect and shape.label != EXPECT_LABELS[args.expect]:
        return EXIT_CLAIM
    if args.expect == "k44" and not shape.class_rule_holds:
        return EXIT_CLAIM
    return EXIT_OK


def _write_witness(directory, suite, outcome):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{suite}-trial{outcome.trial:04d}.json"
    path.write_text(json.dumps(outcome.witness, indent=2) + "\n")
    return str(path)


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, trials=args.trials, seed=args.seed, jobs=args.jobs) for s in names]
    rows = []
    for rep in reports:
        for o in rep.outcomes:
            witness = ""
            if o.outcome != "pass" and o.witness is not None:
                witness = _write_witness(args.witness_dir, rep.suite, o)
            rows.append([rep.suite, o.trial, o.params, o.outcome, witness])
        for name, ok in rep.aggregate_checks.items():
            rows.append([rep.suite, "aggregate", name, "pass" if ok else "fail", ""])
    doc = {
        "seed": args.seed,
        "passed": all(r.passed for r in reports),
        "suites": [r.to_json(timing=args.timing) for r in reports],
    }
    _dump(doc, args.json)
    if args.json:
        _dump({"seed": args.seed, "passed": doc["passed"],
               "suites": {r.suite: r.passed for r in reports}})
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "trial", "params", "outcome", "witness"])
        writer.writerows(rows)
        Path(args.csv).write_text(buf.getvalue())
    if any(r.failed for r in reports):
        return EXIT_CLAIM
    if any(r.genericity_exhausted for r in reports):
        return EXIT_GENERICITY
    return EXIT_OK


def cmd_rank2(args):
    R = RootPairSet.from_json(_load_json(args.roots))
    if args.code:
        code = bits_to_code(args.code)
        if len(args.code) != R.d:
            raise InvalidInput(f"code must have {R.d} bits")
        points = [(code, rank2_point(R, code))]
    else:
        points = enumerate_rank2(R)
    _dump([{"code": code_to_bits(c, R.d), "gram": p.to_json()} for c, p in points], args.out)
    return EXIT_OK


def cmd_face(args):
    theta = GramPoint.from_json(_load_json(args.gram))
    if not theta.is_psd:
        raise InvalidInput("point is not psd")
    _dump({
        "rank": theta.rank,
        "face_dim": supporting_face_dim(theta),
        "is_extreme": is_extreme_point(theta),
        "in_pataki_range": theta.rank in pataki_binary(theta.d),
    })
    return EXIT_OK


def cmd_segment(args):
    a, b = (GramPoint.from_json(_load_json(p)) for p in args.gram)
    _dump(segment_face_dim(a, b).to_json())
    return EXIT_OK


def cmd_qi(args):
    try:
        w = random_qi_tuple(args.degree, args.rank, args.seed, max_tries=args.max_tries, bound=args.bound)
    except ExhaustedTries as exc:
        _dump({"error": str(exc), "samples": [[f.to_json() for f in s] for s in exc.samples]})
        return EXIT_GENERICITY
    _dump(w.to_json(), args.out)
    return EXIT_OK


def cmd_exdim(args):
    try:
        rep = exdim_report(args.degree, args.rank, args.seed)
    except ExhaustedTries as exc:
        _dump({"error": str(exc)})
        return EXIT_GENERICITY
    _dump(rep.to_json())
    return EXIT_OK if rep.certified and rep.identity_holds else EXIT_CLAIM


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gramspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pataki", help="Pataki interval")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--degree", type=int, help="binary forms of degree 2d")
    g.add_argument("--general", type=int, nargs=2, metavar=("N", "M"), help="ambient n, slice dim m")
    p.set_defaults(func=cmd_pataki)

    p = sub.add_parser("edges", help="edge graph between rank-two extreme points")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--roots", help="roots JSON file")
    src.add_argument("--random", action="store_true", help="draw a random root set")
    p.add_argument("--degree", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=20)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--out", help="graph output path ('-' for stdout)")
    p.add_argument("--expect", choices=sorted(EXPECT_LABELS))
    p.set_defaults(func=cmd_edges)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--trials", type=int, help="default depends on the suite: "
                   + ", ".join(f"{k}={v}" for k, v in DEFAULT_TRIALS.items()))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="write the full report here instead of stdout")
    p.add_argument("--csv", help="write per-trial CSV rows here")
    p.add_argument("--witness-dir", default="witnesses")
    p.add_argument("--timing", action="store_true", help="include wall-clock time (breaks byte determinism)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank2", help="rank-two Gram points of a root set")
    p.add_argument("--roots", required=True)
    p.add_argument("--code", help="little-endian bitstring; default: all canonical codes")
    p.add_argument("--out")
    p.set_defaults(func=cmd_rank2)

    p = sub.add_parser("face", help="supporting face of a Gram point")
    p.add_argument("--gram", required=True)
    p.set_defaults(func=cmd_face)

    p = sub.add_parser("segment", help="supporting face of a segment")
    p.add_argument("--gram", nargs=2, required=True, metavar=("A", "B"))
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("qi", help="quadratically independent witness")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-tries", type=int, default=5)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_qi)

    p = sub.add_parser("exdim", help="dimension report for rank-r extreme points")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_exdim)

    for p in sub.choices.values():
        p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker processes (env GRAMSPEC_JOBS)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, KeyError, ValueError) as exc:
        sys.stderr.write(f"gramspec: error: {exc}\n")
        return EXIT_INPUT
    except GramError as exc:
        sys.stderr.write(f"gramspec: error: {exc}\n")
        return EXIT_GENERICITY


if __name__ == "__main__":
    sys.exit(main())
