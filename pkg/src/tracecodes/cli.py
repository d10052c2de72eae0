"""Command-line front end: ``tracecodes <subcommand> ...``.

Exit status 0 on success, 2 on usage errors, 1 on computation errors (the
diagnostic names the error class).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict

from . import __version__
from .distance import DEFAULT_BUDGET, brouwer_zimmermann, exact_distance_enum, search_distance
from .errors import TraceCodeError
from .io import Catalog, CodeRecord, parse_code
from .matgf import weight
from .quantum import DerivationStep, derive, stabilizer_delta, trace_stabilizer
from .subfield import subfield_subcode
from .tables import CSV_COLUMNS, PRESETS, RefineConfig, build_table
from .tracecode import TraceSpec, point_set

CONWAY_ENV = "TRACECODES_CONWAY"


def _tower(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tracecodes", description="Evaluation codes at trace roots and their stabilizer codes.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--conway", help=f"Conway polynomial table (overrides ${CONWAY_ENV})")
    ap.add_argument("--catalog", help="append every emitted record to this catalog file")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("cosets", help="cyclotomic cosets as JSON lines")
    _tower(sp)
    sp.add_argument("--limit", type=int)

    sp = sub.add_parser("points", help="evaluation points as discrete logs (`0` is the zero element)")
    _tower(sp)
    sp.add_argument("--kind", choices=("z", "zc", "zt", "z_minus_zero"), default="z")

    sp = sub.add_parser("subcode", help="subfield-subcode summary")
    _tower(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--points", choices=("z", "zt", "zc", "z_minus_zero"), default="z")

    sp = sub.add_parser("quantum", help="stabilizer code from the trace construction")
    _tower(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--points", choices=("z", "zc", "z_minus_zero"), default="z")
    sp.add_argument("--derive", action="append", default=[], metavar="KIND:ARG", help="puncture:COORD or subcode:DK (repeatable)")
    sp.add_argument("--beyond-bound", action="store_true", help="allow t past the trace bound when the Gram matrix vanishes")

    sp = sub.add_parser("table", help="reproduce a preset table")
    sp.add_argument("--preset", choices=sorted(PRESETS), required=True)
    sp.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sp.add_argument("--refine-distance", action="store_true")
    sp.add_argument("--trials", type=int, default=RefineConfig.trials)
    sp.add_argument("--seed", type=int, default=RefineConfig.seed)
    sp.add_argument("--out", help="machine output file (default: standard output)")

    sp = sub.add_parser("distance", help="minimum distance of a code file")
    sp.add_argument("--in", dest="path", required=True)
    sp.add_argument("--engine", choices=("enum", "bz", "lws"), default="bz")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--target", type=int, default=1, help="known lower bound for the lws engine")

    sp = sub.add_parser("catalog", help="list or verify a catalog file")
    sp.add_argument("--verify", action="store_true")
    return ap


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_step(text: str) -> DerivationStep:
    kind, _, arg = text.partition(":")
    if kind not in ("puncture", "subcode") or not arg.lstrip("-").isdigit():
        raise argparse.ArgumentTypeError(f"bad derivation {text!r}; expected puncture:COORD or subcode:DK")
    return DerivationStep(kind, int(arg))


def _cmd_cosets(a, cat):
    spec = TraceSpec(a.p, a.s, a.r)
    fam = spec.cosets
    for i, c in enumerate(fam.cosets[: a.limit] if a.limit is not None else fam.cosets):
        _emit({"index": i, "rep": c.rep, "size": c.size, "members": list(c.members)})
    return 0


def _cmd_points(a, cat):
    spec = TraceSpec(a.p, a.s, a.r)
    F = spec.big_field
    pts = point_set(spec, a.kind).points
    print(" ".join("0" if x == 0 else f"g^{int(F.log(int(x)))}" for x in pts))
    return 0


def _cmd_subcode(a, cat):
    spec = TraceSpec(a.p, a.s, a.r)
    delta = stabilizer_delta(spec, a.t, a.points)
    code = subfield_subcode(spec, delta, point_set(spec, a.points))
    out = {"spec": spec.label(), "t": a.t, "points": a.points, "delta_size": len(delta), **code.summary()}
    _emit(out)
    return 0


def _cmd_quantum(a, cat):
    spec = TraceSpec(a.p, a.s, a.r)
    steps = [_parse_step(x) for x in a.derive]
    res = trace_stabilizer(spec, a.t, a.points, require_bound=not a.beyond_bound)
    if not res.certified:
        print(f"{spec.label()} t={a.t}: Gram matrix nonzero, no stabilizer code", file=sys.stderr)
        return 1
    P = res.params
    for st in steps:
        P = derive(P, st)
    print(f"{P}  ({'; '.join(P.provenance)})", file=sys.stderr)
    rec = CodeRecord(
        "stabilizer", a.p, a.s, a.r, a.t, a.points, P.n, P.k, P.distance_designed, P.distance_lb, P.distance_ub,
        tuple(str(s) for s in steps), "; ".join(P.provenance),
    )
    _emit({"params": str(P), **asdict(rec)})
    if cat:
        cat.append(rec)
    return 0


def _cmd_table(a, cat):
    rows = build_table(a.preset, refine=a.refine_distance, cfg=RefineConfig(trials=a.trials, seed=a.seed))
    fh = open(a.out, "w", newline="") if a.out else sys.stdout
    try:
        if a.format == "csv":
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_COLUMNS)
            for row in rows:
                w.writerow(row.as_csv_row())
        else:
            for row in rows:
                fh.write(json.dumps({c: getattr(row, c) for c in CSV_COLUMNS}, sort_keys=True) + "\n")
    finally:
        if a.out:
            fh.close()
    if a.out:
        for row in rows:
            print(f"{row.n:>6} {row.k:>6} {row.d_designed:>4}  {row.d_lb if row.d_lb is not None else '-':>4} {row.d_ub if row.d_ub is not None else '-':>4}")
    if cat:
        for row in rows:
            cat.append(CodeRecord(row.family, row.p, row.s, row.r, row.t, row.points_kind, row.n, row.k, row.d_designed, row.d_lb, row.d_ub, row.derivations, row.provenance))
    return 0


def _cmd_distance(a, cat):
    G, meta = parse_code(a.path)
    if a.engine == "enum":
        res = exact_distance_enum(G, a.budget)
    elif a.engine == "bz":
        res = brouwer_zimmermann(G, a.budget)
    else:
        res = search_distance(G, a.target, trials=a.budget, seed=a.seed)
    out = {
        "lb": res.lb, "ub": res.ub, "exact": res.exact, "work": res.work_spent, "method": res.method,
        "witness": None if res.witness is None else [int(x) for x in res.witness],
    }
    if res.witness is not None:
        out["witness_weight"] = weight(res.witness)
    _emit(out)
    return 0


def _cmd_catalog(a, cat):
    if cat is None:
        raise argparse.ArgumentTypeError("--catalog is required")
    if a.verify:
        bad = cat.verify()
        _emit({"lines_bad": bad, "ok": not bad})
        return 0 if not bad else 1
    for rec in cat.records():
        print(rec.to_json())
    return 0


COMMANDS = {
    "cosets": _cmd_cosets,
    "points": _cmd_points,
    "subcode": _cmd_subcode,
    "quantum": _cmd_quantum,
    "table": _cmd_table,
    "distance": _cmd_distance,
    "catalog": _cmd_catalog,
}


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if a.conway:
        os.environ[CONWAY_ENV] = a.conway
    cat = Catalog(a.catalog) if a.catalog else None
    try:
        return COMMANDS[a.cmd](a, cat)
    except argparse.ArgumentTypeError as exc:
        print(f"tracecodes: usage error: {exc}", file=sys.stderr)
        return 2
    except TraceCodeError as exc:
        print(f"tracecodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError, KeyError) as exc:
        print(f"tracecodes: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":  # pragma: no cover
    main()
