"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 a checked claim failed.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import report
from .catalog import CatalogError, catalog_files, format_table, load_group, read_entries
from .constructions import FAMILIES, construct
from .cyclo import run_hunt
from .group import DEFAULT_CAP, GroupError

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2

TSV_HELP = ("TSV columns: " + ", ".join(report.TSV_COLUMNS[:9])
            + ", then one verdict column per claim (ok / FAIL / n/a).")


def _claims(text: str) -> tuple[str, ...]:
    claims = tuple(c.strip().upper() for c in text.split(",") if c.strip())
    unknown = [c for c in claims if c not in report.CLAIMS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown claim(s) {unknown}; choose from {report.CLAIMS}")
    if not claims:
        raise argparse.ArgumentTypeError("at least one claim is required")
    return claims


def _analyze_entry(args):
    entry, cap, claims = args
    G = entry.build(cap)
    return report.analyze(G, claims)


def _collect(paths):
    files = catalog_files(paths)
    entries, errors = [], []
    for f in files:
        try:
            entries.extend(read_entries(f))
        except CatalogError as exc:
            errors.append(str(exc))
        except (OSError, UnicodeDecodeError) as exc:
            errors.append(f"{f}: {exc}")
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    return entries, errors


def _run_rows(entries, cap, claims, jobs):
    tasks = [(e, cap, claims) for e in entries]
    if jobs <= 1:
        return [_analyze_entry(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_analyze_entry, tasks, chunksize=1))


def _print_text(row: dict, out) -> None:
    print(f"group    {row['label']}", file=out)
    print(f"order    {row['order']}", file=out)
    print(f"abelian  {report._fmt(row['abelian'])}", file=out)
    if row["abelian"]:
        print("mci      abelian (undefined)", file=out)
    else:
        k = "" if row["kExp"] is None else f"  (k = {row['kExp']})"
        print(f"mci      {row['m']}  witness {row['witness']}{k}", file=out)
        print(f"pi*      {{{', '.join(map(str, row['piStar']))}}}", file=out)
    comps = " | ".join("{" + ", ".join(map(str, c)) + "}" for c in row["components"]) or "-"
    print(f"prime graph components  {comps}", file=out)
    print(f"flags    {', '.join(row['flags']) or '-'}", file=out)
    if "pgroup" in row:
        pg = row["pgroup"]
        print(f"p-group  p={pg['p']} |G|=p^{pg['orderExp']} exp=p^{pg['exponentExp']} "
              f"omega={pg['omegaOrders']} agemo={pg['agemoOrders']}", file=out)
    if "ledger" in row:
        led = row["ledger"]
        print(f"ledger   f0(m)={led['f0']}  prod(pi*)={led['productPiStar']}", file=out)
        for r in led["records"]:
            verdict = "holds" if r["holds"] else "FAILS"
            ex = f"  exemption {r['exemption']}" if r["exemption"] else ""
            det = f"  [{r['detail']}]" if r["detail"] else ""
            print(f"  {r['claim_id']:<3} {r['lhs']} <= {r['rhs']}  {verdict}{ex}{det}", file=out)
    if "reductionCheck" in row:
        print(f"reduction to G/Z(G)  {'holds' if row['reductionCheck'] else 'FAILS'}", file=out)
    print("claims   " + "  ".join(f"{c}={v['status']}" for c, v in row["claims"].items()), file=out)


def _row_fails(row: dict) -> bool:
    led = row.get("ledger")
    if led and not all(r["holds"] for r in led["records"]):
        return True
    if row.get("reductionCheck") is False:
        return True
    return any(v["status"] == report.FAILS for v in row["claims"].values())


def cmd_analyze(args) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
        G = load_group(text, cap=args.cap)
    except (OSError, UnicodeDecodeError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    row = report.analyze(G)
    if args.format == "json":
        print(report.to_json(row))
    else:
        _print_text(row, sys.stdout)
    return EXIT_VIOLATION if _row_fails(row) else EXIT_OK


def cmd_scan(args) -> int:
    try:
        entries, errors = _collect(args.paths)
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if errors:
        return EXIT_INPUT
    if not entries:
        print("error: empty catalog", file=sys.stderr)
        return EXIT_INPUT
    try:
        rows = _run_rows(entries, args.cap, report.CLAIMS, args.jobs)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        print(report.to_json(rows))
    else:
        print(report.tsv_header())
        for row in rows:
            print(report.tsv_row(row))
    return EXIT_VIOLATION if any(_row_fails(r) for r in rows) else EXIT_OK


def cmd_verify(args) -> int:
    claims = args.claims
    try:
        entries, errors = _collect(args.paths)
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if errors:
        return EXIT_INPUT
    if not entries:
        print("error: empty catalog", file=sys.stderr)
        return EXIT_INPUT
    try:
        rows = _run_rows(entries, args.cap, claims, args.jobs)
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    counts = {c: {"checked": 0, "holds": 0, "n/a": 0} for c in claims}
    violations = []
    for entry, row in zip(entries, rows):
        for c in claims:
            res = row["claims"][c]
            if res["status"] == report.NA:
                counts[c]["n/a"] += 1
                continue
            counts[c]["checked"] += 1
            if res["status"] == report.HOLDS:
                counts[c]["holds"] += 1
            else:
                violations.append({"claim": c, "label": row["label"], "source": entry.source,
                                   "line": entry.line, "order": row["order"],
                                   "detail": res["detail"]})
    summary = {"groups": len(rows), "claims": counts, "violations": violations}
    if args.format == "json":
        print(report.to_json(summary))
    else:
        print(f"groups\t{len(rows)}")
        print("claim\tchecked\tholds\tn/a\tviolations")
        for c in claims:
            k = counts[c]
            print(f"{c}\t{k['checked']}\t{k['holds']}\t{k['n/a']}\t{k['checked'] - k['holds']}")
        for v in violations:
            print(f"VIOLATION\t{v['claim']}\t{v['label']}\t{v['source']}:{v['line']}\t"
                  f"order={v['order']}\t{v['detail']}")
        print(f"total violations\t{len(violations)}")
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_construct(args) -> int:
    try:
        G = construct(args.family, *args.params)
        text = format_table(G)
    except (GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return EXIT_OK
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_hunt(args) -> int:
    if args.qmax < 2:
        print("error: qMax must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    try:
        summary = run_hunt(args.qmax, args.log, args.checkpoint)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    last = "-" if summary.last_q is None else summary.last_q
    print(f"scanned\t{summary.scanned}")
    print(f"hits\t{summary.hits}")
    print(f"last_q\t{last}")
    if summary.hits == 0:
        print(f"none found <= {args.qmax}")
    for rec in summary.records:
        print(rec.log_line())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcikit",
        description="Maximum centralizer index and related bounds on finite groups.",
        epilog=TSV_HELP)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs=True):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="element cap for closures")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes")

    p = sub.add_parser("analyze", help="full report for one catalog entry")
    p.add_argument("path")
    common(p, jobs=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="one report row per group", epilog=TSV_HELP)
    p.add_argument("paths", nargs="+")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="check claims on every group of a catalog")
    p.add_argument("paths", nargs="+")
    p.add_argument("--claims", type=_claims, default=report.CLAIMS,
                   help="comma-separated subset of " + ",".join(report.CLAIMS))
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="write a named family as a Cayley-table catalog entry")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("hunt", help="search for simultaneous prime cyclotomic values")
    p.add_argument("qmax", type=int)
    p.add_argument("--log", default="hunt_hits.log")
    p.add_argument("--checkpoint", default=None)
    p.set_defaults(func=cmd_hunt)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
