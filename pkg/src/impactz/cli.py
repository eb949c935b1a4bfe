"""Command-line surface: compute indicators, rank corpora, audit ranking
sensitivity, mine reversal counterexamples, and verify the built-in
reference tables.

Exit codes: 0 success, 1 data/validation errors, 2 usage errors.
All output is byte-deterministic for a given input and flags.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import reference
from .consistency import (
    InvalidTargetYear,
    PreconditionViolated,
    SearchBounds,
    mine_counterexamples,
)
from .core import IndicatorKind, IndicatorSpec, ZeroDenominator, compute
from .corpus import (
    ParseError,
    ValidationError,
    load_corpus,
    rank,
    sensitivity_report,
)
from .ratio import format_exact, to_decimal

_KINDS = {kind.value: kind for kind in IndicatorKind}


def _add_corpus_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pubs", required=True,
                        help="publications CSV (journal,year,pubs)")
    parser.add_argument("--cits", required=True,
                        help="citations CSV (journal,citing_year,cited_year,count)")


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", required=True, choices=sorted(_KINDS))
    parser.add_argument("-n", type=int, required=True, dest="n",
                        help="window length in years")
    parser.add_argument("--year", type=int, required=True,
                        help="target year")
    parser.add_argument("-s", type=int, default=0, choices=(0, 1),
                        help="include the publication year (diachronous only)")


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("tsv", "json"), default="tsv")
    parser.add_argument("--places", type=int, default=2,
                        help="decimal places for display values")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="impactz",
        description="Exact impact-factor indicators and Z-consistency audits")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indicator value per journal")
    _add_corpus_args(p)
    _add_spec_args(p)
    _add_output_args(p)

    p = sub.add_parser("rank", help="competition-ranked journal table")
    _add_corpus_args(p)
    _add_spec_args(p)
    _add_output_args(p)

    p = sub.add_parser("sensitivity",
                       help="minimal uncited injections that flip adjacent ranks")
    _add_corpus_args(p)
    _add_spec_args(p)
    _add_output_args(p)
    p.add_argument("--k-max", type=int, default=100,
                   help="largest injection size to scan")

    p = sub.add_parser("mine",
                       help="exhaustively search bounded data for reversals")
    _add_spec_args(p)
    _add_output_args(p)
    p.add_argument("--pub-max", type=int, required=True)
    p.add_argument("--cit-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--limit", type=int, default=10)

    p = sub.add_parser("verify-paper",
                       help="check the built-in reference tables end to end")
    return parser


def _spec_from_args(args: argparse.Namespace) -> IndicatorSpec:
    return IndicatorSpec(_KINDS[args.kind], args.n, args.year, args.s)


def _cell(value, places: int) -> tuple[str, str]:
    return format_exact(value), to_decimal(value, places)


def _emit(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        for row in rows:
            out.write("\t".join(str(row[col]) for col in columns) + "\n")


def _load(args):
    with open(args.pubs, encoding="utf-8") as pubs_fh, \
            open(args.cits, encoding="utf-8") as cits_fh:
        return load_corpus(pubs_fh, cits_fh)


def _cmd_compute(args, out) -> int:
    corpus = _load(args)
    spec = _spec_from_args(args)
    rows = []
    for journal_id in sorted(corpus.journals):
        exact, decimal = _cell(compute(corpus.journals[journal_id], spec),
                               args.places)
        rows.append({"journal": journal_id, "exact": exact,
                     "decimal": decimal})
    _emit(rows, ["journal", "exact", "decimal"], args.format, out)
    return 0


def _cmd_rank(args, out) -> int:
    corpus = _load(args)
    ranking = rank(corpus, _spec_from_args(args), strict=False)
    rows = []
    for entry in ranking.entries:
        exact, decimal = _cell(entry.value, args.places)
        rows.append({"rank": entry.rank, "journal": entry.journal_id,
                     "exact": exact, "decimal": decimal})
    _emit(rows, ["rank", "journal", "exact", "decimal"], args.format, out)
    for journal_id, reason in ranking.skipped:
        print(f"warning: skipped {journal_id}: {reason}", file=sys.stderr)
    return 0


def _cmd_sensitivity(args, out) -> int:
    corpus = _load(args)
    report = sensitivity_report(corpus, _spec_from_args(args), args.k_max)
    rows = []
    for row in report:
        for year in sorted(row.per_year_min_k):
            k = row.per_year_min_k[year]
            rows.append({"upper": row.upper_id, "lower": row.lower_id,
                         "year": year,
                         "min_k": "-" if k is None else k})
    _emit(rows, ["upper", "lower", "year", "min_k"], args.format, out)
    return 0


def _cmd_mine(args, out) -> int:
    bounds = SearchBounds(n=args.n, pub_max=args.pub_max,
                          cit_max=args.cit_max, k_max=args.k_max,
                          target_year=args.year, s=args.s)
    witnesses = mine_counterexamples(_KINDS[args.kind], bounds, args.limit)
    rows = []
    for witness in witnesses:
        scenario = witness.scenario
        verdict = witness.verdict
        (year, k), = scenario.injection.additions
        rows.append({
            "left_pubs": json.dumps(scenario.left.pubs, sort_keys=True),
            "left_cits": json.dumps(
                {f"{c},{d}": v for (c, d), v in sorted(scenario.left.cits.items())}),
            "right_pubs": json.dumps(scenario.right.pubs, sort_keys=True),
            "right_cits": json.dumps(
                {f"{c},{d}": v for (c, d), v in sorted(scenario.right.cits.items())}),
            "inject_year": year,
            "k": k,
            "before": f"{format_exact(verdict.before[0])} vs "
                      f"{format_exact(verdict.before[1])}",
            "after": f"{format_exact(verdict.after[0])} vs "
                     f"{format_exact(verdict.after[1])}",
        })
    _emit(rows, ["left_pubs", "left_cits", "right_pubs", "right_cits",
                 "inject_year", "k", "before", "after"], args.format, out)
    return 0


def _cmd_verify_paper(out) -> int:
    results = reference.run_checks()
    failures = 0
    for label, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        out.write(f"{status}  {label}: {detail}\n")
        if not ok:
            failures += 1
    out.write(f"{len(results) - failures}/{len(results)} checks passed\n")
    return 0 if failures == 0 else 1


def run(argv: list[str], out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "rank":
            return _cmd_rank(args, out)
        if args.command == "sensitivity":
            return _cmd_sensitivity(args, out)
        if args.command == "mine":
            return _cmd_mine(args, out)
        return _cmd_verify_paper(out)
    except (ParseError, ValidationError, ZeroDenominator,
            PreconditionViolated, InvalidTargetYear, OSError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
