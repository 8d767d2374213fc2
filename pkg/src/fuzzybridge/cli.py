"""Command-line interface.

Exit codes: 0 success, 1 data or domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import charts, ingestion, reporting
from .assessment import DEFAULT_BANDS, BandScheme, EmptyGroupError, GroupAssessment, assess_group
from .ingestion import ParseFailure, ResultsRow
from .scoring import ScoringError, aggregate_table, build_fields, matchpoints_for_field, score_session


class DataError(Exception):
    pass


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise DataError(f"cannot read {path}: {e.strerror or e}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise DataError(f"cannot write {path}: {e.strerror or e}") from None


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)


def _bands(args: argparse.Namespace) -> BandScheme:
    if args.bands is None:
        return DEFAULT_BANDS
    return ingestion.parse_bands(_read(args.bands), args.bands)


def _assessments(args: argparse.Namespace) -> list[GroupAssessment]:
    rows = ingestion.parse_results(_read(args.results), args.results)
    if not rows:
        raise EmptyGroupError(f"{args.results}: no results")
    scheme = _bands(args)
    groups: dict[str, list[ResultsRow]] = {}
    for row in rows:
        groups.setdefault(row.group, []).append(row)
    return [assess_group(g, [r.percentage for r in members], scheme) for g, members in groups.items()]


def cmd_assess(args: argparse.Namespace) -> None:
    rep = reporting.report(_assessments(args))
    if args.format == "json":
        _emit(args, reporting.to_json(rep, args.precision))
    else:
        _emit(args, reporting.to_text(rep, args.precision))


def cmd_compare(args: argparse.Namespace) -> None:
    rep = reporting.report(_assessments(args))
    if args.format == "json":
        d = reporting.report_dict(rep, args.precision)
        keep = ("weighted_ranking", "mean_ranking", "divergence", "decisions")
        _emit(args, json.dumps({k: d[k] for k in keep}, indent=2) + "\n")
    else:
        _emit(args, "\n".join(reporting.ranking_lines(rep)) + "\n")


def cmd_score(args: argparse.Namespace) -> None:
    results = ingestion.parse_boards(_read(args.boards), args.boards)
    _, totals = score_session(results)
    ranked = sorted(totals.items(), key=lambda kv: -kv[1].hundredths)

    if args.format == "csv":
        rows = [ResultsRow(args.group, pair, p) for pair, p in ranked]
        _emit(args, ingestion.serialize_results(rows))
        return

    awards = []
    for field in build_fields(results):
        for a in matchpoints_for_field(field):
            awards.append((field.direction.value, a))
    if args.format == "json":
        doc = {
            "awards": [
                {"board": a.board_id, "direction": d, "pair_id": a.pair_id,
                 "matchpoints": a.matchpoints, "max_matchpoints": a.max_matchpoints,
                 "percentage": None if a.percentage is None else float(a.percentage),
                 "scorable": a.scorable}
                for d, a in awards
            ],
            "sessions": [{"pair_id": pair, "percentage": float(p)} for pair, p in ranked],
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
        return

    award_rows = [
        [a.board_id, d, a.pair_id, str(a.matchpoints), str(a.max_matchpoints),
         str(a.percentage) if a.scorable else "n/a"]
        for d, a in awards
    ]
    lines = reporting.table_lines(["board", "dir", "pair", "MP", "max", "%"], award_rows)
    lines.append("")
    lines += reporting.table_lines(["pair", "session %"], [[pair, str(p)] for pair, p in ranked])
    _emit(args, "\n".join(lines) + "\n")


def cmd_aggregate(args: argparse.Namespace) -> None:
    records = ingestion.parse_events(_read(args.events), args.events, args.total_events)
    table = aggregate_table(records, args.total_events, args.min_events)
    if args.format == "json":
        doc = {
            "included": [
                {"player": p, "events": table.participation[p],
                 "total": reporting.decimal_number(t, args.precision), "total_fraction": reporting.fraction_text(t)}
                for p, t in table.included.items()
            ],
            "excluded": [
                {"player": p, "events": table.participation[p], "reason": why}
                for p, why in table.excluded.items()
            ],
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
        return
    rows = [
        [p, str(table.participation[p]), str(reporting.round_decimal(t, args.precision))]
        for p, t in table.included.items()
    ]
    lines = reporting.table_lines(["player", "events", "total %"], rows)
    if table.excluded:
        lines.append("")
        lines.append("excluded:")
        lines += [f"  {p}: {why}" for p, why in table.excluded.items()]
    _emit(args, "\n".join(lines) + "\n")


def _bars_path(base: str, group: str, single: bool) -> str:
    if single:
        return base
    p = Path(base)
    safe = re.sub(r"[^A-Za-z0-9._-]", "_", group)
    return str(p.with_name(f"{p.stem}_{safe}{p.suffix}"))


def cmd_plot(args: argparse.Namespace) -> None:
    groups = _assessments(args)
    if args.bars:
        for g in groups:
            svg = charts.render_bar_chart(g.membership, title=f"Membership: {g.group_id}")
            _write(_bars_path(args.bars, g.group_id, len(groups) == 1), svg)
    if args.centroids:
        svg = charts.render_centroid_plot([(g.group_id, g.centroid) for g in groups])
        _write(args.centroids, svg)


def _non_negative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text: str) -> int:
    n = _non_negative(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzybridge",
        description="Fuzzy centroid assessment of bridge player groups, with matchpoint scoring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str] = ("text", "json"), default: str = "text") -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
        p.add_argument("--precision", type=_non_negative, default=3, metavar="N",
                       help="decimal places in reported values (default 3)")

    for name, func, help_ in (
        ("assess", cmd_assess, "assess and rank groups from a results file"),
        ("compare", cmd_compare, "print only the rankings of the groups in a results file"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("results", help="CSV with header group,pair_id,percentage")
        p.add_argument("--bands", metavar="PATH", help="band config CSV (default: match-point bands)")
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("score", help="matchpoint raw board results into session percentages")
    p.add_argument("boards", help="CSV with header board,pair_id,direction,score_ns")
    p.add_argument("--group", default="session", help="group name written in csv output (default: session)")
    common(p, ("csv", "text", "json"), "csv")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("aggregate", help="tournament totals from per-event percentages")
    p.add_argument("events", help="CSV with header player,event,percentage")
    p.add_argument("--total-events", type=_positive, default=6, metavar="N")
    p.add_argument("--min-events", type=_positive, default=5, metavar="N")
    common(p)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("plot", help="render membership bar charts and the centroid plot as SVG")
    p.add_argument("results", help="CSV with header group,pair_id,percentage")
    p.add_argument("--bands", metavar="PATH")
    p.add_argument("--bars", metavar="PATH", help="bar chart SVG; one file per group when there are several")
    p.add_argument("--centroids", metavar="PATH", help="centroid plot SVG")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "plot" and not (args.bars or args.centroids):
        parser.error("plot needs --bars and/or --centroids")
    if args.command == "aggregate" and args.min_events > args.total_events:
        parser.error("--min-events cannot exceed --total-events")
    try:
        args.func(args)
    except (DataError, ParseFailure, EmptyGroupError, ScoringError) as e:
        print(f"fuzzybridge: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
