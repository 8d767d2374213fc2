"""Assessment reports: weighted vs mean rankings, as JSON or an aligned text table."""
from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction
from typing import Optional, Sequence, Union

from .assessment import (
    LABELS,
    ComparisonOutcome,
    EmptyGroupError,
    GroupAssessment,
    rank_by_mean,
    rank_groups,
)

Ranking = tuple[tuple[str, ...], ...]


def round_decimal(value: Union[Fraction, float], places: int = 3) -> Decimal:
    """Round half up to ``places`` decimals, exactly for fractions."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def decimal_number(value: Union[Fraction, float], places: int) -> Union[int, float]:
    d = round_decimal(value, places)
    return int(d) if places == 0 else float(d)


def fraction_text(value: Union[Fraction, float]) -> str:
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class Report:
    assessments: tuple[GroupAssessment, ...]
    outcome: ComparisonOutcome
    mean_ranking: Ranking

    @property
    def weighted_ranking(self) -> Ranking:
        return self.outcome.ordering

    @property
    def divergence_flag(self) -> bool:
        """True when the centroid ranking and the mean ranking disagree."""
        def partition(r: Ranking) -> list[frozenset[str]]:
            return [frozenset(c) for c in r]

        return partition(self.weighted_ranking) != partition(self.mean_ranking)


def report(
    assessments: Sequence[GroupAssessment], outcome: Optional[ComparisonOutcome] = None
) -> Report:
    if not assessments:
        raise EmptyGroupError("no groups to report")
    assessments = tuple(assessments)
    if outcome is None:
        outcome = rank_groups(assessments)
    return Report(assessments, outcome, rank_by_mean(assessments))


def report_dict(rep: Report, precision: int = 3) -> dict:
    groups = []
    for g in rep.assessments:
        groups.append({
            "group": g.group_id,
            "n": g.counts.n,
            "counts": {label.name: g.counts[label] for label in reversed(LABELS)},
            "membership": {
                label.name: {"fraction": fraction_text(g.membership[label]),
                             "decimal": decimal_number(g.membership[label], precision)}
                for label in reversed(LABELS)
            },
            "x_c": decimal_number(g.centroid.x_c, precision),
            "y_c": decimal_number(g.centroid.y_c, precision),
            "x_c_fraction": fraction_text(g.centroid.x_c),
            "y_c_fraction": fraction_text(g.centroid.y_c),
            "mean": decimal_number(g.mean, precision),
            "mean_fraction": fraction_text(g.mean),
        })
    return {
        "groups": groups,
        "weighted_ranking": [list(c) for c in rep.weighted_ranking],
        "mean_ranking": [list(c) for c in rep.mean_ranking],
        "divergence": rep.divergence_flag,
        "decisions": [
            {"upper": d.upper, "lower": d.lower, "rule": d.rule.value}
            for d in rep.outcome.decisions
        ],
    }


def to_json(rep: Report, precision: int = 3) -> str:
    return json.dumps(report_dict(rep, precision), indent=2) + "\n"


def format_ranking(ranking: Ranking) -> str:
    return " > ".join(" = ".join(c) for c in ranking)


def table_lines(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = []
    for row in [header, *rows]:
        cells = [row[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return lines


def to_text(rep: Report, precision: int = 3) -> str:
    header = ["group", "n", "A", "B", "C", "D", "F", "x_c", "y_c", "mean %"]
    rows = []
    for g in rep.assessments:
        rows.append([
            g.group_id,
            str(g.counts.n),
            *(str(g.counts[label]) for label in reversed(LABELS)),
            str(round_decimal(g.centroid.x_c, precision)),
            str(round_decimal(g.centroid.y_c, precision)),
            str(round_decimal(g.mean, precision)),
        ])
    lines = table_lines(header, rows)
    lines.append("")
    lines.extend(ranking_lines(rep))
    return "\n".join(lines) + "\n"


def ranking_lines(rep: Report) -> list[str]:
    lines = [
        f"weighted ranking: {format_ranking(rep.weighted_ranking)}",
        f"mean ranking:     {format_ranking(rep.mean_ranking)}",
    ]
    for d in rep.outcome.decisions:
        lines.append(f"  {d.upper} vs {d.lower}: {d.rule.value}")
    lines.append(f"divergence: {'yes' if rep.divergence_flag else 'no'}")
    return lines
