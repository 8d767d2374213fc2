"""Duplicate-bridge matchpoint scoring and multi-event totals."""
from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .assessment import Percentage


class ScoringError(ValueError):
    pass


class Direction(str, enum.Enum):
    NS = "NS"
    EW = "EW"


@dataclass(frozen=True)
class BoardResult:
    board_id: str
    pair_id: str
    direction: Direction
    score: int  # from the NS point of view


@dataclass(frozen=True)
class BoardField:
    """All results in one direction of one board: the pool a pair is matchpointed against."""

    board_id: str
    direction: Direction
    entries: tuple[tuple[str, int], ...]  # (pair_id, score from that pair's side)

    def __post_init__(self) -> None:
        if not self.entries:
            raise ScoringError(f"board {self.board_id} {self.direction.value}: empty field")


@dataclass(frozen=True)
class MatchpointAward:
    pair_id: str
    matchpoints: int
    max_matchpoints: int
    board_id: str = ""

    @property
    def scorable(self) -> bool:
        """False for a lone result, which has nothing to be compared with."""
        return self.max_matchpoints > 0

    @property
    def percentage(self) -> Optional[Percentage]:
        if not self.scorable:
            return None
        return Percentage.from_ratio(Fraction(self.matchpoints, self.max_matchpoints))


def build_fields(results: Iterable[BoardResult]) -> list[BoardField]:
    """Group results into one field per (board, direction), in first-seen order.

    EW entries are scored from the EW side, i.e. with the NS score negated.
    """
    pools: dict[tuple[str, Direction], list[tuple[str, int]]] = defaultdict(list)
    seen: set[tuple[str, str, Direction]] = set()
    for r in results:
        key = (r.board_id, r.pair_id, r.direction)
        if key in seen:
            raise ScoringError(
                f"pair {r.pair_id} has two {r.direction.value} results on board {r.board_id}"
            )
        seen.add(key)
        own = r.score if r.direction is Direction.NS else -r.score
        pools[(r.board_id, r.direction)].append((r.pair_id, own))
    return [BoardField(b, d, tuple(entries)) for (b, d), entries in pools.items()]


def matchpoints_for_field(field: BoardField) -> list[MatchpointAward]:
    """Two matchpoints per pair beaten, one per pair tied; top is 2(n-1)."""
    scores = sorted(s for _, s in field.entries)
    n = len(scores)
    awards = []
    for pair_id, own in field.entries:
        worse = bisect_left(scores, own)
        equal = bisect_right(scores, own) - worse - 1
        awards.append(MatchpointAward(pair_id, 2 * worse + equal, 2 * (n - 1), field.board_id))
    return awards


def session_percentage(awards: Iterable[MatchpointAward]) -> Percentage:
    """Total matchpoints over total available, skipping lone-result boards."""
    scored = [a for a in awards if a.scorable]
    if not scored:
        raise ScoringError("no scorable boards")
    got = sum(a.matchpoints for a in scored)
    top = sum(a.max_matchpoints for a in scored)
    return Percentage.from_ratio(Fraction(got, top))


def score_session(
    results: Iterable[BoardResult],
) -> tuple[list[MatchpointAward], dict[str, Percentage]]:
    """Matchpoint every field and total each pair.

    Returns all awards (field order) and the session percentage of every
    pair that has at least one scorable board. Raises ``ScoringError`` when
    no board in the session can be scored.
    """
    awards = [a for f in build_fields(results) for a in matchpoints_for_field(f)]
    by_pair: dict[str, list[MatchpointAward]] = defaultdict(list)
    for a in awards:
        by_pair[a.pair_id].append(a)
    totals = {
        pair: session_percentage(pair_awards)
        for pair, pair_awards in by_pair.items()
        if any(a.scorable for a in pair_awards)
    }
    if not totals:
        raise ScoringError("no scorable boards")
    return awards, totals


@dataclass(frozen=True)
class EventRecord:
    player_id: str
    event_index: int
    percentage: Percentage


def aggregate_total(
    records: Sequence[EventRecord], total_events: int = 6, min_events: int = 5
) -> Optional[Fraction]:
    """A player's tournament total, or ``None`` if they played too few events.

    A player who took part in every event has their single worst score
    dropped; otherwise all their scores are averaged.
    """
    if not 1 <= min_events <= total_events:
        raise ValueError("need 1 <= min_events <= total_events")
    players = {r.player_id for r in records}
    if len(players) > 1:
        raise ScoringError(f"records mix players: {sorted(players)}")
    indices = [r.event_index for r in records]
    if len(set(indices)) != len(indices):
        raise ScoringError("duplicate event index")
    if any(not 1 <= i <= total_events for i in indices):
        raise ScoringError(f"event index outside 1..{total_events}")

    if len(records) < min_events:
        return None
    scores = sorted(r.percentage.hundredths for r in records)
    if len(scores) == total_events and total_events > 1:
        scores = scores[1:]
    return Fraction(sum(scores), 100 * len(scores))


@dataclass(frozen=True)
class TotalsTable:
    included: dict[str, Fraction]  # player -> total, best first
    excluded: dict[str, str]  # player -> reason
    participation: dict[str, int]


def aggregate_table(
    records: Iterable[EventRecord], total_events: int = 6, min_events: int = 5
) -> TotalsTable:
    by_player: dict[str, list[EventRecord]] = defaultdict(list)
    for r in records:
        by_player[r.player_id].append(r)
    included, excluded = {}, {}
    for player, recs in by_player.items():
        total = aggregate_total(recs, total_events, min_events)
        if total is None:
            excluded[player] = f"played {len(recs)} of {total_events} events (minimum {min_events})"
        else:
            included[player] = total
    ranked = dict(sorted(included.items(), key=lambda kv: -kv[1]))
    return TotalsTable(ranked, excluded, {p: len(r) for p, r in by_player.items()})
