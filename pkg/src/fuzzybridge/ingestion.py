"""CSV readers and writers for results, board, event and band-config files.

Every file is UTF-8 with a fixed, case-sensitive header line. Records never
span lines, so a rejected record is always reported with its exact line
number. A file with no content at all is read as an empty record list; any
other file must start with the expected header.
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import IO, Callable, Iterator, Sequence, TypeVar, Union

from .assessment import Band, BandScheme, BandSchemeError, Label, Percentage
from .scoring import BoardResult, Direction, EventRecord

Source = Union[str, bytes, IO[str], IO[bytes]]
T = TypeVar("T")

RESULTS_HEADER = ("group", "pair_id", "percentage")
BOARDS_HEADER = ("board", "pair_id", "direction", "score_ns")
EVENTS_HEADER = ("player", "event", "percentage")
BANDS_HEADER = ("label", "lower", "lower_inclusive", "upper", "upper_inclusive")

_INT_RE = re.compile(r"^-?\d+$", re.ASCII)


class ParseFailure(ValueError):
    def __init__(self, file: str, line: int, reason: str) -> None:
        super().__init__(f"{file}:{line}: {reason}")
        self.file = file
        self.line = max(line, 1)
        self.reason = reason


@dataclass(frozen=True)
class ResultsRow:
    group: str
    pair_id: str
    percentage: Percentage


class _RowError(Exception):
    pass


def _read_text(source: Source, name: str) -> str:
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseFailure(name, data.count(b"\n", 0, e.start) + 1, "invalid UTF-8") from None
    return data.removeprefix("\ufeff")


def _lines(text: str) -> Iterator[tuple[int, str]]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for number, line in enumerate(lines, start=1):
        yield number, line.removesuffix("\r")


def _split(line: str) -> list[str]:
    try:
        return next(csv.reader([line], strict=True))
    except (csv.Error, StopIteration) as e:
        raise _RowError(f"malformed CSV: {e}") from None


def _parse_rows(
    source: Source,
    name: str,
    header: Sequence[str],
    convert: Callable[[list[str]], T],
) -> Iterator[tuple[int, T]]:
    text = _read_text(source, name)
    if not text.strip():
        return
    lines = _lines(text)
    _, first = next(lines)
    try:
        got = _split(first)
    except _RowError:
        got = []
    if tuple(got) != tuple(header):
        raise ParseFailure(name, 1, f"missing header: expected {','.join(header)!r}")
    for number, line in lines:
        if not line.strip():
            raise ParseFailure(name, number, "blank line")
        try:
            fields = _split(line)
            if len(fields) != len(header):
                raise _RowError(f"expected {len(header)} fields, got {len(fields)}")
            yield number, convert(fields)
        except (_RowError, ValueError) as e:
            raise ParseFailure(name, number, str(e)) from None


def _text_field(value: str, what: str) -> str:
    if not value:
        raise _RowError(f"empty {what}")
    return value


def _percentage_field(value: str) -> Percentage:
    try:
        return Percentage.parse(value)
    except ValueError as e:
        raise _RowError(str(e)) from None


def parse_results(source: Source, name: str = "<results>") -> list[ResultsRow]:
    """Parse a ``group,pair_id,percentage`` file."""

    def convert(f: list[str]) -> ResultsRow:
        return ResultsRow(_text_field(f[0], "group"), _text_field(f[1], "pair_id"), _percentage_field(f[2]))

    rows, seen = [], set()
    for number, row in _parse_rows(source, name, RESULTS_HEADER, convert):
        key = (row.group, row.pair_id)
        if key in seen:
            raise ParseFailure(name, number, f"duplicate pair {row.pair_id} in group {row.group}")
        seen.add(key)
        rows.append(row)
    return rows


def parse_boards(source: Source, name: str = "<boards>") -> list[BoardResult]:
    """Parse a ``board,pair_id,direction,score_ns`` file."""

    def convert(f: list[str]) -> BoardResult:
        if f[2] not in ("NS", "EW"):
            raise _RowError(f"direction must be NS or EW, got {f[2]!r}")
        if not _INT_RE.match(f[3]):
            raise _RowError(f"score must be an integer, got {f[3]!r}")
        return BoardResult(_text_field(f[0], "board"), _text_field(f[1], "pair_id"), Direction(f[2]), int(f[3]))

    results, seen = [], set()
    for number, r in _parse_rows(source, name, BOARDS_HEADER, convert):
        key = (r.board_id, r.pair_id, r.direction)
        if key in seen:
            raise ParseFailure(name, number, f"duplicate result for pair {r.pair_id} on board {r.board_id}")
        seen.add(key)
        results.append(r)
    return results


def parse_events(source: Source, name: str = "<events>", total_events: int = 6) -> list[EventRecord]:
    """Parse a ``player,event,percentage`` file; events are numbered 1..total_events."""

    def convert(f: list[str]) -> EventRecord:
        if not f[1].isdigit() or not f[1].isascii():
            raise _RowError(f"event must be a positive integer, got {f[1]!r}")
        event = int(f[1])
        if not 1 <= event <= total_events:
            raise _RowError(f"event {event} outside 1..{total_events}")
        return EventRecord(_text_field(f[0], "player"), event, _percentage_field(f[2]))

    records, seen = [], set()
    for number, r in _parse_rows(source, name, EVENTS_HEADER, convert):
        key = (r.player_id, r.event_index)
        if key in seen:
            raise ParseFailure(name, number, f"duplicate event {r.event_index} for player {r.player_id}")
        seen.add(key)
        records.append(r)
    return records


def _bool_field(value: str) -> bool:
    if value == "true":
        return True
    if value == "false":
        return False
    raise _RowError(f"expected true or false, got {value!r}")


def parse_bands(source: Source, name: str = "<bands>") -> BandScheme:
    """Parse a ``label,lower,lower_inclusive,upper,upper_inclusive`` band config.

    Rows may come in any order; there must be exactly one per label.
    """

    def convert(f: list[str]) -> Band:
        if f[0] not in Label.__members__:
            raise _RowError(f"label must be one of A,B,C,D,F, got {f[0]!r}")
        return Band(Label[f[0]], _percentage_field(f[1]), _bool_field(f[2]),
                    _percentage_field(f[3]), _bool_field(f[4]))

    bands: dict[Label, Band] = {}
    line_of: dict[Label, int] = {}
    last_line = 1
    for number, band in _parse_rows(source, name, BANDS_HEADER, convert):
        if band.label in bands:
            raise ParseFailure(name, number, f"duplicate band {band.label.name}")
        bands[band.label] = band
        line_of[band.label] = number
        last_line = number
    if len(bands) != 5:
        missing = ",".join(l.name for l in Label if l not in bands)
        raise ParseFailure(name, last_line, f"expected 5 bands, missing {missing}")
    try:
        return BandScheme(tuple(bands[l] for l in Label))
    except BandSchemeError as e:
        # point at the upper band of a bad boundary: its lower bound is what meets the band below
        line = line_of[e.labels[-1]] if e.labels else last_line
        raise ParseFailure(name, line, str(e)) from None


def _write(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _bool_text(b: bool) -> str:
    return "true" if b else "false"


def serialize_results(rows: Sequence[ResultsRow]) -> str:
    return _write(RESULTS_HEADER, [(r.group, r.pair_id, str(r.percentage)) for r in rows])


def serialize_boards(results: Sequence[BoardResult]) -> str:
    return _write(BOARDS_HEADER, [(r.board_id, r.pair_id, r.direction.value, r.score) for r in results])


def serialize_events(records: Sequence[EventRecord]) -> str:
    return _write(EVENTS_HEADER, [(r.player_id, r.event_index, str(r.percentage)) for r in records])


def serialize_bands(scheme: BandScheme) -> str:
    return _write(BANDS_HEADER, [
        (b.label.name, str(b.lower), _bool_text(b.lower_inclusive), str(b.upper), _bool_text(b.upper_inclusive))
        for b in reversed(scheme.bands)
    ])
