import io

import hypothesis.strategies as st
import pytest
from hypothesis import given

from fuzzybridge import (
    DEFAULT_BANDS,
    BoardResult,
    Direction,
    EventRecord,
    Label,
    ParseFailure,
    Percentage,
    ResultsRow,
    classify,
    pct,
)
from fuzzybridge.ingestion import (
    parse_bands,
    parse_boards,
    parse_events,
    parse_results,
    serialize_bands,
    serialize_boards,
    serialize_events,
    serialize_results,
)

RESULTS = "group,pair_id,percentage\n"
BOARDS = "board,pair_id,direction,score_ns\n"
EVENTS = "player,event,percentage\n"
BANDS = "label,lower,lower_inclusive,upper,upper_inclusive\n"


def failure(fn, text, **kw):
    with pytest.raises(ParseFailure) as e:
        fn(text, **kw)
    return e.value


class TestResults:
    def test_row(self):
        assert parse_results(RESULTS + "C1,P1,62.67\n") == [ResultsRow("C1", "P1", pct("62.67"))]

    def test_out_of_range(self):
        e = failure(parse_results, RESULTS + "C1,P1,101.0\n", name="r.csv")
        assert (e.file, e.line) == ("r.csv", 2)
        assert "r.csv:2:" in str(e)

    def test_patras_fixture(self, data_dir):
        rows = parse_results((data_dir / "patras.csv").read_bytes())
        assert len(rows) == 17
        assert [r.group for r in rows].count("C1") == 9
        assert [r.group for r in rows].count("C2") == 8

    @pytest.mark.parametrize("body,line,reason", [
        ("C1,P1,62.67\nC1,P1,50\n", 3, "duplicate"),
        ("C1,P1,62.675\n", 2, "at most 2 decimals"),
        ("C1,P1,abc\n", 2, "percentage"),
        ("C1,P1\n", 2, "expected 3 fields"),
        (",P1,50\n", 2, "empty group"),
        ("C1,,50\n", 2, "empty pair_id"),
        ("C1,P1,50\n\nC1,P2,50\n", 3, "blank line"),
        ('C1,"P1,50\n', 2, "malformed"),
    ])
    def test_rejects(self, body, line, reason):
        e = failure(parse_results, RESULTS + body)
        assert e.line == line
        assert reason in e.reason

    def test_missing_header(self):
        assert failure(parse_results, "C1,P1,62.67\n").line == 1
        assert failure(parse_results, "Group,pair_id,percentage\n").line == 1

    def test_crlf_bom_and_quoting(self):
        text = "﻿group,pair_id,percentage\r\n\"Club, Patras\",P1,50\r\n"
        assert parse_results(text.encode()) == [ResultsRow("Club, Patras", "P1", pct("50"))]

    def test_no_trailing_newline(self):
        assert len(parse_results(RESULTS + "C1,P1,50")) == 1

    def test_empty_input(self):
        assert parse_results("") == []
        assert parse_results(RESULTS) == []

    def test_stream(self):
        assert len(parse_results(io.StringIO(RESULTS + "a,b,1\n"))) == 1
        assert len(parse_results(io.BytesIO((RESULTS + "a,b,1\n").encode()))) == 1

    def test_bad_utf8_line(self):
        e = failure(parse_results, (RESULTS + "a,b,1\n").encode() + b"c,\xff,2\n")
        assert e.line == 3

    def test_roundtrip(self, data_dir):
        rows = parse_results((data_dir / "menwomen.csv").read_text())
        assert parse_results(serialize_results(rows)) == rows


class TestBoards:
    def test_row(self):
        assert parse_boards(BOARDS + "7,P3,NS,420\n") == [BoardResult("7", "P3", Direction.NS, 420)]

    def test_negative(self):
        assert parse_boards(BOARDS + "7,P3,EW,-1430\n")[0].score == -1430

    @pytest.mark.parametrize("row", ["7,P3,XX,420", "7,P3,ns,420", "7,P3,NS,4.2", "7,P3,NS,", "7,P3,NS,+420"])
    def test_rejects(self, row):
        assert failure(parse_boards, BOARDS + row + "\n").line == 2

    def test_duplicate(self):
        e = failure(parse_boards, BOARDS + "7,P3,NS,420\n7,P3,NS,400\n")
        assert e.line == 3

    def test_roundtrip(self, data_dir):
        rows = parse_boards((data_dir / "boards_session.csv").read_text())
        assert serialize_boards(rows) == (data_dir / "boards_session.csv").read_text()
        assert parse_boards(serialize_boards(rows)) == rows


class TestEvents:
    def test_row(self):
        assert parse_events(EVENTS + "M1,3,57.22\n") == [EventRecord("M1", 3, pct("57.22"))]

    def test_duplicate(self):
        assert failure(parse_events, EVENTS + "M1,3,57.22\nM1,3,50\n").line == 3

    @pytest.mark.parametrize("event", ["0", "7", "-1", "x", "1.0"])
    def test_event_range(self, event):
        assert failure(parse_events, EVENTS + f"M1,{event},50\n").line == 2

    def test_total_events(self):
        assert parse_events(EVENTS + "M1,8,50\n", total_events=8)[0].event_index == 8

    def test_empty(self):
        assert parse_events(EVENTS) == []

    def test_roundtrip(self, data_dir):
        rows = parse_events((data_dir / "events.csv").read_text())
        assert parse_events(serialize_events(rows)) == rows


class TestBands:
    def test_default_fixture(self, data_dir):
        scheme = parse_bands((data_dir / "default_bands.csv").read_bytes())
        assert scheme == DEFAULT_BANDS
        assert classify(pct("48.00"), scheme) is Label.D

    def test_gap(self):
        text = serialize_bands(DEFAULT_BANDS).replace("C,48.00,false", "C,48.50,false")
        e = failure(parse_bands, text)
        assert "gap at D/C" in e.reason
        assert e.line == 4  # the C row

    def test_overlap(self):
        text = serialize_bands(DEFAULT_BANDS).replace("C,48.00,false,55.00", "C,48.00,false,56.00")
        e = failure(parse_bands, text)
        assert "overlap at C/B" in e.reason

    def test_label_count(self):
        text = "\n".join(serialize_bands(DEFAULT_BANDS).splitlines()[:-1]) + "\n"
        assert "missing F" in failure(parse_bands, text).reason

    def test_duplicate_label(self):
        text = serialize_bands(DEFAULT_BANDS) + "A,65,false,100,true\n"
        assert failure(parse_bands, text).line == 7

    @pytest.mark.parametrize("row", ["E,0,true,40,false", "F,0,yes,40,false", "F,0,True,40,false"])
    def test_bad_tokens(self, row):
        text = serialize_bands(DEFAULT_BANDS).replace("F,0.00,true,40.00,false", row)
        assert failure(parse_bands, text).line == 6

    def test_empty(self):
        failure(parse_bands, "")

    def test_roundtrip(self):
        assert parse_bands(serialize_bands(DEFAULT_BANDS)) == DEFAULT_BANDS


ident = st.text(st.characters(blacklist_categories=("Cs",), blacklist_characters="\n\r\x00"), min_size=1, max_size=8)


@given(st.lists(st.tuples(ident, ident, st.integers(0, 10000)), max_size=10, unique_by=lambda t: t[:2]))
def test_results_roundtrip_property(rows):
    records = [ResultsRow(g, p, Percentage(h)) for g, p, h in rows]
    assert parse_results(serialize_results(records)) == records


@given(st.lists(st.tuples(ident, ident, st.sampled_from(list(Direction)), st.integers(-8000, 8000)),
                max_size=10, unique_by=lambda t: t[:3]))
def test_boards_roundtrip_property(rows):
    records = [BoardResult(*r) for r in rows]
    assert parse_boards(serialize_boards(records)) == records


@pytest.mark.parametrize("parser,header", [
    (parse_results, RESULTS), (parse_boards, BOARDS), (parse_events, EVENTS), (parse_bands, BANDS),
])
@given(data=st.binary(max_size=200))
def test_parsing_is_total(parser, header, data):
    for blob in (data, header.encode() + data):
        try:
            parser(blob)
        except ParseFailure as e:
            assert 1 <= e.line <= blob.count(b"\n") + 1
