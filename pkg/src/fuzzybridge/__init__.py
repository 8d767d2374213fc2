"""Fuzzy centroid assessment of bridge player groups, with matchpoint scoring."""
from .assessment import (
    DEFAULT_BANDS,
    Band,
    BandScheme,
    BandSchemeError,
    Centroid,
    ComparisonOutcome,
    Decision,
    EmptyGroupError,
    GroupAssessment,
    Label,
    LabelCounts,
    MembershipVector,
    Percentage,
    Rule,
    assess_group,
    centroid,
    classify,
    compare,
    counts_from_scores,
    mean_percentage,
    membership,
    pct,
    preference,
    rank_by_mean,
    rank_groups,
)
from .ingestion import ParseFailure, ResultsRow
from .reporting import Report, report
from .scoring import (
    BoardField,
    BoardResult,
    Direction,
    EventRecord,
    MatchpointAward,
    ScoringError,
    aggregate_table,
    aggregate_total,
    build_fields,
    matchpoints_for_field,
    score_session,
    session_percentage,
)

__version__ = "0.1.0"
