"""Fuzzy assessment of player groups.

A group of scores is classified into five linguistic labels (F, D, C, B, A),
turned into a membership vector of label frequencies, and reduced to the
centre of gravity of the membership bar graph. Groups are compared on that
centroid.

All arithmetic on counts, memberships and centroids is exact (``Fraction``);
decimal rounding is left to the reporting layer.
"""
from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Real = Union[Fraction, float]

# Centroid equality tolerance, used only when a centroid carries floats.
EPSILON = 1e-9

HALF = Fraction(1, 2)
MIDPOINT = Fraction(5, 2)


class EmptyGroupError(ValueError):
    def __init__(self, message: str = "empty group") -> None:
        super().__init__(message)


class BandSchemeError(ValueError):
    """Raised for band layouts that do not partition 0..100%.

    ``labels`` names the band(s) at the offending boundary so that callers
    (the band-config parser) can point at the right input line.
    """

    def __init__(self, message: str, labels: tuple[Label, ...] = ()) -> None:
        super().__init__(message)
        self.labels = labels


_PERCENT_RE = re.compile(r"^(\d{1,3})(?:\.(\d{1,2}))?$", re.ASCII)


@functools.total_ordering
@dataclass(frozen=True)
class Percentage:
    """A score in [0, 100]%, held as integer hundredths of a percent."""

    hundredths: int

    def __post_init__(self) -> None:
        if isinstance(self.hundredths, bool) or not isinstance(self.hundredths, int):
            raise TypeError("Percentage.hundredths must be an int")
        if not 0 <= self.hundredths <= 10000:
            raise ValueError(f"percentage out of range: {self.hundredths / 100}")

    @classmethod
    def parse(cls, text: str) -> Percentage:
        """Parse decimal text such as ``"62.67"``, ``"46"`` or ``"46.0"``."""
        m = _PERCENT_RE.match(text)
        if m is None:
            raise ValueError(f"not a percentage with at most 2 decimals: {text!r}")
        whole, frac = m.group(1), m.group(2) or ""
        return cls(int(whole) * 100 + int(frac.ljust(2, "0")))

    @classmethod
    def from_ratio(cls, ratio: Fraction) -> Percentage:
        """Convert a ratio in [0, 1] to a percentage, rounding half up to hundredths."""
        scaled = Fraction(ratio) * 10000
        return cls(int(scaled + HALF) if scaled >= 0 else -int(-scaled + HALF))

    @property
    def value(self) -> Fraction:
        """The percentage as an exact number, e.g. ``Fraction(6267, 100)``."""
        return Fraction(self.hundredths, 100)

    def __str__(self) -> str:
        return f"{self.hundredths // 100}.{self.hundredths % 100:02d}"

    def __float__(self) -> float:
        return self.hundredths / 100

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, Percentage):
            return NotImplemented
        return self.hundredths < other.hundredths


def pct(text: str) -> Percentage:
    """Shorthand for :meth:`Percentage.parse`."""
    return Percentage.parse(text)


class Label(enum.IntEnum):
    F = 1
    D = 2
    C = 3
    B = 4
    A = 5


LABELS: tuple[Label, ...] = tuple(Label)  # F, D, C, B, A


@dataclass(frozen=True)
class Band:
    label: Label
    lower: Percentage
    lower_inclusive: bool
    upper: Percentage
    upper_inclusive: bool

    def contains(self, p: Percentage) -> bool:
        lo, hi, v = self.lower.hundredths, self.upper.hundredths, p.hundredths
        above = v > lo or (self.lower_inclusive and v == lo)
        below = v < hi or (self.upper_inclusive and v == hi)
        return above and below


@dataclass(frozen=True)
class BandScheme:
    """Five bands, ordered F..A, that partition [0, 100]% without gaps or overlaps."""

    bands: tuple[Band, ...]

    def __post_init__(self) -> None:
        bands = tuple(self.bands)
        object.__setattr__(self, "bands", bands)
        if len(bands) != 5:
            raise BandSchemeError(f"expected 5 bands, got {len(bands)}")
        if tuple(b.label for b in bands) != LABELS:
            raise BandSchemeError("bands must be ordered F, D, C, B, A with each label once")

        first, last = bands[0], bands[-1]
        if first.lower.hundredths != 0 or not first.lower_inclusive:
            raise BandSchemeError("band F must start at 0 inclusive", (first.label,))
        if last.upper.hundredths != 10000 or not last.upper_inclusive:
            raise BandSchemeError("band A must end at 100 inclusive", (last.label,))

        for b in bands:
            lo, hi = b.lower.hundredths, b.upper.hundredths
            if lo > hi or (lo == hi and not (b.lower_inclusive and b.upper_inclusive)):
                raise BandSchemeError(f"band {b.label.name} is empty", (b.label,))

        for below, above in zip(bands, bands[1:]):
            where = f"{below.label.name}/{above.label.name} boundary"
            labels = (below.label, above.label)
            if below.upper < above.lower:
                raise BandSchemeError(
                    f"gap at {where}: ({below.upper}, {above.lower}) is not covered", labels
                )
            if below.upper > above.lower:
                raise BandSchemeError(
                    f"overlap at {where}: [{above.lower}, {below.upper}] is covered twice", labels
                )
            if below.upper_inclusive and above.lower_inclusive:
                raise BandSchemeError(f"overlap at {where}: {below.upper} is in both bands", labels)
            if not (below.upper_inclusive or above.lower_inclusive):
                raise BandSchemeError(f"gap at {where}: {below.upper} is in neither band", labels)

    def band(self, label: Label) -> Band:
        return self.bands[int(label) - 1]


def default_bands() -> BandScheme:
    """Match-point bands: A > 65, 55 < B <= 65, 48 < C <= 55, 40 <= D <= 48, F < 40."""
    p = Percentage.parse
    return BandScheme((
        Band(Label.F, p("0"), True, p("40"), False),
        Band(Label.D, p("40"), True, p("48"), True),
        Band(Label.C, p("48"), False, p("55"), True),
        Band(Label.B, p("55"), False, p("65"), True),
        Band(Label.A, p("65"), False, p("100"), True),
    ))


DEFAULT_BANDS = default_bands()


def classify(p: Percentage, scheme: BandScheme = DEFAULT_BANDS) -> Label:
    for band in scheme.bands:
        if band.contains(p):
            return band.label
    raise AssertionError(f"{p} not covered by band scheme")  # unreachable for a valid scheme


@dataclass(frozen=True)
class LabelCounts:
    n_F: int = 0
    n_D: int = 0
    n_C: int = 0
    n_B: int = 0
    n_A: int = 0

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.as_tuple()):
            raise ValueError("label counts must be non-negative")

    @classmethod
    def from_tuple(cls, counts: Sequence[int]) -> LabelCounts:
        """Build from five counts in F, D, C, B, A order."""
        if len(counts) != 5:
            raise ValueError("need exactly five counts")
        return cls(*counts)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        """Counts in F, D, C, B, A order."""
        return (self.n_F, self.n_D, self.n_C, self.n_B, self.n_A)

    def __getitem__(self, label: Label) -> int:
        return self.as_tuple()[int(label) - 1]

    @property
    def n(self) -> int:
        return sum(self.as_tuple())


def counts_from_scores(
    scores: Iterable[Percentage], scheme: BandScheme = DEFAULT_BANDS
) -> LabelCounts:
    tally = [0] * 5
    for s in scores:
        tally[int(classify(s, scheme)) - 1] += 1
    if not any(tally):
        raise EmptyGroupError()
    return LabelCounts.from_tuple(tally)


@dataclass(frozen=True)
class MembershipVector:
    """Label frequencies ``(m(F), m(D), m(C), m(B), m(A))``; sums to exactly 1."""

    y: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        y = tuple(Fraction(v) for v in self.y)
        object.__setattr__(self, "y", y)
        if len(y) != 5:
            raise ValueError("membership vector needs five entries")
        if any(v < 0 or v > 1 for v in y):
            raise ValueError("membership degrees must lie in [0, 1]")
        if sum(y) != 1:
            raise ValueError(f"membership degrees sum to {sum(y)}, not 1")

    def __getitem__(self, label: Label) -> Fraction:
        return self.y[int(label) - 1]

    def __iter__(self):
        return iter(self.y)


def membership(counts: LabelCounts) -> MembershipVector:
    n = counts.n
    if n == 0:
        raise EmptyGroupError()
    return MembershipVector(tuple(Fraction(c, n) for c in counts.as_tuple()))


def _close(a: Real, b: Real) -> bool:
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return abs(float(a) - float(b)) <= EPSILON


@dataclass(frozen=True)
class Centroid:
    """Centre of gravity of a membership bar graph.

    Exact (``Fraction``) when derived from counts; floats are accepted for
    centroids read back from decimal reports, and then compare with a 1e-9
    tolerance.
    """

    x_c: Real
    y_c: Real

    def __post_init__(self) -> None:
        tol = 0 if isinstance(self.x_c, Fraction) and isinstance(self.y_c, Fraction) else EPSILON
        if not Fraction(1, 2) - tol <= self.x_c <= Fraction(9, 2) + tol:
            raise ValueError(f"x_c = {self.x_c} outside [0.5, 4.5]")
        if not Fraction(1, 10) - tol <= self.y_c <= Fraction(1, 2) + tol:
            raise ValueError(f"y_c = {self.y_c} outside [0.1, 0.5]")

    @property
    def exact(self) -> bool:
        return isinstance(self.x_c, Fraction) and isinstance(self.y_c, Fraction)


def centroid(v: MembershipVector) -> Centroid:
    # Bar i covers [i-1, i) at height y_i: its x-moment is (2i-1)/2 * y_i, its y-moment y_i**2 / 2,
    # and the total area is 1.
    x_c = HALF * sum((2 * i - 1) * y for i, y in enumerate(v.y, start=1))
    y_c = HALF * sum(y * y for y in v.y)
    return Centroid(x_c, y_c)


def mean_percentage(scores: Iterable[Percentage]) -> Fraction:
    """Exact arithmetic mean of the scores, in percent."""
    scores = list(scores)
    if not scores:
        raise EmptyGroupError()
    return Fraction(sum(s.hundredths for s in scores), 100 * len(scores))


@dataclass(frozen=True)
class GroupAssessment:
    group_id: str
    counts: LabelCounts
    membership: MembershipVector
    centroid: Centroid
    mean: Fraction


def assess_group(
    group_id: str, scores: Iterable[Percentage], scheme: BandScheme = DEFAULT_BANDS
) -> GroupAssessment:
    scores = list(scores)
    counts = counts_from_scores(scores, scheme)
    m = membership(counts)
    return GroupAssessment(group_id, counts, m, centroid(m), mean_percentage(scores))


class Rule(str, enum.Enum):
    HIGHER_XC = "higher_xc"
    HIGHER_YC = "higher_yc_at_xc_ge_2.5"
    LOWER_YC = "lower_yc_at_xc_lt_2.5"
    TIE = "exact_tie"


def preference(a: Centroid, b: Centroid) -> tuple[int, Rule]:
    """Compare two centroids: +1 if ``a`` is the better group, -1 if ``b``, 0 on a tie.

    The higher x_c wins. At equal x_c the higher y_c wins when x_c >= 2.5 and
    the lower y_c wins when x_c < 2.5.
    """
    if not _close(a.x_c, b.x_c):
        return (1 if a.x_c > b.x_c else -1), Rule.HIGHER_XC
    if _close(a.y_c, b.y_c):
        return 0, Rule.TIE
    x = a.x_c if a.exact and b.exact else (float(a.x_c) + float(b.x_c)) / 2
    if x >= MIDPOINT or _close(x, MIDPOINT):
        return (1 if a.y_c > b.y_c else -1), Rule.HIGHER_YC
    return (1 if a.y_c < b.y_c else -1), Rule.LOWER_YC


@dataclass(frozen=True)
class Decision:
    """Outcome between two groups adjacent in a ranking; ``upper`` is ranked first."""

    upper: str
    lower: str
    rule: Rule


@dataclass(frozen=True)
class ComparisonOutcome:
    ordering: tuple[tuple[str, ...], ...]
    decisions: tuple[Decision, ...]

    @property
    def best(self) -> tuple[str, ...]:
        return self.ordering[0]


def compare(a: GroupAssessment, b: GroupAssessment) -> ComparisonOutcome:
    sign, rule = preference(a.centroid, b.centroid)
    if sign > 0:
        return ComparisonOutcome(((a.group_id,), (b.group_id,)), (Decision(a.group_id, b.group_id, rule),))
    if sign < 0:
        return ComparisonOutcome(((b.group_id,), (a.group_id,)), (Decision(b.group_id, a.group_id, rule),))
    return ComparisonOutcome(((a.group_id, b.group_id),), (Decision(a.group_id, b.group_id, rule),))


def rank_groups(groups: Sequence[GroupAssessment]) -> ComparisonOutcome:
    """Rank groups best first; ties keep input order and share a tie class."""
    if not groups:
        raise EmptyGroupError("no groups to rank")
    ranked = sorted(
        groups,
        key=functools.cmp_to_key(lambda a, b: -preference(a.centroid, b.centroid)[0]),
    )
    ordering: list[list[str]] = [[ranked[0].group_id]]
    decisions = []
    for prev, cur in zip(ranked, ranked[1:]):
        sign, rule = preference(prev.centroid, cur.centroid)
        decisions.append(Decision(prev.group_id, cur.group_id, rule))
        if sign == 0:
            ordering[-1].append(cur.group_id)
        else:
            ordering.append([cur.group_id])
    return ComparisonOutcome(tuple(tuple(c) for c in ordering), tuple(decisions))


def rank_by_mean(groups: Sequence[GroupAssessment]) -> tuple[tuple[str, ...], ...]:
    """Rank groups by mean percentage, best first; equal means share a tie class."""
    if not groups:
        raise EmptyGroupError("no groups to rank")
    ranked = sorted(groups, key=lambda g: -g.mean)
    ordering: list[list[str]] = [[ranked[0].group_id]]
    for prev, cur in zip(ranked, ranked[1:]):
        if cur.mean == prev.mean:
            ordering[-1].append(cur.group_id)
        else:
            ordering.append([cur.group_id])
    return tuple(tuple(c) for c in ordering)
