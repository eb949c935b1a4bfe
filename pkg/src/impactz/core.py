"""Publication-citation data model and exact impact-factor computations.

Three indicator variants over a journal's publication-citation matrix:

* synchronous ratio-of-averages (the classical Garfield impact factor
  when the window is two years),
* synchronous average-of-ratios (per-year citation rates, then averaged),
* diachronous (citations accrued over successive years to one cohort).

All values are exact :class:`~impactz.ratio.Ratio` fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .ratio import Ratio

Year = int


class ZeroDenominator(ValueError):
    """An indicator's denominator is zero for the requested window.

    Raised explicitly rather than defaulting to 0 or infinity; a silently
    defaulted value would corrupt rankings.
    """

    def __init__(self, message: str, *, year: Year | None = None,
                 journal: str | None = None):
        super().__init__(message)
        self.year = year
        self.journal = journal


@dataclass(frozen=True)
class JournalData:
    """Per-journal publication and citation counts.

    ``pubs`` maps publication year to article count; ``cits`` maps
    (citing year, cited year) to citation count.  Absent keys mean zero.
    Citations must not flow backwards in time (citing >= cited; equality
    covers same-year citation).
    """

    journal_id: str
    pubs: Mapping[Year, int] = field(default_factory=dict)
    cits: Mapping[tuple[Year, Year], int] = field(default_factory=dict)

    def __post_init__(self):
        clean_pubs: dict[Year, int] = {}
        for year, count in self.pubs.items():
            if count < 0:
                raise ValueError(
                    f"{self.journal_id}: negative publication count "
                    f"{count} in year {year}")
            if count:
                clean_pubs[int(year)] = int(count)
        clean_cits: dict[tuple[Year, Year], int] = {}
        for (citing, cited), count in self.cits.items():
            if citing < cited:
                raise ValueError(
                    f"{self.journal_id}: citation from {citing} to a later "
                    f"year {cited} is impossible")
            if count < 0:
                raise ValueError(
                    f"{self.journal_id}: negative citation count {count} "
                    f"for ({citing}, {cited})")
            if count:
                clean_cits[(int(citing), int(cited))] = int(count)
        object.__setattr__(self, "pubs", clean_pubs)
        object.__setattr__(self, "cits", clean_cits)


class IndicatorKind(Enum):
    SYNC_ROA = "sync-roa"
    SYNC_AOR = "sync-aor"
    DIACHRONOUS = "diachronous"


@dataclass(frozen=True)
class IndicatorSpec:
    """Which indicator to compute: kind, window length n, target year.

    ``s`` selects whether the diachronous window includes the publication
    year (s=0) or starts the year after (s=1); it is normalized to 0 for
    the synchronous kinds.
    """

    kind: IndicatorKind
    n: int
    target_year: Year
    s: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"window length must be >= 1, got {self.n}")
        if self.s not in (0, 1):
            raise ValueError(f"s must be 0 or 1, got {self.s}")
        if self.kind is not IndicatorKind.DIACHRONOUS and self.s != 0:
            object.__setattr__(self, "s", 0)


@dataclass(frozen=True)
class Injection:
    """Uncited publications to add: a list of (year, count) pairs.

    Duplicate years are allowed and sum.  Counts are strictly positive;
    the added publications receive no citations.
    """

    additions: tuple[tuple[Year, int], ...]

    def __init__(self, additions: Iterable[tuple[Year, int]]):
        object.__setattr__(self, "additions", tuple(
            (int(y), int(k)) for y, k in additions))
        for year, k in self.additions:
            if k <= 0:
                raise ValueError(f"injection count must be > 0, got {k} "
                                 f"at year {year}")

    @classmethod
    def single(cls, year: Year, k: int) -> "Injection":
        return cls([(year, k)])

    def per_year(self) -> dict[Year, int]:
        totals: dict[Year, int] = {}
        for year, k in self.additions:
            totals[year] = totals.get(year, 0) + k
        return totals

    def total(self) -> int:
        return sum(k for _, k in self.additions)


def pub_count(data: JournalData, year: Year) -> int:
    return data.pubs.get(year, 0)


def cit_count(data: JournalData, citing: Year, cited: Year) -> int:
    return data.cits.get((citing, cited), 0)


def sync_if_roa(data: JournalData, year: Year, n: int) -> Ratio:
    """Synchronous n-year impact factor, ratio-of-averages form.

    Total citations received in ``year`` to the previous n years, divided
    by the total publications of those years.
    """
    if n < 1:
        raise ValueError(f"window length must be >= 1, got {n}")
    cit_total = sum(cit_count(data, year, year - i) for i in range(1, n + 1))
    pub_total = sum(pub_count(data, year - i) for i in range(1, n + 1))
    if pub_total == 0:
        raise ZeroDenominator(
            f"{data.journal_id}: no publications in window "
            f"{year - n}..{year - 1}", journal=data.journal_id)
    return Ratio(cit_total, pub_total)


def sync_if_aor(data: JournalData, year: Year, n: int) -> Ratio:
    """Synchronous n-year impact factor, average-of-ratios form.

    Mean of the per-year citation/publication ratios; undefined as soon
    as any single window year has zero publications.
    """
    if n < 1:
        raise ValueError(f"window length must be >= 1, got {n}")
    total = Fraction(0)
    for i in range(1, n + 1):
        pubs = pub_count(data, year - i)
        if pubs == 0:
            raise ZeroDenominator(
                f"{data.journal_id}: no publications in year {year - i}",
                year=year - i, journal=data.journal_id)
        total += Fraction(cit_count(data, year, year - i), pubs)
    return Ratio(total / n)


def diachronous_imp(data: JournalData, year: Year, n: int, s: int = 0) -> Ratio:
    """Diachronous n-year impact: citations accrued by the ``year`` cohort.

    Sums citations from years year+s .. year+s+n-1 to publications of
    ``year`` and divides by that year's publication count.
    """
    if n < 1:
        raise ValueError(f"window length must be >= 1, got {n}")
    if s not in (0, 1):
        raise ValueError(f"s must be 0 or 1, got {s}")
    pubs = pub_count(data, year)
    if pubs == 0:
        raise ZeroDenominator(
            f"{data.journal_id}: no publications in year {year}",
            year=year, journal=data.journal_id)
    cit_total = sum(cit_count(data, year + i, year)
                    for i in range(s, s + n))
    return Ratio(cit_total, pubs)


def apply_injection(data: JournalData, injection: Injection) -> JournalData:
    """Return a copy of ``data`` with uncited publications added.

    Citations are untouched; the input value is not modified.
    """
    pubs = dict(data.pubs)
    for year, k in injection.per_year().items():
        pubs[year] = pubs.get(year, 0) + k
    return JournalData(data.journal_id, pubs, dict(data.cits))


def compute(data: JournalData, spec: IndicatorSpec) -> Ratio:
    """Dispatch to the kind-specific indicator."""
    if spec.kind is IndicatorKind.SYNC_ROA:
        return sync_if_roa(data, spec.target_year, spec.n)
    if spec.kind is IndicatorKind.SYNC_AOR:
        return sync_if_aor(data, spec.target_year, spec.n)
    return diachronous_imp(data, spec.target_year, spec.n, spec.s)


def denominator_years(spec: IndicatorSpec) -> tuple[Year, ...]:
    """Years whose publication counts enter the indicator's denominator.

    Ascending order: the window years Y-n..Y-1 for the synchronous kinds,
    just Y itself for the diachronous kind.
    """
    if spec.kind is IndicatorKind.DIACHRONOUS:
        return (spec.target_year,)
    return tuple(spec.target_year - i for i in range(spec.n, 0, -1))
