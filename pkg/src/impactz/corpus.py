"""Corpus ingestion, ranking, and uncited-item sensitivity reports.

Input format is two CSV files mirroring the publication/citation split:

* publications: header ``journal,year,pubs``
* citations:    header ``journal,citing_year,cited_year,count``

Duplicate keys are hard errors, not summed: bibliometric extracts
commonly double-count, and failing loudly beats silent aggregation.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field

from .consistency import (
    PairScenario,
    VerdictTag,
    check_z_consistency,
    min_reversal_k,
)
from .core import (
    IndicatorSpec,
    Injection,
    JournalData,
    ZeroDenominator,
    compute,
    denominator_years,
)
from .ratio import Ratio


class ParseError(ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(ValueError):
    pass


@dataclass(frozen=True)
class Corpus:
    journals: dict[str, JournalData]
    provenance: str = ""

    def __post_init__(self):
        for journal_id in self.journals:
            if not journal_id:
                raise ValidationError("empty journal id")


@dataclass(frozen=True)
class RankingEntry:
    journal_id: str
    value: Ratio
    rank: int
    tied_with: tuple[str, ...] = ()


@dataclass(frozen=True)
class Ranking:
    """Ranked entries plus journals skipped in non-strict mode."""

    entries: tuple[RankingEntry, ...]
    skipped: tuple[tuple[str, str], ...] = ()  # (journal_id, reason)


@dataclass(frozen=True)
class SensitivityRow:
    """How fragile an adjacent strict pair is to uncited additions.

    ``per_year_min_k`` maps each denominator year to the smallest common
    uncited injection that flips the pair, or None within k_max.
    """

    upper_id: str
    lower_id: str
    per_year_min_k: dict[int, int | None]
    k_max: int


def _read_rows(source, expected_header: list[str]):
    """Yield (line_number, row) from a path, file object, or CSV text."""
    if hasattr(source, "read"):
        text = source.read()
    elif isinstance(source, (str, os.PathLike)) and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = source
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        return
    if [h.strip() for h in header] != expected_header:
        raise ParseError(1, f"expected header {','.join(expected_header)}, "
                            f"got {','.join(header)}")
    for line, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(expected_header):
            raise ParseError(line, f"expected {len(expected_header)} fields, "
                                   f"got {len(row)}")
        yield line, [cell.strip() for cell in row]


def _int_field(line: int, name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ParseError(line, f"{name} must be an integer, got {raw!r}") \
            from None


def load_corpus(pubs_source, cits_source, provenance: str = "") -> Corpus:
    """Build a validated Corpus from publication and citation CSVs.

    Journals present in only one file get zero counts for the other side.
    """
    pubs: dict[str, dict[int, int]] = {}
    for line, (journal, year_raw, count_raw) in _read_rows(
            pubs_source, ["journal", "year", "pubs"]):
        year = _int_field(line, "year", year_raw)
        count = _int_field(line, "pubs", count_raw)
        if count < 0:
            raise ValidationError(
                f"line {line}: negative publication count {count}")
        per_journal = pubs.setdefault(journal, {})
        if year in per_journal:
            raise ValidationError(
                f"line {line}: duplicate publication row for "
                f"({journal}, {year})")
        per_journal[year] = count

    cits: dict[str, dict[tuple[int, int], int]] = {}
    for line, (journal, citing_raw, cited_raw, count_raw) in _read_rows(
            cits_source, ["journal", "citing_year", "cited_year", "count"]):
        citing = _int_field(line, "citing_year", citing_raw)
        cited = _int_field(line, "cited_year", cited_raw)
        count = _int_field(line, "count", count_raw)
        if count < 0:
            raise ValidationError(
                f"line {line}: negative citation count {count}")
        if citing < cited:
            raise ValidationError(
                f"line {line}: citing year {citing} precedes cited year "
                f"{cited}")
        per_journal = cits.setdefault(journal, {})
        if (citing, cited) in per_journal:
            raise ValidationError(
                f"line {line}: duplicate citation row for "
                f"({journal}, {citing}, {cited})")
        per_journal[(citing, cited)] = count

    journals = {
        journal_id: JournalData(journal_id, pubs.get(journal_id, {}),
                                cits.get(journal_id, {}))
        for journal_id in sorted(set(pubs) | set(cits))
    }
    return Corpus(journals, provenance)


def corpus_to_json(corpus: Corpus) -> str:
    """Canonical JSON: sorted keys, stable layout, byte-stable round-trip."""
    doc = {"journals": {}}
    for journal_id in sorted(corpus.journals):
        data = corpus.journals[journal_id]
        doc["journals"][journal_id] = {
            "pubs": {str(year): data.pubs[year]
                     for year in sorted(data.pubs)},
            "cits": [{"citing": citing, "cited": cited,
                      "count": data.cits[(citing, cited)]}
                     for citing, cited in sorted(data.cits)],
        }
    return json.dumps(doc, indent=2) + "\n"


def corpus_from_json(text: str, provenance: str = "") -> Corpus:
    doc = json.loads(text)
    journals = {}
    for journal_id, entry in doc.get("journals", {}).items():
        pubs = {int(year): count for year, count in entry["pubs"].items()}
        cits = {(c["citing"], c["cited"]): c["count"] for c in entry["cits"]}
        journals[journal_id] = JournalData(journal_id, pubs, cits)
    return Corpus(journals, provenance)


def rank(corpus: Corpus, spec: IndicatorSpec, *, strict: bool = True
         ) -> Ranking:
    """Rank journals by indicator value, descending, competition style.

    Equal values share a rank (1, 1, 3); within a tie, display order is
    lexicographic by journal id.  In strict mode an uncomputable journal
    raises; otherwise it is skipped and reported.
    """
    values: list[tuple[str, Ratio]] = []
    skipped: list[tuple[str, str]] = []
    for journal_id in sorted(corpus.journals):
        try:
            values.append((journal_id, compute(corpus.journals[journal_id],
                                               spec)))
        except ZeroDenominator as exc:
            if strict:
                raise
            skipped.append((journal_id, str(exc)))
    values.sort(key=lambda item: item[1], reverse=True)

    entries: list[RankingEntry] = []
    for index, (journal_id, value) in enumerate(values):
        if entries and value == entries[-1].value:
            current_rank = entries[-1].rank
        else:
            current_rank = index + 1
        tied = tuple(other for other, v in values
                     if v == value and other != journal_id)
        entries.append(RankingEntry(journal_id, value, current_rank, tied))
    return Ranking(tuple(entries), tuple(skipped))


def sensitivity_report(corpus: Corpus, spec: IndicatorSpec, k_max: int
                       ) -> list[SensitivityRow]:
    """Per adjacent strictly-ordered pair, the minimal common uncited
    injection (by denominator year) that would flip the ranking.

    Every reported minimum is re-verified as an actual reversal.
    """
    ranking = rank(corpus, spec)
    rows: list[SensitivityRow] = []
    for upper, lower in zip(ranking.entries, ranking.entries[1:]):
        if upper.value == lower.value:
            continue
        per_year: dict[int, int | None] = {}
        for year in denominator_years(spec):
            k = min_reversal_k(corpus.journals[upper.journal_id],
                               corpus.journals[lower.journal_id],
                               spec, year, k_max)
            if k is not None:
                verdict = check_z_consistency(PairScenario(
                    corpus.journals[upper.journal_id],
                    corpus.journals[lower.journal_id],
                    spec, Injection.single(year, k)))
                assert verdict.tag is VerdictTag.REVERSED
            per_year[year] = k
        rows.append(SensitivityRow(upper.journal_id, lower.journal_id,
                                   per_year, k_max))
    return rows
