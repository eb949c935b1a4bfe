"""Z-consistency verdicts, minimal reversing injections, and a
counterexample miner.

Z-consistency: if indicator I ranks journal J strictly below J', adding
the same number of uncited publications to both must not reverse the
strict ordering.  All three indicator kinds violate it; this module
decides concrete cases exactly and searches bounded integer spaces for
fresh violations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from enum import Enum
from itertools import product
from typing import Iterator

from .core import (
    IndicatorKind,
    IndicatorSpec,
    Injection,
    JournalData,
    ZeroDenominator,
    apply_injection,
    compute,
    denominator_years,
)
from .ratio import Ratio


class PreconditionViolated(ValueError):
    """The operation's input contract does not hold (e.g. no strict
    ordering, or publication vectors required to be equal differ)."""


class InvalidTargetYear(ValueError):
    """The chosen injection year cannot affect the indicator's
    denominator."""


class VerdictTag(Enum):
    PRESERVED = "preserved"
    REVERSED = "reversed"
    TIE_BEFORE = "tie-before"
    TIE_AFTER = "tie-after"


@dataclass(frozen=True)
class PairScenario:
    """Two journals, one indicator, one injection applied to BOTH."""

    left: JournalData
    right: JournalData
    spec: IndicatorSpec
    injection: Injection


@dataclass(frozen=True)
class Verdict:
    tag: VerdictTag
    before: tuple[Ratio, Ratio]
    after: tuple[Ratio, Ratio]


@dataclass(frozen=True)
class ReversalWitness:
    """A concrete Z-consistency violation; self-checking by design."""

    scenario: PairScenario
    verdict: Verdict

    def verify(self) -> bool:
        """Recompute the scenario from raw data and compare verdicts."""
        return check_z_consistency(self.scenario) == self.verdict


@dataclass(frozen=True)
class SearchBounds:
    """Finite box for the counterexample miner.

    Publications range over 1..pub_max per denominator year, citations
    over 0..cit_max per window year, injections over single years with
    1..k_max added publications.  ``target_year`` fixes the year layout;
    it only shifts labels, never values.
    """

    n: int
    pub_max: int
    cit_max: int
    k_max: int
    target_year: int = 2000
    s: int = 0

    def __post_init__(self):
        if min(self.n, self.pub_max, self.k_max) < 1 or self.cit_max < 1:
            raise ValueError("all bounds must be >= 1")


def _evaluate(data: JournalData, spec: IndicatorSpec, phase: str) -> Ratio:
    try:
        return compute(data, spec)
    except ZeroDenominator as exc:
        raise ZeroDenominator(
            f"{exc} ({phase} injection)", year=exc.year,
            journal=data.journal_id) from exc


def check_z_consistency(scenario: PairScenario) -> Verdict:
    """Decide whether the injection preserves, ties, or reverses the
    pair's ordering.  Comparisons are exact; there is no tolerance."""
    spec = scenario.spec
    before = (_evaluate(scenario.left, spec, "before"),
              _evaluate(scenario.right, spec, "before"))
    after = (_evaluate(apply_injection(scenario.left, scenario.injection),
                       spec, "after"),
             _evaluate(apply_injection(scenario.right, scenario.injection),
                       spec, "after"))
    if before[0] == before[1]:
        tag = VerdictTag.TIE_BEFORE
    elif after[0] == after[1]:
        tag = VerdictTag.TIE_AFTER
    elif (before[0] < before[1]) != (after[0] < after[1]):
        tag = VerdictTag.REVERSED
    else:
        tag = VerdictTag.PRESERVED
    return Verdict(tag, before, after)


def min_reversal_k(left: JournalData, right: JournalData,
                   spec: IndicatorSpec, target_year: int,
                   k_max: int) -> int | None:
    """Smallest k in 1..k_max whose injection at ``target_year`` (into
    both journals) reverses the pair's strict ordering; None if none."""
    if target_year not in denominator_years(spec):
        raise InvalidTargetYear(
            f"year {target_year} is not a denominator year for "
            f"{spec.kind.value} n={spec.n} at {spec.target_year}")
    before_left = compute(left, spec)
    before_right = compute(right, spec)
    if before_left == before_right:
        raise PreconditionViolated(
            f"no strict ordering between {left.journal_id} and "
            f"{right.journal_id} before injection")
    for k in range(1, k_max + 1):
        scenario = PairScenario(left, right, spec,
                                Injection.single(target_year, k))
        if check_z_consistency(scenario).tag is VerdictTag.REVERSED:
            return k
    return None


def equal_pubs_preserved(left: JournalData, right: JournalData,
                         spec: IndicatorSpec, injection: Injection) -> Verdict:
    """Check the equal-publications argument for the ratio-of-averages
    indicator: with identical per-year publication vectors, a common
    uncited injection can never reverse a strict ordering.

    The non-reversal is asserted as a checked postcondition.
    """
    if spec.kind is not IndicatorKind.SYNC_ROA:
        raise PreconditionViolated(
            f"equal-pubs preservation applies to {IndicatorKind.SYNC_ROA}, "
            f"got {spec.kind}")
    for year in denominator_years(spec):
        if left.pubs.get(year, 0) != right.pubs.get(year, 0):
            raise PreconditionViolated(
                f"publication vectors differ at year {year}: "
                f"{left.pubs.get(year, 0)} vs {right.pubs.get(year, 0)}")
    verdict = check_z_consistency(
        PairScenario(left, right, spec, injection))
    if verdict.tag is VerdictTag.TIE_BEFORE:
        raise PreconditionViolated(
            f"no strict ordering between {left.journal_id} and "
            f"{right.journal_id} before injection")
    assert verdict.tag is not VerdictTag.REVERSED, \
        "equal publication vectors cannot produce a reversal"
    return verdict


# --- bounded exhaustive miner -------------------------------------------

def mine_counterexamples(kind: IndicatorKind, bounds: SearchBounds,
                         limit: int, *,
                         equal_pubs: bool = False) -> list[ReversalWitness]:
    """Exhaustively enumerate integer publication/citation assignments
    within ``bounds`` and return up to ``limit`` reversal witnesses.

    Output order is canonical: lexicographic over (left pubs, left cits,
    right pubs, right cits, injection year, k), with vectors indexed by
    ascending year.  Mirrored duplicates are pruned by only emitting
    scenarios whose before-ordering is left < right.  Every witness is
    re-verified through :func:`check_z_consistency` before it is emitted.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    out: list[ReversalWitness] = []
    for scenario in _iter_reversing_scenarios(kind, bounds, equal_pubs):
        verdict = check_z_consistency(scenario)
        assert verdict.tag is VerdictTag.REVERSED, "miner candidate failed self-check"
        out.append(ReversalWitness(scenario, verdict))
        if len(out) >= limit:
            break
    return out


def _iter_reversing_scenarios(kind: IndicatorKind, bounds: SearchBounds,
                              equal_pubs: bool) -> Iterator[PairScenario]:
    if kind is IndicatorKind.SYNC_AOR:
        yield from _iter_aor(bounds, equal_pubs)
    else:
        yield from _iter_totals_based(kind, bounds, equal_pubs)


def _vectors_with_sum(length: int, cap: int, lo: int, hi: int
                      ) -> Iterator[tuple[int, ...]]:
    """All vectors in [0..cap]^length with component sum in [lo, hi],
    in lexicographic order."""
    def rec(prefix: list[int], remaining: int, total: int):
        if remaining == 0:
            if lo <= total <= hi:
                yield tuple(prefix)
            return
        for v in range(cap + 1):
            t = total + v
            if t > hi:
                break
            if t + cap * (remaining - 1) < lo:
                continue
            prefix.append(v)
            yield from rec(prefix, remaining - 1, t)
            prefix.pop()
    yield from rec([], length, 0)


def _iter_totals_based(kind: IndicatorKind, bounds: SearchBounds,
                       equal_pubs: bool) -> Iterator[PairScenario]:
    """Miner for the two totals-driven kinds (sync RoA, diachronous).

    Both indicators equal (total citations) / (total publications), so a
    reversal with before-ordering left < right requires exactly:
    CL*PR < CR*PL (strict before), CL > CR (the flip direction), and the
    crossover k* = floor((CR*PL - CL*PR) / (CL - CR)) + 1 within k_max.
    Those conditions prune whole subtrees without evaluating indicators.
    """
    n = bounds.n
    year = bounds.target_year
    diachronous = kind is IndicatorKind.DIACHRONOUS
    if diachronous:
        # one cohort year in the denominator; citations per citing year
        pub_years = (year,)
        cit_keys = tuple((year + bounds.s + i, year) for i in range(n))
        inj_years = (year,)
        pub_vecs = [(p,) for p in range(1, bounds.pub_max + 1)]
    else:
        pub_years = tuple(year - i for i in range(n, 0, -1))
        cit_keys = tuple((year, y) for y in pub_years)
        inj_years = pub_years
        pub_vecs = list(product(range(1, bounds.pub_max + 1), repeat=n))
    spec = IndicatorSpec(kind, n, year, bounds.s)

    def journal(name: str, pubs_vec, cits_vec) -> JournalData:
        return JournalData(name, dict(zip(pub_years, pubs_vec)),
                           dict(zip(cit_keys, cits_vec)))

    for lp in pub_vecs:
        pl = sum(lp)
        for lc in product(range(bounds.cit_max + 1), repeat=len(cit_keys)):
            cl = sum(lc)
            if cl == 0:
                continue  # a zero-citation left can never overtake
            for rp in ([lp] if equal_pubs else pub_vecs):
                pr = sum(rp)
                if pr >= pl:
                    continue  # flip needs the right denominator smaller
                # strict before left < right: cr > cl*pr/pl
                cr_lo = (cl * pr) // pl + 1
                cr_hi = cl - 1  # flip needs cr < cl
                if cr_lo > cr_hi:
                    continue
                for rc in _vectors_with_sum(len(cit_keys), bounds.cit_max,
                                            cr_lo, cr_hi):
                    cr = sum(rc)
                    # crossover: k*(cl - cr) > cr*pl - cl*pr
                    k_star = (cr * pl - cl * pr) // (cl - cr) + 1
                    if k_star > bounds.k_max:
                        continue
                    left = journal("L", lp, lc)
                    right = journal("R", rp, rc)
                    for inj_year in inj_years:
                        for k in range(k_star, bounds.k_max + 1):
                            yield PairScenario(
                                left, right, spec,
                                Injection.single(inj_year, k))


def _iter_aor(bounds: SearchBounds, equal_pubs: bool
              ) -> Iterator[PairScenario]:
    """Miner for the average-of-ratios kind.

    The value is placement-sensitive, so the search enumerates full
    assignments; per-journal base values and per-year injection deltas
    are precomputed so the inner loop is pure comparisons.
    """
    n = bounds.n
    year = bounds.target_year
    pub_years = tuple(year - i for i in range(n, 0, -1))
    spec = IndicatorSpec(IndicatorKind.SYNC_AOR, n, year)
    pub_vecs = list(product(range(1, bounds.pub_max + 1), repeat=n))
    cit_vecs = list(product(range(bounds.cit_max + 1), repeat=n))

    # delta(p, c, k): change in c/p when k uncited publications join year p
    delta_cache: dict[tuple[int, int, int], Fraction] = {}

    def delta(p: int, c: int, k: int) -> Fraction:
        key = (p, c, k)
        d = delta_cache.get(key)
        if d is None:
            d = Fraction(c, p + k) - Fraction(c, p)
            delta_cache[key] = d
        return d

    def base(pubs_vec, cits_vec) -> Fraction:
        return Fraction(
            sum(Fraction(c, p) for p, c in zip(pubs_vec, cits_vec)), n)

    def journal(name: str, pubs_vec, cits_vec) -> JournalData:
        return JournalData(name, dict(zip(pub_years, pubs_vec)),
                           {(year, y): c for y, c in zip(pub_years, cits_vec)})

    base_cache: dict[tuple, Fraction] = {}

    def cached_base(pubs_vec, cits_vec) -> Fraction:
        key = (pubs_vec, cits_vec)
        v = base_cache.get(key)
        if v is None:
            v = base(pubs_vec, cits_vec)
            base_cache[key] = v
        return v

    for lp in pub_vecs:
        for lc in cit_vecs:
            vl = cached_base(lp, lc)
            for rp in ([lp] if equal_pubs else pub_vecs):
                for rc in cit_vecs:
                    vr = cached_base(rp, rc)
                    if not vl < vr:
                        continue  # canonical orientation: left < right
                    for j, inj_year in enumerate(pub_years):
                        for k in range(1, bounds.k_max + 1):
                            vl_after = vl + delta(lp[j], lc[j], k) / n
                            vr_after = vr + delta(rp[j], rc[j], k) / n
                            if vl_after > vr_after:
                                yield PairScenario(
                                    journal("L", lp, lc),
                                    journal("R", rp, rc), spec,
                                    Injection.single(inj_year, k))
