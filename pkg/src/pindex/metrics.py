"""Aggregating partitioned per-article earnings into author metrics.

The personal citation total credits each article through the author's
credit fraction instead of the full citation count; the conventional
database total (every coauthor counts everything) is kept alongside as
the "false" total for comparison, as is the Hirsch index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import partition
from .errors import PIndexError, UndefinedMetricError, ValidationError
from .ingest import ArticleRecord
from .partition import PartitionPolicy, PSequence


@dataclass(frozen=True)
class ArticleEarning:
    """One article's resolved credit for the subject author."""

    article_id: str
    citations: int
    author_count: int
    position: int
    fraction: float
    earning: float
    flags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class MetricsReport:
    """All author metrics for one record set, plus the per-article breakdown."""

    n_articles: int
    n_single: int
    c_single: float
    c_total: float
    c_rounded: int
    q: float
    p: float
    p_rounded: int
    c_false: int
    h: int
    earnings: tuple[ArticleEarning, ...]


def round_half_away_from_zero(value: float) -> int:
    """Round to the nearest integer, ties away from zero."""
    if value >= 0:
        return math.floor(value + 0.5)
    return math.ceil(value - 0.5)


def h_index(citations: Iterable[int]) -> int:
    """Largest h such that at least h entries are >= h; 0 for empty input."""
    h = 0
    for i, count in enumerate(sorted(citations, reverse=True)):
        if count >= i + 1:
            h = i + 1
        else:
            break
    return h


def total_citations(earnings: Iterable[ArticleEarning]) -> tuple[float, float, int]:
    """Personal citation total over all earnings.

    Returns ``(c_total, c_single, n_single)`` where ``c_single`` is the
    contribution of single-author articles (credited in full) and
    ``n_single`` counts them.  Summation is exact (fsum), so the result
    holds up for record sets far beyond 10^4 articles.
    """
    all_terms = []
    single_terms = []
    n_single = 0
    for earning in earnings:
        all_terms.append(earning.earning)
        if earning.author_count == 1:
            single_terms.append(earning.earning)
            n_single += 1
    return math.fsum(all_terms), math.fsum(single_terms), n_single


def q_value(c_total: float, n_articles: int) -> float:
    """Personal citations averaged over all listed articles, uncited ones
    included."""
    if n_articles < 1:
        raise UndefinedMetricError("no articles: the citation average is undefined")
    return c_total / n_articles


def p_index(n_articles: int, q: float) -> tuple[float, int]:
    """The index itself: min of productivity and personal impact.

    Returns the real value and its half-away-from-zero rounding.
    """
    p = min(float(n_articles), q)
    return p, round_half_away_from_zero(p)


def false_total(records: Iterable[ArticleRecord]) -> int:
    """Conventional database total: every article's citations in full."""
    return sum(record.citations for record in records)


def _sequence_for(record: ArticleRecord, policy: PartitionPolicy) -> PSequence:
    if record.explicit_partition is not None:
        return partition.explicit_psequence(record.author_count, list(record.explicit_partition))
    if policy.scheme == partition.SCHEME_UNIFORM:
        # The uniform scheme has no p-axis, so per-record x/s overrides do
        # not apply.
        return partition.make_psequence(record.author_count, policy)
    if policy.scheme == partition.SCHEME_EXPLICIT:
        raise ValidationError("policy requires an explicit_partition on every record")
    if record.x_override is None and record.s_override is None:
        return partition.make_psequence(record.author_count, policy)
    s = record.s_override if record.s_override is not None else policy.s
    if record.x_override is not None:
        x = record.x_override
    elif record.author_count == 1:
        x = 0.0
    else:
        x = policy.resolve_x(record.author_count)
    return partition.psequence_at(record.author_count, x, s)


def resolve_earning(record: ArticleRecord, policy: PartitionPolicy) -> ArticleEarning:
    """Credit fraction and earning for one record under ``policy``.

    The byline position picks the rank in the descending sequence unless
    a rank_override says otherwise.  Failures are re-raised with the
    article id attached.
    """
    try:
        seq = _sequence_for(record, policy)
        rank = record.rank_override if record.rank_override is not None else record.author_position
        if not 1 <= rank <= record.author_count:
            raise ValidationError(
                f"rank {rank} outside [1, {record.author_count}]"
            )
        fraction = seq.fractions[rank - 1]
    except PIndexError as exc:
        raise ValidationError(f"article {record.article_id!r}: {exc}") from exc
    return ArticleEarning(
        article_id=record.article_id,
        citations=record.citations,
        author_count=record.author_count,
        position=rank,
        fraction=fraction,
        earning=fraction * record.citations,
        flags=seq.flags,
    )


def build_report(records: Sequence[ArticleRecord], policy: PartitionPolicy) -> MetricsReport:
    """Resolve every record and aggregate the full metrics report.

    Earnings keep the input order.  Raises UndefinedMetricError for an
    empty record set and ValidationError (naming the record) when any
    record cannot be resolved under the policy.
    """
    records = list(records)
    if not records:
        raise UndefinedMetricError("no articles")
    earnings = tuple(resolve_earning(record, policy) for record in records)
    c_total, c_single, n_single = total_citations(earnings)
    n_articles = len(records)
    q = q_value(c_total, n_articles)
    p, p_rounded = p_index(n_articles, q)
    return MetricsReport(
        n_articles=n_articles,
        n_single=n_single,
        c_single=c_single,
        c_total=c_total,
        c_rounded=round_half_away_from_zero(c_total),
        q=q,
        p=p,
        p_rounded=p_rounded,
        c_false=false_total(records),
        h=h_index([record.citations for record in records]),
        earnings=earnings,
    )
