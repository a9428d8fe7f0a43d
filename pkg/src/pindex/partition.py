"""Turning an author count and a policy into a descending credit partition.

A p-sequence is the list of per-author credit fractions for one article:
the basis values at the policy's p-axis, sorted descending and assigned
to the byline in contribution order.  Fractions always sum to 1; the raw
contributions are the fractions scaled by the author count and sum to
the author count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import basis
from .errors import DomainError, PolicyError, ValidationError

SCHEME_BERNSTEIN = "bernstein"
SCHEME_BERNSTEIN_S = "bernstein_s"
SCHEME_UNIFORM = "uniform"
SCHEME_EXPLICIT = "explicit"
SCHEMES = (SCHEME_BERNSTEIN, SCHEME_BERNSTEIN_S, SCHEME_UNIFORM, SCHEME_EXPLICIT)

# Flags carried on sequences and propagated into per-article earnings.
FLAG_DEGENERATE = "degenerate_partition"
FLAG_EXPLICIT = "explicit_partition"
FLAG_UNIFORM = "uniform_partition"

# Hand-entered fractions carry decimal entry rounding, so explicit
# partitions get a looser sum gate than internally generated ones.
EXPLICIT_SUM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class ScheduleExtension:
    """Affine p-axis continuation ``x(M) = intercept + slope*(M-1)``, clipped at ``cap``."""

    slope: float
    intercept: float
    cap: float

    def x_for(self, author_count: int) -> float:
        return min(self.cap, self.intercept + self.slope * (author_count - 1))


@dataclass(frozen=True)
class PartitionPolicy:
    """How per-article credit fractions are derived.

    ``schedule`` maps an author count to the p-axis abscissa; author
    counts beyond the schedule fall back to ``extension`` when present.
    ``s`` stretches the basis domain and only matters for the
    ``bernstein_s`` scheme.
    """

    scheme: str
    s: float = 1.0
    schedule: dict[int, float] = field(default_factory=dict)
    extension: ScheduleExtension | None = None

    def __post_init__(self) -> None:
        if self.scheme not in SCHEMES:
            raise PolicyError(
                f"unknown scheme {self.scheme!r}; valid schemes: {', '.join(SCHEMES)}"
            )
        if not (self.s > 0.0) or math.isinf(self.s):
            raise PolicyError(f"s must be positive and finite, got {self.s}")
        if self.scheme == SCHEME_BERNSTEIN and self.s != 1.0:
            raise PolicyError(
                f"scheme {SCHEME_BERNSTEIN!r} is defined on [0, 1]; "
                f"use {SCHEME_BERNSTEIN_S!r} for s = {self.s}"
            )
        for count, x in self.schedule.items():
            if not isinstance(count, int) or count < 1:
                raise PolicyError(f"schedule keys must be author counts >= 1, got {count!r}")
            if not 0.0 <= x <= self.s:
                raise PolicyError(
                    f"schedule entry for {count} authors: x={x} outside [0, {self.s}]"
                )
        if (
            self.scheme in (SCHEME_BERNSTEIN, SCHEME_BERNSTEIN_S)
            and self.schedule.get(1, 0.0) != 0.0
        ):
            raise PolicyError(
                f"single-author articles take the whole credit; the schedule entry "
                f"for 1 author must be 0, got {self.schedule[1]}"
            )
        if self.extension is not None and not 0.0 <= self.extension.cap <= self.s:
            raise PolicyError(
                f"extension cap {self.extension.cap} outside [0, {self.s}]"
            )

    def resolve_x(self, author_count: int) -> float:
        """P-axis abscissa for ``author_count``, from the schedule or the
        extension rule."""
        if author_count in self.schedule:
            return self.schedule[author_count]
        if self.extension is not None:
            x = self.extension.x_for(author_count)
            if not 0.0 <= x <= self.s:
                raise PolicyError(
                    f"extension rule yields x={x} outside [0, {self.s}] "
                    f"for {author_count} authors"
                )
            return x
        raise PolicyError(
            f"no schedule entry for {author_count} authors and no extension rule"
        )


@dataclass(frozen=True)
class PSequence:
    """Descending credit fractions for one article's byline.

    ``x`` is None for partitions with no p-axis (uniform and explicit).
    """

    author_count: int
    x: float | None
    s: float
    fractions: tuple[float, ...]
    raw_contributions: tuple[float, ...]
    flags: frozenset[str] = frozenset()


def _sequence(author_count: int, x: float | None, s: float,
              values: list[float], flags: frozenset[str]) -> PSequence:
    # Stable descending sort: equal values keep ascending member order.
    fractions = tuple(sorted(values, reverse=True))
    raw = tuple(author_count * f for f in fractions)
    if author_count >= 2 and fractions[-1] == 0.0:
        flags = flags | {FLAG_DEGENERATE}
    return PSequence(author_count, x, s, fractions, raw, flags)


def psequence_at(author_count: int, x: float, s: float = 1.0) -> PSequence:
    """P-sequence from direct basis evaluation at abscissa ``x`` on [0, s]."""
    if author_count < 1:
        raise ValidationError(f"author_count must be >= 1, got {author_count}")
    values = basis.bernstein_s_values(author_count - 1, x, s)
    return _sequence(author_count, x, s, values, frozenset())


def make_psequence(author_count: int, policy: PartitionPolicy) -> PSequence:
    """P-sequence for ``author_count`` authors under ``policy``.

    Single-author articles always yield ``[1.0]``.  The uniform scheme
    splits evenly and flags the result; the explicit scheme cannot be
    satisfied here because it needs per-record fractions.
    """
    if author_count < 1:
        raise ValidationError(f"author_count must be >= 1, got {author_count}")
    if policy.scheme == SCHEME_EXPLICIT:
        raise PolicyError(
            "explicit scheme provides no schedule; records must carry explicit_partition"
        )
    if policy.scheme == SCHEME_UNIFORM:
        fraction = 1.0 / author_count
        flags = frozenset() if author_count == 1 else frozenset({FLAG_UNIFORM})
        return _sequence(author_count, None, policy.s, [fraction] * author_count, flags)
    if author_count == 1:
        try:
            x = policy.resolve_x(1)
        except PolicyError:
            x = 0.0
        return _sequence(1, x, policy.s, [1.0], frozenset())
    return psequence_at(author_count, policy.resolve_x(author_count), policy.s)


def explicit_psequence(author_count: int, fractions: list[float]) -> PSequence:
    """P-sequence from author-supplied fractions.

    The fractions must sum to 1 within ``EXPLICIT_SUM_TOLERANCE`` and each
    lie in (0, 1]; they are sorted descending, not renormalized.
    """
    if author_count < 1:
        raise ValidationError(f"author_count must be >= 1, got {author_count}")
    values = [float(f) for f in fractions]
    if len(values) != author_count:
        raise ValidationError(
            f"expected {author_count} fractions, got {len(values)}"
        )
    total = math.fsum(values)
    if abs(total - 1.0) > EXPLICIT_SUM_TOLERANCE:
        raise ValidationError(
            f"explicit fractions must sum to 1 within {EXPLICIT_SUM_TOLERANCE}, "
            f"got sum {total!r}"
        )
    for value in values:
        if not 0.0 < value <= 1.0:
            raise ValidationError(
                f"each explicit fraction must lie in (0, 1], got {value!r}"
            )
    return _sequence(author_count, None, 1.0, values, frozenset({FLAG_EXPLICIT}))


def default_schedule(max_authors: int = 7) -> PartitionPolicy:
    """The demonstration policy: x = 0 for one author, then
    ``0.15 + 0.05*(M-1)`` per extra author, capped at 0.5.

    Materializes schedule entries up to ``max_authors``; larger bylines
    resolve through the same affine rule as an extension.
    """
    if max_authors < 1:
        raise ValidationError(f"max_authors must be >= 1, got {max_authors}")
    schedule = {1: 0.0}
    for count in range(2, max_authors + 1):
        schedule[count] = min(0.5, round(0.15 + 0.05 * (count - 1), 2))
    return PartitionPolicy(
        scheme=SCHEME_BERNSTEIN,
        s=1.0,
        schedule=schedule,
        extension=ScheduleExtension(slope=0.05, intercept=0.15, cap=0.5),
    )


def shared_rank_groups(seq: PSequence, tie_tolerance: float) -> list[list[int]]:
    """Maximal runs of consecutive ranks whose fractions agree within
    ``tie_tolerance`` (pairwise), e.g. shared first authorship when ranks
    1 and 2 group together.  Ranks are 1-based."""
    if tie_tolerance < 0:
        raise ValidationError(f"tie_tolerance must be >= 0, got {tie_tolerance}")
    groups: list[list[int]] = []
    current = [1]
    for rank in range(2, seq.author_count + 1):
        # Fractions are descending, so the pairwise spread of a candidate
        # group is its first fraction minus its last.
        if seq.fractions[current[0] - 1] - seq.fractions[rank - 1] <= tie_tolerance:
            current.append(rank)
        else:
            groups.append(current)
            current = [rank]
    groups.append(current)
    return groups
