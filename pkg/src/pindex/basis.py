"""Evaluation of the contribution basis polynomials and their envelope.

The degree-``j`` basis splits credit over ``j + 1`` authors: member
``alpha`` at abscissa ``x`` is ``C(j, alpha) * x**alpha * (1-x)**(j-alpha)``,
and the stretched variant rescales the abscissa onto ``[0, s]``.  All
members at a fixed abscissa sum to one, which is what makes the basis
usable as a credit partition.

Degrees below ``LOG_SPACE_DEGREE`` are evaluated with a running product
over the binomial coefficient (bit-reproducible, exact for the small
degrees that appear in real bylines).  From ``LOG_SPACE_DEGREE`` up the
evaluation moves to log-gamma space so that hyperauthorship degrees in
the thousands stay finite and overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Degree at which evaluation switches from the direct running product to
# log-gamma space.
LOG_SPACE_DEGREE = 500


def _check_degree(j: int) -> None:
    if not isinstance(j, int) or isinstance(j, bool):
        raise DomainError(f"degree must be an integer, got {j!r}")
    if j < 0:
        raise DomainError(f"degree must be nonnegative, got {j}")


def _check_stretch(s: float) -> None:
    if not (s > 0.0) or math.isinf(s):
        raise DomainError(f"stretch parameter s must be positive and finite, got {s}")


def _log_binomial(j: int, alpha: int) -> float:
    return math.lgamma(j + 1) - math.lgamma(alpha + 1) - math.lgamma(j - alpha + 1)


def bernstein(j: int, alpha: int, x: float) -> float:
    """Basis member ``alpha`` of degree ``j`` at ``x`` in [0, 1].

    The boundaries are exact: ``x == 0`` yields the one-hot partition for
    member 0 and ``x == 1`` for member ``j`` (``0**0`` counts as 1).

    Raises:
        DomainError: if ``alpha`` is outside ``[0, j]`` or ``x`` outside
            ``[0, 1]``.  Out-of-range abscissas are never clamped.
    """
    _check_degree(j)
    if not 0 <= alpha <= j:
        raise DomainError(f"alpha must lie in [0, {j}], got {alpha}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 1.0 if alpha == 0 else 0.0
    if x == 1.0:
        return 1.0 if alpha == j else 0.0
    if j >= LOG_SPACE_DEGREE:
        log_value = _log_binomial(j, alpha) + alpha * math.log(x) + (j - alpha) * math.log1p(-x)
        return math.exp(log_value)
    value = 1.0
    for i in range(alpha):
        value *= x * (j - i) / (i + 1)
    return value * (1.0 - x) ** (j - alpha)


def bernstein_values(j: int, x: float) -> list[float]:
    """All ``j + 1`` basis values at ``x``, indexed by member, in O(j)."""
    _check_degree(j)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        row = [0.0] * (j + 1)
        row[0 if x == 0.0 else j] = 1.0
        return row
    if j >= LOG_SPACE_DEGREE:
        log_x = math.log(x)
        log_1mx = math.log1p(-x)
        return [
            math.exp(_log_binomial(j, alpha) + alpha * log_x + (j - alpha) * log_1mx)
            for alpha in range(j + 1)
        ]
    row = [0.0] * (j + 1)
    prefix = 1.0  # C(j, alpha) * x**alpha, built incrementally
    one_minus = 1.0 - x
    for alpha in range(j + 1):
        row[alpha] = prefix * one_minus ** (j - alpha)
        prefix *= x * (j - alpha) / (alpha + 1)
    return row


def bernstein_s(j: int, alpha: int, x: float, s: float = 1.0) -> float:
    """Stretched basis member on [0, s]: ``(1/s**j) C(j,a) x**a (s-x)**(j-a)``.

    Evaluated through the exact rescaling onto the unit interval, so
    ``s == 1`` recovers :func:`bernstein` bit for bit.
    """
    _check_stretch(s)
    if not 0.0 <= x <= s:
        raise DomainError(f"x must lie in [0, {s}], got {x}")
    return bernstein(j, alpha, x / s)


def bernstein_s_values(j: int, x: float, s: float = 1.0) -> list[float]:
    """All ``j + 1`` stretched basis values at ``x`` in [0, s]."""
    _check_stretch(s)
    if not 0.0 <= x <= s:
        raise DomainError(f"x must lie in [0, {s}], got {x}")
    return bernstein_values(j, x / s)


def envelope(j: int, x: float, s: float = 1.0) -> float:
    """Envelope through the interior basis maxima: ``1/sqrt(2 pi j u(1-u))``
    with ``u = x/s``.

    Diagnostic only; it caps how much credit any single author can draw
    near the interior peaks, and never enters metric computation.

    Raises:
        DomainError: at the singular boundaries ``u in {0, 1}`` (or outside),
            or for degree 0.
    """
    _check_degree(j)
    _check_stretch(s)
    if j < 1:
        raise DomainError("envelope is undefined for degree 0")
    u = x / s
    if not 0.0 < u < 1.0:
        raise DomainError(f"envelope is singular at the domain boundary; x/s={u} not in (0, 1)")
    return 1.0 / math.sqrt(2.0 * math.pi * j * u * (1.0 - u))


def earning_bound(author_count: int, citations: float, x: float, s: float = 1.0) -> float:
    """Envelope cap on any single author's earning from one article.

    For an article with ``author_count`` authors and ``citations``
    citations, no author credited through the basis at abscissa ``x`` can
    earn more than ``citations * envelope(author_count - 1, x, s)``.
    Useful as a hyperauthorship diagnostic.
    """
    if author_count < 2:
        raise DomainError(f"earning bound needs at least 2 authors, got {author_count}")
    if citations < 0:
        raise DomainError(f"citations must be nonnegative, got {citations}")
    return citations * envelope(author_count - 1, x, s)


@dataclass(frozen=True)
class BasisCurve:
    """Sampled basis values over [0, s], the backing data for curve plots.

    ``values[i]`` holds the ``degree_j + 1`` member ordinates at ``xs[i]``.
    ``envelope_values`` aligns with ``xs`` and is None at the two boundary
    abscissas, where the envelope is singular.
    """

    degree_j: int
    s: float
    xs: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]
    envelope_values: tuple[float | None, ...] | None = None


def sample_curves(
    j: int,
    s: float = 1.0,
    n_samples: int = 201,
    include_envelope: bool = False,
) -> BasisCurve:
    """Sample all basis members (and optionally the envelope) on a uniform
    grid of ``n_samples`` points spanning [0, s] inclusive."""
    _check_degree(j)
    _check_stretch(s)
    if n_samples < 2:
        raise DomainError(f"need at least 2 samples, got {n_samples}")
    if include_envelope and j < 1:
        raise DomainError("envelope is undefined for degree 0")
    xs = tuple(s * i / (n_samples - 1) for i in range(n_samples))
    values = tuple(tuple(bernstein_s_values(j, x, s)) for x in xs)
    envelope_values = None
    if include_envelope:
        envelope_values = tuple(
            envelope(j, x, s) if 0 < i < n_samples - 1 else None
            for i, x in enumerate(xs)
        )
    return BasisCurve(j, s, xs, values, envelope_values)
