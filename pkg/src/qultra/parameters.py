"""Classification of (N, beta) into representation series.

Three families of finite systems exist at q = exp(2*pi*i/N): a continuous
"complementary" family of dimension N, and the quantized integer /
half-integer families with j = 2*beta in {1, ..., N-1} and dimension
M = N + 1 - j.  All interval tests are applied to beta reduced mod N.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .trig import PhaseParams


class RejectedParameter(ValueError):
    """beta admits no positive finite-dimensional system."""


class SeriesKind(str, Enum):
    COMPLEMENTARY = "complementary"
    INTEGER = "integer"
    HALF_INTEGER = "half-integer"


@dataclass(frozen=True)
class SeriesSpec:
    """A classified parameter regime.

    j is present (j = 2*beta) only for the integer/half-integer kinds;
    beta is stored reduced mod N.  2 <= M <= N always.
    """

    kind: SeriesKind
    beta: float
    j: int | None
    M: int
    params: PhaseParams

    @property
    def quantized(self) -> bool:
        return self.kind is not SeriesKind.COMPLEMENTARY


def classify(params: PhaseParams, beta: float,
             force_complementary: bool = False) -> SeriesSpec:
    """Classify beta into its unique series for the given N.

    beta = 1/2 belongs to both the complementary and half-integer
    families; by default it is classified half-integer (the Darboux chain
    and closed-form norms then apply).  Pass force_complementary=True to
    get the complementary treatment instead, e.g. for cross-validation.

    Raises:
        RejectedParameter: beta is outside every admissible region
            (beta = 0, the excluded interval endpoints, or 2*beta an
            integer outside 1..N-1).
    """
    N = params.N
    b = float(beta) % N
    if b == 0.0:
        raise RejectedParameter(
            f"beta={beta} (= 0 mod N): recurrence coefficients are ambiguous"
        )

    two_b = 2.0 * b
    if two_b == round(two_b) and not (force_complementary and b == 0.5):
        j = int(round(two_b))
        if not 1 <= j <= N - 1:
            raise RejectedParameter(
                f"beta={beta}: j=2*beta={j} outside 1..{N - 1}; the "
                f"resulting dimension would leave the admissible range"
            )
        kind = SeriesKind.INTEGER if j % 2 == 0 else SeriesKind.HALF_INTEGER
        return SeriesSpec(kind=kind, beta=b, j=j, M=N + 1 - j, params=params)

    # open intervals (-1/2, 0), (0, 1), (1, 3/2), taken mod N
    if 0.0 < b < 1.0 or 1.0 < b < 1.5 or N - 0.5 < b < N:
        return SeriesSpec(kind=SeriesKind.COMPLEMENTARY, beta=b, j=None,
                          M=N, params=params)

    raise RejectedParameter(
        f"beta={beta} (reduced {b}) lies outside every admissible region "
        f"for N={N}"
    )


def enumerate_series(params: PhaseParams,
                     complementary_betas=()) -> list[SeriesSpec]:
    """All integer/half-integer specs for N in increasing j, plus the
    classified spec of every requested complementary beta sample."""
    specs = [classify(params, j / 2.0) for j in range(1, params.N)]
    specs.extend(classify(params, b, force_complementary=True)
                 for b in complementary_betas)
    return specs


def complementary_samples(params: PhaseParams,
                          per_interval: int = 5) -> list[float]:
    """Evenly spaced interior beta samples from each open admissible
    interval; endpoints (and beta = 1/2 exactly) are never produced."""
    intervals = [(-0.5, 0.0), (0.0, 1.0), (1.0, 1.5)]
    samples = []
    for lo, hi in intervals:
        step = (hi - lo) / (per_interval + 1)
        for i in range(1, per_interval + 1):
            b = lo + i * step
            if 2.0 * b == round(2.0 * b):
                b += step / 7.0  # nudge off the quantized point
            samples.append(b % params.N)
    return samples
