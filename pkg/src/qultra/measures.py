"""Discrete measures: grids, weights, normalization constants, Darboux chain.

The integer/half-integer series carry closed-form weights and norms; the
norms can equivalently be generated by chaining the kernel-polynomial
(Darboux) step j -> j+2 starting from the Chebyshev (j=2) and Legendre-like
(j=1) base cases.  The complementary series has closed-form weights up to
an overall constant (w_0 := 1 here) and only numeric norms.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .parameters import SeriesSpec, classify
from .recurrence import RecurrenceTable, build_recurrence, eval_monic
from .trig import cos_om, sin_om


class NonpositiveWeight(ArithmeticError):
    """A computed weight is not strictly positive."""


class WrongSeries(ValueError):
    """Operation requires an integer/half-integer series."""


class ChainExhausted(ValueError):
    """Darboux step would leave the admissible j range."""


@dataclass(frozen=True)
class MeasureData:
    """Grid x_s (strictly decreasing), weights w_s > 0, and norms h_n."""

    spec: SeriesSpec
    grid: np.ndarray
    weights: np.ndarray
    norms: np.ndarray | None = None
    norm_source: str | None = None  # "closed_form" | "numeric" | "darboux"


@dataclass(frozen=True)
class DarbouxStep:
    """Kernel-polynomial factors A_n for the transition j -> j+2.

    A holds the closed-form values; ratio_residual is the worst relative
    disagreement against the defining polynomial ratio
    P_{n+2}(x_0)/P_n(x_0).
    """

    j_from: int
    A: np.ndarray
    spec_to: SeriesSpec
    ratio_residual: float


@dataclass(frozen=True)
class OrthogonalityReport:
    offdiag_residual: float
    diag_residual: float | None
    weight_sum: float
    passed: bool


def build_grid_weights(spec: SeriesSpec) -> MeasureData:
    """Grid points and weights; norms left unfilled.

    Integer/half-integer: x_s = 2 cos(omega*(s+j/2)),
    w_s = sin(omega*(s+j/2)) * prod_{l=1}^{j-1} sin(omega*(s+l)),
    s = 0..N-j.  Complementary: x_s = 2 cos(omega*(s+1/2)) with the
    ratio-form weights anchored at w_0 = w_{N-1} = 1.
    """
    params, M = spec.params, spec.M
    if spec.quantized:
        j = spec.j
        grid = np.array(
            [2.0 * float(cos_om(params, s + j / 2.0)) for s in range(M)]
        )
        w = np.empty(M)
        for s in range(M):
            prod = sin_om(params, s + j / 2.0)
            for l in range(1, j):
                prod *= sin_om(params, s + l)
            w[s] = prod
    else:
        beta = spec.beta
        grid = np.array(
            [2.0 * float(cos_om(params, s + 0.5)) for s in range(M)]
        )
        w = np.empty(M)
        w[0] = w[M - 1] = 1.0
        ratio = 1.0  # running product of the s-dependent factor
        for s in range(1, M - 1):
            ratio *= sin_om(params, beta + 0.5 + (s - 1)) / sin_om(
                params, -beta + 1.5 + (s - 1)
            )
            w[s] = sin_om(params, s + 0.5) / sin_om(params, 0.5) * ratio
    if np.any(w <= params.tol):
        bad = int(np.argmin(w))
        raise NonpositiveWeight(f"w_{bad} = {w[bad]} <= tol")
    return MeasureData(spec=spec, grid=grid, weights=w)


def closed_form_norms(spec: SeriesSpec) -> np.ndarray:
    """h_n from the chained product formulas (integer/half-integer only).

    j = 2k:   h_n = (N/2) * s_{n+k+1}...s_{n+2k-1} / (4^{k-1} s_{n+1}...s_{n+k-1})
    j = 2k+1: h_n = h_0(1) * s_1^2...s_n^2 * s_{n+1}...s_{n+2k}
                    / (4^k s_{1/2} s_{3/2}^2...s_{n+k-1/2}^2 s_{n+k+1/2})
    with empty products equal to 1 (the whole j=1 denominator tail
    collapses to 1 at n = 0).
    """
    if not spec.quantized:
        raise WrongSeries("no closed-form norms for the complementary series")
    params, M, j = spec.params, spec.M, spec.j
    s = lambda v: sin_om(params, v)
    h = np.empty(M)
    if j % 2 == 0:
        k = j // 2
        for n in range(M):
            num = np.prod([s(m) for m in range(n + k + 1, n + 2 * k)] or [1.0])
            den = 4.0 ** (k - 1) * np.prod(
                [s(m) for m in range(n + 1, n + k)] or [1.0]
            )
            h[n] = (params.N / 2.0) * num / den
    else:
        k = (j - 1) // 2
        h0 = 1.0 / s(0.5)
        for n in range(M):
            num = np.prod([s(m) ** 2 for m in range(1, n + 1)] or [1.0])
            num *= np.prod([s(m) for m in range(n + 1, n + 2 * k + 1)] or [1.0])
            if n + k == 0:
                den = 1.0
            else:
                den = 4.0 ** k * s(0.5) * s(n + k + 0.5)
                for m in range(1, n + k):  # squares s_{3/2}^2 .. s_{n+k-1/2}^2
                    den *= s(m + 0.5) ** 2
            h[n] = h0 * num / den
    return h


def numeric_norms(spec: SeriesSpec, table: RecurrenceTable,
                  measure: MeasureData) -> np.ndarray:
    """Direct Gram diagonals h_n = sum_s P_n(x_s)^2 w_s."""
    h = np.array(
        [np.sum(eval_monic(table, n, measure.grid) ** 2 * measure.weights)
         for n in range(spec.M)]
    )
    if np.any(h <= 0.0):  # pragma: no cover
        raise NonpositiveWeight("numeric norm <= 0")
    return h


def with_norms(measure: MeasureData, table: RecurrenceTable | None = None,
               prefer_closed_form: bool = True) -> MeasureData:
    """Fill in norms, closed-form when available, else numeric."""
    if prefer_closed_form and measure.spec.quantized:
        return replace(measure, norms=closed_form_norms(measure.spec),
                       norm_source="closed_form")
    if table is None:
        table = build_recurrence(measure.spec)
    return replace(measure,
                   norms=numeric_norms(measure.spec, table, measure),
                   norm_source="numeric")


def darboux_factors_closed_form(spec: SeriesSpec) -> np.ndarray:
    """A_n(j) = s_{n+j+1} s_{n+j} / (s_{n+1+j/2} s_{n+j/2}), n = 0..M-3."""
    params, j = spec.params, spec.j
    return np.array(
        [
            sin_om(params, n + j + 1.0) * sin_om(params, n + j)
            / (sin_om(params, n + 1.0 + j / 2.0) * sin_om(params, n + j / 2.0))
            for n in range(spec.M - 2)
        ]
    )


def darboux_step(measure_j: MeasureData,
                 table_j: RecurrenceTable) -> tuple[DarbouxStep, MeasureData]:
    """Kernel-polynomial transition from series j to series j+2.

    Produces the A_n factors (closed form, cross-checked against the
    polynomial ratio at the anchor x_0) and the transformed measure:
    w_s(j+2) = w_{s+1}(j) (x_0^2 - x_{s+1}^2)/4, h_n(j+2) = h_n(j) A_n/4.
    Requires measure_j.norms to be filled.
    """
    spec = measure_j.spec
    if not spec.quantized:
        raise WrongSeries("Darboux chain applies to integer/half-integer series")
    if measure_j.norms is None:
        raise ValueError("darboux_step needs norms on the input measure")
    params, j, M = spec.params, spec.j, spec.M
    if j + 2 > params.N - 1:
        raise ChainExhausted(f"j+2 = {j + 2} exceeds N-1 = {params.N - 1}")

    x0 = measure_j.grid[0]
    a_closed = darboux_factors_closed_form(spec)
    a_ratio = np.array(
        [eval_monic(table_j, n + 2, x0) / eval_monic(table_j, n, x0)
         for n in range(M - 2)]
    )
    ratio_residual = float(
        np.abs((a_ratio - a_closed) / a_closed).max()
    )

    spec_to = classify(params, (j + 2) / 2.0)
    new_weights = measure_j.weights[1:M - 1] * (
        x0 ** 2 - measure_j.grid[1:M - 1] ** 2
    ) / 4.0
    new_grid = np.array(
        [2.0 * float(cos_om(params, s + (j + 2) / 2.0))
         for s in range(M - 2)]
    )
    new_norms = measure_j.norms[:M - 2] * a_closed / 4.0
    step = DarbouxStep(j_from=j, A=a_closed, spec_to=spec_to,
                       ratio_residual=ratio_residual)
    new_measure = MeasureData(spec=spec_to, grid=new_grid,
                              weights=new_weights, norms=new_norms,
                              norm_source="darboux")
    return step, new_measure


def darboux_chain(spec_start: SeriesSpec,
                  j_max: int | None = None) -> list[tuple[DarbouxStep, MeasureData]]:
    """Iterate darboux_step from spec_start as far as possible (or j_max)."""
    if not spec_start.quantized:
        raise WrongSeries("Darboux chain applies to integer/half-integer series")
    params = spec_start.params
    if j_max is None:
        j_max = params.N - 1
    measure = with_norms(build_grid_weights(spec_start))
    table = build_recurrence(spec_start)
    out = []
    while measure.spec.j + 2 <= j_max:
        step, measure = darboux_step(measure, table)
        table = build_recurrence(measure.spec)
        out.append((step, measure))
    return out


def verify_orthogonality(table: RecurrenceTable,
                         measure: MeasureData) -> OrthogonalityReport:
    """Gram-matrix residuals of sum_s P_n P_m w_s = h_n delta_nm.

    Off-diagonal entries are compared to h_n (Gram diagonal when no norms
    are attached); the diagonal residual compares the Gram diagonal to
    measure.norms when present.
    """
    spec = measure.spec
    M = spec.M
    vals = np.vstack([eval_monic(table, n, measure.grid) for n in range(M)])
    gram = (vals * measure.weights) @ vals.T
    diag = np.diag(gram)
    off = 0.0
    for n in range(M):
        for m in range(M):
            if n != m:
                off = max(off, abs(gram[n, m]) / diag[n])
    if measure.norms is not None:
        drel = float(np.abs((diag - measure.norms) / measure.norms).max())
    else:
        drel = None
    tol = spec.params.tol
    ok = off <= tol and (drel is None or drel <= tol)
    return OrthogonalityReport(
        offdiag_residual=float(off),
        diag_residual=drel,
        weight_sum=float(measure.weights.sum()),
        passed=bool(ok),
    )
