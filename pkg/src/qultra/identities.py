"""Discrete trigonometric identities tied to the weight/norm machinery.

The total weight of each integer/half-integer series equals its zeroth
normalization constant, which yields closed-form sine-product summation
identities (finite-dimensional q-beta analogs).  Both sides are evaluated
here independently, honoring the PhaseParams precision backend, so the
checks double as accuracy probes for the trig core.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trig import PhaseParams, sin_om, working_precision


class RangeError(ValueError):
    """k outside the admissible range for the requested identity."""


@dataclass(frozen=True)
class IdentityCase:
    """One verified identity instance: sum (lhs) vs closed form (rhs)."""

    N: int
    parity: str  # "even" | "odd"
    k: int
    lhs: float
    rhs: float
    rel_residual: float
    degenerate: bool = False


def _relative(lhs, rhs, tol: float) -> float:
    # products of many small sines can push rhs toward 0; fall back to an
    # absolute comparison there
    scale = abs(rhs)
    if scale < tol:
        scale = 1.0
    return float(abs(lhs - rhs) / scale)


def check_even_identity(params: PhaseParams, k: int) -> IdentityCase:
    """sum_{r=0}^{N-2k} s_{r+k} s_{r+1}...s_{r+2k-1}
    = 2N s_{k+1}...s_{2k-1} / (4^k s_1...s_{k-1}),  k = 2..floor(N/2)."""
    N = params.N
    if not 2 <= k <= N // 2:
        raise RangeError(f"k={k} outside 2..{N // 2} for N={N}")
    s = lambda v: sin_om(params, v)
    with working_precision(params):
        lhs = 0.0
        for r in range(N - 2 * k + 1):
            term = s(r + k)
            for l in range(1, 2 * k):
                term *= s(r + l)
            lhs += term
        rhs = 2.0 * N
        for m in range(k + 1, 2 * k):
            rhs *= s(m)
        rhs /= 4.0 ** k
        for m in range(1, k):
            rhs /= s(m)
        res = _relative(lhs, rhs, params.tol)
    return IdentityCase(N=N, parity="even", k=k, lhs=float(lhs),
                        rhs=float(rhs), rel_residual=res)


def check_odd_identity(params: PhaseParams, k: int) -> IdentityCase:
    """sum_{r=0}^{N-2k-1} s_{r+k+1/2} s_{r+1}...s_{r+2k}
    = s_1...s_{2k} / (4^k s_{1/2}^2 s_{3/2}^2...s_{k-1/2}^2 s_{k+1/2}),
    k = 1..floor(N/2).

    For even N at k = N/2 the sum is empty; such cases are reported with
    degenerate=True and a NaN residual rather than asserted.
    """
    N = params.N
    if not 1 <= k <= N // 2:
        raise RangeError(f"k={k} outside 1..{N // 2} for N={N}")
    s = lambda v: sin_om(params, v)
    upper = N - 2 * k - 1
    with working_precision(params):
        lhs = 0.0
        for r in range(upper + 1):
            term = s(r + k + 0.5)
            for l in range(1, 2 * k + 1):
                term *= s(r + l)
            lhs += term
        rhs = 1.0
        for m in range(1, 2 * k + 1):
            rhs *= s(m)
        rhs /= 4.0 ** k * s(k + 0.5)
        for m in range(k):  # squares s_{1/2}^2 ... s_{k-1/2}^2
            rhs /= s(m + 0.5) ** 2
        res = float("nan") if upper < 0 else _relative(lhs, rhs, params.tol)
    return IdentityCase(N=N, parity="odd", k=k, lhs=float(lhs),
                        rhs=float(rhs), rel_residual=res,
                        degenerate=upper < 0)


def check_base_sums(params: PhaseParams) -> tuple[IdentityCase, IdentityCase]:
    """The two anchor sums of the norm chain:
    sum_{s=0}^{N-2} sin^2(omega*(s+1)) = N/2  and
    sum_{s=0}^{N-1} sin(omega*(s+1/2)) = 1/sin(omega/2)."""
    N = params.N
    s = lambda v: sin_om(params, v)
    with working_precision(params):
        even_lhs = sum(s(m + 1.0) ** 2 for m in range(N - 1))
        even_rhs = N / 2.0
        odd_lhs = sum(s(m + 0.5) for m in range(N))
        odd_rhs = 1.0 / s(0.5)
        even_res = _relative(even_lhs, even_rhs, params.tol)
        odd_res = _relative(odd_lhs, odd_rhs, params.tol)
    return (
        IdentityCase(N=N, parity="even", k=1, lhs=float(even_lhs),
                     rhs=float(even_rhs), rel_residual=even_res),
        IdentityCase(N=N, parity="odd", k=0, lhs=float(odd_lhs),
                     rhs=float(odd_rhs), rel_residual=odd_res),
    )


def sweep_identities(params: PhaseParams) -> list[IdentityCase]:
    """Every identity instance for the given N: the two base sums plus
    all admissible even and odd k."""
    cases = list(check_base_sums(params))
    cases.extend(check_even_identity(params, k)
                 for k in range(2, params.N // 2 + 1))
    cases.extend(check_odd_identity(params, k)
                 for k in range(1, params.N // 2 + 1))
    return cases
