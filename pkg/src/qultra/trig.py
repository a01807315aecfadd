"""Trigonometric evaluation at rational multiples of pi.

Everything downstream is built out of sines and cosines of omega*x with
omega = pi*p/N.  The reduction here happens on the rational multiplier x
(mod 2N), not on the floating-point angle, so that structural zeros like
sin(omega*N) = 0 hold *exactly* regardless of |x|.  Truncation of the
recurrence tables depends on these exact zeros.
"""

from __future__ import annotations

import contextlib
import math
import warnings
from dataclasses import dataclass

import mpmath


@dataclass(frozen=True)
class PhaseParams:
    """Root-of-unity context q = exp(2*pi*i*p/N).

    Attributes:
        N: order of the root of unity, N >= 2.
        p: primitivity index; only p = 1 is a supported regime.
        tol: comparison tolerance used by verification routines.
        precision_bits: working mantissa width; > 53 switches the scalar
            trig backend to mpmath at that precision.
    """

    N: int
    p: int = 1
    tol: float = 1e-10
    precision_bits: int = 53

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"N must be >= 2, got {self.N}")
        if math.gcd(self.p, self.N) != 1:
            raise ValueError(f"p={self.p} must be coprime to N={self.N}")
        if self.p != 1:
            warnings.warn(
                f"p={self.p} != 1 is an unsupported regime; behavior is only "
                "guaranteed for the p=1 primitive root",
                stacklevel=3,
            )
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        if not self.tol > 0 or self.tol < 2.0 ** (1 - self.precision_bits):
            raise ValueError(
                "tol must be positive and >= 2^(1-precision_bits), got "
                f"{self.tol}"
            )

    @property
    def omega(self) -> float:
        """omega = pi*p/N in radians."""
        return math.pi * self.p / self.N

    @property
    def extended(self) -> bool:
        return self.precision_bits > 53


def working_precision(params: PhaseParams):
    """Context manager pinning mpmath arithmetic to params.precision_bits
    (a no-op in the standard double-precision regime)."""
    if params.extended:
        return mpmath.workprec(params.precision_bits)
    return contextlib.nullcontext()


def _reduce_multiplier(params: PhaseParams, x: float) -> float:
    """Reduce x into [0, 2N); exact for representable x."""
    r = math.fmod(float(x), 2.0 * params.N)
    if r < 0.0:
        r += 2.0 * params.N
    return r


def sin_om(params: PhaseParams, x) -> float:
    """sin(omega*x) with argument reduction on the multiplier.

    Returns an exact 0.0 whenever x mod N == 0, and folds the reduced
    multiplier into [0, N/2] so accuracy does not degrade with |x|.
    x may be any real, including half-integers.
    """
    N, p = params.N, params.p
    r = _reduce_multiplier(params, x)
    if math.fmod(r, N) == 0.0:
        return 0.0
    sign = 1.0
    if p % 2 == 1:
        # sin is antiperiodic over N and symmetric about N/2 for odd p
        if r > N:
            r -= N
            sign = -sign
        if r > N / 2.0:
            r = N - r
    if params.extended:
        with mpmath.workprec(params.precision_bits):
            return sign * mpmath.sinpi(mpmath.mpf(r) * p / N)
    return sign * math.sin(math.pi * p * r / N)


def cos_om(params: PhaseParams, x) -> float:
    """cos(omega*x) with the same reduction; exact 0 at x mod N == N/2."""
    if params.p == 1:
        return sin_om(params, params.N / 2.0 - x)
    r = _reduce_multiplier(params, x)
    if math.fmod(r - params.N / 2.0, params.N) == 0.0:
        return 0.0
    if params.extended:
        with mpmath.workprec(params.precision_bits):
            return mpmath.cospi(mpmath.mpf(r) * params.p / params.N)
    return math.cos(math.pi * params.p * r / params.N)
