"""Recurrence tables, Jacobi matrices, and polynomial evaluation.

The monic family P_n satisfies P_{n+1} = x P_n - u_n P_{n-1} with
u_n = sin(omega*n) sin(omega*(n+2b-1)) / (sin(omega*(n+b)) sin(omega*(n+b-1)))
truncating at u_0 = u_M = 0.  The symmetrized off-diagonals sqrt(u_n)
define an M x M Jacobi matrix with zero diagonal whose eigenvalues are
the orthogonality grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .parameters import SeriesSpec
from .trig import PhaseParams, sin_om


class DegenerateDenominator(ArithmeticError):
    """A recurrence denominator sin(omega*(n+beta)) vanished."""


class ConvergenceFailure(RuntimeError):
    """The eigensolver failed to converge."""


@dataclass(frozen=True)
class RecurrenceTable:
    """Monic coefficients u_n (n = 0..M, u_0 = u_M = 0) and the
    symmetrized elements a_n = sqrt(u_n)/(2 sin omega) (n = 0..M-1)."""

    spec: SeriesSpec
    u: np.ndarray
    a: np.ndarray

    @property
    def M(self) -> int:
        return self.spec.M


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix with zero diagonal; offdiag[n-1] is
    the entry between rows n-1 and n, equal to sqrt(u_n)."""

    dim: int
    diagonal: np.ndarray
    offdiag: np.ndarray

    def dense(self) -> np.ndarray:
        m = np.diag(self.diagonal.astype(float))
        m += np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
        return m


def recurrence_coefficient(params: PhaseParams, beta: float, n: float) -> float:
    """Raw u_n from the closed form, without any truncation convention.

    Raises DegenerateDenominator when a denominator sine vanishes
    (including the 0/0 cases that the series conventions resolve).
    """
    den = sin_om(params, n + beta) * sin_om(params, n + beta - 1.0)
    if den == 0.0:
        raise DegenerateDenominator(
            f"sin(omega*(n+beta)) sin(omega*(n+beta-1)) = 0 at n={n}, "
            f"beta={beta}"
        )
    num = sin_om(params, n) * sin_om(params, n + 2.0 * beta - 1.0)
    return num / den


def build_recurrence(spec: SeriesSpec) -> RecurrenceTable:
    """Compute u_0..u_M and a_0..a_{M-1} for a classified series.

    The endpoints u_0 = u_M = 0 come out exact because the numerator
    sines vanish exactly under the multiplier-reduction rule.  beta = 1
    (j = 2) uses the fiat convention u_1 = ... = u_{M-1} = 1.
    """
    params, M, beta = spec.params, spec.M, spec.beta
    u = np.empty(M + 1)
    if spec.j == 2:
        u[:] = 1.0
        u[0] = u[M] = 0.0
    else:
        for n in range(M + 1):
            u[n] = recurrence_coefficient(params, beta, n)
    if u[0] != 0.0 or u[M] != 0.0:
        raise DegenerateDenominator(
            f"truncation failed: u_0={u[0]}, u_M={u[M]}"
        )
    if np.any(u[1:M] <= 0.0):
        bad = int(np.argmin(u[1:M])) + 1
        raise DegenerateDenominator(
            f"u_{bad} = {u[bad]} <= 0 for a classified series (classification bug)"
        )
    a = np.sqrt(u[:M]) / (2.0 * sin_om(params, 1.0))
    return RecurrenceTable(spec=spec, u=u, a=a)


def build_jacobi(table: RecurrenceTable) -> JacobiMatrix:
    M = table.M
    return JacobiMatrix(
        dim=M,
        diagonal=np.zeros(M),
        offdiag=np.sqrt(table.u[1:M]),
    )


def eval_monic(table: RecurrenceTable, n: int, x):
    """P_n(x) by the forward recurrence; x may be a scalar or an array.

    n = M is permitted: P_M vanishes on the orthogonality grid.
    """
    if not 0 <= n <= table.M:
        raise ValueError(f"n={n} outside 0..{table.M}")
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.shape else float(p_prev)
    p = x.copy()
    for m in range(1, n):
        p_prev, p = p, x * p - table.u[m] * p_prev
    return p if p.shape else float(p)


def eval_symmetric(table: RecurrenceTable, n: int, mu):
    """S_n(mu) from a_{n+1} S_{n+1} + a_n S_{n-1} = mu S_n, S_0 = 1."""
    if not 0 <= n <= table.M - 1:
        raise ValueError(f"n={n} outside 0..{table.M - 1}")
    mu = np.asarray(mu, dtype=float)
    s_prev = np.ones_like(mu)
    if n == 0:
        return s_prev if s_prev.shape else float(s_prev)
    s = mu / table.a[1]
    for m in range(1, n):
        s_prev, s = s, (mu * s - table.a[m] * s_prev) / table.a[m + 1]
    return s if s.shape else float(s)


def jacobi_spectrum(jac: JacobiMatrix) -> np.ndarray:
    """Eigenvalues of the Jacobi matrix, sorted ascending."""
    if jac.dim == 1:
        return jac.diagonal.copy()
    try:
        vals = scipy.linalg.eigh_tridiagonal(
            jac.diagonal, jac.offdiag, eigvals_only=True
        )
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc
    if not np.all(np.isfinite(vals)):  # pragma: no cover
        raise ConvergenceFailure("non-finite eigenvalues")
    return np.sort(vals)
