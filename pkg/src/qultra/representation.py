"""so_q(3) generators as explicit matrices and the dual (K1-diagonal) basis.

The algebra is [K0,K1]_w = K2, [K1,K2]_w = -K0, [K2,K0]_w = -K1 with the
deformed commutator [A,B]_w = e^{iw/2} A B - e^{-iw/2} B A, w = pi/N.
K0 is diagonal, K1 symmetric tridiagonal, K2 follows from the first
relation and is anti-hermitian.  In the eigenbasis of K1 the operator K0
is again (at most) tridiagonal; its matrix elements d_s, b_s have closed
forms per series, which verify_dual_structure checks numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .parameters import SeriesKind, SeriesSpec
from .recurrence import (
    ConvergenceFailure,
    RecurrenceTable,
    build_recurrence,
    eval_symmetric,
)
from .trig import cos_om, sin_om


@dataclass(frozen=True)
class RepresentationData:
    """K0 eigenvalues lambda_n, matrix elements a_n, Casimir value nu."""

    spec: SeriesSpec
    lam: np.ndarray
    a: np.ndarray
    nu: float


@dataclass(frozen=True)
class GeneratorTriple:
    rep: RepresentationData
    K0: np.ndarray
    K1: np.ndarray
    K2: np.ndarray  # complex, anti-hermitian


@dataclass(frozen=True)
class AlgebraReport:
    """Max-entry residuals of the defining relations and the Casimir.

    The Casimir combination Q = (K2*K2~ + K2~*K2)/2 - cos(w)(K0^2+K1^2)
    acts as the scalar -nu/sin^2(w), where nu = cos(w*b) cos(w*(b-1)) is
    the constant fixed by the truncation condition a_0 = 0; rq measures
    the max-entry deviation of Q from that scalar.
    """

    r1: float  # [K1,K2]_w + K0
    r2: float  # [K2,K0]_w + K1
    rq: float  # Q - casimir_eigenvalue * I
    casimir_eigenvalue: float
    passed: bool


@dataclass(frozen=True)
class DualBasisData:
    """Spectrum mu_s of K1 and the tridiagonal data d_s, b_s of K0 in the
    K1 eigenbasis.  d_s is the coupling between dual states s-1 and s,
    so d_0 couples out of the space and is 0 structurally.

    For the complementary series the closed-form d does not truncate by
    itself at the boundary; the raw boundary values of the closed form
    are kept for inspection.
    """

    spec: SeriesSpec
    mu: np.ndarray
    d: np.ndarray
    b: np.ndarray
    raw_boundary_d: tuple[float, float] | None = None


@dataclass(frozen=True)
class DualReport:
    eigenvalue_residual: float
    offdiag_residual: float
    diagonal_residual: float
    tridiagonal_leak: float
    overlap_residual: float
    passed: bool


def build_representation(spec: SeriesSpec) -> RepresentationData:
    """Closed-form lambda_n = cos(omega*(n+beta))/sin(omega), the a_n
    shared with the recurrence table, and nu = cos(wb) cos(w(b-1))."""
    params, beta = spec.params, spec.beta
    sw = sin_om(params, 1.0)
    lam = np.array([cos_om(params, n + beta) / sw for n in range(spec.M)])
    a = build_recurrence(spec).a
    nu = cos_om(params, beta) * cos_om(params, beta - 1.0)
    return RepresentationData(spec=spec, lam=lam, a=a, nu=nu)


def omega_mutator(a: np.ndarray, b: np.ndarray, omega: float) -> np.ndarray:
    """[A,B]_w = e^{iw/2} A B - e^{-iw/2} B A."""
    phase = np.exp(0.5j * omega)
    return phase * (a @ b) - np.conj(phase) * (b @ a)


def build_generators(rep: RepresentationData) -> GeneratorTriple:
    M = rep.spec.M
    k0 = np.diag(rep.lam).astype(complex)
    k1 = np.zeros((M, M))
    for n in range(M - 1):
        k1[n, n + 1] = k1[n + 1, n] = rep.a[n + 1]
    k1 = k1.astype(complex)
    k2 = omega_mutator(k0, k1, rep.spec.params.omega)
    return GeneratorTriple(rep=rep, K0=k0, K1=k1, K2=k2)


def verify_algebra(gen: GeneratorTriple) -> AlgebraReport:
    """Residuals of the two remaining defining relations and Q = nu*I."""
    params = gen.rep.spec.params
    w = params.omega
    r1 = np.abs(omega_mutator(gen.K1, gen.K2, w) + gen.K0).max()
    r2 = np.abs(omega_mutator(gen.K2, gen.K0, w) + gen.K1).max()
    k2t = omega_mutator(gen.K0, gen.K1, -w)
    q = 0.5 * (gen.K2 @ k2t + k2t @ gen.K2) - cos_om(params, 1.0) * (
        gen.K0 @ gen.K0 + gen.K1 @ gen.K1
    )
    sw = sin_om(params, 1.0)
    q_eig = -gen.rep.nu / (sw * sw)
    rq = np.abs(q - q_eig * np.eye(gen.rep.spec.M)).max()
    tol = params.tol
    return AlgebraReport(r1=float(r1), r2=float(r2), rq=float(rq),
                         casimir_eigenvalue=float(q_eig),
                         passed=max(r1, r2, rq) <= tol)


def _dual_d_quantized(spec: SeriesSpec, s: int) -> float:
    params, j = spec.params, spec.j
    sw = sin_om(params, 1.0)
    num = sin_om(params, s) * sin_om(params, s + j - 1.0)
    den = 4.0 * sw * sw * sin_om(params, s + j / 2.0) * sin_om(
        params, s - 1.0 + j / 2.0
    )
    return np.sqrt(num / den)


def _dual_d_complementary(spec: SeriesSpec, s: int) -> float:
    params, beta = spec.params, spec.beta
    sw = sin_om(params, 1.0)
    num = sin_om(params, s - beta + 0.5) * sin_om(params, s + beta - 0.5)
    den = 4.0 * sw * sw * sin_om(params, s + 0.5) * sin_om(params, s - 0.5)
    return np.sqrt(num / den)


def build_dual_basis(spec: SeriesSpec) -> DualBasisData:
    """Closed-form mu_s, d_s, b_s in the K1 eigenbasis, per series."""
    params, M = spec.params, spec.M
    sw = sin_om(params, 1.0)
    if spec.quantized:
        j = spec.j
        mu = np.array([cos_om(params, s + j / 2.0) / sw for s in range(M)])
        d = np.zeros(M)
        for s in range(1, M):
            d[s] = _dual_d_quantized(spec, s)
        return DualBasisData(spec=spec, mu=mu, d=d, b=np.zeros(M))
    mu = np.array([cos_om(params, s + 0.5) / sw for s in range(M)])
    d = np.zeros(M)
    # every in-range coupling follows the closed form; only the coupling
    # out of the space (index 0) is truncated by hand
    for s in range(1, M):
        d[s] = _dual_d_complementary(spec, s)
    b = np.zeros(M)
    b[0] = b[M - 1] = sin_om(params, 0.5 - spec.beta) / (
        2.0 * sw * sin_om(params, 0.5)
    )
    return DualBasisData(
        spec=spec, mu=mu, d=d, b=b,
        raw_boundary_d=(_dual_d_complementary(spec, 0),
                        _dual_d_complementary(spec, M - 1)),
    )


def _fix_eigenvector_signs(vecs: np.ndarray, tol: float) -> np.ndarray:
    """Make the first component of magnitude > tol positive, per column."""
    out = vecs.copy()
    for s in range(out.shape[1]):
        col = out[:, s]
        idx = np.argmax(np.abs(col) > tol)
        if col[idx] < 0.0:
            out[:, s] = -col
    return out


def verify_dual_structure(gen: GeneratorTriple, dual: DualBasisData,
                          table: RecurrenceTable | None = None) -> DualReport:
    """Diagonalize K1 numerically and compare against the closed forms.

    Checks: sorted eigenvalues of K1 equal sorted mu_s; K0 transformed to
    the K1 eigenbasis (ordered by decreasing eigenvalue, matching the
    index s) is tridiagonal with |offdiag| = d_s and diagonal = b_s; and
    the eigenvector components factor through the symmetric polynomials,
    v_s[n] = v_s[0] * S_n(mu_s).
    """
    spec = dual.spec
    params, M = spec.params, spec.M
    try:
        vals, vecs = np.linalg.eigh(gen.K1.real)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc

    ev_res = float(np.abs(np.sort(vals) - np.sort(dual.mu)).max())

    # mu_s decreases with s: order eigenvectors by descending eigenvalue
    order = np.argsort(vals)[::-1]
    vecs = _fix_eigenvector_signs(vecs[:, order], params.tol)

    t = vecs.T @ gen.K0.real @ vecs
    off = np.array([abs(t[s - 1, s]) for s in range(1, M)])
    offdiag_res = float(np.abs(off - dual.d[1:]).max())
    diag_res = float(np.abs(np.diag(t) - dual.b).max())
    leak = np.abs(np.triu(t, 2)).max() if M > 2 else 0.0

    if table is None:
        table = build_recurrence(spec)
    overlap_res = 0.0
    for s in range(M):
        pred = vecs[0, s] * np.array(
            [eval_symmetric(table, n, dual.mu[s]) for n in range(M)]
        )
        overlap_res = max(overlap_res, float(np.abs(vecs[:, s] - pred).max()))

    tol = params.tol
    worst = max(ev_res, offdiag_res, diag_res, float(leak), overlap_res)
    return DualReport(
        eigenvalue_residual=ev_res,
        offdiag_residual=offdiag_res,
        diagonal_residual=diag_res,
        tridiagonal_leak=float(leak),
        overlap_residual=overlap_res,
        passed=worst <= tol,
    )
