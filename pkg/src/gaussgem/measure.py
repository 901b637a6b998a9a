"""Local-sp(2,R) metric machinery and the entanglement measure itself.

Each mode carries the three Hermitian quadratic generators

    T1 = (q^2 - p^2)/4,   T2 = -(qp + pq)/4,   T3 = (q^2 + p^2)/4,

which close the sp(2,R) algebra [T1,T2] = -i T3, [T2,T3] = i T1,
[T3,T1] = i T2.  The restriction of the Fubini-Study metric to the orbit of
local one-mode Gaussian unitaries has components g[(mode,i),(mode',j)]
expressible entirely in covariance-matrix entries; contracting the
mode-diagonal blocks with the inverse Killing form of sp(2,R) and subtracting
the separable baseline N/8 yields the entanglement measure.  The same number
comes out of the reduced single-mode purities,

    measure = (1/8) sum_mode [det Gamma^(mode) - 1/4],

which is the cheap production route; the metric route exists as an
independent cross-check of the whole construction.

Metric tensors are stored as dense 3N x 3N symmetric arrays with row index
3*(mode-1) + (i-1) for generator i of the given mode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_PURITY_TOL,
    build_omega,
    purity,
    reduced_covariance,
    require_pure,
)
from .errors import InvalidArgumentError

# Structure constants of sp(2,R) in the T1,T2,T3 basis: [T_i, T_j] = c[i,j,k] T_k.
_STRUCTURE = np.zeros((3, 3, 3), dtype=complex)
_STRUCTURE[0, 1, 2] = -1j
_STRUCTURE[1, 0, 2] = 1j
_STRUCTURE[1, 2, 0] = 1j
_STRUCTURE[2, 1, 0] = -1j
_STRUCTURE[2, 0, 1] = 1j
_STRUCTURE[0, 2, 1] = -1j


@dataclass(frozen=True)
class Sp2KillingForm:
    """Killing form of sp(2,R) and its inverse, in the T1,T2,T3 basis."""

    matrix: np.ndarray
    inverse: np.ndarray


def killing_form_sp2() -> Sp2KillingForm:
    """Killing form kappa_ij = Tr(ad_i o ad_j) = 2 diag(-1, -1, 1).

    Recomputed from the structure constants on every call and checked against
    the closed form, so a sign-convention drift in the algebra constants
    cannot pass silently.
    """
    ad = [np.array([[_STRUCTURE[i, j, k] for j in range(3)] for k in range(3)]) for i in range(3)]
    kappa = np.array([[np.trace(ad[i] @ ad[j]) for j in range(3)] for i in range(3)])
    if np.max(np.abs(kappa.imag)) > 1e-14:
        raise AssertionError("Killing form acquired an imaginary part")
    kappa = kappa.real
    expected = 2.0 * np.diag([-1.0, -1.0, 1.0])
    if not np.allclose(kappa, expected, atol=1e-14):
        raise AssertionError(f"structure constants give {kappa}, expected {expected}")
    return Sp2KillingForm(matrix=kappa, inverse=np.linalg.inv(kappa))


@dataclass(frozen=True)
class MomentTable:
    """First and second moments of the local generators in a Gaussian state.

    ``first[m, i]`` is <T_(m,i)>; ``second[m, n, i, j]`` is the symmetrized
    real part of <T_(m,i) T_(n,j)> (the value entering the metric; the
    imaginary part cancels between the (m,i),(n,j) and (n,j),(m,i) orders).
    Mode axes are 0-based here.
    """

    first: np.ndarray
    second: np.ndarray

    @property
    def num_modes(self) -> int:
        return self.first.shape[0]


@dataclass(frozen=True)
class MetricTensor:
    """Restricted Fubini-Study metric g, or its shifted flavor h.

    ``matrix`` is 3N x 3N, symmetric under ((mode,i) <-> (mode',j)).
    """

    matrix: np.ndarray
    num_modes: int
    flavor: str

    def component(self, mode_a: int, gen_a: int, mode_b: int, gen_b: int) -> float:
        """Entry for (mode_a, T_gen_a) x (mode_b, T_gen_b); all indices 1-based."""
        for mode in (mode_a, mode_b):
            if not 1 <= mode <= self.num_modes:
                raise InvalidArgumentError(f"mode index {mode} outside 1..{self.num_modes}")
        for gen in (gen_a, gen_b):
            if not 1 <= gen <= 3:
                raise InvalidArgumentError(f"generator index {gen} outside 1..3")
        return float(self.matrix[3 * (mode_a - 1) + gen_a - 1, 3 * (mode_b - 1) + gen_b - 1])

    def mode_block(self, mode_a: int, mode_b: int) -> np.ndarray:
        """3x3 generator block for a mode pair (1-based)."""
        a, b = 3 * (mode_a - 1), 3 * (mode_b - 1)
        return self.matrix[a : a + 3, b : b + 3].copy()


def _quadrature_blocks(gamma: np.ndarray):
    """Split Gamma into N x N matrices Qq, Pp, Pq (Pq[m,n] = Gamma_{p_m, q_n})."""
    num_modes = gamma.shape[0] // 2
    q = np.arange(0, 2 * num_modes, 2)
    p = q + 1
    return gamma[np.ix_(q, q)], gamma[np.ix_(p, p)], gamma[np.ix_(p, q)]


def _assemble(num_modes: int, families: dict) -> np.ndarray:
    """Build the symmetric 3N x 3N metric from family matrices F^{ij} (i <= j).

    ``families[(i, j)][m, n]`` holds the ((m,i),(n,j)) component family.  The
    (j, i) families follow from the overall symmetry of the tensor; diagonal
    families are symmetrized over the mode pair.
    """
    M = np.zeros((3 * num_modes, 3 * num_modes))
    for (i, j), F in families.items():
        if i == j:
            F = 0.5 * (F + F.T)
        for m in range(num_modes):
            for n in range(num_modes):
                M[3 * m + i, 3 * n + j] = F[m, n]
                M[3 * n + j, 3 * m + i] = F[m, n]
    return M


def moments_from_covariance(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> MomentTable:
    """Generator moments of a pure Gaussian state via Wick pairings.

    Two-point data enters as C = Gamma + (i/2) Omega; four-point functions are
    the three-pairing sums of C, and the second-moment table stores the
    symmetrized real parts.

    Raises:
        UnphysicalStateError: ``gamma`` fails the purity check.
    """
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    C = gamma + 0.5j * build_omega(num_modes)
    q = np.arange(0, 2 * num_modes, 2)
    p = q + 1
    Cqq = C[np.ix_(q, q)]
    Cpp = C[np.ix_(p, p)]
    Cpq = C[np.ix_(p, q)]
    Cqp = C[np.ix_(q, p)]
    dq = np.diag(Cqq)
    dp = np.diag(Cpp)
    dcross = np.diag(Cpq) + np.diag(Cqp)  # = 2 Gamma_{pq} per mode, the i/2 parts cancel

    first = np.column_stack([
        (dq - dp).real / 4.0,
        -dcross.real / 4.0,
        (dq + dp).real / 4.0,
    ])

    out = lambda u, v: np.outer(u, v)
    second = np.empty((3, 3, num_modes, num_modes), dtype=complex)
    second[0, 0] = (2 * Cpp**2 - 2 * Cpq**2 - 2 * Cqp**2 + out(dp - dq, dp - dq) + 2 * Cqq**2) / 16
    second[0, 1] = (4 * Cpp * Cpq - 4 * Cqq * Cqp + out(dp - dq, dcross)) / 16
    second[0, 2] = (-2 * Cpp**2 - 2 * Cpq**2 + 2 * (Cqp**2 + Cqq**2) - out(dp - dq, dp + dq)) / 16
    second[1, 0] = (4 * Cpp * Cqp - 4 * Cqq * Cpq + out(dcross, dp - dq)) / 16
    second[1, 1] = (4 * (Cpq * Cqp + Cpp * Cqq) + out(dcross, dcross)) / 16
    second[1, 2] = (-4 * (Cpp * Cqp + Cqq * Cpq) - out(dcross, dp + dq)) / 16
    second[2, 0] = (-2 * Cpp**2 + 2 * Cpq**2 - 2 * Cqp**2 - out(dp + dq, dp - dq) + 2 * Cqq**2) / 16
    second[2, 1] = (-4 * Cpp * Cpq - 4 * Cqq * Cqp - out(dp + dq, dcross)) / 16
    second[2, 2] = (2 * Cpp**2 + 2 * Cpq**2 + 2 * (Cqp**2 + Cqq**2) + out(dp + dq, dp + dq)) / 16

    # Symmetrized real part; <T_(n,j) T_(m,i)> is the conjugate of
    # <T_(m,i) T_(n,j)>, so the average is real by construction.
    table = np.empty((num_modes, num_modes, 3, 3))
    for i in range(3):
        for j in range(3):
            sym = 0.5 * (second[i, j] + second[j, i].T)
            table[:, :, i, j] = sym.real
    return MomentTable(first=first, second=table)


def metric_from_moments(moments: MomentTable) -> MetricTensor:
    """Metric assembly g = -(M_ij + M_ji)/2 + M_i M_j from a moment table."""
    n = moments.num_modes
    M = np.zeros((3 * n, 3 * n))
    for i in range(3):
        for j in range(3):
            block = -moments.second[:, :, i, j] + np.outer(moments.first[:, i], moments.first[:, j])
            for m in range(n):
                for nn in range(n):
                    M[3 * m + i, 3 * nn + j] = block[m, nn]
    return MetricTensor(matrix=0.5 * (M + M.T), num_modes=n, flavor="g")


def metric_g(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> MetricTensor:
    """Restricted Fubini-Study metric of a pure state, from the closed forms.

    Agrees entrywise with :func:`metric_from_moments` applied to
    :func:`moments_from_covariance`; the closed forms skip the complex
    intermediates.

    Raises:
        UnphysicalStateError: ``gamma`` fails the purity check.
    """
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    Qq, Pp, Pq = _quadrature_blocks(gamma)
    Qp = Pq.T  # Qp[m, n] = Gamma_{q_m, p_n} = Gamma_{p_n, q_m}
    eye = np.eye(num_modes)
    fams = {
        (0, 0): (-Pp**2 + Pq**2 + Qp**2 - Qq**2) / 8.0 - eye / 16.0,
        (0, 1): (Qq * Qp - Pp * Pq) / 4.0,
        (0, 2): (Pp**2 + Pq**2 - Qp**2 - Qq**2) / 8.0,
        (1, 1): (-eye - 4.0 * (Pq * Qp + Pp * Qq)) / 16.0,
        (1, 2): (Pp * Qp + Qq * Pq) / 4.0,
        (2, 2): (eye - 2.0 * (Pp**2 + Pq**2 + Qp**2 + Qq**2)) / 16.0,
    }
    return MetricTensor(matrix=_assemble(num_modes, fams), num_modes=num_modes, flavor="g")


def metric_h(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> MetricTensor:
    """Shifted metric h = g - g[separable reference], entrywise closed forms.

    The reference is the pure product state sharing each mode's diagonal
    covariance data, which removes the separable contribution at the level of
    the tensor: all mode-diagonal blocks vanish on separable states, and the
    Killing contraction of h equals the entanglement measure directly.

    Raises:
        UnphysicalStateError: ``gamma`` fails the purity check.
    """
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    Qq, Pp, Pq = _quadrature_blocks(gamma)
    Qp = Pq.T
    dq = np.diag(Qq)
    dp = np.diag(Pp)
    c = np.diag(Pq)
    eye = np.eye(num_modes)
    ones = np.ones((num_modes, num_modes))
    col = lambda v: np.outer(v, np.ones(num_modes))  # mode-m data broadcast across n
    fams = {
        (0, 0): (-Pp**2 + Pq**2 + Qp**2 - Qq**2 + col((dp - dq) ** 2) + ones - eye / 2.0) / 8.0,
        (0, 1): (-Pp * Pq + Qq * Qp + col(c * (dp - dq))) / 4.0,
        (0, 2): (Pp**2 - col(dp**2) + Pq**2 - Qp**2 - Qq**2 + col(dq**2)) / 8.0,
        (1, 1): (-Pq * Qp - Pp * Qq + 2.0 * col(dp * dq) - eye / 4.0) / 4.0,
        (1, 2): (Pp * Qp + Qq * Pq - col(c * (dp + dq))) / 4.0,
        # Subtracting the separable reference from the (3,3) family gives twice
        # the naive half-sum; spelled out so the Killing contraction of h
        # reproduces the purity route exactly.
        (2, 2): (-Pp**2 - Pq**2 - Qp**2 - Qq**2 + col((dp + dq) ** 2) - ones + eye / 2.0) / 8.0,
    }
    return MetricTensor(matrix=_assemble(num_modes, fams), num_modes=num_modes, flavor="h")


def killing_contraction(metric: MetricTensor) -> float:
    """Sum over modes of kappa^{ij} g[(m,i),(m,j)] (mode-diagonal blocks only).

    The Killing form of the direct-sum algebra is block diagonal across modes,
    so cross-mode blocks never enter the contraction.
    """
    kappa_inv = killing_form_sp2().inverse
    total = 0.0
    for m in range(1, metric.num_modes + 1):
        total += float(np.sum(kappa_inv * metric.mode_block(m, m)))
    return total


def gem_from_metric(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> float:
    """Entanglement measure via the Killing contraction of the metric.

    Equals killing_contraction(metric_g) - N/8; the subtraction is the
    separable baseline, so the result vanishes on product states.  Identical
    (up to rounding) to contracting metric_h without any subtraction.
    """
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    return killing_contraction(metric_g(gamma, tol)) - num_modes / 8.0


def gem_from_purity(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> float:
    """Entanglement measure from reduced purities.

    (1/32) sum_mode [P(rho^(mode))^-2 - 1] = (1/8) sum_mode [det Gamma^(mode) - 1/4].
    Non-negative for every pure state and zero exactly on product states.
    """
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    total = 0.0
    for mode in range(1, num_modes + 1):
        total += float(np.linalg.det(reduced_covariance(gamma, mode))) - 0.25
    return total / 8.0


def mode_purities(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> list[float]:
    """Reduced single-mode purities 1/(2 sqrt(det Gamma^(mode))), one per mode."""
    gamma = require_pure(gamma, tol)
    num_modes = gamma.shape[0] // 2
    return [purity(reduced_covariance(gamma, mode)) for mode in range(1, num_modes + 1)]
