"""Phase-space representation of pure multimode Gaussian states.

Quadratures are ordered mode by mode as (q1, p1, q2, p2, ..., qN, pN), in
units where hbar = 1 and the vacuum covariance matrix is I/2.  All states
handled here have zero first moments, so a state is a single 2N x 2N real
symmetric covariance matrix

    Gamma_AB = (1/2) <{xi_A, xi_B}>,

pure if and only if (Gamma Omega^{-1})^2 = -I/4, with Omega the symplectic
form of the commutation relations.  Everything in this module is a pure
function of its arguments; nothing mutates its inputs.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .errors import InvalidArgumentError, NumericOverflowError, UnphysicalStateError

#: Default tolerance on the purity residual max-norm |(Gamma Omega^-1)^2 + I/4|.
DEFAULT_PURITY_TOL = 1e-9


def q_index(mode: int) -> int:
    """0-based row/column of the position quadrature of ``mode`` (1-based)."""
    return 2 * (mode - 1)


def p_index(mode: int) -> int:
    """0-based row/column of the momentum quadrature of ``mode`` (1-based)."""
    return 2 * mode - 1


def build_omega(num_modes: int) -> np.ndarray:
    """Symplectic form: block-diagonal with ``num_modes`` copies of [[0,1],[-1,0]].

    Satisfies Omega^2 = -I and Omega^T = -Omega.

    Raises:
        InvalidArgumentError: if ``num_modes`` < 1.
    """
    if not isinstance(num_modes, (int, np.integer)) or num_modes < 1:
        raise InvalidArgumentError(f"mode count must be a positive integer, got {num_modes!r}")
    omega = np.zeros((2 * num_modes, 2 * num_modes))
    for m in range(num_modes):
        omega[2 * m, 2 * m + 1] = 1.0
        omega[2 * m + 1, 2 * m] = -1.0
    return omega


def matrix_exponential(matrix: np.ndarray) -> np.ndarray:
    """exp(M) for a square real matrix.

    Backed by scipy's scaling-and-squaring Pade implementation, which handles
    the non-normal generators Omega @ h arising here without relying on an
    eigendecomposition.

    Raises:
        InvalidArgumentError: non-square input or non-finite entries.
        NumericOverflowError: the exponential overflows to non-finite values.
    """
    M = np.asarray(matrix, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidArgumentError(f"matrix_exponential needs a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidArgumentError("matrix_exponential needs finite entries")
    with np.errstate(over="ignore", invalid="ignore"):
        out = scipy.linalg.expm(M)
    if not np.all(np.isfinite(out)):
        raise NumericOverflowError("matrix exponential overflowed for the given norm")
    return out


def symplectic_from_hamiltonian(h: np.ndarray, omega: np.ndarray | None = None) -> np.ndarray:
    """Symplectic transformation S = exp(Omega h) of a quadratic generator.

    ``h`` is the real symmetric coefficient matrix of (1/2) xi^T h xi.  The
    result satisfies S Omega S^T = Omega and det S = 1.

    Args:
        h: 2N x 2N real symmetric matrix.
        omega: optional symplectic form; built from the size of ``h`` if omitted.

    Raises:
        InvalidArgumentError: dimension mismatch or non-symmetric ``h``.
    """
    h = np.asarray(h, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.shape[0] % 2:
        raise InvalidArgumentError(f"quadratic generator must be 2N x 2N, got shape {h.shape}")
    if not np.allclose(h, h.T, atol=1e-12):
        raise InvalidArgumentError("quadratic generator must be symmetric")
    if omega is None:
        omega = build_omega(h.shape[0] // 2)
    else:
        omega = np.asarray(omega, dtype=float)
        if omega.shape != h.shape:
            raise InvalidArgumentError(
                f"symplectic form shape {omega.shape} does not match generator shape {h.shape}"
            )
    return matrix_exponential(omega @ h)


def vacuum_state(num_modes: int) -> np.ndarray:
    """Covariance matrix I/2 of the ``num_modes``-mode vacuum."""
    if not isinstance(num_modes, (int, np.integer)) or num_modes < 1:
        raise InvalidArgumentError(f"mode count must be a positive integer, got {num_modes!r}")
    return 0.5 * np.eye(2 * num_modes)


def evolve_covariance(gamma: np.ndarray, symplectic: np.ndarray) -> np.ndarray:
    """Conjugate a covariance matrix: Gamma -> S Gamma S^T."""
    gamma = np.asarray(gamma, dtype=float)
    S = np.asarray(symplectic, dtype=float)
    if gamma.shape != S.shape or gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1]:
        raise InvalidArgumentError(
            f"covariance shape {gamma.shape} does not match symplectic shape {S.shape}"
        )
    out = S @ gamma @ S.T
    return 0.5 * (out + out.T)


def reduced_covariance(gamma: np.ndarray, mode: int) -> np.ndarray:
    """2x2 covariance block [[qq, qp], [pq, pp]] of a single mode (1-based)."""
    gamma = np.asarray(gamma, dtype=float)
    num_modes = gamma.shape[0] // 2
    if not 1 <= mode <= num_modes:
        raise InvalidArgumentError(f"mode index {mode} outside 1..{num_modes}")
    a = q_index(mode)
    return gamma[a : a + 2, a : a + 2].copy()


def purity(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> float:
    """Purity tr(rho^2) of the Gaussian state with covariance ``gamma``.

    For an N-mode covariance this is (1/2)^N / sqrt(det Gamma); the single-mode
    case reduces to 1/(2 sqrt(det)).  The determinant is required to sit above
    the uncertainty bound (1/4)^N up to ``tol``, and the result is clamped to 1
    to absorb rounding on pure states.

    Raises:
        UnphysicalStateError: det below the uncertainty bound.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1] or gamma.shape[0] % 2:
        raise InvalidArgumentError(f"covariance must be 2N x 2N, got shape {gamma.shape}")
    num_modes = gamma.shape[0] // 2
    det = float(np.linalg.det(gamma))
    bound = 0.25**num_modes
    if det < bound - tol:
        raise UnphysicalStateError(
            f"det(Gamma) = {det} below the uncertainty bound {bound}"
        )
    return min(1.0, 0.5**num_modes / np.sqrt(max(det, bound)))


def check_pure(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> tuple[bool, float]:
    """Purity test: max-norm of (Gamma Omega^{-1})^2 + I/4 against ``tol``.

    Returns:
        (is_pure, residual) where residual = ||(Gamma Omega^-1)^2 + I/4||_max.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1] or gamma.shape[0] % 2:
        raise InvalidArgumentError(f"covariance must be 2N x 2N, got shape {gamma.shape}")
    num_modes = gamma.shape[0] // 2
    omega = build_omega(num_modes)
    # Omega^{-1} = -Omega since Omega^2 = -I.
    J = gamma @ (-omega)
    residual = float(np.max(np.abs(J @ J + 0.25 * np.eye(2 * num_modes))))
    return residual < tol, residual


def require_pure(gamma: np.ndarray, tol: float = DEFAULT_PURITY_TOL) -> np.ndarray:
    """Validate purity and return ``gamma`` as a float array.

    The raw residual of ``check_pure`` carries cancellation error that grows
    like ||Gamma||^2, so strongly squeezed pure states would fail a fixed
    absolute threshold; the acceptance bound is therefore ``tol`` scaled by
    max(1, ||Gamma||_1^2).  Genuinely mixed states have residuals of the same
    order as that scale and are still rejected.

    Raises:
        UnphysicalStateError: purity residual exceeds the scaled tolerance.
    """
    gamma = np.asarray(gamma, dtype=float)
    ok, residual = check_pure(gamma, tol)
    if not ok:
        scale = max(1.0, float(np.linalg.norm(gamma, 1)) ** 2)
        if residual >= tol * scale:
            raise UnphysicalStateError(
                f"state is not pure: purity residual {residual:.3e} exceeds {tol:.1e} "
                f"(conditioning scale {scale:.3e})"
            )
    return gamma
