"""Discretized Klein-Gordon ground state on a circle and its measure.

The field lives on N = 2n + 1 equally spaced points of a circle of radius R,
lattice spacing delta = 2 pi R / N, with mass m (c = hbar = 1).  Normal modes
carry frequencies

    omega_k = sqrt(m^2 + (4/delta^2) sin^2(pi k / N)),   k = 0..n,

and the ground state is Gaussian.  Two independent routes to the measure are
implemented: the closed form in the mode sums (exact, O(n)), and a position
basis covariance matrix pushed through the generic purity machinery (dense,
O(N^3)); they must agree.  The large-n behavior follows
kappa1 + kappa2 ln n + kappa3 n + kappa4 n ln n with kappa2 = 1/(16 pi) and
kappa4 = 1/(4 pi^2) independent of mass, radius and the sum-to-integral
truncation order p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, InvalidArgumentError
from .measure import gem_from_purity


@dataclass(frozen=True)
class LatticeFieldConfig:
    """Odd-size lattice: n pairs of rotating modes plus the zero mode.

    Attributes:
        n: non-negative integer, N = 2n + 1 lattice sites.
        mass: field mass, > 0 (inverse length).
        radius: circle radius, > 0 (length).
    """

    n: int
    mass: float
    radius: float

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidArgumentError(f"n must be a non-negative integer, got {self.n!r}")
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise InvalidArgumentError(f"mass must be positive, got {self.mass!r}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InvalidArgumentError(f"radius must be positive, got {self.radius!r}")

    @property
    def num_modes(self) -> int:
        return 2 * self.n + 1

    @property
    def spacing(self) -> float:
        return 2.0 * math.pi * self.radius / self.num_modes

    @property
    def tau(self) -> float:
        """Dimensionless mass-radius combination; the measure depends on (n, tau) only."""
        return self.mass * self.radius

    @classmethod
    def from_modes(cls, num_modes: int, mass: float, radius: float) -> "LatticeFieldConfig":
        """Build from the site count N, which must be odd."""
        if not isinstance(num_modes, (int, np.integer)) or num_modes < 1:
            raise InvalidArgumentError(f"mode count must be a positive integer, got {num_modes!r}")
        if num_modes % 2 == 0:
            raise InvalidArgumentError(
                f"mode count must be odd (N = 2n + 1); got even N = {num_modes}"
            )
        return cls(n=(num_modes - 1) // 2, mass=mass, radius=radius)


@dataclass(frozen=True)
class BogoliubovMatrices:
    """Real N x N blocks of the site -> normal-mode Bogoliubov transformation.

    Row 0 is the zero mode, rows 1..n the cosine modes, rows n+1..2n the sine
    modes; columns are lattice sites a = 1..N.  The pair satisfies
    X X^T - Y Y^T = I, X Y^T = Y X^T, X^T X - Y^T Y = I, X^T Y = Y^T X.
    """

    x: np.ndarray
    y: np.ndarray


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Running coefficients of the large-n expansion at truncation order p."""

    kappa1: float
    kappa2: float
    kappa3: float
    kappa4: float
    p: int
    tau: float


def dispersion(k: int, cfg: LatticeFieldConfig) -> float:
    """Normal-mode frequency omega_k, monotone in k with omega_0 = mass."""
    if not isinstance(k, (int, np.integer)) or not 0 <= k <= cfg.n:
        raise InvalidArgumentError(f"mode number {k!r} outside 0..{cfg.n}")
    s = math.sin(math.pi * k / cfg.num_modes)
    return math.sqrt(cfg.mass**2 + 4.0 * s * s / cfg.spacing**2)


def _dispersion_vector(cfg: LatticeFieldConfig) -> np.ndarray:
    """omega_k for k = 1..n (empty for n = 0)."""
    k = np.arange(1, cfg.n + 1)
    s = np.sin(np.pi * k / cfg.num_modes)
    return np.sqrt(cfg.mass**2 + 4.0 * s * s / cfg.spacing**2)


def bogoliubov_matrices(cfg: LatticeFieldConfig) -> BogoliubovMatrices:
    """X and Y of the site-operator -> normal-mode-operator transformation.

    Zero-mode row: (1/2)(sqrt(m/w) +- sqrt(w/m)) / sqrt(N) with w the
    effective on-site frequency sqrt(m^2 + 2/delta^2).  Cosine and sine rows
    carry (1/sqrt 2)(sqrt(omega_k/w) +- sqrt(w/omega_k)) times the
    corresponding Fourier factor; Y has an overall minus sign.  The sine rows
    mirror the cosine rows exactly (same +- pattern), which is what the four
    symplectic identities force.
    """
    N = cfg.num_modes
    w_eff = math.sqrt(cfg.mass**2 + 2.0 / cfg.spacing**2)
    sites = np.arange(1, N + 1)
    X = np.zeros((N, N))
    Y = np.zeros((N, N))
    X[0, :] = 0.5 * (math.sqrt(cfg.mass / w_eff) + math.sqrt(w_eff / cfg.mass))
    Y[0, :] = 0.5 * (math.sqrt(cfg.mass / w_eff) - math.sqrt(w_eff / cfg.mass))
    omegas = _dispersion_vector(cfg)
    for k in range(1, cfg.n + 1):
        wk = omegas[k - 1]
        plus = math.sqrt(wk / w_eff) + math.sqrt(w_eff / wk)
        minus = math.sqrt(wk / w_eff) - math.sqrt(w_eff / wk)
        angle = 2.0 * np.pi * k * sites / N
        X[k, :] = np.cos(angle) * plus / math.sqrt(2.0)
        X[cfg.n + k, :] = np.sin(angle) * plus / math.sqrt(2.0)
        Y[k, :] = np.cos(angle) * minus / math.sqrt(2.0)
        Y[cfg.n + k, :] = np.sin(angle) * minus / math.sqrt(2.0)
    return BogoliubovMatrices(x=X / math.sqrt(N), y=-Y / math.sqrt(N))


def bogoliubov_residuals(b: BogoliubovMatrices) -> dict:
    """Max-norm defects of the four symplectic identities of (X, Y)."""
    X, Y = b.x, b.y
    eye = np.eye(X.shape[0])
    return {
        "XXt_YYt": float(np.max(np.abs(X @ X.T - Y @ Y.T - eye))),
        "XYt_YXt": float(np.max(np.abs(X @ Y.T - Y @ X.T))),
        "XtX_YtY": float(np.max(np.abs(X.T @ X - Y.T @ Y - eye))),
        "XtY_YtX": float(np.max(np.abs(X.T @ Y - Y.T @ X))),
    }


def reduced_det_from_xy(b: BogoliubovMatrices, mode: int) -> float:
    """det of the reduced single-site covariance from the Bogoliubov data.

    (1/4)(Y^T Y + X^T X)_aa^2 - [(Y^T X)_aa^2 + (X^T Y)_aa^2] / 2 for site
    ``mode`` (1-based); identical for every site by translation invariance.
    """
    N = b.x.shape[0]
    if not 1 <= mode <= N:
        raise InvalidArgumentError(f"site index {mode} outside 1..{N}")
    a = mode - 1
    xx_yy = float((b.x.T @ b.x + b.y.T @ b.y)[a, a])
    yx = float((b.y.T @ b.x)[a, a])
    xy = float((b.x.T @ b.y)[a, a])
    return 0.25 * xx_yy**2 - 0.5 * (yx**2 + xy**2)


def gem_field_exact(cfg: LatticeFieldConfig) -> float:
    """Closed-form measure of the lattice ground state.

    (1/32N) [1 + 2 sum_k (m/omega_k + omega_k/m) + 4 sum_{k,k'} omega_k/omega_k']
    - N/32, with the double sum factorized as (sum omega)(sum 1/omega).
    """
    N = cfg.num_modes
    omegas = _dispersion_vector(cfg)
    if omegas.size:
        bracket = (
            1.0
            + 2.0 * float(np.sum(cfg.mass / omegas + omegas / cfg.mass))
            + 4.0 * float(np.sum(omegas)) * float(np.sum(1.0 / omegas))
        )
    else:
        bracket = 1.0
    return bracket / (32.0 * N) - N / 32.0


def field_covariance(cfg: LatticeFieldConfig) -> np.ndarray:
    """Position-basis 2N x 2N ground-state covariance matrix.

    Each normal mode is a harmonic oscillator with <q^2> = delta/(2 w) and
    <p^2> = w/(2 delta); the site-basis covariance follows by transporting
    those diagonal variances back through the orthogonal Fourier map.
    """
    N = cfg.num_modes
    sites = np.arange(1, N + 1)
    fourier = np.zeros((N, N))
    fourier[0, :] = 1.0 / math.sqrt(N)
    for k in range(1, cfg.n + 1):
        angle = 2.0 * np.pi * k * sites / N
        fourier[k, :] = math.sqrt(2.0 / N) * np.cos(angle)
        fourier[cfg.n + k, :] = math.sqrt(2.0 / N) * np.sin(angle)
    omegas = _dispersion_vector(cfg)
    freqs = np.concatenate([[cfg.mass], omegas, omegas])
    var_q = cfg.spacing / (2.0 * freqs)
    var_p = freqs / (2.0 * cfg.spacing)
    gq = fourier.T @ np.diag(var_q) @ fourier
    gp = fourier.T @ np.diag(var_p) @ fourier
    gamma = np.zeros((2 * N, 2 * N))
    q = np.arange(0, 2 * N, 2)
    gamma[np.ix_(q, q)] = gq
    gamma[np.ix_(q + 1, q + 1)] = gp
    return gamma


def gem_field_pipeline(cfg: LatticeFieldConfig) -> float:
    """Measure of the ground state through the generic covariance machinery.

    Builds the dense position-basis covariance and evaluates the purity
    route; an independent check on :func:`gem_field_exact`.
    """
    return gem_from_purity(field_covariance(cfg))


def asymptotic_coefficients(tau: float, p: int) -> AsymptoticCoefficients:
    """Running large-n coefficients at truncation order p in {0, 1}.

    kappa2 = 1/(16 pi) and kappa4 = 1/(4 pi^2) for every (tau, p); kappa1 and
    kappa3 depend on both.

    Raises:
        InvalidArgumentError: tau <= 0 or p outside {0, 1}.
    """
    if not (math.isfinite(tau) and tau > 0):
        raise InvalidArgumentError(f"tau must be positive, got {tau!r}")
    if p not in (0, 1):
        raise InvalidArgumentError(f"truncation order must be 0 or 1, got {p!r}")
    kappa2 = 1.0 / (16.0 * math.pi)
    kappa4 = 1.0 / (4.0 * math.pi**2)
    if p == 0:
        base = (
            1.0 / math.sqrt(tau**2 + 1.0)
            + 1.0 / tau
            - 2.0 * math.log(tau)
            - 2.0 * math.log(math.pi)
            + math.log(64.0)
        )
        kappa1 = (base + 2.0) / (32.0 * math.pi)
        kappa3 = (base - math.pi**2 / 2.0) / (8.0 * math.pi**2)
    else:
        kappa1 = (
            1.0 / (tau**2 + 1.0) ** 1.5
            + 6.0 / math.sqrt(tau**2 + 1.0)
            + 6.0 / tau
            - 12.0 * math.log(tau)
            - 12.0 * math.log(math.pi)
            + 36.0 * math.log(2.0)
            + 12.0
        ) / (192.0 * math.pi)
        kappa3 = (
            (6.0 * tau**2 + 7.0) / (tau**2 + 1.0) ** 1.5
            + 6.0 / tau
            - 12.0 * math.log(tau)
            - 12.0 * math.log(math.pi)
            + 36.0 * math.log(2.0)
            - 3.0 * math.pi**2
        ) / (28.0 * math.pi**2)
    return AsymptoticCoefficients(kappa1=kappa1, kappa2=kappa2, kappa3=kappa3, kappa4=kappa4, p=p, tau=tau)


def gem_field_asymptotic(n: int, tau: float, p: int) -> float:
    """kappa1 + kappa2 ln n + kappa3 n + kappa4 n ln n at the given order."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")
    c = asymptotic_coefficients(tau, p)
    ln = math.log(n)
    return c.kappa1 + c.kappa2 * ln + c.kappa3 * n + c.kappa4 * n * ln


def complete_elliptic(kind: str, parameter: float) -> float:
    """Complete elliptic integral E(pi/2 | m) or K(m), any parameter m <= 1.

    Evaluated by the arithmetic-geometric mean; negative parameters (the
    regime m = -(2n / m pi R)^2 of the continuum limit) go through the
    imaginary-modulus transformation

        K(-u) = K(u/(1+u)) / sqrt(1+u),   E(-u) = sqrt(1+u) E(u/(1+u)).

    Raises:
        DivergenceError: K requested at m >= 1.
        InvalidArgumentError: unknown kind or parameter > 1.
    """
    name = str(kind).strip().upper()
    if name in ("F", "F/K"):
        name = "K"
    if name not in ("K", "E"):
        raise InvalidArgumentError(f"kind must be 'E' or 'K'/'F', got {kind!r}")
    m = float(parameter)
    if not math.isfinite(m) or m > 1.0:
        raise InvalidArgumentError(f"parameter must be <= 1, got {parameter!r}")
    if name == "K" and m == 1.0:
        raise DivergenceError("K(m) diverges at m = 1")
    if name == "E" and m == 1.0:
        return 1.0
    if m < 0.0:
        mu = -m
        mapped = mu / (1.0 + mu)
        if name == "K":
            return complete_elliptic("K", mapped) / math.sqrt(1.0 + mu)
        return complete_elliptic("E", mapped) * math.sqrt(1.0 + mu)
    k_val, e_val = _agm_pair(m)
    return k_val if name == "K" else e_val


def _agm_pair(m: float) -> tuple[float, float]:
    """K(m) and E(m) for 0 <= m < 1 by the arithmetic-geometric mean.

    K = pi / (2 agm(1, sqrt(1-m))); E = K (1 - sum 2^{j-1} c_j^2) with
    c_0^2 = m and c_{j+1} = (a_j - b_j)/2.  Converges quadratically.
    """
    a, b = 1.0, math.sqrt(1.0 - m)
    terms = [0.5 * m]  # 2^{-1} c_0^2
    weight = 0.5
    for _ in range(64):
        c = 0.5 * (a - b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        weight *= 2.0
        terms.append(weight * c * c)
        if c <= 1e-17 * a:
            break
    k_val = math.pi / (2.0 * a)
    return k_val, k_val * (1.0 - math.fsum(terms))
