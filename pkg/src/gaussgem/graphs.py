"""Graph-coupled Gaussian states and their closed-form entanglement values.

A graph on N modes with complex edge weights A_{mn} defines the quadratic
generator h whose (m, n) block (m != n) is

    [[ Re A_mn, -Im A_mn ],
     [ -Im A_mn, Re A_mn ]],

zero on the diagonal.  The state is prepared from vacuum through the
symplectic S = exp(Omega h), giving the covariance Gamma = S S^T / 2.  A
purely real weight is a beamsplitter coupling and creates no entanglement;
the imaginary part squeezes.

For two modes and for the two connected three-mode topologies (triangle and
two-edge path) the measure has closed forms in the polar weight
w = r e^{i phi}.  They involve sqrt(cos 2 phi); for cos 2 phi < 0 the
continuation sin(ix) = i sinh(x) keeps every displayed quantity real, and the
rays cos 2 phi = 0 are removable limits.  Both are handled by the piecewise
real helpers below rather than complex arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    build_omega,
    evolve_covariance,
    require_pure,
    symplectic_from_hamiltonian,
    vacuum_state,
)
from .errors import DivisionByZeroError, InvalidArgumentError
from .measure import MetricTensor, _assemble, gem_from_purity, mode_purities

#: Switchover window around the removable rays cos(2 phi) = 0.
_RAY_WINDOW = 1e-6


@dataclass(frozen=True)
class PolarCoupling:
    """Edge weight in polar form, w = r e^{i phi} with r >= 0."""

    r: float
    phi: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.phi)):
            raise InvalidArgumentError("polar coupling needs finite r and phi")
        if self.r < 0:
            raise InvalidArgumentError(f"modulus must be non-negative, got {self.r}")

    @property
    def weight(self) -> complex:
        return self.r * cmath.exp(1j * self.phi)

    @classmethod
    def from_complex(cls, w: complex) -> "PolarCoupling":
        return cls(abs(w), cmath.phase(w))


@dataclass(frozen=True)
class GraphSpec:
    """Mode count plus undirected weighted edges (i < j, 1-based, no loops)."""

    num_modes: int
    edges: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.num_modes, (int, np.integer)) or self.num_modes < 1:
            raise InvalidArgumentError(f"mode count must be a positive integer, got {self.num_modes!r}")
        seen = set()
        normalized = []
        for edge in self.edges:
            try:
                i, j, w = edge
            except (TypeError, ValueError) as exc:
                raise InvalidArgumentError(f"edge {edge!r} is not an (i, j, weight) triple") from exc
            if not (isinstance(i, (int, np.integer)) and isinstance(j, (int, np.integer))):
                raise InvalidArgumentError(f"edge endpoints must be integers, got ({i!r}, {j!r})")
            if i == j:
                raise InvalidArgumentError(f"self-loop on mode {i} is not allowed")
            if not (1 <= i < j <= self.num_modes):
                raise InvalidArgumentError(
                    f"edge ({i}, {j}) must satisfy 1 <= i < j <= {self.num_modes}"
                )
            w = complex(w)
            if not (math.isfinite(w.real) and math.isfinite(w.imag)):
                raise InvalidArgumentError(f"edge ({i}, {j}) has non-finite weight {w}")
            if (i, j) in seen:
                raise InvalidArgumentError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            normalized.append((int(i), int(j), w))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def with_uniform_weight(cls, num_modes: int, pairs, weight: complex) -> "GraphSpec":
        """Same topology, every edge carrying ``weight``."""
        return cls(num_modes, tuple((i, j, weight) for (i, j) in pairs))

    def reweighted(self, weight: complex) -> "GraphSpec":
        """Copy of this topology with all weights replaced by ``weight``."""
        return GraphSpec.with_uniform_weight(self.num_modes, [(i, j) for i, j, _ in self.edges], weight)


def hamiltonian_from_graph(spec: GraphSpec) -> np.ndarray:
    """2N x 2N symmetric generator of the graph preparation unitary."""
    if not isinstance(spec, GraphSpec):
        raise InvalidArgumentError("hamiltonian_from_graph needs a GraphSpec")
    h = np.zeros((2 * spec.num_modes, 2 * spec.num_modes))
    for i, j, w in spec.edges:
        block = np.array([[w.real, -w.imag], [-w.imag, w.real]])
        a, b = 2 * (i - 1), 2 * (j - 1)
        h[a : a + 2, b : b + 2] = block
        h[b : b + 2, a : a + 2] = block
    return h


def graph_state_covariance(spec: GraphSpec) -> np.ndarray:
    """Pure covariance matrix S S^T / 2 of the graph state, S = exp(Omega h)."""
    h = hamiltonian_from_graph(spec)
    S = symplectic_from_hamiltonian(h, build_omega(spec.num_modes))
    return evolve_covariance(vacuum_state(spec.num_modes), S)


# --- analytic continuation helpers (piecewise real) -------------------------

def _sin_sq_over(u: float, s: float) -> float:
    """sin^2(s sqrt(u)) / u, continued through u <= 0.

    Equals (1 - cos(2 s sqrt(u))) / (2u), an entire function of u; for u < 0
    the value is sinh^2(s sqrt(-u)) / (-u).  Near u = 0 a short series avoids
    the 0/0 evaluation.
    """
    if abs(u) < _RAY_WINDOW:
        s2 = s * s
        return s2 - s2 * s2 * u / 3.0 + 2.0 * s2**3 * u * u / 45.0
    if u > 0:
        return math.sin(s * math.sqrt(u)) ** 2 / u
    return math.sinh(s * math.sqrt(-u)) ** 2 / (-u)


def _cos_cont(u: float, s: float) -> float:
    """cos(s sqrt(u)) continued: cosh(s sqrt(-u)) for u < 0."""
    if u >= 0:
        return math.cos(s * math.sqrt(u))
    return math.cosh(s * math.sqrt(-u))


def _one_minus_cos_over(u: float, s: float) -> float:
    """(1 - cos(s sqrt(u))) / u, continued through u <= 0."""
    if abs(u) < _RAY_WINDOW:
        s2 = s * s
        return s2 / 2.0 - s2 * s2 * u / 24.0 + s2**3 * u * u / 720.0
    if u > 0:
        return (1.0 - math.cos(s * math.sqrt(u))) / u
    return (1.0 - math.cosh(s * math.sqrt(-u))) / u


def _sin_phi_sq(phi: float) -> float:
    """sin^2(phi) with the zeros at multiples of pi made exact.

    Purely real couplings carry no entanglement; phi equal to a floating
    point multiple of pi must therefore annihilate the closed forms exactly,
    not up to sin(pi) ~ 1e-16.
    """
    s = math.sin(phi)
    return 0.0 if abs(s) < 1e-12 else s * s


# --- closed forms ------------------------------------------------------------

def gem_two_mode_closed(coupling: PolarCoupling) -> float:
    """Measure of the single-edge two-mode state: sin^2(phi) sin^2(2r sqrt(cos 2phi)) / (16 cos 2phi).

    Real couplings give exactly zero; at phi = +-pi/2 this is sinh^2(2r)/16.
    """
    u = math.cos(2.0 * coupling.phi)
    return _sin_phi_sq(coupling.phi) * _sin_sq_over(u, 2.0 * coupling.r) / 16.0


def compact_gem_two_mode(nu: float, phi: float) -> float:
    """Bounded variant on the compactified two-mode family, in [0, 1).

    The edge modulus is constrained to tanh(nu) < 1 and the measure is
    renormalized by its supremum on that family,

        [P1^-2 + P2^-2 - 2] / (2 sinh^2 2),

    so the value approaches 1 only in the limit nu -> inf at phi = +-pi/2.
    """
    if nu < 0:
        raise InvalidArgumentError(f"compactified modulus parameter must be >= 0, got {nu}")
    spec = GraphSpec(2, ((1, 2, math.tanh(nu) * cmath.exp(1j * phi)),))
    p1, p2 = mode_purities(graph_state_covariance(spec))
    return (p1**-2 + p2**-2 - 2.0) / (2.0 * math.sinh(2.0) ** 2)


def gem_three_mode_g1(coupling: PolarCoupling) -> float:
    """Triangle graph with equal weights: (1/12) sin^2(phi) sec(2phi) sin^2(3r sqrt(cos 2phi))."""
    u = math.cos(2.0 * coupling.phi)
    return _sin_phi_sq(coupling.phi) * _sin_sq_over(u, 3.0 * coupling.r) / 12.0


def gem_three_mode_g2(coupling: PolarCoupling) -> float:
    """Two-edge path with equal weights.

    (1/32) sin^2(phi) sec(2phi) sin^2(r v) (3 cos(2 r v) + 5) with
    v = sqrt(sin 4phi csc 2phi) = sqrt(2 cos 2phi), continued as above.
    """
    u2 = 2.0 * math.cos(2.0 * coupling.phi)  # sin(4 phi) csc(2 phi)
    return (
        _sin_phi_sq(coupling.phi)
        * _sin_sq_over(u2, coupling.r)
        * (3.0 * _cos_cont(u2, 2.0 * coupling.r) + 5.0)
        / 16.0
    )


def gem_ratio_small_r(spec_a: GraphSpec, spec_b: GraphSpec, r: float) -> float:
    """Measure ratio of two topologies with every weight set to i*r.

    As r -> 0 each edge contributes r^2/4 at leading order, so the ratio tends
    to the edge-count ratio of the two graphs.

    Raises:
        DivisionByZeroError: the denominator state carries zero measure.
    """
    if spec_a.num_modes != spec_b.num_modes:
        raise InvalidArgumentError(
            f"graphs live on different mode counts: {spec_a.num_modes} vs {spec_b.num_modes}"
        )
    w = 1j * r
    num = gem_from_purity(graph_state_covariance(spec_a.reweighted(w)))
    den = gem_from_purity(graph_state_covariance(spec_b.reweighted(w)))
    if den == 0.0:
        raise DivisionByZeroError("denominator graph has zero measure at this coupling")
    return num / den


def log_negativity_two_mode(gamma: np.ndarray) -> float:
    """Logarithmic negativity max(0, -ln 2 nu-) of a pure two-mode state.

    nu- is the smallest symplectic eigenvalue of the partial transpose
    (momentum sign flip on mode 2); natural-log convention.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (4, 4):
        raise InvalidArgumentError(f"log negativity needs a two-mode covariance, got shape {gamma.shape}")
    gamma = require_pure(gamma)
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    partial = flip @ gamma @ flip
    eigs = np.linalg.eigvals(1j * build_omega(2) @ partial)
    nu_min = float(np.min(np.abs(eigs)))
    return max(0.0, -math.log(2.0 * nu_min))


def two_mode_metric_closed(r: float, phi: float) -> MetricTensor:
    """Shifted metric of the two-mode graph state from its closed components.

    The surviving generator families are built from five scalars A..E;
    diagonal mode blocks are diag(A, -A, -A), so the Killing contraction
    collapses to -A, which is exactly the two-mode closed-form measure.
    """
    u = math.cos(2.0 * phi)
    s2 = math.sin(phi) ** 2
    ssr2 = _sin_sq_over(u, 2.0 * r)
    ssr1 = _sin_sq_over(u, r)
    bracket = 1.0 + s2 * _one_minus_cos_over(u, 2.0 * r)  # (cos^2 phi - sin^2 phi cos(2r sqrt u)) / u
    a_val = -s2 * ssr2 / 16.0
    b_val = (2.0 - s2 * ssr2) / 16.0
    c_val = s2 * ssr2 / 16.0 + bracket**2 / 8.0
    d_val = -0.25 * math.sin(phi) * math.cos(phi) * bracket * ssr1
    e_val = 0.25 * s2 * ssr1 * (ssr1 + 1.0)
    off = np.array([[0.0, 1.0], [1.0, 0.0]])
    eye = np.eye(2)
    fams = {
        (0, 0): a_val * eye + b_val * off,
        (0, 1): np.zeros((2, 2)),
        (0, 2): np.zeros((2, 2)),
        (1, 1): -a_val * eye + c_val * off,
        (1, 2): d_val * off,
        (2, 2): -a_val * eye + e_val * off,
    }
    return MetricTensor(matrix=_assemble(2, fams), num_modes=2, flavor="h")
