"""Independent reference implementations used to validate the library.

Nothing here calls into the phase-space code paths it is used to check:
the matrix exponential oracle is a plain rescaled Taylor series, the state
oracles work in a truncated Fock basis, and the elliptic oracle is adaptive
quadrature of the defining integral.
"""

import numpy as np
from scipy.integrate import quad
from scipy.linalg import expm as _scipy_expm


def taylor_expm(M, terms=30):
    """exp(M) by scaling-and-squaring of a truncated Taylor series."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    norm = np.linalg.norm(M, 1)
    squarings = max(0, int(np.ceil(np.log2(max(norm, 1e-300) / 0.25)))) if norm > 0.25 else 0
    A = M / 2.0**squarings
    out = np.eye(n)
    term = np.eye(n)
    for k in range(1, terms + 1):
        term = term @ A / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def destroy(cutoff):
    """Single-mode annihilation operator on a ``cutoff``-dimensional Fock space."""
    return np.diag(np.sqrt(np.arange(1, cutoff)), 1)


def quadrature_ops_two_mode(cutoff):
    """Dense (q1, p1, q2, p2) operators on the two-mode truncated Fock space."""
    a = destroy(cutoff)
    q = (a + a.T) / np.sqrt(2.0)
    p = (a - a.T) / (1j * np.sqrt(2.0))
    eye = np.eye(cutoff)
    return [np.kron(q, eye), np.kron(p, eye), np.kron(eye, q), np.kron(eye, p)]


def two_mode_squeezed_state(r, cutoff):
    """exp[r (a1+ a2+ - a1 a2)] |00> from its Schmidt form, as a flat vector.

    Coefficients tanh(r)^n / cosh(r) on |n, n>; needs no operator
    exponential, so it is independent of every exponential routine in play.
    """
    lam = np.tanh(r)
    psi = np.zeros((cutoff, cutoff))
    psi[np.arange(cutoff), np.arange(cutoff)] = lam ** np.arange(cutoff)
    return (psi / np.cosh(r)).reshape(-1)


def single_mode_squeezed_state(r, cutoff):
    """exp[(r/2)(a+^2 - a^2)] |0>, giving <q^2> = e^{2r}/2."""
    a = destroy(cutoff)
    gen = 0.5 * r * (a.T @ a.T - a @ a)
    vac = np.zeros(cutoff)
    vac[0] = 1.0
    return _scipy_expm(gen) @ vac

def prepared_graph_state(h, cutoff):
    """exp(-i H) |00> for the quadratic H = (1/2) xi^T h xi on two modes.

    The minus sign matches the S = exp(Omega h) phase-space convention:
    conjugating quadratures by exp(-iH) multiplies them by exp(Omega h).
    """
    if h.shape != (4, 4):
        raise ValueError("oracle handles two-mode generators only")
    ops = quadrature_ops_two_mode(cutoff)
    H = np.zeros((cutoff * cutoff, cutoff * cutoff), dtype=complex)
    for A in range(4):
        for B in range(4):
            if h[A, B] != 0.0:
                H = H + 0.5 * h[A, B] * ops[A] @ ops[B]
    vac = np.zeros(cutoff * cutoff)
    vac[0] = 1.0
    return _scipy_expm(-1j * H) @ vac


def fock_covariance(psi, ops):
    """Symmetrized covariance matrix <{xi_A, xi_B}>/2 of a Fock-space vector."""
    n = len(ops)
    gamma = np.zeros((n, n))
    vecs = [op @ psi for op in ops]
    for A in range(n):
        for B in range(A, n):
            val = 0.5 * np.real(np.vdot(vecs[A], vecs[B]) + np.vdot(vecs[B], vecs[A]))
            gamma[A, B] = gamma[B, A] = val
    return gamma


def fock_four_point(psi, ops, A, B, C, D):
    """<psi| xi_A xi_B xi_C xi_D |psi> (operators Hermitian)."""
    left = ops[B] @ (ops[A] @ psi)
    right = ops[C] @ (ops[D] @ psi)
    return np.vdot(left, right)


def fock_reduced_purity(psi, cutoff):
    """tr(rho_1^2) after tracing out the second mode of a two-mode vector."""
    mat = psi.reshape(cutoff, cutoff)
    rho = mat @ mat.conj().T
    return float(np.real(np.trace(rho @ rho)))


def fock_expectation(psi, op):
    return np.vdot(psi, op @ psi)


def sp2_generator_ops_two_mode(cutoff):
    """T1, T2, T3 for each of two modes as dense Fock-space matrices.

    T1 = (q^2 - p^2)/4, T2 = -(qp + pq)/4, T3 = (q^2 + p^2)/4.
    Returns a list indexed by 3*(mode-1) + (i-1).
    """
    a = destroy(cutoff)
    q = (a + a.T) / np.sqrt(2.0)
    p = (a - a.T) / (1j * np.sqrt(2.0))
    t_ops = [
        (q @ q - p @ p) / 4.0,
        -(q @ p + p @ q) / 4.0,
        (q @ q + p @ p) / 4.0,
    ]
    eye = np.eye(cutoff)
    out = []
    for mode in range(2):
        for t in t_ops:
            out.append(np.kron(t, eye) if mode == 0 else np.kron(eye, t))
    return out


def fock_metric_two_mode(psi, cutoff):
    """Restricted Fubini-Study metric of a two-mode Fock vector.

    Directly from the generator moments, g = -Re<T_a T_b> + <T_a><T_b>,
    with no phase-space input at all: a from-scratch check of the whole
    covariance-based construction.
    """
    ops = sp2_generator_ops_two_mode(cutoff)
    vecs = [op @ psi for op in ops]
    firsts = [np.real(np.vdot(psi, v)) for v in vecs]
    g = np.zeros((6, 6))
    for a in range(6):
        for b in range(6):
            second = np.vdot(vecs[a], vecs[b])  # <psi| T_a T_b |psi>
            g[a, b] = -np.real(second) + firsts[a] * firsts[b]
    return 0.5 * (g + g.T)


def elliptic_by_quadrature(kind, m):
    """E(pi/2 | m) or K(m) by adaptive quadrature of the defining integral."""
    if kind == "K":
        f = lambda t: 1.0 / np.sqrt(1.0 - m * np.sin(t) ** 2)
    else:
        f = lambda t: np.sqrt(1.0 - m * np.sin(t) ** 2)
    val, _ = quad(f, 0.0, np.pi / 2.0, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val
