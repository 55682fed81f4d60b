"""Numeric correlation measures for qubit-qutrit density matrices.

Entropies use base-2 logarithms throughout.  Measurements in the discord
optimisation act on the qubit (the first factor).
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .exceptions import NotPSD
from .matcore import (
    PAULIS,
    PSD_TOL,
    eigvalsh,
    embed_qubit,
    hermitian_eigen,
    partial_trace_qubit,
    partial_trace_qutrit,
    partial_transpose_qubit,
    psd_sqrt,
)

PROB_CUTOFF = 1e-12
GRID_THETA = 64
GRID_PHI = 128
N_REFINE = 3
SIMPLEX_XTOL = 1e-9


@dataclass(frozen=True)
class QubitMeasurement:
    """Projective qubit measurement along the Bloch direction ``(theta, phi)``."""

    theta: float
    phi: float

    @classmethod
    def from_angles(cls, theta, phi):
        """Fold arbitrary real angles into ``theta in [0, pi]``, ``phi in [0, 2 pi)``."""
        x, y, z = np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)
        t = float(np.arccos(np.clip(z, -1.0, 1.0)))
        p = float(np.arctan2(y, x) % (2 * np.pi)) if np.hypot(x, y) > 0 else 0.0
        return cls(t, p)

    def vectors(self):
        """The two orthonormal qubit kets of the measurement basis."""
        c, s = np.cos(self.theta / 2), np.sin(self.theta / 2)
        e = np.exp(1j * self.phi)
        return np.array([c, e * s]), np.array([-np.conj(e) * s, c])

    def projectors(self):
        return tuple(np.outer(v, v.conj()) for v in self.vectors())


@dataclass(frozen=True)
class CorrelationRecord:
    gamma_t: float
    negativity: float
    classical: float
    discord: float
    lqu: float


def negativity(rho):
    """Twice the summed magnitude of the negative eigenvalues of the qubit
    partial transpose.  Accepts one matrix or a stack ``(..., 6, 6)``."""
    w = eigvalsh(partial_transpose_qubit(rho))
    n = 2.0 * np.sum(np.where(w < 0.0, -w, 0.0), axis=-1)
    return float(n) if np.ndim(n) == 0 else n


def _xlog2x(w):
    w = np.asarray(w, dtype=float)
    if np.any(w < -PSD_TOL):
        raise NotPSD(f"negative eigenvalue {w.min():.3e} in entropy evaluation")
    w = np.clip(w, 0.0, 1.0)
    safe = np.where(w > 0.0, w, 1.0)
    return np.where(w > 0.0, w * np.log2(safe), 0.0)


def von_neumann_entropy(rho) -> float:
    """``-Tr rho log2 rho`` for a density matrix of any dimension."""
    return float(-np.sum(_xlog2x(eigvalsh(rho))))


def mutual_information(rho) -> float:
    rho = np.asarray(rho, dtype=complex)
    return (
        von_neumann_entropy(partial_trace_qutrit(rho))
        + von_neumann_entropy(partial_trace_qubit(rho))
        - von_neumann_entropy(rho)
    )


def conditional_entropy(rho, measurement: QubitMeasurement) -> float:
    """``sum_k p_k S(rho_k)`` with ``rho_k`` the post-measurement 6x6 states."""
    rho = np.asarray(rho, dtype=complex)
    total = 0.0
    for A in measurement.projectors():
        K = embed_qubit(A)
        post = K @ rho @ K
        p = post.trace().real
        if p >= PROB_CUTOFF:
            total += p * von_neumann_entropy(post / p)
    return total


def _pair_table(rho):
    # row 2*i + j holds the 3x3 block <i| rho |j> of the qubit, flattened
    return np.asarray(rho, dtype=complex).reshape(2, 3, 2, 3).transpose(0, 2, 1, 3).reshape(4, 9)


def _branch_blocks(rho, theta, phi):
    # unnormalised qutrit states <n_k| rho |n_k> for both outcomes, batched over angles
    theta, phi = np.asarray(theta, dtype=float), np.asarray(phi, dtype=float)
    c, s, e = np.cos(theta / 2), np.sin(theta / 2), np.exp(1j * phi)
    kets = np.stack(
        [np.stack([c + 0j, e * s], axis=-1), np.stack([-np.conj(e) * s, c + 0j], axis=-1)],
        axis=-2,
    )
    weights = (kets.conj()[..., :, None] * kets[..., None, :]).reshape(kets.shape[:-1] + (4,))
    return (weights @ _pair_table(rho)).reshape(kets.shape[:-1] + (3, 3))


def _conditional_entropy_fast(rho, theta, phi):
    blocks = _branch_blocks(rho, theta, phi)
    mu = np.linalg.eigvalsh(blocks)
    p = mu.sum(axis=-1)
    # p S(sigma/p) = -sum mu log mu + p log p
    branch = -np.sum(_xlog2x(mu), axis=-1) + _xlog2x(p)
    return np.sum(np.where(p >= PROB_CUTOFF, branch, 0.0), axis=-1)


def classical_correlation(rho):
    """Classical correlation maximised over projective qubit measurements.

    A ``64 x 128`` grid in ``(theta, phi)`` is scanned first; Nelder-Mead
    then refines from the three best grid points until the simplex is
    smaller than ``1e-9``.

    Returns
    -------
    value : float
    argmax : QubitMeasurement
    """
    rho = np.asarray(rho, dtype=complex)
    s_b = von_neumann_entropy(partial_trace_qubit(rho))
    th = np.linspace(0.0, np.pi, GRID_THETA)
    ph = np.linspace(0.0, 2 * np.pi, GRID_PHI, endpoint=False)
    T, P = np.meshgrid(th, ph, indexing="ij")
    vals = _conditional_entropy_fast(rho, T, P).ravel()
    starts = np.argsort(vals, kind="stable")[:N_REFINE]

    table = _pair_table(rho)

    def objective(x):
        # single-direction version of _conditional_entropy_fast
        c, s = np.cos(0.5 * x[0]), np.sin(0.5 * x[0])
        e = complex(np.cos(x[1]), np.sin(x[1]))
        w = np.array(
            [[c * c, c * s * e, c * s * e.conjugate(), s * s],
             [s * s, -c * s * e, -c * s * e.conjugate(), c * c]]
        )
        mu = np.linalg.eigvalsh((w @ table).reshape(2, 3, 3))
        p = mu.sum(axis=1)
        total = 0.0
        for k in range(2):
            if p[k] >= PROB_CUTOFF:
                m = mu[k][mu[k] > 0.0]
                total += p[k] * np.log2(p[k]) - float(np.dot(m, np.log2(m)))
        return total

    best_val, best_x = np.inf, None
    for idx in starts:
        x0 = np.array([T.ravel()[idx], P.ravel()[idx]])
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={
                "xatol": SIMPLEX_XTOL,
                "fatol": 1e-15,
                "maxiter": 4000,
                "initial_simplex": np.array([x0, x0 + [0.05, 0.0], x0 + [0.0, 0.05]]),
            },
        )
        if res.fun < best_val:
            best_val, best_x = res.fun, res.x
    if vals[starts[0]] < best_val:
        best_val, best_x = vals[starts[0]], np.array([T.ravel()[starts[0]], P.ravel()[starts[0]]])
    return float(s_b - best_val), QubitMeasurement.from_angles(*best_x)


def quantum_discord(rho, clamp: bool = True) -> float:
    """Mutual information minus classical correlation.

    With ``clamp=False`` the raw difference is returned (it can dip a hair
    below zero through round-off)."""
    q = mutual_information(rho) - classical_correlation(rho)[0]
    return max(q, 0.0) if clamp else q


def lqu_matrix(rho) -> np.ndarray:
    """Real symmetric 3x3 matrix ``Tr[sqrt(rho) s_i sqrt(rho) s_j]`` with
    ``s_i`` the Pauli matrices acting on the qubit."""
    root = psd_sqrt(rho)
    sandwiched = [root @ embed_qubit(s) for s in PAULIS]
    M = np.array([[np.trace(a @ b).real for b in sandwiched] for a in sandwiched])
    return 0.5 * (M + M.T)


def lqu(rho) -> float:
    """Local quantum uncertainty, ``1 - lambda_max`` of :func:`lqu_matrix`."""
    return float(1.0 - hermitian_eigen(lqu_matrix(rho)).eigenvalues[-1])


def correlation_record(rho, gamma_t: float) -> CorrelationRecord:
    """All four measures of an already-evolved state."""
    c = classical_correlation(rho)[0]
    return CorrelationRecord(
        gamma_t=float(gamma_t),
        negativity=negativity(rho),
        classical=c,
        discord=max(mutual_information(rho) - c, 0.0),
        lqu=lqu(rho),
    )
