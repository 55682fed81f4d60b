"""Small dense complex-matrix kernel for the 2x3 (qubit x qutrit) problem.

Basis ordering
--------------
Every 6x6 operator in this package is written in the product basis

    index:  0     1     2     3     4     5
    ket:   |00>  |01>  |02>  |10>  |11>  |12>

with the qubit as the first (slow) factor and the qutrit as the second
(fast) factor, i.e. ``index = 3 * qubit + qutrit``.  This is the ordering
``np.kron(A_qubit, B_qutrit)`` produces, so a 6x6 matrix reshaped to
``(2, 3, 2, 3)`` is indexed ``[i, a, j, b]`` for ``<i a| rho |j b>``.
"""

from typing import NamedTuple

import numpy as np

from .exceptions import BadShape, NonHermitian, NonSquare, NotPSD

QUBIT_DIM = 2
QUTRIT_DIM = 3
DIM = QUBIT_DIM * QUTRIT_DIM
BASIS_LABELS = ("00", "01", "02", "10", "11", "12")

HERMITIAN_TOL = 1e-10
PSD_TOL = 1e-10

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


class HermitianEigenResult(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def basis_index(qubit: int, qutrit: int) -> int:
    """Position of ``|qubit qutrit>`` in the 6-dimensional product basis."""
    return QUTRIT_DIM * qubit + qutrit


def _square(A) -> np.ndarray:
    A = np.asarray(A, dtype=complex)
    if A.ndim < 2 or A.shape[-1] != A.shape[-2]:
        raise NonSquare(f"expected a square matrix, got shape {A.shape}")
    return A


def _check_hermitian(A: np.ndarray, tol: float) -> None:
    dev = np.max(np.abs(A - np.swapaxes(A, -1, -2).conj())) if A.size else 0.0
    if dev > tol:
        raise NonHermitian(f"matrix is not Hermitian (max deviation {dev:.3e} > {tol:.0e})")


def _fix_phases(V: np.ndarray) -> np.ndarray:
    # first nonzero component of each eigenvector made real positive
    V = V.copy()
    for k in range(V.shape[1]):
        col = V[:, k]
        scale = np.max(np.abs(col))
        nz = np.flatnonzero(np.abs(col) > 1e-12 * scale)
        if nz.size:
            c = col[nz[0]]
            V[:, k] = col * (abs(c) / c)
    return V


def jacobi_eigh(A, max_sweeps: int = 100):
    """Cyclic Jacobi eigensolver for a small complex Hermitian matrix.

    Each (p, q) step first rotates the phase of ``A[p, q]`` away and then
    applies a real Givens rotation that annihilates it.  Sweeps stop once
    the off-diagonal Frobenius norm drops below ``1e-14 * ||A||_F``.

    Returns
    -------
    w : ndarray
        Eigenvalues, unsorted.
    V : ndarray
        Unitary matrix of eigenvectors (columns).
    """
    A = np.array(A, dtype=complex)
    n = A.shape[0]
    V = np.eye(n, dtype=complex)
    norm = np.linalg.norm(A)
    if norm == 0.0:
        return np.zeros(n), V
    target = 1e-14 * norm
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off < target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                theta = 0.5 * np.arctan2(2.0 * mag, A[q, q].real - A[p, p].real)
                c, s = np.cos(theta), np.sin(theta)
                U = np.eye(n, dtype=complex)
                U[p, p] = c
                U[p, q] = s
                U[q, p] = -s * np.conj(phase)
                U[q, q] = c * np.conj(phase)
                A = U.conj().T @ A @ U
                A[p, q] = A[q, p] = 0.0
                V = V @ U
    return np.diag(A).real.copy(), V


def hermitian_eigen(A, tol: float = HERMITIAN_TOL, method: str = "lapack") -> HermitianEigenResult:
    """Full eigendecomposition of a Hermitian matrix.

    Eigenvalues come back ascending; each eigenvector is normalised so
    that its first nonzero component is real and positive.

    Parameters
    ----------
    A : array_like
        Square matrix with ``max|A - A^H| <= tol``.
    method : {"lapack", "jacobi"}
        ``"lapack"`` uses :func:`numpy.linalg.eigh`; ``"jacobi"`` uses the
        in-house cyclic Jacobi solver :func:`jacobi_eigh`.
    """
    A = _square(A)
    if A.ndim != 2:
        raise NonSquare(f"expected a single matrix, got shape {A.shape}")
    _check_hermitian(A, tol)
    H = 0.5 * (A + A.conj().T)
    if method == "lapack":
        w, V = np.linalg.eigh(H)
    elif method == "jacobi":
        w, V = jacobi_eigh(H)
        order = np.argsort(w, kind="stable")
        w, V = w[order], V[:, order]
    else:
        raise ValueError(f"unknown method {method!r}")
    return HermitianEigenResult(w, _fix_phases(V))


def eigvalsh(A, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix or a stack of them."""
    A = _square(A)
    _check_hermitian(A, tol)
    return np.linalg.eigvalsh(0.5 * (A + np.swapaxes(A, -1, -2).conj()))


def psd_sqrt(A, tol: float = PSD_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are treated as zero; anything more
    negative raises :class:`NotPSD`.  Positive eigenvalues below the
    round-off floor ``1e-14 * lambda_max`` are zeroed too, since their
    square roots would otherwise inject ``~1e-8`` noise into rank-deficient
    inputs.
    """
    w, V = hermitian_eigen(A)
    if w[0] < -tol:
        raise NotPSD(f"matrix has eigenvalue {w[0]:.3e} < -{tol:.0e}")
    w = np.where(w > 1e-14 * max(w[-1], 0.0), w, 0.0)
    S = (V * np.sqrt(w)) @ V.conj().T
    return 0.5 * (S + S.conj().T)


def _as_pair(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim < 2 or rho.shape[-2:] != (DIM, DIM):
        raise BadShape(f"expected a 6x6 qubit-qutrit operator, got shape {rho.shape}")
    return rho


def partial_transpose_qubit(rho) -> np.ndarray:
    """Transpose on the qubit factor: swaps the two off-diagonal 3x3 blocks.

    Works on a single 6x6 matrix or on a stack ``(..., 6, 6)``.
    """
    rho = _as_pair(rho)
    r = rho.reshape(rho.shape[:-2] + (2, 3, 2, 3))
    return np.swapaxes(r, -4, -2).reshape(rho.shape).copy()


def partial_transpose_qutrit(rho) -> np.ndarray:
    """Transpose on the qutrit factor: transposes each 3x3 block in place."""
    rho = _as_pair(rho)
    r = rho.reshape(rho.shape[:-2] + (2, 3, 2, 3))
    return np.swapaxes(r, -3, -1).reshape(rho.shape).copy()


def partial_trace_qutrit(rho) -> np.ndarray:
    """Reduced 2x2 state of the qubit."""
    rho = _as_pair(rho)
    return np.einsum("...iaja->...ij", rho.reshape(rho.shape[:-2] + (2, 3, 2, 3)))


def partial_trace_qubit(rho) -> np.ndarray:
    """Reduced 3x3 state of the qutrit."""
    rho = _as_pair(rho)
    return np.einsum("...iaib->...ab", rho.reshape(rho.shape[:-2] + (2, 3, 2, 3)))


def kron(A, B) -> np.ndarray:
    return np.kron(np.asarray(A, dtype=complex), np.asarray(B, dtype=complex))


def schur(A, B) -> np.ndarray:
    """Entrywise (Hadamard) product."""
    return np.multiply(A, B)


def trace(A) -> complex:
    return complex(np.trace(np.asarray(A)))


def embed_qubit(op) -> np.ndarray:
    """``op (x) I_3`` for a 2x2 qubit operator."""
    return kron(op, np.eye(QUTRIT_DIM))
