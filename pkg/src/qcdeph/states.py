"""Qubit-qutrit state families and Haar-random pure states.

All constructors return a 6x6 complex ``ndarray`` in the basis documented
in :mod:`qcdeph.matcore`.
"""

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exceptions import BadIndex, InvalidParams, InvariantViolation
from .matcore import DIM, PSD_TOL, basis_index

TRACE_TOL = 1e-10
HERMITIAN_TOL = 1e-10

#: Identifier of the random stream used by :func:`random_pure_vector`.
RNG_NAME = "philox4x64/seedsequence-spawn/box-muller v1"

_SQRT_HALF = 1.0 / np.sqrt(2.0)
_PARAM_SLACK = 1e-12


def ket(*terms) -> np.ndarray:
    """Build a 6-vector from ``(amplitude, (qubit, qutrit))`` pairs."""
    v = np.zeros(DIM, dtype=complex)
    for amp, (i, a) in terms:
        v[basis_index(i, a)] += amp
    return v


def projector(v) -> np.ndarray:
    """``|v><v|``, symmetrised so that it is exactly Hermitian in floating point."""
    v = np.asarray(v, dtype=complex)
    P = np.outer(v, v.conj())
    return 0.5 * (P + P.conj().T)


def bell_basis_vectors():
    """The qubit-qubit Bell vectors embedded in the 2x3 space.

    Returns
    -------
    phi_plus, phi_minus, psi_plus, psi_minus : ndarray
        ``(|00> +- |11>)/sqrt2`` and ``(|01> +- |10>)/sqrt2``.
    """
    h = _SQRT_HALF
    return (
        ket((h, (0, 0)), (h, (1, 1))),
        ket((h, (0, 0)), (-h, (1, 1))),
        ket((h, (0, 1)), (h, (1, 0))),
        ket((h, (0, 1)), (-h, (1, 0))),
    )


_PSI_TERMS = {
    1: ((0, 0), (1, 2)),
    2: ((0, 1), (1, 2)),
    3: ((0, 2), (1, 0)),
}


def psi_k_vector(k: int) -> np.ndarray:
    """Maximally entangled vectors ``psi_1 = (|00>+|12>)/sqrt2``,
    ``psi_2 = (|01>+|12>)/sqrt2`` and ``psi_3 = (|02>+|10>)/sqrt2``."""
    if k not in _PSI_TERMS:
        raise BadIndex(f"k must be 1, 2 or 3, got {k!r}")
    a, b = _PSI_TERMS[k]
    return ket((_SQRT_HALF, a), (_SQRT_HALF, b))


def psi_k_state(k: int) -> np.ndarray:
    return projector(psi_k_vector(k))


def _check_unit(name, x):
    if not np.isfinite(x) or not 0.0 <= x <= 1.0:
        raise InvalidParams(f"{name} must lie in [0, 1], got {x}")


@dataclass(frozen=True)
class TwoParamFamily:
    """Parameters of the two-parameter class at qutrit dimension 3.

    ``beta`` is derived from the trace condition ``2 alpha + 3 beta + gamma = 1``.
    """

    alpha: float
    gamma: float

    def __post_init__(self):
        if not np.isfinite(self.alpha) or not 0.0 <= self.alpha <= 0.5:
            raise InvalidParams(f"alpha must lie in [0, 1/2], got {self.alpha}")
        _check_unit("gamma", self.gamma)
        if (1.0 - 2.0 * self.alpha - self.gamma) / 3.0 < -_PARAM_SLACK:
            raise InvalidParams(
                f"beta = (1 - 2 alpha - gamma)/3 must be >= 0, got alpha={self.alpha}, gamma={self.gamma}"
            )

    @property
    def beta(self) -> float:
        return max(0.0, (1.0 - 2.0 * self.alpha - self.gamma) / 3.0)


@dataclass(frozen=True)
class DfsMixFamily:
    """``alpha |psi_3><psi_3| + (1 - alpha) |psi_2><psi_2|``."""

    alpha: float

    def __post_init__(self):
        _check_unit("alpha", self.alpha)


@dataclass(frozen=True)
class IsoMixFamily:
    """``beta |psi_3><psi_3| + (1 - beta) * iso_state(alpha)``."""

    alpha: float
    beta: float

    def __post_init__(self):
        _check_unit("alpha", self.alpha)
        _check_unit("beta", self.beta)


def two_param_state(f: TwoParamFamily) -> np.ndarray:
    phi_p, phi_m, psi_p, psi_m = bell_basis_vectors()
    noise = projector(ket((1, (0, 2)))) + projector(ket((1, (1, 2))))
    bell = projector(phi_p) + projector(phi_m) + projector(psi_p)
    return f.alpha * noise + f.beta * bell + f.gamma * projector(psi_m)


def dfs_mix_state(f: DfsMixFamily) -> np.ndarray:
    return f.alpha * psi_k_state(3) + (1.0 - f.alpha) * psi_k_state(2)


def iso_state(alpha: float) -> np.ndarray:
    """Isotropic-type state ``alpha |psi_1><psi_1| + (1 - alpha) I/6``."""
    _check_unit("alpha", alpha)
    return alpha * psi_k_state(1) + (1.0 - alpha) / DIM * np.eye(DIM, dtype=complex)


def iso_mix_state(f: IsoMixFamily) -> np.ndarray:
    return f.beta * psi_k_state(3) + (1.0 - f.beta) * iso_state(f.alpha)


def substream(master_seed: int, index: int) -> np.random.Generator:
    """Independent Philox stream number ``index`` under ``master_seed``.

    The stream depends only on the pair, never on how many other streams
    were drawn or in which order.
    """
    ss = np.random.SeedSequence(entropy=int(master_seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(ss))


def random_pure_vector(master_seed: int, index: int) -> np.ndarray:
    """Haar-random unit vector in C^6.

    Draws 12 uniforms ``u`` from :func:`substream`; component ``k`` is the
    Box-Muller pair ``sqrt(-2 ln(1 - u[2k])) * exp(2 pi i u[2k+1])`` (real
    and imaginary parts are independent standard normals).  The vector is
    then normalised.
    """
    gen = substream(master_seed, index)
    while True:
        u = gen.random(2 * DIM)
        radius = np.sqrt(-2.0 * np.log1p(-u[0::2]))
        v = radius * np.exp(2j * np.pi * u[1::2])
        norm = np.linalg.norm(v)
        if norm > 0.0:
            return v / norm


def random_pure_state(master_seed: int, index: int) -> np.ndarray:
    return projector(random_pure_vector(master_seed, index))


def validate_density_matrix(rho, dim: int = DIM) -> np.ndarray:
    """Check shape, Hermiticity, unit trace and positivity.

    Returns the matrix as a complex ndarray; raises
    :class:`~qcdeph.exceptions.InvariantViolation` naming the first failed
    check otherwise.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise InvariantViolation("shape", f"expected shape ({dim}, {dim}), got {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise InvariantViolation("shape", "matrix has non-finite entries")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > HERMITIAN_TOL:
        raise InvariantViolation("hermiticity", f"Hermiticity violated: max |rho - rho^H| = {herm:.3e}")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvariantViolation("trace", f"trace violated: Tr rho = {tr:.12g}")
    lam = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0]
    if lam < -PSD_TOL:
        raise InvariantViolation("positivity", f"positivity violated: minimum eigenvalue {lam:.3e}")
    return rho


def to_json_dict(rho) -> dict:
    """DensityMatrix JSON form: ``{"dim": 6, "re": [...36], "im": [...36]}``, row-major."""
    rho = np.asarray(rho, dtype=complex)
    return {
        "dim": int(rho.shape[0]),
        "re": [float(x) for x in rho.real.ravel()],
        "im": [float(x) for x in rho.imag.ravel()],
    }


def from_json_dict(obj) -> np.ndarray:
    """Inverse of :func:`to_json_dict`.  Raises ``ValueError`` on schema errors."""
    if not isinstance(obj, dict):
        raise ValueError("density matrix JSON must be an object")
    try:
        dim, re, im = obj["dim"], obj["re"], obj["im"]
    except KeyError as err:
        raise ValueError(f"missing key {err.args[0]!r}") from None
    if dim != DIM or isinstance(dim, bool):
        raise ValueError(f"'dim' must be {DIM}, got {dim!r}")
    if not (isinstance(re, list) and isinstance(im, list)) or len(re) != dim * dim or len(im) != dim * dim:
        raise ValueError(f"'re' and 'im' must be lists of {dim * dim} numbers")
    try:
        re = np.array(re, dtype=float)
        im = np.array(im, dtype=float)
    except (TypeError, ValueError):
        raise ValueError("'re' and 'im' must contain only numbers") from None
    return (re + 1j * im).reshape(dim, dim)


def save_state(rho, path) -> None:
    Path(path).write_text(json.dumps(to_json_dict(rho)))


def load_state(path) -> np.ndarray:
    """Read a DensityMatrix JSON file.  Schema problems raise ``ValueError``;
    invariant checks are left to :func:`validate_density_matrix`."""
    return from_json_dict(json.loads(Path(path).read_text()))
