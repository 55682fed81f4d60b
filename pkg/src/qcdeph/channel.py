"""Collective dephasing of a qubit-qutrit pair.

Both systems see the same fluctuating z-field, so basis state ``|i a>``
picks up a random phase proportional to its weight ``2 i + a`` (the
eigenvalue pattern of ``sigma_z^A + sigma_z^B`` up to an offset).  After
averaging, element ``(m, n)`` is damped by ``xi ** (w_m - w_n)**2`` with
``xi = exp(-gamma_t / 8)`` and weights ``w = (0, 1, 2, 2, 3, 4)``.
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidParams

WEIGHTS = np.array([0, 1, 2, 2, 3, 4])
EXPONENTS = (WEIGHTS[:, None] - WEIGHTS[None, :]) ** 2
EXPONENTS.setflags(write=False)

# the solved map as printed, entry by entry
_PRINTED_EXPONENTS = (
    (0, 1, 4, 4, 9, 16),
    (1, 0, 1, 1, 4, 9),
    (4, 1, 0, 0, 1, 4),
    (4, 1, 0, 0, 1, 4),
    (9, 4, 1, 1, 0, 1),
    (16, 9, 4, 4, 1, 0),
)
assert np.array_equal(EXPONENTS, np.array(_PRINTED_EXPONENTS)), "exponent pattern mismatch"

#: Off-diagonal pair untouched by the channel (|02>, |10>).
DFS_PAIR = (2, 3)


@dataclass(frozen=True)
class DephasingPoint:
    gamma_t: float

    def __post_init__(self):
        if not np.isfinite(self.gamma_t) or self.gamma_t < 0:
            raise InvalidParams(f"gamma_t must be finite and >= 0, got {self.gamma_t}")

    @property
    def xi(self) -> float:
        return float(np.exp(-self.gamma_t / 8.0))

    def damping(self) -> np.ndarray:
        """6x6 matrix of factors ``xi ** EXPONENTS``."""
        return self.xi ** EXPONENTS


def _point(p) -> DephasingPoint:
    return p if isinstance(p, DephasingPoint) else DephasingPoint(float(p))


def dephase(rho0, p) -> np.ndarray:
    """Evolve ``rho0`` to the dephasing point ``p`` (a :class:`DephasingPoint`
    or a bare ``gamma_t``)."""
    rho0 = np.asarray(rho0, dtype=complex)
    return rho0 * _point(p).damping()


def dephase_grid(rho0, gamma_ts) -> np.ndarray:
    """Stack of ``dephase(rho0, g)`` for every ``g`` in ``gamma_ts``; shape ``(len, 6, 6)``."""
    xis = np.exp(-np.asarray(gamma_ts, dtype=float) / 8.0)
    if np.any(~np.isfinite(xis)) or np.any(np.asarray(gamma_ts) < 0):
        raise InvalidParams("gamma_t values must be finite and >= 0")
    return np.asarray(rho0, dtype=complex) * xis[:, None, None] ** EXPONENTS


def asymptotic_state(rho0) -> np.ndarray:
    """The ``xi = 0`` limit: diagonal plus the DFS coherence, everything else zeroed."""
    rho0 = np.asarray(rho0, dtype=complex)
    return np.where(EXPONENTS == 0, rho0, 0.0)

