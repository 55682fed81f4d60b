"""Closed-form correlation curves for the three analytic state families.

These are independent of the numeric machinery in
:mod:`qcdeph.correlations` and serve as its cross-checks.  Entropic
expressions use ``log2``; the sudden-death times use the natural log.
"""

import math

from .exceptions import InvalidParams
from .states import TwoParamFamily


def _xi(gamma_t) -> float:
    gamma_t = float(gamma_t)
    if not math.isfinite(gamma_t) or gamma_t < 0:
        raise InvalidParams(f"gamma_t must be finite and >= 0, got {gamma_t}")
    return math.exp(-gamma_t / 8.0)


def _unit(name, x):
    if not 0.0 <= x <= 1.0:
        raise InvalidParams(f"{name} must lie in [0, 1], got {x}")


def _xlog2x(x: float) -> float:
    return x * math.log2(x) if x > 0 else 0.0


# -- two-parameter family ---------------------------------------------------


def classical_closed_form(f: TwoParamFamily) -> float:
    """Classical correlation; the same at every ``gamma_t``."""
    b, g = f.beta, f.gamma
    s = 3 * b + g
    return -s * math.log2(s / 2) + _xlog2x(2 * b) + _xlog2x(b + g) if s > 0 else 0.0


def discord_closed_form(f: TwoParamFamily, gamma_t: float) -> float:
    xi = _xi(gamma_t)
    a, b, g = f.alpha, f.beta, f.gamma
    plus = (b + g + xi * (b - g)) / 2
    minus = (b + g - xi * (b - g)) / 2
    return 1 - 2 * a - 2 * b - _xlog2x(b + g) + _xlog2x(plus) + _xlog2x(minus)


def lqu_closed_form_two_param(f: TwoParamFamily, gamma_t: float) -> float:
    xi = _xi(gamma_t)
    a, b, g = f.alpha, f.beta, f.gamma
    root = math.sqrt(b * (1 + xi) + g * (1 - xi)) * math.sqrt(b * (1 - xi) + g * (1 + xi))
    return 1 - 2 * a - 2 * b - root


def negativity_closed_form_two_param(f: TwoParamFamily, gamma_t: float) -> float:
    xi = _xi(gamma_t)
    return max(0.0, xi * (f.gamma - f.beta) - 2 * f.beta)


def esd_time_two_param(f: TwoParamFamily):
    """``gamma_t`` at which the negativity first vanishes.

    ``None`` when ``beta == 0`` (entanglement survives at every finite
    time).  Returns ``0.0`` when the state is already separable at
    ``gamma_t = 0``.
    """
    b, g = f.beta, f.gamma
    if b == 0.0:
        return None
    if g <= b:
        raise InvalidParams(f"sudden-death time needs gamma > beta, got gamma={g}, beta={b}")
    return max(0.0, 8.0 * math.log((g - b) / (2 * b)))


# -- freezing family: alpha psi_3 + (1 - alpha) psi_2 -----------------------


def dfs_mix_eigenvalues(alpha: float, gamma_t: float):
    """The two partial-transpose eigenvalues ``(v1, v2)`` that can go negative."""
    _unit("alpha", alpha)
    xi = _xi(gamma_t)
    a = alpha
    v1 = ((1 - a) - math.sqrt((1 - a) ** 2 + 4 * a * a)) / 4
    v2 = (a - math.sqrt(a * a + 4 * xi**18 * (1 - a) ** 2)) / 4
    return v1, v2


def negativity_closed_form_dfs_mix(alpha: float, gamma_t: float) -> float:
    v1, v2 = dfs_mix_eigenvalues(alpha, gamma_t)
    return 2 * (max(0.0, -v1) + max(0.0, -v2))


def negativity_dfs_mix_plateau(alpha: float) -> float:
    """Frozen negativity ``2 |v1|`` reached once ``v2`` has died out."""
    return 2 * max(0.0, -dfs_mix_eigenvalues(alpha, 0.0)[0])


def dfs_mix_lqu_eigenvalues(alpha: float, gamma_t: float):
    """Eigenvalues ``(w11, w33)`` of the LQU matrix; ``w22 == w11``."""
    _unit("alpha", alpha)
    xi = _xi(gamma_t)
    a = alpha
    w11 = math.sqrt(a) * (math.sqrt((1 - a) * (1 - xi**9)) + math.sqrt((1 - a) * (1 + xi**9))) / (2 * math.sqrt(2))
    w33 = (1 - a) * math.sqrt(1 - xi**18)
    return w11, w33


def lqu_closed_form_dfs_mix(alpha: float, gamma_t: float) -> float:
    return 1 - max(dfs_mix_lqu_eigenvalues(alpha, gamma_t))


def lqu_dfs_mix_initial(alpha: float) -> float:
    _unit("alpha", alpha)
    return 1 - 0.5 * math.sqrt(alpha * (1 - alpha))


def lqu_dfs_mix_asymptote(alpha: float) -> float:
    _unit("alpha", alpha)
    return 1 - max(1 - alpha, math.sqrt(alpha * (1 - alpha) / 2))


# -- time-invariant family: beta psi_3 + (1 - beta) iso(alpha) ----------------


def iso_mix_eigenvalues(alpha: float, beta: float, gamma_t: float):
    """Partial-transpose eigenvalues ``(x1, x2)``; ``x1`` does not depend on time."""
    _unit("alpha", alpha)
    _unit("beta", beta)
    xi = _xi(gamma_t)
    x1 = (1 + 2 * alpha * (1 - beta) - 4 * beta) / 6
    x2 = (1 + 2 * beta - alpha * (1 - beta) * (1 + 3 * xi**16)) / 6
    return x1, x2


def negativity_closed_form_iso_mix(alpha: float, beta: float, gamma_t: float) -> float:
    x1, x2 = iso_mix_eigenvalues(alpha, beta, gamma_t)
    return 2 * (max(0.0, -x1) + max(0.0, -x2))


def esd_time_iso_mix(alpha: float, beta: float):
    """Root of ``x2 = 0`` in ``gamma_t``, or ``None`` when ``x2`` never
    changes sign (time-invariant or initially separable states)."""
    _unit("alpha", alpha)
    _unit("beta", beta)
    if alpha * (1 - beta) == 0.0:
        return None
    xi16 = ((1 + 2 * beta) / (alpha * (1 - beta)) - 1) / 3
    if not 0.0 < xi16 < 1.0:
        return None
    # xi**16 = exp(-2 gamma_t)
    return -0.5 * math.log(xi16)

