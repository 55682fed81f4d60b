"""Acceptance suite: one test per criterion, each at its stated tolerance.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``-s``) and
records it for the terminal summary.
"""

import contextlib
import math
import time

import numpy as np
from scipy.optimize import brentq

from qcdeph import closedform as cf
from qcdeph.channel import DFS_PAIR, dephase, dephase_grid
from qcdeph.correlations import classical_correlation, lqu, negativity, quantum_discord
from qcdeph.ensemble import EnsembleConfig, run_ensemble
from qcdeph.states import (
    DfsMixFamily,
    IsoMixFamily,
    TwoParamFamily,
    dfs_mix_state,
    iso_mix_state,
    projector,
    random_pure_state,
    random_pure_vector,
    two_param_state,
)

from conftest import ACCEPTANCE

SLOW_DEATH = TwoParamFamily(0.1, 0.5)
FAST_DEATH = TwoParamFamily(0.12, 0.4)
GRID10 = np.linspace(0.0, 10.0, 201)
ZERO = 1e-12


@contextlib.contextmanager
def criterion(num, label):
    t0 = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException:
        verdict = "FAIL"
        raise
    else:
        verdict = "PASS"
    finally:
        detail = f"{time.perf_counter() - t0:.2f}s"
        if info:
            detail += ", " + ", ".join(f"{k}={v}" for k, v in info.items())
        ACCEPTANCE[num] = (verdict, label, detail)
        print(f"criterion {num:2d}: {verdict}  {label}  [{detail}]")


def numeric_esd(family, grid_step=0.01, stop=10.0):
    """First zero of the numeric negativity: coarse sweep, then bisection."""
    rho0 = two_param_state(family)
    grid = np.arange(0.0, stop + grid_step / 2, grid_step)
    neg = negativity(dephase_grid(rho0, grid))
    k = int(np.argmax(neg <= ZERO))
    assert k > 0, "no sign change on the sweep"
    lo, hi = grid[k - 1], grid[k]
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if negativity(dephase(rho0, mid)) > ZERO:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def two_param_esd_check(num, family, target, tol):
    with criterion(num, f"ESD of two-parameter family {family}") as info:
        t0 = time.perf_counter()
        numeric = numeric_esd(family)
        closed = cf.esd_time_two_param(family)
        elapsed = time.perf_counter() - t0
        info.update(numeric=f"{numeric:.5f}", closed=f"{closed:.5f}")
        assert abs(numeric - target) <= tol
        assert abs(closed - target) <= tol
        assert elapsed < 1.0


def test_criterion_01_esd_slow_death():
    two_param_esd_check(1, SLOW_DEATH, 5.545, 0.01)


def test_criterion_02_esd_fast_death():
    two_param_esd_check(2, FAST_DEATH, 1.233, 0.005)


def test_criterion_03_classical_time_invariance():
    with criterion(3, "classical correlation constant in time") as info:
        t0 = time.perf_counter()
        grid = np.linspace(0.0, 10.0, 21)
        worst = 0.0
        for fam in (SLOW_DEATH, FAST_DEATH):
            rho0 = two_param_state(fam)
            c = np.array([classical_correlation(r)[0] for r in dephase_grid(rho0, grid)])
            worst = max(worst, float(np.max(np.abs(c - c[0]))))
        elapsed = time.perf_counter() - t0
        info["max_dev"] = f"{worst:.2e}"
        assert worst <= 1e-6
        assert elapsed < 30


def test_criterion_04_oracle_equivalence():
    with criterion(4, "discord and LQU match closed forms at 50 points") as info:
        t0 = time.perf_counter()
        rng = np.random.default_rng(2024)
        d_err = l_err = 0.0
        for _ in range(50):
            alpha = rng.uniform(0, 0.5)
            fam = TwoParamFamily(alpha, rng.uniform(0, 1 - 2 * alpha))
            g = rng.uniform(0, 10)
            rho = dephase(two_param_state(fam), g)
            d_err = max(d_err, abs(quantum_discord(rho) - cf.discord_closed_form(fam, g)))
            l_err = max(l_err, abs(lqu(rho) - cf.lqu_closed_form_two_param(fam, g)))
        elapsed = time.perf_counter() - t0
        info.update(discord_err=f"{d_err:.1e}", lqu_err=f"{l_err:.1e}")
        assert d_err <= 1e-6
        assert l_err <= 1e-8
        assert elapsed < 60


def check_freezing():
    """Frozen negativity for the DFS mixture; returns the plateau values."""
    plateaus = {}
    for a in (0.3, 0.5, 0.7):
        rho0 = dfs_mix_state(DfsMixFamily(a))
        traj = negativity(dephase_grid(rho0, GRID10))
        v1, _ = cf.dfs_mix_eigenvalues(a, 0.0)
        assert abs(traj[-1] - 2 * abs(v1)) <= 1e-6
        assert np.all(np.diff(traj) <= 1e-12)
        plateaus[a] = traj[-1]
    assert abs(plateaus[0.5] - 0.3090) <= 5e-5
    return plateaus


def check_time_invariance():
    """Constant negativity, one death at x2 = 0 and one finite-time death."""
    for a, b in ((0.4, 0.7), (0.5, 0.8)):
        traj = negativity(dephase_grid(iso_mix_state(IsoMixFamily(a, b)), GRID10))
        assert traj[0] > 0
        assert np.ptp(traj) <= 1e-9

    rho = iso_mix_state(IsoMixFamily(0.9, 0.2))
    assert negativity(rho) > 0
    death = brentq(lambda g: negativity(dephase(rho, g)) - 1e-13, 0.0, 10.0, xtol=1e-10)
    assert abs(death - 0.578) <= 0.005
    assert abs(cf.esd_time_iso_mix(0.9, 0.2) - 0.578) <= 0.005

    traj = negativity(dephase_grid(iso_mix_state(IsoMixFamily(0.8, 0.3)), GRID10))
    assert traj[0] > 0 and traj[-1] <= ZERO
    return death


def test_criterion_05_freezing():
    with criterion(5, "negativity freezes for the DFS mixture") as info:
        plateaus = check_freezing()
        info["plateau(0.5)"] = f"{plateaus[0.5]:.6f}"


def test_criterion_06_time_invariance():
    with criterion(6, "time-invariant and sudden-death iso mixtures") as info:
        info["death"] = f"{check_time_invariance():.4f}"


def test_criterion_07_lqu_dynamics():
    with criterion(7, "LQU asymptote and iso-mix stationarity") as info:
        worst = 0.0
        for a in (0.1, 0.3, 0.5, 0.7, 0.9):
            value = lqu(dephase(dfs_mix_state(DfsMixFamily(a)), 50.0))
            target = 1 - max(1 - a, math.sqrt(a * (1 - a) / 2))
            worst = max(worst, abs(value - target))
        assert worst <= 1e-6
        tail = int(0.8 * len(GRID10))
        for a, b in ((0.4, 0.7), (0.5, 0.8)):
            traj = np.array([lqu(r) for r in dephase_grid(iso_mix_state(IsoMixFamily(a, b)), GRID10)])
            assert np.all(np.diff(traj) >= -1e-9)
            assert np.ptp(traj[tail:]) < 1e-4
        info["dfs_err"] = f"{worst:.1e}"


def test_criterion_08_coexistence():
    with criterion(8, "freezing and time invariance in one run") as info:
        plateaus = check_freezing()
        death = check_time_invariance()
        # the DFS pair is what protects both behaviours
        assert DFS_PAIR == (2, 3)
        info.update(plateau=f"{plateaus[0.5]:.4f}", death=f"{death:.4f}")


def test_criterion_09_ensemble():
    with criterion(9, "random ensemble fraction, band and determinism") as info:
        t0 = time.perf_counter()
        cfg = EnsembleConfig(100, 42)
        first = run_ensemble(cfg)
        second = run_ensemble(cfg)
        elapsed = time.perf_counter() - t0
        info["fraction"] = f"{first.entangled_fraction:.2f}"
        assert 0.47 <= first.entangled_fraction <= 0.67
        assert np.all(first.lo <= first.mean) and np.all(first.mean <= first.hi)
        for field in ("mean", "lo", "hi", "asymptotic_negativity", "trajectories"):
            assert getattr(first, field).tobytes() == getattr(second, field).tobytes()
        assert elapsed < 120


def test_criterion_10_channel_properties():
    with criterion(10, "channel keeps states physical, composes, keeps zeros") as info:
        worst = {"trace": 0.0, "min_eig": 0.0, "semigroup": 0.0}
        steps = (0.1, 1.0, 10.0)
        for i in range(100):
            if i % 2:
                rho = random_pure_state(1234, i)
            else:
                # drop one amplitude so a whole row and column start at zero
                v = random_pure_vector(1234, i)
                v[i % 6] = 0.0
                rho = projector(v / np.linalg.norm(v))
            zero = rho == 0
            for g in steps:
                out = dephase(rho, g)
                worst["trace"] = max(worst["trace"], abs(np.trace(out) - np.trace(rho)))
                assert np.array_equal(out, out.conj().T)
                worst["min_eig"] = min(worst["min_eig"], float(np.linalg.eigvalsh(out)[0]))
                assert np.all(out[zero] == 0)
                for h in steps:
                    err = np.max(np.abs(dephase(out, h) - dephase(rho, g + h)))
                    worst["semigroup"] = max(worst["semigroup"], float(err))
        info.update({k: f"{v:.1e}" for k, v in worst.items()})
        assert worst["trace"] <= 1e-12
        assert worst["min_eig"] >= -1e-10
        assert worst["semigroup"] <= 1e-12


def test_criterion_11_discord_equals_lqu_at_zero():
    # (i) alpha = beta = 0; (ii) alpha = gamma = 0; (iii) gamma = 0; (iv) beta = 0
    cases = [(0.0, 1.0), (0.0, 0.0)]
    cases += [(a, 0.0) for a in (0.1, 0.2, 0.3, 0.45)]
    cases += [(a, 1 - 2 * a) for a in (0.1, 0.25, 0.4)]
    with criterion(11, "discord equals LQU at t = 0 for cases i-iv") as info:
        worst = 0.0
        for alpha, gamma in cases:
            rho = two_param_state(TwoParamFamily(alpha, gamma))
            worst = max(worst, abs(quantum_discord(rho) - lqu(rho)))
        info["max_diff"] = f"{worst:.1e}"
        assert worst <= 1e-6
