"""
Sudden death in the two-parameter family
=========================================

A qubit-qutrit state mixing |psi_3> (weight gamma), the two pairs
|00>,|12> and |01>,|02> (weight alpha each) and a bit of |psi_1>/|psi_2>
coherence (weight beta = (1 - 2 alpha - gamma)/3) is pushed through
collective dephasing.  Negativity dies at a finite time while discord and
LQU decay smoothly and the classical correlation does not move at all.
"""

import numpy as np

from qcdeph import closedform as cf
from qcdeph.channel import dephase_grid
from qcdeph.correlations import correlation_record
from qcdeph.states import TwoParamFamily, two_param_state

from _plot import save_lines

grid = np.linspace(0, 8, 33)

for fam in (TwoParamFamily(0.1, 0.5), TwoParamFamily(0.12, 0.4)):
    print(f"\n{fam}  beta = {fam.beta:.4f}")
    print(f"  entanglement dies at gamma t = {cf.esd_time_two_param(fam):.4f}")
    rho0 = two_param_state(fam)

    # every measure at every grid point; C is the slow one (full maximisation)
    recs = [correlation_record(r, g) for r, g in zip(dephase_grid(rho0, grid), grid)]
    print("  gamma_t  negativity  classical  discord    lqu")
    for rec in recs[::4]:
        print(f"  {rec.gamma_t:6.2f}  {rec.negativity:10.6f}  {rec.classical:9.6f}  {rec.discord:9.6f}  {rec.lqu:.6f}")

    c = np.array([r.classical for r in recs])
    print(f"  spread of C over the grid: {np.ptp(c):.1e}")

    save_lines(
        f"two_param_a{fam.alpha}_g{fam.gamma}",
        grid,
        {k: [getattr(r, k) for r in recs] for k in ("negativity", "classical", "discord", "lqu")},
    )
