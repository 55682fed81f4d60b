"""
Time-invariant entanglement
============================

|psi_3> mixed with white noise: beta |psi_3><psi_3| + (1 - beta) I/6,
then a fraction alpha of that with the |psi_1> projector.  For beta > 1/2
the negativity never changes; for smaller beta it can die suddenly.
"""

import numpy as np

from qcdeph import closedform as cf
from qcdeph.channel import dephase_grid
from qcdeph.correlations import lqu, negativity
from qcdeph.states import IsoMixFamily, iso_mix_state

from _plot import save_lines

grid = np.linspace(0, 10, 201)
series = {}

for alpha, beta in ((0.4, 0.7), (0.5, 0.8), (0.9, 0.2), (0.8, 0.3)):
    states = dephase_grid(iso_mix_state(IsoMixFamily(alpha, beta)), grid)
    n = negativity(states)
    series[f"({alpha}, {beta})"] = n
    death = cf.esd_time_iso_mix(alpha, beta)
    tag = "constant" if np.ptp(n) < 1e-9 else (f"dies at {death:.4f}" if death is not None else "decays")
    print(f"alpha={alpha} beta={beta}: negativity {n[0]:.6f} -> {n[-1]:.6f} ({tag})")

save_lines("iso_mix_negativity", grid, series, ylabel="negativity")

# LQU grows while the |psi_1> coherences die, then sits still
q = np.array([lqu(r) for r in dephase_grid(iso_mix_state(IsoMixFamily(0.4, 0.7)), grid)])
print(f"\nLQU for (0.4, 0.7): {q[0]:.6f} -> {q[-1]:.6f}, tail spread {np.ptp(q[160:]):.1e}")
save_lines("iso_mix_lqu", grid, {"(0.4, 0.7)": q}, ylabel="LQU")
