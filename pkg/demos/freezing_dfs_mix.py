"""
Frozen entanglement from a decoherence-free pair
=================================================

Mixing |psi_3> = (|02> + |10>)/sqrt(2), which the channel leaves alone,
with |psi_1> = (|00> + |12>)/sqrt(2), which it destroys, gives negativity
that decays for a while and then freezes at 2|v1|.  The LQU also settles
on a nonzero plateau.
"""

import numpy as np

from qcdeph import closedform as cf
from qcdeph.channel import dephase_grid
from qcdeph.correlations import lqu, negativity
from qcdeph.states import DfsMixFamily, dfs_mix_state

from _plot import save_lines

grid = np.linspace(0, 10, 201)
neg_series, lqu_series = {}, {}

for alpha in (0.3, 0.5, 0.7):
    states = dephase_grid(dfs_mix_state(DfsMixFamily(alpha)), grid)
    n = negativity(states)
    q = np.array([lqu(r) for r in states])
    neg_series[f"alpha={alpha}"] = n
    lqu_series[f"alpha={alpha}"] = q

    print(f"alpha = {alpha}")
    print(f"  negativity  {n[0]:.6f} -> {n[-1]:.6f}   plateau 2|v1| = {cf.negativity_dfs_mix_plateau(alpha):.6f}")
    print(f"  lqu         {q[0]:.6f} -> {q[-1]:.6f}   asymptote     = {cf.lqu_dfs_mix_asymptote(alpha):.6f}")

save_lines("freezing_negativity", grid, neg_series, ylabel="negativity")
save_lines("freezing_lqu", grid, lqu_series, ylabel="LQU")
