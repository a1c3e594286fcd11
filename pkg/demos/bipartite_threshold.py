#!/usr/bin/env python3
"""Walk through the bipartite story: how acceleration kills the CHSH violation.

One party of a singlet pair accelerates uniformly.  The wedge horizon damps
their mode, correlations weaken, and the restricted two-setting CHSH value
2 cos^2(r) |sin^2 g + cos g| drops below the classical bound 2 at a finite
acceleration -- even though entanglement survives all the way to r = pi/4.
The unrestricted maximum (Horodecki closed form) decays as 2 sqrt(2) cos r
and only reaches 2 in the infinite-acceleration limit.
"""

import math

import numpy as np

from accelbell import (
    OptimizerConfig,
    acceleration_parameter,
    apply_channel,
    chsh_restricted_max,
    chsh_threshold,
    density,
    horodecki_max,
    maximize_chsh,
    negativity,
    singlet,
)

print(__doc__)

th = chsh_threshold()
print(f"threshold damping angle   r_t = {th.r_t:.9f}  (cos^2 r_t = {th.cos2_rt})")
print(f"threshold acceleration    a_t = {th.a_t_over_omega_c:.9f} * omega * c")
print(f"best restricted setting   gamma* = {th.gamma_star:.9f}  (= pi/3)")
print(f"consistency: r(ln4/2pi) = {acceleration_parameter(math.log(4) / (2 * math.pi)):.9f}")
print()

rho0 = density(singlet())
cfg = OptimizerConfig(restarts=10, seed=1)
print(f"{'r':>8} {'restricted':>11} {'horodecki':>10} {'numeric':>10} {'negativity':>11}")
for r in np.linspace(0.0, math.pi / 4.0, 9):
    rho = apply_channel(rho0, 2, float(r))
    restricted = chsh_restricted_max(float(r))
    closed = horodecki_max(rho)
    numeric = maximize_chsh(rho, cfg)
    neg = negativity(rho, 1)
    marker = "violates" if restricted > 2.0 + 1e-9 else "classical"
    print(f"{r:8.4f} {restricted:11.6f} {closed:10.6f} {numeric:10.6f} {neg:11.6f}  {marker}")

print()
print("The restricted value crosses 2 at r_t; the unrestricted maximum stays")
print("above 2 for every r < pi/4, and the negativity never reaches zero:")
print("entanglement outlives the restricted-settings nonlocality.")
