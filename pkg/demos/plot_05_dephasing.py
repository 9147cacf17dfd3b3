"""
Dephasing in the two-qubit picture
==================================

Project onto the resonant pair and add pure dephasing on |01> and |10>.
Rates are given in 1/ns and converted with J' = 100 micro-eV.
"""

import numpy as np

from cpbs import model, quantifiers
from cpbs.dynamics import DephasingConfig, evolve_2qb_dephasing

params = model.ModelParams.benchmark()
H2 = model.build_2qb_hamiltonian(params, simplified=True)
omega = abs(model.effective_coupling(params))
thetas = np.linspace(0, np.pi, 1001)

rho0 = np.zeros((4, 4), dtype=complex)
rho0[1, 1] = 1

print("Omega =", omega * 100, "micro-eV")
for rate in (0.01, 0.1, 1.0):
    deph = DephasingConfig(rate, unit="per_ns", Jp_ueV=100.0)
    traj = evolve_2qb_dephasing(rho0, H2, deph, thetas, omega)
    conc = traj.map(quantifiers.concurrence)
    cov = traj.map(lambda r: quantifiers.covariance(model.embed_2qb(r), "up", "down"))
    first = thetas <= np.pi / 2
    print(f"{rate:5.2f} GHz ({deph.rate_in_Jp():.2e} J'): peaks {conc[first].max():.3f} "
          f"{conc[~first].max():.3f}, final covariance {cov[-1]:.4f}")

#########################################################################
# Strong dephasing kills the coherence but drives the populations to 1/2
# each, so the covariance tends to one while the concurrence vanishes.
