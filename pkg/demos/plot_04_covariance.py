"""
Number covariance as a cheap entanglement witness
=================================================

Cov(N_1up, N_2down) only needs occupation statistics.  For the ideal state
cos(theta)|1001> - i sin(theta)|0110> it equals sin^2(2 theta).
"""

import numpy as np

from cpbs import hilbert, model, quantifiers, spectral
from cpbs.dynamics import DrainRates, evolve

params = model.ModelParams.benchmark()
H = model.build_hamiltonian(params)
omega = spectral.anticrossing_half_gap(H)
thetas = np.linspace(0, np.pi, 1001)
rho0 = hilbert.pure_state(hilbert.basis_ket(9))

for gamma in (0.0, 1e-4):
    traj = evolve(rho0, H, DrainRates(gamma, gamma).channels(), thetas, omega)
    cov = traj.map(lambda r: quantifiers.covariance(r, "up", "down"))
    first = thetas <= np.pi / 2
    k = int(np.argmax(np.where(first, cov, -np.inf)))
    print(f"Gamma = {gamma:g}: first peak {cov[k]:.4f} at theta/pi = {thetas[k] / np.pi:.3f}")

#########################################################################
# Compare with the analytic curve and with the concurrence of the
# projected two-qubit block

ref = quantifiers.covariance_analytic(thetas)
conc = traj.map(lambda r: quantifiers.concurrence_full(r)[0])
print("max |cov - sin^2 2theta|:", np.abs(cov - ref).max())
print("max |cov - C^2|:        ", np.abs(cov - conc**2).max())
