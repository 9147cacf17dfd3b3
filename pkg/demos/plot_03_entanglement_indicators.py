"""
Entanglement indicators along the open trajectory
=================================================

Open the drains (Gamma = 1e-4 J') and track mutual information,
negativity, the tomographic indicator and the subsystem entropy.
"""

import numpy as np

from cpbs import hilbert, model, quantifiers, spectral
from cpbs.dynamics import DrainRates, evolve

params = model.ModelParams.benchmark()
H = model.build_hamiltonian(params)
omega = spectral.anticrossing_half_gap(H)
thetas = np.linspace(0, np.pi, 1001)

rho0 = hilbert.pure_state(hilbert.basis_ket(9))
traj = evolve(rho0, H, DrainRates().channels(), thetas, omega)
ind = [quantifiers.indicators(r) for r in traj.states]

qmi = np.array([i.qmi_scaled for i in ind])
neg = np.array([i.neg_scaled for i in ind])
tei = np.array([i.tei for i in ind])
svne = np.array([i.svne for i in ind])

for k in range(0, 1001, 125):
    print(f"theta/pi = {thetas[k] / np.pi:.3f}  qmi/2 {qmi[k]:.3f}  2neg {neg[k]:.3f}  "
          f"tei {tei[k]:.3f}  svne {svne[k]:.3f}")

#########################################################################
# Concurrence of the effective two-qubit state for comparison.  The two
# agree early on and drift apart as the drains mix the state.

c_eff = np.abs(np.sin(2 * thetas))
for k in (250, 750):
    print(f"theta/pi = {thetas[k] / np.pi:.2f}: 2neg {neg[k]:.3f}  C_eff {c_eff[k]:.3f}")

#########################################################################
# The drains keep the trace but move weight into lower particle numbers.
# The global state turns mixed, so svne no longer measures entanglement.

purity = np.real(np.einsum("tij,tji->t", traj.states, traj.states))
print("trace, purity at theta = pi:", traj.traces[-1], purity[-1])
print("svne at theta = pi/2:", svne[500], " qmi/2:", qmi[500])
