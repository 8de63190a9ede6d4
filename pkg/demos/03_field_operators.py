"""The Dirac field at a wave vector as four explicit 16 x 16 matrices.

Because every operator is a finite matrix, "the field satisfies the Dirac
equation" is a statement about matrix norms, checked below together with
the anticommutators and the Fock-space charge conjugation.
"""

import numpy as np

from diracfock import natural_units
from diracfock.fields import (
    dirac_residual,
    adjoint_dirac_residual,
    fock_charge_conjugation,
    heisenberg_residual,
    inverse_relation_residual,
    mixed_car_residual,
    psi_matrices,
)
from diracfock.fock import DIM, charge_operator

consts = natural_units()
k = np.array([0.7, 0.1, -0.9])
kp = np.array([-0.4, 1.2, 0.3])
x = np.array([0.5, 0.2, -0.1, 0.8])
y = np.array([-0.3, 0.6, 0.4, 0.0])

p = psi_matrices(k, x, consts.kappa)
print(f"psi has shape {p.shape}: four spinor components, each a {DIM} x {DIM} matrix")
print()
print("field equation residuals at one spacetime point:")
print(f"   i gamma d psi - kappa psi : {dirac_residual(k, x, consts.kappa):.3e}")
print(f"   adjoint equation          : {adjoint_dirac_residual(k, x, consts.kappa):.3e}")
print("projecting the field back onto single modes (s = 1..4):")
for s in (1, 2, 3, 4):
    print(f"   mode {s}: {inverse_relation_residual(s, k, x, consts.kappa):.3e}")
print("Heisenberg time evolution against the mode hamiltonian:")
for s in (1, 2, 3, 4):
    print(f"   mode {s}: {heisenberg_residual(s, k, x, consts):.3e}")

print()
print("anticommutators across two wave vectors and two points")
print("(psi with psi vanishes; psi with psi-dagger is the spinor overlap")
print("times the identity):")
print(f"   worst residual: {mixed_car_residual(k, kp, x, y, consts.kappa):.3e}")

print()
print("== Fock-space charge conjugation ==")
sample = np.array([[0.3, -0.5, 0.8], [1.2, 0.1, -0.4], [-0.7, 0.9, 0.2]])
chat, heldout = fock_charge_conjugation(consts.kappa, sample)
print(f"unitarity defect      : {np.abs(chat.conj().T @ chat - np.eye(DIM)).max():.3e}")
print(f"held-out intertwining : {heldout:.3e}")
qhat = charge_operator(consts)
print(f"conjugation flips Q   : {np.abs(chat @ qhat @ chat.conj().T + qhat).max():.3e}")
