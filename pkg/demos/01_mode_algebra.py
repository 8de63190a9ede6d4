"""Tour of the 16-dimensional mode space at a single wave vector.

Four fermionic modes, so the whole Fock space is explicit: every operator
is a 16 x 16 matrix and every identity can be checked by matrix algebra.
"""

import numpy as np

from diracfock import PhysicalConstants
from diracfock.fock import (
    basis_state,
    charge_operator,
    hamiltonian,
    larmor_evolution_check,
    mode_annihilator,
    mode_creator,
    number_operator,
    vacuum_state,
)

np.set_printoptions(precision=3, suppress=True, linewidth=100)

print("== canonical anticommutation relations ==")
worst = 0.0
for s in (1, 2, 3, 4):
    for t in (1, 2, 3, 4):
        a, b = mode_annihilator(s), mode_annihilator(t)
        bd = mode_creator(t)
        worst = max(worst, np.abs(a @ b + b @ a).max())
        anti = a @ bd + bd @ a
        target = np.eye(16) if s == t else np.zeros((16, 16))
        worst = max(worst, np.abs(anti - target).max())
print(f"worst CAR residual over all 16 mode pairs: {worst} (exact zeros)")

print()
print("== occupation ladder ==")
vac = vacuum_state()
print("vacuum is annihilated by every mode:",
      all(np.abs(mode_annihilator(s) @ vac).max() == 0 for s in (1, 2, 3, 4)))
state = basis_state([1, 3])
counts = [float((state.conj() @ number_operator(s) @ state).real) for s in (1, 2, 3, 4)]
print("occupations of the state with modes 1 and 3 filled:", counts)

print()
print("== spectra ==")
consts = PhysicalConstants()
k = np.array([0.6, -0.2, 1.1])
h = hamiltonian(k, consts)
evals = np.linalg.eigvalsh(h)
k0 = np.sqrt(consts.kappa**2 + k @ k)
print(f"hamiltonian eigenvalues in units of hbar omega (omega = c k0, k0 = {k0:.4f}):")
print(np.round(evals / (consts.hbar * consts.c * k0), 12))
q = charge_operator(consts)
print("charge eigenvalues (multiplicities 1, 4, 6, 4, 1):")
vals, counts = np.unique(np.round(np.linalg.eigvalsh(q), 12), return_counts=True)
for v, c in zip(vals, counts):
    print(f"   {v:+.1f} x{c}")

print()
print("== two-level precession ==")
# a superposition of empty and one occupied mode precesses like a spin in a
# magnetic field; the residual compares the exact propagator to the formula
out = larmor_evolution_check(omega=0.7, t=2.3)
for name, value in out.items():
    print(f"   {name}: {value:.3e}")
