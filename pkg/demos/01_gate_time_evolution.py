#!/usr/bin/env python3
# Walking the standard gates through time.
#
# Every gate U in the catalog carries its own effective Hamiltonian, so U(t)
# is defined for all t and hits U exactly at t = tau.

import numpy as np

from gateflow import catalog, gate_at_time

np.set_printoptions(precision=4, suppress=True)

z = catalog("Z")
for frac, label in [(0.25, "T"), (0.5, "S"), (1.0, "Z")]:
    print(f"Z(t={frac} tau) -> {label}")
    print(gate_at_time(z, frac * z.tau))
    print()

# The phases are the only thing that moves; the eigenvectors are fixed.
h = catalog("H")
print("H eigenphases:", h.eigenphases)
print("H eigenvectors:")
print(h.eigenvectors)

# Halfway through H is a 'square root of Hadamard'.
half = gate_at_time(h, 0.5)
print()
print("H(tau/2):")
print(half)
print("H(tau/2) squared matches H:", np.allclose(half @ half, h.matrix))

# A stack of times comes back as a stack of matrices.
ts = np.linspace(0, 2, 5)
stack = gate_at_time(catalog("X"), ts)
print()
print("X(t) diagonal over t =", ts)
print(stack[:, 0, 0])
