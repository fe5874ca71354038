#!/usr/bin/env python3
# Entangling two qubits by running CNOT continuously.

import math

import numpy as np

from gateflow import entanglement as ent

np.set_printoptions(precision=4, suppress=True)

print("CNOT at tau/2:")
print(ent.cnot_at_time(0.5))

print()
print("  t     concurrence   sin(pi t / 2)")
for t in np.linspace(0, 1, 11):
    c = ent.concurrence(ent.bell_prepare(0, t))
    print(f"{t:4.1f}   {c:.6f}      {math.sin(math.pi * t / 2):.6f}")

for k in range(4):
    print(f"bell_prepare({k}) ->", ent.bell_prepare(k, 1.0))

# CNOT's eigenphases do not split into a sum of single-qubit phases,
# which is why the path generates entanglement at all.
print()
print("CNOT phases factorizable:", ent.phase_factorizable(ent.cnot_interaction()))
