#!/usr/bin/env python3
"""Complex gates as real rotations.

Doubling the dimension turns every unitary into a special orthogonal
matrix.  The raw real gates (X, Z, H, CNOT) have determinant -1 and so
cannot be reached by a continuous real rotation without the extra
dimension.
"""

import numpy as np

from gateflow import catalog, gate_at_time, numerics as nx
from gateflow.gates import MATRICES
from gateflow.realspace import Convention, embed, is_special_orthogonal, so_generator, unembed

np.set_printoptions(precision=3, suppress=True)

for name in ("X", "Z", "H", "CNOT", "BELL"):
    print(f"det({name}) = {nx.determinant(MATRICES[name]).real:+.3f}")

z = catalog("Z")
real_z = embed(gate_at_time(z, 0.5), Convention.A_FIRST)
print()
print("embedded Z at tau/2:")
print(real_z.matrix)
print("special orthogonal:", is_special_orthogonal(real_z.matrix))
print("back to complex:")
print(unembed(real_z))

omega = so_generator(catalog("H"))
print()
print("real generator for H:")
print(omega.matrix)
print("exp(omega tau) matches embedded H:",
      np.allclose(omega.at_time(1.0), embed(MATRICES["H"]).matrix))
print("J_FIRST layout of the same gate:")
print(embed(MATRICES["H"], Convention.J_FIRST).matrix)
