#!/usr/bin/env python3
# Bloch sphere orbits under interpolated single-qubit gates.

import math

import numpy as np

from gateflow import bloch, catalog

theta0, phi0 = 1.0, 0.3
psi0 = bloch.qubit_from_angles(theta0, phi0)

for name in ("Z", "X", "Y", "H"):
    spec = catalog(name)
    traj = bloch.sample_trajectory(spec, psi0, 400, 2 * spec.tau)
    axis = bloch.gate_axis(spec)
    resid = bloch.latitude_residual(traj, axis)
    print(f"{name}: axis=({axis.theta:.4f}, {axis.phi:.4f})  latitude residual={resid:.2e}  "
          f"max rebit deviation={traj.imag_residue.max():.4f}")

# A real starting state under Z leaves the rebit circle immediately
# and is furthest away at t = tau/2.
z = catalog("Z")
traj = bloch.sample_trajectory(z, bloch.qubit_from_angles(math.pi / 3, 0.0), 9, z.tau)
for t, r in zip(traj.times, traj.imag_residue):
    print(f"t={t:5.3f}  deviation={r:.4f}")

# write a CSV for plotting elsewhere
with open("h_orbit.csv", "w") as fh:
    fh.write(bloch.sample_trajectory(catalog("H"), [1, 0], 200, 2.0).to_csv())
print("wrote h_orbit.csv")
