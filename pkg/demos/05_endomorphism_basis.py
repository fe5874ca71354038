#!/usr/bin/env python3
# The real operator basis built from I, X, J, Z tensor products.

from gateflow import endomorphism as endo
from gateflow.realspace import Convention

for n in (1, 2, 3):
    rep = endo.verify_basis(n)
    anti = endo.antisymmetric_indices(n)
    print(f"n={n}: {rep.count} elements, orthonormal={rep.passed(1e-12)}, antisymmetric={len(anti)}")

print()
for b in endo.basis(2):
    ks = sorted(endo.commuting_j_positions(b))
    print(f"{b.index:2d} {b.label:6s} {endo.classify(b).name:13s} commutes with J at {ks}")

print()
for n in (2, 3):
    for conv in Convention:
        print(f"n={n} {conv.name}: image dimension {endo.mapping_image_dimension(n, conv)} of {4**n}")
