"""Brute-force Leibniz solving against the closed formulas on random algebras."""

import logging

from quiverhh import f2_subspace, standard_basis
from quiverhh.oracle import oracle_h1, oracle_hh1, random_instances

logging.basicConfig(level=logging.INFO, format="%(message)s")

agree = 0
for i, p in enumerate(random_instances(25, seed=2024)):
    formula = (standard_basis(p).dim_h1, f2_subspace(p).dim_hh1)
    brute = (oracle_h1(p), oracle_hh1(p))
    agree += formula == brute
    print(f"{i:2d}  |V|={len(p.quiver.vertices)} |E|={len(p.quiver.arrows)} N={p.nilpotency} "
          f"rels={len(p.relations)} dim={p.dimension:3d}  H1 {formula[0]:3d}/{brute[0]:<3d} HH1 {formula[1]:3d}/{brute[1]}")
print(f"{agree}/25 agree")
