"""Orlicz norms, tilings, and the two-constant duality chain.

Luxemburg norms over dyadic cubes are the basic bricks.  A tiling of
the root cube turns them into a block norm on one side and a tiled
Orlicz-Morrey norm on the other; the pairing between the two sides is
controlled with absolute constants 2 (single-tile verification step)
and 4 (full chain with the dual witness).
"""

import numpy as np

from choquet import (
    CubeId,
    GridFunction,
    LatticeConfig,
    LlogL,
    Power,
    Tiling,
    block_norm,
    choquet_norm,
    dual_witness,
    frostman_measure,
    luxemburg_norm,
    pairing,
    tiling_orlicz_morrey_norm,
)

cfg = LatticeConfig(n=1, L=5, d=0.5)
rng = np.random.default_rng(21)
root = CubeId(0, (0,))

f = GridFunction(cfg, rng.random(cfg.num_cells) + 0.05)
print("Luxemburg norms of one sample over the root cube:")
for phi in [Power(2), LlogL()]:
    print(f"  ||f||_{{{phi.name}}} = {luxemburg_norm(f, root, phi):.12f}")

t = Tiling([CubeId(2, (j,)) for j in range(4)])
g = GridFunction(cfg, rng.random(cfg.num_cells))
bn = block_norm(f, 2.0, Power(2), t)
dn = tiling_orlicz_morrey_norm(g, 2.0, Power(2).complementary(), t)
print(f"\nfour-tile split: block norm {bn:.6f}, tiled dual norm {dn:.6f}")
print(f"pairing <f, g> = {pairing(f, g):.6f}")
print(f"chain bound 4 * block * dual = {4 * bn * dn:.6f}")

# per-tile dual witness certificates
mask = rng.random(cfg.num_cells) < 0.4
mu = frostman_measure(GridFunction(cfg, mask.astype(float)))
w = dual_witness(f, mu, p=2.0, phi=Power(2), t=t)
print("\ndual witness certificates (cert <= ||f||_{Phi;Q}^(p-1) per tile):")
for q, cert, a in w.certificates:
    print(f"  tile {q}: cert = {cert:.6f}, tile norm = {a:.6f}")
print(f"witness pairs against f: <f, F> = {pairing(f, w.F):.6f}")
print(f"||f||_L2(H^d) = {choquet_norm(f, 2.0):.6f}")
