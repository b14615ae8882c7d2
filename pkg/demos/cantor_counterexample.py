"""Cantor-type sets where the sparse operator blows up.

Each stage E^k of the construction keeps the 2^n corner cubes at scale
4^-k (for m=2), tuned so the dyadic Hausdorff content of every stage is
exactly 1.  Averaging over the whole nested family then produces a
function whose Choquet L^1 norm grows linearly in the depth, even
though the input is the constant 1.
"""

import numpy as np

from choquet import (
    CantorConfig,
    GridFunction,
    cantor_content,
    cantor_family,
    cantor_lux_bound,
    choquet_norm,
    unboundedness_demo,
    verify_sparse,
)

c = CantorConfig(n=1, m=2, K=4)
L = c.m * c.K
print(f"Cantor family: n={c.n}, m={c.m}, depth K={c.K}, d={c.d}, "
      f"contraction delta={c.delta}")

print("\nevery stage has content exactly 1:")
for k in range(c.K + 1):
    print(f"  H^d(E^{k}) = {cantor_content(c, k, L):.12f}")

fam = cantor_family(c, L)
rep = verify_sparse(fam.config, fam.family)
print(f"\nthe family is eta-sparse with eta = {rep.min_ratio} "
      f"(Carleson constant {rep.carleson_constant})")

print("\nsparse averaging operator applied to the constant 1:")
for depth, norm in unboundedness_demo(c, p=1.0, L=L):
    print(f"  depth {depth}: ||A 1||_L1(H^d) = {norm:.12f}")
one = GridFunction.constant(fam.config, 1.0)
print(f"while ||1||_L1(H^d) = {choquet_norm(one, 1.0):.12f}")
print("so no norm inequality ||A f|| <= C ||f|| can hold.")

info = cantor_lux_bound(c, L)
print("\nthe blow-up is tight against the exponential-class dual norm:")
print(f"  lambda0  = {info['lambda0']:.6f}")
print(f"  Lambda0  = {info['Lambda0']:.6f}")
print(f"  lambda*  = {info['lambda_star']:.6f}  (analytic majorant)")
print(f"  computed = {info['computed_norm']:.6f}  (Luxemburg norm of the stack)")
assert info["computed_norm"] <= info["lambda_star"]
