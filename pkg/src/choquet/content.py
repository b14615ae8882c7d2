"""Dyadic Hausdorff content, its dual Frostman measure, and Choquet norms.

The content of a leaf-cell set is the exact minimum of sum(side^d) over
coverings by lattice cubes.  At finite resolution this is a bottom-up tree
recurrence: a cube either pays its own side^d or delegates to its children,
whichever is cheaper.  Ties resolve toward the single cube so optimal
covers stay canonical.

The Frostman measure realizes the dual packing side: mass H^d(E) enters at
the root and splits among occupied children proportionally to their DP
costs, which keeps mu(Q) <= side(Q)^d on every lattice cube.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import CubeId, GridFunction, LatticeConfig

__all__ = [
    "ContentResult",
    "hausdorff_content",
    "hausdorff_content_value",
    "frostman_measure",
    "choquet_integral",
    "choquet_norm",
]

_TIE_TOL = 1e-12


def _coarsen_sum(a: np.ndarray) -> np.ndarray:
    """Sum over 2x...x2 blocks, halving every axis."""
    for ax in range(a.ndim):
        shape = a.shape[:ax] + (a.shape[ax] // 2, 2) + a.shape[ax + 1 :]
        a = a.reshape(shape).sum(axis=ax + 1)
    return a


def _refine(a: np.ndarray, factor: int) -> np.ndarray:
    """Repeat each entry `factor` times along every axis."""
    for ax in range(a.ndim):
        a = np.repeat(a, factor, axis=ax)
    return a


@dataclass(frozen=True)
class ContentResult:
    value: float
    optimal_cover: frozenset[CubeId]

    def to_json_dict(self) -> dict:
        cover = sorted(self.optimal_cover, key=lambda q: (q.level, q.index))
        return {"value": self.value, "cover": [str(q) for q in cover]}


def _cost_tables(config: LatticeConfig, occ_grid: np.ndarray):
    """DP cost per cube at every level, plus the cube-vs-children choice.

    Returns (costs, take_cube) where costs[k] and take_cube[k] are arrays
    shaped (2^k,)*n.  take_cube[k] marks occupied cubes where paying
    side^d is no worse than delegating to children.
    """
    L, d = config.L, config.d
    costs = [None] * (L + 1)
    take = [None] * (L + 1)
    occ = occ_grid.astype(bool)
    costs[L] = np.where(occ, 2.0 ** (-L * d), 0.0)
    take[L] = occ.copy()
    for k in range(L - 1, -1, -1):
        child_sum = _coarsen_sum(costs[k + 1])
        occ = _coarsen_sum(occ.astype(np.int64)) > 0
        cube_cost = 2.0 ** (-k * d)
        take[k] = occ & (cube_cost <= child_sum + _TIE_TOL)
        costs[k] = np.where(occ, np.minimum(cube_cost, child_sum), 0.0)
    return costs, take


def _as_occupancy(E: GridFunction) -> np.ndarray:
    if not E.is_indicator():
        raise ValueError("expected a {0,1}-valued indicator function")
    return E.grid > 0.5


def _coarsen_sum_batch(a: np.ndarray) -> np.ndarray:
    """Like _coarsen_sum but the leading axis is a batch dimension."""
    for ax in range(1, a.ndim):
        shape = a.shape[:ax] + (a.shape[ax] // 2, 2) + a.shape[ax + 1 :]
        a = a.reshape(shape).sum(axis=ax + 1)
    return a


def content_values_batch(config: LatticeConfig, masks: np.ndarray) -> np.ndarray:
    """DP content values for a batch of occupancy grids, shape (m,) + grid."""
    L, d = config.L, config.d
    occ = masks.astype(bool)
    cost = np.where(occ, 2.0 ** (-L * d), 0.0)
    for k in range(L - 1, -1, -1):
        child_sum = _coarsen_sum_batch(cost)
        occ = _coarsen_sum_batch(occ.astype(np.int64)) > 0
        cost = np.where(occ, np.minimum(2.0 ** (-k * d), child_sum), 0.0)
    return cost.reshape(masks.shape[0])


def hausdorff_content_value(config: LatticeConfig, occ_grid: np.ndarray) -> float:
    """Content of an occupancy grid, value only (no cover extraction)."""
    if not occ_grid.any():
        return 0.0
    return float(content_values_batch(config, occ_grid[None, ...])[0])


def hausdorff_content(E: GridFunction) -> ContentResult:
    """Exact minimum of sum(side^d) over coverings of E by lattice cubes."""
    config = E.config
    occ = _as_occupancy(E)
    if not occ.any():
        return ContentResult(0.0, frozenset())
    costs, take = _cost_tables(config, occ)

    cover: list[CubeId] = []
    stack = [CubeId(0, (0,) * config.n)]
    while stack:
        q = stack.pop()
        if costs[q.level][q.index] == 0.0:
            continue
        if take[q.level][q.index]:
            cover.append(q)
        else:
            for corner in np.ndindex(*(2,) * config.n):
                stack.append(CubeId(q.level + 1, tuple(2 * j + c for j, c in zip(q.index, corner))))
    return ContentResult(float(costs[0].reshape(-1)[0]), frozenset(cover))


def frostman_measure(E: GridFunction) -> GridFunction:
    """Density of a measure mu >= 0 on E with mu(Q) <= side(Q)^d everywhere
    and total mass equal to the content of E."""
    config = E.config
    occ = _as_occupancy(E)
    if not occ.any():
        raise ValueError("cannot build a Frostman measure on the empty set")
    costs, _ = _cost_tables(config, occ)

    mass = costs[0].copy()  # level-0 mass: the content itself
    for k in range(config.L):
        child_cost = costs[k + 1]
        total = _coarsen_sum(child_cost)
        parent_mass = _refine(mass, 2)
        scale = _refine(np.where(total > 0.0, 1.0 / np.where(total > 0.0, total, 1.0), 0.0), 2)
        mass = parent_mass * scale * child_cost
    density = mass / config.cell_volume
    return GridFunction(config, density.reshape(-1))


def choquet_integral(f: GridFunction) -> float:
    """Layer-cake integral of f >= 0 against the content: the exact sum of
    (t_i - t_{i-1}) * H^d({f >= t_i}) over the distinct positive values."""
    if not f.is_nonnegative():
        raise ValueError("Choquet integral requires f >= 0")
    grid = f.grid
    levels = np.unique(grid[grid > 0.0])
    if levels.size == 0:
        return 0.0
    masks = grid[None, ...] >= levels.reshape((-1,) + (1,) * grid.ndim)
    contents = content_values_batch(f.config, masks)
    steps = np.diff(levels, prepend=0.0)
    return float((steps * contents).sum())


def choquet_norm(f: GridFunction, p: float) -> float:
    """The L^p(H^d) functional; p = inf gives the essential sup (max leaf)."""
    if p <= 0:
        raise ValueError(f"exponent p must be positive, got {p}")
    if np.isinf(p):
        return float(np.abs(f.values).max())
    absf = GridFunction(f.config, np.abs(f.values) ** p)
    return choquet_integral(absf) ** (1.0 / p)
