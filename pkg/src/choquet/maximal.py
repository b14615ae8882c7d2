"""Dyadic maximal operators: Hardy-Littlewood, fractional-measure, and
fractional Orlicz.

Each operator is a top-down sweep: per-level cube statistics are computed
once, upsampled to leaf resolution, and folded into a running maximum.
Ties break toward the smallest level (largest cube) so argmax records are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .content import _coarsen_sum, _refine
from .lattice import CubeId, GridFunction, LatticeConfig
from .young import YoungFunction, luxemburg_norm_table

__all__ = [
    "MaximalResult",
    "hl_maximal",
    "fractional_measure_maximal",
    "orlicz_fractional_maximal",
]


@dataclass(frozen=True)
class MaximalResult:
    values: GridFunction
    argmax_levels: np.ndarray  # per leaf cell, the level of an attaining cube

    def argmax_cube(self, cell: tuple[int, ...]) -> CubeId:
        """The recorded cube attaining the supremum at the given leaf cell."""
        config = self.values.config
        k = int(self.argmax_levels.reshape(config.grid_shape)[cell])
        return CubeId(k, tuple(c >> (config.L - k) for c in cell))


def _sweep(config: LatticeConfig, level_stats: list[np.ndarray]) -> MaximalResult:
    """Running max of per-cube statistics along root-to-leaf paths.

    level_stats[k] holds one value per level-k cube, shaped (2^k,)*n.
    """
    best = np.full(config.grid_shape, level_stats[0].reshape(-1)[0])
    arg = np.zeros(config.grid_shape, dtype=int)
    for k in range(1, config.L + 1):
        up = _refine(level_stats[k], 2 ** (config.L - k))
        better = up > best  # strict: ties keep the larger cube
        best = np.where(better, up, best)
        arg = np.where(better, k, arg)
    return MaximalResult(GridFunction(config, best.reshape(-1)), arg)


def _level_sums(grid: np.ndarray, L: int) -> list[np.ndarray]:
    """Sum of leaf values inside every cube, per level (index L..0 order reversed)."""
    sums = [grid]
    for _ in range(L):
        sums.append(_coarsen_sum(sums[-1]))
    sums.reverse()
    return sums


def hl_maximal(f: GridFunction) -> MaximalResult:
    """Dyadic Hardy-Littlewood maximal function: per leaf, the largest
    average of |f| over the ancestor cubes."""
    config = f.config
    sums = _level_sums(np.abs(f.grid), config.L)
    stats = [sums[k] / 2 ** ((config.L - k) * config.n) for k in range(config.L + 1)]
    return _sweep(config, stats)


def fractional_measure_maximal(mu: GridFunction, d: float | None = None) -> MaximalResult:
    """M_d of the measure with density mu: per leaf, max over ancestor cubes
    of mu(Q) / side(Q)^d."""
    if not mu.is_nonnegative():
        raise ValueError("density has negative cell values")
    config = mu.config
    if d is None:
        d = config.d
    sums = _level_sums(mu.grid, config.L)
    stats = [sums[k] * config.cell_volume * 2.0 ** (k * d) for k in range(config.L + 1)]
    return _sweep(config, stats)


def orlicz_fractional_maximal(f: GridFunction, alpha: float, phi: YoungFunction) -> MaximalResult:
    """Fractional Orlicz maximal function: per leaf, max over ancestor cubes
    of side(Q)^alpha times the Phi-average of f over Q."""
    config = f.config
    if not 0.0 < alpha < config.n:
        raise ValueError(f"alpha must lie in (0, n), got {alpha}")
    norms = luxemburg_norm_table(f, phi)
    shape = lambda k: (2**k,) * config.n  # noqa: E731
    stats = [2.0 ** (-k * alpha) * norms[k].reshape(shape(k)) for k in range(config.L + 1)]
    return _sweep(config, stats)
