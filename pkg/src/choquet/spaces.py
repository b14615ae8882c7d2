"""Norm scales over the content: Morrey, Orlicz-Morrey (global and tiled),
Orlicz block norms, pairings, the dual-witness construction, and
associate-norm lower bounds.

Associate norms are suprema over infinite balls and are never computed
exactly; `associate_lower_bound` certifies them from below by maximizing
pairings over generated admissible witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .content import choquet_integral, choquet_norm, frostman_measure
from .lattice import (
    CubeId,
    GridFunction,
    LatticeConfig,
    Tiling,
    cube_slices,
    measure_of_cube,
    validate_tiling,
)
from .maximal import fractional_measure_maximal, orlicz_fractional_maximal
from .young import YoungFunction, luxemburg_norm, luxemburg_norm_table

__all__ = [
    "SpaceSpec",
    "DualWitness",
    "morrey_norm",
    "orlicz_morrey_norm",
    "block_norm",
    "tiling_orlicz_morrey_norm",
    "pairing",
    "dual_witness",
    "associate_lower_bound",
    "space_norm",
    "enumerate_tilings",
    "greedy_min_tiling",
]


def _require_tiling(config: LatticeConfig, t: Tiling) -> None:
    report = validate_tiling(config, t)
    if not report.ok:
        raise ValueError(f"invalid tiling: {report.kind} cell {report.cell}")


def morrey_norm(mu: GridFunction, p: float) -> float:
    """Choquet L^p norm of the fractional measure maximal function of mu."""
    if p <= 1:
        raise ValueError(f"Morrey exponent must satisfy p > 1, got {p}")
    return choquet_norm(fractional_measure_maximal(mu).values, p)


def orlicz_morrey_norm(f: GridFunction, p: float, phi: YoungFunction) -> float:
    """Choquet L^p norm of the fractional Orlicz maximal function; the
    p = inf branch is the direct sup over all lattice cubes."""
    if p <= 1:
        raise ValueError(f"Orlicz-Morrey exponent must satisfy p > 1, got {p}")
    config = f.config
    alpha = config.n - config.d
    if np.isinf(p):
        norms = luxemburg_norm_table(f, phi)
        return max(float(2.0 ** (-k * alpha) * norms[k].max()) for k in range(config.L + 1))
    return choquet_norm(orlicz_fractional_maximal(f, alpha, phi).values, p)


def _tile_profile(f: GridFunction, phi: YoungFunction, t: Tiling) -> list[tuple[CubeId, float]]:
    table = luxemburg_norm_table(f, phi)
    side = lambda k: 2**k  # noqa: E731
    out = []
    for q in t:
        flat = int(np.ravel_multi_index(q.index, (side(q.level),) * f.config.n))
        out.append((q, float(table[q.level][flat])))
    return out


def block_norm(f: GridFunction, p: float, phi: YoungFunction, t: Tiling) -> float:
    """Block norm: Choquet L^1 norm of the tile-wise p-th power Luxemburg
    profile, to the power 1/p."""
    if p < 1:
        raise ValueError(f"block exponent must satisfy p >= 1, got {p}")
    config = f.config
    _require_tiling(config, t)
    step = np.zeros(config.grid_shape)
    for q, a in _tile_profile(f, phi, t):
        step[cube_slices(config, q)] = a**p
    return choquet_integral(GridFunction(config, step.reshape(-1))) ** (1.0 / p)


def tiling_orlicz_morrey_norm(g: GridFunction, pprime: float, phibar: YoungFunction, t: Tiling) -> float:
    """Tiled Orlicz-Morrey norm: Choquet L^1 norm of the tile profile of
    (side^(n-d) * Luxemburg norm)^p', to the power 1/p'."""
    if pprime < 1:
        raise ValueError(f"exponent must satisfy p' >= 1, got {pprime}")
    config = g.config
    _require_tiling(config, t)
    alpha = config.n - config.d
    profile = _tile_profile(g, phibar, t)
    if np.isinf(pprime):
        return max(q.side**alpha * a for q, a in profile)
    step = np.zeros(config.grid_shape)
    for q, a in profile:
        step[cube_slices(config, q)] = (q.side**alpha * a) ** pprime
    return choquet_integral(GridFunction(config, step.reshape(-1))) ** (1.0 / pprime)


def pairing(f: GridFunction, g: GridFunction) -> float:
    """Lebesgue inner product over the root cube."""
    if f.config != g.config:
        raise ValueError("pairing requires a common lattice")
    return float((f.values * g.values).sum() * f.config.cell_volume)


class InadmissibleMeasureError(ValueError):
    def __init__(self, cube: CubeId, mass: float, budget: float):
        super().__init__(f"measure violates mu(Q) <= side^d at {cube}: {mass} > {budget}")
        self.cube = cube


def _check_admissible(mu: GridFunction, tol: float = 1e-12) -> None:
    config = mu.config
    from .content import _coarsen_sum  # local import to avoid a cycle at module load

    sums = mu.grid * config.cell_volume
    for k in range(config.L, -1, -1):
        budget = 2.0 ** (-k * config.d)
        bad = np.argwhere(sums > budget + tol)
        if bad.size:
            idx = tuple(int(x) for x in bad[0])
            raise InadmissibleMeasureError(CubeId(k, idx), float(sums[idx]), budget)
        if k:
            sums = _coarsen_sum(sums)


@dataclass(frozen=True)
class DualWitness:
    """The tiled dual test function F and its per-tile certificates."""

    F: GridFunction
    certificates: tuple[tuple[CubeId, float, float], ...]  # (cube, side^(n-d)*||F_Q||, ||f||_{Phi;Q})


def dual_witness(
    f: GridFunction,
    mu: GridFunction,
    p: float,
    phi: YoungFunction,
    t: Tiling,
) -> DualWitness:
    """Per-tile dual test function built from the derivative of the Young
    function at the normalized data, weighted by the admissible measure.

    On each tile Q with positive Luxemburg norm a:
        f_Q = Phi'(|f|/a) 1_Q
        F_Q = [1 + mean_Q Phibar(Phi'(|f|/a))]^(-1) a^(p-1) (mu(Q)/|Q|) f_Q
    The attached certificate side(Q)^(n-d) ||F_Q||_{Phibar;Q} is bounded by
    a^(p-1) whenever mu is admissible.
    """
    if p <= 1:
        raise ValueError(f"exponent must satisfy p > 1, got {p}")
    config = f.config
    _require_tiling(config, t)
    _check_admissible(mu)
    phibar = phi.complementary()
    alpha = config.n - config.d

    out = np.zeros(config.grid_shape)
    certs = []
    for q in t:
        a = luxemburg_norm(f, q, phi)
        if a == 0.0:
            certs.append((q, 0.0, 0.0))
            continue
        sl = cube_slices(config, q)
        fq = phi.deriv(np.abs(f.grid[sl]) / a)
        b = float(phibar(fq).mean())
        weight = a ** (p - 1.0) * (measure_of_cube(mu, q) / q.volume) / (1.0 + b)
        out[sl] = weight * fq
        F_q = GridFunction(config, np.where(_mask(config, q), out, 0.0).reshape(-1))
        cert = q.side**alpha * luxemburg_norm(F_q, q, phibar)
        certs.append((q, cert, a))
    return DualWitness(GridFunction(config, out.reshape(-1)), tuple(certs))


def _mask(config: LatticeConfig, q: CubeId) -> np.ndarray:
    m = np.zeros(config.grid_shape, dtype=bool)
    m[cube_slices(config, q)] = True
    return m


@dataclass(frozen=True)
class SpaceSpec:
    """Addressable norm: tag in {morrey, orlicz_morrey, orlicz_morrey_inf,
    block, tiling_orlicz_morrey} plus whichever of (p, phi, tiling) apply."""

    tag: str
    p: float | None = None
    phi: YoungFunction | None = None
    tiling: Tiling | None = None


def space_norm(g: GridFunction, spec: SpaceSpec) -> float:
    if spec.tag == "morrey":
        return morrey_norm(g, spec.p)
    if spec.tag == "orlicz_morrey":
        return orlicz_morrey_norm(g, spec.p, spec.phi)
    if spec.tag == "orlicz_morrey_inf":
        return orlicz_morrey_norm(g, np.inf, spec.phi)
    if spec.tag == "block":
        return block_norm(g, spec.p, spec.phi, spec.tiling)
    if spec.tag == "tiling_orlicz_morrey":
        return tiling_orlicz_morrey_norm(g, spec.p, spec.phi, spec.tiling)
    raise ValueError(f"unknown space tag {spec.tag!r}")


def associate_lower_bound(f: GridFunction, spec: SpaceSpec, witnesses: int, seed: int) -> float:
    """Lower bound for the associate norm of f against the given space:
    the best pairing(|f|, |g|)/norm(g) over generated admissible witnesses
    (the root indicator, random densities, Frostman measures of random
    sets, and scaled cube indicators).  Deterministic given the seed."""
    if witnesses < 1:
        raise ValueError("need at least one witness")
    config = f.config
    absf = GridFunction(config, np.abs(f.values))
    rng = np.random.default_rng(seed)
    best = 0.0
    for i in range(witnesses):
        if i == 0:
            g = GridFunction.constant(config, 1.0)
        elif i == 1 and absf.values.any():
            g = absf  # self-pairing witness, often near-extremal
        elif i % 3 == 1:
            g = GridFunction(config, rng.random(config.num_cells))
        elif i % 3 == 2:
            mask = rng.random(config.num_cells) < max(rng.random(), 1.0 / config.num_cells)
            if not mask.any():
                continue
            g = frostman_measure(GridFunction(config, mask.astype(float)))
        else:
            k = int(rng.integers(0, config.L + 1))
            idx = tuple(int(rng.integers(0, 2**k)) for _ in range(config.n))
            grid = np.zeros(config.grid_shape)
            grid[cube_slices(config, CubeId(k, idx))] = float(rng.random()) + 0.5
            g = GridFunction(config, grid.reshape(-1))
        denom = space_norm(g, spec)
        if denom <= 0.0:
            continue
        best = max(best, pairing(absf, g) / denom)
    return best


def enumerate_tilings(config: LatticeConfig, max_level: int | None = None):
    """All tilings of the root by cubes of level <= max_level (exhaustive;
    intended for small lattices)."""
    top = config.L if max_level is None else max_level

    def rec(q: CubeId):
        yield (q,)
        if q.level < top:
            kids = sorted(
                (CubeId(q.level + 1, tuple(2 * j + c for j, c in zip(q.index, corner)))
                 for corner in np.ndindex(*(2,) * config.n)),
                key=lambda c: c.index,
            )
            parts = [list(rec(c)) for c in kids]
            idx = [0] * len(parts)
            while True:
                yield tuple(x for i, ps in enumerate(parts) for x in ps[idx[i]])
                j = len(parts) - 1
                while j >= 0:
                    idx[j] += 1
                    if idx[j] < len(parts[j]):
                        break
                    idx[j] = 0
                    j -= 1
                if j < 0:
                    return

    for combo in rec(CubeId(0, (0,) * config.n)):
        yield Tiling(combo)


def greedy_min_tiling(config: LatticeConfig, objective) -> tuple[Tiling, float]:
    """Split-if-it-helps descent from the single-cube tiling, minimizing
    objective(Tiling).  Best-improvement passes until stationary."""
    current = Tiling([CubeId(0, (0,) * config.n)])
    value = objective(current)
    while True:
        best_t, best_v = None, value
        for q in current:
            if q.level >= config.L:
                continue
            kids = [
                CubeId(q.level + 1, tuple(2 * j + c for j, c in zip(q.index, corner)))
                for corner in np.ndindex(*(2,) * config.n)
            ]
            cand = Tiling((set(current.cubes) - {q}) | set(kids))
            v = objective(cand)
            if v < best_v - 1e-15:
                best_t, best_v = cand, v
        if best_t is None:
            return current, value
        current, value = best_t, best_v
