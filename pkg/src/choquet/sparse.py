"""Sparse cube families, the sparse averaging operator, and the Cantor
counterexample family.

The Cantor construction keeps the 2^n corner cubes at each stage with
contraction tuned so that every level has content comparable to 1.  In
snapped mode (d = n/m) the corner cubes are genuine dyadic cubes of side
2^(-mk), the content identity is exact, and the family embeds in the
lattice; the generic-contraction mode is supported analytically (cell
measures and the Luxemburg majorant) but has no covering DP.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .content import choquet_norm, hausdorff_content_value
from .lattice import CubeId, GridFunction, LatticeConfig, cube_slices, indicator

__all__ = [
    "SparseFamily",
    "SparseReport",
    "CantorConfig",
    "CantorFamily",
    "verify_sparse",
    "apply_sparse",
    "cantor_family",
    "cantor_content",
    "cantor_lux_bound",
    "unboundedness_demo",
]


@dataclass(frozen=True)
class SparseFamily:
    cubes: frozenset[CubeId]
    eta: float

    def __init__(self, cubes, eta: float):
        if not 0.0 < eta < 1.0:
            raise ValueError(f"sparseness parameter must lie in (0,1), got {eta}")
        object.__setattr__(self, "cubes", frozenset(cubes))
        object.__setattr__(self, "eta", float(eta))

    def __iter__(self):
        return iter(sorted(self.cubes, key=lambda q: (q.level, q.index)))

    def __len__(self):
        return len(self.cubes)

    def to_json_dict(self) -> dict:
        return {"eta": self.eta, "cubes": [str(q) for q in self]}


@dataclass(frozen=True)
class SparseReport:
    min_ratio: float
    carleson_constant: float
    worst_cube: CubeId | None

    def is_sparse(self, eta: float) -> bool:
        return self.min_ratio >= eta


def _strictly_inside(q: CubeId, p: CubeId) -> bool:
    """Whether q is a strict descendant of p in the dyadic tree."""
    if q.level <= p.level:
        return False
    shift = q.level - p.level
    return all(jq >> shift == jp for jq, jp in zip(q.index, p.index))


def verify_sparse(config: LatticeConfig, s: SparseFamily) -> SparseReport:
    """Canonical-witness sparseness check.

    E_Q is Q minus the maximal strict descendants of Q in the family; these
    witness sets are pairwise disjoint by construction.  Reports the minimum
    |E_Q|/|Q| and, as a secondary diagnostic, the Carleson packing constant
    sup_Q sum of |Q'| over family members Q' inside Q, divided by |Q|.
    """
    cubes = sorted(s.cubes, key=lambda q: (q.level, q.index))
    min_ratio, worst = np.inf, None
    carleson = 0.0
    for q in cubes:
        inside = [p for p in cubes if p is not q and _strictly_inside(p, q)]
        # maximal strict descendants: not inside another strict descendant
        maximal = [p for p in inside if not any(_strictly_inside(p, r) for r in inside if r is not p)]
        removed = sum(p.volume for p in maximal)
        ratio = (q.volume - removed) / q.volume
        if ratio < min_ratio:
            min_ratio, worst = ratio, q
        packed = q.volume + sum(p.volume for p in inside)
        carleson = max(carleson, packed / q.volume)
    if worst is None:
        min_ratio, carleson = 1.0, 0.0
    return SparseReport(float(min_ratio), float(carleson), worst)


def apply_sparse(f: GridFunction, s: SparseFamily) -> GridFunction:
    """The sparse operator: sum over family cubes of (average of f over Q) * 1_Q."""
    config = f.config
    out = np.zeros(config.grid_shape)
    grid = f.grid
    for q in s.cubes:
        sl = cube_slices(config, q)
        out[sl] += grid[sl].mean()
    return GridFunction(config, out.reshape(-1))


@dataclass(frozen=True)
class CantorConfig:
    """Corner-cube Cantor construction parameters.

    Snapped mode fixes d = n/m so the contraction 2^(-m) makes every stage
    a union of dyadic cubes and 2^(n-d) (1-delta)^d = 1 holds exactly.
    """

    n: int
    m: int
    K: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"snapped mode needs m >= 2, got {self.m}")
        if self.K < 0:
            raise ValueError(f"depth must be >= 0, got {self.K}")

    @property
    def d(self) -> float:
        return self.n / self.m

    @property
    def delta(self) -> float:
        return 1.0 - 2.0 ** (1 - self.m)

    @property
    def eta(self) -> float:
        return 1.0 - (1.0 - self.delta) ** self.n

    def lattice(self, L: int) -> LatticeConfig:
        return LatticeConfig(self.n, L, self.d)


@dataclass(frozen=True)
class CantorFamily:
    config: LatticeConfig
    family: SparseFamily
    levels: tuple[tuple[CubeId, ...], ...]  # stage k cubes, k = 0..K

    def stage_indicator(self, k: int) -> GridFunction:
        """Indicator of E^k, the union of the stage-k cubes."""
        return indicator(self.config, self.levels[k])


def cantor_family(c: CantorConfig, L: int) -> CantorFamily:
    """Build the snapped Cantor family down to depth K inside a level-L lattice."""
    if c.m * c.K > L:
        raise ValueError(f"resolution exceeded: depth {c.K} needs L >= {c.m * c.K}, got {L}")
    config = c.lattice(L)
    stages: list[tuple[CubeId, ...]] = [(CubeId(0, (0,) * c.n),)]
    step = 2**c.m  # refinement factor per stage
    for k in range(1, c.K + 1):
        prev = stages[-1]
        cur = []
        for q in prev:
            for corner in np.ndindex(*(2,) * c.n):
                idx = tuple(j * step + b * (step - 1) for j, b in zip(q.index, corner))
                cur.append(CubeId(c.m * k, idx))
        stages.append(tuple(cur))
    cubes = [q for stage in stages for q in stage]
    return CantorFamily(config, SparseFamily(cubes, c.eta), tuple(stages))


def cantor_content(c: CantorConfig, k: int, L: int | None = None) -> float:
    """Content of the stage-k set; exactly 1 in snapped mode."""
    if L is None:
        L = c.m * c.K
    if k > c.K:
        raise ValueError(f"stage {k} exceeds depth {c.K}")
    fam = cantor_family(c, L)
    E = fam.stage_indicator(k)
    return hausdorff_content_value(fam.config, E.grid > 0.5)


def cantor_lux_bound(c: CantorConfig, L: int | None = None) -> dict:
    """Closed-form Luxemburg majorant for the sparse image of the root
    indicator, against e^t - 1, plus the bisection-computed norm.

    lambda0 = 2 / (n log(1/(1-delta))) makes the geometric factor
    Lambda0 = e^(1/lambda0) (1-delta)^n = (1-delta)^(n/2) < 1.
    """
    from .young import ExpM1, luxemburg_norm

    one_minus_delta = 1.0 - c.delta
    lambda0 = 2.0 / (c.n * math.log(1.0 / one_minus_delta))
    Lambda0 = one_minus_delta ** (c.n / 2.0)
    lambda_star = math.exp(1.0 / lambda0) / (1.0 - Lambda0)

    fam = cantor_family(c, L if L is not None else c.m * c.K)
    F = apply_sparse(GridFunction.constant(fam.config, 1.0), fam.family)
    root = CubeId(0, (0,) * c.n)
    computed = luxemburg_norm(F, root, ExpM1())
    return {
        "lambda0": lambda0,
        "Lambda0": Lambda0,
        "lambda_star": lambda_star,
        "computed_norm": computed,
    }


def unboundedness_demo(c: CantorConfig, p: float, L: int | None = None) -> list[tuple[int, float]]:
    """Choquet norms of the sparse images at depths 0..K; the p=1 value is
    exactly depth+1 while the input's norm stays 1."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if L is None:
        L = c.m * c.K
    rows = []
    for depth in range(c.K + 1):
        sub = CantorConfig(c.n, c.m, depth)
        fam = cantor_family(sub, L)
        F = apply_sparse(GridFunction.constant(fam.config, 1.0), fam.family)
        rows.append((depth, choquet_norm(F, p)))
    return rows
