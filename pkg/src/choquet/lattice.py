"""Dyadic lattice geometry on the root cube [0,1)^n.

Everything lives at a finite resolution level L: the root cube is split
into 2^(nL) leaf cells, and the lattice consists of all dyadic cubes of
levels 0..L inside the root.  Step functions constant on leaf cells double
as set indicators and as measure densities.

Leaf storage is dense: a flat float array in row-major (C) order over the
(2^L,)*n coordinate grid.  This ordering is part of the file format and
must not change.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "LatticeConfig",
    "CubeId",
    "GridFunction",
    "Tiling",
    "TilingReport",
    "children",
    "parent",
    "cube_slices",
    "indicator",
    "cell_average",
    "measure_of_cube",
    "validate_tiling",
    "all_cubes",
    "cube_count",
]


@dataclass(frozen=True)
class LatticeConfig:
    """Fixed lattice context: dimension n, max level L, content exponent d."""

    n: int
    L: int
    d: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"dimension n must be positive, got {self.n}")
        if self.L < 0:
            raise ValueError(f"resolution level L must be >= 0, got {self.L}")
        if not 0.0 < self.d < self.n:
            raise ValueError(f"content exponent d must satisfy 0 < d < n, got d={self.d}, n={self.n}")

    @property
    def grid_shape(self) -> tuple[int, ...]:
        return (2**self.L,) * self.n

    @property
    def num_cells(self) -> int:
        return 2 ** (self.n * self.L)

    @property
    def cell_volume(self) -> float:
        return 2.0 ** (-self.n * self.L)


@dataclass(frozen=True)
class CubeId:
    """A dyadic cube 2^(-level) * (index + [0,1)^n) inside the root cube."""

    level: int
    index: tuple[int, ...]

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"cube level must be >= 0, got {self.level}")
        object.__setattr__(self, "index", tuple(int(j) for j in self.index))
        for j in self.index:
            if not 0 <= j < 2**self.level:
                raise ValueError(f"cube index {self.index} out of range at level {self.level}")

    @property
    def side(self) -> float:
        return 2.0**-self.level

    @property
    def volume(self) -> float:
        return 2.0 ** (-self.level * len(self.index))

    def __str__(self) -> str:
        return f"{self.level}:{','.join(str(j) for j in self.index)}"

    @classmethod
    def parse(cls, s: str) -> "CubeId":
        """Parse the serialized form "k:j0,j1,..."."""
        try:
            level_str, idx_str = s.split(":")
            return cls(int(level_str), tuple(int(t) for t in idx_str.split(",")))
        except ValueError as exc:
            raise ValueError(f"malformed cube address {s!r}") from exc


class LevelOverflowError(ValueError):
    """Requested cubes below the lattice's finest level."""


def children(config: LatticeConfig, q: CubeId) -> set[CubeId]:
    """The 2^n cubes at level q.level+1 partitioning q."""
    if q.level >= config.L:
        raise LevelOverflowError(f"cube {q} is at the finest level L={config.L}")
    kids = set()
    for corner in np.ndindex(*(2,) * config.n):
        kids.add(CubeId(q.level + 1, tuple(2 * j + c for j, c in zip(q.index, corner))))
    return kids


def parent(q: CubeId) -> CubeId:
    if q.level == 0:
        raise ValueError("the root cube has no parent")
    return CubeId(q.level - 1, tuple(j // 2 for j in q.index))


def cube_slices(config: LatticeConfig, q: CubeId) -> tuple[slice, ...]:
    """Slices selecting q's leaf cells from the (2^L,)*n coordinate grid."""
    if q.level > config.L:
        raise LevelOverflowError(f"cube {q} is finer than the lattice level L={config.L}")
    if len(q.index) != config.n:
        raise ValueError(f"cube {q} has wrong dimension for n={config.n}")
    w = 2 ** (config.L - q.level)
    return tuple(slice(j * w, (j + 1) * w) for j in q.index)


def all_cubes(config: LatticeConfig, max_level: int | None = None):
    """All lattice cubes, coarsest first."""
    top = config.L if max_level is None else max_level
    for k in range(top + 1):
        for idx in np.ndindex(*(2**k,) * config.n):
            yield CubeId(k, idx)


def cube_count(config: LatticeConfig) -> int:
    return (2 ** (config.n * (config.L + 1)) - 1) // (2**config.n - 1)


class GridFunction:
    """A step function constant on the 2^(nL) leaf cells of the root cube."""

    def __init__(self, config: LatticeConfig, values):
        values = np.asarray(values, dtype=float).reshape(-1)
        if values.size != config.num_cells:
            raise ValueError(f"expected {config.num_cells} leaf values, got {values.size}")
        self.config = config
        self.values = values
        self.values.flags.writeable = False

    @property
    def grid(self) -> np.ndarray:
        """Read-only view shaped (2^L,)*n, coordinate axes in order."""
        return self.values.reshape(self.config.grid_shape)

    def is_indicator(self) -> bool:
        return bool(np.all((self.values == 0.0) | (self.values == 1.0)))

    def is_nonnegative(self) -> bool:
        return bool(np.all(self.values >= 0.0))

    def restrict(self, q: CubeId) -> np.ndarray:
        """The leaf values inside cube q (a view of the grid)."""
        return self.grid[cube_slices(self.config, q)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GridFunction)
            and self.config == other.config
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self) -> str:
        c = self.config
        return f"GridFunction(n={c.n}, L={c.L}, d={c.d}, {c.num_cells} cells)"

    @classmethod
    def constant(cls, config: LatticeConfig, c: float) -> "GridFunction":
        return cls(config, np.full(config.num_cells, float(c)))

    @classmethod
    def zeros(cls, config: LatticeConfig) -> "GridFunction":
        return cls.constant(config, 0.0)

    # --- file formats ------------------------------------------------

    def to_json(self) -> str:
        c = self.config
        return json.dumps({"n": c.n, "L": c.L, "d": c.d, "values": self.values.tolist()})

    @classmethod
    def from_json(cls, text: str) -> "GridFunction":
        obj = json.loads(text)
        config = LatticeConfig(int(obj["n"]), int(obj["L"]), float(obj["d"]))
        return cls(config, obj["values"])

    def to_csv(self, path) -> None:
        """CSV alternative: one leaf value per row, row-major leaf order."""
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            for v in self.values:
                w.writerow([repr(float(v))])

    @classmethod
    def from_csv(cls, path, config: LatticeConfig) -> "GridFunction":
        with open(path, newline="") as fh:
            vals = [float(row[0]) for row in csv.reader(fh) if row]
        return cls(config, vals)


def indicator(config: LatticeConfig, cubes) -> GridFunction:
    """Indicator of a union of lattice cubes."""
    grid = np.zeros(config.grid_shape)
    for q in cubes if not isinstance(cubes, CubeId) else [cubes]:
        grid[cube_slices(config, q)] = 1.0
    return GridFunction(config, grid.reshape(-1))


def cell_average(f: GridFunction, q: CubeId) -> float:
    """The mean of f over cube q (the barred-integral average)."""
    return float(f.restrict(q).mean())


def measure_of_cube(mu: GridFunction, q: CubeId) -> float:
    """Total mass of the density mu inside q: sum of cell values times cell volume."""
    if not mu.is_nonnegative():
        raise ValueError("density has negative cell values")
    return float(mu.restrict(q).sum() * mu.config.cell_volume)


@dataclass(frozen=True)
class Tiling:
    """A partition of the root cube into dyadic cubes."""

    cubes: frozenset[CubeId]

    def __init__(self, cubes):
        object.__setattr__(self, "cubes", frozenset(cubes))

    def __iter__(self):
        return iter(sorted(self.cubes, key=lambda q: (q.level, q.index)))

    def __len__(self):
        return len(self.cubes)


@dataclass(frozen=True)
class TilingReport:
    ok: bool
    cell: tuple[int, ...] | None = None  # a witness leaf cell on failure
    coverage: int | None = None  # how many cubes cover the witness cell

    @property
    def kind(self) -> str | None:
        if self.ok:
            return None
        return "under-covered" if self.coverage == 0 else "over-covered"


def validate_tiling(config: LatticeConfig, t: Tiling) -> TilingReport:
    """Accept iff the cubes cover every leaf cell exactly once."""
    counts = np.zeros(config.grid_shape, dtype=int)
    for q in t.cubes:
        counts[cube_slices(config, q)] += 1
    bad = np.argwhere(counts != 1)
    if bad.size == 0:
        return TilingReport(ok=True)
    cell = tuple(int(x) for x in bad[0])
    return TilingReport(ok=False, cell=cell, coverage=int(counts[cell]))
