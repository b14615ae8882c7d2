"""Shared oracles for the test suite.

The brute-force routines here recompute quantities the library obtains
by dynamic programming or greedy search, using exhaustive enumeration
or linear programming instead.  They are deliberately slow and only
usable at tiny resolutions.
"""

from itertools import product

import numpy as np
import pytest

from choquet.lattice import LatticeConfig, all_cubes, cube_slices


def brute_force_content(config: LatticeConfig, mask: np.ndarray) -> float:
    """Minimal covering cost by enumeration over all antichain covers.

    Every cover of a leaf set can be reduced to one where each cube is
    either taken whole or replaced by its children, so it suffices to
    enumerate subsets of the cube lattice that cover the set and keep
    the cheapest antichain.  Exponential; L <= 3 at n=1 only.
    """
    cubes = list(all_cubes(config))
    flat = np.asarray(mask, dtype=bool).reshape(-1)
    covers = []
    for q in cubes:
        cover = np.zeros(config.num_cells, dtype=bool)
        cover.reshape(config.grid_shape)[cube_slices(config, q)] = True
        covers.append(cover)
    best = np.inf
    target = np.flatnonzero(flat)
    if target.size == 0:
        return 0.0
    for bits in product([0, 1], repeat=len(cubes)):
        chosen = [i for i, b in enumerate(bits) if b]
        if not chosen:
            continue
        union = np.zeros(config.num_cells, dtype=bool)
        cost = 0.0
        for i in chosen:
            union |= covers[i]
            cost += 2.0 ** (-cubes[i].level * config.d)
        if cost >= best:
            continue
        if union[target].all():
            best = cost
    return best


def lp_frostman_value(config: LatticeConfig, mask: np.ndarray) -> float:
    """Max total mass of a Frostman measure supported on the set, via LP.

    Variables are leaf masses; constraints mu(Q) <= l(Q)^d for every
    dyadic cube plus support and nonnegativity.  LP duality against the
    fractional covering problem makes this equal the content.
    """
    from scipy.optimize import linprog

    flat = np.asarray(mask, dtype=bool).reshape(-1)
    m = config.num_cells
    rows, rhs = [], []
    for q in all_cubes(config):
        row = np.zeros(m)
        row.reshape(config.grid_shape)[cube_slices(config, q)] = 1.0
        rows.append(row)
        rhs.append(2.0 ** (-q.level * config.d))
    bounds = [(0.0, None) if flat[i] else (0.0, 0.0) for i in range(m)]
    res = linprog(
        -np.ones(m), A_ub=np.array(rows), b_ub=np.array(rhs), bounds=bounds,
        method="highs",
    )
    assert res.success
    return -res.fun


def lp_cover_value(config: LatticeConfig, mask: np.ndarray) -> float:
    """Min fractional covering cost via LP; integral for this tree structure."""
    from scipy.optimize import linprog

    flat = np.asarray(mask, dtype=bool).reshape(-1)
    target = np.flatnonzero(flat)
    if target.size == 0:
        return 0.0
    cols, costs = [], []
    for q in all_cubes(config):
        col = np.zeros(config.num_cells)
        col.reshape(config.grid_shape)[cube_slices(config, q)] = 1.0
        cols.append(col[target])
        costs.append(2.0 ** (-q.level * config.d))
    res = linprog(
        np.array(costs), A_ub=-np.array(cols).T, b_ub=-np.ones(target.size),
        method="highs",
    )
    assert res.success
    return res.fun


def random_leaf_mask(config: LatticeConfig, rng: np.random.Generator) -> np.ndarray:
    density = rng.uniform(0.1, 0.9)
    return rng.random(config.grid_shape) < density


@pytest.fixture
def rng():
    return np.random.default_rng(20260826)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import SCORECARD
    except ImportError:
        return
    if SCORECARD:
        terminalreporter.section("acceptance scorecard")
        for line in SCORECARD:
            terminalreporter.write_line(line)
