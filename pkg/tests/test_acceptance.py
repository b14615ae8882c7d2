"""End-to-end acceptance checks.

Each test covers one headline guarantee at its stated tolerance and
prints a single PASS/FAIL line so the run log doubles as a scorecard.
The printed empirical constants for the property suites are the
archived reference values for this build.
"""

import sys
import time

import numpy as np
import pytest

from choquet.content import choquet_norm, hausdorff_content
from choquet.harness import SUITES, run_suite
from choquet.lattice import CubeId, GridFunction, LatticeConfig, all_cubes, measure_of_cube
from choquet.content import frostman_measure, hausdorff_content_value
from choquet.sparse import CantorConfig, cantor_content, cantor_lux_bound, unboundedness_demo

from conftest import brute_force_content, random_leaf_mask


SCORECARD: list[str] = []


def report(name: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f" ({detail})"
    SCORECARD.append(line)
    print(line, file=sys.__stdout__, flush=True)
    assert ok, line


def test_adams_dual_inequality():
    t0 = time.time()
    r1 = run_suite("adams", trials=1000, L=6, seed=2026, n=1, d=0.5)
    r2 = run_suite("adams", trials=300, L=4, seed=2026, n=2, d=1.0)
    elapsed = time.time() - t0
    worst = max(r1.worst_ratio, r2.worst_ratio)
    ok = worst <= 1.0 + 1e-9 and elapsed < 30.0
    report("adams dual inequality", ok,
           f"worst={worst:.12f}, {elapsed:.1f}s for 1300 trials")


def test_frostman_strong_duality():
    configs = [LatticeConfig(1, 4, 0.5), LatticeConfig(2, 3, 1.0),
               LatticeConfig(1, 5, 0.7), LatticeConfig(2, 3, 1.5)]
    worst_gap = 0.0
    rng = np.random.default_rng(77)
    for cfg in configs:
        budgets = {k: 2.0 ** (-k * cfg.d) for k in range(cfg.L + 1)}
        for _ in range(200):
            mask = random_leaf_mask(cfg, rng)
            if not mask.any():
                mask.reshape(-1)[0] = True
            E = GridFunction(cfg, mask.astype(float))
            mu = frostman_measure(E)
            total = measure_of_cube(mu, CubeId(0, (0,) * cfg.n))
            gap = abs(total - hausdorff_content(E).value)
            worst_gap = max(worst_gap, gap)
            if gap > 1e-10:
                break
            for q in all_cubes(cfg):
                if measure_of_cube(mu, q) > budgets[q.level] + 1e-12:
                    report("frostman strong duality", False,
                           f"constraint violated at {q}")
    # independent oracle at L <= 3
    cfg = LatticeConfig(1, 3, 0.5)
    oracle_gap = 0.0
    for _ in range(20):
        mask = random_leaf_mask(cfg, rng)
        got = hausdorff_content_value(cfg, mask)
        oracle_gap = max(oracle_gap, abs(got - brute_force_content(cfg, mask)))
    ok = worst_gap <= 1e-10 and oracle_gap <= 1e-10
    report("frostman strong duality", ok,
           f"800 sets, worst gap={worst_gap:.2e}, oracle gap={oracle_gap:.2e}")


def test_cantor_content_identity():
    worst = 0.0
    for c, L in [(CantorConfig(1, 2, 4), 8), (CantorConfig(2, 2, 3), 6)]:
        for k in range(c.K + 1):
            worst = max(worst, abs(cantor_content(c, k, L) - 1.0))
    report("cantor content identity", worst <= 1e-9, f"worst |H-1|={worst:.2e}")


def test_sparse_operator_unbounded_growth():
    got = unboundedness_demo(CantorConfig(1, 2, 4), 1.0, 8)
    want = [(k, float(k + 1)) for k in range(5)]
    increasing = all(b[1] > a[1] for a, b in zip(got, got[1:]))
    cfg = CantorConfig(1, 2, 4).lattice(8)
    unit = choquet_norm(GridFunction.constant(cfg, 1.0), 1.0) == 1.0
    ok = got == want and increasing and unit
    report("sparse operator unbounded growth", ok, f"norms={[v for _, v in got]}")


def test_luxemburg_majorization():
    norms = []
    lam_star = None
    for K in range(1, 5):
        info = cantor_lux_bound(CantorConfig(1, 2, K), 2 * K)
        norms.append(info["computed_norm"])
        lam_star = info["lambda_star"]
    bounded = all(v <= lam_star for v in norms)
    nondecreasing = all(b >= a - 1e-12 for a, b in zip(norms, norms[1:]))
    report("luxemburg majorization", bounded and nondecreasing,
           f"norms={[round(v, 6) for v in norms]}, lambda*={lam_star:.6f}")


def test_verification_and_chain_constants():
    r1 = run_suite("verification_ineq", trials=500, L=5, seed=2026, n=1, d=0.5)
    r2 = run_suite("thm31_first", trials=500, L=5, seed=2026, n=1, d=0.5)
    ok = r1.worst_ratio <= 2.0 + 1e-8 and r2.worst_ratio <= 4.0 + 1e-8
    report("constant-2 verification / constant-4 chain", ok,
           f"worst={r1.worst_ratio:.9f} vs 2, {r2.worst_ratio:.9f} vs 4")


def test_young_orlicz_identities():
    r = run_suite("young_suite", trials=500, L=5, seed=2026, n=1, d=0.5)
    # sub-checks are normalized by their own tolerances, so the bound is 1
    ok = r.status == "pass" and r.worst_ratio <= 1.0 + 1e-9
    report("young/orlicz identities", ok, f"worst normalized={r.worst_ratio:.9f}")


def test_dual_witness_certificates():
    r = run_suite("thm31_witness", trials=300, L=5, seed=2026, n=1, d=0.5)
    ok = r.status == "pass" and r.worst_ratio <= 1.0 + 1e-8
    report("dual witness certificates", ok, f"worst cert ratio={r.worst_ratio:.9f}")


def test_property_suites_stable_across_resolution():
    all_ok = True
    summary = []
    for name, trials in [("thm21_empirical", 40), ("maximal_equiv", 40),
                         ("cor32", 10), ("thm33", 40)]:
        consts = []
        for L in (3, 4, 5, 6):
            r = run_suite(name, trials=trials, L=L, seed=2026, n=1, d=0.5)
            if r.status != "pass" or not np.isfinite(r.worst_ratio):
                all_ok = False
            consts.append(r.empirical_constant)
        spread = max(consts) / min(consts)
        if spread > 2.0:
            all_ok = False
        summary.append(f"{name}: {[round(c, 4) for c in consts]} spread={spread:.2f}")
    report("property suites stable across L=3..6", all_ok, "; ".join(summary))


def test_reports_byte_identical():
    ok = True
    for name in sorted(SUITES):
        a = run_suite(name, trials=5, L=3, seed=8, n=1, d=0.5).to_json()
        b = run_suite(name, trials=5, L=3, seed=8, n=1, d=0.5).to_json()
        if a != b:
            ok = False
    report("deterministic byte-identical reports", ok, f"{len(SUITES)} suites")
