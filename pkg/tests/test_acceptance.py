"""Acceptance suite: thirteen end-to-end checks at fixed tolerances.

Each test prints one "criterion NN PASS/FAIL" line (visible under pytest -s
or in captured output) and then asserts, so a red run names the criterion
that broke. Grids and constants are frozen; loosening them is not a fix.
"""

import cmath
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
from mpmath import mp

from confluent.core import Params, eval_asymptotic, eval_integral, eval_series
from confluent.identities import (
    ContiguousRelation,
    contiguous_residual,
    kummer_residual,
)
from confluent.laguerre import (
    generating_residual,
    laguerre_diff_identity,
    orthogonality_integral,
)
from confluent.valuedist import (
    CircleSpec,
    characteristic_T,
    find_real_zeros,
    log_derivative_proximity,
    max_term_central_index,
    order_estimate,
    real_zero_count,
    zero_count_argument_principle,
)
from confluent.applications import erf_via_kummer, incomplete_gamma, normal_cdf

_EPS = float(np.finfo(float).eps)

NONDEG_PAIRS = ((1.0, 2.0), (0.5, 1.5))
DEGEN_PAIRS = ((-1.0, 1.0), (-2.0, 1.0), (-3.0, 0.8), (-4.0, 0.45), (-5.0, 0.15))
R_DEGEN = 1.0e4
GROWTH_RADII = tuple(float(r) for r in np.geomspace(10.0, 200.0, 5))
ORDER_GRID_NONDEG = tuple(float(r) for r in np.geomspace(10.0, 1.0e3, 12))
ORDER_GRID_DEGEN = tuple(float(r) for r in np.geomspace(1.0e2, 1.0e6, 12))

GOLDEN = Path(__file__).parent / "golden"
GOLDEN_INVOCATIONS = {
    "eval.csv": [
        "eval", "--alpha-re", "1.5", "--gamma-re", "2.5", "--z-re", "0.5", "--z-im", "-0.25",
    ],
    "characteristic.csv": [
        "characteristic", "--alpha-re", "1", "--gamma-re", "2",
        "--rmin", "5", "--rmax", "40", "--points", "8", "--samples", "512",
    ],
    "zeros_real.csv": ["zeros", "--real", "--alpha", "-2.5", "--gamma", "1"],
}


def _report(num: int, ok: bool, detail: str) -> bool:
    print(f"criterion {num:02d} {'PASS' if ok else 'FAIL'}: {detail}")
    return ok


_ROW_CACHE = {}


def _row(alpha, gamma, r, samples=2048):
    key = (alpha, gamma, float(r))
    if key not in _ROW_CACHE:
        _ROW_CACHE[key] = characteristic_T(
            Params(alpha, gamma), CircleSpec(float(r), samples=samples)
        )
    return _ROW_CACHE[key]


_SLOPE_CACHE = {}


def _slopes(alpha, gamma, grid, samples):
    key = (alpha, gamma)
    if key not in _SLOPE_CACHE:
        p = Params(alpha, gamma)
        order = order_estimate(p, grid, samples=samples)
        nus = [max_term_central_index(p, float(r))[1] for r in grid]
        half = len(grid) // 2
        x = np.log(np.asarray(grid[half:]))
        y = np.maximum(np.log(np.asarray(nus[half:], dtype=float)), 0.0)
        nu_slope = float(np.polyfit(x, y, 1)[0])
        _SLOPE_CACHE[key] = (order, nu_slope)
    return _SLOPE_CACHE[key]


def test_criterion_01_kummer_identity_grid():
    pairs = [(1.5, 2.5), (0.5, 1.5), (2.0, 5.0), (1 + 2j, 3 - 1j)]
    radii = [0.4, 2.0, 6.5, 13.0, 19.6]
    angles = [0.0, 0.4 * math.pi, 0.8 * math.pi, 1.2 * math.pi, 1.6 * math.pi]
    worst = 0.0
    count = 0
    for a, g in pairs:
        p = Params(a, g)
        for r in radii:
            for th in angles:
                worst = max(worst, kummer_residual(p, r * cmath.exp(1j * th)))
                count += 1
    ok = count == 100 and worst <= 1e-10
    assert _report(1, ok, f"reflection residual on {count} points, worst {worst:.2e} <= 1e-10")


def test_criterion_02_contiguous_relations_random():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(50):
        a = complex(rng.uniform(-2.5, 2.5), rng.uniform(-1.0, 1.0))
        gi = rng.uniform(0.1, 1.5) * (1 if rng.uniform() < 0.5 else -1)
        g = complex(rng.uniform(0.5, 4.5), gi)
        z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        p = Params(a, g)
        for rel in ContiguousRelation:
            worst = max(worst, contiguous_residual(rel, p, z))
    ok = worst <= 1e-9
    assert _report(2, ok, f"six relations on 50 random points, worst {worst:.2e} <= 1e-9")


def test_criterion_03_route_triangle_agreement():
    pairs = [(2.0, 5.0), (1.5, 2.5), (0.5, 1.5), (1.0, 4.0), (1.0, 2.2), (3.0, 7.0)]
    radii = [40.0, 48.0, 58.0, 70.0, 84.0, 100.0, 115.0]
    angles = [0.0, math.pi / 12, -math.pi / 12, math.pi / 8, -math.pi / 8]
    nodes = 160
    count = 0
    fails = 0
    worst = 0.0
    for a, g in pairs:
        p = Params(a, g)
        for r in radii:
            for th in angles:
                z = r * cmath.exp(1j * th)
                count += 1
                rs = eval_series(p, z)
                ra = eval_asymptotic(p, z)
                iv = eval_integral(p, z, nodes)
                ic = eval_integral(p, z, nodes // 2)
                # quadrature weights are good to ~nodes*eps relative to the
                # absolute-value envelope, which node halving cannot see
                env = abs(eval_integral(p, complex(z.real), nodes))
                ie = abs(iv - ic) + 60.0 * nodes * _EPS * env
                for x, xe, y, ye in (
                    (rs.value, rs.abs_error_est, ra.value, ra.abs_error_est),
                    (rs.value, rs.abs_error_est, iv, ie),
                    (ra.value, ra.abs_error_est, iv, ie),
                ):
                    ratio = abs(x - y) / (xe + ye)
                    worst = max(worst, ratio)
                    fails += ratio > 1.0
    ok = count >= 200 and fails == 0
    assert _report(
        3, ok, f"{count} points, 3 route pairs each, worst gap/budget {worst:.3f} <= 1"
    )


def test_criterion_04_characteristic_growth():
    worst_lin = 0.0
    for a, g in NONDEG_PAIRS:
        for r in GROWTH_RADII:
            worst_lin = max(worst_lin, _row(a, g, r).T_r / r)
    worst_deg = 0.0
    for a, g in DEGEN_PAIRS:
        n = -int(a)
        dev = abs(_row(a, g, R_DEGEN).T_r / math.log(R_DEGEN) - n)
        worst_deg = max(worst_deg, dev)
    ok = worst_lin <= 2.0 and worst_deg <= 0.2
    assert _report(
        4, ok, f"max T(r)/r {worst_lin:.3f} <= 2; degenerate |T/log r - n| {worst_deg:.3f} <= 0.2"
    )


def test_criterion_05_max_modulus_growth():
    worst_lin = 0.0
    for a, g in NONDEG_PAIRS:
        for r in GROWTH_RADII:
            worst_lin = max(worst_lin, _row(a, g, r).logM_r / r)
    worst_deg = 0.0
    for a, g in DEGEN_PAIRS:
        n = -int(a)
        dev = abs(_row(a, g, R_DEGEN).logM_r / math.log(R_DEGEN) - n)
        worst_deg = max(worst_deg, dev)
    ok = worst_lin <= 1.5 and worst_deg <= 0.2
    assert _report(
        5, ok,
        f"max logM(r)/r {worst_lin:.3f} <= 1.5; degenerate |logM/log r - n| {worst_deg:.3f} <= 0.2",
    )


def test_criterion_06_order_estimates():
    lo, hi = 2.0, 0.0
    for a, g in NONDEG_PAIRS:
        slope, _ = _slopes(a, g, ORDER_GRID_NONDEG, 1024)
        lo, hi = min(lo, slope), max(hi, slope)
    worst_deg = 0.0
    for a, g in DEGEN_PAIRS:
        slope, _ = _slopes(a, g, ORDER_GRID_DEGEN, 512)
        worst_deg = max(worst_deg, slope)
    ok = 0.9 <= lo and hi <= 1.1 and worst_deg <= 0.15
    assert _report(
        6, ok,
        f"nondegenerate slopes in [{lo:.3f}, {hi:.3f}] within [0.9, 1.1]; "
        f"degenerate max {worst_deg:.3f} <= 0.15",
    )


def test_criterion_07_log_derivative_proximity():
    worst = 0.0
    worst_exp = 0.0
    for r in (10.0, 30.0, 100.0, 300.0):
        worst = max(worst, log_derivative_proximity(Params(1.0, 2.0), CircleSpec(r, samples=2048)))
        worst_exp = max(
            worst_exp, log_derivative_proximity(Params(1.0, 1.0), CircleSpec(r, samples=2048))
        )
    ok = worst <= 3.0 and worst_exp == 0.0
    assert _report(
        7, ok, f"m(r, F'/F) max {worst:.4f} <= 3; exponential case exactly {worst_exp}"
    )


def test_criterion_08_central_index_slope():
    worst = 0.0
    for a, g in NONDEG_PAIRS:
        order, nu_slope = _slopes(a, g, ORDER_GRID_NONDEG, 1024)
        worst = max(worst, abs(order - nu_slope))
    for a, g in DEGEN_PAIRS:
        order, nu_slope = _slopes(a, g, ORDER_GRID_DEGEN, 512)
        worst = max(worst, abs(order - nu_slope))
    ok = worst <= 0.15
    assert _report(8, ok, f"|log nu slope - order slope| max {worst:.3f} <= 0.15")


def test_criterion_09_characteristic_sandwich():
    pairs = ((1.0, 2.0), (0.5, 1.5), (1.0, 1.0), (-3.0, 1.0))
    radii = tuple(float(r) for r in np.geomspace(5.0, 100.0, 7))
    slack = 1.0 + 1e-6
    worst_lo = 0.0
    worst_hi = 0.0
    ok = True
    for a, g in pairs:
        for r in radii:
            row = _row(a, g, r)
            row2 = _row(a, g, 2.0 * r)
            log_m_plus = max(row.logM_r, 0.0)
            ok = ok and row.T_r <= log_m_plus * slack
            ok = ok and log_m_plus <= 3.0 * row2.T_r * slack
            if log_m_plus > 0.0:
                worst_lo = max(worst_lo, row.T_r / log_m_plus)
            worst_hi = max(worst_hi, log_m_plus / (3.0 * row2.T_r))
    assert _report(
        9, ok,
        f"T <= log+M <= 3 T(2r) on 28 radii; max T/log+M {worst_lo:.4f}, "
        f"max log+M/(3 T(2r)) {worst_hi:.4f}",
    )


def test_criterion_10_zero_counts():
    # gamma < 0 columns use noninteger alpha: the transitional count formulas
    # describe the transcendental case, and polynomial cases land elsewhere
    cases = [
        (a, g)
        for a in (-4.5, -3.5, -2.5, -1.5, -0.5, 0.5, 2.5, 3.5)
        for g in (-4.5, -2.5, -1.5, -0.5, 0.5, 1.5)
    ] + [(a, g) for a in (-4.0, -3.0, -2.0, -1.0, 1.0, 3.0) for g in (0.5, 1.5)]
    assert len(cases) == 60
    mismatches = 0
    for a, g in cases:
        n_plus, _ = real_zero_count(a, g)
        try:
            zeros = find_real_zeros(Params(a, g), x_max=60.0)
        except Exception:
            mismatches += 1
            continue
        mismatches += len(zeros) != n_plus
    # F(1;2;z) = (e^z - 1)/z vanishes at 2 pi i k, so n(r) = 2 floor(r/(2 pi))
    radii = (10.0, 40.0, 120.0, 500.0)
    counts = [zero_count_argument_principle(Params(1.0, 2.0), r) for r in radii]
    expected = [2 * math.floor(r / (2.0 * math.pi)) for r in radii]
    ratio = max(c / r**1.1 for c, r in zip(counts, radii))
    ok = mismatches == 0 and counts == expected and counts[0] == 2 and ratio <= 1.0
    assert _report(
        10, ok,
        f"count table vs located zeros on 60 cases, {mismatches} mismatches; "
        f"circle counts {counts}; max n(r)/r^1.1 {ratio:.3f} <= 1",
    )


def test_criterion_11_laguerre_suite():
    worst_off = 0.0
    worst_diag = 0.0
    for mu in (0.0, 0.5, 2.0):
        for i in range(9):
            for j in range(i, 9):
                v = orthogonality_integral(i, j, mu)
                if i == j:
                    want = math.gamma(mu + i + 1) / math.factorial(i)
                    worst_diag = max(worst_diag, abs(v - want) / want)
                else:
                    worst_off = max(worst_off, abs(v))
    gen = generating_residual(0.5, 1.0, 0.3)
    diff_exact = all(
        laguerre_diff_identity(n, m) == 0.0
        for n in range(11)
        for m in range(11 - n)
    )
    ok = worst_off <= 1e-10 and worst_diag <= 1e-10 and gen <= 1e-10 and diff_exact
    assert _report(
        11, ok,
        f"orthogonality off-diag {worst_off:.2e}, diag rel {worst_diag:.2e} <= 1e-10; "
        f"generating residual {gen:.2e} <= 1e-10; derivative identity exact: {diff_exact}",
    )


def test_criterion_12_applications():
    mp.dps = 40
    erf_gap = abs(erf_via_kummer(1.0) - float(mp.erf(1)))
    cdf_want = float((1 + mp.erf(mp.mpf(1) / mp.sqrt(2))) / 2)
    cdf_gap = abs(normal_cdf(0.0, 1.0, 1.0) - cdf_want)
    ginc_gap = max(
        abs(incomplete_gamma(1.0, x) - (-math.expm1(-x))) for x in (0.1, 1.0, 10.0)
    )
    ok = erf_gap <= 1e-12 and cdf_gap <= 1e-12 and ginc_gap <= 1e-12
    assert _report(
        12, ok,
        f"erf(1) gap {erf_gap:.2e}, normal cdf gap {cdf_gap:.2e}, "
        f"incomplete gamma gap {ginc_gap:.2e}, all <= 1e-12",
    )


def test_criterion_13_cli_golden_files():
    ok = True
    for name, args in sorted(GOLDEN_INVOCATIONS.items()):
        proc = subprocess.run(
            [sys.executable, "-m", "confluent", *args],
            capture_output=True,
            text=True,
            timeout=300,
        )
        ok = ok and proc.returncode == 0 and proc.stdout == (GOLDEN / name).read_text()
    assert _report(13, ok, "three fixed invocations byte-identical to committed CSV")
