"""Seeded verification suites surfaced by the command-line verify command.

Each suite runs a fixed set of identity checks with pseudo-random instances
drawn from a caller-supplied seed and reports one named residual per check.
These are fast smoke versions of the property tests; the exhaustive sweeps
live in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra, antilinear, detsqrt, gaussian
from .algebra import GradedElement
from .pairing import (
    RegularizationConfig,
    abel_pairing,
    divergence_demo,
    hoelder_pairing_check,
    number_op_pow,
    pairing_1,
    pairing_t,
    sequence_element,
    sequence_noninvariance_demo,
    graded_unitary_apply,
)

SUITE_NAMES = ("algebra", "gaussian", "hoelder", "invariance", "counterexamples")


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float
    passed: bool


def _check(name: str, residual: float, tol: float) -> Check:
    residual = float(residual)
    return Check(name, residual, tol, bool(residual <= tol))


def _random_element(rng, m: int, horizon: int, decay: float = 0.6, truncated: bool = True) -> GradedElement:
    comps = {}
    for d in range(horizon + 1):
        n = algebra.basis_size(m, d)
        comps[d] = (decay**d) * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return GradedElement(m, comps, horizon, truncated)


def _random_vectors(rng, m: int, k: int):
    return [rng.standard_normal(m) + 1j * rng.standard_normal(m) for _ in range(k)]


def coproduct_route_evaluate(a: GradedElement, b: GradedElement, phi: GradedElement) -> complex:
    """Evaluate the product functional a*b on phi through the coproduct.

    Applies (a tensor b) to the splitting expansion of each monomial of phi;
    independent of the product's own coefficient arithmetic, so it serves as
    a from-the-definition cross-check.
    """
    m = phi.dim
    pos = {d: {e: i for i, e in enumerate(algebra.enumerate_basis(m, d))} for d in range(phi.max_degree + 1)}
    total = 0j
    for d in phi.nonzero_degrees():
        for entry, coef in zip(algebra.enumerate_basis(m, d), phi.components[d]):
            if coef == 0:
                continue
            inner = 0j
            for bpart, cpart, w in algebra.coproduct_oracle(entry):
                db, dc = sum(bpart), sum(cpart)
                fa = a.component(db)[pos[db][bpart]]
                fb = b.component(dc)[pos[dc][cpart]]
                inner += w * algebra.normalization(bpart) * algebra.normalization(cpart) * fa * fb
            total += np.conj(coef) * inner / algebra.normalization(entry)
    return complex(total)


def suite_algebra(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(40):
        m = int(rng.integers(1, 4))
        d = int(rng.integers(1, 5))
        xs = _random_vectors(rng, m, d)
        ys = _random_vectors(rng, m, d)
        via_perm = algebra.permanent_inner_oracle(xs, ys)
        via_coord = algebra.inner_product(algebra.embed_product(xs), algebra.embed_product(ys))
        worst = max(worst, abs(via_perm - via_coord) / max(1.0, abs(via_perm)))
    checks.append(_check("inner_product_vs_permanent", worst, 1e-10))

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 4))
        xs = _random_vectors(rng, m, int(rng.integers(1, 4)))
        ys = _random_vectors(rng, m, int(rng.integers(1, 4)))
        lhs = algebra.symmetric_product(algebra.embed_product(xs), algebra.embed_product(ys))
        rhs = algebra.embed_product(xs + ys)
        num = max(
            float(np.linalg.norm(lhs.component(d) - rhs.component(d)))
            for d in range(lhs.max_degree + 1)
        )
        worst = max(worst, num)
    checks.append(_check("embed_is_multiplicative", worst, 1e-8))

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 4))
        a = _random_element(rng, m, 4, truncated=False)
        b = _random_element(rng, m, 4, truncated=False)
        via_conv = algebra.symmetric_product(a, b)
        via_split = algebra.antidual_product(a, b)
        num = max(
            float(np.linalg.norm(via_conv.component(d) - via_split.component(d)))
            for d in range(via_conv.max_degree + 1)
        )
        worst = max(worst, num)
    checks.append(_check("product_routes_agree", worst, 1e-10))

    worst = 0.0
    for _ in range(12):
        m = int(rng.integers(1, 3))
        a = _random_element(rng, m, 3, truncated=False)
        b = _random_element(rng, m, 3, truncated=False)
        phi = _random_element(rng, m, 6, truncated=False)
        lhs = algebra.evaluate(algebra.antidual_product(a, b), phi)
        rhs = coproduct_route_evaluate(a, b, phi)
        worst = max(worst, abs(lhs - rhs))
    checks.append(_check("coproduct_evaluation_identity", worst, 1e-10))

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 4))
        d = int(rng.integers(1, 6))
        x, y = _random_vectors(rng, m, 2)
        lhs = algebra.inner_product(algebra.embed_product([x] * d), algebra.embed_product([y] * d))
        rhs = float(math.factorial(d)) * np.vdot(x, y) ** d
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    checks.append(_check("power_inner_product_formula", worst, 1e-10))

    a = _random_element(rng, 2, 3, truncated=False)
    b = _random_element(rng, 2, 3, truncated=False)
    c = _random_element(rng, 2, 3, truncated=False)
    ab = algebra.symmetric_product(a, b)
    comm = max(
        float(np.linalg.norm(ab.component(d) - algebra.symmetric_product(b, a).component(d)))
        for d in range(ab.max_degree + 1)
    )
    lhs = algebra.symmetric_product(ab, c)
    rhs = algebra.symmetric_product(a, algebra.symmetric_product(b, c))
    assoc = max(
        float(np.linalg.norm(lhs.component(d) - rhs.component(d)))
        for d in range(lhs.max_degree + 1)
    )
    checks.append(_check("product_commutative_associative", max(comm, assoc), 1e-8))
    return checks


def suite_gaussian(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(50):
        m = int(rng.integers(1, 7))
        z = antilinear.random_symmetric(m, rng)
        fac = antilinear.takagi(z)
        worst = max(worst, float(np.abs(fac.reconstruct() - z.matrix).max()))
    checks.append(_check("takagi_reconstruction", worst, 1e-10))

    worst = 0.0
    for _ in range(15):
        m = int(rng.integers(1, 4))
        z = antilinear.random_symmetric(m, rng, norm=float(rng.uniform(0.2, 0.8)))
        seed_z = gaussian.GaussianSeed.from_map(z)
        series = gaussian.gaussian_series(seed_z, cap=120)
        series_sq = pairing_1(series, series).value
        closed_sq = gaussian.norm_sq_closed(seed_z)
        worst = max(worst, abs(series_sq - closed_sq) / abs(closed_sq))
    checks.append(_check("norm_sq_series_vs_closed", worst, 1e-8))

    worst = 0.0
    t = 0.9
    for _ in range(15):
        m = int(rng.integers(1, 4))
        x = antilinear.random_symmetric(m, rng, norm=float(rng.uniform(0.3, 1.0)))
        y = antilinear.random_symmetric(m, rng, norm=float(rng.uniform(0.3, 1.0)))
        sx, sy = gaussian.GaussianSeed.from_map(x), gaussian.GaussianSeed.from_map(y)
        via_series = pairing_t(gaussian.gaussian_series(sx, cap=120), gaussian.gaussian_series(sy, cap=120), t)
        closed = gaussian.pair_closed(sx, sy, t * t)
        worst = max(worst, abs(via_series.value - closed) / abs(closed))
    checks.append(_check("scaled_pairing_vs_closed", worst, 1e-8))

    worst = 0.0
    for _ in range(25):
        m = int(rng.integers(1, 5))
        z = antilinear.random_symmetric(m, rng)
        back = antilinear.map_from_quadratic(antilinear.quadratic_from_map(z))
        worst = max(worst, float(np.abs(back.matrix - z.matrix).max()))
    checks.append(_check("quadratic_correspondence_roundtrip", worst, 1e-12))

    worst_sq = 0.0
    worst_seg = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 7))
        q = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
        t_mat = np.eye(m) + 0.8 * q / max(1.0, float(np.linalg.norm(q, 2)))
        if not detsqrt.in_gv(t_mat):
            continue
        root = detsqrt.det_sqrt(t_mat)
        worst_sq = max(worst_sq, abs(root * root - np.linalg.det(t_mat)) / abs(np.linalg.det(t_mat)))
        jump, cont = detsqrt.segment_branch_check(t_mat)
        worst_seg = max(worst_seg, cont)
    checks.append(_check("det_sqrt_square_identity", worst_sq, 1e-10))
    checks.append(_check("det_sqrt_segment_continuity", worst_seg, 1e-8))

    sx = gaussian.GaussianSeed.from_map(antilinear.conjugation(2))
    sy = gaussian.GaussianSeed.from_map(antilinear.AntilinearSymmetricMap(-np.eye(2)))
    rep = abel_pairing(gaussian.gaussian_series(sx, cap=200), gaussian.gaussian_series(sy, cap=200))
    closed = gaussian.pair_closed(sx, sy)
    resid = abs(rep.value - 0.5) if rep.converged else np.inf
    checks.append(_check("boundary_abel_value", max(resid, abs(closed - 0.5)), 1e-4))
    return checks


def suite_hoelder(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(1, 4))
        phi = _random_element(rng, m, 12)
        chk = hoelder_pairing_check(phi, phi, 2.0, 2.0)
        worst = max(worst, abs(chk.slack))
    checks.append(_check("cauchy_schwarz_self_equality", worst, 1e-8))

    worst = 0.0
    for p, q in ((2.0, 2.0), (3.0, 1.5), (1.0, np.inf), (np.inf, 1.0), (4.0, 4.0 / 3.0)):
        for _ in range(15):
            m = int(rng.integers(1, 4))
            phi = _random_element(rng, m, 15)
            psi = _random_element(rng, m, 15)
            chk = hoelder_pairing_check(phi, psi, p, q)
            worst = max(worst, -min(chk.slack, 0.0))
    checks.append(_check("hoelder_slack_nonnegative", worst, 1e-12))

    worst = 0.0
    for r in (-2.0, -1.0, 0.5, 1.0, 2.0):
        for _ in range(10):
            m = int(rng.integers(1, 4))
            phi = _random_element(rng, m, 10, truncated=False)
            psi = _random_element(rng, m, 10, truncated=False)
            direct = pairing_1(phi, psi, RegularizationConfig(max_degree=10)).value
            rebal = algebra.inner_product(number_op_pow(phi, -r), number_op_pow(psi, r))
            worst = max(worst, abs(direct - rebal))
    checks.append(_check("number_operator_rebalance", worst, 1e-12))
    return checks


def suite_invariance(seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    checks = []

    def random_blocks(m, horizon):
        blocks = {}
        for d in range(horizon + 1):
            n = algebra.basis_size(m, d)
            q, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
            blocks[d] = q
        return blocks

    worst = 0.0
    for _ in range(10):
        m = int(rng.integers(1, 3))
        phi = _random_element(rng, m, 10, truncated=False)
        psi = _random_element(rng, m, 10, truncated=False)
        blocks = random_blocks(m, 10)
        t = float(rng.uniform(0.3, 0.95))
        cfg = RegularizationConfig(max_degree=10)
        before = pairing_t(phi, psi, t, cfg).value
        after = pairing_t(graded_unitary_apply(blocks, phi), graded_unitary_apply(blocks, psi), t, cfg).value
        worst = max(worst, abs(before - after))
    checks.append(_check("graded_unitary_invariance", worst, 1e-12))

    worst = 0.0
    for _ in range(6):
        m = int(rng.integers(1, 4))
        q, _ = np.linalg.qr(rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))
        horizon = 6
        blocks = {d: algebra.symmetric_power_matrix(q, d) for d in range(horizon + 1)}
        unita = max(
            float(np.abs(b.conj().T @ b - np.eye(b.shape[0])).max()) for b in blocks.values()
        )
        phi = _random_element(rng, m, horizon, truncated=False)
        psi = _random_element(rng, m, horizon, truncated=False)
        cfg = RegularizationConfig(max_degree=horizon)
        before = pairing_t(phi, psi, 0.7, cfg).value
        after = pairing_t(graded_unitary_apply(blocks, phi), graded_unitary_apply(blocks, psi), 0.7, cfg).value
        worst = max(worst, max(unita, abs(before - after)))
    checks.append(_check("functorial_lift_invariance", worst, 1e-10))

    worst = 0.0
    for _ in range(10):
        m = int(rng.integers(1, 4))
        poly = _random_element(rng, m, 5, truncated=False)
        psi = _random_element(rng, m, 20)
        rep = pairing_1(poly, psi)
        worst = max(worst, abs(rep.value - algebra.evaluate(psi, poly)))
    checks.append(_check("polynomial_pairing_is_evaluation", worst, 1e-12))

    worst = 0.0
    for _ in range(10):
        m = int(rng.integers(1, 3))
        phi = _random_element(rng, m, 10, truncated=False)
        psi = _random_element(rng, m, 10, truncated=False)
        cfg = RegularizationConfig(max_degree=10)
        ab = pairing_t(phi, psi, 0.8, cfg).value
        ba = pairing_t(psi, phi, 0.8, cfg).value
        worst = max(worst, abs(ab - np.conj(ba)))
    checks.append(_check("conjugate_symmetry", worst, 1e-12))

    worst = 0.0
    cfg = RegularizationConfig()
    for _ in range(15):
        m = int(rng.integers(1, 3))
        phi = _random_element(rng, m, cfg.max_degree, decay=float(rng.uniform(0.3, 0.7)))
        psi = _random_element(rng, m, cfg.max_degree, decay=float(rng.uniform(0.3, 0.7)))
        s_rep = pairing_1(phi, psi, cfg)
        a_rep = abel_pairing(phi, psi, cfg)
        if s_rep.converged and a_rep.converged:
            worst = max(worst, abs(s_rep.value - a_rep.value) / (10 * cfg.tolerance))
        else:
            worst = max(worst, np.inf)
    checks.append(_check("abel_consistent_with_series", worst, 1.0))
    return checks


def suite_counterexamples(seed: int = 0) -> list[Check]:
    checks = []
    before, after = sequence_noninvariance_demo()
    resid = max(abs(before.value - 0.5), abs(after.value - 1.5)) if (before.converged and after.converged) else np.inf
    checks.append(_check("sequence_swap_limits", resid, 1e-6))

    horizon = 200
    lam = sequence_element(np.ones(horizon + 1))
    mu = sequence_element([(-1.0) ** d for d in range(horizon + 1)])
    mid = pairing_t(lam, mu, 0.5, RegularizationConfig())
    checks.append(_check("sequence_mid_t_value", abs(mid.value - 0.8), 1e-10))

    worst = 0.0
    for m in (1, 2, 4):
        ratios = divergence_demo(m)
        expect = [(d + m / 2.0) / (d + 1.0) for d in range(len(ratios))]
        worst = max(worst, max(abs(r - e) for r, e in zip(ratios, expect)))
    checks.append(_check("conjugation_term_ratios", worst, 1e-9))

    sx = gaussian.GaussianSeed.from_map(antilinear.conjugation(2))
    sy = gaussian.GaussianSeed.from_map(antilinear.AntilinearSymmetricMap(-np.eye(2)))
    ex = gaussian.gaussian_series(sx, cap=200)
    ey = gaussian.gaussian_series(sy, cap=200)
    s_rep = pairing_1(ex, ey)
    a_rep = abel_pairing(ex, ey)
    checks.append(_check("boundary_series_divergent", 0.0 if s_rep.verdict == "divergent" else 1.0, 0.0))
    checks.append(
        _check("boundary_abel_recovers_closed", abs(a_rep.value - 0.5) if a_rep.converged else np.inf, 1e-4)
    )

    conv = sequence_element([0.5**d for d in range(201)])
    div = sequence_element(np.ones(201))
    s_conv = pairing_1(conv, conv)
    a_conv = abel_pairing(conv, conv)
    s_div = pairing_1(div, div)
    a_div = abel_pairing(div, div)
    ok = (
        s_conv.converged
        and a_conv.converged
        and abs(a_conv.value - s_conv.value) < 1e-7
        and not s_div.converged
        and not a_div.converged
        and a_div.verdict == "divergent"
    )
    checks.append(_check("pringsheim_self_pairing", 0.0 if ok else 1.0, 0.0))
    return checks


def run_suite(name: str, seed: int = 0) -> list[Check]:
    table = {
        "algebra": suite_algebra,
        "gaussian": suite_gaussian,
        "hoelder": suite_hoelder,
        "invariance": suite_invariance,
        "counterexamples": suite_counterexamples,
    }
    if name == "all":
        out = []
        for nm in SUITE_NAMES:
            out.extend(
                Check(f"{nm}.{c.name}", c.residual, c.tol, c.passed) for c in table[nm](seed)
            )
        return out
    if name not in table:
        raise ValueError(f"unknown suite {name!r}")
    return table[name](seed)
