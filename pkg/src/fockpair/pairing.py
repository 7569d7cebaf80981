"""Degreewise series pairings, t-scaled regularization, and the Abel limit.

The primitive object is the term sequence a_d = <phi_d | psi_d>.  The plain
pairing sums it directly, the scaled pairing weights degree d by t^{2d}, and
the Abel pairing evaluates the scaled pairing on a grid t_k -> 1 and
extrapolates.  Convergence is never assumed: each evaluation carries a
verdict (converged / divergent / undecided) and a tail or residual estimate,
and a value is only reported for converged evaluations.

Verdict rules, in the order applied to the nonzero terms:
  * finite inputs (no truncation in play) sum exactly;
  * terms that stay above tolerance with non-decreasing magnitudes over a
    20-term window past degree 50 are declared divergent;
  * a geometric tail (max ratio rho < 1 over the last 10 terms, all of them
    below tolerance * (1 - rho)) converges with tail |last| * rho / (1-rho);
  * otherwise, if acceleration is enabled, the epsilon algorithm is applied
    to the partial sums and convergence is claimed only when the tableau
    residual and a shortened-window cross-check both sit below tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import GradedElement, basis_size
from .errors import DimensionMismatch, InsufficientHorizon

_DIVERGENCE_WINDOW = 20
_DIVERGENCE_DEGREE = 50
_RATIO_WINDOW = 10
_EPS_TERMS = 220


@dataclass(frozen=True)
class RegularizationConfig:
    """Knobs for series evaluation and Abel extrapolation."""

    tolerance: float = 1e-8
    max_degree: int = 200
    t_grid_k: tuple[int, int] = (3, 12)  # t_k = 1 - 2^-k, k in this inclusive range
    acceleration: str = "epsilon_algorithm"  # or "none"

    def __post_init__(self):
        if self.tolerance <= 0:
            raise ValueError("tolerance must be positive")
        if self.acceleration not in ("none", "epsilon_algorithm"):
            raise ValueError(f"unknown acceleration {self.acceleration!r}")
        k0, k1 = self.t_grid_k
        if not (1 <= k0 <= k1):
            raise ValueError("bad t-grid exponent range")

    def t_grid(self) -> list[float]:
        k0, k1 = self.t_grid_k
        return [1.0 - 2.0 ** (-k) for k in range(k0, k1 + 1)]


@dataclass(frozen=True)
class PairingReport:
    """Outcome of one pairing evaluation."""

    value: complex | None
    method: str  # series_1 | scaled_t | abel
    verdict: str  # converged | divergent | undecided
    converged: bool
    truncation_degree: int
    tail_estimate: float
    t_grid: tuple[float, ...] = ()
    extrapolation_residual: float = math.nan
    failed_t: float | None = None


@dataclass(frozen=True)
class HoelderNorms:
    p: float
    value: float
    truncation_degree: int


@dataclass(frozen=True)
class HoelderCheck:
    slack: float
    sum_abs: float
    norm_p: float
    norm_q: float


def _support_max(x: GradedElement) -> int:
    degs = x.nonzero_degrees()
    return degs[-1] if degs else -1


def degree_terms(phi: GradedElement, psi: GradedElement, max_degree: int | None = None):
    """Term sequence a_d = <phi_d | psi_d> up to the usable horizon.

    Returns (terms, finite): finite means the sequence is exactly the whole
    series because at least one factor is an honest polynomial covered by the
    other factor's stored horizon.
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch("dims differ")
    upper = min(phi.max_degree, psi.max_degree)
    if max_degree is not None:
        upper = min(upper, max_degree)
    # a polynomial factor reaching past a truncated factor's horizon leaves
    # genuinely missing terms; refuse rather than sum a hole
    for poly, series in ((phi, psi), (psi, phi)):
        if not poly.truncated and series.truncated and _support_max(poly) > series.max_degree:
            raise InsufficientHorizon(
                f"polynomial support {_support_max(poly)} exceeds horizon {series.max_degree}"
            )
    finite = (not phi.truncated) or (not psi.truncated)
    terms = np.zeros(upper + 1, dtype=complex)
    for d in sorted(set(phi.components) & set(psi.components)):
        if d <= upper:
            terms[d] = np.vdot(phi.components[d], psi.components[d])
    return terms, finite


def wynn_epsilon(sums) -> tuple[complex, float]:
    """Best even-column entry of the epsilon tableau and its residual.

    Divisions by vanishing differences are masked with a huge sentinel and
    such entries never become candidates; the candidate with the smallest
    last-step difference wins, which keeps exactly-summable cases (rational
    generating functions) at residual zero instead of dividing 0 by 0.
    """
    s = [complex(x) for x in sums]
    n = len(s)
    if n == 0:
        return 0j, math.inf
    if n == 1:
        return s[0], math.inf
    huge = 1e300
    prev2 = [0j] * (n + 1)
    prev = list(s)
    cands = [(prev[-1], abs(prev[-1] - prev[-2]))]
    col = 0
    while len(prev) >= 2:
        col += 1
        cur = []
        for j in range(len(prev) - 1):
            d = prev[j + 1] - prev[j]
            if d == 0 or not np.isfinite(d):
                cur.append(complex(huge))
            else:
                cur.append(prev2[j + 1] + 1.0 / d)
        if col % 2 == 0 and cur:
            v = cur[-1]
            if np.isfinite(v) and abs(v) < huge / 10:
                if len(cur) >= 2 and np.isfinite(cur[-2]) and abs(cur[-2]) < huge / 10:
                    r = abs(cur[-1] - cur[-2])
                else:
                    r = abs(v - cands[-1][0])
                cands.append((v, r))
        prev2, prev = prev, cur
    return min(cands, key=lambda c: c[1])


@dataclass(frozen=True)
class _SeriesOutcome:
    value: complex | None
    verdict: str
    converged: bool
    tail: float
    used_degree: int


def _sum_weighted(terms: np.ndarray, degrees: np.ndarray, finite: bool, cfg: RegularizationConfig) -> _SeriesOutcome:
    """Apply the verdict rules to an already-weighted term sequence."""
    nz = np.flatnonzero(terms)
    used = int(degrees[-1]) if len(degrees) else 0
    if len(nz) == 0:
        return _SeriesOutcome(0j, "converged", True, 0.0, used)
    w = terms[nz]
    wd = degrees[nz]
    total = complex(np.sum(w))
    if finite:
        return _SeriesOutcome(total, "converged", True, 0.0, int(wd[-1]))

    tol = cfg.tolerance
    mags = np.abs(w)

    # divergent: persistent non-vanishing terms past the degree threshold
    tail_sel = wd > _DIVERGENCE_DEGREE
    if tail_sel.sum() >= _DIVERGENCE_WINDOW:
        pos = np.flatnonzero(tail_sel)[-_DIVERGENCE_WINDOW:]
        window = mags[pos]
        ratios = window[1:] / window[:-1]
        if np.all(window >= tol) and np.all(ratios >= 1.0 - 1e-9):
            # ratios of |c_n| with c_n hypergeometric follow rho*(1 + b/n), so
            # the intercept of a fit against 1/n extrapolates the ratio limit;
            # locally growing but eventually geometric tails (rho < 1) must
            # not be called divergent on a window cut before the turnaround
            rho_lim = float(np.polyfit(1.0 / pos[1:], ratios, 1)[1])
            if rho_lim >= 1.0 - 1e-9:
                return _SeriesOutcome(None, "divergent", False, math.inf, int(wd[-1]))

    # geometric tail
    if len(mags) >= _RATIO_WINDOW + 1:
        last = mags[-(_RATIO_WINDOW + 1):]
        if np.all(last[:-1] > 0):
            rho = float(np.max(last[1:] / last[:-1]))
            if rho < 1.0 and np.all(last[1:] <= tol * (1.0 - rho)):
                tail = float(last[-1]) * rho / (1.0 - rho)
                return _SeriesOutcome(total, "converged", True, tail, int(wd[-1]))

    if cfg.acceleration == "epsilon_algorithm" and len(w) >= 8:
        head = w[: min(len(w), _EPS_TERMS)]
        sums = np.cumsum(head)
        v_full, r_full = wynn_epsilon(sums)
        v_part, _ = wynn_epsilon(sums[: max(8, 3 * len(sums) // 4)])
        resid = max(r_full, abs(v_full - v_part))
        if math.isfinite(resid) and resid <= tol:
            return _SeriesOutcome(v_full, "converged", True, float(resid), int(wd[-1]))

    return _SeriesOutcome(None, "undecided", False, math.inf, int(wd[-1]))


def pairing_1(phi: GradedElement, psi: GradedElement, cfg: RegularizationConfig | None = None) -> PairingReport:
    """Plain degreewise series pairing sum_d <phi_d | psi_d>."""
    cfg = cfg or RegularizationConfig()
    terms, finite = degree_terms(phi, psi, cfg.max_degree)
    out = _sum_weighted(terms, np.arange(len(terms)), finite, cfg)
    return PairingReport(
        value=out.value,
        method="series_1",
        verdict=out.verdict,
        converged=out.converged,
        truncation_degree=out.used_degree,
        tail_estimate=out.tail,
    )


def pairing_t(phi: GradedElement, psi: GradedElement, t: float, cfg: RegularizationConfig | None = None) -> PairingReport:
    """Scaled pairing sum_d <phi_d | psi_d> t^{2d} for 0 < t < 1."""
    if not 0.0 < t < 1.0:
        raise ValueError("t must lie strictly between 0 and 1")
    cfg = cfg or RegularizationConfig()
    terms, finite = degree_terms(phi, psi, cfg.max_degree)
    degrees = np.arange(len(terms))
    weighted = terms * t ** (2.0 * degrees)
    out = _sum_weighted(weighted, degrees, finite, cfg)
    return PairingReport(
        value=out.value,
        method="scaled_t",
        verdict=out.verdict,
        converged=out.converged,
        truncation_degree=out.used_degree,
        tail_estimate=out.tail,
        t_grid=(t,),
    )


def abel_pairing(phi: GradedElement, psi: GradedElement, cfg: RegularizationConfig | None = None) -> PairingReport:
    """Abel limit of the scaled pairing along the configured grid t_k -> 1.

    Requires every grid point to converge on its own; the limit value comes
    from the epsilon algorithm across the grid values.  Grid values that
    grow without bound are reported as divergent rather than extrapolated,
    since extrapolating them would produce an antilimit, not an Abel limit.
    """
    cfg = cfg or RegularizationConfig()
    grid = cfg.t_grid()
    terms, finite = degree_terms(phi, psi, cfg.max_degree)
    degrees = np.arange(len(terms))
    values: list[complex] = []
    used = 0
    worst_tail = 0.0
    for t in grid:
        weighted = terms * t ** (2.0 * degrees)
        out = _sum_weighted(weighted, degrees, finite, cfg)
        used = max(used, out.used_degree)
        if out.verdict == "divergent":
            return PairingReport(
                value=None, method="abel", verdict="divergent", converged=False,
                truncation_degree=used, tail_estimate=math.inf,
                t_grid=tuple(grid), failed_t=t,
            )
        if not out.converged:
            return PairingReport(
                value=None, method="abel", verdict="undecided", converged=False,
                truncation_degree=used, tail_estimate=math.inf,
                t_grid=tuple(grid), failed_t=t,
            )
        worst_tail = max(worst_tail, out.tail)
        values.append(out.value)

    # unbounded growth toward t = 1 means the Abel limit does not exist
    mags = np.abs(np.array(values))
    if len(mags) >= 6:
        lastsix = mags[-6:]
        if np.all(np.diff(lastsix) > 0) and lastsix[-1] > 4.0 * (lastsix[0] + 1e-30):
            return PairingReport(
                value=None, method="abel", verdict="divergent", converged=False,
                truncation_degree=used, tail_estimate=math.inf,
                t_grid=tuple(grid), failed_t=grid[-1],
            )

    value, resid = wynn_epsilon(values)
    ok = math.isfinite(resid) and resid <= cfg.tolerance
    return PairingReport(
        value=value if ok else None,
        method="abel",
        verdict="converged" if ok else "undecided",
        converged=ok,
        truncation_degree=used,
        tail_estimate=worst_tail,
        t_grid=tuple(grid),
        extrapolation_residual=float(resid),
    )


def number_op_pow(phi: GradedElement, r: float) -> GradedElement:
    """Scale the degree-d component by d^r; degree zero is left fixed."""
    comps = {}
    for d, arr in phi.components.items():
        comps[d] = arr if d == 0 else (float(d) ** r) * arr
    return GradedElement(phi.dim, comps, phi.max_degree, phi.truncated)


def graded_unitary_apply(blocks: dict[int, np.ndarray], phi: GradedElement, tol: float = 1e-10) -> GradedElement:
    """Apply a degreewise unitary, one block per stored degree."""
    comps = {}
    for d, arr in phi.components.items():
        u = blocks.get(d)
        if u is None:
            raise ValueError(f"no unitary block for degree {d}")
        u = np.asarray(u, dtype=complex)
        nd = basis_size(phi.dim, d)
        if u.shape != (nd, nd):
            raise DimensionMismatch(f"degree {d} block must be {nd} x {nd}")
        if np.abs(u.conj().T @ u - np.eye(nd)).max() > tol:
            raise ValueError(f"degree {d} block is not unitary within {tol}")
        comps[d] = u @ arr
    return GradedElement(phi.dim, comps, phi.max_degree, phi.truncated)


def hoelder_norm(phi: GradedElement, p: float, truncation: int | None = None) -> HoelderNorms:
    """l^p norm of the degreewise 2-norms up to the truncation degree."""
    if p < 1.0:
        raise ValueError("p must be >= 1")
    upper = phi.max_degree if truncation is None else min(truncation, phi.max_degree)
    norms = [float(np.linalg.norm(arr)) for d, arr in sorted(phi.components.items()) if d <= upper]
    if math.isinf(p):
        value = max(norms, default=0.0)
    else:
        value = float(np.sum(np.array(norms) ** p) ** (1.0 / p)) if norms else 0.0
    return HoelderNorms(p=p, value=value, truncation_degree=upper)


def hoelder_pairing_check(
    phi: GradedElement, psi: GradedElement, p: float, q: float, truncation: int | None = None
) -> HoelderCheck:
    """Slack of sum_d |<phi_d|psi_d>| against the product of conjugate norms."""
    inv = (0.0 if math.isinf(p) else 1.0 / p) + (0.0 if math.isinf(q) else 1.0 / q)
    if abs(inv - 1.0) > 1e-12:
        raise ValueError(f"exponents are not conjugate: 1/p + 1/q = {inv}")
    if phi.dim != psi.dim:
        raise DimensionMismatch("dims differ")
    upper = min(phi.max_degree, psi.max_degree)
    if truncation is not None:
        upper = min(upper, truncation)
    total = 0.0
    for d in sorted(set(phi.components) & set(psi.components)):
        if d <= upper:
            total += abs(np.vdot(phi.components[d], psi.components[d]))
    np_ = hoelder_norm(phi, p, upper).value
    nq_ = hoelder_norm(psi, q, upper).value
    return HoelderCheck(slack=np_ * nq_ - total, sum_abs=total, norm_p=np_, norm_q=nq_)


def sequence_element(values, truncated: bool = True) -> GradedElement:
    """One-dimensional graded element from a scalar-per-degree sequence."""
    vals = np.asarray(values, dtype=complex).ravel()
    comps = {d: np.array([vals[d]]) for d in range(len(vals))}
    return GradedElement(1, comps, max_degree=len(vals) - 1, truncated=truncated)


def pair_swap(values) -> np.ndarray:
    """Swap entries (1,2), (3,4), ... of a degree-indexed sequence; fixes 0.

    The tail entry is kept fixed when the swap partner would fall outside
    the stored range, so the horizon must be even for a clean involution.
    """
    vals = np.asarray(values, dtype=complex).ravel()
    out = vals.copy()
    n = len(vals)
    for d in range(1, n - 1, 2):
        out[d], out[d + 1] = vals[d + 1], vals[d]
    return out


def sequence_noninvariance_demo(cfg: RegularizationConfig | None = None) -> tuple[PairingReport, PairingReport]:
    """Abel pairing before and after a norm-preserving pair swap (dim one).

    With lambda_d = 1 and mu_d = (-1)^d the scaled pairing is 1/(1+t^2) with
    Abel limit 1/2; after swapping the basis pairs the limit moves to 3/2,
    exhibiting that the Abel pairing is not invariant under unitaries of the
    full graded space (degreewise unitaries do preserve it).
    """
    cfg = cfg or RegularizationConfig()
    horizon = cfg.max_degree - (cfg.max_degree % 2)  # even horizon for a clean swap
    lam = np.ones(horizon + 1)
    mu = np.array([(-1.0) ** d for d in range(horizon + 1)])
    before = abel_pairing(sequence_element(lam), sequence_element(mu), cfg)
    after = abel_pairing(
        sequence_element(pair_swap(lam)), sequence_element(pair_swap(mu)), cfg
    )
    return before, after


def divergence_demo(m: int, powers: int = 31) -> list[float]:
    """Squared-norm ratios of consecutive Gaussian terms for conjugation.

    Returns c_{n+1} / c_n for c_n = |zeta^n / n!|^2, which equals
    (n + m/2) / (n + 1); for m > 2 the ratios exceed one, so the self-pairing
    terms grow and the plain series pairing diverges on the boundary.
    """
    from .antilinear import conjugation
    from .gaussian import GaussianSeed, gaussian_series

    seed = GaussianSeed.from_map(conjugation(m))
    series = gaussian_series(seed, cap=2 * powers)
    c = [float(np.vdot(series.component(2 * n), series.component(2 * n)).real) for n in range(powers + 1)]
    return [c[n + 1] / c[n] for n in range(powers)]
