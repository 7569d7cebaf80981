"""Antilinear symmetric maps, their Takagi factorization, and quadratics.

A map Z x = A conj(x) with complex symmetric A is symmetric for the inner
product (conjugate-linear first slot):  <y | Z x> = <x | Z y>.  Takagi gives
A = U diag(s) U^T with unitary U and the singular values s of A; the columns
of U satisfy Z(U e_k) = s_k (U e_k).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .algebra import GradedElement, basis_size, enumerate_basis
from .errors import DimensionMismatch, DomainError

SYMMETRY_TOL = 1e-12
_CLUSTER_TOL = 1e-8


@dataclass(frozen=True)
class AntilinearSymmetricMap:
    """x -> matrix @ conj(x) with matrix == matrix.T enforced at build time."""

    matrix: np.ndarray

    def __post_init__(self):
        a = np.ascontiguousarray(self.matrix, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch("square matrix required")
        dev = np.abs(a - a.T).max() if a.size else 0.0
        if dev > SYMMETRY_TOL * max(1.0, np.abs(a).max()):
            raise ValueError(f"matrix is not symmetric (deviation {dev:.3e})")
        a.flags.writeable = False
        object.__setattr__(self, "matrix", a)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, x) -> np.ndarray:
        return self.matrix @ np.conj(np.asarray(x, dtype=complex))


def conjugation(m: int) -> AntilinearSymmetricMap:
    """Entrywise conjugation in the standard basis (A = identity)."""
    return AntilinearSymmetricMap(np.eye(m))


@dataclass(frozen=True)
class TakagiFactorization:
    """A = unitary @ diag(values) @ unitary.T, values descending >= 0."""

    unitary: np.ndarray
    values: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return self.unitary @ np.diag(self.values) @ self.unitary.T


def takagi(zmap: AntilinearSymmetricMap) -> TakagiFactorization:
    """Takagi factorization via SVD with per-cluster phase correction.

    With A = P diag(s) Q^dagger, the matrix G = Q^dagger conj(P) is unitary,
    block-diagonal over clusters of equal singular values, and symmetric on
    clusters with s > 0.  Taking R = sqrtm(G) per cluster (identity on the
    kernel cluster) gives A = (P R) diag(s) (P R)^T.  Repeated singular
    values are grouped with a relative threshold so the block square root
    also serves as the re-orthogonalization within degenerate clusters.
    """
    a = zmap.matrix
    m = a.shape[0]
    u, s, vh = np.linalg.svd(a)
    g = vh @ np.conj(u)
    r = np.zeros((m, m), dtype=complex)
    scale = max(s[0] if m else 0.0, 1.0)
    i = 0
    while i < m:
        j = i + 1
        while j < m and (s[i] - s[j]) <= _CLUSTER_TOL * scale:
            j += 1
        if s[i] <= 1e-14 * scale:
            r[i:j, i:j] = np.eye(j - i)
        else:
            r[i:j, i:j] = scipy.linalg.sqrtm(g[i:j, i:j])
        i = j
    unitary = u @ r
    return TakagiFactorization(unitary=unitary, values=s.copy())


def operator_norm(zmap: AntilinearSymmetricMap) -> float:
    """Largest singular value of the representing matrix."""
    if zmap.dim == 0:
        return 0.0
    return float(np.linalg.svd(zmap.matrix, compute_uv=False)[0])


def siegel_membership(zmap: AntilinearSymmetricMap, tol: float = 1e-10) -> str:
    """'open' for norm < 1, 'boundary' within tol of 1, 'outside' beyond."""
    top = operator_norm(zmap)
    if abs(top - 1.0) <= tol:
        return "boundary"
    return "open" if top < 1.0 else "outside"


def quadratic_from_map(zmap: AntilinearSymmetricMap) -> GradedElement:
    """Degree-two element zeta with <y | Z x> = <x y | zeta> for all x, y.

    In unnormalized monomials the coefficient of v_i v_j is A_ij for i < j
    and A_ii / 2 on the diagonal; converting to the orthonormal basis turns
    the diagonal into A_ii / sqrt(2).
    """
    a = zmap.matrix
    m = zmap.dim
    out = np.zeros(basis_size(m, 2), dtype=complex)
    for k, D in enumerate(enumerate_basis(m, 2)):
        idx = [i for i, d in enumerate(D) if d]
        if len(idx) == 1:
            out[k] = a[idx[0], idx[0]] / np.sqrt(2.0)
        else:
            out[k] = a[idx[0], idx[1]]
    return GradedElement(m, {2: out}, max_degree=2)


def map_from_quadratic(zeta: GradedElement) -> AntilinearSymmetricMap:
    """Inverse of quadratic_from_map."""
    if zeta.nonzero_degrees() not in ([], [2]):
        raise ValueError("quadratic element must be concentrated in degree two")
    m = zeta.dim
    coef = zeta.component(2)
    a = np.zeros((m, m), dtype=complex)
    for k, D in enumerate(enumerate_basis(m, 2)):
        idx = [i for i, d in enumerate(D) if d]
        if len(idx) == 1:
            a[idx[0], idx[0]] = coef[k] * np.sqrt(2.0)
        else:
            a[idx[0], idx[1]] = coef[k]
            a[idx[1], idx[0]] = coef[k]
    return AntilinearSymmetricMap(a)


def compose(y: AntilinearSymmetricMap, x: AntilinearSymmetricMap) -> np.ndarray:
    """Matrix of the linear map Y X, namely B conj(A)."""
    if y.dim != x.dim:
        raise DimensionMismatch("dims differ")
    return y.matrix @ np.conj(x.matrix)


def siegel_identity_residual(
    x: AntilinearSymmetricMap, y: AntilinearSymmetricMap, v
) -> float:
    """Deviation in the algebraic identity linking I - YX to the two defects.

    2 Re <v|(I - YX) v> = (|v|^2 - |Xv|^2) + (|v|^2 - |Yv|^2) + |Xv - Yv|^2
    holds for any pair of symmetric antilinear maps.
    """
    v = np.asarray(v, dtype=complex).ravel()
    xv = x.apply(v)
    yv = y.apply(v)
    lhs = 2.0 * np.real(np.vdot(v, v - compose(y, x) @ v))
    nv = float(np.vdot(v, v).real)
    rhs = (nv - float(np.vdot(xv, xv).real)) + (nv - float(np.vdot(yv, yv).real))
    rhs += float(np.vdot(xv - yv, xv - yv).real)
    return abs(lhs - rhs)


def random_symmetric(m: int, rng: np.random.Generator, norm: float | None = None) -> AntilinearSymmetricMap:
    """Random complex symmetric map, optionally rescaled to a target norm."""
    g = rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))
    a = (g + g.T) / 2.0
    if norm is not None:
        top = np.linalg.svd(a, compute_uv=False)[0]
        if top > 0:
            a = a * (norm / top)
        elif norm > 0:
            a = norm * np.eye(m, dtype=complex)
    return AntilinearSymmetricMap(a)
