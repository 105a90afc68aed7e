"""Numerical nilsoliton oracle for graph algebras.

Builds the structure constants of the 2-step nilpotent algebra of a graph,
evaluates the Ricci operator of a diagonal metric and tests whether
``Ric = cI + D`` with ``D`` a derivation. Nothing here feeds back into the
exact positivity decision; it exists to corroborate it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from .graph import Graph

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 100_000
# smallest accepted ratio between squared edge structure constants; below it the
# search has slid towards a degeneration of the algebra rather than a metric on it
DEGENERACY_RATIO = 1e-6


@dataclass(frozen=True)
class LieAlgebra2Step:
    """Basis e_1..e_q (vertices) then e_{q+1}..e_{q+p} (edges); 0-based in arrays."""

    q: int
    p: int
    constants: np.ndarray  # constants[i, j, k] = coefficient of e_k in [e_i, e_j]

    @property
    def dim(self) -> int:
        return self.p + self.q

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.constants)

    def derived_dimension(self) -> int:
        images = self.constants.reshape(self.dim * self.dim, self.dim)
        return int(np.linalg.matrix_rank(images)) if images.size else 0


def build_algebra(g: Graph) -> LieAlgebra2Step:
    n = g.p + g.q
    c = np.zeros((n, n, n))
    for k, (i, j) in enumerate(g.edges):
        c[i - 1, j - 1, g.q + k] = 1.0
        c[j - 1, i - 1, g.q + k] = -1.0
    return LieAlgebra2Step(g.q, g.p, c)


@dataclass(frozen=True)
class DiagonalMetric:
    """The metric for which ``scales[i] * e_i`` is an orthonormal basis."""

    scales: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.scales, dtype=float)
        if s.ndim != 1 or np.any(s <= 0) or not np.all(np.isfinite(s)):
            raise ValueError("diagonal metric scales must be finite and positive")
        object.__setattr__(self, "scales", s)

    @classmethod
    def identity(cls, n: int) -> "DiagonalMetric":
        return cls(np.ones(n))


def orthonormal_constants(alg: LieAlgebra2Step, m: DiagonalMetric) -> np.ndarray:
    """Structure constants in the basis b_i = scales[i] e_i."""
    x = m.scales
    if x.shape != (alg.dim,):
        raise ValueError(f"metric has {x.shape[0]} scales, algebra has dimension {alg.dim}")
    return alg.constants * x[:, None, None] * x[None, :, None] / x[None, None, :]


def ricci_from_constants(c: np.ndarray) -> np.ndarray:
    """Ric(x, y) = -1/2 sum <[x,b_i],[y,b_i]> + 1/4 sum <[b_i,b_j],x><[b_i,b_j],y>."""
    return -0.5 * np.einsum("aik,bik->ab", c, c) + 0.25 * np.einsum("ija,ijb->ab", c, c)


def ricci_diagonal(alg: LieAlgebra2Step, m: DiagonalMetric) -> np.ndarray:
    return ricci_from_constants(orthonormal_constants(alg, m))


def derivation_defect(c: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Tensor of D[b_i,b_j] - [D b_i, b_j] - [b_i, D b_j] in components k."""
    t1 = np.einsum("ijm,km->ijk", c, d)
    t2 = np.einsum("mi,mjk->ijk", d, c)
    t3 = np.einsum("mj,imk->ijk", d, c)
    return t1 - t2 - t3


def nearest_diagonal_derivation(alg: LieAlgebra2Step, diag: np.ndarray) -> np.ndarray:
    """Least-squares projection onto diagonal derivations (d_edge = d_i + d_j)."""
    n = alg.dim
    rows = []
    for i, j, k in zip(*np.nonzero(alg.constants > 0)):
        row = np.zeros(n)
        row[k] += 1.0
        row[i] -= 1.0
        row[j] -= 1.0
        rows.append(row)
    if not rows:
        return diag.copy()
    a = np.array(rows)
    # remove the component of diag along the row space of the constraint matrix
    coef, *_ = np.linalg.lstsq(a.T, diag, rcond=None)
    return diag - a.T @ coef


@dataclass(frozen=True)
class SolitonCertificate:
    ricci: np.ndarray
    c: float
    derivation: np.ndarray
    derivation_residual: float
    soliton_residual: float
    tol: float
    iterations: int = 0

    @property
    def accepted(self) -> bool:
        return self.derivation_residual < self.tol and self.soliton_residual < self.tol


def verify_soliton(alg: LieAlgebra2Step, m: DiagonalMetric, tol: float = DEFAULT_TOL,
                   iterations: int = 0) -> SolitonCertificate:
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    c_on = orthonormal_constants(alg, m)
    ric = ricci_from_constants(c_on)
    n = alg.dim
    ident = np.eye(n)
    # defect is linear in D: defect(Ric - cI) = defect(Ric) - c * defect(I)
    dr = derivation_defect(c_on, ric)
    di = derivation_defect(c_on, ident)
    denom = float(np.sum(di * di))
    c = float(np.sum(dr * di) / denom) if denom > 0 else 0.0
    d = ric - c * ident
    defect = derivation_defect(c_on, d)
    deriv_res = float(np.max(np.abs(defect))) if defect.size else 0.0
    diag = np.diag(d)
    off = d - np.diag(diag)
    proj = nearest_diagonal_derivation(alg, diag)
    sol_res = float(max(np.max(np.abs(off), initial=0.0), np.max(np.abs(diag - proj), initial=0.0)))
    return SolitonCertificate(ric, c, d, deriv_res, sol_res, tol, iterations)


def _normalized(alg: LieAlgebra2Step, log_edge: np.ndarray) -> DiagonalMetric:
    scales = np.concatenate([np.ones(alg.q), np.exp(log_edge)])
    return DiagonalMetric(scales)


def search_soliton(alg: LieAlgebra2Step, max_iter: int = DEFAULT_MAX_ITER, tol: float = DEFAULT_TOL,
                   seed_scales: np.ndarray | None = None):
    """Look for a diagonal nilsoliton metric; returns (metric, certificate) or None.

    Vertex scales stay 1 and the edge scales are optimised (in log space) so
    that the normalised soliton residual vanishes. ``seed_scales`` optionally
    gives starting edge scales. None means the search did not converge, which
    proves nothing about existence. Fits whose squared edge constants spread
    over more than ``1 / DEGENERACY_RATIO`` are rejected: the residual of such a
    metric can be tiny only because it approximates a soliton of a contracted
    algebra.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if alg.p == 0:
        m = DiagonalMetric.identity(alg.dim)
        return m, verify_soliton(alg, m, tol)
    x0 = np.zeros(alg.p) if seed_scales is None else np.log(np.asarray(seed_scales, dtype=float))

    def residual(z):
        m = _normalized(alg, z)
        c_on = orthonormal_constants(alg, m)
        ric = ricci_from_constants(c_on)
        scale = np.linalg.norm(ric)
        diag = np.diag(ric)
        # best c for the diagonal problem, then distance to diagonal derivations
        diag_part = diag - nearest_diagonal_derivation(alg, diag)
        e = np.ones(alg.dim)
        e_part = e - nearest_diagonal_derivation(alg, e)
        c = float(diag_part @ e_part / (e_part @ e_part))
        return (diag_part - c * e_part) / scale

    fit = least_squares(residual, x0, method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15,
                        max_nfev=max_iter)
    m = _normalized(alg, fit.x)
    # rescale so that ||Ric|| = 1 before judging residuals in absolute terms
    ric_norm = np.linalg.norm(ricci_diagonal(alg, m))
    edge = np.exp(fit.x) / np.sqrt(1.0 / ric_norm)
    m = DiagonalMetric(np.concatenate([np.ones(alg.q), edge]))
    cert = verify_soliton(alg, m, tol, iterations=int(fit.nfev))
    y = edge_constants_squared(alg, m)
    if not cert.accepted or y.min() < DEGENERACY_RATIO * y.max():
        return None
    return m, cert


def edge_constants_squared(alg: LieAlgebra2Step, m: DiagonalMetric) -> np.ndarray:
    """|[b_i, b_j]|^2 for every edge {i, j}, in edge order."""
    c_on = orthonormal_constants(alg, m)
    return np.einsum("ijk,ijk->k", c_on, c_on)[alg.q:] / 2.0


def seed_from_weights(weights) -> np.ndarray:
    """Edge scales 1/sqrt(c_k) that make the squared edge constants equal the weights.

    With vertex scales 1, the diagonal soliton equations for a graph algebra
    reduce to the same linear system as the edge weights, so positive weights
    give a soliton directly; used as an optional seed for ``search_soliton``.
    """
    w = np.array([float(x) for x in weights])
    if np.any(w <= 0):
        raise ValueError("weights must be positive to seed a metric")
    return 1.0 / np.sqrt(w)


def format_certificate(cert: SolitonCertificate) -> str:
    lines = [
        "# nilgraph soliton certificate v1",
        f"c: {cert.c:.15g}",
        "D diagonal: " + " ".join(f"{v:.12g}" for v in np.diag(cert.derivation)),
        f"derivation residual: {cert.derivation_residual:.3e}",
        f"soliton residual: {cert.soliton_residual:.3e}",
        f"iterations: {cert.iterations}",
        "ACCEPTED" if cert.accepted else "REJECTED",
    ]
    return "\n".join(lines) + "\n"
