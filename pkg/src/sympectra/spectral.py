"""Symplectic eigenvalues and Williamson normal form.

For positive definite A of order 2n there is a symplectic W and positive
diagonal D = diag(delta) with A = W (D oplus D) W^T.  The delta_j are the
symplectic eigenvalues: the moduli of the eigenvalues of J A, which come
in conjugate pairs +-i delta_j.  They are invariant under symplectic
congruence and additive (as multisets) over the expanding sum.

The numerical route works with K = A^{1/2} J A^{1/2} instead of the
non-normal J A: K is exactly skew-symmetric, so its real Schur form is
block diagonal with 2x2 blocks [[0, b], [-b, 0]], and |b| recovers delta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError
from .means import MeanSpec, evaluate_pairs
from .symplectic import DEFAULT_TOL, is_symplectic, standard_J

__all__ = [
    "WilliamsonFactorization",
    "validate_pd",
    "sqrtm_pd",
    "symplectic_eigenvalues",
    "williamson",
    "symplectic_diag",
]

# Relative asymmetry above which an input is rejected instead of symmetrized.
_ASYM_TOL = 1e-8
# Relative floor for the smallest eigenvalue in the definiteness check.
_PD_TOL = 1e-13


def validate_pd(A, what: str = "matrix") -> tuple[np.ndarray, int]:
    """Check A is symmetric positive definite of even order; symmetrize.

    Inputs within relative asymmetry 1e-8 are symmetrized (measurement
    noise); anything worse is rejected as a wrong-domain input rather
    than silently averaged.

    Returns the symmetrized array and the half-order n.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DomainError(f"{what} must be square, got shape {A.shape}")
    if A.shape[0] % 2 != 0 or A.shape[0] == 0:
        raise DomainError(f"{what} must have positive even order, got {A.shape[0]}")
    if not np.all(np.isfinite(A)):
        raise DomainError(f"{what} has non-finite entries")
    scale = float(np.linalg.norm(A))
    asym = float(np.linalg.norm(A - A.T))
    if asym > _ASYM_TOL * max(scale, 1.0):
        raise DomainError(
            f"{what} is not symmetric: ||A - A^T|| = {asym:.3e}")
    A = 0.5 * (A + A.T)
    evals = np.linalg.eigvalsh(A)
    if evals[0] <= _PD_TOL * max(evals[-1], 0.0) or evals[0] <= 0.0:
        raise DomainError(
            f"{what} is not positive definite "
            f"(eigenvalue range [{evals[0]:.3e}, {evals[-1]:.3e}])")
    return A, A.shape[0] // 2


def sqrtm_pd(A: np.ndarray) -> np.ndarray:
    """Symmetric square root of a symmetric positive definite matrix."""
    w, V = np.linalg.eigh(A)
    if w[0] <= 0:
        raise DomainError("matrix square root needs a positive definite input")
    return (V * np.sqrt(w)) @ V.T


def _skew_blocks(K: np.ndarray, tol: float) -> tuple[np.ndarray, np.ndarray]:
    """Canonical 2x2-block form of a nonsingular skew-symmetric matrix.

    Returns (delta, L) with L orthogonal up to Schur roundoff and
    L^T K L = [[0, D], [-D, 0]] in the split layout, delta ascending.
    Raises NumericalError when the Schur form fails to pair up: a 1x1
    block (a numerically real eigenvalue of K), a block whose diagonal
    is not negligible, or off-diagonal entries of the same sign.
    """
    twon = K.shape[0]
    scale = max(1.0, float(np.linalg.norm(K, 2)))
    T, Q = scipy.linalg.schur(K, output="real")
    pair_floor = 1e3 * np.finfo(float).eps * scale

    deltas = []
    ucols = []
    vcols = []
    i = 0
    while i < twon:
        if i + 1 >= twon or abs(T[i + 1, i]) <= pair_floor:
            raise NumericalError(
                "eigenvalue pairing failure: skew canonical form produced a "
                f"1x1 block at position {i} (matrix numerically singular?)")
        a, b = T[i, i], T[i, i + 1]
        c, d = T[i + 1, i], T[i + 1, i + 1]
        if max(abs(a), abs(d)) > tol * scale:
            raise NumericalError(
                f"eigenvalue pairing failure: block diagonal {a:.3e}, {d:.3e} "
                f"exceeds {tol:.1e} * {scale:.3e}")
        if b * c >= 0 or abs(abs(b) - abs(c)) > tol * scale:
            raise NumericalError(
                f"eigenvalue pairing failure: block entries {b:.3e}, {c:.3e} "
                "do not form a conjugate pair")
        u, v = Q[:, i], Q[:, i + 1]
        if b < 0:
            u, v = v, u
        deltas.append(np.sqrt(-b * c))
        ucols.append(u)
        vcols.append(v)
        i += 2

    delta = np.array(deltas)
    order = np.argsort(delta, kind="stable")
    delta = delta[order]
    L = np.column_stack([ucols[j] for j in order] + [vcols[j] for j in order])
    return delta, L


def symplectic_eigenvalues(A, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Ascending symplectic eigenvalues of a positive definite matrix.

    These are the moduli of the eigenvalues of J A, one per conjugate
    pair +-i delta_j; computed from the skew-symmetric congruence
    K = A^{1/2} J A^{1/2}, which has the same spectrum.
    """
    A, n = validate_pd(A)
    S = sqrtm_pd(A)
    K = S @ standard_J(n) @ S
    K = 0.5 * (K - K.T)
    delta, _ = _skew_blocks(K, tol)
    return delta


@dataclass(frozen=True)
class WilliamsonFactorization:
    """A = W (D oplus D) W^T with W symplectic and D = diag(delta).

    ``delta`` is ascending and positive; ``residual`` is the relative
    Frobenius reconstruction error and ``symplectic_residual`` the raw
    Frobenius norm of W^T J W - J.
    """

    W: np.ndarray
    delta: np.ndarray
    residual: float
    symplectic_residual: float

    @property
    def n(self) -> int:
        return self.delta.shape[0]

    def reconstruct(self) -> np.ndarray:
        d = np.concatenate([self.delta, self.delta])
        return (self.W * d) @ self.W.T


def williamson(A, tol: float = DEFAULT_TOL) -> WilliamsonFactorization:
    """Williamson normal form of a positive definite matrix.

    With L^T K L = [[0, D], [-D, 0]] for K = A^{1/2} J A^{1/2} and L
    orthogonal, the factor W = A^{1/2} L (D^{-1/2} oplus D^{-1/2})
    satisfies both A = W (D oplus D) W^T (since L L^T = I) and
    W^T J W = J (since the inner congruence collapses to J).  Both
    contracts are verified before returning.
    """
    A, n = validate_pd(A)
    S = sqrtm_pd(A)
    K = S @ standard_J(n) @ S
    K = 0.5 * (K - K.T)
    delta, L = _skew_blocks(K, tol)
    dinv = 1.0 / np.sqrt(np.concatenate([delta, delta]))
    W = (S @ L) * dinv

    scaleA = float(np.linalg.norm(A))
    rec = float(np.linalg.norm(A - (W * (1.0 / dinv**2)) @ W.T)) / scaleA
    if rec > tol:
        raise NumericalError(
            f"Williamson reconstruction residual {rec:.3e} exceeds {tol:.1e}")
    ok, symp_res = is_symplectic(W, tol)
    if not ok:
        raise NumericalError(
            f"Williamson factor failed symplecticity (residual {symp_res:.3e})")
    return WilliamsonFactorization(W=W, delta=delta, residual=rec,
                                   symplectic_residual=symp_res)


def symplectic_diag(A, mean: MeanSpec) -> np.ndarray:
    """Mean-indexed symplectic diagonal [M(a_jj, a_{n+j,n+j})]_{j=1..n}.

    Pairs the j-th and (n+j)-th main-diagonal entries through the mean,
    in the original coordinate order (no sorting).
    """
    A, n = validate_pd(A)
    d = np.diag(A)
    return evaluate_pairs(mean, d[:n], d[n:])
