"""The standard symplectic form and the matrix toolbox built around it.

Conventions: the ambient order is 2n with the split (block) layout
``[[P, Q], [R, S]]``, the form is ``J = [[0, I], [-I, 0]]``, and a matrix
W is symplectic when ``W^T J W = J``.  A 2n-by-2k matrix X is a symplectic
frame when ``X^T J_{2n} X = J_{2k}``; its columns split as ``[X1 X2]`` with
X1, X2 of width k.  Predicates report raw Frobenius residuals so callers
can re-threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.linalg import block_diag

from .errors import DomainError, NumericalError

__all__ = [
    "DEFAULT_TOL",
    "SymplecticCheck",
    "BlockCriterionReport",
    "standard_J",
    "is_symplectic",
    "block_criterion",
    "expanding_sum",
    "s_pinching",
    "frame_residual",
    "check_frame",
    "complete_to_symplectic",
    "random_symplectic",
    "random_pd",
    "expm_batch",
]

DEFAULT_TOL = 1e-8

# Pivot floor for the J-orthogonalization in complete_to_symplectic.
_PIVOT_TOL = 1e-10


def _as_square_even(M, what: str = "matrix") -> tuple[np.ndarray, int]:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DomainError(f"{what} must be square, got shape {M.shape}")
    if M.shape[0] % 2 != 0 or M.shape[0] == 0:
        raise DomainError(f"{what} must have positive even order, got {M.shape[0]}")
    return M, M.shape[0] // 2


def standard_J(n: int) -> np.ndarray:
    """The order-2n symplectic form [[0, I_n], [-I_n, 0]].

    Satisfies J^2 = -I and J^T = -J, and splits over block sizes:
    J of order 2(m+n) is the expanding sum of the order-2m and order-2n
    forms.
    """
    if n < 1:
        raise DomainError("half-order n must be >= 1")
    J = np.zeros((2 * n, 2 * n))
    J[:n, n:] = np.eye(n)
    J[n:, :n] = -np.eye(n)
    return J


class SymplecticCheck(NamedTuple):
    ok: bool
    residual: float


def is_symplectic(W, tol: float = DEFAULT_TOL) -> SymplecticCheck:
    """Test W^T J W = J; the raw Frobenius residual is always returned.

    The verdict compares the residual against ``tol * max(1, ||W||_F^2)``,
    matching the quadratic scaling of the defect in W.
    """
    W, n = _as_square_even(W)
    J = standard_J(n)
    residual = float(np.linalg.norm(W.T @ J @ W - J))
    scale = max(1.0, float(np.linalg.norm(W)) ** 2)
    return SymplecticCheck(residual <= tol * scale, residual)


@dataclass(frozen=True)
class BlockCriterionReport:
    """Residuals of the block characterization of symplecticity.

    For W = [[P, Q], [R, S]]: W is symplectic iff P^T S - R^T Q = I and
    both P^T R and Q^T S are symmetric.
    """

    identity_residual: float
    ptr_asymmetry: float
    qts_asymmetry: float
    ok: bool


def block_criterion(W, tol: float = DEFAULT_TOL) -> BlockCriterionReport:
    """Evaluate the three block conditions equivalent to W^T J W = J."""
    W, n = _as_square_even(W)
    P, Q = W[:n, :n], W[:n, n:]
    R, S = W[n:, :n], W[n:, n:]
    id_res = float(np.linalg.norm(P.T @ S - R.T @ Q - np.eye(n)))
    PtR = P.T @ R
    QtS = Q.T @ S
    asym_ptr = float(np.linalg.norm(PtR - PtR.T))
    asym_qts = float(np.linalg.norm(QtS - QtS.T))
    scale = max(1.0, float(np.linalg.norm(W)) ** 2)
    ok = max(id_res, asym_ptr, asym_qts) <= tol * scale
    return BlockCriterionReport(id_res, asym_ptr, asym_qts, ok)


def expanding_sum(blocks: Sequence[np.ndarray]) -> np.ndarray:
    """Interleaved direct sum: direct-sum each of the P/Q/R/S quadrants.

    Each block must be square of even order.  The result is similar to the
    ordinary direct sum (so eigenvalues are preserved as a multiset), and
    the construction is multiplicative over matching block lists.
    """
    if len(blocks) == 0:
        raise DomainError("expanding_sum needs at least one block")
    parts = [_as_square_even(B, "expanding_sum block") for B in blocks]
    quads = {key: [] for key in "PQRS"}
    for B, m in parts:
        quads["P"].append(B[:m, :m])
        quads["Q"].append(B[:m, m:])
        quads["R"].append(B[m:, :m])
        quads["S"].append(B[m:, m:])
    top = np.hstack([block_diag(*quads["P"]), block_diag(*quads["Q"])])
    bot = np.hstack([block_diag(*quads["R"]), block_diag(*quads["S"])])
    return np.vstack([top, bot])


def s_pinching(A, partition: Sequence[int]) -> np.ndarray:
    """Project A onto the expanding-sum block pattern of a partition.

    ``partition`` lists positive block sizes summing to the half-order n.
    Within each of the four n-by-n quadrants only the diagonal blocks of
    the partition survive; everything else is zeroed.  Positive
    definiteness is preserved.
    """
    A, n = _as_square_even(A)
    sizes = [int(m) for m in partition]
    if any(m < 1 for m in sizes) or sum(sizes) != n:
        raise DomainError(
            f"partition {sizes} must have positive parts summing to {n}")
    out = np.zeros_like(A)
    offset = 0
    for m in sizes:
        for r0 in (0, n):
            for c0 in (0, n):
                rows = slice(r0 + offset, r0 + offset + m)
                cols = slice(c0 + offset, c0 + offset + m)
                out[rows, cols] = A[rows, cols]
        offset += m
    return out


def frame_residual(X) -> float:
    """Frobenius norm of X^T J_{2n} X - J_{2k} for a 2n-by-2k matrix."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] % 2 or X.shape[1] % 2 or X.shape[1] == 0:
        raise DomainError(f"frame must be 2n-by-2k, got shape {X.shape}")
    n, k = X.shape[0] // 2, X.shape[1] // 2
    if k > n:
        raise DomainError(f"frame width 2k={2 * k} exceeds order 2n={2 * n}")
    return float(np.linalg.norm(X.T @ standard_J(n) @ X - standard_J(k)))


def check_frame(X, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate the frame relation and return X as a float array."""
    X = np.asarray(X, dtype=float)
    res = frame_residual(X)
    scale = max(1.0, float(np.linalg.norm(X)) ** 2)
    if res > tol * scale:
        raise DomainError(
            f"not a symplectic frame: residual {res:.3e} > {tol:.1e} * {scale:.3e}")
    return X


def _project_out(C: np.ndarray, U: np.ndarray, V: np.ndarray,
                 J: np.ndarray) -> np.ndarray:
    # Remove skew-form components along accepted conjugate pairs (u_j, v_j):
    # c -> c - v_j (u_j^T J c) + u_j (v_j^T J c).  Two passes, as in
    # modified Gram-Schmidt, to mop up the first pass's residual.
    for _ in range(2):
        C = C - V @ (U.T @ (J @ C)) + U @ (V.T @ (J @ C))
    return C


def complete_to_symplectic(X, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Extend a symplectic frame to a full symplectic matrix.

    Given X = [X1 X2] of shape 2n-by-2k with X^T J X = J_{2k}, returns a
    square symplectic W = [X1 Y1 X2 Y2] whose columns 1..k and n+1..n+k
    are X1 and X2 unchanged.  New conjugate pairs are drawn from the
    standard basis by J-orthogonalization, pivoting on the largest
    normalized skew product |c_i^T J c_j|.

    Raises
    ------
    DomainError
        If X fails the frame residual check.
    NumericalError
        If the pivot drops below the degeneracy floor, or the assembled W
        fails its own symplecticity check.
    """
    X = check_frame(X, tol)
    twon, twok = X.shape
    n, k = twon // 2, twok // 2
    if k == n:
        return X.copy()
    J = standard_J(n)

    U = X[:, :k].copy()
    V = X[:, k:].copy()
    C = _project_out(np.eye(twon), U, V, J)
    while U.shape[1] < n:
        # Prune candidates absorbed into the accepted span, then work with
        # unit columns so the pivot is scale free.
        norms = np.linalg.norm(C, axis=0)
        C = C[:, norms > 1e-8 * max(1.0, float(norms.max(initial=0.0)))]
        if C.shape[1] < 2:
            raise NumericalError(
                "symplectic completion ran out of candidate directions")
        C = C / np.linalg.norm(C, axis=0)
        G = np.abs(C.T @ J @ C)
        i, j = np.unravel_index(int(np.argmax(G)), G.shape)
        if G[i, j] <= _PIVOT_TOL:
            raise NumericalError(
                "degenerate pivot in symplectic completion "
                f"(best normalized skew product {G[i, j]:.3e})")
        u = C[:, i]
        v = C[:, j] / float(u @ J @ C[:, j])
        U = np.column_stack([U, u])
        V = np.column_stack([V, v])
        C = _project_out(np.delete(C, (i, j), axis=1),
                         u[:, None], v[:, None], J)

    W = np.hstack([U, V])
    ok, res = is_symplectic(W, tol)
    if not ok:
        raise NumericalError(
            f"symplectic completion failed verification (residual {res:.3e})")
    return W


# Pade-13 coefficients for the scaling-and-squaring matrix exponential.
_PADE13 = (
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0, 129060195264000.0, 10559470521600.0, 670442572800.0,
    33522128640.0, 1323241920.0, 40840800.0, 960960.0, 16380.0, 182.0, 1.0,
)
_PADE13_THETA = 4.25


def expm_batch(H: np.ndarray) -> np.ndarray:
    """Matrix exponential of a stack of small square matrices.

    Scaling-and-squaring with a degree-13 Pade approximant; the scaling
    power is shared across the batch (chosen from the largest 1-norm), so
    the result is deterministic and batch-order independent.
    """
    H = np.asarray(H, dtype=float)
    squeeze = H.ndim == 2
    if squeeze:
        H = H[None]
    m = H.shape[-1]
    norm = np.abs(H).sum(axis=-2).max(axis=-1).max()
    s = max(0, int(np.ceil(np.log2(norm / _PADE13_THETA)))) if norm > _PADE13_THETA else 0
    A = H / (2.0 ** s)
    b = _PADE13
    eye = np.broadcast_to(np.eye(m), A.shape)
    A2 = A @ A
    A4 = A2 @ A2
    A6 = A4 @ A2
    Uu = A @ (A6 @ (b[13] * A6 + b[11] * A4 + b[9] * A2)
              + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * eye)
    Vv = (A6 @ (b[12] * A6 + b[10] * A4 + b[8] * A2)
          + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * eye)
    E = np.linalg.solve(Vv - Uu, Vv + Uu)
    for _ in range(s):
        E = E @ E
    return E[0] if squeeze else E


def random_symplectic(n: int, seed=0, spread: float = 1.0) -> np.ndarray:
    """Seeded random symplectic matrix of order 2n.

    Construction: exp(J S) with S symmetric Gaussian (entries scaled by
    ``spread``), composed with a shear [[I, 0], [Z, I]] for symmetric
    Gaussian Z.  The exponential covers the compact directions of the
    group, the shear the non-compact ones; spread -> 0 collapses to the
    identity.
    """
    if spread <= 0:
        raise DomainError("spread must be positive")
    rng = np.random.default_rng(seed)
    S = rng.normal(scale=spread, size=(2 * n, 2 * n))
    S = 0.5 * (S + S.T)
    W = expm_batch(standard_J(n) @ S)
    Z = rng.normal(scale=spread, size=(n, n))
    Z = 0.5 * (Z + Z.T)
    shear = np.eye(2 * n)
    shear[n:, :n] = Z
    return W @ shear


def random_pd(n: int, seed=0, spread: float = 1.0) -> np.ndarray:
    """Seeded random positive definite matrix of order 2n.

    Eigenvalues are log-uniform in [exp(-spread), exp(spread)] with a Haar
    orthogonal eigenbasis, so ``spread`` directly controls conditioning.
    """
    if spread <= 0:
        raise DomainError("spread must be positive")
    rng = np.random.default_rng(seed)
    G = rng.normal(size=(2 * n, 2 * n))
    Q, R = np.linalg.qr(G)
    Q = Q * np.sign(np.diag(R))
    lam = np.exp(rng.uniform(-spread, spread, size=2 * n))
    A = (Q * lam) @ Q.T
    return 0.5 * (A + A.T)
