"""Inverse problem: prescribe the diagonal and the spectrum together.

Weak supermajorization is not only necessary but sufficient: whenever
x is weakly supermajorized by y there exists a positive definite A with
diag_M(A) = x and delta(A) = sorted y, for any admissible mean M.  The
construction routes through an intermediate vector z (componentwise
below x, exactly majorized by y), an orthogonal matrix putting diagonal
z on spectrum y, and a chain of 2x2 symplectic dilations lifting z back
up to x.
"""

import numpy as np

from sympectra import (geometric_mean, harmonic_mean, horn_symplectic_realize,
                       intermediate_vector, majorize, symplectic_diag,
                       symplectic_eigenvalues, weak_supermajorize)

x = np.array([2.0, 1.1, 2.4, 1.7])
y = np.array([0.6, 1.9, 1.2, 1.5])

rep = weak_supermajorize(x, y)
print("x =", x)
print("y =", y)
print("x weakly supermajorized by y?", rep.verdict)
print("partial-sum slacks:", np.round(rep.k_slacks, 6))

z = intermediate_vector(x, y)
print("\nintermediate z =", np.round(z, 6))
print("z <= x componentwise:", bool(np.all(z <= x + 1e-12)))
print("z majorized by y    :", majorize(z, y).verdict)

for mean in (geometric_mean(), harmonic_mean()):
    A = horn_symplectic_realize(x, y, mean)
    got_x = symplectic_diag(A, mean)
    got_y = symplectic_eigenvalues(A)
    print("\nmean = %s" % mean.name)
    print("  diag_M(A) = %s   (target x, max err %.2e)"
          % (np.round(got_x, 6), np.max(np.abs(got_x - x))))
    print("  delta(A)  = %s   (target sorted y, max err %.2e)"
          % (np.round(got_y, 6), np.max(np.abs(got_y - np.sort(y)))))

# edge case: equality x = y sorted ascending needs no dilation at all
xe = np.sort(y)
Ae = horn_symplectic_realize(xe, y, geometric_mean())
print("\nequality case diag = delta:")
print("  diag_M:", np.round(symplectic_diag(Ae, geometric_mean()), 6))
print("  delta :", np.round(symplectic_eigenvalues(Ae), 6))

# inadmissible targets are rejected up front
try:
    horn_symplectic_realize([1.0, 1.0], [2.0, 2.0], geometric_mean())
except Exception as exc:
    print("\ninadmissible pair rejected:", exc)
