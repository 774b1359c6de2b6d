"""Symplectic spectra and the Williamson normal form.

Every real positive definite matrix A of order 2n can be written
A = W (D + D) W^T with W symplectic and D the diagonal of symplectic
eigenvalues.  This walk-through computes the spectrum of a random A,
factors it, checks the reconstruction, and shows the two invariances
that make the spectrum useful: symplectic congruence and scaling.
"""

import numpy as np

from sympectra import (random_pd, random_symplectic, standard_J,
                       symplectic_eigenvalues, williamson)

rng_seed = 42
n = 3
A = random_pd(n, seed=rng_seed, spread=1.0)

print("A (order %d, seed %d):" % (2 * n, rng_seed))
print(np.array_str(A, precision=4, suppress_small=True))

delta = symplectic_eigenvalues(A)
print("\nsymplectic eigenvalues (ascending):", np.round(delta, 6))

# sanity: for n = 1 these reduce to sqrt(det); here check the product,
# which must equal sqrt(det A) for any n
print("prod(delta)      = %.12f" % np.prod(delta))
print("sqrt(det A)      = %.12f" % np.sqrt(np.linalg.det(A)))

fact = williamson(A)
print("\nWilliamson factorization:")
print("  reconstruction residual  %.3e (relative)" % fact.residual)
print("  symplecticity residual   %.3e" % fact.symplectic_residual)

J = standard_J(n)
print("  ||W^T J W - J||_F        %.3e (recomputed)"
      % np.linalg.norm(fact.W.T @ J @ fact.W - J))

D2 = np.concatenate([fact.delta, fact.delta])
print("  ||A - W (D+D) W^T||_F    %.3e (recomputed)"
      % np.linalg.norm(A - (fact.W * D2) @ fact.W.T))

# congruence invariance: delta is a complete invariant of the orbit
S = random_symplectic(n, seed=7, spread=0.6)
delta_c = symplectic_eigenvalues(S.T @ A @ S)
print("\nafter congruence by a random symplectic S:")
print("  max relative drift of delta: %.3e"
      % np.max(np.abs(delta_c - delta) / delta))

# scaling covariance: delta(tA) = t delta(A)
print("after scaling A by 3.5:")
print("  max |delta(3.5 A) - 3.5 delta(A)| = %.3e"
      % np.max(np.abs(symplectic_eigenvalues(3.5 * A) - 3.5 * delta)))
