"""Structure-respecting operations: expanding sums, pinchings, frames.

The expanding sum interleaves two matrices quadrant by quadrant so the
symplectic block structure survives; its spectrum is the sorted union
of the summands' spectra.  The s-pinching projects onto the expanding-
sum pattern of a partition, stays positive definite, and can only pull
the spectrum down in the weak supermajorization order.  Finally, any
symplectic frame extends to a full symplectic matrix.
"""

import numpy as np

from sympectra import (complete_to_symplectic, expanding_sum, is_symplectic,
                       random_pd, random_symplectic, s_pinching,
                       symplectic_eigenvalues, weak_supermajorize)

A = random_pd(2, seed=1)
B = random_pd(1, seed=2)

dA = symplectic_eigenvalues(A)
dB = symplectic_eigenvalues(B)
M = expanding_sum([A, B])
print("delta(A)       :", np.round(dA, 6))
print("delta(B)       :", np.round(dB, 6))
print("delta(A [+] B) :", np.round(symplectic_eigenvalues(M), 6))
print("sorted union   :", np.round(np.sort(np.concatenate([dA, dB])), 6))

# pinching a 3-mode matrix to blocks (2, 1), then all the way down
C = random_pd(3, seed=9, spread=1.5)
dC = symplectic_eigenvalues(C)
P21 = s_pinching(C, [2, 1])
P111 = s_pinching(P21, [1, 1, 1])
print("\ndelta(C)                 :", np.round(dC, 6))
print("delta(pinch to (2,1))    :",
      np.round(symplectic_eigenvalues(P21), 6))
print("delta(pinch to (1,1,1))  :",
      np.round(symplectic_eigenvalues(P111), 6))
print("each stage weakly supermajorized by the previous:",
      weak_supermajorize(symplectic_eigenvalues(P21), dC).verdict and
      weak_supermajorize(symplectic_eigenvalues(P111),
                         symplectic_eigenvalues(P21)).verdict)

# at partition (1,...,1) the spectrum has a closed form per block
n = 3
closed = np.sort([np.sqrt(C[j, j] * C[n + j, n + j] - C[j, n + j] ** 2)
                  for j in range(n)])
print("closed form per block    :", np.round(closed, 6))

# pinching is idempotent and keeps positive definiteness
print("idempotent:", np.allclose(s_pinching(P21, [2, 1]), P21))
print("still PD  :", bool(np.all(np.linalg.eigvalsh(P111) > 0)))

# frame completion: take two columns of a symplectic matrix and rebuild
S = random_symplectic(3, seed=4, spread=0.7)
X = S[:, [0, 3]]            # a 6x2 symplectic frame (k = 1)
W = complete_to_symplectic(X)
print("\ncompleted frame is symplectic:", is_symplectic(W).ok)
print("original columns preserved   :",
      bool(np.array_equal(W[:, 0], X[:, 0])
           and np.array_equal(W[:, 3], X[:, 1])))
