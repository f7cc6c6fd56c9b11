"""
Channels, Choi matrices and membership
======================================

A channel on 2 x 2 matrices is given by Kraus operators. Its Choi matrix is
the 4 x 4 block matrix [L(E_ij)], and it belongs to C_2 exactly when it is PSD
with block traces equal to the identity.
"""
import numpy as np

from choifaces import (
    check_membership,
    choi_from_kraus,
    kraus_from_choi,
    rank1_membership,
)

# amplitude damping with decay probability 0.36
g = 0.36
kraus = [np.array([[1, 0], [0, np.sqrt(1 - g)]]), np.array([[0, np.sqrt(g)], [0, 0]])]
z = choi_from_kraus(kraus)
print("Choi matrix of amplitude damping:\n", np.round(z.real, 3))
print(check_membership(z))

# the Kraus operators can be recovered from the Choi matrix; the count equals the rank
recovered = kraus_from_choi(z)
print("recovered", len(recovered), "Kraus operators, round-trip error",
      np.max(np.abs(choi_from_kraus(recovered) - z)))

# a rank-one Choi matrix x x^* is a channel iff the chunks of x are orthonormal
print("[e1; e2] ->", rank1_membership(np.array([1, 0, 0, 1])))
print("[e1; e1] ->", rank1_membership(np.array([1, 0, 1, 0])))

# a matrix that fails the trace conditions
print(check_membership(np.eye(4)))
