"""
Irreducible tensor operators in the Dicke basis
================================================

Build the operator basis for a few qubit counts and verify its structure:
one nonzero diagonal per component, trace orthogonality, and the low-rank
operators as polynomials in the collective spin.
"""

import numpy as np

from multipole_witness import angular_momentum_matrices, tensor_basis, tensor_operator

np.set_printoptions(precision=4, suppress=True, linewidth=120)

# Rank 0 is the identity, rank 1 component 0 is a rescaled Jz.
n = 4
print("rank-0 operator for N=4 (identity):")
print(tensor_operator(n, 0, 0).real)

jx, jy, jz = angular_momentum_matrices(n)
j = n / 2
print("\nrank-1, q=0 against sqrt(3/(J(J+1))) Jz:")
print(tensor_operator(n, 1, 0).real)
print((np.sqrt(3 / (j * (j + 1))) * jz).real)

# Each component q shifts the projection by q: a single nonzero diagonal.
print("\nrank-2, q=+1 for N=4 (single superdiagonal):")
print(tensor_operator(n, 2, 1).real)

# The full set of (N+1)^2 operators is trace-orthogonal with norm N+1.
for n in (2, 3, 6):
    basis = tensor_basis(n)
    keys = sorted(basis)
    vecs = np.array([basis[k].ravel() for k in keys])
    gram = vecs @ vecs.conj().T
    deviation = np.max(np.abs(gram - (n + 1) * np.eye(len(keys))))
    print(f"\nN={n}: {len(keys)} operators, Gram deviation from (N+1)*I: {deviation:.2e}")
