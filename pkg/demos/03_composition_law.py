"""
The bipartite composition law
=============================

Splitting N qubits into groups of n1 and n2 turns collective moments into
product moments t[k, k', q, q'].  The linear map doing that is built from
coupling coefficients; here it is checked against literal traces in the
embedded product basis, and the partition-scaling factors are exercised.
"""

import numpy as np

from multipole_witness import (
    f_factor,
    moments_of,
    p_factor,
    product_moments,
    product_moments_oracle,
    random_symmetric_state,
    reduce_to_subsystem,
    reduced_state,
)

state = random_symmetric_state(6, seed=1)
table = moments_of(state)

# Composition law vs direct trace, every split of six qubits.
for n1 in range(1, 6):
    n2 = 6 - n1
    fast = product_moments(table, n1, n2)
    slow = product_moments_oracle(state, n1, n2)
    worst = max(abs(fast[key] - slow[key]) for key in fast.entries)
    print(f"split ({n1},{n2}): worst |composition - trace| = {worst:.2e}")

# Marginals drop out of the product table; they also carry a clean
# combinatorial relation to the collective moments.
pm = product_moments(table, 2, 4)
marginal = reduce_to_subsystem(pm, 1)
direct = moments_of(reduced_state(state, 2))
print("\n2-qubit marginal from the table vs partial trace:",
      max(abs(marginal[key] - direct[key]) for key in marginal.entries))

print("\nmarginal factor p for rank 1:")
for n1 in range(1, 6):
    print(f"  ({n1},{6-n1}): p = {p_factor(1, n1, 6 - n1):.6f}")

# Group-size scaling: product moments of any split are proportional to the
# equal split of the smallest reduction that supports the ranks.
kappa = 1
big = product_moments(table, 2, 4)
small = product_moments(moments_of(reduced_state(state, 2)), 1, 1)
factor = f_factor(2, kappa) * f_factor(4, kappa)
lhs = big[(1, 1, 1, -1)]
rhs = factor * small[(1, 1, 1, -1)]
print(f"\nscaling check t[1,1,+1,-1]: (2,4) split {lhs:.6f} = {factor:.4f} x {small[(1, 1, 1, -1)]:.6f} = {rhs:.6f}")
