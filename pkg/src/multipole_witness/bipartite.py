"""Bipartite composition law for collective tensor moments.

A symmetric N-qubit state, split into groups of n1 and n2 qubits, is
described by product moments t[k, k', q, q'] = <tau_kq(n1) x tau_k'q'(n2)>.
These are linear in the collective moments t[K, Q](N); the coefficients
combine a CG coefficient with a 9j symbol and carry the selection rules
|k-k'| <= K <= k+k' and Q = q+q'.  The module provides that forward map, its
brute-force oracle by direct trace in the embedded product basis, the
marginal reductions, and the exact combinatorial scaling factors between
partitions of different sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .angular import SignedSqrtRational, _cg, _w9j
from .states import MomentTable, SymmetricState, moments_of
from .tensors import _tensor_operator

__all__ = [
    "ProductMomentTable",
    "f_coefficient",
    "product_moments",
    "reduce_to_subsystem",
    "p_factor",
    "subsystem_scaling",
    "f_factor",
    "embedding_isometry",
    "embed_in_product_basis",
    "reduced_state",
    "product_moments_oracle",
]

# The direct-trace oracle is meant for desk-scale cross-checks only.
ORACLE_MAX_QUBITS = 12


@dataclass(frozen=True)
class ProductMomentTable:
    """Product moments t[k, k', q, q'] for a (n1, n2) split, 0 <= k <= n1."""

    n1: int
    n2: int
    entries: dict[tuple[int, int, int, int], complex]

    def __getitem__(self, key: tuple[int, int, int, int]) -> complex:
        return self.entries[key]

    def get(self, k: int, kp: int, q: int, qp: int, default: complex = 0j) -> complex:
        return self.entries.get((k, kp, q, qp), default)

    def items(self):
        return sorted(self.entries.items())


def _check_partition(n1: int, n2: int) -> None:
    if n1 < 1 or n2 < 1:
        raise ValueError(f"both parts must hold at least one qubit, got ({n1}, {n2})")


def f_coefficient(kappa: int, kappa_p: int, q: int, q_p: int,
                  big_k: int, big_q: int, n1: int, n2: int) -> float:
    """Coefficient of t[K, Q](N) in the product moment t[kappa, kappa', q, q'].

    Zero unless Q = q + q' and |kappa - kappa'| <= K <= kappa + kappa'.
    The value is sqrt((n1+1)(n2+1)(N+1)(2k+1)(2k'+1)) times the CG
    coefficient C(kappa kappa' K; q q' Q) times the 9j symbol with rows
    (n1/2 n2/2 N/2), (n1/2 n2/2 N/2), (kappa kappa' K); the identical first
    two rows make the symbol vanish for odd kappa+kappa'+K.  Verified against
    the direct-trace oracle in the test suite.
    """
    _check_partition(n1, n2)
    if big_q != q + q_p:
        return 0.0
    if not abs(kappa - kappa_p) <= big_k <= kappa + kappa_p:
        return 0.0
    if abs(q) > kappa or abs(q_p) > kappa_p or abs(big_q) > big_k:
        return 0.0
    n = n1 + n2
    cg = _cg(2 * kappa, 2 * kappa_p, 2 * big_k, 2 * q, 2 * q_p, 2 * big_q)
    if cg.is_zero:
        return 0.0
    ninej = _w9j(n1, n2, n, n1, n2, n, 2 * kappa, 2 * kappa_p, 2 * big_k)
    if ninej == 0.0:
        return 0.0
    scale = (n1 + 1) * (n2 + 1) * (n + 1) * (2 * kappa + 1) * (2 * kappa_p + 1)
    return float(cg.scaled(scale)) * ninej


@lru_cache(maxsize=4096)
def _block_coefficients(n1: int, n2: int, kappa: int, kappa_p: int):
    """Stacked coefficient arrays for one (kappa, kappa') block.

    Returns (ks, coeff) with coeff[i, q+kappa, q'+kappa'] the coefficient of
    t[ks[i], q+q'](N).
    """
    ks = [k for k in range(abs(kappa - kappa_p), kappa + kappa_p + 1)]
    coeff = np.zeros((len(ks), 2 * kappa + 1, 2 * kappa_p + 1))
    for i, k in enumerate(ks):
        for q in range(-kappa, kappa + 1):
            for q_p in range(-kappa_p, kappa_p + 1):
                coeff[i, q + kappa, q_p + kappa_p] = f_coefficient(
                    kappa, kappa_p, q, q_p, k, q + q_p, n1, n2
                )
    coeff.flags.writeable = False
    return tuple(ks), coeff


def _product_block(table: MomentTable, n1: int, n2: int,
                   kappa: int, kappa_p: int) -> np.ndarray:
    """One (kappa, kappa') block of product moments, indexed [q+kappa, q'+kappa']."""
    ks, coeff = _block_coefficients(n1, n2, kappa, kappa_p)
    block = np.zeros((2 * kappa + 1, 2 * kappa_p + 1), dtype=complex)
    for i, k in enumerate(ks):
        moments = np.zeros_like(block)
        for q in range(-kappa, kappa + 1):
            for q_p in range(-kappa_p, kappa_p + 1):
                big_q = q + q_p
                if abs(big_q) <= k:
                    moments[q + kappa, q_p + kappa_p] = table[(k, big_q)]
        block += coeff[i] * moments
    return block


def product_moments(table: MomentTable, n1: int, n2: int) -> ProductMomentTable:
    """Complete product-moment table from the collective moments of N = n1+n2."""
    _check_partition(n1, n2)
    if table.n != n1 + n2:
        raise ValueError(f"moment table is for {table.n} qubits, partition sums to {n1 + n2}")
    entries: dict[tuple[int, int, int, int], complex] = {}
    for kappa in range(n1 + 1):
        for kappa_p in range(n2 + 1):
            block = _product_block(table, n1, n2, kappa, kappa_p)
            for q in range(-kappa, kappa + 1):
                for q_p in range(-kappa_p, kappa_p + 1):
                    entries[(kappa, kappa_p, q, q_p)] = complex(
                        block[q + kappa, q_p + kappa_p]
                    )
    return ProductMomentTable(n1, n2, entries)


def reduce_to_subsystem(pm: ProductMomentTable, which: int) -> MomentTable:
    """Marginal moments of one group: t[k, q](n1) = t[k, 0, q, 0] and likewise."""
    if which == 1:
        n = pm.n1
        entries = {
            (k, q): pm[(k, 0, q, 0)] for k in range(n + 1) for q in range(-k, k + 1)
        }
    elif which == 2:
        n = pm.n2
        entries = {
            (k, q): pm[(0, k, 0, q)] for k in range(n + 1) for q in range(-k, k + 1)
        }
    else:
        raise ValueError("which must be 1 or 2")
    return MomentTable(n, entries)


def p_factor(kappa: int, n1: int, n2: int) -> float:
    """Ratio between a group's own rank-kappa moments and the collective ones.

    Exact big-integer evaluation of
    (n1!/N!) * sqrt((n1+1)(N+kappa+1)!(N-kappa)! / ((N+1)(n1+kappa+1)!(n1-kappa)!)),
    with N = n1 + n2.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError("group sizes must be nonnegative")
    if not 0 <= kappa <= n1:
        raise ValueError(f"rank {kappa} exceeds group size {n1}")
    n = n1 + n2
    square = Fraction(factorial(n1) ** 2, factorial(n) ** 2) * Fraction(
        (n1 + 1) * factorial(n + kappa + 1) * factorial(n - kappa),
        (n + 1) * factorial(n1 + kappa + 1) * factorial(n1 - kappa),
    )
    return float(SignedSqrtRational(1, square))


def subsystem_scaling(kappa: int, n1: int, n2: int) -> float:
    """Factor relating the rank-kappa moments of nested reductions:
    t[k, q](n1) = subsystem_scaling(k, n1, n2) * t[k, q](n2) for n1 <= n2."""
    if n1 > n2:
        raise ValueError(f"need n1 <= n2, got ({n1}, {n2})")
    return p_factor(kappa, n1, n2 - n1)


def f_factor(n_alpha: int, kappa: int) -> float:
    """Group-size scaling factor for rank-kappa product moments.

    Equals (n!/k!) sqrt((n+1)(2k+1)! / ((k+1)(n+k+1)!(n-k)!)) at n = n_alpha,
    which is exactly 1/p_factor(kappa, kappa, n_alpha - kappa): growing one
    group from kappa to n_alpha qubits divides its rank-kappa moments by the
    nesting factor.  The identity is pinned against the direct-trace oracle
    in the tests.
    """
    if not 0 <= kappa <= n_alpha:
        raise ValueError(f"rank {kappa} exceeds group size {n_alpha}")
    square = Fraction(factorial(n_alpha) ** 2, factorial(kappa) ** 2) * Fraction(
        (n_alpha + 1) * factorial(2 * kappa + 1),
        (kappa + 1) * factorial(n_alpha + kappa + 1) * factorial(n_alpha - kappa),
    )
    return float(SignedSqrtRational(1, square))


@lru_cache(maxsize=128)
def embedding_isometry(n1: int, n2: int) -> np.ndarray:
    """CG isometry from the symmetric space of N qubits into (n1) x (n2).

    Column M holds the product-basis expansion of |N/2, M>; rows are indexed
    by i1*(n2+1)+i2 with both factors in descending-projection order.
    V.conj().T @ V is the identity.
    """
    _check_partition(n1, n2)
    n = n1 + n2
    v = np.zeros(((n1 + 1) * (n2 + 1), n + 1))
    for i1 in range(n1 + 1):
        tm1 = n1 - 2 * i1
        for i2 in range(n2 + 1):
            tm2 = n2 - 2 * i2
            tm = tm1 + tm2
            col = (n - tm) // 2
            cg = _cg(n1, n2, n, tm1, tm2, tm)
            if not cg.is_zero:
                v[i1 * (n2 + 1) + i2, col] = float(cg)
    v.flags.writeable = False
    return v


def embed_in_product_basis(state: SymmetricState, n1: int, n2: int) -> np.ndarray:
    """Density matrix on the (n1+1)(n2+1)-dimensional product space."""
    if state.n != n1 + n2:
        raise ValueError(f"state has {state.n} qubits, partition sums to {n1 + n2}")
    v = embedding_isometry(n1, n2)
    return v @ state.rho @ v.conj().T


def _partial_trace_second(mat: np.ndarray, d1: int, d2: int) -> np.ndarray:
    return np.einsum("abcb->ac", mat.reshape(d1, d2, d1, d2))


def reduced_state(state: SymmetricState, k: int) -> SymmetricState:
    """Reduced state of k qubits, back in the k-qubit Dicke basis.

    The reduction of a symmetric state is again symmetric, so embedding with
    the (k, n-k) split and tracing the second factor loses nothing.
    """
    if not 1 <= k <= state.n:
        raise ValueError(f"cannot reduce {state.n} qubits to {k}")
    if k == state.n:
        return state
    embedded = embed_in_product_basis(state, k, state.n - k)
    return SymmetricState(k, _partial_trace_second(embedded, k + 1, state.n - k + 1))


def product_moments_oracle(state: SymmetricState, n1: int, n2: int) -> ProductMomentTable:
    """Ground-truth product moments by direct trace in the embedded basis.

    Independent of the composition-law coefficients; gated to small systems.
    """
    _check_partition(n1, n2)
    if state.n > ORACLE_MAX_QUBITS:
        raise ValueError(f"oracle limited to {ORACLE_MAX_QUBITS} qubits, got {state.n}")
    d1, d2 = n1 + 1, n2 + 1
    embedded = embed_in_product_basis(state, n1, n2).reshape(d1, d2, d1, d2)
    entries: dict[tuple[int, int, int, int], complex] = {}
    for kappa in range(n1 + 1):
        for q in range(-kappa, kappa + 1):
            op1 = _tensor_operator(n1, kappa, q)
            partial = np.einsum("abcd,ca->bd", embedded, op1)
            for kappa_p in range(n2 + 1):
                for q_p in range(-kappa_p, kappa_p + 1):
                    op2 = _tensor_operator(n2, kappa_p, q_p)
                    entries[(kappa, kappa_p, q, q_p)] = complex(
                        np.einsum("bd,db->", partial, op2)
                    )
    return ProductMomentTable(n1, n2, entries)
