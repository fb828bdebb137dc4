"""Covariance-matrix entanglement witnesses for symmetric states.

For a (n1, n2) split and rank kappa, the cross-correlation block collects
the covariances between the rank-kappa tensors of the two groups.  It is
positive semidefinite for every separable symmetric state, and across
partitions it only changes by a positive scale, so its sign is decided by
the equal split of the 2*kappa-qubit reduced state.  A negative eigenvalue
there certifies entanglement; rank 1 reproduces the spin-squeezing
inequality.  An independent partial-transpose check is included as an
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bipartite import (
    _product_block,
    embed_in_product_basis,
    f_factor,
    p_factor,
    reduced_state,
)
from .states import MomentTable, SeparableMixture, SymmetricState, coherent_state, moments_of
from .tensors import _tensor_operator, angular_momentum_matrices

__all__ = [
    "WitnessVerdict",
    "cross_correlation",
    "full_covariance",
    "witness_verdict",
    "scaling_check",
    "separable_scaling_check",
    "spin_squeezing_matrix",
    "spherical_to_cartesian",
    "ppt_negativity",
]

# Scale-aware negativity threshold: entangled iff
# min eig < -NEGATIVITY_EPS * max(1, spectral norm).
NEGATIVITY_EPS = 1e-10

_HERMITIZE_TOL = 1e-10


@dataclass(frozen=True)
class WitnessVerdict:
    """Outcome of the negativity test on the equal-partition covariance block."""

    kappa: int
    n1: int
    n2: int
    min_eigenvalue: float
    entangled: bool
    tolerance: float

    def as_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "partition": [self.n1, self.n2],
            "min_eigenvalue": self.min_eigenvalue,
            "entangled": self.entangled,
            "tolerance": self.tolerance,
        }


def _check_kappa(kappa: int, n1: int, n2: int) -> None:
    if kappa < 1:
        raise ValueError("rank kappa must be >= 1")
    if kappa > min(n1, n2):
        raise ValueError(f"rank {kappa} exceeds smaller group of ({n1}, {n2})")


def _hermitize(mat: np.ndarray, what: str) -> np.ndarray:
    deviation = np.max(np.abs(mat - mat.conj().T))
    if deviation > _HERMITIZE_TOL * max(1.0, np.linalg.norm(mat, 2)):
        raise ValueError(f"{what} deviates from Hermiticity by {deviation:.3e}")
    return (mat + mat.conj().T) / 2


def cross_correlation(state: SymmetricState, kappa: int, n1: int, n2: int) -> np.ndarray:
    """Inter-group covariance block, entry [q+kappa, q'+kappa].

    C[q, q'] = <A_q B_q'^dag> - <A_q><B_q'^dag> with A_q, B_q the rank-kappa
    tensors of the two groups; evaluated through the composition law as
    (-1)^q' (t[kappa,kappa,q,-q'] - t[kappa,0,q,0] t[0,kappa,0,-q']).
    """
    if state.n != n1 + n2:
        raise ValueError(f"state has {state.n} qubits, partition sums to {n1 + n2}")
    _check_kappa(kappa, n1, n2)
    table = moments_of(state)
    return _cross_from_moments(table, kappa, n1, n2)


def _cross_from_moments(table: MomentTable, kappa: int, n1: int, n2: int) -> np.ndarray:
    cross = _product_block(table, n1, n2, kappa, kappa)
    a_mean = _product_block(table, n1, n2, kappa, 0)[:, 0]
    b_mean = _product_block(table, n1, n2, 0, kappa)[0, :]
    dim = 2 * kappa + 1
    mat = np.empty((dim, dim), dtype=complex)
    for row in range(dim):
        for col in range(dim):
            qp = col - kappa
            neg = kappa - qp  # index of -q' in the block
            sign = -1.0 if qp % 2 else 1.0
            mat[row, col] = sign * (cross[row, neg] - a_mean[row] * b_mean[neg])
    return _hermitize(mat, "cross-correlation block")


def full_covariance(state: SymmetricState, kappa: int, n1: int, n2: int) -> np.ndarray:
    """Symmetrized covariance matrix of both groups' rank-kappa tensors.

    Block form [[A, C], [C^dag, B]]: A and B are the intra-group symmetrized
    covariances (computed from the groups' reduced states), C the
    cross-correlation block.
    """
    if state.n != n1 + n2:
        raise ValueError(f"state has {state.n} qubits, partition sums to {n1 + n2}")
    _check_kappa(kappa, n1, n2)
    c_block = cross_correlation(state, kappa, n1, n2)
    a_block = _intra_group_covariance(reduced_state(state, n1), kappa)
    b_block = _intra_group_covariance(reduced_state(state, n2), kappa)
    dim = 2 * kappa + 1
    full = np.empty((2 * dim, 2 * dim), dtype=complex)
    full[:dim, :dim] = a_block
    full[:dim, dim:] = c_block
    full[dim:, :dim] = c_block.conj().T
    full[dim:, dim:] = b_block
    return full


def _intra_group_covariance(group: SymmetricState, kappa: int) -> np.ndarray:
    """(1/2)<{Delta T_q, Delta T_q'^dag}> for one group's rank-kappa tensor."""
    n = group.n
    dim = 2 * kappa + 1
    ops = [_tensor_operator(n, kappa, q) for q in range(-kappa, kappa + 1)]
    means = np.array([np.trace(group.rho @ op) for op in ops])
    mat = np.empty((dim, dim), dtype=complex)
    for a in range(dim):
        for b in range(dim):
            prod = ops[a] @ ops[b].conj().T
            sym = (prod + ops[b].conj().T @ ops[a]) / 2
            mat[a, b] = np.trace(group.rho @ sym) - means[a] * np.conj(means[b])
    return _hermitize(mat, "intra-group covariance block")


def witness_verdict(state: SymmetricState, kappa: int) -> WitnessVerdict:
    """Negativity test of the equal-partition block on the 2*kappa reduction.

    The reduction step is lossless for this purpose: across partitions the
    block only changes by a positive factor, so the 2*kappa-qubit equal split
    carries the sign for every split of the full state.
    """
    if kappa < 1:
        raise ValueError("rank kappa must be >= 1")
    if 2 * kappa > state.n:
        raise ValueError(f"need 2*kappa <= {state.n}, got kappa={kappa}")
    block = cross_correlation(reduced_state(state, 2 * kappa), kappa, kappa, kappa)
    return _verdict_from_block(block, kappa)


def _verdict_from_block(block: np.ndarray, kappa: int) -> WitnessVerdict:
    eigenvalues = np.linalg.eigvalsh(block)
    min_eig = float(eigenvalues[0])
    scale = max(1.0, float(np.max(np.abs(eigenvalues)))) if eigenvalues.size else 1.0
    threshold = NEGATIVITY_EPS * scale
    return WitnessVerdict(
        kappa=kappa,
        n1=kappa,
        n2=kappa,
        min_eigenvalue=min_eig,
        entangled=bool(min_eig < -threshold),
        tolerance=threshold,
    )


def scaling_check(state: SymmetricState, kappa: int, n1: int, n2: int) -> float:
    """Residual of the partition-scaling identity for the cross block.

    Compares the (n1, n2) block against f(n1,kappa) f(n2,kappa) times the
    equal-partition block of the 2*kappa-qubit reduction; Frobenius norm
    relative to max(block norm, 1), expected at solver precision.
    """
    lhs = cross_correlation(state, kappa, n1, n2)
    base = cross_correlation(reduced_state(state, 2 * kappa), kappa, kappa, kappa)
    rhs = f_factor(n1, kappa) * f_factor(n2, kappa) * base
    denom = max(np.linalg.norm(base), 1.0)
    return float(np.linalg.norm(lhs - rhs) / denom)


def separable_scaling_check(mixture: SeparableMixture, kappa: int, n1: int, n2: int) -> float:
    """Residual of the separable-state scaling law against the decomposition.

    For a known coherent mixture, the (n1, n2) cross block equals the
    classical covariance of the components' rank-kappa moment vectors on n1
    qubits, divided by the nesting factor between n1- and n2-qubit moments.
    Requires n1 <= n2.
    """
    if n1 > n2:
        raise ValueError(f"need n1 <= n2, got ({n1}, {n2})")
    if mixture.n != n1 + n2:
        raise ValueError(f"mixture has {mixture.n} qubits, partition sums to {n1 + n2}")
    _check_kappa(kappa, n1, n2)
    lhs = cross_correlation(mixture.state(), kappa, n1, n2)
    dim = 2 * kappa + 1
    vectors = np.empty((len(mixture.weights), dim), dtype=complex)
    for w, (theta, phi) in enumerate(zip(mixture.thetas, mixture.phis)):
        component = moments_of(coherent_state(n1, theta, phi))
        vectors[w] = [component[(kappa, q)] for q in range(-kappa, kappa + 1)]
    weights = np.asarray(mixture.weights)
    mean = weights @ vectors
    second = np.zeros((dim, dim), dtype=complex)
    for w, vec in enumerate(vectors):
        second += weights[w] * np.outer(vec, vec)
    same_part = np.empty((dim, dim), dtype=complex)
    for row in range(dim):
        for col in range(dim):
            neg = dim - 1 - col  # index of -q'
            sign = -1.0 if (col - kappa) % 2 else 1.0
            same_part[row, col] = sign * (second[row, neg] - mean[row] * mean[neg])
    rhs = same_part / p_factor(kappa, n1, n2 - n1)
    denom = max(np.linalg.norm(rhs), 1.0)
    return float(np.linalg.norm(lhs - rhs) / denom)


def spin_squeezing_matrix(state: SymmetricState) -> np.ndarray:
    """The 3x3 matrix -(N/4) I + V + S S^T / N from collective spin moments.

    V is the symmetrized covariance of (Jx, Jy, Jz) and S the mean spin
    vector.  A negative eigenvalue is the spin-squeezing entanglement
    criterion and matches the sign of the rank-1 witness block.
    """
    if state.n < 2:
        raise ValueError("spin squeezing needs at least 2 qubits")
    ops = angular_momentum_matrices(state.n)
    s = np.array([np.trace(state.rho @ op).real for op in ops])
    v = np.empty((3, 3))
    for a in range(3):
        for b in range(3):
            sym = (ops[a] @ ops[b] + ops[b] @ ops[a]) / 2
            v[a, b] = np.trace(state.rho @ sym).real - s[a] * s[b]
    n = state.n
    return -(n / 4.0) * np.eye(3) + v + np.outer(s, s) / n


def squeezing_scale(n1: int, n2: int) -> float:
    """Positive factor relating the rank-1 cross block to the spin matrix."""
    n = n1 + n2
    return 12.0 / (n * (n - 1)) * np.sqrt(n1 * n2 / ((n1 + 2.0) * (n2 + 2.0)))


# Rows q = -1, 0, +1 expressed in the Cartesian basis (columns x, y, z):
# e_{-1} = (e_x - i e_y)/sqrt(2), e_0 = e_z, e_{+1} = -(e_x + i e_y)/sqrt(2).
_SPHERICAL_FROM_CARTESIAN = np.array(
    [
        [1 / np.sqrt(2), -1j / np.sqrt(2), 0],
        [0, 0, 1],
        [-1 / np.sqrt(2), -1j / np.sqrt(2), 0],
    ]
)


def spherical_to_cartesian(block: np.ndarray) -> np.ndarray:
    """Rotate a rank-1 block (rows q = -1, 0, +1) to the Cartesian basis."""
    block = np.asarray(block, dtype=complex)
    if block.shape != (3, 3):
        raise ValueError("expected a 3x3 rank-1 block")
    u = _SPHERICAL_FROM_CARTESIAN.conj().T
    return u @ block @ u.conj().T


def ppt_negativity(state: SymmetricState, n1: int, n2: int) -> float:
    """Smallest eigenvalue of the partial transpose of the embedded state.

    A value below -eps certifies entanglement across the (n1, n2) split;
    independent of the covariance machinery.
    """
    d1, d2 = n1 + 1, n2 + 1
    embedded = embed_in_product_basis(state, n1, n2).reshape(d1, d2, d1, d2)
    transposed = embedded.transpose(0, 3, 2, 1).reshape(d1 * d2, d1 * d2)
    return float(np.linalg.eigvalsh(transposed)[0])
