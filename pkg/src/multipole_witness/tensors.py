"""Irreducible spherical tensor operators and collective spin matrices.

Everything lives in the Dicke basis of the N-qubit symmetric subspace,
ordered by decreasing projection: row 0 is |N/2, N/2> ("all spins up"),
row i is |N/2, N/2 - i>.  The rank-K component-Q operator has matrix
elements sqrt(2K+1) * C(N/2, K, N/2; M, Q, M'), nonzero only on the single
diagonal M' = M + Q, and the full set of (N+1)^2 operators is
trace-orthogonal with norm N+1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .angular import SignedSqrtRational, _cg

__all__ = ["tensor_operator", "tensor_basis", "angular_momentum_matrices"]


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


def tensor_operator(n: int, k: int, q: int) -> np.ndarray:
    """Dense (n+1) x (n+1) matrix of the rank-k, component-q tensor operator.

    CG values are carried exactly (including the sqrt(2k+1) normalization)
    and converted to float once per entry.  The returned array is cached and
    read-only; copy before modifying.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n:
        raise ValueError(f"rank k={k} outside 0..{n}")
    if abs(q) > k:
        raise ValueError(f"component q={q} exceeds rank k={k}")
    return _tensor_operator(n, k, q)


@lru_cache(maxsize=None)
def _tensor_operator(n: int, k: int, q: int) -> np.ndarray:
    mat = np.zeros((n + 1, n + 1), dtype=complex)
    for col in range(n + 1):
        tm = n - 2 * col          # doubled projection of the column state
        tmp = tm + 2 * q
        if abs(tmp) > n:
            continue
        row = (n - tmp) // 2
        cg = _cg(n, 2 * k, n, tm, 2 * q, tmp)
        if cg.is_zero:
            continue
        mat[row, col] = float(SignedSqrtRational(cg.sign, cg.square * (2 * k + 1)))
    return _readonly(mat)


def tensor_basis(n: int) -> dict[tuple[int, int], np.ndarray]:
    """All (n+1)^2 tensor operators for n qubits, keyed by (k, q)."""
    return dict(_tensor_basis(n))


@lru_cache(maxsize=64)
def _tensor_basis(n: int) -> dict[tuple[int, int], np.ndarray]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return {
        (k, q): _tensor_operator(n, k, q)
        for k in range(n + 1)
        for q in range(-k, k + 1)
    }


def angular_momentum_matrices(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Collective spin matrices (Jx, Jy, Jz) for spin J = n/2 in the Dicke basis."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _angular_momentum(n)


@lru_cache(maxsize=64)
def _angular_momentum(n: int):
    j = n / 2
    m = j - np.arange(n + 1)
    jz = np.diag(m).astype(complex)
    # J+ |J,M> = sqrt((J-M)(J+M+1)) |J,M+1>; with M descending that is the
    # superdiagonal.
    raise_amp = np.sqrt((j - m[1:]) * (j + m[1:] + 1))
    jp = np.zeros((n + 1, n + 1), dtype=complex)
    jp[np.arange(n), np.arange(1, n + 1)] = raise_amp
    jm = jp.conj().T
    jx = (jp + jm) / 2
    jy = (jp - jm) / 2j
    return _readonly(jx), _readonly(jy), _readonly(jz)
