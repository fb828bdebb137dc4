"""Symmetric-state constructors and the moment representation.

A symmetric N-qubit density matrix is an (N+1) x (N+1) Hermitian unit-trace
matrix in the Dicke basis.  It is equivalently described by its table of
tensor moments t[k, q] = Tr(rho * tau_kq); the two directions of that
bijection are ``moments_of`` and ``state_from_moments``.  The module also
provides the state families used throughout: Dicke projectors, spin-coherent
product states, the three isotropic-noise families, and seeded random states
and separable mixtures for testing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .angular import SignedSqrtRational, _cg, _twice
from .tensors import tensor_operator, _tensor_basis

__all__ = [
    "SymmetricState",
    "MomentTable",
    "SeparableMixture",
    "moments_of",
    "state_from_moments",
    "dicke_state",
    "dicke_moments",
    "coherent_state",
    "coherent_amplitudes",
    "maximally_mixed_state",
    "noisy_family_state",
    "random_symmetric_state",
    "random_separable_mixture",
    "state_to_dict",
    "state_from_dict",
]

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-10
CONJUGATION_TOL = 1e-12


@dataclass(frozen=True)
class SymmetricState:
    """Density matrix of n qubits in the Dicke basis (M descending).

    The constructor checks Hermiticity and unit trace.  Positivity is not
    enforced here because the moment expansion is a linear bijection that can
    represent non-physical Hermitian matrices; use ``min_eigenvalue`` or
    ``is_physical`` when positivity matters.
    """

    n: int
    rho: np.ndarray

    def __post_init__(self):
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (self.n + 1, self.n + 1):
            raise ValueError(f"expected shape {(self.n + 1, self.n + 1)}, got {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(rho).real - 1.0) > TRACE_TOL or abs(np.trace(rho).imag) > TRACE_TOL:
            raise ValueError("density matrix does not have unit trace")
        rho.flags.writeable = False
        object.__setattr__(self, "rho", rho)

    @property
    def dim(self) -> int:
        return self.n + 1

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.rho)[0])

    def is_physical(self, tol: float = POSITIVITY_TOL) -> bool:
        return self.min_eigenvalue() >= -tol


@dataclass(frozen=True)
class MomentTable:
    """Tensor moments t[k, q] of an n-qubit symmetric state, 0 <= k <= n."""

    n: int
    entries: dict[tuple[int, int], complex]

    def __getitem__(self, key: tuple[int, int]) -> complex:
        return self.entries[key]

    def get(self, k: int, q: int, default: complex = 0j) -> complex:
        return self.entries.get((k, q), default)

    def items(self):
        return sorted(self.entries.items())

    def validate(self, tol: float = CONJUGATION_TOL) -> None:
        """Check completeness, t[0,0] = 1 and conjugation symmetry."""
        expected = {(k, q) for k in range(self.n + 1) for q in range(-k, k + 1)}
        if set(self.entries) != expected:
            raise ValueError("moment table does not cover exactly 0 <= |q| <= k <= n")
        if abs(self.entries[(0, 0)] - 1.0) > tol:
            raise ValueError("t[0,0] must equal 1")
        for (k, q), value in self.entries.items():
            mirrored = (-1) ** q * np.conj(self.entries[(k, -q)])
            if abs(value - mirrored) > tol:
                raise ValueError(f"conjugation symmetry broken at (k={k}, q={q})")


def moments_of(state: SymmetricState) -> MomentTable:
    """Full tensor-moment table of a symmetric state."""
    basis = _tensor_basis(state.n)
    rho_t = state.rho.T.copy()
    entries = {
        key: complex(np.sum(rho_t * op)) for key, op in basis.items()
    }
    return MomentTable(state.n, entries)


def state_from_moments(table: MomentTable) -> SymmetricState:
    """Reconstruct the density matrix from its moment table.

    Validates t[0,0] = 1 and conjugation symmetry.  The result is Hermitian
    with unit trace by construction but not necessarily positive.
    """
    table.validate()
    n = table.n
    rho = np.zeros((n + 1, n + 1), dtype=complex)
    for (k, q), value in table.entries.items():
        op = tensor_operator(n, k, q)
        rho += op.conj().T * value
    rho /= n + 1
    return SymmetricState(n, rho)


def _dicke_index(n: int, m) -> int:
    tm = _twice(m)
    if abs(tm) > n or (n - tm) % 2 != 0:
        raise ValueError(f"projection {m} invalid for {n} qubits")
    return (n - tm) // 2


def dicke_state(n: int, m) -> SymmetricState:
    """Projector onto the Dicke basis state with projection m (half-integer)."""
    rho = np.zeros((n + 1, n + 1), dtype=complex)
    idx = _dicke_index(n, m)
    rho[idx, idx] = 1.0
    return SymmetricState(n, rho)


def dicke_moments(n: int, m, kappa: int) -> float:
    """Closed-form rank-kappa moment of a Dicke state (only q = 0 survives)."""
    if not 0 <= kappa <= n:
        raise ValueError(f"rank {kappa} outside 0..{n}")
    tm = _twice(m)
    if abs(tm) > n or (n - tm) % 2 != 0:
        raise ValueError(f"projection {m} invalid for {n} qubits")
    cg = _cg(n, 2 * kappa, n, tm, 0, tm)
    if cg.is_zero:
        return 0.0
    return float(SignedSqrtRational(cg.sign, cg.square * (2 * kappa + 1)))


def coherent_amplitudes(n: int, theta: float, phi: float) -> np.ndarray:
    """Dicke-basis amplitudes of the n-fold product of one qubit at (theta, phi)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    up = np.cos(theta / 2)
    down = np.sin(theta / 2) * np.exp(1j * phi)
    amps = np.array(
        [np.sqrt(comb(n, i)) * up ** (n - i) * down ** i for i in range(n + 1)],
        dtype=complex,
    )
    return amps


def coherent_state(n: int, theta: float, phi: float) -> SymmetricState:
    """Spin-coherent state: the same single-qubit state on all n qubits.

    Fully separable across every split of the qubits.
    """
    amps = coherent_amplitudes(n, theta, phi)
    return SymmetricState(n, np.outer(amps, amps.conj()))


def maximally_mixed_state(n: int) -> SymmetricState:
    """Normalized projector onto the symmetric subspace, I/(n+1)."""
    return SymmetricState(n, np.eye(n + 1, dtype=complex) / (n + 1))


def noisy_family_state(family: int, x: float, n: int) -> SymmetricState:
    """Isotropic-noise family: (1-x)/(n+1) * I + x |phi_family><phi_family|.

    family 1: one spin flipped from the top Dicke state, |N/2, N/2-1>.
    family 2: the equatorial Dicke state |N/2, 0> (requires even n).
    family 3: the superposition (|N/2, N/2> + |N/2, -N/2>)/sqrt(2).
    """
    if family not in (1, 2, 3):
        raise ValueError(f"unknown family {family}")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"mixing parameter x={x} outside [0, 1]")
    if n < 1:
        raise ValueError("n must be >= 1")
    dim = n + 1
    if family == 1:
        psi = np.zeros(dim, dtype=complex)
        psi[1] = 1.0
    elif family == 2:
        if n % 2 != 0:
            raise ValueError("family 2 needs even n (no M=0 state otherwise)")
        psi = np.zeros(dim, dtype=complex)
        psi[n // 2] = 1.0
    else:
        psi = np.zeros(dim, dtype=complex)
        psi[0] = psi[n] = 1.0 / np.sqrt(2)
    rho = (1.0 - x) / dim * np.eye(dim, dtype=complex) + x * np.outer(psi, psi.conj())
    return SymmetricState(n, rho)


def random_symmetric_state(n: int, seed=None) -> SymmetricState:
    """Full-rank random density matrix from the Ginibre construction."""
    rng = np.random.default_rng(seed)
    g = rng.normal(size=(n + 1, n + 1)) + 1j * rng.normal(size=(n + 1, n + 1))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return SymmetricState(n, rho)


@dataclass(frozen=True)
class SeparableMixture:
    """Convex mixture of spin-coherent product states with known decomposition."""

    n: int
    weights: np.ndarray
    thetas: np.ndarray
    phis: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be a probability vector")
        if not len(w) == len(self.thetas) == len(self.phis):
            raise ValueError("weights and angles must have equal length")

    def state(self) -> SymmetricState:
        rho = np.zeros((self.n + 1, self.n + 1), dtype=complex)
        for w, theta, phi in zip(self.weights, self.thetas, self.phis):
            amps = coherent_amplitudes(self.n, theta, phi)
            rho += w * np.outer(amps, amps.conj())
        return SymmetricState(self.n, rho)


def random_separable_mixture(n: int, components: int, seed=None):
    """Seeded random mixture of spin-coherent states with its decomposition."""
    if components < 1:
        raise ValueError("need at least one component")
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(components))
    thetas = np.arccos(rng.uniform(-1.0, 1.0, size=components))
    phis = rng.uniform(0.0, 2.0 * np.pi, size=components)
    mixture = SeparableMixture(n, weights, thetas, phis)
    return mixture.state(), mixture


def state_to_dict(state: SymmetricState) -> dict:
    """JSON-ready representation: {"n": ..., "re": [[...]], "im": [[...]]}."""
    return {
        "n": state.n,
        "re": state.rho.real.tolist(),
        "im": state.rho.imag.tolist(),
    }


def state_from_dict(data: dict) -> SymmetricState:
    """Inverse of ``state_to_dict``; validates shape, Hermiticity and trace."""
    try:
        n = int(data["n"])
        re = np.array(data["re"], dtype=float)
        im = np.array(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed state dictionary: {exc}") from exc
    return SymmetricState(n, re + 1j * im)
