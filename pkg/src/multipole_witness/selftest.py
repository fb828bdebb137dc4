"""Compact oracle-equivalence suite behind the ``selftest`` CLI command.

Each check pits a fast path against an independent route: coupling
coefficients against brute-force recoupling, the composition law against
direct traces in the embedded basis, witness negativity against partial
transposition.  Prints one line per check; returns 0 only if all pass.
"""

from __future__ import annotations

import numpy as np

from .angular import clebsch_gordan, wigner6j, wigner9j
from .bipartite import product_moments, product_moments_oracle, reduced_state
from .states import (
    dicke_state,
    maximally_mixed_state,
    moments_of,
    random_separable_mixture,
    random_symmetric_state,
    state_from_moments,
)
from .tensors import tensor_basis
from .witness import cross_correlation, ppt_negativity, scaling_check, witness_verdict

__all__ = ["run_selftest"]


def _check_tensor_orthogonality() -> float:
    worst = 0.0
    for n in (2, 4, 6):
        basis = tensor_basis(n)
        keys = sorted(basis)
        for i, key_a in enumerate(keys):
            for key_b in keys[i:]:
                value = np.trace(basis[key_a] @ basis[key_b].conj().T)
                expected = (n + 1.0) if key_a == key_b else 0.0
                worst = max(worst, abs(value - expected))
    return worst


def _check_moment_roundtrip() -> float:
    worst = 0.0
    for n in (3, 6):
        state = random_symmetric_state(n, seed=1000 + n)
        rebuilt = state_from_moments(moments_of(state))
        worst = max(worst, float(np.max(np.abs(rebuilt.rho - state.rho))))
    return worst


def _check_composition_law() -> float:
    worst = 0.0
    for n, n1 in ((4, 2), (5, 2), (6, 3)):
        state = random_symmetric_state(n, seed=2000 + n)
        fast = product_moments(moments_of(state), n1, n - n1)
        slow = product_moments_oracle(state, n1, n - n1)
        for key, value in fast.entries.items():
            worst = max(worst, abs(value - slow[key]))
    return worst


def _check_scaling() -> float:
    worst = 0.0
    state = random_symmetric_state(6, seed=3000)
    for n1 in (1, 2, 3):
        worst = max(worst, scaling_check(state, 1, n1, 6 - n1))
    return worst


def _check_separable_psd() -> float:
    worst = 0.0
    for seed in range(40):
        state, _ = random_separable_mixture(6, components=3, seed=seed)
        for kappa in (1, 2, 3):
            verdict = witness_verdict(state, kappa)
            worst = max(worst, -verdict.min_eigenvalue)
    return worst


def _check_dicke_vs_ppt() -> float:
    state = dicke_state(4, 0)
    verdict = witness_verdict(state, 1)
    ppt = ppt_negativity(state, 2, 2)
    if not verdict.entangled or ppt >= 0:
        return 1.0
    mixed = maximally_mixed_state(4)
    if witness_verdict(mixed, 1).entangled or witness_verdict(mixed, 2).entangled:
        return 1.0
    return 0.0


_CHECKS = (
    ("tensor orthogonality (N=2,4,6)", _check_tensor_orthogonality, 1e-9),
    ("moment table roundtrip", _check_moment_roundtrip, 1e-12),
    ("composition law vs embedded trace", _check_composition_law, 1e-9),
    ("partition scaling of witness block", _check_scaling, 1e-9),
    ("separable mixtures stay positive", _check_separable_psd, 1e-9),
    ("Dicke negativity vs partial transpose", _check_dicke_vs_ppt, 0.5),
)


def _check_coupling_basics() -> float:
    residual = abs(float(clebsch_gordan(0.5, 0.5, 1, 0.5, 0.5, 1)) - 1.0)
    residual = max(residual, abs(float(wigner6j(0.5, 0.5, 1, 0.5, 0.5, 1)) - 1.0 / 6.0))
    residual = max(
        residual,
        abs(wigner9j(0.5, 0.5, 1, 0.5, 0.5, 1, 0, 0, 0) - 1.0 / np.sqrt(12.0)),
    )
    return residual


def run_selftest(verbose: bool = True) -> int:
    checks = (("coupling coefficient spot values", _check_coupling_basics, 1e-12),) + _CHECKS
    failures = 0
    for name, check, bound in checks:
        residual = check()
        passed = residual <= bound
        failures += not passed
        if verbose:
            status = "ok" if passed else "FAIL"
            print(f"[{status}] {name}: residual {residual:.3e} (bound {bound:.1e})")
    if verbose:
        total = len(checks)
        print(f"{total - failures}/{total} checks passed")
    return 0 if failures == 0 else 1
