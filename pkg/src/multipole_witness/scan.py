"""Noise-threshold scans for the isotropic-noise state families.

For each (family, N, kappa) cell the scan tracks the smallest eigenvalue of
the equal-partition covariance block of the 2*kappa-qubit reduction as a
function of the mixing parameter x, brackets the first sign change on a
coarse grid and refines it by bisection.  Reports are deterministic: the
wall-time column is written as 0 unless timing is explicitly requested.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .states import maximally_mixed_state, moments_of, noisy_family_state
from .bipartite import reduced_state, _product_block
from .witness import NEGATIVITY_EPS

__all__ = [
    "ScanConfig",
    "ScanRecord",
    "threshold_scan",
    "figure1_report",
    "records_to_csv",
    "records_to_json",
    "write_report",
]

CSV_HEADER = "family,N,kappa,x_min,min_eig_at_x1,wall_ms"


@dataclass(frozen=True)
class ScanConfig:
    """Grid and refinement settings shared by all scan cells."""

    x_grid_step: float = 0.005
    bisection_tol: float = 1e-6
    jobs: int = 1
    include_timing: bool = False

    def __post_init__(self):
        if not 0.0 < self.x_grid_step <= 0.1:
            raise ValueError(f"grid step {self.x_grid_step} outside (0, 0.1]")
        if self.bisection_tol < 1e-9:
            raise ValueError(f"bisection tolerance {self.bisection_tol} below 1e-9")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass(frozen=True)
class ScanRecord:
    """Threshold-scan result for one (family, N, kappa) cell."""

    family: int
    n: int
    kappa: int
    x_min: float | None
    min_eig_at_x1: float
    wall_ms: float

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "N": self.n,
            "kappa": self.kappa,
            "x_min": self.x_min,
            "min_eig_at_x1": self.min_eig_at_x1,
            "wall_ms": self.wall_ms,
        }


class _WitnessCurve:
    """min eig of the witness block along the x axis of one noise family.

    The reduced state, its moments and the product blocks are all linear in
    x, so the two endpoint tables are computed once and blended per sample.
    """

    def __init__(self, family: int, n: int, kappa: int):
        if kappa < 1 or 2 * kappa > n:
            raise ValueError(f"need 1 <= kappa <= N/2, got kappa={kappa}, N={n}")
        self.kappa = kappa
        k2 = 2 * kappa
        mixed = reduced_state(maximally_mixed_state(n), k2)
        pure = reduced_state(noisy_family_state(family, 1.0, n), k2)
        self._blocks = []
        for state in (mixed, pure):
            table = moments_of(state)
            self._blocks.append((
                _product_block(table, kappa, kappa, kappa, kappa),
                _product_block(table, kappa, kappa, kappa, 0)[:, 0],
                _product_block(table, kappa, kappa, 0, kappa)[0, :],
            ))

    def block(self, x: float) -> np.ndarray:
        (cross0, a0, b0), (cross1, a1, b1) = self._blocks
        cross = (1 - x) * cross0 + x * cross1
        a_mean = (1 - x) * a0 + x * a1
        b_mean = (1 - x) * b0 + x * b1
        kappa = self.kappa
        dim = 2 * kappa + 1
        mat = np.empty((dim, dim), dtype=complex)
        for row in range(dim):
            for col in range(dim):
                neg = 2 * kappa - col
                sign = -1.0 if (col - kappa) % 2 else 1.0
                mat[row, col] = sign * (cross[row, neg] - a_mean[row] * b_mean[neg])
        return (mat + mat.conj().T) / 2

    def min_eig(self, x: float) -> tuple[float, float]:
        """(smallest eigenvalue, scale-aware negativity threshold) at x."""
        eigenvalues = np.linalg.eigvalsh(self.block(x))
        scale = max(1.0, float(np.max(np.abs(eigenvalues))))
        return float(eigenvalues[0]), NEGATIVITY_EPS * scale


def _x_grid(step: float) -> list[float]:
    count = int(np.ceil(1.0 / step))
    grid = [min(i * step, 1.0) for i in range(count + 1)]
    if grid[-1] < 1.0:
        grid.append(1.0)
    return grid


def threshold_scan(family: int, n: int, kappa: int, cfg: ScanConfig | None = None) -> ScanRecord:
    """Locate the smallest x at which the witness block turns negative.

    Walks the x grid from 0, asserts that detection is monotone (once
    negative, the family stays negative on the grid), brackets the first
    crossing and bisects it down to cfg.bisection_tol.  x_min is None when
    no grid point, including x = 1, is negative.
    """
    cfg = cfg or ScanConfig()
    start = time.perf_counter()
    curve = _WitnessCurve(family, n, kappa)

    bracket = None
    detected = False
    prev_x = 0.0
    for x in _x_grid(cfg.x_grid_step):
        value, threshold = curve.min_eig(x)
        negative = value < -threshold
        if negative and not detected:
            detected = True
            bracket = (prev_x, x)
        elif detected and not negative:
            raise RuntimeError(
                f"non-monotone detection for family {family}, N={n}, kappa={kappa}: "
                f"negative before x={x:.6f} but not at it"
            )
        prev_x = x

    x_min = None
    if bracket is not None:
        lo, hi = bracket
        while hi - lo > cfg.bisection_tol:
            mid = (lo + hi) / 2
            value, threshold = curve.min_eig(mid)
            if value < -threshold:
                hi = mid
            else:
                lo = mid
        x_min = (lo + hi) / 2

    min_eig_at_1, _ = curve.min_eig(1.0)
    wall_ms = (time.perf_counter() - start) * 1000.0 if cfg.include_timing else 0.0
    return ScanRecord(family, n, kappa, x_min, min_eig_at_1, wall_ms)


def _scan_cell(args) -> ScanRecord:
    family, n, kappa, cfg = args
    return threshold_scan(family, n, kappa, cfg)


def run_cells(cells, cfg: ScanConfig) -> list[ScanRecord]:
    """Scan many (family, N, kappa) cells, in parallel when cfg.jobs > 1."""
    cells = sorted(set(cells))
    args = [(family, n, kappa, cfg) for family, n, kappa in cells]
    if cfg.jobs == 1:
        records = [_scan_cell(a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(_scan_cell, args))
    return sorted(records, key=lambda r: (r.family, r.n, r.kappa))


def figure1_report(
    n_values,
    kappas=(1, 2, 3, 4, 5),
    cfg: ScanConfig | None = None,
) -> list[ScanRecord]:
    """Threshold records for the three panels of the noise-family figure.

    Families 1 and 2 are scanned at every feasible kappa from ``kappas``
    (panels a and b); all three families are scanned at the highest order
    kappa = N/2 (panel c).  Family 2 and the highest-order cells need even N;
    odd N values are skipped there.
    """
    cfg = cfg or ScanConfig()
    cells = set()
    for n in n_values:
        for family in (1, 2):
            if family == 2 and n % 2:
                continue
            for kappa in kappas:
                if 2 * kappa <= n:
                    cells.add((family, n, kappa))
        if n % 2 == 0:
            for family in (1, 2, 3):
                cells.add((family, n, n // 2))
    return run_cells(cells, cfg)


def _format_value(value) -> str:
    if value is None:
        return ""
    return repr(value)


def records_to_csv(records) -> str:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            f"{r.family},{r.n},{r.kappa},{_format_value(r.x_min)},"
            f"{_format_value(r.min_eig_at_x1)},{_format_value(r.wall_ms)}"
        )
    return "\n".join(lines) + "\n"


def records_to_json(records) -> str:
    return json.dumps([r.as_dict() for r in records], indent=2) + "\n"


def write_report(records, path: str, fmt: str = "csv") -> None:
    if fmt == "csv":
        text = records_to_csv(records)
    elif fmt == "json":
        text = records_to_json(records)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
