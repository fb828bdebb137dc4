"""Command-line interface: moments, witness, scan, selftest.

Exit codes: 0 success, 1 domain error (bad arguments or physics
preconditions), 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .scan import ScanConfig, run_cells, write_report
from .states import noisy_family_state, moments_of, state_from_dict
from .witness import witness_verdict

__all__ = ["main"]


def _parse_int_list(text: str) -> list[int]:
    """Accept '4..12' ranges and '4,6,8' lists (also combined by commas)."""
    values: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..", 1)
            values.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            values.append(int(chunk))
    if not values:
        raise ValueError(f"empty integer list: {text!r}")
    return values


def _load_state(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise IOError(f"cannot read state file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"state file {path} is not valid JSON: {exc}") from exc
    return state_from_dict(data)


def _cmd_moments(args) -> int:
    state = _load_state(args.state)
    table = moments_of(state)
    payload = {
        "n": table.n,
        "moments": [
            {"k": k, "q": q, "re": value.real, "im": value.imag}
            for (k, q), value in table.items()
        ],
    }
    _emit(payload, args.out)
    return 0


def _cmd_witness(args) -> int:
    if args.state is not None:
        state = _load_state(args.state)
    else:
        if args.family is None or args.n is None or args.x is None:
            raise ValueError("witness needs either --state or --family/--n/--x")
        state = noisy_family_state(args.family, args.x, args.n)
    verdict = witness_verdict(state, args.kappa)
    payload = verdict.as_dict()
    payload["n"] = state.n
    _emit(payload, args.out)
    return 0


def _cmd_scan(args) -> int:
    cfg = ScanConfig(
        x_grid_step=args.grid_step,
        bisection_tol=args.tol,
        jobs=args.jobs,
        include_timing=args.timing,
    )
    families = _parse_int_list(args.family)
    n_values = _parse_int_list(args.n)
    cells = []
    for family in families:
        if family not in (1, 2, 3):
            raise ValueError(f"unknown family {family}")
        for n in n_values:
            if family == 2 and n % 2:
                continue
            if args.kappa == "highest":
                if n % 2:
                    continue
                kappas = [n // 2]
            else:
                kappas = [k for k in _parse_int_list(args.kappa) if 2 * k <= n]
            for kappa in kappas:
                cells.append((family, n, kappa))
    if not cells:
        raise ValueError("no feasible (family, N, kappa) cells for this configuration")
    records = run_cells(cells, cfg)
    if args.out:
        try:
            write_report(records, args.out, args.format)
        except OSError as exc:
            raise IOError(f"cannot write report to {args.out}: {exc}") from exc
    else:
        from .scan import records_to_csv, records_to_json

        text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
        sys.stdout.write(text)
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(verbose=True)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        try:
            with open(out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise IOError(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpwitness",
        description="Multipole covariance witnesses for symmetric multiqubit states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_moments = sub.add_parser("moments", help="tensor moments of a state JSON file")
    p_moments.add_argument("--state", required=True, help="path to a state JSON file")
    p_moments.add_argument("--out", default=None, help="output path (default: stdout)")
    p_moments.set_defaults(func=_cmd_moments)

    p_witness = sub.add_parser("witness", help="negativity verdict for a state")
    p_witness.add_argument("--state", default=None, help="path to a state JSON file")
    p_witness.add_argument("--family", type=int, default=None, help="noise family 1|2|3")
    p_witness.add_argument("--n", type=int, default=None, help="number of qubits")
    p_witness.add_argument("--x", type=float, default=None, help="mixing parameter in [0,1]")
    p_witness.add_argument("--kappa", type=int, required=True, help="witness order")
    p_witness.add_argument("--out", default=None, help="output path (default: stdout)")
    p_witness.set_defaults(func=_cmd_witness)

    p_scan = sub.add_parser("scan", help="threshold scan over noise families")
    p_scan.add_argument("--family", required=True, help="families, e.g. '1' or '1,2,3'")
    p_scan.add_argument("--n", required=True, help="qubit counts, e.g. '4..12' or '4,6,8'")
    p_scan.add_argument("--kappa", required=True, help="orders, e.g. '1,2,3' or 'highest'")
    p_scan.add_argument("--grid-step", type=float, default=0.005, help="coarse x grid step")
    p_scan.add_argument("--tol", type=float, default=1e-6, help="bisection tolerance in x")
    p_scan.add_argument("--out", default=None, help="report path (default: stdout)")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p_scan.add_argument("--timing", action="store_true", help="record real wall times")
    p_scan.set_defaults(func=_cmd_scan)

    p_selftest = sub.add_parser("selftest", help="run the oracle-equivalence suite")
    p_selftest.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
