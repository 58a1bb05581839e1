"""Command-line front end: counting, enumeration, verification, refutation.

Every command is flag-driven and deterministic; seeded randomness is the
only randomness, and the seed is echoed in the output header.  Exit codes:
0 all checks passed, 1 a check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__, counting, lhv, oracle, poles, rotations, states
from .errors import ConsistencyError, GhzVerifyError
from .states import GhzLabel

MAX_COUNT_N = 64
IDENTITY_ALL_SUBSETS_CAP = 12
VERIFY_SAMPLED_OPS = 256


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _default_label(n: int) -> str:
    return "0" * n + "+"


# ---------------------------------------------------------------- count

def cmd_count(args: argparse.Namespace) -> int:
    if args.n_min < 2 or args.n_min > args.n_max or args.n_max > MAX_COUNT_N:
        raise GhzVerifyError(f"need 2 <= n-min <= n-max <= {MAX_COUNT_N}, "
                             f"got {args.n_min}..{args.n_max}")
    reports = counting.table1(args.n_min, args.n_max)
    if args.format == "json":
        _print_json({
            "command": "count",
            "version": __version__,
            "reports": [vars(r) for r in reports],
        })
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "c_n", "compatible", "closed_form_value", "binomial_value"])
        for r in reports:
            writer.writerow([r.n, r.c_n, r.compatible, r.closed_form_value, r.binomial_value])
        print(out.getvalue(), end="")
    else:
        print(f"{'n':>4} {'contradictions':>16} {'compatible':>12}")
        for r in reports:
            print(f"{r.n:>4} {r.c_n:>16} {r.compatible:>12}")
    return 0


# ------------------------------------------------------------ enumerate

def cmd_enumerate(args: argparse.Namespace) -> int:
    pole = poles.Pole[args.pole]
    operators = poles.enumerate_pole(args.n, pole)
    payload = poles.pole_to_json(args.n, pole, operators)
    if args.format == "json":
        _print_json(payload)
    elif args.format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "pole", "operator"])
        for op in operators:
            writer.writerow([args.n, pole.name, op.letters])
        print(out.getvalue(), end="")
    else:
        print(f"pole {pole.name} operators for n={args.n} ({len(operators)} total)")
        for op in operators:
            print(f"  {op.letters}")
    return 0


# --------------------------------------------------------------- verify

def _verify_checks(label: GhzLabel, seed: int) -> list[dict]:
    n = label.n
    rng = np.random.default_rng(seed)
    checks: list[dict] = []

    # Symbolic eigenvalues against the dense oracle, on the label's
    # unrotated and quarter-turn states.
    if n <= oracle.DENSE_MATRIX_CAP:
        op_pool = [op for pole in poles.Pole for op in poles.enumerate_pole(n, pole)]
    else:
        zmasks = rng.integers(0, 1 << n, size=VERIFY_SAMPLED_OPS)
        op_pool = [poles.PoleOperator.from_op(
            poles.xy_string(n, [k for k in range(1, n + 1) if (z >> (n - k)) & 1]))
            for z in zmasks]
    worst = 0.0
    count = 0
    agree = True
    for quarter in (0, 1):
        vec = states.rotated_dense(states.RotatedState(label, quarter * math.pi / 2))
        for op in op_pool:
            value = poles.eigenvalue_symbolic(label, quarter, op)
            if value is None:
                hit = [oracle.check_eigen(vec, op.op, sign).passed for sign in (1, -1)]
                agree &= not any(hit)
            else:
                result = oracle.check_eigen(vec, op.op, value)
                agree &= result.passed
                worst = max(worst, result.residual)
            count += 1
    checks.append({"check": f"eigenvalues_symbolic_vs_oracle[{count}]",
                   "residual": worst, "pass": bool(agree)})

    # Equal collective angles must give identical rotated vectors, the
    # uniform compression case included.
    base = states.build_state(label)
    signs = [1.0 if label.bit(k) == 0 else -1.0 for k in range(1, n + 1)]
    worst = 0.0
    for trial in range(20):
        first = rng.uniform(-2 * math.pi, 2 * math.pi, size=n)
        target = states.collective_angle(label, first)
        if trial == 0:
            second = np.array([signs[k] * target / n for k in range(n)])
        else:
            second = rng.uniform(-2 * math.pi, 2 * math.pi, size=n)
            partial = states.collective_angle(label, list(second[:-1]) + [0.0])
            second[-1] = signs[-1] * (target - partial)
        diff = states.max_norm_diff(states.apply_rotations(base, label, first),
                                    states.apply_rotations(base, label, second))
        worst = max(worst, diff)
    checks.append({"check": "collective_angle_collapse[20]",
                   "residual": worst, "pass": worst < 1e-12})

    # Conjugating the all-X string must reproduce the factored observable.
    worst = 0.0
    for _ in range(10):
        angles = rng.uniform(-math.pi, math.pi, size=n)
        worst = max(worst, oracle.check_conjugation(tuple(angles)).residual)
    checks.append({"check": "conjugation_identity[10]",
                   "residual": worst, "pass": worst < 1e-12})

    # Quarter-turn co-rotation must agree with the general-angle observable.
    worst = 0.0
    for _ in range(16):
        turns = rotations.QuarterTurns(tuple(int(t) for t in rng.integers(0, 4, size=n)))
        probe = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        probe /= np.linalg.norm(probe)
        via_pauli = oracle.apply_pauli(rotations.co_rotate_quarter(turns), probe)
        via_angles = oracle.apply_observable(probe, turns.angles())
        worst = max(worst, float(np.max(np.abs(via_pauli - via_angles))))
    checks.append({"check": "quarter_turn_consistency[16]",
                   "residual": worst, "pass": worst < 1e-12})

    # Rotations are diagonal unitaries and never leak out of the labeled pair.
    worst_unitary = 0.0
    worst_leak = 0.0
    for _ in range(10):
        angles = tuple(rng.uniform(-2 * math.pi, 2 * math.pi, size=n))
        diag = oracle.rotation_diagonal(angles)
        worst_unitary = max(worst_unitary, float(np.max(np.abs(np.abs(diag) - 1.0))))
        worst_leak = max(worst_leak, oracle.two_dim_invariance_residual(label, angles))
    checks.append({"check": "rotation_unitarity[10]",
                   "residual": worst_unitary, "pass": worst_unitary < 1e-12})
    checks.append({"check": "pair_subspace_invariance[10]",
                   "residual": worst_leak, "pass": worst_leak < 1e-12})
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n > states.DENSE_VECTOR_CAP:
        raise GhzVerifyError(f"verify is capped at {states.DENSE_VECTOR_CAP} qubits (got {args.n})")
    label = states.parse_label(args.label or _default_label(args.n), args.n)
    checks = _verify_checks(label, args.seed)
    all_pass = all(c["pass"] for c in checks)
    if args.format == "json":
        _print_json({
            "command": "verify",
            "version": __version__,
            "n": args.n,
            "label": str(label),
            "seed": args.seed,
            "checks": checks,
            "pass": all_pass,
        })
    else:
        print(f"verify n={args.n} label={label} seed={args.seed} version={__version__}")
        for c in checks:
            status = "PASS" if c["pass"] else "FAIL"
            print(f"  {status}  {c['check']:<40} residual={c['residual']:.3e}")
        print("all checks passed" if all_pass else "CHECK FAILURES PRESENT")
    return 0 if all_pass else 1


# ------------------------------------------------------------------ lhv

def cmd_lhv(args: argparse.Namespace) -> int:
    label = states.parse_label(args.label or _default_label(args.n), args.n)
    if not label.is_canonical:
        raise GhzVerifyError(f"label {label} is not canonical (first bit must be 0)")
    if args.exhaustive and args.n > lhv.EXHAUSTIVE_CAP:
        raise GhzVerifyError(f"exhaustive mode is capped at {lhv.EXHAUSTIVE_CAP} qubits (got {args.n})")
    reports = lhv.find_contradictions(label)
    expected = counting.c_n_closed(args.n)
    count_ok = len(reports) == expected
    satisfying = None
    search_ok = True
    if args.exhaustive:
        satisfying = lhv.exhaustive_search(label)
        search_ok = (satisfying == 0) if args.n >= 3 else (satisfying > 0)
    ok = count_ok and search_ok
    if args.format == "json":
        payload = {
            "command": "lhv",
            "version": __version__,
            "n": args.n,
            "label": str(label),
            "expected_c_n": expected,
            "contradictions": len(reports),
            "reports": [r.to_json() for r in reports],
            "pass": ok,
        }
        if satisfying is not None:
            payload["exhaustive"] = {
                "assignments": 1 << (2 * args.n),
                "satisfying": satisfying,
            }
        _print_json(payload)
    else:
        print(f"lhv n={args.n} label={label} version={__version__}")
        for r in reports:
            gens = ",".join(g.letters for g in r.generators_used)
            print(f"  {r.s_operator.letters}: local-realist {r.lhv_value:+d} "
                  f"vs quantum {r.quantum_value:+d} (from {gens})")
        print(f"contradictions: {len(reports)} (expected {expected})")
        if satisfying is not None:
            print(f"satisfying assignments: {satisfying} of {1 << (2 * args.n)}"
                  + (" (expected 0)" if args.n >= 3 else " (expected > 0)"))
        print("all checks passed" if ok else "CHECK FAILURES PRESENT")
    return 0 if ok else 1


# ------------------------------------------------------------- identity

def _parse_subset(text: str) -> list[int]:
    try:
        return sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError:
        raise GhzVerifyError(f"cannot parse subset {text!r} (want e.g. '1,2,3')") from None


def cmd_identity(args: argparse.Namespace) -> int:
    n = args.n
    if args.subset:
        subsets = [_parse_subset(args.subset)]
        for subset in subsets:
            if len(subset) % 2 == 0:
                raise GhzVerifyError(f"subset size must be odd, got {len(subset)}")
            if subset and (subset[0] < 1 or subset[-1] > n):
                raise GhzVerifyError(f"subset entries must lie in 1..{n}")
    else:
        if n > IDENTITY_ALL_SUBSETS_CAP:
            raise GhzVerifyError(
                f"checking all odd subsets is capped at {IDENTITY_ALL_SUBSETS_CAP} qubits; "
                f"pass --subset for larger n")
        subsets = [list(combo)
                   for size in range(1, n + 1, 2)
                   for combo in _odd_combinations(n, size)]
    rows = []
    all_pass = True
    for subset in subsets:
        ok = lhv.verify_ks_identity(n, subset)
        sign = "+" if len(subset) % 4 == 1 else "-"
        rows.append({"subset": subset, "sign": sign, "pass": ok})
        all_pass &= ok
    if args.format == "json":
        _print_json({
            "command": "identity",
            "version": __version__,
            "n": n,
            "checks": rows,
            "pass": all_pass,
        })
    else:
        print(f"identity n={n} version={__version__}")
        for row in rows:
            status = "PASS" if row["pass"] else "FAIL"
            subset_text = ",".join(str(k) for k in row["subset"])
            print(f"  {status}  subset={subset_text} sign={row['sign']}")
        print("all checks passed" if all_pass else "CHECK FAILURES PRESENT")
    return 0 if all_pass else 1


def _odd_combinations(n: int, size: int):
    return itertools.combinations(range(1, n + 1), size)


# ----------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzverify",
        description="Exact verification of GHZ rotational-symmetry contradictions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="contradiction and compatible counts per qubit number")
    p_count.add_argument("--n-min", type=int, required=True)
    p_count.add_argument("--n-max", type=int, required=True)
    p_count.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list the X/Y strings at one pole")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--pole", choices=["E", "N", "W", "S"], required=True)
    p_enum.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="run the symbolic-vs-dense verification suite")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--label", type=str, default=None, help="state label, e.g. 010+")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=["table", "json"], default="table")
    p_verify.set_defaults(func=cmd_verify)

    p_lhv = sub.add_parser("lhv", help="hidden-variable contradictions and exhaustive refutation")
    p_lhv.add_argument("--n", type=int, required=True)
    p_lhv.add_argument("--label", type=str, default=None, help="state label, e.g. 000+")
    p_lhv.add_argument("--exhaustive", action="store_true")
    p_lhv.add_argument("--format", choices=["table", "json"], default="table")
    p_lhv.set_defaults(func=cmd_lhv)

    p_id = sub.add_parser("identity", help="verify the generator product identities")
    p_id.add_argument("--n", type=int, required=True)
    p_id.add_argument("--subset", type=str, default=None, help="comma-separated Y positions")
    p_id.add_argument("--format", choices=["table", "json"], default="table")
    p_id.set_defaults(func=cmd_identity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"tool failure: {exc}", file=sys.stderr)
        return 1
    except GhzVerifyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
