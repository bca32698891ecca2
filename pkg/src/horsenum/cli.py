"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error, 4 a proven bound was violated (an internal bug).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import oracle
from .errors import DomainError, InexactDivisionError, TheoremViolation
from .number_theory import carmichael, verify_exponent_properties
from .periodicity import analyze, fubini_mod_sequence, fubini_r_mod_sequence
from .sequences import (
    factorials,
    fubini,
    fubini_alternating,
    fubini_r,
    fubini_r_by_operator,
    horse_r,
    transform_strong_to_weak,
    transform_weak_to_strong,
)
from .stirling import (
    FIRST_SIGNED,
    KINDS,
    SECOND,
    falling_factorial_coefficients,
    matrix_product,
    stirling_first_signed,
    stirling_matrix,
    stirling_rows_mod,
    stirling_second,
)

SCHEMA_VERSION = "1"
SEQUENCES = ("factorial", "fubini", "fubini_r", "horse")
SUITES = ("oracle", "matrix", "periodicity", "lemma")
MAX_RENDER = 1024
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_DOMAIN, EXIT_THEOREM = 0, 1, 2, 3, 4


def _stringify(obj):
    # Integers go out as decimal strings so nothing downstream truncates them.
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def output_record(command: str, inputs: dict, results: dict) -> str:
    record = {
        "command": command,
        "inputs": _stringify(inputs),
        "results": _stringify(results),
        "schema_version": SCHEMA_VERSION,
    }
    return json.dumps(record, sort_keys=True, indent=2)


# -- compute / table -----------------------------------------------------------

def _first_index(seq: str, r) -> int:
    return r if seq in ("fubini_r", "horse") else 0


def _exact_value(seq: str, n: int, r) -> int:
    if seq == "factorial":
        return factorials(n + 1)[n]
    if seq == "fubini":
        return fubini(n + 1)[n]
    if seq == "fubini_r":
        return fubini_r(n, r)
    return horse_r(n, r)


def _residue(seq: str, n: int, r, K: int) -> int:
    if seq == "fubini":
        return fubini_mod_sequence(K, n + 1)[n]
    if seq == "fubini_r":
        if n < r:
            raise DomainError(f"need n >= r, got n={n}, r={r}")
        return fubini_r_mod_sequence(K, r, n + 1)[n - r]
    return _exact_value(seq, n, r) % K


def cmd_compute(args) -> str:
    if args.n < 0:
        raise DomainError(f"n must be nonnegative, got {args.n}")
    inputs = {"sequence": args.seq, "n": args.n, "r": args.r, "modulus": args.mod}
    if args.mod is None:
        value = _exact_value(args.seq, args.n, args.r)
    else:
        if args.mod < 1:
            raise DomainError(f"modulus must be positive, got {args.mod}")
        value = _residue(args.seq, args.n, args.r, args.mod)
    return output_record("compute", inputs, {"value": value})


def table_rows(seq: str, n_max: int, r=None) -> list[tuple[int, int]]:
    start = _first_index(seq, r)
    if n_max < start:
        raise DomainError(f"n_max={n_max} is below the first defined index {start}")
    return [(n, _exact_value(seq, n, r)) for n in range(start, n_max + 1)]


def cmd_table(args) -> str:
    if args.n_max < 0:
        raise DomainError(f"n_max must be nonnegative, got {args.n_max}")
    rows = table_rows(args.seq, args.n_max, args.r)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "value"])
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    inputs = {"sequence": args.seq, "n_max": args.n_max, "r": args.r}
    return output_record("table", inputs, {"rows": [{"n": n, "value": v} for n, v in rows]})


# -- period -------------------------------------------------------------------

def cmd_period(args) -> tuple[str, int]:
    if args.r < 0:
        raise DomainError(f"r must be nonnegative, got {args.r}")
    report = analyze(args.mod, args.r)
    text = output_record("period", {"modulus": args.mod, "r": args.r}, report.as_dict())
    if not report.bounds_hold:
        raise TheoremViolation(f"bound violated: {report}")
    return text, EXIT_OK


# -- render -------------------------------------------------------------------

def _cell(v: int) -> str:
    if v == 0:
        return "."
    return _DIGITS[v] if v < 36 else "#"


def render(kind: str, modulus: int, size: int, fmt: str = "ascii") -> str:
    if not 1 <= size <= MAX_RENDER:
        raise DomainError(f"size must be in 1..{MAX_RENDER}, got {size}")
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    rows = stirling_rows_mod(kind, size, modulus)
    if fmt == "pbm":
        lines = ["P1", f"{size} {size}"]
        lines += ["".join("1" if v else "0" for v in row) for row in rows]
    else:
        lines = ["".join(_cell(v) for v in row) for row in rows]
    return "\n".join(lines)


def cmd_render(args) -> str:
    return render(args.matrix, args.mod, args.size, args.format)


# -- verify -------------------------------------------------------------------

@dataclass
class Check:
    name: str
    count: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, case) -> None:
        self.count += 1
        if not ok:
            self.failures.append(case)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"passed": self.passed, "count": self.count, "failures": [repr(f) for f in self.failures[:10]]}


def suite_oracle(limit: int) -> list[Check]:
    n_weak = min(limit, oracle.MAX_WEAK_N - 1)
    fub = Check("oracle.fubini")
    F = fubini(n_weak + 1)
    for n in range(n_weak + 1):
        fub.record(F[n] == oracle.count_weak_orderings(n), n)

    rig = Check("oracle.rigged")
    for n in range(min(limit, 7) + 1):
        for r in range(n + 1):
            strong = oracle.count_rigged(n, r, oracle.RELATIVE_STRONG)
            fixed = oracle.count_rigged(n, r, oracle.PRESCRIBED)
            rig.record(fubini_r(n, r) == strong and horse_r(n, r) == fixed, (n, r))

    cyc = Check("oracle.stirling_first")
    for n in range(min(limit, oracle.MAX_CYCLE_N) + 1):
        for k in range(n + 1):
            cyc.record(stirling_first_signed(n, k) == oracle.count_cycles_signed(n, k), (n, k))

    part = Check("oracle.stirling_second")
    for n in range(min(limit, 10) + 1):
        for k in range(n + 1):
            part.record(stirling_second(n, k) == oracle.count_set_partitions(n, k), (n, k))
    return [fub, rig, cyc, part]


def suite_matrix(limit: int) -> list[Check]:
    N = max(limit, 1)
    s_hat, S_hat = stirling_matrix(FIRST_SIGNED, N), stirling_matrix(SECOND, N)
    inv = Check("matrix.inverse_pair")
    inv.record(matrix_product(s_hat, S_hat).is_identity(), "s.S")
    inv.record(matrix_product(S_hat, s_hat).is_identity(), "S.s")

    dual = Check("matrix.falling_factorial")
    rec_first = oracle.stirling_first_by_recurrence(N)
    rec_second = oracle.stirling_second_by_recurrence(N)
    for r in range(N):
        dual.record(list(falling_factorial_coefficients(r)) == rec_first[r][: r + 1], r)
    explicit = Check("matrix.explicit_second_kind")
    for n in range(N):
        explicit.record(list(S_hat.entries[n]) == rec_second[n], n)

    paths = Check("matrix.fubini_paths")
    f = factorials(N)
    weak = transform_strong_to_weak(f, N).values
    alternating = fubini_alternating(N).values
    binomial = oracle.fubini_by_binomial_recurrence(N)
    for n in range(N):
        paths.record(weak[n] == alternating[n] == binomial[n], n)
    round_trip = Check("matrix.round_trip")
    round_trip.record(transform_weak_to_strong(weak, N).values == f.values, N)
    return [inv, dual, explicit, paths, round_trip]


def suite_periodicity(limit: int) -> list[Check]:
    bound = Check("periodicity.fubini_bounds")
    odd = Check("periodicity.odd_exact")
    for K in range(2, max(limit, 2) + 1):
        try:
            rep = analyze(K, 0)
        except TheoremViolation as exc:
            bound.record(False, (K, str(exc)))
            continue
        bound.record(rep.bounds_hold, K)
        if K % 2:
            odd.record(rep.period == rep.carmichael, K)

    rigged = Check("periodicity.fubini_r_bounds")
    for K in range(2, min(limit, 60) + 1):
        for r in range(1, 6):
            try:
                rigged.record(analyze(K, r).bounds_hold, (K, r))
            except TheoremViolation as exc:
                rigged.record(False, (K, r, str(exc)))

    residues = Check("periodicity.residue_path")
    F = fubini(200).values
    for K in range(1, min(limit, 30) + 1):
        residues.record(fubini_mod_sequence(K, 200) == [x % K for x in F], K)

    lam = Check("periodicity.carmichael")
    for K in range(2, min(limit, 500) + 1):
        lam.record(carmichael(K) == oracle.group_exponent(K) and verify_exponent_properties(K), K)
    return [bound, odd, rigged, residues, lam]


def suite_lemma(limit: int) -> list[Check]:
    lemma = Check("lemma.counting")
    for n in range(min(limit, oracle.MAX_WEAK_N - 1) + 1):
        for m in range(n + 1):
            lemma.record(oracle.verify_counting_lemma(n, m), (n, m))
    operator = Check("lemma.operator_form")
    for n in range(min(limit, 25) + 1):
        for r in range(n + 1):
            operator.record(fubini_r(n, r) == fubini_r_by_operator(n, r), (n, r))
    return [lemma, operator]


SUITE_RUNNERS = {
    "oracle": (suite_oracle, 8),
    "matrix": (suite_matrix, 30),
    "periodicity": (suite_periodicity, 200),
    "lemma": (suite_lemma, 7),
}


def run_suites(suite: str, limit=None) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)

    def run(name):
        fn, default = SUITE_RUNNERS[name]
        return fn(default if limit is None else limit)

    with ThreadPoolExecutor(max_workers=len(names)) as pool:
        checks = [c for batch in pool.map(run, names) for c in batch]
    return sorted(checks, key=lambda c: c.name)


def cmd_verify(args) -> tuple[str, int]:
    checks = run_suites(args.suite, args.limit)
    passed = all(c.passed for c in checks)
    results = {"passed": passed, "checks": {c.name: c.as_dict() for c in checks}}
    text = output_record("verify", {"suite": args.suite, "limit": args.limit}, results)
    return text, EXIT_OK if passed else EXIT_VERIFY


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horsenum",
        description="Exact and modular Fubini, r-Fubini and r-horse numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="one exact value or residue")
    p.add_argument("--seq", choices=SEQUENCES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--mod", type=int)

    p = sub.add_parser("table", help="a range of values")
    p.add_argument("--seq", choices=SEQUENCES, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("period", help="eventual period of F_r mod K")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--r", type=int, default=0)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--limit", type=int)

    p = sub.add_parser("render", help="draw a Stirling matrix mod m")
    p.add_argument("--matrix", choices=KINDS, required=True)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=("ascii", "pbm"), default="ascii")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "seq", None) in ("fubini_r", "horse") and args.r is None:
        parser.error(f"--r is required for --seq {args.seq}")

    try:
        if args.command == "compute":
            text, code = cmd_compute(args), EXIT_OK
        elif args.command == "table":
            text, code = cmd_table(args), EXIT_OK
        elif args.command == "period":
            text, code = cmd_period(args)
        elif args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = cmd_render(args), EXIT_OK
    except DomainError as exc:
        print(f"horsenum: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (TheoremViolation, InexactDivisionError) as exc:
        print(f"horsenum: internal error, please file a bug report: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
