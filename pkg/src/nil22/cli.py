"""Command-line front end.

Subcommands: local, global, summatory, ideals, orbits, canonical, verify.
Default output is JSON (schemas under docs/schemas/); ``--format csv`` and
``--format plain`` render tables.  Exit codes: 0 success, 1 verification
mismatch, 2 usage or configuration error.  Output is byte-identical across
runs with the same flags; ``--meta`` opts into run metadata.
"""

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from . import canonical as canonical_mod
from . import lattice as lattice_mod
from . import orbits as orbits_mod
from . import series as series_mod
from .errors import BudgetExceeded, Nil22Error
from .heisenberg import is_ideal_bracket

USAGE_ERROR = 2
MISMATCH_ERROR = 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _prime_arg(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _prime_list_arg(text: str) -> list:
    return [_prime_arg(part) for part in text.split(",") if part.strip()]


def _nonneg_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("value must be nonnegative")
    return value


def _positive_arg(text: str) -> int:
    value = _nonneg_arg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def _emit(payload: dict, args, plain_lines, csv_rows):
    if args.meta:
        payload = dict(payload)
        payload["meta"] = {
            "package": "nil22",
            "version": __version__,
            "command": args.command,
        }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        sys.stdout.write(_csv_text(csv_rows))
    else:
        for line in plain_lines:
            print(line)


def cmd_local(args) -> int:
    coeffs = list(series_mod.local_factor_closed_form(args.max_degree).coeffs)
    payload = {"coefficients": coeffs}
    plain = [f"t^{k}: {c}" for k, c in enumerate(coeffs)]
    rows = [(k, c) for k, c in enumerate(coeffs)]
    _emit(payload, args, plain, rows)
    return 0


def cmd_global(args) -> int:
    table = series_mod.global_coefficients(args.max_n)
    values = [int(v) for v in table.values[1:]]
    payload = {"max_n": args.max_n, "values": values}
    plain = [f"g({n}) = {v}" for n, v in enumerate(values, start=1)]
    rows = [(n, v) for n, v in enumerate(values, start=1)]
    _emit(payload, args, plain, rows)
    return 0


def cmd_summatory(args) -> int:
    report = series_mod.summatory(args.max_n)
    payload = {
        "max_n": report.upper_bound,
        "summatory": report.summatory,
        "ratio": report.ratio,
        "target_constant": report.target_constant,
    }
    plain = [
        f"S({report.upper_bound}) = {report.summatory}",
        f"S(N)/N = {report.ratio!r}",
        f"target constant = {report.target_constant!r}",
    ]
    rows = [(report.upper_bound, report.summatory, repr(report.ratio),
             repr(report.target_constant))]
    _emit(payload, args, plain, rows)
    return 0


def cmd_ideals(args) -> int:
    ideals = lattice_mod.enumerate_ideals(args.p, args.n)
    payload = {"p": args.p, "n": args.n, "count": len(ideals)}
    plain = [f"{len(ideals)} ideals of index {args.p}^{args.n}"]
    rows = [(args.p, args.n, len(ideals))]
    if args.list:
        texts = [lattice_mod.matrix_text(m) for m in ideals]
        payload["matrices"] = texts
        plain += texts
        rows = [(t,) for t in texts]
    _emit(payload, args, plain, rows)
    return 0


def cmd_orbits(args) -> int:
    partition = orbits_mod.orbit_partition(args.p, args.n, args.budget)
    payload = {"p": args.p, "n": args.n, "count": len(partition.orbits)}
    plain = [f"{len(partition.orbits)} orbits of ideals of index {args.p}^{args.n}"]
    rows = []
    if args.list:
        cells = [
            {
                "representative": lattice_mod.matrix_text(cell[0]),
                "size": len(cell),
                "members": [lattice_mod.matrix_text(m) for m in cell],
            }
            for cell in partition.orbits
        ]
        payload["orbits"] = cells
        for cell in cells:
            plain.append(f"[{cell['size']}] {cell['representative']}")
            rows.append((cell["size"], cell["representative"]))
    else:
        rows.append((args.p, args.n, len(partition.orbits)))
    _emit(payload, args, plain, rows)
    return 0


def cmd_canonical(args) -> int:
    rows_in = lattice_mod.parse_matrix_text(args.matrix)
    m = lattice_mod.hnf(rows_in, args.p)
    label = canonical_mod.canonical_invariants(m)
    text = canonical_mod.tuple_text(label)
    payload = {
        "p": args.p,
        "matrix": lattice_mod.matrix_text(m),
        "invariants": text,
    }
    _emit(payload, args, [text], [label.key()])
    return 0


def _verify_checks(p_values, max_n, budget):
    local = series_mod.local_factor_closed_form(max(max_n, 1))
    checks = []

    for n in range(max_n + 1):
        checks.append({
            "name": "tuple-count-vs-coefficient",
            "p": None,
            "n": n,
            "expected": local[n],
            "actual": len(canonical_mod.enumerate_tuples(n)),
        })

    for p in p_values:
        for n in range(max_n + 1):
            mismatch = None
            for m in lattice_mod.enumerate_sublattices(p, n):
                if lattice_mod.is_ideal_hnf(m) != is_ideal_bracket(m):
                    mismatch = lattice_mod.matrix_text(m)
                    break
            checks.append({
                "name": "ideal-condition-equivalence",
                "p": p,
                "n": n,
                "expected": None,
                "actual": mismatch,
            })

        for n in range(max_n + 1):
            partition = orbits_mod.orbit_partition(p, n, budget)
            checks.append({
                "name": "orbit-count-vs-coefficient",
                "p": p,
                "n": n,
                "expected": local[n],
                "actual": len(partition.orbits),
            })

            labels = []
            consistent = True
            for cell in partition.orbits:
                cell_labels = {
                    canonical_mod.canonical_invariants(member).key()
                    for member in cell
                }
                if len(cell_labels) != 1:
                    consistent = False
                    break
                labels.append(next(iter(cell_labels)))
            expected_labels = sorted(t.key() for t in canonical_mod.enumerate_tuples(n))
            bijective = consistent and sorted(labels) == expected_labels and \
                len(set(labels)) == len(labels)
            checks.append({
                "name": "canonicalization-bijection",
                "p": p,
                "n": n,
                "expected": True,
                "actual": bijective,
            })

    return checks


def cmd_verify(args) -> int:
    for p in args.p:
        allowed = args.budget if args.budget is not None else orbits_mod.default_budget(p)
        if args.max_n > allowed:
            raise BudgetExceeded(p, args.max_n, allowed,
                                 lattice_mod.ideal_count(p, args.max_n))

    if args.threads > 1:
        jobs = [(p, n) for p in args.p for n in range(args.max_n + 1)]
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            list(pool.map(
                lambda job: orbits_mod.orbit_partition(job[0], job[1], args.budget),
                jobs,
            ))

    checks = _verify_checks(args.p, args.max_n, args.budget)
    results = []
    first_failure = None
    for check in checks:
        ok = check["expected"] == check["actual"]
        entry = {
            "name": check["name"],
            "p": check["p"],
            "n": check["n"],
            "status": "pass" if ok else "fail",
        }
        results.append(entry)
        if not ok and first_failure is None:
            first_failure = check
    passed = first_failure is None
    payload = {
        "passed": passed,
        "p_values": list(args.p),
        "max_n": args.max_n,
        "checks": results,
        "first_failure": first_failure,
    }
    plain = [
        f"{r['status'].upper():4} {r['name']} p={r['p']} n={r['n']}"
        for r in results
    ]
    plain.append("all checks passed" if passed else f"FAILED: {first_failure}")
    rows = [(r["name"], r["p"], r["n"], r["status"]) for r in results]
    _emit(payload, args, plain, rows)
    return 0 if passed else MISMATCH_ERROR


def _add_common(parser):
    parser.add_argument("--format", choices=("json", "csv", "plain"),
                        default="json", help="output format (default json)")
    parser.add_argument("--meta", action="store_true",
                        help="include run metadata in JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nil22",
        description=(
            "Exact enumeration of finite nilpotent groups of class at most 2 "
            "on at most 2 generators: series coefficients, ideal lattices, "
            "orbit counts and normal forms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_local = sub.add_parser("local", help="local series coefficients")
    p_local.add_argument("--max-degree", type=_nonneg_arg,
                         default=series_mod.DEFAULT_TRUNCATION)
    _add_common(p_local)
    p_local.set_defaults(handler=cmd_local)

    p_global = sub.add_parser("global", help="multiplicative coefficients g(1..N)")
    p_global.add_argument("--max-n", type=_positive_arg, required=True)
    _add_common(p_global)
    p_global.set_defaults(handler=cmd_global)

    p_sum = sub.add_parser("summatory", help="summatory function and growth ratio")
    p_sum.add_argument("--max-n", type=_positive_arg, required=True)
    _add_common(p_sum)
    p_sum.set_defaults(handler=cmd_summatory)

    p_ideals = sub.add_parser("ideals", help="enumerate ideals of index p^n")
    p_ideals.add_argument("--p", type=_prime_arg, required=True)
    p_ideals.add_argument("--n", type=_nonneg_arg, required=True)
    p_ideals.add_argument("--list", action="store_true",
                          help="include the matrices, not just the count")
    _add_common(p_ideals)
    p_ideals.set_defaults(handler=cmd_ideals)

    p_orbits = sub.add_parser("orbits", help="orbit partition of the ideals")
    p_orbits.add_argument("--p", type=_prime_arg, required=True)
    p_orbits.add_argument("--n", type=_nonneg_arg, required=True)
    p_orbits.add_argument("--budget", type=_nonneg_arg, default=None,
                          help="override the per-prime cap on n")
    p_orbits.add_argument("--list", action="store_true",
                          help="include cells, not just the count")
    _add_common(p_orbits)
    p_orbits.set_defaults(handler=cmd_orbits)

    p_canon = sub.add_parser("canonical", help="normal-form label of an ideal")
    p_canon.add_argument("--p", type=_prime_arg, required=True)
    p_canon.add_argument("--matrix", required=True,
                         help="nine comma-separated row-major integers")
    _add_common(p_canon)
    p_canon.set_defaults(handler=cmd_canonical)

    p_verify = sub.add_parser("verify", help="cross-check every identity")
    p_verify.add_argument("--p", type=_prime_list_arg, default=[2, 3],
                          help="comma-separated primes (default 2,3)")
    p_verify.add_argument("--max-n", type=_nonneg_arg, default=4)
    p_verify.add_argument("--budget", type=_nonneg_arg, default=None,
                          help="override the per-prime cap on n")
    p_verify.add_argument("--threads", type=_positive_arg, default=1,
                          help="worker threads for independent (p, n) jobs")
    _add_common(p_verify)
    p_verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (Nil22Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
