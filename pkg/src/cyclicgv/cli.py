"""Command-line interface tying construction, packing, estimation,
bound evaluation, verification, and the non-linearity witness into
reproducible runs with machine-readable reports.

Exit codes: 0 success (verify: all checks passed), 2 domain/contract/parse
errors, 3 capacity/budget/not-found errors, 4 verification failures.

Reports are JSON by default (text via --format text), embed every
effective parameter including defaults, and contain no timestamps, so a
rerun with the same arguments is byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import mpmath as mp

from . import __version__, kernels, prng
from .autocyclic import (DEFAULT_EXHAUSTIVE_LIMIT, enumerate_auto_cyclic,
                         estimate_tail, sample_auto_cyclic_with_stats)
from .bounds import (PRECISION_BITS, binary_entropy, bound_report, code_rate,
                     gv_rate, self_distance_tail_bound, real_str)
from .codeset import CodeSet
from .codeword import DistanceThreshold
from .errors import (CapacityError, ContractError, CyclicGVError, DomainError,
                     LengthMismatchError, ParseError, SamplingBudgetError,
                     WitnessNotFoundError)
from .packing import greedy_pack, removal_cap, verify_rate_bound
from .verify import (DEFAULT_PAIR_BUDGET, DEFAULT_XOR_BUDGET,
                     VerificationReport, check_cyclic_closure,
                     check_maximality, check_min_cyclic_distance,
                     check_not_linear, find_nonlinearity_witness)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CAPACITY = 3
EXIT_VERIFY_FAILED = 4

_CHECK_NAMES = ("closure", "min-distance", "maximality", "not-linear")


def _default_threads() -> int:
    raw = os.environ.get("CYCLICGV_THREADS", "").strip()
    if raw.isdigit() and int(raw) >= 1:
        return int(raw)
    return 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _parse_delta(text: str) -> DistanceThreshold:
    if "." in text:
        raise ParseError(
            f"delta must be an exact rational like 1/4, not a decimal: {text!r}")
    return DistanceThreshold.parse(text)


def _require_below_half(delta: DistanceThreshold) -> None:
    if not delta.is_below_half():
        raise DomainError(f"this command requires delta < 1/2, got {delta}")


def _warn_composite(n: int) -> None:
    if not _is_prime(n):
        print(f"warning: n={n} is composite; the probabilistic size "
              "guarantees assume prime n", file=sys.stderr)


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    lines = []

    def emit(prefix, obj):
        items = obj.items() if isinstance(obj, dict) else enumerate(obj)
        for key, value in items:
            if isinstance(value, (dict, list)):
                emit(f"{prefix}{key}.", value)
            else:
                lines.append(f"{prefix}{key}: {value}")

    emit("", report)
    return "\n".join(lines) + "\n"


def _write_report(report: dict, args) -> None:
    text = _render(report, args.format)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _base_report(command: str, args) -> dict:
    return {
        "command": command,
        "tool": "cyclicgv",
        "version": __version__,
        "kernel_backend": kernels.backend_name(),
        "threads": args.threads,
    }


def _half_space_condition(n: int, delta: DistanceThreshold) -> bool:
    # 2(n-1) * 2^{H(delta) n} <= 2^{n-1}: the premise under which the
    # tail bound forces at least half the space into the set
    if n < 2:
        return False
    with mp.workprec(PRECISION_BITS):
        lhs = 2 * (n - 1) * mp.power(2, binary_entropy(delta) * n)
        return bool(lhs <= mp.power(2, n - 1))


def cmd_construct(args) -> int:
    delta = _parse_delta(args.delta)
    _require_below_half(delta)
    _warn_composite(args.n)
    report = _base_report("construct", args)
    mode = "exhaustive" if args.n <= args.exhaustive_limit else "sampled"
    if mode == "exhaustive":
        code = enumerate_auto_cyclic(args.n, delta,
                                     limit=args.exhaustive_limit,
                                     threads=args.threads)
        stats = None
    else:
        code, stats = sample_auto_cyclic_with_stats(
            args.n, delta, args.orbits, args.seed,
            attempt_budget=args.budget, threads=args.threads)
    code.to_file(args.out)
    report.update({
        "n": args.n,
        "delta": str(delta),
        "n_is_prime": _is_prime(args.n),
        "mode": mode,
        "exhaustive_limit": args.exhaustive_limit,
        "seed": args.seed,
        "generator": prng.GENERATOR_NAME,
        "size": code.size,
        "rate": real_str(code_rate(code.size, args.n)) if code.size else None,
        "rate_target": real_str(mp.mpf(args.n - 1) / args.n),
        "rate_target_exact": f"{args.n - 1}/{args.n}",
        "meets_rate_target": code.size >= 1 << (args.n - 1),
        "half_space_condition_holds": _half_space_condition(args.n, delta),
        "output_file": args.out,
    })
    if stats is not None:
        report.update({
            "target_orbits": stats.target_orbits,
            "orbits": stats.orbits,
            "attempts": stats.attempts,
            "accepted": stats.accepted,
            "attempt_budget": stats.budget,
        })
    _write_report(report, args)
    return EXIT_OK


def cmd_pack(args) -> int:
    cprime = CodeSet.from_file(args.code)
    delta = _parse_delta(args.delta) if args.delta else cprime.delta
    _require_below_half(delta)
    _warn_composite(cprime.length)
    code, trace = greedy_pack(cprime, delta, strategy=args.strategy)
    code.to_file(args.out)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(trace.to_json_list(), fh, indent=2)
            fh.write("\n")
    n = cprime.length
    report = _base_report("pack", args)
    report.update({
        "n": n,
        "delta": str(delta),
        "input_file": args.code,
        "input_size": cprime.size,
        "strategy": args.strategy,
        "iterations": len(trace.selected),
        "size": code.size,
        "rate": real_str(code_rate(code.size, n)) if code.size else None,
        "gv_rate": real_str(gv_rate(delta)),
        "rate_bound_holds": verify_rate_bound(cprime.size, code.size, n, delta),
        "removal_cap": removal_cap(n, delta),
        "max_removed": max(trace.removed_counts, default=0),
        "output_file": args.out,
        "trace_file": args.trace,
    })
    _write_report(report, args)
    return EXIT_OK


def cmd_estimate(args) -> int:
    delta = _parse_delta(args.delta)
    _require_below_half(delta)
    _warn_composite(args.n)
    est = estimate_tail(args.n, delta, args.trials, args.seed,
                        alpha=args.alpha, threads=args.threads)
    report = _base_report("estimate", args)
    report.update(est.to_json_dict())
    if args.n >= 2:
        bound = self_distance_tail_bound(args.n, delta)
        low = float(est.point_estimate) - est.confidence_radius
        report["tail_bound"] = real_str(bound)
        report["estimate_minus_radius"] = f"{low:.15g}"
        report["consistent_with_bound"] = bool(low <= float(bound))
    _write_report(report, args)
    return EXIT_OK


def cmd_bounds(args) -> int:
    delta = _parse_delta(args.delta)
    report = _base_report("bounds", args)
    report.update(bound_report(args.n, delta).to_json_dict())
    _write_report(report, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = CodeSet.from_file(args.code)
    delta = _parse_delta(args.delta) if args.delta else code.delta
    cprime = CodeSet.from_file(args.cprime) if args.cprime else None
    if args.checks:
        selected = args.checks.split(",")
        for name in selected:
            if name not in _CHECK_NAMES:
                raise DomainError(
                    f"unknown check {name!r}; choose from {_CHECK_NAMES}")
    else:
        selected = ["closure", "min-distance"]
        if cprime is not None:
            selected.append("maximality")
    vreport = VerificationReport(subject=args.code)
    if "closure" in selected:
        vreport.checks.append(check_cyclic_closure(code))
    if "min-distance" in selected:
        vreport.checks.append(
            check_min_cyclic_distance(code, delta,
                                      pair_budget=args.pair_budget))
    if "maximality" in selected:
        if cprime is None:
            raise DomainError("maximality check needs --cprime")
        vreport.checks.append(check_maximality(code, cprime, delta))
    if "not-linear" in selected:
        vreport.checks.append(check_not_linear(code,
                                               xor_budget=args.xor_budget))
    report = _base_report("verify", args)
    report.update({
        "n": code.length,
        "delta": str(delta),
        "code_file": args.code,
        "cprime_file": args.cprime,
        "checks_run": selected,
    })
    report.update(vreport.to_json_dict())
    _write_report(report, args)
    return EXIT_OK if vreport.all_passed else EXIT_VERIFY_FAILED


def cmd_witness(args) -> int:
    delta = _parse_delta(args.delta)
    _warn_composite(args.n)
    witness = find_nonlinearity_witness(args.n, delta, seed=args.seed,
                                        budget=args.budget)
    report = _base_report("witness", args)
    report.update({
        "seed": args.seed,
        "generator": prng.GENERATOR_NAME,
        "budget": args.budget,
    })
    report.update(witness.to_json_dict())
    _write_report(report, args)
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--threads", type=int, default=_default_threads(),
                   help="worker cap for parallel scans (identical output "
                        "for any value)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclicgv",
        description="Binary non-linear cyclic codes at the "
                    "Gilbert-Varshamov rate")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the auto-cyclic set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True, help="rational threshold p/q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orbits", type=int, default=100,
                   help="orbit quota when sampling")
    p.add_argument("--budget", type=int, default=None,
                   help="sampling attempt budget (default 1000 x orbits)")
    p.add_argument("--exhaustive-limit", type=int,
                   default=DEFAULT_EXHAUSTIVE_LIMIT)
    p.add_argument("--out", required=True, help="code file to write")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("pack", help="greedy orbit packing of a code file")
    p.add_argument("--code", required=True, help="input code file")
    p.add_argument("--delta", default=None,
                   help="override the file's threshold")
    p.add_argument("--out", required=True, help="packed code file to write")
    p.add_argument("--trace", default=None, help="write the packing trace here")
    p.add_argument("--strategy", choices=("auto", "scan", "ball"),
                   default="auto")
    _add_common(p)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("estimate", help="Monte-Carlo tail estimate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=float, default=0.01,
                   help="Hoeffding confidence level is 1 - alpha")
    _add_common(p)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("bounds", help="evaluate all closed-form bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="re-verify a code file from raw bits")
    p.add_argument("--code", required=True)
    p.add_argument("--delta", default=None,
                   help="override the file's threshold")
    p.add_argument("--cprime", default=None,
                   help="the pre-packing pool, enables the maximality check")
    p.add_argument("--checks", default=None,
                   help="comma list from: " + ",".join(_CHECK_NAMES))
    p.add_argument("--pair-budget", type=int, default=DEFAULT_PAIR_BUDGET)
    p.add_argument("--xor-budget", type=int, default=DEFAULT_XOR_BUDGET)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="find a non-linearity witness triple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200000)
    _add_common(p)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ContractError, ParseError, LengthMismatchError,
            FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (CapacityError, SamplingBudgetError, WitnessNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except CyclicGVError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
