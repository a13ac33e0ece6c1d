"""Command line front end: claim scans, proof-chain replay, table export."""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import __version__
from .claims import (BUILTIN_SET_NAMES, ClaimParseError, ClaimSet,
                     builtin_claim_set, load_claim_file)
from .dissection import run_proof_chain
from .partitions import (CongruenceClaim, check_claim, check_equivalence,
                         family_offset, ped_table)
from .report import VerificationReport, format_report

DEFAULT_N_LIMIT = 100
DEFAULT_SCAN_MODULUS = 192
DEFAULT_MAX_INDEX = 2_000_000

_NOTE = ("scans verify the stated range and series checks the stated "
         "truncation order; neither is a proof for all n")


def _meta(command: str, parameters: dict, wall_time: float,
          note: str = _NOTE) -> dict:
    return {
        "tool": "pedlab",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "wall_time_s": round(wall_time, 3),
        "note": note,
    }


def _family_plan(claim_set: ClaimSet, n_limit: int):
    """Resolve each directive to (directive, step, offset, modulus, limit)."""
    plan = []
    for fam in claim_set.families:
        step, offset, modulus = family_offset(fam.kind, fam.parameter)
        limit = fam.n_limit if fam.n_limit is not None else n_limit
        plan.append((fam, step, offset, modulus, limit))
    return plan


def cmd_verify(claim_set: ClaimSet, n_limit: int = DEFAULT_N_LIMIT,
               scan_modulus: int = DEFAULT_SCAN_MODULUS,
               max_index: int = DEFAULT_MAX_INDEX):
    """Scan every claim and family over one shared modular DP table.

    Returns (report, exit_code); the exit code is nonzero exactly when a
    theorem-status check fails -- conjecture outcomes never affect it.
    """
    if n_limit < 0:
        raise ValueError(f"n_limit must be >= 0, got {n_limit}")
    started = time.perf_counter()
    plan = _family_plan(claim_set, n_limit)

    needed = 1
    for claim in claim_set.claims:
        needed = math.lcm(needed, claim.modulus)
    for _, _, _, modulus, _ in plan:
        needed = math.lcm(needed, modulus)
    if scan_modulus % needed:
        raise ValueError(
            f"scan modulus {scan_modulus} must be a multiple of {needed} "
            "to cover every claim")

    top = 0
    for claim in claim_set.claims:
        top = max(top, claim.step * n_limit + claim.offset)
    for fam, step, offset, _, limit in plan:
        top = max(top, step * limit + offset)
        if fam.kind == "theorem-family":
            top = max(top, 9 * limit + 7)
    if top > max_index:
        raise ValueError(
            f"scan needs ped(n) up to n = {top}, over the ceiling "
            f"{max_index}; lower --n-limit or raise --max-index")

    table = ped_table(top, modulus=scan_modulus)
    entries = []
    theorem_failed = False
    for claim in claim_set.claims:
        entry = check_claim(claim, table, n_limit)
        entries.append(entry)
        if entry.status == "fail" and claim.status == "theorem":
            theorem_failed = True
    for fam, step, offset, modulus, limit in plan:
        if fam.kind == "theorem-family":
            label = fam.label or (f"ped(9n+7) = ped({step}n+{offset}) "
                                  f"(mod {modulus}) [k={fam.parameter}]")
            entry = check_equivalence(table, (9, 7), (step, offset),
                                      modulus, limit, label=label)
        else:
            label = fam.label or (f"ped({step}n+{offset}) = 0 (mod {modulus}) "
                                  f"[{fam.kind} a={fam.parameter}]")
            claim = CongruenceClaim(step, offset, modulus, "theorem", label)
            entry = check_claim(claim, table, limit)
        entries.append(entry)
        if entry.status == "fail":
            theorem_failed = True

    parameters = {"set": claim_set.name, "n_limit": n_limit,
                  "scan_modulus": scan_modulus}
    report = VerificationReport(
        meta=_meta("verify", parameters, time.perf_counter() - started),
        runs=entries)
    return report, (1 if theorem_failed else 0)


def cmd_prove(order: int = 400):
    """Run the proof chain at one truncation order.

    Family scans go as deep as the acceptance depths (k=1: 100, k=2: 10)
    allow, shrinking with small orders so `--order 10` stays quick.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    started = time.perf_counter()
    family_checks = ((1, min(order, 100)), (2, min(order // 25, 10)))
    steps = run_proof_chain(order, family_checks=family_checks)
    entries = [step.to_entry() for step in steps]
    failed = any(e.status == "fail" for e in entries)
    note = _NOTE
    if order == 0:
        note = "order 0: series comparisons are vacuous; " + _NOTE
    parameters = {"order": order,
                  "family_checks": [list(fc) for fc in family_checks]}
    report = VerificationReport(
        meta=_meta("prove", parameters, time.perf_counter() - started,
                   note=note),
        runs=entries)
    return report, (1 if failed else 0)


def cmd_table(n_max: int, modulus: int | None = None,
              fmt: str = "text") -> str:
    """Render the ped table as text (n<TAB>value lines) or JSON."""
    table = ped_table(n_max, modulus=modulus)
    if fmt == "text":
        return table.to_text() + "\n"
    if fmt == "json":
        payload = {"n_max": table.n_max, "modulus": table.modulus,
                   "values": [int(v) for v in table.values]}
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedlab",
        description="Verify congruences and series identities for ped(n), "
                    "the partitions of n with distinct even parts.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help="scan congruence claims against the DP oracle")
    group = verify.add_mutually_exclusive_group()
    group.add_argument("--set", dest="set_name", default="all",
                       choices=BUILTIN_SET_NAMES,
                       help="builtin claim set (default: all)")
    group.add_argument("--claims", metavar="FILE",
                       help="claim file (one 'A B M status label' per line)")
    verify.add_argument("--n-limit", type=int, default=DEFAULT_N_LIMIT)
    verify.add_argument("--mod", type=int, default=DEFAULT_SCAN_MODULUS,
                        help="scan modulus; every claim modulus must divide it")
    verify.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX,
                        help="refuse scans needing ped(n) beyond this n")
    verify.add_argument("--json", metavar="PATH",
                        help="also write the report as JSON")

    prove = sub.add_parser(
        "prove", help="replay the series-identity proof chain")
    prove.add_argument("--order", type=int, default=400,
                       help="truncation order for every series check")
    prove.add_argument("--json", metavar="PATH")

    table = sub.add_parser("table", help="export a ped(n) table")
    table.add_argument("--n-max", type=int, default=100)
    table.add_argument("--mod", type=int, default=None,
                       help="reduce entries mod M (default: exact)")
    table.add_argument("--format", dest="fmt", choices=("text", "json"),
                       default="text")
    table.add_argument("--out", metavar="PATH",
                       help="write to a file instead of stdout")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            if args.claims:
                claim_set = load_claim_file(args.claims)
            else:
                claim_set = builtin_claim_set(args.set_name)
            report, code = cmd_verify(claim_set, n_limit=args.n_limit,
                                      scan_modulus=args.mod,
                                      max_index=args.max_index)
        elif args.command == "prove":
            report, code = cmd_prove(order=args.order)
        else:
            content = cmd_table(args.n_max, modulus=args.mod, fmt=args.fmt)
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(content)
            else:
                sys.stdout.write(content)
            return 0
    except (ClaimParseError, ValueError) as exc:
        print(f"pedlab: error: {exc}", file=sys.stderr)
        return 2

    print(format_report(report))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(report.to_json() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
