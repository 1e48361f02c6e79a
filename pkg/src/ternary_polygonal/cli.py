"""Command-line front end.

Exit status: 0 success, 1 a verification ran and failed, 2 bad input.
All numbers are printed as exact integers or "num/den" strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import class_numbers, coset_lattice, local_analysis, polygonal, spinor_m14, witnesses

log = logging.getLogger("ternary_polygonal")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2


class BadInput(ValueError):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text(data, indent=0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in data.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}: {len(v)} rows")
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def _emit(args, data: dict, header=None, rows=None):
    if args.format == "json":
        out = json.dumps(data, indent=2) + "\n"
    elif args.format == "csv":
        if header is None:
            header, rows = ["key", "value"], [(k, json.dumps(v) if isinstance(v, (dict, list))
                                                else v) for k, v in data.items()]
        out = _csv(header, rows)
    else:
        out = _text(data) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(out)


def _need(cond, msg):
    if not cond:
        raise BadInput(msg)


def _family(m):
    _need(m >= 3, f"m must be >= 3, got {m}")
    return polygonal.PolygonalFamily(m)


def cmd_represent(args) -> int:
    fam = _family(args.m)
    _need(args.n >= 0, "n must be nonnegative")
    count = polygonal.representation_count(fam, args.n)
    ell = polygonal.ell_of(fam, args.n)
    data = {"m": args.m, "n": args.n, "count": count, "ell": ell,
            "exception": count == 0 and args.n > 0,
            "square_class_3": polygonal.is_square_class_3(ell)}
    if args.m % 4:
        coset = coset_lattice.coset_for(fam)
        data["coset"] = coset.label()
        data["coset_count"] = coset_lattice.rep_count(coset, ell)
    _emit(args, data)
    return EXIT_OK


def cmd_exceptions(args) -> int:
    fam = _family(args.m)
    _need(args.bound >= 0, "bound must be nonnegative")
    exc = polygonal.exceptional_set(fam, args.bound, args.jobs)
    _emit(args, {"m": args.m, "bound": args.bound, "count": len(exc), "exceptions": exc},
          ["n"], [[n] for n in exc])
    return EXIT_OK


def cmd_theta(args) -> int:
    fam = _family(args.m)
    _need(args.bound >= 0, "bound must be nonnegative")
    coset = coset_lattice.coset_for(fam)
    series = coset_lattice.theta_series(coset, args.bound)
    data = {"m": args.m, "coset": coset.label(), **series.to_dict()}
    _emit(args, data, ["exponent", "numerator", "denominator"], series.to_rows())
    return EXIT_OK


def cmd_verify_siegel_weil(args) -> int:
    _need(args.bound >= 0, "bound must be nonnegative")
    report = spinor_m14.verify_siegel_weil(args.bound)
    data = report.to_dict()
    data["sturm_count_level_576"] = spinor_m14.sturm_coefficient_count(spinor_m14.STURM_LEVEL)
    data["automorph_weights_ok"] = spinor_m14.GENUS_M14.check_weights()
    _emit(args, data)
    ok = report.ok and data["automorph_weights_ok"]
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_hurwitz(args) -> int:
    _need(args.d > 0 and args.d % 4 in (0, 3), f"need d > 0 with d = 0, 3 mod 4, got {args.d}")
    h = class_numbers.hurwitz(args.d)
    _emit(args, {"d": args.d, "hurwitz": str(h)})
    return EXIT_OK


def cmd_witnesses(args) -> int:
    _need(args.m % 12 == 2 and args.m >= 14, f"need m = 2 mod 12, got {args.m}")
    _need(args.count >= 1, "count must be >= 1")
    try:
        reports = witnesses.find_witnesses(args.m, args.count, args.prime_ceiling)
    except witnesses.WitnessSearchError as exc:
        _emit(args, {"m": args.m, "error": str(exc)})
        return EXIT_VERIFY_FAILED
    data = {"m": args.m, "target_residue_mod_12": witnesses.target_residue(args.m),
            "integrality": f"ell^2 = {witnesses.integrality_residue(args.m)} "
                           f"mod {8 * ((args.m - 2) // 12)}",
            "witnesses": [r.to_dict() for r in reports]}
    header, *rows = list(csv.reader(io.StringIO(witnesses.reports_to_csv(reports))))
    _emit(args, data, header, rows)
    return EXIT_OK if all(r.verified for r in reports) else EXIT_VERIFY_FAILED


def cmd_survey(args) -> int:
    _family(args.m)
    _need(args.bound >= 0, "bound must be nonnegative")
    report = witnesses.survey(args.m, args.bound, args.jobs)
    rows = [[e.n, e.ell, int(e.square_class_3)] for e in report.exceptions]
    _emit(args, report.to_dict(), ["n", "ell", "square_class_3"], rows)
    return EXIT_OK


def cmd_local(args) -> int:
    m = _family(args.m).m
    data = {"m": m, "mod8_obstruction": local_analysis.mod8_obstruction(m),
            "missing_mod_8": sorted(local_analysis.obstruction_report(m, 8).missing_residues),
            "precision": {str(p): k for p, k in local_analysis.local_precision(m).items()}}
    if m % 4:
        data["two_adic_surjective_k12"] = local_analysis.two_adic_surjective(m, 12)
    if args.n is not None:
        _need(args.n >= 0, "n must be nonnegative")
        data["n"] = args.n
        data["locally_admissible"] = local_analysis.locally_admissible(m, args.n)
    _emit(args, data)
    return EXIT_OK


def cmd_probe(args) -> int:
    _need(args.bound >= 0, "bound must be nonnegative")
    report = spinor_m14.sieve_identity_probe(args.bound)
    _emit(args, report.to_dict())
    return EXIT_OK if report.matching_form else EXIT_VERIFY_FAILED


def cmd_scan(args) -> int:
    _need(args.prime_bound >= 5, "prime_bound must be >= 5")
    try:
        primes = spinor_m14.scan_3ell2(args.prime_bound)
    except spinor_m14.VerificationError as exc:
        _emit(args, {"prime_bound": args.prime_bound, "error": str(exc)})
        return EXIT_VERIFY_FAILED
    _emit(args, {"prime_bound": args.prime_bound, "primes_checked": primes},
          ["ell"], [[p] for p in primes])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--output", "-o", help="write the report to this path")
    common.add_argument("--jobs", "-j", type=int, default=os.cpu_count() or 1,
                        help="worker threads (results do not depend on this)")
    common.add_argument("--verbose", "-v", action="count", default=0)

    p = argparse.ArgumentParser(prog="ternary-polygonal",
                                description="Sums of three generalized m-gonal numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("represent", cmd_represent, "count representations of n")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    sp = add("exceptions", cmd_exceptions, "non-represented n up to bound")
    sp.add_argument("m", type=int)
    sp.add_argument("bound", type=int)
    sp = add("theta", cmd_theta, "theta series of the coset attached to m")
    sp.add_argument("m", type=int)
    sp.add_argument("bound", type=int)
    sp = add("verify-siegel-weil", cmd_verify_siegel_weil, "check the m=14 spinor identity")
    sp.add_argument("--bound", type=int,
                    default=spinor_m14.sturm_coefficient_count(spinor_m14.STURM_LEVEL))
    sp = add("hurwitz", cmd_hurwitz, "Hurwitz class number H(d)")
    sp.add_argument("d", type=int)
    sp = add("witnesses", cmd_witnesses, "verified non-represented n for m = 2 mod 12")
    sp.add_argument("m", type=int)
    sp.add_argument("count", type=int)
    sp.add_argument("--prime-ceiling", type=int, default=10 ** 6)
    sp = add("survey", cmd_survey, "classify all exceptions up to bound")
    sp.add_argument("m", type=int)
    sp.add_argument("bound", type=int)
    sp = add("local", cmd_local, "congruence obstructions and local admissibility")
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int, nargs="?")
    sp = add("probe-sieve-identity", cmd_probe, "test closed forms for the 24n+3 splitting")
    sp.add_argument("bound", type=int)
    sp = add("scan-3ell2", cmd_scan, "check 3*ell^2 vanishing in the m=14 cosets")
    sp.add_argument("prime_bound", type=int)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    args.jobs = max(1, args.jobs)
    try:
        return args.func(args)
    except (BadInput, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
