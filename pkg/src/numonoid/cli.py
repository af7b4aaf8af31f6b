"""Command-line interface.

Subcommands: apery, member, factorizations, betti, minpres, invariant,
survey, bench, verify.  Exit codes: 0 success, 1 invalid input, 2
computation budget exceeded, 3 verification failure.  All output is
deterministic for fixed inputs, including across --jobs settings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .core import NumericalMonoid, apery, contains, frobenius
from .errors import (
    BudgetExceeded,
    InvalidInput,
    MonoidError,
    VerificationFailed,
)
from .factorizations import DEFAULT_CAP, factorizations
from .invariants import (
    catenary_of_element,
    catenary_of_monoid,
    delta_set,
    delta_set_of_element,
    monoid_catenary_report,
    monotone_equal_catenary,
    tame_degree,
    tame_degree_windowed,
)
from .oracle import congruence_closure_check
from .presentations import (
    all_minimal_presentations,
    make_relation,
    minimal_presentation,
)
from .shifted import (
    accelerated_minimal_presentation,
    family_from_generators,
    monoid_at,
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with its own status 2 on bad flags; that status is
    reserved here for exceeded budgets, so parse errors are rethrown as
    invalid input instead."""

    def error(self, message):
        raise InvalidInput(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}")


def _coords(z) -> str:
    return ",".join(str(c) for c in z)


def _relation_dicts(relations):
    return [
        {"betti": r.betti, "left": list(r.left), "right": list(r.right)}
        for r in relations
    ]


def _print_presentation(pres, fmt: str, out):
    if fmt == "json":
        json.dump(pres.to_json_dict(), out, indent=2)
        out.write("\n")
    else:
        for r in pres.relations:
            out.write(f"{r.betti}: {_coords(r.left)} ~ {_coords(r.right)}\n")


def _detected_member(gens: tuple[int, ...]):
    family, n = family_from_generators(gens)
    if family is None:
        return None
    return monoid_at(family, n)


def _cmd_apery(args, out) -> int:
    M = NumericalMonoid(_int_list(args.gens))
    out.write(" ".join(str(v) for v in apery(M).entries) + "\n")
    return 0


def _cmd_member(args, out) -> int:
    M = NumericalMonoid(_int_list(args.gens))
    out.write("yes\n" if contains(M, args.element) else "no\n")
    return 0


def _cmd_factorizations(args, out) -> int:
    M = NumericalMonoid(_int_list(args.gens))
    for z in factorizations(M, args.element, cap=args.cap):
        out.write(_coords(z) + "\n")
    return 0


def _cmd_betti(args, out) -> int:
    M = NumericalMonoid(_int_list(args.gens))
    from .presentations import betti_elements

    for beta in betti_elements(M):
        out.write(f"{beta}\n")
    return 0


def _minpres_for_strategy(gens: tuple[int, ...], strategy: str):
    M = NumericalMonoid(gens)
    if strategy == "direct":
        return minimal_presentation(M)
    family, n = family_from_generators(gens)
    if strategy == "shift":
        if family is None:
            raise InvalidInput("a single generator has no shifted family")
        return accelerated_minimal_presentation(family, n)
    # auto: accelerate when the lifting theorem applies, else direct
    if family is not None and n > family.threshold and family.d > 0:
        member = monoid_at(family, n)
        if member.primitive and member.minimal:
            return accelerated_minimal_presentation(family, n)
    return minimal_presentation(M)


def _cmd_minpres(args, out) -> int:
    gens = _int_list(args.gens)
    if args.all:
        M = NumericalMonoid(gens)
        count, items = all_minimal_presentations(M)
        if args.format == "json":
            payload = {
                "generators": list(M.generators),
                "count": count,
                "presentations": [
                    _relation_dicts(p.relations) for p in items
                ],
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
        else:
            out.write(f"count {count}\n")
            for p in items:
                out.write("\n")
                for r in p.relations:
                    out.write(f"{r.betti}: {_coords(r.left)} ~ {_coords(r.right)}\n")
        return 0
    pres = _minpres_for_strategy(gens, args.strategy)
    if args.paranoid:
        M = pres.monoid
        bound = frobenius(M) + 2 * M.generators[-1]
        report = congruence_closure_check(M, pres.relations, bound)
        if not report.ok:
            raise VerificationFailed(
                f"closure check failed at {report.failures[0][0]}"
            )
    _print_presentation(pres, args.format, out)
    return 0


def _cmd_invariant(args, out) -> int:
    gens = _int_list(args.gens)
    M = NumericalMonoid(gens)
    which = args.which
    if args.element is not None:
        a = args.element
        if which == "delta":
            values = sorted(delta_set_of_element(M, a))
            payload = {"which": which, "element": a, "values": values}
        elif which == "catenary":
            payload = {
                "which": which,
                "element": a,
                "value": catenary_of_element(M, a),
            }
        elif which in ("mon-catenary", "eq-catenary"):
            mon, eq = monotone_equal_catenary(M, a)
            value = mon if which == "mon-catenary" else eq
            payload = {"which": which, "element": a, "value": value}
        else:
            payload = {"which": which, "element": a, "value": tame_degree(M, a)}
        out.write(json.dumps(payload) + "\n")
        return 0

    # monoid level; explicit --window forces the windowed path
    member = _detected_member(gens) if args.window is None else None
    if which == "delta":
        ds = delta_set(M, window=args.window, member=member)
        payload = {
            "which": which,
            "values": sorted(ds.values),
            "exact": ds.exact,
            "window": ds.window,
        }
    elif which == "catenary":
        if member is not None and member.n > member.family.threshold:
            value = monoid_catenary_report(M, member=member).ordinary
        else:
            value = catenary_of_monoid(M)
        payload = {"which": which, "value": value, "exact": True}
    elif which in ("mon-catenary", "eq-catenary"):
        report = monoid_catenary_report(M, window=args.window, member=member)
        value = report.monotone if which == "mon-catenary" else report.equal
        payload = {
            "which": which,
            "value": value,
            "exact": report.exact,
            "window": report.window,
        }
    else:
        report = tame_degree_windowed(M, window=args.window)
        payload = {
            "which": which,
            "value": report.value,
            "attained_at": report.attained_at,
            "window": report.window,
        }
    out.write(json.dumps(payload) + "\n")
    return 0


def _survey_rows(family, n: int, which: str) -> list[tuple[int, str, int]]:
    member = monoid_at(family, n)
    if not member.primitive or not member.minimal:
        return [(n, "skip", 0)]
    try:
        pres = accelerated_minimal_presentation(family, n)
        if which == "minpres-size":
            return [(n, which, len(pres.relations))]
        betti = sorted(set(pres.betti_values()))
        if which == "betti":
            return [(n, which, beta) for beta in betti]
        if which == "catenary":
            value = catenary_of_monoid(member.monoid, betti=betti)
            return [(n, which, value)]
        ds = delta_set(member.monoid, member=member)
        return [(n, which, v) for v in sorted(ds.values)]
    except MonoidError:
        return [(n, "error", 0)]


def _cmd_survey(args, out) -> int:
    from .shifted import ShiftedFamily

    family = ShiftedFamily(_int_list(args.r))
    if args.n_from < 1:
        raise InvalidInput("--n-from must be positive")
    if args.jobs < 1:
        raise InvalidInput("--jobs must be positive")
    shifts = range(args.n_from, args.n_to + 1)
    if args.jobs == 1:
        chunks = [_survey_rows(family, n, args.which) for n in shifts]
    else:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(
                pool.map(lambda n: _survey_rows(family, n, args.which), shifts)
            )
    rows = sorted(row for chunk in chunks for row in chunk)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "metric", "value"])
    writer.writerows(rows)
    text = buf.getvalue()
    if args.out == "-":
        out.write(text)
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    return 0


def _cmd_bench(args, out) -> int:
    from . import clear_caches
    from .shifted import ShiftedFamily

    family = ShiftedFamily(_int_list(args.r))
    if args.repeats < 1:
        raise InvalidInput("--repeats must be positive")
    member = monoid_at(family, args.n)

    accel_times = []
    accel_pres = None
    for _ in range(args.repeats):
        clear_caches()
        t0 = time.perf_counter()
        accel_pres = accelerated_minimal_presentation(family, args.n)
        accel_times.append(time.perf_counter() - t0)

    direct_times = []
    direct_pres = None
    timed_out = False
    for _ in range(args.repeats):
        clear_caches()
        t0 = time.perf_counter()
        try:
            direct_pres = minimal_presentation(
                member.monoid, deadline=time.monotonic() + args.timeout_secs
            )
        except BudgetExceeded:
            timed_out = True
            break
        direct_times.append(time.perf_counter() - t0)

    accel_ms = statistics.median(accel_times) * 1000.0
    out.write(f"accelerated_ms {accel_ms:.1f}\n")
    if timed_out:
        out.write(f"direct_ms timeout(>{args.timeout_secs:g}s)\n")
        out.write("speedup n/a\n")
        out.write("equal n/a\n")
        return 0
    direct_ms = statistics.median(direct_times) * 1000.0
    out.write(f"direct_ms {direct_ms:.1f}\n")
    speedup = direct_ms / accel_ms if accel_ms > 0 else float("inf")
    out.write(f"speedup {speedup:.2f}\n")
    if accel_pres.relations != direct_pres.relations:
        out.write("equal no\n")
        raise VerificationFailed("accelerated and direct presentations differ")
    out.write("equal yes\n")
    return 0


def _cmd_verify(args, out) -> int:
    gens = _int_list(args.gens)
    M = NumericalMonoid(gens)
    try:
        with open(args.presentation) as fh:
            payload = json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {args.presentation}: {exc}")
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{args.presentation} is not valid JSON: {exc}")
    if tuple(payload.get("generators", ())) != gens:
        raise InvalidInput("presentation file generators do not match --gens")
    try:
        relations = [
            make_relation(M, tuple(r["left"]), tuple(r["right"]))
            for r in payload["relations"]
        ]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed relations block: {exc}")
    bound = args.bound
    if bound is None:
        bound = frobenius(M) + 2 * M.generators[-1]
    report = congruence_closure_check(M, relations, bound)
    if not report.ok:
        a, (z, zp) = report.failures[0]
        out.write(f"fail at {a}: {_coords(z)} !~ {_coords(zp)} (window {bound})\n")
        raise VerificationFailed(f"closure gap at element {a}")
    out.write(f"ok window={bound} relations={len(relations)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="numonoid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("apery", help="Apery set by residue")
    p.add_argument("--gens", required=True)
    p.set_defaults(func=_cmd_apery)

    p = sub.add_parser("member", help="membership test")
    p.add_argument("--gens", required=True)
    p.add_argument("--element", type=int, required=True)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser(
        "factorizations", help="all factorizations of an element"
    )
    p.add_argument("--gens", required=True)
    p.add_argument("--element", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_factorizations)

    p = sub.add_parser("betti", help="Betti elements")
    p.add_argument("--gens", required=True)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("minpres", help="minimal presentation")
    p.add_argument("--gens", required=True)
    p.add_argument(
        "--strategy", choices=("direct", "shift", "auto"), default="auto"
    )
    p.add_argument("--all", action="store_true", help="enumerate all of them")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument(
        "--paranoid",
        action="store_true",
        help="closure-check the output before printing",
    )
    p.set_defaults(func=_cmd_minpres)

    p = sub.add_parser("invariant", help="factorization invariants")
    p.add_argument("--gens", required=True)
    p.add_argument(
        "--which",
        choices=("delta", "catenary", "mon-catenary", "eq-catenary", "tame"),
        required=True,
    )
    p.add_argument("--element", type=int, default=None)
    p.add_argument("--window", type=int, default=None)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("survey", help="family survey CSV")
    p.add_argument("--r", required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument(
        "--which",
        choices=("betti", "catenary", "minpres-size", "delta"),
        required=True,
    )
    p.add_argument("--out", required=True, help="output path, - for stdout")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("bench", help="direct vs accelerated timing")
    p.add_argument("--r", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--timeout-secs", type=float, default=60.0)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("verify", help="closure-check a presentation file")
    p.add_argument("--gens", required=True)
    p.add_argument("--presentation", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, sys.stdout)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MonoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
