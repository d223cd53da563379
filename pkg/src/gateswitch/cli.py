"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import ksets, limits, multiperm, oracle, verify
from .circseq import count_switches, gate_profile, parse_gates, theorem1_bounds, two_phase_construction
from .errors import BudgetExceeded, GateSwitchError, InvalidInput
from .perm_core import n_bar

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InvalidInput(f"expected comma separated integers, got {text!r}") from None


# -- commands ----------------------------------------------------------------
# Each returns (report, exit_code, verdict). Reports are plain dicts whose key
# order is fixed by construction, so output is byte-stable.

def cmd_bounds(args):
    gs = parse_gates(args.N, args.y)
    prof = gate_profile(gs)
    lower, upper = theorem1_bounds(gs)
    report = {
        "N": gs.n,
        "gates": list(gs.y),
        "x": list(prof.x),
        "p": list(prof.p),
        "l": prof.l,
        "r": prof.r,
        "cost_per_number": list(prof.cost_per_number),
        "total_cost": prof.total_cost,
        "lower": lower,
        "upper": upper,
    }
    return report, EXIT_OK, f"{lower} {upper}"


def cmd_construct(args):
    gs = parse_gates(args.N, args.y)
    built = two_phase_construction(gs)
    seq = built.sequence
    tally = count_switches(seq, gs)
    first, second = built.phase_tallies()
    lower, upper = theorem1_bounds(gs)
    rows = [
        {"step": i, "permutation": str(p),
         "position": seq.events[i - 1].position if i else "",
         "gate": (seq.events[i - 1].position in gs.y) if i else ""}
        for i, p in enumerate(seq.permutations)
    ]
    report = {
        "N": gs.n,
        "gates": list(gs.y),
        "length": len(seq),
        "permutations": [str(p) for p in seq.permutations],
        "events": [ev.to_text() for ev in seq.events],
        "phase1_endpoint": str(built.phase1_endpoint),
        "tally": {"total": tally.total, "good": tally.good, "bad": tally.bad},
        "phase1": {"steps": built.phase1_steps, "gate_switches": first.total, "bad": first.bad},
        "phase2": {"steps": len(seq.events) - built.phase1_steps,
                   "gate_switches": second.total, "bad": second.bad},
        "bounds": [lower, upper],
        "_table": rows,
    }
    return report, EXIT_OK, str(tally.total)


def cmd_diameter(args):
    c = multiperm.parse_composition(args.c)
    d = multiperm.diameter(c)
    report = {
        "composition": list(c.parts),
        "N": c.n,
        "vertices": multiperm.vertex_count(c),
        "gates": list(c.gates),
        "diameter": d,
    }
    code = EXIT_OK
    if args.bounds:
        report["bounds"] = list(multiperm.diameter_bounds(c))
    if args.closed_form:
        report["closed_form"] = multiperm.closed_form_diameter(c)
    if args.oracle:
        m = oracle.min_switches(c.gate_set())
        report["oracle_min_switches"] = m
        if m != d:
            code = EXIT_FAIL
        try:
            report["oracle_all_pairs"] = oracle.all_pairs_diameter(c)
            if report["oracle_all_pairs"] != d:
                code = EXIT_FAIL
        except BudgetExceeded as exc:
            report["oracle_all_pairs"] = None
            report["note"] = str(exc)
    return report, code, str(d)


def cmd_hrep(args):
    c = multiperm.parse_composition(args.c)
    values = _int_list(args.values) if args.values else None
    h = multiperm.h_representation(c, values)
    if args.text:
        return h.to_text(), EXIT_OK, f"{len(h.rows)} rows"
    report = h.to_json()
    report["composition"] = list(c.parts)
    report["_table"] = [{"S": " ".join(map(str, r.subset)), "rhs": r.rhs} for r in h.rows]
    return report, EXIT_OK, f"{len(h.rows)} rows"


def cmd_oracle(args):
    report = {}
    if args.count_sequences is not None:
        n = args.count_sequences
        report["N"] = n
        report["recursive_count"] = oracle.count_sequences(n)
        report["formula_count"] = oracle.reduced_word_count_formula(n)
        if n <= limits.LIMITS.enumerate_max_n:
            report["enumerated"] = sum(1 for _ in oracle.enumerate_sequences(n))
        return report, EXIT_OK, str(report["recursive_count"])
    if args.N is None or args.y is None:
        raise InvalidInput("oracle needs -N and -y, or --count-sequences N")
    gs = parse_gates(args.N, args.y)
    m = oracle.min_switches(gs)
    lower, upper = theorem1_bounds(gs)
    report = {"N": gs.n, "gates": list(gs.y), "min_switches": m, "bounds": [lower, upper],
              "within_bounds": lower <= m <= upper}
    return report, EXIT_OK if lower <= m <= upper else EXIT_FAIL, str(m)


def _read_points(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from None


def cmd_ksets(args):
    X = ksets.load_points(_read_points(args.points))
    counts = ksets.kset_counts(X)
    rows = [{"k": k, "f_left": kc.f_left, "f_right": kc.f_right, "f": kc.f}
            for k, kc in counts.per_k.items()]
    report = {
        "N": X.n,
        "labels_to_input_lines": list(X.source_index),
        "switches": list(counts.switches),
        "per_k": rows,
        "_table": rows,
    }
    code = EXIT_OK
    if args.oracle:
        brute = {k: oracle.ksets_bruteforce(X, k) for k in counts.per_k}
        report["oracle_agrees"] = all(
            brute[r["k"]] == (r["f_left"], r["f_right"], r["f"]) for r in rows)
        if not report["oracle_agrees"]:
            code = EXIT_FAIL
    verdict = " ".join(f"{r['k']}:{r['f']}" for r in rows)
    if args.L is not None or args.R is not None or args.sandwich:
        spec = ksets.LRSpec(X.n, frozenset(_int_list(args.L or "")), frozenset(_int_list(args.R or "")))
        report["spec"] = {"L": sorted(spec.L), "R": sorted(spec.R)}
        report["f_LR"] = ksets.f_LR(X, spec, counts)
        verdict = str(report["f_LR"])
        if args.sandwich:
            rep = ksets.sandwich_check(X, spec, counts)
            comp = ksets.complement_LR(spec)
            report["sandwich"] = {
                "composition": list(ksets.composition_from_LR(spec).parts) if ksets.gates_of(spec) else None,
                "complement": {"L": sorted(comp.L), "R": sorted(comp.R),
                               "composition": list(ksets.composition_from_LR(comp).parts) if ksets.gates_of(comp) else None},
                "lower": rep.lower,
                "middle": rep.middle,
                "upper": rep.upper,
                "lower_ok": rep.lower_ok,
                "upper_ok": rep.upper_ok,
                "notes": list(rep.notes),
            }
            verdict = "pass" if rep.ok else "fail"
            if not rep.ok:
                code = EXIT_FAIL
    return report, code, verdict


def cmd_gon(args):
    X = ksets.gon_configuration(args.k, args.N)
    if args.output:
        Path(args.output).write_text(X.to_text())
    counts = ksets.kset_counts(X)
    report = {
        "k": args.k,
        "N": args.N,
        "points": [[str(x), str(y)] for x, y in X.points],
        "f_k": counts[args.k].f,
    }
    return report, EXIT_OK, str(counts[args.k].f)


def cmd_perturb(args):
    raw = ksets.parse_points(_read_points(args.points))
    X = ksets.perturb(raw, q=args.q, seed=args.seed)
    # keep the input order so the output lines correspond to input lines
    by_input = sorted(zip(X.source_index, X.points))
    return "".join(f"{x} {y}\n" for _, (x, y) in by_input), EXIT_OK, "ok"


def cmd_verify(args):
    if args.suite != "all" and args.suite not in verify.SUITES:
        raise InvalidInput(f"unknown suite {args.suite!r}; choose from all, {', '.join(verify.SUITES)}")
    results = verify.run(args.suite, args.max_n, args.seeds)
    ok = all(r.passed for r in results)
    report = {"verdict": "pass" if ok else "fail", "suites": [r.to_json() for r in results]}
    report["_table"] = [{"suite": r.name, "verdict": "pass" if r.passed else "fail",
                         "checked": r.checked, "failures": len(r.failures)} for r in results]
    return report, EXIT_OK if ok else EXIT_FAIL, "pass" if ok else "fail"


def cmd_diameter_spectrum(args):
    n = args.N
    if n < 2:
        raise InvalidInput("N must be at least 2")
    witnesses: dict[int, list] = {}
    for c in multiperm.compositions(n):
        witnesses.setdefault(multiperm.diameter(c), []).append(",".join(map(str, c.parts)))
    achieved = sorted(witnesses)
    report = {
        "N": n,
        "diameters": achieved,
        "missing": [d for d in range(1, n_bar(n) + 1) if d not in witnesses],
        "witnesses": {str(d): witnesses[d] for d in achieved},
        "_table": [{"diameter": d, "compositions": " ".join(witnesses[d])} for d in achieved],
    }
    return report, EXIT_OK, " ".join(map(str, achieved))


# -- output ------------------------------------------------------------------

def _render(report, fmt: str) -> str:
    if isinstance(report, str):
        return report
    if fmt == "csv":
        buf = io.StringIO()
        table = report.get("_table")
        if table:
            writer = csv.DictWriter(buf, fieldnames=list(table[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(table)
        else:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["key", "value"])
            for key, value in report.items():
                writer.writerow([key, value if isinstance(value, (int, str)) else json.dumps(value)])
        return buf.getvalue()
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(public, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--quiet", action="store_true", help="print only the verdict")
    common.add_argument("--budget", help="override limits, e.g. oracle_max_n=10,max_vertices=8000000")

    parser = argparse.ArgumentParser(
        prog="gateswitch",
        description="Switch-count bounds for circular sequences, multipermutohedron diameters and k-sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", parents=[common], help="gate profile and switch-count bounds")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-y", required=True, help="gates, e.g. 1,4,6,7")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("construct", parents=[common], help="two-phase circular sequence")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-y", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("diameter", parents=[common], help="skeleton diameter of P(M)")
    p.add_argument("-c", required=True, help="composition, e.g. 1,3,2,1,1")
    p.add_argument("--bounds", action="store_true")
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_diameter)

    p = sub.add_parser("hrep", parents=[common], help="inequality description of P(M)")
    p.add_argument("-c", required=True)
    p.add_argument("--values", help="increasing values replacing 1..n")
    p.add_argument("--text", action="store_true", help="rows as 'x(S) >= rhs' lines")
    p.set_defaults(func=cmd_hrep)

    p = sub.add_parser("oracle", parents=[common], help="exact s(y) or sequence counts")
    p.add_argument("-N", type=int)
    p.add_argument("-y")
    p.add_argument("--count-sequences", type=int, metavar="N")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ksets", parents=[common], help="k-set counts of a points file")
    p.add_argument("points", help="points file ('-' for stdin)")
    p.add_argument("--L", help="left sizes, e.g. 1,2")
    p.add_argument("--R", help="right sizes")
    p.add_argument("--sandwich", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check counts by brute force")
    p.set_defaults(func=cmd_ksets)

    p = sub.add_parser("gon", parents=[common], help="(2k+1)-gon extremal configuration")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--output", help="also write the points file here")
    p.set_defaults(func=cmd_gon)

    p = sub.add_parser("perturb", parents=[common], help="rational perturbation into general position")
    p.add_argument("points")
    p.add_argument("-q", type=int, default=1000, help="perturbation magnitude is at most 1/q")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", help=f"all or one of: {', '.join(verify.SUITES)}")
    p.add_argument("--max-n", type=int)
    p.add_argument("--seeds", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diameter-spectrum", parents=[common], help="diameters over all compositions of N")
    p.add_argument("-N", type=int, required=True)
    p.set_defaults(func=cmd_diameter_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = limits.Limits(**vars(limits.LIMITS))
    try:
        if args.budget:
            limits.apply_overrides(limits.LIMITS, args.budget)
        report, code, verdict = args.func(args)
    except BudgetExceeded as exc:
        print(f"gateswitch: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as exc:
        print(f"gateswitch: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GateSwitchError as exc:
        print(f"gateswitch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        for name, value in vars(saved).items():
            setattr(limits.LIMITS, name, value)
    sys.stdout.write(verdict + "\n" if args.quiet else _render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
