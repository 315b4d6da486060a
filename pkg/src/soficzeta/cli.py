"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 violated assumption (or a failed
verification), 3 numerical failure, 4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from .errors import AssumptionError, InputError, SoficError
from .extension import class_orbit_census, equidistribution_diagnostic, parse_group, parse_psi
from .graph import (
    adjacency_matrix,
    is_irreducible,
    is_right_resolving,
    parse_labelled_graph,
    scc_names,
    validate_essential,
)
from .oracle import brute_force_periodic_counts, generate_random_presentation
from .orbits import asymptotic_report, orbit_census
from .presentation import minimize_right_resolving, subset_determinize
from .signed_subsets import DEFAULT_MAX_VERTICES, check_subset_guard, spectral_gap_report
from .zeta import expand_zeta_series, periodic_point_counts, zeta_rational

CSV_COLUMNS = ["n", "F", "O", "pi", "log_mertens_product", "mertens_sum"]


def jsonable(obj):
    """Round floats to 12 significant digits; non-finite floats become null."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.12g}") if math.isfinite(obj) else None
    if isinstance(obj, complex):
        return [jsonable(obj.real), jsonable(obj.imag)]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), indent=2, sort_keys=True) + "\n"


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 1))
        elif isinstance(v, float):
            lines.append(f"{pad}{k}: {v:.12g}")
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([f"{x:.12g}" if isinstance(x, float) else x for x in row])
    return buf.getvalue()


def _load_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    g = parse_labelled_graph(text)
    validate_essential(g)
    return g


def _working_presentation(args):
    """Input graph, determinized and minimized as requested, plus a log of the steps."""
    g = _load_graph(args.input)
    steps = []
    summary = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "alphabet": list(g.alphabet),
        "right_resolving": is_right_resolving(g),
        "irreducible": is_irreducible(adjacency_matrix(g)),
    }
    if not summary["right_resolving"]:
        g = subset_determinize(g)
        steps.append(f"subset_determinize -> {g.order} vertices")
    if not args.no_minimize:
        before = g.order
        g = minimize_right_resolving(g)
        steps.append(f"minimize_right_resolving {before} -> {g.order} vertices")
    if not is_irreducible(adjacency_matrix(g)):
        raise AssumptionError(f"presentation is reducible; strongly connected components: {scc_names(g)}")
    check_subset_guard(g, args.max_vertices)
    return g, summary, steps


def cmd_analyze(args) -> str:
    g, summary, steps = _working_presentation(args)
    census = orbit_census(g, args.max_n, args.tolerance, args.max_vertices)
    zf = zeta_rational(g, args.max_vertices)
    report = {
        "graph": summary,
        "transformations": steps,
        "presentation": g.to_dict(),
        "presentation_size": g.order,
        "p": census.p,
        "lambda": census.lam,
        "entropy": census.entropy,
        "zeta": zf.to_dict(),
        "tables": census.to_dict(),
        "alpha": census.alpha,
        "C": census.C,
        "spectral_gap": spectral_gap_report(g, args.max_vertices).to_dict(),
        "asymptotic": asymptotic_report(g, args.horizon, args.tolerance, args.max_vertices).to_dict(),
    }
    if args.format == "json":
        return dumps(report)
    if args.format == "csv":
        return _csv(census.rows())
    brief = {k: v for k, v in report.items() if k not in ("tables", "presentation")}
    brief["zeta"] = f"({_poly_str(zf.numerator)}) / ({_poly_str(zf.denominator)})"
    return _text(brief) + "\n"


def _poly_str(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        mag = abs(c)
        body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag}{mono}")
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])


def cmd_zeta(args) -> str:
    g = _load_graph(args.input)
    if not is_right_resolving(g):
        g = subset_determinize(g)
    zf = zeta_rational(g, args.max_vertices)
    if args.format == "text":
        return f"zeta(z) = ({_poly_str(zf.numerator)}) / ({_poly_str(zf.denominator)})\n"
    return dumps(zf.to_dict())


def cmd_counts(args) -> str:
    g, _, _ = _working_presentation(args)
    census = orbit_census(g, args.max_n, args.tolerance, args.max_vertices)
    if args.format == "json":
        return dumps(census.to_dict())
    if args.format == "csv":
        return _csv(census.rows())
    lines = ["{:>4} {:>24} {:>24} {:>26} {:>20} {:>16}".format(*CSV_COLUMNS)]
    for n, F, O, pi, lp, ms in census.rows():
        lines.append(f"{n:>4} {F:>24} {O:>24} {pi:>26} {lp:>20.12g} {ms:>16.12g}")
    return "\n".join(lines) + "\n"


def cmd_minimize(args) -> str:
    args.no_minimize = False
    g, _, _ = _working_presentation(args)
    return dumps(g.to_dict())


def cmd_verify(args) -> tuple:
    g, _, steps = _working_presentation(args)
    oracle_n = min(args.oracle_n, args.max_n)
    traces = periodic_point_counts(g, args.max_n, args.max_vertices)
    series = expand_zeta_series(zeta_rational(g, args.max_vertices), args.max_n)
    brute = brute_force_periodic_counts(g, oracle_n)
    gap = spectral_gap_report(g, args.max_vertices)
    checks = {
        "trace_vs_oracle": {
            "n": oracle_n,
            "passed": traces[:oracle_n] == brute,
            "mismatches": [n for n in range(1, oracle_n + 1) if traces[n - 1] != brute[n - 1]],
        },
        "trace_vs_series": {
            "n": args.max_n,
            "passed": traces == series,
            "mismatches": [n for n in range(1, args.max_n + 1) if traces[n - 1] != series[n - 1]],
        },
        "spectral_gap": gap.to_dict(),
    }
    ok = checks["trace_vs_oracle"]["passed"] and checks["trace_vs_series"]["passed"] and gap.passed
    checks["passed"] = ok
    checks["transformations"] = steps
    if args.format == "json":
        return dumps(checks), 0 if ok else 2
    lines = [
        f"F(n) trace formula vs brute force, n=1..{oracle_n}: "
        + ("agree" if checks["trace_vs_oracle"]["passed"] else f"MISMATCH at {checks['trace_vs_oracle']['mismatches']}"),
        f"F(n) trace formula vs zeta series, n=1..{args.max_n}: "
        + ("agree" if checks["trace_vs_series"]["passed"] else f"MISMATCH at {checks['trace_vs_series']['mismatches']}"),
        f"lambda = {gap.lam:.12g}",
    ]
    for j, r in sorted(gap.rho_tilde.items()):
        lines.append(f"rho(unsigned A_{j}) = {r:.12g} {'<' if r < gap.lam - 1e-9 else 'NOT <'} lambda")
    lines.append(f"R = {gap.R:.12g}")
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", 0 if ok else 2


def cmd_extension(args) -> str:
    if not args.group or not args.psi:
        raise InputError("extension needs --group and --psi")
    g, _, _ = _working_presentation(args)
    try:
        group = parse_group(Path(args.group).read_text(encoding="utf-8"))
        psi = parse_psi(Path(args.psi).read_text(encoding="utf-8"), group)
    except OSError as exc:
        raise InputError(str(exc)) from None
    census = class_orbit_census(g, group, psi, args.oracle_n)
    ratios = equidistribution_diagnostic(census, group)
    out = census.to_dict()
    for entry, c in zip(out["classes"], sorted(census.orbits)):
        entry["equidistribution_ratio"] = ratios[c]
    if args.format == "json":
        return dumps(out)
    lines = [f"N = {census.N}, lambda = {census.lam:.12g}"]
    for entry in out["classes"]:
        lines.append(
            f"class {entry['class']} (size {entry['size']}): pi = {entry['pi']}, "
            f"log M = {entry['log_mertens_product']:.12g}, m = {entry['mertens_sum']:.12g}, "
            f"ratio = {entry['equidistribution_ratio']:.12g}"
        )
    return "\n".join(lines) + "\n"


def cmd_random(args) -> str:
    return dumps(generate_random_presentation(args.seed, args.vertices, args.letters).to_dict())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph JSON file")
    common.add_argument("--max-n", type=int, default=30, help="table length (default 30)")
    common.add_argument("--horizon", type=int, default=200, help="N for the asymptotic report")
    common.add_argument("--tolerance", type=float, default=1e-9, help="tail tolerance for C")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    common.add_argument("--no-minimize", action="store_true",
                        help="use the right-resolving presentation as given")
    common.add_argument("--oracle-n", type=int, default=10,
                        help="brute-force horizon for verify and extension (default 10)")
    common.add_argument("--group", help="group JSON file (extension)")
    common.add_argument("--psi", help="label-pair map JSON file (extension)")

    parser = argparse.ArgumentParser(prog="soficzeta", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("analyze", "full report"),
        ("zeta", "zeta function as a reduced rational function"),
        ("counts", "table of F, O and the counting functions"),
        ("minimize", "minimal right-resolving presentation"),
        ("verify", "brute-force cross-check and spectral gap certificate"),
        ("extension", "Frobenius-class orbit census for a group extension"),
    ]:
        sub.add_parser(name, parents=[common], help=help_)
    rnd = sub.add_parser("random", help="seeded random irreducible right-resolving graph")
    rnd.add_argument("--seed", type=int, required=True)
    rnd.add_argument("--vertices", type=int, default=3)
    rnd.add_argument("--letters", type=int, default=2)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "zeta": cmd_zeta,
    "counts": cmd_counts,
    "minimize": cmd_minimize,
    "verify": cmd_verify,
    "extension": cmd_extension,
    "random": cmd_random,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    if args.command != "random" and not args.input:
        print("error: --input is required", file=stderr)
        return 1
    try:
        result = COMMANDS[args.command](args)
    except SoficError as exc:
        print(f"error: {exc}", file=stderr)
        return exc.exit_code
    code = 0
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


def main() -> None:
    sys.exit(run())
