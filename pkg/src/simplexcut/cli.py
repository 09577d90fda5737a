"""Command-line surface.

Every subcommand prints a JSON report (or the requested instance file) to
stdout or --out.  Exit codes: 0 success, 1 failed check or exhausted
budget, 2 invalid parameters or malformed input, with a machine-readable
JSON object on stderr for the non-zero cases.  --threads is accepted for
interface stability; execution is serial, which keeps every report
deterministic modulo timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .bounds import (
    OptimizeConfig,
    limitation_min,
    limitation_sup,
    optimize_params,
)
from .cuts import NAMED_CUTS, cost, delta, is_fragmenting, is_non_opposite, named_cut
from .errors import BudgetExceededError
from .instances import (
    COMPONENT_NAMES,
    GapParams,
    build_base_triangle,
    build_component,
    combine,
)
from .io import (
    emit_instance_dimacs,
    emit_instance_json,
    parse_cut,
    parse_instance,
    parse_rational,
    render_decimal,
    render_rational,
)
from .lattice import build_graph
from .reproduce import SUITES, run_suite
from .search import (
    DEFAULT_LABELING_BUDGET,
    SearchBudget,
    enumerate_non_opposite,
    min_non_opposite_cost,
    min_terminal_face_cut,
)
from .sperner import (
    exhaustive_extremal,
    monochromatic_upper_bound,
    nonmonochromatic_lower_bound,
)

_COMPONENT_INDEX = {name: i for i, name in COMPONENT_NAMES.items()}
_INSTANCE_CHOICES = ("triangle",) + tuple(_COMPONENT_INDEX) + ("combined",)


def _error_code(message: str) -> str:
    if "sum to" in message and "expected 1" in message:
        return "lambda-simplex-violation"
    return "invalid-parameter"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _emit_report(doc: dict, out: str | None, started: float) -> None:
    doc["elapsed_s"] = time.perf_counter() - started
    _emit(json.dumps(doc, indent=2) + "\n", out)


def _parse_lambda(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("--lambda expects four comma-separated rationals")
    a, b, c, d = (parse_rational(p) for p in parts)
    return a, b, c, d


def _both(x: Fraction) -> dict:
    return {"exact": render_rational(x), "decimal": render_decimal(x)}


def cmd_gen(args) -> int:
    tag = args.instance
    c = parse_rational(args.c) if args.c is not None else None
    lam = _parse_lambda(args.lam) if args.lam is not None else None
    if tag == "triangle":
        if c is not None or lam is not None:
            raise ValueError("the triangle instance takes neither --c nor --lambda")
        w = build_base_triangle(args.n)
    elif tag == "combined":
        params = GapParams.tuned(c=c) if lam is None else GapParams(*lam, c=c if c is not None else GapParams.tuned().c)
        c, lam = params.c, params.lams()
        w = combine(params, build_graph(4, args.n))
    else:
        if lam is not None:
            raise ValueError("--lambda only applies to the combined instance")
        index = _COMPONENT_INDEX[tag]
        if index != 3 and c is not None:
            raise ValueError(f"the {tag} component takes no --c")
        w = build_component(index, build_graph(4, args.n), c=c)
        if index != 3:
            c = None
    emitter = emit_instance_json if args.format == "json" else emit_instance_dimacs
    _emit(
        emitter(w, tag=tag, c=c, lam=lam, include_zero_edges=args.include_zero_edges),
        args.out,
    )
    return 0


def _load_instance(path: str):
    return parse_instance(Path(path).read_text())


def cmd_eval_cut(args) -> int:
    started = time.perf_counter()
    parsed = _load_instance(args.instance)
    w = parsed.weights
    g = w.graph
    if args.cut in NAMED_CUTS:
        c = parse_rational(args.c) if args.c is not None else parsed.c
        alpha = parse_rational(args.alpha) if args.alpha is not None else None
        p = named_cut(args.cut, g, c=c, alpha=alpha)
    else:
        p = parse_cut(Path(args.cut).read_text())
        if p.graph is not g:
            raise ValueError(
                f"cut is for k={p.graph.k}, n={p.graph.n}; instance has k={g.k}, n={g.n}"
            )
    value = cost(p, w)
    doc = {
        "command": "eval-cut",
        "parameters": {"instance": args.instance, "cut": args.cut},
        "results": {
            "cost": _both(value),
            "cut_edges": len(delta(p)),
            "non_opposite": is_non_opposite(p),
            "fragmenting": is_fragmenting(p) if g.k == 3 else None,
            "provenance": "direct-evaluation",
        },
    }
    _emit_report(doc, args.out, started)
    return 0


def cmd_min_cut(args) -> int:
    started = time.perf_counter()
    parsed = _load_instance(args.instance)
    value = min_terminal_face_cut(parsed.weights, args.terminal)
    doc = {
        "command": "min-cut",
        "parameters": {"instance": args.instance, "terminal": args.terminal},
        "results": {"min_cut": _both(value), "provenance": "max-flow"},
    }
    _emit_report(doc, args.out, started)
    return 0


def cmd_enumerate(args) -> int:
    started = time.perf_counter()
    budget = args.budget if args.budget is not None else DEFAULT_LABELING_BUDGET
    if args.instance is not None:
        parsed = _load_instance(args.instance)
        w = parsed.weights
        result = min_non_opposite_cost(
            w, SearchBudget(max_labelings=budget, mode=args.mode)
        )
        doc = {
            "command": "enumerate",
            "parameters": {
                "instance": args.instance,
                "budget": budget,
                "mode": args.mode,
            },
            "results": {
                "min_cost": _both(result.min_cost),
                "argmin_labels": list(result.argmin.labels),
                "explored": result.explored,
                "proven_optimal": result.proven_optimal,
                "provenance": "enumeration",
            },
        }
        _emit_report(doc, args.out, started)
        if not result.proven_optimal:
            print(
                json.dumps(
                    {
                        "error": "budget-exhausted",
                        "message": f"stopped after {result.explored} labelings",
                    }
                ),
                file=sys.stderr,
            )
            return 1
        return 0
    if args.k is None or args.n is None:
        raise ValueError("enumerate needs either --instance or both --k and --n")
    g = build_graph(args.k, args.n)
    count = enumerate_non_opposite(g, max_labelings=budget)
    doc = {
        "command": "enumerate",
        "parameters": {"k": args.k, "n": args.n, "budget": budget},
        "results": {"non_opposite_cuts": count, "provenance": "enumeration"},
    }
    _emit_report(doc, args.out, started)
    return 0


def cmd_sperner_verify(args) -> int:
    started = time.perf_counter()
    budget = args.budget if args.budget is not None else DEFAULT_LABELING_BUDGET
    rep = exhaustive_extremal(
        args.k, args.n, face_restricted=args.face_restricted, max_labelings=budget
    )
    bound = monochromatic_upper_bound(args.k, args.n)
    # the admissible upper bound only constrains plain (admissible) scans
    results = {
        "explored": rep.explored,
        "max_monochromatic": rep.max_monochromatic,
        "upper_bound": None if args.face_restricted else bound,
        "bound_attained": (
            None if args.face_restricted else rep.max_monochromatic == bound
        ),
        "witness_labels": list(rep.witness) if rep.witness is not None else None,
        "provenance": "enumeration",
    }
    passed = args.face_restricted or rep.max_monochromatic == bound
    if args.face_restricted:
        from math import factorial

        norm = factorial(args.n + args.k - 2) // factorial(args.n)
        floors = []
        assert rep.by_inadmissible is not None
        for z, (count, _witness) in sorted(rep.by_inadmissible.items()):
            floor = nonmonochromatic_lower_bound(args.k, args.n, Fraction(z, norm))
            floors.append(
                {
                    "inadmissible": z,
                    "min_nonmonochromatic": count,
                    "floor": render_rational(Fraction(floor)),
                    "ok": count >= floor,
                }
            )
            passed = passed and count >= floor
        results["count_floors"] = floors
    doc = {
        "command": "sperner-verify",
        "parameters": {
            "k": args.k,
            "n": args.n,
            "face_restricted": args.face_restricted,
            "budget": budget,
        },
        "results": results,
        "passed": passed,
    }
    _emit_report(doc, args.out, started)
    return 0 if passed else 1


def cmd_optimize(args) -> int:
    started = time.perf_counter()
    config = OptimizeConfig(
        coarse_steps=args.steps,
        refine_rounds=args.refine_rounds,
        force_lambda3_zero=args.lambda3_zero,
    )
    params, bound = optimize_params(config)
    doc = {
        "command": "optimize",
        "parameters": {
            "steps": args.steps,
            "refine_rounds": args.refine_rounds,
            "lambda3_zero": args.lambda3_zero,
        },
        "results": {
            "lambda": [_both(x) for x in params.lams()],
            "c": _both(params.c),
            "bound": _both(bound),
            "regime": "asymptotic",
            "provenance": "formula",
        },
    }
    _emit_report(doc, args.out, started)
    return 0


def cmd_limits(args) -> int:
    started = time.perf_counter()
    c_star, beta_star = limitation_sup()
    if args.lam is not None:
        lam = _parse_lambda(args.lam)
        c = parse_rational(args.c) if args.c is not None else GapParams.tuned().c
        params = GapParams(*lam, c=c)
    else:
        params = GapParams.tuned(
            c=parse_rational(args.c) if args.c is not None else None
        )
    results = {
        "sup": {"c": _both(c_star), "value": _both(beta_star)},
        "asymptotic_min": _both(limitation_min(params)),
        "regime": "asymptotic",
        "provenance": "formula",
    }
    if args.n is not None:
        results["finite_min"] = _both(limitation_min(params, n=args.n))
        results["finite_n"] = args.n
        results["finite_provenance"] = "direct-evaluation"
    doc = {
        "command": "limits",
        "parameters": {
            "lambda": [render_rational(x) for x in params.lams()],
            "c": render_rational(params.c),
            "n": args.n,
        },
        "results": results,
    }
    _emit_report(doc, args.out, started)
    return 0


def cmd_reproduce(args) -> int:
    started = time.perf_counter()
    report = run_suite(args.suite, budget=args.budget, threads=args.threads)
    _emit(json.dumps(report.as_dict(), indent=2) + "\n", args.out)
    if not report.passed:
        failing = [c.id for c in report.checks if not c.passed]
        print(
            json.dumps({"error": "check-failure", "failing": failing}),
            file=sys.stderr,
        )
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplexcut",
        description="Construct, price, search, and verify simplex-lattice cut instances.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface stability; execution is serial",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate an instance file")
    p.add_argument("--instance", choices=_INSTANCE_CHOICES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", help="cap depth as a rational or decimal")
    p.add_argument("--lambda", dest="lam", help="four mixing weights a,b,c,d")
    p.add_argument("--format", choices=("json", "dimacs"), default="json")
    p.add_argument("--include-zero-edges", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval-cut", parents=[common], help="price a cut on an instance")
    p.add_argument("--instance", required=True, help="instance file (json or dimacs)")
    p.add_argument(
        "--cut",
        required=True,
        help=f"named cut ({', '.join(NAMED_CUTS)}) or a cut file path",
    )
    p.add_argument("--c", help="cap depth for cuts that take one")
    p.add_argument("--alpha", help="ball radius fraction for terminal-ball")
    p.set_defaults(func=cmd_eval_cut)

    p = sub.add_parser(
        "min-cut", parents=[common], help="exact terminal-to-opposite-side min cut"
    )
    p.add_argument("--instance", required=True)
    p.add_argument("--terminal", type=int, required=True, choices=(1, 2, 3))
    p.set_defaults(func=cmd_min_cut)

    p = sub.add_parser(
        "enumerate",
        parents=[common],
        help="enumerate non-opposite cuts, or minimize cost over them",
    )
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--instance", help="minimize over this instance instead of counting")
    p.add_argument("--mode", choices=("exhaustive", "branch_and_bound"), default="exhaustive")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser(
        "sperner-verify", parents=[common], help="exhaustive labeling extremal check"
    )
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--face-restricted", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_sperner_verify)

    p = sub.add_parser("optimize", parents=[common], help="maximize the certified floor")
    p.add_argument("--steps", type=int, default=2000)
    p.add_argument("--refine-rounds", type=int, default=3)
    p.add_argument("--lambda3-zero", action="store_true")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("limits", parents=[common], help="certificate-cut limitation values")
    p.add_argument("--lambda", dest="lam", help="four mixing weights a,b,c,d")
    p.add_argument("--c", help="cap depth as a rational or decimal")
    p.add_argument("--n", type=int, help="also price the certificate cuts at this n")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("reproduce", parents=[common], help="run an acceptance suite")
    p.add_argument("--suite", choices=tuple(SUITES), default="all")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(
            json.dumps({"error": "budget-exhausted", "message": str(exc)}),
            file=sys.stderr,
        )
        return 1
    except (ValueError, KeyError) as exc:
        message = str(exc)
        print(
            json.dumps({"error": _error_code(message), "message": message}),
            file=sys.stderr,
        )
        return 2
    except OSError as exc:
        print(json.dumps({"error": "io-error", "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
