"""Command-line interface.

Subcommands: analyze, mrd-gen, anticode-gen, covrad, macwilliams, density,
verify.  Exit codes: 0 success, 1 verification failure, 2 bad input (parse
errors report the offending line), 3 budget exceeded (naming the infeasible
computation).  With --json, every number is serialized as a decimal string
(rationals as "numerator/denominator") so arbitrary precision survives.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .codes import (
    DEFAULT_BUDGET,
    anticode_defect,
    initial_set,
    is_optimal_anticode,
    maximum_rank,
    minimum_distance,
    rank_distribution,
    singleton_defect,
)
from .codefile import read_code, write_code
from .constructions import build_column_anticode, build_mrd, build_row_anticode
from .covering import CoveringReport, covering_report
from .density import DEFAULT_CENSUS_BUDGET, DensityReport, density_report
from .errors import BudgetExceededError, CodeFileError
from .fields import ExtensionTower, FieldSpec, field_for_order
from .macwilliams import solve_dual_distribution_by_moments, transform
from .matrices import Subspace
from .verifysuite import LEVELS, run_checks


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _dist_json(W) -> list[str]:
    return [str(c) for c in W]


def _covering_json(rep: CoveringReport) -> dict:
    return {
        "exact": None if rep.exact is None else str(rep.exact),
        "dual_distance_bound": str(rep.dual_distance_bound),
        "external_distance_bound": str(rep.external_distance_bound),
        "initial_set_bound": str(rep.initial_set_bound),
        "lower_bound": str(rep.lower_bound),
    }


def _print_covering(rep: CoveringReport) -> None:
    exact = "not computed (budget)" if rep.exact is None else str(rep.exact)
    print(f"covering radius (exact):  {exact}")
    print(f"  dual distance bound:    {rep.dual_distance_bound}")
    print(f"  external distance bound: {rep.external_distance_bound}")
    print(f"  initial set bound:      {rep.initial_set_bound}")
    print(f"  lower bound:            {rep.lower_bound}")


def cmd_analyze(args) -> int:
    C = read_code(args.codefile)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    q = C.spec.order
    d = minimum_distance(C, budget)
    W = rank_distribution(C, budget)
    maxrk = maximum_rank(C, budget)
    sdefect = singleton_defect(C, budget)
    adefect = anticode_defect(C, budget)
    anticode = is_optimal_anticode(C, budget)
    Wdual = transform(W, C.n, C.m, q)
    rep = covering_report(C, budget)
    in_set = None if C.is_zero() else sorted(initial_set(C))
    if args.json:
        payload = {
            "field": C.spec.description(),
            "n": str(C.n),
            "m": str(C.m),
            "dimension": str(C.dim),
            "size": str(C.size),
            "minimum_distance": str(d),
            "rank_distribution": _dist_json(W),
            "maximum_rank": str(maxrk),
            "singleton_defect": str(sdefect),
            "is_mrd": sdefect == 0,
            "anticode_defect": str(adefect),
            "is_optimal_anticode": anticode.is_optimal,
            "anticode_side": anticode.side,
            "initial_set": None if in_set is None else [[str(i), str(j)] for i, j in in_set],
            "dual_rank_distribution": _dist_json(Wdual),
            "covering": _covering_json(rep),
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"field:                 {C.spec.description()}")
    print(f"shape:                 {C.n} x {C.m}")
    print(f"dimension:             {C.dim}  (|C| = {C.size})")
    print(f"minimum distance:      {d}")
    print(f"rank distribution:     {W}")
    print(f"maximum rank:          {maxrk}")
    print(f"singleton defect:      {sdefect}  (MRD: {'yes' if sdefect == 0 else 'no'})")
    side = f", side={anticode.side}" if anticode.is_optimal else ""
    print(
        f"anticode defect:       {adefect}  "
        f"(optimal anticode: {'yes' if anticode.is_optimal else 'no'}{side})"
    )
    if in_set is None:
        print("initial set:           undefined (zero code)")
    else:
        print("initial set:           {" + ", ".join(f"({i},{j})" for i, j in in_set) + "}")
    print(f"dual rank distribution: {Wdual}")
    _print_covering(rep)
    return 0


def _field_and_tower(q: int, m: int) -> tuple[FieldSpec, ExtensionTower]:
    spec = field_for_order(q)
    return spec, ExtensionTower(spec, m)


def cmd_mrd_gen(args) -> int:
    spec, tower = _field_and_tower(args.q, args.m)
    C = build_mrd(spec, args.n, args.m, args.d, tower)
    comments = [
        f"MRD code: q={args.q} n={args.n} m={args.m} d={args.d}",
        f"tower top field: {tower.top.description()}",
        "tower basis: " + ", ".join(str(b) for b in tower.basis),
    ]
    text = write_code(C, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_anticode_gen(args) -> int:
    spec = field_for_order(args.q)
    ambient = args.n if args.side == "column" else args.m
    if not 0 <= args.u <= ambient:
        raise ValueError(f"need 0 <= u <= {ambient}")
    zero, one = spec.zero(), spec.one()
    rows = [
        tuple(one if j == i else zero for j in range(ambient)) for i in range(args.u)
    ]
    U = Subspace(spec, ambient, tuple(rows))
    if args.side == "column":
        C = build_column_anticode(U, args.m)
    else:
        C = build_row_anticode(U, args.n)
    comments = [
        f"optimal anticode: q={args.q} n={args.n} m={args.m} support dim {args.u} ({args.side} side)",
    ]
    text = write_code(C, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_covrad(args) -> int:
    C = read_code(args.codefile)
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    rep = covering_report(C, budget)
    if args.json:
        print(json.dumps(_covering_json(rep), indent=2))
    else:
        _print_covering(rep)
    return 0


def cmd_macwilliams(args) -> int:
    if args.codefile:
        C = read_code(args.codefile)
        n, m, q = C.n, C.m, C.spec.order
        W = rank_distribution(C, args.budget if args.budget is not None else DEFAULT_BUDGET)
    else:
        if args.weights is None or args.n is None or args.m is None or args.q is None:
            raise ValueError("need a code file, or --weights with --q, --n and --m")
        W = tuple(int(t) for t in args.weights.split(","))
        n, m, q = args.n, args.m, args.q
    Wdual = transform(W, n, m, q)
    Wmoments = solve_dual_distribution_by_moments(W, n, m, q)
    assert tuple(Wdual) == tuple(Wmoments)
    if args.json:
        payload = {
            "n": str(n),
            "m": str(m),
            "q": str(q),
            "rank_distribution": _dist_json(W),
            "dual_rank_distribution": _dist_json(Wdual),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"rank distribution:      {tuple(W)}")
        print(f"dual rank distribution: {tuple(Wdual)} (transform = moment solution)")
    return 0


def _density_json(rep: DensityReport) -> dict:
    payload = {
        "q": str(rep.q),
        "n": str(rep.n),
        "m": str(rep.m),
        "d": str(rep.d),
        "k": str(rep.k),
        "exact": None if rep.exact is None else _frac_str(rep.exact),
        "bound_cc": _frac_str(rep.bound_cc),
        "bound_ball": _frac_str(rep.bound_ball),
        "asymptotic_q": {
            "limit": _frac_str(rep.asymptotic_q.limit),
            "case": rep.asymptotic_q.case,
            "decay_order": rep.asymptotic_q.decay_order,
            "spectrum_free_bound": _frac_str(rep.asymptotic_q.spectrum_free_bound),
        },
    }
    if rep.census is not None:
        payload["census"] = {
            "total_subspaces": str(rep.census.total_subspaces),
            "min_distance_exactly_d": str(rep.census.min_distance_exactly_d),
            "ball_avoiding": str(rep.census.ball_avoiding),
            "common_complement": str(rep.census.common_complement),
        }
    if rep.asymptotic_m is not None:
        am = rep.asymptotic_m
        payload["asymptotic_m"] = {
            "antrobus": [_frac_str(am.antrobus.lo), _frac_str(am.antrobus.hi)],
            "common_complement": [
                _frac_str(am.common_complement.lo),
                _frac_str(am.common_complement.hi),
            ],
            "partition_balanced": _frac_str(am.partition_balanced),
        }
    return payload


def cmd_density(args) -> int:
    rep = density_report(
        args.q,
        args.n,
        args.m,
        args.d,
        want_exact=args.exact,
        truncation=args.truncation,
        budget=args.budget if args.budget is not None else DEFAULT_CENSUS_BUDGET,
    )
    if args.json:
        print(json.dumps(_density_json(rep), indent=2))
        return 0
    print(f"MRD density delta_{rep.q}({rep.n} x {rep.m}, d={rep.d}), k = {rep.k}")
    if rep.exact is not None:
        print(f"exact (census of {rep.census.total_subspaces} subspaces): "
              f"{_frac_str(rep.exact)} ~ {float(rep.exact):.6g}")
    print(f"upper bound (common complements): {_frac_str(rep.bound_cc)} ~ {float(rep.bound_cc):.6g}")
    print(f"upper bound (ball avoidance):     {_frac_str(rep.bound_ball)} ~ {float(rep.bound_ball):.6g}")
    aq = rep.asymptotic_q
    print(f"q -> inf limit: {_frac_str(aq.limit)} [{aq.case}], decay {aq.decay_order}, "
          f"limsup bound {_frac_str(aq.spectrum_free_bound)}")
    if rep.asymptotic_m is not None:
        am = rep.asymptotic_m
        print("m -> inf limsup bounds (certified enclosures):")
        print(f"  spectrum-free style: [{float(am.antrobus.lo):.9g}, {float(am.antrobus.hi):.9g}]")
        print(f"  common-complement:   [{float(am.common_complement.lo):.9g}, "
              f"{float(am.common_complement.hi):.9g}]")
        print(f"  partition-balanced:  {_frac_str(am.partition_balanced)}")
    return 0


def cmd_verify(args) -> int:
    results = run_checks(args.level)
    failed = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = f"{status} {res.name}: {res.detail}"
        if res.counterexample:
            line += f" [counterexample: {res.counterexample}]"
        print(line)
        if not res.passed:
            failed += 1
    if failed:
        print(f"{failed} of {len(results)} checks failed")
        return 1
    print(f"all {len(results)} checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="max elements for exhaustive computations "
        "(default 2^24; density census defaults to 10^6 subspaces)",
    )
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker hint; output never depends on it",
    )

    parser = argparse.ArgumentParser(
        prog="rankmetric",
        description="Exact analysis of linear rank-metric codes over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="all parameters of a code file")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mrd-gen", parents=[common], help="generate an MRD code")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("d", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mrd_gen)

    p = sub.add_parser("anticode-gen", parents=[common], help="generate an optimal anticode")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("u", type=int, help="support dimension")
    p.add_argument("--side", choices=("column", "row"), default="column")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_anticode_gen)

    p = sub.add_parser("covrad", parents=[common], help="covering radius report")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_covrad)

    p = sub.add_parser("macwilliams", parents=[common], help="dual rank distribution")
    p.add_argument("codefile", nargs="?")
    p.add_argument("--weights", help="comma-separated distribution, e.g. 1,0,4,4")
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_macwilliams)

    p = sub.add_parser("density", parents=[common], help="MRD density report")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--exact", action="store_true", help="run the exact census")
    p.add_argument("--truncation", type=int, default=20, help="product truncation terms")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("verify", parents=[common], help="run the cross-oracle suite")
    p.add_argument("--level", choices=LEVELS, default="desk")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except CodeFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
