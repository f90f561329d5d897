"""Command-line front end: generators, analyses, and verification suites.

Reports are emitted on standard output as stable, key-sorted JSON with
floats printed to 17 significant digits (so parsing a report reproduces
every numeric field bit-exactly).  Diagnostics go to standard error.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .complexity import (
    binomial_sum_bound,
    bounds_table,
    factored_shatter_bound,
    growth_bound,
    has_sparse_boundary,
    max_boundary_box,
    packing_condition,
    packing_epsilon,
    restricted_shatter_bound,
    sauer_shelah,
    shatter_count,
    shatter_recursion,
    shatter_report,
    sparse_boundary_lower_bound,
)
from .discrepancy import (
    DEFAULT_CELL_BUDGET,
    BudgetExceededError,
    lower_bound_sample,
    star_discrepancy_exact,
    star_discrepancy_oracle,
)
from .generators import GeneratorSpec, gen_chain, gen_halton, gen_lattice, gen_random, gen_staircase
from .geometry import AnchoredBox, PointSet
from .pointsfile import PointsFormatError, format_points, parse_points
from .witness import check_bernoulli_inequality, check_case3_rational, lower_bound_witness

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

ORACLE_TOLERANCE = 1e-12
THREADS_ENV_VAR = "STARDISC_THREADS"


# ---------------------------------------------------------------------------
# report serialization


def _fmt_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def _dumps(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj):
            items.append(f'{pad}  {json.dumps(str(key))}: {_dumps(obj[key], indent + 1)}')
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}  {_dumps(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    return json.dumps(str(obj))


def _emit_report(command: str, digest: str | None, params: dict, results: dict, started: float):
    report = {
        "command": command,
        "input_digest": digest,
        "parameters": params,
        "results": results,
        "timing": {"seconds": time.perf_counter() - started},
    }
    sys.stdout.write(_dumps(report) + "\n")


def _box_coords(box: AnchoredBox) -> list[float]:
    return [float(c) for c in box.upper]


# ---------------------------------------------------------------------------
# input handling


def _read_points(path: str) -> tuple[PointSet, str]:
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            raw = fh.read()
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    return parse_points(raw.decode("utf-8")), digest


def _thread_count(args) -> int:
    if getattr(args, "threads", None) is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV_VAR)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


# ---------------------------------------------------------------------------
# subcommands


def _cmd_gen(args) -> int:
    bases = tuple(args.bases) if args.bases else None
    kind = "random" if args.kind == "random_uniform" else args.kind
    spec = GeneratorSpec(kind=kind, n=args.n, d=args.d, seed=args.seed, m=args.m, bases=bases)
    ps = spec.build()
    sys.stdout.write(format_points(ps, header=args.header))
    return EXIT_OK


def _cmd_disc(args) -> int:
    started = time.perf_counter()
    ps, digest = _read_points(args.file)
    params = {
        "budget": args.budget,
        "mesh": args.mesh,
        "sample": args.sample,
        "seed": args.seed,
        "threads": _thread_count(args),
    }
    if args.sample is not None:
        res = lower_bound_sample(ps, args.sample, args.seed)
        results = {
            "lower_bound": True,
            "value": res.value,
            "witness": _box_coords(res.box),
            "side": res.side.value,
            "n": ps.n,
            "d": ps.dim,
        }
        _emit_report("disc", digest, params, results, started)
        return EXIT_OK

    exact = star_discrepancy_exact(ps, budget=args.budget, threads=_thread_count(args))
    results = {
        "value": exact.value,
        "witness": _box_coords(exact.witness),
        "side": exact.side.value,
        "n": ps.n,
        "d": ps.dim,
    }
    agree = True
    if args.mesh is not None:
        oracle_value = star_discrepancy_oracle(ps, args.mesh, budget=args.budget)
        agree = abs(oracle_value - exact.value) <= ORACLE_TOLERANCE
        results["oracle_value"] = oracle_value
        results["oracle_agrees"] = agree
    _emit_report("disc", digest, params, results, started)
    if not agree:
        print("error: mesh oracle disagrees with exact enumeration", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _partition_results(cert) -> dict | None:
    part = cert.partition
    if part is None:
        return None
    return {
        "p0": len(part.p0),
        "p1": len(part.p1),
        "p2": len(part.p2),
        "c_set": sorted(part.c_set),
    }


def _trace_results(cert) -> dict | None:
    trace = cert.trace
    if trace is None:
        return None
    return {
        "m_big": trace.m_big,
        "k": trace.k,
        "q": f"{trace.q.numerator}/{trace.q.denominator}",
        "dims": [s.dim for s in trace.steps],
        "steps": [
            {"dim": s.dim, "count": s.count, "removed": list(s.removed)} for s in trace.steps
        ],
    }


def _cmd_witness(args) -> int:
    started = time.perf_counter()
    ps, digest = _read_points(args.file)
    cert = lower_bound_witness(ps)
    results = {
        "case": cert.case_label.value,
        "n": ps.n,
        "d": ps.dim,
        "kappa": cert.kappa,
        "partition": _partition_results(cert),
        "trace": _trace_results(cert),
        "boxes": [_box_coords(b) for b in cert.boxes],
        "best": _box_coords(cert.best),
        "measured": cert.measured,
        "guaranteed": cert.guaranteed,
        "guarantee_valid": cert.guarantee_valid,
        "margin": cert.measured - cert.guaranteed,
    }
    _emit_report("witness", digest, {}, results, started)
    return EXIT_OK


def _cmd_shatter(args) -> int:
    started = time.perf_counter()
    ps, digest = _read_points(args.file)
    rep = shatter_report(ps, budget=args.budget)
    results = {
        "count": rep.count,
        "includes_empty": rep.includes_empty,
        "sauer_bound": rep.sauer_bound,
        "max_boundary": rep.max_boundary,
        "max_boundary_box": _box_coords(rep.max_boundary_box),
        "n": ps.n,
        "d": ps.dim,
    }
    _emit_report("shatter", digest, {"budget": args.budget}, results, started)
    return EXIT_OK


def _cmd_boundary(args) -> int:
    started = time.perf_counter()
    ps, digest = _read_points(args.file)
    box, count = max_boundary_box(ps, budget=args.budget)
    results = {
        "max_boundary": count,
        "max_boundary_box": _box_coords(box),
        "n": ps.n,
        "d": ps.dim,
    }
    if args.r is not None:
        r = Fraction(args.r)
        results["r"] = str(r)
        results["sparse_boundary"] = Fraction(count) < r
    _emit_report("boundary", digest, {"budget": args.budget, "r": args.r}, results, started)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    started = time.perf_counter()
    table = bounds_table(args.n, args.d, args.r)
    results = {
        "n": table.n,
        "d": table.d,
        "r": table.r,
        "sauer": table.sauer,
        "recursion": table.recursion,
        "restricted": table.restricted,
        "factored": table.factored,
        "growth": table.growth,
        "binom_sum": table.binom_sum,
        "sparse_lower_bound": table.sparse_lower_bound,
        "epsilon": table.epsilon,
        "packing_ok": table.packing_ok,
    }
    _emit_report("bounds", None, {"n": args.n, "d": args.d, "r": args.r}, results, started)
    return EXIT_OK


def _cmd_check(args) -> int:
    started = time.perf_counter()
    grid_q = args.grid_q if args.grid_q is not None else args.grid
    bern = check_bernoulli_inequality(args.grid, args.grid)
    rat = check_case3_rational(grid_q)
    results = {
        "bernoulli": {
            "min_value": bern.min_value,
            "location": list(bern.location),
            "threshold": bern.threshold,
            "verified": bern.verified,
        },
        "case3_rational": {
            "min_value": rat.min_value,
            "location": list(rat.location),
            "threshold": rat.threshold,
            "verified": rat.verified,
        },
    }
    _emit_report("check", None, {"grid": args.grid, "grid_q": grid_q}, results, started)
    return EXIT_OK if (bern.verified and rat.verified) else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# verification suites


def _instance(name: str, passed: bool, **extra) -> dict:
    rec = {"name": name, "passed": bool(passed)}
    rec.update(extra)
    return rec


def _suite_figure1() -> list[dict]:
    chain = gen_chain(9, 2)
    stair = gen_staircase(9)
    out = []
    for name, ps, expected in (
        ("shatter_count(chain(9,2))", chain, 10),
        ("shatter_count(staircase(9))", stair, 46),
    ):
        observed = shatter_count(ps)
        out.append(_instance(name, observed == expected, observed=observed, expected=expected))
    for name, ps, expected in (
        ("max_boundary(chain(9,2))", chain, 1),
        ("max_boundary(staircase(9))", stair, 2),
    ):
        _, observed = max_boundary_box(ps)
        out.append(_instance(name, observed == expected, observed=observed, expected=expected))
    return out


def _suite_theorem1(seeds: int) -> list[dict]:
    out = []
    families: list[tuple[str, PointSet]] = [
        ("chain(500,2)", gen_chain(500, 2)),
        ("staircase(500)", gen_staircase(500)),
        ("lattice(23,2)", gen_lattice(23, 2)),
        ("halton(500,2)", gen_halton(500, 2)),
    ]
    families += [(f"random(500,2,seed={s})", gen_random(500, 2, s)) for s in range(1, seeds + 1)]
    for name, ps in families:
        bound = ps.dim / (12.0 * ps.n)
        cert = lower_bound_witness(ps)
        exact = star_discrepancy_exact(ps)
        passed = cert.guarantee_valid and cert.measured >= bound and exact.value >= bound
        out.append(
            _instance(
                name,
                passed,
                check="witness and exact vs d/(12n)",
                bound=bound,
                measured=cert.measured,
                exact=exact.value,
                case=cert.case_label.value,
                margin=min(cert.measured, exact.value) - bound,
            )
        )
    for s in range(1, min(seeds, 20) + 1):
        ps = gen_random(750, 3, s)
        bound = ps.dim / (12.0 * ps.n)
        cert = lower_bound_witness(ps)
        passed = cert.guarantee_valid and cert.measured >= bound
        out.append(
            _instance(
                f"random(750,3,seed={s})",
                passed,
                check="witness vs d/(12n)",
                bound=bound,
                measured=cert.measured,
                case=cert.case_label.value,
                margin=cert.measured - bound,
            )
        )
    return out


def _suite_theorem2() -> list[dict]:
    out = []
    for d in (2, 4, 8):
        for n in (4, 9, 16):
            chain = gen_chain(n, d)
            sparse = has_sparse_boundary(chain, 2)
            count = shatter_count(chain)
            out.append(
                _instance(
                    f"chain({n},{d}) boundary sparse at r=2",
                    sparse and count == n + 1,
                    sparse=sparse,
                    shatter=count,
                    expected_shatter=n + 1,
                )
            )
    out.append(
        _instance(
            "staircase(9) violates sparsity at r=2",
            not has_sparse_boundary(gen_staircase(9), 2),
        )
    )
    ps = gen_chain(16, 8)
    bound = sparse_boundary_lower_bound(16, 8)
    lb = lower_bound_sample(ps, budget=100_000, seed=1)
    out.append(
        _instance(
            "chain(16,8) sampled lower bound vs d^(3/4)/(372 n^(3/4))",
            lb.value >= bound,
            bound=bound,
            sampled=lb.value,
            margin_ratio=lb.value / bound,
        )
    )
    failures = []
    for d in range(1, 17):
        for n in (d, 2 * d, 10 * d, 100 * d):
            if not packing_condition(n, d, packing_epsilon(n, d)):
                failures.append((n, d))
    out.append(
        _instance(
            "packing condition at the chosen epsilon, d <= 16 sweep",
            not failures,
            failing=failures,
        )
    )
    return out


def _suite_bounds() -> list[dict]:
    out = []
    mismatches = [
        (n, d)
        for n in range(1, 31)
        for d in range(1, 11)
        if shatter_recursion(n, d) != sauer_shelah(n, d)
    ]
    out.append(
        _instance(
            "recursion solution equals binomial sum (n<=30, d<=10)",
            not mismatches,
            mismatches=mismatches,
        )
    )
    for d in range(1, 17):
        for n in (d, 2 * d, 10 * d, 100 * d):
            r = -(-d // 4)
            restricted = restricted_shatter_bound(n, d, r)
            checks = {
                "sauer<=binom_sum": float(sauer_shelah(n, d)) <= binomial_sum_bound(n, d),
                "restricted<=factored": restricted <= factored_shatter_bound(n, d, r),
                "restricted<=growth": float(restricted) <= growth_bound(n, d),
                "packing_ok": packing_condition(n, d, packing_epsilon(n, d)),
            }
            out.append(
                _instance(
                    f"bound chain n={n} d={d} r={r}",
                    all(checks.values()),
                    **checks,
                )
            )
    return out


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.suite == "figure1":
        instances = _suite_figure1()
    elif args.suite == "theorem1":
        instances = _suite_theorem1(args.seeds)
    elif args.suite == "theorem2":
        instances = _suite_theorem2()
    else:
        instances = _suite_bounds()
    all_pass = all(inst["passed"] for inst in instances)
    results = {
        "suite": args.suite,
        "instances": instances,
        "total": len(instances),
        "failed": sum(1 for inst in instances if not inst["passed"]),
        "all_passed": all_pass,
    }
    _emit_report("verify", None, {"suite": args.suite, "seeds": args.seeds}, results, started)
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def _add_points_arg(p: argparse.ArgumentParser):
    p.add_argument("file", help="points file path, or '-' for standard input")


def _add_budget_arg(p: argparse.ArgumentParser):
    p.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_CELL_BUDGET,
        help="enumeration budget in grid cells / work units",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stardisc",
        description="Exact star discrepancy, lower-bound witnesses, and "
        "combinatorial complexity of point sets in the unit cube.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a point set on standard output")
    p.add_argument(
        "--kind",
        required=True,
        choices=["chain", "staircase", "random", "random_uniform", "lattice", "halton"],
    )
    p.add_argument("--n", type=int, help="number of points")
    p.add_argument("--d", type=int, help="dimension")
    p.add_argument("--seed", type=int, help="seed (random kind)")
    p.add_argument("--m", type=int, help="per-axis resolution (lattice kind; n = m^d)")
    p.add_argument("--bases", type=int, nargs="+", help="radical-inverse bases (halton kind)")
    p.add_argument("--header", action="store_true", help="emit the '# d=.. n=..' header line")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("disc", help="exact star discrepancy of a points file")
    _add_points_arg(p)
    _add_budget_arg(p)
    p.add_argument("--mesh", type=int, help="also run the independent mesh oracle")
    p.add_argument("--sample", type=int, help="sampled lower bound with this many corners")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--threads", type=int, help=f"worker threads (default ${THREADS_ENV_VAR} or 1)")
    p.set_defaults(func=_cmd_disc)

    p = sub.add_parser("witness", help="lower-bound witness certificate")
    _add_points_arg(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("shatter", help="exact box-cut subset count")
    _add_points_arg(p)
    _add_budget_arg(p)
    p.set_defaults(func=_cmd_shatter)

    p = sub.add_parser("boundary", help="maximal right-upper boundary count")
    _add_points_arg(p)
    _add_budget_arg(p)
    p.add_argument("--r", help="sparsity threshold (int, decimal, or p/q)")
    p.set_defaults(func=_cmd_boundary)

    p = sub.add_parser("bounds", help="counting-bound table for one (n, d, r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("check", help="grid verification of the two scalar inequalities")
    p.add_argument("--grid", type=int, default=2001, help="grid points per axis")
    p.add_argument("--grid-q", type=int, default=None, help="grid points for the q scan")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="batch verification suites")
    p.add_argument("--suite", required=True, choices=["theorem1", "theorem2", "figure1", "bounds"])
    p.add_argument("--seeds", type=int, default=50, help="number of random instances")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PointsFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        hint = " (try --sample for a heuristic lower bound)" if args.command == "disc" else ""
        print(f"error: {exc}{hint}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
