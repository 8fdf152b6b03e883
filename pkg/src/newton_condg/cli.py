"""Command-line harness: single solves, benchmark sweeps, radius calculators.

Exit codes: 0 on success/convergence, 1 when the solver reports a failure
status, 2 on usage errors. Benchmark CSV columns are fixed as
problem,n,gamma,method,iters,final_norm_inf,status,wall_ms with the residual
in scientific notation (6 significant digits); row order is lexicographic in
(problem, gamma, method) regardless of --jobs, so output bytes are stable
apart from the wall_ms column.
"""

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .bench import PAPER_CORE, REGISTRY, SYNTHETIC, make_problem, starting_point
from .core import CONVERGED, SolverConfig, TheoryParams
from .linsolve import AdaptiveEta, ConstantEta
from .solver import solve
from .theory import holder_radius, smale_radius

CSV_HEADER = "problem,n,gamma,method,iters,final_norm_inf,status,wall_ms"

METHOD_TO_STRATEGY = {
    "exact": "exact",
    "fd": "finite_difference",
    "schubert": "schubert",
}


@dataclass
class RunRow:
    """One benchmark-table row."""

    problem: str
    n: int
    gamma: int
    method: str
    iters: int
    final_norm_inf: float
    status: str
    wall_ms: float

    def to_csv(self):
        return (
            f"{self.problem},{self.n},{self.gamma},{self.method},{self.iters},"
            f"{self.final_norm_inf:.5e},{self.status},{self.wall_ms:.3f}"
        )


def _parse_eta_policy(text):
    """'constant:0.1' or 'adaptive:<c>,<eta_max>'."""
    kind, _, rest = text.partition(":")
    if kind == "constant":
        return ConstantEta(float(rest)) if rest else ConstantEta()
    if kind == "adaptive":
        if rest:
            c, _, eta_max = rest.partition(",")
            return AdaptiveEta(float(c), float(eta_max) if eta_max else 0.1)
        return AdaptiveEta()
    raise ValueError(f"unknown eta policy {text!r}")


def _config_from_args(args, method):
    return SolverConfig(
        tol_inf=args.tol,
        max_outer=args.max_iter,
        theta=args.theta,
        max_condg=args.max_condg,
        jacobian_strategy=METHOD_TO_STRATEGY[method],
        refresh_period=args.refresh,
        linsolve=args.linsolve,
        eta_policy=_parse_eta_policy(args.eta_policy) if args.linsolve == "inexact" else None,
    )


def _run_one(problem_id, n, gamma, method, args):
    n = n if n is not None else REGISTRY[problem_id].default_n
    start = time.perf_counter()
    try:  # never abort a sweep on one bad row
        problem = make_problem(problem_id, n)
        x0 = starting_point(problem, gamma)
        config = _config_from_args(args, method)
        report = solve(problem, x0, config)
        status = report.status
        iters = report.iterations
        final = report.residual_norms[-1]
    except Exception:
        status, iters, final, report = "error", 0, math.nan, None
    wall_ms = 1000.0 * (time.perf_counter() - start)
    row = RunRow(
        problem=problem_id, n=n, gamma=gamma, method=method,
        iters=iters, final_norm_inf=final, status=status, wall_ms=wall_ms,
    )
    return row, report


def _check_solver_flags(args, parser):
    try:
        _parse_eta_policy(args.eta_policy)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_solve(args, parser):
    if args.problem not in REGISTRY:
        parser.error(f"unknown problem {args.problem!r}")
    if args.n is not None and args.n < 2:
        parser.error("--n must be >= 2")
    _check_solver_flags(args, parser)
    row, report = _run_one(args.problem, args.n, args.gamma, args.method, args)
    out_text = (
        json.dumps(asdict(row), indent=2)
        if args.format == "json"
        else CSV_HEADER + "\n" + row.to_csv() + "\n"
    )
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out_text if out_text.endswith("\n") else out_text + "\n")
    else:
        sys.stdout.write(out_text if out_text.endswith("\n") else out_text + "\n")
    if args.trace and report is not None:
        payload = {
            "status": report.status,
            "x0_projected": report.x0_projected,
            "iterates": [list(map(float, it)) for it in report.iterates],
            "residual_norms": list(map(float, report.residual_norms)),
            "condg_iters": list(map(int, report.condg_iters)),
            "newton_steps": list(map(float, report.newton_steps)),
        }
        with open(args.trace, "w") as fh:
            json.dump(payload, fh)
    return 0 if row.status == CONVERGED else 1


def suite_runs(suite, methods, gammas):
    """Deterministic (problem, n, gamma, method) grid of a named suite."""
    if suite == "paper-core":
        ids = PAPER_CORE
    elif suite == "synthetic":
        ids = SYNTHETIC
    elif suite == "all":
        ids = tuple(REGISTRY)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    runs = [
        (pid, REGISTRY[pid].default_n, gamma, method)
        for pid in ids
        for gamma in gammas
        for method in methods
    ]
    runs.sort(key=lambda r: (r[0], r[2], r[3]))
    return runs


def cmd_benchmark(args, parser):
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in METHOD_TO_STRATEGY:
            parser.error(f"unknown method {m!r}")
    gammas = [int(g) for g in args.gammas.split(",") if g.strip()]
    _check_solver_flags(args, parser)
    try:
        runs = suite_runs(args.suite, methods, gammas)
    except ValueError as exc:
        parser.error(str(exc))

    def job(run):
        pid, n, gamma, method = run
        row, _ = _run_one(pid, n, gamma, method, args)
        return row

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(job, runs))
    else:
        rows = [job(run) for run in runs]
    rows.sort(key=lambda r: (r.problem, r.gamma, r.method))

    lines = [CSV_HEADER] + [row.to_csv() for row in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_radius(args, parser):
    theory = TheoryParams(
        omega1=args.omega1, omega2=args.omega2, vartheta=args.vartheta, lam=args.lam
    )
    try:
        if args.kind == "holder":
            if args.K is None or args.p is None:
                parser.error("--kind holder needs --K and --p")
            breakdown = holder_radius(args.K, args.p, theory, kappa=args.kappa)
        else:
            if args.gamma is None:
                parser.error("--kind smale needs --gamma")
            breakdown = smale_radius(args.gamma, theory, kappa=args.kappa)
    except ValueError as exc:
        parser.error(str(exc))
    for label, value in (
        ("nu", breakdown.nu), ("rho", breakdown.rho), ("sigma", breakdown.sigma)
    ):
        sys.stdout.write(f"{label} = {value:.12g}\n")
    return 0


def cmd_list_problems(args, parser):
    for entry in REGISTRY.values():
        sys.stdout.write(
            f"{entry.id}  n={entry.default_n}  box=[{entry.box[0]:g},{entry.box[1]:g}]"
            f"  {entry.description}\n"
        )
    return 0


def _add_solver_flags(sub):
    sub.add_argument("--tol", type=float, default=1e-6)
    sub.add_argument("--max-iter", type=int, default=300, dest="max_iter")
    sub.add_argument("--theta", type=float, default=1e-5)
    sub.add_argument("--max-condg", type=int, default=300, dest="max_condg")
    sub.add_argument("--refresh", type=int, default=5)
    sub.add_argument("--linsolve", choices=("direct", "inexact"), default="direct")
    sub.add_argument("--eta-policy", default="constant:0.1", dest="eta_policy")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="newton-condg",
        description="Constrained nonlinear-system solver and benchmark harness.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_solve = subs.add_parser("solve", help="run one problem instance")
    p_solve.add_argument("--problem", required=True)
    p_solve.add_argument("--n", type=int, default=None)
    p_solve.add_argument("--gamma", type=int, choices=(0, 1, 2, 3), default=1)
    p_solve.add_argument("--method", choices=tuple(METHOD_TO_STRATEGY), default="fd")
    _add_solver_flags(p_solve)
    p_solve.add_argument("--out", default=None)
    p_solve.add_argument("--format", choices=("csv", "json"), default="csv")
    p_solve.add_argument("--trace", default=None,
                         help="write the full iterate/residual history as JSON")

    p_bench = subs.add_parser("benchmark", help="run a suite and emit a CSV table")
    p_bench.add_argument("--suite", choices=("paper-core", "all", "synthetic"),
                         default="paper-core")
    p_bench.add_argument("--methods", default="fd,schubert")
    p_bench.add_argument("--gammas", default="1,2,3")
    _add_solver_flags(p_bench)
    p_bench.add_argument("--out", default=None)
    p_bench.add_argument("--jobs", type=int, default=1)

    p_rad = subs.add_parser("radius", help="convergence-radius calculator")
    p_rad.add_argument("--kind", choices=("holder", "smale"), required=True)
    p_rad.add_argument("--K", type=float, default=None)
    p_rad.add_argument("--p", type=float, default=None)
    p_rad.add_argument("--gamma", type=float, default=None)
    p_rad.add_argument("--omega1", type=float, default=1.0)
    p_rad.add_argument("--omega2", type=float, default=0.0)
    p_rad.add_argument("--vartheta", type=float, default=0.0)
    p_rad.add_argument("--lambda", type=float, default=0.0, dest="lam")
    p_rad.add_argument("--kappa", type=float, default=math.inf)

    subs.add_parser("list-problems", help="enumerate the problem registry")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": cmd_solve,
        "benchmark": cmd_benchmark,
        "radius": cmd_radius,
        "list-problems": cmd_list_problems,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
