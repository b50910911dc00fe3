"""Command line surface.

Machine-readable JSON records go to stdout, one per line; human summaries go
to stderr so the two streams never mix.  Exit codes: 0 success, 1 when a
result fails verification (counterexample, invariant violation, failed
self-check), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from kwaycut import generators, kernels
from kwaycut.errors import (
    CapacityError,
    GadgetConstructionError,
    InputError,
    KwaycutError,
    ParseError,
    SelfCheckError,
)
from kwaycut.fileformats import (
    SolutionRecord,
    emit_instance,
    instance_sha256,
    parse_instance,
)
from kwaycut.graph import (
    Graph,
    components_after_vertex_deletion,
    count_small_components,
    pairwise_connectivity,
)
from kwaycut.reduction import VARIANTS, build_gadget, verify_cut_equivalence
from kwaycut.solvers import (
    branch_and_bound_kvcp,
    brute_force_cnp,
    brute_force_kvcp,
    brute_force_kvcp_weighted,
    brute_force_small_components,
    greedy_kvcp,
)
from kwaycut.splitgraphs import (
    check_cnp_equivalence,
    complete_bipartite_sides,
    recognize_split,
    residual_shape,
    solve_complete_bipartite,
    solve_split,
)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _read_instance(spec: str) -> Graph:
    if spec == "-":
        return parse_instance(sys.stdin.read())
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise InputError(f"cannot read instance file {spec}: {exc}") from exc
    return parse_instance(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kwaycut",
        description="Exact solvers and verified reductions for vertex deletion problems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance")
    p_solve.add_argument("instance", help="instance file, or - for stdin")
    p_solve.add_argument(
        "--objective",
        choices=["components", "pairwise", "small-components"],
        default="components",
    )
    p_solve.add_argument("--budget", required=True, help="deletion budget (rational when --weighted)")
    p_solve.add_argument("--threshold", type=int, help="component size bound for small-components")
    p_solve.add_argument("--weighted", action="store_true", help="budget counts vertex weight")
    p_solve.add_argument("--solver", choices=["brute", "bnb", "greedy", "auto"], default="auto")
    p_solve.add_argument("--time-limit", type=float, help="seconds before bnb returns best-so-far")

    p_reduce = sub.add_parser("reduce", help="transform an edge-deletion instance to vertex deletion")
    p_reduce.add_argument("instance", help="instance file, or - for stdin")
    p_reduce.add_argument("--budget", type=int, required=True)
    p_reduce.add_argument("--variant", choices=list(VARIANTS), default="braced")
    p_reduce.add_argument("--output", help="write the transformed instance here instead of stdout")
    p_reduce.add_argument("--emit-mapping", help="write the midpoint/edge table to this file")
    p_reduce.add_argument(
        "--no-validate", action="store_true", help="skip the structural invariant checks"
    )

    p_verify = sub.add_parser("verify", help="sweep random instances against the dual brute force")
    p_verify.add_argument(
        "--theorem",
        choices=["1", "2"],
        required=True,
        help="1: edge-cut/vertex-cut reduction equivalence; 2: split-graph objective equivalence",
    )
    p_verify.add_argument("--max-n", type=int, default=5)
    p_verify.add_argument("--trials", type=int, default=25)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--variant", choices=list(VARIANTS), default="braced")

    p_gen = sub.add_parser("gen", help="generate a seeded instance")
    p_gen.add_argument(
        "--kind",
        required=True,
        choices=["gnp", "bipartite", "split", "complete-bipartite", "path", "star", "cycle"],
    )
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--n1", type=int)
    p_gen.add_argument("--n2", type=int)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--output", help="write the instance here instead of stdout")

    p_bench = sub.add_parser("bench", help="time the pure and compiled kernels on one scan")
    p_bench.add_argument("--n", type=int, default=18)
    p_bench.add_argument("--p", type=float, default=0.25)
    p_bench.add_argument("--budget", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--repeats", type=int, default=3)

    return parser


def _cmd_solve(args) -> int:
    g = _read_instance(args.instance)
    if args.weighted and args.objective != "components":
        raise InputError("--weighted applies to the components objective only")
    if args.threshold is not None and args.objective != "small-components":
        raise InputError("--threshold applies to the small-components objective only")

    try:
        budget = Fraction(args.budget) if args.weighted else Fraction(int(args.budget))
    except ValueError:
        raise InputError(f"bad budget {args.budget!r}") from None
    k = int(budget) if budget.denominator == 1 else None

    start = time.perf_counter()
    extra: dict = {}

    if args.objective == "components":
        if args.weighted:
            if args.solver not in ("auto", "brute"):
                raise InputError("weighted solving is exhaustive; use --solver brute or auto")
            sol = brute_force_kvcp_weighted(g, budget)
            solver_name = "brute-weighted"
            extra["weight_used"] = sol.weight_used
        else:
            if k is None:
                raise InputError("budget must be an integer without --weighted")
            if args.solver == "brute":
                sol, solver_name = brute_force_kvcp(g, k), "brute"
            elif args.solver == "bnb":
                sol, solver_name = branch_and_bound_kvcp(g, k, time_limit=args.time_limit), "bnb"
            elif args.solver == "greedy":
                sol, solver_name = greedy_kvcp(g, k), "greedy"
            else:
                sides = complete_bipartite_sides(g)
                sp = None if sides else recognize_split(g)
                if sides is not None:
                    sol, solver_name = solve_complete_bipartite(g, k), "complete-bipartite"
                elif sp is not None:
                    sol, solver_name = solve_split(g, sp, k), "split"
                else:
                    sol, solver_name = branch_and_bound_kvcp(g, k, time_limit=args.time_limit), "bnb"
        chosen = sol.vertices
        value = sol.component_count
        optimal = sol.optimal
        if sol.pairwise is not None:
            extra["pairwise"] = sol.pairwise

        check = components_after_vertex_deletion(g, chosen)
        if check.count != value:
            raise SelfCheckError(
                f"reported {value} components but re-evaluation gives {check.count}"
            )
        spent = g.total_weight(chosen) if args.weighted else Fraction(len(chosen))
        if spent > budget:
            raise SelfCheckError(f"chosen set spends {spent} of budget {budget}")

    elif args.objective == "pairwise":
        if args.solver not in ("auto", "brute"):
            raise InputError("the pairwise objective is solved exhaustively; use brute or auto")
        if k is None:
            raise InputError("budget must be an integer for the pairwise objective")
        cnp = brute_force_cnp(g, k)
        chosen, value, optimal, solver_name = cnp.vertices, cnp.pairwise_connectivity, cnp.optimal, "brute"
        if pairwise_connectivity(g, chosen) != value or len(chosen) > k:
            raise SelfCheckError("pairwise re-evaluation mismatch")

    else:
        if args.solver not in ("auto", "brute"):
            raise InputError("the small-components objective is solved exhaustively; use brute or auto")
        if k is None:
            raise InputError("budget must be an integer for the small-components objective")
        c = args.threshold if args.threshold is not None else max(g.n, 1)
        sc = brute_force_small_components(g, k, c)
        chosen, value, optimal, solver_name = sc.vertices, sc.small_component_count, sc.optimal, "brute"
        extra["threshold"] = c
        if count_small_components(g, chosen, c) != value or len(chosen) > k:
            raise SelfCheckError("small-components re-evaluation mismatch")

    record = SolutionRecord(
        instance=instance_sha256(g),
        objective=args.objective,
        solver=solver_name,
        budget=budget if budget.denominator != 1 else int(budget),
        chosen=tuple(chosen),
        value=value,
        optimal=optimal,
        wall_time=time.perf_counter() - start,
        extra=extra,
    )
    print(record.as_json())
    _say(
        f"{args.objective} = {value} with set {list(chosen)}"
        f" ({'optimal' if optimal else 'not proven optimal'}, {solver_name})"
    )
    return 0


def _cmd_reduce(args) -> int:
    g = _read_instance(args.instance)
    gi = build_gadget(g, args.budget, variant=args.variant, validate=not args.no_validate)
    text = emit_instance(gi.graph)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.emit_mapping:
        lines = ["# midpoint origin_u origin_v"]
        lines.extend(f"{x} {u} {v}" for x, (u, v) in sorted(gi.edge_of.items()))
        Path(args.emit_mapping).write_text("\n".join(lines) + "\n")
    _say(
        f"variant {gi.variant}: {g.n} vertices, {g.m} edges ->"
        f" {gi.graph.n} vertices, {gi.graph.m} edges, {len(gi.midpoints)} midpoints"
    )
    return 0


def _verify_reduction(args) -> int:
    rng = random.Random(args.seed)
    checks = failures = 0
    for _ in range(args.trials):
        n = rng.randint(2, max(args.max_n, 2))
        p = rng.uniform(0.4, 0.9)
        g = None
        for _ in range(200):
            candidate = generators.connected_gnp(n, p, seed=rng.getrandbits(32))
            if candidate.m <= 10:
                g = candidate
                break
        if g is None:
            continue
        for k in range(1, min(g.m, 4) + 1):
            rep = verify_cut_equivalence(g, k, variant=args.variant, seed=rng.getrandbits(32))
            checks += 1
            ok = rep.ok
            if not ok:
                failures += 1
            print(
                json.dumps(
                    {
                        "check": "reduction-equivalence",
                        "n": g.n,
                        "m": g.m,
                        "budget": k,
                        "variant": rep.variant,
                        "edge_value": rep.best_edge_value,
                        "vertex_value": rep.best_vertex_value,
                        "unrestricted_value": rep.unrestricted_value,
                        "ok": ok,
                        "witness": rep.witness,
                    },
                    sort_keys=True,
                )
            )
    print(json.dumps({"check": "summary", "checks": checks, "failures": failures}, sort_keys=True))
    _say(f"reduction equivalence: {checks} checks, {failures} failures")
    return 1 if failures else 0


def _verify_split(args) -> int:
    rng = random.Random(args.seed)
    checks = failures = 0
    for _ in range(args.trials):
        total = max(args.max_n, 3)
        n2 = rng.randint(1, total - 1)
        n1 = rng.randint(1, total - n2)
        g = generators.split(n1, n2, rng.uniform(0.3, 0.9), seed=rng.getrandbits(32))
        sp = recognize_split(g)
        if sp is None:
            failures += 1
            checks += 1
            print(json.dumps({"check": "split-recognition", "n": g.n, "ok": False}, sort_keys=True))
            continue
        k = rng.randint(0, g.n)
        sol = solve_split(g, sp, k)
        oracle = brute_force_kvcp(g, k)
        eq = check_cnp_equivalence(g, sp, k)
        shape_ok = True
        for _ in range(20):
            size = rng.randint(0, g.n)
            s = rng.sample(range(g.n), size)
            if not residual_shape(g, sp, s).conforms:
                shape_ok = False
                break
        ok = (
            sol.component_count == oracle.component_count
            and eq.some_shared
            and shape_ok
        )
        checks += 1
        if not ok:
            failures += 1
        print(
            json.dumps(
                {
                    "check": "split-equivalence",
                    "n": g.n,
                    "budget": k,
                    "split_value": sol.component_count,
                    "oracle_value": oracle.component_count,
                    "shared_optimum": list(eq.shared_optimum) if eq.shared_optimum else None,
                    "every_cnp_is_kvcp": eq.every_cnp_is_kvcp,
                    "every_kvcp_is_cnp": eq.every_kvcp_is_cnp,
                    "shape_ok": shape_ok,
                    "ok": ok,
                },
                sort_keys=True,
            )
        )
    print(json.dumps({"check": "summary", "checks": checks, "failures": failures}, sort_keys=True))
    _say(f"split equivalence: {checks} checks, {failures} failures")
    return 1 if failures else 0


def _cmd_gen(args) -> int:
    params = {
        name: getattr(args, name)
        for name in ("n", "n1", "n2", "p")
        if getattr(args, name) is not None
    }
    g = generators.generate(args.kind, seed=args.seed, **params)
    text = emit_instance(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    _say(f"{args.kind}: n={g.n} m={g.m} seed={args.seed}")
    return 0


def _cmd_bench(args) -> int:
    g = generators.gnp(args.n, args.p, seed=args.seed)
    result = kernels.benchmark(g.adjacency_masks, g.n, args.budget, repeats=args.repeats)
    print(json.dumps(result, sort_keys=True))
    if result["compiled_seconds"] is None:
        _say("compiled kernel unavailable; timed the pure kernel only")
    else:
        _say(
            f"pure {result['pure_seconds']:.4f}s, compiled {result['compiled_seconds']:.4f}s,"
            f" speedup x{result['speedup']:.1f}"
        )
    return 0 if result["results_agree"] else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "verify":
            return _verify_reduction(args) if args.theorem == "1" else _verify_split(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_bench(args)
    except (ParseError, InputError, CapacityError) as exc:
        _say(f"error: {exc}")
        return 2
    except (SelfCheckError, GadgetConstructionError) as exc:
        _say(f"failure: {exc}")
        return 1
    except KwaycutError as exc:
        _say(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
