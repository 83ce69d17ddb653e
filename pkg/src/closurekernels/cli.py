"""Command-line front end.

Subcommands: params (parameter report), kernel (run a reduction pipeline and
emit the reduced instance plus a JSON trace), solve (exact oracle answer with
a validated witness), verify (randomized cross-checking suites), generate
(instance families, including the hard-instance constructions).

Exit codes are a stable contract: 0 success or decided, 1 verification suite
failure, 2 usage error (including kind mismatches and oracle cap overruns),
3 instance parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from dataclasses import replace
from itertools import combinations

from .capvc import CapVcInstance, kernelize_capvc
from .closure import (
    closure_number,
    count_maximal_cliques,
    degeneracy,
    neighborhood_class_bound,
    weak_closure_ordering,
)
from .convc import (
    AnnotatedConVcInstance,
    CocInstance,
    ConVcInstance,
    Decided,
    attach_leaves,
    kernelize_coc,
    kernelize_convc,
    kernelize_convc_annotated,
    twin_classes,
)
from .domset import DsDecided, DsInstance, is_split, kernelize_ds_split, split_partition
from .generators import (
    gen_capvc_lowerbound,
    gen_is_composition,
    gen_k_ab,
    gen_random_bipartite,
    gen_random_split,
    gen_random_weakly_closed,
)
from .graph import (
    Graph,
    clique_number,
    is_clique,
    is_connected_set,
    is_independent_set,
    is_vertex_cover,
)
from .induced_matching import ImDecided, ImInstance, kernelize_im
from .instance_io import (
    InstanceFile,
    ParseError,
    from_problem,
    parse_instance,
    to_problem,
    write_instance,
)
from .oracles import (
    OracleCapExceeded,
    capvc_assignment_feasible,
    coc_components_ok,
    is_dominating_set,
    is_induced_matching,
    solve_capvc_exact,
    solve_coc_exact,
    solve_convc_exact,
    solve_ds_exact,
    solve_im_exact,
    solve_is_exact,
    solve_multicolored_is_exact,
)
from . import verify as verify_mod

TRACE_SCHEMA_VERSION = 1

KERNEL_PROBLEMS = ("capvc", "convc", "coc", "im", "ds")
SOLVE_PROBLEMS = KERNEL_PROBLEMS + ("is",)


class UsageError(Exception):
    pass


def _read_instance(path: str) -> InstanceFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_instance(text)


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# params


def cmd_params(args) -> int:
    inst = _read_instance(args.path)
    g = inst.graph
    ordering = weak_closure_ordering(g)
    wc = ordering.weak_closure
    cl = closure_number(g)
    d = degeneracy(g)[0]
    lines = [
        f"n: {g.n}",
        f"m: {g.m}",
        f"closure: {cl}",
        f"weak-closure: {wc}",
        f"degeneracy: {d}",
    ]
    if g.n <= args.oracle_cap:
        lines.append(f"omega: {clique_number(g)}")
    else:
        lines.append(f"omega: skipped (n above --oracle-cap {args.oracle_cap})")
    lines.append(f"check weak-closure <= closure: {'ok' if wc <= cl else 'VIOLATED'}")
    lines.append(f"check weak-closure <= degeneracy + 1: {'ok' if wc <= d + 1 else 'VIOLATED'}")
    print("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# kernel


def _instance_facts(problem) -> dict:
    if isinstance(problem, CapVcInstance):
        return {"n": problem.graph.n, "m": problem.graph.m, "k": problem.k,
                "cap": list(problem.cap)}
    if isinstance(problem, AnnotatedConVcInstance):
        return {"n": problem.graph.n, "m": problem.graph.m, "k": problem.k,
                "red": sorted(problem.red)}
    if isinstance(problem, CocInstance):
        return {"n": problem.graph.n, "m": problem.graph.m, "k": problem.k,
                "ell": problem.ell}
    return {"n": problem.graph.n, "m": problem.graph.m, "k": problem.k}


_DECIDED_FILES = {
    ("convc", True): lambda: AnnotatedConVcInstance(Graph(0), frozenset(), 0),
    ("convc", False): lambda: AnnotatedConVcInstance(Graph(2, [(0, 1)]), frozenset(), 0),
    ("im", True): lambda: ImInstance(Graph(0), 0),
    ("im", False): lambda: ImInstance(Graph(1), 1),
    ("ds", True): lambda: DsInstance(Graph(0), 0),
    ("ds", False): lambda: DsInstance(Graph(1), 0),
}


def _bound_report(problem_name: str, mode: str, out) -> dict | None:
    """Size-bound verdict on the reduced instance, where a bound is tracked."""
    if isinstance(out, (Decided, ImDecided, DsDecided)):
        return {"verdict": "decided"}
    g = out.graph
    if problem_name == "capvc":
        wc = weak_closure_ordering(g).weak_closure
        mk = count_maximal_cliques(g)
        bound = out.k + neighborhood_class_bound(out.k, wc, out.k + 2, clique_count=mk)
        return {"name": "cover-plus-class-count", "value": bound, "measured": g.n,
                "verdict": "within" if g.n <= bound else "exceeded"}
    if problem_name == "convc" and isinstance(out, AnnotatedConVcInstance):
        cl = closure_number(g)
        bound = out.k + cl * out.k * (out.k - 1) // 2
        return {"name": "annotated-quadratic", "value": bound, "measured": g.n,
                "verdict": "within" if g.n < bound else "exceeded"}
    if problem_name == "convc" and mode == "gamma":
        wc = weak_closure_ordering(g).weak_closure
        mk = count_maximal_cliques(g)
        cap = max((len(c) for c in twin_classes(g)), default=1)
        bound = out.k + neighborhood_class_bound(out.k, wc, cap, clique_count=mk)
        return {"name": "cover-plus-class-count", "value": bound, "measured": g.n,
                "verdict": "within" if g.n <= bound else "exceeded"}
    if problem_name == "ds":
        part = split_partition(g)
        wc = weak_closure_ordering(g).weak_closure
        isize, csize = len(part.independent), len(part.clique)
        ibound = math.factorial(wc - 1) * (out.k + 2) ** (wc - 1)
        ok = isize < ibound and csize <= wc * isize + 1
        return {"name": "split-side-counts", "independent": isize,
                "independent_bound": ibound, "clique": csize,
                "clique_bound": wc * isize + 1,
                "verdict": "within" if ok else "exceeded"}
    return None


def cmd_kernel(args) -> int:
    inst = _read_instance(args.path)
    problem_name = args.problem or inst.kind
    if problem_name not in KERNEL_PROBLEMS:
        raise UsageError(f"no kernel pipeline for kind {problem_name!r}")
    if inst.kind != problem_name:
        raise UsageError(f"instance kind {inst.kind!r} does not match problem "
                         f"{problem_name!r}")
    problem = to_problem(inst)
    if args.k is not None:
        problem = replace(problem, k=args.k)
    if args.ell is not None:
        if problem_name != "coc":
            raise UsageError("--ell only applies to coc instances")
        problem = replace(problem, ell=args.ell)

    mode = args.mode
    if problem_name == "convc" and isinstance(problem, AnnotatedConVcInstance):
        out, rules = kernelize_convc_annotated(problem)
    elif problem_name == "convc" and mode == "c":
        lifted = AnnotatedConVcInstance(problem.graph, frozenset(), problem.k)
        out, rules = kernelize_convc_annotated(lifted)
    elif problem_name == "convc":
        out, rules = kernelize_convc(problem)
    elif problem_name == "capvc":
        out, rules = kernelize_capvc(problem)
    elif problem_name == "coc":
        out, rules = kernelize_coc(problem)
    elif problem_name == "im":
        out, rules = kernelize_im(problem)
    else:
        if not is_split(problem.graph):
            raise UsageError("ds kernel needs a split graph")
        out, rules = kernelize_ds_split(problem)

    g = problem.graph
    ordering = weak_closure_ordering(g)
    decided = None
    if isinstance(out, (Decided, ImDecided, DsDecided)):
        decided = {"answer": out.answer, "reason": out.reason}
        reduced_problem = _DECIDED_FILES[(problem_name, out.answer)]()
    elif problem_name == "convc" and mode == "c" \
            and not isinstance(problem, AnnotatedConVcInstance):
        # the closure-number route reduces in annotated form (the bound below
        # applies to that form) and hands back a plain instance with pendant
        # leaves standing in for the red marks
        reduced_problem = attach_leaves(out)
    else:
        reduced_problem = out

    trace = {
        "schema_version": TRACE_SCHEMA_VERSION,
        "problem": problem_name,
        "mode": mode if problem_name == "convc" else None,
        "input": _instance_facts(problem),
        "params": {
            "closure": closure_number(g),
            "weak_closure": ordering.weak_closure,
            "degeneracy": degeneracy(g)[0],
        },
        "rules": _jsonable(rules),
        "decided": decided,
        "output": _instance_facts(reduced_problem),
        "bound": _bound_report(problem_name, mode, out),
    }
    _emit(write_instance(from_problem(reduced_problem)), args.out)
    trace_text = json.dumps(trace, sort_keys=True, indent=2) + "\n"
    if args.trace is not None:
        with open(args.trace, "w", encoding="utf-8") as fh:
            fh.write(trace_text)
    if args.out is not None:
        applied = len(trace["rules"])
        tail = f", decided {'yes' if decided['answer'] else 'no'}" if decided else ""
        print(f"kernel: {applied} rule applications, "
              f"{g.n} -> {reduced_problem.graph.n} vertices{tail}")
    return 0


# ---------------------------------------------------------------------------
# solve


def _validated_witness(problem_name: str, problem, witness) -> list[str]:
    """Re-check the oracle's witness with independent predicates.

    Returns the witness file lines. Raises RuntimeError when validation
    fails, which would mean an oracle bug rather than bad input.
    """
    if problem_name == "im":
        edges = sorted(witness)
        if not is_induced_matching(problem.graph, edges) or len(edges) < problem.k:
            raise RuntimeError("witness failed validation")
        return [f"e {u} {v}" for u, v in edges]
    if problem_name == "is" and isinstance(problem, tuple):
        g, parts, k = problem
        chosen = sorted(witness)
        colored = len(parts) > 1
        enough = len(chosen) == len(parts) if colored else len(chosen) >= k
        if not (is_independent_set(g, chosen) and enough):
            raise RuntimeError("witness failed validation")
        return [f"v {v}" for v in chosen]
    g = problem.graph
    chosen = sorted(witness)
    ok = {
        "capvc": lambda: capvc_assignment_feasible(g, frozenset(chosen), problem.cap)
        and len(chosen) <= problem.k,
        "convc": lambda: is_vertex_cover(g, chosen) and is_connected_set(g, chosen)
        and len(chosen) <= problem.k
        and (not isinstance(problem, AnnotatedConVcInstance)
             or problem.red <= set(chosen)),
        "coc": lambda: is_connected_set(g, frozenset(chosen))
        and coc_components_ok(g, frozenset(chosen), problem.ell)
        and len(chosen) <= problem.k,
        "ds": lambda: is_dominating_set(g, chosen) and len(chosen) <= problem.k,
    }[problem_name]
    if not ok():
        raise RuntimeError("witness failed validation")
    return [f"v {v}" for v in chosen]


def cmd_solve(args) -> int:
    inst = _read_instance(args.path)
    problem_name = args.problem
    if inst.kind != problem_name:
        raise UsageError(f"instance kind {inst.kind!r} does not match problem "
                         f"{problem_name!r}")
    cap_n = args.oracle_cap
    cap_m = cap_n * (cap_n - 1) // 2
    problem = to_problem(inst)
    if args.k is not None:
        if problem_name == "is":
            problem = (problem[0], problem[1], args.k)
        else:
            problem = replace(problem, k=args.k)
    if args.ell is not None:
        if problem_name != "coc":
            raise UsageError("--ell only applies to coc instances")
        problem = replace(problem, ell=args.ell)

    try:
        if problem_name == "capvc":
            res = solve_capvc_exact(problem.graph, problem.cap, problem.k,
                                    max_n=cap_n, max_m=cap_m)
        elif problem_name == "convc":
            red = problem.red if isinstance(problem, AnnotatedConVcInstance) else frozenset()
            res = solve_convc_exact(problem.graph, problem.k,
                                    max_n=cap_n, max_m=cap_m, required=red)
        elif problem_name == "coc":
            res = solve_coc_exact(problem.graph, problem.ell, problem.k,
                                  max_n=cap_n, max_m=cap_m)
        elif problem_name == "im":
            res = solve_im_exact(problem.graph, problem.k, max_n=cap_n, max_m=cap_m)
        elif problem_name == "ds":
            res = solve_ds_exact(problem.graph, problem.k, max_n=cap_n, max_m=cap_m)
        else:
            g, parts, k = problem
            if len(parts) <= 1:
                res = solve_is_exact(g, k, max_n=cap_n, max_m=cap_m)
            else:
                res = solve_multicolored_is_exact(g, parts, max_n=cap_n, max_m=cap_m)
    except OracleCapExceeded as exc:
        raise UsageError(f"instance above the oracle size cap ({exc}); "
                         f"raise --oracle-cap to force the run") from exc

    print(f"answer: {'yes' if res.answer else 'no'}")
    if res.answer and res.witness is not None:
        lines = _validated_witness(problem_name, problem, res.witness)
        print(f"witness: {len(lines)} lines (validated)")
        if args.witness is not None:
            with open(args.witness, "w", encoding="utf-8") as fh:
                fh.write("c validated witness\n")
                fh.write("\n".join(lines) + "\n")
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    names = args.suite or list(verify_mod.SUITES)
    for name in names:
        if name not in verify_mod.SUITES:
            raise UsageError(f"unknown suite {name!r}; known: "
                             + ", ".join(verify_mod.SUITES))
    failed = False
    dumped = 0
    for name in names:
        result = verify_mod.run_suite(name, trials=args.trials, seed=args.seed)
        print(result.summary())
        for message in result.failures:
            print(f"  {message}")
        if not result.passed:
            failed = True
            os.makedirs(args.dump_dir, exist_ok=True)
            for artifact in result.artifacts:
                path = os.path.join(args.dump_dir, f"{result.name}-{dumped}.ck")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(write_instance(artifact))
                print(f"  counterexample written to {path}")
                dumped += 1
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# generate


def _random_triples(universe: int, count: int, seed: int) -> list[frozenset[int]]:
    pool = [frozenset(s) for s in combinations(range(universe), 3)]
    rng = random.Random(f"generate:capvc-hard:{universe}:{count}:{seed}")
    rng.shuffle(pool)
    return pool[:count]


def cmd_generate(args) -> int:
    family = args.family
    if family == "split":
        out = from_problem(gen_random_split(args.n, args.seed), kind="graph")
    elif family == "bipartite":
        out = from_problem(gen_random_bipartite(args.n, args.seed), kind="graph")
    elif family == "weakly-closed":
        g = gen_random_weakly_closed(args.n, args.gamma, args.seed)
        out = from_problem(g, kind="graph")
    elif family == "k-ab":
        out = from_problem(gen_k_ab(args.a, args.b), kind="graph")
    elif family == "capvc-hard":
        count = args.sets if args.sets is not None else 2 * args.k + 1
        fam = _random_triples(3 * args.k, count, args.seed)
        out = from_problem(gen_capvc_lowerbound(3 * args.k, fam, 3, args.k))
    elif family == "is-grid":
        size = args.t ** args.q
        pattern = args.pattern if args.pattern is not None else "0" * size
        if len(pattern) != size or set(pattern) - {"0", "1"}:
            raise UsageError(f"--pattern must be {size} characters of 0/1")
        yes = (Graph(1), [(0,)])
        no = (Graph(0), [()])
        instances = [yes if ch == "1" else no for ch in pattern]
        host, budget = gen_is_composition(instances, args.t, args.q, 1)
        out = InstanceFile(kind="is", graph=host, k=budget)
    else:
        raise UsageError(f"unknown family {family!r}")
    if args.kind is not None:
        if out.kind != "graph":
            raise UsageError("--kind only applies to plain graph families")
        if args.kind == "coc":
            out = InstanceFile(kind="coc", graph=out.graph, k=args.k, ell=args.ell or 2)
        elif args.kind in ("capvc",):
            raise UsageError("cannot wrap a plain graph as capvc; use capvc-hard")
        else:
            out = InstanceFile(kind=args.kind, graph=out.graph, k=args.k)
    _emit(write_instance(out), args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="closurekernels",
        description="Kernelization toolkit for weakly closed graphs.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="parameter report for an instance file")
    p.add_argument("path")
    p.add_argument("--oracle-cap", type=int, default=26,
                   help="largest n for brute-force clique number (default 26)")
    p.set_defaults(fn=cmd_params)

    p = sub.add_parser("kernel", help="run a reduction pipeline")
    p.add_argument("problem", nargs="?", choices=KERNEL_PROBLEMS, default=None,
                   help="problem to kernelize (default: the file's kind)")
    p.add_argument("path")
    p.add_argument("--mode", choices=("gamma", "c"), default="gamma",
                   help="convc route: weak-closure twin rule or closure-number "
                        "annotated pipeline (default gamma)")
    p.add_argument("--k", type=int, default=None, help="override the budget")
    p.add_argument("--ell", type=int, default=None,
                   help="override the component bound (coc only)")
    p.add_argument("--out", default=None,
                   help="write the reduced instance here instead of stdout")
    p.add_argument("--trace", default=None, help="write the JSON trace here")
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("solve", help="exact oracle answer with witness")
    p.add_argument("problem", choices=SOLVE_PROBLEMS)
    p.add_argument("path")
    p.add_argument("--k", type=int, default=None, help="override the budget")
    p.add_argument("--ell", type=int, default=None,
                   help="override the component bound (coc only)")
    p.add_argument("--oracle-cap", type=int, default=26,
                   help="refuse instances with more vertices than this (default 26)")
    p.add_argument("--witness", default=None, help="write the witness here")
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("verify", help="run the cross-checking suites")
    p.add_argument("--trials", type=int, default=None,
                   help="per-suite trial count (default: each suite's own)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", default=None,
                   help="run only this suite (repeatable)")
    p.add_argument("--dump-dir", default="counterexamples",
                   help="directory for counterexample instance files")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("generate", help="write an instance from a family")
    p.add_argument("family", choices=("split", "bipartite", "weakly-closed",
                                      "k-ab", "capvc-hard", "is-grid"))
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--gamma", type=int, default=2,
                   help="weak-closure target for weakly-closed")
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=5)
    p.add_argument("--t", type=int, default=2, help="is-grid values per digit")
    p.add_argument("--q", type=int, default=2, help="is-grid arity")
    p.add_argument("--k", type=int, default=1,
                   help="capvc-hard cover count, or the wrapped budget")
    p.add_argument("--sets", type=int, default=None,
                   help="capvc-hard family size (default 2k+1)")
    p.add_argument("--pattern", default=None,
                   help="is-grid yes/no bits, one per micro instance")
    p.add_argument("--ell", type=int, default=None, help="component bound for --kind coc")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", default=None,
                   choices=("convc", "im", "ds", "coc", "is"),
                   help="wrap a plain graph family as a problem instance")
    p.add_argument("--out", default=None, help="write here instead of stdout")
    p.set_defaults(fn=cmd_generate)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"{args.path}:{exc.line}:{exc.col}: {exc.message}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
