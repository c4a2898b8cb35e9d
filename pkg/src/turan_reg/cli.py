"""Command-line surface: constructions, enumeration, searches, suites.

Verification suites are data: ``suites.json`` lists checks as
(operation, arguments, expected value, provenance tag) and the runner
executes them through a fixed dispatch table, printing one line per
check and exiting nonzero when any check fails.  Provenance tags mark
each expected value as a quoted source value (PAPER), an immediate
consequence (TRIVIAL), or a value pinned by an independent computation
in this package (DERIVED).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from importlib import resources
from itertools import combinations
from math import comb

from . import constructions
from .canon import canonical_label
from .enumeration import GenFilter, enumerate_graphs, enumerate_regular
from .formulas import (
    FamilySpec,
    c5_star_forest_count,
    conjectured_triangle_min,
    ex_c5_closed_form,
    exr_closed_form,
    gls_critical_range,
    goodman_defect,
)
from .graphs import (
    complete_graph,
    count_cycles,
    cycle_graph,
    disjoint_union,
    empty_graph,
    format_edge_list,
    from_edges,
    graph6_decode,
    graph6_encode,
)
from .search import (
    HSpec,
    exr_exact,
    max_copies_free,
    max_k_total,
    max_kt,
    min_triangles_regular,
    probe_conjecture,
)

DEFAULT_SEED = 20210831


# ---------------------------------------------------------------------------
# table reproduction


def emit_table(r, n_lo, n_hi, fmt="csv", jobs=1):
    """Critical-regime clique-maximum table; cells outside the window stay blank."""
    ranges = {n: gls_critical_range(n, r) for n in range(n_lo, n_hi + 1)}
    m_lo = min(low + 1 for low, _ in ranges.values())
    m_hi = max(high for _, high in ranges.values())
    cells = {}
    for n in range(n_lo, n_hi + 1):
        low, high = ranges[n]
        for m in range(low + 1, high + 1):
            res = max_kt(n, m, r, 3, jobs=jobs)
            if res.feasible:
                cells[(n, m)] = res.objective
    published = r == 4 and n_lo >= 6 and n_hi <= 8
    if fmt == "json":
        return json.dumps(
            {
                "r": r,
                "columns": list(range(m_lo, m_hi + 1)),
                "cells": {f"{n},{m}": v for (n, m), v in sorted(cells.items())},
                "provenance": "PAPER" if published else "DERIVED",
            },
            indent=2,
        )
    lines = ["n\\m," + ",".join(str(m) for m in range(m_lo, m_hi + 1))]
    for n in range(n_lo, n_hi + 1):
        row = [str(n)]
        for m in range(m_lo, m_hi + 1):
            row.append(str(cells[(n, m)]) if (n, m) in cells else "")
        lines.append(",".join(row))
    if not published:
        lines.append("# provenance: DERIVED (outside the published r=4 window)")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# suite check operations


def _k3_spec():
    return HSpec(family=FamilySpec("triangle"))


def _op_exr_k3(args, ctx):
    return exr_exact(args["n"], _k3_spec()).objective


def _op_exr_closed_match(args, ctx):
    got = exr_exact(args["n"], _k3_spec()).objective
    return got == exr_closed_form(args["n"], FamilySpec("triangle")).value


def _op_exr_family(args, ctx):
    return exr_exact(
        args["n"], HSpec(family=FamilySpec("odd-cycle-family", args["ell"]))
    ).objective


def _op_exr_single_cycle(args, ctx):
    return exr_exact(
        args["n"], HSpec(family=FamilySpec("odd-cycle", args["ell"]))
    ).objective


def _op_exr_parity(args, ctx):
    bad = 0
    for n in range(5, args["n_max"] + 1, 2):
        if exr_closed_form(n, FamilySpec("triangle")).value % 2 != 0:
            bad += 1
    return bad


def _op_min_triangles(args, ctx):
    return min_triangles_regular(args["n"], args["k"]).objective


def _op_min_triangles_classes(args, ctx):
    return min_triangles_regular(args["n"], args["k"]).classes


def _op_supersat_unique(args, ctx):
    res = min_triangles_regular(9, 4)
    target = canonical_label(constructions.triangle_min_extremal(4).graph)
    return (
        res.objective == 2
        and res.classes == 1
        and canonical_label(graph6_decode(res.witnesses[0])) == target
    )


def _op_apex_window(args, ctx):
    n = args["n"]
    k = 2 * (n // 5) + 2
    g = constructions.apex_construction(n, k).graph
    from .graphs import triangle_count

    t = triangle_count(g)
    return n * n / 75 <= t <= n * n / 40


def _op_split_apex_equality(args, ctx):
    n, k = args["n"], args["k"]
    res = constructions.split_apex_equality(n, k)
    from .graphs import triangle_count

    return triangle_count(res.graph) == conjectured_triangle_min(n, k)


def _op_max_kt(args, ctx):
    return max_kt(args["n"], args["m"], args["r"], args["t"], jobs=ctx["jobs"]).objective


def _op_max_kt_classes(args, ctx):
    return max_kt(args["n"], args["m"], args["r"], args["t"], jobs=ctx["jobs"]).classes


def _op_max_k_total(args, ctx):
    return max_k_total(args["n"], args["m"], args["r"], jobs=ctx["jobs"]).objective


def _op_max_k_total_classes(args, ctx):
    return max_k_total(args["n"], args["m"], args["r"], jobs=ctx["jobs"]).classes


def _op_k_total_profile(args, ctx):
    from .graphs import count_cliques

    res = max_k_total(args["n"], args["m"], args["r"], jobs=ctx["jobs"])
    g = graph6_decode(res.witnesses[0])
    return [count_cliques(g, t) for t in (3, 4, 5)]


def _op_complement_triangles(args, ctx):
    from .graphs import complement, triangle_count

    res = max_kt(args["n"], args["m"], args["r"], 3, jobs=ctx["jobs"])
    return sorted(triangle_count(complement(graph6_decode(w))) for w in res.witnesses)


def _op_table_cells(args, ctx):
    low, high = gls_critical_range(args["n"], args["r"])
    return {
        str(m): max_kt(args["n"], m, args["r"], 3, jobs=ctx["jobs"]).objective
        for m in range(low + 1, high + 1)
    }


def _op_goodman_exhaustive(args, ctx):
    worst = 0
    for n in range(1, args["n_max"] + 1):
        def visit(g):
            nonlocal worst
            worst = max(worst, abs(goodman_defect(g)))
        enumerate_graphs(GenFilter(n=n), visitor=visit)
    return worst


def _op_goodman_random(args, ctx):
    rng = random.Random(ctx["seed"])
    worst = 0
    for _ in range(args["samples"]):
        n = rng.randint(1, args["n_max"])
        p = rng.random()
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        worst = max(worst, abs(goodman_defect(from_edges(n, edges))))
    return worst


def _star_partitions(n):
    """All leaf-count lists with sum(a_i + 1) = n, a_i >= 1."""
    def rec(remaining, minimum):
        if remaining == 0:
            yield []
            return
        for first in range(minimum, remaining - 1):
            for rest in rec(remaining - first - 1, first):
                yield [first] + rest
        if remaining >= 2:
            yield [remaining - 1]
    for parts in rec(n, 1):
        yield parts


def _op_c5_forest_oracle(args, ctx):
    mismatches = 0
    for n in range(2, args["n_max"] + 1):
        for parts in _star_partitions(n):
            g = constructions.star_forest_complement(n, parts).graph
            if c5_star_forest_count(n, parts) != count_cycles(g, 5):
                mismatches += 1
    return mismatches


def _op_ex_c5_closed(args, ctx):
    return ex_c5_closed_form(args["r"])


def _op_ex_c5_vs_partitions(args, ctx):
    mismatches = 0
    for r in range(args["r_lo"], args["r_hi"] + 1):
        n = r + 2
        best = max(c5_star_forest_count(n, parts) for parts in _star_partitions(n))
        if best != ex_c5_closed_form(r):
            mismatches += 1
    return mismatches


def _c5_target(n, kind):
    if kind == "k_plus_isolated":
        return disjoint_union(complete_graph(n - 1), empty_graph(1))
    # complete graph minus a perfect matching
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if not (i % 2 == 0 and j == i + 1)
    ]
    return from_edges(n, edges)


def _op_c5_search(args, ctx):
    res = max_copies_free(args["n"], cycle_graph(5), args["r"], jobs=ctx["jobs"])
    tl = canonical_label(_c5_target(args["n"], args["kind"]))
    witness_ok = bool(res.witnesses) and canonical_label(
        graph6_decode(res.witnesses[0])
    ) == tl
    return {"value": res.objective, "classes": res.classes, "witness_ok": witness_ok}


def _op_star_count_prop(args, ctx):
    from .graphs import star_graph

    n, r, s = args["n"], args["r"], args["s"]
    res = max_copies_free(n, star_graph(s), r)
    value_regular = n * comb(r, s)
    witnesses_regular = all(
        graph6_decode(w).is_regular(r) for w in res.witnesses
    )
    return res.objective == value_regular and witnesses_regular


def _op_biclique_prop(args, ctx):
    from .graphs import complete_bipartite

    n, r, a, b = args["n"], args["r"], args["a"], args["b"]
    res = max_copies_free(n, complete_bipartite(a, b), r)
    target = canonical_label(complete_bipartite(r, r))
    hit = any(canonical_label(graph6_decode(w)) == target for w in res.witnesses)
    return hit and n == 2 * r


def _op_enumeration_count(args, ctx):
    return enumerate_graphs(GenFilter(n=args["n"])).classes


def _op_enumeration_dual(args, ctx):
    from .canon import canon_core

    seen = [set(), set()]
    for idx, desc in enumerate((False, True)):
        enumerate_graphs(
            GenFilter(n=args["n"]),
            visitor=lambda g, i=idx: seen[i].add(canon_core(g.rows, g.n)[1]) and None,
            desc=desc,
        )
    return seen[0] == seen[1]


def _op_regular_count(args, ctx):
    count = [0]
    enumerate_regular(args["n"], args["k"], visitor=lambda g: count.__setitem__(0, count[0] + 1))
    return count[0]


def _op_construction_sweep(args, ctx):
    """Run a builder across its parameter grid; count validation failures.

    Parameter errors (precondition violations) don't count; a certified
    property violation or schedule infeasibility inside the declared
    grid does.
    """
    name = args["name"]
    failures = 0
    ran = 0
    for params in _sweep_params(name, args):
        try:
            constructions.build(name, **params)
            ran += 1
        except constructions.ConstructionError as exc:
            if exc.prop is not None:
                failures += 1
            elif args.get("strict", False):
                failures += 1
    return failures if ran > 0 else -1


def _sweep_params(name, args):
    if name == "pentagon-blowup":
        for n in range(5, args["n_max"] + 1, 2):
            x, y = divmod(n, 5)
            if y < x:
                yield {"n": n}
    elif name == "circulant-small-odd":
        for n in (5, 7, 9, 11, 13, 17, 19):
            yield {"n": n}
    elif name == "odd-girth-blowup":
        for ell in range(2, args.get("ell_max", 8) + 1):
            m_len = 2 * ell + 1
            for n in range(m_len, args["n_max"] + 1, 2):
                x, y = divmod(n, m_len)
                if x > y:
                    yield {"n": n, "ell": ell}
        for n, ell in args.get("spots", []):
            yield {"n": n, "ell": ell}
    elif name == "apex":
        for n in range(7, args["n_max"] + 1, 2):
            for k in range(2 * (n // 5) + 2, 2 * (n // 4) + 1, 2):
                yield {"n": n, "k": k}
        for n in args.get("spots", []):
            yield {"n": n, "k": 2 * (n // 5) + 2}
    elif name == "multipartite-regular":
        for r in range(4, args.get("r_max", 8) + 1):
            for n in range(3 * (r - 1), args["n_max"] + 1):
                try:
                    constructions._multipartite_decompose(n, r)
                except constructions.ConstructionError:
                    continue
                yield {"n": n, "r": r}
    elif name == "odd-half":
        for n in range(5, args["n_max"] + 1, 2):
            yield {"n": n}
    elif name == "triangle-min-extremal":
        for k in range(4, args["k_max"] + 1, 2):
            yield {"k": k}
        for k in args.get("spots", []):
            yield {"k": k}
    elif name == "split-apex-equality":
        for n in range(9, args["n_max"] + 1, 2):
            for k in range(2, n, 2):
                from .formulas import forced_triangle_window

                if forced_triangle_window(n, k):
                    yield {"n": n, "k": k}
    elif name == "kbe":
        for x in range(1, args.get("x_max", 8) + 1):
            for y in range(0, 2 * x + 1):
                yield {"x": x, "y": y}
    elif name == "star-forest-complement":
        for n in range(2, args["n_max"] + 1):
            for parts in _star_partitions(n):
                yield {"n": n, "parts": parts}
    else:
        raise ValueError(f"no sweep grid for {name!r}")


CHECK_OPS = {
    "exr_k3": _op_exr_k3,
    "exr_closed_match": _op_exr_closed_match,
    "exr_family": _op_exr_family,
    "exr_single_cycle": _op_exr_single_cycle,
    "exr_parity": _op_exr_parity,
    "min_triangles": _op_min_triangles,
    "min_triangles_classes": _op_min_triangles_classes,
    "supersat_unique": _op_supersat_unique,
    "apex_window": _op_apex_window,
    "split_apex_equality": _op_split_apex_equality,
    "max_kt": _op_max_kt,
    "max_kt_classes": _op_max_kt_classes,
    "max_k_total": _op_max_k_total,
    "max_k_total_classes": _op_max_k_total_classes,
    "k_total_profile": _op_k_total_profile,
    "complement_triangles": _op_complement_triangles,
    "table_cells": _op_table_cells,
    "goodman_exhaustive": _op_goodman_exhaustive,
    "goodman_random": _op_goodman_random,
    "c5_forest_oracle": _op_c5_forest_oracle,
    "ex_c5_closed": _op_ex_c5_closed,
    "ex_c5_vs_partitions": _op_ex_c5_vs_partitions,
    "c5_search": _op_c5_search,
    "star_count_prop": _op_star_count_prop,
    "biclique_prop": _op_biclique_prop,
    "enumeration_count": _op_enumeration_count,
    "enumeration_dual": _op_enumeration_dual,
    "regular_count": _op_regular_count,
    "construction_sweep": _op_construction_sweep,
}


def load_suites():
    with resources.files("turan_reg").joinpath("suites.json").open() as fh:
        return json.load(fh)


def run_suite(suite_id, jobs=1, seed=DEFAULT_SEED, stream=None):
    if stream is None:
        stream = sys.stdout
    suites = load_suites()
    if suite_id not in suites:
        raise SystemExit(f"unknown suite {suite_id!r}; choose from {sorted(suites)}")
    ctx = {"jobs": jobs, "seed": seed}
    suite = suites[suite_id]
    report = {"suite": suite_id, "seed": seed, "checks": [], "passed": True}
    print(f"suite {suite_id}: {suite['description']} (seed={seed})", file=stream)
    for check in suite["checks"]:
        t0 = time.perf_counter()
        actual = CHECK_OPS[check["op"]](check.get("args", {}), ctx)
        dt = time.perf_counter() - t0
        ok = actual == check["expect"]
        report["checks"].append(
            {
                "id": check["id"],
                "tag": check["tag"],
                "expect": check["expect"],
                "actual": actual,
                "ok": ok,
                "seconds": round(dt, 3),
            }
        )
        report["passed"] = report["passed"] and ok
        status = "PASS" if ok else "FAIL"
        print(
            f"  [{check['tag']}] {check['id']}: expect={check['expect']!r} "
            f"actual={actual!r} {status} ({dt:.2f}s)",
            file=stream,
        )
    print(
        f"suite {suite_id}: {'PASS' if report['passed'] else 'FAIL'} "
        f"({len(report['checks'])} checks)",
        file=stream,
    )
    return report


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p):
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")


def build_parser():
    top = argparse.ArgumentParser(
        prog="turan-reg",
        description="regular Turan numbers: exact search, constructions, checks",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named construction")
    p.add_argument("name", choices=sorted(constructions.BUILDERS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--parts", type=str, help="comma-separated star leaf counts")
    p.add_argument("--format", choices=("g6", "edges"), default="g6")
    p.add_argument("--certify", action="store_true", help="print certificate JSON")
    p.add_argument("--out", type=str, default="-")
    _add_common(p)

    p = sub.add_parser("enumerate", help="stream one graph6 line per class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--edges", type=int)
    p.add_argument("--regular-k", type=int)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--desc", action="store_true", help="dual augmentation order")
    p.add_argument("--force", action="store_true", help="override the n cap")
    p.add_argument("--out", type=str, default="-")
    _add_common(p)

    p = sub.add_parser("exr", help="exact regular Turan number by search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", type=str, required=True, help="K3, C7, C3..C9, K1,4, g6:...")
    p.add_argument("--all-witnesses", action="store_true")
    p.add_argument("--witness-cap", type=int, default=16)
    _add_common(p)

    p = sub.add_parser("census-triangles", help="minimum triangles over k-regular graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--witness-cap", type=int, default=16)
    _add_common(p)

    p = sub.add_parser("max-cliques", help="maximize clique counts given (n, m, max degree)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--t", type=int, help="clique size; omit with --total")
    p.add_argument("--total", action="store_true", help="maximize the total clique count")
    p.add_argument("--witness-cap", type=int, default=16)
    _add_common(p)

    p = sub.add_parser("max-copies", help="maximize pattern copies under a degree cap")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", type=str, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--witness-cap", type=int, default=16)
    _add_common(p)

    p = sub.add_parser("probe", help="conjecture probes (report only)")
    p.add_argument("name", choices=("gls-critical", "triangle-floor", "odd-girth-question", "cycle-question"))
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--m", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--pattern", type=str)
    _add_common(p)

    p = sub.add_parser("suite", help="run a verification suite")
    p.add_argument("id", type=str)
    p.add_argument("--report", type=str, help="write JSON report here")
    _add_common(p)

    p = sub.add_parser("table", help="reproduce the critical-regime table")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=str, default="-")
    _add_common(p)

    return top


def _write(text, out):
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _cmd_construct(ns):
    params = {}
    for key in ("n", "k", "ell", "r", "x", "y"):
        val = getattr(ns, key)
        if val is not None:
            params[key] = val
    if ns.parts:
        params["parts"] = [int(p) for p in ns.parts.split(",")]
    result = constructions.build(ns.name, **params)
    if ns.format == "g6":
        text = graph6_encode(result.graph) + "\n"
    else:
        text = format_edge_list(result.graph)
    if ns.certify:
        text += json.dumps(result.certificate, indent=2) + "\n"
    _write(text, ns.out)
    return 0


def _cmd_enumerate(ns):
    filt = GenFilter(
        n=ns.n,
        max_degree=ns.max_degree,
        edge_count=ns.edges,
        regular_k=ns.regular_k,
        connected=True if ns.connected else None,
    )
    lines = []
    stats = enumerate_graphs(
        filt, visitor=lambda g: lines.append(graph6_encode(g)) and None,
        desc=ns.desc, force=ns.force,
    )
    text = "".join(line + "\n" for line in lines)
    if stats.infeasible:
        print("infeasible filter: empty stream", file=sys.stderr)
    print(
        f"classes={stats.classes} nodes={stats.nodes} seconds={stats.seconds:.2f}",
        file=sys.stderr,
    )
    _write(text, ns.out)
    return 0


def _cmd_exr(ns):
    hspec = HSpec.parse(ns.forbid)
    res = exr_exact(
        ns.n, hspec,
        all_witnesses=ns.all_witnesses, witness_cap=ns.witness_cap,
    )
    payload = res.to_json()
    if hspec.family is not None and ns.n >= 3:
        cf = exr_closed_form(ns.n, hspec.family)
        payload["closed_form"] = {"value": cf.value, "exact": cf.exact}
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_census_triangles(ns):
    res = min_triangles_regular(ns.n, ns.k, witness_cap=ns.witness_cap)
    print(json.dumps(res.to_json(), indent=2))
    return 0 if res.feasible else 1


def _cmd_max_cliques(ns):
    if ns.total == (ns.t is not None):
        raise SystemExit("give exactly one of --t or --total")
    if ns.total:
        res = max_k_total(ns.n, ns.m, ns.max_degree, witness_cap=ns.witness_cap, jobs=ns.jobs)
    else:
        res = max_kt(ns.n, ns.m, ns.max_degree, ns.t, witness_cap=ns.witness_cap, jobs=ns.jobs)
    print(json.dumps(res.to_json(), indent=2))
    return 0 if res.feasible else 1


def _cmd_max_copies(ns):
    pattern = HSpec.parse(ns.pattern).members()[0]
    res = max_copies_free(ns.n, pattern, ns.max_degree, witness_cap=ns.witness_cap, jobs=ns.jobs)
    print(json.dumps(res.to_json(), indent=2))
    return 0


def _cmd_probe(ns):
    kwargs = {}
    if ns.name == "gls-critical":
        kwargs = {"n": ns.n, "r": ns.r, "t": ns.t}
    elif ns.name == "triangle-floor":
        kwargs = {"n_max": ns.n_max or 11}
    elif ns.name == "odd-girth-question":
        kwargs = {"n": ns.n, "hspec": HSpec.parse(ns.pattern)}
    elif ns.name == "cycle-question":
        kwargs = {"m": ns.m, "r": ns.r, "n": ns.n}
    print(json.dumps(probe_conjecture(ns.name, **kwargs), indent=2))
    return 0


def _cmd_suite(ns):
    report = run_suite(ns.id, jobs=ns.jobs, seed=ns.seed)
    if ns.report:
        with open(ns.report, "w") as fh:
            json.dump(report, fh, indent=2)
    return 0 if report["passed"] else 1


def _cmd_table(ns):
    _write(emit_table(ns.r, ns.n_from, ns.n_to, fmt=ns.format, jobs=ns.jobs), ns.out)
    return 0


COMMANDS = {
    "construct": _cmd_construct,
    "enumerate": _cmd_enumerate,
    "exr": _cmd_exr,
    "census-triangles": _cmd_census_triangles,
    "max-cliques": _cmd_max_cliques,
    "max-copies": _cmd_max_copies,
    "probe": _cmd_probe,
    "suite": _cmd_suite,
    "table": _cmd_table,
}


def main(argv=None):
    ns = build_parser().parse_args(argv)
    return COMMANDS[ns.command](ns)


if __name__ == "__main__":
    sys.exit(main())
