"""Command-line surface tying the library operations together.

Exit codes: 0 success, 1 a property violation was found (axiom violations,
missing exchange witness, stuck chain), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import graph_families, greedoid_engine, perfect_embedding, stable_core, tree_matching
from .cli_io import GraphDocument, emit, parse_graph, to_jsonable
from .errors import AccessibilityFailure, LmssError
from .graph_core import Graph, set_of


def _read_document(path: str) -> GraphDocument:
    data = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        doc = parse_graph(data)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return doc


def _parse_set(g: Graph, text: str) -> frozenset:
    labels = [t for t in (p.strip() for p in text.split(",")) if t]
    return frozenset(g.index_of(lbl) for lbl in labels)


def _out(args, obj, graph=None) -> None:
    sys.stdout.write(emit(obj, args.format, graph=graph))


def cmd_alpha(args) -> int:
    g = _read_document(args.graph).graph
    _out(args, stable_core.alpha(g, cap=args.cap), graph=g)
    return 0


def cmd_omega(args) -> int:
    g = _read_document(args.graph).graph
    sets = stable_core.enumerate_omega(g, cap=args.cap)
    payload = {"alpha": len(sets[0]) if sets else 0,
               "count": len(sets),
               "sets": [[g.labels[v] for v in sorted(s)] for s in sets]}
    _out(args, payload, graph=g)
    return 0


def cmd_psi(args) -> int:
    g = _read_document(args.graph).graph
    if args.set is None:
        _out(args, stable_core.enumerate_psi(g, cap=args.cap), graph=g)
        return 0
    s = _parse_set(g, args.set)
    verdict = stable_core.is_local_max_stable(g, s, cap=args.cap)
    _out(args, {"set": [g.labels[v] for v in sorted(s)],
                "is_local_max_stable": verdict}, graph=g)
    return 0


def cmd_matching(args) -> int:
    g = _read_document(args.graph).graph
    if args.internal_cover:
        m = tree_matching.internal_cover_matching(g)
    else:
        m = tree_matching.maximum_matching(g)
    payload = to_jsonable(m, g)
    payload["internal_cover"] = bool(args.internal_cover)
    _out(args, payload, graph=g)
    return 0


def cmd_ke_check(args) -> int:
    g = _read_document(args.graph).graph
    _out(args, tree_matching.verify_konig_egervary(g), graph=g)
    return 0


def cmd_embed(args) -> int:
    g = _read_document(args.graph).graph
    mode = "pendant_only" if args.pendant_only else "any"
    _out(args, perfect_embedding.embed_perfect(g, mode), graph=g)
    return 0


def cmd_chain(args) -> int:
    g = _read_document(args.graph).graph
    strategy = {"greedy": "greedy_peel"}.get(args.strategy, args.strategy)
    try:
        cert = greedoid_engine.chain_decompose(g, _parse_set(g, args.set),
                                               strategy, cap=args.cap)
    except AccessibilityFailure as exc:
        _out(args, {"stuck_set": [g.labels[v] for v in sorted(exc.stuck_set)],
                    "error": "accessibility failure"}, graph=g)
        return 1
    _out(args, cert, graph=g)
    return 0


def cmd_nt_extend(args) -> int:
    g = _read_document(args.graph).graph
    s1 = _parse_set(g, args.s1)
    s2 = _parse_set(g, args.s2)
    result = greedoid_engine.nt_extend(g, s1, s2, cap=args.cap)
    payload = {"s1": [g.labels[v] for v in sorted(s1)],
               "s2": [g.labels[v] for v in sorted(s2)],
               "s3": [g.labels[v] for v in sorted(result - s1)],
               "result": [g.labels[v] for v in sorted(result)],
               "alpha": len(result)}
    _out(args, payload, graph=g)
    return 0


def cmd_exchange(args) -> int:
    g = _read_document(args.graph).graph
    w = greedoid_engine.exchange_witness(g, _parse_set(g, args.s1),
                                         _parse_set(g, args.s2), cap=args.cap)
    _out(args, w, graph=g)
    return 0 if w.witness is not None else 1


def cmd_verify_greedoid(args) -> int:
    g = _read_document(args.graph).graph
    report = greedoid_engine.verify_greedoid(g, cap=args.cap)
    _out(args, report, graph=g)
    return 0 if report.accessibility_ok and report.exchange_ok else 1


def cmd_gen(args) -> int:
    spec = graph_families.FamilySpec(family=args.family, n=args.n, seed=args.seed,
                                     delete_prob=args.delete_prob)
    g = graph_families.generate(spec)
    meta = {"family": args.family, "n": str(g.vertex_count)}
    if args.family.startswith("random"):
        meta["seed"] = str(0 if args.seed is None else args.seed)
        meta["prng"] = graph_families.PRNG_ALGORITHM
        if args.family == "random_forest":
            meta["delete_prob"] = str(args.delete_prob)
    _out(args, GraphDocument(graph=g, source="family", metadata=meta))
    return 0


# -- selftest ----------------------------------------------------------------


def _forest_corpus(count, sizes, seed0=1, delete_prob=0.15):
    for i in range(count):
        n = sizes[i % len(sizes)]
        yield graph_families.generate(graph_families.FamilySpec(
            "random_forest", n=n, seed=seed0 + i, delete_prob=delete_prob))


def _random_graph(n: int, p_percent: int, rng) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.below(100) < p_percent]
    return Graph([f"v{k + 1}" for k in range(n)], edges)


def _check_greedoid_on_forests(full: bool):
    max_n = 8 if full else 6
    count = 0
    for n in range(2, max_n + 1):
        for t in graph_families.enumerate_labeled_trees(n):
            r = greedoid_engine.verify_greedoid(t)
            if not (r.accessibility_ok and r.exchange_ok):
                return False, f"violation on a labeled tree with {n} vertices"
            count += 1
    forests = 1000 if full else 100
    sizes = list(range(9, 15)) if full else list(range(9, 13))
    for g in _forest_corpus(forests, sizes):
        r = greedoid_engine.verify_greedoid(g)
        if not (r.accessibility_ok and r.exchange_ok):
            return False, "violation on a random forest"
        count += 1
    return True, f"{count} forests, zero violations"


def _check_counterexamples(full: bool):
    for n in range(4, 9):
        g = graph_families.generate(graph_families.FamilySpec("cycle", n))
        r = greedoid_engine.verify_greedoid(g)
        omega = set(stable_core.enumerate_omega(g))
        if not omega <= set(r.accessibility_violations):
            return False, f"C{n}: some maximum stable set is not reported"
    g = graph_families.generate(graph_families.FamilySpec("fig1"))
    r = greedoid_engine.verify_greedoid(g)
    acf = frozenset(g.index_of(x) for x in "acf")
    if acf not in r.accessibility_violations:
        return False, "fig1: {a,c,f} not reported"
    return True, "cycles C4..C8 and fig1 behave as documented"


def _check_fig7(full: bool):
    cases = [("small", n) for n in (6, 8, 10)] + [("large", n) for n in (8, 10, 12)]
    for cls, n in cases:
        g = graph_families.generate(graph_families.FamilySpec("fig7", n))
        s1, s2 = graph_families.fig7_exchange_pair(n, cls)
        if not (stable_core.is_local_max_stable(g, s1)
                and stable_core.is_local_max_stable(g, s2)):
            return False, f"fig7({n}) {cls}: pair not in the family"
        if greedoid_engine.exchange_witness(g, s1, s2).witness is not None:
            return False, f"fig7({n}) {cls}: unexpected witness"
    return True, "documented pairs are in the family and admit no witness"


def _check_nt_extension(full: bool):
    rng = graph_families.SplitMix64(2024)
    graphs = 500 if full else 60
    max_n = 12 if full else 10
    pairs = 0
    for i in range(graphs):
        n = 4 + rng.below(max_n - 3)
        g = _random_graph(n, 8 + (i % 5) * 8, rng)
        oracle = stable_core.SubsetOracle(g)
        psi = oracle.psi_masks()
        if len(psi) > 200:
            continue
        omega = stable_core.canonical_sets(oracle.omega_masks())
        a = oracle.alpha()
        for pm in psi:
            s1 = set_of(pm)
            for s2 in omega:
                r = greedoid_engine.nt_extend(g, s1, s2, oracle=oracle)
                if len(r) != a or not stable_core.is_stable(g, r):
                    return False, "extension left the maximum family"
                pairs += 1
    return True, f"{pairs} extensions all maximum"


def _check_chains(full: bool):
    max_n = 8 if full else 5
    chains = 0
    for n in range(2, max_n + 1):
        for t in graph_families.enumerate_labeled_trees(n):
            oracle = stable_core.SubsetOracle(t)
            for m in oracle.psi_masks():
                s = set_of(m)
                for strat in ("greedy_peel", "constructive"):
                    cert = greedoid_engine.chain_decompose(t, s, strat, oracle=oracle)
                    if (cert.chain[-1] if cert.chain else frozenset()) != s \
                            or not greedoid_engine.chain_is_valid(cert, oracle=oracle):
                        return False, f"invalid {strat} chain on {n} vertices"
                    chains += 1
    return True, f"{chains} certificates valid under both strategies"


def _check_exchange_totality(full: bool):
    max_n = 8 if full else 5
    checked = 0
    for n in range(2, max_n + 1):
        for t in graph_families.enumerate_labeled_trees(n):
            oracle = stable_core.SubsetOracle(t)
            by_size = {}
            for m in oracle.psi_masks():
                by_size.setdefault(m.bit_count(), []).append(m)
            for k, ys in sorted(by_size.items()):
                for x in by_size.get(k + 1, ()):
                    for y in ys:
                        w = greedoid_engine.exchange_witness(
                            t, set_of(y), set_of(x), oracle=oracle)
                        if w.witness is None:
                            return False, f"missing witness on {n} vertices"
                        checked += 1
    return True, f"{checked} pairs all admitted witnesses"


def _check_matching_embedding(full: bool):
    count = 1000 if full else 100
    sizes = list(range(2, 21)) if full else list(range(2, 15))
    for g in _forest_corpus(count, sizes, seed0=5000):
        rep = tree_matching.verify_konig_egervary(g)
        if not rep.identity_holds:
            return False, "alpha + mu != order on a forest"
        icm = tree_matching.internal_cover_matching(g)
        if len(icm) != rep.mu:
            return False, "internal-cover matching is not maximum"
        for v in range(g.vertex_count):
            if v not in icm.covered and g.degree(v) >= 2:
                return False, "internal vertex left exposed"
        for mode in ("any", "pendant_only"):
            emb = perfect_embedding.embed_perfect(g, mode)
            if mode == "pendant_only":
                for u, _w in emb.added_edges:
                    if g.degree(u) >= 2:
                        return False, "pendant_only attached to an internal vertex"
    return True, f"{count} forests: identity, cover, and embeddings hold"


def _check_oracle_equivalence(full: bool):
    max_n = 7 if full else 6
    for n in range(2, max_n + 1):
        for t in graph_families.enumerate_labeled_trees(n):
            if stable_core.alpha(t).size != stable_core.SubsetOracle(t).alpha():
                return False, f"alpha mismatch on {n} vertices"
    c4 = graph_families.generate(graph_families.FamilySpec("cycle", 4))
    p4 = graph_families.generate(graph_families.FamilySpec("path", 4))
    psi_c4 = [sorted(s) for s in stable_core.enumerate_psi(c4).members]
    psi_p4 = [sorted(s) for s in stable_core.enumerate_psi(p4).members]
    if psi_c4 != [[], [0, 2], [1, 3]]:
        return False, "family of the 4-cycle is off"
    if psi_p4 != [[], [0], [3], [0, 2], [0, 3], [1, 3]]:
        return False, "family of the 4-path is off"
    return True, "pendant-greedy alpha matches exhaustive alpha; known families exact"


def _check_determinism(full: bool):
    spec = graph_families.FamilySpec("random_tree", n=9, seed=42)
    a = emit(graph_families.generate(spec), "json")
    b = emit(graph_families.generate(spec), "json")
    g = graph_families.generate(graph_families.FamilySpec("cycle", 4))
    ra = emit(greedoid_engine.verify_greedoid(g), "json", graph=g)
    rb = emit(greedoid_engine.verify_greedoid(g), "json", graph=g)
    if a != b or ra != rb:
        return False, "repeated runs differ"
    return True, "repeated generation and verification are byte-identical"


SELFTEST_CHECKS = (
    ("greedoid on forests", _check_greedoid_on_forests),
    ("accessibility counterexamples", _check_counterexamples),
    ("exchange counterexamples", _check_fig7),
    ("maximum-extension on general graphs", _check_nt_extension),
    ("chain totality", _check_chains),
    ("exchange totality on forests", _check_exchange_totality),
    ("matching and embedding structure", _check_matching_embedding),
    ("oracle equivalence", _check_oracle_equivalence),
    ("determinism", _check_determinism),
)


def cmd_selftest(args) -> int:
    failures = 0
    for i, (name, check) in enumerate(SELFTEST_CHECKS, start=1):
        ok, detail = check(args.full)
        status = "PASS" if ok else "FAIL"
        print(f"criterion {i} ({name}): {status} - {detail}")
        failures += 0 if ok else 1
    return 1 if failures else 0


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmss",
        description="Local maximum stable sets, their forest greedoid, and "
                    "the associated matching and embedding operations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text",
                        help="output format (default: text)")
    common.add_argument("--cap", type=int, default=None,
                        help="override the brute-force/enumeration vertex caps")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_, extra=None):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph", nargs="?", default="-",
                       help="graph file in edge-list format ('-' for stdin)")
        if extra:
            extra(p)
        p.set_defaults(func=func)
        return p

    graph_cmd("alpha", cmd_alpha, "stability number with a witness set")
    graph_cmd("omega", cmd_omega, "every maximum stable set")
    graph_cmd("psi", cmd_psi, "enumerate the local-maximum family, or test one set",
              lambda p: p.add_argument("--set", default=None,
                                       help="comma-separated labels to test"))
    graph_cmd("matching", cmd_matching, "leaf-greedy maximum matching of a forest",
              lambda p: p.add_argument("--internal-cover", action="store_true",
                                       help="cover every internal vertex"))
    graph_cmd("ke-check", cmd_ke_check, "check alpha + mu = order on a forest")
    graph_cmd("embed", cmd_embed, "embed a forest into a perfect forest",
              lambda p: p.add_argument("--pendant-only", action="store_true",
                                       help="attach new edges at pendant vertices only"))
    graph_cmd("chain", cmd_chain, "nested family chain ending at --set",
              lambda p: (p.add_argument("--set", required=True),
                         p.add_argument("--strategy", default="greedy",
                                        choices=("greedy", "greedy_peel", "constructive"))))
    graph_cmd("nt-extend", cmd_nt_extend, "extend --s1 to a maximum set inside --s2",
              lambda p: (p.add_argument("--s1", required=True),
                         p.add_argument("--s2", required=True)))
    graph_cmd("exchange", cmd_exchange, "exchange witness between --s1 and --s2",
              lambda p: (p.add_argument("--s1", required=True),
                         p.add_argument("--s2", required=True)))
    graph_cmd("verify-greedoid", cmd_verify_greedoid,
              "check both greedoid axioms on the full family")

    gen = sub.add_parser("gen", parents=[common], help="generate a named graph")
    gen.add_argument("--family", required=True, choices=graph_families.FAMILIES)
    gen.add_argument("-n", type=int, default=None)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--delete-prob", type=float, default=0.15)
    gen.set_defaults(func=cmd_gen)

    st = sub.add_parser("selftest", parents=[common],
                        help="run the built-in verification corpus")
    st.add_argument("--full", action="store_true",
                    help="full acceptance scale (minutes) instead of the quick corpus")
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:  # pragma: no cover
        return 0
    except LmssError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
