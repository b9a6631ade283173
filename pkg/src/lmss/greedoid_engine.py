"""Accessibility chains, exchange witnesses, and the greedoid verifier.

The family of local maximum stable sets of a forest satisfies both greedoid
axioms. This module makes that executable in both directions: constructive
algorithms that produce nested chains and exchange witnesses on forests, and
an exhaustive verifier that checks the two axioms on arbitrary small graphs
and reports every violation (cycles and the counterexample families live in
graph_families).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import stable_core
from .errors import (
    AccessibilityFailure,
    InternalError,
    K2BaseCase,
    NotAForestError,
    NotDisjointOrNotStableError,
    NotInPsiError,
    NotMaximumError,
    NotPerfectTreeError,
    SizeMismatchError,
)
from .graph_core import Graph, bits_of, decompose, mask_of, set_of
from .stable_core import SubsetOracle, canonical_sets
from .tree_matching import maximum_matching


@dataclass(frozen=True)
class ChainCertificate:
    """Nested family members S1 c S2 c ... c Sk with |Si| = i, ending at
    the requested set. An empty chain certifies the empty set."""

    graph: Graph
    chain: tuple  # tuple[frozenset], strictly ascending by one element
    strategy: str  # "greedy_peel" | "constructive"


class ExchangeWitness(NamedTuple):
    """Outcome of an exchange attempt between two family members."""

    s1: frozenset
    s2: frozenset
    witness: Optional[int]


@dataclass(frozen=True)
class GreedoidReport:
    """Verdict of checking both greedoid axioms on the full family."""

    family_size: int
    accessibility_ok: bool
    exchange_ok: bool
    accessibility_violations: tuple  # tuple[frozenset]
    exchange_violations: tuple  # tuple[(smaller, larger) frozenset pairs]


def _in_psi(g: Graph, s: frozenset, oracle: SubsetOracle | None, cap,
            mask: int | None = None) -> bool:
    if oracle is not None:
        return oracle.in_psi_mask(mask_of(s) if mask is None else mask)
    return stable_core.is_local_max_stable(g, s, cap)


def chain_is_valid(cert: ChainCertificate, oracle: SubsetOracle | None = None,
                   cap: int | None = None) -> bool:
    """Check a certificate from scratch: sizes 1..k, strict nesting, and
    family membership of every prefix."""
    g = cert.graph
    prev: frozenset = frozenset()
    for i, s in enumerate(cert.chain, start=1):
        if len(s) != i or not prev < s:
            return False
        if not _in_psi(g, s, oracle, cap):
            return False
        prev = s
    return True


def pendant_k2_edge(g: Graph) -> tuple[int, int]:
    """The peeling edge of a perfect tree: a pendant x whose neighbor y has
    degree exactly 2 (so deleting both leaves a smaller perfect tree).

    Scans pendants in index order. Raises K2BaseCase on the two-vertex tree
    so recursive callers can stop.
    """
    dec = decompose(g)
    if not dec.is_tree:
        raise NotPerfectTreeError("input is not a tree")
    matching = maximum_matching(g)
    if 2 * len(matching) != g.vertex_count:
        raise NotPerfectTreeError("tree has no perfect matching")
    if g.vertex_count == 2:
        raise K2BaseCase("two-vertex tree: peeling recursion bottoms out")
    for x in range(g.vertex_count):
        if g.degree(x) == 1:
            y = g.adjacency_mask(x).bit_length() - 1
            if g.degree(y) == 2:
                e = (x, y) if x < y else (y, x)
                if e not in matching.edges:  # pragma: no cover - forced for pendants
                    raise InternalError("pendant edge missing from the perfect matching")
                return (x, y)
    raise InternalError("perfect tree without a pendant-K2 edge")  # pragma: no cover


def union_local_max(g: Graph, a, b, oracle: SubsetOracle | None = None,
                    cap: int | None = None) -> frozenset:
    """Union of two disjoint family members whose union is stable.

    The union is again a local maximum stable set (in any graph); this is
    asserted on the result before returning it.
    """
    a, ma = g.check_vertices_mask(a)
    b, mb = g.check_vertices_mask(b)
    if not _in_psi(g, a, oracle, cap, ma) or not _in_psi(g, b, oracle, cap, mb):
        raise NotInPsiError("both operands must be local maximum stable sets")
    if ma & mb or not stable_core.stable_mask(g, ma | mb):
        raise NotDisjointOrNotStableError("operands must be disjoint with a stable union")
    u = a | b
    if not _in_psi(g, u, oracle, cap, ma | mb):  # pragma: no cover - excluded by theory
        raise InternalError("union of disjoint members left the family")
    return u


def nt_extend(g: Graph, s1, s2, oracle: SubsetOracle | None = None,
              cap: int | None = None) -> frozenset:
    """Enlarge the local maximum stable set ``s1`` to a maximum stable set
    using only vertices of the maximum stable set ``s2``.

    Takes s3 = s2 - N[s1] and returns s1 | s3; the result is maximum in any
    graph, which is asserted before returning.
    """
    s1, m1 = g.check_vertices_mask(s1)
    s2, m2 = g.check_vertices_mask(s2)
    if not _in_psi(g, s1, oracle, cap, m1):
        raise NotInPsiError("s1 is not a local maximum stable set")
    a = oracle.alpha() if oracle is not None else stable_core.alpha(g, cap).size
    if len(s2) != a or not stable_core.stable_mask(g, m2):
        raise NotMaximumError("s2 is not a maximum stable set")
    closed = 0
    for v in s1:
        closed |= g.closed_mask(v)
    s3 = frozenset(v for v in s2 if not closed & (1 << v))
    result = s1 | s3
    if len(result) != a or not stable_core.stable_mask(g, mask_of(result)):  # pragma: no cover
        raise InternalError("extension missed the stability number")
    return result


def exchange_witness(g: Graph, s1, s2, oracle: SubsetOracle | None = None,
                     cap: int | None = None) -> ExchangeWitness:
    """First vertex v of s2 - s1 (index order) with s1 | {v} in the family.

    On forests a witness always exists; coming up empty there raises
    InternalError. On other graphs absence is reported, not raised, so the
    counterexample families can be explored.
    """
    s1, m1 = g.check_vertices_mask(s1)
    s2, m2 = g.check_vertices_mask(s2)
    if len(s2) != len(s1) + 1:
        raise SizeMismatchError(f"|s2|={len(s2)} must be |s1|+1={len(s1) + 1}")
    if oracle is not None:
        in_psi = oracle.in_psi_mask
        if not in_psi(m1) or not in_psi(m2):
            raise NotInPsiError("both sets must be local maximum stable sets")
        diff = m2 & ~m1
        while diff:
            low = diff & -diff
            diff ^= low
            if in_psi(m1 | low):
                return ExchangeWitness(s1, s2, low.bit_length() - 1)
    else:
        if not stable_core.is_local_max_stable(g, s1, cap) \
                or not stable_core.is_local_max_stable(g, s2, cap):
            raise NotInPsiError("both sets must be local maximum stable sets")
        for v in sorted(s2 - s1):
            if stable_core.is_local_max_stable(g, s1 | {v}, cap):
                return ExchangeWitness(s1, s2, v)
    if g.is_forest:
        raise InternalError("exchange witness missing on a forest")
    return ExchangeWitness(s1, s2, None)


# -- chain construction ------------------------------------------------------


def _greedy_peel_masks(g: Graph, s_mask: int, oracle, cap) -> list:
    chain = []
    cur = s_mask
    while cur:
        chain.append(cur)
        nxt = -1
        rest = cur
        while rest:
            low = rest & -rest
            rest ^= low
            cand = cur ^ low
            if oracle is not None:
                ok = oracle.in_psi_mask(cand)
            else:
                ok = stable_core.is_local_max_stable(g, set_of(cand), cap)
            if ok:
                nxt = cand
                break
        if nxt < 0:
            raise AccessibilityFailure(set_of(cur))
        cur = nxt
    chain.reverse()
    return chain


def _mask_matching_cover(adj: list, universe: int) -> int:
    """Covered-vertex mask of the leaf-greedy maximum matching of the forest
    induced on ``universe``."""
    active = universe
    covered = 0
    while active:
        pend = -1
        for v in bits_of(active):
            live = adj[v] & active
            if not live:
                active ^= 1 << v
            elif live.bit_count() == 1:
                pend = v
                break
        if pend < 0:
            break
        w = (adj[pend] & active).bit_length() - 1
        covered |= (1 << pend) | (1 << w)
        active &= ~((1 << pend) | (1 << w))
    return covered


def _mask_pendant_k2(adj: list, comp: int) -> tuple[int, int]:
    for x in bits_of(comp):
        live = adj[x] & comp
        if live.bit_count() == 1:
            y = live.bit_length() - 1
            if (adj[y] & comp).bit_count() == 2:
                return x, y
    raise InternalError("perfect tree without a pendant-K2 edge")  # pragma: no cover


def _component_chain(adj: list, comp: int, sc: int) -> list:
    """Chain for one component of the induced neighborhood.

    ``sc`` is a maximum stable set of the tree on ``comp``. Non-perfect
    components are first embedded (fresh partners appended to ``adj``), then
    pendant-K2 edges are peeled; chain elements only ever contain original
    vertices, so the embedding never leaks into the certificate.
    """
    if comp.bit_count() == 1:
        if sc != comp:  # pragma: no cover - excluded by theory
            raise InternalError("isolated neighborhood vertex outside the set")
        return [sc]
    covered = _mask_matching_cover(adj, comp)
    if covered != comp:
        for v in bits_of(comp & ~covered):
            w = len(adj)
            adj.append(1 << v)
            adj[v] |= 1 << w
            comp |= 1 << w
    # peel pendant-K2 edges; record case (i) x-prefixes and case (ii) suffixes
    ops = []
    while comp.bit_count() > 2:
        x, y = _mask_pendant_k2(adj, comp)
        bx, by = 1 << x, 1 << y
        if sc & bx:
            ops.append((True, bx))
            sc ^= bx
        elif sc & by:
            ops.append((False, sc))
            sc ^= by
        else:  # pragma: no cover - a maximum stable set meets every K2
            raise InternalError("matched edge disjoint from a maximum stable set")
        comp &= ~(bx | by)
    if sc.bit_count() != 1:  # pragma: no cover
        raise InternalError("base K2 holds more than one chosen vertex")
    chain = [sc]
    for is_prefix, payload in reversed(ops):
        if is_prefix:
            chain = [payload] + [m | payload for m in chain]
        else:
            chain = chain + [payload]
    return chain


def _constructive_chain_masks(g: Graph, s_mask: int) -> list:
    adj = list(g._adj)
    h_mask = 0
    for v in bits_of(s_mask):
        h_mask |= adj[v] | (1 << v)
    comps = []
    un = h_mask
    while un:
        comp = un & -un
        frontier = comp
        while frontier:
            grow = 0
            for v in bits_of(frontier):
                grow |= adj[v]
            frontier = grow & h_mask & ~comp
            comp |= frontier
        un &= ~comp
        comps.append(comp)
    chain = []
    prefix = 0
    for comp in comps:
        sc = s_mask & comp
        for m in _component_chain(adj, comp, sc):
            chain.append(prefix | m)
        prefix |= sc
    return chain


def chain_decompose(g: Graph, s, strategy: str = "greedy_peel",
                    oracle: SubsetOracle | None = None,
                    cap: int | None = None) -> ChainCertificate:
    """Produce a nested chain of family members growing one vertex at a time
    up to ``s``.

    greedy_peel removes, at each step, the lowest-index vertex whose removal
    keeps the set in the family; on forests this always succeeds, elsewhere
    it may raise AccessibilityFailure. constructive (forests only) follows
    the structural route instead: split the induced neighborhood into
    components, embed each non-perfect component into a perfect tree, peel
    pendant-K2 edges, and rejoin the component chains by disjoint union.
    """
    s, s_mask = g.check_vertices_mask(s)
    if not _in_psi(g, s, oracle, cap, s_mask):
        raise NotInPsiError("target set is not a local maximum stable set")
    if strategy == "greedy_peel":
        masks = _greedy_peel_masks(g, s_mask, oracle, cap)
    elif strategy == "constructive":
        if not g.is_forest:
            raise NotAForestError("constructive strategy requires a forest")
        masks = _constructive_chain_masks(g, s_mask)
        if oracle is not None:
            for m in masks:
                if not oracle.in_psi_mask(m):  # pragma: no cover - theory
                    raise InternalError("constructive chain left the family")
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return ChainCertificate(graph=g, chain=tuple(set_of(m) for m in masks),
                            strategy=strategy)


def verify_greedoid(g: Graph, cap: int | None = None,
                    oracle: SubsetOracle | None = None) -> GreedoidReport:
    """Enumerate the family and check both greedoid axioms exhaustively.

    Accessibility: every nonempty member has an element whose removal stays
    in the family. Exchange: for members X, Y with |X| = |Y| + 1 some x in
    X - Y extends Y inside the family. All violations are reported, in
    canonical order.
    """
    if oracle is None:
        oracle = SubsetOracle(g, cap)
    n = g.vertex_count
    flags = oracle.psi_flags()
    members = oracle.psi_masks()
    by_size = [[] for _ in range(n + 1)]
    for m in members:
        by_size[m.bit_count()].append(m)

    acc_bad = []
    for m in members:
        rest = m
        ok = not m
        while rest:
            low = rest & -rest
            rest ^= low
            if flags[m ^ low]:
                ok = True
                break
        if not ok:
            acc_bad.append(m)

    exch_bad = []
    full = g.full_mask()
    for k in range(n):
        ys = by_size[k]
        xs = by_size[k + 1]
        if not ys or not xs:
            continue
        for y in ys:
            ext = 0
            rest = full & ~y
            while rest:
                low = rest & -rest
                rest ^= low
                if flags[y | low]:
                    ext |= low
            for x in xs:
                if not (x & ~y & ext):
                    exch_bad.append((y, x))

    acc_sets = canonical_sets(acc_bad)
    key = lambda s: (len(s), tuple(sorted(s)))
    exch_pairs = sorted(((set_of(y), set_of(x)) for y, x in exch_bad),
                        key=lambda p: (key(p[0]), key(p[1])))
    return GreedoidReport(
        family_size=len(members),
        accessibility_ok=not acc_sets,
        exchange_ok=not exch_pairs,
        accessibility_violations=tuple(acc_sets),
        exchange_violations=tuple(exch_pairs),
    )
