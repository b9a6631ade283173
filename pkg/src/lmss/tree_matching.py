"""Maximum matchings on forests and the alpha + mu = n identity.

The leaf-greedy rule (match the lowest-index pendant to its neighbor,
delete both, repeat) is exact on forests and gives reproducible witnesses.
On top of it sits the alternating-path shifting procedure that upgrades any
maximum matching into one covering every internal vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import stable_core
from .errors import InternalError, NotAForestError
from .graph_core import Graph, bits_of


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    edges: tuple  # tuple[(u, v)] with u < v, sorted
    covered: frozenset

    @classmethod
    def from_edges(cls, edges) -> "Matching":
        es = tuple(sorted(tuple(sorted(e)) for e in edges))
        cov = [v for e in es for v in e]
        if len(cov) != len(set(cov)):
            raise ValueError("edges share an endpoint")
        return cls(edges=es, covered=frozenset(cov))

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class KonigEgervaryReport:
    """alpha + mu versus the order of a forest, plus the perfect verdict."""

    alpha: int
    mu: int
    order: int
    identity_holds: bool
    has_perfect_matching: bool


def _require_forest(g: Graph, who: str):
    if not g.is_forest:
        raise NotAForestError(f"{who} requires an acyclic graph")


def maximum_matching(g: Graph) -> Matching:
    """Leaf-greedy maximum matching of a forest.

    Repeatedly matches the lowest-index pendant of the remaining graph to
    its unique neighbor and deletes both; isolated vertices are dropped.
    """
    _require_forest(g, "maximum_matching")
    adj = g._adj
    active = g.full_mask()
    edges = []
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
        nb = adj[pend] & active
        w = nb.bit_length() - 1
        edges.append((pend, w) if pend < w else (w, pend))
        active &= ~((1 << pend) | (1 << w))
    return Matching.from_edges(edges)


def internal_cover_matching(g: Graph) -> Matching:
    """A maximum matching of a forest covering every internal vertex.

    Starts from the leaf-greedy matching, then repairs each exposed internal
    vertex by walking an alternating path (lowest-index eligible neighbor at
    every step), swapping matched and unmatched edges until the deficiency
    lands on a pendant. Matching size is preserved by every swap, so the
    result is still maximum; exposed vertices end up pendant or isolated.
    """
    _require_forest(g, "internal_cover_matching")
    n = g.vertex_count
    adj = g._adj
    partner = [-1] * n
    for u, v in maximum_matching(g).edges:
        partner[u] = v
        partner[v] = u

    def exposed_internal():
        for v in range(n):
            if partner[v] < 0 and adj[v].bit_count() >= 2:
                return v
        return -1

    while True:
        v = exposed_internal()
        if v < 0:
            break
        visited = 1 << v
        e, came_from = v, -1
        while adj[e].bit_count() >= 2:
            choices = adj[e] & ~((1 << came_from) if came_from >= 0 else 0)
            q = (choices & -choices).bit_length() - 1
            if partner[q] < 0:
                raise InternalError("maximum matching left two adjacent exposed vertices")
            r = partner[q]
            if visited & ((1 << r) | (1 << q)):
                raise InternalError("alternating walk revisited a vertex in a forest")
            visited |= (1 << q) | (1 << r)
            partner[e], partner[q] = q, e
            partner[r] = -1
            e, came_from = r, q
    edges = [(v, partner[v]) for v in range(n) if 0 <= partner[v] and v < partner[v]]
    m = Matching.from_edges(edges)
    if len(m) * 2 != sum(1 for v in range(n) if partner[v] >= 0):  # pragma: no cover
        raise InternalError("partner table inconsistent")
    return m


def verify_konig_egervary(g: Graph) -> KonigEgervaryReport:
    """Report alpha, mu, and whether alpha + mu equals the order.

    The identity holds on every forest (bipartiteness); the report exists
    so callers and tests can confirm it instance by instance.
    """
    _require_forest(g, "verify_konig_egervary")
    a = stable_core.alpha(g).size
    mu = len(maximum_matching(g))
    n = g.vertex_count
    return KonigEgervaryReport(
        alpha=a,
        mu=mu,
        order=n,
        identity_holds=(a + mu == n),
        has_perfect_matching=(2 * mu == n),
    )
