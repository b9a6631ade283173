"""Embedding forests into perfect forests without changing alpha.

Every vertex left exposed by a maximum matching (isolated vertices count as
exposed) receives a fresh pendant partner; the old matching plus the new
edges is then a perfect matching, and alpha is unchanged because both the
order and the matching number grew by the same amount. Using the
internal-cover matching instead makes every new edge land on a pendant or
isolated vertex of the original forest.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import stable_core
from .errors import InternalError, InvalidVertexError
from .graph_core import Graph, induced_subgraph
from .tree_matching import internal_cover_matching, maximum_matching


@dataclass(frozen=True)
class Embedding:
    """A forest enlarged to a perfect forest containing it."""

    host: Graph
    original_vertices: frozenset
    added_edges: tuple  # tuple[(original index, new index)] in host indices


def _fresh_label(base: str, taken: set) -> str:
    cand = f"{base}_w"
    k = 2
    while cand in taken:
        cand = f"{base}_w{k}"
        k += 1
    taken.add(cand)
    return cand


def embed_perfect(g: Graph, mode: str = "any") -> Embedding:
    """Embed a forest into a perfect forest with the same stability number.

    mode="any" partners the vertices exposed by the leaf-greedy maximum
    matching; mode="pendant_only" uses the internal-cover matching so that
    every added edge meets a pendant or isolated vertex of ``g``. Original
    vertices keep their indices and labels in the host.
    """
    if mode not in ("any", "pendant_only"):
        raise ValueError(f"unknown mode {mode!r}")
    matching = maximum_matching(g) if mode == "any" else internal_cover_matching(g)
    exposed = [v for v in range(g.vertex_count) if v not in matching.covered]
    if not exposed:
        return Embedding(host=g, original_vertices=frozenset(range(g.vertex_count)),
                         added_edges=())
    taken = set(g.labels)
    labels = list(g.labels)
    edges = list(g.edges)
    added = []
    for v in exposed:
        w = len(labels)
        labels.append(_fresh_label(g.labels[v], taken))
        edges.append((v, w))
        added.append((v, w))
    host = Graph(labels, edges)
    host_mu = len(maximum_matching(host))
    if 2 * host_mu != host.vertex_count:
        raise InternalError("embedding failed to produce a perfect forest")
    if stable_core.alpha(host).size != stable_core.alpha(g).size:
        raise InternalError("embedding changed the stability number")
    return Embedding(host=host, original_vertices=frozenset(range(g.vertex_count)),
                     added_edges=tuple(added))


def psi_restrict_check(host: Graph, sub_vertices, a) -> bool:
    """Membership of ``a`` in the family of the subgraph induced by
    ``sub_vertices``.

    When ``a`` is a local maximum stable set of ``host``, restriction can
    only shrink its neighborhood, so this check must come out true; callers
    use it to validate that implication on concrete instances.
    """
    sub = host.check_vertices(sub_vertices)
    a = host.check_vertices(a)
    if not a <= sub:
        raise InvalidVertexError("a-set must lie inside the induced vertex set")
    order = sorted(sub)
    remap = {old: new for new, old in enumerate(order)}
    return stable_core.is_local_max_stable(induced_subgraph(host, sub),
                                           frozenset(remap[v] for v in a))
