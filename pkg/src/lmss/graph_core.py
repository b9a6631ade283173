"""Immutable labeled simple graphs and the basic structural queries.

Vertices are dense indices 0..n-1; every vertex carries a distinct string
label so example graphs and test fixtures stay readable in I/O. Adjacency is
kept as one bitmask per vertex, which the enumeration and certificate
machinery in the other modules relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidVertexError, SelfLoopError

VertexSet = frozenset  # subset of vertex indices of a specific Graph


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(bits_of(mask))


class Graph:
    """A finite, undirected, loopless graph without multiple edges.

    Graphs are values: build once, never mutate. Vertex deletion and edge
    filtering are realized by constructing new graphs.
    """

    __slots__ = ("labels", "edges", "vertex_count", "_index", "_adj", "_forest")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]] = ()):
        labels = tuple(labels)
        n = len(labels)
        index = {}
        for i, lbl in enumerate(labels):
            if lbl in index:
                raise ValueError(f"duplicate vertex label {lbl!r}")
            index[lbl] = i
        adj = [0] * n
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {labels[u]!r}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                continue
            seen.add(e)
            adj[e[0]] |= 1 << e[1]
            adj[e[1]] |= 1 << e[0]
        self.labels = labels
        self.edges = tuple(sorted(seen))
        self.vertex_count = n
        self._index = index
        self._adj = adj
        self._forest = None

    @classmethod
    def from_label_pairs(cls, labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "Graph":
        """Build a graph from edges given as label pairs."""
        index = {lbl: i for i, lbl in enumerate(labels)}
        try:
            edges = [(index[a], index[b]) for a, b in pairs]
        except KeyError as exc:
            raise InvalidVertexError(f"unknown label {exc.args[0]!r}") from None
        return cls(labels, edges)

    # -- basic queries ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidVertexError(f"unknown label {label!r}") from None

    def label_set(self, vertices: Iterable[int]) -> list[str]:
        """Labels of a vertex set, in index order."""
        return [self.labels[v] for v in sorted(self.check_vertices(vertices))]

    def adjacency_mask(self, v: int) -> int:
        """Open neighborhood of ``v`` as a bitmask."""
        return self._adj[v]

    def closed_mask(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits_of(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] & (1 << v))

    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def check_vertices(self, vertices: Iterable[int]) -> frozenset:
        """Validate a vertex set against this graph; returns it frozen."""
        return self.check_vertices_mask(vertices)[0]

    def check_vertices_mask(self, vertices: Iterable[int]) -> tuple[frozenset, int]:
        """Validate a vertex set and return it with its bitmask."""
        s = vertices if isinstance(vertices, frozenset) else frozenset(vertices)
        m = 0
        try:
            for v in s:
                m |= 1 << v
        except (TypeError, ValueError):
            raise InvalidVertexError(f"non-index member in {s!r}") from None
        if m >> self.vertex_count:
            raise InvalidVertexError(
                f"vertex set {sorted(s)} exceeds range 0..{self.vertex_count - 1}")
        return s, m

    @property
    def is_forest(self) -> bool:
        if self._forest is None:
            self._forest = decompose(self).is_forest
        return self._forest

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.labels, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components plus the acyclicity verdicts."""

    components: tuple  # tuple[frozenset], ordered by smallest member
    is_forest: bool
    is_tree: bool


def closed_neighborhood(g: Graph, a: Iterable[int]) -> frozenset:
    """N[A]: the set A together with every vertex adjacent to a member of A.

    The empty set has empty closed neighborhood.
    """
    s = g.check_vertices(a)
    m = 0
    for v in s:
        m |= g.closed_mask(v)
    return set_of(m)


def induced_subgraph(g: Graph, a: Iterable[int]) -> Graph:
    """The subgraph spanned by ``a``; labels are preserved, indices are
    re-packed in increasing original-index order."""
    keep = sorted(g.check_vertices(a))
    remap = {old: new for new, old in enumerate(keep)}
    labels = [g.labels[v] for v in keep]
    kmask = mask_of(keep)
    edges = []
    for old in keep:
        for w in bits_of(g.adjacency_mask(old) & kmask):
            if w > old:
                edges.append((remap[old], remap[w]))
    return Graph(labels, edges)


def pendant_vertices(g: Graph) -> frozenset:
    """All vertices of degree exactly 1."""
    return frozenset(v for v in range(g.vertex_count) if g.degree(v) == 1)


def decompose(g: Graph) -> ComponentDecomposition:
    """Split into connected components and test acyclicity.

    A graph is a forest iff every component is a tree, equivalently iff
    edge_count == vertex_count - number of components. Following the
    order->1 convention, is_tree additionally requires at least 2 vertices.
    """
    n = g.vertex_count
    unvisited = g.full_mask()
    components = []
    while unvisited:
        start = unvisited & -unvisited
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits_of(frontier):
                grow |= g.adjacency_mask(v)
            frontier = grow & unvisited & ~comp
            comp |= frontier
        unvisited &= ~comp
        components.append(set_of(comp))
    is_forest = g.edge_count == n - len(components)
    is_tree = is_forest and len(components) == 1 and n >= 2
    return ComponentDecomposition(tuple(components), is_forest, is_tree)
