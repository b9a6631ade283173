"""Shared fixtures and deliberately naive reference oracles.

The oracles below work straight off the edge list with itertools-style
subset enumeration. They are kept independent of the library's bitmask and
table machinery so that every derived expected value is cross-checked by a
second route.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from lmss import Graph, FamilySpec, generate


# -- naive oracles -----------------------------------------------------------


def naive_is_stable(g: Graph, s) -> bool:
    s = set(s)
    return not any(u in s and v in s for u, v in g.edges)


def naive_alpha(g: Graph) -> int:
    n = g.vertex_count
    for k in range(n, 0, -1):
        for comb in combinations(range(n), k):
            if naive_is_stable(g, comb):
                return k
    return 0


def naive_omega(g: Graph) -> set:
    a = naive_alpha(g)
    return {frozenset(c) for c in combinations(range(g.vertex_count), a)
            if naive_is_stable(g, c)}


def naive_closed_neighborhood(g: Graph, s) -> frozenset:
    out = set(s)
    for u, v in g.edges:
        if u in s:
            out.add(v)
        if v in s:
            out.add(u)
    return frozenset(out)


def naive_alpha_within(g: Graph, allowed) -> int:
    """alpha of the subgraph induced by ``allowed``, by subset enumeration."""
    allowed = sorted(allowed)
    for k in range(len(allowed), 0, -1):
        for comb in combinations(allowed, k):
            if naive_is_stable(g, comb):
                return k
    return 0


def naive_is_local_max_stable(g: Graph, s) -> bool:
    s = frozenset(s)
    if not naive_is_stable(g, s):
        return False
    return naive_alpha_within(g, naive_closed_neighborhood(g, s)) == len(s)


def naive_psi(g: Graph) -> set:
    out = set()
    for k in range(g.vertex_count + 1):
        for comb in combinations(range(g.vertex_count), k):
            if naive_is_local_max_stable(g, comb):
                out.add(frozenset(comb))
    return out


def naive_mu(g: Graph) -> int:
    edges = g.edges
    for k in range(len(edges), 0, -1):
        for comb in combinations(edges, k):
            seen = set()
            ok = True
            for u, v in comb:
                if u in seen or v in seen:
                    ok = False
                    break
                seen.add(u)
                seen.add(v)
            if ok:
                return k
    return 0


# -- fixture graphs ----------------------------------------------------------


@pytest.fixture(scope="session")
def fig1() -> Graph:
    return generate(FamilySpec("fig1"))


@pytest.fixture(scope="session")
def fig2() -> Graph:
    return generate(FamilySpec("fig2"))


@pytest.fixture(scope="session")
def fig4() -> Graph:
    return generate(FamilySpec("fig4_tree"))


@pytest.fixture(scope="session")
def k2() -> Graph:
    return Graph(["u", "v"], [(0, 1)])


def path(n: int) -> Graph:
    return generate(FamilySpec("path", n))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", n))


@pytest.fixture(scope="session")
def p4() -> Graph:
    return path(4)


@pytest.fixture(scope="session")
def p6() -> Graph:
    return path(6)


@pytest.fixture(scope="session")
def c4() -> Graph:
    return cycle(4)


def labels_to_set(g: Graph, *labels: str) -> frozenset:
    return frozenset(g.index_of(x) for x in labels)


# -- acceptance reporting ------------------------------------------------------

ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    """Collect a per-criterion verdict and echo it immediately."""
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
