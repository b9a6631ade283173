import pytest

from lmss.stable_core import canonical_sets
from lmss import (
    AccessibilityFailure,
    FamilySpec,
    Graph,
    K2BaseCase,
    NotAForestError,
    NotDisjointOrNotStableError,
    NotInPsiError,
    NotMaximumError,
    NotPerfectTreeError,
    SizeMismatchError,
    SplitMix64,
    SubsetOracle,
    chain_decompose,
    chain_is_valid,
    enumerate_labeled_trees,
    enumerate_psi,
    exchange_witness,
    fig7_exchange_pair,
    generate,
    nt_extend,
    pendant_k2_edge,
    union_local_max,
    verify_greedoid,
)
from conftest import (
    cycle,
    labels_to_set,
    naive_is_local_max_stable,
    naive_omega,
    naive_psi,
    path,
)
from test_graph_core import random_graph


class TestPendantK2Edge:
    def test_p4(self, p4):
        assert pendant_k2_edge(p4) == (0, 1)

    def test_p6(self, p6):
        assert pendant_k2_edge(p6) == (0, 1)

    def test_k2_base_case(self, k2):
        with pytest.raises(K2BaseCase):
            pendant_k2_edge(k2)

    def test_rejects_non_perfect(self, c4):
        for g in (path(3), path(5), Graph(["c", "x", "y", "z"], [(0, 1), (0, 2), (0, 3)])):
            with pytest.raises(NotPerfectTreeError):
                pendant_k2_edge(g)
        with pytest.raises(NotPerfectTreeError):
            pendant_k2_edge(c4)

    def test_always_exists_on_perfect_trees(self):
        from lmss import maximum_matching
        found = 0
        for n in (4, 6, 8):
            for t in enumerate_labeled_trees(n):
                if 2 * len(maximum_matching(t)) != n:
                    continue
                x, y = pendant_k2_edge(t)
                assert t.degree(x) == 1 and t.degree(y) == 2
                assert t.has_edge(x, y)
                found += 1
        assert found > 100


class TestUnionLocalMax:
    def test_fig1(self, fig1):
        a = labels_to_set(fig1, "a")
        b = labels_to_set(fig1, "d", "e")
        u = union_local_max(fig1, a, b)
        assert u == labels_to_set(fig1, "a", "d", "e")
        assert naive_is_local_max_stable(fig1, u)

    def test_p6_two_pendants(self, p6):
        assert union_local_max(p6, {0}, {5}) == {0, 5}

    def test_k2_not_stable(self, k2):
        with pytest.raises(NotDisjointOrNotStableError):
            union_local_max(k2, {0}, {1})

    def test_rejects_non_members(self, p6):
        with pytest.raises(NotInPsiError):
            union_local_max(p6, {2}, {5})  # {c} is not in the family

    def test_overlap_rejected(self, p6):
        with pytest.raises(NotDisjointOrNotStableError):
            union_local_max(p6, {0}, {0, 2})

    def test_union_always_member_on_corpus(self):
        rng = SplitMix64(18)
        for trial in range(20):
            g = random_graph(2 + rng.below(7), 30, rng)
            members = list(naive_psi(g))
            for a in members:
                for b in members:
                    if a & b or not a or not b:
                        continue
                    from lmss import is_stable
                    if not is_stable(g, a | b):
                        continue
                    assert union_local_max(g, a, b) == (a | b)


class TestNtExtend:
    def test_fig1_documented_instance(self, fig1):
        s1 = labels_to_set(fig1, "d", "e")
        s2 = labels_to_set(fig1, "a", "c", "f")
        result = nt_extend(fig1, s1, s2)
        assert result == labels_to_set(fig1, "a", "d", "e")
        assert result in naive_omega(fig1)

    def test_empty_s1_returns_s2(self, fig1):
        s2 = labels_to_set(fig1, "a", "c", "f")
        assert nt_extend(fig1, frozenset(), s2) == s2

    def test_fixed_point_on_omega(self, fig1):
        s = labels_to_set(fig1, "b", "d", "e")
        assert nt_extend(fig1, s, s) == s

    def test_bad_s1(self, fig1):
        with pytest.raises(NotInPsiError):
            nt_extend(fig1, labels_to_set(fig1, "c"), labels_to_set(fig1, "a", "c", "f"))

    def test_bad_s2(self, fig1):
        with pytest.raises(NotMaximumError):
            nt_extend(fig1, labels_to_set(fig1, "a"), labels_to_set(fig1, "a", "c"))

    def test_totality_on_random_graphs(self):
        rng = SplitMix64(19)
        for trial in range(25):
            g = random_graph(2 + rng.below(8), 25 + (trial % 4) * 15, rng)
            omega = naive_omega(g)
            for s1 in naive_psi(g):
                for s2 in omega:
                    assert nt_extend(g, s1, s2) in omega


class TestExchangeWitness:
    def test_p6_documented_instance(self, p6):
        w = exchange_witness(p6, labels_to_set(p6, "f"), labels_to_set(p6, "a", "c"))
        assert w.witness == p6.index_of("a")

    def test_fig7_small_counterexample(self):
        g = generate(FamilySpec("fig7", 6))
        s1, s2 = fig7_exchange_pair(6, "small")
        assert exchange_witness(g, s1, s2).witness is None

    def test_k2_from_empty(self, k2):
        assert exchange_witness(k2, frozenset(), {0}).witness == 0

    def test_size_mismatch(self, p6):
        with pytest.raises(SizeMismatchError):
            exchange_witness(p6, {0}, {0, 2, 5})

    def test_not_in_psi(self, p6):
        with pytest.raises(NotInPsiError):
            exchange_witness(p6, {2}, {0, 2})

    def test_scan_order_returns_first_index(self):
        # in a star, every pendant pair is in the family and both elements
        # extend a third pendant; the lower index must win
        g = Graph(["c", "x", "y", "z"], [(0, 1), (0, 2), (0, 3)])
        w = exchange_witness(g, {1}, {2, 3})
        assert w.witness == 2

    def test_oracle_and_direct_agree(self):
        rng = SplitMix64(20)
        for trial in range(15):
            g = random_graph(2 + rng.below(6), 30, rng)
            oracle = SubsetOracle(g)
            members = sorted(naive_psi(g), key=lambda s: (len(s), sorted(s)))
            for s1 in members:
                for s2 in members:
                    if len(s2) != len(s1) + 1:
                        continue
                    a = exchange_witness(g, s1, s2)
                    b = exchange_witness(g, s1, s2, oracle=oracle)
                    if g.is_forest:
                        assert a.witness is not None
                    assert a == b


class TestChainDecompose:
    def test_fig4_both_strategies(self, fig4):
        s = labels_to_set(fig4, "a", "b", "c", "d", "e")
        for strategy in ("greedy_peel", "constructive"):
            cert = chain_decompose(fig4, s, strategy)
            assert cert.strategy == strategy
            assert len(cert.chain) == 5
            assert cert.chain[-1] == s
            assert chain_is_valid(cert)
            for prefix in cert.chain:
                assert naive_is_local_max_stable(fig4, prefix)

    def test_fig4_documented_chain_is_member_chain(self, fig4):
        # the chain pictured on the tree: a, ab, abc, abcd, abcde
        names = ["a", "b", "c", "d", "e"]
        for k in range(1, 6):
            assert naive_is_local_max_stable(fig4, labels_to_set(fig4, *names[:k]))

    def test_p8_chain(self):
        g = path(8)
        s = labels_to_set(g, "a", "c", "e", "h")
        cert = chain_decompose(g, s)
        assert len(cert.chain) == 4 and cert.chain[-1] == s
        assert chain_is_valid(cert)

    def test_fig1_greedy_gets_stuck(self, fig1):
        s = labels_to_set(fig1, "a", "c", "f")
        with pytest.raises(AccessibilityFailure) as exc:
            chain_decompose(fig1, s, "greedy_peel")
        assert exc.value.stuck_set == s

    def test_fig2_greedy_peel_on_non_forest(self, fig2):
        # not a forest, yet one maximum stable set peels greedily ...
        s = labels_to_set(fig2, "u", "v", "z", "x")
        cert = chain_decompose(fig2, s, "greedy_peel")
        assert chain_is_valid(cert) and cert.chain[-1] == s
        # ... while the other has chains (see the documented prefixes) but
        # the lowest-index-first peel walks into a dead end
        with pytest.raises(AccessibilityFailure) as exc:
            chain_decompose(fig2, labels_to_set(fig2, "u", "v", "y", "x"),
                            "greedy_peel")
        assert exc.value.stuck_set == labels_to_set(fig2, "y", "x")

    def test_fig2_documented_prefixes(self, fig2):
        for names in (("u",), ("u", "v"), ("u", "v", "z"), ("u", "v", "y")):
            assert naive_is_local_max_stable(fig2, labels_to_set(fig2, *names))

    def test_empty_set_chain(self, p6):
        for strategy in ("greedy_peel", "constructive"):
            cert = chain_decompose(p6, frozenset(), strategy)
            assert cert.chain == ()

    def test_not_in_psi_rejected(self, p6):
        with pytest.raises(NotInPsiError):
            chain_decompose(p6, labels_to_set(p6, "c", "f"))

    def test_constructive_needs_forest(self, fig1):
        with pytest.raises(NotAForestError):
            chain_decompose(fig1, labels_to_set(fig1, "a"), "constructive")

    def test_unknown_strategy(self, p6):
        with pytest.raises(ValueError):
            chain_decompose(p6, {0}, "magic")

    def test_strategies_agree_on_small_trees(self):
        for n in range(2, 7):
            for t in enumerate_labeled_trees(n):
                oracle = SubsetOracle(t)
                for s in enumerate_psi(t).members:
                    for strategy in ("greedy_peel", "constructive"):
                        cert = chain_decompose(t, s, strategy, oracle=oracle)
                        assert chain_is_valid(cert, oracle=oracle)
                        assert (cert.chain[-1] if cert.chain else frozenset()) == s

    def test_forest_with_isolated_and_components(self):
        g = Graph(["a", "b", "c", "d", "e", "x"],
                  [(0, 1), (1, 2), (3, 4)])  # P3 + K2 + isolated x
        s = frozenset({0, 2, 3, 5})  # a, c, d, x
        assert naive_is_local_max_stable(g, s)
        for strategy in ("greedy_peel", "constructive"):
            cert = chain_decompose(g, s, strategy)
            assert chain_is_valid(cert) and cert.chain[-1] == s

    def test_chains_beyond_the_enumeration_cap(self):
        # forests of any size are in scope for both strategies; build a
        # 60-vertex tree and chain a stable set of pairwise-distant pendants
        from lmss import is_stable, pendant_vertices
        g = generate(FamilySpec("random_tree", 60, seed=8))
        s, used = [], 0
        for v in sorted(pendant_vertices(g)):
            if not ((1 << v) & used or g.adjacency_mask(v) & used):
                s.append(v)
                used |= (1 << v) | g.adjacency_mask(v)
        s = frozenset(s)
        assert len(s) >= 15 and is_stable(g, s)
        for strategy in ("greedy_peel", "constructive"):
            cert = chain_decompose(g, s, strategy)
            assert len(cert.chain) == len(s)
            assert cert.chain[-1] == s and chain_is_valid(cert)

    def test_strategies_on_random_forests(self):
        # multi-component forests, isolated vertices included
        for seed in range(40):
            g = generate(FamilySpec("random_forest", n=4 + seed % 9,
                                    seed=2600 + seed, delete_prob=0.3))
            oracle = SubsetOracle(g)
            for s in canonical_sets(oracle.psi_masks()):
                for strategy in ("greedy_peel", "constructive"):
                    cert = chain_decompose(g, s, strategy, oracle=oracle)
                    assert chain_is_valid(cert, oracle=oracle)
                    assert (cert.chain[-1] if cert.chain else frozenset()) == s


class TestVerifyGreedoid:
    def test_c4_accessibility_violations_exact(self, c4):
        report = verify_greedoid(c4)
        assert report.family_size == 3
        assert not report.accessibility_ok
        assert report.exchange_ok  # no adjacent-size pairs exist
        assert [sorted(s) for s in report.accessibility_violations] == [[0, 2], [1, 3]]

    def test_cycles_violate_at_every_maximum_set(self):
        for n in range(4, 9):
            g = cycle(n)
            report = verify_greedoid(g)
            assert not report.accessibility_ok
            assert naive_omega(g) <= set(report.accessibility_violations)

    def test_fig1_report(self, fig1):
        report = verify_greedoid(fig1)
        acf = labels_to_set(fig1, "a", "c", "f")
        de = labels_to_set(fig1, "d", "e")
        assert set(report.accessibility_violations) == {acf, de}
        # restricted to maximum stable sets the violation is exactly {a,c,f}
        assert set(report.accessibility_violations) & naive_omega(fig1) == {acf}
        assert (labels_to_set(fig1, "a"), de) in report.exchange_violations

    def test_fig7_exchange_violation(self):
        g = generate(FamilySpec("fig7", 6))
        report = verify_greedoid(g)
        assert not report.exchange_ok
        s1, s2 = fig7_exchange_pair(6, "small")
        assert (s1, s2) in report.exchange_violations

    def test_forests_are_greedoids(self):
        for n in range(2, 7):
            for t in enumerate_labeled_trees(n):
                report = verify_greedoid(t)
                assert report.accessibility_ok and report.exchange_ok
                assert not report.accessibility_violations
                assert not report.exchange_violations

    def test_report_matches_naive_on_random_graphs(self):
        rng = SplitMix64(21)
        for trial in range(15):
            g = random_graph(1 + rng.below(6), 35, rng)
            report = verify_greedoid(g)
            members = naive_psi(g)
            assert report.family_size == len(members)
            acc_bad = {s for s in members
                       if s and not any(s - {x} in members for x in s)}
            assert set(report.accessibility_violations) == acc_bad
            exch_bad = set()
            for x in members:
                for y in members:
                    if len(x) == len(y) + 1 and \
                            not any(y | {v} in members for v in x - y):
                        exch_bad.add((y, x))
            assert set(report.exchange_violations) == exch_bad
            assert report.accessibility_ok == (not acc_bad)
            assert report.exchange_ok == (not exch_bad)
