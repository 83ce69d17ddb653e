"""Closure parameter engines, checked against exhaustive-ordering oracles."""
import random
from itertools import combinations, permutations

import pytest

from closurekernels.closure import (
    ClassCounts,
    closure_number,
    degeneracy,
    exhaustive_weak_closure,
    moon_moser_bound,
    neighborhood_class_bound,
    neighborhood_classes,
    pq_split,
    vertex_closure,
    verify_closure_ordering,
    weak_closure_ordering,
)
from closurekernels.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from closurekernels.oracles import minimum_vertex_cover


def random_graph(n, p, rng):
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def brute_weak_closure_by_permutations(g):
    # direct min over all n! orders; only for tiny n
    best = None
    for order in permutations(range(g.n)):
        worst = 0
        alive = set(range(g.n))
        for v in order:
            nv = g.adj(v) & alive
            cl = 0
            for w in alive:
                if w == v or w in nv:
                    continue
                cl = max(cl, len(nv & g.adj(w) & alive))
            worst = max(worst, cl)
            alive.remove(v)
        cand = 1 + worst
        if best is None or cand < best:
            best = cand
    return 1 if best is None else best


def test_vertex_closure_basics():
    c4 = cycle_graph(4)
    assert [vertex_closure(c4, v) for v in range(4)] == [2, 2, 2, 2]
    assert closure_number(c4) == 3
    kn = complete_graph(5)
    # universal vertices have closure 0
    assert all(vertex_closure(kn, v) == 0 for v in range(5))
    assert closure_number(kn) == 1
    assert closure_number(empty_graph(4)) == 1
    assert closure_number(empty_graph(0)) == 1
    with pytest.raises(ValueError):
        vertex_closure(c4, 9)


def test_closure_number_k2n():
    for n in range(2, 6):
        g = complete_bipartite(2, n)
        assert closure_number(g) == n + 1


def test_weak_closure_examples():
    assert weak_closure_ordering(complete_graph(6)).weak_closure == 1
    assert weak_closure_ordering(cycle_graph(4)).weak_closure == 3
    # a star has a universal hub, so peeling the hub first certifies 1
    assert weak_closure_ordering(star_graph(5)).weak_closure == 1
    # two stars glued at their leaves: no universal vertex
    g = Graph(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)])
    ordering = weak_closure_ordering(g)
    assert verify_closure_ordering(g, ordering)
    assert ordering.weak_closure == exhaustive_weak_closure(g)


def test_weak_closure_k25():
    g = complete_bipartite(2, 5)
    assert closure_number(g) == 6
    assert weak_closure_ordering(g).weak_closure == 3
    assert exhaustive_weak_closure(g) == 3


def test_ordering_certificate_and_ties():
    g = cycle_graph(5)
    o = weak_closure_ordering(g)
    assert sorted(o.order) == list(range(5))
    assert len(o.step_closure) == 5
    assert verify_closure_ordering(g, o)
    # ties break to the smallest id, so reruns are identical
    assert weak_closure_ordering(g) == o


def test_exhaustive_dp_matches_permutations():
    rng = random.Random(7)
    for n in range(1, 6):
        for _ in range(12):
            g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
            assert exhaustive_weak_closure(g) == brute_weak_closure_by_permutations(g)


def test_greedy_equals_exhaustive_random():
    rng = random.Random(2026)
    for _ in range(150):
        n = rng.randint(1, 8)
        g = random_graph(n, rng.choice([0.15, 0.3, 0.5, 0.7, 0.9]), rng)
        o = weak_closure_ordering(g)
        assert o.weak_closure == exhaustive_weak_closure(g)
        assert verify_closure_ordering(g, o)
        # parameter sandwich
        d, _ = degeneracy(g)
        assert o.weak_closure <= closure_number(g)
        assert o.weak_closure <= d + 1


def test_pq_split():
    g = cycle_graph(4)
    o = weak_closure_ordering(g)
    pos = o.position()
    for v in g.vertices():
        pq = pq_split(g, o, v)
        assert pq.prior | pq.posterior == g.adj(v)
        assert not (pq.prior & pq.posterior)
        for w in pq.prior:
            assert pos[w] < pos[v]
        for w in pq.posterior:
            assert pos[w] > pos[v]
    with pytest.raises(ValueError):
        pq_split(g, o, 17)


def test_posterior_intersection_property():
    # nonadjacent u,v: |Q(u) cap N(v)| <= weak_closure - 1
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 8)
        g = random_graph(n, rng.choice([0.3, 0.6]), rng)
        o = weak_closure_ordering(g)
        pos = o.position()
        for u in g.vertices():
            for v in g.vertices():
                if u == v or g.has_edge(u, v):
                    continue
                qu = pq_split(g, o, u).posterior
                qv = pq_split(g, o, v).posterior
                if pos[u] < pos[v]:
                    assert len(qu & qv) <= len(qu & g.adj(v))
                    assert len(qu & g.adj(v)) <= o.weak_closure - 1


def test_degeneracy_values():
    assert degeneracy(complete_graph(6))[0] == 5
    assert degeneracy(cycle_graph(5))[0] == 2
    assert degeneracy(star_graph(7))[0] == 1
    assert degeneracy(empty_graph(3))[0] == 0
    d, order = degeneracy(path_graph(6))
    assert d == 1 and sorted(order) == list(range(6))


def test_neighborhood_classes_star():
    g = star_graph(5)
    o = weak_closure_ordering(g)
    counts = neighborhood_classes(g, frozenset({0}), o)
    # all leaves share N = {hub}
    assert counts.n_classes == 1
    assert counts.max_n_class == 5
    assert counts.n_classes <= counts.p_classes * counts.q_classes
    with pytest.raises(ValueError):
        neighborhood_classes(g, frozenset(), o)  # leaves-only is fine, V is not


def test_neighborhood_classes_product_bound():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 9)
        g = random_graph(n, rng.choice([0.25, 0.5]), rng)
        cover = minimum_vertex_cover(g)
        o = weak_closure_ordering(g)
        counts = neighborhood_classes(g, cover, o)
        assert counts.n_classes <= counts.p_classes * counts.q_classes


def test_moon_moser():
    assert moon_moser_bound(0) == 1
    assert moon_moser_bound(1) == 3
    assert moon_moser_bound(3) == 3
    assert moon_moser_bound(4) == 9
    assert moon_moser_bound(6) == 9


def test_class_bound_edges():
    assert neighborhood_class_bound(0, 3, 5) == 0
    assert neighborhood_class_bound(1, 1, 1) == 9
    with pytest.raises(ValueError):
        neighborhood_class_bound(-1, 1, 1)


def test_class_bound_dominates_reality():
    # bound with measured max class size must dominate |I|
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randint(2, 10)
        g = random_graph(n, rng.choice([0.3, 0.5, 0.8]), rng)
        cover = minimum_vertex_cover(g)
        o = weak_closure_ordering(g)
        counts = neighborhood_classes(g, cover, o)
        size_i = g.n - len(cover)
        if size_i == 0 or len(cover) == 0:
            # the explicit formula is 0 for an empty cover by construction
            continue
        bound = neighborhood_class_bound(len(cover), o.weak_closure, counts.max_n_class)
        assert size_i <= bound
        assert counts.n_classes <= neighborhood_class_bound(len(cover), o.weak_closure, 1)
