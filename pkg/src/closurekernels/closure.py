"""Closure parameters: per-vertex closure, closure number, weak closure.

The per-vertex closure of v is the largest number of common neighbors v
shares with a nonadjacent vertex; a universal vertex has closure 0 (the
maximum over an empty set). The closure number is 1 + max over vertices.
The weak closure number is the least g such that every induced subgraph has
a vertex with per-vertex closure < g; it is computed exactly by greedy
peeling and certified by the emitted ordering.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .graph import Graph, induced_subgraph, is_independent_set, maximal_cliques


def vertex_closure(g: Graph, v: int) -> int:
    """max over w outside N[v] of |N(v) ∩ N(w)|; 0 when no such w."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    nv = g.adj(v)
    best = 0
    for w in g.vertices():
        if w == v or w in nv:
            continue
        common = len(nv & g.adj(w))
        if common > best:
            best = common
    return best


def closure_number(g: Graph) -> int:
    """Smallest c with every per-vertex closure < c, i.e. 1 + max closure."""
    if g.n == 0:
        return 1
    return 1 + max(vertex_closure(g, v) for v in g.vertices())


@dataclass(frozen=True)
class ClosureOrdering:
    """A peeling order with its per-step closure certificate.

    order[i] is the i-th peeled vertex; step_closure[i] is its per-vertex
    closure inside the graph induced on order[i:]. weak_closure is
    1 + max(step_closure), or 1 for the empty graph.
    """

    order: tuple[int, ...]
    step_closure: tuple[int, ...]
    weak_closure: int

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def _suffix_closures(g: Graph, order: tuple[int, ...]) -> tuple[int, ...]:
    # recompute each step's closure in the suffix graph, independent of how
    # the order was produced
    steps = []
    alive = list(order)
    for i in range(len(order)):
        sub, idmap = induced_subgraph(g, alive[i:])
        pos = {old: new for new, old in enumerate(idmap)}
        steps.append(vertex_closure(sub, pos[order[i]]))
    return tuple(steps)


def weak_closure_ordering(g: Graph) -> ClosureOrdering:
    """Greedy peeling: repeatedly remove a vertex of minimum closure.

    Ties break to the smallest id. The greedy minimum is exact: the weak
    closure equals the max over induced subgraphs of the min per-vertex
    closure, and the peeling chain attains that max.
    """
    remaining = set(g.vertices())
    order: list[int] = []
    steps: list[int] = []
    adj = {v: g.adj(v) for v in g.vertices()}
    while remaining:
        best_v, best_cl = -1, None
        for v in sorted(remaining):
            nv = adj[v] & remaining
            cl = 0
            for w in remaining:
                if w == v or w in nv:
                    continue
                c = len(nv & adj[w] & remaining)
                if c > cl:
                    cl = c
            if best_cl is None or cl < best_cl:
                best_v, best_cl = v, cl
        order.append(best_v)
        steps.append(best_cl)  # type: ignore[arg-type]
        remaining.remove(best_v)
    wc = 1 + max(steps, default=0)
    return ClosureOrdering(tuple(order), tuple(steps), wc)


def verify_closure_ordering(g: Graph, ordering: ClosureOrdering) -> bool:
    """Recompute the certificate from scratch and compare."""
    if sorted(ordering.order) != list(g.vertices()):
        return False
    steps = _suffix_closures(g, ordering.order)
    if steps != ordering.step_closure:
        return False
    return ordering.weak_closure == 1 + max(steps, default=0)


def exhaustive_weak_closure(g: Graph) -> int:
    """Minimum over all n! peeling orders of (1 + max step closure).

    Subset DP over bitmasks, equivalent to enumerating every order:
    best(S) = min over v in S of max(cl_{G[S]}(v), best(S - v)).
    Intended as an independent oracle for small n (<= ~16).
    """
    n = g.n
    if n == 0:
        return 1
    masks = g.adjacency_masks()

    @lru_cache(maxsize=None)
    def best(s: int) -> int:
        if s == 0:
            return 0
        res = None
        t = s
        while t:
            vbit = t & (-t)
            t ^= vbit
            v = vbit.bit_length() - 1
            nv = masks[v] & s
            cl = 0
            rest = s & ~nv & ~vbit
            while rest:
                wbit = rest & (-rest)
                rest ^= wbit
                w = wbit.bit_length() - 1
                c = (nv & masks[w] & s).bit_count()
                if c > cl:
                    cl = c
            sub = best(s ^ vbit)
            val = cl if cl > sub else sub
            if res is None or val < res:
                res = val
        return res  # type: ignore[return-value]

    out = 1 + best((1 << n) - 1)
    best.cache_clear()
    return out


@dataclass(frozen=True)
class PQSplit:
    """Neighbors of v before (prior) and after (posterior) v in an ordering."""

    prior: frozenset[int]
    posterior: frozenset[int]


def pq_split(g: Graph, ordering: ClosureOrdering, v: int) -> PQSplit:
    pos = ordering.position()
    if v not in pos:
        raise ValueError(f"vertex {v} not in ordering")
    pv = pos[v]
    prior = frozenset(w for w in g.adj(v) if pos[w] < pv)
    return PQSplit(prior, g.adj(v) - prior)


def degeneracy(g: Graph) -> tuple[int, tuple[int, ...]]:
    """(degeneracy, peel order) by repeated minimum-degree removal."""
    remaining = set(g.vertices())
    order = []
    d = 0
    while remaining:
        v = min(remaining, key=lambda u: (len(g.adj(u) & remaining), u))
        d = max(d, len(g.adj(v) & remaining))
        order.append(v)
        remaining.remove(v)
    return d, tuple(order)


@dataclass(frozen=True)
class ClassCounts:
    """Neighborhood-class statistics of the independent rest of a cover."""

    p_classes: int
    q_classes: int
    n_classes: int
    max_n_class: int


def neighborhood_classes(g: Graph, cover: frozenset[int], ordering: ClosureOrdering) -> ClassCounts:
    """Counts of distinct P(v), Q(v), N(v) over I = V - cover.

    I must be independent (cover is a vertex cover), otherwise ValueError.
    """
    ind = [v for v in g.vertices() if v not in cover]
    if not is_independent_set(g, ind):
        raise ValueError("complement of cover is not independent")
    p_seen, q_seen, n_seen = set(), set(), {}
    for v in ind:
        pq = pq_split(g, ordering, v)
        p_seen.add(pq.prior)
        q_seen.add(pq.posterior)
        n_seen.setdefault(g.adj(v), 0)
        n_seen[g.adj(v)] += 1
    return ClassCounts(
        p_classes=len(p_seen),
        q_classes=len(q_seen),
        n_classes=len(n_seen),
        max_n_class=max(n_seen.values(), default=0),
    )


def moon_moser_bound(k: int) -> int:
    """3^ceil(k/3): generous cap on the number of maximal cliques on k vertices."""
    return 3 ** ((k + 2) // 3)


def count_maximal_cliques(g: Graph) -> int:
    return len(maximal_cliques(g))


def neighborhood_class_bound(k: int, weak_closure: int, t: int, clique_count: int | None = None) -> int:
    """Explicit bound on |I| for an independent set I whose neighborhoods all
    lie in a k-vertex cover, every N-class of I has at most t members, and the
    graph is weakly closed with the given value.

    clique_count, when given, is the exact number of maximal cliques of the
    graph induced on the cover; otherwise the 3^ceil(k/3) cap is used.
    """
    if k < 0 or weak_closure < 0 or t < 0:
        raise ValueError("bound arguments must be nonnegative")
    mk = clique_count if clique_count is not None else moon_moser_bound(k)
    s = sum(comb(k, i) for i in range(weak_closure))
    return t * mk * ((weak_closure - 1) * comb(k, 2) + mk * k * s) * s
