"""Dominating set on split graphs: structured orderings and three
reductions, plus the biclique-freeness check used for the bipartite route.

The split kernel works against a fixed clique/independent bipartition:

- an independent vertex adjacent to the whole clique is deletable;
- a clique vertex whose closed neighborhood is contained in another's is
  deletable;
- among independent vertices, trimmed neighborhoods (drop the longest
  all-adjacent clique prefix along a clique-first ordering) have size
  below the weak closure, so a large sunflower among them marks one
  vertex as deletable.

Isolated vertices are self-dominating and get charged to the budget first.
"""
from __future__ import annotations

from dataclasses import dataclass

from .closure import ClosureOrdering, _suffix_closures, weak_closure_ordering
from .combinatorics import find_sunflower
from .graph import (
    Graph,
    clique_number,
    contains_biclique,
    delete_vertices,
    is_clique,
    is_independent_set,
)


@dataclass(frozen=True)
class DsInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget must be nonnegative")


@dataclass(frozen=True)
class DsDecided:
    answer: bool
    reason: str


@dataclass(frozen=True)
class SplitPartition:
    clique: tuple[int, ...]
    independent: tuple[int, ...]


class GoodOrderingError(RuntimeError):
    """The clique-first ordering construction ran out of moves; indicates a
    non-split input or an internal invariant violation."""


def _split_partition_opt(g: Graph) -> SplitPartition | None:
    degs = sorted(((g.degree(v), v) for v in g.vertices()),
                  key=lambda t: (-t[0], t[1]))
    m = 0
    for i, (d, _) in enumerate(degs, start=1):
        if d >= i - 1:
            m = i
    head = sum(d for d, _ in degs[:m])
    tail = sum(d for d, _ in degs[m:])
    if head != m * (m - 1) + tail:
        return None
    clique = tuple(sorted(v for _, v in degs[:m]))
    independent = tuple(sorted(v for _, v in degs[m:]))
    if not is_clique(g, clique) or not is_independent_set(g, independent):
        raise AssertionError("degree test passed but the partition is invalid")
    return SplitPartition(clique, independent)


def split_partition(g: Graph) -> SplitPartition:
    """Degree-sequence split test; the top-degree prefix is the clique side
    and always a maximum clique. Raises ValueError for non-split graphs."""
    part = _split_partition_opt(g)
    if part is None:
        raise ValueError("graph is not split")
    return part


def is_split(g: Graph) -> bool:
    return _split_partition_opt(g) is not None


def _closure_within(g: Graph, alive: frozenset[int], v: int) -> int:
    nv = g.adj(v) & alive
    best = 0
    for w in alive:
        if w == v or w in nv:
            continue
        best = max(best, len(nv & g.adj(w)))
    return best


def good_ordering(g: Graph, part: SplitPartition) -> ClosureOrdering:
    """An ordering certifying the weak closure in which every clique vertex
    comes before every independent vertex.

    Built front-and-back: a clique vertex of currently small closure can
    lead, an independent vertex of small degree can trail, and once the
    maximum degree drops below the weak closure the rest goes in sorted
    clique-then-independent order.
    """
    gamma = weak_closure_ordering(g).weak_closure
    cset = set(part.clique)
    iset = set(part.independent)
    alive = set(g.vertices())
    front: list[int] = []
    back: list[int] = []
    while alive:
        frozen = frozenset(alive)
        deg = {v: len(g.adj(v) & frozen) for v in alive}
        if max(deg.values()) <= gamma - 1:
            front += sorted(cset & alive) + sorted(iset & alive)
            alive.clear()
            break
        if min(deg.values()) >= gamma:
            picks = [v for v in sorted(cset & alive)
                     if _closure_within(g, frozen, v) < gamma]
            if not picks:
                raise GoodOrderingError("no low-closure clique vertex available")
            front.append(picks[0])
            alive.discard(picks[0])
        else:
            picks = [v for v in sorted(iset & alive) if deg[v] <= gamma - 1]
            if not picks:
                raise GoodOrderingError("no low-degree independent vertex available")
            back.append(picks[0])
            alive.discard(picks[0])
    order = tuple(front + back[::-1])
    step = _suffix_closures(g, order)
    wc = 1 + max(step) if step else 1
    if wc != gamma:
        raise GoodOrderingError("constructed ordering does not certify the weak closure")
    pos = {v: i for i, v in enumerate(order)}
    if part.clique and part.independent:
        if max(pos[v] for v in part.clique) > min(pos[v] for v in part.independent):
            raise GoodOrderingError("clique vertices must all come first")
    return ClosureOrdering(order, step, wc)


def trimmed_neighborhoods(g: Graph, part: SplitPartition,
                          ordering: ClosureOrdering) -> dict[int, tuple[int, frozenset[int]]]:
    """For each independent vertex u: the length s of the longest prefix of
    the ordered clique fully adjacent to u, and N(u) minus that prefix.

    The trimmed set has at most weak_closure - 1 vertices. Raises when some
    independent vertex is adjacent to the entire clique (reduce that first).
    """
    pos = ordering.position()
    cseq = sorted(part.clique, key=lambda v: pos[v])
    out: dict[int, tuple[int, frozenset[int]]] = {}
    for u in part.independent:
        nu = g.adj(u)
        s = None
        for i, cv in enumerate(cseq):
            if cv not in nu:
                s = i
                break
        if s is None:
            raise ValueError(f"vertex {u} is adjacent to the whole clique")
        out[u] = (s, nu - set(cseq[:s]))
    return out


def check_partition(g: Graph, part: SplitPartition) -> None:
    """Raise unless `part` is a valid clique/independent bipartition of g."""
    cs, ins = set(part.clique), set(part.independent)
    if cs & ins or (cs | ins) != set(g.vertices()):
        raise ValueError("partition must cover the vertex set exactly once")
    if not is_clique(g, cs):
        raise ValueError("clique side is not a clique")
    if not is_independent_set(g, ins):
        raise ValueError("independent side is not independent")


def _resolve_partition(g: Graph, part: SplitPartition | None) -> SplitPartition:
    if part is not None:
        check_partition(g, part)
        return part
    return split_partition(g)


def isolated_rule(inst: DsInstance) -> tuple[DsInstance | DsDecided, dict | None]:
    """Isolated vertices must dominate themselves: charge each to the
    budget, or decide No when they outnumber it."""
    g = inst.graph
    iso = [v for v in g.vertices() if g.degree(v) == 0]
    if not iso:
        return inst, None
    if len(iso) > inst.k:
        return DsDecided(False, "more isolated vertices than budget"), {
            "rule": "isolated", "decided": "no", "isolated": iso}
    new_graph, _ = delete_vertices(g, iso)
    entry = {"rule": "isolated", "removed": iso, "budget_spent": len(iso)}
    return DsInstance(new_graph, inst.k - len(iso)), entry


def covers_clique_rule(inst: DsInstance,
                       part: SplitPartition | None = None) -> tuple[DsInstance, dict | None]:
    """Delete every independent vertex adjacent to the entire clique side.

    Under the default degree-sequence partition the clique side is a maximum
    clique, so this can never fire; it matters for caller-supplied partitions
    whose clique side is not maximal.
    """
    g = inst.graph
    part = _resolve_partition(g, part)
    cfull = frozenset(part.clique)
    gone = [u for u in part.independent if g.adj(u) == cfull]
    if not gone:
        return inst, None
    new_graph, _ = delete_vertices(g, gone)
    return DsInstance(new_graph, inst.k), {"rule": "covers-clique", "removed": gone}


def dominated_clique_vertex_rule(inst: DsInstance,
                                 part: SplitPartition | None = None) -> tuple[DsInstance, dict | None]:
    """Delete the first clique vertex whose closed neighborhood is contained
    in another clique vertex's closed neighborhood (ties keep the smaller id)."""
    g = inst.graph
    part = _resolve_partition(g, part)
    for v in part.clique:
        nv = g.closed_adj(v)
        for u in part.clique:
            if u == v:
                continue
            nu = g.closed_adj(u)
            if nu >= nv and (nu != nv or u < v):
                new_graph, _ = delete_vertices(g, [v])
                entry = {"rule": "dominated-clique-vertex", "removed": v, "dominator": u}
                return DsInstance(new_graph, inst.k), entry
    return inst, None


def dominated_independent_vertex_rule(inst: DsInstance,
                                      part: SplitPartition | None = None) -> tuple[DsInstance, dict | None]:
    """Delete the first independent vertex whose open neighborhood contains
    another independent vertex's open neighborhood (ties keep the smaller id).

    Safe because some optimal solution avoids the independent side entirely
    (each independent vertex in a solution can swap to a clique neighbor, as
    long as there are no isolated vertices): a clique-side solution hitting
    the smaller neighborhood also hits the larger one, so the vertex with
    the larger neighborhood is never the hard one to dominate. Exhausting
    this makes the independent-side neighborhoods an antichain, which keeps
    the trimmed neighborhoods pairwise distinct; without it, repeated
    trimmed sets can dodge the sunflower rule and break the kernel's
    independent-side size bound.
    """
    g = inst.graph
    part = _resolve_partition(g, part)
    if any(g.degree(v) == 0 for v in g.vertices()):
        raise ValueError("remove isolated vertices first")
    for v in part.independent:
        nv = g.adj(v)
        for u in part.independent:
            if u == v:
                continue
            nu = g.adj(u)
            if nu <= nv and (nu != nv or u < v):
                new_graph, _ = delete_vertices(g, [v])
                entry = {"rule": "dominated-independent-vertex",
                         "removed": v, "witness": u}
                return DsInstance(new_graph, inst.k), entry
    return inst, None


def sunflower_rule(inst: DsInstance,
                   part: SplitPartition | None = None) -> tuple[DsInstance, dict | None]:
    """Find k+2 independent vertices whose trimmed neighborhoods form a
    sunflower; delete the one with the longest trimmed prefix (ties to the
    largest id).

    Requires no independent vertex adjacent to the whole clique side, so
    exhaust covers_clique_rule first when supplying a partition by hand.
    """
    g, k = inst.graph, inst.k
    part = _resolve_partition(g, part)
    ivs = sorted(part.independent)
    if len(ivs) < k + 2:
        return inst, None
    ordering = good_ordering(g, part)
    trimmed = trimmed_neighborhoods(g, part, ordering)
    family = [trimmed[u][1] for u in ivs]
    sf = find_sunflower(family, k + 2)
    if sf is None:
        return inst, None
    chosen = sorted(sf.members)[:k + 2]
    group = [ivs[i] for i in chosen]
    victim = max(group, key=lambda u: (trimmed[u][0], u))
    new_graph, _ = delete_vertices(g, [victim])
    entry = {
        "rule": "sunflower",
        "removed": victim,
        "group": group,
        "core": sorted(sf.core),
    }
    return DsInstance(new_graph, inst.k), entry


def kernelize_ds_split(inst: DsInstance) -> tuple[DsInstance | DsDecided, list[dict]]:
    """All four reductions to exhaustion, cheapest checks first. The
    partition and ordering are recomputed from scratch every round."""
    _resolve_partition(inst.graph, None)
    trace: list[dict] = []
    while True:
        out, entry = isolated_rule(inst)
        if entry is not None:
            trace.append(entry)
        if isinstance(out, DsDecided):
            return out, trace
        inst = out
        if entry is not None:
            continue
        for rule in (covers_clique_rule, dominated_clique_vertex_rule,
                     dominated_independent_vertex_rule, sunflower_rule):
            inst, entry = rule(inst)
            if entry is not None:
                trace.append(entry)
                break
        else:
            return inst, trace


def biclique_freeness_report(g: Graph) -> dict:
    """Weak closure, clique number, and whether the graph stays free of the
    complete bipartite subgraph both sides of size closure + clique + 1."""
    wc = weak_closure_ordering(g).weak_closure
    omega = clique_number(g)
    rho = wc + omega + 1
    found = contains_biclique(g, rho, rho)
    return {
        "weak_closure": wc,
        "clique_number": omega,
        "rho": rho,
        "biclique": None if found is None else [sorted(found[0]), sorted(found[1])],
        "consistent": found is None,
    }
