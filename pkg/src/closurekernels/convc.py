"""Connected vertex cover kernels, plain and annotated, plus the
component-order generalization (all components of G - S small, S connected).

Two routes:

- the twinset rule alone (parameterized by weak closure): remove one member
  of any false-twin class strictly larger than its neighborhood;
- the annotated route (parameterized by closure number): vertices are
  colored white/red, red meaning "must be in the cover"; trivial decisions
  and a simplicial-vertex rule shrink the instance, and red marks convert
  back to plain instances by attaching a pendant leaf.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .capvc import twin_classes
from .graph import (
    Graph,
    connected_components,
    delete_vertices,
    is_clique,
    is_connected_set,
)


@dataclass(frozen=True)
class ConVcInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget must be nonnegative")


@dataclass(frozen=True)
class AnnotatedConVcInstance:
    graph: Graph
    red: frozenset[int]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget must be nonnegative")
        for v in self.red:
            if not (0 <= v < self.graph.n):
                raise ValueError(f"red vertex {v} out of range")


@dataclass(frozen=True)
class Decided:
    """A rule decided the instance outright."""

    answer: bool
    reason: str


# ---------------------------------------------------------------------------
# twinset route

def twinset_rule(inst: ConVcInstance) -> tuple[ConVcInstance, dict | None]:
    """Remove the largest-id member of the first false-twin class that has at
    least two members and more members than neighbors."""
    g = inst.graph
    for cls in twin_classes(g):
        if len(cls) < 2:
            continue
        shared = g.adj(cls[0])
        if len(cls) <= len(shared):
            continue
        victim = cls[-1]
        new_graph, _ = delete_vertices(g, [victim])
        entry = {
            "rule": "twinset",
            "removed": victim,
            "class": list(cls),
            "neighborhood": sorted(shared),
        }
        return ConVcInstance(new_graph, inst.k), entry
    return inst, None


def kernelize_convc(inst: ConVcInstance) -> tuple[ConVcInstance, list[dict]]:
    """Twinset rule to exhaustion."""
    trace: list[dict] = []
    while True:
        inst, entry = twinset_rule(inst)
        if entry is None:
            return inst, trace
        trace.append(entry)


# ---------------------------------------------------------------------------
# annotated route

def trivial_rules(inst: AnnotatedConVcInstance) -> tuple[AnnotatedConVcInstance | Decided, dict | None]:
    """Isolated-white removal and outright decisions.

    - drop isolated white vertices;
    - No when two components contain edges, or two contain red vertices;
    - Yes when a single vertex carries every edge and all red marks, k >= 1.
    """
    g, red, k = inst.graph, inst.red, inst.k
    isolated_white = [v for v in g.vertices() if g.degree(v) == 0 and v not in red]
    if isolated_white:
        new_graph, idmap = delete_vertices(g, isolated_white)
        back = {old: new for new, old in enumerate(idmap)}
        new_red = frozenset(back[v] for v in red)
        entry = {"rule": "isolated-white", "removed": isolated_white}
        return AnnotatedConVcInstance(new_graph, new_red, k), entry
    comps = connected_components(g)
    with_edges = [c for c in comps if any(g.degree(v) > 0 for v in c)]
    if len(with_edges) >= 2:
        return Decided(False, "two components contain edges"), {"rule": "split-edges", "decided": "no"}
    with_red = [c for c in comps if any(v in red for v in c)]
    if len(with_red) >= 2:
        return Decided(False, "two components contain red vertices"), {"rule": "split-red", "decided": "no"}
    if k >= 1:
        for v in g.vertices():
            if red <= {v} and all(v in (a, b) for a, b in g.edges()):
                return Decided(True, f"vertex {v} alone is a solution"), {"rule": "single-vertex", "decided": "yes"}
    return inst, None


def find_simplicial(g: Graph) -> int | None:
    """Smallest vertex whose neighborhood induces a clique."""
    for v in g.vertices():
        if is_clique(g, g.adj(v)):
            return v
    return None


def simplicial_rule(inst: AnnotatedConVcInstance) -> tuple[AnnotatedConVcInstance | Decided, dict | None]:
    """Remove the smallest simplicial vertex of a connected graph on >= 3
    vertices. A red vertex costs one unit of budget; a white or degree-one
    vertex turns its whole neighborhood red. Budget exhaustion decides No."""
    g, red, k = inst.graph, inst.red, inst.k
    if g.n < 3:
        raise ValueError("simplicial rule needs at least 3 vertices")
    if len(connected_components(g)) != 1:
        raise ValueError("simplicial rule needs a connected graph")
    v = find_simplicial(g)
    if v is None:
        return inst, None
    new_k = k
    new_red = set(red)
    if v in red:
        new_k -= 1
    if v not in red or g.degree(v) == 1:
        new_red |= g.adj(v)
    new_red.discard(v)
    entry = {
        "rule": "simplicial",
        "removed": v,
        "was_red": v in red,
        "colored_red": sorted(g.adj(v) - red) if (v not in red or g.degree(v) == 1) else [],
    }
    if new_k < 0:
        return Decided(False, "budget exhausted"), {"rule": "simplicial", "decided": "no"}
    new_graph, idmap = delete_vertices(g, [v])
    back = {old: new for new, old in enumerate(idmap)}
    return AnnotatedConVcInstance(new_graph, frozenset(back[w] for w in new_red), new_k), entry


def attach_leaves(inst: AnnotatedConVcInstance) -> ConVcInstance:
    """Forget annotations: pendant leaves force red vertices into any
    connected cover of the resulting plain instance."""
    g, red = inst.graph, inst.red
    edges = list(g.edges())
    nxt = g.n
    for v in sorted(red):
        edges.append((v, nxt))
        nxt += 1
    return ConVcInstance(Graph(nxt, edges), inst.k)


def _decided_plain(decision: Decided) -> ConVcInstance:
    # canonical trivially-yes / trivially-no plain instances
    if decision.answer:
        return ConVcInstance(Graph(0), 0)
    return ConVcInstance(Graph(2, [(0, 1)]), 0)


def kernelize_convc_annotated(inst: AnnotatedConVcInstance) -> tuple[AnnotatedConVcInstance | Decided, list[dict]]:
    """Trivial rules and the simplicial rule to exhaustion."""
    trace: list[dict] = []
    while True:
        nxt, entry = trivial_rules(inst)
        if entry is not None:
            trace.append(entry)
        if isinstance(nxt, Decided):
            return nxt, trace
        inst = nxt
        if entry is not None:
            continue
        g = inst.graph
        if g.n < 3 or len(connected_components(g)) != 1:
            return inst, trace
        nxt, entry = simplicial_rule(inst)
        if entry is None:
            return inst, trace
        trace.append(entry)
        if isinstance(nxt, Decided):
            return nxt, trace
        inst = nxt


def kernelize_convc_c(inst: ConVcInstance) -> tuple[ConVcInstance, list[dict]]:
    """Closure-number route: lift to all-white, reduce, re-attach leaves."""
    annotated = AnnotatedConVcInstance(inst.graph, frozenset(), inst.k)
    reduced, trace = kernelize_convc_annotated(annotated)
    if isinstance(reduced, Decided):
        return _decided_plain(reduced), trace
    return attach_leaves(reduced), trace


# ---------------------------------------------------------------------------
# component order connectivity

MAX_ELL = 4


@dataclass(frozen=True)
class CocInstance:
    graph: Graph
    ell: int
    k: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("component bound must be positive")
        if self.ell > MAX_ELL:
            raise ValueError(f"component bound above the supported maximum {MAX_ELL}")
        if self.k < 0:
            raise ValueError("budget must be nonnegative")


def small_component_rule(inst: CocInstance) -> tuple[CocInstance, dict | None]:
    """Delete every whole component with at most ell vertices."""
    g = inst.graph
    small = [c for c in connected_components(g) if len(c) <= inst.ell]
    if not small or g.n == 0:
        return inst, None
    gone = sorted(v for c in small for v in c)
    new_graph, _ = delete_vertices(g, gone)
    entry = {"rule": "small-component", "removed": gone, "components": [list(c) for c in small]}
    return CocInstance(new_graph, inst.ell, inst.k), entry


def _connected_sets(g: Graph, r: int) -> list[tuple[int, ...]]:
    return [t for t in combinations(g.vertices(), r) if is_connected_set(g, t)]


def _twin_signature(g: Graph, t: tuple[int, ...]):
    ts = set(t)
    best = None
    for order in permutations(t):
        bits = tuple(
            1 if g.has_edge(order[i], order[j]) else 0
            for i in range(len(order))
            for j in range(i + 1, len(order))
        )
        outside = tuple(tuple(sorted(g.adj(v) - ts)) for v in order)
        key = (bits, outside)
        if best is None or key < best:
            best = key
    return best


def connected_set_twin_classes(g: Graph, r: int) -> list[list[tuple[int, ...]]]:
    """Connected r-vertex sets grouped by twin equivalence.

    Two sets are twins when some bijection is simultaneously an isomorphism
    of the induced subgraphs and an exact match of each vertex's
    neighborhood outside its own set.
    """
    if r < 1 or r > MAX_ELL:
        raise ValueError(f"set size must be between 1 and {MAX_ELL}")
    groups: dict[object, list[tuple[int, ...]]] = {}
    for t in _connected_sets(g, r):
        groups.setdefault(_twin_signature(g, t), []).append(t)
    return sorted(groups.values(), key=lambda cls: cls[0])


def component_twin_rule(inst: CocInstance) -> tuple[CocInstance, dict | None]:
    """For each size r up to ell, find a twin class with at least k+ell+2
    pairwise disjoint members and delete the last member set.

    Disjoint members share one outside neighborhood, so at most k of them
    can meet a budget-k solution; the rest anchor the safety argument.
    """
    g, ell, k = inst.graph, inst.ell, inst.k
    need = k + ell + 2
    for r in range(1, ell + 1):
        for cls in connected_set_twin_classes(g, r):
            if len(cls) < need:
                continue
            chosen: list[tuple[int, ...]] = []
            occupied: set[int] = set()
            for t in cls:
                if not (set(t) & occupied):
                    chosen.append(t)
                    occupied |= set(t)
            if len(chosen) < need:
                continue
            victim = chosen[need - 1]
            new_graph, _ = delete_vertices(g, victim)
            entry = {
                "rule": "component-twin",
                "removed": list(victim),
                "size": r,
                "class_members": [list(t) for t in chosen[:need]],
            }
            return CocInstance(new_graph, ell, k), entry
    return inst, None


def kernelize_coc(inst: CocInstance) -> tuple[CocInstance, list[dict]]:
    """Small components out first, then twin deletions, until neither rule
    fires. Running the component sweep first keeps every surviving twin set
    attached to a nonempty outside neighborhood."""
    trace: list[dict] = []
    while True:
        inst, entry = small_component_rule(inst)
        if entry is not None:
            trace.append(entry)
            continue
        inst, entry = component_twin_rule(inst)
        if entry is None:
            return inst, trace
        trace.append(entry)
