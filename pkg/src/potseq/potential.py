"""Potentially-H-graphic decisions with certificates.

The main engine answers "does some realization of this degree sequence
contain the target as a subgraph?" exactly.  Slot i carries the i-th
largest degree.  Any realization containing the target can be relabeled
so its vertices sit on the slots in degree order, which turns the
question into: does some placement of the target's vertices onto slots
extend to a simple graph meeting every slot degree exactly?  So the
search enumerates placements up to symmetry (automorphisms of the
target composed with permutations of equal-degree slots) and runs an
exact backtracking completion for each:

* completion decides the open vertex pairs in slot order, satisfying
  one slot at a time, greedier demands first, and prunes with an
  Erdos-Gallai feasibility test on the residual demands;
* dead residual states are memoized, so exhausting a negative instance
  stays cheap.

Two independent, much slower engines exist for cross-checks: exhaustive
enumeration of all labeled graphs (containment re-derived by raw
injection scans), and breadth-first exploration of the realization
space under 2-switches.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import DomainError, NotGraphical
from .graphs import (
    Edge,
    SimpleGraph,
    canonical_form,
    degree_sequence,
    graph_from_mask,
    graph_from_masks,
    realize,
)
from .sequences import DegreeSequence, format_sequence, is_graphical, is_graphical_multiset

__all__ = [
    "TargetPattern",
    "PotentialVerdict",
    "make_kp11",
    "contains_subgraph",
    "is_potentially",
    "is_potentially_by_enumeration",
    "is_potentially_by_switching",
    "realize_with_forced_edges",
    "realization_classes",
    "two_switch_neighbors",
    "certificate_errors",
]


@dataclass(frozen=True)
class TargetPattern:
    """A small subgraph target in reduced form (no isolated vertices)."""

    graph: SimpleGraph
    name: str = ""

    def __post_init__(self) -> None:
        if self.graph.n < 1:
            raise DomainError("target needs at least one vertex")
        degs = self.graph.degrees()
        if any(d == 0 for d in degs):
            raise DomainError("target has isolated vertices; pass it in reduced form")

    @property
    def cache_key(self) -> str:
        if self.name:
            return self.name
        _, bits = canonical_form(self.graph)
        return f"g{self.graph.n}-{bits:x}"


@dataclass(frozen=True)
class PotentialVerdict:
    """Answer plus, when positive, a realization and an embedding into it."""

    answer: bool
    certificate: SimpleGraph | None = None
    embedding: dict[int, int] | None = None


def make_kp11(p: int) -> TargetPattern:
    """Complete tripartite K_{p,1,1}: two adjacent apexes joined to p
    pairwise non-adjacent vertices; degrees ((p+1)^2, 2^p)."""
    if p < 1:
        raise DomainError("p must be >= 1")
    edges = {(0, 1)}
    for i in range(2, p + 2):
        edges.add((0, i))
        edges.add((1, i))
    return TargetPattern(SimpleGraph(p + 2, frozenset(edges)), name=f"kp11:{p}")


def contains_subgraph(g: SimpleGraph, h: TargetPattern) -> dict[int, int] | None:
    """Injective edge-preserving map V(H) -> V(g), or None.

    Backtracking over pattern vertices in decreasing-degree order with
    degree-based candidate pruning.  Containment is not induced: extra
    edges in g are fine.
    """
    H = h.graph
    if H.n > g.n or len(H.edges) > len(g.edges):
        return None
    gm = g.adjacency_masks()
    hm = H.adjacency_masks()
    gdeg = [m.bit_count() for m in gm]
    hdeg = [m.bit_count() for m in hm]
    order = sorted(range(H.n), key=lambda v: -hdeg[v])
    rank = {v: i for i, v in enumerate(order)}
    full = (1 << g.n) - 1
    images = [-1] * H.n

    def extend(i: int, used: int) -> bool:
        if i == H.n:
            return True
        hv = order[i]
        cand = full & ~used
        m = hm[hv]
        while m:
            hn = (m & -m).bit_length() - 1
            m &= m - 1
            if rank[hn] < i:
                cand &= gm[images[hn]]
        while cand:
            gv = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if gdeg[gv] >= hdeg[hv]:
                images[hv] = gv
                if extend(i + 1, used | (1 << gv)):
                    return True
        images[hv] = -1
        return False

    if extend(0, 0):
        return {v: images[v] for v in range(H.n)}
    return None


@lru_cache(maxsize=None)
def _automorphisms(pattern: TargetPattern) -> tuple[tuple[int, ...], ...]:
    H = pattern.graph
    degs = H.degrees()
    auts = []
    for perm in permutations(range(H.n)):
        if any(degs[perm[v]] != degs[v] for v in range(H.n)):
            continue
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in H.edges
            for u, v in H.edges
        ):
            auts.append(perm)
    return tuple(auts)


@lru_cache(maxsize=65536)
def _placements(terms: tuple[int, ...], pattern: TargetPattern) -> tuple[tuple[int, ...], ...]:
    """Inequivalent slot assignments for the pattern's vertices.

    Each result maps pattern vertex h to slots[h]; one representative
    per orbit of Aut(pattern) composed with permutations of equal-degree
    slots.  Slots whose degree is below the pattern degree are never
    offered, so an empty result proves non-potentiality by itself.
    """
    H = pattern.graph
    k = H.n
    hdeg = H.degrees()
    classes: list[tuple[int, list[int]]] = []
    for slot, d in enumerate(terms):
        if classes and classes[-1][0] == d:
            classes[-1][1].append(slot)
        else:
            classes.append((d, [slot]))
    auts = _automorphisms(pattern)
    caps = [len(slots) for _, slots in classes]
    assign = [0] * k
    seen: set[tuple[int, ...]] = set()
    out: list[tuple[int, ...]] = []

    def rec(h: int) -> None:
        if h == k:
            a = tuple(assign)
            key = min(tuple(a[alpha[v]] for v in range(k)) for alpha in auts)
            if key in seen:
                return
            seen.add(key)
            taken = [0] * len(classes)
            slots = [0] * k
            for v in range(k):
                c = a[v]
                slots[v] = classes[c][1][taken[c]]
                taken[c] += 1
            out.append(tuple(slots))
            return
        for c, (d, _slots) in enumerate(classes):
            if caps[c] and d >= hdeg[h]:
                caps[c] -= 1
                assign[h] = c
                rec(h + 1)
                caps[c] += 1

    rec(0)
    return tuple(out)


def _complete_masks(terms: tuple[int, ...], forced: list[int]) -> list[int] | None:
    """Exact search for adjacency masks meeting every slot degree and
    containing every forced edge; None when no such graph exists."""
    n = len(terms)
    adj = list(forced)
    r = [terms[i] - adj[i].bit_count() for i in range(n)]
    if min(r) < 0 or sum(r) % 2:
        return None
    dead: set[tuple[int, ...]] = set()

    def rec(u: int) -> bool:
        while u < n and r[u] == 0:
            u += 1
        if u == n:
            return True
        key = (u, *r[u:])
        if key in dead:
            return False
        need = r[u]
        cands = [v for v in range(u + 1, n) if r[v] > 0 and not (adj[u] >> v) & 1]
        if len(cands) >= need:
            cands.sort(key=lambda v: (-r[v], v))
            bit_u = 1 << u
            for combo in combinations(cands, need):
                r[u] = 0
                for v in combo:
                    adj[u] |= 1 << v
                    adj[v] |= bit_u
                    r[v] -= 1
                if is_graphical_multiset(r[u + 1 :]) and rec(u + 1):
                    return True
                for v in combo:
                    adj[u] ^= 1 << v
                    adj[v] ^= bit_u
                    r[v] += 1
                r[u] = need
        dead.add(key)
        return False

    return adj if rec(0) else None


def realize_with_forced_edges(seq: DegreeSequence, forced: Iterable[Edge]) -> SimpleGraph | None:
    """A realization (slot i has the i-th sequence degree) containing every
    forced edge, or None when no such realization exists."""
    n = len(seq)
    masks = [0] * n
    for u, v in forced:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"bad forced edge ({u}, {v})")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    result = _complete_masks(seq.terms, masks)
    if result is None:
        return None
    return graph_from_masks(n, result)


def is_potentially(seq: DegreeSequence, h: TargetPattern) -> PotentialVerdict:
    """Exact decision, with a certificate realization on success."""
    if not is_graphical(seq):
        raise NotGraphical(f"{seq} is not graphical")
    n = len(seq)
    if h.graph.n > n:
        return PotentialVerdict(False)
    g = realize(seq)
    emb = contains_subgraph(g, h)
    if emb is not None:
        return PotentialVerdict(True, g, emb)
    hedges = sorted(h.graph.edges)
    for slots in _placements(seq.terms, h):
        forced = [0] * n
        for u, v in hedges:
            a, b = slots[u], slots[v]
            forced[a] |= 1 << b
            forced[b] |= 1 << a
        result = _complete_masks(seq.terms, forced)
        if result is not None:
            cert = graph_from_masks(n, result)
            return PotentialVerdict(True, cert, {v: slots[v] for v in range(h.graph.n)})
    return PotentialVerdict(False)


@lru_cache(maxsize=8)
def _masks_by_degrees(n: int) -> dict[tuple[int, ...], list[int]]:
    pairs = list(combinations(range(n), 2))
    out: dict[tuple[int, ...], list[int]] = {}
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = pairs[i]
            deg[u] += 1
            deg[v] += 1
        out.setdefault(tuple(sorted(deg, reverse=True)), []).append(mask)
    return out


def _contains_by_injections(g: SimpleGraph, h: TargetPattern) -> bool:
    """Containment by scanning raw injections; deliberately shares no code
    with contains_subgraph."""
    H = h.graph
    if H.n > g.n:
        return False
    hedges = sorted(H.edges)
    gedges = g.edges
    for images in permutations(range(g.n), H.n):
        if all(
            ((images[u], images[v]) if images[u] < images[v] else (images[v], images[u]))
            in gedges
            for u, v in hedges
        ):
            return True
    return False


def is_potentially_by_enumeration(seq: DegreeSequence, h: TargetPattern) -> bool:
    """Independent oracle: scan every labeled graph with these degrees.

    Exponential in C(n,2); intended for n <= 6.
    """
    if not is_graphical(seq):
        raise NotGraphical(f"{seq} is not graphical")
    n = len(seq)
    for mask in _masks_by_degrees(n).get(seq.terms, []):
        if _contains_by_injections(graph_from_mask(n, mask), h):
            return True
    return False


def two_switch_neighbors(g: SimpleGraph) -> Iterator[SimpleGraph]:
    """Graphs one 2-switch away: swap two vertex-disjoint edges for two
    absent edges on the same four vertices."""
    edges = sorted(g.edges)
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        for x, y, z, w in ((a, c, b, d), (a, d, b, c)):
            e1 = (x, y) if x < y else (y, x)
            e2 = (z, w) if z < w else (w, z)
            if e1 not in g.edges and e2 not in g.edges:
                yield SimpleGraph(g.n, (g.edges - {(a, b), (c, d)}) | {e1, e2})


def realization_classes(seq: DegreeSequence) -> Iterator[SimpleGraph]:
    """Every realization up to degree-preserving relabeling, explored by
    breadth-first search over 2-switches (the switch space is connected)."""
    start = realize(seq)
    seen = {canonical_form(start)}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        yield g
        for nxt in two_switch_neighbors(g):
            key = canonical_form(nxt)
            if key not in seen:
                seen.add(key)
                queue.append(nxt)


def is_potentially_by_switching(seq: DegreeSequence, h: TargetPattern) -> bool:
    """Second independent oracle: check containment across the 2-switch
    exploration of the realization space.  Intended for n <= 7."""
    if not is_graphical(seq):
        raise NotGraphical(f"{seq} is not graphical")
    return any(contains_subgraph(g, h) is not None for g in realization_classes(seq))


def certificate_errors(
    seq: DegreeSequence,
    target: TargetPattern,
    graph: SimpleGraph,
    embedding: dict[int, int],
) -> list[str]:
    """Why (graph, embedding) fails to certify that seq is potentially
    target-graphic; empty when the certificate is valid."""
    problems: list[str] = []
    if degree_sequence(graph) != seq:
        problems.append(
            f"certificate degrees {format_sequence(degree_sequence(graph))} "
            f"do not match {format_sequence(seq)}"
        )
    H = target.graph
    if sorted(embedding) != list(range(H.n)):
        problems.append("embedding does not cover the target's vertices")
        return problems
    images = list(embedding.values())
    if len(set(images)) != len(images):
        problems.append("embedding is not injective")
        return problems
    if any(not 0 <= v < graph.n for v in images):
        problems.append("embedding image outside the graph")
        return problems
    for u, v in sorted(H.edges):
        if not graph.has_edge(embedding[u], embedding[v]):
            problems.append(
                f"target edge ({u}, {v}) maps to missing edge "
                f"({embedding[u]}, {embedding[v]})"
            )
    return problems
