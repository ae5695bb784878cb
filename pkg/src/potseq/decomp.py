"""Edge-disjoint decompositions of complete graphs, plus the graph join.

K_{2m+1} splits into m spanning cycles: close the zig-zag path
0, 1, -1, 2, -2, ... on Z_{2m} through a hub vertex and rotate it; the
two edges of each difference class sit antipodally, so the m rotations
are pairwise edge-disjoint and exhaust the edge set.

K_{2m} splits into one perfect matching and m-1 spanning cycles via the
round-robin rounds F_0..F_{2m-2} on Z_{2m-1} plus a hub: F_0 is kept as
the matching and consecutive rounds F_{2i-1}, F_{2i} are merged; rounds
at rotation distance coprime to 2m-1 always union into a single cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import Edge, SimpleGraph, _norm_edge

ONE_FACTOR = "one-factor"
SPANNING_CYCLE = "spanning-cycle"

Part = tuple[str, frozenset[Edge]]

__all__ = [
    "ONE_FACTOR",
    "SPANNING_CYCLE",
    "Decomposition",
    "decompose_even",
    "decompose_odd",
    "join",
    "cycle_vertex_order",
]


@dataclass(frozen=True)
class Decomposition:
    """A partition of E(K_n) into labeled parts."""

    n: int
    parts: tuple[Part, ...]

    def validate(self) -> None:
        """Raise DomainError unless the parts tile K_n and match their roles."""
        seen: set[Edge] = set()
        for role, edges in self.parts:
            if seen & edges:
                raise DomainError("parts share an edge")
            seen |= edges
            if role == ONE_FACTOR:
                _check_one_factor(self.n, edges)
            elif role == SPANNING_CYCLE:
                _check_spanning_cycle(self.n, edges)
            else:
                raise DomainError(f"unknown part role {role!r}")
        if len(seen) != self.n * (self.n - 1) // 2:
            raise DomainError("parts do not cover the complete graph")


def _check_one_factor(n: int, edges: frozenset[Edge]) -> None:
    if n % 2:
        raise DomainError("a one-factor needs evenly many vertices")
    touched: set[int] = set()
    for u, v in edges:
        if u in touched or v in touched:
            raise DomainError("one-factor vertices must be covered exactly once")
        touched |= {u, v}
    if touched != set(range(n)):
        raise DomainError("one-factor must cover every vertex")


def _check_spanning_cycle(n: int, edges: frozenset[Edge]) -> None:
    order = cycle_vertex_order(edges)
    if len(order) != n or set(order) != set(range(n)):
        raise DomainError("spanning cycle must visit every vertex once")


def cycle_vertex_order(edges: frozenset[Edge]) -> list[int]:
    """Traversal order of a single cycle, starting at its smallest vertex
    and stepping first to that vertex's smaller neighbor."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    if any(len(vs) != 2 for vs in nbrs.values()):
        raise DomainError("edge set is not a disjoint union of cycles")
    start = min(nbrs)
    order = [start, min(nbrs[start])]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
        if nxt == start:
            break
        order.append(nxt)
    if len(order) != len(nbrs):
        raise DomainError("edge set is not a single cycle")
    return order


def decompose_odd(m: int) -> Decomposition:
    """Split K_{2m+1} into m spanning cycles."""
    if m < 1:
        raise DomainError("m must be >= 1")
    ring = 2 * m
    hub = ring
    base = [0]
    for j in range(1, m):
        base.append(j)
        base.append(ring - j)
    base.append(m)
    parts: list[Part] = []
    for i in range(m):
        cyc = [hub] + [(b + i) % ring for b in base]
        edges = frozenset(
            _norm_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))
        )
        parts.append((SPANNING_CYCLE, edges))
    return Decomposition(2 * m + 1, tuple(parts))


def decompose_even(m: int) -> Decomposition:
    """Split K_{2m} into one perfect matching and m-1 spanning cycles."""
    if m < 1:
        raise DomainError("m must be >= 1")
    ring = 2 * m - 1
    hub = ring

    def round_edges(i: int) -> set[Edge]:
        edges = {_norm_edge(hub, i)}
        for j in range(1, m):
            edges.add(_norm_edge((i + j) % ring, (i - j) % ring))
        return edges

    parts: list[Part] = [(ONE_FACTOR, frozenset(round_edges(0)))]
    for i in range(1, m):
        parts.append(
            (SPANNING_CYCLE, frozenset(round_edges(2 * i - 1) | round_edges(2 * i)))
        )
    return Decomposition(2 * m, tuple(parts))


def join(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    """Disjoint union plus every cross edge; h's vertices shift up by g.n."""
    edges = set(g.edges)
    edges |= {(u + g.n, v + g.n) for u, v in h.edges}
    edges |= {(u, v + g.n) for u in range(g.n) for v in range(h.n)}
    return SimpleGraph(g.n + h.n, frozenset(edges))
