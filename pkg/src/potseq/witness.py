"""Constructive K_{3,1,1} witnesses for qualifying degree sequences.

Any graphical sequence with n >= 5 terms, degree sum >= 4n - 2, other
than 4^6, has a realization containing K_{3,1,1}.  Short sequences
(n <= 7) are solved by the exact potential engine.  Longer ones follow
the inductive construction:

* minimum degree <= 2: split off a minimum-degree vertex, solve the
  shorter sequence (its sum stays above the threshold), then re-attach
  the vertex to hosts whose degrees match the recorded residuals;
* minimum degree >= 3: complete a realization with a clique on the four
  highest-degree slots, walk to helper vertices y1, y2, y3 next to the
  clique, and either read off a K_{3,1,1} directly or apply one
  three-edge interchange (two rewiring patterns, depending on how y3
  meets the clique) that creates the apex edge without touching the
  rest of the embedding.

Every step lands in the trace, so the construction replays exactly; if
any structural expectation fails, the algorithm falls back to the exact
engine and flags the divergence instead of guessing.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import (
    AttachmentInfeasible,
    BelowThreshold,
    DomainError,
    InvalidInterchange,
    KnownException,
    NotGraphical,
    TooSmall,
)
from .graphs import Edge, SimpleGraph, _norm_edge, degree_sequence, realize
from .potential import certificate_errors, is_potentially, make_kp11, realize_with_forced_edges
from .sequences import DegreeSequence, degree_sum, format_sequence, is_graphical

__all__ = [
    "WitnessResult",
    "find_k311_realization",
    "reattach",
    "interchange",
    "replay_trace",
    "BaseCaseStep",
    "SeededCliqueStep",
    "EarlyContainmentStep",
    "InterchangeStep",
    "AttachStep",
    "FallbackStep",
]

log = logging.getLogger(__name__)

_EXCEPTIONAL = (4, 4, 4, 4, 4, 4)
_K311 = make_kp11(3)


@dataclass(frozen=True)
class BaseCaseStep:
    """Short sequence solved by the exact engine; the graph is recorded."""

    graph: SimpleGraph


@dataclass(frozen=True)
class SeededCliqueStep:
    """Realization completed around a clique on the top four slots."""

    graph: SimpleGraph


@dataclass(frozen=True)
class EarlyContainmentStep:
    """The seeded realization already contains the target; no rewiring."""

    note: str


@dataclass(frozen=True)
class InterchangeStep:
    case: int
    removed: tuple[Edge, Edge, Edge]
    inserted: tuple[Edge, Edge, Edge]


@dataclass(frozen=True)
class AttachStep:
    """A previously removed vertex rejoined to degree-matched hosts."""

    removed_degree: int
    neighbor_residual_degrees: tuple[int, ...]
    attached_to: tuple[int, ...]


@dataclass(frozen=True)
class FallbackStep:
    """Constructive path diverged; the exact engine supplied the graph."""

    reason: str
    graph: SimpleGraph


@dataclass(frozen=True)
class WitnessResult:
    graph: SimpleGraph
    embedding: dict[int, int]
    trace: tuple[object, ...]

    @property
    def diverged(self) -> bool:
        return any(isinstance(step, FallbackStep) for step in self.trace)


def replay_trace(trace: Iterable[object]) -> SimpleGraph:
    """Re-run a recorded construction; the result must equal the witness graph."""
    g: SimpleGraph | None = None
    for step in trace:
        if isinstance(step, (BaseCaseStep, SeededCliqueStep, FallbackStep)):
            g = step.graph
        elif isinstance(step, InterchangeStep):
            if g is None:
                raise DomainError("interchange step before any graph")
            g = interchange(g, step.removed, step.inserted)
        elif isinstance(step, AttachStep):
            if g is None:
                raise DomainError("attach step before any graph")
            g = g.add_vertex(step.attached_to)
        elif isinstance(step, EarlyContainmentStep):
            pass
        else:
            raise DomainError(f"unknown trace step {step!r}")
    if g is None:
        raise DomainError("trace contains no graph")
    return g


def interchange(
    g: SimpleGraph,
    remove: Iterable[Edge],
    insert: Iterable[Edge],
) -> SimpleGraph:
    """Swap present edges for absent ones without changing any degree."""
    rem = [_norm_edge(u, v) for u, v in remove]
    ins = [_norm_edge(u, v) for u, v in insert]
    if len(set(rem)) != len(rem) or len(set(ins)) != len(ins):
        raise InvalidInterchange("duplicate edges in the interchange")
    if set(rem) & set(ins):
        raise InvalidInterchange("an edge appears on both sides of the interchange")
    for e in rem:
        if e not in g.edges:
            raise InvalidInterchange(f"edge {e} to remove is not present")
    for e in ins:
        if e in g.edges:
            raise InvalidInterchange(f"edge {e} to insert is already present")
    lost = Counter(v for e in rem for v in e)
    gained = Counter(v for e in ins for v in e)
    if lost != gained:
        raise InvalidInterchange("interchange does not preserve degrees")
    return SimpleGraph(g.n, (g.edges - set(rem)) | set(ins))


def reattach(
    residual_realization: SimpleGraph,
    original: DegreeSequence,
    removed_degree: int,
    neighbor_residual_degrees: tuple[int, ...],
) -> SimpleGraph:
    """Add back a vertex of the removed degree, attached to distinct hosts
    whose current degrees match the recorded multiset (lowest indices
    first).  Any containment in the residual graph survives untouched."""
    if removed_degree != len(neighbor_residual_degrees):
        raise DomainError("attachment multiset size must equal the removed degree")
    need = Counter(neighbor_residual_degrees)
    degs = residual_realization.degrees()
    chosen: list[int] = []
    for v in range(residual_realization.n):
        if need.get(degs[v], 0) > 0:
            need[degs[v]] -= 1
            chosen.append(v)
    if sum(need.values()):
        raise AttachmentInfeasible(
            f"no hosts with degrees {sorted(need.elements(), reverse=True)} remain"
        )
    rebuilt = residual_realization.add_vertex(chosen)
    if degree_sequence(rebuilt) != original:
        raise AttachmentInfeasible("attachment does not restore the original sequence")
    return rebuilt


def find_k311_realization(seq: DegreeSequence) -> WitnessResult:
    """A realization of seq containing K_{3,1,1}, with embedding and trace.

    Requires: graphical, n >= 5, degree sum >= 4n - 2, and seq != 4^6.
    """
    if not is_graphical(seq):
        raise NotGraphical(f"{seq} is not graphical")
    n = len(seq)
    if n < 5:
        raise TooSmall("need at least 5 terms to host K_{3,1,1}")
    if degree_sum(seq) < 4 * n - 2:
        raise BelowThreshold(
            f"degree sum {degree_sum(seq)} is below the threshold {4 * n - 2}"
        )
    if seq.terms == _EXCEPTIONAL:
        raise KnownException("4^6 has no realization containing K_{3,1,1}")
    result = _solve(seq)
    problems = certificate_errors(seq, _K311, result.graph, result.embedding)
    if problems:
        raise RuntimeError(f"witness failed validation: {problems}")
    return result


def _solve(seq: DegreeSequence) -> WitnessResult:
    n = len(seq)
    if n <= 7:
        verdict = is_potentially(seq, _K311)
        if not verdict.answer:
            raise RuntimeError(f"{seq} unexpectedly has no realization with K_{{3,1,1}}")
        assert verdict.certificate is not None and verdict.embedding is not None
        return WitnessResult(
            verdict.certificate,
            dict(verdict.embedding),
            (BaseCaseStep(verdict.certificate),),
        )
    if seq.terms[-1] <= 2:
        return _split_off_minimum(seq)
    return _clique_then_interchange(seq)


def _split_off_minimum(seq: DegreeSequence) -> WitnessResult:
    n = len(seq)
    g = realize(seq)
    victim = n - 1
    low = seq.terms[-1]
    nbrs = sorted(g.neighbors(victim))
    residual = g.remove_vertex(victim)
    residual_seq = degree_sequence(residual)
    gdegs = g.degrees()
    nbr_res = tuple(sorted((gdegs[u] - 1 for u in nbrs), reverse=True))
    inner = _solve(residual_seq)
    rebuilt = reattach(inner.graph, seq, low, nbr_res)
    attached = tuple(sorted(rebuilt.neighbors(n - 1)))
    trace = inner.trace + (AttachStep(low, nbr_res, attached),)
    return WitnessResult(rebuilt, dict(inner.embedding), trace)


def _embedding(apexes: tuple[int, int], commons: tuple[int, int, int]) -> dict[int, int]:
    return {0: apexes[0], 1: apexes[1], 2: commons[0], 3: commons[1], 4: commons[2]}


def _clique_then_interchange(seq: DegreeSequence) -> WitnessResult:
    forced = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    g = realize_with_forced_edges(seq, forced)
    if g is None:
        return _fallback(seq, "no realization with a clique on the top four slots", ())
    assert seq.terms[1] >= 4, "second degree below 4 cannot reach the degree sum"
    trace: list[object] = [SeededCliqueStep(g)]
    v1, v2, v3, v4 = 0, 1, 2, 3
    clique = {v1, v2, v3, v4}

    outside1 = sorted(u for u in g.neighbors(v1) if u not in clique)
    if not outside1:
        return _fallback(seq, "top slot has no neighbor outside the clique", tuple(trace))
    y1 = outside1[0]
    for vj, rest in ((v2, (v3, v4)), (v3, (v2, v4)), (v4, (v2, v3))):
        if g.has_edge(y1, vj):
            trace.append(
                EarlyContainmentStep(f"helper {y1} is already adjacent to slot {vj}")
            )
            return WitnessResult(g, _embedding((v1, vj), (*rest, y1)), tuple(trace))

    outside2 = sorted(u for u in g.neighbors(v2) if u not in clique)
    if not outside2:
        return _fallback(seq, "second slot has no neighbor outside the clique", tuple(trace))
    y2 = outside2[0]
    for vj, apexes, commons in (
        (v1, (v1, v2), (v3, v4)),
        (v3, (v2, v3), (v1, v4)),
        (v4, (v2, v4), (v1, v3)),
    ):
        if g.has_edge(y2, vj):
            trace.append(
                EarlyContainmentStep(f"helper {y2} is already adjacent to slot {vj}")
            )
            return WitnessResult(g, _embedding(apexes, (*commons, y2)), tuple(trace))

    # y1's other neighbors avoid the clique entirely; skip y2 so the Case 1
    # insertions stay distinct. Minimum degree >= 3 guarantees a choice.
    third = sorted(u for u in g.neighbors(y1) if u not in (v1, y2))
    if not third:
        return _fallback(seq, "no third helper next to y1", tuple(trace))
    y3 = third[0]

    if g.has_edge(y3, v3) and g.has_edge(y3, v4):
        trace.append(
            EarlyContainmentStep(f"helper {y3} is adjacent to both low clique slots")
        )
        return WitnessResult(g, _embedding((v3, v4), (v1, v2, y3)), tuple(trace))

    removed = (_norm_edge(y1, y3), _norm_edge(v3, v4), _norm_edge(v2, y2))
    if g.has_edge(y3, v3):
        case = 1
        inserted = (_norm_edge(y1, v2), _norm_edge(y3, v4), _norm_edge(y2, v3))
    else:
        case = 2
        inserted = (_norm_edge(y1, v2), _norm_edge(y3, v3), _norm_edge(y2, v4))
    try:
        g2 = interchange(g, removed, inserted)
    except InvalidInterchange as exc:
        return _fallback(seq, f"interchange rejected: {exc}", tuple(trace))
    trace.append(InterchangeStep(case, removed, inserted))
    emb = _embedding((v1, v2), (v3, v4, y1))
    if certificate_errors(seq, _K311, g2, emb):
        return _fallback(seq, "interchange result does not embed the target", tuple(trace))
    return WitnessResult(g2, emb, tuple(trace))


def _fallback(seq: DegreeSequence, reason: str, trace: tuple[object, ...]) -> WitnessResult:
    log.warning("constructive path diverged for %s: %s", format_sequence(seq), reason)
    verdict = is_potentially(seq, _K311)
    if not verdict.answer:
        raise RuntimeError(f"{seq} unexpectedly has no realization with K_{{3,1,1}}")
    assert verdict.certificate is not None and verdict.embedding is not None
    return WitnessResult(
        verdict.certificate,
        dict(verdict.embedding),
        trace + (FallbackStep(reason, verdict.certificate),),
    )
