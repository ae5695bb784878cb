"""Degree-sequence fundamentals: parsing, graphicality, enumeration.

Sequences are canonicalized to non-increasing order at construction and
compared as multisets.  The text format is comma-separated ``BASE^EXP``
items (bare ``BASE`` is accepted on input); output always uses exponent
form with descending bases, e.g. ``5^1,4^5,1^1``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import groupby

from .errors import DomainError

__all__ = [
    "DegreeSequence",
    "degree_sum",
    "is_graphical",
    "is_graphical_multiset",
    "enumerate_graphical",
    "parse_sequence",
    "format_sequence",
]


@dataclass(frozen=True)
class DegreeSequence:
    """A non-increasing sequence of non-negative vertex degrees."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(sorted((int(t) for t in self.terms), reverse=True))
        if not terms:
            raise DomainError("a degree sequence needs at least one term")
        if terms[-1] < 0:
            raise DomainError("degrees must be non-negative")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __str__(self) -> str:
        return format_sequence(self)


def degree_sum(seq: DegreeSequence) -> int:
    """Sum of the degrees (twice the edge count of any realization)."""
    return sum(seq.terms)


def _erdos_gallai(terms: tuple[int, ...] | list[int]) -> bool:
    """Erdos-Gallai test on a non-increasing list of non-negative ints.

    Conditions are only checked up to the Durfee index (the largest k
    with d_k >= k); the remaining ones are implied.
    """
    if sum(terms) % 2:
        return False
    n = len(terms)
    if terms[0] >= n:
        return False
    prefix = 0
    for k in range(1, n + 1):
        d = terms[k - 1]
        if d < k:
            break
        prefix += d
        bound = k * (k - 1)
        for t in terms[k:]:
            bound += k if t > k else t
        if prefix > bound:
            return False
    return True


def is_graphical(seq: DegreeSequence) -> bool:
    """Whether some simple graph has exactly these degrees."""
    return _erdos_gallai(seq.terms)


def is_graphical_multiset(values: Iterable[int]) -> bool:
    """Erdos-Gallai on an unordered collection; empty means the empty graph."""
    terms = sorted(values, reverse=True)
    if not terms:
        return True
    if terms[-1] < 0:
        return False
    return _erdos_gallai(terms)


def _bounded_partitions(total: int, length: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of the given length, entries in [0, cap], summing to total."""
    if length == 1:
        if 0 <= total <= cap:
            yield (total,)
        return
    lo = (total + length - 1) // length
    for first in range(min(cap, total), lo - 1, -1):
        for rest in _bounded_partitions(total - first, length - 1, first):
            yield (first,) + rest


def enumerate_graphical(n: int, s: int) -> Iterator[DegreeSequence]:
    """All graphical length-``n`` sequences with degree sum ``s``.

    Yields in descending lexicographic order; empty when ``s`` is odd or
    outside [0, n(n-1)].
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if s < 0 or s % 2 or s > n * (n - 1):
        return
    for parts in _bounded_partitions(s, n, n - 1):
        if _erdos_gallai(parts):
            yield DegreeSequence(parts)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse comma-separated ``BASE^EXP`` items; bare ``BASE`` means exponent 1."""
    terms: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise DomainError(f"empty item in sequence text {text!r}")
        base, sep, exp = item.partition("^")
        try:
            b = int(base)
            e = int(exp) if sep else 1
        except ValueError:
            raise DomainError(f"bad sequence item {item!r}") from None
        if e < 1:
            raise DomainError(f"exponent must be positive in {item!r}")
        terms.extend([b] * e)
    return DegreeSequence(tuple(terms))


def format_sequence(seq: DegreeSequence) -> str:
    """Exponent form with descending bases, e.g. ``5^1,4^5,1^1``."""
    return ",".join(f"{d}^{len(list(grp))}" for d, grp in groupby(seq.terms))
