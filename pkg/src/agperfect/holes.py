"""Induced odd holes and antiholes, and the Berge test built on them.

A graph is perfect iff neither it nor its complement contains an induced odd
cycle of length >= 5. The search here is exhaustive: it grows induced paths
anchored at the smallest vertex of the prospective hole and closes them only
into odd chordless cycles.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .aggraph import AGGraph, adjacent, iter_bits as _bits
from .factoring import ExponentVector


class BudgetExceeded(RuntimeError):
    """Raised when a search runs past its deadline."""


@dataclass(frozen=True)
class HoleWitness:
    cycle: tuple[ExponentVector, ...]
    in_complement: bool = False

    def __len__(self) -> int:
        return len(self.cycle)

    def labels(self, g: AGGraph) -> list:
        return [g.label(v) for v in self.cycle]

    def to_dict(self, g: AGGraph) -> dict:
        return {"in_complement": self.in_complement, "cycle": self.labels(g)}

    def describe(self, g: AGGraph) -> str:
        side = "complement" if self.in_complement else "graph"
        return side + ":" + " ".join(map(str, self.labels(g)))


@dataclass(frozen=True)
class BergeVerdict:
    """Outcome of the odd hole / antihole search.

    ``is_berge`` is ``None`` when a length cap left the search inconclusive;
    a capped search can refute Berge-ness but never confirm it.
    """

    is_berge: bool | None
    witness: HoleWitness | None
    search_exhaustive: bool


def _can_close(rows, tip, avail, targets) -> bool:
    # BFS from tip through avail; reaching any target keeps the branch alive.
    seen = 1 << tip
    frontier = rows[tip] & avail
    while frontier:
        if frontier & targets:
            return True
        seen |= frontier
        nxt = 0
        for x in _bits(frontier & ~targets):
            nxt |= rows[x]
        frontier = nxt & avail & ~seen
    return False


def find_odd_hole_in_rows(
    rows: Sequence[int],
    max_length: int | None = None,
    deadline: float | None = None,
) -> list[int] | None:
    """Search bitset adjacency ``rows`` for an induced odd cycle of length >= 5.

    Returns vertex indices starting at the hole's smallest vertex ``a`` and
    oriented so that the second entry is smaller than the last, or ``None``.
    Anchors and extensions are explored in increasing index order, so the
    returned hole is reproducible. If ``max_length`` is given, only holes up
    to that length are looked for.
    """
    size = len(rows)
    full = (1 << size) - 1
    calls = 0

    def dfs(path: list[int], inner: int, allowed: int, na: int) -> list[int] | None:
        nonlocal calls
        calls += 1
        if deadline is not None and calls % 512 == 1 and time.monotonic() > deadline:
            raise BudgetExceeded("odd hole search exceeded its time budget")
        tip = path[-1]
        cand = rows[tip] & allowed & ~inner
        j = len(path) - 1
        if j >= 3 and j % 2 == 1:
            v1 = path[1]
            for w in _bits(cand & na):
                if w > v1:
                    return path + [w]
        if max_length is not None and len(path) + 2 > max_length:
            return None
        inner_next = inner | rows[tip] | (1 << tip)
        avail_next = allowed & ~inner_next
        # closing vertices must exceed path[1] (orientation) and avoid the interior
        targets = na & avail_next & ~((1 << (path[1] + 1)) - 1)
        for w in _bits(cand & ~na):
            if not _can_close(rows, w, avail_next, targets):
                continue
            found = dfs(path + [w], inner_next, allowed, na)
            if found is not None:
                return found
        return None

    for a in range(size):
        allowed = full & ~((1 << (a + 1)) - 1)
        na = rows[a] & allowed
        for v1 in _bits(na):
            found = dfs([a, v1], 0, allowed, na)
            if found is not None:
                return found
    return None


def find_induced_odd_hole(
    g: AGGraph,
    use_complement: bool = False,
    max_length: int | None = None,
    deadline: float | None = None,
) -> HoleWitness | None:
    rows = g.neighbor_rows(use_complement)
    found = find_odd_hole_in_rows(rows, max_length=max_length, deadline=deadline)
    if found is None:
        return None
    return HoleWitness(tuple(g.vertices[i] for i in found), use_complement)


def verify_witness(g: AGGraph, w: HoleWitness) -> bool:
    """Re-check a hole certificate from the divisibility rule alone.

    Every vertex must belong to ``g``, the length must be odd and at least 5,
    consecutive vertices must be adjacent and all other pairs non-adjacent in
    the graph the witness claims (the complement if ``in_complement``).
    """
    cycle = [tuple(v) for v in w.cycle]
    t = len(cycle)
    if t < 5 or t % 2 == 0 or len(set(cycle)) != t:
        return False
    if any(g.index(v) is None for v in cycle):
        return False
    for i in range(t):
        for j in range(i + 1, t):
            consecutive = j == i + 1 or (i == 0 and j == t - 1)
            edge = adjacent(cycle[i], cycle[j], g.alpha) != w.in_complement
            if edge != consecutive:
                return False
    return True


def is_berge(
    g: AGGraph,
    max_length: int | None = None,
    deadline: float | None = None,
) -> BergeVerdict:
    """Search the graph side first, then the complement.

    Any ``max_length`` cap marks the search non-exhaustive, so a capped run
    can only ever report a hole or ``is_berge=None``.
    """
    exhaustive = max_length is None
    for side in (False, True):
        w = find_induced_odd_hole(g, side, max_length=max_length, deadline=deadline)
        if w is not None:
            if not verify_witness(g, w):
                raise AssertionError(f"search produced an invalid witness {w}")
            return BergeVerdict(False, w, exhaustive)
    return BergeVerdict(True if exhaustive else None, None, exhaustive)
