"""Exact clique number and chromatic number, with certificates.

Both searches are exact. The clique search is a bitset branch-and-bound with
greedy-coloring bounds; the chromatic number is found by trying k-colorings
for k = omega, omega + 1, ... with a DSATUR backtracker seeded by the maximum
clique, up to the greedy upper bound.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .aggraph import AGGraph, iter_bits as _bits
from .holes import BudgetExceeded


@dataclass(frozen=True)
class InvariantReport:
    omega: int
    chi: int
    max_clique: tuple[int, ...]
    coloring: dict[int, int]

    @property
    def weakly_perfect(self) -> bool:
        return self.omega == self.chi

    def to_dict(self, g: AGGraph) -> dict:
        return {
            "omega": self.omega,
            "chi": self.chi,
            "weakly_perfect": self.weakly_perfect,
            "max_clique": [g.label(g.vertices[i]) for i in self.max_clique],
            "coloring": {
                str(g.label(g.vertices[i])): c for i, c in sorted(self.coloring.items())
            },
        }


def _greedy_clique(rows: Sequence[int], cand: int) -> list[int]:
    clique = []
    while cand:
        v = max(_bits(cand), key=lambda x: ((rows[x] & cand).bit_count(), -x))
        clique.append(v)
        cand &= rows[v]
    return clique


def _color_bound(rows: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy color classes over ``cand``: vertex order and running color count."""
    order, bounds = [], []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~rows[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique_rows(rows: Sequence[int], deadline: float | None = None) -> list[int]:
    size = len(rows)
    if size == 0:
        return []
    full = (1 << size) - 1
    best = _greedy_clique(rows, full)
    calls = 0

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, calls
        calls += 1
        if deadline is not None and calls % 1024 == 1 and time.monotonic() > deadline:
            raise BudgetExceeded("clique search exceeded its time budget")
        order, bounds = _color_bound(rows, cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[idx] <= len(best):
                return
            v = order[idx]
            new_cand = cand & rows[v]
            clique.append(v)
            if new_cand:
                expand(clique, new_cand)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], full)
    return sorted(best)


def clique_number(g: AGGraph, deadline: float | None = None) -> tuple[int, list[int]]:
    """Size of a maximum clique and one such clique (vertex indices)."""
    clique = max_clique_rows(g.rows, deadline)
    return len(clique), clique


def _dsatur_pick(rows, sat, uncolored):
    return max(
        _bits(uncolored),
        key=lambda v: (sat[v].bit_count(), (rows[v] & uncolored).bit_count(), -v),
    )


def _greedy_dsatur(rows: Sequence[int]) -> list[int]:
    size = len(rows)
    colors = [-1] * size
    sat = [0] * size
    uncolored = (1 << size) - 1
    while uncolored:
        v = _dsatur_pick(rows, sat, uncolored)
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in _bits(rows[v]):
            sat[u] |= 1 << c
    return colors


def _k_coloring(
    rows: Sequence[int], k: int, seed: Sequence[int], deadline: float | None
) -> list[int] | None:
    size = len(rows)
    colors = [-1] * size
    sat = [0] * size
    uncolored = (1 << size) - 1

    def assign(v: int, c: int) -> list[tuple[int, int]]:
        nonlocal uncolored
        colors[v] = c
        uncolored &= ~(1 << v)
        touched = []
        for u in _bits(rows[v]):
            if not sat[u] >> c & 1:
                sat[u] |= 1 << c
                touched.append((u, c))
        return touched

    def unassign(v: int, touched) -> None:
        nonlocal uncolored
        colors[v] = -1
        uncolored |= 1 << v
        for u, c in touched:
            sat[u] &= ~(1 << c)

    # a clique must take distinct colors; fixing them first breaks symmetry
    for c, v in enumerate(seed):
        assign(v, c)
    used = len(seed)
    calls = 0

    def solve(used: int) -> bool:
        nonlocal calls
        calls += 1
        if deadline is not None and calls % 1024 == 1 and time.monotonic() > deadline:
            raise BudgetExceeded("coloring search exceeded its time budget")
        if not uncolored:
            return True
        v = _dsatur_pick(rows, sat, uncolored)
        if sat[v].bit_count() >= k:
            return False
        for c in range(min(used + 1, k)):
            if sat[v] >> c & 1:
                continue
            touched = assign(v, c)
            if solve(max(used, c + 1)):
                return True
            unassign(v, touched)
        return False

    return list(colors) if solve(used) else None


def _canonical_colors(colors: Sequence[int]) -> dict[int, int]:
    # renumber classes by their smallest vertex
    relabel: dict[int, int] = {}
    for c in colors:
        relabel.setdefault(c, len(relabel))
    return {v: relabel[c] for v, c in enumerate(colors)}


def chromatic_number(
    g: AGGraph, deadline: float | None = None, clique: Sequence[int] | None = None
) -> tuple[int, dict[int, int]]:
    """Exact chromatic number and a proper coloring ``{vertex: color}``."""
    rows = g.rows
    if not rows:
        return 0, {}
    if clique is None:
        clique = max_clique_rows(rows, deadline)
    greedy = _greedy_dsatur(rows)
    upper = max(greedy) + 1
    best = greedy
    for k in range(len(clique), upper):
        found = _k_coloring(rows, k, clique, deadline)
        if found is not None:
            best = found
            break
    coloring = _canonical_colors(best)
    return len(set(coloring.values())), coloring


def compute_invariants(g: AGGraph, deadline: float | None = None) -> InvariantReport:
    omega, clique = clique_number(g, deadline)
    chi, coloring = chromatic_number(g, deadline, clique)
    return InvariantReport(omega, chi, tuple(clique), coloring)


def is_clique(g: AGGraph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    return len(set(vs)) == len(vs) and all(
        g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]
    )


def is_proper_coloring(g: AGGraph, coloring: dict[int, int]) -> bool:
    if set(coloring) != set(range(g.vertex_count)):
        return False
    return all(coloring[i] != coloring[j] for i, j in g.edges())
