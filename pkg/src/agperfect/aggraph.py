"""The annihilating-ideal graph of Z_n.

Vertices are the ideals ``<m>`` with ``1 < m < n`` and ``m | n``, encoded as
exponent vectors over the prime parts of ``n``; ``<a> ~ <b>`` iff ``n | ab``,
i.e. iff the exponent vectors sum to at least ``alpha`` coordinatewise.

Parts are held in *signature order* (exponent non-increasing, ties broken by
the smaller prime) so that any two factorizations with the same signature
yield bit-identical adjacency matrices.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .factoring import (
    MAX_N,
    ExponentVector,
    FactorSource,
    Factorization,
    Signature,
    as_factorization,
    proper_divisor_vectors,
)


def iter_bits(mask: int):
    """Indices of the set bits of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_lengths(u: Sequence[int], v: Sequence[int], alpha: Sequence[int]) -> None:
    if not len(u) == len(v) == len(alpha):
        raise ValueError(
            f"length mismatch: {len(u)}, {len(v)} vs {len(alpha)} prime parts"
        )


def adjacent(u: Sequence[int], v: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff ``<u> <v> = 0`` in Z_n, i.e. ``u[i] + v[i] >= alpha[i]`` for all i."""
    _check_lengths(u, v, alpha)
    return all(a + b >= t for a, b, t in zip(u, v, alpha))


def complement_adjacent(u: Sequence[int], v: Sequence[int], alpha: Sequence[int]) -> bool:
    """Adjacency in the complement graph: ``n`` does not divide the product."""
    return not adjacent(u, v, alpha)


@dataclass(frozen=True)
class AGGraph:
    """Immutable annihilating-ideal graph with bitset adjacency rows.

    ``rows[i]`` has bit ``j`` set iff vertices ``i`` and ``j`` are adjacent.
    ``factorization`` is ``None`` when the graph was built from a bare
    signature; labels then fall back to exponent vectors.
    """

    signature: Signature
    alpha: tuple[int, ...]
    primes: tuple[int, ...]
    vertices: tuple[ExponentVector, ...]
    rows: tuple[int, ...]
    factorization: Factorization | None = None
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int | None:
        return None if self.factorization is None else self.factorization.n

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    def index(self, v: ExponentVector) -> int | None:
        return self._index.get(tuple(v))

    def has_edge(self, i: int, j: int, complement: bool = False) -> bool:
        if i == j:
            return False
        return bool(self.rows[i] >> j & 1) != complement

    def complement_rows(self) -> list[int]:
        full = self.full_mask
        return [~r & full & ~(1 << i) for i, r in enumerate(self.rows)]

    def neighbor_rows(self, complement: bool = False) -> list[int]:
        return self.complement_rows() if complement else list(self.rows)

    def edges(self, complement: bool = False) -> list[tuple[int, int]]:
        rows = self.neighbor_rows(complement)
        return [
            (i, j)
            for i in range(len(rows))
            for j in range(i + 1, len(rows))
            if rows[i] >> j & 1
        ]

    def adjacency_matrix(self) -> np.ndarray:
        size = len(self.vertices)
        mat = np.zeros((size, size), dtype=bool)
        for i, r in enumerate(self.rows):
            for j in range(size):
                mat[i, j] = bool(r >> j & 1)
        return mat

    def divisor(self, v: ExponentVector) -> int:
        """The integer ``m`` behind vertex ``v`` (synthetic primes if signature-built)."""
        out = 1
        for p, e in zip(self.primes, v):
            out *= p**e
        return out

    def label(self, v: ExponentVector) -> int | str:
        """Divisor value when ``n`` is known and fits in 64 bits, else ``"e1.e2..."``."""
        if self.factorization is not None and self.factorization.n <= MAX_N:
            return self.divisor(v)
        return ".".join(map(str, v))

    def to_dict(self) -> dict:
        out = {
            "signature": list(self.signature.exponents),
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges()],
        }
        if self.factorization is not None:
            out = {"n": self.n, "primes": list(self.primes), **out}
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_dot(self) -> str:
        name = f"AG_{self.n}" if self.n is not None else "AG_" + "_".join(
            map(str, self.signature.exponents)
        )
        lines = [f"graph {name} {{"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  {i} [label="{self.label(v)}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(source: FactorSource) -> AGGraph:
    """Build AG(Z_n) from an integer, a Factorization or a bare Signature."""
    from_signature = isinstance(source, Signature)
    f = as_factorization(source)
    parts = sorted(f.parts, key=lambda pe: (-pe[1], pe[0]))
    primes = tuple(p for p, _ in parts)
    alpha = tuple(e for _, e in parts)
    sig = Signature(alpha)
    vertices = tuple(proper_divisor_vectors(sig))
    rows: list[int] = []
    if vertices:
        e = np.array(vertices, dtype=np.int64)
        target = np.array(alpha)
        for lo in range(0, len(e), 256):
            block = (e[lo : lo + 256, None, :] + e[None, :, :] >= target).all(axis=2)
            block[np.arange(len(block)), np.arange(lo, lo + len(block))] = False
            packed = np.packbits(block, axis=1, bitorder="little")
            rows.extend(int.from_bytes(r.tobytes(), "little") for r in packed)
    return AGGraph(
        signature=sig,
        alpha=alpha,
        primes=primes,
        vertices=vertices,
        rows=tuple(rows),
        factorization=None if from_signature else f,
    )


def degree_profile(g: AGGraph) -> list[int]:
    return sorted(r.bit_count() for r in g.rows)


def degree_census(g: AGGraph) -> dict[int, int]:
    """Degree -> number of vertices with that degree."""
    return dict(sorted(Counter(degree_profile(g)).items()))
