"""Undirected and directed graphs on vertex indices, with bitmask adjacency rows.

Exports the DOT and JSON wire formats; JSON edge lists are always sorted
lexicographically so serialised output is byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


def _bitrows_from_pairs(n: int, pairs: Iterable[tuple[int, int]], symmetric: bool):
    rows = [0] * n
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"vertex pair ({i},{j}) out of range for n={n}")
        if i == j:
            raise ValueError(f"self-loop at vertex {i} not allowed")
        rows[i] |= 1 << j
        if symmetric:
            rows[j] |= 1 << i
    return tuple(rows)


@dataclass(frozen=True, eq=False)
class SimpleGraph:
    """Loop-free undirected graph; ``rows[i]`` is the neighbour bitmask of i."""

    n: int
    rows: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels=None
    ) -> "SimpleGraph":
        return cls(n, _bitrows_from_pairs(n, edges, symmetric=True),
                   tuple(labels) if labels is not None else None)

    def validate(self) -> None:
        for i, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {i} addresses vertices >= n")
            if row & (1 << i):
                raise ValueError(f"self-loop at vertex {i}")
            for j in range(self.n):
                if bool(row & (1 << j)) != bool(self.rows[j] & (1 << i)):
                    raise ValueError(f"adjacency not symmetric at ({i},{j})")

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] & (1 << j))

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def n_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            row = self.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def n_components(self) -> int:
        seen = 0
        count = 0
        for v in range(self.n):
            if seen & (1 << v):
                continue
            count += 1
            frontier = 1 << v
            comp = frontier
            while frontier:
                nxt = 0
                f = frontier
                v2 = 0
                while f:
                    if f & 1:
                        nxt |= self.rows[v2]
                    f >>= 1
                    v2 += 1
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
        return count

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.edges()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f'graph "{name}" {{']
        for i in range(self.n):
            lines.append(f'  {i} [label="{self.label_of(i)}"];')
        for i, j in self.edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class DirectedGraph:
    """Loop-free directed graph; ``out_rows[i]`` is the out-neighbour bitmask."""

    n: int
    out_rows: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_arcs(
        cls, n: int, arcs: Iterable[tuple[int, int]], labels=None
    ) -> "DirectedGraph":
        return cls(n, _bitrows_from_pairs(n, arcs, symmetric=False),
                   tuple(labels) if labels is not None else None)

    def has_arc(self, i: int, j: int) -> bool:
        return bool(self.out_rows[i] & (1 << j))

    def n_arcs(self) -> int:
        return sum(r.bit_count() for r in self.out_rows)

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            row = self.out_rows[i]
            j = 0
            while row:
                if row & 1:
                    out.append((i, j))
                row >>= 1
                j += 1
        return out

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(
            self.out_rows[i] == full ^ (1 << i) for i in range(self.n)
        )

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [[i, j] for i, j in self.arcs()]}

    def to_dot(self, name: str = "G") -> str:
        lines = [f'digraph "{name}" {{']
        for i in range(self.n):
            lines.append(f'  {i} [label="{self.label_of(i)}"];')
        for i, j in self.arcs():
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def complete_multipartite_graph(parts: Iterable[int]) -> SimpleGraph:
    """K_{n_1,...,n_k}: independent parts, all cross-part pairs joined."""
    sizes = list(parts)
    if any(s < 1 for s in sizes):
        raise ValueError("part sizes must be positive")
    n = sum(sizes)
    part_of = []
    for p, s in enumerate(sizes):
        part_of.extend([p] * s)
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if part_of[i] != part_of[j]
    ]
    return SimpleGraph.from_edges(n, edges)
