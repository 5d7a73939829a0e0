"""Small undirected multigraphs with loops.

Graphs here have at most a dozen vertices, so everything is plain Python:
adjacency is a symmetric multiplicity matrix, canonical forms come from
colour refinement followed by exhaustive individualization, and graphs with a
prescribed degree sequence are produced by backtracking.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterator, Sequence
from dataclasses import dataclass

from .errors import MalformedInput

__all__ = [
    "Multigraph",
    "canonical_form",
    "multigraphs_with_degrees",
]


@dataclass(frozen=True)
class Multigraph:
    """Multigraph on vertices ``0..vertex_count-1``.

    ``edges`` holds unordered pairs normalized to ``(min, max)``; loops are
    ``(i, i)`` and count twice towards the valency of ``i``.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise MalformedInput("a multigraph needs at least one vertex")
        normalized = []
        for edge in self.edges:
            if len(edge) != 2:
                raise MalformedInput(f"edge {edge!r} is not a pair")
            i, j = (int(x) for x in edge)
            if not (0 <= i < self.vertex_count and 0 <= j < self.vertex_count):
                raise MalformedInput(f"edge {edge!r} references a missing vertex")
            normalized.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(normalized))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Multigraph:
        size = len(matrix)
        edges = []
        for i in range(size):
            for j in range(i, size):
                edges.extend([(i, j)] * matrix[i][j])
        return cls(size, tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def matrix(self) -> list[list[int]]:
        """Symmetric multiplicity matrix; the diagonal counts loops."""
        m = [[0] * self.vertex_count for _ in range(self.vertex_count)]
        for i, j in self.edges:
            m[i][j] += 1
            if i != j:
                m[j][i] += 1
        return m

    def valencies(self) -> tuple[int, ...]:
        v = [0] * self.vertex_count
        for i, j in self.edges:
            v[i] += 1
            v[j] += 1
        return tuple(v)

    def is_connected(self) -> bool:
        return len(self.component_of(0)) == self.vertex_count

    def component_of(self, start: int, removed_edge: int | None = None) -> set[int]:
        """Vertices reachable from ``start``, optionally ignoring one edge (by index)."""
        adjacency: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for idx, (i, j) in enumerate(self.edges):
            if idx == removed_edge or i == j:
                continue
            adjacency[i].append(j)
            adjacency[j].append(i)
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def bridges(self) -> list[int]:
        """Indices of edges whose removal disconnects their endpoints (Tarjan low-link).

        Loops are never bridges and parallel edges protect each other.
        """
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for idx, (i, j) in enumerate(self.edges):
            if i != j:
                adjacency[i].append((j, idx))
                adjacency[j].append((i, idx))
        order = [-1] * self.vertex_count
        low = [0] * self.vertex_count
        found: list[int] = []
        counter = 0
        for root in range(self.vertex_count):
            if order[root] != -1:
                continue
            order[root] = low[root] = counter
            counter += 1
            # iterative DFS: (vertex, edge used to enter, neighbour iterator)
            stack = [(root, -1, iter(adjacency[root]))]
            while stack:
                u, via, it = stack[-1]
                advanced = False
                for w, idx in it:
                    if idx == via:
                        continue
                    if order[w] == -1:
                        order[w] = low[w] = counter
                        counter += 1
                        stack.append((w, idx, iter(adjacency[w])))
                        advanced = True
                        break
                    low[u] = min(low[u], order[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[u])
                    if low[u] > order[parent]:
                        found.append(via)
        return sorted(found)

    def relabel(self, order: Sequence[int]) -> Multigraph:
        """Graph whose vertex ``new`` is old vertex ``order[new]``."""
        position = {old: new for new, old in enumerate(order)}
        edges = sorted(
            tuple(sorted((position[i], position[j]))) for i, j in self.edges
        )
        return Multigraph(self.vertex_count, tuple(edges))


# ---------------------------------------------------------------------------
# canonical forms


def _refine(cells: list[list[int]], matrix: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Subcells are ordered by their signature so the result does not depend on
    the labelling of the input.
    """
    while True:
        position = {}
        for c, cell in enumerate(cells):
            for v in cell:
                position[v] = c
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            signatures = {}
            for v in cell:
                counts = [0] * len(cells)
                row = matrix[v]
                for u, mult in enumerate(row):
                    if mult and u != v:
                        counts[position[u]] += mult
                signatures.setdefault(tuple(counts), []).append(v)
            if len(signatures) > 1:
                changed = True
                for key in sorted(signatures):
                    new_cells.append(signatures[key])
            else:
                new_cells.append(cell)
        cells = new_cells
        if not changed:
            return cells


def canonical_form(
    matrix: Sequence[Sequence[int]], colors: Sequence[Hashable]
) -> tuple[tuple, tuple[int, ...]]:
    """Canonical code and canonical vertex order of a vertex-coloured multigraph.

    Two coloured multigraphs are isomorphic (by a colour-preserving bijection)
    iff their codes are equal.  ``colors`` must be mutually comparable.
    """
    size = len(matrix)
    matrix = [list(row) for row in matrix]
    initial: dict = {}
    for v in range(size):
        initial.setdefault((colors[v], matrix[v][v]), []).append(v)
    cells = [initial[key] for key in sorted(initial)]
    color_code = tuple(key for key in sorted(initial) for _ in initial[key])

    best: list = [None, None]

    def leaf_code(order: list[int]) -> tuple:
        return tuple(matrix[order[i]][order[j]] for i in range(size) for j in range(i, size))

    def search(part: list[list[int]]) -> None:
        part = _refine(part, matrix)
        for idx, cell in enumerate(part):
            if len(cell) > 1:
                break
        else:
            order = [cell[0] for cell in part]
            code = leaf_code(order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(order)
            return
        for v in cell:
            rest = [u for u in cell if u != v]
            search(part[:idx] + [[v], rest] + part[idx + 1:])

    search(cells)
    return (color_code, best[0]), best[1]


# ---------------------------------------------------------------------------
# enumeration by degree sequence


def multigraphs_with_degrees(
    degrees: Sequence[int], connected: bool = True
) -> Iterator[list[list[int]]]:
    """Yield every labelled loopy multigraph with the given valencies.

    Graphs are yielded as fresh symmetric multiplicity matrices.  With
    ``connected`` only connected graphs are produced.
    """
    size = len(degrees)
    if any(d < 0 for d in degrees) or sum(degrees) % 2:
        return
    remaining = list(degrees)
    matrix = [[0] * size for _ in range(size)]

    def row(i: int) -> Iterator[list[list[int]]]:
        if i == size:
            if not connected or _matrix_connected(matrix):
                yield [r[:] for r in matrix]
            return
        for loops in range(remaining[i] // 2, -1, -1):
            # a vertex spending its whole valency on loops is isolated
            if connected and size > 1 and 2 * loops == degrees[i]:
                continue
            matrix[i][i] = loops
            remaining[i] -= 2 * loops
            for _ in distribute(i, i + 1):
                yield from row(i + 1)
            remaining[i] += 2 * loops
        matrix[i][i] = 0

    def distribute(i: int, j: int) -> Iterator[None]:
        need = remaining[i]
        if j == size:
            if need == 0:
                yield None
            return
        cap = min(need, remaining[j])
        tail = sum(remaining[j + 1:])
        for m in range(cap, -1, -1):
            if need - m > tail:
                break
            matrix[i][j] = matrix[j][i] = m
            remaining[i] -= m
            remaining[j] -= m
            yield from distribute(i, j + 1)
            remaining[i] += m
            remaining[j] += m
        matrix[i][j] = matrix[j][i] = 0

    yield from row(0)


def _matrix_connected(matrix: list[list[int]]) -> bool:
    size = len(matrix)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in range(size):
            if matrix[u][w] and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == size
