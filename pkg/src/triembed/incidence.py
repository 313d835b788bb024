"""Point-block incidence graphs and the dart indexing used by rotation systems.

Every edge e owns two darts 2e and 2e+1 (the two directed sides); reversal is
dart ^ 1.  For incidence graphs, edge e = 3j + k joins block j to its k-th
smallest point, and the even dart of an edge always points from the point to
the block.
"""

from __future__ import annotations

from typing import NamedTuple

from triembed.designs import TripleSystem, validate_triple_system


class Vertex(NamedTuple):
    kind: str  # "point" or "block"
    index: int

    def __str__(self) -> str:
        return f"{'p' if self.kind == 'point' else 'b'}{self.index}"


class DartGraph:
    """Undirected simple graph with indexed edges and darts."""

    def __init__(
        self,
        n_vertices: int,
        edges: tuple[tuple[int, int], ...],
        labels: tuple[str, ...] | None = None,
    ):
        self.n_vertices = n_vertices
        self.edges = edges
        self.labels = labels if labels is not None else tuple(f"v{i}" for i in range(n_vertices))
        if len(self.labels) != n_vertices:
            raise ValueError("label count does not match vertex count")

        seen: set[tuple[int, int]] = set()
        tails = []
        out: list[list[int]] = [[] for _ in range(n_vertices)]
        for e, (u, v) in enumerate(edges):
            if not (0 <= u < n_vertices and 0 <= v < n_vertices) or u == v:
                raise ValueError(f"bad edge {e}: ({u}, {v})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            tails.append(u)
            tails.append(v)
            out[u].append(2 * e)
            out[v].append(2 * e + 1)
        self._tail = tails
        # Out-darts sorted by (neighbour, dart): for simple graphs this is
        # plain sorted-neighbour order, the deterministic default everywhere.
        self._out = tuple(
            tuple(sorted(ds, key=lambda d: (self._tail[d ^ 1], d))) for ds in out
        )
        self._edge_index = {key: e for e, key in enumerate(
            ((u, v) if u < v else (v, u)) for (u, v) in edges
        )}

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_darts(self) -> int:
        return 2 * len(self.edges)

    def dart_tail(self, d: int) -> int:
        return self._tail[d]

    def dart_head(self, d: int) -> int:
        return self._tail[d ^ 1]

    def out_darts(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def degree(self, v: int) -> int:
        return len(self._out[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self._tail[d ^ 1] for d in self._out[v])

    def edge_between(self, u: int, v: int) -> int | None:
        return self._edge_index.get((u, v) if u < v else (v, u))

    def dart_str(self, d: int) -> str:
        return f"{self.labels[self._tail[d]]}>{self.labels[self._tail[d ^ 1]]}"

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        seen = [False] * self.n_vertices
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for d in self._out[v]:
                w = self._tail[d ^ 1]
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n_vertices


class IncidenceGraph(DartGraph):
    """Bipartite point-block incidence graph of a triple system.

    Vertex ids: points are 0..n_points-1, block j is n_points + j.  Edge
    3j + k joins block j to the k-th smallest of its three points, so edge
    and dart order is fully determined by the design.
    """

    def __init__(self, ts: TripleSystem):
        n = ts.n_points
        edges = []
        for j, blk in enumerate(ts.blocks):
            for p in sorted(blk):
                edges.append((p, n + j))
        labels = tuple(f"p{i}" for i in range(n)) + tuple(
            f"b{j}" for j in range(ts.n_blocks)
        )
        super().__init__(n + ts.n_blocks, tuple(edges), labels)
        self.ts = ts
        self.n_points = n
        self.n_blocks = ts.n_blocks

        pair_block: dict[tuple[int, int], int] = {}
        point_blocks: list[list[int]] = [[] for _ in range(n)]
        for j, blk in enumerate(ts.blocks):
            point_blocks[blk[0]].append(j)
            point_blocks[blk[1]].append(j)
            point_blocks[blk[2]].append(j)
            s = sorted(blk)
            pair_block[(s[0], s[1])] = j
            pair_block[(s[0], s[2])] = j
            pair_block[(s[1], s[2])] = j
        self._pair_block = pair_block
        self._point_blocks = tuple(tuple(sorted(js)) for js in point_blocks)
        self._sorted_blocks = tuple(tuple(sorted(blk)) for blk in ts.blocks)

    def is_point(self, v: int) -> bool:
        return v < self.n_points

    def is_block(self, v: int) -> bool:
        return v >= self.n_points

    def block_vid(self, j: int) -> int:
        return self.n_points + j

    def block_of(self, v: int) -> int:
        if v < self.n_points:
            raise ValueError(f"vertex {v} is a point vertex")
        return v - self.n_points

    def vertex(self, v: int) -> Vertex:
        if v < self.n_points:
            return Vertex("point", v)
        return Vertex("block", v - self.n_points)

    def vid(self, vertex: Vertex) -> int:
        if vertex.kind == "point":
            if not 0 <= vertex.index < self.n_points:
                raise ValueError(f"point index out of range: {vertex}")
            return vertex.index
        if vertex.kind == "block":
            if not 0 <= vertex.index < self.n_blocks:
                raise ValueError(f"block index out of range: {vertex}")
            return self.n_points + vertex.index
        raise ValueError(f"bad vertex kind: {vertex.kind!r}")

    def point_blocks(self, p: int) -> tuple[int, ...]:
        return self._point_blocks[p]

    def pair_block(self, a: int, b: int) -> int | None:
        return self._pair_block.get((a, b) if a < b else (b, a))

    def edge_of(self, p: int, j: int) -> int:
        return 3 * j + self._sorted_blocks[j].index(p)

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.neighbors(v) for v in range(self.n_vertices))


def build_incidence_graph(ts: TripleSystem) -> IncidenceGraph:
    report = validate_triple_system(ts)
    if not report.ok:
        raise ValueError(f"invalid triple system: {report.summary()}")
    return IncidenceGraph(ts)


def is_connected(g: DartGraph) -> bool:
    return g.is_connected()


def betti_number(g: DartGraph) -> int:
    """Co-tree edge count |E| - |V| + 1 of a connected graph."""
    if not g.is_connected():
        raise ValueError("betti number requires a connected graph")
    return g.n_edges - g.n_vertices + 1
