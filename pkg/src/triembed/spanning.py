"""Spanning trees whose co-trees give every point vertex even valency.

For a Steiner triple system the level tree (root point 0, its blocks, the
remaining points, the remaining blocks) is built first and then repaired by
an iterative sequence of leaf-block reattachments until no point has odd
co-tree valency.  For an odd-order Latin square the tree with the required
parity is built directly.  Even co-tree valency at every point is exactly
what lets the co-tree split into point-centred paths of length two, which the
embedding engine inserts one by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from triembed.designs import LatinSquare, latin_to_triple_system, validate_sts
from triembed.incidence import IncidenceGraph, Vertex, betti_number


@dataclass(frozen=True)
class SpanningTree:
    graph: IncidenceGraph
    tree_edges: frozenset[int]

    def cotree_edges(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.graph.n_edges) if e not in self.tree_edges)


@dataclass(frozen=True)
class CotreeParityReport:
    odd_points: tuple[int, ...]
    cotree_size: int


@dataclass(frozen=True)
class TriplePath:
    """A co-tree path of length two: block - centre point - block."""

    block_a: Vertex
    centre: Vertex
    block_b: Vertex


@dataclass(frozen=True)
class PathDecomposition:
    paths: tuple[TriplePath, ...]


def check_spanning_tree(g: IncidenceGraph, tree_edges: frozenset[int]) -> None:
    """Raise unless tree_edges form a spanning tree of g."""
    if len(tree_edges) != g.n_vertices - 1:
        raise ValueError(
            f"tree has {len(tree_edges)} edges, expected {g.n_vertices - 1}"
        )
    seen = [False] * g.n_vertices
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for d in g.out_darts(v):
            if (d >> 1) in tree_edges:
                w = g.dart_head(d)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
    if count != g.n_vertices:
        raise ValueError("tree edges do not span the graph")
    # |V|-1 edges + spanning => acyclic.


def build_initial_sts_tree(
    g: IncidenceGraph, rng: Random | None = None
) -> SpanningTree:
    """Level tree of an STS incidence graph.

    Root is point 0, joined to all blocks containing it (Level 1); every other
    point joins the smallest Level-1 block containing it (Level 2); each
    remaining block joins its smallest member point, or a member picked by
    ``rng`` when given (the randomized-attachment test hook).
    """
    ts = g.ts
    if not validate_sts(ts).ok:
        raise ValueError("initial level tree requires an STS incidence graph")
    edges = set()
    level1 = g.point_blocks(0)
    for j in level1:
        edges.add(g.edge_of(0, j))
    level1_set = set(level1)
    for p in range(1, g.n_points):
        owner = min(j for j in g.point_blocks(p) if j in level1_set)
        edges.add(g.edge_of(p, owner))
    for j in range(g.n_blocks):
        if j in level1_set:
            continue
        members = sorted(ts.blocks[j])
        attach = rng.choice(members) if rng is not None else members[0]
        edges.add(g.edge_of(attach, j))
    tree = frozenset(edges)
    check_spanning_tree(g, tree)
    return SpanningTree(g, tree)


def cotree_parity(t: SpanningTree) -> CotreeParityReport:
    g = t.graph
    valency = [0] * g.n_points
    cotree_size = 0
    for e in range(g.n_edges):
        if e not in t.tree_edges:
            cotree_size += 1
            valency[g.edges[e][0]] += 1
    odd = tuple(p for p in range(g.n_points) if valency[p] % 2 == 1)
    return CotreeParityReport(odd, cotree_size)


class _RepairState:
    """Attachment view of a level tree: every block without point 0 is a leaf
    hanging off exactly one of its member points, and all repair swaps move
    those attachments."""

    def __init__(self, t: SpanningTree):
        g = t.graph
        ts = g.ts
        self.g = g
        self.blocks = [tuple(sorted(blk)) for blk in ts.blocks]
        self.fixed: set[int] = set()
        self.attach: dict[int, int] = {}
        for j, blk in enumerate(self.blocks):
            tree_pts = [p for p in blk if g.edge_of(p, j) in t.tree_edges]
            if 0 in blk:
                if len(tree_pts) != 3:
                    raise ValueError(
                        f"block {j} contains point 0 but is not fully in the tree"
                    )
                self.fixed.update(g.edge_of(p, j) for p in blk)
            else:
                if len(tree_pts) != 1:
                    raise ValueError(
                        f"block {j} must have exactly one tree edge, has {len(tree_pts)}"
                    )
                self.attach[j] = tree_pts[0]
        # movable[p]: blocks containing p that do not contain 0, ascending.
        self.movable: list[tuple[int, ...]] = [
            tuple(j for j in g.point_blocks(p) if j in self.attach)
            for p in range(g.n_points)
        ]
        valency = [0] * g.n_points
        for j, a in self.attach.items():
            for p in self.blocks[j]:
                if p != a:
                    valency[p] += 1
        self.parity = [v % 2 == 1 for v in valency]
        self.edges = set(t.tree_edges)

    def odd_points(self) -> list[int]:
        return [p for p in range(self.g.n_points) if self.parity[p]]

    def move(self, j: int, new_p: int) -> None:
        """Reattach leaf block j to new_p, re-asserting the tree per swap."""
        old_p = self.attach[j]
        assert new_p in self.blocks[j] and new_p != old_p and new_p != 0
        self.attach[j] = new_p
        self.parity[old_p] = not self.parity[old_p]
        self.parity[new_p] = not self.parity[new_p]
        self.edges.discard(self.g.edge_of(old_p, j))
        self.edges.add(self.g.edge_of(new_p, j))
        check_spanning_tree(self.g, frozenset(self.edges))

    def third(self, j: int, a: int, b: int) -> int:
        return next(p for p in self.blocks[j] if p != a and p != b)


def repair_odd_points(
    t: SpanningTree, on_cycle: Callable[[int], None] | None = None
) -> SpanningTree:
    """Reattach leaf blocks until every point has even co-tree valency.

    Each pass picks the two smallest odd points and removes both from the odd
    set by one, two, or (via the common-point search) up to four leaf-block
    reattachments; the odd-point count drops by exactly 2 per pass, which is
    asserted, and the tree is re-checked after every individual swap.
    ``on_cycle`` receives the odd-point count at the start of every pass.

    Raises RuntimeError if the pass count exceeds initial/2 + 1, which cannot
    happen for a valid STS level tree and signals a fault.
    """
    state = _RepairState(t)
    initial = len(state.odd_points())
    cap = initial // 2 + 1
    cycles = 0
    while True:
        odd = state.odd_points()
        if on_cycle is not None:
            on_cycle(len(odd))
        if not odd:
            break
        cycles += 1
        if cycles > cap:
            raise RuntimeError(
                f"odd-point repair exceeded {cap} passes; tree or design is faulty"
            )
        before = len(odd)
        _repair_pass(state, odd[0], odd[1])
        after = len(state.odd_points())
        assert after == before - 2, f"pass changed odd count {before} -> {after}"
    tree = frozenset(state.edges)
    check_spanning_tree(t.graph, tree)
    result = SpanningTree(t.graph, tree)
    assert not cotree_parity(result).odd_points
    return result


def _repair_pass(st: _RepairState, a: int, b: int) -> None:
    g = st.g
    j_ab = g.pair_block(a, b)
    assert j_ab is not None
    blk_ab = st.blocks[j_ab]

    if 0 in blk_ab:
        # The pair block goes through the root: shift one of a's other blocks
        # onto a, then settle the block through {b, c}.
        cands = [j for j in st.movable[a] if st.attach[j] != a]
        assert cands, "odd point with no detached block (co-tree valency 0)"
        j1 = cands[0]  # smallest block label
        c = st.attach[j1]
        j2 = g.pair_block(b, c)
        assert j2 is not None and j2 != j1
        y = st.third(j2, b, c)
        assert y != 0 and y != a
        side = st.attach[j2]
        if side == c:
            st.move(j1, a)
            st.move(j2, b)
            return
        if side == b:
            st.move(j1, a)
            st.move(j2, c)
            return
        assert side == y
        c_was_odd = st.parity[c]
        st.move(j1, a)
        if c_was_odd:
            return
        if st.parity[y]:
            st.move(j2, min(b, c))
            return
        _resolve_stalled_block(st, min(b, c), max(b, c), y, j2)
        return

    # Pair block avoids the root.
    y = st.third(j_ab, a, b)
    assert y != 0
    side = st.attach[j_ab]
    if side == a:
        st.move(j_ab, b)
        return
    if side == b:
        st.move(j_ab, a)
        return
    assert side == y
    if st.parity[y]:
        st.move(j_ab, a)
        return
    _resolve_stalled_block(st, a, b, y, j_ab)


def _scan_point(st: _RepairState, r: int, skip: int) -> bool:
    """Fire the first odd-point swap among r's other leaf blocks, if any.

    Detached blocks are examined first (their attachment point moves to r),
    then blocks attached to r (r's edge moves to the odd point); the smallest
    odd point wins in each group.
    """
    blocks_r = [j for j in st.movable[r] if j != skip]
    detached = sorted(
        (st.attach[j], j) for j in blocks_r if st.attach[j] != r and st.parity[st.attach[j]]
    )
    if detached:
        _, j = detached[0]
        st.move(j, r)
        return True
    attached = sorted(
        (x, j)
        for j in blocks_r
        if st.attach[j] == r
        for x in st.blocks[j]
        if x != r and st.parity[x]
    )
    if attached:
        x, j = attached[0]
        st.move(j, x)
        return True
    return False


def _reach_set(st: _RepairState, r: int, skip: int) -> set[int]:
    """Points reachable from r by a single swap: the attachment point of each
    detached block of r, and both other points of each block attached to r."""
    out: set[int] = set()
    for j in st.movable[r]:
        if j == skip:
            continue
        if st.attach[j] == r:
            out.update(x for x in st.blocks[j] if x != r)
        else:
            out.add(st.attach[j])
    return out


def _resolve_stalled_block(st: _RepairState, p: int, q: int, y: int, x_blk: int) -> None:
    """Handle the block {p, q, y} with p, q odd, y even, attached at y."""
    assert st.parity[p] and st.parity[q] and not st.parity[y]
    assert st.attach[x_blk] == y

    if _scan_point(st, p, x_blk):
        return
    if _scan_point(st, q, x_blk):
        return
    st.move(x_blk, p)  # y-toggle: p goes even, y goes odd
    if _scan_point(st, y, x_blk):
        return

    # No odd point adjacent to p, q or y: find a point reachable from two of
    # them, steer the pair block so those two are the odd ones, and swap both
    # of the common point's blocks.
    s_p = _reach_set(st, p, x_blk)
    s_q = _reach_set(st, q, x_blk)
    s_y = _reach_set(st, y, x_blk)
    for r, s, common in ((p, q, s_p & s_q), (p, y, s_p & s_y), (q, y, s_q & s_y)):
        if not common:
            continue
        z = min(common)
        assert z not in (0, p, q, y)
        if (r, s) == (p, q):
            st.move(x_blk, y)  # undo the toggle: p, q odd again
        elif (r, s) == (p, y):
            st.move(x_blk, q)  # retarget the toggle: p, y odd
        j_a = st.g.pair_block(r, z)
        j_b = st.g.pair_block(s, z)
        assert j_a is not None and j_b is not None and j_a != j_b
        assert st.attach[j_a] in (r, z) and st.attach[j_b] in (s, z)
        st.move(j_a, z if st.attach[j_a] == r else r)
        st.move(j_b, z if st.attach[j_b] == s else s)
        return
    raise AssertionError("no common reachable point; the counting bound failed")


def build_ls_tree(g: IncidenceGraph, ls: LatinSquare) -> SpanningTree:
    """Direct even-co-tree spanning tree for an odd-order Latin square.

    Root 0_r takes all n blocks of row 0; every column and entry point joins
    its unique row-0 block; the n-1 other blocks of column 0 hang off 0_c; the
    other row points join their unique column-0 block; every remaining block
    hangs off its column point.  Point 0_r and all column points end with tree
    valency n, every other point with valency 1, so all co-tree valencies are
    even.  Even n is rejected: the co-tree size (2n-1)(n-1) would be odd.
    """
    n = ls.n
    if n % 2 == 0:
        raise ValueError(f"Latin square order must be odd, got {n}")
    if g.ts != latin_to_triple_system(ls):
        raise ValueError("incidence graph does not match the Latin square")

    def blk(i: int, j: int) -> int:
        return i * n + j

    edges = set()
    for j in range(n):
        edges.add(g.edge_of(0, blk(0, j)))  # Level 1
    for j in range(n):
        edges.add(g.edge_of(n + j, blk(0, j)))  # column j_c to its row-0 block
    row0_col_of_entry = {ls.cells[0][j]: j for j in range(n)}
    for k in range(n):
        edges.add(g.edge_of(2 * n + k, blk(0, row0_col_of_entry[k])))
    for i in range(1, n):
        edges.add(g.edge_of(n, blk(i, 0)))  # Level 3: 0_c
        edges.add(g.edge_of(i, blk(i, 0)))  # Level 4: i_r
    for i in range(1, n):
        for j in range(1, n):
            edges.add(g.edge_of(n + j, blk(i, j)))
    tree = frozenset(edges)
    check_spanning_tree(g, tree)
    result = SpanningTree(g, tree)
    assert not cotree_parity(result).odd_points
    return result


def decompose_cotree_paths(t: SpanningTree) -> PathDecomposition:
    """Pair each point's co-tree edges consecutively in block order.

    Paths come out sorted by centre point, then block labels; every co-tree
    edge is used exactly once, so the path count is betti/2.
    """
    g = t.graph
    at_point: list[list[int]] = [[] for _ in range(g.n_points)]
    for e in range(g.n_edges):
        if e not in t.tree_edges:
            p, bv = g.edges[e]
            at_point[p].append(bv - g.n_points)
    paths = []
    for p in range(g.n_points):
        js = sorted(at_point[p])
        if len(js) % 2 != 0:
            raise ValueError(f"point {p} has odd co-tree valency {len(js)}")
        for i in range(0, len(js), 2):
            paths.append(
                TriplePath(Vertex("block", js[i]), Vertex("point", p), Vertex("block", js[i + 1]))
            )
    assert 2 * len(paths) == betti_number(g)
    return PathDecomposition(tuple(paths))
