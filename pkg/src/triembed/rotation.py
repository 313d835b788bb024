"""Rotation systems, face tracing, path-insertion surgery, and inflation.

The face-tracing convention is fixed globally: the dart after d in its face
is the successor of reverse(d) in the rotation at head(d), and the prescribed
orientation class (u, v, w) of a block is realized exactly when the rotation
at its block vertex reads (u, v, w).  The opposite handedness is the mirror
image, obtained by reversing every rotation; it is never configured.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from triembed.designs import (
    Block,
    OrientationAssignment,
    TripleSystem,
    latin_from_triple_system,
    validate_sts,
    validate_triple_system,
)
from triembed.incidence import (
    DartGraph,
    IncidenceGraph,
    Vertex,
    betti_number,
    build_incidence_graph,
)
from triembed.spanning import (
    PathDecomposition,
    SpanningTree,
    TriplePath,
    build_initial_sts_tree,
    build_ls_tree,
    decompose_cotree_paths,
    repair_odd_points,
)


@dataclass(frozen=True)
class FaceWalk:
    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


class RotationSystem:
    """Cyclic out-dart order per vertex over an active edge subset of a graph.

    Stored as a successor map on darts (next out-dart at the same tail);
    inactive darts map to -1.  Partial systems arise while an embedding is
    grown edge pair by edge pair from a spanning tree.
    """

    def __init__(self, graph: DartGraph, next_map: list[int]):
        self.graph = graph
        self._next = next_map

    @classmethod
    def from_sequences(
        cls, graph: DartGraph, sequences: list[tuple[int, ...]] | list[list[int]]
    ) -> "RotationSystem":
        """Build from one dart sequence per vertex (inactive vertices: empty)."""
        if len(sequences) != graph.n_vertices:
            raise ValueError("need one rotation sequence per vertex")
        next_map = [-1] * graph.n_darts
        seen = set()
        for v, seq in enumerate(sequences):
            for d in seq:
                if graph.dart_tail(d) != v:
                    raise ValueError(f"dart {d} does not leave vertex {v}")
                if d in seen:
                    raise ValueError(f"dart {d} appears twice")
                seen.add(d)
            for i, d in enumerate(seq):
                next_map[d] = seq[(i + 1) % len(seq)]
        for d in seen:
            if (d ^ 1) not in seen:
                raise ValueError(f"dart {d} active but its reverse is not")
        return cls(graph, next_map)

    @classmethod
    def from_neighbor_sequences(
        cls, graph: DartGraph, sequences: list[list[int]]
    ) -> "RotationSystem":
        """Build a full system from per-vertex neighbour orders."""
        dart_seqs: list[list[int]] = []
        for v, nbrs in enumerate(sequences):
            seq = []
            for u in nbrs:
                e = graph.edge_between(v, u)
                if e is None:
                    raise ValueError(f"no edge between {v} and {u}")
                seq.append(2 * e if graph.edges[e][0] == v else 2 * e + 1)
            dart_seqs.append(seq)
        rs = cls.from_sequences(graph, dart_seqs)
        if rs.n_active_darts != graph.n_darts:
            raise ValueError("neighbour sequences do not cover every edge")
        return rs

    def copy(self) -> "RotationSystem":
        return RotationSystem(self.graph, list(self._next))

    def is_active(self, d: int) -> bool:
        return self._next[d] >= 0

    @property
    def n_active_darts(self) -> int:
        return sum(1 for x in self._next if x >= 0)

    @property
    def n_active_edges(self) -> int:
        return self.n_active_darts // 2

    def active_degree(self, v: int) -> int:
        return sum(1 for d in self.graph.out_darts(v) if self._next[d] >= 0)

    def rotation(self, v: int) -> tuple[int, ...]:
        """The cyclic order at v as a tuple starting from its smallest dart."""
        anchor = -1
        for d in self.graph.out_darts(v):
            if self._next[d] >= 0:
                anchor = d
                break
        if anchor < 0:
            return ()
        seq = [anchor]
        d = self._next[anchor]
        while d != anchor:
            seq.append(d)
            d = self._next[d]
        return tuple(seq)

    def rotation_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.graph.dart_head(d) for d in self.rotation(v))

    def canonical_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.rotation(v) for v in range(self.graph.n_vertices))

    def successor(self, d: int) -> int:
        """The dart after d along its face boundary."""
        return self._next[d ^ 1]


def trace_faces(rs: RotationSystem) -> tuple[FaceWalk, ...]:
    """Partition the active darts into face orbits, each started from its
    smallest unused dart."""
    nxt = rs._next
    n = rs.graph.n_darts
    seen = bytearray(n)
    faces = []
    for d0 in range(n):
        if seen[d0] or nxt[d0] < 0:
            continue
        walk = []
        d = d0
        while not seen[d]:
            seen[d] = 1
            walk.append(d)
            d = nxt[d ^ 1]
        assert d == d0, "face walk did not close at its start"
        faces.append(FaceWalk(tuple(walk)))
    if not faces and rs.graph.n_vertices == 1:
        # A single vertex on the sphere bounds one (empty) face.
        faces.append(FaceWalk(()))
    return tuple(faces)


def count_faces(rs: RotationSystem) -> int:
    nxt = rs._next
    n = rs.graph.n_darts
    seen = bytearray(n)
    count = 0
    for d0 in range(n):
        if seen[d0] or nxt[d0] < 0:
            continue
        count += 1
        d = d0
        while not seen[d]:
            seen[d] = 1
            d = nxt[d ^ 1]
    if count == 0 and rs.graph.n_vertices == 1:
        count = 1
    return count


def genus_of(rs: RotationSystem) -> int:
    """Genus via Euler's formula V - E + F = 2 - 2g on the active subgraph."""
    if not _active_connected(rs):
        raise ValueError("genus requires a connected active subgraph")
    chi = rs.graph.n_vertices - rs.n_active_edges + count_faces(rs)
    assert chi % 2 == 0 and chi <= 2, f"bad Euler characteristic {chi}"
    return (2 - chi) // 2


def _active_connected(rs: RotationSystem) -> bool:
    g = rs.graph
    if g.n_vertices <= 1:
        return True
    seen = [False] * g.n_vertices
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for d in g.out_darts(v):
            if rs._next[d] >= 0:
                w = g.dart_head(d)
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
    return count == g.n_vertices


def _oriented_points(block: Block, flag: bool) -> tuple[int, int, int]:
    u, v, w = block
    return (u, v, w) if flag else (u, w, v)


def _cyclic_class(block: Block, seq: tuple[int, int, int]) -> bool:
    """True if seq is the cyclic class of block as stored, False if reversed."""
    assert set(seq) == set(block), f"{seq} is not a cyclic order of {block}"
    i = seq.index(block[0])
    rot = seq[i:] + seq[:i]
    if rot == tuple(block):
        return True
    assert rot == (block[0], block[2], block[1])
    return False


def embed_spanning_tree(
    t: SpanningTree, orient: OrientationAssignment
) -> RotationSystem:
    """Embed a spanning tree in the sphere: one face, with every block vertex
    of tree valency 3 already rotated to its prescribed class.  All other
    vertices take their neighbours in sorted label order."""
    g = t.graph
    if len(orient.flags) != g.n_blocks:
        raise ValueError(
            f"orientation has {len(orient.flags)} flags for {g.n_blocks} blocks"
        )
    sequences: list[list[int]] = []
    for v in range(g.n_vertices):
        darts = [d for d in g.out_darts(v) if (d >> 1) in t.tree_edges]
        if g.is_block(v) and len(darts) == 3:
            j = g.block_of(v)
            darts = [
                2 * g.edge_of(p, j) + 1
                for p in _oriented_points(g.ts.blocks[j], orient.flags[j])
            ]
        sequences.append(darts)
    rs = RotationSystem.from_sequences(g, sequences)
    faces = trace_faces(rs)
    assert len(faces) == 1 and len(faces[0]) == 2 * len(t.tree_edges)
    return rs


def _endpoint_corner(
    rs: RotationSystem,
    walk: tuple[int, ...],
    positions: list[int],
    block: Block,
    new_dart: int,
    flag: bool,
) -> int:
    """Pick the face position where inserting new_dart realizes the block's
    prescribed class.  A valency-1 endpoint has a single corner and no
    constraint; for a valency-2 endpoint the two corners give the two classes,
    so exactly one must match."""
    g = rs.graph
    if len(positions) == 1:
        return positions[0]
    assert len(positions) == 2, f"endpoint valency {len(positions)} not in (1, 2)"
    matches = []
    for i in positions:
        x = walk[i] ^ 1
        y = rs._next[x]
        seq = (g.dart_head(x), g.dart_head(new_dart), g.dart_head(y))
        if _cyclic_class(block, seq) == flag:
            matches.append(i)
    assert len(matches) == 1, "exactly one corner must realize the prescribed class"
    return matches[0]


def _insert_path(
    rs: RotationSystem, path: TriplePath, orient: OrientationAssignment
) -> None:
    """Splice the length-two path block_a - centre - block_b into the single
    face of rs, in place.

    The two new darts enter the centre's rotation at its first corner on the
    face, ordered so that the dart toward the endpoint corner met first along
    the walk comes first; that interleaving merges everything back into a
    single face and raises the genus by one.  Endpoint corners are chosen to
    realize the prescribed class whenever an endpoint reaches valency 3.
    """
    g = rs.graph
    if not isinstance(g, IncidenceGraph):
        raise ValueError("path insertion requires an incidence graph embedding")
    if (path.centre.kind, path.block_a.kind, path.block_b.kind) != ("point", "block", "block"):
        raise ValueError("path must be block - point - block")
    if path.block_a == path.block_b:
        raise ValueError("path endpoints must be distinct blocks")
    u = g.vid(path.centre)
    va = g.vid(path.block_a)
    vb = g.vid(path.block_b)
    ja, jb = path.block_a.index, path.block_b.index
    dart_a = 2 * g.edge_of(u, ja)
    dart_b = 2 * g.edge_of(u, jb)
    if rs.is_active(dart_a) or rs.is_active(dart_b):
        raise ValueError("path edges are already present in the embedding")
    for v in (va, vb):
        if rs.active_degree(v) not in (1, 2):
            raise ValueError("path endpoints must have current valency 1 or 2")

    faces = trace_faces(rs)
    assert len(faces) == 1, "path insertion requires a single face"
    walk = faces[0].darts
    length = len(walk)
    heads = [g.dart_tail(d ^ 1) for d in walk]

    pos_u = heads.index(u)
    pos_a = [i for i, h in enumerate(heads) if h == va]
    pos_b = [i for i, h in enumerate(heads) if h == vb]
    corner_a = _endpoint_corner(rs, walk, pos_a, g.ts.blocks[ja], dart_a ^ 1, orient.flags[ja])
    corner_b = _endpoint_corner(rs, walk, pos_b, g.ts.blocks[jb], dart_b ^ 1, orient.flags[jb])

    nxt = rs._next
    for corner, nd in ((corner_a, dart_a ^ 1), (corner_b, dart_b ^ 1)):
        x = walk[corner] ^ 1
        after = nxt[x]
        nxt[x] = nd
        nxt[nd] = after

    c = walk[pos_u] ^ 1
    after = nxt[c]
    if (corner_a - pos_u) % length < (corner_b - pos_u) % length:
        first, second = dart_a, dart_b
    else:
        first, second = dart_b, dart_a
    nxt[c] = first
    nxt[first] = second
    nxt[second] = after

    new_faces = trace_faces(rs)
    assert len(new_faces) == 1 and len(new_faces[0]) == length + 4
    for v, j, flag in ((va, ja, orient.flags[ja]), (vb, jb, orient.flags[jb])):
        if rs.active_degree(v) == 3:
            assert _block_class(rs, j) == flag


def add_path(
    rs: RotationSystem, path: TriplePath, orient: OrientationAssignment
) -> RotationSystem:
    """Functional wrapper around the in-place path insertion."""
    out = rs.copy()
    _insert_path(out, path, orient)
    return out


def _block_class(rs: RotationSystem, j: int) -> bool:
    g = rs.graph
    rot = rs.rotation(g.block_vid(j))
    pts = tuple(g.dart_head(d) for d in rot)
    return _cyclic_class(g.ts.blocks[j], pts)  # type: ignore[arg-type]


def induced_orientation(rs: RotationSystem, block: Vertex) -> bool:
    """The cyclic class the embedding induces at a full block vertex, as a
    flag relative to the block's stored point order."""
    g = rs.graph
    if not isinstance(g, IncidenceGraph) or block.kind != "block":
        raise ValueError("induced orientation is defined at block vertices")
    if rs.active_degree(g.vid(block)) != 3:
        raise ValueError(f"block {block.index} does not have valency 3")
    return _block_class(rs, block.index)


@dataclass(frozen=True)
class Embedding:
    rotation: RotationSystem
    faces: tuple[FaceWalk, ...]
    genus: int


def build_spanning_tree(ts: TripleSystem, g: IncidenceGraph) -> SpanningTree:
    """The pipeline's tree: repaired level tree for an STS, direct tree for an
    odd-order Latin square."""
    if validate_sts(ts).ok:
        return repair_odd_points(build_initial_sts_tree(g))
    ls = latin_from_triple_system(ts)
    if ls is not None and ls.n % 2 == 1:
        return build_ls_tree(g, ls)
    raise ValueError(
        "design is neither a Steiner triple system nor an odd-order Latin square"
    )


def embed_with_tree(
    tree: SpanningTree, decomp: PathDecomposition, orient: OrientationAssignment
) -> Embedding:
    """Grow the upper embedding from a prepared tree and path decomposition.

    The tree and decomposition do not depend on the orientation, so sweeps
    over many assignments of one design reuse them.
    """
    g = tree.graph
    rs = embed_spanning_tree(tree, orient)
    for path in decomp.paths:
        _insert_path(rs, path, orient)
    faces = trace_faces(rs)
    assert len(faces) == 1
    genus = genus_of(rs)
    assert genus == len(decomp.paths) == betti_number(g) // 2
    for j in range(g.n_blocks):
        assert _block_class(rs, j) == orient.flags[j]
    return Embedding(rs, faces, genus)


def upper_embed(ts: TripleSystem, orient: OrientationAssignment) -> Embedding:
    """Construct the upper embedding realizing every prescribed orientation.

    Pipeline: incidence graph, even-co-tree spanning tree, co-tree path
    decomposition, sphere embedding of the tree, then one path insertion per
    decomposition path in sorted order.  The result has exactly one face,
    genus betti/2, and induces the prescribed class at every block vertex.
    """
    report = validate_triple_system(ts)
    if not report.ok:
        raise ValueError(f"invalid triple system: {report.summary()}")
    if len(orient.flags) != ts.n_blocks:
        raise ValueError(
            f"orientation has {len(orient.flags)} flags for {ts.n_blocks} blocks"
        )
    g = build_incidence_graph(ts)
    tree = build_spanning_tree(ts, g)
    return embed_with_tree(tree, decompose_cotree_paths(tree), orient)


def reversed_system(rs: RotationSystem) -> RotationSystem:
    """The mirror image: every vertex rotation reversed."""
    sequences = [tuple(reversed(rs.rotation(v))) for v in range(rs.graph.n_vertices)]
    return RotationSystem.from_sequences(rs.graph, sequences)


def inflate_blocks(emb: Embedding, ts: TripleSystem) -> Embedding:
    """Embed the associated graph by expanding every block vertex into a
    triangle on its three points.

    At each point, the dart toward a block vertex is replaced by the two
    triangle darts toward the block's other points, successor of the point in
    the block rotation first.  This preserves the Euler characteristic and
    adds exactly one triangular face per block, bounded by that block's three
    edges.
    """
    rs = emb.rotation
    g = rs.graph
    if not isinstance(g, IncidenceGraph) or g.ts != ts:
        raise ValueError("embedding is not over the incidence graph of ts")
    if rs.n_active_darts != g.n_darts:
        raise ValueError("inflation requires a full embedding")

    pairs = sorted(
        (min(a, b), max(a, b))
        for blk in ts.blocks
        for a, b in itertools.combinations(blk, 2)
    )
    if len(set(pairs)) != len(pairs):
        raise ValueError("associated graph has repeated pairs")
    assoc = DartGraph(
        ts.n_points, tuple(pairs), tuple(f"p{i}" for i in range(ts.n_points))
    )

    def assoc_dart(x: int, y: int) -> int:
        e = assoc.edge_between(x, y)
        assert e is not None
        return 2 * e if assoc.edges[e][0] == x else 2 * e + 1

    succ_in_block: dict[tuple[int, int], int] = {}
    for j in range(g.n_blocks):
        rot = rs.rotation(g.block_vid(j))
        pts = [g.dart_head(d) for d in rot]
        for i, x in enumerate(pts):
            succ_in_block[(j, x)] = pts[(i + 1) % 3]

    sequences: list[list[int]] = []
    for p in range(ts.n_points):
        seq: list[int] = []
        for d in rs.rotation(p):
            j = g.block_of(g.dart_head(d))
            nxt_pt = succ_in_block[(j, p)]
            prv_pt = succ_in_block[(j, nxt_pt)]
            seq.append(assoc_dart(p, nxt_pt))
            seq.append(assoc_dart(p, prv_pt))
        sequences.append(seq)
    out = RotationSystem.from_sequences(assoc, sequences)
    faces = trace_faces(out)
    genus = genus_of(out)
    assert genus == emb.genus, "inflation changed the genus"
    assert len(faces) == len(emb.faces) + ts.n_blocks
    return Embedding(out, faces, genus)


def block_face_index(inflated: Embedding, ts: TripleSystem, j: int) -> int:
    """Index of block j's triangular face in an inflated embedding."""
    want = frozenset(
        (min(a, b), max(a, b)) for a, b in itertools.combinations(ts.blocks[j], 2)
    )
    g = inflated.rotation.graph
    for i, face in enumerate(inflated.faces):
        if len(face.darts) != 3:
            continue
        got = frozenset(
            (min(g.dart_tail(d), g.dart_head(d)), max(g.dart_tail(d), g.dart_head(d)))
            for d in face.darts
        )
        if got == want:
            return i
    raise ValueError(f"no triangular face for block {j}")


def verify_upper_embedding(
    emb: Embedding,
    ts: TripleSystem,
    orient: OrientationAssignment,
    check_inflation: bool = False,
) -> list[str]:
    """Re-derive everything and list the ways emb fails to be a verified upper
    embedding of ts in the prescribed orientation (empty list: verified)."""
    problems = []
    g = emb.rotation.graph
    if not isinstance(g, IncidenceGraph) or g.ts != ts:
        return ["embedding graph does not match the design"]
    if emb.rotation.n_active_darts != g.n_darts:
        return ["embedding does not cover every incidence edge"]

    faces = trace_faces(emb.rotation)
    if tuple(f.darts for f in faces) != tuple(f.darts for f in emb.faces):
        problems.append("stored faces do not match the traced faces")
    if len(faces) != 1:
        problems.append(f"expected a single face, traced {len(faces)}")
    if sum(len(f) for f in faces) != g.n_darts:
        problems.append("face lengths do not sum to the dart count")

    expected_genus = betti_number(g) // 2
    chi = g.n_vertices - g.n_edges + len(faces)
    if chi != 2 - 2 * expected_genus or emb.genus != expected_genus:
        problems.append(
            f"genus mismatch: chi={chi}, stored {emb.genus}, expected {expected_genus}"
        )

    if len(faces) == 1:
        for j in range(g.n_blocks):
            if _block_class(emb.rotation, j) != orient.flags[j]:
                problems.append(f"block {j} induces the wrong orientation class")

    if check_inflation and not problems:
        try:
            inflated = inflate_blocks(emb, ts)
            if len(inflated.faces) != ts.n_blocks + 1:
                problems.append(
                    f"inflation produced {len(inflated.faces)} faces, "
                    f"expected {ts.n_blocks + 1}"
                )
            for j in range(ts.n_blocks):
                block_face_index(inflated, ts, j)
        except (AssertionError, ValueError) as exc:
            problems.append(f"inflation check failed: {exc}")
    return problems


# ---------------------------------------------------------------------------
# Embedding file format:
#   embedding <V> <E> <F> <genus>
#   rot <vertex> <neighbour...>     one line per vertex, cyclic order
#   face <length> <dart...>         darts as tail>head
# ---------------------------------------------------------------------------


def format_embedding(emb: Embedding) -> str:
    g = emb.rotation.graph
    lines = [
        f"embedding {g.n_vertices} {emb.rotation.n_active_edges} "
        f"{len(emb.faces)} {emb.genus}"
    ]
    for v in range(g.n_vertices):
        nbrs = " ".join(g.labels[u] for u in emb.rotation.rotation_neighbors(v))
        lines.append(f"rot {g.labels[v]} {nbrs}".rstrip())
    for face in emb.faces:
        darts = " ".join(g.dart_str(d) for d in face.darts)
        lines.append(f"face {len(face.darts)} {darts}".rstrip())
    return "\n".join(lines) + "\n"


def parse_embedding(text: str, g: IncidenceGraph) -> Embedding:
    """Parse and structurally validate an embedding file against g.

    Raises ValueError on any malformed or internally inconsistent file (bad
    counts, unknown labels, rotations that are not neighbour permutations,
    face lines that do not re-trace).  Semantic verification against a design
    and an orientation is verify_upper_embedding's job.
    """
    label_to_vid = {lab: v for v, lab in enumerate(g.labels)}
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("embedding "):
        raise ValueError("missing embedding header")
    header = lines[0].split()
    if len(header) != 5:
        raise ValueError("embedding header needs V E F genus")
    try:
        nv, ne, nf, genus = (int(tok) for tok in header[1:])
    except ValueError:
        raise ValueError("non-integer embedding header") from None
    if nv != g.n_vertices or ne != g.n_edges:
        raise ValueError(
            f"embedding is over {nv} vertices / {ne} edges, design has "
            f"{g.n_vertices} / {g.n_edges}"
        )

    rot_lines: dict[int, list[int]] = {}
    face_lines: list[list[int]] = []
    for line in lines[1:]:
        parts = line.split()
        if parts[0] == "rot":
            if parts[1] not in label_to_vid:
                raise ValueError(f"unknown vertex {parts[1]!r}")
            v = label_to_vid[parts[1]]
            if v in rot_lines:
                raise ValueError(f"duplicate rotation for {parts[1]}")
            try:
                rot_lines[v] = [label_to_vid[tok] for tok in parts[2:]]
            except KeyError as exc:
                raise ValueError(f"unknown neighbour {exc.args[0]!r}") from None
        elif parts[0] == "face":
            if len(parts) < 2:
                raise ValueError("face line needs a length")
            darts = []
            for tok in parts[2:]:
                try:
                    t_lab, h_lab = tok.split(">")
                    t, h = label_to_vid[t_lab], label_to_vid[h_lab]
                except (ValueError, KeyError):
                    raise ValueError(f"bad dart token {tok!r}") from None
                e = g.edge_between(t, h)
                if e is None:
                    raise ValueError(f"dart {tok!r} is not an edge")
                darts.append(2 * e if g.edges[e][0] == t else 2 * e + 1)
            if int(parts[1]) != len(darts):
                raise ValueError("face length does not match its dart count")
            face_lines.append(darts)
        else:
            raise ValueError(f"unknown embedding line {parts[0]!r}")

    if set(rot_lines) != set(range(g.n_vertices)):
        raise ValueError("embedding must give a rotation for every vertex")
    for v, nbrs in rot_lines.items():
        if sorted(nbrs) != sorted(g.neighbors(v)):
            raise ValueError(f"rotation at {g.labels[v]} is not a neighbour permutation")
    rs = RotationSystem.from_neighbor_sequences(
        g, [rot_lines[v] for v in range(g.n_vertices)]
    )

    traced = trace_faces(rs)
    if len(face_lines) != nf or len(traced) != nf:
        raise ValueError(
            f"header claims {nf} faces, file lists {len(face_lines)}, "
            f"rotations trace {len(traced)}"
        )
    listed = {tuple(_rotate_min(tuple(d))) for d in face_lines}
    actual = {tuple(_rotate_min(f.darts)) for f in traced}
    if listed != actual:
        raise ValueError("face lines do not match the faces traced from the rotations")
    chi = g.n_vertices - g.n_edges + len(traced)
    if chi != 2 - 2 * genus:
        raise ValueError(f"header genus {genus} contradicts Euler characteristic {chi}")
    return Embedding(rs, traced, genus)


def _rotate_min(seq: tuple[int, ...]) -> tuple[int, ...]:
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]
