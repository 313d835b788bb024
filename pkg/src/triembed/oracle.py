"""Independent verification: exhaustive rotation-system enumeration on small
graphs, and orientation sweeps over whole designs.

The enumerator anchors each vertex's rotation at its smallest dart and
permutes the rest, so it yields every rotation system exactly once (counting
systems, not redundant cyclic representations).  Sweeps rebuild and fully
re-verify an upper embedding per orientation assignment; failures are
recorded in the report, never thrown.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from triembed.designs import OrientationAssignment, TripleSystem
from triembed.incidence import DartGraph, IncidenceGraph, build_incidence_graph
from triembed.prng import Lcg64
from triembed.rotation import (
    RotationSystem,
    _block_class,
    build_spanning_tree,
    count_faces,
    embed_with_tree,
    upper_embed,
    verify_upper_embedding,
)
from triembed.spanning import decompose_cotree_paths

DEFAULT_ENUM_CAP = 1 << 24
DEFAULT_SWEEP_CAP = 1 << 20


class CapExceededError(ValueError):
    """The requested enumeration or sweep is larger than the configured cap."""


def rotation_system_count(g: DartGraph) -> int:
    return math.prod(math.factorial(max(g.degree(v) - 1, 0)) for v in range(g.n_vertices))


def enumerate_rotation_systems(
    g: DartGraph, cap: int = DEFAULT_ENUM_CAP
) -> Iterator[RotationSystem]:
    """Yield every rotation system of g exactly once, in deterministic order."""
    total = rotation_system_count(g)
    if total > cap:
        raise CapExceededError(f"{total} rotation systems exceed the cap {cap}")
    per_vertex: list[list[tuple[int, ...]]] = []
    for v in range(g.n_vertices):
        out = g.out_darts(v)
        if not out:
            per_vertex.append([()])
            continue
        anchor, rest = out[0], out[1:]
        per_vertex.append([(anchor, *perm) for perm in permutations(rest)])
    n_darts = g.n_darts
    for combo in product(*per_vertex):
        next_map = [-1] * n_darts
        for seq in combo:
            for i, dart in enumerate(seq):
                next_map[dart] = seq[(i + 1) % len(seq)]
        yield RotationSystem(g, next_map)


def block_class_mask(rs: RotationSystem) -> int:
    """Bit j holds block j's induced class for a full incidence-graph system."""
    g = rs.graph
    assert isinstance(g, IncidenceGraph)
    mask = 0
    for j in range(g.n_blocks):
        if _block_class(rs, j):
            mask |= 1 << j
    return mask


def brute_force_single_face(
    g: IncidenceGraph, orient: OrientationAssignment, cap: int = DEFAULT_ENUM_CAP
) -> RotationSystem | None:
    """First enumerated single-face system whose block rotations all match
    orient, or None when no such system exists."""
    want = 0
    for j, flag in enumerate(orient.flags):
        if flag:
            want |= 1 << j
    for rs in enumerate_rotation_systems(g, cap):
        if count_faces(rs) == 1 and block_class_mask(rs) == want:
            return rs
    return None


@dataclass(frozen=True)
class OracleReport:
    design: str
    systems: int
    single_face: int
    classes: int
    witnessed: int
    construction_matches: int

    @property
    def ok(self) -> bool:
        return self.witnessed == self.classes and self.construction_matches == self.classes


def cross_check_single_face(
    ts: TripleSystem, design_id: str = "design", cap: int = DEFAULT_ENUM_CAP
) -> OracleReport:
    """Enumerate all rotation systems and confirm that every orientation class
    has a single-face witness, and that the constructed embedding's rotation
    system is among the witnesses of its own class."""
    g = build_incidence_graph(ts)
    n_classes = 1 << g.n_blocks
    witnesses: dict[int, set[tuple[tuple[int, ...], ...]]] = {}
    systems = 0
    single = 0
    for rs in enumerate_rotation_systems(g, cap):
        systems += 1
        if count_faces(rs) == 1:
            single += 1
            witnesses.setdefault(block_class_mask(rs), set()).add(rs.canonical_key())
    matches = 0
    for mask in range(n_classes):
        orient = OrientationAssignment.from_mask(mask, g.n_blocks)
        emb = upper_embed(ts, orient)
        if emb.rotation.canonical_key() in witnesses.get(mask, set()):
            matches += 1
    return OracleReport(
        design=design_id,
        systems=systems,
        single_face=single,
        classes=n_classes,
        witnessed=len(witnesses),
        construction_matches=matches,
    )


def format_oracle_report(r: OracleReport) -> str:
    return (
        f"oracle {r.design} systems={r.systems} single_face={r.single_face} "
        f"classes={r.classes} witnessed={r.witnessed} "
        f"construction_matches={r.construction_matches}\n"
    )


@dataclass(frozen=True)
class SweepMode:
    exhaustive: bool = False
    samples: int = 0
    seed: int = 0


@dataclass(frozen=True)
class SweepReport:
    design: str
    total: int
    successes: int
    failures: tuple[tuple[str, str], ...]  # (+/- assignment string, reason)
    genus: int | None
    seed: int | None
    wall_time: float


def _flags_string(mask: int, n_blocks: int) -> str:
    return "".join("+" if (mask >> i) & 1 else "-" for i in range(n_blocks))


def _sweep_chunk(args: tuple[TripleSystem, list[int]]) -> list[tuple[bool, int, str]]:
    """Verify one chunk of assignment masks, sharing the design's tree."""
    ts, masks = args
    results = []
    tree = decomp = None
    for mask in masks:
        orient = OrientationAssignment.from_mask(mask, ts.n_blocks)
        try:
            if tree is None:
                g = build_incidence_graph(ts)
                tree = build_spanning_tree(ts, g)
                decomp = decompose_cotree_paths(tree)
            emb = embed_with_tree(tree, decomp, orient)
            problems = verify_upper_embedding(emb, ts, orient)
            if problems:
                results.append((False, -1, "; ".join(problems)))
            else:
                results.append((True, emb.genus, ""))
        except (ValueError, RuntimeError, AssertionError) as exc:
            results.append((False, -1, f"{type(exc).__name__}: {exc}"))
    return results


def sweep_orientations(
    ts: TripleSystem,
    mode: SweepMode,
    design_id: str = "design",
    parallel: int = 1,
    cap: int = DEFAULT_SWEEP_CAP,
) -> SweepReport:
    """Run upper_embed plus full verification for a set of orientation
    assignments: all 2^b of them (exhaustive) or all-plus, all-minus, and
    ``samples`` seeded draws.  The report aggregates in assignment order
    regardless of how work is scheduled."""
    b = ts.n_blocks
    if mode.exhaustive:
        if 1 << b > cap:
            raise CapExceededError(f"2^{b} assignments exceed the sweep cap {cap}")
        masks = list(range(1 << b))
        seed: int | None = None
    else:
        if mode.samples < 0:
            raise ValueError("sample count must be >= 0")
        lcg = Lcg64(mode.seed)
        masks = [(1 << b) - 1, 0]
        masks.extend(lcg.mask(b) for _ in range(mode.samples))
        seed = mode.seed

    start = time.perf_counter()
    if parallel > 1:
        size = max(1, (len(masks) + 4 * parallel - 1) // (4 * parallel))
        chunks = [(ts, masks[i : i + size]) for i in range(0, len(masks), size)]
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = [r for chunk in pool.map(_sweep_chunk, chunks) for r in chunk]
    else:
        results = _sweep_chunk((ts, masks))
    wall = time.perf_counter() - start

    successes = 0
    failures = []
    genus: int | None = None
    for mask, (ok, g_val, reason) in zip(masks, results):
        if ok:
            successes += 1
            if genus is None:
                genus = g_val
            assert genus == g_val, "genus varied across successful assignments"
        else:
            failures.append((_flags_string(mask, b), reason))
    return SweepReport(
        design=design_id,
        total=len(masks),
        successes=successes,
        failures=tuple(failures),
        genus=genus,
        seed=seed,
        wall_time=wall,
    )


def format_sweep_report(r: SweepReport) -> str:
    genus = "-" if r.genus is None else str(r.genus)
    seed = "-" if r.seed is None else str(r.seed)
    lines = [f"sweep {r.design} total={r.total} ok={r.successes} genus={genus} seed={seed}"]
    for bits, reason in r.failures:
        lines.append(f"FAIL {bits} {reason}")
    return "\n".join(lines) + "\n"
