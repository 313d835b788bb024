"""Triple systems, Latin squares, orientation assignments, and their file formats."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Block = tuple[int, int, int]


@dataclass(frozen=True)
class TripleSystem:
    """A design on points 0..n_points-1 whose blocks are ordered triples.

    Blocks are stored as ordered triples; orientation flags are interpreted
    relative to the stored order, so block order and point order inside a
    block are significant for reproducibility.
    """

    n_points: int
    blocks: tuple[Block, ...]

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class LatinSquare:
    """An n x n grid whose rows and columns are permutations of 0..n-1."""

    n: int
    cells: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OrientationAssignment:
    """One orientation class per block, in block-list order.

    ``True`` selects the cyclic class of the block's triple as stored
    (u, v, w); ``False`` selects the reversed class (u, w, v).
    """

    flags: tuple[bool, ...]

    @classmethod
    def all_plus(cls, n_blocks: int) -> "OrientationAssignment":
        return cls((True,) * n_blocks)

    @classmethod
    def all_minus(cls, n_blocks: int) -> "OrientationAssignment":
        return cls((False,) * n_blocks)

    @classmethod
    def from_mask(cls, mask: int, n_blocks: int) -> "OrientationAssignment":
        return cls(tuple(bool((mask >> i) & 1) for i in range(n_blocks)))

    @classmethod
    def from_string(cls, text: str) -> "OrientationAssignment":
        bad = set(text) - {"+", "-"}
        if bad:
            raise ValueError(f"orientation string may contain only '+'/'-', got {sorted(bad)}")
        return cls(tuple(ch == "+" for ch in text))

    def to_string(self) -> str:
        return "".join("+" if f else "-" for f in self.flags)

    def __len__(self) -> int:
        return len(self.flags)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Pass/fail outcome per invariant; ``ok`` iff all checks passed."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.ok)

    def summary(self) -> str:
        return "; ".join(f"{c.name}: {c.detail or 'fail'}" for c in self.failures()) or "ok"


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def validate_triple_system(ts: TripleSystem) -> ValidationReport:
    """Check block shape, pairwise balance, and connectivity of the associated graph."""
    checks = []

    shape_ok, shape_detail = True, ""
    if ts.n_points < 1:
        shape_ok, shape_detail = False, f"n_points must be >= 1, got {ts.n_points}"
    else:
        for j, blk in enumerate(ts.blocks):
            if len(blk) != 3 or len(set(blk)) != 3:
                shape_ok, shape_detail = False, f"block {j} = {blk} is not 3 distinct points"
                break
            if not all(0 <= p < ts.n_points for p in blk):
                shape_ok, shape_detail = False, f"block {j} = {blk} out of range"
                break
    checks.append(CheckResult("block_shape", shape_ok, shape_detail))

    pair_ok, pair_detail = True, ""
    if shape_ok:
        seen: dict[tuple[int, int], int] = {}
        for j, blk in enumerate(ts.blocks):
            for a, b in itertools.combinations(blk, 2):
                key = _pair(a, b)
                if key in seen:
                    pair_ok = False
                    pair_detail = f"pair {key} occurs in blocks {seen[key]} and {j}"
                    break
                seen[key] = j
            if not pair_ok:
                break
    checks.append(CheckResult("pairs_at_most_once", pair_ok, pair_detail))

    conn_ok, conn_detail = True, ""
    if shape_ok:
        parent = list(range(ts.n_points))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for blk in ts.blocks:
            for a, b in itertools.combinations(blk, 2):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        roots = {find(p) for p in range(ts.n_points)}
        if len(roots) > 1:
            conn_ok, conn_detail = False, f"associated graph has {len(roots)} components"
    checks.append(CheckResult("connected", conn_ok, conn_detail))

    return ValidationReport(tuple(checks))


def validate_sts(ts: TripleSystem) -> ValidationReport:
    """Steiner validity: a valid triple system covering every pair exactly once."""
    base = validate_triple_system(ts)
    checks = list(base.checks)

    cover_ok, cover_detail = True, ""
    if base.ok:
        covered = set()
        for blk in ts.blocks:
            for a, b in itertools.combinations(blk, 2):
                covered.add(_pair(a, b))
        n = ts.n_points
        expected = n * (n - 1) // 2
        if len(covered) != expected:
            cover_ok = False
            cover_detail = f"{expected - len(covered)} of {expected} pairs uncovered"
    else:
        cover_ok, cover_detail = False, "triple system invalid"
    checks.append(CheckResult("pairs_exactly_once", cover_ok, cover_detail))
    return ValidationReport(tuple(checks))


def validate_latin_square(ls: LatinSquare) -> ValidationReport:
    checks = []
    n = ls.n
    shape_ok = n >= 1 and len(ls.cells) == n and all(len(row) == n for row in ls.cells)
    checks.append(CheckResult("shape", shape_ok, "" if shape_ok else f"not an {n}x{n} grid"))
    expected = set(range(n))
    rows_ok = shape_ok and all(set(row) == expected for row in ls.cells)
    checks.append(CheckResult("rows", rows_ok, "" if rows_ok else "a row is not a permutation"))
    cols_ok = shape_ok and all(
        {ls.cells[i][j] for i in range(n)} == expected for j in range(n)
    )
    checks.append(CheckResult("columns", cols_ok, "" if cols_ok else "a column is not a permutation"))
    return ValidationReport(tuple(checks))


def latin_to_triple_system(ls: LatinSquare) -> TripleSystem:
    """Triples (i, n+j, 2n+L(i,j)) in row-major cell order, on 3n points.

    Point labelling is fixed as rows 0..n-1, columns n..2n-1, entries
    2n..3n-1 so that block order and all downstream trees are deterministic.
    """
    report = validate_latin_square(ls)
    if not report.ok:
        raise ValueError(f"invalid Latin square: {report.summary()}")
    n = ls.n
    blocks = tuple(
        (i, n + j, 2 * n + ls.cells[i][j]) for i in range(n) for j in range(n)
    )
    return TripleSystem(3 * n, blocks)


def latin_from_triple_system(ts: TripleSystem) -> LatinSquare | None:
    """Inverse of latin_to_triple_system; None if ts is not of that shape."""
    if ts.n_points % 3 != 0:
        return None
    n = ts.n_points // 3
    if ts.n_blocks != n * n:
        return None
    cells = [[-1] * n for _ in range(n)]
    for j, blk in enumerate(ts.blocks):
        i, col = divmod(j, n)
        if blk[0] != i or blk[1] != n + col or not (2 * n <= blk[2] < 3 * n):
            return None
        cells[i][col] = blk[2] - 2 * n
    ls = LatinSquare(n, tuple(tuple(row) for row in cells))
    return ls if validate_latin_square(ls).ok else None


def gen_cayley_latin(n: int) -> LatinSquare:
    """Cayley table of Z_n: cells[i][j] = (i + j) mod n."""
    if n < 1:
        raise ValueError(f"Latin square order must be >= 1, got {n}")
    return LatinSquare(n, tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


# Cyclic difference families: each base block developed mod n covers every
# nonzero difference exactly once.
_DIFFERENCE_FAMILIES = {
    7: ((0, 1, 3),),
    13: ((0, 1, 4), (0, 2, 7)),
}


def gen_sts(n: int) -> TripleSystem:
    """A deterministic STS(n) for n in {7, 13} (cyclic) or n = 3 (mod 6) (Bose).

    Other admissible orders (general n = 1 mod 6) are out of scope; designs of
    those orders can be supplied through a design file instead.
    """
    if n in _DIFFERENCE_FAMILIES:
        blocks = []
        for base in _DIFFERENCE_FAMILIES[n]:
            for i in range(n):
                blocks.append(tuple(sorted((p + i) % n for p in base)))
        return TripleSystem(n, tuple(blocks))

    if n >= 3 and n % 6 == 3:
        # Bose construction over Z_q x Z_3 with q = n/3 odd; point (x, i) is
        # labelled 3x + i.
        q = n // 3
        inv2 = (q + 1) // 2  # inverse of 2 mod q, q odd
        blocks = [(3 * x, 3 * x + 1, 3 * x + 2) for x in range(q)]
        for i in range(3):
            for x, y in itertools.combinations(range(q), 2):
                z = ((x + y) * inv2) % q
                blk = (3 * x + i, 3 * y + i, 3 * z + (i + 1) % 3)
                blocks.append(tuple(sorted(blk)))
        return TripleSystem(n, tuple(blocks))

    raise ValueError(
        f"unsupported STS order {n}: need n in {{7, 13}} or n = 3 (mod 6)"
    )


# ---------------------------------------------------------------------------
# File formats.  All text, UTF-8, 0-based labels; '#' begins a comment line.
#
#   design file:       line 1 "sts <n>" or "pts <n>", then one block per line
#                      (three space-separated point labels)
#   Latin file:        line 1 "ls <n>", then n lines of n entries
#   orientation file:  one line of '+'/'-' characters, i-th char = i-th block
# ---------------------------------------------------------------------------


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def format_design(design: TripleSystem | LatinSquare) -> str:
    if isinstance(design, LatinSquare):
        rows = [" ".join(str(v) for v in row) for row in design.cells]
        return "\n".join([f"ls {design.n}"] + rows) + "\n"
    kind = "sts" if validate_sts(design).ok else "pts"
    rows = [" ".join(str(p) for p in blk) for blk in design.blocks]
    return "\n".join([f"{kind} {design.n_points}"] + rows) + "\n"


def parse_design(text: str) -> TripleSystem | LatinSquare:
    """Parse a design file; raises ValueError on malformed or invalid input."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty design file")
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("sts", "pts", "ls"):
        raise ValueError(f"bad design header: {lines[0]!r}")
    kind = header[0]
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"bad design order: {header[1]!r}") from None

    body = []
    for line in lines[1:]:
        try:
            body.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"bad design line: {line!r}") from None

    if kind == "ls":
        if len(body) != n or any(len(row) != n for row in body):
            raise ValueError(f"Latin square body is not {n} rows of {n} entries")
        ls = LatinSquare(n, tuple(body))
        report = validate_latin_square(ls)
        if not report.ok:
            raise ValueError(f"invalid Latin square: {report.summary()}")
        return ls

    if any(len(row) != 3 for row in body):
        raise ValueError("each block line must have exactly 3 points")
    ts = TripleSystem(n, tuple(body))  # type: ignore[arg-type]
    report = validate_sts(ts) if kind == "sts" else validate_triple_system(ts)
    if not report.ok:
        raise ValueError(f"invalid {kind} design: {report.summary()}")
    return ts


def format_orientation(o: OrientationAssignment) -> str:
    return o.to_string() + "\n"


def parse_orientation(text: str) -> OrientationAssignment:
    lines = _content_lines(text)
    if len(lines) != 1:
        raise ValueError("orientation file must contain exactly one content line")
    return OrientationAssignment.from_string(lines[0])
