import math

import pytest

from triembed.designs import OrientationAssignment, TripleSystem, gen_sts
from triembed.incidence import DartGraph, build_incidence_graph
from triembed.oracle import (
    CapExceededError,
    SweepMode,
    block_class_mask,
    brute_force_single_face,
    cross_check_single_face,
    enumerate_rotation_systems,
    format_sweep_report,
    rotation_system_count,
    sweep_orientations,
)
from triembed.prng import Lcg64
from triembed.rotation import count_faces


def test_counts_match_formula(sts7, ls3_ts):
    for ts in (sts7, ls3_ts):
        g = build_incidence_graph(ts)
        expected = math.prod(
            math.factorial(g.degree(v) - 1) for v in range(g.n_vertices)
        )
        assert rotation_system_count(g) == expected
    assert rotation_system_count(build_incidence_graph(sts7)) == 2**14


def test_enumeration_yields_every_system_once():
    star = build_incidence_graph(TripleSystem(3, ((0, 1, 2),)))
    systems = list(enumerate_rotation_systems(star))
    assert len(systems) == rotation_system_count(star) == 2
    keys = {rs.canonical_key() for rs in systems}
    assert len(keys) == 2
    # a tree: every rotation system has exactly one face
    assert all(count_faces(rs) == 1 for rs in systems)


def test_enumeration_c3():
    c3 = DartGraph(3, ((0, 1), (1, 2), (0, 2)))
    systems = list(enumerate_rotation_systems(c3))
    assert len(systems) == rotation_system_count(c3) == 1
    assert count_faces(systems[0]) == 2


def test_face_count_multiset_invariant_under_relabelling():
    k4a = DartGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    # relabel via the permutation 0->2, 1->0, 2->3, 3->1
    perm = {0: 2, 1: 0, 2: 3, 3: 1}
    k4b = DartGraph(
        4, tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in k4a.edges))
    )
    counts_a = sorted(count_faces(rs) for rs in enumerate_rotation_systems(k4a))
    counts_b = sorted(count_faces(rs) for rs in enumerate_rotation_systems(k4b))
    assert counts_a == counts_b
    assert len(counts_a) == rotation_system_count(k4a) == 16
    assert 1 not in counts_a  # betti(K_4) = 3 is odd: never a single face


def test_enumeration_cap(sts9):
    g = build_incidence_graph(sts9)
    assert rotation_system_count(g) > 1 << 24
    with pytest.raises(CapExceededError):
        next(iter(enumerate_rotation_systems(g)))


def test_brute_force_star_witnesses_both_classes():
    g = build_incidence_graph(TripleSystem(3, ((0, 1, 2),)))
    for flag in (True, False):
        rs = brute_force_single_face(g, OrientationAssignment((flag,)))
        assert rs is not None
        assert count_faces(rs) == 1
        assert block_class_mask(rs) == (1 if flag else 0)


def test_brute_force_sts7_all_plus(sts7):
    g = build_incidence_graph(sts7)
    rs = brute_force_single_face(g, OrientationAssignment.all_plus(7))
    assert rs is not None and count_faces(rs) == 1
    assert block_class_mask(rs) == 127


def test_cross_check_star():
    report = cross_check_single_face(TripleSystem(3, ((0, 1, 2),)), "sts3")
    assert report.systems == 2 and report.classes == 2
    assert report.witnessed == 2 and report.construction_matches == 2
    assert report.ok


# --- sweeps -------------------------------------------------------------------


def test_sweep_exhaustive_sts3():
    ts = gen_sts(3)
    report = sweep_orientations(ts, SweepMode(exhaustive=True), design_id="sts3")
    assert report.total == 2 and report.successes == 2
    assert report.genus == 0 and report.failures == ()
    assert report.seed is None


def test_sweep_sampling_includes_all_plus_minus(sts7):
    report = sweep_orientations(sts7, SweepMode(samples=5, seed=9), design_id="sts7")
    assert report.total == 7  # all-plus, all-minus, 5 samples
    assert report.successes == 7 and report.genus == 4
    assert report.seed == 9


def test_sweep_sampling_is_seeded(sts7):
    lcg = Lcg64(3)
    expected_first = lcg.mask(7)
    r1 = sweep_orientations(sts7, SweepMode(samples=3, seed=3), design_id="sts7")
    r2 = sweep_orientations(sts7, SweepMode(samples=3, seed=3), design_id="sts7")
    assert format_sweep_report(r1) == format_sweep_report(r2)
    assert expected_first == Lcg64(3).mask(7)  # generator itself is stable


def test_sweep_parallel_matches_serial(sts7):
    serial = sweep_orientations(
        sts7, SweepMode(exhaustive=True), design_id="sts7", parallel=1
    )
    parallel = sweep_orientations(
        sts7, SweepMode(exhaustive=True), design_id="sts7", parallel=3
    )
    assert format_sweep_report(serial) == format_sweep_report(parallel)


def test_sweep_records_failures_instead_of_raising():
    pts = TripleSystem(5, ((0, 1, 2), (0, 3, 4)))  # connected, not STS, not LS
    report = sweep_orientations(pts, SweepMode(exhaustive=True), design_id="pts")
    assert report.total == 4 and report.successes == 0
    assert len(report.failures) == 4
    assert report.genus is None
    text = format_sweep_report(report)
    assert text.count("FAIL") == 4 and "genus=-" in text


def test_sweep_cap():
    ts = gen_sts(13)  # 26 blocks
    with pytest.raises(CapExceededError):
        sweep_orientations(ts, SweepMode(exhaustive=True), cap=1 << 20)


def test_report_format(sts7):
    report = sweep_orientations(sts7, SweepMode(exhaustive=True), design_id="sts7")
    text = format_sweep_report(report)
    assert text.splitlines()[0] == "sweep sts7 total=128 ok=128 genus=4 seed=-"


def test_lcg_constants_and_stream():
    # The documented generator: state = state*6364136223846793005 +
    # 1442695040888963407 (mod 2^64); flags take the top bit.
    lcg = Lcg64(1)
    first = (1 * 6364136223846793005 + 1442695040888963407) % (1 << 64)
    assert lcg.next_u64() == first
    assert Lcg64(1).next_bit() == first >> 63
