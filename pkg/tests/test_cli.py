import subprocess
import sys

import pytest

from triembed.cli import main
from triembed.designs import (
    OrientationAssignment,
    format_orientation,
    parse_design,
    validate_sts,
)


def run(args):
    return main(list(args))


def test_gen_sts7(tmp_path, capsys):
    out = tmp_path / "sts7.txt"
    assert run(["gen", "sts", "7", "-o", str(out)]) == 0
    design = parse_design(out.read_text())
    assert validate_sts(design).ok and design.n_blocks == 7


def test_gen_ls3_stdout(capsys):
    assert run(["gen", "ls", "3"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("ls 3\n0 1 2\n")


def test_gen_unsupported_order_exits_2(capsys):
    assert run(["gen", "sts", "8"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_even_latin_exits_2(capsys):
    assert run(["gen", "ls", "4"]) == 2


def test_embed_sts7_all_plus(tmp_path, capsys):
    out = tmp_path / "emb.txt"
    assert run(["embed", "sts7", "--orient", "all-plus", "-o", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "genus=4 faces=1"
    assert out.read_text().startswith("embedding 14 21 1 4\n")


def test_embed_ls3_random_seed(tmp_path, capsys):
    out = tmp_path / "emb.txt"
    assert run(["embed", "ls3", "--orient", "random:7", "-o", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "genus=5 faces=1"


def test_embed_from_files(tmp_path, capsys):
    design = tmp_path / "d.txt"
    orient = tmp_path / "o.txt"
    out = tmp_path / "e.txt"
    assert run(["gen", "sts", "9", "-o", str(design)]) == 0
    orient.write_text(format_orientation(OrientationAssignment.from_mask(1000, 12)))
    assert run(["embed", str(design), "--orient", str(orient), "-o", str(out)]) == 0
    assert "genus=8" in capsys.readouterr().out


def test_embed_malformed_design_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("sts 4\n0 1 2\n")
    assert run(["embed", str(bad), "--orient", "all-plus"]) == 2


def test_embed_missing_file_exits_2(tmp_path):
    assert run(["embed", str(tmp_path / "nope.txt"), "--orient", "all-plus"]) == 2


def test_embed_wrong_orientation_length_exits_2(tmp_path):
    orient = tmp_path / "o.txt"
    orient.write_text("+++\n")
    assert run(["embed", "sts7", "--orient", str(orient)]) == 2


def test_embed_dump_tree_and_dot(tmp_path, capsys):
    tree = tmp_path / "tree.txt"
    dot = tmp_path / "g.dot"
    out = tmp_path / "e.txt"
    assert (
        run(
            [
                "embed", "sts7", "--orient", "all-plus", "-o", str(out),
                "--dump-tree", str(tree), "--dot", str(dot),
            ]
        )
        == 0
    )
    lines = tree.read_text().splitlines()
    assert len(lines) == 13  # |V| - 1 tree edges
    assert all(len(ln.split()) == 2 for ln in lines)
    assert dot.read_text().startswith("graph incidence {")


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "e.txt"
    orient = tmp_path / "o.txt"
    assert (
        run(
            [
                "embed", "sts7", "--orient", "random:3", "-o", str(out),
                "--save-orient", str(orient),
            ]
        )
        == 0
    )
    assert run(["verify", "sts7", str(orient), str(out)]) == 0
    assert "verified genus=4" in capsys.readouterr().out


def test_verify_reversed_block_rotation_exits_1(tmp_path, capsys):
    out = tmp_path / "e.txt"
    assert run(["embed", "sts7", "--orient", "all-plus", "-o", str(out)]) == 0
    # Reverse one block rotation and regenerate a structurally consistent file.
    from triembed.designs import gen_sts
    from triembed.incidence import build_incidence_graph
    from triembed.rotation import (
        Embedding,
        RotationSystem,
        format_embedding,
        parse_embedding,
        trace_faces,
    )

    g = build_incidence_graph(gen_sts(7))
    emb = parse_embedding(out.read_text(), g)
    seqs = [list(emb.rotation.rotation(v)) for v in range(g.n_vertices)]
    seqs[g.block_vid(2)] = list(reversed(seqs[g.block_vid(2)]))
    mutated = RotationSystem.from_sequences(g, seqs)
    faces = trace_faces(mutated)
    chi = g.n_vertices - g.n_edges + len(faces)
    out.write_text(format_embedding(Embedding(mutated, faces, (2 - chi) // 2)))
    assert run(["verify", "sts7", "all-plus", str(out)]) == 1


def test_verify_missing_dart_exits_2(tmp_path):
    out = tmp_path / "e.txt"
    assert run(["embed", "sts7", "--orient", "all-plus", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    face_idx = next(i for i, ln in enumerate(lines) if ln.startswith("face"))
    parts = lines[face_idx].split()
    lines[face_idx] = " ".join(parts[:2] + parts[3:])
    out.write_text("\n".join(lines) + "\n")
    assert run(["verify", "sts7", "all-plus", str(out)]) == 2


def test_sweep_exhaustive_sts7(tmp_path, capsys):
    out = tmp_path / "r.txt"
    assert run(["sweep", "--design", "sts7", "--exhaustive", "-o", str(out)]) == 0
    assert out.read_text() == "sweep sts7 total=128 ok=128 genus=4 seed=-\n"


def test_sweep_samples_ls5(tmp_path):
    out = tmp_path / "r.txt"
    assert (
        run(
            [
                "sweep", "--design", "ls5", "--samples", "200", "--seed", "3",
                "-o", str(out),
            ]
        )
        == 0
    )
    assert out.read_text() == "sweep ls5 total=202 ok=202 genus=18 seed=3\n"


def test_sweep_failure_exit_code(tmp_path):
    design = tmp_path / "pts.txt"
    design.write_text("pts 5\n0 1 2\n0 3 4\n")
    out = tmp_path / "r.txt"
    assert run(["sweep", "--design", str(design), "--exhaustive", "-o", str(out)]) == 1
    assert "FAIL" in out.read_text()


def test_sweep_cap_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("TRIEMBED_SWEEP_CAP", "4")
    assert run(["sweep", "--design", "sts7", "--exhaustive"]) == 2
    monkeypatch.delenv("TRIEMBED_SWEEP_CAP")
    assert run(["sweep", "--design", "sts7", "--exhaustive", "--cap", "4"]) == 2


def test_oracle_cli_sts3(tmp_path):
    design = tmp_path / "d.txt"
    design.write_text("sts 3\n0 1 2\n")
    out = tmp_path / "r.txt"
    assert run(["oracle", "--design", str(design), "-o", str(out)]) == 0
    assert (
        out.read_text()
        == f"oracle {design} systems=2 single_face=2 classes=2 witnessed=2 "
        "construction_matches=2\n"
    )


def test_oracle_cap_exits_2():
    # STS(9) has 6^9 * 2^12 rotation systems, far above the default cap.
    assert run(["oracle", "--design", "sts9"]) == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    for out in (out1, out2):
        proc = subprocess.run(
            [sys.executable, "-m", "triembed", "gen", "sts", "7", "-o", str(out)],
            capture_output=True,
        )
        assert proc.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
