"""End-to-end runs of the command line driver, in process."""

import json
import pathlib

import pytest

from gcl import LawResult, OracleReport
from gcl.cli import main

T1_CXT = "B\n\n3\n2\n\ng1\ng2\ng3\na\nb\nX.\nXX\n.X\n"
T1_CSV = ",a,b\ng1,1,0\ng2,1,1\ng3,0,1\n"


@pytest.fixture
def t1_path(tmp_path):
    p = tmp_path / "t1.cxt"
    p.write_text(T1_CXT)
    return str(p)


@pytest.fixture
def t1_csv_path(tmp_path):
    p = tmp_path / "t1.csv"
    p.write_text(T1_CSV)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- build ---


def test_build_text(capsys, t1_path):
    code, out, _ = run(capsys, "build", t1_path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "gcl lattice: 3 objects, 2 attributes, 3 blocks, 8 nodes"
    assert "block D2: {g2} with row a & b" in lines
    assert "zero_rho: minterms [0]" in lines
    assert "one_eta: minterms [1, 2, 3]" in lines
    assert sum(1 for l in lines if l.startswith("node [")) == 8
    assert "node [1] {g1}" in lines
    assert "  grsp: !b" in lines
    assert "  gfcp: !b & a" in lines
    assert lines[-1].startswith("covers: ")
    assert len(lines[-1].removeprefix("covers: ").split(", ")) == 12


def test_build_json(capsys, t1_path):
    code, out, _ = run(capsys, "build", t1_path, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "gcl"
    assert data["objects"] == ["g1", "g2", "g3"]
    assert data["attributes"] == ["a", "b"]
    assert len(data["blocks"]) == 3
    assert len(data["nodes"]) == 8
    assert len(data["edges"]) == 12
    node = data["nodes"][1]
    assert node["extent"] == ["g1"]
    assert node["grsp_minterms"] == [0, 1]
    assert node["gfcp_minterms"] == [1]
    assert data["constants"]["zero_rho"] == [0]
    assert data["constants"]["one_eta"] == [1, 2, 3]


def test_build_output_is_reproducible(capsys, t1_path):
    _, first_json, _ = run(capsys, "build", t1_path, "--format", "json")
    _, first_dot, _ = run(capsys, "build", t1_path, "--format", "dot")
    _, second_json, _ = run(capsys, "build", t1_path, "--format", "json")
    _, second_dot, _ = run(capsys, "build", t1_path, "--format", "dot")
    assert first_json == second_json
    assert first_dot == second_dot


def test_build_dot(capsys, t1_path):
    code, out, _ = run(capsys, "build", t1_path, "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "digraph gcl {"
    assert lines[1] == "  rankdir=BT;"
    assert lines[-1] == "}"
    assert '  n1 [label="{g1} | !b"];' in lines
    assert sum(1 for l in lines if "->" in l) == 12


def test_build_fcl(capsys, t1_path):
    code, out, _ = run(capsys, "build", t1_path, "--lattice", "fcl")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "fcl lattice: 3 objects, 2 attributes, 4 concepts"
    assert "concept [0] {g2} with intent {a, b}" in lines
    assert "  property: a & b" in lines
    assert lines[-1] == "covers: 0<1, 0<2, 1<3, 2<3"


def test_build_rsl_json(capsys, t1_path):
    code, out, _ = run(capsys, "build", t1_path, "--lattice", "rsl", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kind"] == "rsl"
    assert [n["extent"] for n in data["nodes"]] == [
        [], ["g1", "g2"], ["g2", "g3"], ["g1", "g2", "g3"],
    ]
    assert data["nodes"][0]["intent"] == []
    assert data["nodes"][3]["intent"] == ["a", "b"]


def test_build_from_csv(capsys, t1_path, t1_csv_path):
    _, from_cxt, _ = run(capsys, "build", t1_path, "--format", "json")
    _, from_csv, _ = run(capsys, "build", t1_csv_path, "--format", "json")
    assert from_cxt == from_csv


def test_input_format_override(capsys, tmp_path):
    p = tmp_path / "table.data"
    p.write_text(T1_CSV)
    code, out, _ = run(capsys, "build", str(p), "--input-format", "csv")
    assert code == 0
    assert "8 nodes" in out


def test_build_out_file(capsys, tmp_path, t1_path):
    target = tmp_path / "lat.json"
    code, out, _ = run(capsys, "build", t1_path, "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["kind"] == "gcl"


# --- verify ---


def test_verify_ok(capsys, t1_path):
    code, out, _ = run(capsys, "verify", t1_path)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("context sha256 ")
    assert lines[1] == "3 objects, 2 attributes, 3 blocks"
    assert sum(1 for l in lines if l.startswith("law ") and l.endswith(": ok")) == 19
    assert not any(": FAIL" in l for l in lines)
    assert lines[-1] == "all laws hold"


def test_verify_json(capsys, t1_path):
    code, out, _ = run(capsys, "verify", t1_path, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    assert len(data["laws"]) == 19
    assert "sweep" not in data


def test_verify_sweep(capsys, t1_path):
    code, out, _ = run(capsys, "verify", t1_path, "--sweep")
    assert code == 0
    lines = out.splitlines()
    assert "sweep: 8 attribute classes over 16 composite attributes" in lines
    assert "class {g1}: size 2, min [1], max [0, 1]" in lines
    assert sum(1 for l in lines if l.startswith("class ")) == 8
    assert lines[-1] == "all laws hold"


def test_verify_sweep_json(capsys, t1_path):
    code, out, _ = run(capsys, "verify", t1_path, "--sweep", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["sweep"]["passed"] is True
    assert len(data["sweep"]["classes"]) == 8


def test_verify_reports_failures(capsys, t1_path, monkeypatch):
    def fake(ctx, lat=None):
        return OracleReport(
            "0" * 64, 3, 2,
            (LawResult("extent-fixpoint", False, "X={g1}: grsp does not evaluate back"),),
            None,
            (),
        )

    monkeypatch.setattr("gcl.cli.verify_laws", fake)
    code, out, _ = run(capsys, "verify", t1_path)
    assert code == 4
    lines = out.splitlines()
    assert "law extent-fixpoint: FAIL (X={g1}: grsp does not evaluate back)" in lines
    assert lines[-1] == "1 laws FAILED"


# --- compare ---


def test_compare_agrees(capsys, t1_path):
    code, out, _ = run(capsys, "compare", t1_path)
    assert code == 0
    assert out.splitlines() == [
        "fcl: routes agree on 4 concepts",
        "rsl: routes agree on 4 concepts",
    ]


# --- random ---


def test_random_matches_golden(capsys):
    golden = pathlib.Path(__file__).parent / "golden" / "random_seed1_4x3.cxt"
    code, out, _ = run(capsys, "random", "1", "4", "3", "0.5")
    assert code == 0
    assert out == golden.read_text()


def test_random_out_file(capsys, tmp_path):
    target = tmp_path / "ctx.cxt"
    code, out, _ = run(capsys, "random", "1", "4", "3", "0.5", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("B\n\n4\n3\n")


def test_random_rejects_bad_density(capsys):
    code, _, err = run(capsys, "random", "1", "4", "3", "1.5")
    assert code == 1
    assert "density 1.5 outside [0, 1]" in err


def test_random_rejects_negative_dimensions(capsys):
    code, _, err = run(capsys, "random", "1", "-4", "3", "0.5")
    assert code == 1
    assert "negative dimensions" in err


# --- inspect ---


def test_inspect_by_objects(capsys, t1_path):
    code, out, _ = run(capsys, "inspect", t1_path, "--objects", "g1")
    assert code == 0
    assert out.splitlines() == [
        "extent: {g1}",
        "blocks: D1",
        "grsp: !b  (minterms [0, 1])",
        "gfcp: !b & a  (minterms [1])",
    ]


def test_inspect_empty_extent(capsys, t1_path):
    code, out, _ = run(capsys, "inspect", t1_path, "--objects", "")
    assert code == 0
    assert out.splitlines() == [
        "extent: {}",
        "blocks: (none)",
        "grsp: !a & !b  (minterms [0])",
        "gfcp: 0  (minterms [])",
    ]


def test_inspect_by_query(capsys, t1_path):
    code, out, _ = run(capsys, "inspect", t1_path, "--query", "a & !b")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "query: a & !b"
    assert lines[1] == "extent: {g1}"


def test_inspect_irreducibles(capsys, t1_path):
    code, out, _ = run(capsys, "inspect", t1_path, "--objects", "g1", "--irreducibles")
    assert code == 0
    lines = out.splitlines()
    assert "conjunction class: {!b}" in lines
    assert "disjunction class: {!b}" in lines


def test_inspect_empty_class_is_marked(capsys, t1_path):
    code, out, _ = run(capsys, "inspect", t1_path, "--objects", "g2", "--irreducibles")
    assert code == 0
    assert "disjunction class: (empty)" in out.splitlines()


def test_inspect_unknown_name(capsys, t1_path):
    code, _, err = run(capsys, "inspect", t1_path, "--objects", "g9")
    assert code == 2
    assert "unknown name 'g9'" in err


def test_inspect_non_block_union(capsys, tmp_path):
    p = tmp_path / "dup.cxt"
    p.write_text("B\n\n3\n2\n\ng1\ng2\ng3\na\nb\nX.\nX.\n.X\n")
    code, _, err = run(capsys, "inspect", str(p), "--objects", "g1")
    assert code == 2
    assert "not a union of blocks" in err


def test_inspect_bad_query(capsys, t1_path):
    code, _, err = run(capsys, "inspect", t1_path, "--query", "a &")
    assert code == 2
    assert "column" in err


# --- failure modes shared by every file-reading command ---


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "build", str(tmp_path / "nope.cxt"))
    assert code == 2
    assert "nope.cxt" in err


def test_malformed_context(capsys, tmp_path):
    p = tmp_path / "bad.cxt"
    p.write_text("B\n\n2\n1\n\ng1\ng2\na\nX\nXX\n")
    code, _, err = run(capsys, "build", str(p))
    assert code == 2
    assert "line 10" in err


def test_block_cap(capsys, t1_path):
    code, _, err = run(capsys, "build", t1_path, "--max-nf", "1")
    assert code == 3
    assert "3 blocks exceed the node cap of 1" in err


def test_block_cap_from_env(capsys, t1_path, monkeypatch):
    monkeypatch.setenv("GCL_MAX_NF", "1")
    code, _, err = run(capsys, "build", t1_path)
    assert code == 3
    assert "node cap of 1" in err


def test_bad_env_value_falls_back(capsys, t1_path, monkeypatch):
    monkeypatch.setenv("GCL_MAX_NF", "plenty")
    code, out, _ = run(capsys, "build", t1_path)
    assert code == 0
    assert "8 nodes" in out


# --- usage ---


def test_no_command_is_usage_error(capsys):
    assert run(capsys, )[0] == 1


def test_unknown_command_is_usage_error(capsys):
    assert run(capsys, "destroy")[0] == 1


def test_build_requires_context(capsys):
    code, _, err = run(capsys, "build")
    assert code == 1
    assert "usage:" in err


def test_inspect_target_is_exclusive(capsys, t1_path):
    code, _, _ = run(capsys, "inspect", t1_path, "--objects", "g1", "--query", "a")
    assert code == 1


def test_help_exits_cleanly(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "build", "--help")[0] == 0
