import json
import subprocess
import sys

import pytest

from sesnet.cli import main
from sesnet.complex import from_text
from sesnet.errors import ExitCode

MINIMAL = "[vertices]\ns1 social\ne1 ecological\n[interactions]\ns1\ne1\ns1 e1\n"

SAIGATA = """\
# five participants of the forest-rules assembly
[vertices]
v_i social
v_j social
v_k social
v_l social
v_m social
[interactions]
v_i v_j v_k v_l v_m
[constants]
rules are binding on all members
"""

TRIANGLE = "dim=2 vertices=3\nv_i\nv_i v_j\nv_i v_j v_k\nv_i v_k\nv_j\nv_j v_k\nv_k\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p

    return _write


@pytest.fixture(scope="module")
def evolved(tmp_path_factory):
    out = tmp_path_factory.mktemp("evolve")
    assert main(["evolve", "5", "4", "--out", str(out)]) == 0
    return out


# -- build -----------------------------------------------------------------------


def test_build_minimal(capsys, write, tmp_path):
    doc = write("minimal.ses", MINIMAL)
    code, out, _ = run(capsys, "build", doc, "--out", tmp_path / "o")
    assert code == ExitCode.OK
    cx = from_text((tmp_path / "o" / "minimal.complex").read_text())
    assert len(cx) == 3
    assert "subset dependency: holds" in out


def test_build_strict_flags_dependency_failure(capsys, write, tmp_path):
    doc = write("edge.ses", "[vertices]\ns1 social\ne1 ecological\n[interactions]\ns1 e1\n")
    code, out, _ = run(capsys, "build", doc, "--out", tmp_path)
    assert code == ExitCode.VALIDATION
    assert "missing {s1}" in out
    assert len(from_text((tmp_path / "edge.complex").read_text())) == 3


def test_build_duplicate_vertex_line_numbered(capsys, write, tmp_path):
    doc = write("dup.ses", "[vertices]\na social\nb ecological\na social\n")
    code, _, err = run(capsys, "build", doc, "--out", tmp_path)
    assert code == ExitCode.DUPLICATE_VERTEX
    assert "line 4" in err


def test_build_saigata_needs_single_kind(capsys, write, tmp_path):
    doc = write("saigata.ses", SAIGATA)
    code, _, _ = run(capsys, "build", doc, "--out", tmp_path)
    assert code == ExitCode.EMPTY_UNIVERSE
    code, out, _ = run(capsys, "build", doc, "--allow-single-kind", "--out", tmp_path)
    assert code == ExitCode.OK
    cx = from_text((tmp_path / "saigata.complex").read_text())
    assert len(cx) == 31 and cx.dimension == 4
    assert "higher-order 1" in out


def test_build_size_guard(capsys, write, tmp_path):
    doc = write("big.ses", SAIGATA)
    code, _, err = run(capsys, "build", doc, "--allow-single-kind", "--simplex-cap", "4", "--out", tmp_path)
    assert code == ExitCode.SIZE_GUARD
    assert "cap of 4" in err


def test_build_includes_isolated_vertices(capsys, write, tmp_path):
    doc = write("iso.ses", "[vertices]\na social\nb social\nc ecological\n[interactions]\na b\n")
    run(capsys, "build", doc, "--out", tmp_path)
    cx = from_text((tmp_path / "iso.complex").read_text())
    assert cx.universe.ids == ("a", "b", "c") and len(cx) == 4


# -- query ------------------------------------------------------------------------


def test_query_fvector_and_dimension(capsys, evolved, write):
    assert run(capsys, "query", evolved / "step_4.complex", "fvector")[1] == "5 10 10 5 1\n"
    tri = write("tri.complex", TRIANGLE)
    assert run(capsys, "query", tri, "dimension")[1] == "2\n"


def test_query_skeleton_then_fvector(capsys, evolved, write):
    code, out, _ = run(capsys, "query", evolved / "step_4.complex", "skeleton", "1")
    assert code == 0
    sk = write("sk.complex", out)
    assert run(capsys, "query", sk, "fvector")[1] == "5 10\n"


def test_query_set_valued(capsys, write):
    tri = write("tri.complex", TRIANGLE)
    assert run(capsys, "query", tri, "facets")[1].splitlines()[1:] == ["v_i v_j", "v_i v_k", "v_j v_k"]
    assert run(capsys, "query", tri, "maximal")[1].splitlines()[1:] == ["v_i v_j v_k"]
    assert len(run(capsys, "query", tri, "boundary")[1].splitlines()[1:]) == 6


def test_query_facets_on_vertex_complex(capsys, write):
    pt = write("pt.complex", "dim=0 vertices=1\na\n")
    code, out, _ = run(capsys, "query", pt, "facets")
    assert code == 0 and out.splitlines()[1:] == []


def test_query_parse_error(capsys, write):
    bad = write("bad.complex", "dim=1 vertices=2\na\na b\n")
    code, _, err = run(capsys, "query", bad, "fvector")
    assert code == ExitCode.PARSE and "line 3" in err


def test_query_unknown_is_usage(write):
    tri = write("tri.complex", TRIANGLE)
    with pytest.raises(SystemExit) as info:
        main(["query", str(tri), "homology"])
    assert info.value.code == ExitCode.USAGE


def test_query_skeleton_requires_order(capsys, write):
    tri = write("tri.complex", TRIANGLE)
    assert run(capsys, "query", tri, "skeleton")[0] == ExitCode.USAGE
    assert run(capsys, "query", tri, "fvector", "3")[0] == ExitCode.USAGE


def test_build_then_query_round_trip(capsys, write, tmp_path):
    doc = write("saigata.ses", SAIGATA)
    run(capsys, "build", doc, "--allow-single-kind", "--out", tmp_path)
    path = tmp_path / "saigata.complex"
    text = path.read_text()
    code, out, _ = run(capsys, "query", path, "skeleton", "99")
    assert code == 0 and out == text


# -- evolve --------------------------------------------------------------------------


def test_evolve_ledger_and_manifest(evolved):
    rows = json.loads((evolved / "ledger.json").read_text())["rows"]
    assert [r["output_count"] for r in rows] == [10, 10, 5, 1]
    assert [r["order_class"] for r in rows] == ["lower", "higher", "higher", "higher"]
    manifest = json.loads((evolved / "manifest.json").read_text())
    assert manifest["time_index"] == [1, 2, 3, 4] and manifest["static"] is False
    assert (evolved / "ledger.csv").read_text().startswith("step,input_count")
    for a in range(1, 5):
        assert (evolved / manifest["complexes"][str(a)]).exists()


def test_evolve_single_step_is_static(capsys, tmp_path):
    code, out, _ = run(capsys, "evolve", 5, 1, "--out", tmp_path)
    assert code == 0 and "network: static" in out
    assert json.loads((tmp_path / "manifest.json").read_text())["static"] is True


@pytest.mark.parametrize("n, step", [(5, 0), (5, 5), (1, 1)])
def test_evolve_range_errors(capsys, tmp_path, n, step):
    assert run(capsys, "evolve", n, step, "--out", tmp_path)[0] == ExitCode.RANGE


def test_evolve_n3_matches_build(capsys, write, tmp_path):
    run(capsys, "evolve", 3, 2, "--out", tmp_path / "ev")
    doc = write("v.ses", "[vertices]\nv0 social\nv1 social\nv2 social\n[interactions]\nv0 v1\nv0 v2\nv1 v2\nv0 v1 v2\n")
    run(capsys, "build", doc, "--allow-single-kind", "--out", tmp_path / "b")
    assert (tmp_path / "ev" / "step_2.complex").read_bytes() == (tmp_path / "b" / "v.complex").read_bytes()


def test_evolve_custom_names(capsys, tmp_path):
    code, _, _ = run(capsys, "evolve", 3, 2, "--names", "ann,bo,cy", "--out", tmp_path)
    assert code == 0
    assert from_text((tmp_path / "step_2.complex").read_text()).universe.ids == ("ann", "bo", "cy")
    assert run(capsys, "evolve", 3, 2, "--names", "ann,bo", "--out", tmp_path)[0] == ExitCode.ERROR


# -- compare ---------------------------------------------------------------------------


def test_compare_step1_step4(capsys, evolved):
    code, out, _ = run(capsys, "compare", evolved / "step_1.complex", evolved / "step_4.complex", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["graphs_identical"] and doc["skeleton_collision"]
    assert doc["witness_dimension"] == 4
    assert doc["loss_b"]["lost_by_dimension"] == {"2": 10, "3": 5, "4": 1}


def test_compare_self(capsys, evolved):
    code, out, _ = run(capsys, "compare", evolved / "step_4.complex", evolved / "step_4.complex")
    assert code == 0 and "skeleton collision: false" in out and "witness: none" in out


def test_compare_dim1_vs_own_skeleton(capsys, evolved, write):
    _, sk, _ = run(capsys, "query", evolved / "step_1.complex", "skeleton", "1")
    path = write("sk.complex", sk)
    _, out, _ = run(capsys, "compare", evolved / "step_1.complex", path, "--json")
    doc = json.loads(out)
    assert doc["graphs_identical"] and not doc["skeleton_collision"]
    assert doc["loss_a"]["simplices_lost"] == 0


def test_compare_universe_mismatch(capsys, evolved, write):
    tri = write("tri.complex", TRIANGLE)
    assert run(capsys, "compare", tri, evolved / "step_1.complex")[0] == ExitCode.UNIVERSE_MISMATCH


# -- demo and config ---------------------------------------------------------------------


def test_demo_saigata(capsys, tmp_path):
    code, out, _ = run(capsys, "demo-saigata", "--out", tmp_path)
    assert code == 0
    final = from_text((tmp_path / "step_4.complex").read_text())
    assert len(final) == 31 and final.dimension == 4
    tgf = (tmp_path / "step_1.tgf").read_text().split("#\n")
    assert len(tgf[1].splitlines()) == 10
    assert json.loads((tmp_path / "compare_step1_step4.json").read_text())["skeleton_collision"]
    assert "f-vector=5 10 10 5 1" in out


def test_demo_is_deterministic(tmp_path):
    for d in ("a", "b"):
        assert main(["demo-saigata", "--out", str(tmp_path / d)]) == 0
    for f in sorted((tmp_path / "a").iterdir()):
        assert f.read_bytes() == (tmp_path / "b" / f.name).read_bytes()


def test_config_file_and_flag_precedence(capsys, write, tmp_path):
    cfg = write("cfg.json", json.dumps({"strict_kinds": False, "simplex_cap": 4, "output_dir": str(tmp_path / "c")}))
    doc = write("s.ses", SAIGATA)
    assert run(capsys, "build", doc, "--config", cfg)[0] == ExitCode.SIZE_GUARD
    assert run(capsys, "build", doc, "--config", cfg, "--simplex-cap", "5")[0] == 0
    assert (tmp_path / "c" / "s.complex").exists()
    assert run(capsys, "build", doc, "--config", cfg, "--simplex-cap", "5", "--strict-kinds")[0] == ExitCode.EMPTY_UNIVERSE


@pytest.mark.parametrize("bad", [{"simplex_cap": 1}, {"witness_limit": 0}, {"colour": "red"}])
def test_config_validation(capsys, write, bad):
    cfg = write("cfg.json", json.dumps(bad))
    assert run(capsys, "demo-saigata", "--config", cfg)[0] == ExitCode.USAGE


def test_help_documents_exit_codes(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for code in ExitCode:
        assert code.name.lower().replace("_", "-") in out


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "sesnet", "evolve", "5", "4", "--out", str(tmp_path)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0, proc.stderr
    assert "1\t5 0-simplices" in proc.stdout
