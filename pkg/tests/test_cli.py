import json

import pytest

from simagg.cli import build_parser, main
from simagg.complex import SimplicialComplex, boundary_complex, full_simplex
from simagg.serialize import read_complex, read_trace, write_complex, write_table
from simagg.leadership import ProbabilityTable


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parser_global_flags():
    args = build_parser().parse_args(["gen", "-n", "3", "-N", "2", "-p", "1/2", "--seed", "4", "--format", "tsv"])
    assert (args.command, args.seed, args.format) == ("gen", 4, "tsv")
    assert str(args.p) == "1/2"


def test_enumerate_example_two(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "-n", "3", "-N", "2", "-p", "1/2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["index", "f_vector", "maximal_simplexes", "probability"]
    probs = [line.split("\t")[-1] for line in lines[1:]]
    assert len(probs) == 9
    assert probs.count("1/8") == 7 and probs.count("1/16") == 2


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "-n", "3", "-N", "2", "-p", "1/2")
    doc = json.loads(out)
    assert code == 0 and doc["total"] == "1" and len(doc["realizations"]) == 9


def test_enumerate_cap_exit_code(capsys):
    code, _, err = run_cli(capsys, "enumerate", "-n", "9", "-N", "2", "-p", "1/2")
    assert code == 2
    assert "binary choices" in err


def test_betti_hollow_triangle(capsys, write):
    path = write("hollow.json", write_complex(boundary_complex((0, 1, 2))))
    assert run_cli(capsys, "betti", path) == (0, "1 1\n", "")
    assert run_cli(capsys, "betti", path, "--dims", "3")[1] == "1 1 0\n"
    code, out, _ = run_cli(capsys, "betti", path, "--integer", "--format", "json")
    assert json.loads(out) == {"betti": [1, 1], "torsion": [[], []]}


def test_gen_p_zero_any_seed(capsys):
    for seed in ("7", "8"):
        code, out, _ = run_cli(capsys, "gen", "-n", "3", "-N", "2", "-p", "0", "--seed", seed)
        assert code == 0
        assert read_complex(out) == SimplicialComplex.from_vertices(range(3))


def test_gen_default_seed_is_reported(capsys):
    code, _, err = run_cli(capsys, "gen", "-n", "3", "-N", "2", "-p", "1/2")
    assert code == 0 and "seed: 0" in err


def test_unknown_subcommand_and_flag(capsys):
    code, _, err = run_cli(capsys, "frobnicate")
    assert code == 1 and "usage" in err
    code, _, err = run_cli(capsys, "gen", "-n", "3", "-N", "2", "-p", "1", "--bogus")
    assert code == 1 and "usage" in err


def test_bad_probability_is_validation_error(capsys):
    assert run_cli(capsys, "gen", "-n", "3", "-N", "2", "-p", "3/2")[0] == 1


def test_bad_document_is_validation_error(capsys, write):
    path = write("bad.json", '{"vertices":[1,0],"maximal_simplexes":[]}')
    code, _, err = run_cli(capsys, "betti", path)
    assert code == 1 and "$.vertices[1]" in err


def test_census_and_qcomp(capsys, write):
    path = write("segs.json", write_complex(SimplicialComplex([(0, 1), (2, 3)])))
    doc = json.loads(run_cli(capsys, "census", path)[1])
    assert [(r["vertex_count"], r["max_dim"]) for r in doc] == [(2, 1), (2, 1)]
    doc = json.loads(run_cli(capsys, "qcomp", path, "-q", "1")[1])
    assert doc["classes"] == [[[0, 1]], [[2, 3]]]


def test_diffuse(capsys, write):
    path = write("path.json", write_complex(SimplicialComplex([(0, 1), (1, 2)])))
    doc = json.loads(run_cli(capsys, "diffuse", path, "--source", "0", "--target", "2")[1])
    assert doc == {"source": 0, "target": 2, "hop_count": 2, "rounds": [1, 1, 1]}
    doc = json.loads(run_cli(capsys, "diffuse", path, "--entries", "0,2")[1])
    assert doc["hops"] == [[0, 2], [2, 0]]
    assert run_cli(capsys, "diffuse", path, "--source", "0", "--target", "9")[0] == 1


def test_hubs(capsys, write):
    table = ProbabilityTable.from_function(range(4), 1, lambda s: 0.9 if 0 in s else 0.1)
    path = write("table.json", write_table(table))
    doc = json.loads(run_cli(capsys, "hubs", "--table", path, "-k", "1")[1])
    assert doc["profile"][0] == {"vertex": 0, "max_order": 99}
    doc = json.loads(run_cli(capsys, "hubs", "--table", path, "-k", "1", "-t", "99")[1])
    assert [r["is_hub"] for r in doc["vertices"]] == [True, False, False, False]


def test_gen_hier(capsys, write):
    table = ProbabilityTable({(0, 1): 1.0}, default_p=0.0, max_dim=2)
    path = write("t.json", write_table(table))
    code, out, _ = run_cli(capsys, "gen-hier", "-n", "3", "--table", path, "--seed", "1")
    assert code == 0 and read_complex(out) == SimplicialComplex([(0, 1), (2,)])


def test_evolve_and_plot_data(capsys, write, tmp_path):
    out_path = tmp_path / "trace.json"
    code, _, _ = run_cli(capsys, "evolve", "-N", "2", "--horizon", "3", "--n0", "4", "--n-new", "1",
                         "--p-add", "0.5,0.3", "--p-del", "0.1", "--seed", "3", "--out", str(out_path))
    assert code == 0
    trace = read_trace(out_path.read_text())
    assert len(trace.states) == 4
    code, out, _ = run_cli(capsys, "emit-plot-data", "trace", str(out_path))
    rows = out.splitlines()
    assert rows[0].startswith("t\tf0") and len(rows) == 5
    assert [int(r.split("\t")[1]) for r in rows[1:]] == [4, 5, 6, 7]


def test_plot_rounds(capsys, write):
    path = write("star.json", write_complex(SimplicialComplex([(0, 1), (0, 2), (2, 3)])))
    code, out, _ = run_cli(capsys, "emit-plot-data", "rounds", path, "--source", "1")
    assert out == "round\tnew\tcumulative\n0\t1\t1\n1\t1\t2\n2\t1\t3\n3\t1\t4\n"


def test_manifest_and_replay(capsys, tmp_path):
    out_path = tmp_path / "g.json"
    assert run_cli(capsys, "gen", "-n", "6", "-N", "3", "-p", "0.6", "--seed", "5", "--out", str(out_path))[0] == 0
    manifest = json.loads((tmp_path / "g.json.manifest.json").read_text())
    assert manifest["seed"] == 5 and manifest["command"] == "gen"
    assert "g.json" in manifest["checksums"]
    code, out, _ = run_cli(capsys, "replay", str(tmp_path / "g.json.manifest.json"))
    assert code == 0 and out == "ok\n"
