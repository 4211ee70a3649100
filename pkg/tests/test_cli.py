import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from glmy.cli import main

from conftest import EXAMPLE_1, EXAMPLE_2, corpus_texts


def schema(name):
    return json.loads(resources.files("glmy").joinpath("schemas", f"{name}.json").read_text())


@pytest.fixture
def graph_file(tmp_path):
    def write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_examples(capsys, graph_file):
    for text, betti in ((EXAMPLE_1, [1, 0, 0, 0]), (EXAMPLE_2, [1, 1, 0])):
        code, out, _ = run_cli(capsys, "analyze", "--input", graph_file(text))
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("analyze"))
        assert data["betti"] == betti


def test_analyze_text(capsys, graph_file):
    code, out, _ = run_cli(capsys, "analyze", "--input", graph_file(EXAMPLE_2), "--format", "text")
    assert code == 0
    assert "euler characteristic: 0" in out
    assert "1/3" in out


def test_analyze_emit_matrices(capsys, graph_file):
    code, out, _ = run_cli(capsys, "analyze", "--input", graph_file(EXAMPLE_2), "--emit-matrices")
    data = json.loads(out)
    jsonschema.validate(data, schema("analyze"))
    assert data["complex"]["degrees"][2]["laplacian"][0] == ["3", "1", "1", "0"]


def test_analyze_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(EXAMPLE_1))
    code, out, _ = run_cli(capsys, "analyze")
    assert code == 0 and json.loads(out)["betti"] == [1, 0, 0, 0]


def test_max_dim(capsys, graph_file):
    _, out, _ = run_cli(capsys, "analyze", "--input", graph_file(EXAMPLE_1), "--max-dim", "1")
    assert json.loads(out)["betti"] == [1, 0]


@pytest.mark.parametrize(
    "text, needle",
    [("", "empty graph"), ("a->b\nb->a", "cycle"), ("1->1", "self-edge"), ("a -> b -> c", "->")],
)
def test_input_errors(capsys, graph_file, text, needle):
    code, out, err = run_cli(capsys, "analyze", "--input", graph_file(text))
    assert code == 2 and out == ""
    assert needle in err


def test_missing_file(capsys):
    code, _, err = run_cli(capsys, "analyze", "--input", "/nonexistent/graph.txt")
    assert code == 2 and "cannot read" in err


def test_qsim_example_2(capsys, graph_file):
    code, out, _ = run_cli(capsys, "qsim", "--input", graph_file(EXAMPLE_2), "--degree", "1",
                           "--shots", "10000", "--seed", "7", "--verify")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("qsim"))
    assert data["betti_hat"] == 1
    assert data["verify"] == {"betti_exact": 1, "agree": True}


def test_qsim_example_1_degree_2(capsys, graph_file):
    code, out, _ = run_cli(capsys, "qsim", "--input", graph_file(EXAMPLE_1), "--degree", "2")
    assert code == 0 and json.loads(out)["betti_hat"] == 0


def test_qsim_text_and_phase_bits(capsys, graph_file):
    code, out, _ = run_cli(capsys, "qsim", "--input", graph_file(EXAMPLE_2), "--degree", "1",
                           "--phase-bits", "6", "--format", "text", "--verify")
    assert code == 0
    assert "betti_hat=1" in out and "agree" in out


def test_qsim_disagreement_exit_code(capsys, graph_file):
    # the literal projected total Laplacian sees no zero mode, so --verify fails
    code, out, _ = run_cli(capsys, "qsim", "--input", graph_file(EXAMPLE_2), "--degree", "1",
                           "--hamiltonian", "laplacian", "--verify")
    assert code == 1
    assert json.loads(out)["verify"]["agree"] is False


@pytest.mark.parametrize("argv", [["--degree", "3"], ["--degree", "-1"], ["--degree", "1", "--shots", "0"],
                                  ["--degree", "1", "--phase-bits", "zero"]])
def test_qsim_invalid_arguments(capsys, graph_file, argv):
    code, _, _ = run_cli(capsys, "qsim", "--input", graph_file(EXAMPLE_2), *argv)
    assert code == 2


def test_encode_golden(capsys):
    code, out, _ = run_cli(capsys, "encode", "--n", "6", "--d", "6", "--path", "024",
                           "--path", "320145", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "024  001 000 010 000 011 000  001000010000011000"
    assert lines[1] == "320145  011 100 010 001 101 110  011100010001101110"


def test_encode_json_from_graph(capsys, graph_file):
    code, out, _ = run_cli(capsys, "encode", "--input", graph_file(EXAMPLE_2))
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("encode"))
    assert len(data["paths"]) == 6 + 8 + 4


@pytest.mark.parametrize("path", ["00", "0123456", "7"])
def test_encode_rejects(capsys, path):
    code, _, err = run_cli(capsys, "encode", "--n", "6", "--d", "5", "--path", path)
    assert code == 2 and err


def test_oracle_check(capsys, graph_file):
    for text in (EXAMPLE_1, EXAMPLE_2):
        code, out, _ = run_cli(capsys, "oracle-check", "--input", graph_file(text))
        assert code == 0
        data = json.loads(out)
        jsonschema.validate(data, schema("oracle_check"))
        assert data["agree"] is True


def test_schemas_on_corpus(capsys, graph_file):
    for i, text in enumerate(corpus_texts()[:40]):
        f = graph_file(text, f"c{i}.txt")
        for cmd, name in (("analyze", "analyze"), ("oracle-check", "oracle_check"), ("encode", "encode")):
            code, out, _ = run_cli(capsys, cmd, "--input", f)
            assert code == 0
            jsonschema.validate(json.loads(out), schema(name))
        code, out, _ = run_cli(capsys, "qsim", "--input", f, "--degree", "0", "--shots", "200")
        assert code == 0
        jsonschema.validate(json.loads(out), schema("qsim"))


def test_byte_identical_subprocess(graph_file):
    f = graph_file(EXAMPLE_2)
    cmd = [sys.executable, "-m", "glmy", "qsim", "--input", f, "--degree", "1", "--seed", "123"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_usage_error_exit_code(capsys):
    assert main(["bogus"]) == 2
    capsys.readouterr()
