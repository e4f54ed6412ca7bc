import json


from heq.cli import main, parse_matrix
from heq.psl2 import ProjMat2

H1 = "[[2,-1],[-1,1]]"
H2 = "[[2,-5],[1,-2]]"
G43 = "[[5,3],[3,2]]"
G44 = "[[1,0],[-2,1]]"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_matrix_forms():
    assert parse_matrix("[[2, 1], [1, 1]]") == ProjMat2(2, 1, 1, 1)
    assert parse_matrix('{"m": [[2,1],[1,1]]}') == ProjMat2(2, 1, 1, 1)


def test_decompose_outputs(capsys):
    code, out, _ = run(capsys, "decompose", G43)
    assert code == 0 and out.strip() == "b a b^2 a b a b^2 a | pi=(0,0)"
    code, out, _ = run(capsys, "decompose", "[[1,0],[0,1]]")
    assert code == 0 and out.strip() == "(empty) | pi=(0,0)"
    code, out, _ = run(capsys, "decompose", H2)
    assert code == 0 and out.strip() == "b a b a b^2 a b^2 | pi=(1,0)"


def test_analyze_transcendental(capsys):
    code, out, _ = run(capsys, "analyze", H1, H2, G43)
    assert code == 0
    assert "VERDICT: TRANSCENDENTAL" in out
    assert "0 relator(s)" in out


def test_analyze_algebraic_with_matrices(capsys):
    code, out, _ = run(capsys, "analyze", H1, H2, G44, "--show-matrices")
    assert code == 0
    assert "VERDICT: ALGEBRAIC" in out
    assert out.count("= I") == 10
    assert "10 relator(s)" in out


def test_analyze_json_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", H1, H2, G44, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdict"] == "algebraic"
    assert data["index"] == 6
    path = tmp_path / "report.json"
    path.write_text(out)
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "FAIL" not in out


def test_verify_failure_exit_code(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", H1, H2, G44, "--json")
    data = json.loads(out)
    data["verdict"] = "transcendental"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "FAIL" in out


def test_input_errors_exit_two(capsys):
    code, _, err = run(capsys, "analyze", "[[1,2],[3,4]]")
    assert code == 2 and "determinant" in err
    code, _, err = run(capsys, "analyze", "not-a-matrix")
    assert code == 2
    code, _, err = run(capsys, "decompose", "[[1,1],[1,1]]")
    assert code == 2
    code, _, err = run(capsys, "verify", "/nonexistent/report.json")
    assert code == 2


def test_index_cap_error_exit_two(capsys):
    code, _, err = run(capsys, "analyze", H1, H2, G44, "--index-cap", "2")
    assert code == 2 and "cosets" in err


def test_oracle_command(capsys):
    code, out, err = run(capsys, "oracle", H1, H2, G43, "--max-len", "6")
    assert code == 0
    assert out.strip() == ""
    assert "0 witness(es)" in err
    code, out, err = run(capsys, "oracle", "[[2,1],[1,1]]", "[[2,1],[1,1]]",
                         "--max-len", "2")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert {"word": "h1^-1 x", "length": 2} in lines


def test_schreier_command(capsys):
    code, out, _ = run(capsys, "schreier", H1, H2, G44)
    assert code == 0
    assert len(out.strip().splitlines()) == 6
    code, out, _ = run(capsys, "schreier", H1, H2, G44, "--dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "style=bold" in out
