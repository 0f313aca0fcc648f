"""End-to-end CLI behaviour: artifacts on stdout, logs on stderr, exit codes."""

import json

import pytest

from zdglab.cli import main

K2_DOT = 'graph "Gamma_{4}(Zn:8)" {\n  "2";\n  "6";\n  "2" -- "6";\n}\n'


def test_ring_text(capsys):
    assert main(["ring", "Zn:6"]) == 0
    out, err = capsys.readouterr()
    assert "order: 6" in out
    assert "zero-divisors: 4" in out
    assert "reduced: yes" in out
    assert "von Neumann regular: yes" in out
    assert err == ""


def test_ring_json(capsys):
    assert main(["ring", "Zn:4", "--format", "json"]) == 0
    out, _ = capsys.readouterr()
    info = json.loads(out)
    assert info["order"] == 4
    assert info["zero_divisor_count"] == 2
    assert info["reduced"] is False
    assert info["von_neumann_regular"] is False


def test_ring_polyq_field(capsys):
    assert main(["ring", "polyq:2:1,1,1", "--format", "json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["order"] == 4
    assert info["zero_divisor_count"] == 1
    assert info["reduced"] is True and info["von_neumann_regular"] is True


def test_ring_parse_error_exit_code(capsys):
    assert main(["ring", "Zn:1"]) == 2
    out, err = capsys.readouterr()
    assert out == ""
    assert "error:" in err and "offset" in err


def test_ideals_listing(capsys):
    assert main(["ideals", "Zn:8", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["ideal_count"] == 4
    gens = [tuple(row["generators"]) for row in obj["ideals"]]
    assert gens == [(0,), (4,), (2,), (1,)]
    radicals = [row["radical"] for row in obj["ideals"]]
    assert radicals == [False, False, True, True]
    primes = [row["prime"] for row in obj["ideals"]]
    assert primes == [False, False, True, False]


def test_ideals_text(capsys):
    assert main(["ideals", "Zn:12"]) == 0
    out, _ = capsys.readouterr()
    assert "6 ideals" in out


def test_ideals_cap_error(capsys):
    assert main(["ideals", "Zn:300"]) == 2
    assert "error:" in capsys.readouterr().err


def test_graph_dot_stdout_is_pure(capsys):
    assert main(["graph", "Zn:8", "--ideal", "4"]) == 0
    out, err = capsys.readouterr()
    assert out == K2_DOT
    assert err == ""


def test_graph_json(capsys):
    assert main(["graph", "Zn:12", "--ideal", "6", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["vertices"] == ["2", "3", "4", "8", "9", "10"]
    assert len(obj["edges"]) == 8


def test_graph_prime_ideal_is_empty(capsys):
    assert main(["graph", "Zn:6", "--ideal", "3", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj == {"vertices": [], "edges": []}


def test_graph_out_file_deterministic(tmp_path):
    f1, f2 = tmp_path / "a.dot", tmp_path / "b.dot"
    assert main(["graph", "Zn:8", "--ideal", "4", "--out", str(f1)]) == 0
    assert main(["graph", "Zn:8", "--ideal", "4", "--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes() == K2_DOT.encode()


def test_graph_improper_ideal(capsys):
    assert main(["graph", "Zn:6", "--ideal", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_check_case_one(capsys):
    assert main(["check", "Zn:8", "--ideal", "4"]) == 0
    out, _ = capsys.readouterr()
    assert "complemented: yes" in out
    assert "uniquely complemented: yes" in out
    assert "graph complete: K^2" in out
    assert "classification case: 1" in out


def test_check_case_two(capsys):
    assert main(["check", "Zn:12", "--ideal", "6", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["classification_case"] == "2"
    assert obj["gi_complemented"] is True
    assert obj["ideal_generators"] == [6]


def test_check_k4_not_complemented(capsys):
    assert main(["check", "Zn:16", "--ideal", "4"]) == 0
    out, _ = capsys.readouterr()
    assert "complemented: no" in out
    assert "graph complete: K^4" in out
    assert "classification case: none" in out


def test_check_prime_ideal_case_na(capsys):
    assert main(["check", "Zn:12", "--ideal", "3", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["classification_case"] == "n/a"
    assert obj["ideal_is_prime"] is True


def test_verify_single_pair_catalogue(tmp_path, capsys):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn:8 [4]\n")
    out_path = tmp_path / "report.json"
    code = main(["verify", "--catalogue", str(cat), "--seedless", "--quiet", "--out", str(out_path)])
    out, err = capsys.readouterr()
    assert code == 0
    assert out == ""
    assert "1 pairs, 0 failures" in err
    report = json.loads(out_path.read_text())
    assert report["failures_total"] == 0
    assert len(report["verdicts"]) == 1
    assert report["verdicts"][0]["ring_spec"] == "Zn:8"


def test_verify_fault_injection_exit_code(tmp_path, capsys):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn:8 [4]\n")
    out_path = tmp_path / "report.json"
    code = main(
        ["verify", "--catalogue", str(cat), "--seedless", "--quiet", "--inject-fault", "--out", str(out_path)]
    )
    capsys.readouterr()
    assert code == 1
    report = json.loads(out_path.read_text())
    assert report["failures_total"] > 0


def test_verify_text_summary(tmp_path, capsys):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn:12\n")
    code = main(["verify", "--catalogue", str(cat), "--seedless", "--quiet", "--format", "text"])
    out, err = capsys.readouterr()
    assert code == 0
    assert "failures total: 0" in out
    assert "cardinality_identity" in out


def test_verify_unreadable_catalogue(tmp_path, capsys):
    assert main(["verify", "--catalogue", str(tmp_path / "missing.txt"), "--quiet"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_bad_catalogue_line(tmp_path, capsys):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn:8\nbogus:3\n")
    assert main(["verify", "--catalogue", str(cat), "--quiet"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_verify_progress_goes_to_stderr(tmp_path, capsys):
    cat = tmp_path / "cat.txt"
    cat.write_text("Zn:8\nZn:12\n")
    code = main(["verify", "--catalogue", str(cat), "--seedless", "--out", str(tmp_path / "r.json")])
    out, err = capsys.readouterr()
    assert code == 0
    assert out == ""
    assert "[1/2] Zn:8" in err and "[2/2] Zn:12" in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "zdglab" in capsys.readouterr().out
