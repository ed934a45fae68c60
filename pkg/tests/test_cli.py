import copy
import json

import pytest

from greyrank.cli import main

from test_problem_io import MINIMAL


@pytest.fixture()
def toy_file(tmp_path):
    path = tmp_path / "toy.json"
    path.write_text(json.dumps(MINIMAL), encoding="utf-8")
    return path


def run(capsysbinary, *argv):
    rc = main([str(a) for a in argv])
    captured = capsysbinary.readouterr()
    return rc, captured.out, captured.err


def test_solve_text_to_stdout(toy_file, capsysbinary):
    rc, out, err = run(capsysbinary, "solve", toy_file)
    assert rc == 0
    assert err == b""
    text = out.decode()
    assert "final ranking:" in text
    assert "ranking (topsis):" in text
    assert "ranking (max-entropy):" in text


def test_solve_formats(toy_file, capsysbinary):
    rc, out, _ = run(capsysbinary, "solve", toy_file, "--format", "csv")
    assert rc == 0
    assert b"plan,score,rank" in out
    rc, out, _ = run(capsysbinary, "solve", toy_file, "--format", "json-report")
    assert rc == 0
    data = json.loads(out)
    assert data["final_ranking"]
    assert data["problem"]["plans"] == ["P1", "P2"]


def test_output_bytes_deterministic(toy_file, capsysbinary):
    outputs = set()
    for _ in range(2):
        rc, out, _ = run(capsysbinary, "solve", toy_file, "--format", "json-report")
        assert rc == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_json_report_round_trips(toy_file, tmp_path, capsysbinary):
    rc, out, _ = run(capsysbinary, "solve", toy_file, "--format", "json-report")
    assert rc == 0
    first = json.loads(out)
    report_file = tmp_path / "report.json"
    report_file.write_bytes(out)
    # a json-report is accepted as input: its embedded problem is re-solved
    rc, out, _ = run(capsysbinary, "solve", report_file, "--format", "json-report")
    assert rc == 0
    second = json.loads(out)
    assert second["final_ranking"] == first["final_ranking"]
    assert second["borda"] == first["borda"]


def test_out_flag_writes_file(toy_file, tmp_path, capsysbinary):
    target = tmp_path / "report.txt"
    rc, out, _ = run(capsysbinary, "solve", toy_file, "--out", target)
    assert rc == 0
    assert out == b""
    assert b"final ranking:" in target.read_bytes()


def test_param_flags_override_file(toy_file, capsysbinary):
    rc, out, _ = run(
        capsysbinary, "solve", toy_file, "--format", "json-report",
        "--rho", "0.4", "--theta-plus", "0.8",
    )
    assert rc == 0
    params = json.loads(out)["params"]
    assert params["rho"] == 0.4
    assert params["theta_plus"] == 0.8
    assert params["theta_minus"] == pytest.approx(0.2)


def test_borda_weights_flag(toy_file, capsysbinary):
    rc, out, _ = run(
        capsysbinary, "solve", toy_file, "--format", "json-report",
        "--borda-weights", "0.4,0.3,0.2,0.1",
    )
    assert rc == 0
    assert json.loads(out)["params"]["borda_weights"] == [0.4, 0.3, 0.2, 0.1]
    rc, _, err = run(capsysbinary, "solve", toy_file, "--borda-weights", "0.5,0.5")
    assert rc == 2
    assert b"borda-weights" in err


def test_validation_errors_exit_2(tmp_path, capsysbinary):
    rc, _, err = run(capsysbinary, "solve", tmp_path / "absent.json")
    assert rc == 2
    assert b"error" in err

    bad = copy.deepcopy(MINIMAL)
    bad["matrix"][0][1] = {"interval": [9, 1]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad), encoding="utf-8")
    rc, _, err = run(capsysbinary, "solve", path)
    assert rc == 2
    assert b"'P1'" in err and b"'A2'" in err

    rc, _, err = run(capsysbinary, "solve", path.with_suffix(".json"), "--rho", "7")
    assert rc == 2


def test_degenerate_problem_exits_3(tmp_path, capsysbinary):
    data = copy.deepcopy(MINIMAL)
    # a benefit interval column of zeros: normalization cannot scale it
    data["matrix"][0][1] = {"interval": [0, 0]}
    data["matrix"][1][1] = {"interval": [0, 0]}
    data["attributes"][1]["direction"] = "benefit"
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    rc, _, err = run(capsysbinary, "solve", path)
    assert rc == 3
    assert b"degenerate" in err.lower()
    assert b"normalize" in err  # failing stage is named


def test_identical_plans_still_rank(tmp_path, capsysbinary):
    data = copy.deepcopy(MINIMAL)
    data["matrix"][1] = copy.deepcopy(data["matrix"][0])
    data["preferences"][1] = list(data["preferences"][0])
    path = tmp_path / "tied.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    rc, out, _ = run(capsysbinary, "solve", path, "--format", "json-report")
    assert rc == 0
    report = json.loads(out)
    # full tie: strict final ranking falls back to plan order, with a note
    assert report["final_ranking"] == ["P1", "P2"]
    assert any("uniform" in note for note in report["notes"])


def test_single_plan_gets_trivial_ranking(tmp_path, capsysbinary):
    data = copy.deepcopy(MINIMAL)
    data["plans"] = data["plans"][:1]
    data["matrix"] = data["matrix"][:1]
    data["preferences"] = data["preferences"][:1]
    path = tmp_path / "solo.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    rc, out, _ = run(capsysbinary, "solve", path, "--format", "json-report")
    assert rc == 0
    report = json.loads(out)
    assert report["final_ranking"] == ["P1"]
    assert all(ms["ranks"] == [1] for ms in report["methods"])


def test_missing_subcommand_is_usage_error(capsysbinary):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    captured = capsysbinary.readouterr()
    assert b"usage" in captured.err.lower()