"""Command-line contract: exit codes, report determinism, payload shapes."""

import json
import types
from pathlib import Path

import pytest

import toroidal.cli as cli

FIXTURES = Path(__file__).parent / "fixtures"


def run_cli(argv, capsys):
    code = cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def analyze_args(root, fan, out):
    return [
        "analyze",
        "--root-datum",
        FIXTURES / root,
        "--fan",
        FIXTURES / fan,
        "--out",
        out,
    ]


@pytest.mark.parametrize(
    "root, fan, expected",
    [
        ("root_a1.json", "fan_a1.json", 0),
        ("root_a1a1.json", "fan_wedge.json", 0),
        ("root_a1a1.json", "fan_complete_pair.json", 0),
        ("root_a1a1.json", "fan_overlap.json", 2),
        ("root_a1a1.json", "fan_positive.json", 3),
    ],
)
def test_analyze_exit_codes(root, fan, expected, tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run_cli(analyze_args(root, fan, out), capsys)
    assert code == expected
    # diagnostics are still written when the fan is rejected
    assert out.exists()


def test_analyze_invalid_fan_report_has_violations(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run_cli(analyze_args("root_a1a1.json", "fan_overlap.json", out), capsys)
    assert code == 2
    report = json.loads(out.read_text())
    assert report["valid"] is False
    assert report["violations"]
    assert report["cones"] is None


def test_analyze_parse_error(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, err = run_cli(analyze_args("root_a1a1.json", "broken.json", out), capsys)
    assert code == 1
    assert err.startswith("error:")
    assert not out.exists()


def test_analyze_missing_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, err = run_cli(analyze_args("root_a1a1.json", "no_such_fan.json", out), capsys)
    assert code == 1
    assert err.startswith("error:")


def test_analyze_requires_out(capsys):
    argv = [
        "analyze",
        "--root-datum",
        str(FIXTURES / "root_a1a1.json"),
        "--fan",
        str(FIXTURES / "fan_wedge.json"),
    ]
    assert cli.main(argv) == 1
    capsys.readouterr()


def test_analyze_deterministic_bytes(tmp_path, capsys):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    run_cli(analyze_args("root_a1a1.json", "fan_wedge.json", first), capsys)
    run_cli(analyze_args("root_a1a1.json", "fan_wedge.json", second), capsys)
    assert first.read_bytes() == second.read_bytes()


def test_help_exits_zero(capsys):
    assert cli.main(["--help"]) == 0
    capsys.readouterr()


def test_no_arguments_is_usage_error(capsys):
    assert cli.main([]) == 1
    capsys.readouterr()


def test_verify_stdout_payload(capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "signs", "--rank", "1", "--cases", "2", "--seed", "0"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "signs"
    assert payload["rank"] == 1
    assert payload["seed"] == 0
    assert payload["all_pass"] is True
    assert payload["properties"]
    for prop in payload["properties"]:
        assert prop["passed"] is True
        assert prop["counterexample"] is None


def test_verify_deterministic_bytes(tmp_path, capsys):
    first = tmp_path / "first.json"
    second = tmp_path / "second.json"
    argv = ["verify", "--suite", "all", "--rank", "1", "--cases", "2", "--seed", "7"]
    run_cli(argv + ["--out", first], capsys)
    run_cli(argv + ["--out", second], capsys)
    assert first.read_bytes() == second.read_bytes()


def test_verify_unknown_suite(capsys):
    assert cli.main(["verify", "--suite", "mystery"]) == 1
    capsys.readouterr()


@pytest.mark.parametrize(
    "flag, value",
    [("--rank", "0"), ("--rank", "4"), ("--cases", "0")],
)
def test_verify_rejects_bad_bounds(flag, value, capsys):
    code, _, err = run_cli(["verify", "--suite", "signs", flag, value], capsys)
    assert code == 1
    assert err.startswith("error:")


def test_verify_failure_exits_four(monkeypatch, capsys):
    failing = types.SimpleNamespace(
        suite="signs",
        rank=1,
        seed=0,
        cases=2,
        all_pass=False,
        properties=[
            types.SimpleNamespace(
                name="signs_are_units",
                passed=False,
                cases=2,
                counterexample={"root": [1, 0]},
            )
        ],
    )
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: failing)
    code, out, _ = run_cli(["verify", "--suite", "signs"], capsys)
    assert code == 4
    payload = json.loads(out)
    assert payload["all_pass"] is False
    assert payload["properties"][0]["counterexample"] == {"root": [1, 0]}


def test_hilbert_saturation_example(capsys):
    code, out, _ = run_cli(["hilbert", "--rays", "[[1,0],[1,2]]"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 2
    assert payload["dual_generators"] == [[0, 1], [2, -1]]
    assert payload["hilbert_basis"] == [[0, 1], [1, 0], [2, -1]]


def test_hilbert_single_ray(capsys):
    code, out, _ = run_cli(["hilbert", "--rays", "[[-1]]"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["hilbert_basis"] == [[-1]]


def test_hilbert_zero_cone_lists_signed_basis(capsys):
    code, out, _ = run_cli(["hilbert", "--rays", "[]", "--dim", "2"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert sorted(payload["hilbert_basis"]) == [[-1, 0], [0, -1], [0, 1], [1, 0]]


def test_hilbert_empty_rays_need_dim(capsys):
    code, _, err = run_cli(["hilbert", "--rays", "[]"], capsys)
    assert code == 1
    assert "dim" in err


def test_hilbert_rays_from_file(tmp_path, capsys):
    rays = tmp_path / "rays.json"
    rays.write_text("[[1,0],[1,2]]")
    code, out, _ = run_cli(["hilbert", "--rays", rays], capsys)
    assert code == 0
    assert json.loads(out)["hilbert_basis"] == [[0, 1], [1, 0], [2, -1]]


def test_hilbert_out_file(tmp_path, capsys):
    dest = tmp_path / "basis.json"
    code, out, _ = run_cli(["hilbert", "--rays", "[[-1]]", "--out", dest], capsys)
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text())["hilbert_basis"] == [[-1]]


def test_hilbert_rejects_non_list(capsys):
    code, _, err = run_cli(["hilbert", "--rays", '{"rays": []}'], capsys)
    assert code == 1
    assert err.startswith("error:")
