import json
import math
import subprocess
import sys

import pytest

from lusym.cli import main
from lusym.serialize import dump_group, dump_state
from lusym import PureState, Support, fixture_state, solve_symmetry_group


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_json_schema(capsys, schema_validator):
    code, out, err = run_cli(capsys, "analyze", "--fixture", "bell", "--json")
    assert code == 0
    schema_validator("report.schema.json", json.loads(out))


def test_analyze_text_mode(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--fixture", "ghz3")
    assert code == 0
    assert "torus rank 2" in out
    assert "semistable: True" in out


def test_circuits_json_schema(capsys, schema_validator):
    code, out, _ = run_cli(
        capsys, "circuits", "--support", "1111,1000,0100,0010,0001", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    schema_validator("circuits.schema.json", payload)
    assert payload["circuits"][0]["relation"] == [1, 1, 1, 1, 2]


def test_invariants_json_schema(capsys, schema_validator):
    code, out, _ = run_cli(capsys, "invariants", "--fixture", "ghz4", "--json")
    assert code == 0
    payload = json.loads(out)
    schema_validator("invariants.schema.json", payload)
    assert payload["flip_masks"] == ["0000", "1111"]
    assert payload["circuit_monomials"][0]["flip_sum"]["admitted"] is True


def test_invariants_reports_rejection(capsys, schema_validator):
    code, out, _ = run_cli(capsys, "invariants", "--fixture", "ghz3", "--json")
    assert code == 0
    payload = json.loads(out)
    schema_validator("invariants.schema.json", payload)
    block = payload["circuit_monomials"][0]["flip_sum"]
    assert block["admitted"] is False
    assert block["rejection"]["mask"] == "111"


def test_normalizer_json_schema(capsys, schema_validator):
    code, out, _ = run_cli(capsys, "normalizer", "--support", "0000,1111", "--json")
    assert code == 0
    payload = json.loads(out)
    schema_validator("normalizer.schema.json", payload)
    assert payload["flips"]["masks"] == ["0000", "1111"]


def test_verify_from_support(capsys, schema_validator):
    code, out, _ = run_cli(
        capsys, "verify", "--fixture", "w5", "--from-support", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    schema_validator("verify.schema.json", payload)
    assert payload["passed"] is True


def test_verify_group_file_failure(capsys, tmp_path):
    group = solve_symmetry_group(Support.from_labels(["00", "11"]))
    group_file = tmp_path / "group.json"
    group_file.write_text(dump_group(group))
    eps = 1e-3
    norm = math.sqrt(1 + eps**2)
    psi = PureState.from_amplitudes(
        {
            "00": 1 / math.sqrt(2) / norm,
            "11": 1 / math.sqrt(2) / norm,
            "01": eps / norm,
        }
    )
    state_file = tmp_path / "state.json"
    state_file.write_text(dump_state(psi))
    code, out, err = run_cli(
        capsys,
        "verify",
        "--input", str(state_file),
        "--group", str(group_file),
        "--tolerance", "1e-6",
    )
    assert code == 2
    assert "exceeds tolerance" in err


def test_verify_needs_a_group_source(capsys):
    code, _, err = run_cli(capsys, "verify", "--fixture", "bell")
    assert code == 2
    assert "from-support" in err


def test_compare_json(capsys, schema_validator):
    code, out, _ = run_cli(
        capsys, "compare", "--support-a", "0000,1111", "--support-b",
        ",".join(format(x, "04b") for x in range(16)), "--json",
    )
    assert code == 0
    payload = json.loads(out)
    schema_validator("compare.schema.json", payload)
    assert payload["verdict"] == "b_closure_contains_a"


def test_analyze_accepts_state_file(capsys, tmp_path):
    psi = fixture_state("cluster4b")
    state_file = tmp_path / "state.json"
    state_file.write_text(dump_state(psi))
    code, out, _ = run_cli(capsys, "analyze", "--input", str(state_file), "--json")
    assert code == 0
    assert json.loads(out)["input"]["n"] == 4


def test_malformed_state_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    code, _, err = run_cli(capsys, "analyze", "--input", str(bad), "--json")
    assert code == 2
    assert "error:" in err
    code, _, err = run_cli(capsys, "analyze", "--input", str(tmp_path / "nope.json"))
    assert code == 2


def test_unknown_fixture(capsys):
    code, _, err = run_cli(capsys, "analyze", "--fixture", "nope")
    assert code == 2
    assert "bell" in err  # the message lists what is available


def test_unnormalized_state_rejected(capsys, tmp_path):
    state_file = tmp_path / "state.json"
    state_file.write_text('{"amplitudes": {"00": [1.0, 0.0], "11": [1.0, 0.0]}, "n": 2}\n')
    code, _, err = run_cli(capsys, "analyze", "--input", str(state_file))
    assert code == 2
    assert "norm" in err


def test_json_output_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "analyze", "--fixture", "xstate", "--json")
    _, out2, _ = run_cli(capsys, "analyze", "--fixture", "xstate", "--json")
    assert out1 == out2


def test_entry_point_subprocess(capsys):
    result = subprocess.run(
        [sys.executable, "-m", "lusym.cli", "analyze", "--fixture", "bell", "--json"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert result.returncode == 0
    _, inproc, _ = run_cli(capsys, "analyze", "--fixture", "bell", "--json")
    assert result.stdout == inproc
