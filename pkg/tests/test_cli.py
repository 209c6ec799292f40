import json
import os

import pytest

from hopfbax import ParametricMatrix, spin_half, uqsl2_r_matrix
from hopfbax.cli import main
from hopfbax.regressions import reference_spin_half, reference_taft_9x9


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# matrix emission
# ---------------------------------------------------------------------------

def test_uqsl2_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "uqsl2", "--spin", "1/2", "--parametric",
                           "--format", "json")
    assert code == 0
    m = ParametricMatrix.from_json(out)
    assert m == uqsl2_r_matrix(spin_half(), parametric=True)
    assert m == reference_spin_half()


def test_uqsl2_verify_reports_to_stderr(capsys):
    code, out, err = run_cli(capsys, "uqsl2", "--spin", "1", "--parametric",
                             "--verify", "--format", "json")
    assert code == 0
    ParametricMatrix.from_json(out)       # stdout stays pure JSON
    report = json.loads(err)
    assert report["passed"] is True and report["kind"] == "parametric"


def test_uqsl2_latex_output(capsys):
    code, out, _ = run_cli(capsys, "uqsl2", "--spin", "1/2",
                           "--format", "latex")
    assert code == 0
    assert "&" in out and "\\\\" in out


def test_taft_rep_matches_reference(capsys):
    code, out, err = run_cli(capsys, "taft", "--N", "4", "--rep", "3,1",
                             "--parametric", "--verify", "--format", "json")
    assert code == 0
    assert ParametricMatrix.from_json(out) == reference_taft_9x9(1)
    assert "PASS" not in out    # reports go to stderr only


def test_taft_hopf_report_mode(capsys):
    code, _, err = run_cli(capsys, "taft", "--N", "3")
    assert code == 0
    assert "Hopf axioms" in err
    assert "FAIL" not in err
    assert "homogeneity" in err


def test_taft_explicit_q(capsys):
    code, out, _ = run_cli(capsys, "taft", "--N", "3", "--q", "q^2",
                           "--rep", "2,1", "--format", "json")
    assert code == 0
    ParametricMatrix.from_json(out)


def test_taft_indecomposable(capsys):
    code, out, err = run_cli(capsys, "taft", "--N", "3", "--indecomposable",
                             "q", "--l", "1", "--parametric", "--verify",
                             "--format", "json")
    assert code == 0
    m = ParametricMatrix.from_json(out)
    assert m.dim == 9 and m.uses_parameters()


def test_double_checks(capsys):
    code, _, err = run_cli(capsys, "double", "--N", "2", "--parametric")
    assert code == 0
    assert err.count("PASS") == 2


def test_double_rejected_convention_fails(capsys):
    code, _, err = run_cli(capsys, "double", "--N", "2",
                           "--convention", "left_s")
    assert code == 1
    assert "FAIL" in err


def test_baxterize_flat_and_lifted(capsys):
    code, out, _ = run_cli(capsys, "baxterize", "--N", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == ["0", "1"]
    assert "mu" in payload["terms"]

    code, out, _ = run_cli(capsys, "baxterize", "--N", "2", "--zn",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == ["(0, 0)", "(1, 0)"]
    assert "mu" in payload["terms"]


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------

def test_verify_good_matrix(tmp_path, capsys):
    path = tmp_path / "r.json"
    path.write_text(uqsl2_r_matrix(spin_half()).to_json())
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 0
    assert "PASS" in err


def test_verify_corrupted_matrix(tmp_path, capsys):
    m = uqsl2_r_matrix(spin_half())
    m.set(1, 2, m.get(1, 2) * 2)
    path = tmp_path / "bad.json"
    path.write_text(m.to_json())
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 1
    assert "FAIL" in err and "residual" in err


def test_verify_braid_kind(tmp_path, capsys):
    path = tmp_path / "const.json"
    path.write_text(uqsl2_r_matrix(spin_half(), parametric=False).to_json())
    code, _, err = run_cli(capsys, "verify", "--input", str(path),
                           "--kind", "braid")
    assert code == 0
    assert "braid" in err


def test_verify_missing_file(tmp_path, capsys):
    code, _, err = run_cli(capsys, "verify", "--input",
                           str(tmp_path / "nope.json"))
    assert code == 2
    assert "error" in err


def test_verify_malformed_json(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text('{"dim": 4, "domain": "sqrt_q"}')
    code, _, err = run_cli(capsys, "verify", "--input", str(path))
    assert code == 2


# ---------------------------------------------------------------------------
# exit codes and argument validation
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ("uqsl2", "--spin", "2"),
    ("taft", "--N", "1"),
    ("taft", "--N", "4", "--rep", "3"),
    ("taft", "--N", "4", "--rep", "9,9"),
    ("taft", "--N", "4", "--rep", "3,1", "--indecomposable", "1", "--l", "1"),
    ("taft", "--N", "3", "--indecomposable", "q"),
    ("taft", "--N", "4", "--q", "q^2"),       # not a primitive root
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert "error" in err.lower()


def test_argparse_failures_exit_2(capsys):
    assert run_cli(capsys, "taft")[0] == 2                 # missing --N
    assert run_cli(capsys, "no-such-command")[0] == 2
    assert run_cli(capsys, "uqsl2", "--spin", "1", "--format", "yaml")[0] == 2
    assert run_cli(capsys, "double", "--N", "2",
                   "--convention", "bogus")[0] == 2


# ---------------------------------------------------------------------------
# --output and the output-directory environment override
# ---------------------------------------------------------------------------

def test_output_resolves_against_env_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("HOPFBAX_OUTPUT_DIR", str(tmp_path))
    code, out, _ = run_cli(capsys, "uqsl2", "--spin", "1/2", "--parametric",
                           "--format", "json", "--output",
                           os.path.join("sub", "half.json"))
    assert code == 0
    assert out == ""
    target = tmp_path / "sub" / "half.json"
    assert target.is_file()
    assert ParametricMatrix.from_json(target.read_text()) == \
        uqsl2_r_matrix(spin_half(), parametric=True)


def test_absolute_output_ignores_env_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("HOPFBAX_OUTPUT_DIR", str(tmp_path / "unused"))
    target = tmp_path / "direct.json"
    code, _, _ = run_cli(capsys, "uqsl2", "--spin", "1/2", "--format", "json",
                         "--output", str(target))
    assert code == 0
    assert target.is_file()
    assert not (tmp_path / "unused").exists()
