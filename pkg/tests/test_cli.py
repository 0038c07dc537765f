import json
from unittest.mock import patch

import pytest
from sympy.polys.domains import QQ

import main
from core.cubic import CubicForm
from core.quintic import ConicDiagnostics


@pytest.fixture(autouse=True)
def no_log_files():
    """Fixture keeping CLI runs from writing log files."""
    with patch("main.FanoPoissonHelpers.setup_logging"):
        yield


@pytest.fixture
def write_json(tmp_path):
    """Fixture writing a payload to a JSON file and returning its path."""

    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write


@pytest.fixture
def fermat_file(write_json):
    """Fixture for the Fermat cubic input file."""
    return write_json("fermat.json", CubicForm.fermat().to_json())


def _run(capsys, argv):
    code = main.main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_cubic_cohomology_fermat(capsys, fermat_file, write_json):
    """Test dims [1, 0, 17, 12] for the Fermat cubic and eps_01."""
    omega = write_json("omega.json", {"a": {"01": "1"}})
    code, report = _run(capsys, ["cubic", "cohomology", "--input", fermat_file, "--omega", omega])
    assert code == 0
    assert report["dims"] == [1, 0, 17, 12]
    assert report["ranks"] == {"C": 3}
    assert report["ok"] is True
    assert "duration_seconds" not in report


def test_cubic_verify_fermat(capsys, fermat_file):
    """Test that the Fermat cubic passes every check."""
    code, report = _run(capsys, ["cubic", "verify", "--input", fermat_file])
    assert code == 0
    assert all(report["checks"].values())
    assert report["details"]["partials_rank"] == 5


def test_cubic_verify_dependent_partials(capsys, write_json):
    """Test F = Z0^3: shortcut flag set and a mathematical failure exit."""
    path = write_json("z0.json", {"F": {"3 0 0 0 0": "1"}})
    code, report = _run(capsys, ["cubic", "verify", "--input", path])
    assert code == 1
    assert report["details"]["plucker_shortcut_disabled"] is True
    assert report["checks"]["partials_independent"] is False
    assert "ChartDegenerate" in report["error"]


def test_non_homogeneous_input(capsys, write_json):
    """Test exit code 2 for a non-homogeneous cubic."""
    path = write_json("bad.json", {"F": {"3 0 0 0 0": "1", "1 0 0 0 0": "1"}})
    code, report = _run(capsys, ["cubic", "verify", "--input", path])
    assert code == 2
    assert report["ok"] is False
    assert "degree 3" in report["error"]


def test_malformed_json(capsys, tmp_path):
    """Test exit code 2 for unparsable JSON."""
    path = tmp_path / "broken.json"
    path.write_text("{")
    code, _ = _run(capsys, ["cubic", "verify", "--input", str(path)])
    assert code == 2


def test_quintic_non_poisson_residual(capsys, write_json):
    """Test exit code 1 and the residual alpha_0123 - alpha_2358 = -1."""
    omega = write_json("omega.json", {"a": {"23": "1", "58": "1"}})
    code, report = _run(capsys, ["quintic", "cohomology", "--omega", omega])
    assert code == 1
    assert report["residuals"]["alpha_0123 - alpha_2358"] == "-1"
    assert report["checks"]["poisson"] is False


def test_quintic_cohomology_eps18(capsys, write_json):
    """Test h^1 = 0 for w = eps_18."""
    omega = write_json("omega.json", {"a": {"18": "1"}})
    code, report = _run(capsys, ["quintic", "cohomology", "--omega", omega])
    assert code == 0
    assert report["dims"][1] == 0
    assert report["details"]["euler_characteristic"] == -4


def test_quintic_conic(capsys, write_json):
    """Test the conic command on and off the conic."""
    on = write_json("on.json", {"a23": "4", "a28": "2", "a35": "9"})
    code, report = _run(capsys, ["quintic", "conic", "--input", on])
    assert code == 0
    assert report["details"]["diagnostics"] == {"alpha_2358": "90", "alpha_0345": "-405", "alpha_0134": "100/3"}
    assert report["checks"]["separated_from_grassmannian"] is True
    off = write_json("off.json", {"a23": "1", "a28": "1", "a35": "1"})
    code, report = _run(capsys, ["quintic", "conic", "--input", off])
    assert code == 1
    assert "NotOnConic" in report["error"]


def test_conic_separation_comes_from_diagnostics(capsys, write_json):
    """Test that vanishing separating values are recorded as a failed check."""
    on = write_json("on.json", {"a23": "4", "a28": "2", "a35": "9"})
    with patch("main.quintic.conic_diagnostics", return_value=ConicDiagnostics(QQ(0), QQ(0), QQ(0))):
        code, report = _run(capsys, ["quintic", "conic", "--input", on])
    assert code == 1
    assert report["checks"]["separated_from_grassmannian"] is False


def test_quintic_verify(capsys):
    """Test that the quintic verification suite passes."""
    code, report = _run(capsys, ["quintic", "verify", "--jobs", "2"])
    assert code == 0
    assert report["details"]["table_entries_checked"] == 98
    assert report["checks"]["table_A"] is True
    assert "table_failures" not in report["details"]


def test_sweep_cubic_deterministic(capsys):
    """Test that identical seeds give byte-identical sweep reports."""
    argv = ["sweep", "cubic", "--count", "5", "--seed", "3", "--json"]
    assert main.main(argv) == 0
    first = capsys.readouterr().out
    assert main.main(argv) == 0
    assert capsys.readouterr().out == first
    report = json.loads(first)
    assert report["checks"] == {"all_poisson": True, "euler_characteristic_6": True, "bracket_identity": True}


def test_sweep_quintic_with_conic(capsys):
    """Test the quintic sweep over decomposable and conic points."""
    code, report = _run(capsys, ["sweep", "quintic", "--count", "3", "--seed", "1", "--conic"])
    assert code == 0
    assert report["checks"]["conic_separated"] is True
    assert sum(report["details"]["conic_strata"].values()) == 3


def test_sweep_rejects_zero_count(capsys):
    """Test exit code 2 for --count 0."""
    code, _ = _run(capsys, ["sweep", "cubic", "--count", "0"])
    assert code == 2


def test_timing_and_summary(capsys, fermat_file, write_json):
    """Test the key: value summary with --timing."""
    omega = write_json("omega.json", {"a": {"01": "1"}})
    code = main.main(["cubic", "cohomology", "--input", fermat_file, "--omega", omega, "--timing"])
    out = capsys.readouterr().out
    assert code == 0
    assert "ok: true" in out
    assert "dims: [1, 0, 17, 12]" in out


def test_missing_omega(capsys, fermat_file):
    """Test exit code 2 when the bivector file is missing."""
    code, report = _run(capsys, ["cubic", "cohomology", "--input", fermat_file])
    assert code == 2
    assert "--omega" in report["error"]


def test_zero_jobs_rejected(capsys, fermat_file):
    """Test exit code 2 for --jobs 0."""
    code, report = _run(capsys, ["cubic", "verify", "--input", fermat_file, "--jobs", "0"])
    assert code == 2
    assert report["ok"] is False


if __name__ == "__main__":
    pytest.main([__file__])
