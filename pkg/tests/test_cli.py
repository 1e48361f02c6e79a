import json
import subprocess
import sys

import pytest

from ternary_polygonal.cli import EXIT_BAD_INPUT, EXIT_OK, EXIT_VERIFY_FAILED, main
from ternary_polygonal.qseries import QSeries


def run(capsys, *argv):
    code = main([*argv, "--jobs", "1"])
    return code, capsys.readouterr().out


def test_represent(capsys):
    code, out = run(capsys, "represent", "14", "18")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["count"] == 0 and data["square_class_3"] and data["exception"]
    assert data["coset_count"] == 0


def test_hurwitz(capsys):
    code, out = run(capsys, "hurwitz", "3")
    assert code == EXIT_OK and json.loads(out)["hurwitz"] == "1/3"


def test_hurwitz_text(capsys):
    code, out = run(capsys, "hurwitz", "75", "--format", "text")
    assert "hurwitz: 7/3" in out


def test_bad_input(capsys):
    assert main(["hurwitz", "5"]) == EXIT_BAD_INPUT
    assert main(["represent", "2", "5"]) == EXIT_BAD_INPUT
    assert main(["witnesses", "20", "3"]) == EXIT_BAD_INPUT
    with pytest.raises(SystemExit) as exc:
        main(["represent", "x"])
    assert exc.value.code == 2


def test_verify_siegel_weil_default(capsys):
    code, out = run(capsys, "verify-siegel-weil")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["bound"] == 27648 and data["verified"] and data["automorph_weights_ok"]


def test_verify_failure_exit_code(capsys, monkeypatch):
    import ternary_polygonal.spinor_m14 as mod
    monkeypatch.setattr(mod, "genus_theta", lambda b: mod._weighted(("nu", "mu"), b))
    code, out = run(capsys, "verify-siegel-weil", "--bound", "100")
    assert code == EXIT_VERIFY_FAILED
    assert json.loads(out)["discrepancies"]


def test_theta_csv_roundtrip(capsys, tmp_path):
    path = tmp_path / "theta.csv"
    code, _ = run(capsys, "theta", "14", "600", "--format", "csv", "-o", str(path))
    assert code == EXIT_OK
    s = QSeries.from_csv(path.read_text(), 600)
    assert s.support()[:2] == [75, 99]  # (5,5,5) and (-7,5,5)


def test_theta_json_roundtrip(capsys):
    code, out = run(capsys, "theta", "14", "300")
    s = QSeries.from_dict(json.loads(out))
    assert s[75] == 1


def test_exceptions_and_survey(capsys):
    code, out = run(capsys, "exceptions", "14", "20")
    assert json.loads(out)["exceptions"] == [4, 5, 6, 7, 8, 9, 10, 17, 18, 19, 20]
    code, out = run(capsys, "survey", "14", "2000", "--format", "csv")
    assert out.splitlines()[0] == "n,ell,square_class_3"


def test_witnesses(capsys):
    code, out = run(capsys, "witnesses", "38", "1")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["witnesses"][0]["ell"] == 37 and data["witnesses"][0]["n"] == 45


def test_witnesses_search_exhausted(capsys):
    code, out = run(capsys, "witnesses", "50", "5", "--prime-ceiling", "150")
    assert code == EXIT_VERIFY_FAILED and "error" in json.loads(out)


def test_local(capsys):
    code, out = run(capsys, "local", "8", "12")
    data = json.loads(out)
    assert data["mod8_obstruction"] == 4 and data["locally_admissible"] is False
    code, out = run(capsys, "local", "14")
    assert json.loads(out)["two_adic_surjective_k12"] is True


def test_probe(capsys):
    code, out = run(capsys, "probe-sieve-identity", "2000")
    assert code == EXIT_OK and json.loads(out)["matching_form"] == "r3(n/9)"


def test_scan(capsys):
    code, out = run(capsys, "scan-3ell2", "50")
    assert json.loads(out)["primes_checked"] == [7, 13, 19, 31, 37, 43]


def test_output_independent_of_jobs(capsys):
    outs = []
    for j in ("1", "4"):
        main(["exceptions", "26", "3000", "--jobs", j])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ternary_polygonal", "hurwitz", "4"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["hurwitz"] == "1/2"
