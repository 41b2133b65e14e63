import json

import pytest

from qdepth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_power(capsys):
    code, out, _ = run(capsys, "power", "--n", "7", "--t", "2")
    assert code == 0
    assert "qdepth: 3" in out
    assert run(capsys, "power", "--n", "3", "--t", "5", "--quiet")[1].strip() == "1"


def test_power_oracle(capsys):
    code, out, _ = run(capsys, "--json", "power", "--n", "2", "--t", "2", "--oracle")
    data = json.loads(out)
    assert code == 0
    assert data["qdepth"] == 1 and data["oracle_agrees"] is True
    assert data["witness"] == [4, 3, -2]


def test_power_oracle_disagreement_exit_4(capsys, monkeypatch):
    import qdepth.cli as cli

    real = cli.qdepth_general

    def skewed(inner, outer):
        res = real(inner, outer)
        return type(res)(**{**res.__dict__, "qdepth": res.qdepth + 1})

    monkeypatch.setattr(cli, "qdepth_general", skewed)
    assert run(capsys, "power", "--n", "2", "--t", "2", "--oracle")[0] == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["power", "--n", "1", "--t", "2"],
        ["power", "--n", "5", "--t", "4", "--oracle"],
        ["power", "--n", "2"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main(argv)
        raise SystemExit(code)
    assert info.value.code == 1


def test_oracle_cap_flag(capsys):
    assert run(capsys, "power", "--n", "5", "--t", "4", "--oracle", "--oracle-cap", "20")[0] == 0


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_ideal(capsys, tmp_path):
    m3 = write(tmp_path, "m3.txt", "vars: 3\nx1\nx2\nx3\n")
    assert "qdepth: 2" in run(capsys, "ideal", m3)[1]

    sq = write(tmp_path, "sq.txt", "vars: 2\nx1^2\nx1*x2\nx2^2\n")
    assert run(capsys, "ideal", sq, "--quiet")[1].strip() == "1"

    unit = write(tmp_path, "unit.txt", "vars: 2\n1\n")
    code, out, _ = run(capsys, "--json", "ideal", unit, "--inner", sq)
    assert code == 0
    assert json.loads(out)["qdepth"] == 0


def test_ideal_errors(capsys, tmp_path):
    sq = write(tmp_path, "sq.txt", "vars: 2\nx1^2\nx1*x2\nx2^2\n")
    m = write(tmp_path, "m.txt", "vars: 2\nx1\nx2\n")
    bad = write(tmp_path, "bad.txt", "vars: 2\nx1\nx7\n")

    code, _, err = run(capsys, "ideal", bad)
    assert code == 1 and "line 3" in err
    assert run(capsys, "ideal", sq, "--inner", m)[0] == 2
    assert run(capsys, "ideal", m, "--inner", m)[0] == 2
    assert run(capsys, "ideal", str(tmp_path / "missing.txt"))[0] == 1


def test_scan(capsys, tmp_path):
    out = tmp_path / "rep"
    code, stdout, _ = run(capsys, "scan", "--n-max", "20", "--t-max", "5", "--jobs", "1", "--out", str(out), "--strict")
    assert code == 0
    assert "COUNTEREXAMPLE: 0" in stdout
    report = json.loads((tmp_path / "rep.json").read_text())
    assert report["summary"]["cells"] == 19 * 5
    assert set(c["status"] for c in report["cells"]) <= {"proven-match", "conjectural-match"}
    assert "timing" not in report
    cell = next(c for c in report["cells"] if (c["n"], c["t"]) == (2, 1))
    assert (cell["qdepth_computed"], cell["status"]) == (1, "proven-match")


def test_scan_strict_exit_3(capsys, tmp_path, monkeypatch):
    import qdepth.scan as scan_mod

    real = scan_mod.qdepth_power_fast

    def broken(n, t):
        res = real(n, t)
        return type(res)(**{**res.__dict__, "qdepth": res.qdepth - 1}) if (n, t) == (5, 1) else res

    monkeypatch.setattr(scan_mod, "qdepth_power_fast", broken)
    argv = ["scan", "--n-max", "6", "--t-max", "2", "--jobs", "1", "--out", str(tmp_path / "s")]
    assert run(capsys, *argv)[0] == 0
    (tmp_path / "s.csv").unlink()
    assert run(capsys, *argv, "--strict")[0] == 3


def test_scan_unwritable(capsys, tmp_path):
    target = tmp_path / "nodir" / "deeper" / "rep"
    assert run(capsys, "scan", "--n-max", "4", "--t-max", "1", "--jobs", "1", "--out", str(target))[0] == 1


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "quick")
    assert code == 0
    assert "FAIL" not in out
    again = run(capsys, "selftest", "quick")[1]
    assert again == out


def test_selftest_failure_exit_4(capsys, monkeypatch):
    import qdepth.selftest as st

    monkeypatch.setattr(st, "identity_magic", lambda n, d, k: (n, d, k) != (3, 2, 1))
    assert run(capsys, "selftest", "quick")[0] == 4
