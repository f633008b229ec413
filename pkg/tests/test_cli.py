import csv
import io
import json
import subprocess
import sys

import pytest

from pslab.cli import main, thread_budget


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_count_partitions_row_100(capsys):
    code, out, _ = run(capsys, "count", "--kappa", "1", "--N", "100")
    assert code == 0
    table = rows(out)
    assert len(table) == 101
    assert table[100] == {"n": "100", "count": "190569292"}


def test_count_json_and_output_file(capsys, tmp_path):
    target = tmp_path / "q.json"
    code, out, _ = run(capsys, "count", "--kappa", "1/2", "--m", "1", "--N", "10",
                       "--format", "json", "-o", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert "10" in json.dumps(data)


def test_asym_json_reports_exact_delta(capsys):
    code, out, _ = run(capsys, "asym", "--kappa", "1/2", "--n", "100", "1000")
    assert code == 0
    data = json.loads(out)
    assert data["delta"] == "8/9"
    assert [e["n"] for e in data["estimates"]] == [100, 1000]


def test_asym_csv(capsys):
    code, out, _ = run(capsys, "asym", "--kappa", "1", "--m", "1", "--n", "50", "--format", "csv")
    assert code == 0 and rows(out)[0]["n"] == "50"


def test_saddle_csv(capsys):
    code, out, _ = run(capsys, "saddle", "--kappa", "2", "--n", "100", "200")
    assert code == 0
    r = rows(out)
    assert [x["n"] for x in r] == ["100", "200"]
    assert float(r[0]["x"]) > float(r[1]["x"]) > 0


def test_saddle_decimal_kappa_warns(capsys):
    with pytest.warns(UserWarning, match="irrational"):
        code, out, _ = run(capsys, "saddle", "--kappa", "1.5", "--n", "100")
    assert code == 0 and len(rows(out)) == 1


@pytest.mark.parametrize("command", [["count", "--N", "3"], ["asym", "--n", "10"], ["zeta"],
                                     ["table", "--N", "10"]])
def test_decimal_kappa_rejected_for_exact_commands(capsys, command):
    code, _, err = run(capsys, command[0], "--kappa", "1.5", *command[1:])
    assert code == 2 and "exact rational" in err


def test_zeta_rows(capsys):
    code, out, _ = run(capsys, "zeta", "--kappa", "1/2", "--s", "3")
    assert code == 0
    r = {(x["quantity"], x["s"]): x for x in rows(out)}
    assert r[("zeta_kappa(0)", "0")]["value"] == "-2/3"
    assert float(r[("zeta_kappa'(0)", "0")]["value"]) == pytest.approx(-1.2497808, abs=1e-7)
    assert float(r[("zeta_kappa(s)", "3.0")]["value"]) == pytest.approx(4.4919250369, abs=1e-9)
    assert float(r[("residue", "2.0")]["value"]) == pytest.approx(2.0)


def test_weyl_rows(capsys):
    code, out, _ = run(capsys, "weyl", "--kappa", "3/2", "--H", "8", "--y", "0")
    assert code == 0
    r = rows(out)
    assert r[0]["real"] == "4.0" and r[0]["modulus"] == "4.0"
    code, out, _ = run(capsys, "weyl", "--kappa", "3/2", "--H", "16", "--y", "0.25", "--grid", "64")
    assert code == 0 and float(rows(out)[1]["condition2_min"]) >= 0
    code, _, err = run(capsys, "weyl", "--kappa", "3/2", "--H", "8", "--grid", "64")
    assert code == 2 and "H must be" in err


def test_table_ratios(capsys):
    code, out, _ = run(capsys, "table", "--kappa", "1", "--N", "500", "--deriv-N", "1000")
    assert code == 0
    r = rows(out)
    assert [x["n"] for x in r] == ["125", "250", "500"]
    assert all(abs(float(x["ratio_saddle"]) - 1) < 0.05 for x in r)


def test_verify_constants_passes(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("checks passed")


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    from pslab import verify
    bad = verify.Check("forced", False, 1.0, 0.0, 0.0)
    monkeypatch.setitem(verify.SUITES, "constants", [lambda: [bad]])
    code, out, _ = run(capsys, "verify")
    assert code == 1 and out.startswith("FAIL forced")


def test_thread_budget(monkeypatch):
    monkeypatch.delenv("PSLAB_THREADS", raising=False)
    assert thread_budget() == 1
    monkeypatch.setenv("PSLAB_THREADS", "3")
    assert thread_budget() == 3
    for bad in ("0", "many"):
        monkeypatch.setenv("PSLAB_THREADS", bad)
        with pytest.raises(SystemExit):
            thread_budget()


def test_parallel_saddle_matches_serial(capsys, monkeypatch):
    ns = [str(n) for n in (100, 200, 300, 400, 500, 600)]
    monkeypatch.setenv("PSLAB_THREADS", "1")
    _, serial, _ = run(capsys, "saddle", "--kappa", "1/2", "--n", *ns)
    monkeypatch.setenv("PSLAB_THREADS", "2")
    _, parallel, _ = run(capsys, "saddle", "--kappa", "1/2", "--n", *ns)
    assert serial == parallel


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pslab.cli", "count", "--kappa", "2", "--N", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["n,count", "0,1", "1,1", "2,1", "3,1", "4,2"]


def test_missing_subcommand_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
