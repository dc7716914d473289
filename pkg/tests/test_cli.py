import csv
import io
import subprocess
import sys

import pytest

from sinc_iterint.cli import SWEEP_COLUMNS, cmd_bound, cmd_sweep, cmd_verify, main


def _sweep(example, hs, formula="modified"):
    buf = io.StringIO()
    code = cmd_sweep(example, hs, formula, buf)
    return code, list(csv.DictReader(io.StringIO(buf.getvalue()))), buf.getvalue()


def _bound(example, h, K=None):
    buf = io.StringIO()
    code = cmd_bound(example, h, buf, K=K)
    return code, dict(line.split("=", 1) for line in buf.getvalue().splitlines())


def test_sweep_example1():
    code, rows, _ = _sweep(1, [0.5, 0.4, 0.3, 0.25, 0.2])
    assert code == 0
    assert len(rows) == 5
    assert tuple(rows[0].keys()) == SWEEP_COLUMNS
    for row in rows:
        assert row["reason"] == ""
        assert float(row["abs_err"]) <= float(row["bound_abs"])
        if row["bound_rel"]:
            assert float(row["rel_err"]) <= float(row["bound_rel"])
        assert int(row["eval_count"]) == int(row["n_total"])


def test_sweep_original_example3_unsupported(capsys):
    code, rows, text = _sweep(3, [0.3], "original")
    assert code == 4 and text == ""
    assert "does not satisfy q'(x) >= 0" in capsys.readouterr().err


def test_sweep_infeasible_row():
    code, rows, _ = _sweep(2, [10.0])
    assert code == 0 and len(rows) == 1
    assert "log argument nonpositive" in rows[0]["reason"]
    assert rows[0]["value"] == "" and rows[0]["bound_abs"] == ""


def test_sweep_original_has_no_bound():
    code, rows, _ = _sweep(1, [0.3, 0.25], "original")
    assert code == 0
    for row in rows:
        assert row["formula"] == "original"
        assert row["bound_abs"] == "" and row["abs_err"] != ""


def test_sweep_product_eval_count():
    _, rows, _ = _sweep(2, [0.3])
    row = rows[0]
    plan = [int(row[k]) for k in ("N_minus", "N_plus", "M_minus", "M_plus")]
    assert int(row["eval_count"]) == (plan[0] + plan[1] + 1) + (plan[2] + plan[3] + 1)


def test_sweep_deterministic():
    def strip(text):
        idx = SWEEP_COLUMNS.index("wall_time_ns")
        out = []
        for r in csv.reader(io.StringIO(text)):
            out.append(r[:idx] + r[idx + 1:])
        return out

    _, _, t1 = _sweep(1, [0.4, 0.3, 0.2])
    _, _, t2 = _sweep(1, [0.4, 0.3, 0.2])
    assert strip(t1) == strip(t2)


def test_sweep_empty_list():
    assert cmd_sweep(1, [], "modified", io.StringIO()) == 2


def test_bound_example2_plan():
    code, kv = _bound(2, 0.5)
    assert code == 0
    assert (kv["n"], kv["m"], kv["N_minus"], kv["N_plus"]) == ("5", "4", "5", "2")
    assert (kv["M_minus"], kv["M_plus"]) == ("4", "4")


def test_bound_additivity():
    _, kv = _bound(1, 0.25)
    total = float(kv["abs"])
    assert abs(total - (float(kv["e1"]) + float(kv["e2"]))) <= 1e-12 * total


def test_bound_K_doubling():
    _, kv = _bound(1, 0.25)
    _, kv2 = _bound(1, 0.25, K=2 * 16.6)
    assert float(kv2["abs"]) == pytest.approx(2 * float(kv["abs"]), rel=1e-14)


def test_bound_infeasible_names_condition(capsys):
    code, kv = _bound(2, 0.55)
    assert code == 2 and kv == {}
    assert "rho_delta" in capsys.readouterr().err


@pytest.mark.parametrize("example", [1, 2, 3])
def test_verify(example):
    buf = io.StringIO()
    assert cmd_verify(example, buf) == 0
    text = buf.getvalue()
    assert "FAIL" not in text
    assert text.rstrip().endswith("PASS")


def test_verify_example2_reports_product_path():
    buf = io.StringIO()
    cmd_verify(2, buf)
    lines = [l for l in buf.getvalue().splitlines() if l.startswith("h=") and "SKIP" not in l]
    assert lines and all("path=product" in l for l in lines)


def test_verify_example3_uses_dec_product():
    buf = io.StringIO()
    cmd_verify(3, buf)
    assert "path=product" in buf.getvalue()


def test_main_writes_file(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--example", "1", "--h-list", "0.4,0.3", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["h"] for r in rows] == ["0.40000000000000002", "0.29999999999999999"]


def test_main_usage_errors():
    for argv in (
        ["sweep", "--example", "4", "--h-list", "0.3"],
        ["sweep", "--example", "1", "--h-list", "-0.3"],
        ["bound", "--example", "1", "--h", "abc"],
        [],
    ):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sinc_iterint.cli", "bound", "--example", "1", "--h", "0.25"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "e1=" in proc.stdout
