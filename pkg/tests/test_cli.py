import csv
import io
import json
import math
from fractions import Fraction

import pytest

from trigprod import cache
from trigprod.cli import parse_theta, run
from trigprod.coeffs import pn_coefficients, qn_coefficients
from trigprod.errors import IntegrityError
from trigprod.figures import FigureSpec, emit_figure


def _run(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def test_parse_theta():
    assert parse_theta("2pi/5") == Fraction(2, 5)
    assert parse_theta("pi") == Fraction(1)
    assert parse_theta("-pi/2") == Fraction(-1, 2)
    assert parse_theta("0.5pi") == Fraction(1, 2)
    assert parse_theta("1.25") == 1.25
    with pytest.raises(ValueError):
        parse_theta("pi/0")
    with pytest.raises(ValueError):
        parse_theta("tau")


def test_eval_examples():
    code, out = _run(["eval", "P", "--n", "4", "--theta", "2pi/5"])
    assert code == 0
    d = json.loads(out)
    assert d["magnitude"] == pytest.approx(5.0, rel=1e-14)
    assert d["log_magnitude"] == pytest.approx(math.log(5), abs=1e-14)
    d = json.loads(_run(["eval", "P", "--n", "3", "--theta", "0"])[1])
    assert d["magnitude"] == 0.0 and d["log_magnitude"] is None


def test_coeffs_and_cache(tmp_path, monkeypatch):
    code, out = _run(["coeffs", "Q", "--n", "7"])
    assert code == 0
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert rows["9"] == "6"
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    code, out2 = _run(["coeffs", "Q", "--n", "7", "--cache"])
    assert code == 0 and out2 == out
    assert (tmp_path / "Q_7.coeffs").exists()
    # second call reads the cache and prints the same table
    assert _run(["coeffs", "Q", "--n", "7", "--cache"])[1] == out


def test_usage_errors_exit_2():
    assert _run([])[0] == 2
    assert _run(["eval", "X", "--n", "3", "--theta", "1"])[0] == 2
    assert _run(["eval", "P", "--n", "3", "--theta", "pie"])[0] == 2
    assert _run(["eval", "P", "--n", "0", "--theta", "1"])[0] == 2
    assert _run(["norms", "P", "--n", "5", "--p", "0.5"])[0] == 2


def test_integrity_failure_exit_1(tmp_path):
    path = cache.cache_write(pn_coefficients(6), tmp_path)
    path.write_text(path.read_text().replace("\n1\n", "\n2\n", 1))
    assert _run(["coeffs", "P", "--n", "6", "--cache", str(tmp_path)])[0] == 1


def test_constants_csv():
    code, out = _run(["constants"])
    assert code == 0
    rows = {r["name"]: r for r in csv.DictReader(io.StringIO(out))}
    assert float(rows["B"]["value"]) == pytest.approx(2.740222990, abs=1e-8)
    assert len(rows["w0"]["value"].replace(".", "").lstrip("0")) >= 16


def test_norms_csv():
    code, out = _run(["norms", "Q", "--n", "20", "--p", "1", "--method", "coefficients"])
    row = next(csv.DictReader(io.StringIO(out)))
    assert code == 0 and math.exp(float(row["value_log"])) == pytest.approx(2**20)
    code, out = _run(["norms", "P", "--n", "30", "--p", "inf"])
    row = next(csv.DictReader(io.StringIO(out)))
    assert row["method"] == "scan-refine" and math.exp(float(row["value_log"])) >= 31


def test_verify_json():
    code, out = _run(["verify", "--theorem", "littlewood", "--n-max", "30"])
    assert code == 0
    assert json.loads(out)["passed"] is True
    code, out = _run(["verify", "--all", "--n-max", "30"])
    assert code == 0 and isinstance(json.loads(out), list)


def test_cache_round_trip(tmp_path):
    t = pn_coefficients(50)
    cache.cache_write(t, tmp_path)
    back = cache.cache_read("P", 50, tmp_path)
    assert back.as_ints() == t.as_ints()
    q = cache.cache_read("Q", 20, cache.cache_write(qn_coefficients(20), tmp_path).parent)
    assert sum(q.as_ints()) == 1048576


@pytest.mark.parametrize(
    "mutate, needle",
    [
        (lambda lines: lines[:1] + ["1", "-1", "0"] + lines[4:], "sum-rule"),
        (lambda lines: lines[:-1], "count"),
        (lambda lines: lines[:1] + ["2"] + lines[2:], "constant-term"),
        (lambda lines: ["garbage"] + lines[1:], "header"),
        (lambda lines: lines[:5] + ["x"] + lines[6:], "non-integer"),
    ],
)
def test_cache_tamper_detected(tmp_path, mutate, needle):
    path = cache.cache_write(pn_coefficients(8), tmp_path)
    lines = path.read_text().splitlines()
    path.write_text("\n".join(mutate(lines)) + "\n")
    with pytest.raises(IntegrityError, match=needle):
        cache.cache_read("P", 8, tmp_path)


def test_cache_header_mismatch(tmp_path):
    path = cache.cache_write(pn_coefficients(8), tmp_path)
    path.rename(tmp_path / "P_9.coeffs")
    with pytest.raises(IntegrityError):
        cache.cache_read("P", 9, tmp_path)


def test_figure_curves(tmp_path):
    out = emit_figure(FigureSpec(4, tmp_path / "f4.csv"))
    raw = out.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.reader(io.StringIO(raw.decode())))
    assert rows[0] == ["theta", "value"] and len(rows) == 2049
    assert float(rows[1][1]) == 1024.0
    rows1 = list(csv.reader(open(emit_figure(FigureSpec(1, tmp_path / "f1.csv")))))
    assert float(rows1[1][1]) == 0.0
    assert float(rows1[-1][0]) == pytest.approx(math.pi / 2)


def test_figure_ratio_tables(tmp_path):
    for fid in (2, 3, 5, 6):
        rows = list(csv.DictReader(open(emit_figure(FigureSpec(fid, tmp_path / f"f{fid}.csv", n_max=30)))))
        assert [int(r["n"]) for r in rows] == list(range(1, 31))
        assert all(float(r["ratio"]) > 0 for r in rows)
    rows = list(csv.DictReader(open(tmp_path / "f3.csv")))
    # P_1: ||P_1||_2 = sqrt 2, ratio sqrt(2) / e^K
    assert float(rows[0]["ratio"]) == pytest.approx(math.sqrt(2) / 1.219715476, rel=1e-8)


def test_figure_default_ranges(tmp_path):
    assert FigureSpec(2, tmp_path).n_range == range(1, 401)
    assert FigureSpec(5, tmp_path).n_range == range(1, 501)
    with pytest.raises(ValueError):
        FigureSpec(7, tmp_path)


def test_figure_failure_removes_partial(tmp_path, monkeypatch):
    import trigprod.figures as figures

    def boom(ns):
        yield 1, "0", "1"
        raise RuntimeError("norm failure")

    monkeypatch.setattr(figures, "_l1_rows", boom)
    with pytest.raises(RuntimeError):
        emit_figure(FigureSpec(2, tmp_path / "f2.csv", n_max=3))
    assert list(tmp_path.iterdir()) == []


def test_figure_cli(tmp_path):
    code, out = _run(["figure", "--id", "6", "--out", str(tmp_path / "f6.csv"), "--n-max", "10"])
    assert code == 0 and (tmp_path / "f6.csv").exists()
