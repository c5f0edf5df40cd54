import csv
import io
import json

import pytest

from scalecite.cli import main
from scalecite.io import bundled_path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_case_study(capsys):
    code, out, _ = run(capsys, "case-study")
    assert code == 0
    assert "5 > 4 > 3 > 6 > 2 > 1" in out


def test_case_study_csv_columns(capsys):
    code, out, _ = run(capsys, "case-study", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [int(r["h"]) for r in rows] == [4, 5, 5, 7, 5, 5]
    assert [int(r["total_citations"]) for r in rows] == [46, 69, 31000, 31046, 16446, 446]


def test_case_study_bad_beta_exits_1(capsys):
    code, _, err = run(capsys, "case-study", "--beta", "0.1")
    assert code == 1 and "mismatch" in err


def test_metrics_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    path.write_text("")
    code, _, err = run(capsys, "metrics", str(path))
    assert code == 1 and "no records" in err


def test_metrics_bad_row(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("author_id,year,coauthors,citations\nA,2020,0,4\n")
    code, _, err = run(capsys, "metrics", str(path))
    assert code == 1 and "line 2" in err


def test_missing_file(tmp_path, capsys):
    code, _, _ = run(capsys, "metrics", str(tmp_path / "nope.csv"))
    assert code == 1


def test_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["sbci", str(bundled_path()), "--alpha", "2"])
    assert exc.value.code == 2


def test_tune_needs_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["tune"])
    assert exc.value.code == 2


def test_metrics_json(capsys):
    code, out, _ = run(capsys, "metrics", str(bundled_path()), "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 17
    assert {"h", "g", "h_I", "h_frac", "h_exp", "i10"} <= set(data[0])


def test_sbci_text(capsys):
    code, out, _ = run(capsys, "sbci", str(bundled_path()), "--f", "a", "--g", "w")
    assert code == 0 and len(out.strip().splitlines()) == 2 + 17


def test_tune_seed(capsys):
    code, out, _ = run(capsys, "tune", "--seed", "0", "--format", "csv")
    assert code == 0
    assert len(list(csv.DictReader(io.StringIO(out)))) == 24


def test_tune_text_reports_best(capsys):
    code, out, _ = run(capsys, "tune", "--seed", "1", "--alpha-grid", "0.2,0.6", "--f-grid", "sqrt", "--g-grid", "log1p")
    assert code == 0 and "best: alpha=" in out


def test_synth_and_scatter(tmp_path, capsys):
    cohort = tmp_path / "c.json"
    assert main(["synth", "--seed", "2", "-o", str(cohort)]) == 0
    scatter = tmp_path / "s.csv"
    code, _, err = run(capsys, "scatter", str(cohort), "-o", str(scatter))
    assert code == 0 and "rows" in err
    assert scatter.read_text().startswith("author_id,coauthors,citations,zero_citations")


def test_synth_config_file(tmp_path, capsys):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("groups = only:3:1.0\n")
    code, out, _ = run(capsys, "synth", "--config", str(cfg))
    assert code == 0
    assert len({line.split(",")[0] for line in out.splitlines()[1:]}) == 3


def test_bad_config_exits_1(tmp_path, capsys):
    cfg = tmp_path / "t.cfg"
    cfg.write_text("epsilon = -3\n")
    code, _, err = run(capsys, "tune", "--seed", "0", "--config", str(cfg))
    assert code == 1 and "error" in err
