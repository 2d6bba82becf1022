import json
import subprocess
import sys

import pytest

from renormlab.cli import main
from renormlab.survey import CSV_COLUMNS


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as e:
        code = e.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_pipeline_c1(capsys):
    code, out, _ = run(["pipeline", "-1", "--samples", "20", "--grid", "101"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["essential_period"]["essential_period"] == 2
    assert rep["tower"]["levels"][1]["sigma"] == pytest.approx(0.381966, abs=1e-6)


def test_pipeline_attracting_alpha_is_a_note(capsys):
    code, out, _ = run(["pipeline", "-0.5", "--samples", "5", "--grid", "51"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert any(n.get("error") == "AlphaAttracting" for n in rep["notes"])
    assert rep["tower"]["depth"] == 0


def test_usage_errors(capsys):
    assert run([], capsys)[0] == 1
    assert run(["nest", "0.5"], capsys)[0] == 1
    assert run(["nest", "abc"], capsys)[0] == 1
    assert run(["contraction", "-1", "--level", "40"], capsys)[0] == 1


def test_missing_corpus_is_io_error(tmp_path, capsys):
    code, _, err = run(["survey", str(tmp_path / "nope.txt"), "--out", str(tmp_path / "o")],
                       capsys)
    assert code == 2 and "nope.txt" in err


def test_empty_corpus(tmp_path, capsys):
    corpus = tmp_path / "empty.txt"
    corpus.write_text("# nothing here\n\n")
    out = tmp_path / "o"
    assert run(["survey", str(corpus), "--out", str(out)], capsys)[0] == 0
    lines = (out / "survey.csv").read_text().splitlines()
    assert lines == ["# schema=1", ",".join(CSV_COLUMNS)]
    assert not (out / "survey.svg").exists()
    footer = json.loads((out / "survey.json").read_text())
    assert footer["entries"] == 0 and footer["rho_sigma_pe"] is None


def test_survey_keeps_input_order(tmp_path, capsys):
    corpus = tmp_path / "two.txt"
    corpus.write_text("-1.3107026413368328 pd2\n-1.0 pd1  # base\n")
    out = tmp_path / "o"
    argv = ["survey", str(corpus), "--out", str(out), "--samples", "10", "--grid", "101"]
    assert run(argv, capsys)[0] == 0
    rows = (out / "survey.csv").read_text().splitlines()[2:]
    assert [r.split(",")[1] for r in rows] == ["pd2", "pd1"]
    assert (out / "survey.svg").exists()


def test_malformed_corpus_names_line(tmp_path, capsys):
    corpus = tmp_path / "bad.txt"
    corpus.write_text("-1.0 ok\n# c\nminus-one\n")
    code, _, err = run(["survey", str(corpus), "--out", str(tmp_path / "o")], capsys)
    assert code == 1 and "line 3" in err
    corpus.write_text("-1.0\n0.9\n")
    code, _, err = run(["survey", str(corpus), "--out", str(tmp_path / "o")], capsys)
    assert code == 1 and "line 2" in err


def test_find_param(capsys):
    code, out, _ = run(["find-param", "period-doubling", "1"], capsys)
    assert code == 0 and json.loads(out)["c"] == pytest.approx(-1.0, abs=1e-12)
    code, out, _ = run(["find-param", "superattracting", "3"], capsys)
    assert json.loads(out)["c"] == pytest.approx(-1.754877666246693, abs=1e-12)
    assert run(["find-param", "near-window", "-1.75"], capsys)[0] == 1


def test_survey_deterministic(tmp_path, capsys):
    corpus = tmp_path / "c.txt"
    corpus.write_text("-1.0 a\n-1.3107026413368328 b\n-1.754877666246693 c\n")
    outs = []
    for name in ("x", "y"):
        out = tmp_path / name
        run(["survey", str(corpus), "--out", str(out), "--samples", "10", "--grid", "101"],
            capsys)
        outs.append([(out / f).read_bytes() for f in ("survey.csv", "survey.json", "survey.svg")])
    assert outs[0] == outs[1]


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "renormlab.cli", "--version"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip()
