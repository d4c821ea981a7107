import json

import pytest

from sgapshift.cli import main
from sgapshift.report import AnalysisReport, CHECK_NAMES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "delta:1|1", "-N", "4")
    assert code == 0
    assert "p_n            1, 3, 4, 7" in out
    assert "(1) / (-t^2 - t + 1)" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "finite:1,2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["char_poly"] == [-1, -1, 0, 1]
    assert data["bf"] == {"free_rank": 0, "factors": []}
    assert data["class"] == "FiniteSFT"
    assert set(data["checks"]) == set(CHECK_NAMES)
    assert all(v == "pass" for v in data["checks"].values())
    rep = AnalysisReport.from_json(out)
    assert json.loads(rep.to_json()) == data


def test_analyze_degenerate_marks_skipped(capsys):
    code, out, _ = run(capsys, "analyze", "--spec", "finite:30", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["degenerate"] and data["flow"] is None
    assert data["checks"]["bowen_franks"] == "skipped"


@pytest.mark.parametrize("spec", ["finite:2,1", "delta:1|", "nonsense", "delta:1|0"])
def test_analyze_invalid_exits_2(capsys, spec):
    with pytest.raises(SystemExit) as exc:
        main(["analyze", "--spec", spec])
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_verify_custom_corpus_notes_canonicalization(capsys, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("# comment\nfinite:1,2\ndelta:1,2|2  # absorbs\ndelta:3|1,1\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--pmax", "8", "--jobs", "1")
    assert code == 0
    assert "'delta:1,2|2' canonicalized to 'delta:1|2'" in out
    assert "'delta:3|1,1' canonicalized to 'delta:3|1'" in out
    assert "all checks passed" in out


def test_verify_small_pmax_and_seed(capsys, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("finite:0,1\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--pmax", "1", "--seed", "3", "--augment", "6")
    assert code == 0
    assert "7 specs, pmax=1" in out


def test_verify_failure_exits_1(capsys, tmp_path, monkeypatch):
    import sgapshift.cli as cli

    def broken(spec, pmax=12):
        return {name: ("fail" if name == "zeta_routes" else "pass") for name in CHECK_NAMES}

    monkeypatch.setattr(cli, "verify_spec", broken)
    path = tmp_path / "corpus.txt"
    path.write_text("finite:1,2\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--jobs", "1")
    assert code == 1
    assert "FAILED: zeta_routes on finite:1,2" in out


def test_verify_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "--corpus", str(tmp_path / "nope.txt"))
    assert code == 2 and "error" in err


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ("finite:1,2,3", "finite:0,5,9", "flow equivalent: yes"),
        ("finite:1,2", "delta:1|1", "flow equivalent: yes"),
        ("delta:2|1,2", "delta:1|2", "invariants differ"),
    ],
)
def test_flow_compare(capsys, a, b, expected):
    code, out, _ = run(capsys, "flow-compare", a, b)
    assert code == 0 and expected in out


def test_flow_compare_degenerate(capsys):
    code, _, err = run(capsys, "flow-compare", "finite:3", "finite:1,2")
    assert code == 2 and "|S| = 1" in err


def test_oracle_queries(capsys):
    assert run(capsys, "oracle", "--spec", "finite:1,2", "admissible", "101")[1].strip() == "true"
    assert run(capsys, "oracle", "--spec", "delta:1|2", "blocks", "3")[1].strip() == "5"
    assert run(capsys, "oracle", "--spec", "delta:1|1", "periodic", "2")[1].strip() == "3"
    assert run(capsys, "oracle", "--spec", "finite:0", "estimate", "10")[1].strip() == "0"
    assert run(capsys, "oracle", "--spec", "finite:0", "blocks", "x")[0] == 2
    assert run(capsys, "oracle", "--spec", "finite:0", "admissible", "012")[0] == 2
    assert run(capsys, "oracle", "--spec", "finite:0", "periodic", "40")[0] == 2


def test_graph(capsys):
    code, out, _ = run(capsys, "graph", "--spec", "delta:2|1,2")
    assert code == 0 and out.startswith('digraph "delta:2|1,2"')


def test_pmax_bounds():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--pmax", "17"])
    assert exc.value.code == 2


def test_verify_parallel(capsys, tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("finite:1,2\ndelta:2|1,2\ndelta:0,3|2,1\nfinite:7\n")
    code, out, _ = run(capsys, "verify", "--corpus", str(path), "--jobs", "2", "--pmax", "10")
    assert code == 0
    assert "bowen_franks         3/3" in out
