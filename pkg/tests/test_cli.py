import json

import pytest

from matroidkit.cli import run
from matroidkit.construct import l_family, n5
from matroidkit.textio import emit_matroid

MK4_GRAPH = """\
graph
vertices 4
edge 0 1
edge 0 2
edge 0 3
edge 1 2
edge 1 3
edge 2 3
"""


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.delenv("DATABASE_URL", raising=False)
    monkeypatch.delenv("MATROIDKIT_MAX_WITNESSES", raising=False)
    monkeypatch.chdir(tmp_path)


@pytest.fixture
def files(tmp_path):
    paths = {
        "n5": tmp_path / "n5.matroid",
        "mk4": tmp_path / "mk4.graph",
        "l1": tmp_path / "l1.matroid",
        "bad": tmp_path / "bad.matroid",
        "clutter": tmp_path / "clutter.matroid",
    }
    paths["n5"].write_text(emit_matroid(n5().matroid), encoding="ascii")
    paths["mk4"].write_text(MK4_GRAPH, encoding="ascii")
    paths["l1"].write_text(emit_matroid(l_family(1).matroid), encoding="ascii")
    paths["bad"].write_text("matroid\nn 3\nc 0 5\n", encoding="ascii")
    paths["clutter"].write_text("matroid\nn 4\nc 1 2\nc 1 3\n", encoding="ascii")
    return {k: str(v) for k, v in paths.items()}


# -------------------------------------------------
# info / check
# -------------------------------------------------
def test_info(files, capsys):
    assert run(["info", files["mk4"]]) == 0
    out = capsys.readouterr().out
    assert "rank: 3" in out
    assert "binary: yes" in out


def test_check_ssce_fails_on_n5(files, capsys):
    assert run(["check", "--property", "ssce", files["n5"]]) == 1
    captured = capsys.readouterr()
    assert captured.out.startswith("ssce: fails")
    assert "❌" in captured.err


def test_check_ssce_holds_on_mk4(files):
    assert run(["check", "--property", "ssce", files["mk4"]]) == 0


@pytest.mark.parametrize(
    "prop, key, expected",
    [
        ("skew", "n5", 0),
        ("skew", "mk4", 1),
        ("k-skew:3", "l1", 0),
        ("k-skew:3", "n5", 1),
        ("unbreakable", "mk4", 0),
        ("circuit-difference", "n5", 1),
        ("binary", "mk4", 0),
    ],
)
def test_check_properties(files, prop, key, expected):
    assert run(["check", "--property", prop, files[key]]) == expected


def test_check_json_record(files, capsys):
    assert run(["check", "--property", "ssce", "--json", "--max-witnesses", "2", files["n5"]]) == 1
    record = json.loads(capsys.readouterr().out)
    assert set(record) == {"check", "instance", "verdict", "witnesses", "params"}
    assert record["verdict"] == "fail"
    assert len(record["witnesses"]) == 2
    assert record["instance"].startswith("5:")


def test_check_rejects_unknown_property(files, capsys):
    assert run(["check", "--property", "fano", files["n5"]]) == 2
    assert "unknown property" in capsys.readouterr().err


def test_bad_input_exits_with_two(files, capsys):
    assert run(["check", "--property", "ssce", files["bad"]]) == 2
    assert "line 3" in capsys.readouterr().err


def test_missing_file_exits_with_two(tmp_path):
    assert run(["info", str(tmp_path / "nope.matroid")]) == 2


def test_non_ascii_file_exits_with_two(tmp_path):
    path = tmp_path / "utf.matroid"
    path.write_text("matroid\nn 1 # é\n", encoding="utf-8")
    assert run(["info", str(path)]) == 2


def test_unknown_command_is_a_usage_error():
    assert run(["frobnicate"]) == 2


# -------------------------------------------------
# axiom / minor / named
# -------------------------------------------------
def test_axiom_on_non_matroid(files, capsys):
    assert run(["axiom", "--system", "c3pp", files["clutter"]]) == 1
    assert "e1=2 e2=3 e=1" in capsys.readouterr().out


def test_axiom_on_matroid(files):
    assert run(["axiom", "--system", "c3pp-unique", files["mk4"]]) == 0


def test_series_minor_with_moves(files, capsys):
    assert run(["minor", "--series", files["l1"], files["n5"]]) == 0
    out = capsys.readouterr().out
    assert "series minor: yes" in out
    assert "moves: delete" in out


def test_series_minor_absent(files):
    assert run(["minor", "--series", files["mk4"], files["n5"]]) == 1


def test_minor_without_series_flag(files):
    assert run(["minor", files["l1"], files["n5"]]) == 2


def test_named_to_stdout(capsys):
    assert run(["named", "N5"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("matroid\n")
    assert "tag e 2" in out


def test_named_to_file(tmp_path, files):
    out = tmp_path / "g3.matroid"
    assert run(["named", "G:3", "--out", str(out)]) == 0
    assert run(["check", "--property", "binary", str(out)]) == 0


def test_named_unknown():
    assert run(["named", "Fano"]) == 2


# -------------------------------------------------
# verify / catalog / history
# -------------------------------------------------
def test_verify_axiom(capsys):
    assert run(["verify", "axiom", "--clutter-n", "4"]) == 0
    captured = capsys.readouterr()
    assert "axiom: instances=167, violations=0, passed" in captured.out
    assert "oracle=68" in captured.out


def test_verify_axiom_json_summary(capsys):
    assert run(["--json", "verify", "axiom", "--clutter-n", "3"]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert records[-1]["instance"] is None
    assert records[-1]["verdict"] == "pass"
    assert records[-1]["params"]["counts"]["oracle"] == 16


def test_verify_axiom_six_needs_allow_large():
    assert run(["verify", "axiom", "--clutter-n", "6"]) == 2


def test_verify_theorem3_edge_cap():
    assert run(["verify", "theorem3", "--graphic-max-edges", "10"]) == 2


def test_verify_theorem1_small():
    code = run([
        "verify", "theorem1", "--graphic-max-edges", "4", "--binary-max-rank", "2",
        "--binary-max-cols", "3", "--uniform-max", "4",
    ])
    assert code == 0


def test_catalog_writes_files(tmp_path, capsys):
    out = tmp_path / "cat"
    assert run(["catalog", "--family", "uniform", "--max-n", "3", "--all", "--out", str(out)]) == 0
    written = sorted(p.name for p in out.iterdir())
    assert len(written) == 10
    assert written[0] == "uniform-00001.matroid"
    assert run(["info", str(out / written[-1])]) == 0


def test_history_needs_database_url(capsys):
    assert run(["history"]) == 2
    assert "DATABASE_URL" in capsys.readouterr().err


def test_verify_record_then_history(tmp_path, monkeypatch, capsys):
    url = f"sqlite:///{tmp_path / 'runs.db'}"
    assert run(["verify", "axiom", "--clutter-n", "2", "--record", url]) == 0
    monkeypatch.setenv("DATABASE_URL", url)
    capsys.readouterr()
    assert run(["history"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("Verification History")
    assert "axiom: instances=5, violations=0, passed" in out
