"""
=============================================================================
TEST 15: Command Line - End-to-End Simulation
=============================================================================
Drives main.main() the way a user would: discover, save, enumerate,
check against the oracle, survey and classify. Every command must exit
with the documented code and append exactly one run log entry.

Run:  python -m pytest tests/test_cli.py -v
=============================================================================
"""
import json
import os
import sys
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import main as cli


@pytest.fixture
def log_file(tmp_path, monkeypatch):
    path = tmp_path / "run_data.json"
    monkeypatch.setenv("VINCULAR_LOG_FILE", str(path))
    for name in ("VINCULAR_MAX_DEPTH", "VINCULAR_MAX_GAP_NORM", "VINCULAR_ORACLE_LIMIT"):
        monkeypatch.delenv(name, raising=False)
    return path


def entries(path):
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def run_json(capsys, argv):
    code = cli.main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


class TestDiscover:

    def test_discover_and_save(self, log_file, tmp_path):
        out = tmp_path / "23-1.json"
        assert cli.main(["discover", "23-1", "-d", "2", "-M", "2", "--out", str(out)]) == cli.EXIT_OK
        document = json.loads(out.read_text(encoding="utf-8"))
        assert [t["prefix"] for t in document["triples"]] == [[], [1], [1, 2], [2, 1]]
        log = entries(log_file)
        assert len(log) == 1
        assert log[0]["component"] == "cli.discover"
        assert log[0]["action"] == "DISCOVERY"
        assert log[0]["status"] == "SUCCESS"
        print(f"  ✅ {log[0]['details']['outcome']}")

    def test_empty_pattern_set(self, log_file):
        assert cli.main(["discover", ""]) == cli.EXIT_USAGE
        assert entries(log_file)[0]["details"]["outcome"] == "PatternError"

    def test_no_scheme_lists_blockers(self, log_file, capsys):
        code, document = run_json(capsys, ["discover", "2-3-1", "-d", "3"])
        assert code == cli.EXIT_NO_SCHEME
        assert document["status"] == "no_scheme"
        assert document["blocking"]
        assert entries(log_file)[0]["status"] == "FAILURE"

    def test_try_reverse(self, log_file, capsys):
        code, document = run_json(capsys, ["discover", "2-3-1", "-d", "3", "--try-reverse"])
        assert code == cli.EXIT_OK
        assert document["variant"] == "reverse"
        assert document["scheme"]["variant"] == "reverse"

    def test_backup_of_overwritten_file(self, log_file, tmp_path):
        out = tmp_path / "s.json"
        out.write_text("old scheme\n", encoding="utf-8")
        assert cli.main(["discover", "23-1", "-d", "2", "--out", str(out), "--backup"]) == cli.EXIT_OK
        backups = list(tmp_path.glob("s.json.bak.*"))
        assert len(backups) == 1
        assert backups[0].read_text(encoding="utf-8") == "old scheme\n"
        assert json.loads(out.read_text(encoding="utf-8"))["patterns"] == ["23-1"]

    def test_no_backup_by_default(self, log_file, tmp_path):
        out = tmp_path / "s.json"
        out.write_text("old scheme\n", encoding="utf-8")
        assert cli.main(["discover", "23-1", "-d", "2", "--out", str(out)]) == cli.EXIT_OK
        assert list(tmp_path.glob("s.json.bak.*")) == []


class TestEnumerate:

    def test_bell_numbers(self, log_file, capsys):
        code, values = run_json(capsys, ["enumerate", "23-1", "8", "-d", "2"])
        assert code == cli.EXIT_OK
        assert values == [1, 2, 5, 15, 52, 203, 877, 4140]
        assert entries(log_file)[0]["action"] == "ENUMERATION"

    def test_plain_output_one_term_per_line(self, log_file, capsys):
        assert cli.main(["enumerate", "23-1", "5", "-d", "2"]) == cli.EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["1", "2", "5", "15", "52"]

    def test_from_saved_scheme(self, log_file, tmp_path, capsys):
        out = tmp_path / "s.json"
        cli.main(["discover", "23-1", "-d", "2", "--out", str(out)])
        capsys.readouterr()
        code, values = run_json(capsys, ["enumerate", "--scheme", str(out), "6"])
        assert code == cli.EXIT_OK
        assert values == [1, 2, 5, 15, 52, 203]
        assert len(entries(log_file)) == 2

    def test_triangle(self, log_file, capsys):
        code = cli.main(["enumerate", "23-1", "--n", "4", "--by-inversions", "-d", "2"])
        rows = json.loads(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[:3] == [[1], [1, 1], [1, 2, 1, 1]]
        assert [sum(row) for row in rows] == [1, 2, 5, 15]

    def test_reverse_fallback_on_by_default(self, log_file, capsys):
        code, values = run_json(capsys, ["enumerate", "2-3-1", "6", "-d", "3"])
        assert code == cli.EXIT_OK
        assert values == [1, 2, 5, 14, 42, 132]

    def test_no_try_reverse(self, log_file):
        assert cli.main(["enumerate", "2-3-1", "6", "-d", "3", "--no-try-reverse"]) == cli.EXIT_NO_SCHEME

    def test_missing_patterns(self, log_file):
        assert cli.main(["enumerate"]) == cli.EXIT_USAGE


class TestOracleCheck:

    def test_pass(self, log_file, capsys):
        code, document = run_json(capsys, ["oracle-check", "23-1", "7", "-d", "2"])
        assert code == cli.EXIT_OK
        assert document["first_mismatch"] is None
        assert all(row["pass"] for row in document["rows"])

    def test_corrupted_scheme_mismatch(self, log_file, tmp_path, capsys):
        out = tmp_path / "s.json"
        cli.main(["discover", "23-1", "-d", "2", "--out", str(out)])
        capsys.readouterr()
        document = json.loads(out.read_text(encoding="utf-8"))
        for triple in document["triples"]:
            if triple["prefix"] == [1, 2]:
                triple["gap_basis"] = []
        out.write_text(json.dumps(document), encoding="utf-8")
        code, result = run_json(capsys, ["oracle-check", "--scheme", str(out), "5"])
        assert code == cli.EXIT_MISMATCH
        assert result["first_mismatch"] == 3
        assert entries(log_file)[-1]["details"]["outcome"] == "mismatch at n=3"
        print("  ✅ corrupted scheme caught at n=3")

    def test_reverse_fallback_on_by_default(self, log_file, capsys):
        code, document = run_json(capsys, ["oracle-check", "2-3-1", "6", "-d", "3"])
        assert code == cli.EXIT_OK
        assert document["first_mismatch"] is None
        assert cli.main(["oracle-check", "2-3-1", "6", "-d", "3", "--no-try-reverse"]) == cli.EXIT_NO_SCHEME

    def test_oracle_limit(self, log_file):
        assert cli.main(["oracle-check", "23-1", "9", "--oracle-limit", "8"]) == cli.EXIT_USAGE

    def test_malformed_scheme_file(self, log_file, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("not json", encoding="utf-8")
        assert cli.main(["oracle-check", "--scheme", str(bad), "4"]) == cli.EXIT_USAGE
        assert entries(log_file)[0]["details"]["outcome"] == "SchemeError"


class TestSurveyAndClassify:

    def test_survey_length_two(self, log_file, capsys):
        code, document = run_json(capsys, ["survey", "--length", "2"])
        assert code == cli.EXIT_OK
        assert document["classes_total"] == 2
        assert entries(log_file)[0]["details"]["patterns"] == "length=2"

    def test_survey_budget(self, log_file):
        assert cli.main(["survey", "--set-type", "4,4"]) == cli.EXIT_USAGE
        assert entries(log_file)[0]["details"]["outcome"] == "SurveyBudgetError"

    def test_classify(self, log_file, capsys):
        code, document = run_json(capsys, ["classify", "23-1", "1-32", "123", "--n", "6"])
        assert code == cli.EXIT_OK
        assert document["groups"] == [["23-1", "1-32"], ["123"]]
        assert document["witnesses"] == [{"groups": [0, 1], "n": 4}]
        assert entries(log_file)[0]["action"] == "CLASSIFY"


class TestConfigErrors:

    def test_bad_setting(self, log_file, monkeypatch):
        monkeypatch.setenv("VINCULAR_MAX_DEPTH", "deep")
        assert cli.main(["discover", "23-1"]) == cli.EXIT_USAGE
        assert not os.path.exists(log_file)
