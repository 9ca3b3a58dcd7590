import json

import pytest
from click.testing import CliRunner

from partition_support import cli, transfer
from partition_support.serialize import dot_counts


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kw):
    return runner.invoke(cli.main, list(args), catch_exceptions=False, **kw)


def test_strata_rows(runner):
    res = invoke(runner, "strata", "--from", "5", "--to", "5")
    assert res.exit_code == 0
    assert res.output.splitlines() == ["n,a1,a2", "5,2,5"]
    assert invoke(runner, "strata", "--from", "1").output.splitlines()[1] == "1,1"


def test_jumps_rows(runner):
    rows = invoke(runner, "jumps", "--from", "1", "--to", "2").output.splitlines()
    assert rows == ["n,j0,j1,j2,edges", "1,0,0,0,0", "2,1,0,0,1"]


def test_components_row(runner):
    out = invoke(runner, "components", "--from", "21", "--to", "21").output
    assert out.splitlines()[1] == "21,4,42,5,1,1,1"
    out = invoke(runner, "components", "--from", "1", "--to", "1").output
    assert out.splitlines()[1] == "1,1,0,0,0,0,0"


def test_level_matrix(runner):
    assert invoke(runner, "level-matrix", "--n", "1").output == "r,1\n1,0\n"
    rows = invoke(runner, "level-matrix", "--n", "6").output.splitlines()
    assert rows == ["r,1,2,3", "1,0,4,2", "2,4,7,4", "3,2,4,0"]


def test_summary(runner):
    assert invoke(runner, "summary", "--n", "2").output.splitlines()[1:] == ["1,2,1,1,1,1"]
    assert invoke(runner, "summary", "--n", "6").output.splitlines()[3] == "3,1,0,1,6,6"


@pytest.mark.parametrize("args", [
    ["strata", "--from", "5", "--to", "3"],
    ["strata", "--from", "0", "--to", "3"],
    ["jumps", "--from", "-1"],
    ["verify", "--n-max", "0"],
    ["summary", "--n", "0"],
    ["strata", "--from", "1", "--format", "xml"],
])
def test_usage_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_formats(runner):
    out = invoke(runner, "jumps", "--from", "6", "--format", "json").output
    assert '"edges": 17' in out
    out = invoke(runner, "jumps", "--from", "6", "--format", "md").output
    assert "| 6 | 7 | 8 | 2 | 17 |" in out


def test_out_file_and_io_error(runner, tmp_path):
    path = tmp_path / "s.csv"
    assert invoke(runner, "strata", "--from", "3", "--out", str(path)).exit_code == 0
    assert path.read_text() == "n,a1,a2\n3,2,1\n"
    bad = tmp_path / "missing" / "s.csv"
    assert invoke(runner, "strata", "--from", "3", "--out", str(bad)).exit_code == 3


class TestExportDot:
    def test_counts(self, runner, tmp_path):
        for n, counts in ((2, (2, 1)), (6, (11, 17))):
            path = tmp_path / f"g{n}.dot"
            res = invoke(runner, "export-dot", "--n", str(n), "--out", str(path),
                         "--color-by", "jump")
            assert res.exit_code == 0
            assert dot_counts(path.read_text()) == counts

    def test_guard(self, runner, tmp_path):
        res = invoke(runner, "export-dot", "--n", "50", "--out", str(tmp_path / "g.dot"))
        assert res.exit_code == 2
        assert "--force" in res.output
        assert not (tmp_path / "g.dot").exists()

    def test_unwritable(self, runner, tmp_path):
        res = invoke(runner, "export-dot", "--n", "3", "--out", str(tmp_path / "no" / "g.dot"))
        assert res.exit_code == 3


class TestVerify:
    def test_pass(self, runner):
        res = invoke(runner, "verify", "--n-max", "16")
        assert res.exit_code == 0
        assert "FAIL" not in res.output
        assert res.output.rstrip().endswith("all checks passed for 1 <= n <= 16")

    def test_injected_fault(self, runner, monkeypatch):
        original = transfer.degree_formula
        monkeypatch.setattr(transfer, "degree_formula", lambda lam: original(lam) + 1)
        res = invoke(runner, "verify", "--n-max", "5")
        assert res.exit_code == 1
        assert "FAIL degree-formula: n=1: (1): formula 1, brute force 0" in res.output

    def test_json(self, runner):
        doc = json.loads(invoke(runner, "verify", "--n-max", "3", "--format", "json").output)
        assert doc["passed"] is True
        assert {c["name"] for c in doc["checks"]} >= {"degree-formula", "jump-formula"}


def test_cache_dir_option_and_env(runner, tmp_path):
    res = invoke(runner, "--cache-dir", str(tmp_path / "c"), "strata", "--from", "4", "--to", "5")
    assert res.exit_code == 0
    assert sorted(p.name for p in (tmp_path / "c").iterdir()) == [
        "atlas_n0004_v1.json", "atlas_n0005_v1.json"]
    res = invoke(runner, "jumps", "--from", "3", env={cli.CACHE_ENV: str(tmp_path / "e")})
    assert res.exit_code == 0 and (tmp_path / "e" / "atlas_n0003_v1.json").exists()
    again = invoke(runner, "--cache-dir", str(tmp_path / "c"), "strata", "--from", "4", "--to", "5")
    assert again.output == "n,a1,a2\n4,3,2\n5,2,5\n"


def test_corrupt_cache_does_not_crash(runner, tmp_path):
    (tmp_path / "atlas_n0006_v1.json").write_text("{not json")
    res = invoke(runner, "--cache-dir", str(tmp_path), "jumps", "--from", "6")
    assert res.exit_code == 0
    assert "6,7,8,2,17" in res.output
