import json

import pytest

from genbinom.cli import SweepConfig, UsageError, main, print_table, run_sweep
from genbinom.registry import REGISTRY


def test_sweep_rising_sum_grid():
    reports = run_sweep(SweepConfig("thm1", n_max=4, r_max=4, s_max=2))
    assert len(reports) == 4 * 4 * 2
    assert all(r.equal for r in reports)
    keys = [(r.params["n"], r.params["r"], r.params["s"]) for r in reports]
    assert keys == sorted(keys)


def test_sweep_skips_inadmissible_tuples():
    reports = run_sweep(SweepConfig("eq3", n_max=3, r_max=3))
    assert len(reports) == 3 * (1 + 2 + 3)
    assert all(r.params["p"] <= r.params["r"] for r in reports)
    assert all(r.equal for r in reports)


def test_sweep_parallel_matches_serial():
    cfg = SweepConfig("thm8", n_max=5)
    assert run_sweep(cfg, jobs=3) == run_sweep(cfg, jobs=1)


def test_unknown_identity(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--identity", "unknown-id", "--n-max", "3", "--out", str(out)]) == 2
    assert not out.exists()
    assert "unknown identity" in capsys.readouterr().err
    with pytest.raises(UsageError):
        SweepConfig("unknown-id", n_max=3)


def test_bad_caps_are_usage_errors():
    assert main(["verify", "--identity", "thm1", "--n-max", "0"]) == 2
    assert main(["verify", "--identity", "thm1", "--n-max", "2", "--jobs", "0"]) == 2


def test_u_series_caps_need_opt_in():
    assert main(["verify", "--identity", "conj2", "--n-max", "7"]) == 2
    assert main(["verify", "--identity", "conj1", "--n-max", "3", "--umax", "8"]) == 2
    SweepConfig("conj2", n_max=7, large=True)


def test_io_failure(tmp_path):
    target = tmp_path / "missing" / "r.json"
    assert main(["verify", "--identity", "thm3", "--n-max", "2", "--out", str(target)]) == 3


def test_json_report_schema(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--identity", "eq3", "--n-max", "3", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"identity", "config", "results", "summary"}
    assert doc["identity"] == "eq3"
    assert doc["summary"] == {"total": 18, "passed": 18, "failed": 0}
    first = doc["results"][0]
    assert set(first) == {"params", "lhs", "rhs", "equal", "elapsed_ms"}
    assert first["params"] == {"n": 1, "r": 1, "p": 1}
    assert first["elapsed_ms"] is None


def test_timing_flag(tmp_path):
    out = tmp_path / "r.json"
    main(["verify", "--identity", "thm5", "--n-max", "3", "--timing", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert all(isinstance(r["elapsed_ms"], float) for r in doc["results"])


def test_tsv_report(tmp_path):
    out = tmp_path / "r.tsv"
    assert main(["verify", "--identity", "thm4", "--n-max", "2", "--s-max", "2", "--format", "tsv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].split("\t") == ["n", "s", "lhs", "rhs", "equal", "elapsed_ms"]
    assert lines[4].split("\t")[:5] == ["2", "2", "2*X - 3", "2*X - 3", "true"]


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for key in REGISTRY:
        assert key in out


def test_table_stirling():
    rows = print_table("stirling", 4).splitlines()[1:]
    values = [list(map(int, row.split()[1:])) for row in rows]
    assert values == [[1], [-1, 1], [2, -3, 1], [-6, 11, -6, 1]]


def test_table_genbinom():
    rows = {line.split()[0]: line.split()[1:] for line in print_table("genbinom", 3).splitlines()[1:]}
    assert rows["(2,1)"] == ["0", "2", "1"]
    assert rows["(3)"] == ["3", "3", "1"]


def test_table_pjk():
    lines = print_table("pjk", 2).splitlines()
    assert lines == ["P_00 = 1", "P_11 = X_1", "P_21 = X_2", "P_22 = 1/2*X_1^2 + 1/2*X_2"]


def test_table_errors(capsys):
    with pytest.raises(UsageError):
        print_table("nope", 3)
    with pytest.raises(SystemExit) as exc:
        main(["table", "--kind", "nope", "--max", "3"])
    assert exc.value.code == 2
    assert main(["table", "--kind", "pjk", "--max", "0"]) == 2
    assert main(["table", "--kind", "stirling", "--max", "3"]) == 0
