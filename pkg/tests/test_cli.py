"""Report driver: determinism, exit codes, and output formats."""

import json

import pytest

import skverify.cli as cli
import skverify.graded as graded_module
from skverify.cli import RunConfig, main, render_report, run_suite
from skverify.graded import set_disk_cache


def strip_timing(text):
    return "\n".join(l for l in text.splitlines() if not l.startswith("timing"))


def test_reps_suite_exit_zero(capsys):
    assert main(["verify", "reps"]) == 0
    out = capsys.readouterr().out
    assert "summary:" in out
    assert "failed=0" in out


def test_json_report_schema(capsys):
    assert main(["verify", "reps", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report) == {"engine", "config", "sampling", "checks",
                           "summary", "timing"}
    for check in report["checks"]:
        assert set(check) == {"id", "params", "status", "data", "notes"}
        assert check["status"] in ("pass", "fail", "skipped-degenerate")
    assert report["summary"]["failed"] == 0
    assert report["summary"]["total"] == len(report["checks"])


def test_checks_sorted_by_id_then_params(capsys):
    assert main(["verify", "s3", "--samples", "2", "--seed", "3",
                 "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    keys = [(c["id"], c["params"]) for c in report["checks"]]
    assert keys == sorted(keys)


def test_repeat_runs_agree_outside_timing():
    cfg = RunConfig(suite="s3", samples=1, seed=7)
    a = render_report(run_suite(cfg), "text")
    b = render_report(run_suite(cfg), "text")
    assert strip_timing(a) == strip_timing(b)
    assert a.count("timing") >= 1


def test_explicit_parameters_skip_sampling(capsys):
    assert main(["verify", "s3", "--abc", "1,2,3", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["sampling"] == {}
    assert all(c["params"] == "abc=[1:2:3]" for c in report["checks"])
    assert all(c["status"] == "pass" for c in report["checks"])


def test_sampled_run_echoes_draws(capsys):
    assert main(["verify", "s3", "--samples", "1", "--seed", "7",
                 "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["sampling"]["s3"]["accepted"] == ["[1:-1/3:-2]"]


def test_degenerate_parameters_reported_as_skips(capsys):
    assert main(["verify", "s3", "--abc", "1,-1,0"]) == 0
    out = capsys.readouterr().out
    assert "SKIP" in out
    assert "degenerate" in out
    assert "failed=0" in out


def test_forced_failure_sets_exit_one(capsys, monkeypatch):
    real = cli.hilbert_dims

    def lying(pres, max_degree):
        rec = real(pres, max_degree)
        return type(rec)(tuple(d + 1 for d in rec.dims))

    monkeypatch.setattr(cli, "hilbert_dims", lying)
    assert main(["verify", "s3", "--abc", "1,2,3"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_malformed_abc_exits_two():
    with pytest.raises(SystemExit) as ei:
        main(["verify", "s3", "--abc", "1,2"])
    assert ei.value.code == 2


def test_unknown_suite_exits_two():
    with pytest.raises(SystemExit) as ei:
        main(["verify", "everything"])
    assert ei.value.code == 2


def test_bad_degree_bound_exits_two(capsys):
    assert main(["verify", "s3", "--abc", "1,2,3", "--max-degree", "9"]) == 2
    assert capsys.readouterr().err


def test_output_file_and_cache_dir(tmp_path, capsys):
    out = tmp_path / "report.txt"
    cache = tmp_path / "cache"
    graded_module._SLICE_CACHE.clear()
    try:
        code = main(["verify", "s3", "--abc", "1,2,3", "--seed", "5",
                     "--out", str(out), "--cache-dir", str(cache)])
        assert code == 0
        text = out.read_text()
        assert text.startswith("skverify")
        assert any(cache.iterdir())
    finally:
        set_disk_cache(None)
        graded_module._SLICE_CACHE.clear()


def test_max_degree_truncates_hilbert_checks(capsys):
    assert main(["verify", "s3", "--abc", "1,2,3", "--max-degree", "3",
                 "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    hil = [c for c in report["checks"] if c["id"] == "s3-hilbert"][0]
    assert len(hil["data"]["dims"]) == 4
