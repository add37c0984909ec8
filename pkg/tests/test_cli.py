import json
import pathlib

import pytest

from selbounds.cli import main

DOCS = pathlib.Path(__file__).parent.parent / "docs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound_cor9_json(capsys):
    code, out, _ = run(capsys, "bound", "--lfun", "zeta", "--sigma", "0.9",
                       "--t", "1e6", "--case", "cor9", "--format", "json")
    assert code == 0
    docs = out.strip().split("}\n{")
    assert len(docs) == 2
    first = json.loads(docs[0] + "}")
    assert first["target"] == "logDeriv"
    assert first["certified"] is True
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((DOCS / "bound_result.schema.json").read_text())
    jsonschema.validate(first, schema)


def test_bound_uncertified_exits_2(capsys):
    code, out, err = run(capsys, "bound", "--lfun", "zeta", "--sigma", "0.75",
                         "--t", "1e6", "--case", "cor9")
    assert code == 2
    assert "value=36.4921" in out
    assert "uncertified" in err


def test_bound_out_of_range_exits_2(capsys):
    code, _, err = run(capsys, "bound", "--lfun", "zeta", "--sigma", "0.4",
                       "--t", "1e6")
    assert code == 2
    assert "no admissible range" in err


def test_bound_usage_error_exits_1(capsys):
    code, _, _ = run(capsys, "bound", "--sigma", "abc", "--t", "1e6")
    assert code == 1


def test_bound_loglogtau_entry(capsys):
    code, out, _ = run(capsys, "bound", "--lfun", "zeta", "--sigma", "0.75",
                       "--loglogtau", "13", "--loglogtau0", "13", "--t0", "2001",
                       "--case", "case1")
    assert code == 0
    assert "certified=True" in out


def test_verify_majorant(capsys):
    code, out, _ = run(capsys, "verify", "majorant")
    assert code == 0
    assert "PASS" in out


def test_verify_missing_zeros_exits_3(capsys, monkeypatch):
    monkeypatch.delenv("SLB_ZEROS_PATH", raising=False)
    code, _, err = run(capsys, "verify", "zero-sum", "--zeros", "/nonexistent")
    assert code == 3
    assert "missing zeros file" in err


def test_verify_zero_sum(capsys, zeros_path):
    code, out, _ = run(capsys, "verify", "zero-sum", "--zeros", zeros_path)
    assert code == 0
    assert "classical identity" in out


def test_verify_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "majorant", "--format", "json")
    _, out2, _ = run(capsys, "verify", "majorant", "--format", "json")
    doc1, doc2 = json.loads(out1), json.loads(out2)
    doc1.pop("wall_time"), doc2.pop("wall_time")
    assert doc1 == doc2


def test_reproduce_targets(capsys):
    for target in ("alpha0", "nu-cor9", "nu-cor10", "cor10-constants",
                   "trigamma", "dedekind-example"):
        code, out, _ = run(capsys, "reproduce", target)
        assert code == 0, target
        assert "FAIL" not in out


def test_optimize_nu(capsys):
    code, out, _ = run(capsys, "optimize", "--free", "nu", "--variant", "cor9")
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"][0] == pytest.approx(3.378, abs=1e-2)
    assert doc["optimum"][1] == pytest.approx(1.182, abs=1e-2)


def test_optimize_alpha(capsys):
    code, out, _ = run(capsys, "optimize", "--lfun", "zeta", "--sigma", "0.75",
                       "--loglogtau", "13.8155", "--free", "alpha",
                       "--box", "0.694,1.2785", "--t0", "1e6")
    assert code == 0
    doc = json.loads(out)
    assert doc["optimum"][0] == pytest.approx(1.278, abs=0.05)


def test_optimize_infeasible_exits_2(capsys):
    code, _, err = run(capsys, "optimize", "--lfun", "zeta", "--sigma", "0.75",
                       "--loglogtau", "13.8155", "--free", "alpha",
                       "--box", "3.0,4.0", "--t0", "1e6")
    assert code == 2
    assert "infeasible" in err


def test_stats_csv(capsys, tmp_path):
    out_path = tmp_path / "stats.csv"
    code, _, _ = run(capsys, "stats", "--lfun", "zeta", "--limit", "10000",
                     "--grid", "100,1000", "--csv", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("x,sum_abs_ap")
    assert lines[1].split(",")[1] == "25.0"


def test_bound_config_file(capsys, tmp_path):
    cfg = tmp_path / "zeta.json"
    cfg.write_text(json.dumps({"builtin": "zeta"}))
    code, out, _ = run(capsys, "bound", "--config", str(cfg), "--sigma", "0.9",
                       "--t", "1e6", "--case", "cor9")
    assert code == 0
