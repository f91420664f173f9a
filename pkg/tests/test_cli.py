import json
import subprocess
import sys

import pytest

from spinalg import cli
from spinalg.claims import REGISTRY, Claim, RunContext, claims_for, run_claim, sample_automorphism
from spinalg.scalar import Scalar


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_hopf_passes(capsys):
    code, out, _ = run(capsys, "verify", "hopf", "--backend", "exact", "--samples", "4")
    assert code == 0
    assert "0 failed" in out
    assert out.count("PASS") == len(claims_for("hopf"))


def test_json_report_shape_and_thread_independence(capsys):
    args = ("verify", "metric", "--seed", "7", "--samples", "8", "--format", "json")
    _, one, _ = run(capsys, *args)
    _, four, _ = run(capsys, *args, "--jobs", "4")
    assert one == four
    reports = json.loads(one)
    assert [r["claim_id"] for r in reports] == sorted(r["claim_id"] for r in reports)
    for r in reports:
        assert set(r) == {"claim_id", "anchor", "status", "witness", "seed"}
        assert r["seed"] == 7


def test_timings_only_on_request(capsys):
    _, out, _ = run(capsys, "verify", "algebra", "--format", "json", "--timings")
    assert all("elapsed_ms" in r for r in json.loads(out))


def test_float_backend_renders_numbers(capsys):
    code, out, _ = run(capsys, "verify", "metric", "--backend", "float", "--samples", "2", "--format", "json")
    assert code == 0
    (lorentz,) = [r for r in json.loads(out) if r["claim_id"] == "metric.G_lorentz"]
    assert lorentz["witness"]["G"][0][0] == pytest.approx(1.0)


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "verify", "nonsense")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "decompose", "--in", "/does/not/exist.json")[0] == 2
    assert run(capsys, "verify", "all", "--samples", "0")[0] == 2


def test_failing_claim_exits_1_and_recorded_never_does(capsys, monkeypatch):
    failing = Claim("zz.fail", "zz", "always fails", lambda ctx: (False, {"why": "test"}))
    recorded = Claim("zz.note", "zz", "recorded outcome", lambda ctx: (False, None), recorded=True)
    monkeypatch.setattr(cli, "claims_for", lambda target: [recorded])
    assert run(capsys, "verify", "all")[0] == 0
    monkeypatch.setattr(cli, "claims_for", lambda target: [failing, recorded])
    code, out, _ = run(capsys, "verify", "all")
    assert code == 1
    assert "FAIL" in out and "RECORDED" in out and '"why": "test"' in out


def test_library_errors_become_failures():
    def boom(ctx):
        from spinalg.errors import NotConformal

        raise NotConformal("no ratio")

    rep = run_claim(Claim("zz.boom", "zz", "raises", boom), RunContext())
    assert rep["status"] == "fail" and rep["witness"]["error"] == "NotConformal"


def test_report_lists_every_claim(capsys):
    code, out, _ = run(capsys, "report", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == len(REGISTRY)
    assert all(r["anchor"] for r in rows)
    assert [r["claim_id"] for r in rows if not r["gating"]] == ["inner-product.invariance"]


def test_decompose_compose_roundtrip(tmp_path, capsys):
    aut = tmp_path / "aut.json"
    factors = tmp_path / "factors.json"
    again = tmp_path / "again.json"
    assert run(capsys, "sample", "--kind", "full", "--seed", "5", "--operator", "--out", str(aut))[0] == 0
    assert run(capsys, "decompose", "--in", str(aut), "--out", str(factors))[0] == 0
    assert run(capsys, "compose", "--in", str(factors), "--out", str(again))[0] == 0
    assert aut.read_text() == again.read_text()
    expected = sample_automorphism("full", 5).to_json()
    assert json.loads(factors.read_text()) == {"algebra": "spin", "factors": expected}


def test_decompose_grassmann_and_images(tmp_path, capsys):
    aut = tmp_path / "g.json"
    run(capsys, "sample", "--algebra", "grassmann:3", "--seed", "2", "--operator", "--out", str(aut))
    code, out, _ = run(capsys, "decompose", "--in", str(aut))
    assert code == 0 and json.loads(out)["algebra"] == "grassmann:3"

    one = Scalar(1).to_json()
    images = tmp_path / "images.json"
    images.write_text(json.dumps({"algebra": "spin", "images": [{"2": one}, {"1": one}]}))
    code, out, _ = run(capsys, "decompose", "--in", str(images))
    assert code == 0 and json.loads(out)["factors"]["j"] is False

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"algebra": "spin", "images": [{"1": one}, {"1": one}]}))
    code, _, err = run(capsys, "decompose", "--in", str(bad))
    assert code == 1 and "NotInvertible" in err


def test_sample_kinds(capsys):
    _, out, _ = run(capsys, "sample", "--kind", "dressing", "--seed", "9")
    f = json.loads(out)["factors"]
    assert f["j"] is False
    assert [[Scalar.from_json(x) for x in row] for row in f["gl"]] == [[1, 0], [0, 1]]
    _, again, _ = run(capsys, "sample", "--kind", "dressing", "--seed", "9")
    assert again == out


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "spinalg", "verify", "algebra", "--format", "text"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert out.returncode == 0
    assert "3 passed, 0 failed, 0 recorded" in out.stdout
