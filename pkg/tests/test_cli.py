import json

import pytest

from umbral.cli import main, render_text


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_compute_bernoulli(capsys):
    code, out = _run(capsys, "compute", "bernoulli", "--n", "4")
    assert code == 0 and out.strip() == "B_4 = -1/30"


def test_compute_json_is_exact(capsys):
    code, out = _run(capsys, "compute", "bernoulli", "--n", "12", "--format", "json", "--path", "umbral")
    doc = json.loads(out)
    assert doc["items"][0]["detail"]["value"] == "-691/2730"
    assert set(doc) == {"version", "config", "items", "pass", "elapsed_ms"}


def test_verify_quick_json(capsys):
    code, out = _run(capsys, "verify", "--profile", "quick", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["pass"]
    assert len(doc["items"]) == 22 and {i["status"] for i in doc["items"]} == {"pass"}


def test_verify_single_id(capsys):
    code, out = _run(capsys, "verify", "--id", "KANEKO", "--format", "json")
    assert [i["id"] for i in json.loads(out)["items"]] == ["KANEKO"]


def test_mc_example(capsys):
    code, out = _run(capsys, "mc", "--target", "L", "--moment", "2", "--count", "1000000", "--seed", "42",
                     "--format", "json")
    item = json.loads(out)["items"][0]
    assert code == 0 and item["status"] == "pass"
    assert abs(item["detail"]["estimate"] - 1 / 6) < 5 * item["detail"]["std_error"]


def test_seed_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("UMBRAL_SEED", "7")
    _, out = _run(capsys, "mc", "--count", "1000", "--format", "json")
    assert json.loads(out)["config"]["seed"] == 7
    _, out = _run(capsys, "mc", "--count", "1000", "--seed", "5", "--format", "json")
    assert json.loads(out)["config"]["seed"] == 5


def test_config_errors_exit_2(capsys, monkeypatch):
    assert main(["compute", "carlitz", "--n", "2"]) == 2
    assert main(["mc", "--moment", "9", "--count", "100"]) == 2
    monkeypatch.setenv("UMBRAL_SEED", "abc")
    assert main(["mc", "--count", "100"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--id", "NOPE"])
    assert exc.value.code == 2


def test_failures_exit_1(capsys, monkeypatch):
    from umbral import cli
    from umbral.identities import IdentityId, IdentityReport

    bad = IdentityReport(IdentityId.KANEKO, {"n": [0, 1]}, "fail", {"params": {"n": 0}, "lhs": "1", "rhs": "0"})
    monkeypatch.setattr(cli, "verify_all", lambda *a, **k: [bad])
    code, out = _run(capsys, "verify")
    assert code == 1 and "counterexample" in out and out.rstrip().splitlines()[-1].startswith("FAIL")


def test_json_round_trip_regenerates_text(capsys, tmp_path):
    path = tmp_path / "r.json"
    main(["verify", "--id", "GESSEL_72", "--id", "ZEIL_GF", "--format", "json", "--output", str(path)])
    doc = json.loads(path.read_text())
    text_path = tmp_path / "r.txt"
    main(["verify", "--id", "GESSEL_72", "--id", "ZEIL_GF", "--output", str(text_path)])
    strip = lambda s: [l for l in s.splitlines() if not l.startswith(("PASS", "FAIL"))]
    assert strip(render_text(doc)) == strip(text_path.read_text())
    assert render_text(json.loads(json.dumps(doc))) == render_text(doc)


def test_quad_command(capsys):
    code, out = _run(capsys, "quad")
    assert code == 0 and out.count("pass") == 5
