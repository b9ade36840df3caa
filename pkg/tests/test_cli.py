import json

import pytest

from franel import cli


@pytest.fixture()
def env(tmp_path, monkeypatch):
    monkeypatch.setenv("FRANEL_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("SOURCE_DATE_EPOCH", "1700000000")
    return tmp_path


def run(argv):
    return cli.main(argv)


def test_compute_text(env, capsys):
    assert run(["compute", "--s", "3", "--n-max", "4", "--J", "1"]) == 0
    out = capsys.readouterr().out
    assert "346" in out
    assert "12" in out


def test_compute_json_file(env, tmp_path):
    out = tmp_path / "table.json"
    assert run(["compute", "--s", "3", "--n-max", "1", "--J", "1",
                "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["rows"][1] == ["2", "12"]


def test_compute_rejects_bad_s(env):
    assert run(["compute", "--s", "0", "--n-max", "4"]) == 2


def test_argparse_errors_exit_2(env):
    assert run(["compute", "--s", "notanint", "--n-max", "4"]) == 2
    assert run(["nosuchcommand"]) == 2


def test_telescope_verify_cycle(env, tmp_path, capsys):
    out = tmp_path / "op.json"
    assert run(["telescope", "--s", "3", "--r-max", "3",
                "--out", str(out)]) == 0
    capsys.readouterr()
    assert run(["verify", "--in", str(out)]) == 0
    msg = capsys.readouterr().out
    assert "verifies exactly" in msg

    doc = json.loads(out.read_text())
    doc["certificate"]["num"][0][0] = str(
        int(doc["certificate"]["num"][0][0]) + 1)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert run(["verify", "--in", str(bad)]) == 1

    trunc = tmp_path / "trunc.json"
    trunc.write_text(out.read_text()[:80])
    assert run(["verify", "--in", str(trunc)]) == 2
    assert run(["verify", "--in", str(tmp_path / "missing.json")]) == 2


def test_telescope_not_found_exit_3(env):
    assert run(["telescope", "--s", "3", "--r-max", "1"]) == 3


def test_telescope_internal_error_exit_4(env, monkeypatch):
    monkeypatch.setattr(cli, "verify_certificate",
                        lambda *a, **k: False)
    assert run(["telescope", "--s", "1", "--r-max", "1"]) == 4


def test_cache_byte_for_byte(env, tmp_path, capsys):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert run(["telescope", "--s", "2", "--r-max", "2",
                "--out", str(out1)]) == 0
    cache = tmp_path / "cache" / "telescope-s2-v0.1.0.json"
    assert cache.exists()
    first = cache.read_bytes()
    # second run hits the cache and must reproduce identical bytes
    assert run(["telescope", "--s", "2", "--r-max", "2",
                "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes() == first


def test_cache_corruption_recomputes(env, tmp_path, capsys):
    assert run(["telescope", "--s", "1", "--r-max", "1"]) == 0
    cache = tmp_path / "cache" / "telescope-s1-v0.1.0.json"
    cache.write_text("{broken")
    assert run(["telescope", "--s", "1", "--r-max", "1"]) == 0
    err = capsys.readouterr().err
    assert "corrupt cache" in err
    # cache healed
    json.loads(cache.read_text())


def test_cache_respects_smaller_r_max(env, tmp_path):
    assert run(["telescope", "--s", "3", "--r-max", "3"]) == 0
    # a cached order-2 document must not satisfy a request capped at 1
    assert run(["telescope", "--s", "3", "--r-max", "1"]) == 3


def test_limits_text(env, capsys):
    assert run(["limits", "--s", "3", "--n-max", "40", "--J", "1"]) == 0
    out = capsys.readouterr().out
    assert "4.9348" in out
    assert "normalized" in out


def test_limits_guard_and_force(env, capsys):
    assert run(["limits", "--s", "3", "--n-max", "30", "--J", "2"]) == 2
    assert run(["limits", "--s", "3", "--n-max", "30", "--J", "2",
                "--J-force"]) == 0
    capsys.readouterr()


def test_limits_bad_precision(env):
    assert run(["limits", "--s", "3", "--n-max", "30", "--J", "1",
                "--precision-bits", "16"]) == 2


def test_asym(env, capsys):
    assert run(["asym", "--s", "1", "--n", "100"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].endswith("1." + "0" * 30)
    assert run(["asym", "--s", "2", "--n", "50"]) == 0
    assert run(["asym", "--s", "2", "--n", "0"]) == 2


def test_demo_apery(env, capsys):
    assert run(["demo-apery", "--n-max", "5"]) == 0
    out = capsys.readouterr().out
    assert "73" in out and "117/8" in out
    assert "1.2020569031595942" in out


def test_exit_code_domain(env, tmp_path, monkeypatch):
    # exactly the documented exit codes are reachable
    codes = set()
    codes.add(run(["compute", "--s", "1", "--n-max", "2"]))
    codes.add(run(["compute", "--s", "-1", "--n-max", "2"]))
    out = tmp_path / "c.json"
    run(["telescope", "--s", "1", "--r-max", "1", "--out", str(out)])
    doc = json.loads(out.read_text())
    doc["certificate"]["num"][0][0] = str(
        int(doc["certificate"]["num"][0][0]) + 2)
    bad = tmp_path / "cbad.json"
    bad.write_text(json.dumps(doc))
    codes.add(run(["verify", "--in", str(bad)]))
    codes.add(run(["telescope", "--s", "3", "--r-max", "1"]))
    monkeypatch.setattr(cli, "verify_certificate", lambda *a, **k: False)
    codes.add(run(["telescope", "--s", "2", "--r-max", "2"]))
    assert codes == {0, 1, 2, 3, 4}


def test_telescope_s6_order_three(env, tmp_path, capsys):
    out = tmp_path / "op6.json"
    assert run(["telescope", "--s", "6", "--r-max", "4", "--json",
                "--out", str(out)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["order"] == 3
    assert summary["coefficient_degree"] == 9
    assert summary["denominator_matches"] is True
    assert summary["first_valid_row"] == 0
    assert run(["verify", "--in", str(out)]) == 0


def test_limits_s4_against_target(env, capsys):
    assert run(["limits", "--s", "4", "--n-max", "300", "--J", "1"]) == 0
    out = capsys.readouterr().out
    # 2 pi^2 / 3 = 6.57973626739290...
    assert "6.57973626739290" in out
