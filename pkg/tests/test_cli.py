import json

import pytest

from wheelmac.cli import run


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_wheel_dim_example(capsys):
    code, payload = _run_json(capsys, ["wheel", "dim", "--k", "1", "--r", "2",
                                       "--n", "2", "--d", "1"])
    assert code == 0
    assert payload["dim_J"] == 0


def test_macd_compute_example(capsys):
    code, payload = _run_json(capsys, ["macd", "compute", "--n", "2",
                                       "--lambda", "2"])
    assert code == 0
    coeffs = {c["partition"]: c["coefficient"] for c in payload["coefficients"]}
    assert coeffs["2"] == "1"
    assert coeffs["1,1"] == "(q*t - q + t - 1)/(q*t - 1)"


def test_verify_theorem1_small_exit_zero(capsys):
    code, payload = _run_json(capsys, ["verify", "theorem1", "--k", "1",
                                       "--r", "2", "--n-max", "2",
                                       "--d-max", "4"])
    assert code == 0 and payload["ok"]
    assert all(c["dims_equal"] and c["inclusion_ok"]
               for c in payload["components"])


def test_verify_theorem1_probe_reports_exact_check(capsys):
    code, payload = _run_json(capsys, ["verify", "theorem1", "--k", "1",
                                       "--r", "2", "--n-max", "2",
                                       "--d-max", "3", "--mode", "probe"])
    assert code == 0 and payload["ok"]
    assert not any(c.get("probe_disagreement") for c in payload["components"])


def test_current_and_char_commands(capsys):
    code, payload = _run_json(capsys, ["current", "relation", "--k", "1",
                                       "--r", "2", "--d", "2",
                                       "--profile", "2"])
    assert code == 0
    assert {t["partition"]: t["coefficient"] for t in payload["terms"]} == \
        {"2,0": "2", "1,1": "1"}

    code, payload = _run_json(capsys, ["current", "reduce", "--k", "1",
                                       "--r", "2", "--lambda", "1,1"])
    assert code == 0
    assert payload["terms"] == [{"partition": "2,0", "coefficient": "-2"}]

    code, payload = _run_json(capsys, ["char", "chi", "--k", "1", "--r", "2",
                                       "--b", "1", "--d-max", "3",
                                       "--n-max", "2"])
    assert code == 0
    assert [0, 0, 1] in payload["coefficients"]

    code, payload = _run_json(capsys, ["char", "recursion", "--k", "2",
                                       "--r", "3", "--b", "1,2",
                                       "--d-max", "5", "--n-max", "5"])
    assert code == 0 and payload["ok"]

    code, payload = _run_json(capsys, ["char", "w-dim", "--k", "1", "--r", "2",
                                       "--b", "1", "--n", "2", "--d", "2"])
    assert code == 0 and payload["w_dim"] == 1

    code, payload = _run_json(capsys, ["current", "rank", "--k", "1",
                                       "--r", "2", "--n", "2", "--d", "2"])
    assert code == 0
    assert payload["quotient_dim"] == payload["admissible_count"] == 1


def test_verify_lemma_commands(capsys):
    code, payload = _run_json(capsys, ["verify", "lemma21", "--k", "1",
                                       "--r", "2", "--n-max", "3",
                                       "--size-max", "8"])
    assert code == 0 and payload["ok"]
    code, payload = _run_json(capsys, ["verify", "lemma22", "--k", "1",
                                       "--r", "2", "--n-max", "2",
                                       "--size-max", "4"])
    assert code == 0 and payload["ok"]


def test_verify_stability_and_rho(capsys):
    code, payload = _run_json(capsys, ["verify", "stability", "--k", "1",
                                       "--r", "2", "--n", "2", "--d", "3",
                                       "--count", "3"])
    assert code == 0 and payload["ok"]
    code, payload = _run_json(capsys, ["verify", "rho", "--k", "1", "--r", "2",
                                       "--lambda", "4,2", "--j-max", "2"])
    assert code == 0 and payload["ok"] and payload["n"] == 3


def test_cache_roundtrip(tmp_path, capsys):
    cache = str(tmp_path / "table.json")
    code, first = _run_json(capsys, ["macd", "compute", "--n", "2",
                                     "--lambda", "3,1", "--cache", cache])
    assert code == 0
    code, second = _run_json(capsys, ["macd", "compute", "--n", "2",
                                      "--lambda", "3,1", "--cache", cache])
    assert code == 0
    assert first == second
    data = json.load(open(cache))
    assert data["n"] == 2
    assert any(e["lambda"] == "3,1" for e in data["entries"])


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["wheel", "dim", "--k", "0", "--r", "2", "--n", "1", "--d", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        run(["wheel", "dim", "--k", "1", "--r", "1", "--n", "1", "--d", "1"])
    assert exc.value.code == 2
    capsys.readouterr()
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_failing_check_exits_one(capsys):
    # (1,1) is not admissible and its specialized P is not in the ideal
    code = run(["wheel", "check", "--k", "1", "--r", "2", "--n", "2",
                "--lambda", "1,1"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1 and not out["satisfies_wheel"]


def test_table_format(capsys):
    code = run(["--format", "table", "wheel", "dim", "--k", "1", "--r", "2",
                "--n", "2", "--d", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "dim_J" in out and "{" not in out
